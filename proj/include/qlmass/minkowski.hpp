#pragma once

// Lorentzian linear algebra on R^{n,1} and the hyperboloid model of H^n_{-k^2}.
//
// Coordinates are ordered (x_1, ..., x_n; t) with metric signature (+,...,+,-).
// The hyperbolic space is the upper sheet <X,X> = -1/k^2, t > 0, so
// "future-directed" means a positive time component.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qlm {

struct AmbientSpace {
  int n = 3;
  double k = 1.0;

  // Throws Errc::invalid_argument unless n >= 3 and k > 0.
  static AmbientSpace make(int n, double k);
};

class LorentzVector {
 public:
  LorentzVector() = default;
  // Zero vector in R^{n,1}.
  explicit LorentzVector(int n) : c_(static_cast<std::size_t>(n) + 1, 0.0) {}
  LorentzVector(std::span<const double> spatial, double time);
  // Spatial components followed by the time component.
  LorentzVector(std::initializer_list<double> all) : c_(all) {}

  int dim() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const noexcept { return c_.size(); }

  double& operator[](std::size_t i) { return c_[i]; }
  double operator[](std::size_t i) const { return c_[i]; }
  double spatial(int i) const { return c_[static_cast<std::size_t>(i)]; }
  double& time() { return c_.back(); }
  double time() const { return c_.back(); }

  // Euclidean |x|^2 over all n+1 components.
  double euclidean_norm2() const noexcept;
  double spatial_norm2() const noexcept;

  std::span<const double> components() const noexcept { return c_; }

  LorentzVector& operator+=(const LorentzVector& o);
  LorentzVector& operator-=(const LorentzVector& o);
  LorentzVector& operator*=(double s);

  friend bool operator==(const LorentzVector&, const LorentzVector&) = default;

 private:
  std::vector<double> c_;
};

LorentzVector operator+(LorentzVector a, const LorentzVector& b);
LorentzVector operator-(LorentzVector a, const LorentzVector& b);
LorentzVector operator-(LorentzVector a);
LorentzVector operator*(double s, LorentzVector a);

enum class CausalKind { FutureTimelike, FutureNull, PastTimelike, PastNull, Spacelike, Zero };

struct CausalClass {
  CausalKind kind = CausalKind::Zero;
  double eps = 0.0;

  bool future_causal() const noexcept {
    return kind == CausalKind::FutureTimelike || kind == CausalKind::FutureNull;
  }
  bool past_causal() const noexcept {
    return kind == CausalKind::PastTimelike || kind == CausalKind::PastNull;
  }
};

const char* causal_name(CausalKind kind) noexcept;

// sum_i x_i y_i - x_t y_t. Throws Errc::dimension_mismatch.
double lorentz_inner(const LorentzVector& x, const LorentzVector& y);

// Relative classification: q = <x,x> is compared against eps * |x|^2.
CausalClass classify_causal(const LorentzVector& x, double eps);

// X = (sinh(kr)/k * dir ; cosh(kr)/k). `unit_dir` must have n components of unit length.
LorentzVector hyperboloid_point(const AmbientSpace& amb, std::span<const double> unit_dir,
                                double r);

// Scalar weight -2k <X, zeta>, equal to the squared norm of the Killing spinor
// associated with the future null vector zeta at the point X.
double spinor_weight(const AmbientSpace& amb, const LorentzVector& X, const LorentzVector& zeta);

// The axis null vectors (+-e_i; 1) followed by `random_count` vectors (u; 1)
// with u uniform on S^{n-1}, drawn from a seeded generator.
std::vector<LorentzVector> null_test_set(int n, unsigned long long seed, int random_count);

std::string to_string(const LorentzVector& x);

}  // namespace qlm
