#pragma once

#include <stdexcept>
#include <string>

namespace qlm {

enum class Errc {
  invalid_argument,
  dimension_mismatch,
  config,
  io,
  geometry,
  flow,
  barrier,
  blow_up,
  causal,
  grid_mismatch,
  step_underflow,
};

const char* errc_name(Errc code) noexcept;

// Every failure in the core is reported through this exception; the C API
// translates it to a status code plus a message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qlm
