#pragma once

// Stage orchestration: geometry -> icf -> lapse -> exterior -> transport -> mass.

#include <optional>
#include <string>
#include <vector>

#include "qlmass/mass.hpp"
#include "qlmass/scenario.hpp"

namespace qlm {

enum class Stage { Flow, Lapse, Exterior, Transport, Mass };

const char* stage_name(Stage s) noexcept;
// Accepts the subcommand names; "pipeline" maps to Mass.
Stage parse_stage(const std::string& name);

// Prior stages' CSV dumps to reuse instead of recomputing. Each must carry
// the scenario's config hash.
struct StageInputs {
  std::string collar_csv;
  std::string lapse_csv;
  std::string exterior_csv;
  std::string transport_csv;
};

struct Check {
  std::string stage;
  std::string name;
  bool passed = true;
  std::string detail;
};

struct PipelineResult {
  Stage stage = Stage::Mass;
  std::string config_hash;
  std::vector<Check> checks;
  std::vector<std::string> files;
  std::string report_json;  // pretty-printed report
  double final_radius = 0.0;  // largest radius on the last collar slice
  double T = 0.0;
  std::optional<MassReport> mass;

  bool passed() const;
};

// Runs every stage up to and including `upto`. Stage failures (flow, barrier,
// causal, blow-up, geometry) become failed checks; Errc::config and Errc::io
// propagate as exceptions.
PipelineResult run_pipeline(const Scenario& scn, Stage upto, const StageInputs& inputs = {},
                            bool write_files = true);

}  // namespace qlm
