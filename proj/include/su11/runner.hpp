#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "su11/closed_form.hpp"
#include "su11/scenario.hpp"

namespace su11 {

struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Cross-route residuals and invariant checks for one scenario.
struct ScenarioReport {
  std::string scenario;
  CaseClass cls = CaseClass::Elliptic;
  std::optional<EllipticBounds> bounds;
  double exact_vs_iterated = 0.0;
  double stroboscopic = 0.0;
  std::optional<double> symmetry;
  double norm_drift = 0.0;
  std::vector<Check> checks;

  bool passed() const;
  const Check* first_failure() const;
  /// {scenario, class, bounds?, residuals: {...}, status, checks}
  nlohmann::json to_json() const;
};

ScenarioReport analyse(const Scenario& scenario);

/// Closed-form, iterated-map and ODE trajectories for the scenario.
std::vector<Trajectory> simulate_routes(const Scenario& scenario);

struct SimulateResult {
  ScenarioReport report;
  std::vector<std::filesystem::path> written;
};

/// Writes <name>.csv / <name>.json / <name>.svg into out_dir as the scenario
/// requests. Throws Error (Blowup for numerical growth).
SimulateResult run_simulate(const Scenario& scenario, const std::filesystem::path& out_dir);

/// Runs every check; the caller maps passed() to the exit status.
ScenarioReport run_verify(const Scenario& scenario);

}  // namespace su11
