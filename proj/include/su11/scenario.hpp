#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "su11/bloch_ode.hpp"
#include "su11/closed_form.hpp"

namespace su11 {

enum class AngleUnit { Radians, Degrees };

enum class OutputKind { Csv, Json, Svg };

/// A dynamical scenario as read from a scenario file. Angles are stored in
/// radians whatever unit the file used.
struct Scenario {
  std::string name;
  std::string description;
  BlochParams params;
  MVec3 r0;
  double alpha = 0.05;
  AngleUnit alpha_unit = AngleUnit::Radians;
  std::optional<double> beta;
  double chi0 = 1.0;  // angle of R0 = exp(chi0, r0)
  int k_max = 10;
  double theta_end = 0.0;  // closed-form and ODE span; defaults to k_max * alpha
  int samples = 1024;      // closed-form samples over [0, theta_end]
  OdeConfig ode;
  std::vector<OutputKind> outputs{OutputKind::Csv, OutputKind::Json};
};

/// Parses the flat `key = value` scenario format:
///
///   # comment
///   name = "fig1"
///   class = "elliptic"
///   q = [0, 0, 1]
///   lambda = 3
///   alpha = 5
///   alpha_unit = "deg"
///
/// Strings are double-quoted, vectors are bracketed lists. Throws Parse on
/// syntax errors and unknown keys, and validates the result (see validate).
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

/// Checks every vector against the scenario class (keeping the Unnormalized /
/// ClassMismatch kinds and naming the vector) and the lambda = beta / (2 alpha)
/// consistency when both are given.
void validate(const Scenario& scenario);

std::string_view to_string(OutputKind kind) noexcept;

}  // namespace su11
