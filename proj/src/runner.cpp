#include "su11/runner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "su11/bloch_ode.hpp"
#include "su11/error.hpp"
#include "su11/io.hpp"
#include "su11/map_dynamics.hpp"
#include "su11/su11.hpp"

namespace su11 {

namespace {

constexpr int kSymmetrySamples = 1024;

double scaled(double err, const MVec3& r) {
  const double n = euclidean_norm(r);
  return err / std::max(1.0, n * n);
}

std::vector<double> theta_grid(double theta_end, int samples) {
  std::vector<double> grid(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) grid[static_cast<std::size_t>(i)] = theta_end * i / (samples - 1);
  return grid;
}

void add(ScenarioReport& report, std::string name, double value, double tol) {
  report.checks.push_back({std::move(name), value, tol, value <= tol});
}

struct Elements {
  GroupElement q, p, r0;
};

Elements group_elements(const Scenario& s) {
  const double beta = 2.0 * s.params.lambda * s.alpha;
  return {exp_element(s.alpha, s.params.q, s.params.cls), exp_element(beta, s.params.p, s.params.cls),
          exp_element(s.chi0, s.r0, s.params.cls)};
}

}  // namespace

bool ScenarioReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* ScenarioReport::first_failure() const {
  const auto it = std::find_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; });
  return it == checks.end() ? nullptr : &*it;
}

nlohmann::json ScenarioReport::to_json() const {
  nlohmann::json j;
  j["scenario"] = scenario;
  j["class"] = std::string(to_string(cls));
  if (bounds) {
    j["bounds"] = {{"a", bounds->a}, {"b", bounds->b}, {"c", bounds->c}, {"A1", bounds->A1}, {"A2", bounds->A2}};
  }
  j["residuals"] = {{"exact_vs_iterated", exact_vs_iterated},
                    {"stroboscopic", stroboscopic},
                    {"symmetry", symmetry ? nlohmann::json(*symmetry) : nlohmann::json(nullptr)},
                    {"norm_drift", norm_drift}};
  j["status"] = passed() ? "pass" : "fail";
  auto& arr = j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"passed", c.passed}});
  }
  return j;
}

ScenarioReport analyse(const Scenario& s) {
  validate(s);
  check_growth_cap(s.params, std::max(s.theta_end, s.k_max * s.alpha));
  const BlochParams& params = s.params;
  const CaseClass cls = params.cls;
  const double eta_v = eta(cls);
  ScenarioReport report;
  report.scenario = s.name;
  report.cls = cls;

  const Elements el = group_elements(s);
  const auto evi = verify_exact_vs_iterated(el.q, el.p, el.r0, s.k_max);
  report.exact_vs_iterated = evi.max_deviation;
  add(report, "exact_vs_iterated", evi.max_deviation, 1e-9);

  const auto orbit = iterate_orbit(el.q, el.r0, compute_R1(el.q, el.p, el.r0), 2 * static_cast<std::int64_t>(s.k_max));
  double invariant = 0.0;
  for (const auto& r : orbit) invariant = std::max(invariant, r.invariant_residual());
  add(report, "map_group_invariants", invariant, 1e-9);

  const AxisAngle qa{s.alpha, params.q, cls};
  const AxisAngle pa{2.0 * params.lambda * s.alpha, params.p, cls};
  double closed_vs_map = 0.0;
  for (int k = 0; k <= s.k_max; ++k) {
    const MVec3 group = orbit_vector(exact_R2K(qa, pa, el.r0, k), s.chi0, cls);
    closed_vs_map = std::max(closed_vs_map, euclidean_norm(trajectory_point(params, s.r0, k * s.alpha) - group));
  }
  add(report, "closed_form_vs_map", closed_vs_map, 1e-10);

  const auto strob = stroboscopic_residual(params, s.r0, s.alpha, s.k_max, s.ode, s.chi0);
  report.stroboscopic = strob.max_deviation;
  add(report, "stroboscopic", strob.max_deviation, cls == CaseClass::Hyperbolic ? 1e-5 : 1e-6);

  const auto grid = theta_grid(s.theta_end, s.samples);
  double confinement = 0.0, decoupling = 0.0, adjoint = 0.0;
  for (double theta : grid) {
    const MVec3 r = trajectory_point(params, s.r0, theta);
    const MVec3 t = intermediate_t(params, s.r0, theta);
    confinement = std::max(confinement, scaled(std::fabs(mdot(r, r) - eta_v), r));
    decoupling = std::max(decoupling, std::fabs(mdot(r, params.q) - mdot(t, params.q)) /
                                          std::max(1.0, euclidean_norm(r)));
    const MVec3 via_matrix = adjoint_vec(exp_element(2.0 * theta, params.q, cls), t);
    adjoint = std::max(adjoint, euclidean_norm(via_matrix - r) / std::max(1.0, euclidean_norm(r)));
  }
  add(report, "manifold_confinement", confinement, 1e-11);
  add(report, "decoupling", decoupling, 1e-12);
  add(report, "adjoint_identity", adjoint, 1e-10);

  const Trajectory ode = integrate(params, s.r0, s.theta_end, s.ode);
  for (const auto& sample : ode.samples) {
    report.norm_drift = std::max(report.norm_drift, scaled(std::fabs(mdot(sample.r, sample.r) - eta_v), sample.r));
  }
  add(report, "ode_norm_drift", report.norm_drift, 1e-8);

  if (cls == CaseClass::Elliptic && params.lambda != 0.0) {
    const auto sym = symmetry_order_check(params, s.r0, kSymmetrySamples);
    report.symmetry = sym.max_deviation;
    add(report, "symmetry", sym.max_deviation, 1e-10);
  }
  if (cls == CaseClass::Elliptic && s.r0.x3 > 0.0 && params.q.x3 > 0.0) {
    const EllipticBounds b = elliptic_bounds(params, s.r0);
    report.bounds = b;
    // One period of t(theta).q is pi / |lambda|; a constant when lambda = 0.
    const double period = params.lambda == 0.0 ? 1.0 : std::numbers::pi / std::fabs(params.lambda);
    double violation = 0.0;
    for (int i = 0; i < kSymmetrySamples; ++i) {
      const double v = decoupled_component(params, s.r0, period * i / kSymmetrySamples);
      violation = std::max({violation, b.A1 - v, v - b.A2});
    }
    add(report, "bounds_containment", violation, 1e-9);
    add(report, "bounds_lower_at_least_one", std::max(0.0, 1.0 - b.A1), 1e-12);
  }
  if (cls == CaseClass::Parabolic) {
    double line = 0.0;
    for (double theta : grid) {
      const double direct = mdot(intermediate_t(params, s.r0, theta), params.q);
      line = std::max(line, std::fabs(parabolic_line(params, s.r0, theta) - direct) / std::max(1.0, std::fabs(direct)));
    }
    add(report, "parabolic_line", line, 1e-12);
  }
  return report;
}

std::vector<Trajectory> simulate_routes(const Scenario& s) {
  validate(s);
  check_growth_cap(s.params, std::max(s.theta_end, s.k_max * s.alpha));
  std::vector<Trajectory> out;
  out.push_back(sample_closed_form(s.params, s.r0, theta_grid(s.theta_end, s.samples)));

  const Elements el = group_elements(s);
  const auto orbit = iterate_orbit(el.q, el.r0, compute_R1(el.q, el.p, el.r0), 2 * static_cast<std::int64_t>(s.k_max));
  Trajectory map{s.params, s.r0, {}, Route::MapIterated};
  for (int k = 0; k <= s.k_max; ++k) {
    map.samples.push_back({k * s.alpha, orbit_vector(orbit[static_cast<std::size_t>(2 * k)], s.chi0, s.params.cls)});
  }
  out.push_back(std::move(map));
  out.push_back(integrate(s.params, s.r0, s.theta_end, s.ode));
  return out;
}

SimulateResult run_simulate(const Scenario& s, const std::filesystem::path& out_dir) {
  SimulateResult result;
  const auto routes = simulate_routes(s);
  result.report = analyse(s);
  std::filesystem::create_directories(out_dir);
  const auto want = [&s](OutputKind k) { return std::find(s.outputs.begin(), s.outputs.end(), k) != s.outputs.end(); };
  if (want(OutputKind::Csv)) {
    auto path = out_dir / (s.name + ".csv");
    write_file_atomic(path, trajectories_to_csv(routes));
    result.written.push_back(std::move(path));
  }
  if (want(OutputKind::Json)) {
    auto path = out_dir / (s.name + ".json");
    write_file_atomic(path, result.report.to_json().dump(2) + "\n");
    result.written.push_back(std::move(path));
  }
  if (want(OutputKind::Svg)) {
    SvgPlot plot;
    plot.title = s.name + " (" + std::string(to_string(s.params.cls)) + ", lambda = " + std::to_string(s.params.lambda) + ")";
    plot.curves = {routes[0]};
    plot.point_sets = {routes[1]};
    plot.q = s.params.q;
    if (result.report.bounds) plot.parallels = std::pair{result.report.bounds->A1, result.report.bounds->A2};
    auto path = out_dir / (s.name + ".svg");
    write_file_atomic(path, render_svg(plot));
    result.written.push_back(std::move(path));
  }
  return result;
}

ScenarioReport run_verify(const Scenario& s) { return analyse(s); }

}  // namespace su11
