// Command-line front end: simulate, verify and list bundled scenarios.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "su11/error.hpp"
#include "su11/runner.hpp"
#include "su11/scenario.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitBlowup = 2;

fs::path scenario_dir() {
  if (const char* env = std::getenv("SU11_SCENARIO_DIR")) return env;
  return SU11_DEFAULT_SCENARIO_DIR;
}

// A path to an existing file, or the name of a bundled scenario.
fs::path resolve(const std::string& arg) {
  if (fs::exists(arg)) return arg;
  const auto bundled = scenario_dir() / (arg + ".toml");
  if (fs::exists(bundled)) return bundled;
  return arg;
}

int exit_code_for(const su11::Error& e) {
  return e.kind() == su11::ErrorKind::Blowup ? kExitBlowup : kExitValidation;
}

struct Outcome {
  int code = kExitOk;
  std::string message;
};

Outcome simulate_one(const std::string& arg, const fs::path& out_dir) {
  try {
    const auto scenario = su11::load_scenario(resolve(arg));
    const auto result = su11::run_simulate(scenario, out_dir);
    std::string msg = scenario.name + ": " + (result.report.passed() ? "pass" : "fail");
    for (const auto& p : result.written) msg += "\n  wrote " + p.string();
    return {kExitOk, msg};
  } catch (const su11::Error& e) {
    return {exit_code_for(e), arg + ": " + e.what()};
  } catch (const std::exception& e) {
    return {kExitValidation, arg + ": " + e.what()};
  }
}

Outcome verify_one(const std::string& arg) {
  try {
    const auto scenario = su11::load_scenario(resolve(arg));
    const auto report = su11::run_verify(scenario);
    std::string msg = report.to_json().dump(2);
    if (const auto* bad = report.first_failure()) {
      msg += "\n" + scenario.name + ": check '" + bad->name + "' failed";
      return {kExitValidation, msg};
    }
    return {kExitOk, msg};
  } catch (const su11::Error& e) {
    return {exit_code_for(e), arg + ": " + e.what()};
  } catch (const std::exception& e) {
    return {kExitValidation, arg + ": " + e.what()};
  }
}

int finish(std::vector<std::future<Outcome>>& jobs) {
  int code = kExitOk;
  for (auto& job : jobs) {
    const Outcome o = job.get();
    (o.code == kExitOk ? std::cout : std::cerr) << o.message << "\n";
    if (o.code > code) code = o.code;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(1,1) group map, closed-form orbits and Bloch equation"};
  app.require_subcommand(1);

  std::vector<std::string> sim_files;
  std::string out_dir = ".";
  auto* sim = app.add_subcommand("simulate", "Write trajectory CSV, JSON summary and SVG plot");
  sim->add_option("scenario", sim_files, "Scenario file(s) or bundled scenario name(s)")->required();
  sim->add_option("--out", out_dir, "Output directory");

  std::vector<std::string> verify_files;
  auto* verify = app.add_subcommand("verify", "Cross-check all routes; exit 0 iff every check passes");
  verify->add_option("scenario", verify_files, "Scenario file(s) or bundled scenario name(s)")->required();

  auto* list = app.add_subcommand("list-scenarios", "List bundled scenarios");

  CLI11_PARSE(app, argc, argv);

  if (*sim) {
    std::vector<std::future<Outcome>> jobs;
    for (const auto& f : sim_files) jobs.push_back(std::async(std::launch::async, simulate_one, f, fs::path(out_dir)));
    return finish(jobs);
  }
  if (*verify) {
    std::vector<std::future<Outcome>> jobs;
    for (const auto& f : verify_files) jobs.push_back(std::async(std::launch::async, verify_one, f));
    return finish(jobs);
  }
  if (*list) {
    std::vector<fs::path> files;
    if (fs::is_directory(scenario_dir())) {
      for (const auto& entry : fs::directory_iterator(scenario_dir())) {
        if (entry.path().extension() == ".toml") files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      try {
        const auto s = su11::load_scenario(f);
        std::cout << s.name << "\t" << s.description << "\n";
      } catch (const su11::Error& e) {
        std::cerr << f.string() << ": " << e.what() << "\n";
      }
    }
    return kExitOk;
  }
  return kExitOk;
}
