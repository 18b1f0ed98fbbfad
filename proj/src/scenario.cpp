#include "su11/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <variant>

#include "su11/error.hpp"

namespace su11 {

namespace {

using Value = std::variant<double, std::string, std::vector<double>, std::vector<std::string>>;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_error(int line, const std::string& msg) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

double parse_number(std::string_view tok, int line) {
  tok = trim(tok);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
    parse_error(line, "expected a number, got '" + std::string(tok) + "'");
  }
  if (!std::isfinite(v)) parse_error(line, "non-finite number");
  return v;
}

std::string parse_string(std::string_view tok, int line) {
  tok = trim(tok);
  if (tok.size() < 2 || tok.front() != '"' || tok.back() != '"') {
    parse_error(line, "expected a double-quoted string, got '" + std::string(tok) + "'");
  }
  const auto body = tok.substr(1, tok.size() - 2);
  if (body.find('"') != std::string_view::npos) parse_error(line, "embedded quote in string");
  return std::string(body);
}

Value parse_value(std::string_view raw, int line) {
  const auto v = trim(raw);
  if (v.empty()) parse_error(line, "missing value");
  if (v.front() == '"') return parse_string(v, line);
  if (v.front() == '[') {
    if (v.back() != ']') parse_error(line, "unterminated list");
    const auto body = trim(v.substr(1, v.size() - 2));
    std::vector<std::string_view> items;
    std::size_t start = 0;
    while (!body.empty() && start <= body.size()) {
      const auto comma = body.find(',', start);
      items.push_back(body.substr(start, comma == std::string_view::npos ? body.size() - start : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!items.empty() && trim(items.front()).starts_with('"')) {
      std::vector<std::string> out;
      for (auto item : items) out.push_back(parse_string(item, line));
      return out;
    }
    std::vector<double> out;
    for (auto item : items) out.push_back(parse_number(item, line));
    return out;
  }
  return parse_number(v, line);
}

// Drops a trailing comment, ignoring '#' inside quotes.
std::string_view strip_comment(std::string_view s) {
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    if (s[i] == '#' && !quoted) return s.substr(0, i);
  }
  return s;
}

struct Entry {
  Value value;
  int line;
};

template <typename T>
const T& get(const std::map<std::string, Entry>& kv, const std::string& key) {
  const auto& e = kv.at(key);
  if (const auto* v = std::get_if<T>(&e.value)) return *v;
  parse_error(e.line, "wrong value type for '" + key + "'");
}

MVec3 get_vec(const std::map<std::string, Entry>& kv, const std::string& key) {
  const auto& v = get<std::vector<double>>(kv, key);
  if (v.size() != 3) parse_error(kv.at(key).line, "'" + key + "' needs exactly three components");
  return {v[0], v[1], v[2]};
}

int get_int(const std::map<std::string, Entry>& kv, const std::string& key) {
  const double v = get<double>(kv, key);
  if (v != std::floor(v) || std::fabs(v) > 1e9) parse_error(kv.at(key).line, "'" + key + "' must be an integer");
  return static_cast<int>(v);
}

AngleUnit parse_unit(const std::string& s, int line) {
  if (s == "rad") return AngleUnit::Radians;
  if (s == "deg") return AngleUnit::Degrees;
  parse_error(line, "angle unit must be \"rad\" or \"deg\"");
}

OutputKind parse_output(const std::string& s, int line) {
  if (s == "csv") return OutputKind::Csv;
  if (s == "json") return OutputKind::Json;
  if (s == "svg") return OutputKind::Svg;
  parse_error(line, "unknown output kind '" + s + "'");
}

void check_vector(const char* name, const MVec3& v, CaseClass cls) {
  CaseClass actual;
  try {
    actual = classify(v);
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(name) + ": " + e.what());
  }
  if (actual != cls) {
    throw Error(ErrorKind::ClassMismatch, std::string(name) + " is " + std::string(to_string(actual)) +
                                              ", scenario is " + std::string(to_string(cls)));
  }
}

}  // namespace

std::string_view to_string(OutputKind kind) noexcept {
  switch (kind) {
    case OutputKind::Csv: return "csv";
    case OutputKind::Json: return "json";
    case OutputKind::Svg: return "svg";
  }
  return "unknown";
}

Scenario parse_scenario(std::string_view text) {
  static const std::vector<std::string> known{
      "name", "description", "class", "q", "p", "r0", "lambda", "alpha", "alpha_unit", "beta",
      "chi0", "k_max", "theta_end", "samples", "ode_step", "ode_reproject_every", "outputs"};
  std::map<std::string, Entry> kv;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto line = trim(strip_comment(raw));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) parse_error(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    if (std::find(known.begin(), known.end(), key) == known.end()) parse_error(line_no, "unknown key '" + key + "'");
    if (kv.contains(key)) parse_error(line_no, "duplicate key '" + key + "'");
    kv.emplace(key, Entry{parse_value(line.substr(eq + 1), line_no), line_no});
  }

  for (const char* required : {"name", "class", "q", "p", "r0", "alpha", "k_max"}) {
    if (!kv.contains(required)) throw Error(ErrorKind::Parse, std::string("missing key '") + required + "'");
  }

  Scenario s;
  s.name = get<std::string>(kv, "name");
  if (kv.contains("description")) s.description = get<std::string>(kv, "description");
  s.params.cls = case_class_from_string(get<std::string>(kv, "class"));
  s.params.q = get_vec(kv, "q");
  s.params.p = get_vec(kv, "p");
  s.r0 = get_vec(kv, "r0");
  if (kv.contains("alpha_unit")) s.alpha_unit = parse_unit(get<std::string>(kv, "alpha_unit"), kv.at("alpha_unit").line);
  const double to_rad = s.alpha_unit == AngleUnit::Degrees ? std::numbers::pi / 180.0 : 1.0;
  s.alpha = get<double>(kv, "alpha") * to_rad;
  if (kv.contains("beta")) s.beta = get<double>(kv, "beta") * to_rad;
  if (kv.contains("lambda")) {
    s.params.lambda = get<double>(kv, "lambda");
  } else if (s.beta) {
    s.params.lambda = *s.beta / (2.0 * s.alpha);
  } else {
    throw Error(ErrorKind::Parse, "one of 'lambda' or 'beta' is required");
  }
  if (kv.contains("chi0")) s.chi0 = get<double>(kv, "chi0");
  s.k_max = get_int(kv, "k_max");
  s.theta_end = kv.contains("theta_end") ? get<double>(kv, "theta_end") : s.k_max * s.alpha;
  if (kv.contains("samples")) s.samples = get_int(kv, "samples");
  if (kv.contains("ode_step")) s.ode.step = get<double>(kv, "ode_step");
  if (kv.contains("ode_reproject_every")) s.ode.reproject_every = get_int(kv, "ode_reproject_every");
  if (kv.contains("outputs")) {
    s.outputs.clear();
    for (const auto& o : get<std::vector<std::string>>(kv, "outputs")) {
      s.outputs.push_back(parse_output(o, kv.at("outputs").line));
    }
  }
  validate(s);
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open scenario file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

void validate(const Scenario& s) {
  if (s.name.empty()) throw Error(ErrorKind::Parse, "scenario name is empty");
  check_vector("q", s.params.q, s.params.cls);
  check_vector("p", s.params.p, s.params.cls);
  check_vector("r0", s.r0, s.params.cls);
  if (!(s.alpha > 0.0)) throw Error(ErrorKind::InvalidArgument, "alpha must be positive");
  if (!std::isfinite(s.params.lambda)) throw Error(ErrorKind::InvalidArgument, "lambda must be finite");
  if (s.beta) {
    const double implied = *s.beta / (2.0 * s.alpha);
    if (std::fabs(implied - s.params.lambda) > 1e-12 * std::fmax(1.0, std::fabs(s.params.lambda))) {
      std::ostringstream os;
      os.precision(17);
      os << "lambda = " << s.params.lambda << " but beta / (2 alpha) = " << implied;
      throw Error(ErrorKind::InvalidArgument, os.str());
    }
  }
  if (s.k_max < 1) throw Error(ErrorKind::InvalidArgument, "k_max must be at least 1");
  if (!(s.theta_end > 0.0)) throw Error(ErrorKind::InvalidArgument, "theta_end must be positive");
  if (s.samples < 2) throw Error(ErrorKind::InvalidArgument, "samples must be at least 2");
  if (!(s.ode.step > 0.0)) throw Error(ErrorKind::InvalidArgument, "ode_step must be positive");
  if (s.ode.step > kMaxOdeStep) throw Error(ErrorKind::StepTooLarge, "ode_step exceeds 0.1");
  if (s.ode.reproject_every < 0) throw Error(ErrorKind::InvalidArgument, "ode_reproject_every must be >= 0");
  if (s.chi0 == 0.0 || !std::isfinite(s.chi0)) throw Error(ErrorKind::InvalidArgument, "chi0 must be finite and non-zero");
}

}  // namespace su11
