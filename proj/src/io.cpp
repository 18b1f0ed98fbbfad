#include "su11/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <unistd.h>

#include "su11/error.hpp"

namespace su11 {

namespace {

void append_g17(std::string& out, double v) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
  out.append(buf, static_cast<std::size_t>(n));
}

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Spacelike unit vectors e1, e2 (mdot = -1) Minkowski-orthogonal to the timelike unit q.
std::pair<MVec3, MVec3> transverse_frame(const MVec3& q) {
  // Any spacelike seed works: its component orthogonal to a timelike q stays spacelike.
  const MVec3 seed{1.0, 0.0, 0.0};
  // Gram-Schmidt in the Minkowski metric.
  MVec3 e1 = seed - mdot(seed, q) * q;
  e1 = e1 * (1.0 / std::sqrt(-mdot(e1, e1)));
  MVec3 e2 = mcross(q, e1);
  e2 = e2 * (1.0 / std::sqrt(-mdot(e2, e2)));
  return {e1, e2};
}

struct Panel {
  double x0, y0, w, h;
  double xmin, xmax, ymin, ymax;

  double px(double x) const { return x0 + (x - xmin) / (xmax - xmin) * w; }
  double py(double y) const { return y0 + h - (y - ymin) / (ymax - ymin) * h; }
};

void pad_range(double& lo, double& hi) {
  if (!(hi > lo)) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double m = 0.05 * (hi - lo);
  lo -= m;
  hi += m;
}

const char* colour(std::size_t i) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  return palette[i % 5];
}

}  // namespace

std::string trajectories_to_csv(const std::vector<Trajectory>& trajectories) {
  std::string out = "theta,x1,x2,x3,route\n";
  for (const auto& traj : trajectories) {
    const auto route = to_string(traj.route);
    for (const auto& s : traj.samples) {
      append_g17(out, s.theta);
      out += ',';
      append_g17(out, s.r.x1);
      out += ',';
      append_g17(out, s.r.x2);
      out += ',';
      append_g17(out, s.r.x3);
      out += ',';
      out += route;
      out += '\n';
    }
  }
  return out;
}

std::vector<CsvRow> parse_trajectory_csv(std::string_view text) {
  std::vector<CsvRow> rows;
  std::size_t pos = 0;
  int line = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    const auto row = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line;
    if (line == 1) {
      if (row != "theta,x1,x2,x3,route") throw Error(ErrorKind::Parse, "unexpected CSV header");
      continue;
    }
    if (row.empty()) continue;
    double nums[4];
    std::size_t start = 0;
    for (double& num : nums) {
      const auto comma = row.find(',', start);
      if (comma == std::string_view::npos) {
        throw Error(ErrorKind::Parse, "CSV line " + std::to_string(line) + " has too few fields");
      }
      const auto [ptr, ec] = std::from_chars(row.data() + start, row.data() + comma, num);
      if (ec != std::errc() || ptr != row.data() + comma) {
        throw Error(ErrorKind::Parse, "CSV line " + std::to_string(line) + " has a bad number");
      }
      start = comma + 1;
    }
    rows.push_back({nums[0], {nums[1], nums[2], nums[3]}, route_from_string(row.substr(start))});
  }
  return rows;
}

std::string render_svg(const SvgPlot& plot) {
  constexpr double kWidth = 960.0;
  constexpr double kHeight = 480.0;

  std::vector<std::vector<MVec3>> parallels;
  if (plot.parallels) {
    const auto [e1, e2] = transverse_frame(plot.q);
    for (double level : {plot.parallels->first, plot.parallels->second}) {
      std::vector<MVec3> ring;
      const double radius = std::sqrt(std::fmax(0.0, level * level - 1.0));
      for (int i = 0; i <= 256; ++i) {
        const double phi = 2.0 * std::numbers::pi * i / 256.0;
        ring.push_back(level * plot.q + radius * (std::cos(phi) * e1 + std::sin(phi) * e2));
      }
      parallels.push_back(std::move(ring));
    }
  }

  double xmin = 0, xmax = 0, ymin = 0, ymax = 0, tmin = 0, tmax = 0, zmin = 0, zmax = 0;
  bool first = true;
  auto include = [&](double theta, const MVec3& r, bool has_theta) {
    if (first) {
      xmin = xmax = r.x1;
      ymin = ymax = r.x2;
      zmin = zmax = r.x3;
      tmin = tmax = theta;
      first = false;
    }
    xmin = std::min(xmin, r.x1);
    xmax = std::max(xmax, r.x1);
    ymin = std::min(ymin, r.x2);
    ymax = std::max(ymax, r.x2);
    if (has_theta) {
      zmin = std::min(zmin, r.x3);
      zmax = std::max(zmax, r.x3);
      tmin = std::min(tmin, theta);
      tmax = std::max(tmax, theta);
    }
  };
  for (const auto* group : {&plot.curves, &plot.point_sets}) {
    for (const auto& t : *group) {
      for (const auto& s : t.samples) include(s.theta, s.r, true);
    }
  }
  for (const auto& ring : parallels) {
    for (const auto& r : ring) include(tmin, r, false);
  }
  // Equal aspect ratio in the projection panel.
  const double span = std::max(xmax - xmin, ymax - ymin);
  const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
  xmin = cx - 0.5 * span;
  xmax = cx + 0.5 * span;
  ymin = cy - 0.5 * span;
  ymax = cy + 0.5 * span;
  pad_range(xmin, xmax);
  pad_range(ymin, ymax);
  pad_range(tmin, tmax);
  pad_range(zmin, zmax);

  const Panel left{40, 50, 400, 400, xmin, xmax, ymin, ymax};
  const Panel right{520, 50, 400, 400, tmin, tmax, zmin, zmax};

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"480\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
     << xml_escape(plot.title) << "</text>\n";
  for (const Panel* p : {&left, &right}) {
    os << "<rect x=\"" << p->x0 << "\" y=\"" << p->y0 << "\" width=\"" << p->w << "\" height=\"" << p->h
       << "\" fill=\"none\" stroke=\"#888\"/>\n";
  }
  os << "<text x=\"240\" y=\"470\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">x1 - x2 projection</text>\n";
  os << "<text x=\"720\" y=\"470\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">x3 vs theta</text>\n";

  for (const auto& ring : parallels) {
    os << "<polyline fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 3\" points=\"";
    for (const auto& r : ring) os << fixed(left.px(r.x1)) << ',' << fixed(left.py(r.x2)) << ' ';
    os << "\"/>\n";
  }
  std::size_t index = 0;
  for (const auto& t : plot.curves) {
    const char* c = colour(index++);
    os << "<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"1\" points=\"";
    for (const auto& s : t.samples) os << fixed(left.px(s.r.x1)) << ',' << fixed(left.py(s.r.x2)) << ' ';
    os << "\"/>\n";
    os << "<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"1\" points=\"";
    for (const auto& s : t.samples) os << fixed(right.px(s.theta)) << ',' << fixed(right.py(s.r.x3)) << ' ';
    os << "\"/>\n";
  }
  for (const auto& t : plot.point_sets) {
    const char* c = colour(index++);
    for (const auto& s : t.samples) {
      os << "<circle cx=\"" << fixed(left.px(s.r.x1)) << "\" cy=\"" << fixed(left.py(s.r.x2))
         << "\" r=\"2.5\" fill=\"" << c << "\"/>\n";
      os << "<circle cx=\"" << fixed(right.px(s.theta)) << "\" cy=\"" << fixed(right.py(s.r.x3))
         << "\" r=\"2.5\" fill=\"" << c << "\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error(ErrorKind::InvalidArgument, "short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace su11
