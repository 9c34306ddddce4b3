#include "tropkit/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "tropkit/errors.hpp"

namespace tropkit {

namespace {

constexpr double kWidth = 600.0;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

// Liang-Barsky clipping of p + t d for t in [0, t_max].
std::optional<std::array<double, 4>> clip(double px, double py, double dx, double dy, double t_max,
                                          const std::array<double, 4>& box) {
  double lo = 0.0;
  double hi = t_max;
  const double p[4] = {-dx, dx, -dy, dy};
  const double q[4] = {px - box[0], box[2] - px, py - box[1], box[3] - py};
  for (int i = 0; i < 4; ++i) {
    if (p[i] == 0.0) {
      if (q[i] < 0.0) return std::nullopt;
      continue;
    }
    const double r = q[i] / p[i];
    if (p[i] < 0.0) {
      lo = std::max(lo, r);
    } else {
      hi = std::min(hi, r);
    }
  }
  if (lo > hi) return std::nullopt;
  return std::array<double, 4>{px + lo * dx, py + lo * dy, px + hi * dx, py + hi * dy};
}

}  // namespace

BoundingBox parse_bbox(const std::string& text) {
  BoundingBox box;
  std::stringstream in(text);
  std::string part;
  std::size_t k = 0;
  while (std::getline(in, part, ',')) {
    if (k == 4) throw InputError("bounding box needs exactly four values");
    box[k++] = parse_rational(part);
  }
  if (k != 4) throw InputError("bounding box needs exactly four values");
  if (box[0] >= box[2] || box[1] >= box[3]) throw InputError("bounding box must have x0 < x1 and y0 < y1");
  return box;
}

BoundingBox default_bbox(const PlaneTropicalCurve& c) {
  Rational x0 = c.vertices().front()[0], x1 = x0;
  Rational y0 = c.vertices().front()[1], y1 = y0;
  for (const auto& v : c.vertices()) {
    x0 = std::min(x0, v[0]);
    x1 = std::max(x1, v[0]);
    y0 = std::min(y0, v[1]);
    y1 = std::max(y1, v[1]);
  }
  const Rational span = std::max({Rational(x1 - x0), Rational(y1 - y0), Rational(2)});
  const Rational pad = span / 2;
  return {Rational(x0 - pad), Rational(y0 - pad), Rational(x1 + pad), Rational(y1 + pad)};
}

std::string curve_svg(const PlaneTropicalCurve& c, const BoundingBox& box) {
  const std::array<double, 4> b{box[0].get_d(), box[1].get_d(), box[2].get_d(), box[3].get_d()};
  const double height = kWidth * (b[3] - b[1]) / (b[2] - b[0]);
  const auto px = [&](double x) { return (x - b[0]) / (b[2] - b[0]) * kWidth; };
  const auto py = [&](double y) { return (b[3] - y) / (b[3] - b[1]) * height; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kWidth) << "\" height=\"" << fmt(height)
      << "\" viewBox=\"0 0 " << fmt(kWidth) << ' ' << fmt(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& e : c.edges()) {
    double x = 0, y = 0, dx = 0, dy = 0, t_max = 1.0;
    if (const auto* s = std::get_if<Segment>(&e.shape)) {
      x = c.vertices()[s->a][0].get_d();
      y = c.vertices()[s->a][1].get_d();
      dx = c.vertices()[s->b][0].get_d() - x;
      dy = c.vertices()[s->b][1].get_d() - y;
    } else {
      const auto& r = std::get<Ray>(e.shape);
      x = c.vertices()[r.v][0].get_d();
      y = c.vertices()[r.v][1].get_d();
      dx = static_cast<double>(r.dir[0]);
      dy = static_cast<double>(r.dir[1]);
      t_max = std::numeric_limits<double>::infinity();
    }
    const auto seg = clip(x, y, dx, dy, t_max, b);
    if (!seg) continue;
    const auto& s = *seg;
    out << "<line x1=\"" << fmt(px(s[0])) << "\" y1=\"" << fmt(py(s[1])) << "\" x2=\"" << fmt(px(s[2]))
        << "\" y2=\"" << fmt(py(s[3])) << "\" stroke=\"black\" stroke-width=\"" << fmt(1.5 * static_cast<double>(e.weight))
        << "\"/>\n";
    if (e.weight >= 2) {
      out << "<text x=\"" << fmt(px((s[0] + s[2]) / 2) + 4) << "\" y=\"" << fmt(py((s[1] + s[3]) / 2) - 4)
          << "\" font-size=\"12\" fill=\"firebrick\">" << e.weight << "</text>\n";
    }
  }
  for (const auto& v : c.vertices()) {
    const double x = v[0].get_d(), y = v[1].get_d();
    if (x < b[0] || x > b[2] || y < b[1] || y > b[3]) continue;
    out << "<circle cx=\"" << fmt(px(x)) << "\" cy=\"" << fmt(py(y)) << "\" r=\"3\" fill=\"steelblue\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tropkit
