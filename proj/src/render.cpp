#include "mineuclid/render.hpp"

#include <cstdio>
#include <stdexcept>

#include "mineuclid/wseq.hpp"

namespace mineuclid {

std::string render_csv(const std::vector<GaussInt>& points) {
  std::string out;
  char line[64];
  for (GaussInt p : points) {
    std::snprintf(line, sizeof line, "%lld,%lld\n", static_cast<long long>(p.re),
                  static_cast<long long>(p.im));
    out += line;
  }
  return out;
}

std::string render_json(const std::vector<GaussInt>& points) {
  std::string out = "[";
  char pair[64];
  for (std::size_t k = 0; k < points.size(); ++k) {
    std::snprintf(pair, sizeof pair, "%s[%lld,%lld]", k ? "," : "",
                  static_cast<long long>(points[k].re),
                  static_cast<long long>(points[k].im));
    out += pair;
  }
  out += "]\n";
  return out;
}

namespace {

// prints v/10 exactly: "3", "-0.4", "12.5"
std::string tenths(std::int64_t v) {
  char buf[48];
  const char* sign = v < 0 ? "-" : "";
  std::int64_t a = v < 0 ? -v : v;
  if (a % 10 == 0)
    std::snprintf(buf, sizeof buf, "%s%lld", sign, static_cast<long long>(a / 10));
  else
    std::snprintf(buf, sizeof buf, "%s%lld.%lld", sign, static_cast<long long>(a / 10),
                  static_cast<long long>(a % 10));
  return buf;
}

}  // namespace

std::string render_svg(int n, const std::vector<GaussInt>& points, const RenderSpec& spec) {
  if (spec.scale < 1) throw std::domain_error("render_svg: scale must be >= 1");
  OctSpec oct = oct_spec(n);
  std::int64_t s = spec.scale;
  std::int64_t extent = (oct.box_bound + 1) * s;  // one-unit margin
  char buf[256];

  std::string out;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%lld %lld %lld %lld\" "
                "width=\"%lld\" height=\"%lld\">\n",
                static_cast<long long>(-extent), static_cast<long long>(-extent),
                static_cast<long long>(2 * extent), static_cast<long long>(2 * extent),
                static_cast<long long>(2 * extent), static_cast<long long>(2 * extent));
  out += buf;

  if (spec.outline) {
    std::int64_t b = oct.box_bound * s;
    std::int64_t c = (oct.diag_bound - oct.box_bound) * s;
    // vertices of {max(|x|,|y|) <= box, |x|+|y| <= diag}, y flipped for SVG
    std::int64_t vx[8] = {b, c, -c, -b, -b, -c, c, b};
    std::int64_t vy[8] = {-c, -b, -b, -c, c, b, b, c};
    out += "<polygon points=\"";
    for (int k = 0; k < 8; ++k) {
      std::snprintf(buf, sizeof buf, "%s%lld,%lld", k ? " " : "",
                    static_cast<long long>(vx[k]), static_cast<long long>(vy[k]));
      out += buf;
    }
    std::snprintf(buf, sizeof buf, "\" fill=\"none\" stroke=\"#888\" stroke-width=\"%s\"/>\n",
                  tenths(2 * s).c_str());
    out += buf;
  }

  std::int64_t half10 = 4 * s;  // glyph half-extent in tenths of a pixel
  for (GaussInt p : points) {
    std::int64_t cx = p.re * s;
    std::int64_t cy = -p.im * s;
    if (spec.style == RenderSpec::Style::disc) {
      std::snprintf(buf, sizeof buf, "<circle cx=\"%lld\" cy=\"%lld\" r=\"%s\" fill=\"#000\"/>\n",
                    static_cast<long long>(cx), static_cast<long long>(cy),
                    tenths(half10).c_str());
    } else {
      std::snprintf(buf, sizeof buf,
                    "<rect x=\"%s\" y=\"%s\" width=\"%s\" height=\"%s\" fill=\"#000\"/>\n",
                    tenths(10 * cx - half10).c_str(), tenths(10 * cy - half10).c_str(),
                    tenths(2 * half10).c_str(), tenths(2 * half10).c_str());
    }
    out += buf;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace mineuclid
