#include "rookdraw/svg.hpp"

#include <sstream>

namespace rookdraw {

namespace {

// Grid coordinates can be rational mid-pipeline; emit exact decimal-free
// pixel positions by scaling numerator/denominator.
std::string px(const Rat& v, int scale, long long extent, bool flip) {
  Rat grid = flip ? Rat(extent + 1) - v : v;
  Rat p = grid * scale;
  if (is_integer(p)) return std::to_string(to_ll(p));
  // Fixed 3-decimal rendering, exact rounding toward zero.
  BigInt scaled = numerator(p) * 1000 / denominator(p);
  long long s = static_cast<long long>(scaled);
  std::string out = std::to_string(s / 1000);
  long long frac = s % 1000;
  if (frac < 0) frac = -frac;
  char buf[8];
  std::snprintf(buf, sizeof(buf), ".%03lld", frac);
  return out + buf;
}

}  // namespace

std::string render_svg(const Drawing& d, const SvgOptions& opt) {
  long long w = d.width, h = d.height;
  long long W = (w + 1) * opt.scale, H = (h + 1) * opt.scale;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
    << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";

  if (opt.grid_lines) {
    for (long long x = 1; x <= w; ++x)
      s << "<line x1=\"" << x * opt.scale << "\" y1=\"" << opt.scale / 2
        << "\" x2=\"" << x * opt.scale << "\" y2=\"" << H - opt.scale / 2
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    for (long long y = 1; y <= h; ++y)
      s << "<line x1=\"" << opt.scale / 2 << "\" y1=\"" << y * opt.scale
        << "\" x2=\"" << W - opt.scale / 2 << "\" y2=\"" << y * opt.scale
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
  }

  for (const auto& e : d.edges) {
    auto poly = d.polyline(e);
    for (size_t i = 0; i + 1 < poly.size(); ++i)
      s << "<line x1=\"" << px(poly[i].x, opt.scale, 0, false) << "\" y1=\""
        << px(poly[i].y, opt.scale, h, true) << "\" x2=\""
        << px(poly[i + 1].x, opt.scale, 0, false) << "\" y2=\""
        << px(poly[i + 1].y, opt.scale, h, true)
        << "\" stroke=\"#333333\" stroke-width=\"2\"/>\n";
  }

  for (int v = 0; v < d.n(); ++v) {
    s << "<circle cx=\"" << px(d.coords[v].x, opt.scale, 0, false)
      << "\" cy=\"" << px(d.coords[v].y, opt.scale, h, true) << "\" r=\""
      << opt.scale / 4 << "\" fill=\"#2266cc\"/>\n";
    if (opt.labels)
      s << "<text x=\"" << px(d.coords[v].x, opt.scale, 0, false)
        << "\" y=\"" << px(d.coords[v].y, opt.scale, h, true)
        << "\" font-size=\"" << opt.scale / 2
        << "\" text-anchor=\"middle\" dy=\"-" << opt.scale / 3
        << "\" fill=\"#000000\">" << v << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace rookdraw
