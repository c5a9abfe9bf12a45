#include "arith/svgplot.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <set>
#include <vector>

#include "arith/modgroup.hpp"

namespace arith {

namespace {

constexpr int kSamples = 96;
constexpr double kScale = 240.0;  // pixels per unit

using Cpx = std::complex<double>;

struct Frame {
  double half_width, height;
  double width_px() const { return 2 * half_width * kScale; }
  double height_px() const { return height * kScale; }
  // upper half-plane -> SVG pixels (y axis flipped)
  std::pair<double, double> map(const Cpx& z) const {
    return {(z.real() + half_width) * kScale, (height - z.imag()) * kScale};
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

Cpx apply_moebius(const SL2& g, const Cpx& z) {
  Cpx a(g.a.get_d()), b(g.b.get_d()), c(g.c.get_d()), d(g.d.get_d());
  return (a * z + b) / (c * z + d);
}

std::string polyline(const Frame& f, const std::vector<Cpx>& pts, const char* cls) {
  std::string s = "  <polyline class=\"";
  s += cls;
  s += "\" points=\"";
  bool first = true;
  for (const Cpx& z : pts) {
    auto [x, y] = f.map(z);
    if (x < -10 || x > f.width_px() + 10 || y < -10 || y > f.height_px() + 10) continue;
    if (!first) s += ' ';
    s += fmt(x) + "," + fmt(y);
    first = false;
  }
  s += "\"/>\n";
  return first ? std::string() : s;  // drop fully off-screen arcs
}

// canonical key: matrix up to sign (the action ignores the center)
std::array<long, 4> sign_key(const SL2& g) {
  std::array<long, 4> k{g.a.get_si(), g.b.get_si(), g.c.get_si(), g.d.get_si()};
  for (long v : k) {
    if (v > 0) break;
    if (v < 0) {
      for (auto& x : k) x = -x;
      break;
    }
  }
  return k;
}

void collect_words(unsigned depth, std::vector<SL2>& out) {
  std::set<std::array<long, 4>> seen;
  std::vector<SL2> frontier{SL2()};
  seen.insert(sign_key(SL2()));
  out.push_back(SL2());
  for (unsigned d = 0; d < depth; ++d) {
    std::vector<SL2> next;
    for (const SL2& g : frontier)
      for (int letter = 0; letter < 3; ++letter) {
        SL2 h = g * (letter == 0 ? SL2::inversion()
                                 : letter == 1 ? SL2::shear(1) : SL2::shear(-1));
        if (seen.insert(sign_key(h)).second) {
          out.push_back(h);
          next.push_back(h);
        }
      }
    frontier = std::move(next);
  }
}

}  // namespace

std::string plot_fundamental_domain(unsigned depth, double half_width, double height) {
  Frame f{half_width, height};
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(f.width_px()) +
         "\" height=\"" + fmt(f.height_px()) + "\" viewBox=\"0 0 " + fmt(f.width_px()) + " " +
         fmt(f.height_px()) + "\">\n";
  svg += "  <style>.strip{stroke:#888;stroke-dasharray:4 3;fill:none}"
         ".arc{stroke:#06c;stroke-width:1.5;fill:none}"
         ".orbit{stroke:#c33;stroke-width:0.8;fill:none}</style>\n";

  // strip boundary |Re z| = 1/2
  std::vector<Cpx> left, right;
  for (int k = 0; k <= kSamples; ++k) {
    double y = height * k / kSamples;
    left.emplace_back(-0.5, y);
    right.emplace_back(0.5, y);
  }
  svg += polyline(f, left, "strip");
  svg += polyline(f, right, "strip");

  // the arc D0: |z| = 1, |Re z| <= 1/2
  std::vector<Cpx> arc;
  for (int k = 0; k <= kSamples; ++k) {
    double x = -0.5 + static_cast<double>(k) / kSamples;
    arc.emplace_back(x, std::sqrt(1.0 - x * x));
  }
  svg += polyline(f, arc, "arc");

  // orbit arcs: images of D0 under words of length <= depth (identity drawn above)
  std::vector<SL2> words;
  collect_words(depth, words);
  for (size_t w = 1; w < words.size(); ++w) {
    std::vector<Cpx> img;
    img.reserve(arc.size());
    for (const Cpx& z : arc) img.push_back(apply_moebius(words[w], z));
    svg += polyline(f, img, "orbit");
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace arith
