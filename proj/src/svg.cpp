#include "obranch/svg.hpp"

#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "obranch/fences.hpp"

namespace obranch {

namespace {

void check_slice(int n, const Weight& xi, int a1, int a2, const SliceRange& range) {
  const RankContext ctx = rank_context(n);
  if (xi.size() != ctx.r) throw std::invalid_argument("xi must have length r");
  if (a1 == a2) throw std::invalid_argument("slice axes must differ");
  if (a1 < 1 || a2 < 1 || a1 > ctx.r || a2 > ctx.r) throw std::invalid_argument("slice axis out of range");
  if (!(range.lo < range.hi)) throw std::invalid_argument("slice range is empty");
}

}  // namespace

std::vector<std::pair<int, Rational>> slice_fences(int n, const Weight& xi, const Weight& nu, int a1, int a2,
                                                   const SliceRange& range) {
  check_slice(n, xi, a1, a2, range);
  std::vector<std::pair<int, Rational>> out;
  const Rational half(1, 2);
  for (const SignatureKey& k : signature_support(xi, nu)) {
    const int axis = k.i + 1;
    if (axis != a1 && axis != a2) continue;
    for (const Rational& c : {-half, half}) {
      // lambda_i + delta nu_j = c
      const Rational v = c - Rational(k.delta) * nu(k.j);
      if (v < range.lo || v > range.hi) continue;
      bool dup = false;
      for (const auto& [a, w] : out)
        if (a == axis && w == v) dup = true;
      if (!dup) out.emplace_back(axis, v);
    }
  }
  return out;
}

std::string render_region_slice(int n, const Weight& xi, const Weight& nu, int a1, int a2, const SliceRange& range) {
  const auto fences = slice_fences(n, xi, nu, a1, a2, range);
  const double size = 400, pad = 20;
  const double lo = range.lo.to_double(), hi = range.hi.to_double();
  auto sx = [&](double v) { return pad + (v - lo) / (hi - lo) * size; };
  auto sy = [&](double v) { return pad + size - (v - lo) / (hi - lo) * size; };
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size + 2 * pad << "\" height=\""
     << size + 2 * pad << "\">\n";
  os << "<rect x=\"" << pad << "\" y=\"" << pad << "\" width=\"" << size << "\" height=\"" << size
     << "\" fill=\"white\" stroke=\"black\"/>\n";

  // lattice points of xi + Z^r on the slice, coloured by region
  const auto pos = positive_system(xi);
  const double cell = size / (hi - lo);
  std::ostringstream dots;
  dots << std::fixed << std::setprecision(3);
  os << "<g id=\"regions\">\n";
  const long klo = (range.lo - xi(a1 - 1)).floor_long() - 1, khi = (range.hi - xi(a1 - 1)).floor_long() + 1;
  const long mlo = (range.lo - xi(a2 - 1)).floor_long() - 1, mhi = (range.hi - xi(a2 - 1)).floor_long() + 1;
  for (long k = klo; k <= khi; ++k)
    for (long m = mlo; m <= mhi; ++m) {
      Weight l = xi;
      l(a1 - 1) += Rational(k);
      l(a2 - 1) += Rational(m);
      if (l(a1 - 1) < range.lo || l(a1 - 1) > range.hi || l(a2 - 1) < range.lo || l(a2 - 1) > range.hi) continue;
      if (!in_chamber(pos, l)) continue;
      const MultiSignature s = multi_signature(l, nu);
      std::size_t h = 1469598103934665603ULL;
      for (const auto& e : s.entries) h = (h ^ static_cast<std::size_t>(e.sign + 2 + 7 * e.key.i + 31 * e.key.j + 131 * e.key.delta)) * 1099511628211ULL;
      const int red = 128 + static_cast<int>(h % 128), green = 128 + static_cast<int>((h >> 8) % 128),
                blue = 128 + static_cast<int>((h >> 16) % 128);
      const double x = sx(l(a1 - 1).to_double()), y = sy(l(a2 - 1).to_double());
      os << "<rect x=\"" << x - cell / 2 << "\" y=\"" << y - cell / 2 << "\" width=\"" << cell << "\" height=\"" << cell
         << "\" fill=\"rgb(" << red << "," << green << "," << blue << ")\" fill-opacity=\"0.5\"/>\n";
      dots << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"2.5\" fill=\"black\"/>\n";
    }
  os << "</g>\n<g id=\"fences\" stroke=\"crimson\" stroke-width=\"1.5\">\n";
  for (const auto& [axis, v] : fences) {
    const double t = v.to_double();
    if (axis == a1)
      os << "<line x1=\"" << sx(t) << "\" y1=\"" << pad << "\" x2=\"" << sx(t) << "\" y2=\"" << pad + size << "\"/>\n";
    else
      os << "<line x1=\"" << pad << "\" y1=\"" << sy(t) << "\" x2=\"" << pad + size << "\" y2=\"" << sy(t) << "\"/>\n";
  }
  os << "</g>\n<g id=\"lattice\">\n" << dots.str() << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace obranch
