#include "obranch/weights.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace obranch {

RankContext rank_context(int n) {
  if (n < 2) throw InvalidRankError("rank context needs n >= 2, got " + std::to_string(n));
  RankContext c;
  c.n = n;
  c.r = (n + 1) / 2;
  c.s = n / 2;
  return c;
}

Weight make_weight(std::initializer_list<Rational> coords) {
  Weight w(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index k = 0;
  for (const auto& c : coords) w(k++) = c;
  return w;
}

Weight parse_weight(const std::string& csv) {
  std::vector<Rational> parts;
  std::string item;
  std::stringstream ss(csv);
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty weight coordinate in '" + csv + "'");
    parts.push_back(Rational::parse(item.substr(b, e - b + 1)));
  }
  Weight w(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t k = 0; k < parts.size(); ++k) w(static_cast<Eigen::Index>(k)) = parts[k];
  return w;
}

std::string format_weight(const Weight& w) {
  std::string out = "(";
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    if (k) out += ",";
    out += w(k).str();
  }
  return out + ")";
}

bool lex_less(const Weight& a, const Weight& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

bool equal(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index k = 0; k < a.size(); ++k)
    if (a(k) != b(k)) return false;
  return true;
}

Weight rho(const RankContext& ctx) {
  Weight w(ctx.r);
  for (int i = 1; i <= ctx.r; ++i) w(i - 1) = Rational(ctx.n + 1, 2) - Rational(i);
  return w;
}

Weight rho_sub(const RankContext& ctx) {
  Weight w(ctx.s);
  for (int j = 1; j <= ctx.s; ++j) w(j - 1) = Rational(ctx.n, 2) - Rational(j);
  return w;
}

bool is_nonsingular(const Weight& lambda) {
  for (Eigen::Index a = 0; a < lambda.size(); ++a) {
    if (lambda(a).is_zero()) return false;
    for (Eigen::Index b = a + 1; b < lambda.size(); ++b)
      if (lambda(a).abs() == lambda(b).abs()) return false;
  }
  return true;
}

Norms norms(const Weight& lambda) {
  Norms out{Rational(0), Rational(0)};
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    out.l1 += lambda(k).abs();
    out.l2_squared += lambda(k) * lambda(k);
  }
  return out;
}

Rational norm2(const Weight& lambda) { return norms(lambda).l2_squared; }

Rational SignedRoot::integrality_pairing(const Weight& xi) const {
  if (kind == Kind::Long) return Rational(si) * xi(i) + Rational(sj) * xi(j);
  return Rational(2 * si) * xi(i);
}

Rational SignedRoot::chamber_pairing(const Weight& eta) const {
  if (kind == Kind::Long) return Rational(si) * eta(i) + Rational(sj) * eta(j);
  return Rational(si) * eta(i);
}

std::string SignedRoot::str() const {
  auto term = [](int sign, int idx, bool first) {
    std::string t = sign < 0 ? "-" : (first ? "" : "+");
    return t + "e" + std::to_string(idx + 1);
  };
  std::string out = term(si, i, true);
  if (kind == Kind::Long) out += term(sj, j, false);
  return out;
}

std::vector<SignedRoot> root_set(int rank) {
  std::vector<SignedRoot> out;
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j)
      for (int si : {1, -1})
        for (int sj : {-1, 1}) out.push_back({SignedRoot::Kind::Long, i, j, si, sj});
  for (int i = 0; i < rank; ++i)
    for (int si : {1, -1}) out.push_back({SignedRoot::Kind::Short, i, -1, si, 1});
  return out;
}

std::vector<SignedRoot> positive_system(const Weight& xi) {
  if (!is_nonsingular(xi)) throw SingularWeightError("singular weight " + format_weight(xi));
  std::vector<SignedRoot> out;
  for (const auto& a : root_set(static_cast<int>(xi.size()))) {
    Rational p = a.integrality_pairing(xi);
    if (p.is_integer() && p.sign() > 0) out.push_back(a);
  }
  return out;
}

bool in_chamber(const std::vector<SignedRoot>& positive, const Weight& eta) {
  return std::all_of(positive.begin(), positive.end(),
                     [&](const SignedRoot& a) { return a.chamber_pairing(eta).sign() > 0; });
}

bool in_chamber(const Weight& xi, const Weight& eta) { return in_chamber(positive_system(xi), eta); }

std::vector<Weight> lattice_box(const Weight& xi, const Rational& bound) {
  auto pos = positive_system(xi);
  std::vector<Weight> out;
  if (bound.sign() < 0) return out;
  const long b = bound.floor_long();
  const Eigen::Index r = xi.size();
  Weight cur = xi;
  std::function<void(Eigen::Index, long)> rec = [&](Eigen::Index k, long budget) {
    if (k == r) {
      if (in_chamber(pos, cur)) out.push_back(cur);
      return;
    }
    for (long d = -budget; d <= budget; ++d) {
      cur(k) = xi(k) + Rational(d);
      rec(k + 1, budget - (d < 0 ? -d : d));
    }
    cur(k) = xi(k);
  };
  rec(0, b);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

Weight apply_signed_permutation(const Weight& x, const std::vector<int>& perm, const std::vector<int>& signs) {
  Weight y(x.size());
  for (Eigen::Index k = 0; k < x.size(); ++k) y(k) = Rational(signs[static_cast<std::size_t>(k)]) * x(perm[static_cast<std::size_t>(k)]);
  return y;
}

}  // namespace obranch
