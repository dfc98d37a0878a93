#include "obranch/scalars.hpp"

#include <stdexcept>

namespace obranch {

namespace {

void check(const ScalarQuery& q) {
  if (q.i < 1 || q.i > q.ctx.r) throw std::out_of_range("index i out of range");
  if (q.eps != 1 && q.eps != -1) throw std::invalid_argument("eps must be +1 or -1");
  if (q.lambda.size() != q.ctx.r) throw std::invalid_argument("lambda must have length r");
  if (q.nu.size() != q.ctx.s) throw std::invalid_argument("nu must have length s");
}

}  // namespace

Rational RationalFunctionValue::value() const {
  if (!defined) throw std::domain_error("rational function undefined here");
  return numerator / denominator;
}

Rational h_val(const ScalarQuery& q) {
  check(q);
  const Rational& li = q.lambda(q.i - 1);
  Rational h = li;
  for (int j = 0; j < q.ctx.r; ++j) {
    if (j == q.i - 1) continue;
    h *= (li - q.lambda(j)) * (li + q.lambda(j));
  }
  return h;
}

Rational phi_val(const ScalarQuery& q) {
  Rational h = h_val(q);
  if (q.ctx.n_odd()) return Rational(2 * q.eps) * h;
  return (Rational(2) * q.lambda(q.i - 1) + Rational(q.eps)) * h;
}

Rational g_val(const ScalarQuery& q) {
  check(q);
  const Rational& li = q.lambda(q.i - 1);
  const Rational shift(q.eps, 2);
  Rational g = q.ctx.n_odd() ? Rational(q.eps) * li : Rational(1);
  for (int j = 0; j < q.ctx.s; ++j) g *= (li - q.nu(j) + shift) * (li + q.nu(j) + shift);
  return g;
}

RationalFunctionValue C_val(const ScalarQuery& q) {
  RationalFunctionValue v{g_val(q), phi_val(q), true};
  v.defined = !v.denominator.is_zero();
  return v;
}

bool nonvanishing_predicate(const ScalarQuery& q) {
  check(q);
  const Rational t = q.lambda(q.i - 1) + Rational(q.eps, 2);
  for (int j = 0; j < q.ctx.s; ++j)
    if (t == q.nu(j) || t == -q.nu(j)) return false;
  if (q.ctx.n_even() && t.is_zero()) return false;
  return true;
}

Rational b_closed(int ell, const RankContext& ctx, const Weight& lambda, const Weight& nu) {
  const Rational n(ctx.n);
  switch (ell) {
    case 1:
      return Rational(0);
    case 2:
      return norm2(lambda) - norm2(nu) - n * (n - 1) / Rational(8);
    case 3:
      return (Rational(1) - n) * norm2(lambda) + n * norm2(nu) + (n - 1) * n * (Rational(2) * n - 1) / Rational(24);
    default:
      throw std::out_of_range("b_closed defined for l in {1,2,3}");
  }
}

Polynomial g_poly(const RankContext& ctx, int i, int eps) {
  const int nv = ctx.r + ctx.s;
  Polynomial li = Polynomial::variable(nv, i - 1);
  Polynomial shift = Polynomial::constant(nv, Rational(eps, 2));
  Polynomial g = ctx.n_odd() ? li * Rational(eps) : Polynomial::constant(nv, Rational(1));
  for (int j = 0; j < ctx.s; ++j) {
    Polynomial nj = Polynomial::variable(nv, ctx.r + j);
    g = g * (li - nj + shift) * (li + nj + shift);
  }
  return g;
}

Polynomial phi_poly(const RankContext& ctx, int i, int eps) {
  const int nv = ctx.r + ctx.s;
  Polynomial li = Polynomial::variable(nv, i - 1);
  Polynomial h = li;
  for (int j = 0; j < ctx.r; ++j) {
    if (j == i - 1) continue;
    Polynomial lj = Polynomial::variable(nv, j);
    h = h * (li - lj) * (li + lj);
  }
  if (ctx.n_odd()) return h * Rational(2 * eps);
  return (li * Rational(2) + Polynomial::constant(nv, Rational(eps))) * h;
}

Polynomial b_closed_poly(int ell, const RankContext& ctx) {
  const int nv = ctx.r + ctx.s;
  Polynomial l2(nv), n2(nv);
  for (int k = 0; k < ctx.r; ++k) l2 += Polynomial::variable(nv, k) * Polynomial::variable(nv, k);
  for (int k = 0; k < ctx.s; ++k) n2 += Polynomial::variable(nv, ctx.r + k) * Polynomial::variable(nv, ctx.r + k);
  const Rational n(ctx.n);
  switch (ell) {
    case 1:
      return Polynomial(nv);
    case 2:
      return l2 - n2 - Polynomial::constant(nv, n * (n - 1) / Rational(8));
    case 3:
      return l2 * (Rational(1) - n) + n2 * n +
             Polynomial::constant(nv, (n - 1) * n * (Rational(2) * n - 1) / Rational(24));
    default:
      throw std::out_of_range("b_closed defined for l in {1,2,3}");
  }
}

std::vector<std::string> lambda_nu_names(const RankContext& ctx) {
  std::vector<std::string> names;
  for (int k = 1; k <= ctx.r; ++k) names.push_back("l" + std::to_string(k));
  for (int k = 1; k <= ctx.s; ++k) names.push_back("v" + std::to_string(k));
  return names;
}

}  // namespace obranch
