// One PASS/FAIL line per acceptance criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "obranch/branching.hpp"
#include "obranch/characters.hpp"
#include "obranch/linalg.hpp"
#include "obranch/rep.hpp"
#include "obranch/scalars.hpp"
#include "obranch/ue.hpp"
#include "obranch/verma.hpp"
#include "properties.hpp"

using namespace obranch;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && secs > budget_s) {
    o.pass = false;
    o.detail += "; over time budget";
  }
  if (!o.pass) ++failures;
  std::ostringstream t;
  t.precision(2);
  t << std::fixed << secs;
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " " << name << " [" << t.str() << "s] " << o.detail
            << std::endl;
}

UEElement X(int i, int j) { return UEElement::gen(i, j); }

Outcome ue_identities() {
  int checked = 0;
  for (int n = 2; n <= 6; ++n) {
    const UEElement cG = casimir_n(n, CasimirKind::Full), cS = casimir_n(n, CasimirKind::Sub);
    if (build_A(2, n) != cG - cS) return {false, "A2 fails at n=" + std::to_string(n)};
    if (build_A(3, n) != cG * Rational(1 - n) + cS * Rational(n)) return {false, "A3 fails at n=" + std::to_string(n)};
    checked += 2;
  }
  return {true, std::to_string(checked) + " element identities, n=2..6"};
}

Outcome commutation_suite() {
  long checks = 0;
  for (int n = 2; n <= 4; ++n)
    for (int ell = 1; ell <= 4; ++ell) {
      const UEElement A = build_A(ell, n);
      const auto B = build_B(ell, n), D = build_D(ell, n);
      auto where = [&](const std::string& what) {
        return Outcome{false, what + " at n=" + std::to_string(n) + " l=" + std::to_string(ell)};
      };
      for (const Generator& g : sub_generators(n)) {
        const int a = g.i, b = g.j;
        if (!commutator(X(a, b), A).is_zero()) return where("[X,A]");
        for (int j = 1; j <= n; ++j) {
          UEElement eb = commutator(X(a, b), B[j - 1]), ed = commutator(X(a, b), D[j - 1]);
          if (b == j) eb -= B[a - 1];
          if (a == j) eb += B[b - 1];
          if (a == j) ed += D[b - 1];
          if (b == j) ed -= D[a - 1];
          if (!eb.is_zero()) return where("[X,B_j]");
          if (!ed.is_zero()) return where("[X,D_j]");
          checks += 2;
        }
        ++checks;
      }
      // Ad(g_n) sign rules
      if (ad_gn(A, n) != A) return where("Ad A");
      for (int j = 1; j <= n; ++j) {
        const Rational s(j == n ? -1 : 1);
        if (ad_gn(B[j - 1], n) != B[j - 1] * s) return where("Ad B_j");
        if (ad_gn(D[j - 1], n) != D[j - 1] * s) return where("Ad D_j");
      }
      // C^(l+1) = sum_j D_j^(l) X_0j and D_k^(l+1) = sum_j D_j^(l) X_kj
      if (ell + 1 <= 5) {
        UEElement c;
        for (int j = 1; j <= n; ++j) c += D[j - 1] * X(0, j);
        const UEElement C = build_C(ell, n);
        if (C != c) return where("C recursion");
        if (ad_gn(C, n) != C) return where("Ad C");
        const auto D1 = build_D(ell + 1, n);
        for (int k = 1; k <= n; ++k) {
          UEElement s;
          for (int j = 1; j <= n; ++j) s += D[j - 1] * X(k, j);
          if (D1[k - 1] != s) return where("D recursion");
        }
        checks += 2 + n;
      }
      for (int N = 1; ell + N <= 5; ++N) {
        const UEElement DS = build_Dscript(ell, N, n);
        for (const Generator& g : sub_generators(n))
          if (!commutator(X(g.i, g.j), DS).is_zero()) return where("[X,Dscript] N=" + std::to_string(N));
        if (ad_gn(DS, n) != DS) return where("Ad Dscript");
        if (N >= 2 && DS != build_C(ell, n) * build_A(N - 1, n) + build_Dscript(ell + 1, N - 1, n))
          return where("Dscript recursion N=" + std::to_string(N));
        checks += static_cast<long>(sub_generators(n).size()) + 2;
      }
    }
  return {true, std::to_string(checks) + " symbolic checks, n<=4, l+N<=5"};
}

Outcome power_identity() {
  int checked = 0;
  for (int n : {3, 4}) {
    const RankContext ctx = rank_context(n);
    std::vector<MatrixRep> reps{trivial_rep(frame_G(n)), standard_rep(ctx)};
    std::vector<int> two(static_cast<std::size_t>(ctx.r), 0);
    two[0] = 2;
    reps.push_back(construct_irrep(ctx, two, 1));
    for (const MatrixRep& P : reps)
      for (int N = 1; N <= 4; ++N) {
        if (!verify_power_identity(P, N))
          return {false, "fails for " + P.label.str() + " N=" + std::to_string(N)};
        ++checked;
      }
  }
  return {true, std::to_string(checked) + " matrix identities"};
}

Outcome closed_forms() {
  std::string d;
  for (int n : {3, 4}) {
    const RankContext ctx = rank_context(n);
    for (int ell : {2, 3}) {
      const Polynomial p = b_reconstruct(ell, ctx);
      const Polynomial expect = b_closed_poly(ell, ctx);
      if (!(p == expect)) return {false, "b" + std::to_string(ell) + " at n=" + std::to_string(n) + " got " + p.str(lambda_nu_names(ctx))};
      // constant terms against the stated values
      const Rational nn(n);
      const Rational c0 = ell == 2 ? -nn * (nn - 1) / Rational(8) : (nn - 1) * nn * (Rational(2) * nn - 1) / Rational(24);
      if (p.coefficient(std::vector<int>(static_cast<std::size_t>(ctx.r + ctx.s), 0)) != c0) return {false, "constant term"};
      d += " n=" + std::to_string(n) + " b" + std::to_string(ell) + "=" + p.str(lambda_nu_names(ctx)) + ";";
    }
  }
  return {true, d};
}

struct GridStats {
  long scalar_checks = 0, scalar_fail = 0, pairs = 0;
  long nv_checks = 0, nv_fail = 0, g_zero = 0;
  bool anchor_even = false, anchor_odd = false;
  std::string first;
};

GridStats grid;

void run_grid() {
  for (int n : {3, 4}) {
    const RankContext ctx = rank_context(n);
    for (const FDLabel& L : labels_up_to(n + 1, 4)) {
      const MatrixRep Pi = construct_irrep(frame_G(n), L);
      for (const FDLabel& l : labels_up_to(n, L.mu[0])) {
        const MatrixRep pi = construct_irrep(frame_sub(n), l);
        const HomSpace H = hom_space(Pi, pi);
        if (H.multiplicity == 0) continue;
        ++grid.pairs;
        const MatQ& T = H.basis[0];
        for (int i = 1; i <= ctx.r; ++i)
          for (int eps : {1, -1}) {
            const ScalarQuery q{ctx, i, eps, Pi.inf_char, pi.inf_char};
            if (phi_val(q).is_zero()) continue;
            const Rational c = measure_scalar(T, Pi, pi, i, eps);
            const Rational expect = C_val(q).value();
            ++grid.scalar_checks;
            if (c != expect) {
              if (!grid.scalar_fail++)
                grid.first = L.str() + " -> " + l.str() + " i=" + std::to_string(i) + " eps=" + std::to_string(eps) +
                             " measured " + c.str() + " expected " + expect.str();
            }
            if (n == 4 && L.mu == std::vector<int>{0, 0} && L.sign == 1 && i == 1 && eps == 1 && c == Rational(1))
              grid.anchor_even = true;
            if (n == 3 && L.mu == std::vector<int>{1, 0} && L.sign == 1 && l.mu == std::vector<int>{0} && l.sign == 1 &&
                i == 1 && eps == 1 && c == Rational(3, 4))
              grid.anchor_odd = true;
            // nonvanishing
            const bool pred = nonvanishing_predicate(q);
            const bool gz = g_val(q).is_zero();
            ++grid.nv_checks;
            if (gz) ++grid.g_zero;
            if ((pred && c.is_zero()) || (gz && !c.is_zero())) ++grid.nv_fail;
          }
      }
    }
  }
}

Outcome universal_scalar() {
  run_grid();
  std::ostringstream os;
  os << grid.scalar_checks << " scalars over " << grid.pairs << " pairs";
  if (grid.scalar_fail) return {false, os.str() + "; " + std::to_string(grid.scalar_fail) + " mismatches, first " + grid.first};
  if (!grid.anchor_even || !grid.anchor_odd) return {false, os.str() + "; anchor value missing"};
  return {true, os.str() + "; anchors C=1 (n=4) and 3/4 (n=3) seen"};
}

Rational scalar_of(int n, const MatrixRep& Pi, const MatrixRep& pi, int i, int eps) {
  return measure_scalar(hom_space(Pi, pi).basis.at(0), Pi, pi, i, eps);
}

Outcome constants() {
  // n odd: (p lambda_1 + q) prod_j (lambda_1 - nu_j + 1/2)(lambda_1 + nu_j + 1/2) = c * phi
  const int n = 3;
  const RankContext ctx = rank_context(n);
  const MatrixRep t4 = trivial_rep(frame_G(n)), t3 = trivial_rep(frame_sub(n)), F = standard_rep(ctx);
  MatQ sys(2, 3);
  int row = 0;
  for (const MatrixRep* Pi : {&t4, &F}) {
    const Rational c = scalar_of(n, *Pi, t3, 1, 1);
    const Weight& lam = Pi->inf_char;
    const Weight& nu = t3.inf_char;
    Rational prod(1);
    for (int j = 0; j < ctx.s; ++j) prod *= (lam(0) - nu(j) + Rational(1, 2)) * (lam(0) + nu(j) + Rational(1, 2));
    Rational h = lam(0);
    for (int k = 1; k < ctx.r; ++k) h *= lam(0) * lam(0) - lam(k) * lam(k);
    const Rational phi = Rational(2) * h;
    sys(row, 0) = lam(0) * prod;
    sys(row, 1) = prod;
    sys(row, 2) = c * phi;
    ++row;
  }
  const MatQ A = sys.leftCols(2);
  const VecQ pq = inverse(A) * sys.col(2);
  // n even: c_+ prod_j (...) = c * phi
  const int m = 4;
  const RankContext c4 = rank_context(m);
  const MatrixRep t5 = trivial_rep(frame_G(m)), tt = trivial_rep(frame_sub(m));
  const Rational c = scalar_of(m, t5, tt, 1, 1);
  Rational prod(1);
  for (int j = 0; j < c4.s; ++j)
    prod *= (t5.inf_char(0) - tt.inf_char(j) + Rational(1, 2)) * (t5.inf_char(0) + tt.inf_char(j) + Rational(1, 2));
  Rational h = t5.inf_char(0);
  for (int k = 1; k < c4.r; ++k) h *= t5.inf_char(0) * t5.inf_char(0) - t5.inf_char(k) * t5.inf_char(k);
  const Rational cplus = c * (Rational(2) * t5.inf_char(0) + Rational(1)) * h / prod;
  const std::string d = "p=" + pq(0).str() + " q=" + pq(1).str() + " c+=" + cplus.str();
  return {pq(0) == Rational(1) && pq(1) == Rational(0) && cplus == Rational(1), d};
}

Outcome nonvanishing() {
  std::ostringstream os;
  os << grid.nv_checks << " compositions, " << grid.g_zero << " with g=0";
  if (!grid.nv_checks) return {false, "grid not run"};
  return {grid.nv_fail == 0, os.str() + (grid.nv_fail ? "; violations " + std::to_string(grid.nv_fail) : "")};
}

Outcome stability() {
  const RankContext ctx = rank_context(4);
  const Rational h(1, 2);
  const FDLabel pi = make_label(4, {3, 1});
  if (!equal(inf_char_of(pi), make_weight({4, 1}))) return {false, "nu of pi"};
  const Weight xi = make_weight({13 * h, 5 * h});
  const StabilityReport rep = stability_scan(ctx, xi, pi, 6);
  for (int t = 3; t <= 7; ++t) {
    const Weight l = make_weight({Rational(t) + 3 * h, 5 * h});
    if (!same_region(rep.region, l)) return {false, "t=" + std::to_string(t) + " not in region"};
    if (oracle_multiplicity(label_of(ctx, l, 1), pi) != 1) return {false, "multiplicity not 1 at t=" + std::to_string(t)};
  }
  if (!rep.constant) return {false, "region scan not constant"};
  const Weight l2 = make_weight({2 + 3 * h, 5 * h});
  if (same_region(rep.region, l2)) return {false, "t=2 still in region"};
  const int m2 = oracle_multiplicity(label_of(ctx, l2, 1), pi);
  // matrix cross-check on both sides of the fence
  const MatrixRep p = construct_irrep(frame_sub(4), pi);
  const int h3 = hom_space(construct_irrep(frame_G(4), label_of(ctx, make_weight({3 + 3 * h, 5 * h}), 1)), p).multiplicity;
  const int h2 = hom_space(construct_irrep(frame_G(4), label_of(ctx, l2, 1)), p).multiplicity;
  bool crossing = false;
  for (const auto& c : rep.fence_crossings)
    if (equal(c.to, l2) && c.change == -1) crossing = true;
  const StabilityReport z = stability_scan(ctx, make_weight({9 * h, 5 * h}), make_label(4, {0, 0}, 1), 6);
  bool zero = true;
  for (const auto& [l, m] : z.samples) zero = zero && m == 0;
  std::ostringstream os;
  os << rep.samples.size() << " region samples, t=2 multiplicity " << m2 << " (hom " << h2 << ", t=3 hom " << h3 << "), "
     << z.samples.size() << " trivial-pi samples all zero=" << zero;
  return {m2 == 0 && h2 == 0 && h3 == 1 && crossing && zero && z.constant && !z.samples.empty(), os.str()};
}

Outcome oracle_consistency() {
  long pairs = 0, nonzero = 0;
  for (int n : {2, 3, 4}) {
    const int top = n == 2 ? 60 : 8;
    for (const FDLabel& L : labels_up_to(n + 1, top)) {
      if (o_dimension(L) > 120) continue;
      const MatrixRep Pi = construct_irrep(frame_G(n), L);
      for (const FDLabel& l : labels_up_to(n, L.mu[0] + 1)) {
        const int o = oracle_multiplicity(L, l);
        const int h = hom_space(Pi, construct_irrep(frame_sub(n), l)).multiplicity;
        ++pairs;
        if (o != h) return {false, L.str() + " -> " + l.str() + " oracle " + std::to_string(o) + " hom " + std::to_string(h)};
        if (o > 1) return {false, "multiplicity above one at " + L.str()};
        nonzero += o;
      }
    }
  }
  return {true, std::to_string(pairs) + " pairs, " + std::to_string(nonzero) + " nonzero"};
}

Outcome verma() {
  long grid_pts = 0, literal_mismatch = 0, jumps = 0;
  for (int a = -6; a <= 4; ++a)
    for (int b = -6; b <= 4; ++b)
      for (int k = 0; k <= 8; ++k) {
        const int c = a + b - 2 * k;
        const FusionQuery q{Rational(a), Rational(b), Rational(c)};
        const int o = fusion_oracle(q);
        if (fusion_multiplicity(q) != o) return {false, "predicate differs from oracle"};
        ++grid_pts;
        jumps += o == 2;
        const bool literal = a + b + c <= -2 && std::abs(a - b) <= -c - 2;
        literal_mismatch += (o == 2) != literal;
      }
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-60, 60), den(2, 9), kk(0, 8);
  int samples = 0;
  while (samples < 200) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    if (a.is_integer() || b.is_integer()) continue;
    const FusionQuery q{a, b, a + b - Rational(2 * kk(rng))};
    if (fusion_multiplicity(q) != fusion_oracle(q)) return {false, "random sample differs"};
    ++samples;
  }
  std::ostringstream os;
  os << grid_pts << " grid points and " << samples << " non-integral samples agree with the oracle; " << jumps
     << " jump points; stated inequality region mismatches the oracle locus at " << literal_mismatch << " points";
  return {literal_mismatch == 0, os.str()};
}

Outcome property_suites() {
  std::string d;
  bool ok = true;
  for (const auto& r : props::all_suites(200, 9001)) {
    ok = ok && r.ok();
    d += r.name + ":" + std::to_string(r.cases) + "/" + std::to_string(r.failures) + " ";
    if (r.failures) d += "(" + r.first_failure + ") ";
  }
  return {ok, d + "(cases/failures)"};
}

}  // namespace

int main() {
  report(1, "UE identities A2, A3", 10, ue_identities);
  report(2, "commutation suite", 60, commutation_suite);
  report(3, "power identity", 60, power_identity);
  report(4, "closed forms b2, b3", 120, closed_forms);
  report(5, "universal scalar identity", 600, universal_scalar);
  report(6, "constant determination", 0, constants);
  report(7, "nonvanishing", 0, nonvanishing);
  report(8, "stability", 300, stability);
  report(9, "branching oracle consistency", 0, oracle_consistency);
  report(10, "Verma fusion jump", 30, verma);
  report(11, "property suites", 0, property_suites);
  return failures ? 1 : 0;
}
