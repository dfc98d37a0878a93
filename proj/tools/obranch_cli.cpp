// obranch: command-line front end.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "obranch/branching.hpp"
#include "obranch/characters.hpp"
#include "obranch/fences.hpp"
#include "obranch/rep.hpp"
#include "obranch/scalars.hpp"
#include "obranch/serialize.hpp"
#include "obranch/svg.hpp"
#include "obranch/ue.hpp"
#include "obranch/verma.hpp"

using namespace obranch;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown to report a violated identity; carries a replayable counterexample.
struct Counterexample : std::runtime_error {
  Json detail;
  explicit Counterexample(Json d) : std::runtime_error("identity violated"), detail(std::move(d)) {}
};

int parse_sign(const std::string& s) {
  if (s == "+" || s == "1" || s == "+1") return 1;
  if (s == "-" || s == "-1") return -1;
  if (s == "0") return 0;
  throw UsageError("sign must be +, - or 0, got '" + s + "'");
}

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  const Weight w = parse_weight(csv);
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    if (!w(k).is_integer()) throw UsageError("expected integers in '" + csv + "'");
    out.push_back(static_cast<int>(w(k).to_long()));
  }
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

Json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  return Json::parse(f);
}

// --- verify-ue ---

void expect_zero(const UEElement& e, const std::string& check, Json where) {
  if (e.is_zero()) return;
  where["check"] = check;
  where["residual"] = e.str();
  throw Counterexample(where);
}

UEElement random_element(std::mt19937& rng, int n, int max_deg) {
  const auto gens = all_generators(n);
  std::uniform_int_distribution<int> nterms(1, 3), deg(0, max_deg), gi(0, static_cast<int>(gens.size()) - 1), co(-3, 3);
  UEElement e;
  for (int t = nterms(rng); t-- > 0;) {
    UEElement m = UEElement::scalar(Rational(co(rng)));
    for (int d = deg(rng); d-- > 0;) {
      const Generator& g = gens[static_cast<std::size_t>(gi(rng))];
      m = m * UEElement::gen(g.i, g.j);
    }
    e += m;
  }
  return e;
}

Json verify_ue(int n, int max_degree, int cases, unsigned seed) {
  if (n < 2) throw UsageError("--n must be >= 2");
  if (max_degree < 2) throw UsageError("--max-degree must be >= 2");
  long checks = 0;
  const UEElement cG = casimir_n(n, CasimirKind::Full), cS = casimir_n(n, CasimirKind::Sub);
  for (const Generator& g : all_generators(n)) {
    expect_zero(commutator(UEElement::gen(g.i, g.j), cG), "casimir_central", {{"n", n}, {"generator", generator_name(g)}});
    ++checks;
  }
  for (const Generator& g : sub_generators(n)) {
    expect_zero(commutator(UEElement::gen(g.i, g.j), cS), "sub_casimir_central", {{"n", n}, {"generator", generator_name(g)}});
    ++checks;
  }
  expect_zero(build_A(2, n) - (cG - cS), "A2", {{"n", n}});
  expect_zero(build_A(3, n) - (cG * Rational(1 - n) + cS * Rational(n)), "A3", {{"n", n}});
  checks += 2;

  const auto gens = all_generators(n);
  for (const Generator& x : gens)
    for (const Generator& y : gens)
      for (const Generator& z : gens) {
        UEElement j = commutator(bracket(x, y), UEElement::gen(z.i, z.j)) + commutator(bracket(y, z), UEElement::gen(x.i, x.j)) +
                      commutator(bracket(z, x), UEElement::gen(y.i, y.j));
        expect_zero(j, "jacobi", {{"n", n}, {"x", generator_name(x)}, {"y", generator_name(y)}, {"z", generator_name(z)}});
        ++checks;
      }

  for (int ell = 1; ell < max_degree; ++ell)
    for (int N = 1; ell + N <= max_degree; ++N) {
      Json at{{"n", n}, {"l", ell}, {"N", N}};
      const auto B = build_B(ell, n);
      const auto D = build_D(ell, n);
      const UEElement A = build_A(ell, n);
      const UEElement DS = build_Dscript(ell, N, n);
      for (const Generator& g : sub_generators(n)) {
        const UEElement X = UEElement::gen(g.i, g.j);
        at["generator"] = generator_name(g);
        expect_zero(commutator(X, A), "commute_A", at);
        expect_zero(commutator(X, DS), "commute_Dscript", at);
        for (int j = 1; j <= n; ++j) {
          at["j"] = j;
          UEElement b = commutator(X, B[static_cast<std::size_t>(j - 1)]);
          if (g.j == j) b -= B[static_cast<std::size_t>(g.i - 1)];
          if (g.i == j) b += B[static_cast<std::size_t>(g.j - 1)];
          expect_zero(b, "commute_B", at);
          UEElement d = commutator(X, D[static_cast<std::size_t>(j - 1)]);
          if (g.i == j) d += D[static_cast<std::size_t>(g.j - 1)];
          if (g.j == j) d -= D[static_cast<std::size_t>(g.i - 1)];
          expect_zero(d, "commute_D", at);
          checks += 2;
        }
        at.erase("j");
        checks += 2;
      }
      at.erase("generator");
      UEElement C = build_C(ell, n), sum;
      for (int j = 1; j <= n; ++j) sum += D[static_cast<std::size_t>(j - 1)] * UEElement::gen(0, j);
      expect_zero(C - sum, "C_from_D", at);
      expect_zero(C - build_Dscript(ell, 1, n), "C_is_Dscript", at);
      const auto D1 = build_D(ell + 1, n);
      for (int k = 1; k <= n; ++k) {
        UEElement s;
        for (int j = 1; j <= n; ++j) s += D[static_cast<std::size_t>(j - 1)] * UEElement::gen(k, j);
        expect_zero(D1[static_cast<std::size_t>(k - 1)] - s, "D_recursion", at);
      }
      if (N >= 2) expect_zero(DS - (C * build_A(N - 1, n) + build_Dscript(ell + 1, N - 1, n)), "Dscript_recursion", at);
      expect_zero(ad_gn(A, n) - A, "adgn_A", at);
      expect_zero(ad_gn(DS, n) - DS, "adgn_Dscript", at);
      expect_zero(ad_gn(C, n) - C, "adgn_C", at);
      for (int j = 1; j <= n; ++j) {
        const int s = j == n ? -1 : 1;
        expect_zero(ad_gn(B[static_cast<std::size_t>(j - 1)], n) - B[static_cast<std::size_t>(j - 1)] * Rational(s), "adgn_B", at);
        expect_zero(ad_gn(D[static_cast<std::size_t>(j - 1)], n) - D[static_cast<std::size_t>(j - 1)] * Rational(s), "adgn_D", at);
      }
      checks += 9 + 3 * n;
    }

  std::mt19937 rng(seed);
  const int deg = std::min(4, max_degree);
  for (int c = 0; c < cases; ++c) {
    const UEElement u = random_element(rng, n, deg / 2 + 1), v = random_element(rng, n, deg / 2 + 1),
                    w = random_element(rng, n, 1);
    expect_zero((u * v) * w - u * (v * w), "pbw_associativity", {{"n", n}, {"case", c}, {"seed", seed}});
    expect_zero(normal_order(u * v) - u * v, "pbw_idempotent", {{"n", n}, {"case", c}, {"seed", seed}});
    checks += 2;
  }
  return {{"n", n}, {"max_degree", max_degree}, {"checks", checks}, {"status", "ok"}};
}

// --- verify-scalar ---

Json check_pair(const MatrixRep& Pi, const MatrixRep& pi, long& checks) {
  const RankContext ctx = rank_context(Pi.frame.n);
  const HomSpace H = hom_space(Pi, pi);
  Json rows = Json::array();
  for (const MatQ& T : H.basis)
    for (int i = 1; i <= ctx.r; ++i)
      for (int eps : {1, -1}) {
        const ScalarQuery q{ctx, i, eps, Pi.inf_char, pi.inf_char};
        if (phi_val(q).is_zero()) continue;
        const Rational expected = C_val(q).value();
        const Rational measured = measure_scalar(T, Pi, pi, i, eps);
        ++checks;
        Json row{{"Pi", to_json(Pi.label)}, {"pi", to_json(pi.label)}, {"i", i}, {"eps", eps},
                 {"measured", to_json(measured)}, {"expected", to_json(expected)}};
        if (measured != expected) {
          row["check"] = "universal_scalar";
          throw Counterexample(row);
        }
        rows.push_back(row);
      }
  return rows;
}

Json verify_scalar_grid(int n, int box) {
  const RankContext ctx = rank_context(n);
  long checks = 0;
  Json rows = Json::array();
  for (const FDLabel& L : labels_up_to(n + 1, box)) {
    const MatrixRep Pi = construct_irrep(frame_G(n), L);
    for (const FDLabel& l : labels_up_to(n, L.mu[0])) {
      if (oracle_multiplicity(L, l) == 0) continue;
      const MatrixRep pi = construct_irrep(frame_sub(n), l);
      for (auto& r : check_pair(Pi, pi, checks)) rows.push_back(r);
    }
  }
  (void)ctx;
  return {{"n", n}, {"box", box}, {"checks", checks}, {"status", "ok"}, {"results", rows}};
}

// --- verma-demo ---

std::string verma_csv(int amin, int amax, int kmax) {
  std::ostringstream os;
  os << "a,b,c,k,multiplicity,oracle,jump_region\r\n";
  for (int a = amin; a <= amax; ++a)
    for (int b = amin; b <= amax; ++b)
      for (int k = 0; k <= kmax; ++k) {
        const int c = a + b - 2 * k;
        const FusionQuery q{Rational(a), Rational(b), Rational(c)};
        const int m = fusion_multiplicity(q), o = fusion_oracle(q);
        if (m != o)
          throw Counterexample({{"check", "verma_fusion"}, {"a", a}, {"b", b}, {"c", c}, {"predicted", m}, {"oracle", o}});
        os << a << ',' << b << ',' << c << ',' << k << ',' << m << ',' << o << ',' << (m == 2 ? 1 : 0) << "\r\n";
      }
  return os.str();
}

std::string stability_csv(const StabilityReport& r) {
  std::ostringstream os;
  os << "lambda,multiplicity,in_region\r\n";
  for (const auto& [l, m] : r.samples) os << '"' << format_weight(l) << "\"," << m << ",1\r\n";
  for (const auto& c : r.fence_crossings) os << '"' << format_weight(c.to) << "\"," << c.change << ",0\r\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Branching multiplicities, fences and translation scalars for O(n+1) > O(n)"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out;
  app.add_option("--out", out, "write output here instead of stdout");

  int n = 4;
  std::string xi, nu, lambda, eps = "+", mu, sign = "+", sub_mu, sub_sign = "+", axes = "1,2", range = "0,10", csv, Pi_file, pi_file;
  int i = 1, bound = 4, max_degree = 5, cases = 100, box = 2, amin = -6, amax = 4, kmax = 8;
  unsigned seed = 1;
  bool with_hom = false;

  auto* regions = app.add_subcommand("regions", "multi-signature and region of (xi, nu)");
  regions->add_option("--n", n)->required();
  regions->add_option("--xi", xi)->required();
  regions->add_option("--nu", nu)->required();

  auto* scalar = app.add_subcommand("scalar", "closed-form g, phi and C = g/phi");
  scalar->add_option("--n", n)->required();
  scalar->add_option("--i", i)->required();
  scalar->add_option("--eps", eps)->required();
  scalar->add_option("--lambda", lambda)->required();
  scalar->add_option("--nu", nu)->required();

  auto* branch = app.add_subcommand("branch", "multiplicity of an O(n) irreducible in an O(n+1) irreducible");
  branch->add_option("--n", n)->required();
  branch->add_option("--mu", mu)->required();
  branch->add_option("--sign", sign);
  branch->add_option("--sub-mu", sub_mu)->required();
  branch->add_option("--sub-sign", sub_sign);
  branch->add_flag("--hom", with_hom, "also solve the equivariance system");

  auto* stability = app.add_subcommand("stability", "scan multiplicities over an interleaving region");
  stability->add_option("--n", n)->required();
  stability->add_option("--xi", xi)->required();
  stability->add_option("--sub-mu", sub_mu)->required();
  stability->add_option("--sub-sign", sub_sign);
  stability->add_option("--eps", eps);
  stability->add_option("--bound", bound);
  stability->add_option("--csv", csv, "also write a CSV multiplicity table");

  auto* vue = app.add_subcommand("verify-ue", "symbolic identity suite in U(o(n+1))");
  vue->add_option("--n", n)->required();
  vue->add_option("--max-degree", max_degree);
  vue->add_option("--cases", cases);
  vue->add_option("--seed", seed);

  auto* vsc = app.add_subcommand("verify-scalar", "measured translation scalars against g/phi");
  vsc->add_option("--n", n);
  vsc->add_option("--box", box);
  vsc->add_option("--Pi", Pi_file, "JSON bundle of an O(n+1) representation");
  vsc->add_option("--pi", pi_file, "JSON bundle of an O(n) representation");
  vsc->add_option("--emit-mu", mu, "write the bundle of F(mu) and exit");
  vsc->add_option("--emit-sign", sign);
  vsc->add_flag("--emit-sub", with_hom, "emit an O(n) representation instead");

  auto* verma = app.add_subcommand("verma-demo", "sl(2) Verma fusion multiplicities as CSV");
  verma->add_option("--amin", amin);
  verma->add_option("--amax", amax);
  verma->add_option("--kmax", kmax);

  auto* render = app.add_subcommand("render", "SVG slice of fences and regions");
  render->add_option("--n", n)->required();
  render->add_option("--xi", xi)->required();
  render->add_option("--nu", nu)->required();
  render->add_option("--axes", axes);
  render->add_option("--range", range);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (regions->parsed()) {
      const RankContext ctx = rank_context(n);
      const Weight x = parse_weight(xi), v = parse_weight(nu);
      if (x.size() != ctx.r || v.size() != ctx.s) throw UsageError("xi needs r entries and nu needs s entries");
      Json j = to_json(make_region(x, v));
      j["n"] = n;
      j["in_chamber"] = in_chamber(x, x);
      emit(out, dump(j));
    } else if (scalar->parsed()) {
      const ScalarQuery q{rank_context(n), i, parse_sign(eps), parse_weight(lambda), parse_weight(nu)};
      Json j;
      j["h"] = to_json(h_val(q));
      j["phi"] = to_json(phi_val(q));
      j["g"] = to_json(g_val(q));
      j["C"] = to_json(C_val(q));
      j["nonvanishing"] = nonvanishing_predicate(q);
      emit(out, dump(j));
    } else if (branch->parsed()) {
      const FDLabel L = make_label(n + 1, parse_ints(mu), parse_sign(sign));
      const FDLabel l = make_label(n, parse_ints(sub_mu), parse_sign(sub_sign));
      Json j{{"Pi", to_json(L)}, {"pi", to_json(l)}, {"lambda", to_json(inf_char_of(L))}, {"nu", to_json(inf_char_of(l))}};
      const int m = oracle_multiplicity(L, l), p = interlace_predicate(L, l);
      j["multiplicity"] = m;
      j["interlace"] = p;
      if (with_hom) {
        const int h = hom_space(construct_irrep(frame_G(n), L), construct_irrep(frame_sub(n), l)).multiplicity;
        j["hom_space"] = h;
        if (h != m) {
          j["check"] = "oracle_vs_hom";
          throw Counterexample(j);
        }
      }
      emit(out, dump(j));
    } else if (stability->parsed()) {
      const RankContext ctx = rank_context(n);
      const FDLabel l = make_label(n, parse_ints(sub_mu), parse_sign(sub_sign));
      const StabilityReport r = stability_scan(ctx, parse_weight(xi), l, bound, parse_sign(eps));
      Json j = to_json(r);
      j["pi"] = to_json(l);
      emit(out, dump(j));
      if (!csv.empty()) emit(csv, stability_csv(r));
    } else if (vue->parsed()) {
      emit(out, dump(verify_ue(n, max_degree, cases, seed)));
    } else if (vsc->parsed()) {
      if (!mu.empty()) {
        const MatrixRep r = with_hom ? construct_irrep(frame_sub(n), make_label(n, parse_ints(mu), parse_sign(sign)))
                                     : construct_irrep(frame_G(n), make_label(n + 1, parse_ints(mu), parse_sign(sign)));
        emit(out, dump(to_json(r)));
      } else if (!Pi_file.empty() || !pi_file.empty()) {
        if (Pi_file.empty() || pi_file.empty()) throw UsageError("--Pi and --pi go together");
        const MatrixRep Pi = rep_from_json(read_json(Pi_file)), pi = rep_from_json(read_json(pi_file));
        long checks = 0;
        Json rows = check_pair(Pi, pi, checks);
        emit(out, dump({{"checks", checks}, {"status", "ok"}, {"results", rows}}));
      } else {
        emit(out, dump(verify_scalar_grid(n, box)));
      }
    } else if (verma->parsed()) {
      if (amin > amax || kmax < 0) throw UsageError("empty Verma grid");
      emit(out, verma_csv(amin, amax, kmax));
    } else if (render->parsed()) {
      const auto ax = parse_ints(axes);
      const Weight rg = parse_weight(range);
      if (ax.size() != 2 || rg.size() != 2) throw UsageError("--axes and --range take two entries");
      emit(out, render_region_slice(n, parse_weight(xi), parse_weight(nu), ax[0], ax[1], SliceRange{rg(0), rg(1)}));
    }
  } catch (const Counterexample& c) {
    std::cout << dump(c.detail);
    return 1;
  } catch (const IdentityViolation& e) {
    std::cout << dump({{"check", "identity"}, {"error", e.what()}});
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
