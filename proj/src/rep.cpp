#include "obranch/rep.hpp"

#include <algorithm>
#include <optional>
#include <atomic>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "obranch/branching.hpp"
#include "obranch/characters.hpp"
#include "obranch/linalg.hpp"

namespace obranch {

namespace detail {

struct Block {
  std::vector<int> weight;
  std::vector<Eigen::Index> idx;
};

struct TensorCache {
  std::mutex mtx;
  bool ready = false;
  std::unique_ptr<MatrixRep> F;
  std::unique_ptr<MatrixRep> PF;
  SpQ C;
  SpQ cross;
  std::vector<Block> blocks;
  std::vector<std::pair<int, Eigen::Index>> where;
  std::map<int, MatQ> dense_C, dense_cross;
};

}  // namespace detail

namespace {

using Triplets = std::vector<Eigen::Triplet<Rational>>;
using detail::Block;
using detail::TensorCache;

std::atomic<Eigen::Index> g_cap{400};

void prune(SpQ& m) {
  m.prune([](Eigen::Index, Eigen::Index, const Rational& v) { return !v.is_zero(); });
}

SpQ to_sparse(const MatQ& m) {
  Triplets t;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) t.emplace_back(i, j, m(i, j));
  SpQ s(m.rows(), m.cols());
  s.setFromTriplets(t.begin(), t.end());
  return s;
}

SpQ sparse_identity(Eigen::Index n) {
  Triplets t;
  for (Eigen::Index i = 0; i < n; ++i) t.emplace_back(i, i, Rational(1));
  SpQ s(n, n);
  s.setFromTriplets(t.begin(), t.end());
  return s;
}

SpQ kron(const SpQ& a, const SpQ& b) {
  Triplets t;
  t.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
  for (Eigen::Index ja = 0; ja < a.outerSize(); ++ja)
    for (SpQ::InnerIterator ia(a, ja); ia; ++ia)
      for (Eigen::Index jb = 0; jb < b.outerSize(); ++jb)
        for (SpQ::InnerIterator ib(b, jb); ib; ++ib)
          t.emplace_back(ia.row() * b.rows() + ib.row(), ja * b.cols() + jb, ia.value() * ib.value());
  SpQ s(a.rows() * b.rows(), a.cols() * b.cols());
  s.setFromTriplets(t.begin(), t.end());
  return s;
}

bool is_zero(SpQ m) {
  prune(m);
  return m.nonZeros() == 0;
}

/// i^e for even e.
int real_unit(int e) {
  const int m = ((e % 4) + 4) % 4;
  if (m == 0) return 1;
  if (m == 2) return -1;
  throw std::logic_error("phase is not real");
}

/// (re, im) * i^e.
void rotate(VecQ& re, VecQ& im, int e) {
  switch (((e % 4) + 4) % 4) {
    case 0:
      break;
    case 1: {
      VecQ t = -im;
      im = re;
      re = t;
      break;
    }
    case 2:
      re = -re;
      im = -im;
      break;
    default: {
      VecQ t = im;
      im = -re;
      re = t;
    }
  }
}

MatrixRep blank(const Frame& frame, Eigen::Index dim) {
  MatrixRep r;
  r.frame = frame;
  r.dim = dim;
  r.Y.assign(frame.gens.size(), SpQ(dim, dim));
  r.G = sparse_identity(dim);
  r.weights.assign(static_cast<std::size_t>(dim), std::vector<int>(static_cast<std::size_t>(frame.rank), 0));
  r.cache = std::make_shared<TensorCache>();
  return r;
}

int local(const Frame& f, int a) { return a - f.lo; }

/// Columns: f'-coordinates of the weight basis w_{k,+}, w_{k,-}, ..., spare.
MatQ weight_change(const Frame& f) {
  const int m = f.N;
  MatQ S = MatQ::Zero(m, m);
  for (int k = 0; k < f.rank; ++k) {
    const auto [a, b] = f.cartan[static_cast<std::size_t>(k)];
    S(local(f, a), 2 * k) = 1;
    S(local(f, b), 2 * k) = 1;
    S(local(f, a), 2 * k + 1) = 1;
    S(local(f, b), 2 * k + 1) = -1;
  }
  if (f.spare >= 0) S(local(f, f.spare), m - 1) = 1;
  return S;
}

std::vector<int> to_ints(const Weight& w) {
  std::vector<int> v;
  for (Eigen::Index k = 0; k < w.size(); ++k) v.push_back(static_cast<int>(w(k).to_long()));
  return v;
}

Weight to_weight(const std::vector<int>& v) {
  Weight w(static_cast<Eigen::Index>(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k) w(static_cast<Eigen::Index>(k)) = Rational(v[k]);
  return w;
}

std::vector<Weight> standard_weights(const Frame& f) {
  std::vector<Weight> out;
  for (int k = 0; k < f.rank; ++k)
    for (int s : {1, -1}) {
      Weight t = Weight::Zero(f.rank);
      t(k) = Rational(s);
      out.push_back(t);
    }
  if (f.spare >= 0) out.push_back(Weight::Zero(f.rank));
  return out;
}

TensorCache& tensor_cache(const MatrixRep& pi) {
  TensorCache& tc = *pi.cache;
  std::lock_guard lock(tc.mtx);
  if (tc.ready) return tc;
  tc.F = std::make_unique<MatrixRep>(standard_rep(pi.frame));
  tc.PF = std::make_unique<MatrixRep>(tensor(pi, *tc.F));
  const MatrixRep& F = *tc.F;
  SpQ cross(tc.PF->dim, tc.PF->dim);
  for (std::size_t k = 0; k < pi.frame.gens.size(); ++k) {
    SpQ t = kron(pi.Y[k], F.Y[k]);
    if (pi.frame.sigma(pi.frame.gens[k]) > 0) cross += t;
    else cross -= t;
  }
  prune(cross);
  tc.cross = cross;
  tc.C = kron(casimir_matrix(pi), sparse_identity(F.dim)) + kron(sparse_identity(pi.dim), casimir_matrix(F)) +
         cross * Rational(2);
  prune(tc.C);
  tc.where.assign(static_cast<std::size_t>(tc.PF->dim), {-1, 0});
  for (auto& [w, idx] : weight_blocks(*tc.PF)) {
    const int b = static_cast<int>(tc.blocks.size());
    for (std::size_t l = 0; l < idx.size(); ++l)
      tc.where[static_cast<std::size_t>(idx[l])] = {b, static_cast<Eigen::Index>(l)};
    tc.blocks.push_back({w, idx});
  }
  tc.ready = true;
  return tc;
}

MatQ dense_block(const SpQ& M, const TensorCache& tc, int b) {
  const Block& blk = tc.blocks[static_cast<std::size_t>(b)];
  const auto m = static_cast<Eigen::Index>(blk.idx.size());
  MatQ D = MatQ::Zero(m, m);
  for (Eigen::Index c = 0; c < m; ++c)
    for (SpQ::InnerIterator it(M, blk.idx[static_cast<std::size_t>(c)]); it; ++it) {
      const auto [rb, rl] = tc.where[static_cast<std::size_t>(it.row())];
      if (rb != b) throw std::logic_error("operator does not preserve weight blocks");
      D(rl, c) = it.value();
    }
  return D;
}

/// Caller holds tc.mtx.
const MatQ& cached_block(std::map<int, MatQ>& store, const SpQ& M, const TensorCache& tc, int b) {
  auto it = store.find(b);
  if (it == store.end()) it = store.emplace(b, dense_block(M, tc, b)).first;
  return it->second;
}

Rational kappa_of(const Frame& f, const Weight& lambda) { return norm2(lambda) - norm2(rho_of(f.N)); }

std::vector<std::pair<int, Kernel>> eigen_kernels(TensorCache& tc, const Rational& kappa) {
  std::vector<std::pair<int, Kernel>> out;
  for (int b = 0; b < static_cast<int>(tc.blocks.size()); ++b) {
    MatQ D = cached_block(tc.dense_C, tc.C, tc, b);
    for (Eigen::Index k = 0; k < D.rows(); ++k) D(k, k) -= kappa;
    Kernel K = kernel(D);
    if (K.basis.cols() > 0) out.emplace_back(b, std::move(K));
  }
  return out;
}

Weight shift(const Weight& lambda, int i, int eps) {
  Weight t = lambda;
  t(i - 1) += Rational(eps);
  return t;
}

void check_translation_args(const MatrixRep& pi, int i, int eps) {
  if (pi.inf_char.size() != pi.frame.rank) throw std::invalid_argument("representation has no infinitesimal character");
  if (i < 1 || i > pi.frame.rank) throw std::out_of_range("index i out of range");
  if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
}

/// c with M = c T, if any.
std::optional<Rational> proportional(const MatQ& M, const MatQ& T) {
  Eigen::Index r0 = -1, c0 = -1;
  for (Eigen::Index j = 0; j < T.cols() && r0 < 0; ++j)
    for (Eigen::Index i = 0; i < T.rows(); ++i)
      if (!T(i, j).is_zero()) {
        r0 = i;
        c0 = j;
        break;
      }
  if (r0 < 0) throw std::invalid_argument("operator T is zero");
  Rational c = M(r0, c0) / T(r0, c0);
  for (Eigen::Index j = 0; j < T.cols(); ++j)
    for (Eigen::Index i = 0; i < T.rows(); ++i)
      if (M(i, j) != c * T(i, j)) return std::nullopt;
  return c;
}

/// Block-local pieces of e_p (x) v for a vector v of F.
std::map<int, VecQ> lift(const TensorCache& tc, Eigen::Index p, const VecQ& v) {
  const Eigen::Index dF = tc.F->dim;
  std::map<int, VecQ> parts;
  for (Eigen::Index q = 0; q < dF; ++q) {
    if (v(q).is_zero()) continue;
    const auto [b, l] = tc.where[static_cast<std::size_t>(p * dF + q)];
    auto it = parts.find(b);
    if (it == parts.end())
      it = parts.emplace(b, VecQ::Zero(static_cast<Eigen::Index>(tc.blocks[static_cast<std::size_t>(b)].idx.size()))).first;
    it->second(l) += v(q);
  }
  return parts;
}

/// Adds (id (x) pr) of a block-local vector into column p of L.
void project_into(const TensorCache& tc, int b, const VecQ& x, const VecQ& pr, MatQ& L, Eigen::Index p) {
  const Eigen::Index dF = tc.F->dim;
  const Block& blk = tc.blocks[static_cast<std::size_t>(b)];
  for (std::size_t l = 0; l < blk.idx.size(); ++l) {
    if (x(static_cast<Eigen::Index>(l)).is_zero()) continue;
    const Eigen::Index t = blk.idx[l];
    const Eigen::Index q = t % dF;
    if (!pr(q).is_zero()) L(t / dF, p) += pr(q) * x(static_cast<Eigen::Index>(l));
  }
}

/// f_0 in the weight basis of F and the functional v -> (f_0 coefficient of v).
std::pair<VecQ, VecQ> f0_data(const Frame& f) {
  CVec f0 = standard_vector(f, 0);
  if (!f0.im.isZero()) throw std::logic_error("f_0 is not rational in the weight basis");
  const MatQ S = weight_change(f);
  VecQ pr = S.row(local(f, 0)).transpose();
  return {f0.re, pr};
}

struct IrrepKey {
  int n;
  bool sub;
  std::vector<int> mu;
  int sign;
  auto operator<=>(const IrrepKey&) const = default;
};

std::recursive_mutex g_irrep_mtx;
std::map<IrrepKey, MatrixRep> g_irreps;

template <typename F>
void parallel_for(std::size_t count, F&& body) {
  const std::size_t nt = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), count));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mtx;
  for (std::size_t t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      for (std::size_t k; (k = next++) < count;) {
        try {
          body(k);
        } catch (...) {
          std::lock_guard lock(err_mtx);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace

const SpQ& MatrixRep::y(int a, int b) const {
  const int k = frame.gen_index(a, b);
  if (k < 0) throw std::out_of_range("generator outside the frame");
  return Y[static_cast<std::size_t>(k)];
}

CMat MatrixRep::X(int a, int b) const {
  if (a == b) return {MatQ::Zero(dim, dim), MatQ::Zero(dim, dim)};
  if (a > b) {
    CMat m = X(b, a);
    return {-m.re, -m.im};
  }
  MatQ Yd = MatQ(y(a, b));
  switch (frame.phase(a, b)) {
    case 0:
      return {Yd, MatQ::Zero(dim, dim)};
    case 1:
      return {MatQ::Zero(dim, dim), Yd};
    default:
      return {MatQ::Zero(dim, dim), -Yd};
  }
}

void set_dimension_cap(Eigen::Index cap) { g_cap = cap; }
Eigen::Index dimension_cap() { return g_cap; }

MatrixRep trivial_rep(const Frame& frame, int sign) {
  MatrixRep r = blank(frame, 1);
  r.G.coeffRef(0, 0) = Rational(sign);
  r.label = make_label(frame.N, std::vector<int>(static_cast<std::size_t>(frame.rank), 0), sign);
  r.highest_weight = Weight::Zero(frame.rank);
  r.inf_char = inf_char_of(r.label);
  return r;
}

MatrixRep standard_rep(const Frame& f) {
  MatrixRep r = blank(f, f.N);
  const MatQ S = weight_change(f);
  const MatQ Si = inverse(S);
  for (std::size_t k = 0; k < f.gens.size(); ++k) {
    const Generator& g = f.gens[k];
    MatQ Yp = MatQ::Zero(f.N, f.N);
    Yp(local(f, g.i), local(f, g.j)) = 1;
    Yp(local(f, g.j), local(f, g.i)) = f.sigma(g) > 0 ? 1 : -1;
    r.Y[k] = to_sparse(Si * Yp * S);
  }
  MatQ Gp = MatQ::Identity(f.N, f.N);
  Gp(local(f, f.hi), local(f, f.hi)) = -1;
  r.G = to_sparse(Si * Gp * S);
  const auto ws = standard_weights(f);
  for (std::size_t p = 0; p < ws.size(); ++p) r.weights[p] = to_ints(ws[p]);
  std::vector<int> mu(static_cast<std::size_t>(f.rank), 0);
  mu[0] = 1;
  r.label = make_label(f.N, mu, 1);
  r.highest_weight = to_weight(mu);
  r.inf_char = inf_char_of(r.label);
  check_brackets(r);
  return r;
}

MatrixRep standard_rep(const RankContext& ctx) { return standard_rep(frame_G(ctx.n)); }

SpQ casimir_matrix(const MatrixRep& rep) {
  SpQ C(rep.dim, rep.dim);
  for (std::size_t k = 0; k < rep.frame.gens.size(); ++k) {
    SpQ sq = rep.Y[k] * rep.Y[k];
    if (rep.frame.sigma(rep.frame.gens[k]) > 0) C += sq;
    else C -= sq;
  }
  prune(C);
  return C;
}

SpQ sub_casimir_matrix(const MatrixRep& rep) {
  if (rep.frame.sub) throw std::invalid_argument("sub_casimir_matrix needs a full-frame representation");
  SpQ C(rep.dim, rep.dim);
  for (std::size_t k = 0; k < rep.frame.gens.size(); ++k) {
    const Generator& g = rep.frame.gens[k];
    if (g.i < 1) continue;
    SpQ sq = rep.Y[k] * rep.Y[k];
    if (rep.frame.sigma(g) > 0) C += sq;
    else C -= sq;
  }
  prune(C);
  return C;
}

void check_brackets(const MatrixRep& rep) {
  const Frame& f = rep.frame;
  const auto ng = f.gens.size();
  for (std::size_t p = 0; p < ng; ++p)
    for (std::size_t q = p + 1; q < ng; ++q) {
      const Generator& x = f.gens[p];
      const Generator& y = f.gens[q];
      SpQ comm = rep.Y[p] * rep.Y[q] - rep.Y[q] * rep.Y[p];
      const UEElement z = bracket(x, y);
      if (z.is_zero()) {
        if (!is_zero(comm)) throw IdentityViolation("bracket of commuting generators acts nontrivially");
        continue;
      }
      const auto& [w, s] = *z.terms().begin();
      const Generator g = Generator::from_code(w[0]);
      const int e = f.phase(g.i, g.j) - f.phase(x.i, x.j) - f.phase(y.i, y.j);
      const SpQ expect = rep.y(g.i, g.j) * (s * Rational(real_unit(e)));
      if (!is_zero(comm - expect)) {
        std::ostringstream os;
        os << "bracket [X" << x.i << x.j << ",X" << y.i << y.j << "] violated";
        throw IdentityViolation(os.str());
      }
    }
  if (!is_zero(rep.G * rep.G - sparse_identity(rep.dim))) throw IdentityViolation("G is not an involution");
  for (std::size_t k = 0; k < ng; ++k) {
    const Generator& g = f.gens[k];
    const int s = (g.i == f.hi) != (g.j == f.hi) ? -1 : 1;
    if (!is_zero(rep.G * rep.Y[k] * rep.G - rep.Y[k] * Rational(s))) throw IdentityViolation("G does not normalize the action");
  }
}

CMat act(const UEElement& e, const MatrixRep& rep) {
  CMat out{MatQ::Zero(rep.dim, rep.dim), MatQ::Zero(rep.dim, rep.dim)};
  for (const auto& [w, c] : e.terms()) {
    if (w.empty()) {
      for (Eigen::Index k = 0; k < rep.dim; ++k) out.re(k, k) += c;
      continue;
    }
    int ph = 0;
    SpQ M;
    for (std::size_t k = w.size(); k-- > 0;) {
      const Generator g = Generator::from_code(w[k]);
      ph += rep.frame.phase(g.i, g.j);
      M = k + 1 == w.size() ? rep.y(g.i, g.j) : SpQ(rep.y(g.i, g.j) * M);
    }
    MatQ D = MatQ(M) * c;
    switch (((ph % 4) + 4) % 4) {
      case 0:
        out.re += D;
        break;
      case 1:
        out.im += D;
        break;
      case 2:
        out.re -= D;
        break;
      default:
        out.im -= D;
    }
  }
  return out;
}

CVec act(const UEElement& e, const MatrixRep& rep, const CVec& v) {
  CVec out{VecQ::Zero(rep.dim), VecQ::Zero(rep.dim)};
  for (const auto& [w, c] : e.terms()) {
    VecQ re = v.re, im = v.im;
    int ph = 0;
    for (std::size_t k = w.size(); k-- > 0;) {
      const Generator g = Generator::from_code(w[k]);
      ph += rep.frame.phase(g.i, g.j);
      const SpQ& Yg = rep.y(g.i, g.j);
      re = Yg * re;
      im = Yg * im;
    }
    rotate(re, im, ph);
    out.re += re * c;
    out.im += im * c;
  }
  return out;
}

MatrixRep tensor(const MatrixRep& a, const MatrixRep& b) {
  if (!(a.frame == b.frame)) throw std::invalid_argument("tensor factors live on different frames");
  MatrixRep r = blank(a.frame, a.dim * b.dim);
  const SpQ Ia = sparse_identity(a.dim), Ib = sparse_identity(b.dim);
  for (std::size_t k = 0; k < a.Y.size(); ++k) {
    r.Y[k] = kron(a.Y[k], Ib) + kron(Ia, b.Y[k]);
    prune(r.Y[k]);
  }
  r.G = kron(a.G, b.G);
  for (Eigen::Index p = 0; p < a.dim; ++p)
    for (Eigen::Index q = 0; q < b.dim; ++q) {
      auto& w = r.weights[static_cast<std::size_t>(p * b.dim + q)];
      for (int k = 0; k < a.frame.rank; ++k)
        w[static_cast<std::size_t>(k)] =
            a.weights[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)] + b.weights[static_cast<std::size_t>(q)][static_cast<std::size_t>(k)];
    }
  r.label = FDLabel{0, {}, 0};
  return r;
}

std::map<std::vector<int>, std::vector<Eigen::Index>> weight_blocks(const MatrixRep& rep) {
  std::map<std::vector<int>, std::vector<Eigen::Index>> out;
  for (Eigen::Index p = 0; p < rep.dim; ++p) out[rep.weights[static_cast<std::size_t>(p)]].push_back(p);
  return out;
}

PrimaryComponent primary_projector(const MatrixRep& pi, int i, int eps) {
  check_translation_args(pi, i, eps);
  TensorCache& tc = tensor_cache(pi);
  std::lock_guard lock(tc.mtx);
  PrimaryComponent out;
  out.ambient_dim = tc.PF->dim;
  out.tau = Weight::Zero(pi.frame.rank);
  out.tau(i - 1) = Rational(eps);
  out.kappa = kappa_of(pi.frame, shift(pi.inf_char, i, eps));
  const auto ks = eigen_kernels(tc, out.kappa);
  Eigen::Index total = 0;
  for (const auto& [b, K] : ks) total += K.basis.cols();
  out.basis = MatQ::Zero(out.ambient_dim, total);
  Eigen::Index col = 0;
  for (const auto& [b, K] : ks) {
    const Block& blk = tc.blocks[static_cast<std::size_t>(b)];
    for (Eigen::Index c = 0; c < K.basis.cols(); ++c, ++col)
      for (Eigen::Index l = 0; l < K.basis.rows(); ++l) out.basis(blk.idx[static_cast<std::size_t>(l)], col) = K.basis(l, c);
  }
  return out;
}

MatrixRep translate(const MatrixRep& pi, int i, int eps) {
  check_translation_args(pi, i, eps);
  const Frame& f = pi.frame;
  TensorCache& tc = tensor_cache(pi);
  std::unique_lock lock(tc.mtx);
  const Weight lam = shift(pi.inf_char, i, eps);
  const auto ks = eigen_kernels(tc, kappa_of(f, lam));
  Eigen::Index total = 0;
  for (const auto& [b, K] : ks) total += K.basis.cols();
  if (total > g_cap) throw ResourceError("translated component exceeds the dimension cap");
  MatrixRep r = blank(f, total);
  if (total == 0) return r;

  std::map<Eigen::Index, Eigen::Index> free_to_new;
  struct Col {
    int b;
    const Kernel* K;
    Eigen::Index c;
  };
  std::vector<Col> cols;
  for (const auto& [b, K] : ks) {
    const Block& blk = tc.blocks[static_cast<std::size_t>(b)];
    for (Eigen::Index c = 0; c < K.basis.cols(); ++c) {
      free_to_new[blk.idx[static_cast<std::size_t>(K.free[static_cast<std::size_t>(c)])]] = static_cast<Eigen::Index>(cols.size());
      r.weights[cols.size()] = blk.weight;
      cols.push_back({b, &K, c});
    }
  }
  auto restrict_op = [&](const SpQ& M) {
    Triplets t;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const Col& col = cols[k];
      const Block& blk = tc.blocks[static_cast<std::size_t>(col.b)];
      std::map<Eigen::Index, Rational> acc;
      for (Eigen::Index l = 0; l < col.K->basis.rows(); ++l) {
        const Rational& v = col.K->basis(l, col.c);
        if (v.is_zero()) continue;
        for (SpQ::InnerIterator it(M, blk.idx[static_cast<std::size_t>(l)]); it; ++it) acc[it.row()] += it.value() * v;
      }
      for (const auto& [row, v] : acc) {
        if (v.is_zero()) continue;
        auto hit = free_to_new.find(row);
        if (hit != free_to_new.end()) t.emplace_back(hit->second, static_cast<Eigen::Index>(k), v);
      }
    }
    SpQ s(total, total);
    s.setFromTriplets(t.begin(), t.end());
    return s;
  };
  for (std::size_t k = 0; k < f.gens.size(); ++k) r.Y[k] = restrict_op(tc.PF->Y[k]);
  r.G = restrict_op(tc.PF->G);
  lock.unlock();

  r.inf_char = lam;
  Weight mu = pi.highest_weight;
  mu(i - 1) += Rational(eps);
  r.highest_weight = mu;
  std::vector<int> m = to_ints(mu);
  bool dominant = true;
  for (std::size_t k = 0; k < m.size(); ++k)
    if (m[k] < 0 || (k && m[k] > m[k - 1])) dominant = false;
  check_brackets(r);
  if (!is_zero(casimir_matrix(r) - sparse_identity(total) * kappa_of(f, lam)))
    throw IdentityViolation("Casimir is not scalar on the translated component");
  if (!dominant) {
    r.label = FDLabel{0, m, 0};
    return r;
  }
  int sign = pi.label.sign;
  if (f.N % 2 == 0) {
    if (m.back() >= 1) {
      sign = 0;
    } else {
      Eigen::Index hw = -1;
      for (Eigen::Index p = 0; p < total; ++p)
        if (r.weights[static_cast<std::size_t>(p)] == m) {
          if (hw >= 0) throw std::logic_error("highest weight space is not a line");
          hw = p;
        }
      if (hw < 0) throw std::logic_error("highest weight missing");
      sign = r.G.coeff(hw, hw).sign();
    }
  }
  r.label = make_label(f.N, m, sign);
  return r;
}

MatrixRep construct_irrep(const Frame& frame, const FDLabel& label) {
  validate(label);
  if (label.N != frame.N) throw std::invalid_argument("label does not match the frame");
  if (o_dimension(label) > g_cap) throw ResourceError("representation exceeds the dimension cap");
  const IrrepKey key{frame.n, frame.sub, label.mu, label.sign};
  std::lock_guard lock(g_irrep_mtx);
  auto it = g_irreps.find(key);
  if (it != g_irreps.end()) return it->second;
  int k = -1;
  for (int t = 0; t < frame.rank; ++t)
    if (label.mu[static_cast<std::size_t>(t)] > 0) k = t;
  MatrixRep r;
  if (k < 0) {
    r = trivial_rep(frame, label.sign);
  } else {
    FDLabel parent = label;
    parent.mu[static_cast<std::size_t>(k)] -= 1;
    if (label.N % 2 == 0) {
      if (parent.mu.back() >= 1) parent.sign = 0;
      else if (label.sign == 0) parent.sign = 1;
    }
    r = translate(construct_irrep(frame, parent), k + 1, 1);
    if (!(r.label == label)) throw std::logic_error("translation produced " + r.label.str() + " instead of " + label.str());
  }
  if (r.dim != o_dimension(label)) throw std::logic_error("dimension disagrees with the Weyl formula for " + label.str());
  g_irreps.emplace(key, r);
  return r;
}

MatrixRep construct_irrep(const RankContext& ctx, const std::vector<int>& mu, int sign) {
  return construct_irrep(frame_G(ctx.n), make_label(ctx.n + 1, mu, sign));
}

CVec standard_vector(const Frame& f, int j) {
  if (!f.contains(j)) throw std::out_of_range("index outside the frame");
  const MatQ Si = inverse(weight_change(f));
  VecQ v = Si.col(local(f, j));
  VecQ zero = VecQ::Zero(f.N);
  // f_j = i^{-tau(j)} f'_j
  if (f.tau(j) == 0) return {v, zero};
  return {zero, -v};
}

MatQ translation_composite(const MatrixRep& pi, int i, int eps) {
  check_translation_args(pi, i, eps);
  if (pi.frame.sub) throw std::invalid_argument("composite needs a full-frame representation");
  TensorCache& tc = tensor_cache(pi);
  std::lock_guard lock(tc.mtx);
  const Rational kt = kappa_of(pi.frame, shift(pi.inf_char, i, eps));
  std::set<Rational> spectrum;
  for (const Weight& t : standard_weights(pi.frame)) spectrum.insert(kappa_of(pi.frame, pi.inf_char + t));
  spectrum.insert(kt);
  const auto [f0, pr] = f0_data(pi.frame);
  MatQ L = MatQ::Zero(pi.dim, pi.dim);
  for (Eigen::Index p = 0; p < pi.dim; ++p)
    for (auto& [b, v] : lift(tc, p, f0)) {
      const MatQ& D = cached_block(tc.dense_C, tc.C, tc, b);
      VecQ w = v;
      for (const Rational& k : spectrum) w = D * w - w * k;
      if (!w.isZero()) throw IdentityViolation("Casimir spectrum on Pi (x) F exceeds the expected set");
      VecQ x = v;
      for (const Rational& k : spectrum) {
        if (k == kt) continue;
        x = (D * x - x * k) / (kt - k);
      }
      project_into(tc, b, x, pr, L, p);
    }
  return L;
}

Rational measure_scalar(const MatQ& T, const MatrixRep& Pi, const MatrixRep& pi, int i, int eps) {
  if (T.rows() != pi.dim || T.cols() != Pi.dim) throw std::invalid_argument("operator shape mismatch");
  if (T.isZero()) throw std::invalid_argument("operator T is zero");
  const MatQ M = T * translation_composite(Pi, i, eps);
  auto c = proportional(M, T);
  if (!c) throw IdentityViolation("composition is not proportional to T");
  return *c;
}

MatQ shifted_casimir_composite(const MatrixRep& pi, int ell) {
  if (ell < 0) throw std::invalid_argument("l must be nonnegative");
  if (pi.frame.sub) throw std::invalid_argument("composite needs a full-frame representation");
  TensorCache& tc = tensor_cache(pi);
  std::lock_guard lock(tc.mtx);
  const auto [f0, pr] = f0_data(pi.frame);
  MatQ L = MatQ::Zero(pi.dim, pi.dim);
  for (Eigen::Index p = 0; p < pi.dim; ++p)
    for (auto& [b, v] : lift(tc, p, f0)) {
      const MatQ& D = cached_block(tc.dense_cross, tc.cross, tc, b);
      VecQ x = v;
      for (int k = 0; k < ell; ++k) x = D * x;
      project_into(tc, b, x, pr, L, p);
    }
  return L;
}

Rational b_eval(int ell, const MatQ& T, const MatrixRep& Pi, const MatrixRep& pi) {
  if (T.rows() != pi.dim || T.cols() != Pi.dim) throw std::invalid_argument("operator shape mismatch");
  if (T.isZero()) throw std::invalid_argument("operator T is zero");
  const MatQ M = T * shifted_casimir_composite(Pi, ell);
  auto c = proportional(M, T);
  if (!c) throw IdentityViolation("shifted Casimir composite is not proportional to T");
  return *c;
}

std::vector<InterpolationPoint> b_samples(int ell, const RankContext& ctx, int box) {
  const Frame fg = frame_G(ctx.n), fs = frame_sub(ctx.n);
  std::vector<FDLabel> bigs;
  for (const FDLabel& l : labels_up_to(ctx.n + 1, box))
    if (l.sign >= 0) bigs.push_back(l);
  std::vector<std::vector<InterpolationPoint>> found(bigs.size());
  parallel_for(bigs.size(), [&](std::size_t k) {
    const FDLabel& L = bigs[k];
    const MatrixRep Pi = construct_irrep(fg, L);
    for (const FDLabel& l : labels_up_to(ctx.n, L.mu[0])) {
      if (oracle_multiplicity(L, l) == 0) continue;
      const MatrixRep pi = construct_irrep(fs, l);
      const HomSpace H = hom_space(Pi, pi);
      if (H.multiplicity == 0) continue;
      found[k].push_back({Pi.inf_char, pi.inf_char, b_eval(ell, H.basis[0], Pi, pi)});
    }
  });
  std::map<std::string, InterpolationPoint> uniq;
  for (auto& v : found)
    for (auto& pt : v) {
      const std::string key = format_weight(pt.lambda) + format_weight(pt.nu);
      auto [it, inserted] = uniq.emplace(key, pt);
      if (!inserted && it->second.value != pt.value) throw IdentityViolation("b value depends on more than (lambda, nu)");
    }
  std::vector<InterpolationPoint> out;
  for (auto& [k, pt] : uniq) out.push_back(pt);
  return out;
}

Polynomial b_reconstruct(int ell, const RankContext& ctx, int box) {
  const int nv = ctx.r + ctx.s;
  const auto monos = monomials_up_to(nv, ell);
  const auto pts = b_samples(ell, ctx, box);
  const auto nm = static_cast<Eigen::Index>(monos.size());
  MatQ A(static_cast<Eigen::Index>(pts.size()), nm + 1);
  for (std::size_t p = 0; p < pts.size(); ++p) {
    std::vector<Rational> x;
    for (int k = 0; k < ctx.r; ++k) x.push_back(pts[p].lambda(k));
    for (int k = 0; k < ctx.s; ++k) x.push_back(pts[p].nu(k));
    for (Eigen::Index m = 0; m < nm; ++m) {
      Polynomial mono(nv);
      mono.add_term(monos[static_cast<std::size_t>(m)], Rational(1));
      A(static_cast<Eigen::Index>(p), m) = mono.eval(x);
    }
    A(static_cast<Eigen::Index>(p), nm) = pts[p].value;
  }
  const auto piv = rref(A);
  if (!piv.empty() && piv.back() == nm) throw IdentityViolation("samples are not fitted by any polynomial of degree <= l");
  if (static_cast<Eigen::Index>(piv.size()) < nm) throw ResourceError("too few interpolation points for a unique fit");
  Polynomial out(nv);
  for (std::size_t k = 0; k < piv.size(); ++k)
    out.add_term(monos[static_cast<std::size_t>(piv[k])], A(static_cast<Eigen::Index>(k), nm));
  return out;
}

bool verify_power_identity(const MatrixRep& pi, int N) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (pi.frame.sub) throw std::invalid_argument("power identity needs a full-frame representation");
  const int n = pi.frame.n;
  const UEElement A = build_A(N, n);
  const auto B = build_B(N, n);
  TensorCache& tc = tensor_cache(pi);
  std::lock_guard lock(tc.mtx);
  const Eigen::Index dF = tc.F->dim, dT = tc.PF->dim;
  std::vector<CVec> f(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) f[static_cast<std::size_t>(j)] = standard_vector(pi.frame, j);
  auto add_kron = [&](CVec& acc, const CVec& u, const CVec& w) {
    for (Eigen::Index p = 0; p < pi.dim; ++p)
      for (Eigen::Index q = 0; q < dF; ++q) {
        acc.re(p * dF + q) += u.re(p) * w.re(q) - u.im(p) * w.im(q);
        acc.im(p * dF + q) += u.re(p) * w.im(q) + u.im(p) * w.re(q);
      }
  };
  for (Eigen::Index p = 0; p < pi.dim; ++p) {
    CVec u{VecQ::Zero(pi.dim), VecQ::Zero(pi.dim)};
    u.re(p) = 1;
    CVec lhs{VecQ::Zero(dT), VecQ::Zero(dT)};
    add_kron(lhs, u, f[0]);
    VecQ l = lhs.re;
    for (int k = 0; k < N; ++k) l = tc.cross * l;
    CVec rhs{VecQ::Zero(dT), VecQ::Zero(dT)};
    add_kron(rhs, act(A, pi, u), f[0]);
    for (int j = 1; j <= n; ++j) add_kron(rhs, act(B[static_cast<std::size_t>(j - 1)], pi, u), f[static_cast<std::size_t>(j)]);
    if (rhs.re != l || !rhs.im.isZero()) return false;
  }
  return true;
}

}  // namespace obranch
