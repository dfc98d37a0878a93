#include <map>

#include "obranch/linalg.hpp"
#include "obranch/rep.hpp"

namespace obranch {

namespace {

std::vector<int> restricted(const MatrixRep& Pi, Eigen::Index p, int s) {
  const auto& w = Pi.weights[static_cast<std::size_t>(p)];
  return {w.begin(), w.begin() + s};
}

/// Kernel of C' - kappa on one weight block, with the projection along the image.
struct KBlock {
  std::vector<Eigen::Index> idx;  ///< global indices of the block
  Kernel K;
  MatQ proj;  ///< k x m, coordinates along K
  Eigen::Index offset = 0;
};

}  // namespace

void check_equivariant(const MatQ& T, const MatrixRep& Pi, const MatrixRep& pi) {
  if (T.rows() != pi.dim || T.cols() != Pi.dim) throw IdentityViolation("operator shape mismatch");
  for (const Generator& g : pi.frame.gens)
    if (MatQ(T * Pi.y(g.i, g.j)) != MatQ(pi.y(g.i, g.j) * T)) throw IdentityViolation("operator is not subgroup-equivariant");
  if (MatQ(T * Pi.G) != MatQ(pi.G * T)) throw IdentityViolation("operator does not intertwine g_n");
}

HomSpace hom_space(const MatrixRep& Pi, const MatrixRep& pi) {
  if (Pi.frame.sub || !pi.frame.sub || Pi.frame.n != pi.frame.n)
    throw std::invalid_argument("hom_space needs O(n+1) and O(n) representations for the same n");
  HomSpace out;
  if (Pi.dim == 0 || pi.dim == 0) return out;
  const int s = pi.frame.rank;
  const SpQ Cpi = casimir_matrix(pi);
  const Rational kp = pi.dim ? MatQ(Cpi)(0, 0) : Rational(0);
  if (MatQ(Cpi) != MatQ(MatQ::Identity(pi.dim, pi.dim) * kp))
    throw std::invalid_argument("target representation is not isotypic for the Casimir");

  std::map<std::vector<int>, std::vector<Eigen::Index>> pblocks;
  for (Eigen::Index p = 0; p < Pi.dim; ++p) pblocks[restricted(Pi, p, s)].push_back(p);

  const MatQ Csub = MatQ(sub_casimir_matrix(Pi));
  std::map<std::vector<int>, KBlock> kb;
  Eigen::Index kdim = 0;
  for (const auto& [w, idx] : pblocks) {
    const auto m = static_cast<Eigen::Index>(idx.size());
    MatQ D(m, m);
    for (Eigen::Index a = 0; a < m; ++a)
      for (Eigen::Index b = 0; b < m; ++b) D(a, b) = Csub(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]);
    for (Eigen::Index a = 0; a < m; ++a) D(a, a) -= kp;
    Kernel K = kernel(D);
    const Eigen::Index k = K.basis.cols();
    if (k == 0) continue;
    const MatQ R = column_space(D);
    if (R.cols() + k != m) throw IdentityViolation("subgroup Casimir is not semisimple on a weight block");
    MatQ Q(m, m);
    Q << K.basis, R;
    const MatQ Qi = inverse(Q);
    kb[w] = KBlock{idx, std::move(K), Qi.topRows(k), kdim};
    kdim += k;
  }
  if (kdim == 0) return out;

  // Restricted operator on K: column k of the result holds the K-coordinates of M applied to basis vector k.
  auto restrict_op = [&](const SpQ& M) {
    std::vector<std::vector<std::pair<Eigen::Index, Rational>>> cols(static_cast<std::size_t>(kdim));
    for (auto& [w, b] : kb)
      for (Eigen::Index c = 0; c < b.K.basis.cols(); ++c) {
        VecQ v = VecQ::Zero(Pi.dim);
        for (std::size_t l = 0; l < b.idx.size(); ++l) v(b.idx[l]) = b.K.basis(static_cast<Eigen::Index>(l), c);
        const VecQ y = M * v;
        VecQ rebuilt = VecQ::Zero(Pi.dim);
        auto& col = cols[static_cast<std::size_t>(b.offset + c)];
        for (auto& [w2, b2] : kb)
          for (Eigen::Index c2 = 0; c2 < b2.K.basis.cols(); ++c2) {
            const Rational& coef = y(b2.idx[static_cast<std::size_t>(b2.K.free[static_cast<std::size_t>(c2)])]);
            if (coef.is_zero()) continue;
            col.emplace_back(b2.offset + c2, coef);
            for (std::size_t l = 0; l < b2.idx.size(); ++l) rebuilt(b2.idx[l]) += coef * b2.K.basis(static_cast<Eigen::Index>(l), c2);
          }
        if (rebuilt != y) throw IdentityViolation("eigenspace of the subgroup Casimir is not invariant");
      }
    return cols;
  };

  // Unknowns T_K(q, k) for target q and K-index k of equal weight.
  std::vector<std::vector<int>> kweight(static_cast<std::size_t>(kdim));
  for (auto& [w, b] : kb)
    for (Eigen::Index c = 0; c < b.K.basis.cols(); ++c) kweight[static_cast<std::size_t>(b.offset + c)] = w;
  std::map<std::pair<Eigen::Index, Eigen::Index>, Eigen::Index> var;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> var_pos;
  for (Eigen::Index q = 0; q < pi.dim; ++q)
    for (Eigen::Index k = 0; k < kdim; ++k)
      if (pi.weights[static_cast<std::size_t>(q)] == kweight[static_cast<std::size_t>(k)]) {
        var[{q, k}] = static_cast<Eigen::Index>(var_pos.size());
        var_pos.emplace_back(q, k);
      }
  SparseEchelon sys(static_cast<Eigen::Index>(var_pos.size()));

  auto add_equations = [&](const SpQ& Mpi, const SpQ& MPi) {
    const auto YK = restrict_op(MPi);
    const Eigen::SparseMatrix<Rational, Eigen::RowMajor> Yr(Mpi);
    for (Eigen::Index q = 0; q < pi.dim; ++q)
      for (Eigen::Index k = 0; k < kdim; ++k) {
        std::map<Eigen::Index, Rational> row;
        // (T YK)(q,k) = sum_m T(q,m) YK(m,k)
        for (const auto& [m, v] : YK[static_cast<std::size_t>(k)]) {
          auto it = var.find({q, m});
          if (it != var.end()) row[it->second] += v;
        }
        // (Ypi T)(q,k) = sum_m Ypi(q,m) T(m,k)
        for (Eigen::SparseMatrix<Rational, Eigen::RowMajor>::InnerIterator it(Yr, q); it; ++it) {
          auto jt = var.find({it.col(), k});
          if (jt != var.end()) row[jt->second] -= it.value();
        }
        SparseRow sr;
        for (auto& [c, v] : row)
          if (!v.is_zero()) sr.emplace_back(c, v);
        if (!sr.empty()) sys.add_row(std::move(sr));
      }
  };
  const Frame& fs = pi.frame;
  for (int a = fs.lo; a < fs.hi; ++a) add_equations(pi.y(a, a + 1), Pi.y(a, a + 1));
  add_equations(pi.G, Pi.G);

  MatQ P = MatQ::Zero(kdim, Pi.dim);
  for (auto& [w, b] : kb)
    for (Eigen::Index c = 0; c < b.proj.rows(); ++c)
      for (std::size_t l = 0; l < b.idx.size(); ++l) P(b.offset + c, b.idx[l]) = b.proj(c, static_cast<Eigen::Index>(l));

  for (const VecQ& sol : sys.kernel()) {
    MatQ TK = MatQ::Zero(pi.dim, kdim);
    for (Eigen::Index v = 0; v < sol.size(); ++v)
      if (!sol(v).is_zero()) TK(var_pos[static_cast<std::size_t>(v)].first, var_pos[static_cast<std::size_t>(v)].second) = sol(v);
    MatQ T = TK * P;
    check_equivariant(T, Pi, pi);
    out.basis.push_back(std::move(T));
  }
  out.multiplicity = static_cast<int>(out.basis.size());
  return out;
}

}  // namespace obranch
