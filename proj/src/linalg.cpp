#include "obranch/linalg.hpp"

#include <stdexcept>

namespace obranch {

int bit_size(const Rational& x) {
  return static_cast<int>(mpz_sizeinbase(mpq_numref(x.raw()), 2) + mpz_sizeinbase(mpq_denref(x.raw()), 2));
}

std::vector<Eigen::Index> rref(MatQ& m) {
  std::vector<Eigen::Index> pivots;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index best = -1;
    int best_size = 0;
    for (Eigen::Index k = r; k < rows; ++k) {
      if (m(k, c).is_zero()) continue;
      int sz = bit_size(m(k, c));
      if (best < 0 || sz < best_size) {
        best = k;
        best_size = sz;
      }
    }
    if (best < 0) continue;
    if (best != r) m.row(best).swap(m.row(r));
    Rational inv = m(r, c).inverse();
    for (Eigen::Index j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (Eigen::Index k = 0; k < rows; ++k) {
      if (k == r || m(k, c).is_zero()) continue;
      Rational f = m(k, c);
      for (Eigen::Index j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(k, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Eigen::Index rank(MatQ m) { return static_cast<Eigen::Index>(rref(m).size()); }

Kernel kernel(const MatQ& m) {
  MatQ a = m;
  auto piv = rref(a);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
  Kernel out;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) out.free.push_back(c);
  out.basis = MatQ::Zero(cols, static_cast<Eigen::Index>(out.free.size()));
  for (std::size_t k = 0; k < out.free.size(); ++k) {
    const Eigen::Index f = out.free[k];
    out.basis(f, static_cast<Eigen::Index>(k)) = Rational(1);
    for (std::size_t p = 0; p < piv.size(); ++p) {
      const Rational& v = a(static_cast<Eigen::Index>(p), f);
      if (!v.is_zero()) out.basis(piv[p], static_cast<Eigen::Index>(k)) = -v;
    }
  }
  return out;
}

MatQ column_space(const MatQ& m) {
  MatQ a = m;
  auto piv = rref(a);
  MatQ out(m.rows(), static_cast<Eigen::Index>(piv.size()));
  for (std::size_t k = 0; k < piv.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = m.col(piv[k]);
  return out;
}

MatQ inverse(const MatQ& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse of non-square matrix");
  const Eigen::Index n = m.rows();
  MatQ aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = MatQ::Identity(n, n);
  auto piv = rref(aug);
  if (static_cast<Eigen::Index>(piv.size()) < n || (n > 0 && piv[static_cast<std::size_t>(n - 1)] != n - 1))
    throw std::domain_error("singular matrix");
  return aug.rightCols(n);
}

namespace {

/// a - f * b for sparse rows sorted by column.
SparseRow axpy(const SparseRow& a, const Rational& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(f * b[j].second));
      ++j;
    } else {
      Rational v = a[i].second - f * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool SparseEchelon::add_row(SparseRow row) {
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      Rational inv = row.front().second.inverse();
      for (auto& e : row) e.second *= inv;
      pivots_.emplace(row.front().first, std::move(row));
      return true;
    }
    Rational f = row.front().second;
    row = axpy(row, f, it->second);
  }
  return false;
}

std::vector<VecQ> SparseEchelon::kernel() const {
  std::vector<VecQ> out;
  for (Eigen::Index f = 0; f < ncols_; ++f) {
    if (pivots_.count(f)) continue;
    VecQ x = VecQ::Zero(ncols_);
    x(f) = Rational(1);
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      Rational acc(0);
      for (std::size_t k = 1; k < it->second.size(); ++k) {
        const auto& [c, v] = it->second[k];
        if (!x(c).is_zero()) acc += v * x(c);
      }
      x(it->first) = -acc;
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace obranch
