// Finite-dimensional representations of O(N) over Q in a twisted weight basis, translation by the standard
// representation, primary projectors and the scalars measured through symmetry breaking operators.
#pragma once

#include <Eigen/Sparse>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "obranch/frame.hpp"
#include "obranch/labels.hpp"
#include "obranch/polynomial.hpp"
#include "obranch/scalars.hpp"

namespace obranch {

using SpQ = Eigen::SparseMatrix<Rational>;

struct IdentityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact complex matrix or vector as (re, im).
struct CMat {
  MatQ re, im;
};
struct CVec {
  VecQ re, im;
};

namespace detail {
struct TensorCache;
}

/// X_ab acts by i^{phase(a,b)} Y[gen_index(a,b)]; G is the reflection g_n of the last coordinate.
struct MatrixRep {
  Frame frame;
  Eigen::Index dim = 0;
  std::vector<SpQ> Y;
  SpQ G;
  std::vector<std::vector<int>> weights;
  FDLabel label;
  Weight highest_weight;
  Weight inf_char;
  std::shared_ptr<detail::TensorCache> cache;

  const SpQ& y(int a, int b) const;
  /// Dense complex matrix of X_ab for any a != b.
  CMat X(int a, int b) const;
};

/// Irreducible dimensions above this raise ResourceError.
void set_dimension_cap(Eigen::Index cap);
Eigen::Index dimension_cap();

MatrixRep trivial_rep(const Frame& frame, int sign = 1);
MatrixRep standard_rep(const Frame& frame);
MatrixRep standard_rep(const RankContext& ctx);

/// sum over the frame generators of sigma * Y^2, the Casimir -sum X^2.
SpQ casimir_matrix(const MatrixRep& rep);
/// Casimir of the subgroup frame acting on a full-frame representation.
SpQ sub_casimir_matrix(const MatrixRep& rep);

/// Throws IdentityViolation unless [X_x, X_y] = X_[x,y] for every pair and G normalizes correctly.
void check_brackets(const MatrixRep& rep);

CMat act(const UEElement& e, const MatrixRep& rep);
CVec act(const UEElement& e, const MatrixRep& rep, const CVec& v);

MatrixRep tensor(const MatrixRep& a, const MatrixRep& b);

/// Weight blocks of a representation.
std::map<std::vector<int>, std::vector<Eigen::Index>> weight_blocks(const MatrixRep& rep);

/// Irreducible F(mu)_sign built by repeated translation from the trivial representation; cached.
MatrixRep construct_irrep(const Frame& frame, const FDLabel& label);
MatrixRep construct_irrep(const RankContext& ctx, const std::vector<int>& mu, int sign = 1);

struct PrimaryComponent {
  Eigen::Index ambient_dim = 0;  ///< dim of Pi (x) F
  MatQ basis;                    ///< columns span the component
  Weight tau;
  Rational kappa;  ///< Casimir eigenvalue on the component
};

/// Image of the Casimir polynomial projector onto the (lambda + eps e_i) component of Pi (x) F.
PrimaryComponent primary_projector(const MatrixRep& pi, int i, int eps);

/// The (lambda + eps e_i) component of Pi (x) F as a representation. dim = 0 when absent.
MatrixRep translate(const MatrixRep& pi, int i, int eps);

struct HomSpace {
  int multiplicity = 0;
  std::vector<MatQ> basis;  ///< dim(pi) x dim(Pi)
};

/// Hom over the subgroup O(n) from Pi (full frame) to pi (subgroup frame).
HomSpace hom_space(const MatrixRep& Pi, const MatrixRep& pi);
/// Throws IdentityViolation unless T is subgroup-equivariant.
void check_equivariant(const MatQ& T, const MatrixRep& Pi, const MatrixRep& pi);

/// L = (id (x) pr) P_{lambda + eps e_i} (id (x) iota) as a dim(Pi) square matrix.
MatQ translation_composite(const MatrixRep& Pi, int i, int eps);
/// The unique c with T L = c T. Throws std::invalid_argument on T = 0 and IdentityViolation otherwise.
Rational measure_scalar(const MatQ& T, const MatrixRep& Pi, const MatrixRep& pi, int i, int eps);

/// (id (x) pr) ctilde^l (id (x) iota) with ctilde = (C(Pi (x) F) - C(Pi) (x) 1 - n) / 2.
MatQ shifted_casimir_composite(const MatrixRep& Pi, int ell);
Rational b_eval(int ell, const MatQ& T, const MatrixRep& Pi, const MatrixRep& pi);

struct InterpolationPoint {
  Weight lambda, nu;
  Rational value;
};
/// Values of b^(l) on all compact pairs with mu_1 <= box and nonzero Hom.
std::vector<InterpolationPoint> b_samples(int ell, const RankContext& ctx, int box);
/// Fits a polynomial of degree <= l. Throws ResourceError when the fit is not unique.
Polynomial b_reconstruct(int ell, const RankContext& ctx, int box = 4);

/// ctilde^N (u (x) f_0) = A^(N) u (x) f_0 + sum_j B_j^(N) u (x) f_j on every basis vector u.
bool verify_power_identity(const MatrixRep& Pi, int N);

/// f_j of the standard representation in its weight basis.
CVec standard_vector(const Frame& frame, int j);

}  // namespace obranch
