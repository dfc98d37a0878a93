// Closed forms h_i, phi_{i,eps}, g_{i,eps}, C_{i,eps} = g/phi and the polynomials b^(l).
#pragma once

#include "obranch/polynomial.hpp"
#include "obranch/weights.hpp"

namespace obranch {

struct ScalarQuery {
  RankContext ctx;
  int i = 1;    ///< 1-based
  int eps = 1;  ///< +1 or -1
  Weight lambda;
  Weight nu;
};

struct RationalFunctionValue {
  Rational numerator;
  Rational denominator{1};
  bool defined = true;
  /// numerator / denominator; throws when undefined.
  Rational value() const;
};

Rational h_val(const ScalarQuery& q);
Rational phi_val(const ScalarQuery& q);
Rational g_val(const ScalarQuery& q);
RationalFunctionValue C_val(const ScalarQuery& q);
bool nonvanishing_predicate(const ScalarQuery& q);
Rational b_closed(int ell, const RankContext& ctx, const Weight& lambda, const Weight& nu);

/// Variables are lambda_1..lambda_r followed by nu_1..nu_s.
Polynomial g_poly(const RankContext& ctx, int i, int eps);
Polynomial phi_poly(const RankContext& ctx, int i, int eps);
Polynomial b_closed_poly(int ell, const RankContext& ctx);
std::vector<std::string> lambda_nu_names(const RankContext& ctx);

}  // namespace obranch
