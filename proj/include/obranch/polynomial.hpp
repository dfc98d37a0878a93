// Commutative multivariate polynomials with exact rational coefficients.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "obranch/rational.hpp"

namespace obranch {

class Polynomial {
 public:
  using Exponents = std::vector<int>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int k);

  int nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  /// Adds c * x^e, dropping the monomial when the coefficient cancels.
  void add_term(const Exponents& e, const Rational& c);
  Rational coefficient(const Exponents& e) const;
  int total_degree() const;
  bool is_zero() const { return terms_.empty(); }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Rational eval(const std::vector<Rational>& x) const;
  /// x_k -> signs[k] * x_{perm[k]}.
  Polynomial substitute(const std::vector<int>& perm, const std::vector<int>& signs) const;
  /// Renders with the given variable names, highest degree first.
  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

/// All exponent vectors of total degree <= d in nvars variables, graded then lexicographic.
std::vector<Polynomial::Exponents> monomials_up_to(int nvars, int d);

}  // namespace obranch
