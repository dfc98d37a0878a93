// Exact rational scalar backed by GMP, usable as an Eigen scalar type.
#pragma once

#include <gmp.h>

#include <Eigen/Core>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace obranch {

class Rational {
 public:
  Rational() { mpq_init(v_); }
  Rational(long n) {  // NOLINT(google-explicit-constructor)
    mpq_init(v_);
    mpq_set_si(v_, n, 1);
  }
  Rational(int n) : Rational(static_cast<long>(n)) {}  // NOLINT
  Rational(long p, long q);
  Rational(const Rational& o) {
    mpq_init(v_);
    mpq_set(v_, o.v_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(v_);
    mpq_swap(v_, o.v_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(v_, o.v_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(v_, o.v_);
    return *this;
  }
  ~Rational() { mpq_clear(v_); }

  /// Parses "p", "-p", "p/q". Throws std::invalid_argument.
  static Rational parse(std::string_view s);

  Rational& operator+=(const Rational& o) {
    mpq_add(v_, v_, o.v_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(v_, v_, o.v_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(v_, v_, o.v_);
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    mpq_neg(r.v_, v_);
    return r;
  }
  Rational operator+() const { return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_, b.v_) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) >= 0; }

  int sign() const { return mpq_sgn(v_); }
  bool is_zero() const { return mpq_sgn(v_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }
  /// True when the value lies in Z + 1/2.
  bool is_half_odd() const { return mpz_cmp_ui(mpq_denref(v_), 2) == 0; }
  Rational abs() const {
    Rational r;
    mpq_abs(r.v_, v_);
    return r;
  }
  Rational inverse() const;
  /// Largest integer <= value. Throws std::overflow_error outside the long range.
  long floor_long() const;
  /// Exact value as a long; throws unless it is an integer in range.
  long to_long() const;
  double to_double() const { return mpq_get_d(v_); }
  std::string str() const;
  std::size_t hash() const;

  const __mpq_struct* raw() const { return v_; }

 private:
  mpq_t v_;
};

inline Rational abs(const Rational& x) { return x.abs(); }
Rational pow(const Rational& x, int e);
std::ostream& operator<<(std::ostream& os, const Rational& x);

struct RationalHash {
  std::size_t operator()(const Rational& x) const { return x.hash(); }
};

}  // namespace obranch

namespace Eigen {
template <>
struct NumTraits<obranch::Rational> : GenericNumTraits<obranch::Rational> {
  using Real = obranch::Rational;
  using NonInteger = obranch::Rational;
  using Nested = obranch::Rational;
  using Literal = obranch::Rational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace obranch {

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VecQ = Vec<Rational>;
using MatQ = Mat<Rational>;

}  // namespace obranch
