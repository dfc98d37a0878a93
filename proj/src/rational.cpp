#include "obranch/rational.hpp"

#include <climits>
#include <ostream>

namespace obranch {

Rational::Rational(long p, long q) {
  if (q == 0) throw std::domain_error("rational with zero denominator");
  mpq_init(v_);
  if (q < 0) {
    p = -p;
    q = -q;
  }
  mpq_set_si(v_, p, static_cast<unsigned long>(q));
  mpq_canonicalize(v_);
}

Rational Rational::parse(std::string_view s) {
  auto valid_int = [](std::string_view t) {
    std::size_t k = 0;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) k = 1;
    if (k >= t.size()) return false;
    for (; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
  std::string ns(num[0] == '+' ? num.substr(1) : num);
  std::string ds(den);
  Rational r;
  mpz_set_str(mpq_numref(r.v_), ns.c_str(), 10);
  mpz_set_str(mpq_denref(r.v_), ds.c_str(), 10);
  if (mpz_sgn(mpq_denref(r.v_)) == 0) throw std::invalid_argument("zero denominator: '" + std::string(s) + "'");
  mpq_canonicalize(r.v_);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  mpq_div(v_, v_, o.v_);
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Rational r;
  mpq_inv(r.v_, v_);
  return r;
}

long Rational::floor_long() const {
  mpz_t q;
  mpz_init(q);
  mpz_fdiv_q(q, mpq_numref(v_), mpq_denref(v_));
  if (!mpz_fits_slong_p(q)) {
    mpz_clear(q);
    throw std::overflow_error("rational out of long range");
  }
  long out = mpz_get_si(q);
  mpz_clear(q);
  return out;
}

long Rational::to_long() const {
  if (!is_integer()) throw std::domain_error("rational is not an integer: " + str());
  if (!mpz_fits_slong_p(mpq_numref(v_))) throw std::overflow_error("rational out of long range");
  return mpz_get_si(mpq_numref(v_));
}

std::string Rational::str() const {
  char* buf = mpq_get_str(nullptr, 10, v_);
  std::string out(buf);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(buf, out.size() + 1);
  return out;
}

std::size_t Rational::hash() const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](const __mpz_struct* z) {
    h ^= static_cast<std::size_t>(mpz_sgn(z) + 2);
    h *= 1099511628211ull;
    std::size_t n = mpz_size(z);
    for (std::size_t k = 0; k < n; ++k) {
      h ^= static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(k)));
      h *= 1099511628211ull;
    }
  };
  mix(mpq_numref(v_));
  mix(mpq_denref(v_));
  return h;
}

Rational pow(const Rational& x, int e) {
  if (e < 0) return pow(x.inverse(), -e);
  Rational r(1), b(x);
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace obranch
