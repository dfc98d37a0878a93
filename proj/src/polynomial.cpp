#include "obranch/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace obranch {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int k) {
  Polynomial p(nvars);
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(k)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(std::max(a.nvars_, b.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e(ea);
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

Rational Polynomial::eval(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("evaluation point length mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k]) t *= pow(x[k], e[k]);
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::substitute(const std::vector<int>& perm, const std::vector<int>& signs) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents f(e.size(), 0);
    int sign = 1;
    for (std::size_t k = 0; k < e.size(); ++k) {
      f[static_cast<std::size_t>(perm[k])] += e[k];
      if (signs[k] < 0 && (e[k] % 2)) sign = -sign;
    }
    out.add_term(f, Rational(sign) * c);
  }
  return out;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c] : ordered) {
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k]) continue;
      if (!mono.empty()) mono += "*";
      mono += names[k];
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    Rational a = c.abs();
    std::string coeff = (mono.empty() || a != Rational(1)) ? a.str() : "";
    std::string body = coeff + (coeff.empty() || mono.empty() ? "" : "*") + mono;
    if (out.empty())
      out = (c.sign() < 0 ? "-" : "") + body;
    else
      out += (c.sign() < 0 ? " - " : " + ") + body;
  }
  return out;
}

std::vector<Polynomial::Exponents> monomials_up_to(int nvars, int d) {
  std::vector<Polynomial::Exponents> out;
  Polynomial::Exponents cur(static_cast<std::size_t>(nvars), 0);
  for (int deg = 0; deg <= d; ++deg) {
    std::function<void(int, int)> rec = [&](int k, int left) {
      if (k == nvars - 1) {
        cur[static_cast<std::size_t>(k)] = left;
        out.push_back(cur);
        return;
      }
      for (int a = left; a >= 0; --a) {
        cur[static_cast<std::size_t>(k)] = a;
        rec(k + 1, left - a);
      }
    };
    if (nvars == 0) {
      if (deg == 0) out.push_back(cur);
      continue;
    }
    rec(0, deg);
  }
  return out;
}

}  // namespace obranch
