#include "obranch/labels.hpp"

#include <sstream>
#include <stdexcept>

namespace obranch {

int FDLabel::size() const {
  int s = 0;
  for (int m : mu) s += m;
  return s;
}

bool FDLabel::needs_sign() const { return N % 2 == 1 || mu.empty() || mu.back() == 0; }

std::string FDLabel::str() const {
  std::ostringstream os;
  os << "O(" << N << ")[";
  for (std::size_t k = 0; k < mu.size(); ++k) os << (k ? "," : "") << mu[k];
  os << "]";
  if (sign > 0) os << "+";
  else if (sign < 0) os << "-";
  return os.str();
}

void validate(const FDLabel& label) {
  if (label.N < 2) throw std::invalid_argument("O(N) needs N >= 2");
  if (static_cast<int>(label.mu.size()) != label.rank()) throw std::invalid_argument("mu must have length floor(N/2)");
  for (std::size_t k = 0; k < label.mu.size(); ++k) {
    if (label.mu[k] < 0) throw std::invalid_argument("mu must be nonnegative");
    if (k && label.mu[k] > label.mu[k - 1]) throw std::invalid_argument("mu must be weakly decreasing");
  }
  if (label.needs_sign()) {
    if (label.sign != 1 && label.sign != -1) throw std::invalid_argument("label needs a sign +1 or -1");
  } else if (label.sign != 0) {
    throw std::invalid_argument("F(mu) with mu_r >= 1 of O(2r) carries no sign");
  }
}

FDLabel make_label(int N, std::vector<int> mu, int sign) {
  FDLabel l{N, std::move(mu), sign};
  if (!l.needs_sign()) l.sign = 0;
  validate(l);
  return l;
}

Weight rho_of(int N) {
  const int r = N / 2;
  Weight w(r);
  for (int k = 0; k < r; ++k) w(k) = Rational(N - 2 * (k + 1), 2);
  return w;
}

Weight inf_char_of(const FDLabel& label) {
  validate(label);
  Weight w = rho_of(label.N);
  for (int k = 0; k < label.rank(); ++k) w(k) += Rational(label.mu[k]);
  return w;
}

Rational casimir_scalar(const FDLabel& label) {
  return norm2(inf_char_of(label)) - norm2(rho_of(label.N));
}

namespace {

void rec(int N, int k, int bound, std::vector<int>& mu, std::vector<FDLabel>& out) {
  if (k == static_cast<int>(mu.size())) {
    FDLabel l{N, mu, 1};
    if (l.needs_sign()) {
      out.push_back(l);
      l.sign = -1;
      out.push_back(l);
    } else {
      l.sign = 0;
      out.push_back(l);
    }
    return;
  }
  for (int v = 0; v <= bound; ++v) {
    mu[k] = v;
    rec(N, k + 1, v, mu, out);
  }
}

}  // namespace

std::vector<FDLabel> labels_up_to(int N, int max_first) {
  std::vector<int> mu(N / 2, 0);
  std::vector<FDLabel> out;
  rec(N, 0, max_first, mu, out);
  return out;
}

}  // namespace obranch
