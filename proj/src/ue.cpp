#include "obranch/ue.hpp"

#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace obranch {

namespace {

using Linear = std::vector<std::pair<Word, Rational>>;
using Accum = std::unordered_map<Word, Rational>;

/// Signed generator X_pq for arbitrary p != q.
struct SignedGen {
  bool zero = true;
  char16_t code = 0;
  int sign = 1;
};

SignedGen signed_gen(int p, int q) {
  if (p == q) return {};
  if (p < q) return {false, Generator{p, q}.code(), 1};
  return {false, Generator{q, p}.code(), -1};
}

SignedGen bracket_codes(char16_t x, char16_t y) {
  Generator gx = Generator::from_code(x), gy = Generator::from_code(y);
  const int a = gx.i, b = gx.j, i = gy.i, j = gy.j;
  // At most one delta fires for distinct canonical generators.
  if (b == i) return signed_gen(a, j);
  if (b == j) return signed_gen(i, a);
  if (a == i) return signed_gen(j, b);
  if (a == j) return signed_gen(b, i);
  return {};
}

class NormalOrderCache {
 public:
  const Linear& reduce(const Word& t, char16_t x) {
    Word key = t;
    key.push_back(x);
    {
      std::shared_lock lock(mu_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Accum acc;
    char16_t y = t.back();
    Word head = t.substr(0, t.size() - 1);
    // head * x * y
    if (head.empty() || head.back() <= x) {
      Word hx = head;
      hx.push_back(x);
      append_into(hx, y, Rational(1), acc);
    } else {
      const Linear& hx = reduce(head, x);
      for (const auto& [w, c] : hx) append_into(w, y, c, acc);
    }
    // head * [y, x]
    SignedGen z = bracket_codes(y, x);
    if (!z.zero) append_into(head, z.code, Rational(z.sign), acc);
    Linear out;
    out.reserve(acc.size());
    for (auto& [w, c] : acc)
      if (!c.is_zero()) out.emplace_back(w, std::move(c));
    std::unique_lock lock(mu_);
    auto [it, inserted] = table_.emplace(std::move(key), std::move(out));
    return it->second;
  }

  void append_into(const Word& s, char16_t x, const Rational& c, Accum& acc) {
    if (s.empty() || s.back() <= x) {
      Word w = s;
      w.push_back(x);
      acc[w] += c;
      return;
    }
    for (const auto& [w, d] : reduce(s, x)) acc[w] += c * d;
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<Word, Linear> table_;
};

NormalOrderCache& cache() {
  static NormalOrderCache c;
  return c;
}

UEElement from_accum(const Accum& acc) {
  UEElement e;
  for (const auto& [w, c] : acc) e.add_sorted(w, c);
  return e;
}

}  // namespace

bool is_sorted_word(const Word& w) {
  for (std::size_t k = 1; k < w.size(); ++k)
    if (w[k - 1] > w[k]) return false;
  return true;
}

std::size_t normal_order_cache_size() { return cache().size(); }

void UEElement::add_sorted(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

UEElement UEElement::scalar(const Rational& c) {
  UEElement e;
  e.add_sorted(Word(), c);
  return e;
}

UEElement UEElement::gen(int i, int j) {
  SignedGen g = signed_gen(i, j);
  UEElement e;
  if (!g.zero) e.add_sorted(Word(1, g.code), Rational(g.sign));
  return e;
}

UEElement UEElement::word(const Word& w, const Rational& c) {
  Accum cur;
  cur[Word()] = c;
  for (char16_t x : w) {
    Accum next;
    for (const auto& [s, d] : cur)
      if (!d.is_zero()) cache().append_into(s, x, d, next);
    cur = std::move(next);
  }
  return from_accum(cur);
}

int UEElement::degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

UEElement& UEElement::operator+=(const UEElement& o) {
  for (const auto& [w, c] : o.terms_) add_sorted(w, c);
  return *this;
}

UEElement& UEElement::operator-=(const UEElement& o) {
  for (const auto& [w, c] : o.terms_) add_sorted(w, -c);
  return *this;
}

UEElement& UEElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

UEElement operator*(const UEElement& a, const UEElement& b) {
  Accum total;
  for (const auto& [u, ca] : a.terms_)
    for (const auto& [v, cb] : b.terms_) {
      Accum cur;
      cur[u] = ca * cb;
      for (char16_t x : v) {
        Accum next;
        for (const auto& [s, d] : cur)
          if (!d.is_zero()) cache().append_into(s, x, d, next);
        cur = std::move(next);
      }
      for (auto& [w, c] : cur) total[w] += c;
    }
  return from_accum(total);
}

std::string UEElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    std::string mono;
    for (char16_t x : w) {
      Generator g = Generator::from_code(x);
      if (!mono.empty()) mono += "*";
      mono += "X" + std::to_string(g.i) + "_" + std::to_string(g.j);
    }
    if (mono.empty()) mono = "1";
    out += (out.empty() ? "" : " + ") + std::string("(") + c.str() + ")*" + mono;
  }
  return out;
}

UEElement commutator(const UEElement& a, const UEElement& b) { return a * b - b * a; }

UEElement bracket(const Generator& x, const Generator& y) {
  if (x == y) return {};
  SignedGen z = bracket_codes(x.code(), y.code());
  UEElement e;
  if (!z.zero) e.add_sorted(Word(1, z.code), Rational(z.sign));
  return e;
}

UEElement normal_order(const UEElement& e) {
  UEElement out;
  for (const auto& [w, c] : e.terms()) {
    if (is_sorted_word(w))
      out.add_sorted(w, c);
    else
      out += UEElement::word(w, c);
  }
  return out;
}

std::vector<Generator> sub_generators(int n) {
  std::vector<Generator> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) out.push_back({a, b});
  return out;
}

std::vector<Generator> all_generators(int n) {
  std::vector<Generator> out;
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) out.push_back({a, b});
  return out;
}

UEElement casimir_n(int n, CasimirKind which) {
  if (n < 1) throw std::invalid_argument("casimir needs n >= 1");
  UEElement c;
  for (const auto& g : which == CasimirKind::Full ? all_generators(n) : sub_generators(n))
    c.add_sorted(Word(2, g.code()), Rational(-1));
  return c;
}

UEElement casimir(const RankContext& ctx, CasimirKind which) { return casimir_n(ctx.n, which); }

namespace {

struct ABPair {
  UEElement A;
  std::vector<UEElement> B;
};

std::mutex ab_mu;
std::map<std::pair<int, int>, ABPair> ab_memo;

ABPair ab_level(int N, int n) {
  if (N < 1) throw std::invalid_argument("build_A/build_B need N >= 1");
  {
    std::lock_guard lock(ab_mu);
    auto it = ab_memo.find({N, n});
    if (it != ab_memo.end()) return it->second;
  }
  ABPair out;
  if (N == 1) {
    for (int j = 1; j <= n; ++j) out.B.push_back(UEElement::gen(0, j));
  } else {
    ABPair prev = ab_level(N - 1, n);
    for (int k = 1; k <= n; ++k) out.A += UEElement::gen(k, 0) * prev.B[static_cast<std::size_t>(k - 1)];
    for (int j = 1; j <= n; ++j) {
      UEElement b = UEElement::gen(0, j) * prev.A;
      for (int k = 1; k <= n; ++k)
        if (k != j) b += UEElement::gen(k, j) * prev.B[static_cast<std::size_t>(k - 1)];
      out.B.push_back(std::move(b));
    }
  }
  std::lock_guard lock(ab_mu);
  ab_memo.emplace(std::make_pair(N, n), out);
  return out;
}

/// Sum over index tuples in 1..n of the word built by make(tuple); factors X_pp kill the term.
UEElement path_sum(int len, int n, const std::function<std::vector<std::pair<int, int>>(const std::vector<int>&)>& make) {
  UEElement total;
  std::vector<int> idx(static_cast<std::size_t>(len), 1);
  while (true) {
    Word w;
    int sign = 1;
    bool zero = false;
    for (auto [p, q] : make(idx)) {
      SignedGen g = signed_gen(p, q);
      if (g.zero) {
        zero = true;
        break;
      }
      sign *= g.sign;
      w.push_back(g.code);
    }
    if (!zero) total += UEElement::word(w, Rational(sign));
    int k = len - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == n) idx[static_cast<std::size_t>(k--)] = 1;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
  }
  return total;
}

}  // namespace

UEElement build_A(int N, int n) { return ab_level(N, n).A; }
std::vector<UEElement> build_B(int N, int n) { return ab_level(N, n).B; }

std::vector<UEElement> build_D(int ell, int n) {
  if (ell < 1) throw std::invalid_argument("build_D needs l >= 1");
  std::vector<UEElement> out;
  for (int j = 1; j <= n; ++j) {
    // X_{i_{l-1} 0} ... X_{i_1 i_2} X_{j i_1}
    out.push_back(path_sum(ell - 1, n, [&](const std::vector<int>& i) {
      std::vector<std::pair<int, int>> f;
      const int m = static_cast<int>(i.size());
      f.emplace_back(m ? i[static_cast<std::size_t>(m - 1)] : j, 0);
      for (int k = m - 1; k >= 1; --k) f.emplace_back(i[static_cast<std::size_t>(k - 1)], i[static_cast<std::size_t>(k)]);
      if (m) f.emplace_back(j, i[0]);
      return f;
    }));
  }
  return out;
}

UEElement build_C(int ell, int n) {
  if (ell < 1) throw std::invalid_argument("build_C needs l >= 1");
  // X_{j_l 0} X_{j_{l-1} j_l} ... X_{j_1 j_2} X_{0 j_1}
  return path_sum(ell, n, [](const std::vector<int>& jv) {
    std::vector<std::pair<int, int>> f;
    const int m = static_cast<int>(jv.size());
    f.emplace_back(jv[static_cast<std::size_t>(m - 1)], 0);
    for (int k = m - 1; k >= 1; --k) f.emplace_back(jv[static_cast<std::size_t>(k - 1)], jv[static_cast<std::size_t>(k)]);
    f.emplace_back(0, jv[0]);
    return f;
  });
}

UEElement build_Dscript(int ell, int N, int n) {
  auto D = build_D(ell, n);
  auto B = build_B(N, n);
  UEElement total;
  for (int j = 0; j < n; ++j) total += D[static_cast<std::size_t>(j)] * B[static_cast<std::size_t>(j)];
  return total;
}

UEElement ad_gn(const UEElement& e, int n) {
  UEElement out;
  for (const auto& [w, c] : e.terms()) {
    int flips = 0;
    for (char16_t x : w)
      if (Generator::from_code(x).j == n) ++flips;
    out.add_sorted(w, flips % 2 ? -c : c);
  }
  return out;
}

bool is_invariant(const UEElement& e, int n) {
  for (const auto& g : sub_generators(n))
    if (!commutator(UEElement::gen(g.i, g.j), e).is_zero()) return false;
  return ad_gn(e, n) == e;
}

}  // namespace obranch
