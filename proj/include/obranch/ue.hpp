// Normal-ordered elements of U(o(n+1)) in the generators X_ij = E_ij - E_ji, 0 <= i < j <= n.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "obranch/rational.hpp"
#include "obranch/weights.hpp"

namespace obranch {

/// Canonical generator X_ij with i < j. Codes order lexicographically on (i, j).
struct Generator {
  int i = 0;
  int j = 1;
  char16_t code() const { return static_cast<char16_t>(i * 32 + j); }
  static Generator from_code(char16_t c) { return {c / 32, c % 32}; }
  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator& a, const Generator& b) { return a.code() <=> b.code(); }
};

/// A word in generator codes. Normal-ordered words are nondecreasing.
using Word = std::u16string;

struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class UEElement {
 public:
  using Terms = std::map<Word, Rational, WordOrder>;

  UEElement() = default;
  static UEElement scalar(const Rational& c);
  /// X_ij for any i != j (X_ji = -X_ij); zero when i == j.
  static UEElement gen(int i, int j);
  /// Normal form of an arbitrary word.
  static UEElement word(const Word& w, const Rational& c = Rational(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  std::size_t size() const { return terms_.size(); }

  UEElement& operator+=(const UEElement& o);
  UEElement& operator-=(const UEElement& o);
  UEElement& operator*=(const Rational& c);
  friend UEElement operator+(UEElement a, const UEElement& b) { return a += b; }
  friend UEElement operator-(UEElement a, const UEElement& b) { return a -= b; }
  friend UEElement operator*(UEElement a, const Rational& c) { return a *= c; }
  friend UEElement operator*(const Rational& c, UEElement a) { return a *= c; }
  friend UEElement operator*(const UEElement& a, const UEElement& b);
  UEElement operator-() const { return *this * Rational(-1); }
  friend bool operator==(const UEElement& a, const UEElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const UEElement& a, const UEElement& b) { return !(a == b); }

  /// Adds c times a word that is already nondecreasing.
  void add_sorted(const Word& w, const Rational& c);
  std::string str() const;

 private:
  Terms terms_;
};

UEElement commutator(const UEElement& a, const UEElement& b);

/// [X_ab, X_ij] for canonical generators, a signed generator or zero.
UEElement bracket(const Generator& x, const Generator& y);
/// Normal form of a word-level expression; elements are always stored normal-ordered, so this re-reduces termwise.
UEElement normal_order(const UEElement& e);
bool is_sorted_word(const Word& w);

/// Number of cached (sorted word, generator) reductions.
std::size_t normal_order_cache_size();

enum class CasimirKind { Full, Sub };
UEElement casimir(const RankContext& ctx, CasimirKind which);
/// Same Casimirs for an arbitrary n >= 1 (covers n = 1).
UEElement casimir_n(int n, CasimirKind which);

/// Generators X_ab with 1 <= a < b <= n.
std::vector<Generator> sub_generators(int n);
/// Generators X_ab with 0 <= a < b <= n.
std::vector<Generator> all_generators(int n);

UEElement build_A(int N, int n);
/// B_j^(N) for j = 1..n, stored at index j - 1.
std::vector<UEElement> build_B(int N, int n);
/// D_j^(l) for j = 1..n from the path sum definition.
std::vector<UEElement> build_D(int ell, int n);
/// C^(l+1) from its path sum.
UEElement build_C(int ell, int n);
/// Sum_j D_j^(l) B_j^(N).
UEElement build_Dscript(int ell, int N, int n);

/// Ad(g_n): X_ij -> -X_ij when exactly one index equals n.
UEElement ad_gn(const UEElement& e, int n);
bool is_invariant(const UEElement& e, int n);

}  // namespace obranch
