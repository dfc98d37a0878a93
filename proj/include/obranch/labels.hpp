// Labels of irreducible representations of O(N) by highest weight and sign.
#pragma once

#include <string>
#include <vector>

#include "obranch/weights.hpp"

namespace obranch {

enum class GroupTag { OOdd, OEven };

/// F(mu)_sign of O(N).
/// N odd: sign is eps, and -I acts by eps * (-1)^|mu|.
/// N even: sign is 0 when mu_r >= 1 (det-invariant), otherwise +1 for the constituent of F^{(x)|mu|} and -1 for its det twist.
struct FDLabel {
  int N = 1;
  std::vector<int> mu;
  int sign = 1;

  int rank() const { return N / 2; }
  GroupTag tag() const { return N % 2 ? GroupTag::OOdd : GroupTag::OEven; }
  int size() const;  ///< |mu|
  bool needs_sign() const;
  std::string str() const;
  friend bool operator==(const FDLabel&, const FDLabel&) = default;
  friend auto operator<=>(const FDLabel&, const FDLabel&) = default;
};

/// Validates dominance, length and sign conventions. Throws std::invalid_argument.
void validate(const FDLabel& label);
FDLabel make_label(int N, std::vector<int> mu, int sign = 1);

/// rho of O(N): coordinates N/2 - i.
Weight rho_of(int N);
/// lambda = mu + rho.
Weight inf_char_of(const FDLabel& label);
/// ||lambda||^2 - ||rho||^2.
Rational casimir_scalar(const FDLabel& label);

/// All labels of O(N) with mu_1 <= max_first.
std::vector<FDLabel> labels_up_to(int N, int max_first);

}  // namespace obranch
