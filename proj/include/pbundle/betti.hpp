#pragma once

#include <pbundle/integer.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pbundle {

/// Even Betti numbers a_0..a_m of the blow-up center.
struct BettiProfile {
  std::vector<Integer> a;

  int dimension() const { return static_cast<int>(a.size()) - 1; }
  std::string to_string() const;
  friend bool operator==(const BettiProfile&, const BettiProfile&) = default;
};

struct CheckOutcome {
  bool pass = true;
  std::string witness;
  /// For Hard Lefschetz: the first k with a_k > a_{k+1}.
  std::optional<int> failing_index;
};

/// Coefficients of (t^n - 1)(t^r - 1) / ((t^{n/d} - 1)(t - 1)).
/// NotDivisible if d does not divide n; InexactDivision if the quotient is not a polynomial.
BettiProfile poincare_profile(int n, int r, int d);

/// a_i > 0 exactly for 0 <= i <= m.
CheckOutcome check_support(const BettiProfile& prof, int m);

CheckOutcome check_n_over_d_leq_r(int n, int d, int r);

/// a_k <= a_{k+1} for every k with 2k < m.
CheckOutcome check_hard_lefschetz(const BettiProfile& prof);

}  // namespace pbundle
