#pragma once

#include <pbundle/constraints.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pbundle {

/// Closed integer interval; lo > hi is the empty range.
struct IntRange {
  long lo = 0;
  long hi = -1;

  bool empty() const noexcept { return lo > hi; }
  long size() const noexcept { return empty() ? 0 : hi - lo + 1; }
  bool contains(long x) const noexcept { return lo <= x && x <= hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Pseudo-constraint id enabling residue certification of the Chern completion.
inline constexpr std::string_view kRankResidue = "rank_residue";

struct EnumerationQuery {
  IntRange n{1, 4};
  IntRange r{1, 8};
  IntRange d{2, 3};
  /// Optional ranges; a forced value outside a given range drops the tuple.
  std::optional<IntRange> alpha;
  std::optional<IntRange> tau;
  std::optional<IntRange> m;
  /// Ample regime only: the a values tried (default 2..4).
  std::optional<IntRange> a;

  bool nonample_only = true;
  bool y_is_projective_space = true;
  /// Nonlinearity of the center outside the Y = P^{n+r} regime.
  bool w_nonlinear = true;
  /// Assume Hartshorne's conjecture: 3m <= 2(n+r) for nonlinear centers in projective space.
  bool hartshorne = false;
  /// Apply the cited codimension bounds for centers defined by few equations.
  bool cited_bounds = false;
  /// Standing c_1 >= 6, r >= 2 assumption; smaller cases are delegated to the registry.
  bool c1_at_least_6 = false;

  /// Subset of constraint ids (plus rank_residue); nullopt runs everything.
  std::optional<std::vector<std::string>> constraints;

  long long budget = 10'000'000;
  /// Free Segre values are searched in [-segre_bound, segre_bound].
  int segre_bound = 24;
  /// Chern candidates examined per tuple before giving up on a witness.
  long long witness_budget = 200'000;
  /// Residue tuples examined per modulus during certification.
  long long residue_budget = 2'000'000;
  int threads = 1;

  /// Throws InvalidInput on a malformed query.
  void validate() const;
  /// Tuple count the budget is compared against.
  long long tuple_count() const;
};

enum class SurvivorStatus { witness, undetermined };

std::string_view to_string(SurvivorStatus s);

struct Survivor {
  SetupParams params;
  ConstraintReport report;
  SurvivorStatus status = SurvivorStatus::witness;
  std::vector<std::string> tags;
};

struct EnumerationResult {
  std::vector<Survivor> survivors;
  long long tuples_examined = 0;
  /// Elimination counts keyed by reason.
  std::map<std::string, long long> eliminated;
};

/// Throws RangeTooLarge when tuple_count() exceeds the budget.
EnumerationResult enumerate(const EnumerationQuery& q);

/// (n, r, d, m, a, b, tau, alpha) rendered as text.
std::string signature_key(const SetupParams& p);

}  // namespace pbundle
