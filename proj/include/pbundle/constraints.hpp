#pragma once

#include <pbundle/chern_segre.hpp>
#include <pbundle/chow_ring.hpp>
#include <pbundle/integer.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pbundle {

struct SetupFlags {
  bool y_is_projective_space = false;
  bool w_nonlinear = false;
  bool e_nonample = false;

  friend bool operator==(const SetupFlags&, const SetupFlags&) = default;
};

/// Numerical signature of X = P(E) -> P^n that is also the blow-up of Y along W.
struct SetupParams {
  int n = 1;
  int r = 1;
  int m = 0;
  Integer d = 1;
  Integer a = 1;
  Integer b = 0;
  Integer tau = 1;
  Integer alpha = 1;
  std::optional<Integer> deg_w;
  ChernData chern;
  SetupFlags flags;

  int codim() const { return n + r - m; }
  /// Throws InvalidInput when an invariant is violated.
  void validate() const;
  BasisChange basis() const { return BasisChange(a, b, d); }

  friend bool operator==(const SetupParams&, const SetupParams&) = default;
};

enum class Status { pass, fail, not_applicable };

std::string_view to_string(Status s);

struct ConstraintEntry {
  std::string id;
  Status status = Status::not_applicable;
  std::string witness;
};

class ConstraintReport {
 public:
  ConstraintReport() = default;
  /// Sorts the entries by id.
  explicit ConstraintReport(std::vector<ConstraintEntry> entries);

  const std::vector<ConstraintEntry>& entries() const noexcept { return entries_; }
  const ConstraintEntry* find(std::string_view id) const;
  bool all_pass() const;
  std::vector<std::string> failures() const;

 private:
  std::vector<ConstraintEntry> entries_;
};

inline constexpr std::string_view kAlphaDivisibility = "alpha_divisibility";
inline constexpr std::string_view kBettiHardLefschetz = "betti_hard_lefschetz";
inline constexpr std::string_view kBettiNOverD = "betti_n_over_d";
inline constexpr std::string_view kBettiProfile = "betti_profile";
inline constexpr std::string_view kBettiSupport = "betti_support";
inline constexpr std::string_view kBinomialDivisibility = "binomial_divisibility";
inline constexpr std::string_view kCodimEquation = "codim_equation";
inline constexpr std::string_view kIndexEquation = "index_equation";
inline constexpr std::string_view kPnTarget = "pn_target";
inline constexpr std::string_view kRankVanishing = "rank_vanishing";
inline constexpr std::string_view kSegreFormulas = "segre_formulas";
inline constexpr std::string_view kVanishingSuite = "vanishing_suite";

/// Every id produced by run_all, sorted.
std::span<const std::string_view> constraint_ids();

ConstraintEntry check_index_equation(const SetupParams& p);
ConstraintEntry check_codim_equation(const SetupParams& p);
ConstraintEntry check_alpha_divisibility(const SetupParams& p);
ConstraintEntry check_pn_target(const SetupParams& p);
ConstraintEntry check_rank_vanishing(const SetupParams& p);
ConstraintEntry check_vanishing_suite(const SetupParams& p);
ConstraintEntry check_segre_formulas(const SetupParams& p);
ConstraintEntry check_binomial_divisibility(const SetupParams& p);
/// The four betti entries; not_applicable unless Y is projective space.
std::vector<ConstraintEntry> check_betti(const SetupParams& p);

ConstraintReport run_all(const SetupParams& p);
/// Only the listed ids; unknown ids raise InvalidInput.
ConstraintReport run_selected(const SetupParams& p, std::span<const std::string> ids);

/// Quantity whose divisibility by a^3 is required (third adivide check).
Integer adivide_iv_value(int n, int r, const Integer& a, const Integer& b, const Integer& d, const Integer& c1, const Integer& s2);

/// Nonample case: (d, c_1) forced by (n, r, m, tau); nullopt if d is not integral.
std::optional<std::pair<Integer, Integer>> derive_nonample_d_c1(int n, int r, int m, const Integer& tau);

/// deg_W read off the Segre slot c_1-2, if that slot exists.
std::optional<Integer> segre_back_solved_degree(const SetupParams& p);

/// (-1)^{codim-1} E^{codim} H_2^m.
Integer degree_from_exceptional(const SetupParams& p);

}  // namespace pbundle
