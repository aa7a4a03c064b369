#pragma once

#include <pbundle/integer.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pbundle {

enum class Verdict { contradiction_reproduced, survivors, mismatch };

std::string_view to_string(Verdict v);

struct ReplayStep {
  std::string description;
  std::string computed;
  std::string expected;
  bool match = true;
  /// Trace-only line; never compared against a golden value.
  bool informational = false;
};

/// Trace of a scripted replay. The verdict is mismatch iff some step does not match.
class CaseReplayResult {
 public:
  explicit CaseReplayResult(std::string case_id) : case_id_(std::move(case_id)) {}

  /// Golden comparison step.
  bool expect(std::string description, const std::string& computed, const std::string& expected);
  bool expect(std::string description, const Integer& computed, const Integer& expected);
  bool expect(std::string description, bool computed, bool expected);
  void info(std::string description, std::string value);

  /// Records the intended verdict; downgraded to mismatch if any step failed.
  void finish(Verdict intended, std::vector<std::string> survivors = {});
  /// Appends the steps and survivors of another result, prefixing descriptions.
  void absorb(const CaseReplayResult& other, const std::string& prefix);

  const std::string& case_id() const noexcept { return case_id_; }
  const std::vector<ReplayStep>& steps() const noexcept { return steps_; }
  const std::vector<std::string>& survivors() const noexcept { return survivors_; }
  Verdict verdict() const noexcept { return verdict_; }
  bool all_match() const;

 private:
  std::string case_id_;
  std::vector<ReplayStep> steps_;
  std::vector<std::string> survivors_;
  Verdict verdict_ = Verdict::mismatch;
};

/// Imported results, consumed as lookups and never re-derived.
struct CitedFact {
  std::string_view id;
  std::string_view source;
  std::string_view statement;
};

std::span<const CitedFact> cited_facts();

/// c_3 - c_1 c_2 is even for globally generated rank-3 bundles on P^3 of the relevant type.
bool cited_parity_allows(const Integer& c1, const Integer& c2, const Integer& c3);
/// False for Chern triples excluded by the classification of globally generated bundles on P^3 with c_1 = 5.
bool cited_gg_p3_allows(const Integer& c1, const Integer& c2, const Integer& c3);

CaseReplayResult replay_thmC_subcase6();
CaseReplayResult replay_thmC_r3();
CaseReplayResult replay_thmA_mod9();
CaseReplayResult replay_thmA_d2(int n);
/// replay_thmA_d2 over several n merged into one trace.
CaseReplayResult replay_thmA_d2_battery(std::span<const int> ns);
CaseReplayResult replay_thmA_d3_family();
CaseReplayResult replay_thmB_quadric();
CaseReplayResult replay_thm_cases();

/// Replay ids accepted by run_replay.
std::span<const std::string_view> replay_ids();
/// nullopt for an unknown id.
std::optional<CaseReplayResult> run_replay(std::string_view id);

/// Projective dimension of the rank <= k locus in p x q matrices.
long determinantal_dim(long p, long q, long k);
/// Projective dimension of the rank <= 2k locus in N x N alternating matrices.
long alt_rank_locus_dim(long N, long two_k);

}  // namespace pbundle
