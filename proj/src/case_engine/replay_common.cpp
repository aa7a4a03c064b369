#include <pbundle/case_engine.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <utility>

namespace pbundle {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::contradiction_reproduced:
      return "contradiction_reproduced";
    case Verdict::survivors:
      return "survivors";
    case Verdict::mismatch:
      return "mismatch";
  }
  return "unknown";
}

bool CaseReplayResult::expect(std::string description, const std::string& computed, const std::string& expected) {
  const bool ok = computed == expected;
  steps_.push_back({std::move(description), computed, expected, ok, false});
  return ok;
}

bool CaseReplayResult::expect(std::string description, const Integer& computed, const Integer& expected) {
  return expect(std::move(description), computed.get_str(), expected.get_str());
}

bool CaseReplayResult::expect(std::string description, bool computed, bool expected) {
  return expect(std::move(description), std::string(computed ? "true" : "false"), std::string(expected ? "true" : "false"));
}

void CaseReplayResult::info(std::string description, std::string value) {
  steps_.push_back({std::move(description), value, value, true, true});
}

bool CaseReplayResult::all_match() const {
  return std::all_of(steps_.begin(), steps_.end(), [](const ReplayStep& s) { return s.match; });
}

void CaseReplayResult::finish(Verdict intended, std::vector<std::string> survivors) {
  survivors_ = std::move(survivors);
  verdict_ = all_match() ? intended : Verdict::mismatch;
}

void CaseReplayResult::absorb(const CaseReplayResult& other, const std::string& prefix) {
  for (ReplayStep s : other.steps_) {
    s.description = prefix + s.description;
    steps_.push_back(std::move(s));
  }
  for (const auto& s : other.survivors_) survivors_.push_back(prefix + s);
}

namespace {

constexpr std::array<CitedFact, 7> kFacts = {{
    {"gg_parity", "Anghel-Coanda-Manolache, globally generated vector bundles on P^3 with c_1 = 5",
     "c_3 - c_1 c_2 is even for the bundles considered"},
    {"gg_p3_c1_5", "Anghel-Coanda-Manolache, globally generated vector bundles on P^3 with c_1 = 5",
     "no globally generated bundle on P^3 has (c_1, c_2, c_3) = (5, 10, 14)"},
    {"index_bound", "Kobayashi-Ochiai", "a Fano manifold of dimension N other than P^N and the quadric has index at most N-1"},
    {"quadratic_bound", "Ionescu, manifolds defined by quadratic equations", "m <= 2(n+r)/3 when d = 2"},
    {"netsvetaev", "Netsvetaev, projective varieties defined by few equations", "m < 3(n+r)/4 - 1/2 when r >= n/d + 1"},
    {"degree_codim", "Park, degree bound for nondegenerate subvarieties", "e >= 2 codim(W) + 2 when 2 <= codim <= m-2 and e >= codim + 3"},
    {"barth_larsen", "Barth-Larsen", "H^2 of a smooth codimension-c subvariety of P^N agrees with P^N when 2 <= 2 dim - N"},
}};

}  // namespace

std::span<const CitedFact> cited_facts() { return kFacts; }

bool cited_parity_allows(const Integer& c1, const Integer& c2, const Integer& c3) {
  const Integer v = c3 - c1 * c2;
  return mpz_even_p(v.get_mpz_t()) != 0;
}

bool cited_gg_p3_allows(const Integer& c1, const Integer& c2, const Integer& c3) {
  static const std::array<std::array<long, 3>, 1> excluded = {{{5, 10, 14}}};
  for (const auto& t : excluded) {
    if (c1 == t[0] && c2 == t[1] && c3 == t[2]) return false;
  }
  return true;
}

long determinantal_dim(long p, long q, long k) { return k * (p + q - k) - 1; }

long alt_rank_locus_dim(long N, long two_k) {
  const long c = N - two_k;
  return N * (N - 1) / 2 - 1 - c * (c - 1) / 2;
}

namespace {

constexpr std::array<std::string_view, 7> kReplayIds = {
    "thmA_d2", "thmA_d3_family", "thmA_mod9", "thmB_quadric", "thmC_r3", "thmC_subcase6", "thm_cases",
};

}  // namespace

std::span<const std::string_view> replay_ids() { return kReplayIds; }

std::optional<CaseReplayResult> run_replay(std::string_view id) {
  if (id == "thmA_d2") {
    static const std::array<int, 6> ns = {10, 12, 14, 16, 18, 20};
    return replay_thmA_d2_battery(ns);
  }
  if (id == "thmA_d3_family") return replay_thmA_d3_family();
  if (id == "thmA_mod9") return replay_thmA_mod9();
  if (id == "thmB_quadric") return replay_thmB_quadric();
  if (id == "thmC_r3") return replay_thmC_r3();
  if (id == "thmC_subcase6") return replay_thmC_subcase6();
  if (id == "thm_cases") return replay_thm_cases();
  return std::nullopt;
}

}  // namespace pbundle
