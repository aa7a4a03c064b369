#include <pbundle/betti.hpp>
#include <pbundle/case_engine.hpp>
#include <pbundle/chow_ring.hpp>
#include <pbundle/errors.hpp>
#include <pbundle/poly.hpp>

#include <random>
#include <sstream>

namespace pbundle {

namespace {

std::string residue_tuple(const std::vector<Integer>& xs) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i].get_str();
  os << ')';
  return os.str();
}

bool in_interval(long x, long lo, long hi) { return lo <= x && x <= hi; }

/// Membership in the index set of pushforward classes for the d = 2 argument.
bool in_pushforward_set(long n, long r, long m, long g, long k, long i) {
  if (k < 1 || k > n + r) return false;
  if (i < 0 || i > std::min(n / 2 - 1, k - 1)) return false;
  const long j = k - i - 1;
  return in_interval(j, 0, m) && !in_interval(j, n / 2, n / 2 + g - 1);
}

}  // namespace

CaseReplayResult replay_thmA_mod9() {
  CaseReplayResult res("thmA_mod9");
  constexpr int n = 9, r = 3, d = 3;
  const Integer c1 = 7, alpha = 1, nine = 9;

  std::vector<Integer> forced;
  for (int i = 6; i <= n; ++i) forced.push_back(sign_power(i) * ipow(d, n - i) * alpha);
  res.expect("forced Segre values (s6, s7, s8, s9)", residue_tuple(forced), "(27, -9, 3, -1)");
  std::vector<Integer> target;
  for (const auto& s : forced) target.push_back(mod_floor(s, nine));
  res.expect("targets mod 9", residue_tuple(target), "(0, 0, 3, 8)");

  // Symbolic trace; only c_0 and c_1 of Q reach degrees 8 and 9.
  const ResiduePolynomial q_low(nine, {1, c1});
  const ResiduePolynomial tail(nine, {0, 0, 0, 0, 0, 0, 0, 0, 3, -1});
  res.expect("Q (3t^8 - t^9) mod (9, t^10)", (q_low * tail).truncated(9).to_string(),
             ResiduePolynomial(nine, {0, 0, 0, 0, 0, 0, 0, 0, 3, 2}).to_string());
  res.expect("(1+t)^9 mod 3", residue_reduce(poly_pow(IntPolynomial{1, 1}, 9), 3).to_string(),
             ResiduePolynomial(3, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1}).to_string());
  res.info("mod 3 factorization", "Q = (1+t)^4, R = (1+t)^5 mod 3, so (1+t)^2 divides QR mod 9");
  const IntPolynomial S{1, -1, 1, -1, 1, -1, 1, -1, -2};
  const IntPolynomial QR{1, 0, 0, 0, 0, 0, 0, 0, -3, -2};
  res.expect("(1+t) S(t) = 1 - 3t^8 - 2t^9", (IntPolynomial{1, 1} * S).to_string(), QR.to_string());
  const Integer s_at = evaluate(S, Integer(-1));
  res.expect("S(-1)", s_at, Integer(6));
  res.expect("9 | S(-1)", divides(nine, s_at), false);

  // Exhaustion over residues of (c2, c3, c4).
  long survivors = 0, tuples = 0;
  for (long c2 = 0; c2 < 9; ++c2) {
    for (long c3 = 0; c3 < 9; ++c3) {
      for (long c4 = 0; c4 < 9; ++c4) {
        ++tuples;
        const ResiduePolynomial c(nine, {1, c1, c2, c3, c4});
        const ResiduePolynomial s = series_inverse(c, n);
        bool hit = true;
        for (int i = 6; i <= n && hit; ++i) hit = s.coeff(i) == target[i - 6];
        if (hit) ++survivors;
      }
    }
  }
  res.expect("residue tuples examined", Integer(tuples), Integer(729));
  res.expect("residue tuples meeting the targets", Integer(survivors), Integer(0));
  (void)r;
  res.finish(Verdict::contradiction_reproduced);
  return res;
}

CaseReplayResult replay_thmA_d2(int n) {
  if (n < 10 || n % 2 != 0) throw InvalidInput("replay_thmA_d2 needs an even n >= 10");
  CaseReplayResult res("thmA_d2");
  std::mt19937_64 rng(0x5eed0000ULL + static_cast<unsigned>(n));
  std::uniform_int_distribution<long> tail(-50, 50);
  const long half = n / 2;
  const long codim = half + 1;

  for (long g = 0; g <= 3; ++g) {
    const std::string tag = "n=" + std::to_string(n) + ",g=" + std::to_string(g) + ": ";
    const long r = half + g, m = n + g - 1;
    const BettiProfile prof = poincare_profile(n, static_cast<int>(r), 2);
    const IntPolynomial expected_prof = poly_mul(IntPolynomial::constant(1) + IntPolynomial::monomial(1, half),
                                                 IntPolynomial(std::vector<Integer>(r, Integer(1))));
    res.expect(tag + "profile", IntPolynomial(prof.a).to_string(), expected_prof.to_string());
    res.expect(tag + "profile support ends at m", check_support(prof, static_cast<int>(m)).pass, true);
    res.expect(tag + "(n/2+g, g) in S", in_pushforward_set(n, r, m, g, half + g, g), true);
    res.expect(tag + "(n/2+g+1, 0) in S", in_pushforward_set(n, r, m, g, half + g + 1, 0), true);

    // U^r (2U - H_1) in normal form for random Chern tails.
    bool constant = true, tail_ok = true;
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Integer> c(n + 1, Integer(0));
      c[0] = 1;
      c[1] = codim;
      for (long i = 2; i <= r + 1; ++i) c[i] = tail(rng);
      const ChowRing ring(ChernData(n, static_cast<int>(r + 1), c));
      RawClass raw = RawClass::monomial(0, static_cast<int>(r)).times(RawClass::linear({-1, 2}), n);
      const ChowClass x = ring.normal_form(raw);
      if (x.coefficient(1, static_cast<int>(r)) != n + 1) constant = false;
      for (long i = 2; i <= r + 1; ++i)
        if (x.coefficient(static_cast<int>(i), static_cast<int>(r + 1 - i)) != sign_power(i - 1) * 2 * c[i]) tail_ok = false;
    }
    res.expect(tag + "H1 U^r coefficient is n+1 for 100 random tails", constant, true);
    res.expect(tag + "H1^i U^(r+1-i) coefficient is (-1)^(i-1) 2 c_i", tail_ok, true);

    std::vector<Integer> es;
    for (long e = codim + 1; e <= n + 1; ++e)
      if ((n + 1) % e == 0) es.push_back(e);
    res.expect(tag + "degrees e | n+1 with e >= codim+1", residue_tuple(es), "(" + std::to_string(n + 1) + ")");
    const long e = n + 1;
    res.expect(tag + "2 <= codim <= m-2", 2 <= codim && codim <= m - 2, true);
    res.expect(tag + "e >= codim+3", e >= codim + 3, true);
    res.expect(tag + "cited degree bound e >= 2 codim + 2", e >= 2 * codim + 2, false);
  }
  res.finish(Verdict::contradiction_reproduced);
  return res;
}

CaseReplayResult replay_thmA_d2_battery(std::span<const int> ns) {
  CaseReplayResult res("thmA_d2");
  for (int n : ns) res.absorb(replay_thmA_d2(n), "");
  res.finish(Verdict::contradiction_reproduced);
  return res;
}

CaseReplayResult replay_thmA_d3_family() {
  CaseReplayResult res("thmA_d3_family");

  // ((d-1)/d - 3/4) n + r/4 < 1/2
  auto inequality = [](long n, long d, long r) {
    return (Rational(d - 1, d) - Rational(3, 4)) * n + Rational(r, 4) < Rational(1, 2);
  };
  long d4_hits = 0;
  for (long d = 4; d <= 12; ++d)
    for (long n = d; n <= 60; n += d)
      for (long r = 2; r <= n + 2; ++r)
        if (inequality(n, d, r)) ++d4_hits;
  res.expect("(n, d, r) with d >= 4, r >= 2 meeting the inequality", Integer(d4_hits), Integer(0));
  res.expect("d=4, n=4, r=2", inequality(4, 4, 2), false);

  bool bound_ok = true;
  for (long n = 3; n <= 60; n += 3)
    for (long r = n / 3; r <= n + 2; ++r)
      if (inequality(n, 3, r) != (3 * r < n + 6)) bound_ok = false;
  res.expect("for d=3 the inequality is r < n/3 + 2", bound_ok, true);

  std::vector<std::string> survivors;
  for (int n : {6, 9, 12, 15}) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    const BettiProfile plus = poincare_profile(n, n / 3 + 1, 3);
    const CheckOutcome hl = check_hard_lefschetz(plus);
    res.expect(tag + "r = n/3+1 fails Hard Lefschetz", hl.pass, false);
    res.expect(tag + "first failing index", hl.failing_index ? std::to_string(*hl.failing_index) : "none", std::to_string(n / 3));
    res.expect(tag + "(a_{n/3}, a_{n/3+1})", plus.a.at(n / 3).get_str() + "," + plus.a.at(n / 3 + 1).get_str(), "2,1");
    const BettiProfile eq = poincare_profile(n, n / 3, 3);
    res.expect(tag + "r = n/3 profile matches P^{n-1}", eq == BettiProfile{std::vector<Integer>(n, Integer(1))}, true);
    survivors.push_back("n=" + std::to_string(n) + ",d=3,r=" + std::to_string(n / 3) + ": requires Hartshorne or mod-9 replay");
  }
  res.expect("n=6, r=3 profile", poincare_profile(6, 3, 3).to_string(),
             BettiProfile{{1, 1, 2, 1, 2, 1, 1}}.to_string());
  res.finish(Verdict::survivors, survivors);
  return res;
}

}  // namespace pbundle
