#include <pbundle/case_engine.hpp>
#include <pbundle/chow_ring.hpp>
#include <pbundle/constraints.hpp>
#include <pbundle/poly.hpp>

#include <sstream>

namespace pbundle {

namespace {

/// p + q*alpha over Q.
struct Affine {
  Rational p, q;
  Rational at(const Integer& alpha) const { return p + q * Rational(alpha); }
  friend Affine operator+(const Affine& x, const Affine& y) { return {x.p + y.p, x.q + y.q}; }
  friend Affine operator-(const Affine& x, const Affine& y) { return {x.p - y.p, x.q - y.q}; }
  friend Affine operator*(const Rational& k, const Affine& x) { return {k * x.p, k * x.q}; }
};

std::string affine_string(const Affine& x) {
  std::ostringstream os;
  os << x.p.get_str() << " + (" << x.q.get_str() << ")*alpha";
  return os.str();
}

std::string int_set(const std::vector<Integer>& xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i].get_str();
  os << '}';
  return os.str();
}

bool is_integral(const Rational& x) { return x.get_den() == 1; }

/// Chern classes from Segre classes over Q, truncated at degree n.
std::vector<Rational> chern_over_q(const std::vector<Rational>& s) {
  std::vector<Rational> c(s.size());
  c[0] = 1;
  for (std::size_t k = 1; k < s.size(); ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += s[i] * c[k - i];
    c[k] = -acc;
  }
  return c;
}

std::string linear_form_string(const std::vector<Integer>& lam, const Integer& s1) {
  // s_0 = 1 and s_1 are fixed; remaining coefficients stay symbolic.
  std::ostringstream os;
  for (std::size_t k = lam.size(); k-- > 2;) os << lam[k].get_str() << "*s" << k << " + ";
  Integer constant = lam[0] + (lam.size() > 1 ? lam[1] * s1 : Integer(0));
  os << constant.get_str();
  return os.str();
}

}  // namespace

CaseReplayResult replay_thmC_subcase6() {
  CaseReplayResult res("thmC_subcase6");
  constexpr int n = 3, r = 2, m = 3;
  const Integer c1 = 5;

  res.expect("C(n+r-1, n)", binomial(n + r - 1, n), Integer(4));
  res.expect("m <= 2 would force a^2 | C(n+r-2, n)", binomial(n + r - 2, n), Integer(1));

  // Codimension equation with m = 3: n+r-m-1 = a(n+1-c1) + b(r+1).
  std::vector<Integer> a_cands;
  for (long a = 2; a <= 4; ++a) {
    const Integer rhs = Integer(n + r - m - 1) - Integer(a) * (n + 1 - c1);
    if (divides(Integer(a), binomial(n + r - 1, n)) && divides(Integer(r + 1), rhs)) a_cands.push_back(a);
  }
  res.expect("a >= 2 with a | C(n+r-1, n) and the codimension equation solvable", int_set(a_cands), "{2}");
  const Integer a = 2;
  const Integer b = (Integer(n + r - m - 1) - a * (n + 1 - c1)) / (r + 1);
  res.expect("b", b, Integer(1));
  res.expect("a^r divides alpha", ipow(a, r), Integer(4));

  // tau = d(n+1-c1) + (r+1)(1+bd)/a; index bound tau <= n+r-1.
  std::vector<Integer> d_cands;
  for (long d = 1; d <= 50; ++d) {
    const Integer num = 1 + b * d;
    if (!divides(a, num)) continue;
    const Integer tau = Integer(d) * (n + 1 - c1) + (r + 1) * (num / a);
    if (tau <= n + r - 1) d_cands.push_back(d);
  }
  res.expect("d with a | 1+bd and tau <= n+r-1", int_set(d_cands), "{1, 3, 5}");

  std::vector<Integer> d_ok;
  bool printed_agrees = true;
  for (const auto& d : d_cands) {
    bool all = true;
    for (long s2 = -16; s2 <= 16; ++s2) {
      const Integer v = adivide_iv_value(n, r, a, b, d, c1, s2);
      if (mod_floor(v, 8) != mod_floor(Integer(-50) * d + 6, 8)) printed_agrees = false;
      if (!divides(Integer(8), v)) all = false;
    }
    if (all) d_ok.push_back(d);
  }
  res.expect("third adivide value is congruent to 6 - 50d mod 8 for all s2", printed_agrees, true);
  res.expect("d surviving a^3 | third adivide value", int_set(d_ok), "{3}");
  const Integer d = 3;
  const Integer tau = d * (n + 1 - c1) + (r + 1) * ((1 + b * d) / a);
  res.expect("tau", tau, Integer(3));

  const BasisChange bc(a, b, d);
  const LinearClass E = bc.exceptional();
  const LinearClass H2 = bc.h2();
  res.expect("E in (H1, U)", to_string(E), to_string(LinearClass{-2, 3}));
  res.expect("H2 in (H1, U)", to_string(H2), to_string(LinearClass{-1, 2}));

  const RawClass eh4 = RawClass::linear(E).times(RawClass::power(H2, 4, n), n);
  const auto form_e = segre_linear_form(eh4, n, r);
  res.expect("E H2^4 as a form in s2, s3", linear_form_string(form_e, -c1), "-48*s3 + -128*s2 + 608");
  const auto form_h = segre_linear_form(RawClass::power(H2, 5, n), n, r);
  res.expect("H2^5 as a form in s2, s3", linear_form_string(form_h, -c1), "-32*s3 + -80*s2 + 360");

  // E H2^{n+r-1} = 0 and H2^{n+r} = alpha.
  const Integer ce = form_e[0] + form_e[1] * (-c1);
  Integer g = gcd(gcd(form_e[3], form_e[2]), ce);
  std::ostringstream eq3;
  eq3 << Integer(-form_e[3] / g).get_str() << " s3 + " << Integer(-form_e[2] / g).get_str() << " s2 = " << Integer(ce / g).get_str();
  res.expect("relation from E H2^4 = 0", eq3.str(), "3 s3 + 8 s2 = 38");
  const Integer ch = form_h[0] + form_h[1] * (-c1);
  std::ostringstream eq4;
  eq4 << Integer(-form_h[3]).get_str() << " s3 + " << Integer(-form_h[2]).get_str() << " s2 = " << ch.get_str() << " - alpha";
  res.expect("relation from H2^5 = alpha", eq4.str(), "32 s3 + 80 s2 = 360 - alpha");

  // Cramer's rule, affine in alpha.
  const Rational A11 = Rational(-form_e[3]), A12 = Rational(-form_e[2]);
  const Rational A21 = Rational(-form_h[3]), A22 = Rational(-form_h[2]);
  const Affine B1{Rational(ce), 0}, B2{Rational(ch), -1};
  const Rational det = A11 * A22 - A12 * A21;
  const Affine s3 = (1 / det) * (A22 * B1 - A12 * B2);
  const Affine s2 = (1 / det) * (A11 * B2 - A21 * B1);
  res.expect("s2(alpha)", affine_string(s2), affine_string({Rational(17, 2), Rational(3, 16)}));
  res.expect("s3(alpha)", affine_string(s3), affine_string({-10, Rational(-1, 2)}));
  const Affine c2 = Affine{Rational(c1 * c1), 0} - s2;
  const Affine c3 = Affine{0, 0} - s3 + Rational(c1) * c2 - Rational(c1) * s2;
  res.expect("c2(alpha)", affine_string(c2), affine_string({Rational(33, 2), Rational(-3, 16)}));
  res.expect("c3(alpha)", affine_string(c3), affine_string({50, Rational(-11, 8)}));

  long disagreements = 0;
  std::vector<Integer> survivors;
  for (long al = 1; al <= 64; ++al) {
    const Integer alpha = al;
    const auto c = chern_over_q({1, Rational(-c1), s2.at(alpha), s3.at(alpha)});
    if (c[2] != c2.at(alpha) || c[3] != c3.at(alpha)) ++disagreements;
    if (!is_integral(s2.at(alpha)) || !is_integral(s3.at(alpha))) continue;
    if (!divides(ipow(a, r), alpha) || c3.at(alpha) <= 0) continue;
    survivors.push_back(alpha);
  }
  res.expect("closed forms agree with series inversion for alpha in 1..64", Integer(disagreements), Integer(0));
  res.expect("alpha in 1..64 with integral classes, a^r | alpha and c3 > 0", int_set(survivors), "{8, 24}");

  std::vector<std::string> left;
  for (const auto& alpha : survivors) {
    const Integer k2 = c2.at(alpha).get_num(), k3 = c3.at(alpha).get_num();
    SetupParams p;
    p.n = n;
    p.r = r;
    p.m = m;
    p.d = d;
    p.a = a;
    p.b = b;
    p.tau = tau;
    p.alpha = alpha;
    p.chern = ChernData(n, r + 1, {1, c1, k2, k3});
    const std::string tag = "alpha=" + alpha.get_str() + ": ";
    res.expect(tag + "derived constraints all pass", run_all(p).all_pass(), true);
    res.expect(tag + "(c2, c3)", "(" + k2.get_str() + ", " + k3.get_str() + ")", alpha == 8 ? "(15, 39)" : "(12, 17)");
    const bool parity = cited_parity_allows(c1, k2, k3);
    const bool gg = cited_gg_p3_allows(c1, s2.at(alpha).get_num(), -s3.at(alpha).get_num());
    res.expect(tag + "cited parity lookup allows", parity, alpha == 8);
    res.expect(tag + "cited classification lookup allows (-s1, s2, -s3)", gg, alpha != 8);
    if (parity && gg) left.push_back(tag + "not excluded");
  }
  res.finish(left.empty() ? Verdict::contradiction_reproduced : Verdict::survivors, left);
  return res;
}

CaseReplayResult replay_thmC_r3() {
  CaseReplayResult res("thmC_r3");
  constexpr int n = 3, r = 3;
  const Integer c1 = 5;

  std::vector<Integer> a_cands;
  for (long a = 2; a <= 10; ++a)
    if (divides(Integer(a), binomial(n + r - 1, n))) a_cands.push_back(a);
  res.expect("a >= 2 dividing C(n+r-1, n)", int_set(a_cands), "{2, 5, 10}");

  // Codim 2 would need (r+1) | a+1 from n+r-m-1 = 1 = -a + b(r+1).
  std::vector<Integer> codim2;
  for (const auto& a : a_cands)
    if (divides(Integer(r + 1), a + 1)) codim2.push_back(a);
  res.expect("a allowing codimension 2", int_set(codim2), "{}");

  std::vector<Integer> a_ok;
  for (const auto& a : a_cands)
    if (divides(a * a, binomial(n + r - 2, n))) a_ok.push_back(a);
  res.expect("a with a^2 | C(n+r-2, n)", int_set(a_ok), "{2}");
  const Integer a = 2;
  // m ranges over codim >= 3, i.e. m <= 2; b from 1 + bd = 0 mod a and 0 < b < a.
  const Integer b = 1;

  long hits = 0;
  bool residue_two = true;
  for (long d = 1; d <= 99; d += 2) {
    for (long s2 = -20; s2 <= 20; ++s2) {
      const Integer v = adivide_iv_value(n, r, a, b, d, c1, s2);
      if (divides(Integer(8), v)) ++hits;
      if (mod_floor(v, 4) != 2) residue_two = false;
    }
  }
  res.expect("third adivide value is 2 mod 4 for odd d", residue_two, true);
  res.expect("(d, s2) with a^3 | third adivide value", Integer(hits), Integer(0));

  long printed = 0;
  for (long d = 1; d <= 99; ++d)
    if (divides(Integer(4), Integer(20 * d + 10))) ++printed;
  res.expect("d with 4 | 20d + 10", Integer(printed), Integer(0));
  res.finish(Verdict::contradiction_reproduced);
  return res;
}

}  // namespace pbundle
