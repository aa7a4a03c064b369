#include <pbundle/betti.hpp>
#include <pbundle/constraints.hpp>
#include <pbundle/errors.hpp>
#include <pbundle/poly.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>

namespace pbundle {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::not_applicable:
      return "not_applicable";
  }
  return "unknown";
}

void SetupParams::validate() const {
  auto bad = [](const std::string& msg) { throw InvalidInput("SetupParams: " + msg); };
  if (n < 1) bad("n must be at least 1");
  if (r < 1) bad("r must be at least 1");
  if (m < 0 || m > n + r - 2) bad("need 0 <= m <= n+r-2, got m = " + std::to_string(m));
  (void)basis();
  if (tau < 1) bad("tau must be at least 1");
  if (alpha < 1) bad("alpha must be at least 1");
  if (deg_w && *deg_w < 1) bad("deg_W must be positive");
  if (chern.n() != n) bad("chern data lives on P^" + std::to_string(chern.n()) + ", expected P^" + std::to_string(n));
  if (chern.rank() != r + 1) bad("chern rank " + std::to_string(chern.rank()) + " differs from r+1 = " + std::to_string(r + 1));
  if (flags.e_nonample != (a == 1 && b == 0)) bad("e_nonample must hold exactly when a = 1 and b = 0");
}

ConstraintReport::ConstraintReport(std::vector<ConstraintEntry> entries) : entries_(std::move(entries)) {
  std::stable_sort(entries_.begin(), entries_.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
}

const ConstraintEntry* ConstraintReport::find(std::string_view id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

bool ConstraintReport::all_pass() const {
  return std::none_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.status == Status::fail; });
}

std::vector<std::string> ConstraintReport::failures() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) {
    if (e.status == Status::fail) out.push_back(e.id);
  }
  return out;
}

namespace {

constexpr std::array<std::string_view, 12> kIds = {
    kAlphaDivisibility, kBettiHardLefschetz, kBettiNOverD, kBettiProfile,  kBettiSupport,  kBinomialDivisibility,
    kCodimEquation,     kIndexEquation,      kPnTarget,    kRankVanishing, kSegreFormulas, kVanishingSuite,
};

ConstraintEntry entry(std::string_view id, bool ok, std::string witness) {
  return {std::string(id), ok ? Status::pass : Status::fail, std::move(witness)};
}

ConstraintEntry not_applicable(std::string_view id, std::string why) {
  return {std::string(id), Status::not_applicable, std::move(why)};
}

Integer e_ratio(const SetupParams& p) { return (1 + p.b * p.d) / p.a; }

Integer top_number(const SetupParams& p, const ChowRing& ring, int e_power) {
  const BasisChange bc = p.basis();
  const int top = p.n + p.r;
  RawClass raw = RawClass::power(bc.exceptional(), e_power, p.n).times(RawClass::power(bc.h2(), top - e_power, p.n), p.n);
  return ring.intersection_number(ring.normal_form(raw));
}

}  // namespace

std::span<const std::string_view> constraint_ids() { return kIds; }

ConstraintEntry check_index_equation(const SetupParams& p) {
  const Integer c1 = p.chern[1];
  const Integer rhs = p.d * (p.n + 1 - c1) + (p.r + 1) * e_ratio(p);
  std::ostringstream os;
  os << "tau = " << p.tau << ", d(n+1-c1) + (r+1)(1+bd)/a = " << rhs;
  return entry(kIndexEquation, p.tau == rhs, os.str());
}

ConstraintEntry check_codim_equation(const SetupParams& p) {
  const Integer c1 = p.chern[1];
  const Integer lhs = p.n + p.r - p.m - 1;
  const Integer rhs = p.a * (p.n + 1 - c1) + p.b * (p.r + 1);
  std::ostringstream os;
  os << "n+r-m-1 = " << lhs << ", a(n+1-c1) + b(r+1) = " << rhs;
  return entry(kCodimEquation, lhs == rhs, os.str());
}

ConstraintEntry check_alpha_divisibility(const SetupParams& p) {
  const Integer ar = ipow(p.a, static_cast<unsigned long>(p.r));
  const bool ok = divides(ar, p.alpha);
  std::ostringstream os;
  os << "a^r = " << ar << (ok ? " | " : " does not divide ") << "alpha = " << p.alpha;
  return entry(kAlphaDivisibility, ok, os.str());
}

ConstraintEntry check_pn_target(const SetupParams& p) {
  if (!p.flags.y_is_projective_space) return not_applicable(kPnTarget, "Y is not projective space");
  std::ostringstream os;
  if (p.a != 1 || p.b != 0) {
    os << "(a, b) = (" << p.a << ", " << p.b << ") but Y = P^{n+r} forces (1, 0)";
    return entry(kPnTarget, false, os.str());
  }
  if (p.d < 1 || !divides(p.d, Integer(p.n))) {
    os << "d = " << p.d << " does not divide n = " << p.n;
    return entry(kPnTarget, false, os.str());
  }
  const Integer nd = p.n / p.d;
  const Integer c1_target = (p.d - 1) * nd + 1;
  const bool codim_ok = Integer(p.codim()) == nd + 1;
  const bool c1_ok = p.chern[1] == c1_target;
  os << "codim = " << p.codim() << " vs n/d+1 = " << nd + 1 << "; c1 = " << p.chern[1] << " vs (d-1)n/d+1 = " << c1_target;
  return entry(kPnTarget, codim_ok && c1_ok, os.str());
}

ConstraintEntry check_rank_vanishing(const SetupParams& p) {
  for (int i = p.r + 2; i <= p.n; ++i) {
    if (p.chern[i] != 0) {
      std::ostringstream os;
      os << "c_" << i << " = " << p.chern[i] << " but rank is " << p.r + 1;
      return entry(kRankVanishing, false, os.str());
    }
  }
  return entry(kRankVanishing, true, "c_i = 0 for i > r+1");
}

Integer degree_from_exceptional(const SetupParams& p) {
  ChowRing ring(p.chern);
  return sign_power(p.codim() - 1) * top_number(p, ring, p.codim());
}

ConstraintEntry check_vanishing_suite(const SetupParams& p) {
  ChowRing ring(p.chern);
  std::ostringstream os;
  bool ok = true;
  const int top = p.n + p.r;
  for (int t = 1; t <= p.codim() - 1; ++t) {
    const Integer v = top_number(p, ring, t);
    if (v != 0) {
      ok = false;
      os << "E^" << t << " H2^" << top - t << " = " << v << " != 0; ";
    }
  }
  const Integer h2top = top_number(p, ring, 0);
  if (h2top != p.alpha) {
    ok = false;
    os << "H2^" << top << " = " << h2top << " != alpha = " << p.alpha << "; ";
  }
  const Integer deg = sign_power(p.codim() - 1) * top_number(p, ring, p.codim());
  if (p.deg_w && *p.deg_w != deg) {
    ok = false;
    os << "(-1)^(codim-1) E^" << p.codim() << " H2^" << p.m << " = " << deg << " != deg_W = " << *p.deg_w << "; ";
  }
  if (ok) {
    os << "E^t H2^(n+r-t) = 0 for 1 <= t <= " << p.codim() - 1 << "; H2^" << top << " = " << h2top << "; deg_W = " << deg;
  }
  std::string w = os.str();
  if (!ok && w.size() >= 2) w.resize(w.size() - 2);
  return entry(kVanishingSuite, ok, w);
}

std::optional<Integer> segre_back_solved_degree(const SetupParams& p) {
  const SegreData s = segre_from_chern(p.chern);
  const Integer c1 = p.chern[1];
  const Integer k = c1 - 2;
  if (k < 0 || k > p.n) return std::nullopt;
  const long ki = k.get_si();
  return ipow(p.d, static_cast<unsigned long>(p.n - ki)) * p.alpha - sign_power(ki) * s[ki];
}

ConstraintEntry check_segre_formulas(const SetupParams& p) {
  if (!p.flags.e_nonample) return not_applicable(kSegreFormulas, "E is ample (a, b) != (1, 0)");
  const SegreData s = segre_from_chern(p.chern);
  const Integer c1 = p.chern[1];
  std::ostringstream os;
  bool ok = true;
  const long lo = c1 - 1 < 0 ? 0 : (c1 - 1 > p.n ? p.n + 1 : Integer(c1 - 1).get_si());
  for (long i = lo; i <= p.n; ++i) {
    const Integer lhs = sign_power(i) * s[i];
    const Integer rhs = ipow(p.d, static_cast<unsigned long>(p.n - i)) * p.alpha;
    if (lhs != rhs) {
      ok = false;
      os << "(-1)^" << i << " s_" << i << " = " << lhs << " != d^" << p.n - i << " alpha = " << rhs << "; ";
    }
  }
  std::optional<Integer> deg = segre_back_solved_degree(p);
  if (deg) {
    if (*deg < 1) {
      ok = false;
      os << "back-solved deg_W = " << *deg << " is not positive; ";
    }
    if (p.deg_w && *p.deg_w != *deg) {
      ok = false;
      os << "back-solved deg_W = " << *deg << " != supplied " << *p.deg_w << "; ";
    }
  } else {
    deg = p.deg_w;
  }
  if (deg) {
    if (!p.flags.w_nonlinear && *deg != 1) {
      ok = false;
      os << "linear center needs deg_W = 1, got " << *deg << "; ";
    }
    if (p.flags.w_nonlinear && p.flags.y_is_projective_space && *deg < p.codim() + 1) {
      ok = false;
      os << "nondegenerate center needs deg_W >= codim+1 = " << p.codim() + 1 << ", got " << *deg << "; ";
    }
  }
  if (ok) {
    os << "(-1)^i s_i = d^(n-i) alpha for " << lo << " <= i <= " << p.n;
    if (deg) os << "; deg_W = " << *deg;
    return entry(kSegreFormulas, true, os.str());
  }
  std::string w = os.str();
  w.resize(w.size() - 2);
  return entry(kSegreFormulas, false, w);
}

Integer adivide_iv_value(int n, int r, const Integer& a, const Integer& b, const Integer& d, const Integer& c1, const Integer& s2) {
  const Integer e = (1 + b * d) / a;
  return binomial(n + r - 1, n) * b * b * d + binomial(n + r - 1, n - 1) * a * b * (e - c1 * d) +
         binomial(n + r - 1, n - 2) * a * a * (d * s2 - c1 * e);
}

ConstraintEntry check_binomial_divisibility(const SetupParams& p) {
  if (p.n < 2) return not_applicable(kBinomialDivisibility, "needs n >= 2");
  std::ostringstream os;
  bool ok = true;
  const Integer c_ii = binomial(p.n + p.r - 1, p.n);
  const bool ii = divides(p.a, c_ii);
  ok = ok && ii;
  os << "adivide_ii: a = " << p.a << (ii ? " | " : " does not divide ") << "C(n+r-1,n) = " << c_ii;
  if (p.codim() >= 3 && p.r >= 2) {
    const Integer a2 = p.a * p.a;
    const Integer c_iii = binomial(p.n + p.r - 2, p.n);
    const bool iii = divides(a2, c_iii);
    ok = ok && iii;
    os << "; adivide_iii: a^2 = " << a2 << (iii ? " | " : " does not divide ") << "C(n+r-2,n) = " << c_iii;
  } else {
    os << "; adivide_iii: not applicable (needs codim >= 3 and r >= 2)";
  }
  const SegreData s = segre_from_chern(p.chern);
  const Integer a3 = p.a * p.a * p.a;
  const Integer v = adivide_iv_value(p.n, p.r, p.a, p.b, p.d, p.chern[1], s[2]);
  const bool iv = divides(a3, v);
  ok = ok && iv;
  os << "; adivide_iv: a^3 = " << a3 << (iv ? " | " : " does not divide ") << v;
  return entry(kBinomialDivisibility, ok, os.str());
}

std::vector<ConstraintEntry> check_betti(const SetupParams& p) {
  std::vector<ConstraintEntry> out;
  if (!p.flags.y_is_projective_space) {
    for (auto id : {kBettiHardLefschetz, kBettiNOverD, kBettiProfile, kBettiSupport}) out.push_back(not_applicable(id, "Y is not projective space"));
    return out;
  }
  if (p.d < 1 || p.d > p.n || !divides(p.d, Integer(p.n))) {
    const std::string w = "d = " + p.d.get_str() + " does not divide n = " + std::to_string(p.n);
    for (auto id : {kBettiHardLefschetz, kBettiNOverD, kBettiProfile, kBettiSupport}) out.push_back(entry(id, false, w));
    return out;
  }
  const int d = static_cast<int>(p.d.get_si());
  if (d >= 2) {
    const CheckOutcome nd = check_n_over_d_leq_r(p.n, d, p.r);
    out.push_back(entry(kBettiNOverD, nd.pass, nd.witness));
  } else {
    out.push_back(not_applicable(kBettiNOverD, "needs d >= 2"));
  }
  BettiProfile prof;
  try {
    prof = poincare_profile(p.n, p.r, d);
  } catch (const InexactDivision& ex) {
    const std::string w = std::string("no integral profile: remainder ") + ex.remainder();
    out.push_back(entry(kBettiProfile, false, w));
    out.push_back(entry(kBettiSupport, false, w));
    out.push_back(entry(kBettiHardLefschetz, false, w));
    return out;
  }
  Integer total = 0;
  for (const auto& x : prof.a) total += x;
  const bool total_ok = total == p.d * p.r;
  out.push_back(entry(kBettiProfile, total_ok,
                      "P(t) = " + prof.to_string() + ", P(1) = " + total.get_str() + (total_ok ? " = " : " != ") + "dr"));
  const CheckOutcome sup = check_support(prof, p.m);
  out.push_back(entry(kBettiSupport, sup.pass, sup.witness));
  const CheckOutcome hl = check_hard_lefschetz(prof);
  out.push_back(entry(kBettiHardLefschetz, hl.pass, hl.witness));
  return out;
}

namespace {

void collect(const SetupParams& p, std::string_view id, std::vector<ConstraintEntry>& out, std::vector<ConstraintEntry>& betti_cache,
             bool& betti_done) {
  if (id.starts_with("betti_")) {
    if (!betti_done) {
      betti_cache = check_betti(p);
      betti_done = true;
    }
    for (const auto& e : betti_cache) {
      if (e.id == id) out.push_back(e);
    }
    return;
  }
  static const std::map<std::string_view, std::function<ConstraintEntry(const SetupParams&)>> table = {
      {kAlphaDivisibility, check_alpha_divisibility}, {kBinomialDivisibility, check_binomial_divisibility},
      {kCodimEquation, check_codim_equation},         {kIndexEquation, check_index_equation},
      {kPnTarget, check_pn_target},                   {kRankVanishing, check_rank_vanishing},
      {kSegreFormulas, check_segre_formulas},         {kVanishingSuite, check_vanishing_suite},
  };
  auto it = table.find(id);
  if (it == table.end()) throw InvalidInput("unknown constraint id '" + std::string(id) + "'");
  out.push_back(it->second(p));
}

}  // namespace

ConstraintReport run_all(const SetupParams& p) {
  p.validate();
  std::vector<ConstraintEntry> out;
  std::vector<ConstraintEntry> betti;
  bool betti_done = false;
  for (auto id : kIds) collect(p, id, out, betti, betti_done);
  return ConstraintReport(std::move(out));
}

ConstraintReport run_selected(const SetupParams& p, std::span<const std::string> ids) {
  p.validate();
  std::vector<std::string> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<ConstraintEntry> out;
  std::vector<ConstraintEntry> betti;
  bool betti_done = false;
  for (const auto& id : sorted) collect(p, id, out, betti, betti_done);
  return ConstraintReport(std::move(out));
}

std::optional<std::pair<Integer, Integer>> derive_nonample_d_c1(int n, int r, int m, const Integer& tau) {
  const int den = n + r - m - 1;
  if (den < 1) return std::nullopt;
  const Integer num = tau - r - 1;
  if (!divides(Integer(den), num)) return std::nullopt;
  return std::make_pair(Integer(num / den), Integer(m - r + 2));
}

}  // namespace pbundle
