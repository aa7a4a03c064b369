#include <pbundle/betti.hpp>
#include <pbundle/errors.hpp>
#include <pbundle/poly.hpp>

#include <sstream>

namespace pbundle {

std::string BettiProfile::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i].get_str();
  os << ")";
  return os.str();
}

namespace {
IntPolynomial t_power_minus_one(int k) { return IntPolynomial::monomial(1, static_cast<std::size_t>(k)) - IntPolynomial::constant(1); }
}  // namespace

BettiProfile poincare_profile(int n, int r, int d) {
  if (n < 1 || r < 1 || d < 1) throw InvalidInput("poincare_profile: need n, r, d >= 1");
  if (n % d != 0) throw NotDivisible("poincare_profile: d = " + std::to_string(d) + " does not divide n = " + std::to_string(n));
  const IntPolynomial num = t_power_minus_one(n) * t_power_minus_one(r);
  const IntPolynomial den = t_power_minus_one(n / d) * t_power_minus_one(1);
  const IntPolynomial q = exact_divide(num, den);
  return BettiProfile{q.coeffs()};
}

CheckOutcome check_support(const BettiProfile& prof, int m) {
  CheckOutcome out;
  std::ostringstream os;
  if (prof.dimension() != m) {
    out.pass = false;
    os << "profile has top degree " << prof.dimension() << " but m = " << m;
  }
  for (int i = 0; i < static_cast<int>(prof.a.size()) && i <= m; ++i) {
    if (prof.a[static_cast<std::size_t>(i)] <= 0) {
      if (out.pass) os << "a_" << i << " = " << prof.a[static_cast<std::size_t>(i)].get_str() << " inside [0, " << m << "]";
      out.pass = false;
      break;
    }
  }
  out.witness = out.pass ? "a_i > 0 exactly on [0, " + std::to_string(m) + "]" : os.str();
  return out;
}

CheckOutcome check_n_over_d_leq_r(int n, int d, int r) {
  CheckOutcome out;
  if (d < 1 || n % d != 0) {
    out.pass = false;
    out.witness = "d = " + std::to_string(d) + " does not divide n = " + std::to_string(n);
    return out;
  }
  out.pass = n / d <= r;
  out.witness = "n/d = " + std::to_string(n / d) + (out.pass ? " <= " : " > ") + "r = " + std::to_string(r);
  return out;
}

CheckOutcome check_hard_lefschetz(const BettiProfile& prof) {
  CheckOutcome out;
  const int m = prof.dimension();
  for (int k = 0; 2 * k < m && k + 1 <= m; ++k) {
    const Integer& lo = prof.a[static_cast<std::size_t>(k)];
    const Integer& hi = prof.a[static_cast<std::size_t>(k + 1)];
    if (lo > hi) {
      out.pass = false;
      out.failing_index = k;
      out.witness = "a_" + std::to_string(k) + " = " + lo.get_str() + " > a_" + std::to_string(k + 1) + " = " + hi.get_str() +
                    " with 2*" + std::to_string(k) + " < " + std::to_string(m);
      return out;
    }
  }
  out.witness = "nondecreasing below middle degree";
  return out;
}

}  // namespace pbundle
