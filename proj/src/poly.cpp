#include <pbundle/errors.hpp>
#include <pbundle/poly.hpp>

#include <algorithm>
#include <sstream>

namespace pbundle {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

IntPolynomial IntPolynomial::truncated(std::size_t max_degree) const {
  if (coeffs_.size() <= max_degree + 1) return *this;
  return IntPolynomial(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(max_degree) + 1));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<Integer> v(std::max(p.coeffs().size(), q.coeffs().size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.coeff(i) + q.coeff(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& p) {
  std::vector<Integer> v(p.coeffs());
  for (auto& c : v) c = -c;
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) { return p + (-q); }

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<Integer> v(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a[i] * b[j];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const Integer& c, const IntPolynomial& p) {
  std::vector<Integer> v(p.coeffs());
  for (auto& x : v) x *= c;
  return IntPolynomial(std::move(v));
}

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

IntPolynomial poly_pow(const IntPolynomial& p, unsigned exponent) {
  IntPolynomial out = IntPolynomial::constant(1);
  for (unsigned i = 0; i < exponent; ++i) out = out * p;
  return out;
}

IntPolynomial mul_truncated(const IntPolynomial& p, const IntPolynomial& q, std::size_t order) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<Integer> v(std::min(a.size() + b.size() - 1, order + 1));
  for (std::size_t i = 0; i < a.size() && i < v.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < v.size(); ++j) v[i + j] += a[i] * b[j];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial series_inverse(const IntPolynomial& p, std::size_t order) {
  const Integer p0 = p.coeff(0);
  if (p0 != 1 && p0 != -1) {
    throw NonUnitConstantTerm("series_inverse: constant term " + p0.get_str() + " is not a unit");
  }
  // p0 is its own inverse.
  std::vector<Integer> q(order + 1);
  q[0] = p0;
  for (std::size_t k = 1; k <= order; ++k) {
    Integer acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += p.coeff(i) * q[k - i];
    q[k] = -p0 * acc;
  }
  return IntPolynomial(std::move(q));
}

DivisionResult divide(const IntPolynomial& p, const IntPolynomial& q) {
  if (q.is_zero()) throw InvalidInput("divide: division by the zero polynomial");
  std::vector<Integer> rem(p.coeffs());
  const long dq = q.degree();
  const Integer& lead = q.coeffs().back();
  const long dp = p.degree();
  std::vector<Integer> quot(dp >= dq ? static_cast<std::size_t>(dp - dq + 1) : 0);
  for (long k = dp; k >= dq; --k) {
    const Integer& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (!divides(lead, top)) {
      throw InexactDivision("divide: leading coefficient does not divide", IntPolynomial(rem).to_string());
    }
    Integer f = top / lead;
    quot[static_cast<std::size_t>(k - dq)] = f;
    for (long j = 0; j <= dq; ++j) rem[static_cast<std::size_t>(k - dq + j)] -= f * q.coeffs()[static_cast<std::size_t>(j)];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial exact_divide(const IntPolynomial& p, const IntPolynomial& q) {
  DivisionResult r = divide(p, q);
  if (!r.remainder.is_zero()) {
    throw InexactDivision("exact_divide: nonzero remainder " + r.remainder.to_string(), r.remainder.to_string());
  }
  return r.quotient;
}

Integer evaluate(const IntPolynomial& p, const Integer& x) {
  Integer acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer binomial(long n, long k) {
  if (n < 0) throw InvalidInput("binomial: n must be nonnegative, got " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

ResiduePolynomial::ResiduePolynomial(Integer modulus, std::vector<Integer> coeffs)
    : modulus_(std::move(modulus)), coeffs_(std::move(coeffs)) {
  if (modulus_ < 2) throw InvalidInput("ResiduePolynomial: modulus must be at least 2");
  for (auto& c : coeffs_) c = mod_floor(c, modulus_);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer ResiduePolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

IntPolynomial ResiduePolynomial::lift() const { return IntPolynomial(coeffs_); }

ResiduePolynomial ResiduePolynomial::truncated(std::size_t max_degree) const {
  if (coeffs_.size() <= max_degree + 1) return *this;
  return ResiduePolynomial(modulus_, std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(max_degree) + 1));
}

std::string ResiduePolynomial::to_string() const { return lift().to_string() + " (mod " + modulus_.get_str() + ")"; }

ResiduePolynomial residue_reduce(const IntPolynomial& p, const Integer& m) { return ResiduePolynomial(m, p.coeffs()); }

namespace {
void require_same_modulus(const ResiduePolynomial& p, const ResiduePolynomial& q) {
  if (p.modulus() != q.modulus()) throw InvalidInput("residue polynomials have different moduli");
}
}  // namespace

ResiduePolynomial operator+(const ResiduePolynomial& p, const ResiduePolynomial& q) {
  require_same_modulus(p, q);
  return ResiduePolynomial(p.modulus(), (p.lift() + q.lift()).coeffs());
}

ResiduePolynomial operator*(const ResiduePolynomial& p, const ResiduePolynomial& q) {
  require_same_modulus(p, q);
  return ResiduePolynomial(p.modulus(), (p.lift() * q.lift()).coeffs());
}

ResiduePolynomial series_inverse(const ResiduePolynomial& p, std::size_t order) {
  const Integer& m = p.modulus();
  Integer inv0;
  const Integer p0 = p.coeff(0);
  if (mpz_invert(inv0.get_mpz_t(), p0.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw NonUnitConstantTerm("series_inverse: constant term " + p0.get_str() + " is not a unit mod " + m.get_str());
  }
  std::vector<Integer> q(order + 1);
  q[0] = inv0;
  for (std::size_t k = 1; k <= order; ++k) {
    Integer acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += p.coeff(i) * q[k - i];
    q[k] = mod_floor(-inv0 * acc, m);
  }
  return ResiduePolynomial(m, std::move(q));
}

Integer evaluate(const ResiduePolynomial& p, const Integer& x) {
  return mod_floor(evaluate(p.lift(), x), p.modulus());
}

}  // namespace pbundle
