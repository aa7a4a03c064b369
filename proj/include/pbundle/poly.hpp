#pragma once

#include <pbundle/integer.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace pbundle {

/// Dense univariate polynomial over Z in the variable t.
///
/// Coefficients are stored in increasing degree and kept trimmed, so two
/// polynomials are equal iff their coefficient vectors are equal. The zero
/// polynomial has an empty coefficient vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

  /// Coefficient of t^i; zero beyond the degree.
  Integer coeff(std::size_t i) const;

  /// Drops every term of degree > max_degree.
  IntPolynomial truncated(std::size_t max_degree) const;

  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial operator-(const IntPolynomial& p);
IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial operator*(const Integer& c, const IntPolynomial& p);

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_pow(const IntPolynomial& p, unsigned exponent);

/// Product truncated at degree `order` (cheaper than multiplying then truncating).
IntPolynomial mul_truncated(const IntPolynomial& p, const IntPolynomial& q, std::size_t order);

/// q with deg q <= order and p*q = 1 mod t^(order+1).
/// Throws NonUnitConstantTerm unless p(0) is 1 or -1.
IntPolynomial series_inverse(const IntPolynomial& p, std::size_t order);

struct DivisionResult {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Long division over Z. Requires q nonzero with leading coefficient +-1,
/// or more generally that every step divides exactly; otherwise throws
/// InexactDivision.
DivisionResult divide(const IntPolynomial& p, const IntPolynomial& q);

/// Exact quotient; throws InexactDivision carrying the remainder otherwise.
IntPolynomial exact_divide(const IntPolynomial& p, const IntPolynomial& q);

Integer evaluate(const IntPolynomial& p, const Integer& x);

/// C(n, k); zero for k < 0 or k > n. Throws InvalidInput for n < 0.
Integer binomial(long n, long k);

/// Polynomial over Z/mZ with canonical residues in [0, m).
class ResiduePolynomial {
 public:
  ResiduePolynomial(Integer modulus, std::vector<Integer> coeffs);

  const Integer& modulus() const noexcept { return modulus_; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Integer coeff(std::size_t i) const;

  /// Canonical representatives as an integer polynomial.
  IntPolynomial lift() const;
  ResiduePolynomial truncated(std::size_t max_degree) const;
  std::string to_string() const;

  friend bool operator==(const ResiduePolynomial&, const ResiduePolynomial&) = default;

 private:
  Integer modulus_;
  std::vector<Integer> coeffs_;
};

ResiduePolynomial residue_reduce(const IntPolynomial& p, const Integer& m);
ResiduePolynomial operator+(const ResiduePolynomial& p, const ResiduePolynomial& q);
ResiduePolynomial operator*(const ResiduePolynomial& p, const ResiduePolynomial& q);
ResiduePolynomial series_inverse(const ResiduePolynomial& p, std::size_t order);

/// Horner evaluation in Z/mZ; result in [0, m).
Integer evaluate(const ResiduePolynomial& p, const Integer& x);

}  // namespace pbundle
