#pragma once

#include <pbundle/chern_segre.hpp>
#include <pbundle/integer.hpp>

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pbundle {

/// A degree-1 class h1*H_1 + u*U.
struct LinearClass {
  Integer h1;
  Integer u;

  friend bool operator==(const LinearClass&, const LinearClass&) = default;
};

std::string to_string(const LinearClass& x);

/// Pairing integers (a, b, d) relating the bases {H_1, U} and {H_2, E}:
///   H_2 = -b H_1 + a U,   E = -((1+bd)/a) H_1 + d U.
class BasisChange {
 public:
  /// Throws InvalidInput unless a >= 1, 0 <= b < a and a | 1+bd.
  BasisChange(Integer a, Integer b, Integer d);

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  const Integer& d() const noexcept { return d_; }
  /// (1+bd)/a
  const Integer& e_ratio() const noexcept { return e_ratio_; }

  LinearClass h2() const { return {-b_, a_}; }
  LinearClass exceptional() const { return {-e_ratio_, d_}; }

  /// Coordinates (x_H2, x_E) of a class given in (H_1, U) coordinates.
  std::pair<Integer, Integer> to_h2e(const LinearClass& x) const;

 private:
  Integer a_, b_, d_, e_ratio_;
};

/// x_h2*H_2 + x_e*E in (H_1, U) coordinates.
LinearClass divisor_in_HU(const Integer& x_h2, const Integer& x_e, const BasisChange& bc);

/// Unreduced integer combination of monomials H_1^i U^j.
class RawClass {
 public:
  RawClass() = default;
  static RawClass monomial(int i, int j, const Integer& coeff = 1);
  static RawClass linear(const LinearClass& x);
  /// x^k expanded binomially; terms with H_1-exponent above max_h1 are dropped.
  static RawClass power(const LinearClass& x, int k, int max_h1);

  void add(int i, int j, const Integer& coeff);
  const std::map<std::pair<int, int>, Integer>& terms() const noexcept { return terms_; }
  /// Product with terms of H_1-exponent above max_h1 dropped.
  RawClass times(const RawClass& other, int max_h1) const;

 private:
  std::map<std::pair<int, int>, Integer> terms_;
};

/// Normal-form element of A(P(E)): coefficients of H_1^i U^j, 0 <= i <= n, 0 <= j <= r.
class ChowClass {
 public:
  ChowClass(int n, int r);

  int n() const noexcept { return n_; }
  int r() const noexcept { return r_; }
  const Integer& coefficient(int i, int j) const;
  bool is_zero() const;
  friend bool operator==(const ChowClass&, const ChowClass&) = default;

  ChowClass& operator+=(const ChowClass& other);
  friend ChowClass operator+(ChowClass x, const ChowClass& y) { return x += y; }
  friend ChowClass operator*(const Integer& k, ChowClass x);

 private:
  friend class ChowRing;
  Integer& at(int i, int j);
  int n_, r_;
  std::vector<Integer> grid_;
};

/// A(P(E)) = Z[H_1, U] / (H_1^{n+1}, U^{r+1} - sum_{i=1}^{r+1} (-1)^{i-1} c_i H_1^i U^{r+1-i}).
class ChowRing {
 public:
  /// r = chern.rank() - 1.
  explicit ChowRing(ChernData chern);

  int n() const noexcept { return chern_.n(); }
  int r() const noexcept { return chern_.rank() - 1; }
  const ChernData& chern() const noexcept { return chern_; }

  ChowClass normal_form(const RawClass& raw) const;
  ChowClass multiply(const ChowClass& x, const ChowClass& y) const;
  ChowClass power(const LinearClass& x, int k) const;

  /// Coefficient of H_1^n U^r; DegreeMismatch unless x is of top degree n+r.
  Integer intersection_number(const ChowClass& x) const;

 private:
  ChernData chern_;
};

struct Factor {
  LinearClass cls;
  int multiplicity;
};

/// Intersection number of the product of the given degree-1 classes.
/// DegreeMismatch unless the multiplicities sum to n+r.
Integer power_intersection(std::span<const Factor> factors, const ChernData& chern);

/// Segre-pairing shortcut: H_1^i U^{n+r-i} -> (-1)^{n-i} s_{n-i}, zero for i > n.
/// DegreeMismatch if a term is not of total degree n+r.
Integer segre_pairing(const RawClass& raw, const SegreData& s, int r);

/// The pairing above as a linear form: entry k is the coefficient of s_k.
std::vector<Integer> segre_linear_form(const RawClass& raw, int n, int r);

}  // namespace pbundle
