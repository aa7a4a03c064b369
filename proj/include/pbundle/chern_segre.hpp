#pragma once

#include <pbundle/integer.hpp>
#include <pbundle/poly.hpp>

#include <optional>
#include <vector>

namespace pbundle {

/// Chern classes c_0..c_n of a bundle of the given rank on P^n.
class ChernData {
 public:
  /// The trivial line bundle on P^0.
  ChernData() : n_(0), rank_(1), c_{Integer(1)} {}
  /// Throws InvalidInput unless c.size() == n+1, c[0] == 1, n >= 0, rank >= 1.
  ChernData(int n, int rank, std::vector<Integer> c);

  /// Pads or truncates c to length n+1 before validating.
  static ChernData from_total(int n, int rank, const IntPolynomial& total);

  int n() const noexcept { return n_; }
  int rank() const noexcept { return rank_; }
  const std::vector<Integer>& c() const noexcept { return c_; }
  /// c_i, zero for i > n.
  Integer operator[](long i) const;
  IntPolynomial total() const { return IntPolynomial(c_); }

  friend bool operator==(const ChernData&, const ChernData&) = default;

 private:
  int n_;
  int rank_;
  std::vector<Integer> c_;
};

/// Segre classes s_0..s_n on P^n.
class SegreData {
 public:
  SegreData() : n_(0), s_{Integer(1)} {}
  /// Throws InvalidInput unless s.size() == n+1 and s[0] == 1.
  SegreData(int n, std::vector<Integer> s);

  int n() const noexcept { return n_; }
  const std::vector<Integer>& s() const noexcept { return s_; }
  Integer operator[](long i) const;
  IntPolynomial total() const { return IntPolynomial(s_); }

  friend bool operator==(const SegreData&, const SegreData&) = default;

 private:
  int n_;
  std::vector<Integer> s_;
};

SegreData segre_from_chern(const ChernData& c);

/// Inverse of segre_from_chern. When rank is omitted the smallest rank
/// compatible with the data is used (index of the last nonzero c_i, at least 1).
ChernData chern_from_segre(const SegreData& s, std::optional<int> rank = std::nullopt);

}  // namespace pbundle
