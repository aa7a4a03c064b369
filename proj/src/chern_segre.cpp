#include <pbundle/chern_segre.hpp>
#include <pbundle/errors.hpp>

#include <algorithm>
#include <string>

namespace pbundle {

ChernData::ChernData(int n, int rank, std::vector<Integer> c) : n_(n), rank_(rank), c_(std::move(c)) {
  if (n_ < 0) throw InvalidInput("ChernData: n must be nonnegative");
  if (rank_ < 1) throw InvalidInput("ChernData: rank must be at least 1");
  if (c_.size() != static_cast<std::size_t>(n_) + 1) {
    throw InvalidInput("ChernData: expected " + std::to_string(n_ + 1) + " classes, got " + std::to_string(c_.size()));
  }
  if (c_[0] != 1) throw InvalidInput("ChernData: c_0 must be 1");
}

ChernData ChernData::from_total(int n, int rank, const IntPolynomial& total) {
  std::vector<Integer> c(static_cast<std::size_t>(std::max(n, 0)) + 1);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = total.coeff(i);
  return ChernData(n, rank, std::move(c));
}

Integer ChernData::operator[](long i) const {
  if (i < 0 || i > n_) return 0;
  return c_[static_cast<std::size_t>(i)];
}

SegreData::SegreData(int n, std::vector<Integer> s) : n_(n), s_(std::move(s)) {
  if (n_ < 0) throw InvalidInput("SegreData: n must be nonnegative");
  if (s_.size() != static_cast<std::size_t>(n_) + 1) {
    throw InvalidInput("SegreData: expected " + std::to_string(n_ + 1) + " classes, got " + std::to_string(s_.size()));
  }
  if (s_[0] != 1) throw InvalidInput("SegreData: s_0 must be 1");
}

Integer SegreData::operator[](long i) const {
  if (i < 0 || i > n_) return 0;
  return s_[static_cast<std::size_t>(i)];
}

namespace {
std::vector<Integer> padded(const IntPolynomial& p, int n) {
  std::vector<Integer> v(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.coeff(i);
  return v;
}
}  // namespace

SegreData segre_from_chern(const ChernData& c) {
  const auto n = static_cast<std::size_t>(c.n());
  return SegreData(c.n(), padded(series_inverse(c.total(), n), c.n()));
}

ChernData chern_from_segre(const SegreData& s, std::optional<int> rank) {
  const auto n = static_cast<std::size_t>(s.n());
  std::vector<Integer> c = padded(series_inverse(s.total(), n), s.n());
  int rk = 1;
  for (std::size_t i = c.size(); i-- > 1;) {
    if (c[i] != 0) {
      rk = static_cast<int>(i);
      break;
    }
  }
  return ChernData(s.n(), rank.value_or(rk), std::move(c));
}

}  // namespace pbundle
