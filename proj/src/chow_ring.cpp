#include <pbundle/chow_ring.hpp>
#include <pbundle/errors.hpp>
#include <pbundle/poly.hpp>

#include <algorithm>

namespace pbundle {

std::string to_string(const LinearClass& x) {
  return "(" + x.h1.get_str() + ")H1 + (" + x.u.get_str() + ")U";
}

BasisChange::BasisChange(Integer a, Integer b, Integer d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (a_ < 1) throw InvalidInput("BasisChange: a must be at least 1");
  if (b_ < 0 || b_ >= a_) throw InvalidInput("BasisChange: need 0 <= b < a");
  const Integer num = 1 + b_ * d_;
  if (!divides(a_, num)) throw InvalidInput("BasisChange: a = " + a_.get_str() + " does not divide 1+bd = " + num.get_str());
  e_ratio_ = num / a_;
}

std::pair<Integer, Integer> BasisChange::to_h2e(const LinearClass& x) const {
  // H_1 = d H_2 - a E,  U = e_ratio H_2 - b E.
  return {x.h1 * d_ + x.u * e_ratio_, -x.h1 * a_ - x.u * b_};
}

LinearClass divisor_in_HU(const Integer& x_h2, const Integer& x_e, const BasisChange& bc) {
  const Integer num = 1 + bc.b() * bc.d();
  if (!divides(bc.a(), num)) throw NonIntegralCoefficient("divisor_in_HU: a does not divide 1+bd");
  const LinearClass h2 = bc.h2();
  const LinearClass e = bc.exceptional();
  return {x_h2 * h2.h1 + x_e * e.h1, x_h2 * h2.u + x_e * e.u};
}

RawClass RawClass::monomial(int i, int j, const Integer& coeff) {
  RawClass out;
  out.add(i, j, coeff);
  return out;
}

RawClass RawClass::linear(const LinearClass& x) {
  RawClass out;
  out.add(1, 0, x.h1);
  out.add(0, 1, x.u);
  return out;
}

RawClass RawClass::power(const LinearClass& x, int k, int max_h1) {
  RawClass out;
  for (int i = 0; i <= std::min(k, max_h1); ++i) {
    out.add(i, k - i, binomial(k, i) * ipow(x.h1, static_cast<unsigned long>(i)) * ipow(x.u, static_cast<unsigned long>(k - i)));
  }
  return out;
}

void RawClass::add(int i, int j, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

RawClass RawClass::times(const RawClass& other, int max_h1) const {
  RawClass out;
  for (const auto& [k1, c1] : terms_) {
    for (const auto& [k2, c2] : other.terms_) {
      const int i = k1.first + k2.first;
      if (i > max_h1) continue;
      out.add(i, k1.second + k2.second, c1 * c2);
    }
  }
  return out;
}

ChowClass::ChowClass(int n, int r) : n_(n), r_(r), grid_(static_cast<std::size_t>((n + 1) * (r + 1))) {}

const Integer& ChowClass::coefficient(int i, int j) const {
  return grid_.at(static_cast<std::size_t>(i * (r_ + 1) + j));
}

Integer& ChowClass::at(int i, int j) { return grid_.at(static_cast<std::size_t>(i * (r_ + 1) + j)); }

bool ChowClass::is_zero() const {
  return std::all_of(grid_.begin(), grid_.end(), [](const Integer& x) { return x == 0; });
}

ChowClass& ChowClass::operator+=(const ChowClass& other) {
  if (n_ != other.n_ || r_ != other.r_) throw InvalidInput("ChowClass: shape mismatch");
  for (std::size_t k = 0; k < grid_.size(); ++k) grid_[k] += other.grid_[k];
  return *this;
}

ChowClass operator*(const Integer& k, ChowClass x) {
  for (auto& v : x.grid_) v *= k;
  return x;
}

ChowRing::ChowRing(ChernData chern) : chern_(std::move(chern)) {}

ChowClass ChowRing::normal_form(const RawClass& raw) const {
  const int n = this->n();
  const int r = this->r();
  int max_j = r;
  for (const auto& [key, c] : raw.terms()) {
    if (key.first < 0 || key.second < 0) throw InvalidInput("normal_form: negative exponent");
    max_j = std::max(max_j, key.second);
  }
  // work[i][j] for 0 <= i <= n, 0 <= j <= max_j
  const auto width = static_cast<std::size_t>(max_j + 1);
  std::vector<Integer> work(static_cast<std::size_t>(n + 1) * width);
  auto cell = [&](int i, int j) -> Integer& { return work[static_cast<std::size_t>(i) * width + static_cast<std::size_t>(j)]; };
  for (const auto& [key, c] : raw.terms()) {
    if (key.first <= n) cell(key.first, key.second) += c;
  }
  for (int j = max_j; j > r; --j) {
    for (int i = 0; i <= n; ++i) {
      Integer x = cell(i, j);
      if (x == 0) continue;
      cell(i, j) = 0;
      // U^j H_1^i = U^{j-r-1} H_1^i * U^{r+1}
      for (int k = 1; k <= r + 1 && i + k <= n; ++k) {
        const Integer ck = chern_[k];
        if (ck == 0) continue;
        if (k % 2 == 1) {
          cell(i + k, j - k) += ck * x;
        } else {
          cell(i + k, j - k) -= ck * x;
        }
      }
    }
  }
  ChowClass out(n, r);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= r; ++j) out.at(i, j) = cell(i, j);
  }
  return out;
}

ChowClass ChowRing::multiply(const ChowClass& x, const ChowClass& y) const {
  RawClass rx, ry;
  for (int i = 0; i <= n(); ++i) {
    for (int j = 0; j <= r(); ++j) {
      rx.add(i, j, x.coefficient(i, j));
      ry.add(i, j, y.coefficient(i, j));
    }
  }
  return normal_form(rx.times(ry, n()));
}

ChowClass ChowRing::power(const LinearClass& x, int k) const { return normal_form(RawClass::power(x, k, n())); }

Integer ChowRing::intersection_number(const ChowClass& x) const {
  const int top = n() + r();
  for (int i = 0; i <= x.n(); ++i) {
    for (int j = 0; j <= x.r(); ++j) {
      if (i + j != top && x.coefficient(i, j) != 0) {
        throw DegreeMismatch("intersection_number: class has a term H1^" + std::to_string(i) + " U^" + std::to_string(j) +
                             " below top degree " + std::to_string(top));
      }
    }
  }
  return x.coefficient(n(), r());
}

Integer power_intersection(std::span<const Factor> factors, const ChernData& chern) {
  const int n = chern.n();
  const int r = chern.rank() - 1;
  int total = 0;
  RawClass acc = RawClass::monomial(0, 0);
  for (const Factor& f : factors) {
    if (f.multiplicity < 0) throw InvalidInput("power_intersection: negative multiplicity");
    total += f.multiplicity;
    acc = acc.times(RawClass::power(f.cls, f.multiplicity, n), n);
  }
  if (total != n + r) {
    throw DegreeMismatch("power_intersection: total degree " + std::to_string(total) + " differs from n+r = " + std::to_string(n + r));
  }
  ChowRing ring(chern);
  return ring.intersection_number(ring.normal_form(acc));
}

std::vector<Integer> segre_linear_form(const RawClass& raw, int n, int r) {
  std::vector<Integer> form(static_cast<std::size_t>(n) + 1);
  for (const auto& [key, c] : raw.terms()) {
    const auto [i, j] = key;
    if (i + j != n + r) throw DegreeMismatch("segre_pairing: term of degree " + std::to_string(i + j));
    if (i > n) continue;
    const int k = n - i;
    form[static_cast<std::size_t>(k)] += sign_power(k) * c;
  }
  return form;
}

Integer segre_pairing(const RawClass& raw, const SegreData& s, int r) {
  const std::vector<Integer> form = segre_linear_form(raw, s.n(), r);
  Integer out = 0;
  for (std::size_t k = 0; k < form.size(); ++k) out += form[k] * s[static_cast<long>(k)];
  return out;
}

}  // namespace pbundle
