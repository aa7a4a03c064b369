#include <pbundle/integer.hpp>

namespace pbundle {

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

bool divides(const Integer& a, const Integer& b) {
  if (a == 0) return false;
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

Integer mod_floor(const Integer& x, const Integer& m) {
  Integer out;
  mpz_fdiv_r(out.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return out;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace pbundle
