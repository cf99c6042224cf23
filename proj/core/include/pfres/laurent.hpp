#pragma once

#include <map>
#include <string>
#include <vector>

#include "pfres/field.hpp"

namespace pfres {

// binom(a, b) by the falling-factorial product; zero for b < 0.
Integer gen_binomial(long a, long b);

// Univariate Laurent polynomial in s with integer coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, Integer coeff = 1);
  // c_low s^low + c_{low+1} s^{low+1} + ...
  static LaurentPoly from_coeffs(int low, const std::vector<Integer>& coeffs);
  static LaurentPoly one_minus_s_power(unsigned k);

  bool is_zero() const { return coeffs_.empty(); }
  Integer coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;
  const std::map<int, Integer>& coefficients() const { return coeffs_; }
  Integer at_one() const;
  // Coefficients from min_exponent to max_exponent inclusive.
  std::vector<Integer> dense() const;

  void add_term(int exponent, const Integer& c);
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly shifted(int by) const;

  std::string to_string() const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<int, Integer> coeffs_;
};

// Exact quotient h / (1-s)^k; throws DivisibilityError on a nonzero remainder.
LaurentPoly laurent_div_power(const LaurentPoly& h, unsigned k);

}  // namespace pfres
