#include "pfres/laurent.hpp"

#include <gmp.h>

#include "pfres/errors.hpp"

namespace pfres {

Integer gen_binomial(long a, long b) {
  if (b < 0) return 0;
  Integer r;
  if (a >= 0) {
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
  }
  // binom(a, b) = (-1)^b binom(b - a - 1, b) for negative a.
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(b - a - 1), static_cast<unsigned long>(b));
  return b % 2 ? Integer(-r) : r;
}

LaurentPoly LaurentPoly::monomial(int exponent, Integer coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(int low, const std::vector<Integer>& coeffs) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(low + static_cast<int>(i), coeffs[i]);
  return p;
}

LaurentPoly LaurentPoly::one_minus_s_power(unsigned k) {
  LaurentPoly p;
  for (unsigned i = 0; i <= k; ++i) {
    Integer c = gen_binomial(k, i);
    p.add_term(static_cast<int>(i), i % 2 ? Integer(-c) : c);
  }
  return p;
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_exponent() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
int LaurentPoly::max_exponent() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

Integer LaurentPoly::at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

std::vector<Integer> LaurentPoly::dense() const {
  std::vector<Integer> out;
  if (coeffs_.empty()) return out;
  for (int e = min_exponent(); e <= max_exponent(); ++e) out.push_back(coeff(e));
  return out;
}

void LaurentPoly::add_term(int exponent, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, Integer(-c));
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, Integer(ca * cb));
  return r;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + by, c);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    bool negative = c < 0;
    Integer mag = abs(c);
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "s";
    if (e != 1) out += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
  }
  return out;
}

LaurentPoly laurent_div_power(const LaurentPoly& h, unsigned k) {
  LaurentPoly q = h;
  for (unsigned step = 0; step < k; ++step) {
    if (q.is_zero()) return q;
    // Divide by (1 - s): quotient coefficients are running sums from the low end.
    LaurentPoly next;
    Integer running = 0;
    int lo = q.min_exponent(), hi = q.max_exponent();
    for (int e = lo; e <= hi; ++e) {
      running += q.coeff(e);
      if (e < hi) next.add_term(e, running);
    }
    if (running != 0)
      throw DivisibilityError("not divisible by (1-s)^" + std::to_string(k) + " (remainder at step " +
                              std::to_string(step + 1) + ")");
    q = std::move(next);
  }
  return q;
}

}  // namespace pfres
