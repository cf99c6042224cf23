#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfres/laurent.hpp"
#include "pfres/verify.hpp"

namespace pfres {

// g = 1 with f even: HN / (1-s)^(f-g) is 1 - s, not a Hilbert numerator of H_0.
bool hn_excluded(unsigned g, unsigned f);

// Alternating sum of s^(generator degree) over the free modules.
LaurentPoly hilbert_numerator(const BettiTable& t);
LaurentPoly hilbert_numerator(const FreeComplex& c);
LaurentPoly hilbert_numerator(const std::vector<LayoutEntry>& layout);
// HN divided by (1-s)^(f-g). Throws DivisibilityError if the division is not exact.
LaurentPoly hn_from_complex(const FreeComplex& c, unsigned g, unsigned f);

// First closed form: (1-s)^g-weighted bottom sum plus the two binomial sums.
LaurentPoly hn_closed_1(unsigned g, unsigned f, int epsilon);
// Second closed form, written coefficient by coefficient up to degree q.
LaurentPoly hn_closed_2(unsigned g, unsigned f, int epsilon);

// Top index of the h-vector: 2g-3, 2g-2 or 2g-1 as epsilon is (delta-1)/2, delta/2 or (delta+1)/2.
unsigned h_degree(unsigned g, unsigned f, int epsilon);

struct HVector {
  std::vector<Integer> entries;  // h_0 ... h_q
  Integer sum() const;
  friend bool operator==(const HVector&, const HVector&) = default;
};
HVector h_vector(unsigned g, unsigned f, int epsilon);

struct Multiplicity {
  Integer value;           // sum of binom(f-2-2i, delta-2i)
  Integer monomial_count;  // monomials of degree <= delta and parity of delta in g-1 variables
};
Multiplicity multiplicity(unsigned g, unsigned f);
// Enumerates exponent vectors; nvars = 0 counts the constant monomial only.
Integer count_monomials(unsigned nvars, unsigned max_degree, unsigned parity);

enum class Identity { GammaLemma, K95_12g, L23_8_1, L23_9, L25_1 };
std::string to_string(Identity id);
std::optional<Identity> identity_from_name(std::string_view name);
// Default parameter box per identity.
int default_bound(Identity id);

struct SweepReport {
  Identity identity;
  int bound = 0;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::string first_violation;
  bool pass() const { return violations == 0; }
};
SweepReport identity_sweep(Identity id, int bound);

}  // namespace pfres
