#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pfres/laurent.hpp"
#include "pfres/polynomial.hpp"
#include "pfres/seed.hpp"

namespace pfres {

// Work bounds for one Buchberger run; exceeding them raises ResourceError.
struct GroebnerLimits {
  std::size_t max_basis = 20000;
  std::size_t max_reductions = 400000;
};

// Input bounds for exact ideal work requested from the command line.
struct IdealGuard {
  std::size_t max_vars = 8;
  unsigned max_degree = 6;
};
void enforce_guard(const IdealGens& ideal, const IdealGuard& guard);

// Ideal with its reduced degrevlex Groebner basis.
class IdealHandle {
 public:
  IdealHandle(IdealGens gens, std::vector<Poly> reduced_basis);

  const IdealGens& gens() const { return gens_; }
  const std::vector<Poly>& basis() const { return gb_; }
  const PolyRingPtr& ring() const { return gens_.ring; }
  std::size_t nvars() const { return gens_.ring->nvars(); }
  bool is_unit() const { return gb_.size() == 1 && gb_.front().is_constant(); }
  bool is_zero() const { return gb_.empty(); }

 private:
  IdealGens gens_;
  std::vector<Poly> gb_;
};

IdealHandle groebner_basis(const IdealGens& ideal, const GroebnerLimits& limits = {});
Poly normal_form(const Poly& p, const std::vector<Poly>& basis);
bool member(const Poly& p, const IdealHandle& ideal);
// Every generator of `inner` lies in `outer`.
bool contains(const IdealHandle& outer, const IdealGens& inner);
bool ideal_equal(const IdealHandle& a, const IdealHandle& b);

struct DimensionGrade {
  int dim;                      // -1 for the unit ideal
  std::optional<unsigned> grade;  // empty means infinite
};
DimensionGrade dimension_and_grade(const IdealHandle& ideal);

// Exact quotient a / b, or nothing when b does not divide a.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

IdealHandle intersect(const IdealHandle& a, const IdealHandle& b, const GroebnerLimits& limits = {});
IdealHandle colon(const IdealHandle& ideal, const Poly& p, const GroebnerLimits& limits = {});
IdealHandle colon(const IdealHandle& ideal, const IdealGens& by, const GroebnerLimits& limits = {});

struct Saturation {
  IdealHandle ideal;
  unsigned exponent;  // smallest n with I : J^n = I : J^infinity
};
Saturation saturate(const IdealHandle& ideal, const IdealGens& by, const GroebnerLimits& limits = {});

// K(s) with HS(R/(monomials)) = K(s) / (1-s)^nvars.
LaurentPoly monomial_hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars);
// Same for R/I through its leading-term ideal (standard grading).
LaurentPoly hilbert_numerator(const IdealHandle& ideal);

}  // namespace pfres
