#include "pfres/groebner.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <string>

namespace pfres {

namespace {

std::uint32_t support(const Monomial& m) {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) s |= 1u << i;
  return s;
}

// Reduces every term of p by `basis`; cheap support masks reject most divisor candidates.
class Reducer {
 public:
  void add(const Poly& g) {
    polys_.push_back(&g);
    masks_.push_back(support(g.leading_monomial()));
  }

  Poly reduce(Poly p, std::size_t& budget, bool tail = true) const {
    const auto& k = p.field();
    std::size_t pos = 0;
    while (pos < p.size()) {
      const auto& t = p.terms()[pos];
      const Poly* hit = find(t.mono);
      if (!hit) {
        if (!tail) return p;
        ++pos;
        continue;
      }
      if (budget == 0) throw ResourceError("Groebner reduction budget exhausted; use smaller instances");
      --budget;
      Monomial m = hit->leading_monomial().cofactor_in(t.mono);
      auto c = k.mul(t.coeff, k.inv(hit->leading_coeff()));
      p.sub_mul_term(*hit, m, c);
    }
    return p;
  }

 private:
  const Poly* find(const Monomial& m) const {
    std::uint32_t s = support(m);
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if ((masks_[i] & ~s) == 0 && polys_[i]->leading_monomial().divides(m)) return polys_[i];
    return nullptr;
  }

  std::vector<const Poly*> polys_;
  std::vector<std::uint32_t> masks_;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

class Buchberger {
 public:
  explicit Buchberger(const GroebnerLimits& limits) : limits_(limits), budget_(limits.max_reductions) {}

  std::vector<Poly> run(const std::vector<Poly>& gens) {
    for (const auto& g : gens) {
      Poly r = reduce_all(g);
      if (!r.is_zero()) insert(r.monic(), r.total_degree());
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        return ring()->compare(a.lcm, b.lcm) < 0;
      });
      Pair p = *best;
      pairs_.erase(best);
      const Poly& a = basis_[p.i];
      const Poly& b = basis_[p.j];
      Poly s = a.mul_term(a.leading_monomial().cofactor_in(p.lcm), a.field().one());
      s.sub_mul_term(b, b.leading_monomial().cofactor_in(p.lcm), b.field().one());
      Poly r = reduce_all(std::move(s));
      if (r.is_zero()) continue;
      insert(r.monic(), std::max(p.sugar, r.total_degree()));
    }
    return reduced();
  }

 private:
  const PolyRingPtr& ring() const { return basis_.front().ring(); }

  Poly reduce_all(Poly p) {
    Reducer red;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (!redundant_[i]) red.add(basis_[i]);
    return red.reduce(std::move(p), budget_);
  }

  void insert(Poly h, unsigned sugar) {
    if (basis_.size() >= limits_.max_basis) throw ResourceError("Groebner basis grew past the configured size limit");
    const std::size_t n = basis_.size();
    const Monomial lh = h.leading_monomial();

    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < n; ++i) {
      if (redundant_[i]) continue;
      Monomial l = lead_[i].lcm(lh);
      unsigned s = std::max(sugar_[i] + l.degree() - lead_[i].degree(), sugar + l.degree() - lh.degree());
      fresh.push_back({i, n, l, s});
    }
    // Old pairs whose lcm is strictly covered through h.
    std::erase_if(pairs_, [&](const Pair& p) {
      return lh.divides(p.lcm) && !(lead_[p.i].lcm(lh) == p.lcm) && !(lead_[p.j].lcm(lh) == p.lcm);
    });
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      for (std::size_t b = 0; b < fresh.size() && keep[a]; ++b)
        if (b != a && fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) keep[a] = false;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      bool coprime = lead_[fresh[a].i].coprime(lh);
      for (std::size_t b = a + 1; b < fresh.size(); ++b)
        if (keep[b] && fresh[b].lcm == fresh[a].lcm) {
          coprime = coprime || lead_[fresh[b].i].coprime(lh);
          keep[b] = false;
        }
      if (coprime) keep[a] = false;
    }
    for (std::size_t a = 0; a < fresh.size(); ++a)
      if (keep[a]) pairs_.push_back(fresh[a]);

    for (std::size_t i = 0; i < n; ++i)
      if (!redundant_[i] && lh.divides(lead_[i])) redundant_[i] = true;
    basis_.push_back(std::move(h));
    lead_.push_back(lh);
    sugar_.push_back(sugar);
    redundant_.push_back(false);
  }

  std::vector<Poly> reduced() {
    std::vector<Poly> min;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (!redundant_[i]) min.push_back(basis_[i]);
    std::vector<Poly> out;
    for (std::size_t i = 0; i < min.size(); ++i) {
      Reducer red;
      for (std::size_t j = 0; j < min.size(); ++j)
        if (j != i) red.add(min[j]);
      out.push_back(red.reduce(min[i], budget_).monic());
    }
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
      return a.ring()->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return out;
  }

  const GroebnerLimits& limits_;
  std::size_t budget_;
  std::vector<Poly> basis_;
  std::vector<Monomial> lead_;
  std::vector<unsigned> sugar_;
  std::vector<bool> redundant_;
  std::vector<Pair> pairs_;
};

IdealHandle unit_ideal(const PolyRingPtr& ring) {
  Poly one = Poly::constant(ring, std::int64_t{1});
  return IdealHandle(IdealGens(ring, {one}), {one});
}

// Ring with an extra leading variable that the order eliminates first.
PolyRingPtr with_elimination_variable(const PolyRingPtr& ring) {
  std::vector<std::string> names{"_t"};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  std::vector<Bidegree> weights{Bidegree{1, 0}};
  weights.insert(weights.end(), ring->weights().begin(), ring->weights().end());
  return make_ring(ring->field(), names, MonomialOrder{OrderKind::Elimination, 1}, weights);
}

Poly drop_first_variable(const Poly& p, const PolyRingPtr& target) {
  std::vector<Poly::Term> terms;
  for (const auto& t : p.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < target->nvars(); ++i) m.set(i, t.mono[i + 1]);
    terms.push_back({m, t.coeff});
  }
  return Poly::from_terms(target, std::move(terms));
}

// Intersection of the ideals generated by a and b, via t*a + (1-t)*b.
IdealHandle intersect_gens(const PolyRingPtr& ring, const std::vector<Poly>& a, const std::vector<Poly>& b,
                           const GroebnerLimits& limits) {
  auto big = with_elimination_variable(ring);
  std::vector<std::size_t> shift(ring->nvars());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = i + 1;
  Poly t = Poly::variable(big, 0);
  Poly one_minus_t = Poly::constant(big, std::int64_t{1}) - t;
  std::vector<Poly> gens;
  for (const auto& p : a) gens.push_back(t * p.in_ring(big, shift));
  for (const auto& p : b) gens.push_back(one_minus_t * p.in_ring(big, shift));
  auto gb = Buchberger(limits).run(gens);
  std::vector<Poly> kept;
  for (const auto& g : gb)
    if (g.leading_monomial()[0] == 0) kept.push_back(drop_first_variable(g, ring));
  IdealGens out(ring, kept);
  return groebner_basis(out, limits);
}

}  // namespace

IdealHandle::IdealHandle(IdealGens gens, std::vector<Poly> reduced_basis)
    : gens_(std::move(gens)), gb_(std::move(reduced_basis)) {}

void enforce_guard(const IdealGens& ideal, const IdealGuard& guard) {
  if (ideal.ring->nvars() > guard.max_vars)
    throw ResourceError("exact ideal work is limited to " + std::to_string(guard.max_vars) +
                        " variables; verify larger cases through the complex and Hilbert checks");
  for (const auto& p : ideal.gens)
    if (p.total_degree() > guard.max_degree)
      throw ResourceError("exact ideal work is limited to generators of degree <= " +
                          std::to_string(guard.max_degree));
}

IdealHandle groebner_basis(const IdealGens& ideal, const GroebnerLimits& limits) {
  if (ideal.gens.empty()) return IdealHandle(ideal, {});
  return IdealHandle(ideal, Buchberger(limits).run(ideal.gens));
}

Poly normal_form(const Poly& p, const std::vector<Poly>& basis) {
  Reducer red;
  for (const auto& g : basis) red.add(g);
  std::size_t budget = std::numeric_limits<std::size_t>::max();
  return red.reduce(p, budget);
}

bool member(const Poly& p, const IdealHandle& ideal) { return normal_form(p, ideal.basis()).is_zero(); }

bool contains(const IdealHandle& outer, const IdealGens& inner) {
  return std::all_of(inner.gens.begin(), inner.gens.end(), [&](const Poly& p) { return member(p, outer); });
}

bool ideal_equal(const IdealHandle& a, const IdealHandle& b) {
  return contains(a, IdealGens(b.ring(), b.basis())) && contains(b, IdealGens(a.ring(), a.basis()));
}

DimensionGrade dimension_and_grade(const IdealHandle& ideal) {
  if (ideal.is_unit()) return {-1, std::nullopt};
  const std::size_t n = ideal.nvars();
  std::vector<std::uint32_t> leads;
  for (const auto& g : ideal.basis()) leads.push_back(support(g.leading_monomial()));
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int size = std::popcount(s);
    if (size <= best) continue;
    bool independent = std::none_of(leads.begin(), leads.end(), [&](std::uint32_t l) { return (l & ~s) == 0; });
    if (independent) best = size;
  }
  return {best, static_cast<unsigned>(static_cast<int>(n) - best)};
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisibilityError("division by the zero polynomial");
  const auto& k = a.field();
  Poly q(a.ring());
  Poly r = a;
  auto inv = k.inv(b.leading_coeff());
  while (!r.is_zero()) {
    if (!b.leading_monomial().divides(r.leading_monomial())) return std::nullopt;
    Monomial m = b.leading_monomial().cofactor_in(r.leading_monomial());
    auto c = k.mul(r.leading_coeff(), inv);
    q += Poly::term(a.ring(), m, c);
    r.sub_mul_term(b, m, c);
  }
  return q;
}

IdealHandle intersect(const IdealHandle& a, const IdealHandle& b, const GroebnerLimits& limits) {
  if (a.is_zero() || b.is_zero()) return IdealHandle(IdealGens(a.ring()), {});
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  return intersect_gens(a.ring(), a.basis(), b.basis(), limits);
}

IdealHandle colon(const IdealHandle& ideal, const Poly& p, const GroebnerLimits& limits) {
  if (p.is_zero() || member(p, ideal)) return unit_ideal(ideal.ring());
  if (ideal.is_zero()) return ideal;
  auto both = intersect_gens(ideal.ring(), ideal.basis(), {p}, limits);
  IdealGens quotient(ideal.ring());
  for (const auto& g : both.basis()) {
    auto q = divide_exact(g, p);
    if (!q) throw DivisibilityError("intersection generator not divisible by the colon element");
    quotient.add(*q);
  }
  return groebner_basis(quotient, limits);
}

IdealHandle colon(const IdealHandle& ideal, const IdealGens& by, const GroebnerLimits& limits) {
  std::optional<IdealHandle> acc;
  for (const auto& p : by.gens) {
    auto c = colon(ideal, p, limits);
    acc = acc ? intersect(*acc, c, limits) : c;
    if (acc->is_zero()) break;
  }
  return acc ? *acc : unit_ideal(ideal.ring());
}

Saturation saturate(const IdealHandle& ideal, const IdealGens& by, const GroebnerLimits& limits) {
  IdealHandle prev = ideal;
  for (unsigned n = 1; n <= 64; ++n) {
    IdealHandle next = colon(prev, by, limits);
    if (contains(prev, IdealGens(next.ring(), next.basis()))) return {prev, n - 1};
    prev = std::move(next);
  }
  throw ResourceError("saturation did not stabilize within 64 steps");
}

LaurentPoly monomial_hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars) {
  // Keep minimal generators only.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> min;
  for (const auto& m : gens)
    if (std::none_of(min.begin(), min.end(), [&](const Monomial& d) { return d.divides(m); })) min.push_back(m);
  if (min.empty()) return LaurentPoly::monomial(0);
  if (min.front().is_one()) return LaurentPoly{};

  bool coprime = true;
  for (std::size_t a = 0; a < min.size() && coprime; ++a)
    for (std::size_t b = a + 1; b < min.size() && coprime; ++b) coprime = min[a].coprime(min[b]);
  if (coprime) {
    LaurentPoly k = LaurentPoly::monomial(0);
    for (const auto& m : min) k = k * (LaurentPoly::monomial(0) - LaurentPoly::monomial(static_cast<int>(m.degree())));
    return k;
  }
  // HS(R/I) = HS(R/(I + x)) + s HS(R/(I : x)) with x the most shared variable.
  std::vector<unsigned> count(nvars, 0);
  for (const auto& m : min)
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i]) ++count[i];
  std::size_t x = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  Monomial var = Monomial::variable(nvars, x);
  std::vector<Monomial> plus = min, quot;
  plus.push_back(var);
  for (const auto& m : min) {
    Monomial q = m;
    if (q[x]) q.set(x, q[x] - 1);
    quot.push_back(q);
  }
  return monomial_hilbert_numerator(std::move(plus), nvars) +
         LaurentPoly::monomial(1) * monomial_hilbert_numerator(std::move(quot), nvars);
}

LaurentPoly hilbert_numerator(const IdealHandle& ideal) {
  std::vector<Monomial> leads;
  for (const auto& g : ideal.basis()) leads.push_back(g.leading_monomial());
  return monomial_hilbert_numerator(std::move(leads), ideal.nvars());
}

}  // namespace pfres
