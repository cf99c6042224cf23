#include "pfres/hilbert.hpp"

#include <functional>
#include <sstream>

#include "pfres/divided.hpp"
#include "pfres/errors.hpp"
#include "pfres/seed.hpp"

namespace pfres {

namespace {

Integer sign(long e) { return e % 2 == 0 ? Integer(1) : Integer(-1); }

void check_window(unsigned g, unsigned f, int eps) {
  if (g < 1 || g >= f) throw StructuralError("need 1 <= g < f");
  unsigned delta = f - g;
  if (eps < epsilon_min(delta) || eps > epsilon_max(delta))
    throw StructuralError("epsilon must lie in [ceil((delta-1)/2), ceil(delta/2)]");
  if (hn_excluded(g, f))
    throw UnsupportedCase("g = 1 with f even: the quotient HN/(1-s)^(f-g) is 1 - s, not a Hilbert numerator");
}

std::string fmt(const Integer& a) { return a.get_str(); }

}  // namespace

bool hn_excluded(unsigned g, unsigned f) { return g == 1 && f % 2 == 0; }

LaurentPoly hilbert_numerator(const BettiTable& t) {
  LaurentPoly hn;
  for (const auto& col : t)
    for (const auto& [d, r] : col.by_degree)
      hn.add_term(d, sign(col.position) * Integer(static_cast<unsigned long>(r)));
  return hn;
}

LaurentPoly hilbert_numerator(const FreeComplex& c) { return hilbert_numerator(betti_of(as_matrix_complex(c))); }

LaurentPoly hilbert_numerator(const std::vector<LayoutEntry>& layout) {
  LaurentPoly hn;
  for (const auto& e : layout) hn.add_term(-e.twist[0], sign(e.degree) * Integer(static_cast<unsigned long>(e.rank)));
  return hn;
}

LaurentPoly hn_from_complex(const FreeComplex& c, unsigned g, unsigned f) {
  return laurent_div_power(hilbert_numerator(c), f - g);
}

LaurentPoly hn_closed_1(unsigned g, unsigned f, int eps) {
  check_window(g, f, eps);
  const long G = g, F = f, delta = F - G;
  LaurentPoly bottom;
  for (long j = 0; j <= eps - 1; ++j) bottom.add_term(static_cast<int>(2 * j + 2 * G - F), sign(delta + 1) * gen_binomial(G + j - 1, j));
  LaurentPoly hn = LaurentPoly::one_minus_s_power(g) * bottom;
  for (long l = 0; l <= G - 2; ++l) hn.add_term(static_cast<int>(l), gen_binomial(l + delta - 1, l));
  for (long l = 0; l <= delta - 2; ++l)
    hn.add_term(static_cast<int>(l + 2 * G - F), sign(l + delta) * gen_binomial(G + l - 1, l));
  return hn;
}

unsigned h_degree(unsigned g, unsigned f, int eps) {
  int twice = 2 * eps - static_cast<int>(f - g);  // -1, 0 or 1
  return static_cast<unsigned>(2 * static_cast<int>(g) - 2 + twice);
}

LaurentPoly hn_closed_2(unsigned g, unsigned f, int eps) {
  check_window(g, f, eps);
  const long G = g, F = f, delta = F - G;
  LaurentPoly hn;
  for (long l = 0; l <= G - 1; ++l) hn.add_term(static_cast<int>(l), gen_binomial(l + delta - 1, l));
  if (2 * eps == delta - 1) hn.add_term(static_cast<int>(G - 1), -gen_binomial(G + eps - 1, eps));
  const long q = h_degree(g, f, eps);
  for (long l = G; l <= q; ++l)
    for (long j = 0; j <= eps - 1; ++j)
      hn.add_term(static_cast<int>(l),
                  sign(l + G + 1) * gen_binomial(G, l - 2 * G + F - 2 * j) * gen_binomial(G + j - 1, j));
  return hn;
}

Integer HVector::sum() const {
  Integer s = 0;
  for (const auto& h : entries) s += h;
  return s;
}

HVector h_vector(unsigned g, unsigned f, int eps) {
  auto hn = hn_closed_2(g, f, eps);
  const int q = static_cast<int>(h_degree(g, f, eps));
  if (!hn.is_zero() && (hn.min_exponent() < 0 || hn.max_exponent() > q))
    throw StructuralError("h-vector has terms outside degrees 0.." + std::to_string(q));
  HVector h;
  for (int l = 0; l <= q; ++l) h.entries.push_back(hn.coeff(l));
  return h;
}

Integer count_monomials(unsigned nvars, unsigned max_degree, unsigned parity) {
  Integer count = 0;
  // Walk exponent vectors by the degree used so far.
  std::function<void(unsigned, unsigned)> walk = [&](unsigned var, unsigned used) {
    if (var == nvars) {
      if (used % 2 == parity % 2) ++count;
      return;
    }
    for (unsigned e = 0; used + e <= max_degree; ++e) walk(var + 1, used + e);
  };
  walk(0, 0);
  return count;
}

Multiplicity multiplicity(unsigned g, unsigned f) {
  if (g < 1 || g >= f) throw StructuralError("need 1 <= g < f");
  if (hn_excluded(g, f)) throw UnsupportedCase("g = 1 with f even has no multiplicity formula");
  const long F = f, delta = f - g;
  Multiplicity m{0, 0};
  for (long i = 0; i <= delta / 2; ++i) m.value += gen_binomial(F - 2 - 2 * i, delta - 2 * i);
  m.monomial_count = count_monomials(g - 1, static_cast<unsigned>(delta), static_cast<unsigned>(delta % 2));
  return m;
}

std::string to_string(Identity id) {
  switch (id) {
    case Identity::GammaLemma: return "gamma_lemma";
    case Identity::K95_12g: return "K95_12g";
    case Identity::L23_8_1: return "L23_8_1";
    case Identity::L23_9: return "L23_9";
    case Identity::L25_1: return "L25_1";
  }
  return "?";
}

std::optional<Identity> identity_from_name(std::string_view name) {
  for (auto id : {Identity::GammaLemma, Identity::K95_12g, Identity::L23_8_1, Identity::L23_9, Identity::L25_1})
    if (to_string(id) == name) return id;
  return std::nullopt;
}

int default_bound(Identity id) {
  switch (id) {
    case Identity::GammaLemma: return 25;
    default: return 30;
  }
}

SweepReport identity_sweep(Identity id, int bound) {
  SweepReport rep{id, bound, 0, 0, ""};
  auto record = [&](bool ok, const std::function<std::string()>& where) {
    ++rep.instances;
    if (ok) return;
    if (rep.violations++ == 0) rep.first_violation = where();
  };
  auto B = [](long a, long b) { return gen_binomial(a, b); };

  switch (id) {
    case Identity::K95_12g:
      for (long a = 0; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b)
          for (long c = -bound; c <= bound; ++c) {
            Integer lhs = 0;
            for (long k = 0; k <= a; ++k) lhs += sign(k) * B(b + k, c + k) * B(a, k);
            Integer rhs = sign(a) * B(b, a + c);
            record(lhs == rhs, [&] {
              std::ostringstream o;
              o << "a=" << a << " b=" << b << " c=" << c << ": " << fmt(lhs) << " != " << fmt(rhs);
              return o.str();
            });
          }
      break;
    case Identity::L23_8_1:
    case Identity::L23_9:
      for (long F = 0; F <= bound; ++F)
        for (long G = 0; G <= F; ++G)
          for (long J = 0; J <= F; ++J) {
            bool upper = id == Identity::L23_8_1;
            Integer lhs = sign(upper ? J : J - 1) * B(F - J, G - 1) * B(F, J - 1);
            Integer rhs = 0;
            long lo = upper ? J : 0, hi = upper ? F - G + 1 : J - 1;
            for (long m = lo; m <= hi; ++m) rhs += sign(m) * B(F - J + m, G - J + m) * B(F - G + 1, m);
            record(lhs == rhs, [&] {
              std::ostringstream o;
              o << "F=" << F << " G=" << G << " J=" << J << ": " << fmt(lhs) << " != " << fmt(rhs);
              return o.str();
            });
          }
      break;
    case Identity::L25_1:
      for (long f = 1; f <= bound; ++f)
        for (long g = 1; g <= f; ++g)
          for (long L = -10; L <= f + 5; ++L) {
            Integer lhs = (L == 0 && f >= 2) ? sign(g) : Integer(0);
            Integer rhs = B(f - 2, L) * B(L - 1, g - 2);
            for (long l = 0; l <= f - g - 2; ++l) rhs += B(f - g, g - L + l) * B(g + l - 1, l);
            for (long l = std::max(0L, L - g + 1); 2 * l + 2 * g - L <= f; ++l)
              rhs -= B(f, 2 * l + 2 * g - L) * B(g + l - 1, l);
            record(lhs == rhs, [&] {
              std::ostringstream o;
              o << "f=" << f << " g=" << g << " L=" << L << ": " << fmt(lhs) << " != " << fmt(rhs);
              return o.str();
            });
          }
      break;
    case Identity::GammaLemma: {
      auto ring = make_ring(RationalField(), {"x"});
      using E = DivElem<RationalField>;
      using P = Polynomial<RationalField>;
      for (unsigned g = 1; g <= 4; ++g) {
        std::vector<std::vector<DivMono>> by_degree;
        for (unsigned a = 0; a <= static_cast<unsigned>(std::max(bound, 0)); ++a) by_degree.push_back(monomials_Y(g, a));
        for (unsigned b = 0; b <= static_cast<unsigned>(bound); ++b)
          for (unsigned a = 0; a <= b; ++a)
            for (const auto& gm : by_degree[b]) {
              E gamma = E::basis(ring, gm);
              E lhs(ring, g, b);
              for (const auto& m : by_degree[a]) {
                auto down = act_Y(m, gamma);
                if (!down.is_zero()) lhs += E::basis(ring, m) * down;
              }
              E rhs = gamma.scaled(P::constant(ring, RationalField().from_integer(B(b, a))));
              record(lhs == rhs, [&] {
                return "g=" + std::to_string(g) + " A=" + std::to_string(a) + " Gamma=" + gm.to_string();
              });
            }
      }
      break;
    }
  }
  return rep;
}

}  // namespace pfres
