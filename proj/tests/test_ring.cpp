#include <gtest/gtest.h>

#include <random>

#include "pfres/laurent.hpp"
#include "pfres/polynomial.hpp"

using namespace pfres;

namespace {

QPoly qvar(const RingPtr<RationalField>& r, std::size_t i) { return QPoly::variable(r, i); }

template <Field K>
Polynomial<K> random_poly(const RingPtr<K>& ring, std::mt19937_64& rng) {
  std::vector<typename Polynomial<K>::Term> terms;
  int n = static_cast<int>(rng() % 5);
  for (int t = 0; t < n; ++t) {
    Monomial m(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) m.set(i, rng() % 3);
    terms.push_back({m, ring->field().from_int(static_cast<std::int64_t>(rng() % 21) - 10)});
  }
  return Polynomial<K>::from_terms(ring, std::move(terms));
}

}  // namespace

TEST(Field, RejectsEvenOrCompositeCharacteristic) {
  EXPECT_THROW(PrimeField(2), StructuralError);
  EXPECT_THROW(PrimeField(9), StructuralError);
  EXPECT_NO_THROW(PrimeField(32003));
}

TEST(Field, InverseAndCanonicalForm) {
  PrimeField k(7);
  EXPECT_EQ(k.from_int(-1), 6u);
  for (std::uint32_t a = 1; a < 7; ++a) EXPECT_EQ(k.mul(a, k.inv(a)), 1u);
  EXPECT_THROW(k.inv(0), DivisibilityError);
}

TEST(Poly, DifferenceOfSquaresOverQ) {
  auto r = make_ring(RationalField{}, indexed_names("T", 2));
  auto a = qvar(r, 0) + qvar(r, 1);
  auto b = qvar(r, 0) - qvar(r, 1);
  EXPECT_EQ(a * b, qvar(r, 0) * qvar(r, 0) - qvar(r, 1) * qvar(r, 1));
  EXPECT_TRUE((a * QPoly(r)).is_zero());
}

TEST(Poly, MismatchedRingsRejected) {
  auto r1 = make_ring(PrimeField{}, indexed_names("T", 2));
  auto r2 = make_ring(PrimeField{}, indexed_names("T", 3));
  EXPECT_THROW(Poly::variable(r1, 0) + Poly::variable(r2, 0), StructuralError);
}

TEST(Poly, Evaluate) {
  auto r = make_ring(PrimeField{}, indexed_names("T", 3));
  auto p = Poly::variable(r, 0) * Poly::variable(r, 1) + Poly::variable(r, 2);
  std::vector<std::uint32_t> pt{1, 2, 3};
  EXPECT_EQ(p.evaluate(pt), 5u);
  EXPECT_EQ(Poly(r).evaluate(pt), 0u);
  std::vector<std::uint32_t> shortpt{1};
  EXPECT_THROW(p.evaluate(shortpt), StructuralError);
  auto r7 = make_ring(PrimeField(7), indexed_names("T", 1));
  auto t = Poly::variable(r7, 0);
  std::vector<std::uint32_t> two{2};
  EXPECT_EQ((t * t * t * t).evaluate(two), 2u);
}

TEST(Poly, DegrevlexOrder) {
  auto r = make_ring(PrimeField{}, indexed_names("T", 3));
  auto p = parse_polynomial(r, "T3^2 + T1*T3 + T2^2 + T1");
  // T2^2 > T1*T3 > T3^2 in degrevlex with T1 > T2 > T3.
  EXPECT_EQ(p.to_string(), "T2^2 + T1*T3 + T3^2 + T1");
}

TEST(Poly, ParserRoundTripAndErrors) {
  auto r = make_ring(PrimeField{}, indexed_names("T", 3));
  auto p = parse_polynomial(r, "3*T1^2*T2 - (T3 - 1)^2 + 5");
  EXPECT_EQ(parse_polynomial(r, p.to_string()), p);
  EXPECT_THROW(parse_polynomial(r, "T1 + Q"), ParseError);
  EXPECT_THROW(parse_polynomial(r, "T1 +"), ParseError);
}

TEST(Poly, RingAxiomsRandom) {
  std::mt19937_64 rng(11);
  auto rp = make_ring(PrimeField{}, indexed_names("T", 3));
  auto rq = make_ring(RationalField{}, indexed_names("T", 3));
  for (int it = 0; it < 500; ++it) {
    auto a = random_poly(rp, rng), b = random_poly(rp, rng), c = random_poly(rp, rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + b, b + a);
    auto x = random_poly(rq, rng), y = random_poly(rq, rng), z = random_poly(rq, rng);
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_TRUE((x - x).is_zero());
  }
}

TEST(Poly, SubMulTermMatchesArithmetic) {
  std::mt19937_64 rng(5);
  auto r = make_ring(PrimeField{}, indexed_names("T", 3));
  for (int it = 0; it < 200; ++it) {
    auto a = random_poly(r, rng), q = random_poly(r, rng);
    Monomial m = Monomial::variable(3, rng() % 3, rng() % 3);
    std::uint32_t c = static_cast<std::uint32_t>(rng() % 100);
    auto expect = a - q * Poly::term(r, m, c);
    a.sub_mul_term(q, m, c);
    ASSERT_EQ(a, expect);
  }
}

TEST(Binomial, Examples) {
  EXPECT_EQ(gen_binomial(-1, 3), -1);
  EXPECT_EQ(gen_binomial(5, 0), 1);
  EXPECT_EQ(gen_binomial(-3, 2), 6);
  EXPECT_EQ(gen_binomial(4, -1), 0);
  EXPECT_EQ(gen_binomial(3, 5), 0);
  for (long b = 0; b < 10; ++b) EXPECT_EQ(gen_binomial(-1, b), b % 2 ? -1 : 1);
}

TEST(Binomial, PascalRule) {
  for (long a = -30; a <= 30; ++a)
    for (long b = 0; b <= 30; ++b)
      ASSERT_EQ(gen_binomial(a, b), gen_binomial(a - 1, b) + gen_binomial(a - 1, b - 1)) << a << " " << b;
}

TEST(Laurent, DivPowerExamples) {
  auto h = LaurentPoly::from_coeffs(0, {1, 0, -12, 28, -27, 12, -2});
  EXPECT_EQ(laurent_div_power(h, 4), LaurentPoly::from_coeffs(0, {1, 4, -2}));
  EXPECT_EQ(laurent_div_power(LaurentPoly::one_minus_s_power(3), 3), LaurentPoly::monomial(0));
  EXPECT_EQ(laurent_div_power(LaurentPoly::from_coeffs(0, {1, 0, -1}), 1), LaurentPoly::from_coeffs(0, {1, 1}));
  EXPECT_THROW(laurent_div_power(LaurentPoly::from_coeffs(0, {1, 1}), 1), DivisibilityError);
}

TEST(Laurent, DivPowerInvertsMultiplication) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    std::vector<Integer> c;
    for (int i = 0; i < 6; ++i) c.emplace_back(static_cast<long>(rng() % 19) - 9);
    auto h = LaurentPoly::from_coeffs(static_cast<int>(rng() % 7) - 3, c);
    unsigned k = static_cast<unsigned>(rng() % 7);
    ASSERT_EQ(laurent_div_power(h * LaurentPoly::one_minus_s_power(k), k), h);
  }
}
