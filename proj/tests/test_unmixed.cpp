#include <gtest/gtest.h>

#include "pfres/groebner.hpp"
#include "pfres/seed.hpp"

using namespace pfres;

namespace {

SeedData generic(unsigned f, unsigned g, std::uint64_t rng_seed, int eps = -1) {
  return SeedData::generic({f, g, eps < 0 ? epsilon_max(f - g) : eps, PrimeField::kDefaultPrime, rng_seed, 1});
}

IdealHandle minors_ideal(const SeedData& s) { return groebner_basis(maximal_minors(build_psi(s))); }

}  // namespace

TEST(Unmixed, GradeOfMinorsIsDelta) {
  for (auto [f, g] : {std::pair{5u, 2u}, {4u, 2u}, {4u, 1u}, {5u, 3u}, {6u, 3u}}) {
    auto s = generic(f, g, 3);
    auto dg = dimension_and_grade(minors_ideal(s));
    ASSERT_TRUE(dg.grade.has_value());
    EXPECT_GE(*dg.grade, f - g) << f << " " << g;
    if (f == 5 && g == 2) EXPECT_EQ(*dg.grade, 3u);
    EXPECT_EQ(dimension_and_grade(groebner_basis(tau_ideal(s))).grade, f);
  }
}

TEST(Unmixed, ColonAddsC) {
  auto s = generic(5, 2, 4);
  auto ig = minors_ideal(s);
  auto tau = tau_ideal(s);
  auto c = unmixed_gens(s);
  ASSERT_EQ(c.size(), 2u);
  for (const auto& p : c.gens) EXPECT_EQ(p.homogeneous_degree(), 1u);
  IdealGens sum = IdealGens(s.ring(), ig.basis()) + c;
  auto plus = groebner_basis(sum);
  auto col = colon(ig, tau);
  auto sat = saturate(ig, tau);
  EXPECT_TRUE(ideal_equal(plus, col));
  EXPECT_TRUE(ideal_equal(col, sat.ideal));
  EXPECT_GE(sat.exponent, 1u);
  EXPECT_FALSE(ideal_equal(ig, col));
}

TEST(Unmixed, EvenDeltaColonIsTrivial) {
  auto s = generic(4, 2, 9);
  auto ig = minors_ideal(s);
  EXPECT_TRUE(ideal_equal(colon(ig, tau_ideal(s)), ig));
  EXPECT_TRUE(unmixed_gens(s).empty());
}

TEST(Unmixed, TauTimesCInMinors) {
  for (std::uint64_t r = 0; r < 20; ++r) {
    unsigned g = 1 + static_cast<unsigned>(r % 3);
    unsigned f = g + 1 + 2 * static_cast<unsigned>(r % 2);
    if (f > 6) f -= 2;
    auto s = generic(f, g, 100 + r);
    ASSERT_EQ((f - g) % 2, 1u);
    auto ig = minors_ideal(s);
    auto c = unmixed_gens(s);
    ASSERT_FALSE(c.empty());
    for (const auto& t : s.tau_images())
      for (const auto& p : c.gens) ASSERT_TRUE(member(t * p, ig)) << "f=" << f << " g=" << g;
  }
}

TEST(Unmixed, DistinguishedIndexInvariance) {
  for (auto [f, g] : {std::pair{5u, 2u}, {4u, 3u}, {6u, 3u}, {4u, 1u}}) {
    auto s = generic(f, g, 21);
    auto base = groebner_basis(unmixed_gens(s));
    for (unsigned k = 2; k <= g; ++k)
      EXPECT_TRUE(ideal_equal(base, groebner_basis(unmixed_gens(s.with_distinguished(k))))) << f << g << k;
  }
}

TEST(Unmixed, ContentMatchesC) {
  // Content generators equal c with the last index distinguished, n + d odd.
  for (auto [n, d] : {std::pair{5u, 2u}, {5u, 4u}, {6u, 3u}}) {
    auto s = generic(n, d, 13);
    auto content = groebner_basis(pfaffian_content(std::span<const Alt>(s.alt_matrices()), n));
    auto c = groebner_basis(unmixed_gens(s.with_distinguished(d)));
    EXPECT_TRUE(ideal_equal(content, c)) << n << " " << d;
  }
  // n + d even: both sides vanish.
  auto s = generic(5, 3, 13);
  EXPECT_TRUE(pfaffian_content(std::span<const Alt>(s.alt_matrices()), 5).empty());
  EXPECT_TRUE(unmixed_gens(s).empty());
}
