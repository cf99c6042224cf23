#include <gtest/gtest.h>

#include "pfres/verify.hpp"

using namespace pfres;

namespace {

SeedData generic(unsigned f, unsigned g, int eps, std::uint64_t rng_seed = 7) {
  return SeedData::generic({f, g, eps, PrimeField::kDefaultPrime, rng_seed, 1});
}

long binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long v_rank(long f, long g, long i, long j) { return binom(f, i) * binom(g + j - 1, j); }

// Top and bottom counts straight from the bigraded ranks.
long beta_bottom(long f, long g, long eps, long n) {
  long delta = f - g, s = 0;
  for (long j = 0; j <= eps - 1; ++j) {
    long i = n + delta - 1 - 2 * j;
    if (i >= 0 && i <= f && i + j >= delta) s += v_rank(f, g, i, j);
  }
  return s;
}

long beta_top(long f, long g, long eps, long n) {
  long delta = f - g, s = 0;
  for (long j = eps; 2 * j <= n + delta; ++j) {
    long i = n + delta - 2 - 2 * j;
    if (i >= 0 && i + j <= delta - 1) s += v_rank(f, g, i, j);
  }
  return s;
}

// Length of the resolution; g = 1 with the low epsilon and odd delta is left out.
int expected_pd(int f, int g, int eps) {
  int delta = f - g;
  bool even = delta % 2 == 0;
  if (eps == (delta + 1) / 2) return even ? f - 1 : f;
  if (even) return f - 1;
  return delta == 1 ? 1 : f - 2;
}

std::vector<std::size_t> sizes(std::initializer_list<std::size_t> v) { return v; }

}  // namespace

TEST(Checks, PassOnConstructedComplexes) {
  auto s = generic(6, 3, 2);
  for (auto which : {TotKind::V, TotKind::U, TotKind::T, TotKind::B})
    EXPECT_TRUE(check_complex(build_tot(s, which)).pass) << to_string(which);
  EXPECT_TRUE(check_complex(build_M(s)).pass);
  EXPECT_TRUE(check_complex(build_L(s)).pass);
  auto t = build_tot(s, TotKind::T), b = build_tot(s, TotKind::B);
  EXPECT_TRUE(check_chain_map(t, b, build_xi(s, t, b)).pass);
}

TEST(Checks, FlippedSignIsCaught) {
  auto s = generic(5, 2, 2);
  auto m = build_M(s);
  auto& d = m.mutable_differential(2);
  auto hit = d.first_nonzero();
  ASSERT_TRUE(hit);
  d.set(hit->first, hit->second, -d.at(hit->first, hit->second));
  auto rep = check_complex(m);
  EXPECT_FALSE(rep.pass);
  EXPECT_FALSE(rep.detail.empty());
}

TEST(Checks, MissingCIsCaughtAtOne) {
  auto s = generic(5, 2, 1);
  auto t = build_tot(s, TotKind::T), b = build_tot(s, TotKind::B);
  auto xi = build_xi(s, t, b);
  ASSERT_TRUE(xi.at(0));
  xi.maps.at(0) = SparsePolyMatrix(s.ring(), xi.at(0)->rows(), xi.at(0)->cols());
  auto rep = check_chain_map(t, b, xi);
  EXPECT_FALSE(rep.pass);
  EXPECT_NE(rep.detail.find("N=1"), std::string::npos) << rep.detail;
}

TEST(Betti, KnownTables) {
  struct Case {
    unsigned f, g;
    int eps;
    std::vector<std::size_t> want;
  };
  std::vector<Case> cases{{9, 3, 3, sizes({1, 74, 324, 642, 730, 510, 219, 54, 6})},
                          {6, 2, 2, sizes({1, 12, 28, 27, 12, 2})},
                          {6, 3, 2, sizes({1, 20, 54, 66, 46, 18, 3})}};
  for (const auto& c : cases) {
    auto m = build_M(generic(c.f, c.g, c.eps));
    auto base = minimal_betti(m, 0);
    EXPECT_EQ(totals(base), c.want) << c.f << " " << c.g;
    EXPECT_EQ(betti_from_constant_ranks(m), base);
    if (c.f < 9)
      for (std::uint64_t p = 1; p < 5; ++p) EXPECT_EQ(minimal_betti(m, p), base) << "pivot order " << p;
    long euler = 0;
    for (std::size_t n = 0; n < c.want.size(); ++n) euler += (n % 2 ? -1L : 1L) * static_cast<long>(c.want[n]);
    EXPECT_EQ(euler, 0);
    EXPECT_TRUE(check_linearity(base, c.g));
  }
}

TEST(Betti, PivotOrderIndependence) {
  for (auto [f, g, eps] : {std::tuple{8u, 3u, 3}, {7u, 4u, 1}, {7u, 2u, 2}}) {
    auto m = build_M(generic(f, g, eps));
    auto base = minimal_betti(m, 11);
    EXPECT_EQ(betti_from_constant_ranks(m), base);
    for (std::uint64_t p = 12; p < 16; ++p) EXPECT_EQ(minimal_betti(m, p), base);
  }
}

TEST(Betti, NineThreeDegrees) {
  auto m = build_M(generic(9, 3, 3));
  auto raw = betti_of(as_matrix_complex(m));
  ASSERT_EQ(raw.size(), 9u);
  EXPECT_EQ(raw[1].by_degree, (std::map<int, std::size_t>{{3, 84}}));
  EXPECT_EQ(raw[6].by_degree, (std::map<int, std::size_t>{{7, 21}, {8, 219}}));
  EXPECT_EQ(raw[8].by_degree, (std::map<int, std::size_t>{{10, 6}}));
  auto min = betti_from_constant_ranks(m);
  EXPECT_EQ(min[6].by_degree, (std::map<int, std::size_t>{{8, 219}}));
}

TEST(Betti, DifferenceOfTopAndBottom) {
  for (unsigned f = 2; f <= 7; ++f)
    for (unsigned g = 1; g < f; ++g) {
      int eps = epsilon_max(f - g);
      auto b = totals(minimal_betti(build_M(generic(f, g, eps))));
      ASSERT_EQ(b[0], 1u);
      for (std::size_t n = 1; n < b.size() + 2; ++n) {
        long want = beta_bottom(f, g, eps, static_cast<long>(n)) - beta_top(f, g, eps, static_cast<long>(n) + 1);
        long got = n < b.size() ? static_cast<long>(b[n]) : 0;
        EXPECT_EQ(got, want) << "f=" << f << " g=" << g << " N=" << n;
      }
    }
}

TEST(Betti, TildeCaseIsNotLinear) {
  auto b = minimal_betti(build_M(generic(7, 4, 1)));
  EXPECT_FALSE(check_linearity(b, 4));
  EXPECT_GT(b[1].by_degree.size(), 1u);
}

TEST(Betti, LengthIsProjectiveDimension) {
  for (int f = 2; f <= 7; ++f)
    for (int g = 1; g < f; ++g)
      for (int eps : {epsilon_min(f - g), epsilon_max(f - g)}) {
        int delta = f - g;
        if (g == 1 && delta % 2 == 1 && eps < (delta + 1) / 2) continue;
        auto b = minimal_betti(build_M(generic(f, g, eps)));
        EXPECT_EQ(static_cast<int>(b.size()) - 1, expected_pd(f, g, eps)) << f << " " << g << " " << eps;
        EXPECT_EQ(n_max(f, g, eps), expected_pd(f, g, eps));
      }
}

TEST(Acyclicity, SmallCases) {
  for (auto [g, f] : {std::pair{1u, 3u}, {1u, 4u}, {2u, 4u}, {2u, 5u}, {3u, 5u}})
    for (int eps : {epsilon_min(f - g), epsilon_max(f - g)}) {
      auto c = minimize(build_M(generic(f, g, eps)));
      auto rep = acyclicity_probabilistic(c);
      EXPECT_TRUE(rep.pass) << f << " " << g << " " << eps << ": " << rep.detail;
      EXPECT_LT(rep.failure_bound, 1e-3);
      for (const auto& gr : rep.grades)
        EXPECT_EQ(gr.status, GradeStatus::Verified) << f << " " << g << " k=" << gr.k;
    }
}

TEST(Acyclicity, ZeroColumnFails) {
  auto c = minimize(build_M(generic(5, 2, 2)));
  auto& d = c.d.at(c.top());
  d.set_column(0, {});
  EXPECT_FALSE(acyclicity_probabilistic(c).pass);
}

TEST(Acyclicity, NonResolutionFails) {
  // Ranks are right but I_1(d_2) = T1 (T1, T2) has grade 1.
  auto r = make_ring(PrimeField(), indexed_names("T", 2));
  MatrixComplex c{r, {{0, {0}}, {1, {1, 1}}, {2, {2}}}, {}};
  SparsePolyMatrix d1(r, 1, 2), d2(r, 2, 1);
  d1.set(0, 0, parse_polynomial(r, "T1"));
  d1.set(0, 1, parse_polynomial(r, "T2"));
  d2.set(0, 0, parse_polynomial(r, "T1*T2"));
  d2.set(1, 0, parse_polynomial(r, "-T1^2"));
  c.d.emplace(1, d1);
  c.d.emplace(2, d2);
  auto rep = acyclicity_probabilistic(c);
  EXPECT_FALSE(rep.pass);
  ASSERT_EQ(rep.grades.size(), 2u);
  EXPECT_EQ(rep.grades[0].status, GradeStatus::Verified);
  EXPECT_EQ(rep.grades[1].status, GradeStatus::Failed);
}

TEST(Acyclicity, KoszulComplexPasses) {
  auto r = make_ring(PrimeField(), indexed_names("T", 2));
  MatrixComplex c{r, {{0, {0}}, {1, {1, 1}}, {2, {2}}}, {}};
  SparsePolyMatrix d1(r, 1, 2), d2(r, 2, 1);
  d1.set(0, 0, parse_polynomial(r, "T1"));
  d1.set(0, 1, parse_polynomial(r, "T2"));
  d2.set(0, 0, parse_polynomial(r, "T2"));
  d2.set(1, 0, parse_polynomial(r, "-T1"));
  c.d.emplace(1, d1);
  c.d.emplace(2, d2);
  EXPECT_TRUE(acyclicity_probabilistic(c).pass);
}

TEST(Bidegree, ConstructedComplexes) {
  auto s = generic(5, 2, 2);
  EXPECT_TRUE(check_bihomogeneity(s, [](const SeedData& x) { return build_M(x); }).pass);
  EXPECT_TRUE(check_bihomogeneity(s, [](const SeedData& x) { return build_L(x); }).pass);
  for (auto which : {TotKind::V, TotKind::T, TotKind::B})
    EXPECT_TRUE(check_bihomogeneity(s, [which](const SeedData& x) { return build_tot(x, which); }).pass);
  auto t = generic(6, 3, 1);
  EXPECT_TRUE(check_bihomogeneity(t, [](const SeedData& x) { return build_M(x); }).pass);
}

TEST(Bidegree, ScaledEntryIsCaught) {
  auto s = generic(4, 2, 1);
  auto rep = check_bihomogeneity(s, [](const SeedData& x) {
    auto m = build_M(x);
    auto& d = m.mutable_differential(1);
    auto hit = d.first_nonzero();
    d.set(hit->first, hit->second, d.at(hit->first, hit->second) + Poly::constant(x.ring(), std::int64_t{1}));
    return m;
  });
  EXPECT_FALSE(rep.pass);
}

TEST(Split, QuotientIsUnitTriangular) {
  for (auto [f, g] : {std::pair{5u, 2u}, {6u, 2u}, {6u, 3u}, {7u, 3u}, {4u, 1u}})
    for (int eps : {epsilon_min(f - g), epsilon_max(f - g)}) {
      auto rep = check_unit_triangular_quotient(generic(f, g, eps));
      EXPECT_TRUE(rep.pass) << f << " " << g << " " << eps << ": " << rep.detail;
    }
}

TEST(Betti, LayoutPredictionMatchesBinomials) {
  for (unsigned f = 2; f <= 8; ++f)
    for (unsigned g = 1; g < f; ++g) {
      int eps = epsilon_max(f - g);
      auto b = predicted_minimal_ranks(f, g);
      ASSERT_FALSE(b.empty());
      EXPECT_EQ(b[0], 1);
      for (std::size_t n = 1; n < b.size(); ++n)
        EXPECT_EQ(b[n], beta_bottom(f, g, eps, static_cast<long>(n)) - beta_top(f, g, eps, static_cast<long>(n) + 1));
    }
  EXPECT_EQ(predicted_minimal_ranks(9, 3), (std::vector<long>{1, 74, 324, 642, 730, 510, 219, 54, 6}));
}

TEST(Transfer, SmallCases) {
  for (auto [f, g] : {std::pair{5u, 2u}, {6u, 3u}, {4u, 1u}})
    for (int eps : {epsilon_min(f - g), epsilon_max(f - g)}) {
      auto rep = check_transfer(generic(f, g, eps));
      EXPECT_TRUE(rep.pass) << rep.detail;
    }
}
