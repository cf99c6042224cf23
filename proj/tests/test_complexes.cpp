#include <gtest/gtest.h>

#include <set>

#include "pfres/builders.hpp"

using namespace pfres;

namespace {

SeedData generic(unsigned f, unsigned g, int eps, std::uint64_t rng_seed = 7) {
  return SeedData::generic({f, g, eps, PrimeField::kDefaultPrime, rng_seed, 1});
}

std::uint64_t binom(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

using Row = std::tuple<int, int, int, std::size_t>;  // (N, twist T, twist alpha, rank)

std::multiset<Row> layout_rows(unsigned f, unsigned g, int eps) {
  std::map<std::tuple<int, int, int>, std::size_t> merged;
  for (const auto& e : layout_M(f, g, eps)) merged[{e.degree, e.twist[0], e.twist[1]}] += e.rank;
  std::multiset<Row> rows;
  for (const auto& [k, r] : merged) rows.insert({std::get<0>(k), std::get<1>(k), std::get<2>(k), r});
  return rows;
}

void expect_complex(const FreeComplex& c) {
  for (int n = c.min_degree() + 2; n <= c.max_degree(); ++n) {
    auto dd = c.differential(n - 1) * c.differential(n);
    ASSERT_TRUE(dd.is_zero()) << c.name() << " d" << n - 1 << " d" << n;
  }
}

// Entries of d_n must be homogeneous in T of degree forced by the twists.
void expect_t_graded(const FreeComplex& c) {
  for (int n = c.min_degree() + 1; n <= c.max_degree(); ++n) {
    const auto& src = c.module(n);
    const auto& tgt = c.module(n - 1);
    const auto& d = c.differential(n);
    for (std::size_t col = 0; col < d.cols(); ++col) {
      int a_src = src.summands()[src.summand_of(col)].twist()[0];
      for (const auto& [row, v] : d.column(col)) {
        int a_tgt = tgt.summands()[tgt.summand_of(row)].twist()[0];
        auto deg = v.homogeneous_degree();
        ASSERT_TRUE(deg.has_value());
        ASSERT_EQ(static_cast<int>(*deg), a_tgt - a_src) << c.name() << " d" << n;
      }
    }
  }
}

}  // namespace

TEST(Layout, NMax) {
  EXPECT_EQ(n_max(9, 3, 3), 8);
  EXPECT_EQ(n_max(6, 2, 2), 5);
  EXPECT_EQ(n_max(6, 3, 2), 6);
  EXPECT_EQ(n_max(4, 3, 0), 1);
  for (unsigned f = 2; f <= 9; ++f)
    for (unsigned g = 1; g < f; ++g)
      for (int e = epsilon_min(f - g); e <= epsilon_max(f - g); ++e) {
        auto lay = layout_M(f, g, e);
        int top = 0;
        for (const auto& x : lay) top = std::max(top, x.degree);
        EXPECT_EQ(top, n_max(f, g, e)) << f << " " << g << " " << e;
      }
}

TEST(Layout, RanksAreBinomialProducts) {
  for (const auto& e : layout_M(9, 3, 3)) {
    if (e.label.kind == SummandKind::Corner) {
      EXPECT_EQ(e.rank, 1u);
      continue;
    }
    EXPECT_EQ(e.rank, binom(9, e.label.I) * binom(3 + e.label.J - 1, e.label.J));
  }
}

TEST(Layout, NineThreeBigraded) {
  std::multiset<Row> expected = {
      {8, -10, -5, 6},  {7, -9, -5, 54},  {6, -7, -8, 21},  {6, -8, -5, 216}, {6, -8, -4, 3},
      {5, -6, -7, 135}, {5, -7, -5, 504}, {5, -7, -4, 27},  {4, -5, -7, 15},  {4, -5, -6, 360},
      {4, -6, -5, 756}, {4, -6, -4, 108}, {4, -6, -3, 1},   {3, -4, -6, 90},  {3, -5, -5, 756},
      {3, -5, -4, 252}, {3, -5, -3, 9},   {2, -3, -6, 10},  {2, -4, -4, 378}, {2, -4, -3, 36},
      {1, -3, -3, 84},  {0, 0, 0, 1}};
  EXPECT_EQ(layout_rows(9, 3, 3), expected);
}

TEST(Layout, SixTwoBigraded) {
  std::multiset<Row> expected = {{5, -6, -3, 2},  {4, -4, -5, 4},  {4, -5, -3, 12}, {3, -3, -4, 18},
                                 {3, -4, -3, 30}, {3, -4, -2, 1},  {2, -2, -4, 3},  {2, -3, -3, 40},
                                 {2, -3, -2, 6},  {1, -2, -2, 15}, {0, 0, 0, 1}};
  EXPECT_EQ(layout_rows(6, 2, 2), expected);
}

TEST(Layout, NineThreeSummands) {
  auto m = build_M(generic(9, 3, 3));
  auto labels = [&](int n) {
    std::vector<std::string> out;
    for (const auto& s : m.module(n).summands()) out.push_back(s.label().to_string());
    return out;
  };
  EXPECT_EQ(labels(8), (std::vector<std::string>{"B(9,2)"}));
  EXPECT_EQ(labels(6), (std::vector<std::string>{"T(0,5)", "B(7,2)", "B(9,1)"}));
  EXPECT_EQ(labels(1), (std::vector<std::string>{"B(6,0)"}));
  EXPECT_EQ(labels(0), (std::vector<std::string>{"C(9)"}));
}

TEST(Layout, SingleGrading) {
  // In the single grading, T summands sit at g-2+N, B summands at g-1+N.
  for (unsigned f = 3; f <= 8; ++f)
    for (unsigned g = 1; g < f; ++g)
      for (int e = epsilon_min(f - g); e <= epsilon_max(f - g); ++e)
        for (const auto& x : layout_M(f, g, e)) {
          int deg = -x.twist[0];
          if (x.label.kind == SummandKind::Top) EXPECT_EQ(deg, static_cast<int>(g) - 2 + x.degree);
          if (x.label.kind == SummandKind::Bottom) EXPECT_EQ(deg, static_cast<int>(g) - 1 + x.degree);
        }
}

TEST(Tot, Membership) {
  auto s = generic(9, 3, 3);
  auto b = build_tot(s, TotKind::B);
  ASSERT_EQ(b.module(0).rank(), 1u);
  EXPECT_EQ(b.module(0).summands()[0].label(), SummandLabel::corner(9));
  ASSERT_EQ(b.module(1).summands().size(), 1u);
  EXPECT_EQ(b.module(1).summands()[0].label(), SummandLabel::plain(6, 0));
  auto t = build_tot(s, TotKind::T);
  for (int n = t.min_degree(); n <= 0; ++n) EXPECT_TRUE(t.module(n).empty()) << n;
  // When epsilon = (delta - 1) / 2, V_{0,eps} lands in position 0.
  auto t0 = build_tot(generic(6, 3, 1), TotKind::T);
  ASSERT_EQ(t0.module(0).summands().size(), 1u);
  EXPECT_EQ(t0.module(0).summands()[0].label(), SummandLabel::plain(0, 1));
}

TEST(Tot, Positions) {
  for (auto which : {TotKind::V, TotKind::U, TotKind::T, TotKind::B}) {
    auto c = build_tot(generic(7, 3, 2), which);
    for (const auto& [n, m] : c.modules())
      for (const auto& s : m.summands()) {
        const auto& l = s.label();
        if (l.kind == SummandKind::Corner)
          EXPECT_EQ(static_cast<int>(l.I), 7 + n);
        else
          EXPECT_EQ(static_cast<int>(l.I + 2 * l.J) - 4 + 1, n);
      }
  }
}

TEST(Complexes, SquaresVanish) {
  for (unsigned f = 2; f <= 6; ++f)
    for (unsigned g = 1; g < f; ++g)
      for (int e = epsilon_min(f - g); e <= epsilon_max(f - g); ++e) {
        SCOPED_TRACE(testing::Message() << "f=" << f << " g=" << g << " eps=" << e);
        auto s = generic(f, g, e, 100 + f * 10 + g);
        for (auto which : {TotKind::V, TotKind::U, TotKind::T, TotKind::B}) expect_complex(build_tot(s, which));
        expect_complex(build_M(s));
        expect_complex(build_L(s));
      }
}

TEST(Complexes, TDegreesMatchTwists) {
  auto s = generic(6, 2, 2);
  expect_t_graded(build_M(s));
  expect_t_graded(build_L(s));
  for (auto which : {TotKind::V, TotKind::U, TotKind::T, TotKind::B}) expect_t_graded(build_tot(s, which));
}

TEST(Xi, ChainMap) {
  for (unsigned f = 2; f <= 6; ++f)
    for (unsigned g = 1; g < f; ++g)
      for (int e = epsilon_min(f - g); e <= epsilon_max(f - g); ++e) {
        SCOPED_TRACE(testing::Message() << "f=" << f << " g=" << g << " eps=" << e);
        auto s = generic(f, g, e, 5 + f + g);
        auto t = build_tot(s, TotKind::T);
        auto b = build_tot(s, TotKind::B);
        auto xi = build_xi(s, t, b);
        for (int n = t.min_degree() + 1; n <= t.max_degree(); ++n) {
          const auto* hi = xi.at(n);
          const auto* lo = xi.at(n - 1);
          ASSERT_TRUE(hi && lo);
          ASSERT_TRUE((b.differential(n) * *hi - *lo * t.differential(n)).is_zero()) << "N=" << n;
        }
      }
}

TEST(Xi, DiagonalIsSignedIdentity) {
  for (auto [f, g, e] : {std::tuple{9u, 3u, 3}, {6u, 2u, 2}, {6u, 3u, 1}, {7u, 2u, 3}}) {
    auto s = generic(f, g, e);
    auto t = build_tot(s, TotKind::T);
    auto b = build_tot(s, TotKind::B);
    auto xi = build_xi(s, t, b);
    int checked = 0;
    for (const auto& [n, src] : t.modules()) {
      const auto& tgt = b.module(n);
      for (std::size_t k = 0; k < src.summands().size(); ++k) {
        const auto& lab = src.summands()[k].label();
        auto hit = tgt.find(lab);
        if (!hit) continue;
        int sign = (n + static_cast<int>(lab.I) + e) % 2 ? -1 : 1;
        const auto& m = *xi.at(n);
        std::size_t r0 = tgt.offset(*hit), c0 = src.offset(k);
        for (std::size_t a = 0; a < src.summands()[k].rank(); ++a)
          for (std::size_t z = 0; z < src.summands()[k].rank(); ++z) {
            Poly want = a == z ? Poly::constant(s.ring(), std::int64_t{sign}) : Poly(s.ring());
            ASSERT_EQ(m.at(r0 + a, c0 + z), want);
          }
        ++checked;
      }
    }
    EXPECT_GT(checked, 0);
  }
}

TEST(Xi, NoComponentRaisesJ) {
  auto s = generic(7, 2, 3);
  auto t = build_tot(s, TotKind::T);
  auto b = build_tot(s, TotKind::B);
  auto xi = build_xi(s, t, b);
  for (const auto& [n, src] : t.modules()) {
    const auto& tgt = b.module(n);
    const auto& m = *xi.at(n);
    for (std::size_t k = 0; k < src.summands().size(); ++k)
      for (std::size_t q = 0; q < tgt.summands().size(); ++q) {
        if (tgt.summands()[q].label().J <= src.summands()[k].label().J) continue;
        EXPECT_TRUE(m.block_is_zero(tgt.offset(q), tgt.summands()[q].rank(), src.offset(k),
                                    src.summands()[k].rank()));
      }
  }
}

TEST(Xi, DegreeZeroIsC) {
  for (auto [f, g] : {std::pair{4u, 1u}, {6u, 3u}, {5u, 2u}}) {
    int e = static_cast<int>(f - g - 1) / 2;
    auto s = generic(f, g, e);
    auto t = build_tot(s, TotKind::T);
    auto b = build_tot(s, TotKind::B);
    auto xi = build_xi(s, t, b);
    const auto& src = t.module(0);
    ASSERT_EQ(src.summands().size(), 1u);
    const auto& m = *xi.at(0);
    ASSERT_EQ(m.rows(), 1u);
    const auto& sum = src.summands()[0];
    for (std::size_t k = 0; k < sum.rank(); ++k)
      EXPECT_EQ(m.at(0, k), c_map(s, Div::basis(s.ring(), sum.element(k).second)));
  }
}

TEST(Cone, MIsSubcomplexOfL) {
  for (unsigned f = 2; f <= 6; ++f)
    for (unsigned g = 1; g < f; ++g)
      for (int e = epsilon_min(f - g); e <= epsilon_max(f - g); ++e) {
        SCOPED_TRACE(testing::Message() << "f=" << f << " g=" << g << " eps=" << e);
        auto s = generic(f, g, e, 31);
        auto m = build_M(s);
        auto l = build_L(s, static_cast<int>(f) + 1);
        for (int n = 1; n <= static_cast<int>(f) + 1; ++n) {
          const auto& ms = m.module(n);
          const auto& mt = m.module(n - 1);
          const auto& ls = l.module(n);
          const auto& lt = l.module(n - 1);
          for (std::size_t a = 0; a < ms.summands().size(); ++a) {
            auto la = ls.find(ms.summands()[a].label());
            ASSERT_TRUE(la);
            std::size_t ra = ms.summands()[a].rank();
            // M-blocks agree and nothing leaves M.
            for (std::size_t b = 0; b < lt.summands().size(); ++b) {
              std::size_t rb = lt.summands()[b].rank();
              auto lblock = l.differential(n).submatrix(lt.offset(b), rb, ls.offset(*la), ra);
              auto mb = mt.find(lt.summands()[b].label());
              if (!mb) {
                ASSERT_TRUE(lblock.is_zero()) << "leaves M at " << n;
                continue;
              }
              ASSERT_TRUE(lblock == m.differential(n).submatrix(mt.offset(*mb), rb, ms.offset(a), ra));
            }
          }
          EXPECT_EQ(l.module(n).rank() >= m.module(n).rank(), true);
        }
      }
}

TEST(Cone, DegreeZeroEntriesOnlyBetweenTopAndBottom) {
  auto s = generic(6, 2, 2);
  auto m = build_M(s);
  for (int n = 2; n <= m.max_degree(); ++n) {
    const auto& src = m.module(n);
    const auto& tgt = m.module(n - 1);
    const auto& d = m.differential(n);
    for (std::size_t c = 0; c < d.cols(); ++c)
      for (const auto& [r, v] : d.column(c)) {
        if (!v.is_constant()) continue;
        EXPECT_EQ(src.summands()[src.summand_of(c)].label().kind, SummandKind::Top);
        EXPECT_EQ(tgt.summands()[tgt.summand_of(r)].label().kind, SummandKind::Bottom);
      }
  }
}

TEST(Cycles, TransferAcrossXi) {
  for (unsigned f = 2; f <= 6; ++f)
    for (unsigned g = 1; g < f && g <= 3; ++g)
      for (int e = epsilon_min(f - g); e <= epsilon_max(f - g); ++e) {
        SCOPED_TRACE(testing::Message() << "f=" << f << " g=" << g << " eps=" << e);
        auto s = generic(f, g, e, 77);
        auto v = build_tot(s, TotKind::V);
        auto t = build_tot(s, TotKind::T);
        auto b = build_tot(s, TotKind::B);
        auto xi = build_xi(s, t, b);
        int delta = static_cast<int>(f - g);
        int count = 0;
        for (int n = 1; n <= v.max_degree(); ++n) {
          if ((delta + n - 1) % 2) continue;
          unsigned h = static_cast<unsigned>((delta + n - 1) / 2);
          for (const auto& mono : monomials_Y(g, h)) {
            auto z = cycles(s, n, Div::basis(s.ring(), mono), v, t, b);
            ASSERT_TRUE(is_zero(pfres::apply(v.differential(n), z.in_v)));
            ASSERT_TRUE(is_zero(pfres::apply(t.differential(n), z.in_top)));
            ASSERT_TRUE(is_zero(pfres::apply(b.differential(n), z.in_bot)));
            auto image = pfres::apply(*xi.at(n), z.in_top);
            auto want = (e + n) % 2 ? negated(z.in_bot) : z.in_bot;
            ASSERT_TRUE(equal(image, want)) << "N=" << n;
            ++count;
          }
        }
        EXPECT_GT(count, 0);
      }
}

TEST(Cycles, ParityIsChecked) {
  auto s = generic(5, 2, 2);
  auto v = build_tot(s, TotKind::V);
  auto t = build_tot(s, TotKind::T);
  auto b = build_tot(s, TotKind::B);
  EXPECT_THROW(cycles(s, 1, Div::basis(s.ring(), DivMono::zero(2)), v, t, b), UnsupportedCase);
}

TEST(LastMap, MatchesPrediction) {
  for (unsigned f = 2; f <= 7; ++f)
    for (unsigned g = 1; g < f; ++g)
      for (int e = epsilon_min(f - g); e <= epsilon_max(f - g); ++e) {
        auto s = generic(f, g, e, 3 + f * g);
        auto p = classify_last_map(f, g, e);
        auto seen = observe_last_map(build_M(s));
        EXPECT_EQ(seen, p.shape) << "f=" << f << " g=" << g << " eps=" << e << " case " << to_string(p.which)
                                 << "\n predicted " << describe(p.shape) << "\n observed  " << describe(seen);
      }
}

TEST(LastMap, KoszulCase) {
  auto p = classify_last_map(5, 4, 1);
  EXPECT_EQ(p.which, LastMapCase::KoszulTau);
  EXPECT_EQ(p.shape.degree, 5);
}

TEST(Export, JsonHasModules) {
  auto m = build_M(generic(4, 1, 2));
  auto js = export_complex_json(m, false);
  EXPECT_NE(js.find("pfres-complex/1"), std::string::npos);
  EXPECT_NE(js.find("B(4,1)"), std::string::npos);
}
