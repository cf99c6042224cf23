#include "pfres/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <queue>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace pfres {

namespace {

std::string locate(const FreeComplex& c, int row_deg, std::size_t row, int col_deg, std::size_t col) {
  return c.module(row_deg).basis_name(row) + " <- " + c.module(col_deg).basis_name(col);
}

PrimeField::Elem random_elem(std::mt19937_64& rng, const PrimeField& k, bool nonzero = false) {
  std::uniform_int_distribution<std::uint32_t> dist(nonzero ? 1 : 0, k.characteristic() - 1);
  return dist(rng);
}

SparsePolyMatrix zero_like(const PolyRingPtr& ring, std::size_t rows, std::size_t cols) {
  return SparsePolyMatrix(ring, rows, cols);
}

// Fraction-free elimination; every division is exact.
Poly bareiss_det(std::vector<std::vector<Poly>> a, const PolyRingPtr& ring) {
  const std::size_t n = a.size();
  if (n == 0) return Poly::constant(ring, std::int64_t{1});
  bool negate = false;
  Poly prev = Poly::constant(ring, std::int64_t{1});
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k].is_zero()) ++p;
    if (p == n) return Poly(ring);
    if (p != k) {
      std::swap(a[p], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = divide_exact(v, prev);
        if (!q) throw DivisibilityError("Bareiss step was not exact");
        a[i][j] = std::move(*q);
      }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

// Tries to certify grade I_r(d) >= k: on a k-dimensional linear subspace, a few
// random elements of I_r(d) (determinants of random compressions) cut out only the origin.
GradeStatus certify_grade(const SparsePolyMatrix& d, std::size_t r, int k, const AcyclicityOptions& opts,
                          std::mt19937_64& rng) {
  if (r == 0) return GradeStatus::Verified;
  const auto& ring = d.ring();
  const auto& field = ring->field();
  const std::size_t vars = ring->nvars();
  const std::size_t dim = std::min<std::size_t>(static_cast<std::size_t>(k), vars);
  try {
    for (int attempt = 0; attempt < 2; ++attempt) {
      auto sub = make_ring(field, indexed_names("u", dim));
      std::vector<Poly> images;
      for (std::size_t i = 0; i < vars; ++i) {
        Poly v(sub);
        for (std::size_t j = 0; j < dim; ++j)
          v += Poly::term(sub, Monomial::variable(dim, j), random_elem(rng, field));
        images.push_back(v);
      }
      // Columns of the restricted matrix.
      std::vector<std::vector<std::pair<std::uint32_t, Poly>>> cols(d.cols());
      for (std::size_t c = 0; c < d.cols(); ++c)
        for (const auto& [row, v] : d.column(c)) {
          Poly w = v.substitute(sub, images);
          if (!w.is_zero()) cols[c].emplace_back(row, std::move(w));
        }
      IdealGens minors(sub);
      for (std::size_t g = 0; g < dim + 2; ++g) {
        std::vector<std::vector<PrimeField::Elem>> P(r, std::vector<PrimeField::Elem>(d.rows()));
        std::vector<std::vector<PrimeField::Elem>> Q(d.cols(), std::vector<PrimeField::Elem>(r));
        for (auto& row : P)
          for (auto& x : row) x = random_elem(rng, field);
        for (auto& row : Q)
          for (auto& x : row) x = random_elem(rng, field);
        std::vector<std::vector<Poly>> dq(d.rows(), std::vector<Poly>(r, Poly(sub)));
        for (std::size_t c = 0; c < cols.size(); ++c)
          for (const auto& [row, v] : cols[c])
            for (std::size_t j = 0; j < r; ++j) dq[row][j] += v.scaled(Q[c][j]);
        std::vector<std::vector<Poly>> a(r, std::vector<Poly>(r, Poly(sub)));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t row = 0; row < d.rows(); ++row) {
            if (field.is_zero(P[i][row])) continue;
            for (std::size_t j = 0; j < r; ++j)
              if (!dq[row][j].is_zero()) a[i][j] += dq[row][j].scaled(P[i][row]);
          }
        minors.add(bareiss_det(std::move(a), sub));
      }
      auto gb = groebner_basis(minors, opts.limits);
      if (gb.is_unit() || dimension_and_grade(gb).dim == 0) return GradeStatus::Verified;
    }
  } catch (const ResourceError&) {
    return GradeStatus::ResourceLimited;
  }
  return GradeStatus::Failed;
}

// Sparse matrix that supports row and column deletion during cancellation.
struct WorkMatrix {
  std::vector<std::unordered_map<std::uint32_t, Poly>> cols;
  std::vector<std::unordered_set<std::uint32_t>> rows;

  WorkMatrix() = default;
  explicit WorkMatrix(const SparsePolyMatrix& m) : cols(m.cols()), rows(m.rows()) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (const auto& [r, v] : m.column(c)) {
        cols[c].emplace(r, v);
        rows[r].insert(static_cast<std::uint32_t>(c));
      }
  }
  void drop_column(std::uint32_t c) {
    for (const auto& [r, v] : cols[c]) rows[r].erase(c);
    cols[c].clear();
  }
  void drop_row(std::uint32_t r) {
    for (auto c : rows[r]) cols[c].erase(r);
    rows[r].clear();
  }
};

}  // namespace

CheckReport check_complex(const FreeComplex& c) {
  CheckReport rep{"d2", true, "", {}};
  for (int n = c.min_degree() + 2; n <= c.max_degree(); ++n) {
    auto dd = c.differential(n - 1) * c.differential(n);
    if (auto hit = dd.first_nonzero()) {
      rep.pass = false;
      std::ostringstream out;
      out << c.name() << ": d" << n - 1 << " d" << n << " nonzero at " << locate(c, n - 2, hit->first, n, hit->second)
          << " = " << dd.at(hit->first, hit->second).to_string();
      rep.detail = out.str();
      return rep;
    }
  }
  rep.detail = c.name() + ": all composites vanish";
  return rep;
}

CheckReport check_chain_map(const FreeComplex& src, const FreeComplex& tgt, const ChainMap& xi) {
  CheckReport rep{"chainmap", true, "", {}};
  for (const auto& [n, m] : xi.maps) {
    if (src.module(n - 1).empty() && tgt.module(n - 1).empty()) continue;
    const SparsePolyMatrix* lower = xi.at(n - 1);
    SparsePolyMatrix zero = zero_like(src.ring(), tgt.module(n - 1).rank(), src.module(n - 1).rank());
    const SparsePolyMatrix& lo = lower ? *lower : zero;
    auto diff = tgt.differential(n) * m - lo * src.differential(n);
    if (auto hit = diff.first_nonzero()) {
      rep.pass = false;
      std::ostringstream out;
      out << "square at N=" << n << " fails at " << tgt.module(n - 1).basis_name(hit->first) << " <- "
          << src.module(n).basis_name(hit->second);
      rep.detail = out.str();
      return rep;
    }
  }
  rep.detail = "all squares commute";
  return rep;
}

CheckReport check_bihomogeneity(const SeedData& seed, const std::function<FreeComplex(const SeedData&)>& build,
                                std::uint64_t rng_seed) {
  CheckReport rep{"bidegree", true, "", {}};
  const auto& k = seed.field();
  std::mt19937_64 rng(rng_seed);
  PrimeField::Elem lambda = 1;
  while (lambda == 1) lambda = random_elem(rng, k, true);
  std::vector<Alt> scaled;
  for (const auto& a : seed.alt_matrices()) {
    std::vector<Poly> entries;
    for (unsigned i = 0; i < a.size(); ++i)
      for (unsigned j = 0; j < a.size(); ++j) entries.push_back(a.at(i, j).scaled(lambda));
    scaled.emplace_back(seed.ring(), a.size(), std::move(entries));
  }
  SeedData other(seed.params(), std::move(scaled));
  FreeComplex base = build(seed);
  FreeComplex probe = build(other);
  std::size_t entries = 0;
  for (int n = base.min_degree() + 1; n <= base.max_degree(); ++n) {
    const auto& src = base.module(n);
    const auto& tgt = base.module(n - 1);
    const auto& d = base.differential(n);
    const auto& e = probe.differential(n);
    for (std::size_t col = 0; col < d.cols(); ++col) {
      const Bidegree& ts = src.summands()[src.summand_of(col)].twist();
      std::map<std::uint32_t, std::pair<Poly, Poly>> both;
      for (const auto& [r, v] : d.column(col)) both.emplace(r, std::pair{v, Poly(seed.ring())});
      for (const auto& [r, v] : e.column(col)) {
        auto [it, fresh] = both.try_emplace(r, std::pair{Poly(seed.ring()), v});
        if (!fresh) it->second.second = v;
      }
      for (const auto& [r, pr] : both) {
        ++entries;
        const Bidegree& tt = tgt.summands()[tgt.summand_of(r)].twist();
        int t_deg = tt[0] - ts[0];
        int a_deg = tt[1] - ts[1];
        const auto& [v, w] = pr;
        bool ok = a_deg >= 0 && v.homogeneous_degree() == std::optional<unsigned>(static_cast<unsigned>(std::max(t_deg, 0))) &&
                  t_deg >= 0 && w == v.scaled(k.pow(lambda, static_cast<std::uint64_t>(a_deg)));
        if (!ok) {
          rep.pass = false;
          rep.detail = base.name() + ": entry " + locate(base, n - 1, r, n, col) + " has the wrong bidegree";
          return rep;
        }
      }
    }
  }
  rep.detail = base.name() + ": " + std::to_string(entries) + " entries bihomogeneous";
  return rep;
}

CheckReport check_transfer(const SeedData& seed) {
  CheckReport rep{"transfer", true, "", {}};
  auto v = build_tot(seed, TotKind::V);
  auto t = build_tot(seed, TotKind::T);
  auto b = build_tot(seed, TotKind::B);
  auto xi = build_xi(seed, t, b);
  const int delta = static_cast<int>(seed.delta()), eps = seed.epsilon();
  std::size_t count = 0;
  for (int n = 1; n <= v.max_degree(); ++n) {
    if ((delta + n - 1) % 2) continue;
    for (const auto& mono : monomials_Y(seed.g(), static_cast<unsigned>((delta + n - 1) / 2))) {
      auto z = cycles(seed, n, Div::basis(seed.ring(), mono), v, t, b);
      std::string where = "N=" + std::to_string(n) + " gamma=" + mono.to_string();
      if (!is_zero(pfres::apply(v.differential(n), z.in_v)) || !is_zero(pfres::apply(t.differential(n), z.in_top)) ||
          !is_zero(pfres::apply(b.differential(n), z.in_bot))) {
        rep.pass = false;
        rep.detail = "not a cycle at " + where;
        return rep;
      }
      const SparsePolyMatrix* m = xi.at(n);
      FreeElement image = m ? pfres::apply(*m, z.in_top) : FreeElement{};
      if (!equal(image, (eps + n) % 2 ? negated(z.in_bot) : z.in_bot)) {
        rep.pass = false;
        rep.detail = "transfer fails at " + where;
        return rep;
      }
      ++count;
    }
  }
  rep.detail = std::to_string(count) + " cycle pairs match";
  return rep;
}

CheckReport check_unit_triangular_quotient(const SeedData& seed) {
  CheckReport rep{"split", true, "", {}};
  const int delta = static_cast<int>(seed.delta());
  const int eps = seed.epsilon();
  auto t = build_tot(seed, TotKind::T);
  auto b = build_tot(seed, TotKind::B);
  auto xi = build_xi(seed, t, b);
  std::size_t blocks = 0;
  for (const auto& [n, src] : t.modules()) {
    const auto& tgt = b.module(n);
    const SparsePolyMatrix* m = xi.at(n);
    std::vector<std::size_t> qs, qt;
    for (std::size_t s = 0; s < src.summands().size(); ++s) {
      const auto& l = src.summands()[s].label();
      if (static_cast<int>(l.I + l.J) >= delta) qs.push_back(s);
    }
    for (std::size_t s = 0; s < tgt.summands().size(); ++s) {
      const auto& l = tgt.summands()[s].label();
      if (l.kind == SummandKind::Plain && static_cast<int>(l.J) >= eps) qt.push_back(s);
    }
    if (qs.size() != qt.size()) {
      rep.pass = false;
      rep.detail = "quotient pieces differ in number at N=" + std::to_string(n);
      return rep;
    }
    for (auto s : qs)
      for (auto q : qt) {
        const auto& ls = src.summands()[s];
        const auto& lt = tgt.summands()[q];
        auto block = m->submatrix(tgt.offset(q), lt.rank(), src.offset(s), ls.rank());
        bool ok = true;
        if (lt.label().J > ls.label().J) {
          ok = block.is_zero();
        } else if (lt.label().I == ls.label().I && lt.label().J == ls.label().J) {
          int sign = (n + static_cast<int>(ls.label().I) + eps) % 2 ? -1 : 1;
          Poly unit = Poly::constant(seed.ring(), std::int64_t{sign});
          ok = block.nonzeros() == ls.rank();
          for (std::size_t i = 0; ok && i < ls.rank(); ++i) ok = block.at(i, i) == unit;
          ++blocks;
        }
        if (!ok) {
          rep.pass = false;
          rep.detail = "block " + ls.label().to_string() + " -> " + lt.label().to_string() + " at N=" +
                       std::to_string(n) + " breaks the triangular shape";
          return rep;
        }
      }
  }
  rep.detail = std::to_string(blocks) + " diagonal blocks are signed identities";
  if (blocks == 0) rep.notes.push_back("vacuous: no summands outside M in the window");
  return rep;
}

std::size_t MatrixComplex::rank(int n) const {
  auto it = degrees.find(n);
  return it == degrees.end() ? 0 : it->second.size();
}

int MatrixComplex::top() const {
  for (auto it = degrees.rbegin(); it != degrees.rend(); ++it)
    if (!it->second.empty()) return it->first;
  return bottom() - 1;
}

int MatrixComplex::bottom() const {
  for (const auto& [n, v] : degrees)
    if (!v.empty()) return n;
  return 0;
}

MatrixComplex as_matrix_complex(const FreeComplex& c) {
  MatrixComplex out{c.ring(), {}, {}};
  for (const auto& [n, m] : c.modules()) {
    auto& deg = out.degrees[n];
    for (const auto& s : m.summands()) deg.insert(deg.end(), s.rank(), s.generator_degree());
    if (c.modules().count(n - 1)) out.d.emplace(n, c.differential(n));
  }
  return out;
}

MatrixComplex minimize(const FreeComplex& c, std::uint64_t pivot_seed) {
  MatrixComplex in = as_matrix_complex(c);
  const auto& k = c.ring()->field();
  std::mt19937_64 rng(pivot_seed);
  std::map<int, WorkMatrix> work;
  std::map<int, std::vector<bool>> alive;
  for (const auto& [n, deg] : in.degrees) alive[n].assign(deg.size(), true);
  for (const auto& [n, m] : in.d) work.emplace(n, WorkMatrix(m));

  // Pivots by current fill-in cost, recomputed lazily.
  using Pivot = std::tuple<std::size_t, std::uint64_t, int, std::uint32_t, std::uint32_t>;
  std::priority_queue<Pivot, std::vector<Pivot>, std::greater<>> heap;
  // Fill-in cost, coarsened to its bit length so the seed shuffles within each class.
  auto markowitz = [](const WorkMatrix& w, std::uint32_t r, std::uint32_t col) -> std::size_t {
    return std::bit_width((w.cols[col].size() - 1) * (w.rows[r].size() - 1));
  };
  for (auto& [n, w] : work)
    for (std::uint32_t col = 0; col < w.cols.size(); ++col)
      for (const auto& [r, v] : w.cols[col])
        if (v.is_constant()) heap.emplace(markowitz(w, r, col), rng(), n, r, col);

  auto eliminate = [&](int n, std::uint32_t r, std::uint32_t col) {
    WorkMatrix& w = work[n];
    auto inv = k.inv(w.cols[col].at(r).constant_term());
    std::vector<std::pair<std::uint32_t, Poly>> down, across;
    for (const auto& [rr, v] : w.cols[col])
      if (rr != r) down.emplace_back(rr, v.scaled(inv));
    for (auto cc : w.rows[r])
      if (cc != col) across.emplace_back(cc, w.cols[cc].at(r));
    for (const auto& [cc, b] : across)
      for (const auto& [rr, a] : down) {
        auto& column = w.cols[cc];
        auto [it, fresh] = column.try_emplace(rr, c.ring());
        for (const auto& t : b.terms()) it->second.sub_mul_term(a, t.mono, t.coeff);
        if (it->second.is_zero()) {
          column.erase(it);
          if (!fresh) w.rows[rr].erase(cc);
          continue;
        }
        if (fresh) w.rows[rr].insert(cc);
        if (it->second.is_constant()) heap.emplace(0, rng(), n, rr, cc);
      }
    w.drop_column(col);
    w.drop_row(r);
    alive[n][col] = false;
    alive[n - 1][r] = false;
    if (auto up = work.find(n + 1); up != work.end()) up->second.drop_row(col);
    if (auto dn = work.find(n - 1); dn != work.end()) dn->second.drop_column(r);
  };

  while (!heap.empty()) {
    auto [cost, key, n, r, col] = heap.top();
    heap.pop();
    if (!alive[n][col] || !alive[n - 1][r]) continue;
    WorkMatrix& w = work[n];
    auto it = w.cols[col].find(r);
    if (it == w.cols[col].end() || !it->second.is_constant()) continue;
    std::size_t now = markowitz(w, r, col);
    if (now > cost) {
      heap.emplace(now, key, n, r, col);
      continue;
    }
    eliminate(n, r, col);
  }

  MatrixComplex out{c.ring(), {}, {}};
  std::map<int, std::vector<std::int64_t>> index;
  for (const auto& [n, deg] : in.degrees) {
    auto& idx = index[n];
    idx.assign(deg.size(), -1);
    auto& kept = out.degrees[n];
    for (std::size_t i = 0; i < deg.size(); ++i)
      if (alive[n][i]) {
        idx[i] = static_cast<std::int64_t>(kept.size());
        kept.push_back(deg[i]);
      }
  }
  for (auto& [n, w] : work) {
    SparsePolyMatrix m(c.ring(), out.degrees[n - 1].size(), out.degrees[n].size());
    for (std::size_t col = 0; col < w.cols.size(); ++col) {
      if (!alive[n][col]) continue;
      std::map<std::uint32_t, Poly> entries;
      for (auto& [r, v] : w.cols[col]) entries.emplace(static_cast<std::uint32_t>(index[n - 1][r]), std::move(v));
      m.set_column(static_cast<std::size_t>(index[n][col]), std::move(entries));
    }
    out.d.emplace(n, std::move(m));
  }
  return out;
}

std::size_t BettiColumn::total() const {
  std::size_t s = 0;
  for (const auto& [d, r] : by_degree) s += r;
  return s;
}

BettiTable betti_of(const MatrixComplex& c) {
  BettiTable t;
  for (int n = c.bottom(); n <= c.top(); ++n) {
    BettiColumn col{n, {}};
    auto it = c.degrees.find(n);
    if (it != c.degrees.end())
      for (int d : it->second) ++col.by_degree[d];
    t.push_back(std::move(col));
  }
  return t;
}

BettiTable minimal_betti(const FreeComplex& c, std::uint64_t pivot_seed) { return betti_of(minimize(c, pivot_seed)); }

BettiTable betti_from_constant_ranks(const FreeComplex& c) {
  MatrixComplex m = as_matrix_complex(c);
  const auto& k = c.ring()->field();
  // rank of the constant part of d_n restricted to generator degree a.
  auto const_rank = [&](int n) {
    std::map<int, std::size_t> out;
    auto it = m.d.find(n);
    if (it == m.d.end()) return out;
    const auto& src = m.degrees[n];
    const auto& tgt = m.degrees[n - 1];
    std::map<int, std::vector<std::size_t>> cols_by, rows_by;
    for (std::size_t i = 0; i < src.size(); ++i) cols_by[src[i]].push_back(i);
    for (std::size_t i = 0; i < tgt.size(); ++i) rows_by[tgt[i]].push_back(i);
    for (const auto& [a, cols] : cols_by) {
      auto rit = rows_by.find(a);
      if (rit == rows_by.end()) continue;
      const auto& rows = rit->second;
      std::unordered_map<std::size_t, std::size_t> row_pos;
      for (std::size_t i = 0; i < rows.size(); ++i) row_pos[rows[i]] = i;
      std::vector<PrimeField::Elem> dense(rows.size() * cols.size(), 0);
      for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [r, v] : it->second.column(cols[j])) {
          auto p = row_pos.find(r);
          if (p != row_pos.end()) dense[p->second * cols.size() + j] = v.constant_term();
        }
      out[a] = dense_rank(std::move(dense), rows.size(), cols.size(), k);
    }
    return out;
  };
  BettiTable t = betti_of(m);
  for (auto& col : t) {
    auto lo = const_rank(col.position);
    auto hi = const_rank(col.position + 1);
    for (auto& [a, r] : col.by_degree) r -= lo[a] + hi[a];
    std::erase_if(col.by_degree, [](const auto& kv) { return kv.second == 0; });
  }
  while (!t.empty() && t.back().by_degree.empty()) t.pop_back();
  return t;
}

std::vector<long> predicted_minimal_ranks(unsigned f, unsigned g) {
  std::map<int, long> bottom, top;
  int hi = 0;
  for (const auto& e : layout_M(f, g, epsilon_max(f - g))) {
    hi = std::max(hi, e.degree);
    if (e.label.kind == SummandKind::Top) top[e.degree] += static_cast<long>(e.rank);
    else bottom[e.degree] += static_cast<long>(e.rank);  // the corner counts as the bottom at 0
  }
  std::vector<long> b;
  for (int n = 0; n <= hi; ++n) b.push_back(bottom[n] - top[n + 1]);
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

std::vector<std::size_t> totals(const BettiTable& t) {
  std::vector<std::size_t> out;
  for (const auto& c : t) out.push_back(c.total());
  return out;
}

bool check_linearity(const BettiTable& t, unsigned g) {
  for (const auto& col : t) {
    if (col.position < 1) continue;
    for (const auto& [d, r] : col.by_degree)
      if (r && d != static_cast<int>(g) + col.position - 1) return false;
  }
  return true;
}

std::string to_string(GradeStatus s) {
  switch (s) {
    case GradeStatus::Verified: return "verified";
    case GradeStatus::Failed: return "not-certified";
    case GradeStatus::AssumedGeneric: return "assumed-generic";
    case GradeStatus::ResourceLimited: return "resource-limited";
  }
  return "?";
}

AcyclicityReport acyclicity_probabilistic(const MatrixComplex& c, const AcyclicityOptions& opts) {
  AcyclicityReport rep;
  const auto& k = c.ring->field();
  const double p = k.characteristic();
  std::mt19937_64 rng(opts.rng_seed);
  const int lo = c.bottom(), hi = c.top();

  std::map<int, long> expected;
  long next = 0;
  for (int n = hi; n > lo; --n) {
    long r = static_cast<long>(c.rank(n)) - next;
    expected[n] = r;
    next = r;
  }
  bool ranks_ok = true;
  std::vector<std::vector<PrimeField::Elem>> points(opts.points);
  for (auto& pt : points) {
    pt.resize(c.ring->nvars());
    for (auto& x : pt) x = random_elem(rng, k);
  }
  for (int n = lo + 1; n <= hi; ++n) {
    const auto& d = c.d.at(n);
    std::size_t best = 0;
    for (const auto& pt : points) best = std::max(best, dense_rank(d.evaluate(pt), d.rows(), d.cols(), k));
    unsigned max_deg = 0;
    for (std::size_t col = 0; col < d.cols(); ++col)
      for (const auto& [r, v] : d.column(col)) max_deg = std::max(max_deg, v.total_degree());
    long want = expected[n];
    unsigned minor_deg = static_cast<unsigned>(std::max(want, 0L)) * max_deg;
    rep.ranks.push_back({n - lo, static_cast<std::size_t>(std::max(want, 0L)), best, minor_deg});
    if (want < 0 || static_cast<long>(best) != want) ranks_ok = false;
    rep.failure_bound += std::pow(minor_deg / p, static_cast<double>(opts.points));
  }
  if (!ranks_ok) {
    rep.detail = "rank condition fails";
    return rep;
  }
  bool grades_ok = true;
  for (int n = lo + 1; n <= hi; ++n) {
    std::size_t r = static_cast<std::size_t>(expected[n]);
    GradeStatus st = c.ring->nvars() > opts.max_grade_vars
                         ? GradeStatus::AssumedGeneric
                         : certify_grade(c.d.at(n), r, n - lo, opts, rng);
    rep.grades.push_back({n - lo, r, st});
    if (st == GradeStatus::Failed || st == GradeStatus::ResourceLimited) grades_ok = false;
  }
  rep.pass = grades_ok;
  rep.detail = grades_ok ? "ranks and grades hold" : "grade condition not certified";
  return rep;
}

std::size_t dense_rank(std::vector<PrimeField::Elem> a, std::size_t rows, std::size_t cols, const PrimeField& k) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != rank)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[p * cols + j], a[rank * cols + j]);
    auto inv = k.inv(a[rank * cols + c]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      auto f = a[i * cols + c];
      if (!f) continue;
      f = k.mul(f, inv);
      for (std::size_t j = c; j < cols; ++j)
        if (a[rank * cols + j]) a[i * cols + j] = k.sub(a[i * cols + j], k.mul(f, a[rank * cols + j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace pfres
