#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfres/builders.hpp"
#include "pfres/groebner.hpp"

namespace pfres {

struct CheckReport {
  std::string check;
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;
};

CheckReport check_complex(const FreeComplex& c);
// d_tgt o xi_N = xi_{N-1} o d_src wherever both sides are stored.
CheckReport check_chain_map(const FreeComplex& src, const FreeComplex& tgt, const ChainMap& xi);
// Entry bidegrees equal target twist minus source twist. The alpha-degree is
// probed by rebuilding from a seed whose alternating matrices are scaled by a
// random lambda: each entry must scale by lambda^(alpha-degree).
CheckReport check_bihomogeneity(const SeedData& seed, const std::function<FreeComplex(const SeedData&)>& build,
                                std::uint64_t rng_seed = 1);
// For every valid N and every basis gamma: the cycles are cycles and xi carries the top one
// to (-1)^(eps+N) times the bottom one.
CheckReport check_transfer(const SeedData& seed);
// The xi-blocks between the summands outside M are triangular with signed identity diagonals.
CheckReport check_unit_triangular_quotient(const SeedData& seed);

// Free complex without summand structure: generator degrees (single grading) and matrices.
struct MatrixComplex {
  PolyRingPtr ring;
  std::map<int, std::vector<int>> degrees;
  std::map<int, SparsePolyMatrix> d;  // d[n] : C_n -> C_{n-1}

  std::size_t rank(int n) const;
  int top() const;  // largest n with C_n != 0
  int bottom() const;
};
MatrixComplex as_matrix_complex(const FreeComplex& c);
// Cancels unit entries, choosing pivots in an order shuffled by pivot_seed.
MatrixComplex minimize(const FreeComplex& c, std::uint64_t pivot_seed = 0);

struct BettiColumn {
  int position;
  std::map<int, std::size_t> by_degree;
  std::size_t total() const;
  friend bool operator==(const BettiColumn&, const BettiColumn&) = default;
};
using BettiTable = std::vector<BettiColumn>;

BettiTable betti_of(const MatrixComplex& c);
// Graded ranks of the minimized complex.
BettiTable minimal_betti(const FreeComplex& c, std::uint64_t pivot_seed = 0);
// Same numbers from ranks of the constant part of each differential.
BettiTable betti_from_constant_ranks(const FreeComplex& c);
std::vector<std::size_t> totals(const BettiTable& t);
// Position N >= 1 generators all in degree g + N - 1.
bool check_linearity(const BettiTable& t, unsigned g);
// b_N = (bottom ranks at N) - (top ranks at N + 1) read from the layout of M, for eps = ceil(delta/2).
std::vector<long> predicted_minimal_ranks(unsigned f, unsigned g);

struct AcyclicityOptions {
  unsigned points = 3;
  std::size_t max_grade_vars = 6;
  std::uint64_t rng_seed = 1;
  GroebnerLimits limits{4000, 2000000};
};

struct RankCheck {
  int k;
  std::size_t expected;
  std::size_t observed;
  unsigned minor_degree;
};

enum class GradeStatus { Verified, Failed, AssumedGeneric, ResourceLimited };
std::string to_string(GradeStatus s);

struct GradeCheck {
  int k;
  std::size_t rank;
  GradeStatus status;
};

struct AcyclicityReport {
  bool pass = false;
  std::vector<RankCheck> ranks;
  std::vector<GradeCheck> grades;
  // Upper bound on the chance that a true rank was missed at every sample point.
  double failure_bound = 0;
  std::string detail;
};
AcyclicityReport acyclicity_probabilistic(const MatrixComplex& c, const AcyclicityOptions& opts = {});

// Rank of a dense row-major matrix over F_p.
std::size_t dense_rank(std::vector<PrimeField::Elem> a, std::size_t rows, std::size_t cols, const PrimeField& k);

}  // namespace pfres
