#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pfres/complex.hpp"
#include "pfres/seed.hpp"

namespace pfres {

enum class TotKind { V, U, T, B };
std::string to_string(TotKind k);

// Largest N with M_N != 0.
int n_max(unsigned f, unsigned g, int epsilon);

// Totalization over [lowest nonzero degree, top]; top defaults to n_max + 2.
FreeComplex build_tot(const SeedData& seed, TotKind which, std::optional<int> top = {});
FreeComplex build_M(const SeedData& seed);
// Mapping cone, materialized up to `top` (default n_max + 2).
FreeComplex build_L(const SeedData& seed, std::optional<int> top = {});
// Tot(T) -> Tot(B) in every degree both complexes store.
ChainMap build_xi(const SeedData& seed, const FreeComplex& tot_t, const FreeComplex& tot_b);

// Module layout only: ranks and twists per degree.
struct LayoutEntry {
  int degree;
  SummandLabel label;
  Bidegree twist;
  std::size_t rank;
};
std::vector<LayoutEntry> layout_M(unsigned f, unsigned g, int epsilon);

struct CycleTriple {
  FreeElement in_v;    // Z_gamma in Tot(V)_N
  FreeElement in_top;  // its image in Tot(T)_N
  FreeElement in_bot;  // its image in Tot(B)_N
};
// Requires N >= 1, delta + N - 1 even and gamma of degree (delta + N - 1) / 2.
CycleTriple cycles(const SeedData& seed, int n, const Div& gamma, const FreeComplex& tot_v, const FreeComplex& tot_t,
                   const FreeComplex& tot_b);

enum class LastMapCase { CornerByC, KoszulTau, TopPsiXi, TopAndBottom, BottomTauBesideTop, BottomTau };
std::string to_string(LastMapCase c);

using BlockSupport = std::tuple<SummandLabel, SummandLabel, BlockKind>;  // (source, target, kind)

struct LastMapShape {
  int degree = 0;
  std::vector<SummandLabel> sources;
  std::vector<SummandLabel> targets;
  std::vector<BlockSupport> nonzero_blocks;

  friend bool operator==(const LastMapShape&, const LastMapShape&) = default;
};

struct LastMapPrediction {
  LastMapCase which;
  LastMapShape shape;
};
LastMapPrediction classify_last_map(unsigned f, unsigned g, int epsilon);
// The final nonzero differential of a built complex, with the blocks that are actually nonzero.
LastMapShape observe_last_map(const FreeComplex& m);
std::string describe(const LastMapShape& s);

}  // namespace pfres
