#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pfres/divided.hpp"
#include "pfres/exterior.hpp"
#include "pfres/polynomial.hpp"

namespace pfres {

// Plain is a V_{i,j} of the uncut double complexes; Corner is
// Lambda^I F (x) Lambda^g G.
enum class SummandKind { Top, Bottom, Plain, Corner };

struct SummandLabel {
  SummandKind kind = SummandKind::Plain;
  unsigned I = 0;
  unsigned J = 0;

  static SummandLabel top(unsigned i, unsigned j) { return {SummandKind::Top, i, j}; }
  static SummandLabel bottom(unsigned i, unsigned j) { return {SummandKind::Bottom, i, j}; }
  static SummandLabel plain(unsigned i, unsigned j) { return {SummandKind::Plain, i, j}; }
  static SummandLabel corner(unsigned ext_degree) { return {SummandKind::Corner, ext_degree, 0}; }

  std::string to_string() const;
  friend auto operator<=>(const SummandLabel&, const SummandLabel&) = default;
};

// Lambda^i F (x) D_j(G*), or a corner Lambda^i F (x) Lambda^g G whose single
// D-slot is the zero exponent vector standing in for omega_G.
class Summand {
 public:
  Summand(SummandLabel label, unsigned f, unsigned g, Bidegree twist);

  const SummandLabel& label() const { return label_; }
  unsigned ext_degree() const { return label_.I; }
  unsigned div_degree() const { return label_.kind == SummandKind::Corner ? 0 : label_.J; }
  const Bidegree& twist() const { return twist_; }
  // Degree of the generators in the single T-grading.
  int generator_degree() const { return -twist_[0]; }
  const std::vector<ExtMask>& ext_basis() const { return ext_; }
  const std::vector<DivMono>& div_basis() const { return div_; }
  std::size_t rank() const { return ext_.size() * div_.size(); }

  std::size_t index(ExtMask s, const DivMono& m) const;
  std::pair<ExtMask, DivMono> element(std::size_t local) const {
    return {ext_[local / div_.size()], div_[local % div_.size()]};
  }

 private:
  SummandLabel label_;
  Bidegree twist_;
  std::vector<ExtMask> ext_;
  std::vector<DivMono> div_;
  std::unordered_map<ExtMask, std::size_t> ext_index_;
  std::map<DivMono, std::size_t> div_index_;
};

// Twist of V_{i,j}: (f - 2g - i - 2j, -g - j).
Bidegree v_twist(unsigned f, unsigned g, unsigned i, unsigned j);
// Twist of Lambda^k F (x) Lambda^g G, normalized so Lambda^f sits at (0, 0).
Bidegree corner_twist(unsigned f, unsigned k);

class GradedFreeModule {
 public:
  GradedFreeModule() = default;
  // Sorts summands by label.
  explicit GradedFreeModule(std::vector<Summand> summands);

  const std::vector<Summand>& summands() const { return summands_; }
  std::size_t rank() const { return rank_; }
  bool empty() const { return rank_ == 0; }
  std::size_t offset(std::size_t summand) const { return offsets_[summand]; }
  std::optional<std::size_t> find(const SummandLabel& label) const;
  // Summand holding a global basis index.
  std::size_t summand_of(std::size_t index) const;
  std::string basis_name(std::size_t index) const;

 private:
  std::vector<Summand> summands_;
  std::vector<std::size_t> offsets_;
  std::size_t rank_ = 0;
};

// Column-major sparse matrix; each column lists (row, entry) with rows increasing.
class SparsePolyMatrix {
 public:
  using Entry = std::pair<std::uint32_t, Poly>;

  SparsePolyMatrix(PolyRingPtr ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), columns_(cols) {}

  const PolyRingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const std::vector<Entry>& column(std::size_t c) const { return columns_[c]; }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }
  Poly at(std::size_t r, std::size_t c) const;

  void add(std::size_t r, std::size_t c, const Poly& v);
  void set(std::size_t r, std::size_t c, const Poly& v);
  void set_column(std::size_t c, std::map<std::uint32_t, Poly> entries);

  // First nonzero entry in column-major order.
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;
  SparsePolyMatrix submatrix(std::size_t row0, std::size_t nrows, std::size_t col0, std::size_t ncols) const;
  bool block_is_zero(std::size_t row0, std::size_t nrows, std::size_t col0, std::size_t ncols) const;

  friend SparsePolyMatrix operator*(const SparsePolyMatrix& a, const SparsePolyMatrix& b);
  friend SparsePolyMatrix operator-(const SparsePolyMatrix& a, const SparsePolyMatrix& b);
  friend bool operator==(const SparsePolyMatrix& a, const SparsePolyMatrix& b);

  // Row-major dense values at a point.
  std::vector<PrimeField::Elem> evaluate(std::span<const PrimeField::Elem> point) const;

 private:
  PolyRingPtr ring_;
  std::size_t rows_;
  std::vector<std::vector<Entry>> columns_;
};

enum class BlockKind { Psi, Tau, NegTau, CornerWedge, CMap, Xi };
std::string to_string(BlockKind k);

// A possibly-nonzero block of a differential or chain map, by summand index.
struct Block {
  std::size_t target;
  std::size_t source;
  BlockKind kind;
};

using FreeElement = std::map<std::size_t, Poly>;

class FreeComplex {
 public:
  FreeComplex(std::string name, PolyRingPtr ring) : name_(std::move(name)), ring_(std::move(ring)) {}

  const std::string& name() const { return name_; }
  const PolyRingPtr& ring() const { return ring_; }
  // Empty module outside the stored window.
  const GradedFreeModule& module(int n) const;
  // d_n : C_n -> C_{n-1}; zero matrix of the right shape when nothing is stored.
  const SparsePolyMatrix& differential(int n) const;
  const std::vector<Block>& blocks(int n) const;
  int min_degree() const;
  int max_degree() const;
  // Largest n with C_n != 0.
  int top_degree() const;
  const std::map<int, GradedFreeModule>& modules() const { return modules_; }

  void set_module(int n, GradedFreeModule m);
  void set_differential(int n, SparsePolyMatrix d, std::vector<Block> blocks = {});
  SparsePolyMatrix& mutable_differential(int n);

 private:
  std::string name_;
  PolyRingPtr ring_;
  std::map<int, GradedFreeModule> modules_;
  std::map<int, SparsePolyMatrix> diffs_;
  std::map<int, std::vector<Block>> blocks_;
  mutable std::map<int, SparsePolyMatrix> zero_cache_;
};

// A degree-0 map between two complexes, one matrix per degree.
struct ChainMap {
  std::map<int, SparsePolyMatrix> maps;
  std::map<int, std::vector<Block>> blocks;
  const SparsePolyMatrix* at(int n) const {
    auto it = maps.find(n);
    return it == maps.end() ? nullptr : &it->second;
  }
};

FreeElement apply(const SparsePolyMatrix& m, const FreeElement& v);
bool is_zero(const FreeElement& v);
FreeElement negated(const FreeElement& v);
bool equal(const FreeElement& a, const FreeElement& b);

// Distinct pairs (twist, rank) per degree, ordered by decreasing generator degree.
std::vector<std::pair<Bidegree, std::size_t>> twist_table(const GradedFreeModule& m);

std::string export_complex_json(const FreeComplex& c, bool with_differentials = true);

}  // namespace pfres
