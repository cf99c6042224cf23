#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pfres/alternating.hpp"

namespace pfres {

using Alt = AltMatrix<PrimeField>;
using Ext = ExtElem<PrimeField>;
using Div = DivElem<PrimeField>;

struct SeedParams {
  unsigned f = 0;
  unsigned g = 0;
  int epsilon = 0;
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::uint64_t rng_seed = 0;
  unsigned distinguished = 1;  // 1-based index of the X used for integration
};

// Smallest and largest admissible epsilon for delta = f - g.
int epsilon_min(unsigned delta);
int epsilon_max(unsigned delta);

// tau(e_i) = T_i, and g alternating f x f matrices mu(X_k) over R = F_p[T_1..T_f, extras].
class SeedData {
 public:
  SeedData(const SeedParams& params, std::vector<Alt> alt_matrices);

  // Entries drawn uniformly from F_p with a fixed-width engine, reproducible across platforms.
  static SeedData generic(const SeedParams& params);
  static SeedData zero(const SeedParams& params);
  // The ring shared by every seed with this (f, prime, extras).
  static PolyRingPtr make_ring(unsigned f, std::uint32_t prime, const std::vector<std::string>& extras = {});

  unsigned f() const { return params_.f; }
  unsigned g() const { return params_.g; }
  unsigned delta() const { return params_.f - params_.g; }
  int epsilon() const { return params_.epsilon; }
  std::uint32_t prime() const { return params_.prime; }
  std::uint64_t rng_seed() const { return params_.rng_seed; }
  unsigned distinguished() const { return params_.distinguished; }
  const SeedParams& params() const { return params_; }
  const PolyRingPtr& ring() const { return ring_; }
  const PrimeField& field() const { return ring_->field(); }
  const std::vector<Alt>& alt_matrices() const { return alt_; }
  // T_1..T_f as polynomials.
  const std::vector<Poly>& tau_images() const { return tau_; }
  bool constant_alpha() const;

  SeedData with_epsilon(int epsilon) const;
  SeedData with_distinguished(unsigned k) const;

  friend bool operator==(const SeedData& a, const SeedData& b) {
    return a.params_.f == b.params_.f && a.params_.g == b.params_.g && a.params_.epsilon == b.params_.epsilon &&
           a.params_.prime == b.params_.prime && a.params_.rng_seed == b.params_.rng_seed &&
           a.params_.distinguished == b.params_.distinguished && a.ring_->names() == b.ring_->names() &&
           a.alt_ == b.alt_;
  }

 private:
  SeedParams params_;
  PolyRingPtr ring_;
  std::vector<Alt> alt_;
  std::vector<Poly> tau_;
};

// Dense matrix of polynomials with row and column labels.
struct LinearMap {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<Poly> entries;  // row-major
  std::size_t rows() const { return row_labels.size(); }
  std::size_t cols() const { return col_labels.size(); }
  const Poly& at(std::size_t r, std::size_t c) const { return entries[r * cols() + c]; }
};

struct IdealGens {
  PolyRingPtr ring;
  std::vector<Poly> gens;

  explicit IdealGens(PolyRingPtr r) : ring(std::move(r)) {}
  IdealGens(PolyRingPtr r, const std::vector<Poly>& gs) : ring(std::move(r)) {
    for (const auto& p : gs) add(p);
  }
  void add(const Poly& p) {
    if (!p.is_zero()) gens.push_back(p);
  }
  std::size_t size() const { return gens.size(); }
  bool empty() const { return gens.empty(); }
};

IdealGens operator+(const IdealGens& a, const IdealGens& b);
IdealGens operator*(const IdealGens& a, const IdealGens& b);

// The seed's mu(X_k) as 2-forms.
std::vector<Ext> mu_forms(const SeedData& seed);
Ext d_mu(const SeedData& seed, const DivMono& m);
Ext contract_tau(const SeedData& seed, const Ext& a);

// f x g, column k = tau(mu(X_k)).
LinearMap build_psi(const SeedData& seed);
// Psi(X_k) as an element of F.
Ext psi_column(const SeedData& seed, unsigned k);
IdealGens maximal_minors(const LinearMap& psi);
IdealGens tau_ideal(const SeedData& seed);

// Requires delta odd and gamma of degree (delta-1)/2.
Poly c_map(const SeedData& seed, const Div& gamma);
IdealGens unmixed_gens(const SeedData& seed);
// Requires delta = 1.
Poly pfaffian_deltaone(const SeedData& seed);

// Rows [T_1..T_n] phi_l for constant alternating phi_1..phi_d.
LinearMap bordered_rows(std::span<const Alt> phis, unsigned n);
// Ring T_1..T_n, x_1..x_d with bidegrees (1,0) and (0,1).
PolyRingPtr content_ring(unsigned n, unsigned d, std::uint32_t prime);
// phi = sum x_l phi_l in the mixed ring.
Alt assemble_phi(std::span<const Alt> phis, const PolyRingPtr& mixed);
// Pf of the bordered matrix minus its last row and column, in the mixed ring.
Poly content_pfaffian(std::span<const Alt> phis, unsigned n);
// T-coefficients of that Pfaffian, mapped back to the ring of the phis.
IdealGens pfaffian_content(std::span<const Alt> phis, unsigned n);

std::string serialize_seed(const SeedData& seed);
SeedData parse_seed(const std::string& text);
SeedData load_seed(const std::string& path);
void save_seed(const SeedData& seed, const std::string& path);

}  // namespace pfres
