#include "pfres/seed.hpp"

#include <fstream>
#include <limits>
#include <map>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

namespace pfres {

namespace {

constexpr const char* kSeedFormat = "pfres-seed/1";

// Uniform residues mod p by rejection on raw 64-bit draws.
class UniformResidue {
 public:
  UniformResidue(std::uint64_t seed, std::uint32_t p)
      : engine_(seed), p_(p), limit_(std::numeric_limits<std::uint64_t>::max() / p * p) {}
  std::uint32_t operator()() {
    for (;;) {
      std::uint64_t x = engine_();
      if (x < limit_) return static_cast<std::uint32_t>(x % p_);
    }
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t p_;
  std::uint64_t limit_;
};

void validate_params(const SeedParams& p) {
  if (p.g < 1 || p.g >= p.f) throw StructuralError("need 1 <= g < f");
  unsigned delta = p.f - p.g;
  if (p.epsilon < epsilon_min(delta) || p.epsilon > epsilon_max(delta))
    throw StructuralError("epsilon must lie in [ceil((delta-1)/2), ceil(delta/2)] = [" +
                          std::to_string(epsilon_min(delta)) + ", " + std::to_string(epsilon_max(delta)) + "]");
  if (p.distinguished < 1 || p.distinguished > p.g) throw StructuralError("distinguished index must lie in [1, g]");
  if (p.prime <= p.f + p.g) throw StructuralError("prime must exceed f + g");
}

}  // namespace

int epsilon_min(unsigned delta) { return static_cast<int>(delta / 2); }
int epsilon_max(unsigned delta) { return static_cast<int>((delta + 1) / 2); }

PolyRingPtr SeedData::make_ring(unsigned f, std::uint32_t prime, const std::vector<std::string>& extras) {
  auto names = indexed_names("T", f);
  std::vector<Bidegree> weights(f, Bidegree{1, 0});
  for (const auto& x : extras) {
    names.push_back(x);
    weights.push_back(Bidegree{0, 1});
  }
  return pfres::make_ring(PrimeField(prime), names, MonomialOrder{}, weights);
}

SeedData::SeedData(const SeedParams& params, std::vector<Alt> alt_matrices)
    : params_(params), alt_(std::move(alt_matrices)) {
  validate_params(params_);
  if (alt_.size() != params_.g) throw StructuralError("need exactly g alternating matrices");
  ring_ = alt_.front().ring();
  if (ring_->field().characteristic() != params_.prime) throw StructuralError("matrix field differs from seed prime");
  if (ring_->nvars() < params_.f) throw StructuralError("seed ring lacks T variables");
  for (unsigned i = 0; i < params_.f; ++i)
    if (ring_->names()[i] != "T" + std::to_string(i + 1)) throw StructuralError("seed ring must start with T1..Tf");
  for (const auto& a : alt_) {
    if (a.size() != params_.f) throw StructuralError("alternating matrices must be f x f");
    if (a.ring() != ring_ && !(*a.ring() == *ring_)) throw StructuralError("alternating matrices over different rings");
  }
  for (unsigned i = 0; i < params_.f; ++i) tau_.push_back(Poly::variable(ring_, i));
}

SeedData SeedData::generic(const SeedParams& params) {
  validate_params(params);
  auto ring = make_ring(params.f, params.prime);
  UniformResidue draw(params.rng_seed, params.prime);
  std::vector<Alt> alt;
  for (unsigned k = 0; k < params.g; ++k) {
    Alt m = Alt::zero(ring, params.f);
    for (unsigned i = 0; i < params.f; ++i)
      for (unsigned j = i + 1; j < params.f; ++j) m.set(i, j, Poly::constant(ring, draw()));
    alt.push_back(std::move(m));
  }
  return SeedData(params, std::move(alt));
}

SeedData SeedData::zero(const SeedParams& params) {
  validate_params(params);
  auto ring = make_ring(params.f, params.prime);
  return SeedData(params, std::vector<Alt>(params.g, Alt::zero(ring, params.f)));
}

bool SeedData::constant_alpha() const {
  for (const auto& a : alt_)
    for (unsigned i = 0; i < a.size(); ++i)
      for (unsigned j = 0; j < a.size(); ++j)
        if (!a.at(i, j).is_constant()) return false;
  return true;
}

SeedData SeedData::with_epsilon(int epsilon) const {
  SeedParams p = params_;
  p.epsilon = epsilon;
  return SeedData(p, alt_);
}

SeedData SeedData::with_distinguished(unsigned k) const {
  SeedParams p = params_;
  p.distinguished = k;
  return SeedData(p, alt_);
}

IdealGens operator+(const IdealGens& a, const IdealGens& b) {
  IdealGens r(a.ring);
  for (const auto& p : a.gens) r.add(p);
  for (const auto& p : b.gens) r.add(p);
  return r;
}

IdealGens operator*(const IdealGens& a, const IdealGens& b) {
  IdealGens r(a.ring);
  for (const auto& p : a.gens)
    for (const auto& q : b.gens) r.add(p * q);
  return r;
}

std::vector<Ext> mu_forms(const SeedData& seed) {
  std::vector<Ext> out;
  for (const auto& a : seed.alt_matrices()) out.push_back(a.two_form());
  return out;
}

Ext d_mu(const SeedData& seed, const DivMono& m) {
  return pfres::d_mu<PrimeField>(std::span<const Alt>(seed.alt_matrices()), m);
}

Ext contract_tau(const SeedData& seed, const Ext& a) {
  return contract<PrimeField>(std::span<const Poly>(seed.tau_images()), a);
}

Ext psi_column(const SeedData& seed, unsigned k) {
  return contract_tau(seed, seed.alt_matrices().at(k).two_form());
}

LinearMap build_psi(const SeedData& seed) {
  LinearMap psi;
  psi.row_labels = indexed_names("e", seed.f());
  psi.col_labels = indexed_names("X", seed.g());
  psi.entries.assign(static_cast<std::size_t>(seed.f()) * seed.g(), Poly(seed.ring()));
  for (unsigned k = 0; k < seed.g(); ++k) {
    Ext col = psi_column(seed, k);
    for (const auto& [s, c] : col.terms()) psi.entries[static_cast<std::size_t>(std::countr_zero(s)) * seed.g() + k] = c;
  }
  return psi;
}

namespace {

// det of rows S against the first |S| columns, Laplace along the last column.
class MinorTable {
 public:
  explicit MinorTable(const LinearMap& m, PolyRingPtr ring) : m_(m), ring_(std::move(ring)) {}
  const Poly& operator()(ExtMask rows) {
    if (auto it = memo_.find(rows); it != memo_.end()) return it->second;
    unsigned k = popcount(rows);
    Poly value(ring_);
    if (k == 0) {
      value = Poly::constant(ring_, std::int64_t{1});
    } else {
      unsigned pos = 0;
      for (ExtMask r = rows; r; r &= r - 1, ++pos) {
        unsigned i = static_cast<unsigned>(std::countr_zero(r));
        const Poly& entry = m_.at(i, k - 1);
        if (entry.is_zero()) continue;
        Poly sub = (*this)(rows & ~(ExtMask{1} << i));
        if (sub.is_zero()) continue;
        Poly term = entry * sub;
        value = (pos + k - 1) % 2 ? value - term : value + term;
      }
    }
    return memo_.emplace(rows, std::move(value)).first->second;
  }

 private:
  const LinearMap& m_;
  PolyRingPtr ring_;
  std::map<ExtMask, Poly> memo_;
};

}  // namespace

IdealGens maximal_minors(const LinearMap& psi) {
  if (psi.entries.empty()) throw StructuralError("empty matrix");
  PolyRingPtr ring = psi.entries.front().ring();
  IdealGens out(ring);
  if (psi.cols() > psi.rows()) return out;
  MinorTable table(psi, ring);
  for (ExtMask rows : subsets_of_size(static_cast<unsigned>(psi.rows()), static_cast<unsigned>(psi.cols())))
    out.add(table(rows));
  return out;
}

IdealGens tau_ideal(const SeedData& seed) { return IdealGens(seed.ring(), seed.tau_images()); }

Poly c_map(const SeedData& seed, const Div& gamma) {
  if (seed.delta() % 2 == 0) throw UnsupportedCase("c is defined only for odd delta");
  unsigned half = (seed.delta() - 1) / 2;
  if (gamma.degree() != half || gamma.rank() != seed.g())
    throw StructuralError("c needs an element of D_{(delta-1)/2}(G*)");
  unsigned k = seed.distinguished() - 1;
  const auto& ring = seed.ring();
  Ext rest = Ext::scalar(ring, seed.f(), Poly::constant(ring, std::int64_t{1}));
  for (unsigned l = 0; l < seed.g(); ++l)
    if (l != k) rest = wedge(rest, psi_column(seed, l));
  ExtMask top = (ExtMask{1} << seed.f()) - 1;
  Poly total(ring);
  Div lifted = integrate(gamma, k);
  for (const auto& [m, coeff] : lifted.terms()) total += wedge(d_mu(seed, m), rest).coefficient(top) * coeff;
  // omega_{G+} ^ Y_k = (-1)^(k-1) omega_G for the ordering X_1 ^ ... ^ X_g.
  return k % 2 ? -total : total;
}

IdealGens unmixed_gens(const SeedData& seed) {
  IdealGens out(seed.ring());
  if (seed.delta() % 2 == 0) return out;
  for (const auto& m : monomials_Y(seed.g(), (seed.delta() - 1) / 2)) out.add(c_map(seed, Div::basis(seed.ring(), m)));
  return out;
}

Poly pfaffian_deltaone(const SeedData& seed) {
  if (seed.delta() != 1) throw UnsupportedCase("the bordered Pfaffian generator needs delta = 1");
  unsigned f = seed.f(), g = seed.g(), n = f + g - 1;
  const auto& ring = seed.ring();
  Alt big = Alt::zero(ring, n);
  const auto& a = seed.alt_matrices();
  for (unsigned i = 0; i < f; ++i)
    for (unsigned j = i + 1; j < f; ++j) big.set(i, j, a[0].at(i, j));
  for (unsigned k = 1; k < g; ++k)
    for (unsigned i = 0; i < f; ++i) {
      Poly col(ring);  // (A_k T)_i
      for (unsigned j = 0; j < f; ++j) col += a[k].at(i, j) * seed.tau_images()[j];
      big.set(i, f + k - 1, col);
    }
  return pfaffian(big);
}

LinearMap bordered_rows(std::span<const Alt> phis, unsigned n) {
  if (phis.empty()) throw StructuralError("need at least one alternating matrix");
  const auto& ring = phis[0].ring();
  if (ring->nvars() < n) throw StructuralError("ring lacks T variables");
  LinearMap b;
  b.row_labels = indexed_names("x", phis.size());
  b.col_labels = indexed_names("T", n);
  b.entries.assign(phis.size() * n, Poly(ring));
  for (std::size_t a = 0; a < phis.size(); ++a) {
    if (phis[a].size() != n) throw StructuralError("alternating matrix size differs from n");
    for (unsigned col = 0; col < n; ++col) {
      Poly v(ring);
      for (unsigned i = 0; i < n; ++i) v += Poly::variable(ring, i) * phis[a].at(i, col);
      b.entries[a * n + col] = v;
    }
  }
  return b;
}

PolyRingPtr content_ring(unsigned n, unsigned d, std::uint32_t prime) {
  return SeedData::make_ring(n, prime, indexed_names("x", d));
}

Alt assemble_phi(std::span<const Alt> phis, const PolyRingPtr& mixed) {
  unsigned n = phis.empty() ? 0 : phis[0].size();
  Alt phi = Alt::zero(mixed, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      Poly v(mixed);
      for (std::size_t l = 0; l < phis.size(); ++l) {
        const Poly& c = phis[l].at(i, j);
        if (!c.is_constant()) throw StructuralError("bordered matrices must have constant entries");
        v += Poly::variable(mixed, n + l).scaled(c.constant_term());
      }
      phi.set(i, j, v);
    }
  return phi;
}

Poly content_pfaffian(std::span<const Alt> phis, unsigned n) {
  if (phis.empty()) throw StructuralError("need at least one alternating matrix");
  unsigned d = static_cast<unsigned>(phis.size());
  auto mixed = content_ring(n, d, phis[0].ring()->field().characteristic());
  Alt phi = assemble_phi(phis, mixed);
  LinearMap b = bordered_rows(phis, n);
  std::vector<std::size_t> var_map(phis[0].ring()->nvars());
  for (std::size_t i = 0; i < var_map.size(); ++i) var_map[i] = i;
  if (var_map.size() > n) throw StructuralError("bordered matrices must live in the ring T1..Tn");
  unsigned size = n + d - 1;
  Alt bordered = Alt::zero(mixed, size);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) bordered.set(i, j, phi.at(i, j));
  // Upper-right block is -B^t; only the first d-1 rows of B survive.
  for (unsigned a = 0; a + 1 < d; ++a)
    for (unsigned i = 0; i < n; ++i) bordered.set(i, n + a, -b.at(a, i).in_ring(mixed, var_map));
  return pfaffian(bordered);
}

IdealGens pfaffian_content(std::span<const Alt> phis, unsigned n) {
  if (phis.empty()) throw StructuralError("need at least one alternating matrix");
  const auto& ring = phis[0].ring();
  IdealGens out(ring);
  unsigned d = static_cast<unsigned>(phis.size());
  if ((n + d) % 2 == 0) return out;
  Poly pf = content_pfaffian(phis, n);
  std::map<std::vector<unsigned>, std::vector<Poly::Term>> by_x;
  for (const auto& t : pf.terms()) {
    std::vector<unsigned> xexp;
    Monomial tm(ring->nvars());
    for (unsigned i = 0; i < n; ++i) tm.set(i, t.mono[i]);
    for (unsigned l = 0; l < d; ++l) xexp.push_back(t.mono[n + l]);
    by_x[xexp].push_back({tm, t.coeff});
  }
  for (auto& [x, terms] : by_x) out.add(Poly::from_terms(ring, std::move(terms)));
  return out;
}

// --- serialization ---

using nlohmann::json;

std::string serialize_seed(const SeedData& seed) {
  json doc;
  doc["format"] = kSeedFormat;
  doc["f"] = seed.f();
  doc["g"] = seed.g();
  doc["epsilon"] = seed.epsilon();
  doc["prime"] = seed.prime();
  doc["rng_seed"] = seed.rng_seed();
  doc["distinguished_index"] = seed.distinguished();
  doc["tau"] = "T_i";
  std::vector<std::string> extras(seed.ring()->names().begin() + seed.f(), seed.ring()->names().end());
  doc["extra_variables"] = extras;
  json mats = json::array();
  for (const auto& a : seed.alt_matrices()) {
    json rows = json::array();
    for (unsigned i = 0; i < a.size(); ++i) {
      json row = json::array();
      for (unsigned j = 0; j < a.size(); ++j) {
        const Poly& e = a.at(i, j);
        if (e.is_constant())
          row.push_back(seed.field().to_signed(e.constant_term()));
        else
          row.push_back(e.to_string());
      }
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  doc["alt_matrices"] = mats;
  return doc.dump(2) + "\n";
}

namespace {

std::string line_context(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& require(const json& doc, const char* field) {
  if (!doc.contains(field)) throw ParseError(std::string("seed: missing field '") + field + "'");
  return doc.at(field);
}

template <class T>
T read_number(const json& doc, const char* field) {
  const json& v = require(doc, field);
  if (!v.is_number_integer()) throw ParseError(std::string("seed: field '") + field + "' must be an integer");
  if constexpr (std::is_unsigned_v<T>) {
    if (v.get<std::int64_t>() < 0) throw ParseError(std::string("seed: field '") + field + "' must be non-negative");
  }
  return v.get<T>();
}

}  // namespace

SeedData parse_seed(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("seed: malformed document at " + line_context(text, e.byte ? e.byte - 1 : 0) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("seed: top-level value must be an object");
  const json& format = require(doc, "format");
  if (!format.is_string() || format.get<std::string>() != kSeedFormat)
    throw ParseError(std::string("seed: field 'format' must be \"") + kSeedFormat + "\"");
  SeedParams params;
  params.f = read_number<unsigned>(doc, "f");
  params.g = read_number<unsigned>(doc, "g");
  params.epsilon = read_number<int>(doc, "epsilon");
  params.prime = doc.contains("prime") ? read_number<std::uint32_t>(doc, "prime") : PrimeField::kDefaultPrime;
  params.rng_seed = doc.contains("rng_seed") ? read_number<std::uint64_t>(doc, "rng_seed") : 0;
  params.distinguished = doc.contains("distinguished_index") ? read_number<unsigned>(doc, "distinguished_index") : 1;
  if (doc.contains("tau") && doc["tau"] != "T_i") throw ParseError("seed: field 'tau' only supports \"T_i\"");
  std::vector<std::string> extras;
  if (doc.contains("extra_variables")) {
    const json& ex = doc["extra_variables"];
    if (!ex.is_array()) throw ParseError("seed: field 'extra_variables' must be an array of names");
    for (const auto& x : ex) {
      if (!x.is_string()) throw ParseError("seed: field 'extra_variables' must be an array of names");
      extras.push_back(x.get<std::string>());
    }
  }
  if (params.f < 2 || params.f + extras.size() > kMaxVars) throw ParseError("seed: field 'f' out of range");
  PolyRingPtr ring;
  try {
    ring = SeedData::make_ring(params.f, params.prime, extras);
  } catch (const StructuralError& e) {
    throw ParseError(std::string("seed: field 'prime': ") + e.what());
  }
  const json& mats = require(doc, "alt_matrices");
  if (!mats.is_array()) throw ParseError("seed: field 'alt_matrices' must be an array");
  std::vector<Alt> alt;
  for (std::size_t k = 0; k < mats.size(); ++k) {
    std::string where = "alt_matrices[" + std::to_string(k) + "]";
    const json& rows = mats[k];
    if (!rows.is_array() || rows.size() != params.f)
      throw ParseError("seed: field '" + where + "' must have f rows");
    std::vector<Poly> entries;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].is_array() || rows[i].size() != params.f)
        throw ParseError("seed: field '" + where + "[" + std::to_string(i) + "]' must have f entries");
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        const json& e = rows[i][j];
        std::string cell = where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
        if (e.is_number_integer()) {
          entries.push_back(Poly::constant(ring, ring->field().from_int(e.get<std::int64_t>())));
        } else if (e.is_string()) {
          try {
            entries.push_back(parse_polynomial(ring, e.get<std::string>()));
          } catch (const ParseError& pe) {
            throw ParseError("seed: field '" + cell + "': " + pe.what());
          }
        } else {
          throw ParseError("seed: field '" + cell + "' must be an integer or a polynomial string");
        }
      }
    }
    try {
      alt.emplace_back(ring, params.f, std::move(entries));
    } catch (const StructuralError& e) {
      throw ParseError("seed: field '" + where + "': " + e.what());
    }
  }
  try {
    return SeedData(params, std::move(alt));
  } catch (const StructuralError& e) {
    throw ParseError(std::string("seed: ") + e.what());
  }
}

SeedData load_seed(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("seed: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_seed(buf.str());
}

void save_seed(const SeedData& seed, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw StructuralError("cannot write '" + path + "'");
  out << serialize_seed(seed);
}

}  // namespace pfres
