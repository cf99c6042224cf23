#include "pfres/complex.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace pfres {

std::string SummandLabel::to_string() const {
  auto pair = [&](const char* stem) {
    return std::string(stem) + "(" + std::to_string(I) + "," + std::to_string(J) + ")";
  };
  switch (kind) {
    case SummandKind::Top: return pair("T");
    case SummandKind::Bottom: return pair("B");
    case SummandKind::Plain: return pair("V");
    case SummandKind::Corner: return "C(" + std::to_string(I) + ")";
  }
  return "?";
}

Bidegree v_twist(unsigned f, unsigned g, unsigned i, unsigned j) {
  return {static_cast<int>(f) - 2 * static_cast<int>(g) - static_cast<int>(i) - 2 * static_cast<int>(j),
          -static_cast<int>(g) - static_cast<int>(j)};
}

Bidegree corner_twist(unsigned f, unsigned k) { return {static_cast<int>(f) - static_cast<int>(k), 0}; }

Summand::Summand(SummandLabel label, unsigned f, unsigned g, Bidegree twist)
    : label_(label), twist_(twist), ext_(subsets_of_size(f, label.I)) {
  div_ = label.kind == SummandKind::Corner ? std::vector<DivMono>{DivMono::zero(g)} : monomials_Y(g, label.J);
  for (std::size_t k = 0; k < ext_.size(); ++k) ext_index_.emplace(ext_[k], k);
  for (std::size_t k = 0; k < div_.size(); ++k) div_index_.emplace(div_[k], k);
}

std::size_t Summand::index(ExtMask s, const DivMono& m) const {
  auto e = ext_index_.find(s);
  auto d = div_index_.find(m);
  if (e == ext_index_.end() || d == div_index_.end())
    throw StructuralError("basis element not in summand " + label_.to_string());
  return e->second * div_.size() + d->second;
}

GradedFreeModule::GradedFreeModule(std::vector<Summand> summands) : summands_(std::move(summands)) {
  std::stable_sort(summands_.begin(), summands_.end(),
                   [](const Summand& a, const Summand& b) { return a.label() < b.label(); });
  std::erase_if(summands_, [](const Summand& s) { return s.rank() == 0; });
  for (const auto& s : summands_) {
    offsets_.push_back(rank_);
    rank_ += s.rank();
  }
}

std::optional<std::size_t> GradedFreeModule::find(const SummandLabel& label) const {
  for (std::size_t k = 0; k < summands_.size(); ++k)
    if (summands_[k].label() == label) return k;
  return std::nullopt;
}

std::size_t GradedFreeModule::summand_of(std::size_t index) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

std::string GradedFreeModule::basis_name(std::size_t index) const {
  std::size_t k = summand_of(index);
  const Summand& s = summands_[k];
  auto [mask, mono] = s.element(index - offsets_[k]);
  std::string ext = "e";
  for (unsigned i : mask_to_tuple(mask)) ext += std::to_string(i);
  if (mask == 0) ext = "1";
  return s.label().to_string() + "[" + ext + "*" + mono.to_string() + "]";
}

std::size_t SparsePolyMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

Poly SparsePolyMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) return it->second;
  return Poly(ring_);
}

void SparsePolyMatrix::add(std::size_t r, std::size_t c, const Poly& v) {
  if (r >= rows_ || c >= columns_.size()) throw StructuralError("matrix index out of range");
  if (v.is_zero()) return;
  auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) {
    it->second += v;
    if (it->second.is_zero()) col.erase(it);
  } else {
    col.insert(it, {static_cast<std::uint32_t>(r), v});
  }
}

void SparsePolyMatrix::set(std::size_t r, std::size_t c, const Poly& v) {
  if (r >= rows_ || c >= columns_.size()) throw StructuralError("matrix index out of range");
  auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.first < row; });
  bool present = it != col.end() && it->first == r;
  if (v.is_zero()) {
    if (present) col.erase(it);
  } else if (present) {
    it->second = v;
  } else {
    col.insert(it, {static_cast<std::uint32_t>(r), v});
  }
}

void SparsePolyMatrix::set_column(std::size_t c, std::map<std::uint32_t, Poly> entries) {
  auto& col = columns_.at(c);
  col.clear();
  for (auto& [r, v] : entries) {
    if (r >= rows_) throw StructuralError("matrix row out of range");
    if (!v.is_zero()) col.emplace_back(r, std::move(v));
  }
}

std::optional<std::pair<std::size_t, std::size_t>> SparsePolyMatrix::first_nonzero() const {
  for (std::size_t c = 0; c < columns_.size(); ++c)
    if (!columns_[c].empty()) return std::pair{static_cast<std::size_t>(columns_[c].front().first), c};
  return std::nullopt;
}

SparsePolyMatrix SparsePolyMatrix::submatrix(std::size_t row0, std::size_t nrows, std::size_t col0,
                                             std::size_t ncols) const {
  SparsePolyMatrix out(ring_, nrows, ncols);
  for (std::size_t c = 0; c < ncols; ++c)
    for (const auto& [r, v] : columns_.at(col0 + c))
      if (r >= row0 && r < row0 + nrows) out.columns_[c].emplace_back(r - row0, v);
  return out;
}

bool SparsePolyMatrix::block_is_zero(std::size_t row0, std::size_t nrows, std::size_t col0, std::size_t ncols) const {
  for (std::size_t c = col0; c < col0 + ncols; ++c)
    for (const auto& e : columns_.at(c))
      if (e.first >= row0 && e.first < row0 + nrows) return false;
  return true;
}

SparsePolyMatrix operator*(const SparsePolyMatrix& a, const SparsePolyMatrix& b) {
  if (a.cols() != b.rows()) throw StructuralError("matrix shapes do not compose");
  SparsePolyMatrix out(a.ring_, a.rows(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    std::map<std::uint32_t, Poly> acc;
    for (const auto& [k, bk] : b.columns_[c])
      for (const auto& [r, ark] : a.columns_[k]) {
        auto [it, fresh] = acc.try_emplace(r, a.ring_);
        it->second += ark * bk;
      }
    out.set_column(c, std::move(acc));
  }
  return out;
}

SparsePolyMatrix operator-(const SparsePolyMatrix& a, const SparsePolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw StructuralError("matrix shapes differ");
  SparsePolyMatrix out = a;
  for (std::size_t c = 0; c < b.cols(); ++c)
    for (const auto& [r, v] : b.columns_[c]) out.add(r, c, -v);
  return out;
}

bool operator==(const SparsePolyMatrix& a, const SparsePolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const auto& x = a.columns_[c];
    const auto& y = b.columns_[c];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k].first != y[k].first || !(x[k].second == y[k].second)) return false;
  }
  return true;
}

std::vector<PrimeField::Elem> SparsePolyMatrix::evaluate(std::span<const PrimeField::Elem> point) const {
  std::vector<PrimeField::Elem> out(rows_ * columns_.size(), 0);
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const auto& [r, v] : columns_[c]) out[r * columns_.size() + c] = v.evaluate(point);
  return out;
}

std::string to_string(BlockKind k) {
  switch (k) {
    case BlockKind::Psi: return "Psi";
    case BlockKind::Tau: return "tau";
    case BlockKind::NegTau: return "-tau";
    case BlockKind::CornerWedge: return "wedge-Psi";
    case BlockKind::CMap: return "c";
    case BlockKind::Xi: return "xi";
  }
  return "?";
}

const GradedFreeModule& FreeComplex::module(int n) const {
  static const GradedFreeModule empty;
  auto it = modules_.find(n);
  return it == modules_.end() ? empty : it->second;
}

const SparsePolyMatrix& FreeComplex::differential(int n) const {
  if (auto it = diffs_.find(n); it != diffs_.end()) return it->second;
  auto [it, fresh] = zero_cache_.try_emplace(n, ring_, module(n - 1).rank(), module(n).rank());
  return it->second;
}

const std::vector<Block>& FreeComplex::blocks(int n) const {
  static const std::vector<Block> none;
  auto it = blocks_.find(n);
  return it == blocks_.end() ? none : it->second;
}

int FreeComplex::min_degree() const { return modules_.empty() ? 0 : modules_.begin()->first; }
int FreeComplex::max_degree() const { return modules_.empty() ? -1 : modules_.rbegin()->first; }

int FreeComplex::top_degree() const {
  for (auto it = modules_.rbegin(); it != modules_.rend(); ++it)
    if (!it->second.empty()) return it->first;
  return min_degree() - 1;
}

void FreeComplex::set_module(int n, GradedFreeModule m) {
  modules_[n] = std::move(m);
  zero_cache_.clear();
}

void FreeComplex::set_differential(int n, SparsePolyMatrix d, std::vector<Block> blocks) {
  if (d.rows() != module(n - 1).rank() || d.cols() != module(n).rank())
    throw StructuralError("differential shape does not match modules at degree " + std::to_string(n));
  diffs_.insert_or_assign(n, std::move(d));
  blocks_[n] = std::move(blocks);
}

SparsePolyMatrix& FreeComplex::mutable_differential(int n) {
  auto it = diffs_.find(n);
  if (it == diffs_.end()) it = diffs_.emplace(n, SparsePolyMatrix(ring_, module(n - 1).rank(), module(n).rank())).first;
  return it->second;
}

FreeElement apply(const SparsePolyMatrix& m, const FreeElement& v) {
  FreeElement out;
  for (const auto& [c, x] : v) {
    if (c >= m.cols()) throw StructuralError("vector index outside matrix columns");
    for (const auto& [r, a] : m.column(c)) {
      auto [it, fresh] = out.try_emplace(r, m.ring());
      it->second += a * x;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

bool is_zero(const FreeElement& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

FreeElement negated(const FreeElement& v) {
  FreeElement out;
  for (const auto& [k, x] : v) out.emplace(k, -x);
  return out;
}

bool equal(const FreeElement& a, const FreeElement& b) {
  auto diff = a;
  for (const auto& [k, x] : b) {
    auto [it, fresh] = diff.try_emplace(k, x.ring());
    it->second -= x;
  }
  return is_zero(diff);
}

std::vector<std::pair<Bidegree, std::size_t>> twist_table(const GradedFreeModule& m) {
  std::map<Bidegree, std::size_t> acc;
  for (const auto& s : m.summands()) acc[s.twist()] += s.rank();
  std::vector<std::pair<Bidegree, std::size_t>> out(acc.begin(), acc.end());
  return out;
}

std::string export_complex_json(const FreeComplex& c, bool with_differentials) {
  nlohmann::ordered_json doc;
  doc["format"] = "pfres-complex/1";
  doc["name"] = c.name();
  doc["variables"] = c.ring()->names();
  doc["prime"] = c.ring()->field().characteristic();
  auto& mods = doc["modules"] = nlohmann::ordered_json::array();
  for (const auto& [n, m] : c.modules()) {
    if (m.empty()) continue;
    nlohmann::ordered_json entry;
    entry["degree"] = n;
    entry["rank"] = m.rank();
    auto& ss = entry["summands"] = nlohmann::ordered_json::array();
    for (const auto& s : m.summands())
      ss.push_back({{"label", s.label().to_string()}, {"rank", s.rank()}, {"twist", s.twist()}});
    mods.push_back(std::move(entry));
  }
  if (with_differentials) {
    auto& ds = doc["differentials"] = nlohmann::ordered_json::array();
    for (const auto& [n, m] : c.modules()) {
      if (m.empty() || c.module(n - 1).empty()) continue;
      const auto& d = c.differential(n);
      nlohmann::ordered_json entry;
      entry["degree"] = n;
      entry["rows"] = d.rows();
      entry["cols"] = d.cols();
      auto& trip = entry["entries"] = nlohmann::ordered_json::array();
      for (std::size_t col = 0; col < d.cols(); ++col)
        for (const auto& [r, v] : d.column(col)) trip.push_back({r, col, v.to_string()});
      ds.push_back(std::move(entry));
    }
  }
  return doc.dump(1);
}

}  // namespace pfres
