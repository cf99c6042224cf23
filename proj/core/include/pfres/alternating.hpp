#pragma once

#include <unordered_map>
#include <vector>

#include "pfres/divided.hpp"
#include "pfres/exterior.hpp"

namespace pfres {

// Skew-symmetric matrix with zero diagonal; the constructor enforces it.
template <Field K>
class AltMatrix {
 public:
  using P = Polynomial<K>;

  static AltMatrix zero(RingPtr<K> ring, unsigned n) {
    return AltMatrix(ring, n, std::vector<P>(static_cast<std::size_t>(n) * n, P(ring)));
  }
  // Row-major n*n entries.
  AltMatrix(RingPtr<K> ring, unsigned n, std::vector<P> entries)
      : ring_(std::move(ring)), n_(n), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(n) * n) throw StructuralError("alternating matrix needs n*n entries");
    for (unsigned i = 0; i < n; ++i) {
      if (!at(i, i).is_zero()) throw StructuralError("alternating matrix has a nonzero diagonal entry");
      for (unsigned j = i + 1; j < n; ++j)
        if (!(at(i, j) + at(j, i)).is_zero()) throw StructuralError("matrix is not skew-symmetric");
    }
  }
  // Entries above the diagonal, row by row.
  static AltMatrix from_upper(RingPtr<K> ring, unsigned n, const std::vector<P>& upper) {
    if (upper.size() != static_cast<std::size_t>(n) * (n - 1) / 2)
      throw StructuralError("wrong number of upper-triangular entries");
    AltMatrix m = zero(ring, n);
    std::size_t idx = 0;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j) m.set(i, j, upper[idx++]);
    return m;
  }

  const RingPtr<K>& ring() const { return ring_; }
  unsigned size() const { return n_; }
  const P& at(unsigned i, unsigned j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  // Sets (i,j) and (j,i) together.
  void set(unsigned i, unsigned j, const P& v) {
    if (i == j) throw StructuralError("alternating matrix diagonal is fixed at zero");
    entries_[static_cast<std::size_t>(i) * n_ + j] = v;
    entries_[static_cast<std::size_t>(j) * n_ + i] = -v;
  }
  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  // The 2-form sum_{i<j} m_ij e_i ^ e_j.
  ExtElem<K> two_form() const {
    ExtElem<K> v(ring_, n_, 2);
    for (unsigned i = 0; i < n_; ++i)
      for (unsigned j = i + 1; j < n_; ++j) v.add_term((ExtMask{1} << i) | (ExtMask{1} << j), at(i, j));
    return v;
  }
  static AltMatrix from_two_form(const ExtElem<K>& v) {
    if (v.degree() != 2) throw StructuralError("not a 2-form");
    AltMatrix m = zero(v.ring(), v.rank());
    for (const auto& [s, c] : v.terms()) {
      auto t = mask_to_tuple(s);
      m.set(t[0] - 1, t[1] - 1, c);
    }
    return m;
  }

  friend bool operator==(const AltMatrix& a, const AltMatrix& b) { return a.n_ == b.n_ && a.entries_ == b.entries_; }

 private:
  RingPtr<K> ring_;
  unsigned n_;
  std::vector<P> entries_;
};

// Pfaffians of principal submatrices, memoized over index sets. Expansion
// along the smallest index: Pf(S) = sum_j (-1)^(pos j - 1) m_{s0,j} Pf(S - {s0,j}).
template <Field K>
class PfaffianTable {
 public:
  explicit PfaffianTable(const AltMatrix<K>& m) : m_(m) {}

  const Polynomial<K>& operator()(ExtMask s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    Polynomial<K> value(m_.ring());
    unsigned k = popcount(s);
    if (k == 0) {
      value = Polynomial<K>::constant(m_.ring(), m_.ring()->field().one());
    } else if (k % 2 == 0) {
      unsigned first = static_cast<unsigned>(std::countr_zero(s));
      ExtMask rest = s & ~(ExtMask{1} << first);
      unsigned pos = 0;
      for (ExtMask r = rest; r; r &= r - 1, ++pos) {
        unsigned j = static_cast<unsigned>(std::countr_zero(r));
        const auto& entry = m_.at(first, j);
        if (entry.is_zero()) continue;
        Polynomial<K> sub = (*this)(rest & ~(ExtMask{1} << j));
        if (sub.is_zero()) continue;
        Polynomial<K> term = entry * sub;
        value = pos % 2 ? value - term : value + term;
      }
    }
    return memo_.emplace(s, std::move(value)).first->second;
  }

 private:
  const AltMatrix<K>& m_;
  std::unordered_map<ExtMask, Polynomial<K>> memo_;
};

template <Field K>
Polynomial<K> pfaffian(const AltMatrix<K>& m) {
  if (m.size() % 2) return Polynomial<K>(m.ring());
  PfaffianTable<K> table(m);
  return table(m.size() == 32 ? ~ExtMask{0} : (ExtMask{1} << m.size()) - 1);
}

// v^(l): the coefficient of e_I is the Pfaffian of the I-submatrix.
template <Field K>
ExtElem<K> divided_power_2form(const ExtElem<K>& v, unsigned l) {
  if (v.degree() != 2) throw StructuralError("divided power of a form that is not a 2-form");
  if (2 * l > v.rank()) return ExtElem<K>(v.ring(), v.rank(), v.rank());
  AltMatrix<K> m = AltMatrix<K>::from_two_form(v);
  PfaffianTable<K> table(m);
  ExtElem<K> r(v.ring(), v.rank(), 2 * l);
  for (ExtMask s : subsets_of_size(v.rank(), 2 * l)) r.add_term(s, table(s));
  return r;
}

// Wedge of the divided powers mu(X_k)^(a_k).
template <Field K>
ExtElem<K> d_mu(std::span<const AltMatrix<K>> mus, const DivMono& m) {
  if (mus.size() != m.size()) throw StructuralError("one alternating matrix per X variable required");
  if (mus.empty()) throw StructuralError("d_mu needs at least one alternating matrix");
  const auto& ring = mus[0].ring();
  unsigned f = mus[0].size();
  if (2 * m.degree() > f) return ExtElem<K>(ring, f, f);
  ExtElem<K> acc = ExtElem<K>::scalar(ring, f, Polynomial<K>::constant(ring, ring->field().one()));
  for (unsigned k = 0; k < m.size(); ++k)
    if (m[k]) acc = wedge(acc, divided_power_2form(mus[k].two_form(), m[k]));
  return acc;
}

}  // namespace pfres
