#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "pfres/polynomial.hpp"

namespace pfres {

// Index sets i_1 < ... < i_k inside {1..f} are bitmasks with bit i-1 for e_i.
using ExtMask = std::uint32_t;

inline unsigned popcount(ExtMask s) { return static_cast<unsigned>(std::popcount(s)); }

// Elements of s strictly below position `bit` (0-based).
inline unsigned count_below(ExtMask s, unsigned bit) {
  return popcount(s & ((ExtMask{1} << bit) - 1));
}

// Sign of e_S ^ e_T relative to e_{S u T}; zero when S and T meet.
inline int wedge_sign(ExtMask s, ExtMask t) {
  if (s & t) return 0;
  unsigned inversions = 0;
  for (ExtMask rest = t; rest; rest &= rest - 1) {
    unsigned b = static_cast<unsigned>(std::countr_zero(rest));
    inversions += popcount(s >> (b + 1));
  }
  return inversions % 2 ? -1 : 1;
}

std::vector<ExtMask> subsets_of_size(unsigned f, unsigned k);  // lex order on tuples
std::vector<unsigned> mask_to_tuple(ExtMask s);                 // 1-based indices
ExtMask tuple_to_mask(std::span<const unsigned> tuple, unsigned f);

template <Field K>
class ExtElem {
 public:
  using P = Polynomial<K>;

  ExtElem(RingPtr<K> ring, unsigned rank, unsigned degree) : ring_(std::move(ring)), rank_(rank), degree_(degree) {
    if (rank > 31) throw ResourceError("exterior algebra rank above 31");
    if (degree > rank) throw StructuralError("exterior degree exceeds the rank of F");
  }
  static ExtElem scalar(RingPtr<K> ring, unsigned rank, const P& c) {
    ExtElem e(std::move(ring), rank, 0);
    e.add_term(0, c);
    return e;
  }
  static ExtElem basis(RingPtr<K> ring, unsigned rank, ExtMask s) {
    check_mask(s, rank);
    ExtElem e(ring, rank, popcount(s));
    e.add_term(s, P::constant(ring, ring->field().one()));
    return e;
  }
  static ExtElem basis(RingPtr<K> ring, unsigned rank, std::span<const unsigned> tuple) {
    return basis(ring, rank, tuple_to_mask(tuple, rank));
  }

  const RingPtr<K>& ring() const { return ring_; }
  unsigned rank() const { return rank_; }
  unsigned degree() const { return degree_; }
  const std::map<ExtMask, P>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  P coefficient(ExtMask s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? P(ring_) : it->second;
  }

  void add_term(ExtMask s, const P& c) {
    check_mask(s, rank_);
    if (popcount(s) != degree_) throw StructuralError("term degree differs from element degree");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  ExtElem& operator+=(const ExtElem& o) {
    check_compatible(o);
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
  }
  ExtElem& operator-=(const ExtElem& o) {
    check_compatible(o);
    for (const auto& [s, c] : o.terms_) add_term(s, -c);
    return *this;
  }
  friend ExtElem operator+(ExtElem a, const ExtElem& b) { return a += b; }
  friend ExtElem operator-(ExtElem a, const ExtElem& b) { return a -= b; }
  ExtElem scaled(const P& c) const {
    ExtElem r(ring_, rank_, degree_);
    for (const auto& [s, v] : terms_) r.add_term(s, v * c);
    return r;
  }

  friend ExtElem wedge(const ExtElem& a, const ExtElem& b) {
    if (a.rank_ != b.rank_) throw StructuralError("wedge of elements over different F");
    if (a.degree_ + b.degree_ > a.rank_) return ExtElem(a.ring_, a.rank_, a.rank_);
    ExtElem r(a.ring_, a.rank_, a.degree_ + b.degree_);
    for (const auto& [s, c] : a.terms_)
      for (const auto& [t, d] : b.terms_) {
        int sign = wedge_sign(s, t);
        if (sign == 0) continue;
        P prod = c * d;
        r.add_term(s | t, sign > 0 ? prod : -prod);
      }
    return r;
  }

  friend bool operator==(const ExtElem& a, const ExtElem& b) {
    return a.rank_ == b.rank_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  static void check_mask(ExtMask s, unsigned rank) {
    if (rank < 32 && (s >> rank) != 0) throw StructuralError("exterior index outside [1, f]");
  }
  void check_compatible(const ExtElem& o) const {
    if (rank_ != o.rank_ || degree_ != o.degree_) throw StructuralError("adding exterior elements of different shape");
  }

  RingPtr<K> ring_;
  unsigned rank_;
  unsigned degree_;
  std::map<ExtMask, P> terms_;
};

// tau acting as an odd derivation with tau(e_i) = tau_images[i-1].
template <Field K>
ExtElem<K> contract(std::span<const Polynomial<K>> tau_images, const ExtElem<K>& a) {
  if (a.degree() == 0) throw StructuralError("contraction of a degree-0 element");
  if (tau_images.size() != a.rank()) throw StructuralError("need one tau image per basis vector");
  ExtElem<K> r(a.ring(), a.rank(), a.degree() - 1);
  for (const auto& [s, c] : a.terms()) {
    for (ExtMask rest = s; rest; rest &= rest - 1) {
      unsigned b = static_cast<unsigned>(std::countr_zero(rest));
      Polynomial<K> v = c * tau_images[b];
      r.add_term(s & ~(ExtMask{1} << b), count_below(s, b) % 2 ? -v : v);
    }
  }
  return r;
}

}  // namespace pfres
