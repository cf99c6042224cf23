#pragma once

#include <compare>
#include <map>
#include <vector>

#include "pfres/laurent.hpp"
#include "pfres/polynomial.hpp"

namespace pfres {

// Exponent vector (a_1..a_g). Read as X_1^(a_1)...X_g^(a_g) in D(G*) or as
// the monomial Y_1^a_1...Y_g^a_g acting on it.
class DivMono {
 public:
  DivMono() = default;
  explicit DivMono(std::vector<unsigned> exps) : exps_(std::move(exps)) {}
  static DivMono zero(unsigned g) { return DivMono(std::vector<unsigned>(g, 0)); }
  static DivMono unit(unsigned g, unsigned k) {
    DivMono m = zero(g);
    m.exps_.at(k) = 1;
    return m;
  }

  unsigned size() const { return static_cast<unsigned>(exps_.size()); }
  unsigned degree() const {
    unsigned d = 0;
    for (unsigned e : exps_) d += e;
    return d;
  }
  unsigned operator[](unsigned k) const { return exps_[k]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  bool divides(const DivMono& o) const {
    for (unsigned k = 0; k < exps_.size(); ++k)
      if (exps_[k] > o.exps_[k]) return false;
    return true;
  }
  DivMono operator+(const DivMono& o) const {
    DivMono r(*this);
    for (unsigned k = 0; k < exps_.size(); ++k) r.exps_[k] += o.exps_[k];
    return r;
  }
  // o - *this; requires divides(o).
  DivMono cofactor_in(const DivMono& o) const {
    DivMono r(o);
    for (unsigned k = 0; k < exps_.size(); ++k) r.exps_[k] -= exps_[k];
    return r;
  }
  DivMono raised(unsigned k) const {
    DivMono r(*this);
    ++r.exps_.at(k);
    return r;
  }
  std::string to_string(char stem = 'X') const;

  friend auto operator<=>(const DivMono&, const DivMono&) = default;

 private:
  std::vector<unsigned> exps_;
};

// All degree-i monomials in g variables, lex order with Y_1 largest.
std::vector<DivMono> monomials_Y(unsigned g, unsigned i);

// Coefficient of X^(a+b) in X^(a) X^(b).
Integer divided_product_coeff(const DivMono& a, const DivMono& b);

template <Field K>
class DivElem {
 public:
  using P = Polynomial<K>;

  DivElem(RingPtr<K> ring, unsigned g, unsigned degree) : ring_(std::move(ring)), g_(g), degree_(degree) {}
  static DivElem basis(RingPtr<K> ring, const DivMono& m) {
    DivElem e(ring, m.size(), m.degree());
    e.add_term(m, P::constant(ring, ring->field().one()));
    return e;
  }

  const RingPtr<K>& ring() const { return ring_; }
  unsigned rank() const { return g_; }
  unsigned degree() const { return degree_; }
  const std::map<DivMono, P>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const DivMono& m, const P& c) {
    if (m.size() != g_ || m.degree() != degree_) throw StructuralError("divided monomial of the wrong shape");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  DivElem& operator+=(const DivElem& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  DivElem& operator-=(const DivElem& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  DivElem scaled(const P& c) const {
    DivElem r(ring_, g_, degree_);
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
  }

  // Divided-power multiplication X^(a) X^(b) = prod binom(a_k+b_k, a_k) X^(a+b).
  friend DivElem operator*(const DivElem& a, const DivElem& b) {
    DivElem r(a.ring_, a.g_, a.degree_ + b.degree_);
    const K& k = a.ring_->field();
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        auto c = k.from_integer(divided_product_coeff(ma, mb));
        r.add_term(ma + mb, (ca * cb).scaled(c));
      }
    return r;
  }

  friend bool operator==(const DivElem& a, const DivElem& b) {
    return a.g_ == b.g_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  RingPtr<K> ring_;
  unsigned g_;
  unsigned degree_;
  std::map<DivMono, P> terms_;
};

// Contraction of gamma by the Y-monomial m; each Y_k lowers the k-th exponent.
template <Field K>
DivElem<K> act_Y(const DivMono& m, const DivElem<K>& gamma) {
  if (m.size() != gamma.rank()) throw StructuralError("Y-monomial and divided element disagree on g");
  if (m.degree() > gamma.degree()) return DivElem<K>(gamma.ring(), gamma.rank(), 0);
  DivElem<K> r(gamma.ring(), gamma.rank(), gamma.degree() - m.degree());
  for (const auto& [a, c] : gamma.terms())
    if (m.divides(a)) r.add_term(m.cofactor_in(a), c);
  return r;
}

// Integration along X_k (0-based) for the decomposition G* = R X_k + (rest).
template <Field K>
DivElem<K> integrate(const DivElem<K>& gamma, unsigned distinguished) {
  if (distinguished >= gamma.rank()) throw StructuralError("distinguished index outside [1, g]");
  DivElem<K> r(gamma.ring(), gamma.rank(), gamma.degree() + 1);
  for (const auto& [a, c] : gamma.terms()) r.add_term(a.raised(distinguished), c);
  return r;
}

}  // namespace pfres
