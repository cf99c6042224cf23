#pragma once

#include <algorithm>
#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfres/field.hpp"
#include "pfres/monomial.hpp"

namespace pfres {

// Bidegree weight of a variable: (T-degree, x-degree).
using Bidegree = std::array<int, 2>;

template <Field K>
class PolyRing {
 public:
  PolyRing(K field, std::vector<std::string> names, MonomialOrder order = {},
           std::vector<Bidegree> weights = {})
      : field_(std::move(field)), names_(std::move(names)), order_(order), weights_(std::move(weights)) {
    if (names_.size() > kMaxVars) throw ResourceError("more than 16 ring variables");
    if (weights_.empty()) weights_.assign(names_.size(), Bidegree{1, 0});
    if (weights_.size() != names_.size()) throw StructuralError("one weight per variable required");
  }

  const K& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Bidegree>& weights() const { return weights_; }

  int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b); }
  Bidegree bidegree(const Monomial& m) const {
    Bidegree d{0, 0};
    for (std::size_t i = 0; i < names_.size(); ++i) {
      d[0] += weights_[i][0] * static_cast<int>(m[i]);
      d[1] += weights_[i][1] * static_cast<int>(m[i]);
    }
    return d;
  }
  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.names_ == b.names_ && a.order_ == b.order_ && a.weights_ == b.weights_;
  }

 private:
  K field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::vector<Bidegree> weights_;
};

template <Field K>
using RingPtr = std::shared_ptr<const PolyRing<K>>;

template <Field K>
RingPtr<K> make_ring(K field, std::vector<std::string> names, MonomialOrder order = {},
                     std::vector<Bidegree> weights = {}) {
  return std::make_shared<const PolyRing<K>>(std::move(field), std::move(names), order, std::move(weights));
}

// Names "T1".."Tn".
std::vector<std::string> indexed_names(std::string_view stem, std::size_t count, std::size_t first = 1);

template <Field K>
typename K::Elem field_pow(const K& k, typename K::Elem a, unsigned e) {
  typename K::Elem r = k.one();
  while (e) {
    if (e & 1) r = k.mul(r, a);
    a = k.mul(a, a);
    e >>= 1;
  }
  return r;
}

template <Field K>
class Polynomial {
 public:
  using Elem = typename K::Elem;
  struct Term {
    Monomial mono;
    Elem coeff;
  };

  explicit Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<K> ring, Elem c) {
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({Monomial(p.ring_->nvars()), std::move(c)});
    return p;
  }
  static Polynomial constant(RingPtr<K> ring, std::int64_t c) {
    Elem e = ring->field().from_int(c);
    return constant(std::move(ring), std::move(e));
  }
  static Polynomial variable(RingPtr<K> ring, std::size_t index) {
    if (index >= ring->nvars()) throw StructuralError("variable index out of range");
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(ring->nvars(), index), ring->field().one()});
    return p;
  }
  static Polynomial term(RingPtr<K> ring, Monomial m, Elem c) {
    if (m.size() != ring->nvars()) throw StructuralError("monomial length differs from ring");
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({m, std::move(c)});
    return p;
  }
  // Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr<K> ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    for (const auto& t : terms)
      if (t.mono.size() != p.ring_->nvars()) throw StructuralError("monomial length differs from ring");
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const RingPtr<K>& ring() const { return ring_; }
  const K& field() const { return ring_->field(); }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Elem& leading_coeff() const { return terms_.front().coeff; }
  Elem constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return field().zero();
  }
  Elem coeff(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return field().zero();
  }
  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  // Common total degree of all terms, if any.
  std::optional<unsigned> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    unsigned d = terms_.front().mono.degree();
    for (const auto& t : terms_)
      if (t.mono.degree() != d) return std::nullopt;
    return d;
  }
  // Common weighted bidegree of all terms, if any.
  std::optional<Bidegree> bidegree() const {
    if (terms_.empty()) return std::nullopt;
    Bidegree d = ring_->bidegree(terms_.front().mono);
    for (const auto& t : terms_)
      if (ring_->bidegree(t.mono) != d) return std::nullopt;
    return d;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = combine(*this, o, false); }
  Polynomial& operator-=(const Polynomial& o) { return *this = combine(*this, o, true); }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    const K& k = a.field();
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, k.mul(s.coeff, t.coeff)});
    Polynomial r(a.ring_);
    r.terms_ = std::move(prod);
    r.normalize();
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Elem& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, c);
    return r;
  }
  Polynomial mul_term(const Monomial& m, const Elem& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field().mul(t.coeff, c)});
    return r;
  }
  // this - c*m*q, by a single merge.
  void sub_mul_term(const Polynomial& q, const Monomial& m, const Elem& c) {
    const K& k = field();
    if (k.is_zero(c) || q.is_zero()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < q.terms_.size()) {
      if (j == q.terms_.size()) {
        out.push_back(std::move(terms_[i++]));
        continue;
      }
      Monomial qm = q.terms_[j].mono * m;
      int cmp = i == terms_.size() ? -1 : ring_->compare(terms_[i].mono, qm);
      if (cmp > 0) {
        out.push_back(std::move(terms_[i++]));
      } else if (cmp < 0) {
        out.push_back({qm, k.neg(k.mul(c, q.terms_[j].coeff))});
        ++j;
      } else {
        Elem v = k.sub(terms_[i].coeff, k.mul(c, q.terms_[j].coeff));
        if (!k.is_zero(v)) out.push_back({qm, std::move(v)});
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
  }
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(field().inv(leading_coeff()));
  }

  Elem evaluate(std::span<const Elem> point) const {
    if (point.size() != ring_->nvars()) throw StructuralError("evaluation point has wrong length");
    const K& k = field();
    Elem sum = k.zero();
    for (const auto& t : terms_) {
      Elem v = t.coeff;
      for (std::size_t i = 0; i < point.size(); ++i)
        if (t.mono[i]) v = k.mul(v, field_pow(k, point[i], t.mono[i]));
      sum = k.add(sum, v);
    }
    return sum;
  }

  // Image under variables -> images[i] (polynomials in the target ring).
  Polynomial<K> substitute(const RingPtr<K>& target, std::span<const Polynomial> images) const {
    if (images.size() != ring_->nvars()) throw StructuralError("substitution needs one image per variable");
    Polynomial r(target);
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (const auto& t : terms_) {
      Polynomial v = Polynomial::constant(target, t.coeff);
      for (std::size_t i = 0; i < images.size(); ++i) {
        unsigned e = t.mono[i];
        if (!e) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(Polynomial::constant(target, field().one()));
        while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
        v *= pw[e];
      }
      r += v;
    }
    return r;
  }

  // Reinterprets in a ring whose variable var_map[i] plays the role of variable i.
  Polynomial in_ring(const RingPtr<K>& target, std::span<const std::size_t> var_map) const {
    if (var_map.size() != ring_->nvars()) throw StructuralError("variable map has wrong length");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target->nvars());
      for (std::size_t i = 0; i < var_map.size(); ++i)
        if (t.mono[i]) m.set(var_map[i], m[var_map[i]] + t.mono[i]);
      out.push_back({m, t.coeff});
    }
    return from_terms(target, std::move(out));
  }

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    return true;
  }

 private:
  static void check_same(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_))
      throw StructuralError("polynomials live in different rings");
  }
  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_same(a, b);
    const K& k = a.field();
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int cmp = i == a.terms_.size()   ? -1
                : j == b.terms_.size() ? 1
                                       : a.ring_->compare(a.terms_[i].mono, b.terms_[j].mono);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? k.neg(t.coeff) : t.coeff});
      } else {
        Elem v = subtract ? k.sub(a.terms_[i].coeff, b.terms_[j].coeff) : k.add(a.terms_[i].coeff, b.terms_[j].coeff);
        if (!k.is_zero(v)) r.terms_.push_back({a.terms_[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }
  void normalize() {
    const auto& ring = *ring_;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& x, const Term& y) { return ring.compare(x.mono, y.mono) > 0; });
    const K& k = ring.field();
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().mono == t.mono)
        merged.back().coeff = k.add(merged.back().coeff, t.coeff);
      else
        merged.push_back(std::move(t));
    }
    std::erase_if(merged, [&](const Term& t) { return k.is_zero(t.coeff); });
    terms_ = std::move(merged);
  }

  RingPtr<K> ring_;
  std::vector<Term> terms_;
};

template <Field K>
std::string Polynomial<K>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const auto& names = ring_->names();
  for (const auto& t : terms_) {
    std::string c = field().format(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!t.mono[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += names[i];
      if (t.mono[i] > 1) mono += '^' + std::to_string(t.mono[i]);
    }
    if (mono.empty())
      out += c;
    else if (c == "1")
      out += mono;
    else
      out += c + '*' + mono;
  }
  return out;
}

// Reads sums of products of integers, fractions, variables and powers, with parentheses.
template <Field K>
Polynomial<K> parse_polynomial(const RingPtr<K>& ring, std::string_view text);

using Poly = Polynomial<PrimeField>;
using QPoly = Polynomial<RationalField>;
using PolyRingPtr = RingPtr<PrimeField>;

}  // namespace pfres

#include "pfres/detail/parse_polynomial.hpp"
