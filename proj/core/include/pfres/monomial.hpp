#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pfres/errors.hpp"

namespace pfres {

inline constexpr std::size_t kMaxVars = 16;

// Exponent vector over at most kMaxVars variables; exponents fit in a byte.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVars) throw ResourceError("more than 16 ring variables");
  }
  static Monomial from_exponents(std::span<const unsigned> exps) {
    Monomial m(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
    return m;
  }
  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1) {
    Monomial m(nvars);
    m.set(index, power);
    return m;
  }

  std::size_t size() const { return nvars_; }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exp_[i]; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, unsigned e) {
    if (i >= nvars_) throw StructuralError("monomial index out of range");
    if (e > 255) throw ResourceError("monomial exponent above 255");
    degree_ = static_cast<std::uint16_t>(degree_ - exp_[i] + e);
    exp_[i] = static_cast<std::uint8_t>(e);
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < nvars_; ++i) {
      unsigned e = exp_[i] + o.exp_[i];
      if (e > 255) throw ResourceError("monomial exponent above 255");
      r.exp_[i] = static_cast<std::uint8_t>(e);
    }
    r.degree_ = static_cast<std::uint16_t>(degree_ + o.degree_);
    return r;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exp_[i] > o.exp_[i]) return false;
    return true;
  }
  // o / *this; requires divides(o).
  Monomial cofactor_in(const Monomial& o) const {
    Monomial r(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) r.exp_[i] = static_cast<std::uint8_t>(o.exp_[i] - exp_[i]);
    r.degree_ = static_cast<std::uint16_t>(o.degree_ - degree_);
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r(nvars_);
    unsigned d = 0;
    for (std::size_t i = 0; i < nvars_; ++i) {
      r.exp_[i] = std::max(exp_[i], o.exp_[i]);
      d += r.exp_[i];
    }
    r.degree_ = static_cast<std::uint16_t>(d);
    return r;
  }
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exp_[i] && o.exp_[i]) return false;
    return true;
  }
  std::vector<unsigned> exponents() const { return {exp_.begin(), exp_.begin() + nvars_}; }
  std::size_t hash() const {
    std::size_t h = nvars_;
    for (std::size_t i = 0; i < nvars_; ++i) h = h * 131 + exp_[i];
    return h;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exp_ == b.exp_;
  }

 private:
  std::array<std::uint8_t, kMaxVars> exp_{};
  std::uint8_t nvars_ = 0;
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { DegRevLex, Elimination };

// Degrevlex with x_0 > x_1 > ...; Elimination compares the first `block`
// variables by degrevlex and breaks ties by degrevlex on the rest.
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  std::size_t block = 0;

  // Positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    if (kind == OrderKind::Elimination) {
      int c = grevlex(a, b, 0, block);
      return c != 0 ? c : grevlex(a, b, block, a.size());
    }
    return grevlex(a, b, 0, a.size());
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  static int grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    unsigned da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
};

}  // namespace pfres
