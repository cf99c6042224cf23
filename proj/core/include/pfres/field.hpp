#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

#include "pfres/errors.hpp"

namespace pfres {

using Integer = mpz_class;

template <class K>
concept Field = requires(const K& k, const typename K::Elem& a, std::int64_t n) {
  { k.zero() } -> std::same_as<typename K::Elem>;
  { k.one() } -> std::same_as<typename K::Elem>;
  { k.from_int(n) } -> std::same_as<typename K::Elem>;
  { k.add(a, a) } -> std::same_as<typename K::Elem>;
  { k.sub(a, a) } -> std::same_as<typename K::Elem>;
  { k.mul(a, a) } -> std::same_as<typename K::Elem>;
  { k.neg(a) } -> std::same_as<typename K::Elem>;
  { k.inv(a) } -> std::same_as<typename K::Elem>;
  { k.is_zero(a) } -> std::same_as<bool>;
  { k.format(a) } -> std::same_as<std::string>;
};

// Z/p for an odd prime p < 2^31; elements are canonical residues in [0, p).
class PrimeField {
 public:
  using Elem = std::uint32_t;
  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t characteristic() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem from_integer(const Integer& n) const {
    Integer r = n % p_;
    if (r < 0) r += p_;
    return static_cast<Elem>(r.get_ui());
  }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  bool is_zero(Elem a) const { return a == 0; }
  // Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Elem a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }
  std::string format(Elem a) const { return std::to_string(to_signed(a)); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

// Q with GMP rationals, always canonicalized.
class RationalField {
 public:
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(std::int64_t n) const { return Elem(static_cast<long>(n)); }
  Elem from_integer(const Integer& n) const { return Elem(n); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw DivisibilityError("inverse of zero");
    return 1 / a;
  }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  std::string format(const Elem& a) const { return a.get_str(); }
  // Bits in numerator plus denominator; the Groebner guard watches this.
  static std::size_t bit_size(const Elem& a) {
    return mpz_sizeinbase(a.get_num_mpz_t(), 2) + mpz_sizeinbase(a.get_den_mpz_t(), 2);
  }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

bool is_prime(std::uint64_t n);

}  // namespace pfres
