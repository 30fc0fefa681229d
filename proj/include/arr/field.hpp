#pragma once

#include <cstdint>
#include <concepts>

#include "arr/errors.hpp"
#include "arr/numbers.hpp"

namespace arr {

template <typename F>
concept Field = requires(const F f, const typename F::Elem a, const typename F::Elem b) {
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.one() } -> std::convertible_to<typename F::Elem>;
  { f.add(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.sub(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.mul(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.neg(a) } -> std::convertible_to<typename F::Elem>;
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.from_rational(Rational()) } -> std::convertible_to<typename F::Elem>;
  { f.characteristic() } -> std::convertible_to<std::int64_t>;
};

struct QField {
  using Elem = Rational;
  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw DomainError("division by zero in Q");
    return Rational(1) / a;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem from_rational(const Rational& q) const { return q; }
  Elem from_int(long v) const { return Rational(v); }
  std::int64_t characteristic() const { return 0; }
};

// F_p for an odd-size word-sized prime p; elements normalized to [0, p).
class PrimeField {
 public:
  using Elem = std::int64_t;

  explicit PrimeField(std::int64_t p) : p_(p) {
    if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p))
      throw DomainError("prime-field modulus must be a prime < 2^31");
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
  Elem sub(Elem a, Elem b) const { Elem s = a - b; return s < 0 ? s + p_ : s; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const;
  bool is_zero(Elem a) const { return a == 0; }
  Elem from_int(long v) const {
    Elem r = static_cast<Elem>(v % p_);
    return r < 0 ? r + p_ : r;
  }
  Elem from_integer(const Integer& v) const {
    Integer r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }
  Elem from_rational(const Rational& q) const {
    Elem d = from_integer(den(q));
    if (d == 0) throw DomainError("rational with denominator divisible by p");
    return mul(from_integer(num(q)), inv(d));
  }
  std::int64_t characteristic() const { return p_; }
  std::int64_t modulus() const { return p_; }

 private:
  std::int64_t p_;
};

static_assert(Field<QField>);
static_assert(Field<PrimeField>);

}  // namespace arr
