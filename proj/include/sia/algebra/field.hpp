#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace sia::algebra {

/// Exact rational number. Thin value wrapper over GMP so that every
/// coefficient type exposes the same small interface used by Poly<K>.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rational(long num, long den) : v_(num, den) { v_.canonicalize(); }

  /// Parses "3", "-7/2" or a decimal such as "0.25" exactly.
  static Rational parse(const std::string& text);

  const mpq_class& value() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  Rational zero_like() const { return Rational(); }
  Rational one_like() const { return Rational(1); }
  Rational inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return Rational(mpq_class(1) / v_);
  }
  Rational mul_int(std::int64_t k) const { return Rational(v_ * mpq_class(static_cast<long>(k))); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }

  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

/// Element of GF(p) for a word-sized prime p < 2^31. The modulus travels
/// with the value so fields with different primes can coexist.
class Zp {
 public:
  Zp() = default;
  Zp(std::uint64_t v, std::uint32_t p) : v_(static_cast<std::uint32_t>(v % p)), p_(p) {}
  static Zp from_int(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return Zp(static_cast<std::uint64_t>(r), p);
  }
  /// Reduces a rational; throws std::domain_error if p divides the denominator.
  static Zp from_rational(const Rational& q, std::uint32_t p);

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  Zp zero_like() const { return Zp(0, p_); }
  Zp one_like() const { return Zp(1, p_); }
  Zp inv() const;
  Zp pow(std::uint64_t e) const;
  Zp mul_int(std::int64_t k) const { return *this * from_int(k, p_); }

  Zp operator-() const { return Zp(v_ == 0 ? 0 : p_ - v_, p_); }
  Zp operator+(Zp o) const {
    std::uint32_t s = v_ + o.v_;
    if (s >= p_) s -= p_;
    return raw(s, p_);
  }
  Zp operator-(Zp o) const { return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_); }
  Zp operator*(Zp o) const {
    return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_), p_);
  }
  Zp operator/(Zp o) const { return *this * o.inv(); }
  Zp& operator+=(Zp o) { return *this = *this + o; }
  Zp& operator-=(Zp o) { return *this = *this - o; }
  Zp& operator*=(Zp o) { return *this = *this * o; }

  bool operator==(Zp o) const { return v_ == o.v_; }
  bool operator!=(Zp o) const { return v_ != o.v_; }
  bool operator<(Zp o) const { return v_ < o.v_; }

  std::string str() const { return std::to_string(v_); }

 private:
  static Zp raw(std::uint32_t v, std::uint32_t p) {
    Zp z;
    z.v_ = v;
    z.p_ = p;
    return z;
  }
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 2;
};

/// Fixed primes used for modular computations, all in [2^30, 2^31).
inline constexpr std::uint32_t kPrimes[] = {2147483629u, 2147483587u, 2147483579u, 2147483563u,
                                            2147483549u, 2147483543u, 2147483497u, 2147483489u};

/// Picks one of kPrimes from a random engine.
inline std::uint32_t pick_prime(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> d(0, std::size(kPrimes) - 1);
  return kPrimes[d(rng)];
}

}  // namespace sia::algebra
