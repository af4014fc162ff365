#ifndef GORLAB_SCALAR_HPP
#define GORLAB_SCALAR_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "gorlab/errors.hpp"

namespace gorlab {

// Exact rational, GMP-backed. Always canonical: reduced fraction with
// positive denominator (mpq maintains this once canonicalize() has run).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw InputError("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  static Rational from_decimal_string(const std::string& digits) {
    return Rational(mpq_class(mpz_class(digits, 10)));
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  Rational zero_like() const { return Rational(); }
  Rational one_like() const { return Rational(1); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw InputError("division by zero scalar");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }

  Rational inv() const {
    if (is_zero()) throw InputError("inverse of zero scalar");
    return Rational(mpq_class(1 / v_));
  }

  bool is_integral() const { return v_.get_den() == 1; }

  // "num" or "num/den"; negative sign on the numerator.
  std::string str() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

 private:
  mpq_class v_;
};

// Prime-field residue carrying its modulus (p < 2^31, machine arithmetic).
class GFp {
 public:
  GFp() : v_(0), p_(0) {}
  GFp(std::int64_t v, std::uint32_t p) : p_(p) {
    if (p < 2) throw InputError("prime field modulus must be >= 2");
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint64_t>(r);
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  GFp zero_like() const { return GFp(0, p_); }
  GFp one_like() const { return GFp(1, p_); }

  GFp operator-() const { return GFp(v_ == 0 ? 0 : static_cast<std::int64_t>(p_ - v_), p_); }
  GFp operator+(const GFp& o) const {
    check(o);
    std::uint64_t s = v_ + o.v_;
    if (s >= p_) s -= p_;
    return make(s);
  }
  GFp operator-(const GFp& o) const {
    check(o);
    std::uint64_t s = v_ + p_ - o.v_;
    if (s >= p_) s -= p_;
    return make(s);
  }
  GFp operator*(const GFp& o) const {
    check(o);
    return make((v_ * o.v_) % p_);
  }
  GFp operator/(const GFp& o) const { return *this * o.inv(); }
  GFp& operator+=(const GFp& o) { return *this = *this + o; }
  GFp& operator-=(const GFp& o) { return *this = *this - o; }
  GFp& operator*=(const GFp& o) { return *this = *this * o; }

  bool operator==(const GFp& o) const { return v_ == o.v_ && p_ == o.p_; }
  bool operator!=(const GFp& o) const { return !(*this == o); }

  GFp inv() const {
    if (v_ == 0) throw InputError("inverse of zero scalar");
    // Fermat: v^(p-2) mod p.
    std::uint64_t base = v_, e = p_ - 2, acc = 1;
    while (e) {
      if (e & 1) acc = (acc * base) % p_;
      base = (base * base) % p_;
      e >>= 1;
    }
    return make(acc);
  }

  std::string str() const { return std::to_string(v_); }
  std::uint64_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

 private:
  GFp make(std::uint64_t v) const {
    GFp r;
    r.v_ = v;
    r.p_ = p_;
    return r;
  }
  void check(const GFp& o) const {
    if (p_ != o.p_) throw InputError("mixed prime-field moduli");
  }

  std::uint64_t v_;
  std::uint32_t p_;
};

}  // namespace gorlab

#endif
