/*
   Copyright 2026 the realpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef REALPOLY_RATIONAL_HPP
#define REALPOLY_RATIONAL_HPP

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace realpoly {

/// Arbitrary-precision rational scalar, always kept canonical:
/// gcd(|num|, den) = 1, den > 0, zero is 0/1. Value semantics; every
/// operation is exact. Immutable values are safe to share across threads.
class Rational {
 public:
  Rational() { mpq_init(v_); }
  Rational(long n) { mpq_init(v_); mpq_set_si(v_, n, 1); }  // NOLINT(runtime/explicit)
  Rational(long num, long den);

  Rational(const Rational& o) { mpq_init(v_); mpq_set(v_, o.v_); }
  Rational(Rational&& o) noexcept { mpq_init(v_); mpq_swap(v_, o.v_); }
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&& o) noexcept;
  ~Rational() { mpq_clear(v_); }

  /// Parses "num" or "num/den" (base 10, optional leading sign).
  /// Throws std::invalid_argument on malformed input or zero denominator.
  static Rational from_string(std::string_view s);

  /// Exact conversions from GMP integers/rationals (canonicalized).
  static Rational from_mpz(mpz_srcptr z);
  static Rational from_mpq(mpq_srcptr q);

  /// 2^e for any integer e (negative exponents allowed).
  static Rational pow2(long e);

  int sign() const noexcept { return mpq_sgn(v_); }
  bool is_zero() const noexcept { return mpq_sgn(v_) == 0; }
  bool is_integer() const noexcept { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

  Rational abs() const;
  Rational reciprocal() const;  // throws std::invalid_argument on zero
  Rational floor() const;       // greatest integer <= *this
  Rational ceil() const;        // least integer >= *this
  Rational pow(unsigned long e) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { mpq_add(v_, v_, o.v_); return *this; }
  Rational& operator-=(const Rational& o) { mpq_sub(v_, v_, o.v_); return *this; }
  Rational& operator*=(const Rational& o) { mpq_mul(v_, v_, o.v_); return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_, b.v_) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.v_, b.v_);
    return c <=> 0;
  }

  /// "num" when the value is an integer, "num/den" otherwise.
  std::string str() const;
  /// Always "num/den", even for integers ("81/1"). Exact-serialization form.
  std::string str_ratio() const;
  /// Nearest double, for human-readable "approximately" output only.
  double approx() const noexcept { return mpq_get_d(v_); }

  std::string num_str() const;
  std::string den_str() const;

  /// Raw GMP handles, for exact integer bookkeeping inside the library.
  mpq_srcptr raw() const noexcept { return v_; }
  mpz_srcptr num_raw() const noexcept { return mpq_numref(v_); }
  mpz_srcptr den_raw() const noexcept { return mpq_denref(v_); }

 private:
  mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// gcd(|a.num|,|b.num|) / lcm(a.den,b.den); the natural "rational content"
/// combiner. gcd_rational(x, 0) = |x|.
Rational gcd_rational(const Rational& a, const Rational& b);

/// Largest integer s >= 0 with s*s <= x (x >= 0), as a rational helper for
/// certified square-root bounds: sqrt_lower(x)^2 <= x <= sqrt_upper(x)^2.
Rational sqrt_lower(const Rational& x, unsigned precision_bits = 64);
Rational sqrt_upper(const Rational& x, unsigned precision_bits = 64);

}  // namespace realpoly

#endif  // REALPOLY_RATIONAL_HPP
