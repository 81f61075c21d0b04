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

#include "realpoly/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace realpoly {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  mpq_init(v_);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpq_set_si(v_, num, static_cast<unsigned long>(den));
  mpq_canonicalize(v_);
}

Rational& Rational::operator=(const Rational& o) {
  if (this != &o) mpq_set(v_, o.v_);
  return *this;
}

Rational& Rational::operator=(Rational&& o) noexcept {
  if (this != &o) mpq_swap(v_, o.v_);
  return *this;
}

Rational Rational::from_string(std::string_view s) {
  // strict grammar: [+-]? digits ( '/' digits )?
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) throw std::invalid_argument("Rational: malformed literal '" + std::string(s) + "'");
  if (i < s.size()) {
    if (s[i] != '/') throw std::invalid_argument("Rational: malformed literal '" + std::string(s) + "'");
    ++i;
    std::size_t den_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      ++i;
      ++den_digits;
    }
    if (den_digits == 0 || i != s.size())
      throw std::invalid_argument("Rational: malformed literal '" + std::string(s) + "'");
  }

  Rational r;
  const std::string tmp(s[0] == '+' ? s.substr(1) : s);
  if (mpq_set_str(r.v_, tmp.c_str(), 10) != 0)
    throw std::invalid_argument("Rational: malformed literal '" + std::string(s) + "'");
  if (mpz_sgn(mpq_denref(r.v_)) == 0)
    throw std::invalid_argument("Rational: zero denominator in '" + std::string(s) + "'");
  mpq_canonicalize(r.v_);
  return r;
}

Rational Rational::from_mpz(mpz_srcptr z) {
  Rational r;
  mpq_set_z(r.v_, z);
  return r;
}

Rational Rational::from_mpq(mpq_srcptr q) {
  Rational r;
  mpq_set(r.v_, q);
  mpq_canonicalize(r.v_);
  return r;
}

Rational Rational::pow2(long e) {
  Rational r;
  if (e >= 0) {
    mpz_ui_pow_ui(mpq_numref(r.v_), 2, static_cast<unsigned long>(e));
  } else {
    mpz_ui_pow_ui(mpq_denref(r.v_), 2, static_cast<unsigned long>(-e));
  }
  return r;
}

Rational Rational::abs() const {
  Rational r;
  mpq_abs(r.v_, v_);
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::invalid_argument("Rational: reciprocal of zero");
  Rational r;
  mpq_inv(r.v_, v_);
  return r;
}

Rational Rational::floor() const {
  Rational r;
  mpz_fdiv_q(mpq_numref(r.v_), mpq_numref(v_), mpq_denref(v_));
  return r;
}

Rational Rational::ceil() const {
  Rational r;
  mpz_cdiv_q(mpq_numref(r.v_), mpq_numref(v_), mpq_denref(v_));
  return r;
}

Rational Rational::pow(unsigned long e) const {
  Rational r;
  mpz_pow_ui(mpq_numref(r.v_), mpq_numref(v_), e);
  mpz_pow_ui(mpq_denref(r.v_), mpq_denref(v_), e);
  return r;  // already canonical: powers of coprime numbers stay coprime
}

Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.v_, v_);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  mpq_div(v_, v_, o.v_);
  return *this;
}

std::string Rational::str() const {
  char* raw = mpq_get_str(nullptr, 10, v_);
  std::string out(raw);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(raw, out.size() + 1);
  return out;
}

std::string Rational::str_ratio() const {
  std::string out = str();
  if (out.find('/') == std::string::npos) out += "/1";
  return out;
}

std::string Rational::num_str() const {
  char* raw = mpz_get_str(nullptr, 10, mpq_numref(v_));
  std::string out(raw);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(raw, out.size() + 1);
  return out;
}

std::string Rational::den_str() const {
  char* raw = mpz_get_str(nullptr, 10, mpq_denref(v_));
  std::string out(raw);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(raw, out.size() + 1);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational gcd_rational(const Rational& a, const Rational& b) {
  mpq_t tmp;
  mpq_init(tmp);
  mpz_gcd(mpq_numref(tmp), a.num_raw(), b.num_raw());
  mpz_lcm(mpq_denref(tmp), a.den_raw(), b.den_raw());
  Rational r = Rational::from_mpq(tmp);
  mpq_clear(tmp);
  return r;
}

namespace {

// floor/ceil of sqrt(x) over a 2^-precision_bits grid
Rational sqrt_bound(const Rational& x, unsigned precision_bits, bool upper) {
  if (x.sign() < 0) throw std::invalid_argument("sqrt bound of negative value");
  mpz_t scaled, root;
  mpz_init(scaled);
  mpz_init(root);
  // scaled = floor(num * 2^(2k) / den); isqrt gives floor(sqrt(scaled)),
  // so root/2^k <= sqrt(x) < (root+1)/2^k.
  mpz_mul_2exp(scaled, x.num_raw(), 2 * precision_bits);
  mpz_fdiv_q(scaled, scaled, x.den_raw());
  mpz_sqrt(root, scaled);
  if (upper) mpz_add_ui(root, root, 1);
  Rational out = Rational::from_mpz(root);
  mpz_clear(scaled);
  mpz_clear(root);
  return out / Rational::pow2(static_cast<long>(precision_bits));
}

}  // namespace

Rational sqrt_lower(const Rational& x, unsigned precision_bits) {
  return sqrt_bound(x, precision_bits, false);
}

Rational sqrt_upper(const Rational& x, unsigned precision_bits) {
  return sqrt_bound(x, precision_bits, true);
}

}  // namespace realpoly
