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

#ifndef REALPOLY_POLYNOMIAL_HPP
#define REALPOLY_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "realpoly/rational.hpp"

namespace realpoly {

/// Dense univariate polynomial over Rational, coefficients in ascending
/// powers (coeffs()[k] multiplies x^k). The trailing entry is nonzero;
/// the zero polynomial has an empty coefficient vector and degree -1.
/// All operations are exact and pure.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending_coeffs);
  Polynomial(std::initializer_list<Rational> ascending_coeffs);

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(Rational c);
  /// coeff * x^k
  static Polynomial monomial(Rational coeff, unsigned k);
  /// x - r
  static Polynomial linear_root(const Rational& r);

  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  /// Coefficient of x^k; zero beyond the degree.
  const Rational& coeff(std::size_t k) const;
  /// Leading coefficient; throws std::invalid_argument on the zero polynomial.
  const Rational& leading() const;
  bool is_monic() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend Polynomial operator*(const Polynomial& p, const Rational& s) { return s * p; }
  /// Divides every coefficient; throws on zero scalar.
  friend Polynomial operator/(const Polynomial& p, const Rational& s);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial pow(unsigned e) const;
  Polynomial derivative() const;
  Rational eval(const Rational& x) const;

  /// Positive rational c such that (*this)/c has coprime integer
  /// coefficients; 0 for the zero polynomial.
  Rational content() const;
  /// *this / content(): integer coefficients with gcd 1, sign preserved.
  Polynomial primitive() const;
  Polynomial monic() const;  // throws std::invalid_argument on zero

  /// Renders like "x^3 - 3*x + 1" (non-integer coefficients parenthesized,
  /// e.g. "(10/3)*x^3"). Parseable by the CLI expression grammar.
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division: a = quotient*b + remainder with
/// deg(remainder) < deg(b). Throws std::invalid_argument when b is zero.
DivisionResult euclid_div(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor via the Euclidean remainder sequence
/// (primitive-part normalization between steps keeps coefficients small).
/// gcd(p, 0) = monic p. Throws std::invalid_argument when both are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'): same distinct roots, all simple.
Polynomial squarefree_part(const Polynomial& p);

}  // namespace realpoly

#endif  // REALPOLY_POLYNOMIAL_HPP
