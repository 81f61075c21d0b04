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

#include "realpoly/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace realpoly {

namespace {
const Rational kZero{};
}  // namespace

Polynomial::Polynomial(std::vector<Rational> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> ascending_coeffs) : c_(ascending_coeffs) {
  trim();
}

Polynomial Polynomial::constant(Rational c) {
  Polynomial p;
  if (!c.is_zero()) p.c_.push_back(std::move(c));
  return p;
}

Polynomial Polynomial::monomial(Rational coeff, unsigned k) {
  Polynomial p;
  if (!coeff.is_zero()) {
    p.c_.assign(k + 1, Rational());
    p.c_.back() = std::move(coeff);
  }
  return p;
}

Polynomial Polynomial::linear_root(const Rational& r) { return Polynomial({-r, Rational(1)}); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Polynomial::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : kZero;
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw std::invalid_argument("Polynomial: leading coefficient of zero polynomial");
  return c_.back();
}

bool Polynomial::is_monic() const { return !c_.empty() && c_.back() == Rational(1); }

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  Polynomial r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  if (s.is_zero()) return Polynomial();
  Polynomial r(p);
  for (auto& c : r.c_) c *= s;
  return r;
}

Polynomial operator/(const Polynomial& p, const Rational& s) {
  if (s.is_zero()) throw std::invalid_argument("Polynomial: division by zero scalar");
  return s.reciprocal() * p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = Polynomial::constant(Rational(1));
  Polynomial base(*this);
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e != 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  Polynomial r;
  r.c_.reserve(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) r.c_.push_back(Rational(static_cast<long>(k)) * c_[k]);
  r.trim();
  return r;
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= x;
    acc += c_[i];
  }
  return acc;
}

Rational Polynomial::content() const {
  Rational g;
  for (const auto& c : c_) g = gcd_rational(g, c);
  return g;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  return *this / content();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw std::invalid_argument("Polynomial: monic of zero polynomial");
  return *this / leading();
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit = (mag == Rational(1));
    if (i == 0) {
      out << mag.str();
    } else {
      if (!unit) {
        if (mag.is_integer())
          out << mag.str() << "*";
        else
          out << "(" << mag.str() << ")*";
      }
      out << "x";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

DivisionResult euclid_div(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("euclid_div: division by zero polynomial");
  Polynomial remainder = a;
  Polynomial quotient;
  const int db = b.degree();
  const Rational& lead = b.leading();
  while (!remainder.is_zero() && remainder.degree() >= db) {
    const int k = remainder.degree() - db;
    Rational factor = remainder.leading() / lead;
    Polynomial term = Polynomial::monomial(factor, static_cast<unsigned>(k));
    quotient += term;
    remainder -= term * b;
  }
  return {std::move(quotient), std::move(remainder)};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd: both polynomials are zero");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  Polynomial u = a.primitive();
  Polynomial v = b.primitive();
  while (!v.is_zero()) {
    Polynomial r = euclid_div(u, v).remainder;
    u = std::move(v);
    v = r.is_zero() ? Polynomial() : r.primitive();
  }
  return u.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
  if (p.degree() == 0) return Polynomial::constant(Rational(1));
  Polynomial g = gcd(p, p.derivative());
  return euclid_div(p, g).quotient.monic();
}

}  // namespace realpoly
