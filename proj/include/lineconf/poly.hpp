#pragma once

// Homogeneous polynomials over Q, stored densely over a fixed graded basis.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "lineconf/exactlin.hpp"

namespace lineconf {

/// Homogeneous form of a given degree in k[x,y,z]; coefficient i belongs to
/// monomials(degree).exponents[i].
class Poly {
 public:
  Poly() = default;
  explicit Poly(int degree);
  Poly(int degree, std::vector<Rational> coeffs);

  static Poly linear(const Rational& a, const Rational& b, const Rational& c);
  static Poly monomial(const Exponent& e, const Rational& coeff = 1);

  int degree() const { return degree_; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  const Rational& coeff(const Exponent& e) const { return coeffs_[monomialIndex(e)]; }
  Rational& coeff(const Exponent& e) { return coeffs_[monomialIndex(e)]; }
  bool isZero() const;

  /// Partial derivative with respect to variable 0, 1 or 2.
  Poly derivative(int var) const;
  Rational evaluate(const std::array<Rational, 3>& p) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);

  bool operator==(const Poly& o) const = default;

  std::string toString() const;

 private:
  int degree_ = 0;
  std::vector<Rational> coeffs_{Rational(0)};
};

/// Binary form in the coordinates (s, u) of a line; coefficient j belongs to
/// s^{degree-j} u^j.
class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(int degree);

  int degree() const { return degree_; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  Rational& operator[](std::size_t j) { return coeffs_[j]; }
  const Rational& operator[](std::size_t j) const { return coeffs_[j]; }

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  BinaryForm& operator+=(const BinaryForm& o);
  BinaryForm& operator*=(const Rational& s);

 private:
  int degree_ = 0;
  std::vector<Rational> coeffs_{Rational(0)};
};

/// Restriction of ternary forms to a line parametrised by
/// (x, y, z) = (px.s + qx.u, py.s + qy.u, pz.s + qz.u).
class Restrictor {
 public:
  Restrictor(const std::array<Integer, 3>& sCoeff, const std::array<Integer, 3>& uCoeff);

  BinaryForm restrict(const Poly& f) const;

  /// Matrix of restriction on degree-t forms: row i holds the binary form
  /// obtained from monomials(t).exponents[i].
  QMatrix restrictionMap(int t) const;

 private:
  std::array<BinaryForm, 3> vars_;
};

}  // namespace lineconf
