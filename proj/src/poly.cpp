#include "lineconf/poly.hpp"

#include <sstream>

#include "lineconf/errors.hpp"

namespace lineconf {

Poly::Poly(int degree) : degree_(degree), coeffs_(monomialCount(degree)) {
  if (degree < 0) throw UsageError("Poly: negative degree");
}

Poly::Poly(int degree, std::vector<Rational> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0 || coeffs_.size() != monomialCount(degree)) {
    throw UsageError("Poly: coefficient vector does not match degree");
  }
}

Poly Poly::linear(const Rational& a, const Rational& b, const Rational& c) {
  return Poly(1, {a, b, c});
}

Poly Poly::monomial(const Exponent& e, const Rational& coeff) {
  Poly p(e[0] + e[1] + e[2]);
  p.coeff(e) = coeff;
  return p;
}

bool Poly::isZero() const {
  for (const Rational& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

Poly Poly::derivative(int var) const {
  if (degree_ == 0) return Poly(0);
  Poly out(degree_ - 1);
  const MonomialBasis basis = monomials(degree_);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Rational& c = coeffs_[i];
    Exponent e = basis.exponents[i];
    if (c == 0 || e[var] == 0) continue;
    const int k = e[var];
    --e[var];
    out.coeff(e) += c * k;
  }
  return out;
}

Rational Poly::evaluate(const std::array<Rational, 3>& p) const {
  const MonomialBasis basis = monomials(degree_);
  Rational acc = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Rational term = coeffs_[i];
    for (int v = 0; v < 3; ++v) {
      for (int k = 0; k < basis.exponents[i][v]; ++k) term *= p[v];
    }
    acc += term;
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.degree_ != degree_) {
    if (o.isZero()) return *this;
    if (isZero()) return *this = o;
    throw UsageError("Poly: adding forms of different degree");
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.degree_ != degree_) {
    if (o.isZero()) return *this;
    if (isZero()) {
      *this = o;
      return *this *= -1;
    }
    throw UsageError("Poly: subtracting forms of different degree");
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  for (Rational& c : coeffs_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(a.degree_ + b.degree_);
  const MonomialBasis ba = monomials(a.degree_);
  const MonomialBasis bb = monomials(b.degree_);
  for (std::size_t i = 0; i < ba.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < bb.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      const Exponent& x = ba.exponents[i];
      const Exponent& y = bb.exponents[j];
      out.coeff({x[0] + y[0], x[1] + y[1], x[2] + y[2]}) += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

std::string Poly::toString() const {
  static constexpr const char* kVars[3] = {"x", "y", "z"};
  const MonomialBasis basis = monomials(degree_);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const Exponent& e = basis.exponents[i];
    const bool constant = degree_ == 0;
    Rational mag = abs(c);
    if (!first || c < 0) os << (c < 0 ? "-" : "+");
    if (mag != 1 || constant) os << mag.get_str();
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      os << kVars[v];
      if (e[v] > 1) os << '^' << e[v];
    }
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

BinaryForm::BinaryForm(int degree) : degree_(degree), coeffs_(static_cast<std::size_t>(degree) + 1) {
  if (degree < 0) throw UsageError("BinaryForm: negative degree");
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm out(a.degree_ + b.degree_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] != 0) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
  if (o.degree_ != degree_) throw UsageError("BinaryForm: adding forms of different degree");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

BinaryForm& BinaryForm::operator*=(const Rational& s) {
  for (Rational& c : coeffs_) c *= s;
  return *this;
}

Restrictor::Restrictor(const std::array<Integer, 3>& sCoeff, const std::array<Integer, 3>& uCoeff) {
  for (int v = 0; v < 3; ++v) {
    BinaryForm f(1);
    f[0] = Rational(sCoeff[v]);
    f[1] = Rational(uCoeff[v]);
    vars_[v] = f;
  }
}

QMatrix Restrictor::restrictionMap(int t) const {
  // powers[v][e] = (image of variable v)^e
  std::array<std::vector<BinaryForm>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    BinaryForm one(0);
    one[0] = 1;
    powers[v].push_back(one);
    for (int e = 1; e <= t; ++e) powers[v].push_back(powers[v].back() * vars_[v]);
  }
  const MonomialBasis basis = monomials(t);
  QMatrix out(basis.size(), static_cast<std::size_t>(t) + 1);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Exponent& e = basis.exponents[i];
    const BinaryForm img = powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]];
    for (std::size_t j = 0; j <= static_cast<std::size_t>(t); ++j) out(i, j) = img[j];
  }
  return out;
}

BinaryForm Restrictor::restrict(const Poly& f) const {
  const QMatrix map = restrictionMap(f.degree());
  BinaryForm out(f.degree());
  const auto c = f.coeffs();
  for (std::size_t i = 0; i < map.rows(); ++i) {
    if (c[i] == 0) continue;
    for (std::size_t j = 0; j < map.cols(); ++j) out[j] += c[i] * map(i, j);
  }
  return out;
}

}  // namespace lineconf
