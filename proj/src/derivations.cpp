#include "lineconf/derivations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

#include "lineconf/errors.hpp"

namespace lineconf {
namespace {

std::int64_t choose2(std::int64_t n) { return n >= 2 ? n * (n - 1) / 2 : 0; }

std::string listToString(std::span<const int> v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

// Coordinates of v*theta in (R_{t+1})^3 for theta given by coordinates in (R_t)^3.
std::vector<Rational> multiplyByVariable(std::span<const Rational> theta, int t, int var) {
  const std::size_t nIn = monomialCount(t);
  const std::size_t nOut = monomialCount(t + 1);
  const MonomialBasis basis = monomials(t);
  std::vector<Rational> out(3 * nOut);
  for (int c = 0; c < 3; ++c) {
    for (std::size_t i = 0; i < nIn; ++i) {
      const Rational& x = theta[c * nIn + i];
      if (x == 0) continue;
      Exponent e = basis.exponents[i];
      ++e[var];
      out[c * nOut + monomialIndex(e)] = x;
    }
  }
  return out;
}

// Coordinates of an element of `space` with respect to its RREF basis: the
// entries at the pivot columns.
std::vector<Rational> basisCoordinates(const Subspace& space, std::span<const Rational> v) {
  std::vector<Rational> out;
  out.reserve(space.dim());
  for (std::size_t pc : space.pivots()) out.push_back(v[pc]);
  return out;
}

}  // namespace

PolyVec PolyVec::euler() {
  return {1, {Poly::linear(1, 0, 0), Poly::linear(0, 1, 0), Poly::linear(0, 0, 1)}};
}

PolyVec PolyVec::fromCoordinates(int degree, std::span<const Rational> v) {
  const std::size_t n = monomialCount(degree);
  if (v.size() != 3 * n) throw UsageError("PolyVec: coordinate vector has the wrong length");
  PolyVec p;
  p.degree = degree;
  for (int c = 0; c < 3; ++c) {
    p.comps[c] = Poly(degree, std::vector<Rational>(v.begin() + c * n, v.begin() + (c + 1) * n));
  }
  return p;
}

std::vector<Rational> PolyVec::coordinates() const {
  std::vector<Rational> out;
  for (const Poly& p : comps) out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
  return out;
}

Poly PolyVec::apply(const Poly& f) const {
  return pair({f.derivative(0), f.derivative(1), f.derivative(2)});
}

Poly PolyVec::pair(const std::array<Poly, 3>& g) const {
  return comps[0] * g[0] + comps[1] * g[1] + comps[2] * g[2];
}

PolyVec PolyVec::operator*(const Poly& f) const {
  return {degree + f.degree(), {comps[0] * f, comps[1] * f, comps[2] * f}};
}

PolyVec PolyVec::operator-(const PolyVec& o) const {
  if (o.degree != degree) throw UsageError("PolyVec: subtracting different degrees");
  return {degree, {comps[0] - o.comps[0], comps[1] - o.comps[1], comps[2] - o.comps[2]}};
}

JacobianData jacobian(const Arrangement& a) {
  const std::size_t d = a.size();
  std::vector<Poly> forms;
  for (const Line& l : a.lines()) forms.push_back(l.form());

  // prefix[i] = l_0 ... l_{i-1}, suffix[i] = l_i ... l_{d-1}
  std::vector<Poly> prefix(d + 1), suffix(d + 1);
  prefix[0] = Poly(0, {Rational(1)});
  suffix[d] = Poly(0, {Rational(1)});
  for (std::size_t i = 0; i < d; ++i) prefix[i + 1] = prefix[i] * forms[i];
  for (std::size_t i = d; i-- > 0;) suffix[i] = forms[i] * suffix[i + 1];

  JacobianData j;
  j.q = prefix[d];
  for (int v = 0; v < 3; ++v) j.partials[v] = Poly(static_cast<int>(d) - 1);
  for (std::size_t i = 0; i < d; ++i) {
    const Poly others = prefix[i] * suffix[i + 1];
    const std::int64_t coeff[3] = {a[i].a(), a[i].b(), a[i].c()};
    for (int v = 0; v < 3; ++v) {
      if (coeff[v] != 0) j.partials[v] += others * Rational(static_cast<long>(coeff[v]));
    }
  }

  const Poly euler = PolyVec::euler().pair(j.partials);
  if (euler != j.q * Rational(static_cast<long>(d))) {
    throw InvariantViolation("Euler relation fails for the Jacobian");
  }
  return j;
}

QMatrix syzygyMatrix(const JacobianData& j, int t) {
  const int e = j.partials[0].degree();
  const std::size_t nIn = monomialCount(t);
  const MonomialBasis in = monomials(t);
  const MonomialBasis part = monomials(e);
  QMatrix m(monomialCount(t + e), 3 * nIn);
  for (int c = 0; c < 3; ++c) {
    const auto coeffs = j.partials[c].coeffs();
    for (std::size_t i = 0; i < nIn; ++i) {
      const Exponent& x = in.exponents[i];
      for (std::size_t k = 0; k < part.size(); ++k) {
        if (coeffs[k] == 0) continue;
        const Exponent& y = part.exponents[k];
        m(monomialIndex({x[0] + y[0], x[1] + y[1], x[2] + y[2]}), c * nIn + i) = coeffs[k];
      }
    }
  }
  return m;
}

PolyVec GradedPiece::element(std::size_t i) const {
  return PolyVec::fromCoordinates(degree, space.basis().row(i));
}

GradedPiece gradedPiece(const JacobianData& j, int t) {
  if (t < 0) throw UsageError("gradedPiece: negative degree");
  return {t, nullspace(syzygyMatrix(j, t))};
}

GradedPiece gradedPiece(const Arrangement& a, int t) { return gradedPiece(jacobian(a), t); }

std::size_t pieceDimension(const JacobianData& j, int t) {
  if (t < 0) return 0;
  const QMatrix m = syzygyMatrix(j, t);
  return m.cols() - rank(m);
}

std::vector<std::size_t> hilbertTable(const Arrangement& a, int maxDegree) {
  if (maxDegree < 0) throw UsageError("hilbertTable: negative degree");
  const JacobianData j = jacobian(a);
  std::vector<std::size_t> out(static_cast<std::size_t>(maxDegree) + 1);
#pragma omp parallel for schedule(dynamic, 1)
  for (int t = 0; t <= maxDegree; ++t) out[static_cast<std::size_t>(t)] = pieceDimension(j, t);
  return out;
}

std::vector<int> relationDegrees(std::span<const int> alphas, std::span<const std::size_t> hilbert) {
  const std::size_t n = hilbert.size();
  // P = H(t) (1-t)^3 mod t^n
  static constexpr std::int64_t kCube[4] = {1, -3, 3, -1};
  std::vector<std::int64_t> rhs(n, 0);
  for (int a : alphas) {
    if (a < 0 || static_cast<std::size_t>(a) >= n) {
      throw UsageError("relationDegrees: generator degree outside the tabulated range");
    }
    ++rhs[static_cast<std::size_t>(a)];
  }
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t k = 0; k < 4 && k <= t; ++k) {
      rhs[t] -= kCube[k] * static_cast<std::int64_t>(hilbert[t - k]);
    }
  }
  std::vector<int> betas;
  for (std::size_t t = 0; t < n; ++t) {
    if (rhs[t] < 0) {
      throw InvariantViolation("relationDegrees: Hilbert data inconsistent with generators " +
                               listToString(alphas) + " in degree " + std::to_string(t));
    }
    betas.insert(betas.end(), static_cast<std::size_t>(rhs[t]), static_cast<int>(t));
  }
  return betas;
}

int resolutionRegularity(std::span<const int> alphas, std::span<const int> betas) {
  int r = alphas.empty() ? 0 : *std::max_element(alphas.begin(), alphas.end());
  if (!betas.empty()) r = std::max(r, *std::max_element(betas.begin(), betas.end()) - 1);
  return r;
}

std::int64_t predictedDimension(std::span<const int> alphas, std::span<const int> betas, int t) {
  // dim R(-a)_t = C(t-a+2, 2)
  std::int64_t s = 0;
  for (int a : alphas) s += choose2(t - a + 2);
  for (int b : betas) s -= choose2(t - b + 2);
  return s;
}

DerivationModule::DerivationModule(Arrangement a) : arr_(std::move(a)) {
  if (arr_.size() < 2) throw PreconditionError("derivation module needs at least two lines");
  const int d = lineCount();
  jac_ = jacobian(arr_);
  const auto points = singularPoints(arr_);
  degJ_ = lineconf::jacobianDegree(points);
  for (const SingularPoint& p : points) maxMu_ = std::max(maxMu_, p.mu());

  pieces_.resize(static_cast<std::size_t>(d) + 1);
#pragma omp parallel for schedule(dynamic, 1)
  for (int t = 0; t <= d; ++t) pieces_[static_cast<std::size_t>(t)] = gradedPiece(jac_, t);

  for (const GradedPiece& p : pieces_) res_.hilbert.push_back(p.dim());
  res_.alphas = generatorDegrees(*this);
  res_.betas = relationDegrees(res_.alphas, res_.hilbert);
  res_.regularity = resolutionRegularity(res_.alphas, res_.betas);
}

const GradedPiece& DerivationModule::piece(int t) const {
  if (t < 0 || t > lineCount()) throw UsageError("piece: degree outside 0..d");
  return pieces_[static_cast<std::size_t>(t)];
}

std::size_t DerivationModule::dim(int t) const {
  if (t < 0) return 0;
  if (t <= lineCount()) return pieces_[static_cast<std::size_t>(t)].dim();
  return static_cast<std::size_t>(predictedDimension(res_.alphas, res_.betas, t));
}

std::vector<int> generatorDegrees(const DerivationModule& m) {
  std::vector<int> alphas;
  for (int t = 0; t <= m.lineCount(); ++t) {
    const GradedPiece& cur = m.piece(t);
    if (cur.dim() == 0) continue;
    std::size_t fromBelow = 0;
    if (t > 0 && m.piece(t - 1).dim() > 0) {
      const GradedPiece& prev = m.piece(t - 1);
      QMatrix products(0, cur.dim());
      for (std::size_t i = 0; i < prev.dim(); ++i) {
        for (int v = 0; v < 3; ++v) {
          products.appendRow(
              basisCoordinates(cur.space, multiplyByVariable(prev.space.basis().row(i), t - 1, v)));
        }
      }
      fromBelow = rank(products);
    }
    alphas.insert(alphas.end(), cur.dim() - fromBelow, t);
  }
  return alphas;
}

Resolution resolve(const Arrangement& a) {
  if (!a.isEssential()) throw PreconditionError("resolve requires an essential arrangement");
  return DerivationModule(a).resolution();
}

void validateResolution(const Resolution& r, int d, std::int64_t degJ, int maxMuValue) {
  auto fail = [&](const std::string& what) {
    throw InvariantViolation("resolution alphas=" + listToString(r.alphas) +
                             " betas=" + listToString(r.betas) + ": " + what);
  };
  const auto na = static_cast<int>(r.alphas.size());
  const auto nb = static_cast<int>(r.betas.size());
  if (na - nb != 2) fail("rank is not 2");
  if (na > d - 1) fail("more than d-1 generators");
  const int sa = std::accumulate(r.alphas.begin(), r.alphas.end(), 0);
  const int sb = std::accumulate(r.betas.begin(), r.betas.end(), 0);
  if (sa - sb != d - 1) fail("sum alpha - sum beta != d-1");
  for (int a : r.alphas) {
    if (a < 1 || a > d - 2) fail("generator degree outside [1, d-2]");
  }
  for (int b : r.betas) {
    if (b < 3 || b > d - 1) fail("relation degree outside [3, d-1]");
  }
  const bool hasLinear = std::find(r.alphas.begin(), r.alphas.end(), 1) != r.alphas.end();
  if (hasLinear != (maxMuValue == d - 2)) fail("linear generator without a near pencil, or vice versa");
  if (r.regularity != resolutionRegularity(r.alphas, r.betas)) fail("regularity mismatch");
  if (r.regularity > d - 2) fail("regularity exceeds d-2");
  if (*std::max_element(r.alphas.begin(), r.alphas.end()) < maxMuValue) fail("no generator of degree >= max mu");
  if (nb > 0 && r.betas.front() < r.alphas[1] + 1) fail("beta_1 < alpha_2 + 1");

  // prod(1 - alpha t) == prod(1 - beta t)(1 + c1 t + c2 t^2) mod t^3
  auto truncatedProduct = [](std::span<const int> roots) {
    std::array<std::int64_t, 3> p{1, 0, 0};
    for (int x : roots) {
      p[2] -= x * p[1];
      p[1] -= x * p[0];
    }
    return p;
  };
  const auto lhs = truncatedProduct(r.alphas);
  const auto pb = truncatedProduct(r.betas);
  const std::int64_t c1 = -(d - 1);
  const std::int64_t c2 = static_cast<std::int64_t>(d - 1) * (d - 1) - degJ;
  const std::array<std::int64_t, 3> rhs{pb[0], pb[1] + pb[0] * c1, pb[2] + pb[1] * c1 + pb[0] * c2};
  if (lhs != rhs) fail("Chern polynomial mismatch");

  for (int t = std::max(0, d - 2); t <= d && t < static_cast<int>(r.hilbert.size()); ++t) {
    if (predictedDimension(r.alphas, r.betas, t) != static_cast<std::int64_t>(r.hilbert[t])) {
      fail("Hilbert function disagrees with resolution in degree " + std::to_string(t));
    }
  }
}

FreenessReport freeness(const DerivationModule& m) {
  const Resolution& r = m.resolution();
  FreenessReport f;
  f.isFree = r.isFree();
  if (f.isFree) {
    if (r.alphas.size() != 2) throw InvariantViolation("free module of rank other than 2");
    f.exponents = std::pair<int, int>(r.alphas[0], r.alphas[1]);
    const PoincareData pi = poincare(m.arrangement());
    f.teraoFactorCheck = pi.b1 == r.alphas[0] + r.alphas[1] &&
                         pi.b2 == static_cast<std::int64_t>(r.alphas[0]) * r.alphas[1];
    if (!f.teraoFactorCheck) throw InvariantViolation("free arrangement whose Poincare polynomial does not factor");
  }
  return f;
}

FreenessReport freeness(const Arrangement& a) {
  if (!a.isEssential()) throw PreconditionError("freeness requires an essential arrangement");
  return freeness(DerivationModule(a));
}

int regularity(const Arrangement& a) { return resolve(a).regularity; }

PolyVec embedDeletion(const Arrangement& a, std::size_t pivot, const PolyVec& thetaPrime) {
  if (pivot >= a.size()) throw UsageError("embedDeletion: line index out of range");
  const Arrangement deleted = a.without(pivot);
  if (!thetaPrime.pair(jacobian(deleted).partials).isZero()) {
    throw PreconditionError("embedDeletion: derivation does not annihilate the deleted Jacobian");
  }
  const Poly l = a[pivot].form();
  const Poly thetaOfL = thetaPrime.apply(l);
  const Rational d(static_cast<long>(a.size()));
  return thetaPrime * l - PolyVec::euler() * (thetaOfL * (1 / d));
}

DeletionReport deletionCheck(const DerivationModule& m, std::size_t pivot) {
  const Arrangement& a = m.arrangement();
  const int d = m.lineCount();
  if (d < 4) throw PreconditionError("deletionCheck requires at least four lines");
  const TripleData t = triple(a, pivot);
  const auto n = static_cast<std::int64_t>(t.restrictionCount);

  DeletionReport rep;
  rep.restrictionCount = t.restrictionCount;
  rep.degJ = m.jacobianDegree();
  rep.degJDeleted = jacobianDegree(t.deleted);
  rep.jacobianIdentity = rep.degJ - rep.degJDeleted == 2 * d - 2 - n;

  const JacobianData jd = jacobian(t.deleted);
  rep.hilbertIdentity = true;
  for (int deg = d - 2; deg <= d; ++deg) {
    DeletionReport::Row row{deg, m.dim(deg), pieceDimension(jd, deg - 1), deg + 2 - n};
    if (static_cast<std::int64_t>(row.dim) - static_cast<std::int64_t>(row.dimDeleted) != row.expected) {
      rep.hilbertIdentity = false;
    }
    rep.rows.push_back(row);
  }
  if (!rep.jacobianIdentity) {
    throw InvariantViolation("deletion: degJ difference " + std::to_string(rep.degJ - rep.degJDeleted) +
                             " != 2d-2-|A''| = " + std::to_string(2 * d - 2 - n));
  }
  if (!rep.hilbertIdentity) throw InvariantViolation("deletion: high-degree Hilbert identity fails");
  return rep;
}

DeletionReport deletionCheck(const Arrangement& a, std::size_t pivot) {
  return deletionCheck(DerivationModule(a), pivot);
}

}  // namespace lineconf
