#include <doctest.h>

#include <random>

#include "lineconf/derivations.hpp"
#include "lineconf/errors.hpp"
#include "lineconf/exactlin.hpp"
#include "lineconf/poly.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace lineconf;

namespace {

QMatrix randomMatrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int h, double density) {
  std::uniform_int_distribution<int> val(-h, h);
  std::uniform_real_distribution<double> keep(0, 1);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (keep(rng) < density) {
        m(i, j) = Rational(val(rng), 1 + (val(rng) + h) % 3);
        m(i, j).canonicalize();
      }
    }
  }
  // force some dependence
  if (r > 2) {
    for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2 - m(1, j);
  }
  return m;
}

bool isZeroVector(const std::vector<Rational>& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("monomial ordering is graded lex with x first") {
  const MonomialBasis b = monomials(2);
  REQUIRE(b.size() == 6);
  CHECK(b.exponents[0] == Exponent{2, 0, 0});
  CHECK(b.exponents[1] == Exponent{1, 1, 0});
  CHECK(b.exponents[2] == Exponent{1, 0, 1});
  CHECK(b.exponents[5] == Exponent{0, 0, 2});
  for (int t = 0; t < 8; ++t) {
    const MonomialBasis m = monomials(t);
    CHECK(m.size() == monomialCount(t));
    for (std::size_t i = 0; i < m.size(); ++i) CHECK(m.indexOf(m.exponents[i]) == i);
  }
  CHECK_THROWS_AS(monomials(-1), UsageError);
}

TEST_CASE("rref of a small matrix") {
  const QMatrix m{{2, 4, 6}, {1, 2, 4}, {3, 6, 9}};
  const RrefResult r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<std::size_t>{0, 2});
  CHECK(r.reduced == QMatrix{{1, 2, 0}, {0, 0, 1}});
  CHECK(rank(QMatrix(3, 4)) == 0);
}

TEST_CASE("rank agrees with the largest nonzero minor on small matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const QMatrix m = randomMatrix(rng, 2 + trial % 4, 2 + (trial / 4) % 4, 3, 0.6);
    CHECK(rank(m) == oracle::rankByMinors(m));
  }
}

TEST_CASE("rank agrees with ranks modulo large primes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const QMatrix m = randomMatrix(rng, 10 + trial, 25 - trial / 2, 9, 0.3);
    CHECK(rank(m) == oracle::rankModPrimes(m));
  }
}

TEST_CASE("parallel, serial and textbook elimination agree") {
  std::mt19937_64 rng(3);
  std::vector<QMatrix> cases;
  for (int trial = 0; trial < 12; ++trial) cases.push_back(randomMatrix(rng, 20 + trial, 30, 5, 0.4));
  const JacobianData j = jacobian(fixtures::arrV());
  for (int t = 3; t <= 6; ++t) {
    QMatrix s = syzygyMatrix(j, t);
    cases.push_back(s);
  }
  for (const QMatrix& m : cases) {
    const auto im = detail::clearDenominators(m);
    const RrefResult par = detail::toRref(detail::eliminateParallel(im, true));
    const RrefResult ser = detail::toRref(detail::eliminateSerial(im, true));
    const RrefResult ref = reference::rref(m);
    CHECK(par.reduced == ref.reduced);
    CHECK(ser.reduced == ref.reduced);
    CHECK(par.pivots == ref.pivots);
    CHECK(detail::eliminateParallel(im, false).pivots.size() == ref.rank);
  }
}

TEST_CASE("nullspace vectors are annihilated and the dimensions add up") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    const QMatrix m = randomMatrix(rng, 8 + trial % 5, 14, 4, 0.5);
    const Subspace ns = nullspace(m);
    CHECK(ns.dim() + rank(m) == m.cols());
    for (std::size_t i = 0; i < ns.dim(); ++i) {
      std::vector<Rational> v(ns.basis().row(i).begin(), ns.basis().row(i).end());
      CHECK(isZeroVector(m.apply(v)));
      CHECK(member(ns, v));
    }
  }
}

TEST_CASE("subspace membership and canonical bases") {
  const QMatrix g{{1, 1, 0}, {0, 1, 1}};
  const Subspace s = Subspace::span(g);
  CHECK(s.dim() == 2);
  CHECK(member(s, std::vector<Rational>{1, 2, 1}));
  CHECK_FALSE(member(s, std::vector<Rational>{1, 0, 0}));
  CHECK_THROWS_AS(member(s, std::vector<Rational>{1, 0}), UsageError);
  const Subspace s2 = Subspace::span(QMatrix{{1, 2, 1}, {2, 2, 0}, {1, 1, 0}});
  CHECK(s == s2);
}

TEST_CASE("polynomial arithmetic and derivatives") {
  const Poly x = Poly::linear(1, 0, 0), y = Poly::linear(0, 1, 0), z = Poly::linear(0, 0, 1);
  const Poly f = x * x * y + Rational(3) * (y * z * z);  // x^2y + 3yz^2
  CHECK(f.degree() == 3);
  CHECK(f.derivative(0) == Rational(2) * (x * y));
  CHECK(f.derivative(2) == Rational(6) * (y * z));
  CHECK(f.evaluate({1, 2, 3}) == 2 + 54);
  CHECK(f.toString() == "x^2y+3yz^2");
  CHECK((x - x).isZero());
}

TEST_CASE("restriction to a line") {
  // x = s, y = u, z = s + u
  const Restrictor r({1, 0, 1}, {0, 1, 1});
  const Poly f = Poly::linear(0, 0, 1) * Poly::linear(1, 0, 0);  // xz -> s^2 + su
  const BinaryForm b = r.restrict(f);
  REQUIRE(b.degree() == 2);
  CHECK(b[0] == 1);
  CHECK(b[1] == 1);
  CHECK(b[2] == 0);
  const QMatrix map = r.restrictionMap(1);
  CHECK(map == QMatrix{{1, 0}, {0, 1}, {1, 1}});
}
