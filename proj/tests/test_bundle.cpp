#include <doctest.h>

#include <algorithm>
#include <random>

#include "lineconf/bundle.hpp"
#include "lineconf/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace lineconf;
using fixtures::line;

namespace {

bool containsLine(const std::vector<Line>& v, const Line& l) { return std::find(v.begin(), v.end(), l) != v.end(); }

std::vector<Point> duals(const std::vector<Line>& ls) {
  std::vector<Point> out;
  for (const Line& l : ls) out.push_back(dualPoint(l));
  return out;
}

DualCurve publishedCubic() {
  // coefficients over monomials(3): x^3 x^2y x^2z xy^2 xyz xz^2 y^3 y^2z yz^2 z^3
  return {3, {4, -2, -4, -4, 0, -1, 2, -1, -2, 1}};
}

}  // namespace

TEST_CASE("normalised Chern classes") {
  const std::vector<std::pair<std::int64_t, std::int64_t>> expected = {{0, 0}, {-1, 1}, {0, 1}, {-1, 2}, {0, 3}};
  for (int i = 1; i <= 5; ++i) {
    const ChernData c = chern(fixtures::nested(i));
    CHECK(std::pair(c.c1n, c.c2n) == expected[i - 1]);
  }
  const ChernData t = chern(fixtures::triangle());
  CHECK(t.c1 == -2);
  CHECK(t.c2 == 1);
  CHECK(std::pair(t.c1n, t.c2n) == std::pair<std::int64_t, std::int64_t>(0, 0));
  const ChernData f = chern(fixtures::fiveThroughPoint());
  CHECK(f.c2 == 9);
  CHECK(f.k == 3);
  CHECK(normalizationTwist(8) == 3);
}

TEST_CASE("stability verdicts") {
  CHECK(stability(fixtures::arrII()).verdict == Verdict::Stable);
  CHECK(stability(fixtures::arrIV()).verdict == Verdict::Stable);
  CHECK(stability(fixtures::arrV()).verdict == Verdict::Stable);
  CHECK(stability(fixtures::arrIII()).verdict == Verdict::SemistableNotStable);
  CHECK(stability(fixtures::arrI()).semistable());
  const StabilityReport fp = stability(fixtures::fiveThroughPoint());
  CHECK(fp.verdict == Verdict::Unstable);
  CHECK(fp.witnessDegree == 2);
  CHECK_FALSE(fp.bogomolovPasses);
  CHECK(stability(fixtures::arrV()).bogomolovPasses);
  // the module and arrangement paths agree
  for (int i = 1; i <= 5; ++i) {
    const DerivationModule m(fixtures::nested(i));
    CHECK(stability(m).verdict == stability(fixtures::nested(i)).verdict);
  }
}

TEST_CASE("combinatorial stability clauses") {
  CHECK(stabilitySufficient(fixtures::arrII(), 5) == StabilityClause::Stable3);
  CHECK(stabilitySufficient(fixtures::arrIII(), 6) == StabilityClause::Semistable2);
  // triangle plus a line through a vertex: |A''| = 2
  const Arrangement a = fixtures::make({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}});
  CHECK(stabilitySufficient(a, 3) == StabilityClause::None);
  CHECK(clauseName(StabilityClause::Semistable2) == "semistable-2");
}

TEST_CASE("charts are reduced bases of the integer points") {
  for (const Line& l : {line(1, 0, 0), line(0, 1, 1), line(3, 5, 7), line(2, -4, 9), line(0, 0, 1)}) {
    const LineChart c = chartFor(l);
    const auto dotp = [&](const IntTriple& v) { return l.a() * v.a + l.b() * v.b + l.c() * v.c; };
    CHECK(dotp(c.p) == 0);
    CHECK(dotp(c.q) == 0);
    const IntTriple cr{c.p.b * c.q.c - c.p.c * c.q.b, c.p.c * c.q.a - c.p.a * c.q.c, c.p.a * c.q.b - c.p.b * c.q.a};
    CHECK(Line::make(cr.a, cr.b, cr.c) == l);
    CHECK((cr == l.coeffs() || cr == IntTriple{-l.a(), -l.b(), -l.c()}));
  }
  CHECK_THROWS_AS(chartFor(line(1, 0, 0), {0, 1, 0}, {0, 2, 0}), UsageError);
  CHECK_THROWS_AS(chartFor(line(1, 0, 0), {1, 1, 0}, {0, 1, 0}), UsageError);
}

TEST_CASE("splitting types of split bundles") {
  const DerivationModule tri(fixtures::triangle());
  for (const Line& l : {line(1, 0, 0), line(1, 1, 1), line(2, -3, 5)}) CHECK(splittingType(tri, l) == SplittingType{-1, -1});
  const DerivationModule np(fixtures::nearPencil5());
  for (const Line& l : {line(1, 0, 0), line(0, 0, 1), line(1, 2, 3)}) CHECK(splittingType(np, l) == SplittingType{-1, -3});
}

TEST_CASE("splitting on a jump line of arrangement III") {
  const DerivationModule m(fixtures::arrIII());
  CHECK(splittingType(m, line(1, 1, 0)) == SplittingType{-2, -4});
  CHECK(splittingType(m, line(1, 3, 7)) == SplittingType{-3, -3});
}

TEST_CASE("splitting does not depend on the chart") {
  const DerivationModule m(fixtures::arrV());
  const Line l = line(0, 1, 1);
  const SplittingType base = splittingType(m, l);
  CHECK(splittingType(m, chartFor(l, {1, 0, 0}, {0, 1, -1})) == base);
  CHECK(splittingType(m, chartFor(l, {1, 1, -1}, {2, -3, 3})) == base);
  CHECK(splittingType(m, chartFor(l, {3, 2, -2}, {-1, 5, -5})) == base);
  const Line g = line(2, 3, 7);
  const SplittingType gen = splittingType(m, g);
  CHECK(splittingType(m, chartFor(g, {7, 0, -2}, {0, 7, -3})) == gen);
}

TEST_CASE("splitting agrees with the restricted-kernel oracle off the singular locus") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coef(-7, 7);
  for (int i = 1; i <= 5; ++i) {
    const Arrangement a = fixtures::nested(i);
    const DerivationModule m(a);
    int tested = 0;
    while (tested < 4) {
      const int x = coef(rng), y = coef(rng), z = coef(rng);
      if (x == 0 && y == 0 && z == 0) continue;
      const Line l = line(x, y, z);
      if (oracle::meetsSingularLocus(a, l) || a.contains(l)) continue;
      const SplittingType s = splittingType(m, l);
      CHECK(s == oracle::restrictedKernelSplitting(a, l));
      CHECK(s.a1 + s.a2 == -(static_cast<int>(a.size()) - 1));
      ++tested;
    }
  }
}

TEST_CASE("jump lines of arrangement V") {
  const DerivationModule m(fixtures::arrV());
  const JumpReport yz = isJumpLine(m, line(0, 1, 1));
  CHECK(yz.isJump);
  CHECK(yz.thresholdFired);
  CHECK(yz.restrictionCount == 6);
  const JumpReport xy = isJumpLine(m, line(1, -1, 0));
  CHECK(xy.isJump);
  CHECK(xy.thresholdFired);
  CHECK_FALSE(xy.inArrangement);
  const JumpReport x = isJumpLine(m, line(1, 0, 0));
  CHECK_FALSE(x.isJump);
  CHECK_FALSE(x.thresholdFired);
  CHECK(x.splitting == SplittingType{-4, -4});
}

TEST_CASE("jump thresholds") {
  CHECK(jumpThreshold(9, true, 6));
  CHECK_FALSE(jumpThreshold(9, true, 5));
  CHECK(jumpThreshold(9, false, 4));
  CHECK_FALSE(jumpThreshold(9, false, 5));
  CHECK(jumpThreshold(8, true, 6));
  CHECK_FALSE(jumpThreshold(8, true, 5));
  CHECK(jumpThreshold(8, false, 3));
  CHECK_FALSE(jumpThreshold(8, false, 4));
}

TEST_CASE("jump scans") {
  CHECK(jumpLines(jumpScan(DerivationModule(fixtures::arrII()), 2)).empty());
  CHECK(jumpLines(jumpScan(DerivationModule(fixtures::arrIV()), 2)) == std::vector<Line>{line(0, 1, 1)});

  const auto scanIII = jumpScan(DerivationModule(fixtures::arrIII()), 2);
  const auto jIII = jumpLines(scanIII);
  std::vector<Line> inArr;
  for (const Line& l : jIII) {
    if (fixtures::arrIII().contains(l)) inArr.push_back(l);
    CHECK(l.a() - l.b() + l.c() == 0);
  }
  std::sort(inArr.begin(), inArr.end());
  CHECK(inArr == std::vector<Line>{line(0, 1, 1), line(1, 1, 0)});

  const auto scanV = jumpScan(DerivationModule(fixtures::arrV()), 2);
  const auto jV = jumpLines(scanV);
  for (const Line& l : fixtures::nineJumpLinesV()) CHECK(containsLine(jV, l));
  for (const Line& l : {line(1, 0, 0), line(0, 1, 0), line(0, 0, 1)}) CHECK_FALSE(containsLine(jV, l));

  // every jump line found lies on one cubic of the pencil through the nine
  const CurveFit all = fitDualCurve(duals(jV), 3, {});
  CHECK(all.solutionDim == 1);

  CHECK_THROWS_AS(jumpScan(DerivationModule(fixtures::fiveThroughPoint()), 1), PreconditionError);
}

TEST_CASE("jump candidates are deduplicated and sorted") {
  const auto c = jumpCandidates(fixtures::arrII(), 1);
  CHECK(std::is_sorted(c.begin(), c.end()));
  CHECK(std::adjacent_find(c.begin(), c.end()) == c.end());
  CHECK(containsLine(c, line(1, 1, 1)));
  CHECK(c.size() >= 13);
}

TEST_CASE("dual curve through the nine jump points") {
  const auto pts = duals(fixtures::nineJumpLinesV());
  const CurveFit open = fitDualCurve(pts, 3, {});
  CHECK(open.solutionDim == 2);
  CHECK(open.rank == 8);
  const std::vector<Point> coords = {Point::make(1, 0, 0), Point::make(0, 1, 0), Point::make(0, 0, 1)};
  const CurveFit fit = fitDualCurve(pts, 3, coords);
  REQUIRE(fit.curve);
  CHECK(*fit.curve == publishedCubic());
  CHECK(fit.curve->toString() == "4x^3-2x^2y-4x^2z-4xy^2-xz^2+2y^3-y^2z-2yz^2+z^3");
}

TEST_CASE("curve fitting edge cases") {
  const std::vector<Point> collinear = {Point::make(1, 1, 0), Point::make(0, 1, 1), Point::make(1, 2, 1)};
  const CurveFit l = fitDualCurve(collinear, 1, {});
  REQUIRE(l.curve);
  CHECK(l.curve->coeffs == std::vector<Integer>{1, -1, 1});
  const std::vector<Point> spread = {Point::make(1, 0, 0), Point::make(0, 1, 0), Point::make(0, 0, 1)};
  CHECK_THROWS_AS(fitDualCurve(spread, 1, {}), NoCurveError);
  CHECK_THROWS_AS(fitDualCurve(spread, 0, {}), UsageError);
}

TEST_CASE("curve membership") {
  CHECK(curveContains(publishedCubic(), line(0, 1, 1)));
  CHECK_FALSE(curveContains(publishedCubic(), line(1, 0, 0)));
  CHECK(publishedCubic().evaluate(Point::make(1, 0, 0)) == 4);
  const DualCurve l{1, {1, -1, 1}};
  CHECK(curveContains(l, line(1, 1, 0)));
  for (const Line& j : fixtures::nineJumpLinesV()) {
    CHECK(publishedCubic().evaluate(dualPoint(j)) == fixtures::publishedCubic(j.a(), j.b(), j.c()));
  }
}

TEST_CASE("jump queries need a semistable bundle") {
  const DerivationModule m(fixtures::fiveThroughPoint());
  CHECK_THROWS_AS(isJumpLine(m, line(1, 1, 1)), PreconditionError);
}
