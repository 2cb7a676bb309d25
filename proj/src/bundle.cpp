#include "lineconf/bundle.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <set>

#include "lineconf/errors.hpp"

namespace lineconf {
namespace {

IntTriple crossProduct(const IntTriple& u, const IntTriple& v) {
  return {u.b * v.c - u.c * v.b, u.c * v.a - u.a * v.c, u.a * v.b - u.b * v.a};
}

std::int64_t dot(const IntTriple& u, const IntTriple& v) { return u.a * v.a + u.b * v.b + u.c * v.c; }

IntTriple signNormalised(IntTriple v) {
  const std::int64_t lead = v.a != 0 ? v.a : v.b != 0 ? v.b : v.c;
  if (lead < 0) v = {-v.a, -v.b, -v.c};
  return v;
}

// Extended Euclid: returns g = gcd(a, b) >= 0 with x a + y b = g.
std::int64_t extendedGcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t oldR = a, r = b, oldS = 1, s = 0, oldT = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = oldR / r;
    std::tie(oldR, r) = std::make_pair(r, oldR - q * r);
    std::tie(oldS, s) = std::make_pair(s, oldS - q * s);
    std::tie(oldT, t) = std::make_pair(t, oldT - q * t);
  }
  if (oldR < 0) {
    oldR = -oldR;
    oldS = -oldS;
    oldT = -oldT;
  }
  x = oldS;
  y = oldT;
  return oldR;
}

StabilityReport stabilityFromDims(int d, std::int64_t degJ, const std::function<std::size_t(int)>& dimAt) {
  const int k = normalizationTwist(d);
  StabilityReport r;
  r.bogomolovPasses = 4 * degJ < 3 * static_cast<std::int64_t>(d - 1) * (d - 1);
  if (dimAt(k) == 0) {
    r.verdict = Verdict::Stable;
  } else if (d % 2 == 1 && dimAt(k - 1) == 0) {
    r.verdict = Verdict::SemistableNotStable;
  } else {
    r.verdict = Verdict::Unstable;
    for (int t = 0; t <= k; ++t) {
      if (dimAt(t) != 0) {
        r.witnessDegree = t;
        break;
      }
    }
  }
  if (r.verdict == Verdict::Stable && !r.bogomolovPasses) {
    throw InvariantViolation("stable bundle violating the Bogomolov inequality");
  }
  return r;
}

// Coefficient position of s^{t-j} u^j, component c, inside (S_t)^3.
std::size_t binaryIndex(int t, int c, int j) {
  return static_cast<std::size_t>(c) * static_cast<std::size_t>(t + 1) + static_cast<std::size_t>(j);
}

// Image of (D0)_t in (S_t)^3 under restriction to the chart's line.
Subspace restrictPiece(const GradedPiece& piece, const Restrictor& res) {
  const int t = piece.degree;
  const QMatrix map = res.restrictionMap(t);
  const std::size_t n = monomialCount(t);
  QMatrix rows(0, 3 * static_cast<std::size_t>(t + 1));
  std::vector<Rational> img(3 * static_cast<std::size_t>(t + 1));
  for (std::size_t e = 0; e < piece.dim(); ++e) {
    const auto theta = piece.space.basis().row(e);
    std::fill(img.begin(), img.end(), Rational(0));
    for (int c = 0; c < 3; ++c) {
      for (std::size_t i = 0; i < n; ++i) {
        const Rational& x = theta[c * n + i];
        if (x == 0) continue;
        for (int j = 0; j <= t; ++j) {
          const Rational& y = map(i, static_cast<std::size_t>(j));
          if (y != 0) img[binaryIndex(t, c, j)] += x * y;
        }
      }
    }
    rows.appendRow(img);
  }
  return Subspace::span(rows);
}

// {w in (S_{t-1})^3 : s w in N_t and u w in N_t}.
Subspace saturateDown(const Subspace& nt, int t) {
  const Subspace ann = nullspace(nt.basis().rows() == 0 ? QMatrix(0, nt.ambientDim()) : nt.basis());
  const std::size_t cols = 3 * static_cast<std::size_t>(t);
  QMatrix constraints(0, cols);
  std::vector<Rational> row(cols);
  for (std::size_t r = 0; r < ann.dim(); ++r) {
    const auto y = ann.basis().row(r);
    for (int shift = 0; shift <= 1; ++shift) {  // 0: times s, 1: times u
      for (int c = 0; c < 3; ++c) {
        for (int j = 0; j < t; ++j) row[binaryIndex(t - 1, c, j)] = y[binaryIndex(t, c, j + shift)];
      }
      constraints.appendRow(row);
    }
  }
  if (constraints.rows() == 0) {
    QMatrix all = QMatrix::identity(cols);
    return Subspace::span(all);
  }
  return nullspace(constraints);
}

}  // namespace

int normalizationTwist(int d) { return d % 2 == 1 ? (d - 1) / 2 : (d - 2) / 2; }

ChernData chern(int d, std::int64_t degJ) {
  ChernData c;
  c.c1 = -(d - 1);
  c.c2 = static_cast<std::int64_t>(d - 1) * (d - 1) - degJ;
  c.k = normalizationTwist(d);
  c.c1n = c.c1 + 2 * c.k;
  c.c2n = c.c2 + c.k * c.c1 + static_cast<std::int64_t>(c.k) * c.k;
  return c;
}

ChernData chern(const Arrangement& a) {
  if (!a.isEssential()) throw PreconditionError("chern requires an essential arrangement");
  return chern(static_cast<int>(a.size()), jacobianDegree(a));
}

std::string verdictName(Verdict v) {
  switch (v) {
    case Verdict::Stable:
      return "stable";
    case Verdict::SemistableNotStable:
      return "semistable-not-stable";
    case Verdict::Unstable:
      return "unstable";
  }
  return "?";
}

std::string clauseName(StabilityClause c) {
  switch (c) {
    case StabilityClause::Stable1:
      return "stable-1";
    case StabilityClause::Semistable2:
      return "semistable-2";
    case StabilityClause::Stable3:
      return "stable-3";
    case StabilityClause::None:
      return "none";
  }
  return "?";
}

StabilityReport stability(const DerivationModule& m) {
  if (!m.arrangement().isEssential()) throw PreconditionError("stability requires an essential arrangement");
  return stabilityFromDims(m.lineCount(), m.jacobianDegree(), [&](int t) { return m.dim(t); });
}

StabilityReport stability(const Arrangement& a) {
  if (!a.isEssential()) throw PreconditionError("stability requires an essential arrangement");
  const JacobianData j = jacobian(a);
  return stabilityFromDims(static_cast<int>(a.size()), jacobianDegree(a),
                           [&](int t) { return pieceDimension(j, t); });
}

StabilityClause stabilitySufficient(const Arrangement& a, std::size_t pivot) {
  if (pivot >= a.size()) throw UsageError("stabilitySufficient: line index out of range");
  const Arrangement deleted = a.without(pivot);
  if (deleted.size() < 3 || !deleted.isEssential()) return StabilityClause::None;
  const int d = static_cast<int>(a.size());
  const auto n = static_cast<int>(restrictionCount(a, a[pivot]));
  const StabilityReport prev = stability(deleted);
  if (d % 2 == 1) {
    if (prev.verdict == Verdict::Stable && 2 * n > d + 1) return StabilityClause::Stable1;
    if (prev.semistable() && 2 * n > d - 1) return StabilityClause::Semistable2;
  } else if (prev.semistable() && 2 * n > d) {
    return StabilityClause::Stable3;
  }
  return StabilityClause::None;
}

LineChart chartFor(const Line& l) {
  const IntTriple& v = l.coeffs();
  IntTriple p, q;
  std::int64_t x = 0, y = 0;
  const std::int64_t g = extendedGcd(v.a, v.b, x, y);
  if (g == 0) {
    p = {1, 0, 0};
    q = {0, 1, 0};
  } else {
    // p spans the points with z = 0; x a + y b = g gives a second point with
    // p x q = -l, so {p, q} is a basis of the integer points on l.
    p = {v.b / g, -v.a / g, 0};
    q = {-v.c * x, -v.c * y, g};
  }
  // Lagrange reduction.
  for (;;) {
    if (dot(p, p) > dot(q, q)) std::swap(p, q);
    const std::int64_t pp = dot(p, p);
    const std::int64_t pq = dot(p, q);
    // nearest integer to pq / pp, ties toward zero
    std::int64_t m = (2 * pq + (pq >= 0 ? pp - 1 : -(pp - 1))) / (2 * pp);
    if (m == 0) break;
    q = {q.a - m * p.a, q.b - m * p.b, q.c - m * p.c};
  }
  p = signNormalised(p);
  q = signNormalised(q);
  if (q < p) std::swap(p, q);
  return {l, p, q};
}

LineChart chartFor(const Line& l, const IntTriple& p, const IntTriple& q) {
  if (dot(l.coeffs(), p) != 0 || dot(l.coeffs(), q) != 0) {
    throw UsageError("chartFor: points do not lie on " + l.toString());
  }
  if (crossProduct(p, q) == IntTriple{0, 0, 0}) throw UsageError("chartFor: dependent points");
  return {l, p, q};
}

SplittingType splittingType(const DerivationModule& m, const Line& l) {
  return splittingType(m, chartFor(l));
}

SplittingType splittingType(const DerivationModule& m, const LineChart& chart) {
  const int d = m.lineCount();
  const Resolution& res = m.resolution();
  if (res.isFree()) {
    // D splits as O(-alpha_1) + O(-alpha_2), and so does every restriction.
    return {-res.alphas.front(), -res.alphas.back()};
  }

  const int t0 = d;
  const auto h = [&](int t) { return static_cast<std::int64_t>(m.dim(t)); };
  const std::int64_t growth = (h(t0) - h(t0 - 1)) - (h(t0 - 1) - h(t0 - 2));
  const std::int64_t growthAbove = (h(t0 + 1) - h(t0)) - (h(t0) - h(t0 - 1));
  if (growth != 2 || growthAbove != 2) {
    throw InvariantViolation("splittingType: restricted module does not grow linearly at degree " +
                             std::to_string(t0));
  }

  const Restrictor res2({chart.p.a, chart.p.b, chart.p.c}, {chart.q.a, chart.q.b, chart.q.c});
  Subspace n = restrictPiece(m.piece(t0), res2);
  if (static_cast<std::int64_t>(n.dim()) != h(t0) - h(t0 - 1) || static_cast<int>(n.dim()) != d + 3) {
    throw InvariantViolation("splittingType: restriction of (D0)_d has dimension " + std::to_string(n.dim()) +
                             ", expected " + std::to_string(d + 3));
  }
  int t = t0;
  while (t > 0) {
    Subspace below = saturateDown(n, t);
    if (below.dim() == 0) break;
    n = std::move(below);
    --t;
  }
  const int a1 = -t;
  return {a1, -(d - 1) - a1};
}

bool jumpThreshold(int d, bool inArrangement, std::size_t restrictionCount) {
  const auto n = static_cast<int>(restrictionCount);
  if (inArrangement) return d % 2 == 1 ? 2 * n >= d + 3 : 2 * n >= d + 4;
  return d % 2 == 1 ? d - 1 >= 2 * n : d - 2 >= 2 * n;
}

JumpReport isJumpLine(const DerivationModule& m, const Line& l) {
  if (!stability(m).semistable()) {
    throw PreconditionError("jump lines are defined for semistable bundles only");
  }
  const int d = m.lineCount();
  const int k = normalizationTwist(d);
  JumpReport r;
  r.line = l;
  r.inArrangement = m.arrangement().contains(l);
  r.restrictionCount = restrictionCount(m.arrangement(), l);
  r.splitting = splittingType(m, l);
  r.isJump = r.splitting.a1 >= 1 - k;
  r.thresholdFired = jumpThreshold(d, r.inArrangement, r.restrictionCount);
  if (r.thresholdFired && !r.isJump) {
    throw InvariantViolation("jump threshold fired on " + l.toString() + " but splitting is (" +
                             std::to_string(r.splitting.a1) + "," + std::to_string(r.splitting.a2) + ")");
  }
  return r;
}

std::vector<Line> jumpCandidates(const Arrangement& a, int height) {
  if (height < 0) throw UsageError("jumpCandidates: negative height");
  std::set<Line> cand(a.lines().begin(), a.lines().end());
  const auto pts = singularPoints(a);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) cand.insert(lineThrough(pts[i].point, pts[j].point));
  }
  for (int x = -height; x <= height; ++x) {
    for (int y = -height; y <= height; ++y) {
      for (int z = -height; z <= height; ++z) {
        if (x != 0 || y != 0 || z != 0) cand.insert(Line::make(x, y, z));
      }
    }
  }
  return {cand.begin(), cand.end()};
}

std::vector<JumpReport> jumpScan(const DerivationModule& m, int height) {
  if (!stability(m).semistable()) {
    throw PreconditionError("jump lines are defined for semistable bundles only");
  }
  const std::vector<Line> cand = jumpCandidates(m.arrangement(), height);
  std::vector<JumpReport> out(cand.size());
  std::exception_ptr error;
  const auto count = static_cast<long>(cand.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = isJumpLine(m, cand[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(lineconf_jump_scan_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<Line> jumpLines(std::span<const JumpReport> scan) {
  std::vector<Line> out;
  for (const JumpReport& r : scan) {
    if (r.isJump) out.push_back(r.line);
  }
  return out;
}

Integer DualCurve::evaluate(const Point& p) const {
  const MonomialBasis basis = monomials(degree);
  Integer acc = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Integer term = coeffs[i];
    for (int v = 0; v < 3; ++v) {
      for (int k = 0; k < basis.exponents[i][v]; ++k) term *= static_cast<long>(p[v]);
    }
    acc += term;
  }
  return acc;
}

std::string DualCurve::toString() const {
  std::vector<Rational> q(coeffs.begin(), coeffs.end());
  return Poly(degree, std::move(q)).toString();
}

DualCurve primitiveCurve(int degree, std::span<const Rational> coeffs) {
  Integer l = 1;
  for (const Rational& c : coeffs) {
    if (c != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  DualCurve out{degree, {}};
  Integer g = 0;
  for (const Rational& c : coeffs) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.coeffs.push_back(v);
  }
  if (g == 0) throw UsageError("primitiveCurve: zero form");
  Integer lead = 0;
  for (const Integer& v : out.coeffs) {
    if (v != 0) {
      lead = v;
      break;
    }
  }
  if (lead < 0) g = -g;
  for (Integer& v : out.coeffs) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return out;
}

CurveFit fitDualCurve(std::span<const Point> points, int degree, std::span<const Point> nonMembers) {
  if (degree < 1) throw UsageError("fitDualCurve: degree must be at least 1");
  const MonomialBasis basis = monomials(degree);
  QMatrix interp(points.size(), basis.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Integer v = 1;
      for (int k = 0; k < 3; ++k) {
        for (int e = 0; e < basis.exponents[i][k]; ++e) v *= static_cast<long>(points[r][k]);
      }
      interp(r, i) = Rational(v);
    }
  }
  const Subspace sol = nullspace(interp);
  if (sol.dim() == 0) throw NoCurveError("no curve of degree " + std::to_string(degree) + " through the points");

  CurveFit fit;
  fit.solutionDim = sol.dim();
  fit.rank = basis.size() - sol.dim();
  for (std::size_t r = 0; r < sol.dim(); ++r) {
    DualCurve c = primitiveCurve(degree, sol.basis().row(r));
    const bool keep = sol.dim() == 1 || std::none_of(nonMembers.begin(), nonMembers.end(),
                                                     [&](const Point& p) { return c.evaluate(p) == 0; });
    if (keep) fit.candidates.push_back(std::move(c));
  }
  if (fit.candidates.size() == 1) fit.curve = fit.candidates.front();
  return fit;
}

bool curveContains(const DualCurve& c, const Line& l) { return c.evaluate(dualPoint(l)) == 0; }

}  // namespace lineconf
