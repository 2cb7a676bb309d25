#pragma once

// The rank-2 bundle D attached to D0: Chern data, stability, splitting on
// lines, jump lines, and curves through jump points in the dual plane.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lineconf/arrangement.hpp"
#include "lineconf/derivations.hpp"

namespace lineconf {

struct ChernData {
  std::int64_t c1 = 0;   // -(d-1)
  std::int64_t c2 = 0;   // (d-1)^2 - deg J
  int k = 0;             // twist with c1(D(k)) in {0, -1}
  std::int64_t c1n = 0;
  std::int64_t c2n = 0;
};

ChernData chern(int d, std::int64_t degJ);
ChernData chern(const Arrangement& a);

/// Normalising twist: (d-1)/2 for odd d, (d-2)/2 for even d.
int normalizationTwist(int d);

enum class Verdict { Stable, SemistableNotStable, Unstable };

std::string verdictName(Verdict v);

struct StabilityReport {
  Verdict verdict = Verdict::Stable;
  std::optional<int> witnessDegree;  // least t with (D0)_t != 0, when unstable
  bool bogomolovPasses = false;      // deg J < 3/4 (d-1)^2

  bool semistable() const { return verdict != Verdict::Unstable; }
};

/// Exact verdict from the vanishing of (D0)_k and (D0)_{k-1}.
StabilityReport stability(const DerivationModule& m);
StabilityReport stability(const Arrangement& a);

enum class StabilityClause { Stable1, Semistable2, Stable3, None };

std::string clauseName(StabilityClause c);

/// First combinatorial sufficient condition that applies to (A, H), given the
/// exact stability of A - H. None when A - H is not essential.
StabilityClause stabilitySufficient(const Arrangement& a, std::size_t pivot);

struct SplittingType {
  int a1 = 0;  // a1 >= a2
  int a2 = 0;

  bool operator==(const SplittingType&) const = default;
};

/// Linear parametrisation (x,y,z) = s P + u Q of a line by two points P, Q
/// on it; (s, u) are then coordinates on the line.
struct LineChart {
  Line line;
  IntTriple p;
  IntTriple q;
};

/// P, Q a reduced basis of the integer points on l (so P x Q = +-l, the
/// unimodular choice), Lagrange-reduced, signs and order canonical.
LineChart chartFor(const Line& l);
/// Chart from two explicit distinct points of l; any pair of independent
/// points works. Throws UsageError otherwise.
LineChart chartFor(const Line& l, const IntTriple& p, const IntTriple& q);

/// Splitting type of D restricted to l (l need not belong to the arrangement).
SplittingType splittingType(const DerivationModule& m, const Line& l);
SplittingType splittingType(const DerivationModule& m, const LineChart& chart);

struct JumpReport {
  Line line;
  bool inArrangement = false;
  std::size_t restrictionCount = 0;
  SplittingType splitting;
  bool isJump = false;
  bool thresholdFired = false;
};

/// Whether the combinatorial jump-line threshold applies to a line meeting
/// the arrangement in `restrictionCount` distinct points.
bool jumpThreshold(int d, bool inArrangement, std::size_t restrictionCount);

/// Requires a semistable bundle (PreconditionError otherwise). Throws
/// InvariantViolation if the threshold fires on a line that does not jump.
JumpReport isJumpLine(const DerivationModule& m, const Line& l);

/// Candidate lines for a jump scan: arrangement lines, lines through two
/// singular points, and primitive lines with coefficients in [-height, height];
/// deduplicated and sorted.
std::vector<Line> jumpCandidates(const Arrangement& a, int height);

/// Reports for every candidate line, in candidate order. A candidate scan,
/// not a proof that no other jump lines exist.
std::vector<JumpReport> jumpScan(const DerivationModule& m, int height);

/// The lines of a scan that jump.
std::vector<Line> jumpLines(std::span<const JumpReport> scan);

/// Homogeneous form in dual coordinates (a:b:c); primitive integer
/// coefficients over monomials(degree), first nonzero positive.
struct DualCurve {
  int degree = 0;
  std::vector<Integer> coeffs;

  Integer evaluate(const Point& p) const;
  std::string toString() const;
  bool operator==(const DualCurve&) const = default;
};

/// Primitive integer multiple of a rational coefficient vector.
DualCurve primitiveCurve(int degree, std::span<const Rational> coeffs);

struct CurveFit {
  std::size_t solutionDim = 0;        // dimension of forms through the points
  std::size_t rank = 0;               // conditions imposed by the points
  std::vector<DualCurve> candidates;  // reduced basis forms not vanishing on non-members
  std::optional<DualCurve> curve;     // the unique candidate, if there is one
};

/// Forms of the given degree vanishing on `points`. When the space has
/// dimension one it is the answer; otherwise the reduced basis forms that
/// vanish at some non-member are discarded. Throws NoCurveError when no form
/// passes through the points.
CurveFit fitDualCurve(std::span<const Point> points, int degree, std::span<const Point> nonMembers);

bool curveContains(const DualCurve& c, const Line& l);

}  // namespace lineconf
