#pragma once

// Line arrangements in the projective plane and their intersection lattice.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lineconf/poly.hpp"

namespace lineconf {

/// Canonical representative of a projective class of integer triples:
/// primitive, first nonzero entry positive.
struct IntTriple {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  auto operator<=>(const IntTriple&) const = default;
};

/// The line a x + b y + c z = 0.
class Line {
 public:
  /// Throws InvalidInput for (0,0,0).
  static Line make(std::int64_t a, std::int64_t b, std::int64_t c);

  std::int64_t a() const { return t_.a; }
  std::int64_t b() const { return t_.b; }
  std::int64_t c() const { return t_.c; }
  const IntTriple& coeffs() const { return t_; }

  Poly form() const { return Poly::linear(t_.a, t_.b, t_.c); }

  /// Human-readable form, e.g. "x+2z", "x-y".
  std::string toString() const;

  auto operator<=>(const Line&) const = default;

 private:
  IntTriple t_;
};

/// A point (p0:p1:p2) of the plane.
class Point {
 public:
  static Point make(std::int64_t p0, std::int64_t p1, std::int64_t p2);

  std::int64_t operator[](int i) const { return i == 0 ? t_.a : i == 1 ? t_.b : t_.c; }
  const IntTriple& coords() const { return t_; }

  std::string toString() const;

  auto operator<=>(const Point&) const = default;

 private:
  IntTriple t_;
};

Point intersection(const Line& l1, const Line& l2);
Line lineThrough(const Point& p, const Point& q);
bool incident(const Line& l, const Point& p);

/// Dual point (a:b:c) of the line a x + b y + c z = 0.
Point dualPoint(const Line& l);

class Arrangement {
 public:
  /// Throws InvalidInput when empty or when two lines coincide.
  explicit Arrangement(std::vector<Line> lines);

  std::size_t size() const { return lines_.size(); }
  const std::vector<Line>& lines() const { return lines_; }
  const Line& operator[](std::size_t i) const { return lines_[i]; }

  /// Not all lines pass through a common point.
  bool isEssential() const;

  std::optional<std::size_t> indexOf(const Line& l) const;
  bool contains(const Line& l) const { return indexOf(l).has_value(); }

  Arrangement without(std::size_t index) const;
  Arrangement with(const Line& l) const;

  /// Product of the defining linear forms.
  Poly definingPolynomial() const;

 private:
  std::vector<Line> lines_;
};

struct SingularPoint {
  Point point;
  std::vector<std::size_t> incident;  // ascending line indices

  int multiplicity() const { return static_cast<int>(incident.size()); }
  int mu() const { return multiplicity() - 1; }
};

/// All points where at least two lines meet, sorted by canonical point order.
/// Requires at least two lines.
std::vector<SingularPoint> singularPoints(const Arrangement& a);

/// Largest Moebius value over the rank-2 flats.
int maxMu(const Arrangement& a);

/// Sum of mu^2 over the singular points, the degree of the Jacobian scheme.
std::int64_t jacobianDegree(const Arrangement& a);
std::int64_t jacobianDegree(const std::vector<SingularPoint>& points);

/// pi(A,t) = (1+t)(1 + b1 t + b2 t^2).
struct PoincareData {
  int b1 = 0;
  std::int64_t b2 = 0;
  // (a, d-1-a) with a <= d-1-a when 1 + b1 t + b2 t^2 = (1+at)(1+(d-1-a)t).
  std::optional<std::pair<int, int>> factorRoots;
};

/// Requires an essential arrangement of at least three lines.
PoincareData poincare(const Arrangement& a);

/// Number of distinct points in which the lines of `a` other than `l` meet `l`.
std::size_t restrictionCount(const Arrangement& a, const Line& l);

struct TripleData {
  Arrangement deleted;
  std::size_t pivotIndex = 0;
  std::vector<SingularPoint> restriction;  // singular points of A on H, indices into A
  std::size_t restrictionCount = 0;

  /// Multiplicities m_p of the restriction points, in point order.
  std::vector<int> multiplicities() const;
};

TripleData triple(const Arrangement& a, std::size_t pivot);

}  // namespace lineconf
