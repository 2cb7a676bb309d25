#include "lineconf/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "lineconf/errors.hpp"

namespace lineconf {
namespace {

IntTriple canonical(std::int64_t a, std::int64_t b, std::int64_t c) {
  const std::int64_t g = std::gcd(std::gcd(a, b), c);
  if (g == 0) throw InvalidInput("zero coefficient triple");
  a /= g;
  b /= g;
  c /= g;
  const std::int64_t lead = a != 0 ? a : b != 0 ? b : c;
  if (lead < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  return {a, b, c};
}

IntTriple cross(const IntTriple& u, const IntTriple& v) {
  return {u.b * v.c - u.c * v.b, u.c * v.a - u.a * v.c, u.a * v.b - u.b * v.a};
}

}  // namespace

Line Line::make(std::int64_t a, std::int64_t b, std::int64_t c) {
  Line l;
  l.t_ = canonical(a, b, c);
  return l;
}

std::string Line::toString() const {
  static constexpr const char* kVars[3] = {"x", "y", "z"};
  const std::int64_t v[3] = {t_.a, t_.b, t_.c};
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 3; ++i) {
    if (v[i] == 0) continue;
    if (v[i] < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    const std::int64_t mag = v[i] < 0 ? -v[i] : v[i];
    if (mag != 1) os << mag;
    os << kVars[i];
    first = false;
  }
  return os.str();
}

Point Point::make(std::int64_t p0, std::int64_t p1, std::int64_t p2) {
  Point p;
  p.t_ = canonical(p0, p1, p2);
  return p;
}

std::string Point::toString() const {
  std::ostringstream os;
  os << '(' << t_.a << ':' << t_.b << ':' << t_.c << ')';
  return os.str();
}

Point intersection(const Line& l1, const Line& l2) {
  if (l1 == l2) throw UsageError("intersection: identical lines");
  const IntTriple p = cross(l1.coeffs(), l2.coeffs());
  return Point::make(p.a, p.b, p.c);
}

Line lineThrough(const Point& p, const Point& q) {
  if (p == q) throw UsageError("lineThrough: identical points");
  const IntTriple l = cross(p.coords(), q.coords());
  return Line::make(l.a, l.b, l.c);
}

bool incident(const Line& l, const Point& p) {
  return l.a() * p[0] + l.b() * p[1] + l.c() * p[2] == 0;
}

Point dualPoint(const Line& l) { return Point::make(l.a(), l.b(), l.c()); }

Arrangement::Arrangement(std::vector<Line> lines) : lines_(std::move(lines)) {
  if (lines_.empty()) throw InvalidInput("arrangement has no lines");
  std::set<Line> seen;
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    if (!seen.insert(lines_[i]).second) {
      throw InvalidInput("line " + std::to_string(i) + " (" + lines_[i].toString() +
                         ") repeats an earlier line");
    }
  }
}

bool Arrangement::isEssential() const {
  QMatrix m(lines_.size(), 3);
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    m(i, 0) = Rational(static_cast<long>(lines_[i].a()));
    m(i, 1) = Rational(static_cast<long>(lines_[i].b()));
    m(i, 2) = Rational(static_cast<long>(lines_[i].c()));
  }
  return rank(m) == 3;
}

std::optional<std::size_t> Arrangement::indexOf(const Line& l) const {
  const auto it = std::find(lines_.begin(), lines_.end(), l);
  if (it == lines_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - lines_.begin());
}

Arrangement Arrangement::without(std::size_t index) const {
  if (index >= lines_.size()) throw UsageError("line index out of range");
  std::vector<Line> rest;
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    if (i != index) rest.push_back(lines_[i]);
  }
  return Arrangement(std::move(rest));
}

Arrangement Arrangement::with(const Line& l) const {
  std::vector<Line> more = lines_;
  more.push_back(l);
  return Arrangement(std::move(more));
}

Poly Arrangement::definingPolynomial() const {
  Poly q(0, {Rational(1)});
  for (const Line& l : lines_) q = q * l.form();
  return q;
}

std::vector<SingularPoint> singularPoints(const Arrangement& a) {
  if (a.size() < 2) throw PreconditionError("singular points need at least two lines");
  std::map<Point, std::set<std::size_t>> groups;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      auto& s = groups[intersection(a[i], a[j])];
      s.insert(i);
      s.insert(j);
    }
  }
  std::vector<SingularPoint> out;
  out.reserve(groups.size());
  for (auto& [p, idx] : groups) out.push_back({p, {idx.begin(), idx.end()}});
  return out;
}

int maxMu(const Arrangement& a) {
  int m = 0;
  for (const SingularPoint& p : singularPoints(a)) m = std::max(m, p.mu());
  return m;
}

std::int64_t jacobianDegree(const std::vector<SingularPoint>& points) {
  std::int64_t s = 0;
  for (const SingularPoint& p : points) s += static_cast<std::int64_t>(p.mu()) * p.mu();
  return s;
}

std::int64_t jacobianDegree(const Arrangement& a) { return jacobianDegree(singularPoints(a)); }

PoincareData poincare(const Arrangement& a) {
  if (a.size() < 3 || !a.isEssential()) {
    throw PreconditionError("Poincare polynomial requires an essential arrangement");
  }
  const auto d = static_cast<std::int64_t>(a.size());
  std::int64_t sumMu = 0;
  for (const SingularPoint& p : singularPoints(a)) sumMu += p.mu();
  PoincareData out;
  out.b1 = static_cast<int>(d - 1);
  out.b2 = sumMu - d + 1;
  for (std::int64_t r = 0; 2 * r <= d - 1; ++r) {
    if (r * (d - 1 - r) == out.b2) {
      out.factorRoots = std::pair<int, int>(static_cast<int>(r), static_cast<int>(d - 1 - r));
      break;
    }
  }
  return out;
}

std::size_t restrictionCount(const Arrangement& a, const Line& l) {
  std::set<Point> pts;
  for (const Line& m : a.lines()) {
    if (m != l) pts.insert(intersection(m, l));
  }
  return pts.size();
}

std::vector<int> TripleData::multiplicities() const {
  std::vector<int> out;
  for (const SingularPoint& p : restriction) out.push_back(p.multiplicity());
  return out;
}

TripleData triple(const Arrangement& a, std::size_t pivot) {
  if (pivot >= a.size()) {
    throw UsageError("line index " + std::to_string(pivot) + " out of range for " +
                     std::to_string(a.size()) + " lines");
  }
  if (a.size() < 3) throw PreconditionError("a triple needs at least three lines");
  TripleData t{a.without(pivot), pivot, {}, 0};
  for (SingularPoint& p : singularPoints(a)) {
    if (std::binary_search(p.incident.begin(), p.incident.end(), pivot)) {
      t.restriction.push_back(std::move(p));
    }
  }
  t.restrictionCount = t.restriction.size();
  return t;
}

}  // namespace lineconf
