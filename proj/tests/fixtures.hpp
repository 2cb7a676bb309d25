#pragma once

#include <algorithm>
#include <array>
#include <initializer_list>
#include <random>
#include <set>
#include <vector>

#include "lineconf/arrangement.hpp"

namespace fixtures {

using lineconf::Arrangement;
using lineconf::Line;

inline Arrangement make(std::initializer_list<std::array<int, 3>> rows) {
  std::vector<Line> lines;
  for (const auto& r : rows) lines.push_back(Line::make(r[0], r[1], r[2]));
  return Arrangement(std::move(lines));
}

inline Line line(int a, int b, int c) { return Line::make(a, b, c); }

// The nested family: five base lines, then x+y, x+2z, x+2y, y+2z in turn.
inline Arrangement nested(int which) {
  const std::vector<std::array<int, 3>> all = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {1, 0, 1},
                                               {1, 1, 0}, {1, 0, 2}, {1, 2, 0}, {0, 1, 2}};
  std::vector<Line> lines;
  for (int i = 0; i < 5 + which - 1; ++i) lines.push_back(Line::make(all[i][0], all[i][1], all[i][2]));
  return Arrangement(std::move(lines));
}
inline Arrangement arrI() { return nested(1); }
inline Arrangement arrII() { return nested(2); }
inline Arrangement arrIII() { return nested(3); }
inline Arrangement arrIV() { return nested(4); }
inline Arrangement arrV() { return nested(5); }

inline Arrangement nonFano() { return make({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}); }

// Five lines through (0:0:1) plus z and x+3y+5z.
inline Arrangement fiveThroughPoint() {
  return make({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}, {1, 2, 0}, {0, 0, 1}, {1, 3, 5}});
}

inline Arrangement triangle() { return make({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }

// Four lines through (0:0:1) and z.
inline Arrangement nearPencil5() { return make({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}, {0, 0, 1}}); }

inline Arrangement generic4() { return make({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}); }
inline Arrangement generic5() { return make({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}}); }

// The nine jump lines of arrangement V found by the threshold theorems.
inline std::vector<Line> nineJumpLinesV() {
  return {line(0, 1, 1), line(1, 0, 1), line(1, 1, 0), line(1, 0, 2), line(1, 2, 0),
          line(0, 1, 2), line(1, -1, 0), line(1, 0, -2), line(0, 1, -1)};
}

// 4x^3 - 2x^2y - 4xy^2 + 2y^3 - 4x^2z - y^2z - xz^2 - 2yz^2 + z^3 in dual coordinates.
inline long publishedCubic(long x, long y, long z) {
  return 4 * x * x * x - 2 * x * x * y - 4 * x * y * y + 2 * y * y * y - 4 * x * x * z - y * y * z - x * z * z -
         2 * y * z * z + z * z * z;
}

// Random essential arrangement of d distinct lines with coefficients in
// [-height, height].
inline Arrangement randomArrangement(std::mt19937_64& rng, int d, int height) {
  std::uniform_int_distribution<int> coef(-height, height);
  for (;;) {
    std::set<Line> seen;
    std::vector<Line> lines;
    while (static_cast<int>(lines.size()) < d) {
      const int a = coef(rng), b = coef(rng), c = coef(rng);
      if (a == 0 && b == 0 && c == 0) continue;
      const Line l = Line::make(a, b, c);
      if (seen.insert(l).second) lines.push_back(l);
    }
    Arrangement arr(std::move(lines));
    if (arr.isEssential()) return arr;
  }
}

// Deterministic corpus of `count` arrangements with d cycling through 4..10.
inline std::vector<Arrangement> corpus(std::size_t count, std::uint64_t seed = 20240611) {
  std::mt19937_64 rng(seed);
  std::vector<Arrangement> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(randomArrangement(rng, 4 + static_cast<int>(i % 7), 3));
  return out;
}

// Random subsets of the thirteen lines with coefficients in {-1, 0, 1}; these
// have many multiple points and often a factored Poincare polynomial.
inline std::vector<Arrangement> specialCorpus(std::size_t count, std::uint64_t seed = 7) {
  std::vector<Line> pool;
  for (int a = -1; a <= 1; ++a) {
    for (int b = -1; b <= 1; ++b) {
      for (int c = -1; c <= 1; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        const Line l = Line::make(a, b, c);
        if (std::find(pool.begin(), pool.end(), l) == pool.end()) pool.push_back(l);
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::vector<Arrangement> out;
  while (out.size() < count) {
    std::shuffle(pool.begin(), pool.end(), rng);
    const auto d = 4 + out.size() % 7;
    Arrangement arr(std::vector<Line>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(d)));
    if (arr.isEssential()) out.push_back(std::move(arr));
  }
  return out;
}

}  // namespace fixtures
