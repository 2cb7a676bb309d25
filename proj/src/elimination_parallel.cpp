#include "lineconf/exactlin.hpp"

#include <utility>

#include "elimination_common.hpp"

namespace lineconf::detail {
namespace {

// Fewer rows than this are not worth forking threads for.
constexpr std::size_t kParallelRowThreshold = 16;

}  // namespace

Echelon eliminateParallel(IntMatrix m, bool reduce) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    const std::size_t p = selectPivot(m, r, c);
    if (p == m.rows) continue;
    swapRows(m, p, r);
    normalisePivotRow(m, r, c);

    // Each target row only reads the pivot row, so the updates are independent.
    const std::size_t first = reduce ? 0 : r + 1;
    const auto count = static_cast<long>(m.rows - first);
#pragma omp parallel for schedule(dynamic, 4) if (m.rows - first >= kParallelRowThreshold)
    for (long k = 0; k < count; ++k) {
      const auto i = first + static_cast<std::size_t>(k);
      if (i == r || m.at(i, c) == 0) continue;
      eliminateRow(m, i, r, c, i < r ? 0 : c);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

}  // namespace lineconf::detail
