#pragma once

#include <algorithm>
#include <cmath>

#include "lfh/hardy.hpp"
#include "lfh/series.hpp"

namespace lfh::test {

inline double max_gap(const TruncatedSeries& s, const TruncatedSeries& t) {
  double worst = 0.0;
  for (std::size_t k = 0; k < std::min(s.size(), t.size()); ++k) worst = std::max(worst, std::abs(s[k] - t[k]));
  return worst;
}

inline double max_gap(const Matrix& a, const Matrix& b, int block) {
  return (a.topLeftCorner(block, block) - b.topLeftCorner(block, block)).cwiseAbs().maxCoeff();
}

}  // namespace lfh::test
