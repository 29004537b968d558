#pragma once

#include "goesv/rand.hpp"
#include "goesv/stats.hpp"
#include "goesv/types.hpp"

#include <algorithm>
#include <initializer_list>
#include <vector>

namespace testing {

inline goesv::Vector<double> vec(std::initializer_list<double> v) {
  goesv::Vector<double> out(static_cast<goesv::Index>(v.size()));
  goesv::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

// columns[k] collects location k of every spectrum drawn by `draw`.
template <typename Draw>
std::vector<std::vector<double>> collect(int samples, int width, goesv::RandStream& rs, Draw draw) {
  std::vector<std::vector<double>> cols(width);
  for (auto& c : cols) c.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const goesv::SortedSpectrum s = draw(rs);
    for (int k = 0; k < width; ++k) cols[k].push_back(s[k]);
  }
  return cols;
}

// Smallest per-location two-sample KS p-value.
inline double min_pvalue(const std::vector<std::vector<double>>& a,
                         const std::vector<std::vector<double>>& b) {
  double p = 1.0;
  for (std::size_t k = 0; k < a.size(); ++k) p = std::min(p, goesv::ks_two_sample(a[k], b[k]).p_value);
  return p;
}

}  // namespace testing
