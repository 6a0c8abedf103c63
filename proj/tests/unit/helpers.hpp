#pragma once

#include <cstdint>
#include <vector>

#include "rrs/goodness_of_fit.hpp"
#include "rrs/rng.hpp"

namespace rrs::test {

inline constexpr double kSignificance = 0.001;

template <class Draw>
std::vector<std::uint64_t> histogram(std::size_t bins, std::uint64_t draws, Draw&& draw) {
  std::vector<std::uint64_t> counts(bins, 0);
  for (std::uint64_t i = 0; i < draws; ++i) ++counts.at(draw());
  return counts;
}

inline std::vector<double> normalized(std::vector<double> w) {
  double total = 0.0;
  for (double x : w) total += x;
  for (double& x : w) x /= total;
  return w;
}

}  // namespace rrs::test
