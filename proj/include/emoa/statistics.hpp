#ifndef EMOA_STATISTICS_HPP_
#define EMOA_STATISTICS_HPP_

#include "emoa/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace emoa {

struct SampleStats {
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // sample (n-1) standard deviation; 0 for one value
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
};

/// Descriptive statistics of a non-empty sample.
inline SampleStats describe(std::span<const std::uint64_t> values) {
  if (values.empty()) throw invalid_parameter("describe: empty sample");
  std::vector<std::uint64_t> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  SampleStats s;
  s.count = v.size();
  s.min = static_cast<double>(v.front());
  s.max = static_cast<double>(v.back());
  const std::size_t mid = v.size() / 2;
  s.median = v.size() % 2 == 1
                 ? static_cast<double>(v[mid])
                 : (static_cast<double>(v[mid - 1]) + static_cast<double>(v[mid])) / 2.0;
  // Integer sum is exact for any realistic generation count.
  const auto total = std::accumulate(v.begin(), v.end(), std::uint64_t{0});
  s.mean = static_cast<double>(total) / static_cast<double>(v.size());
  if (v.size() > 1) {
    double ss = 0.0;
    for (auto x : v) {
      const double d = static_cast<double>(x) - s.mean;
      ss += d * d;
    }
    s.stddev = std::sqrt(ss / static_cast<double>(v.size() - 1));
  }
  return s;
}

struct RankSumResult {
  double u = 0.0;        // U statistic of the first sample
  double z = 0.0;        // continuity-corrected normal score
  double p_value = 1.0;  // two-sided
};

inline constexpr std::size_t rank_sum_min_sample = 8;

/// Two-sided Mann-Whitney U test with mid-ranks for ties, tie-corrected
/// variance, continuity correction and the normal approximation.
inline RankSumResult rank_sum_compare(std::span<const double> a, std::span<const double> b) {
  if (a.size() < rank_sum_min_sample || b.size() < rank_sum_min_sample) {
    throw invalid_parameter("rank_sum_compare: each sample needs at least 8 values");
  }
  const std::size_t n1 = a.size();
  const std::size_t n2 = b.size();
  const std::size_t total = n1 + n2;

  struct Tagged {
    double value;
    bool first;
  };
  std::vector<Tagged> pooled;
  pooled.reserve(total);
  for (double x : a) pooled.push_back({x, true});
  for (double x : b) pooled.push_back({x, false});
  std::sort(pooled.begin(), pooled.end(),
            [](const Tagged& l, const Tagged& r) { return l.value < r.value; });

  double rank_sum_first = 0.0;
  double tie_term = 0.0;  // sum of t^3 - t over tie groups
  for (std::size_t i = 0; i < total;) {
    std::size_t j = i + 1;
    while (j < total && pooled[j].value == pooled[i].value) ++j;
    const double mid_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t t = i; t < j; ++t) {
      if (pooled[t].first) rank_sum_first += mid_rank;
    }
    const auto t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }

  const double dn1 = static_cast<double>(n1);
  const double dn2 = static_cast<double>(n2);
  const double dn = static_cast<double>(total);
  RankSumResult res;
  res.u = rank_sum_first - dn1 * (dn1 + 1.0) / 2.0;
  const double mean_u = dn1 * dn2 / 2.0;
  const double var_u = dn1 * dn2 / 12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));
  if (var_u <= 0.0) {
    // Every value tied: no evidence either way.
    return res;
  }
  res.z = (std::abs(res.u - mean_u) - 0.5) / std::sqrt(var_u);
  res.p_value = std::min(1.0, std::erfc(res.z / std::sqrt(2.0)));
  return res;
}

inline RankSumResult rank_sum_compare(const std::vector<double>& a,
                                      const std::vector<double>& b) {
  return rank_sum_compare(std::span<const double>(a), std::span<const double>(b));
}

}  // namespace emoa

#endif  // EMOA_STATISTICS_HPP_
