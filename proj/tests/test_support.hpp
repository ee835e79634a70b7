#ifndef EMOA_TESTS_TEST_SUPPORT_HPP_
#define EMOA_TESTS_TEST_SUPPORT_HPP_

#include "emoa/core.hpp"
#include "emoa/objective.hpp"
#include "emoa/ranking.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cstddef>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

namespace emoa::testing {

/// Replays pre-recorded draws. Running out of script is a test bug.
class ScriptedSource {
public:
  std::deque<bool> bits;
  std::deque<std::uint64_t> integers;
  std::deque<bool> coins;

  bool uniform_bit() { return pop(bits, "uniform_bit"); }
  std::uint64_t uniform_below(std::uint64_t m) {
    const auto v = pop(integers, "uniform_below");
    if (v >= m) throw std::logic_error("scripted uniform_below value out of range");
    return v;
  }
  bool bernoulli(double) { return pop(coins, "bernoulli"); }

private:
  template <class Q>
  static typename Q::value_type pop(Q& q, const char* what) {
    if (q.empty()) throw std::logic_error(std::string("script exhausted: ") + what);
    auto v = q.front();
    q.pop_front();
    return v;
  }
};

/// Random multiset of integer vectors with coordinates in [lo, hi].
inline std::vector<ObjectiveVector> random_vectors(RandomSource& rng, std::size_t size,
                                                   std::int64_t lo, std::int64_t hi) {
  std::vector<ObjectiveVector> out(size);
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  for (auto& v : out) {
    v.f1 = lo + static_cast<std::int64_t>(rng.uniform_below(span));
    v.f2 = lo + static_cast<std::int64_t>(rng.uniform_below(span));
  }
  return out;
}

/// Front index of every member by the longest-domination-chain definition:
/// 0 if nothing dominates it, else 1 + the largest index among its dominators.
/// Quadratic-per-level and independent of the library's sorting code.
inline std::vector<std::size_t> chain_ranks(const std::vector<ObjectiveVector>& q) {
  std::vector<std::size_t> rank(q.size(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = 0; j < q.size(); ++j) {
        const bool dom = q[j].f1 >= q[i].f1 && q[j].f2 >= q[i].f2 && q[j] != q[i];
        if (dom && rank[i] < rank[j] + 1) {
          rank[i] = rank[j] + 1;
          changed = true;
        }
      }
    }
  }
  return rank;
}

inline std::vector<std::size_t> ranks_of(const FrontPartition& p, std::size_t size) {
  std::vector<std::size_t> rank(size, static_cast<std::size_t>(-1));
  for (std::size_t f = 0; f < p.fronts.size(); ++f) {
    for (auto i : p.fronts[f]) rank[i] = f;
  }
  return rank;
}

/// Upper tail of the chi-square distribution with `dof` degrees of freedom.
inline double chi_square_sf(double statistic, double dof) {
  return boost::math::gamma_q(dof / 2.0, statistic / 2.0);
}

/// Pearson chi-square test of homogeneity for two count vectors over the same
/// categories. Categories empty in both samples are dropped. Returns the
/// p-value (1 when fewer than two categories remain).
inline double chi_square_homogeneity(const std::vector<std::uint64_t>& a,
                                     const std::vector<std::uint64_t>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("category count mismatch");
  double na = 0;
  double nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    na += static_cast<double>(a[i]);
    nb += static_cast<double>(b[i]);
  }
  double stat = 0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double col = static_cast<double>(a[i] + b[i]);
    if (col == 0) continue;
    ++used;
    const double ea = col * na / (na + nb);
    const double eb = col * nb / (na + nb);
    stat += (static_cast<double>(a[i]) - ea) * (static_cast<double>(a[i]) - ea) / ea;
    stat += (static_cast<double>(b[i]) - eb) * (static_cast<double>(b[i]) - eb) / eb;
  }
  if (used < 2) return 1.0;
  return chi_square_sf(stat, static_cast<double>(used - 1));
}

}  // namespace emoa::testing

#endif  // EMOA_TESTS_TEST_SUPPORT_HPP_
