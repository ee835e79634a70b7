#ifndef EMOA_RANKING_HPP_
#define EMOA_RANKING_HPP_

#include "emoa/core.hpp"
#include "emoa/objective.hpp"

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace emoa {

enum class Dominance { Dominates, DominatedBy, WeaklyEqual, Incomparable };

inline const char* to_string(Dominance d) noexcept {
  switch (d) {
    case Dominance::Dominates: return "Dominates";
    case Dominance::DominatedBy: return "DominatedBy";
    case Dominance::WeaklyEqual: return "WeaklyEqual";
    case Dominance::Incomparable: return "Incomparable";
  }
  return "?";
}

template <class T>
constexpr bool weakly_dominates(const BasicObjectiveVector<T>& u,
                                const BasicObjectiveVector<T>& v) noexcept {
  return u.f1 >= v.f1 && u.f2 >= v.f2;
}

template <class T>
constexpr bool dominates(const BasicObjectiveVector<T>& u,
                         const BasicObjectiveVector<T>& v) noexcept {
  return weakly_dominates(u, v) && u != v;
}

/// Relation of u to v under maximization.
template <class T>
constexpr Dominance dominance_compare(const BasicObjectiveVector<T>& u,
                                      const BasicObjectiveVector<T>& v) noexcept {
  const bool uv = weakly_dominates(u, v);
  const bool vu = weakly_dominates(v, u);
  if (uv && vu) return Dominance::WeaklyEqual;
  if (uv) return Dominance::Dominates;
  if (vu) return Dominance::DominatedBy;
  return Dominance::Incomparable;
}

/// Fronts R_1..R_v as index sets into the input. R_1 holds the
/// non-dominated members; each later front is the non-dominated part of what
/// remains.
struct FrontPartition {
  std::vector<std::vector<std::size_t>> fronts;

  [[nodiscard]] std::size_t size() const noexcept { return fronts.size(); }
  [[nodiscard]] const std::vector<std::size_t>& last() const { return fronts.back(); }
};

/// Non-dominated sorting by repeated peeling of maximal elements. Quadratic
/// per front, which is fine at population sizes below a few hundred. Equal
/// vectors never dominate each other, so duplicates share a front.
template <class T>
FrontPartition non_dominated_sort(std::span<const BasicObjectiveVector<T>> q) {
  if (q.empty()) throw invalid_parameter("non_dominated_sort: empty input");
  FrontPartition partition;
  std::vector<std::size_t> remaining(q.size());
  std::iota(remaining.begin(), remaining.end(), std::size_t{0});
  std::vector<std::size_t> rest;
  while (!remaining.empty()) {
    std::vector<std::size_t> front;
    rest.clear();
    for (auto i : remaining) {
      const bool dominated = std::any_of(remaining.begin(), remaining.end(),
                                         [&](std::size_t j) { return dominates(q[j], q[i]); });
      (dominated ? rest : front).push_back(i);
    }
    partition.fronts.push_back(std::move(front));
    remaining.swap(rest);
  }
  return partition;
}

template <class T>
FrontPartition non_dominated_sort(const std::vector<BasicObjectiveVector<T>>& q) {
  return non_dominated_sort(std::span<const BasicObjectiveVector<T>>(q));
}

/// Front rank (0-based) of every member, computed in O(N log N) for two
/// objectives: visit members by decreasing f1 and place each in the first
/// front none of whose members dominates it. Produces the same partition as
/// non_dominated_sort.
template <class T>
std::vector<std::size_t> front_ranks_2d(std::span<const BasicObjectiveVector<T>> q) {
  std::vector<std::size_t> order(q.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return q[a].f1 != q[b].f1 ? q[a].f1 > q[b].f1 : q[a].f2 > q[b].f2;
  });
  // Per front: the member with the largest f2 placed so far. Everything in a
  // front was visited earlier, so it has f1 >= the current f1.
  std::vector<BasicObjectiveVector<T>> tops;
  std::vector<std::size_t> rank(q.size());
  for (auto i : order) {
    const auto& p = q[i];
    std::size_t f = 0;
    while (f < tops.size() && tops[f].f2 >= p.f2 && tops[f] != p) ++f;
    if (f == tops.size()) {
      tops.push_back(p);
    } else if (p.f2 > tops[f].f2) {
      tops[f] = p;
    }
    rank[i] = f;
  }
  return rank;
}

/// Indices of the last front of q, in increasing index order.
template <class T>
std::vector<std::size_t> last_front_2d(std::span<const BasicObjectiveVector<T>> q) {
  if (q.empty()) throw invalid_parameter("last_front_2d: empty input");
  const auto rank = front_ranks_2d(q);
  const auto worst = *std::max_element(rank.begin(), rank.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rank.size(); ++i) {
    if (rank[i] == worst) out.push_back(i);
  }
  return out;
}

/// Exact area of the union of boxes [r1, f1] x [r2, f2].
///
/// Sweep over f1 in descending order, accumulating each vertical strip at the
/// running maximum of f2. Dominated points add nothing, so no filtering is
/// needed. Exact for integer T.
template <class T>
T hypervolume_2d(std::span<const BasicObjectiveVector<T>> s,
                 const BasicReferencePoint<T>& r) {
  std::vector<BasicObjectiveVector<T>> pts(s.begin(), s.end());
  for (const auto& p : pts) {
    if (p.f1 < r.f1 || p.f2 < r.f2) {
      throw invalid_parameter("hypervolume_2d: point below the reference point");
    }
  }
  std::sort(pts.begin(), pts.end(),
            [](const auto& a, const auto& b) { return a.f1 > b.f1; });
  T area{};
  T top = r.f2;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    top = std::max(top, pts[i].f2);
    const T next = i + 1 < pts.size() ? pts[i + 1].f1 : r.f1;
    area += (pts[i].f1 - next) * (top - r.f2);
  }
  return area;
}

template <class T>
T hypervolume_2d(const std::vector<BasicObjectiveVector<T>>& s,
                 const BasicReferencePoint<T>& r) {
  return hypervolume_2d(std::span<const BasicObjectiveVector<T>>(s), r);
}

/// Hypervolume lost when the occurrence at `index` is removed from `s`,
/// computed literally as HV(s) - HV(s minus that occurrence).
template <class T>
T hv_contribution(std::size_t index, std::span<const BasicObjectiveVector<T>> s,
                  const BasicReferencePoint<T>& r) {
  if (index >= s.size()) throw invalid_parameter("hv_contribution: index out of range");
  std::vector<BasicObjectiveVector<T>> without;
  without.reserve(s.size() - 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != index) without.push_back(s[i]);
  }
  return hypervolume_2d(s, r) -
         hypervolume_2d(std::span<const BasicObjectiveVector<T>>(without), r);
}

/// Contribution of one occurrence of `x` in `s`.
template <class T>
T hv_contribution(const BasicObjectiveVector<T>& x,
                  std::span<const BasicObjectiveVector<T>> s,
                  const BasicReferencePoint<T>& r) {
  auto it = std::find(s.begin(), s.end(), x);
  if (it == s.end()) throw invalid_parameter("hv_contribution: point not in set");
  return hv_contribution(static_cast<std::size_t>(it - s.begin()), s, r);
}

template <class T>
T hv_contribution(const BasicObjectiveVector<T>& x,
                  const std::vector<BasicObjectiveVector<T>>& s,
                  const BasicReferencePoint<T>& r) {
  return hv_contribution(x, std::span<const BasicObjectiveVector<T>>(s), r);
}

/// Contributions of every member of `s` in O(N log N).
///
/// A member that is weakly dominated by another occurrence (this includes a
/// duplicate of itself) contributes 0. Every other member owns exactly the
/// box between itself and its neighbours on the non-dominated staircase.
template <class T>
std::vector<T> hv_contributions(std::span<const BasicObjectiveVector<T>> s,
                                const BasicReferencePoint<T>& r) {
  for (const auto& p : s) {
    if (p.f1 < r.f1 || p.f2 < r.f2) {
      throw invalid_parameter("hv_contributions: point below the reference point");
    }
  }
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return s[a].f1 != s[b].f1 ? s[a].f1 > s[b].f1 : s[a].f2 > s[b].f2;
  });

  // Walk groups of identical vectors. A group is on the staircase when no
  // earlier (larger f1, or equal f1 and larger f2) vector covers its f2.
  struct Step {
    BasicObjectiveVector<T> value;
    std::size_t first;  // position in `order`
    std::size_t count;
  };
  std::vector<Step> stairs;
  for (std::size_t pos = 0; pos < order.size();) {
    std::size_t end = pos + 1;
    while (end < order.size() && s[order[end]] == s[order[pos]]) ++end;
    const auto& p = s[order[pos]];
    if (stairs.empty() || stairs.back().value.f2 < p.f2) {
      stairs.push_back({p, pos, end - pos});
    }
    pos = end;
  }

  // A unique step owns the box between its neighbours, minus whatever
  // dominated members (all sorted after it, with f1 > left) still cover.
  std::vector<T> contrib(s.size(), T{});
  std::vector<BasicObjectiveVector<T>> shadow;
  for (std::size_t j = 0; j < stairs.size(); ++j) {
    if (stairs[j].count != 1) continue;
    const auto& p = stairs[j].value;
    const T left = j + 1 < stairs.size() ? stairs[j + 1].value.f1 : r.f1;
    const T below = j > 0 ? stairs[j - 1].value.f2 : r.f2;
    shadow.clear();
    for (std::size_t pos = stairs[j].first + 1; pos < order.size(); ++pos) {
      const auto& q = s[order[pos]];
      if (q.f1 <= left) break;
      if (q.f2 > below) shadow.push_back({q.f1, std::min(q.f2, p.f2)});
    }
    const T box = (p.f1 - left) * (p.f2 - below);
    contrib[order[stairs[j].first]] =
        shadow.empty() ? box : box - hypervolume_2d(shadow, BasicReferencePoint<T>{left, below});
  }
  return contrib;
}

template <class T>
std::vector<T> hv_contributions(const std::vector<BasicObjectiveVector<T>>& s,
                                const BasicReferencePoint<T>& r) {
  return hv_contributions(std::span<const BasicObjectiveVector<T>>(s), r);
}

inline constexpr std::uint64_t grid_hv_cell_budget = 10'000'000;

/// Counts covered unit cells of the integer lattice. Slow, obviously
/// correct, integer inputs only.
template <std::integral T>
T grid_hv_oracle(std::span<const BasicObjectiveVector<T>> s,
                 const BasicReferencePoint<T>& r) {
  T max1 = r.f1;
  T max2 = r.f2;
  for (const auto& p : s) {
    if (p.f1 < r.f1 || p.f2 < r.f2) {
      throw invalid_parameter("grid_hv_oracle: point below the reference point");
    }
    max1 = std::max(max1, p.f1);
    max2 = std::max(max2, p.f2);
  }
  const auto cells = static_cast<std::uint64_t>(max1 - r.f1) *
                     static_cast<std::uint64_t>(max2 - r.f2);
  if (cells > grid_hv_cell_budget) {
    throw resource_limit("grid_hv_oracle: " + std::to_string(cells) +
                         " cells exceed the budget");
  }
  T covered{};
  for (T x = r.f1; x < max1; ++x) {
    for (T y = r.f2; y < max2; ++y) {
      // Cell [x, x+1] x [y, y+1].
      for (const auto& p : s) {
        if (p.f1 >= x + 1 && p.f2 >= y + 1) {
          ++covered;
          break;
        }
      }
    }
  }
  return covered;
}

template <std::integral T>
T grid_hv_oracle(const std::vector<BasicObjectiveVector<T>>& s,
                 const BasicReferencePoint<T>& r) {
  return grid_hv_oracle(std::span<const BasicObjectiveVector<T>>(s), r);
}

}  // namespace emoa

#endif  // EMOA_RANKING_HPP_
