#ifndef EMOA_UPDATE_HPP_
#define EMOA_UPDATE_HPP_

#include "emoa/core.hpp"
#include "emoa/objective.hpp"
#include "emoa/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace emoa {

/// A solution together with its cached objective vector.
struct Individual {
  Bitstring genome;
  ObjectiveVector objectives;

  friend bool operator==(const Individual&, const Individual&) = default;
};

/// Multiset of evaluated solutions. Holds mu members between generations and
/// mu+1 while an update is in progress.
using Population = std::vector<Individual>;

inline std::vector<ObjectiveVector> objectives_of(const Population& p) {
  std::vector<ObjectiveVector> out;
  out.reserve(p.size());
  for (const auto& ind : p) out.push_back(ind.objectives);
  return out;
}

/// Index (into `front`) of a member with minimal hypervolume contribution
/// within `front`. Ties are broken uniformly at random; no draw is consumed
/// when the minimizer is unique.
template <RandomSourceLike R>
std::size_t select_victim(std::span<const ObjectiveVector> front,
                          const ReferencePoint& r, R& rng) {
  if (front.empty()) throw invalid_parameter("select_victim: empty front");
  const auto contrib = hv_contributions(front, r);
  const auto least = *std::min_element(contrib.begin(), contrib.end());
  std::vector<std::size_t> ties;
  for (std::size_t i = 0; i < contrib.size(); ++i) {
    if (contrib[i] == least) ties.push_back(i);
  }
  if (ties.size() == 1) return ties.front();
  return ties[static_cast<std::size_t>(rng.uniform_below(ties.size()))];
}

namespace detail {

// Worst member among q[subset...]: last front of the subset, then least
// hypervolume contribution inside that front, ties uniform. Returns an index
// into q. Same result as non_dominated_sort + select_victim, fused into one
// sorted pass because it runs once per generation.
template <RandomSourceLike R>
std::size_t worst_of(std::span<const ObjectiveVector> q,
                     std::span<const std::size_t> subset, const ReferencePoint& r,
                     R& rng) {
  using T = ObjectiveVector::value_type;
  struct Entry {
    ObjectiveVector v;
    std::size_t index;
  };
  thread_local std::vector<Entry> sorted;
  thread_local std::vector<std::size_t> rank;
  thread_local std::vector<ObjectiveVector> tops;
  thread_local std::vector<Entry> last;
  thread_local std::vector<std::size_t> ties;

  sorted.clear();
  for (auto i : subset) {
    if (q[i].f1 < r.f1 || q[i].f2 < r.f2) {
      throw invalid_parameter("population update: point below the reference point");
    }
    sorted.push_back({q[i], i});
  }
  std::sort(sorted.begin(), sorted.end(), [](const Entry& a, const Entry& b) {
    return a.v.f1 != b.v.f1 ? a.v.f1 > b.v.f1 : a.v.f2 > b.v.f2;
  });

  tops.clear();
  rank.resize(sorted.size());
  std::size_t worst = 0;
  for (std::size_t pos = 0; pos < sorted.size(); ++pos) {
    const auto& p = sorted[pos].v;
    std::size_t f = 0;
    while (f < tops.size() && tops[f].f2 >= p.f2 && tops[f] != p) ++f;
    if (f == tops.size()) {
      tops.push_back(p);
    } else if (p.f2 > tops[f].f2) {
      tops[f] = p;
    }
    rank[pos] = f;
    worst = std::max(worst, f);
  }

  // The last front in f1-descending order is a staircase whose equal vectors
  // are adjacent.
  last.clear();
  for (std::size_t pos = 0; pos < sorted.size(); ++pos) {
    if (rank[pos] == worst) last.push_back(sorted[pos]);
  }

  T least{};
  bool have = false;
  ties.clear();
  for (std::size_t j = 0; j < last.size(); ++j) {
    const auto& p = last[j].v;
    std::size_t next = j + 1;
    while (next < last.size() && last[next].v == p) ++next;
    T delta{};
    if (next == j + 1 && (j == 0 || last[j - 1].v != p)) {
      const T left = next < last.size() ? last[next].v.f1 : r.f1;
      const T below = j > 0 ? last[j - 1].v.f2 : r.f2;
      delta = (p.f1 - left) * (p.f2 - below);
    }
    if (!have || delta < least) {
      least = delta;
      have = true;
      ties.clear();
    }
    if (delta == least) ties.push_back(last[j].index);
  }
  if (ties.size() == 1) return ties.front();
  return ties[static_cast<std::size_t>(rng.uniform_below(ties.size()))];
}

}  // namespace detail

/// Index of the member the deterministic update removes from q.
template <RandomSourceLike R>
std::size_t deterministic_victim(std::span<const ObjectiveVector> q,
                                 const ReferencePoint& r, R& rng) {
  if (q.size() < 2) throw invalid_parameter("population update needs |Q| >= 2");
  std::vector<std::size_t> all(q.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return detail::worst_of(q, std::span<const std::size_t>(all), r, rng);
}

/// Maps |Q| to the size N of the competing subset.
using SubsetSizeRule = std::function<std::size_t(std::size_t)>;

/// N = floor(|Q| / 2), clamped to at least 1.
inline std::size_t half_subset(std::size_t s) { return std::max<std::size_t>(1, s / 2); }

/// Index of the member the stochastic update removes from q: sample N members
/// without replacement, then remove the worst of that sample judged only
/// against the sample itself.
template <RandomSourceLike R>
std::size_t stochastic_victim(std::span<const ObjectiveVector> q,
                              const ReferencePoint& r, const SubsetSizeRule& rule,
                              R& rng) {
  if (q.size() < 2) throw invalid_parameter("population update needs |Q| >= 2");
  const std::size_t n = rule ? rule(q.size()) : half_subset(q.size());
  if (n < 1 || n > q.size()) {
    throw invalid_parameter("subset size rule returned " + std::to_string(n) +
                            " for |Q|=" + std::to_string(q.size()));
  }
  const auto subset = sample_without_replacement(q.size(), n, rng);
  return detail::worst_of(q, std::span<const std::size_t>(subset), r, rng);
}

/// Survivor selection strategy: which members compete for removal.
struct UpdateStrategy {
  enum class Kind { Deterministic, Stochastic };

  Kind kind = Kind::Deterministic;
  SubsetSizeRule subset_size_rule;  // consulted only by Stochastic
  std::optional<double> subset_fraction;  // set when built from a fraction

  static UpdateStrategy deterministic() { return {Kind::Deterministic, nullptr, std::nullopt}; }

  static UpdateStrategy stochastic() { return {Kind::Stochastic, half_subset, std::nullopt}; }

  static UpdateStrategy stochastic(SubsetSizeRule rule) {
    return {Kind::Stochastic, std::move(rule), std::nullopt};
  }

  /// N = floor(fraction * |Q|), clamped to [1, |Q|]. fraction in (0, 1].
  static UpdateStrategy stochastic_fraction(double fraction) {
    if (!(fraction > 0.0 && fraction <= 1.0)) {
      throw invalid_parameter("subset fraction must lie in (0, 1]");
    }
    auto rule = [fraction](std::size_t s) {
      const auto n = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(s)));
      return std::clamp<std::size_t>(n, 1, s);
    };
    return {Kind::Stochastic, rule, fraction};
  }

  [[nodiscard]] std::string name() const {
    return kind == Kind::Deterministic ? "deterministic" : "stochastic";
  }

  template <RandomSourceLike R>
  std::size_t victim(std::span<const ObjectiveVector> q, const ReferencePoint& r,
                     R& rng) const {
    if (kind == Kind::Deterministic) return deterministic_victim(q, r, rng);
    return stochastic_victim(q, r, subset_size_rule, rng);
  }

  /// Removes exactly one member from q and returns the rest.
  template <RandomSourceLike R>
  Population apply(Population q, const ReferencePoint& r, R& rng) const {
    const auto objs = objectives_of(q);
    const auto v = victim(std::span<const ObjectiveVector>(objs), r, rng);
    q.erase(q.begin() + static_cast<std::ptrdiff_t>(v));
    return q;
  }
};

/// Parses "deterministic" or "stochastic"; a fraction applies to the latter.
inline UpdateStrategy parse_strategy(const std::string& name,
                                     std::optional<double> fraction = std::nullopt) {
  if (name == "deterministic") {
    if (fraction) throw invalid_parameter("subset fraction applies only to 'stochastic'");
    return UpdateStrategy::deterministic();
  }
  if (name == "stochastic") {
    return fraction ? UpdateStrategy::stochastic_fraction(*fraction)
                    : UpdateStrategy::stochastic();
  }
  throw invalid_parameter("unknown strategy '" + name + "'");
}

/// Population Update: partition all of Q into fronts and drop a member of the
/// last front with the least hypervolume contribution.
template <RandomSourceLike R>
Population deterministic_update(Population q, const ReferencePoint& r, R& rng) {
  return UpdateStrategy::deterministic().apply(std::move(q), r, rng);
}

/// Stochastic Population Update: as above, but only a random subset of Q
/// (sized by the strategy's rule) competes for removal.
template <RandomSourceLike R>
Population stochastic_update(Population q, const ReferencePoint& r,
                             const UpdateStrategy& strategy, R& rng) {
  const auto objs = objectives_of(q);
  const auto v = stochastic_victim(std::span<const ObjectiveVector>(objs), r,
                                   strategy.subset_size_rule, rng);
  q.erase(q.begin() + static_cast<std::ptrdiff_t>(v));
  return q;
}

}  // namespace emoa

#endif  // EMOA_UPDATE_HPP_
