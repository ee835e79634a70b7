#ifndef EMOA_PROBLEMS_HPP_
#define EMOA_PROBLEMS_HPP_

#include "emoa/core.hpp"
#include "emoa/objective.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace emoa {

/// OneJumpZeroJump instance. Valid when 2 <= k < n/2.
struct OjzjParams {
  std::size_t n = 0;
  std::size_t k = 0;

  static OjzjParams make(std::size_t n, std::size_t k) {
    OjzjParams p{n, k};
    p.validate();
    return p;
  }

  void validate() const {
    if (k < 2 || 2 * k >= n) {
      throw invalid_parameter("OneJumpZeroJump requires 2 <= k < n/2 (got n=" +
                              std::to_string(n) + ", k=" + std::to_string(k) + ")");
    }
  }

  friend bool operator==(const OjzjParams&, const OjzjParams&) = default;
};

namespace detail {

// Jump on a count of "good" bits: k + c if c <= n-k or c = n, else n - c.
constexpr std::int64_t jump_of_count(std::size_t count, std::size_t n, std::size_t k) {
  const auto c = static_cast<std::int64_t>(count);
  const auto nn = static_cast<std::int64_t>(n);
  const auto kk = static_cast<std::int64_t>(k);
  if (count + k <= n || count == n) return kk + c;
  return nn - c;
}

inline void require_length(const Bitstring& x, std::size_t n, const char* who) {
  if (x.size() != n) {
    throw invalid_parameter(std::string(who) + ": bitstring length " +
                            std::to_string(x.size()) + " != n=" + std::to_string(n));
  }
}

}  // namespace detail

/// Jump function g(x). Only needs k in [2..n-1], so it does not require a
/// full OneJumpZeroJump parameter set.
inline std::int64_t jump_evaluate(const Bitstring& x, std::size_t n, std::size_t k) {
  detail::require_length(x, n, "jump_evaluate");
  if (k < 2 || k + 1 > n) throw invalid_parameter("jump_evaluate: k must be in [2..n-1]");
  return detail::jump_of_count(x.count_ones(), n, k);
}

inline std::int64_t jump_evaluate(const Bitstring& x, const OjzjParams& p) {
  return jump_evaluate(x, p.n, p.k);
}

/// Objective vector of a OneJumpZeroJump instance, as a function of the number
/// of 1-bits alone.
constexpr ObjectiveVector ojzj_of_ones(std::size_t ones, const OjzjParams& p) {
  return {detail::jump_of_count(ones, p.n, p.k),
          detail::jump_of_count(p.n - ones, p.n, p.k)};
}

inline ObjectiveVector ojzj_evaluate(const Bitstring& x, const OjzjParams& p) {
  detail::require_length(x, p.n, "ojzj_evaluate");
  return ojzj_of_ones(x.count_ones(), p);
}

/// Closed-form Pareto set and front of OneJumpZeroJump.
class ParetoOracle {
public:
  explicit ParetoOracle(OjzjParams p) : params_(p) {
    p.validate();
    const auto n = static_cast<std::int64_t>(p.n);
    const auto k = static_cast<std::int64_t>(p.k);
    front_.push_back({k, n + k});
    for (std::int64_t a = 2 * k; a <= n; ++a) {
      inner_front_.push_back({a, n + 2 * k - a});
      front_.push_back({a, n + 2 * k - a});
    }
    front_.push_back({n + k, k});
    std::sort(front_.begin(), front_.end());
    // Front vectors have distinct f1 values, so f1 alone indexes them.
    min_f1_ = front_.front().f1;
    slot_.assign(static_cast<std::size_t>(front_.back().f1 - min_f1_ + 1), npos);
    for (std::size_t i = 0; i < front_.size(); ++i) {
      slot_[static_cast<std::size_t>(front_[i].f1 - min_f1_)] = i;
    }
  }

  [[nodiscard]] const OjzjParams& params() const noexcept { return params_; }

  /// All Pareto-optimal objective vectors, sorted by f1 ascending.
  [[nodiscard]] const std::vector<ObjectiveVector>& front() const noexcept {
    return front_;
  }

  /// The front without its two extreme points (k, n+k) and (n+k, k).
  [[nodiscard]] const std::vector<ObjectiveVector>& inner_front() const noexcept {
    return inner_front_;
  }

  [[nodiscard]] std::optional<std::size_t> index_of(const ObjectiveVector& v) const {
    const auto off = v.f1 - min_f1_;
    if (off < 0 || off >= static_cast<std::int64_t>(slot_.size())) return std::nullopt;
    const std::size_t i = slot_[static_cast<std::size_t>(off)];
    if (i == npos || front_[i] != v) return std::nullopt;
    return i;
  }

  [[nodiscard]] bool in_front(const ObjectiveVector& v) const {
    return index_of(v).has_value();
  }

  [[nodiscard]] bool in_inner_front(const ObjectiveVector& v) const {
    return std::find(inner_front_.begin(), inner_front_.end(), v) != inner_front_.end();
  }

  /// Membership in the Pareto set: |x|_1 in [k..n-k] or |x|_1 in {0, n}.
  [[nodiscard]] bool in_pareto_set(const Bitstring& x) const {
    detail::require_length(x, params_.n, "in_pareto_set");
    const std::size_t ones = x.count_ones();
    return in_inner_pareto_set(x) || ones == 0 || ones == params_.n;
  }

  [[nodiscard]] bool in_inner_pareto_set(const Bitstring& x) const {
    detail::require_length(x, params_.n, "in_inner_pareto_set");
    const std::size_t ones = x.count_ones();
    return ones >= params_.k && ones + params_.k <= params_.n;
  }

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  OjzjParams params_;
  std::vector<ObjectiveVector> front_;
  std::vector<ObjectiveVector> inner_front_;
  std::int64_t min_f1_ = 0;
  std::vector<std::size_t> slot_;
};

inline ParetoOracle pareto_front(const OjzjParams& p) { return ParetoOracle(p); }

inline constexpr std::size_t brute_force_max_n = 20;

/// Exhaustive Pareto front: evaluates all 2^n strings and keeps the
/// non-dominated objective vectors. Independent of ParetoOracle and of the
/// ranking module.
inline std::set<ObjectiveVector> brute_force_pareto(const OjzjParams& p) {
  p.validate();
  if (p.n > brute_force_max_n) {
    throw resource_limit("brute_force_pareto: n=" + std::to_string(p.n) +
                         " exceeds enumeration limit " +
                         std::to_string(brute_force_max_n));
  }
  std::set<ObjectiveVector> values;
  const std::uint64_t total = std::uint64_t{1} << p.n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Bitstring x(p.n);
    for (std::size_t i = 0; i < p.n; ++i) x.set(i, ((mask >> i) & 1U) != 0);
    values.insert(ojzj_evaluate(x, p));
  }
  std::set<ObjectiveVector> front;
  for (const auto& v : values) {
    const bool dominated = std::any_of(values.begin(), values.end(), [&](const auto& u) {
      return u.f1 >= v.f1 && u.f2 >= v.f2 && (u.f1 > v.f1 || u.f2 > v.f2);
    });
    if (!dominated) front.insert(v);
  }
  return front;
}

/********************************************************************************
 * Problem registry
 *******************************************************************************/

/// Problem selector as it arrives from configuration or the command line.
struct ProblemSpec {
  std::string name = "ojzj";
  std::size_t n = 0;
  std::size_t k = 0;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// A bi-objective pseudo-Boolean problem together with what the optimizer
/// needs to run it: evaluation, the Pareto oracle used for termination and a
/// reference point that every solution weakly dominates.
struct BiObjectiveProblem {
  std::string name;
  std::size_t n = 0;
  std::function<ObjectiveVector(const Bitstring&)> evaluate;
  ParetoOracle oracle;
  ReferencePoint reference{0, 0};
};

using ProblemFactory = std::function<BiObjectiveProblem(const ProblemSpec&)>;

inline const std::map<std::string, ProblemFactory>& problem_registry() {
  static const std::map<std::string, ProblemFactory> registry{
      {"ojzj",
       [](const ProblemSpec& spec) {
         const auto p = OjzjParams::make(spec.n, spec.k);
         return BiObjectiveProblem{
             "ojzj", p.n, [p](const Bitstring& x) { return ojzj_evaluate(x, p); },
             ParetoOracle(p), ReferencePoint{0, 0}};
       }},
  };
  return registry;
}

inline BiObjectiveProblem make_problem(const ProblemSpec& spec) {
  const auto& registry = problem_registry();
  auto it = registry.find(spec.name);
  if (it == registry.end()) {
    throw invalid_parameter("unknown problem '" + spec.name + "'");
  }
  return it->second(spec);
}

}  // namespace emoa

#endif  // EMOA_PROBLEMS_HPP_
