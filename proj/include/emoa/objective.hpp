#ifndef EMOA_OBJECTIVE_HPP_
#define EMOA_OBJECTIVE_HPP_

#include <compare>
#include <cstdint>
#include <ostream>

namespace emoa {

/// Bi-objective value (f1, f2), both maximized.
template <class T>
struct BasicObjectiveVector {
  using value_type = T;

  T f1{};
  T f2{};

  friend constexpr bool operator==(const BasicObjectiveVector&,
                                   const BasicObjectiveVector&) = default;
  /// Lexicographic order; only used for sorting and set storage, it has
  /// nothing to do with domination.
  friend constexpr auto operator<=>(const BasicObjectiveVector&,
                                    const BasicObjectiveVector&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BasicObjectiveVector& v) {
    return os << '(' << v.f1 << ',' << v.f2 << ')';
  }
};

/// Objective values are exact integers throughout the library.
using ObjectiveVector = BasicObjectiveVector<std::int64_t>;

/// Lower corner of the hypervolume region.
template <class T>
using BasicReferencePoint = BasicObjectiveVector<T>;

using ReferencePoint = BasicReferencePoint<std::int64_t>;

}  // namespace emoa

#endif  // EMOA_OBJECTIVE_HPP_
