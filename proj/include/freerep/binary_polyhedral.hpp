#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "freerep/constructors.hpp"
#include "freerep/error.hpp"
#include "freerep/group.hpp"
#include "freerep/quaternion.hpp"

namespace freerep {

namespace detail {

inline Group with_origin(const Group& g, std::string origin, const Limits& limits) {
  std::vector<Element> table(g.table().begin(), g.table().end());
  std::vector<std::string> labels(g.labels().begin(), g.labels().end());
  return group_from_table(std::move(table), g.order(), std::move(labels), std::move(origin), limits);
}

}  // namespace detail

/// 2T, delivered as SL2(F_3).
inline Group binary_tetrahedral(const Limits& limits = {}) { return detail::with_origin(sl2(3, limits), "2T", limits); }

/// 2O, 48 unit quaternions over Q(sqrt 2).
inline Group binary_octahedral(const Limits& limits = {}) { return binary_octahedral_quaternions(limits).group; }

/// 2I, delivered as SL2(F_5).
inline Group binary_icosahedral(const Limits& limits = {}) { return detail::with_origin(sl2(5, limits), "2I", limits); }

/// 2D_n of order 4n, unit quaternions over Q(zeta_4n).
inline Group binary_dihedral(std::size_t n, const Limits& limits = {}) {
  if (n < 2) throw Error(ErrorKind::BadParams, "2D_n needs n >= 2");
  if (4 * n > limits.group_order)
    throw Error(ErrorKind::CapExceeded, "2D" + std::to_string(n) + " has order " + std::to_string(4 * n));
  return binary_dihedral_quaternions(n, limits).group;
}

inline Group binary_polyhedral(BinaryKind kind, std::size_t n = 0, const Limits& limits = {}) {
  switch (kind) {
    case BinaryKind::BinaryTetrahedral: return binary_tetrahedral(limits);
    case BinaryKind::BinaryOctahedral: return binary_octahedral(limits);
    case BinaryKind::BinaryIcosahedral: return binary_icosahedral(limits);
    case BinaryKind::BinaryDihedral: return binary_dihedral(n, limits);
    case BinaryKind::Cyclic: break;
  }
  throw Error(ErrorKind::BadParams, "not a binary polyhedral kind");
}

}  // namespace freerep
