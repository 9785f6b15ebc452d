#pragma once

// Brute-force checks of the structure of SL2(F_p): cyclic-subgroup counts,
// eigenvalues, conjugacy, normal subgroups, the normalizer of a unipotent
// subgroup, and noncyclic subgroups of order p r.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freerep/binary_polyhedral.hpp"
#include "freerep/classifier.hpp"
#include "freerep/constructors.hpp"
#include "freerep/error.hpp"
#include "freerep/isomorphism.hpp"
#include "freerep/number_theory.hpp"
#include "freerep/structure.hpp"
#include "freerep/subgroup.hpp"

namespace freerep {

struct CensusRow {
  std::size_t m = 1;
  std::size_t predicted = 0;
  std::size_t observed = 0;
  bool match = false;
};

/// Number of cyclic subgroups of order m in SL2(F_p), p odd, in closed form.
inline std::size_t predicted_cyclic_count(std::size_t p, std::size_t m) {
  if (m == 1 || m == 2) return 1;
  if ((p - 1) % m == 0) return p * (p + 1) / 2;
  if ((2 * p) % m == 0) return p + 1;
  if ((p + 1) % m == 0) return p * (p - 1) / 2;
  return 0;
}

namespace detail {

inline void require_odd_prime(std::int64_t p) {
  if (p < 3 || !is_prime(static_cast<std::size_t>(p)))
    throw Error(ErrorKind::BadParams, "census needs an odd prime, got " + std::to_string(p));
}

inline std::map<std::size_t, std::vector<Subgroup>> cyclic_by_order(const Group& g) {
  std::map<std::size_t, std::vector<Subgroup>> out;
  for (auto& c : cyclic_subgroups(g)) out[c.order()].push_back(c);
  return out;
}

}  // namespace detail

/// One row per divisor m of |SL2(F_p)|.
inline std::vector<CensusRow> cyclic_census(std::int64_t p, const Limits& limits = {}) {
  detail::require_odd_prime(p);
  auto g = sl2(p, limits);
  auto by_order = detail::cyclic_by_order(g);
  std::vector<CensusRow> rows;
  for (auto m : divisors(g.order())) {
    CensusRow r;
    r.m = m;
    r.predicted = predicted_cyclic_count(static_cast<std::size_t>(p), m);
    auto it = by_order.find(m);
    r.observed = it == by_order.end() ? 0 : it->second.size();
    r.match = r.predicted == r.observed;
    rows.push_back(r);
  }
  return rows;
}

/// Number of distinct roots of x^2 - t x + 1 in F_p.
inline int eigenvalue_count(const MatrixOverFp& a) {
  int count = 0;
  for (std::int64_t x = 0; x < a.p; ++x)
    if (mod(x * x - a.trace() * x + 1, a.p) == 0) ++count;
  return count;
}

/// For alpha != +-I: two eigenvalues iff ord | p-1, one iff ord | 2p, none
/// iff ord | p+1.
inline bool trichotomy_check(std::int64_t p, const Limits& limits = {}) {
  detail::require_odd_prime(p);
  auto model = sl2_model(p, limits);
  const auto& g = model.group;
  const auto q = static_cast<std::size_t>(p);
  for (Element x = 0; x < g.order(); ++x) {
    const auto& a = model.matrices[x];
    const auto ord = g.element_order(x);
    if (ord <= 2) continue;  // +-I
    const int ev = eigenvalue_count(a);
    const bool two = (q - 1) % ord == 0, one = (2 * q) % ord == 0, none = (q + 1) % ord == 0;
    if ((ev == 2) != two || (ev == 1) != one || (ev == 0) != none) return false;
  }
  return true;
}

/// Some x with x H x^-1 = K, if any.
inline std::optional<Element> find_conjugator(const Subgroup& h, const Subgroup& k) {
  const auto& g = h.parent();
  if (h.order() != k.order()) return std::nullopt;
  for (Element x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto y : h.elements())
      if (!k.contains(g.conj(x, y))) {
        ok = false;
        break;
      }
    if (ok) return x;
  }
  return std::nullopt;
}

struct ConjugacyReport {
  bool cyclic_conjugate = true;          // equal-order cyclic subgroups are conjugate
  bool intersections_in_center = true;   // distinct equal-order ones meet inside {+-I}
  bool normal_subgroups_ok = true;       // p >= 5: exactly 1, {+-I}, G
  bool binary_tetrahedral_ok = true;     // p = 3: isomorphic to 2T, normal Sylow 2
  bool ok() const {
    return cyclic_conjugate && intersections_in_center && normal_subgroups_ok && binary_tetrahedral_ok;
  }
};

inline ConjugacyReport conjugacy_and_normals_check(std::int64_t p, const Limits& limits = {}) {
  detail::require_odd_prime(p);
  auto g = sl2(p, limits);
  ConjugacyReport r;
  auto z = center(g);
  for (auto& [m, subs] : detail::cyclic_by_order(g)) {
    auto orbit = conjugates(subs.front());
    if (orbit.size() != subs.size()) r.cyclic_conjugate = false;
    for (std::size_t i = 0; i < subs.size(); ++i)
      for (std::size_t j = i + 1; j < subs.size(); ++j)
        for (auto x : subs[i].elements())
          if (subs[j].contains(x) && !z.contains(x)) r.intersections_in_center = false;
  }
  if (p >= 5) {
    auto normals = normal_subgroups(g);
    sort_subgroups(normals);
    r.normal_subgroups_ok = normals.size() == 3 && normals[0].is_trivial() && normals[1] == z && z.order() == 2 &&
                            normals[2].is_whole();
  } else {
    auto sylow = sylow_subgroup(g, 2);
    r.binary_tetrahedral_ok = is_isomorphic(g, binary_tetrahedral_quaternions().group).has_value() &&
                              is_normal(sylow) && conjugates(sylow).size() == 1;
  }
  return r;
}

/// N(<[[1,1],[0,1]]>) is the upper-triangular group of order (p-1)p, and
/// diag(a, 1/a) acts on [[1,b],[0,1]] by b -> a^2 b.
inline bool normalizer_structure_check(std::int64_t p, const Limits& limits = {}) {
  detail::require_odd_prime(p);
  auto model = sl2_model(p, limits);
  const auto& g = model.group;
  std::map<std::array<std::int64_t, 4>, Element> index;
  for (Element x = 0; x < g.order(); ++x) index[model.matrices[x].e] = x;
  auto find = [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return index.at({mod(a, p), mod(b, p), mod(c, p), mod(d, p)});
  };
  auto u = subgroup_generated(g, {find(1, 1, 0, 1)});
  auto n = normalizer(u);
  const auto q = static_cast<std::size_t>(p);
  if (u.order() != q || n.order() != (q - 1) * q) return false;
  for (Element x = 0; x < g.order(); ++x)
    if (n.contains(x) != (model.matrices[x].e[2] == 0)) return false;
  for (std::int64_t a = 1; a < p; ++a) {
    auto d = find(a, 0, 0, inverse_mod(a, p));
    for (std::int64_t b = 0; b < p; ++b)
      if (g.conj(d, find(1, b, 0, 1)) != find(1, a * a * b, 0, 1)) return false;
  }
  return true;
}

/// A noncyclic subgroup of order p r (r an odd prime, r != p), by scanning
/// pairs of generators of subgroups of order p and r.
inline std::optional<Subgroup> fermat_pq_witness(std::int64_t p, const Limits& limits = {},
                                                 const CancelToken* token = nullptr) {
  detail::require_odd_prime(p);
  auto g = sl2(p, limits);
  const auto q = static_cast<std::size_t>(p);
  std::vector<Element> order_p;
  std::map<std::size_t, std::vector<Element>> order_r;
  for (auto& c : cyclic_subgroups(g)) {
    const auto m = c.order();
    if (!is_prime(m) || m == 2) continue;
    Element gen = c.elements()[1];
    if (m == q) order_p.push_back(gen);
    else order_r[m].push_back(gen);
  }
  for (auto& [r, gens] : order_r)
    for (auto x : order_p) {
      poll(token, "fermat_pq_witness");
      for (auto y : gens) {
        auto h = detail::bounded_join(g, x, y, q * r);
        if (h && h->order() == q * r && !is_cyclic(*h)) return h;
      }
    }
  return std::nullopt;
}

}  // namespace freerep
