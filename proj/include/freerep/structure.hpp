#pragma once

// Center, commutators, derived series, conjugacy classes, normal
// subgroups, Sylow subgroups, quotients and root counting.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "freerep/element_set.hpp"
#include "freerep/error.hpp"
#include "freerep/group.hpp"
#include "freerep/number_theory.hpp"
#include "freerep/subgroup.hpp"

namespace freerep {

inline Subgroup center(const Group& g) { return centralizer(whole_group(g)); }

/// [H, H], grown one new commutator at a time; each addition at least
/// doubles the subgroup, so there are O(log |H|) closures.
inline Subgroup commutator_subgroup(const Subgroup& h) {
  const auto& g = h.parent();
  auto result = trivial_subgroup(g);
  auto elems = h.elements();
  for (auto x : elems)
    for (auto y : elems) {
      auto c = g.commutator(x, y);
      if (!result.contains(c)) {
        const Element extra[] = {c};
        result = extend(result, extra);
      }
    }
  return result;
}

inline Subgroup commutator_subgroup(const Group& g) { return commutator_subgroup(whole_group(g)); }

/// G = G^(0) > G^(1) > ... until the series stabilises (last entry repeats once).
inline std::vector<Subgroup> derived_series(const Group& g) {
  std::vector<Subgroup> series{whole_group(g)};
  while (true) {
    auto next = commutator_subgroup(series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

inline bool is_solvable(const Group& g) { return derived_series(g).back().is_trivial(); }
inline bool is_perfect(const Group& g) { return commutator_subgroup(g).is_whole(); }

/// The last term of the derived series.
inline Subgroup perfect_core(const Group& g) { return derived_series(g).back(); }

/// Conjugacy classes, each sorted, listed by smallest member (identity first).
inline std::vector<std::vector<Element>> conjugacy_classes(const Group& g) {
  std::vector<std::vector<Element>> classes;
  std::vector<std::uint8_t> seen(g.order(), 0);
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<Element> cls;
    for (Element y = 0; y < g.order(); ++y) {
      auto c = g.conj(y, x);
      if (!seen[c]) {
        seen[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

/// Per-element conjugacy class sizes.
inline std::vector<std::size_t> class_sizes(const Group& g) {
  std::vector<std::size_t> sizes(g.order());
  for (auto& cls : conjugacy_classes(g))
    for (auto x : cls) sizes[x] = cls.size();
  return sizes;
}

/// Smallest normal subgroup containing `elements`.
inline Subgroup normal_closure(const Group& g, std::span<const Element> elements) {
  auto result = trivial_subgroup(g);
  for (auto x : elements)
    for (Element y = 0; y < g.order(); ++y) {
      auto c = g.conj(y, x);
      if (!result.contains(c)) {
        const Element extra[] = {c};
        result = extend(result, extra);
      }
    }
  return result;
}

/// Every normal subgroup: joins of normal closures of conjugacy classes.
/// A normal subgroup is the join of the normal closures of its elements,
/// so closing the class closures under joins reaches all of them.
inline std::vector<Subgroup> normal_subgroups(const Group& g, const CancelToken* token = nullptr) {
  std::vector<Subgroup> closures;
  std::unordered_set<ElementSet, ElementSetHash> closure_seen;
  for (auto& cls : conjugacy_classes(g)) {
    if (cls.front() == 0) continue;
    const Element rep[] = {cls.front()};
    auto n = normal_closure(g, rep);
    if (closure_seen.insert(n.mask()).second) closures.push_back(std::move(n));
  }
  std::vector<Subgroup> found{trivial_subgroup(g)};
  std::unordered_set<ElementSet, ElementSetHash> seen{found.front().mask()};
  for (std::size_t i = 0; i < found.size(); ++i) {
    poll(token, "normal_subgroups");
    for (auto& c : closures) {
      if (c.is_subgroup_of(found[i])) continue;
      auto j = join(found[i], c);
      if (seen.insert(j.mask()).second) found.push_back(std::move(j));
    }
  }
  sort_subgroups(found);
  return found;
}

/// A Sylow p-subgroup, grown from an order-p cyclic subgroup by repeatedly
/// adjoining an element of N(P) \ P whose p-th power lies in P.
inline Subgroup sylow_subgroup(const Group& g, std::size_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::BadParams, std::to_string(p) + " is not prime");
  const std::size_t target = p_part(g.order(), p);
  auto sylow = trivial_subgroup(g);
  if (target == 1) return sylow;
  for (Element x = 0; x < g.order(); ++x)
    if (g.element_order(x) == p) {
      sylow = subgroup_generated(g, {x});
      break;
    }
  while (sylow.order() < target) {
    auto norm = normalizer(sylow);
    bool grown = false;
    for (auto x : norm.elements()) {
      if (sylow.contains(x)) continue;
      if (sylow.contains(g.power(x, static_cast<long long>(p)))) {
        const Element extra[] = {x};
        sylow = extend(sylow, extra);
        grown = true;
        break;
      }
    }
    if (!grown) throw Error(ErrorKind::NotAGroup, "Sylow growth stalled; table is not a group");
  }
  return sylow;
}

/// Distinct conjugates x P x^-1.
inline std::vector<Subgroup> conjugates(const Subgroup& h) {
  std::vector<Subgroup> out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (Element x = 0; x < h.parent().order(); ++x) {
    auto c = conjugate(h, x);
    if (seen.insert(c.mask()).second) out.push_back(std::move(c));
  }
  return out;
}

struct Homomorphism {
  Group source;
  Group target;
  std::vector<Element> map;

  Element operator()(Element x) const { return map[x]; }

  bool verify() const {
    if (map.size() != source.order() || map[0] != 0) return false;
    for (auto v : map)
      if (v >= target.order()) return false;
    for (Element x = 0; x < source.order(); ++x)
      for (Element y = 0; y < source.order(); ++y)
        if (map[source.mul(x, y)] != target.mul(map[x], map[y])) return false;
    return true;
  }

  bool is_bijective() const {
    if (source.order() != target.order()) return false;
    std::vector<std::uint8_t> hit(target.order(), 0);
    for (auto v : map)
      if (hit[v]++) return false;
    return true;
  }

  Subgroup kernel() const {
    ElementSet mask(source.order());
    for (Element x = 0; x < source.order(); ++x)
      if (map[x] == 0) mask.set(x);
    return subgroup_from_closed_set(source, mask, {});
  }
};

/// G/N on left cosets (coset of the identity first) with the projection.
inline std::pair<Group, Homomorphism> quotient_group(const Group& g, const Subgroup& n,
                                                     const Limits& limits = {}) {
  if (!(n.parent() == g)) throw Error(ErrorKind::ParentMismatch, "normal subgroup of another group");
  if (!is_normal(n)) throw Error(ErrorKind::NotNormal, "subgroup of order " + std::to_string(n.order()) + " is not normal");
  constexpr Element unset = ~Element{0};
  std::vector<Element> coset(g.order(), unset);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (coset[x] != unset) continue;
    auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (auto h : n.elements()) coset[g.mul(x, h)] = id;
  }
  const auto q = reps.size();
  std::vector<Element> table(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) table[i * q + j] = coset[g.mul(reps[i], reps[j])];
  std::vector<std::string> labels;
  if (g.has_labels())
    for (auto r : reps) labels.push_back(g.name(r) + "N");
  auto quotient = group_from_table(std::move(table), q, std::move(labels),
                                   g.origin() + " / N(" + std::to_string(n.order()) + ")", limits);
  Homomorphism proj{g, quotient, std::move(coset)};
  return {std::move(quotient), std::move(proj)};
}

inline bool is_conjugation_closed(const Group& g, std::span<const Element> set) {
  ElementSet mask(g.order());
  for (auto c : set) mask.set(c);
  for (auto c : set)
    for (Element y = 0; y < g.order(); ++y)
      if (!mask.test(g.conj(y, c))) return false;
  return true;
}

/// |{x : x^n in C}| for a conjugation-closed set C.
inline std::size_t count_nth_roots(const Group& g, std::span<const Element> set, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadParams, "n must be positive");
  if (!is_conjugation_closed(g, set))
    throw Error(ErrorKind::NotConjugationClosed, "root target set is not a union of conjugacy classes");
  ElementSet mask(g.order());
  for (auto c : set) mask.set(c);
  std::size_t count = 0;
  for (Element x = 0; x < g.order(); ++x)
    if (mask.test(g.power(x, static_cast<long long>(n)))) ++count;
  return count;
}

/// Elements of order exactly 2.
inline std::vector<Element> involutions(const Group& g) {
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x)
    if (g.element_order(x) == 2) out.push_back(x);
  return out;
}

}  // namespace freerep
