#pragma once

// Subgroups of a Cayley-table group: closure, joins, normalizers and the
// full subgroup lattice.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "freerep/element_set.hpp"
#include "freerep/error.hpp"
#include "freerep/group.hpp"

namespace freerep {

class Subgroup {
 public:
  Subgroup() = default;

  /// Checks closure, identity, inverses and Lagrange before accepting.
  static Subgroup verified(const Group& parent, std::vector<Element> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || elements.front() != 0)
      throw Error(ErrorKind::NotAGroup, "subset does not contain the identity");
    ElementSet mask(parent.order());
    for (auto e : elements) {
      if (e >= parent.order()) throw Error(ErrorKind::NotAGroup, "element out of range");
      mask.set(e);
    }
    for (auto a : elements) {
      if (!mask.test(parent.inv(a))) throw Error(ErrorKind::NotAGroup, "subset not closed under inverse");
      for (auto b : elements)
        if (!mask.test(parent.mul(a, b)))
          throw Error(ErrorKind::NotAGroup, "subset not closed under multiplication");
    }
    if (parent.order() % elements.size() != 0) throw Error(ErrorKind::NotAGroup, "Lagrange violated");
    return Subgroup(parent, std::move(elements), std::move(mask), {});
  }

  const Group& parent() const noexcept { return parent_; }
  std::span<const Element> elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t index() const noexcept { return parent_.order() / elements_.size(); }
  bool contains(Element e) const noexcept { return mask_.test(e); }
  const ElementSet& mask() const noexcept { return mask_; }
  /// A generating set, when known (empty means "use all elements").
  std::span<const Element> generators() const noexcept { return gens_; }
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept { return elements_.size() == parent_.order(); }

  bool is_subgroup_of(const Subgroup& other) const noexcept {
    return parent_ == other.parent_ && mask_.is_subset_of(other.mask_);
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  Subgroup(Group parent, std::vector<Element> elements, ElementSet mask, std::vector<Element> gens)
      : parent_(std::move(parent)),
        elements_(std::move(elements)),
        mask_(std::move(mask)),
        gens_(std::move(gens)) {}

  friend Subgroup subgroup_generated(const Group&, std::span<const Element>);
  friend Subgroup subgroup_from_closed_set(const Group&, const ElementSet&, std::vector<Element>);

  Group parent_;
  std::vector<Element> elements_;
  ElementSet mask_;
  std::vector<Element> gens_;
};

/// Builds a subgroup from a set already known to be closed (internal use).
inline Subgroup subgroup_from_closed_set(const Group& g, const ElementSet& mask, std::vector<Element> gens) {
  return Subgroup(g, mask.to_vector(), mask, std::move(gens));
}

/// Breadth-first closure of the generators under right multiplication.
inline Subgroup subgroup_generated(const Group& g, std::span<const Element> gens) {
  ElementSet mask(g.order());
  std::vector<Element> kept;
  for (auto x : gens) {
    if (x >= g.order()) throw Error(ErrorKind::BadParams, "generator out of range");
    if (x != 0) kept.push_back(x);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  std::vector<Element> queue{0};
  mask.set(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto x = queue[head];
    for (auto s : kept) {
      auto y = g.mul(x, s);
      if (!mask.test(y)) {
        mask.set(y);
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return Subgroup(g, std::move(queue), std::move(mask), std::move(kept));
}

inline Subgroup subgroup_generated(const Group& g, std::initializer_list<Element> gens) {
  return subgroup_generated(g, std::span<const Element>(gens.begin(), gens.size()));
}

inline Subgroup trivial_subgroup(const Group& g) { return subgroup_generated(g, std::span<const Element>{}); }

inline Subgroup whole_group(const Group& g) {
  ElementSet all(g.order());
  for (Element e = 0; e < g.order(); ++e) all.set(e);
  return subgroup_from_closed_set(g, all, {});
}

/// Generators of H, falling back to all elements when none were recorded.
inline std::vector<Element> generating_set(const Subgroup& h) {
  if (!h.generators().empty() || h.is_trivial())
    return {h.generators().begin(), h.generators().end()};
  return {h.elements().begin() + 1, h.elements().end()};
}

/// Closure of H under additional elements: the join <H, extra>.
inline Subgroup extend(const Subgroup& h, std::span<const Element> extra) {
  auto gens = generating_set(h);
  for (auto x : extra)
    if (!h.contains(x)) gens.push_back(x);
  return subgroup_generated(h.parent(), gens);
}

inline Subgroup join(const Subgroup& a, const Subgroup& b) {
  if (!(a.parent() == b.parent())) throw Error(ErrorKind::ParentMismatch, "join across groups");
  if (b.is_subgroup_of(a)) return a;
  if (a.is_subgroup_of(b)) return b;
  auto extra = generating_set(b);
  return extend(a, extra);
}

inline Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  if (!(a.parent() == b.parent())) throw Error(ErrorKind::ParentMismatch, "intersection across groups");
  ElementSet mask(a.parent().order());
  for (auto e : a.elements())
    if (b.contains(e)) mask.set(e);
  return subgroup_from_closed_set(a.parent(), mask, {});
}

inline bool is_cyclic(const Subgroup& h) {
  for (auto e : h.elements())
    if (h.parent().element_order(e) == h.order()) return true;
  return false;
}

inline bool is_abelian(const Subgroup& h) {
  const auto& g = h.parent();
  auto gens = generating_set(h);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

/// x H x^-1
inline Subgroup conjugate(const Subgroup& h, Element x) {
  const auto& g = h.parent();
  ElementSet mask(g.order());
  std::vector<Element> gens;
  for (auto e : h.elements()) mask.set(g.conj(x, e));
  for (auto e : h.generators()) gens.push_back(g.conj(x, e));
  return subgroup_from_closed_set(g, mask, std::move(gens));
}

inline bool normalizes(Element x, const Subgroup& h) {
  const auto& g = h.parent();
  for (auto e : generating_set(h))
    if (!h.contains(g.conj(x, e))) return false;
  return true;
}

inline bool is_normal(const Subgroup& h) {
  // Conjugating by a generating set of G would need one; all elements is fine.
  for (Element x = 0; x < h.parent().order(); ++x)
    if (!normalizes(x, h)) return false;
  return true;
}

inline Subgroup normalizer(const Subgroup& h) {
  const auto& g = h.parent();
  ElementSet mask(g.order());
  for (Element x = 0; x < g.order(); ++x)
    if (normalizes(x, h)) mask.set(x);
  return subgroup_from_closed_set(g, mask, {});
}

/// Elements commuting with every element of H.
inline Subgroup centralizer(const Subgroup& h) {
  const auto& g = h.parent();
  auto gens = generating_set(h);
  ElementSet mask(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto e : gens)
      if (g.mul(x, e) != g.mul(e, x)) {
        ok = false;
        break;
      }
    if (ok) mask.set(x);
  }
  return subgroup_from_closed_set(g, mask, {});
}

/// Every cyclic subgroup exactly once, sorted by (order, elements).
inline std::vector<Subgroup> cyclic_subgroups(const Group& g) {
  std::vector<Subgroup> out;
  std::vector<std::uint8_t> covered(g.order(), 0);  // x covered once <x> is recorded
  for (Element x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    auto c = subgroup_generated(g, {x});
    for (auto y : c.elements())
      if (g.element_order(y) == c.order()) covered[y] = 1;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return std::lexicographical_compare(a.elements().begin(), a.elements().end(), b.elements().begin(),
                                        b.elements().end());
  });
  return out;
}

inline void sort_subgroups(std::vector<Subgroup>& v) {
  std::sort(v.begin(), v.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return std::lexicographical_compare(a.elements().begin(), a.elements().end(), b.elements().begin(),
                                        b.elements().end());
  });
}

/// The whole subgroup lattice: cyclic seeds closed under joins with cyclic
/// subgroups. Every subgroup is an iterated join of cyclic ones.
inline std::vector<Subgroup> all_subgroups(const Group& g, const Limits& limits = {},
                                           const CancelToken* token = nullptr) {
  if (g.order() > limits.subgroup_enumeration)
    throw Error(ErrorKind::CapExceeded, "all_subgroups: order " + std::to_string(g.order()) +
                                            " exceeds cap " + std::to_string(limits.subgroup_enumeration));
  auto cyclic = cyclic_subgroups(g);
  std::vector<Subgroup> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  for (auto& c : cyclic) {
    index.emplace(c.mask(), found.size());
    found.push_back(c);
  }
  std::vector<Element> cyclic_gen;
  for (auto& c : cyclic) cyclic_gen.push_back(c.is_trivial() ? 0 : c.generators().front());

  for (std::size_t i = 0; i < found.size(); ++i) {
    poll(token, "all_subgroups");
    if (found[i].is_whole()) continue;
    for (std::size_t c = 0; c < cyclic.size(); ++c) {
      auto x = cyclic_gen[c];
      if (found[i].contains(x)) continue;
      const Element extra[] = {x};
      auto j = extend(found[i], extra);
      if (index.emplace(j.mask(), found.size()).second) found.push_back(std::move(j));
    }
  }
  sort_subgroups(found);
  return found;
}

/// A subgroup repackaged as a standalone group, with the embedding into
/// the parent (embedding[local] = parent element).
struct SubgroupAsGroup {
  Group group;
  std::vector<Element> embedding;
};

inline SubgroupAsGroup as_group(const Subgroup& h, const Limits& limits = {}) {
  const auto& g = h.parent();
  std::vector<Element> local(g.order(), 0);
  auto elems = h.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<Element>(i);
  const auto n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = local[g.mul(elems[i], elems[j])];
  std::vector<std::string> labels;
  if (g.has_labels())
    for (auto e : elems) labels.push_back(g.labels()[e]);
  auto sub = group_from_table(std::move(table), n, std::move(labels),
                              "subgroup of order " + std::to_string(n) + " in " + g.origin(), limits);
  return {std::move(sub), std::vector<Element>(elems.begin(), elems.end())};
}

}  // namespace freerep
