#pragma once

// Isomorphism testing: order-statistics fingerprint, then backtracking over
// images of a generating sequence.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "freerep/error.hpp"
#include "freerep/group.hpp"
#include "freerep/structure.hpp"
#include "freerep/subgroup.hpp"

namespace freerep {

/// Per-element invariant (element order, conjugacy class size). The
/// centralizer order is |G| / class size, so it is implied.
inline std::vector<std::uint64_t> element_signatures(const Group& g) {
  auto sizes = class_sizes(g);
  std::vector<std::uint64_t> sig(g.order());
  for (Element x = 0; x < g.order(); ++x)
    sig[x] = (std::uint64_t{g.element_order(x)} << 32) | sizes[x];
  return sig;
}

/// Sorted multiset of element signatures.
inline std::vector<std::uint64_t> fingerprint(const Group& g) {
  auto sig = element_signatures(g);
  std::sort(sig.begin(), sig.end());
  return sig;
}

namespace detail {

class IsoSearch {
 public:
  IsoSearch(const Group& g, const Group& h, const CancelToken* token) : g_(g), h_(h), token_(token) {
    sig_g_ = element_signatures(g);
    sig_h_ = element_signatures(h);
    for (Element y = 0; y < h.order(); ++y) by_sig_[sig_h_[y]].push_back(y);
    choose_generators();
  }

  std::optional<Homomorphism> run() {
    images_.assign(gens_.size(), 0);
    if (gens_.empty()) map_.assign(1, 0);
    if (!assign(0)) return std::nullopt;
    Homomorphism hom{g_, h_, map_};
    if (!hom.verify() || !hom.is_bijective()) return std::nullopt;
    return hom;
  }

 private:
  void choose_generators() {
    std::vector<Element> order(g_.order());
    for (Element x = 0; x < g_.order(); ++x) order[x] = x;
    std::sort(order.begin(), order.end(), [&](Element a, Element b) {
      auto ca = by_sig_[sig_g_[a]].size(), cb = by_sig_[sig_g_[b]].size();
      if (ca != cb) return ca < cb;
      if (g_.element_order(a) != g_.element_order(b)) return g_.element_order(a) > g_.element_order(b);
      return a < b;
    });
    auto sub = trivial_subgroup(g_);
    for (auto x : order) {
      if (sub.is_whole()) break;
      if (sub.contains(x)) continue;
      gens_.push_back(x);
      const Element extra[] = {x};
      sub = extend(sub, extra);
    }
  }

  // Extends the map over <gens_[0..level]>; false on any inconsistency.
  bool propagate(std::size_t level) {
    constexpr Element unset = ~Element{0};
    map_.assign(g_.order(), unset);
    used_.assign(h_.order(), 0);
    map_[0] = 0;
    used_[0] = 1;
    std::vector<Element> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto x = queue[head];
      for (std::size_t j = 0; j <= level; ++j) {
        auto y = g_.mul(x, gens_[j]);
        auto v = h_.mul(map_[x], images_[j]);
        if (map_[y] == unset) {
          if (used_[v] || sig_g_[y] != sig_h_[v]) return false;
          map_[y] = v;
          used_[v] = 1;
          queue.push_back(y);
        } else if (map_[y] != v) {
          return false;
        }
      }
    }
    return true;
  }

  bool assign(std::size_t level) {
    if (level == gens_.size()) return true;
    poll(token_, "is_isomorphic");
    for (auto y : by_sig_[sig_g_[gens_[level]]]) {
      images_[level] = y;
      if (propagate(level) && assign(level + 1)) return true;
    }
    return false;
  }

  const Group& g_;
  const Group& h_;
  const CancelToken* token_;
  std::vector<std::uint64_t> sig_g_, sig_h_;
  std::unordered_map<std::uint64_t, std::vector<Element>> by_sig_;
  std::vector<Element> gens_;
  std::vector<Element> images_;
  std::vector<Element> map_;
  std::vector<std::uint8_t> used_;
};

}  // namespace detail

/// An isomorphism G -> H when one exists. The returned map has been checked
/// to be a bijective homomorphism.
inline std::optional<Homomorphism> is_isomorphic(const Group& g, const Group& h,
                                                 const CancelToken* token = nullptr) {
  if (g.order() != h.order()) return std::nullopt;
  if (fingerprint(g) != fingerprint(h)) return std::nullopt;
  return detail::IsoSearch(g, h, token).run();
}

}  // namespace freerep
