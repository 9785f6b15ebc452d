#pragma once

// Finite groups as validated Cayley tables with the identity at index 0.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "freerep/element_set.hpp"
#include "freerep/error.hpp"

namespace freerep {

namespace detail {

struct GroupData {
  std::size_t n = 0;
  std::vector<Element> table;  // row-major, table[i*n + j] = g_i g_j
  std::vector<Element> inverse;
  std::vector<std::uint32_t> orders;
  std::vector<std::string> labels;  // empty or size n
  std::string origin;
};

}  // namespace detail

/// Immutable handle to a validated group. Copies share the table; two
/// handles compare equal only when they refer to the same constructed group.
class Group {
 public:
  Group() = default;

  std::size_t order() const noexcept { return d_->n; }

  Element mul(Element a, Element b) const noexcept { return d_->table[std::size_t{a} * d_->n + b]; }
  Element inv(Element a) const noexcept { return d_->inverse[a]; }

  /// g x g^-1
  Element conj(Element g, Element x) const noexcept { return mul(mul(g, x), inv(g)); }
  /// x^-1 y^-1 x y
  Element commutator(Element x, Element y) const noexcept {
    return mul(mul(inv(x), inv(y)), mul(x, y));
  }

  Element power(Element g, long long k) const noexcept {
    auto ord = static_cast<long long>(d_->orders[g]);
    k %= ord;
    if (k < 0) k += ord;
    Element result = 0;
    Element base = g;
    while (k > 0) {
      if (k & 1) result = mul(result, base);
      base = mul(base, base);
      k >>= 1;
    }
    return result;
  }

  std::size_t element_order(Element g) const noexcept { return d_->orders[g]; }

  std::span<const Element> row(Element a) const noexcept {
    return {d_->table.data() + std::size_t{a} * d_->n, d_->n};
  }
  std::span<const Element> table() const noexcept { return d_->table; }

  bool has_labels() const noexcept { return !d_->labels.empty(); }
  std::span<const std::string> labels() const noexcept { return d_->labels; }
  std::string name(Element g) const {
    return has_labels() ? d_->labels[g] : "#" + std::to_string(g);
  }
  const std::string& origin() const noexcept { return d_->origin; }

  bool is_abelian() const noexcept {
    for (Element i = 0; i < order(); ++i)
      for (Element j = i + 1; j < order(); ++j)
        if (mul(i, j) != mul(j, i)) return false;
    return true;
  }

  bool valid() const noexcept { return static_cast<bool>(d_); }

  friend bool operator==(const Group& a, const Group& b) noexcept { return a.d_ == b.d_; }

 private:
  explicit Group(std::shared_ptr<const detail::GroupData> d) : d_(std::move(d)) {}
  friend Group group_from_table(std::vector<Element>, std::size_t, std::vector<std::string>,
                                std::string, const Limits&);

  std::shared_ptr<const detail::GroupData> d_;
};

namespace detail {

inline std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace detail

/// Validates a raw multiplication table and relocates the identity to 0.
/// Throws NotAGroup naming the first failing element, pair or triple.
inline Group group_from_table(std::vector<Element> table, std::size_t n,
                              std::vector<std::string> labels, std::string origin,
                              const Limits& limits = {}) {
  if (n == 0) throw Error(ErrorKind::NotAGroup, "empty table");
  if (n > limits.group_order)
    throw Error(ErrorKind::CapExceeded,
                "group order " + std::to_string(n) + " exceeds cap " + std::to_string(limits.group_order));
  if (table.size() != n * n) throw Error(ErrorKind::NotAGroup, "table is not n x n");
  if (!labels.empty() && labels.size() != n) throw Error(ErrorKind::NotAGroup, "label count mismatch");
  for (auto v : table)
    if (v >= n) throw Error(ErrorKind::NotAGroup, "entry out of range: " + std::to_string(v));

  auto at = [&](std::size_t i, std::size_t j) { return table[i * n + j]; };

  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = at(e, j) == j && at(j, e) == j;
    if (ok) identity = e;
  }
  if (identity == n) throw Error(ErrorKind::NotAGroup, "no two-sided identity");

  if (identity != 0) {
    std::vector<Element> swap(n);
    std::iota(swap.begin(), swap.end(), Element{0});
    std::swap(swap[0], swap[identity]);
    std::vector<Element> relocated(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) relocated[swap[i] * n + swap[j]] = swap[at(i, j)];
    table = std::move(relocated);
    if (!labels.empty()) std::swap(labels[0], labels[identity]);
  }

  std::vector<std::uint8_t> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[at(i, j)]++) throw Error(ErrorKind::NotAGroup, "row " + std::to_string(i) + " repeats an entry");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[at(j, i)]++) throw Error(ErrorKind::NotAGroup, "column " + std::to_string(i) + " repeats an entry");
    }
  }

  std::vector<Element> inverse(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = 0;
    while (at(i, j) != 0) ++j;
    if (at(j, i) != 0)
      throw Error(ErrorKind::NotAGroup, "element " + std::to_string(i) + " has no two-sided inverse");
    inverse[i] = static_cast<Element>(j);
  }

  if (n <= limits.full_associativity) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto ij = at(i, j);
        for (std::size_t k = 0; k < n; ++k)
          if (at(ij, k) != at(i, at(j, k)))
            throw Error(ErrorKind::NotAGroup, "associativity fails at " + detail::triple(i, j, k));
      }
  } else {
    std::mt19937_64 rng(limits.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    // 10 n random pairs (i, j), each against every k: 10 n^2 triples.
    for (std::size_t s = 0; s < 10 * n; ++s) {
      const std::size_t i = pick(rng), j = pick(rng), ij = at(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (at(ij, k) != at(i, at(j, k)))
          throw Error(ErrorKind::NotAGroup, "associativity fails at " + detail::triple(i, j, k));
    }
  }

  std::vector<std::uint32_t> orders(n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    std::uint32_t k = 1;
    std::size_t x = g;
    while (x != 0) {
      x = at(x, g);
      ++k;
    }
    orders[g] = k;
  }

  auto data = std::make_shared<detail::GroupData>();
  data->n = n;
  data->table = std::move(table);
  data->inverse = std::move(inverse);
  data->orders = std::move(orders);
  data->labels = std::move(labels);
  data->origin = std::move(origin);
  return Group(std::move(data));
}

/// Tabulates `mult` on [0,n)^2 and validates the result.
inline Group build_group(const std::function<Element(Element, Element)>& mult, std::size_t n,
                         std::vector<std::string> labels = {}, std::string origin = "oracle",
                         const Limits& limits = {}) {
  if (n == 0) throw Error(ErrorKind::NotAGroup, "order must be positive");
  if (n > limits.group_order)
    throw Error(ErrorKind::CapExceeded,
                "group order " + std::to_string(n) + " exceeds cap " + std::to_string(limits.group_order));
  std::vector<Element> table(n * n);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) table[std::size_t{i} * n + j] = mult(i, j);
  return group_from_table(std::move(table), n, std::move(labels), std::move(origin), limits);
}

inline std::size_t element_order(const Group& g, Element x) { return g.element_order(x); }

}  // namespace freerep
