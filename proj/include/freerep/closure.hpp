#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "freerep/error.hpp"
#include "freerep/group.hpp"

namespace freerep {

/// Elements of a concrete multiplicative group (identity first, then in
/// breadth-first discovery order) and its Cayley table.
template <class T>
struct ClosureResult {
  std::vector<T> elements;
  std::vector<Element> table;
};

/// Closes `gens` under `mul` starting from `identity`. T needs operator<, and
/// `mul` must be associative; the table is then derived from the action of
/// the generators, so only n |gens| products are formed.
/// Throws CapExceeded once more than `cap` elements appear.
template <class T, class Mul>
ClosureResult<T> close_under(const T& identity, const std::vector<T>& gens, Mul mul, std::size_t cap,
                             const char* what) {
  std::map<T, Element> index;
  ClosureResult<T> out;
  out.elements.push_back(identity);
  index.emplace(identity, 0);
  // right[k][x] = x * gens[k]; each new element is parent * gens[via].
  std::vector<std::vector<Element>> right(gens.size());
  std::vector<Element> parent{0};
  std::vector<std::size_t> via{0};
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      T y = mul(out.elements[head], gens[k]);
      auto it = index.find(y);
      if (it == index.end()) {
        if (out.elements.size() >= cap)
          throw Error(ErrorKind::CapExceeded, std::string(what) + ": generated set exceeds cap " + std::to_string(cap));
        it = index.emplace(y, static_cast<Element>(out.elements.size())).first;
        out.elements.push_back(std::move(y));
        parent.push_back(static_cast<Element>(head));
        via.push_back(k);
      }
      right[k].push_back(it->second);
    }
  }
  // x * (p s) = (x p) s: rows follow from the generator permutations.
  const auto n = out.elements.size();
  out.table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    out.table[i * n] = static_cast<Element>(i);
    for (std::size_t j = 1; j < n; ++j) out.table[i * n + j] = right[via[j]][out.table[i * n + parent[j]]];
  }
  return out;
}

}  // namespace freerep
