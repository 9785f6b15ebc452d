#pragma once

// Groups of order 210 = 2 3 5 7. All are Sylow-cyclic, hence of the form
// A x| B with A = G' cyclic of odd order m | 105, B cyclic of order 210/m
// acting by b^-1 a b = a^r.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freerep/classifier.hpp"
#include "freerep/constructors.hpp"
#include "freerep/error.hpp"
#include "freerep/isomorphism.hpp"
#include "freerep/number_theory.hpp"

namespace freerep {

struct SurveyEntry {
  std::int64_t m = 1;  // |A|
  std::int64_t n = 210;
  std::int64_t r = 0;
  std::size_t mu_order = 0;
  bool freely_representable = false;
  std::size_t iso_class = 0;
  std::string spec;
};

struct SurveyResult {
  std::vector<SurveyEntry> entries;
  std::size_t classes = 0;
};

/// Parameters (m, r) with gcd(r, m) = 1, r^n = 1 and gcd(r - 1, m) = 1 (so
/// that the commutator subgroup is all of A), for odd m | 105.
inline std::vector<std::pair<std::int64_t, std::int64_t>> survey210_parameters() {
  std::vector<std::pair<std::int64_t, std::int64_t>> out{{1, 0}};
  for (std::int64_t m : {3, 5, 7, 15, 21, 35, 105}) {
    const auto n = 210 / m;
    for (std::int64_t r = 2; r < m; ++r)
      if (std::gcd(r, m) == 1 && std::gcd(r - 1, m) == 1 && pow_mod(r, static_cast<std::uint64_t>(n), m) == 1)
        out.emplace_back(m, r);
  }
  return out;
}

inline SurveyResult survey210(const Limits& limits = {}, const CancelToken* token = nullptr) {
  SurveyResult out;
  std::vector<Group> reps;  // one group per isomorphism class
  for (auto [m, r] : survey210_parameters()) {
    SurveyEntry e;
    e.m = m;
    e.n = 210 / m;
    e.r = r;
    e.spec = "sd(" + std::to_string(m) + "," + std::to_string(e.n) + "," + std::to_string(r) + ")";
    auto g = semidirect_cyclic({e.m, e.n, e.r}, limits);
    e.mu_order = mcc_subgroup(g).order();
    e.freely_representable = is_freely_representable(g, limits, token).answer;
    e.iso_class = reps.size();
    for (std::size_t k = 0; k < reps.size(); ++k)
      if (is_isomorphic(g, reps[k], token)) {
        e.iso_class = k;
        break;
      }
    if (e.iso_class == reps.size()) reps.push_back(g);
    out.entries.push_back(std::move(e));
  }
  out.classes = reps.size();
  return out;
}

/// Published mu-orders by (|A|, r); r = -1 is written as m - 1.
struct SurveyReference {
  std::int64_t m;
  std::vector<std::int64_t> r;  // any of these
  std::size_t mu_order;
};

inline const std::vector<SurveyReference>& survey210_reference() {
  static const std::vector<SurveyReference> table{
      {1, {0}, 210},       {3, {2}, 105},        {5, {4}, 105},       {7, {6}, 105},
      {7, {2, 4}, 70},     {7, {3, 5}, 35},      {15, {14}, 105},     {21, {20}, 105},
      {35, {34}, 105},     {35, {4, 9}, 35},     {35, {19, 24}, 35},  {105, {104}, 105},
  };
  return table;
}

/// Entries whose mu-order disagrees with (or is missing from) the reference.
inline std::vector<SurveyEntry> survey210_mismatches(const SurveyResult& result) {
  std::vector<SurveyEntry> bad;
  for (auto& e : result.entries) {
    std::optional<std::size_t> expected;
    for (auto& ref : survey210_reference())
      if (ref.m == e.m)
        for (auto r : ref.r)
          if (r == e.r) expected = ref.mu_order;
    if (!expected || *expected != e.mu_order) bad.push_back(e);
  }
  return bad;
}

}  // namespace freerep
