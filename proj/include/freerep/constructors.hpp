#pragma once

// Named groups as validated Cayley tables.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "freerep/error.hpp"
#include "freerep/group.hpp"
#include "freerep/number_theory.hpp"
#include "freerep/structure.hpp"
#include "freerep/subgroup.hpp"

namespace freerep {

namespace detail {

inline std::string power_label(const char* sym, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return sym;
  return std::string(sym) + "^" + std::to_string(k);
}

inline void check_cap(std::size_t n, const Limits& limits, const char* what) {
  if (n > limits.group_order)
    throw Error(ErrorKind::CapExceeded, std::string(what) + ": order " + std::to_string(n) + " exceeds cap " +
                                            std::to_string(limits.group_order));
}

inline std::string join_label(std::string a, const std::string& b) {
  if (a.empty()) return b.empty() ? "1" : b;
  if (b.empty()) return a;
  return a + " " + b;
}

}  // namespace detail

inline Group cyclic(std::size_t n, const Limits& limits = {}) {
  if (n == 0) throw Error(ErrorKind::BadParams, "cyclic group of order 0");
  detail::check_cap(n, limits, "cyclic");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : detail::power_label("a", i));
  return build_group([n](Element i, Element j) { return static_cast<Element>((i + j) % n); }, n, std::move(labels),
                     "C" + std::to_string(n), limits);
}

/// Symmetries of the n-gon: r^i s^j at index i + n*j, with s r s = r^-1.
inline Group dihedral(std::size_t n, const Limits& limits = {}) {
  if (n < 2) throw Error(ErrorKind::BadParams, "dihedral group needs n >= 2");
  detail::check_cap(2 * n, limits, "dihedral");
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < n; ++i)
      labels.push_back(detail::join_label(detail::power_label("r", i), detail::power_label("s", j)));
  auto mult = [n](Element x, Element y) {
    std::size_t a = x % n, b = x / n, c = y % n, d = y / n;
    std::size_t e = b ? (a + n - c) % n : (a + c) % n;
    return static_cast<Element>(e + n * ((b + d) % 2));
  };
  return build_group(mult, 2 * n, std::move(labels), "D" + std::to_string(n), limits);
}

/// Dicyclic group of order 4n: R^(2n) = 1, T^2 = R^n, T R T^-1 = R^-1.
/// Elements R^i T^j sit at index i + 2n*j.
inline Group dicyclic(std::size_t n, const Limits& limits = {}) {
  if (n < 1) throw Error(ErrorKind::BadParams, "dicyclic group needs n >= 1");
  detail::check_cap(4 * n, limits, "dicyclic");
  const std::size_t m = 2 * n;
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < m; ++i)
      labels.push_back(detail::join_label(detail::power_label("R", i), detail::power_label("T", j)));
  auto mult = [m, n](Element x, Element y) {
    std::size_t a = x % m, b = x / m, c = y % m, d = y / m;
    std::size_t e = b ? (a + m - c) % m : (a + c) % m;
    if (b && d) e = (e + n) % m;
    return static_cast<Element>(e + m * ((b + d) % 2));
  };
  return build_group(mult, 4 * n, std::move(labels), "Dic" + std::to_string(n), limits);
}

/// Generalized quaternion group of order 2^k, k >= 3.
inline Group generalized_quaternion(std::size_t size, const Limits& limits = {}) {
  if (size < 8 || !is_power_of_two(size))
    throw Error(ErrorKind::BadSize, "generalized quaternion order must be a power of 2 >= 8, got " +
                                        std::to_string(size));
  detail::check_cap(size, limits, "generalized_quaternion");
  auto g = dicyclic(size / 4, limits);
  // Relabel the origin; the table is the presentation itself.
  std::vector<Element> table(g.table().begin(), g.table().end());
  std::vector<std::string> labels(g.labels().begin(), g.labels().end());
  return group_from_table(std::move(table), size, std::move(labels), "Q" + std::to_string(size), limits);
}

inline Group direct_product(const Group& a, const Group& b, const Limits& limits = {}) {
  const std::size_t na = a.order(), nb = b.order();
  detail::check_cap(na * nb, limits, "direct_product");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      labels.push_back("(" + a.name(static_cast<Element>(i)) + "," + b.name(static_cast<Element>(j)) + ")");
  auto mult = [&](Element x, Element y) {
    return static_cast<Element>(a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
  };
  return build_group(mult, na * nb, std::move(labels), "prod(" + a.origin() + "," + b.origin() + ")", limits);
}

/// A = <a> of order m, B = <b> of order n, b a b^-1 = a^r.
struct SemidirectParams {
  std::int64_t m = 1;
  std::int64_t n = 1;
  std::int64_t r = 0;

  /// Violated invariants, empty when valid. r is read modulo m.
  std::vector<std::string> violations() const {
    std::vector<std::string> out;
    if (m < 1) out.push_back("m must be >= 1");
    if (n < 1) out.push_back("n must be >= 1");
    if (!out.empty()) return out;
    if (std::gcd(m, n) != 1) out.push_back("gcd(m, n) must be 1");
    if (m > 1) {
      auto rr = mod(r, m);
      if (std::gcd(rr, m) != 1) out.push_back("gcd(r, m) must be 1");
      else if (pow_mod(rr, static_cast<std::uint64_t>(n), m) != 1) out.push_back("r^n must be 1 mod m");
    }
    return out;
  }
};

/// Pairs (a^i, b^j) at index i + m*j with
/// (a^i1 b^j1)(a^i2 b^j2) = a^(i1 + i2 r^j1) b^(j1 + j2).
inline Group semidirect_cyclic(const SemidirectParams& params, const Limits& limits = {}) {
  auto bad = params.violations();
  if (!bad.empty()) {
    std::string detail = "sd(" + std::to_string(params.m) + "," + std::to_string(params.n) + "," +
                         std::to_string(params.r) + "):";
    for (auto& b : bad) detail += " " + b + ";";
    throw Error(ErrorKind::BadParams, detail);
  }
  const auto m = static_cast<std::size_t>(params.m), n = static_cast<std::size_t>(params.n);
  detail::check_cap(m * n, limits, "semidirect_cyclic");
  const auto r = m > 1 ? mod(params.r, params.m) : 0;
  std::vector<std::size_t> rpow(n);
  for (std::size_t j = 0; j < n; ++j) rpow[j] = static_cast<std::size_t>(pow_mod(r, j, params.m));
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i)
      labels.push_back(detail::join_label(detail::power_label("a", i), detail::power_label("b", j)));
  auto mult = [&](Element x, Element y) {
    std::size_t i1 = x % m, j1 = x / m, i2 = y % m, j2 = y / m;
    return static_cast<Element>((i1 + i2 * rpow[j1]) % m + m * ((j1 + j2) % n));
  };
  auto g = build_group(mult, m * n, std::move(labels),
                       "sd(" + std::to_string(params.m) + "," + std::to_string(params.n) + "," +
                           std::to_string(params.r) + ")",
                       limits);
  // G' = <a^(r-1)>; a = element 1 when m > 1.
  if (m > 1) {
    Element gen = static_cast<Element>(mod(static_cast<std::int64_t>(r) - 1, params.m));
    if (!(commutator_subgroup(g) == subgroup_generated(g, {gen})))
      throw Error(ErrorKind::NotAGroup, "semidirect_cyclic: commutator subgroup is not <a^(r-1)>");
  }
  return g;
}

/// All permutations of {0..k-1} in lexicographic order; (st)(i) = s(t(i)).
inline Group symmetric_group(std::size_t k, const Limits& limits = {}) {
  std::vector<std::vector<std::uint8_t>> perms;
  std::vector<std::uint8_t> p(k);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  detail::check_cap(perms.size(), limits, "symmetric_group");
  auto index = [&](const std::vector<std::uint8_t>& q) {
    return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::string> labels;
  for (auto& q : perms) {
    std::string s = "[";
    for (std::size_t i = 0; i < k; ++i) s += (i ? "," : "") + std::to_string(q[i]);
    labels.push_back(s + "]");
  }
  auto mult = [&](Element x, Element y) {
    std::vector<std::uint8_t> q(k);
    for (std::size_t i = 0; i < k; ++i) q[i] = perms[x][perms[y][i]];
    return index(q);
  };
  return build_group(mult, perms.size(), std::move(labels), "S" + std::to_string(k), limits);
}

/// 2x2 matrix over F_p, entries row-major.
struct MatrixOverFp {
  std::int64_t p = 2;
  std::array<std::int64_t, 4> e{1, 0, 0, 1};

  std::int64_t det() const { return mod(e[0] * e[3] - e[1] * e[2], p); }
  std::int64_t trace() const { return mod(e[0] + e[3], p); }

  MatrixOverFp operator*(const MatrixOverFp& o) const {
    return {p,
            {mod(e[0] * o.e[0] + e[1] * o.e[2], p), mod(e[0] * o.e[1] + e[1] * o.e[3], p),
             mod(e[2] * o.e[0] + e[3] * o.e[2], p), mod(e[2] * o.e[1] + e[3] * o.e[3], p)}};
  }
  friend bool operator==(const MatrixOverFp&, const MatrixOverFp&) = default;

  std::string label() const {
    return "[[" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "],[" + std::to_string(e[2]) + "," +
           std::to_string(e[3]) + "]]";
  }
};

/// SL2(F_p) together with the matrix behind every element index.
struct SL2Model {
  std::int64_t p = 2;
  Group group;
  std::vector<MatrixOverFp> matrices;
};

inline SL2Model sl2_model(std::int64_t p, const Limits& limits = {}) {
  if (p < 2 || !is_prime(static_cast<std::size_t>(p)))
    throw Error(ErrorKind::BadParams, "SL2 needs a prime, got " + std::to_string(p));
  const auto order = static_cast<std::size_t>((p - 1) * p * (p + 1));
  detail::check_cap(order, limits, "sl2");
  const auto pp = static_cast<std::size_t>(p);
  auto code = [pp](const MatrixOverFp& m) {
    return static_cast<std::size_t>(m.e[0]) + pp * (m.e[1] + pp * (m.e[2] + pp * static_cast<std::size_t>(m.e[3])));
  };
  std::vector<MatrixOverFp> mats{MatrixOverFp{p, {1, 0, 0, 1}}};
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b)
      for (std::int64_t c = 0; c < p; ++c)
        for (std::int64_t d = 0; d < p; ++d) {
          MatrixOverFp m{p, {a, b, c, d}};
          if (m.det() == 1 && !(m == mats.front())) mats.push_back(m);
        }
  constexpr Element unset = ~Element{0};
  std::vector<Element> index(pp * pp * pp * pp, unset);
  for (std::size_t i = 0; i < mats.size(); ++i) index[code(mats[i])] = static_cast<Element>(i);
  std::vector<std::string> labels;
  for (auto& m : mats) labels.push_back(m.label());
  auto group = build_group([&](Element x, Element y) { return index[code(mats[x] * mats[y])]; }, mats.size(),
                           std::move(labels), "SL2(" + std::to_string(p) + ")", limits);
  return {p, std::move(group), std::move(mats)};
}

inline Group sl2(std::int64_t p, const Limits& limits = {}) { return sl2_model(p, limits).group; }

}  // namespace freerep
