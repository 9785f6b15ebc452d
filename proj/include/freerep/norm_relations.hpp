#pragma once

// Norm relations of unity: 1 = sum a_H N(H) in Q[G]. Decided by exact
// elimination in the left ideal spanned by the cosets g N(C) of the
// prime-order cyclic subgroups C.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "freerep/error.hpp"
#include "freerep/group.hpp"
#include "freerep/group_algebra.hpp"
#include "freerep/number_theory.hpp"
#include "freerep/rational.hpp"
#include "freerep/subgroup.hpp"

namespace freerep {

/// Span of rational vectors, kept in echelon form. Each row remembers how it
/// was obtained from the inserted vectors so that members can be expressed
/// in terms of them.
class RationalSpan {
 public:
  explicit RationalSpan(std::size_t n = 0) : n_(n) {}

  std::size_t ambient_dimension() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return rows_.size(); }
  bool is_full() const noexcept { return rows_.size() == n_; }

  /// Adds `v`; returns true when the dimension grew. `tag` identifies v in
  /// the output of express().
  bool insert(std::vector<Rational> v, std::size_t tag) {
    auto steps = reduce(v);
    std::size_t pivot = n_;
    for (std::size_t i = 0; i < n_; ++i) {
      if (v[i] == 0) continue;
      // smallest numerator (then denominator) keeps the entries small
      if (pivot == n_ || smaller(v[i], v[pivot])) pivot = i;
    }
    if (pivot == n_) return false;
    Rational scale = v[pivot];
    Rational inv = 1 / scale;
    Row row;
    row.pivot = pivot;
    row.tag = tag;
    row.scale = scale;
    row.steps = std::move(steps);
    for (std::size_t i = 0; i < n_; ++i)
      if (v[i] != 0) {
        row.support.push_back(i);
        row.values.push_back(v[i] * inv);
      }
    rows_.push_back(std::move(row));
    return true;
  }

  bool contains(std::vector<Rational> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](auto& q) { return q == 0; });
  }

  /// Coefficients (tag, c) with v = sum c * inserted(tag), if v is in the span.
  std::optional<std::vector<std::pair<std::size_t, Rational>>> express(std::vector<Rational> v) const {
    auto steps = reduce(v);
    if (!std::all_of(v.begin(), v.end(), [](auto& q) { return q == 0; })) return std::nullopt;
    std::vector<Rational> lambda(rows_.size(), Rational(0));
    for (auto& [k, m] : steps) lambda[k] += m;
    std::vector<std::pair<std::size_t, Rational>> out;
    // row_k = (inserted_k - sum_i m_i row_i) / scale_k
    for (std::size_t k = rows_.size(); k-- > 0;) {
      if (lambda[k] == 0) continue;
      Rational c = lambda[k] / rows_[k].scale;
      for (auto& [i, m] : rows_[k].steps) lambda[i] -= c * m;
      out.emplace_back(rows_[k].tag, std::move(c));
    }
    return out;
  }

 private:
  struct Row {
    std::size_t pivot = 0;
    std::size_t tag = 0;
    Rational scale;
    std::vector<std::size_t> support;
    std::vector<Rational> values;  // normalized: value at pivot is 1
    std::vector<std::pair<std::size_t, Rational>> steps;
  };

  static bool smaller(const Rational& a, const Rational& b) {
    int c = mpz_cmpabs(a.get_num_mpz_t(), b.get_num_mpz_t());
    if (c != 0) return c < 0;
    return mpz_cmp(a.get_den_mpz_t(), b.get_den_mpz_t()) < 0;
  }

  /// Subtracts multiples of the rows in insertion order; returns them.
  std::vector<std::pair<std::size_t, Rational>> reduce(std::vector<Rational>& v) const {
    std::vector<std::pair<std::size_t, Rational>> steps;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const auto& row = rows_[k];
      if (v[row.pivot] == 0) continue;
      Rational m = v[row.pivot];
      for (std::size_t t = 0; t < row.support.size(); ++t) v[row.support[t]] -= m * row.values[t];
      steps.emplace_back(k, std::move(m));
    }
    return steps;
  }

  std::size_t n_;
  std::vector<Row> rows_;
};

/// Left ideal of Q[G] generated by subgroup norms, as the span of the
/// coset sums g N(H).
class LeftIdeal {
 public:
  struct Generator {
    std::size_t subgroup;  // index into subgroups()
    Element coset_rep;
  };

  explicit LeftIdeal(Group g) : group_(std::move(g)), span_(group_.order()) {}

  static LeftIdeal generated_by(const Group& g, const std::vector<Subgroup>& subgroups,
                                const CancelToken* token = nullptr) {
    LeftIdeal ideal(g);
    for (auto& h : subgroups) {
      ideal.add(h, token);
      if (ideal.span_.is_full()) break;
    }
    return ideal;
  }

  /// Adds Q[G] N(H), one left coset sum at a time.
  void add(const Subgroup& h, const CancelToken* token = nullptr) {
    if (!(h.parent() == group_)) throw Error(ErrorKind::ParentMismatch, "subgroup of another group");
    const auto idx = subgroups_.size();
    subgroups_.push_back(h);
    const auto n = group_.order();
    ElementSet covered(n);
    for (Element g = 0; g < n && !span_.is_full(); ++g) {
      if (covered.test(g)) continue;
      poll(token, "norm relation elimination");
      std::vector<Rational> v(n, Rational(0));
      for (auto x : h.elements()) {
        auto y = group_.mul(g, x);
        covered.set(y);
        v[y] = 1;
      }
      if (span_.insert(std::move(v), generators_.size())) generators_.push_back({idx, g});
    }
  }

  const Group& group() const noexcept { return group_; }
  std::size_t dimension() const noexcept { return span_.dimension(); }
  bool is_whole_algebra() const noexcept { return span_.is_full(); }
  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }

  bool contains(const GroupAlgebraElement& x) const {
    if (!(x.parent() == group_)) throw Error(ErrorKind::ParentMismatch, "element of another group algebra");
    return span_.contains(x.coeffs());
  }

  /// x = sum over generators c * g N(H), if x is in the ideal.
  std::optional<std::vector<std::pair<Generator, Rational>>> express(const GroupAlgebraElement& x) const {
    auto coeffs = span_.express(x.coeffs());
    if (!coeffs) return std::nullopt;
    std::vector<std::pair<Generator, Rational>> out;
    for (auto& [tag, c] : *coeffs) out.emplace_back(generators_[tag], std::move(c));
    return out;
  }

 private:
  Group group_;
  RationalSpan span_;
  std::vector<Subgroup> subgroups_;
  std::vector<Generator> generators_;  // only the ones that grew the span
};

struct NormTerm {
  Subgroup subgroup;
  GroupAlgebraElement coefficient;  // left coefficient a_H
};

struct NormRelationCertificate {
  Group group;
  std::vector<NormTerm> terms;
  bool verified = false;
};

/// sum a_H N(H) == 1 exactly, with every H nontrivial.
inline bool verify_certificate(const NormRelationCertificate& c) {
  if (!c.group.valid()) return false;
  auto total = GroupAlgebraElement::zero(c.group);
  for (auto& t : c.terms) {
    if (!(t.subgroup.parent() == c.group) || !(t.coefficient.parent() == c.group)) return false;
    if (t.subgroup.is_trivial()) return false;
    total += t.coefficient * norm_element(t.subgroup);
  }
  return total == GroupAlgebraElement::one(c.group);
}

/// Subgroups of prime order.
inline std::vector<Subgroup> prime_order_subgroups(const Group& g) {
  std::vector<Subgroup> out;
  for (auto& c : cyclic_subgroups(g))
    if (is_prime(c.order())) out.push_back(c);
  return out;
}

struct NormRelationSearch {
  std::optional<NormRelationCertificate> certificate;
  std::size_t ideal_dimension = 0;
};

inline NormRelationSearch find_norm_relation(const Group& g, const Limits& limits = {},
                                             const CancelToken* token = nullptr) {
  if (g.order() > limits.norm_relation)
    throw Error(ErrorKind::CapExceeded, "find_norm_relation: order " + std::to_string(g.order()) + " exceeds cap " +
                                            std::to_string(limits.norm_relation));
  auto primes = prime_order_subgroups(g);
  // Larger subgroups first: fewer cosets, each covering more.
  std::stable_sort(primes.begin(), primes.end(), [](auto& a, auto& b) { return a.order() > b.order(); });
  auto ideal = LeftIdeal::generated_by(g, primes, token);
  NormRelationSearch out;
  out.ideal_dimension = ideal.dimension();
  auto expr = ideal.express(GroupAlgebraElement::one(g));
  if (!expr) return out;

  const auto& subs = ideal.subgroups();
  std::vector<GroupAlgebraElement> coeff(subs.size(), GroupAlgebraElement::zero(g));
  for (auto& [gen, c] : *expr) coeff[gen.subgroup][gen.coset_rep] += c;
  NormRelationCertificate cert{g, {}, false};
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (!coeff[i].is_zero()) cert.terms.push_back({subs[i], std::move(coeff[i])});
  cert.verified = verify_certificate(cert);
  if (!cert.verified) throw std::logic_error("find_norm_relation: certificate failed re-multiplication");
  out.certificate = std::move(cert);
  return out;
}

/// 1 = (sum N(C_i) - N(G)) / (k - 1) for subgroups whose nonidentity
/// elements partition G \ {1}.
inline NormRelationCertificate partition_relation(const Group& g, const std::vector<Subgroup>& parts) {
  const auto k = parts.size();
  if (k < 2) throw Error(ErrorKind::NotAPartition, "a partition needs at least two subgroups");
  std::vector<std::size_t> hits(g.order(), 0);
  for (auto& h : parts) {
    if (!(h.parent() == g)) throw Error(ErrorKind::ParentMismatch, "part from another group");
    if (h.is_trivial() || h.is_whole()) throw Error(ErrorKind::NotAPartition, "parts must be proper and nontrivial");
    for (auto x : h.elements()) ++hits[x];
  }
  for (Element x = 1; x < g.order(); ++x)
    if (hits[x] != 1)
      throw Error(ErrorKind::NotAPartition, "element " + g.name(x) + " lies in " + std::to_string(hits[x]) + " parts");
  Rational w(1, static_cast<long>(k - 1));
  NormRelationCertificate cert{g, {}, false};
  for (auto& h : parts) cert.terms.push_back({h, GroupAlgebraElement::basis(g, 0, w)});
  cert.terms.push_back({whole_group(g), GroupAlgebraElement::basis(g, 0, -w)});
  cert.verified = verify_certificate(cert);
  if (!cert.verified) throw std::logic_error("partition_relation: identity failed");
  return cert;
}

}  // namespace freerep
