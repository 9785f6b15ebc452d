#pragma once

// Sylow profile, odd core, cycloidal type, the MCC subgroup and the
// freely-representable verdict.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "freerep/binary_polyhedral.hpp"
#include "freerep/constructors.hpp"
#include "freerep/error.hpp"
#include "freerep/group.hpp"
#include "freerep/isomorphism.hpp"
#include "freerep/number_theory.hpp"
#include "freerep/structure.hpp"
#include "freerep/subgroup.hpp"

namespace freerep {

enum class SylowType { Cyclic, GeneralizedQuaternion, Other };

inline std::string_view to_string(SylowType t) {
  switch (t) {
    case SylowType::Cyclic: return "cyclic";
    case SylowType::GeneralizedQuaternion: return "generalized_quaternion";
    case SylowType::Other: return "other";
  }
  return "?";
}

struct SylowEntry {
  std::size_t p = 0;
  std::size_t order = 1;
  SylowType type = SylowType::Cyclic;
  Subgroup subgroup;
};

enum class CycloidalType {
  SylowCyclic,
  QuaternionType,
  BinaryTetrahedralType,
  BinaryOctahedralType,
  NonSolvable,
  NotCycloidal
};

inline std::string_view to_string(CycloidalType t) {
  switch (t) {
    case CycloidalType::SylowCyclic: return "SylowCyclic";
    case CycloidalType::QuaternionType: return "QuaternionType";
    case CycloidalType::BinaryTetrahedralType: return "BinaryTetrahedralType";
    case CycloidalType::BinaryOctahedralType: return "BinaryOctahedralType";
    case CycloidalType::NonSolvable: return "NonSolvable";
    case CycloidalType::NotCycloidal: return "NotCycloidal";
  }
  return "?";
}

/// True when the 2-group `h` is generalized quaternion (checked against the
/// constructor).
inline bool is_generalized_quaternion(const Subgroup& h, const CancelToken* token = nullptr) {
  const auto n = h.order();
  if (n < 8 || !is_power_of_two(n) || is_cyclic(h)) return false;
  std::size_t invols = 0;
  for (auto x : h.elements())
    if (h.parent().element_order(x) == 2) ++invols;
  if (invols != 1) return false;
  return is_isomorphic(as_group(h).group, generalized_quaternion(n), token).has_value();
}

inline std::vector<SylowEntry> sylow_profile(const Group& g, const CancelToken* token = nullptr) {
  std::vector<SylowEntry> out;
  for (auto p : prime_factors(g.order())) {
    SylowEntry e;
    e.p = p;
    e.subgroup = sylow_subgroup(g, p);
    e.order = e.subgroup.order();
    if (is_cyclic(e.subgroup)) e.type = SylowType::Cyclic;
    else if (p == 2 && is_generalized_quaternion(e.subgroup, token)) e.type = SylowType::GeneralizedQuaternion;
    else e.type = SylowType::Other;
    out.push_back(std::move(e));
  }
  return out;
}

inline bool is_sylow_cyclic(const std::vector<SylowEntry>& profile) {
  return std::all_of(profile.begin(), profile.end(), [](auto& e) { return e.type == SylowType::Cyclic; });
}

inline bool is_sylow_cycloidal(const std::vector<SylowEntry>& profile) {
  return std::all_of(profile.begin(), profile.end(), [](auto& e) {
    return e.type == SylowType::Cyclic || (e.p == 2 && e.type == SylowType::GeneralizedQuaternion);
  });
}

inline bool is_sylow_cyclic(const Group& g) { return is_sylow_cyclic(sylow_profile(g)); }
inline bool is_sylow_cycloidal(const Group& g) { return is_sylow_cycloidal(sylow_profile(g)); }

/// O(G): the largest normal subgroup of odd order.
inline Subgroup odd_core(const Group& g, const CancelToken* token = nullptr) {
  Subgroup best = trivial_subgroup(g);
  std::vector<Subgroup> odd;
  for (auto& n : normal_subgroups(g, token))
    if (n.order() % 2 == 1) {
      if (n.order() > best.order()) best = n;
      odd.push_back(n);
    }
  for (auto& n : odd)
    if (!n.is_subgroup_of(best)) throw std::logic_error("odd_core: normal odd-order subgroups have no maximum");
  return best;
}

inline CycloidalType cycloidal_type(const Group& g, const std::vector<SylowEntry>& profile,
                                    const CancelToken* token = nullptr) {
  if (!is_sylow_cycloidal(profile)) throw Error(ErrorKind::NotCycloidal, g.origin() + " is not Sylow-cycloidal");
  if (!is_solvable(g)) return CycloidalType::NonSolvable;
  auto [q, proj] = quotient_group(g, odd_core(g, token));
  const auto n = q.order();
  if (is_power_of_two(n) && is_cyclic(whole_group(q))) return CycloidalType::SylowCyclic;
  if (n >= 8 && is_power_of_two(n) && is_isomorphic(q, generalized_quaternion(n), token))
    return CycloidalType::QuaternionType;
  if (n == 24 && is_isomorphic(q, sl2(3), token)) return CycloidalType::BinaryTetrahedralType;
  if (n == 48 && is_isomorphic(q, binary_octahedral(), token)) return CycloidalType::BinaryOctahedralType;
  throw Error(ErrorKind::NotCycloidal, "G/O(G) of order " + std::to_string(n) + " matches no cycloidal type");
}

inline CycloidalType cycloidal_type(const Group& g, const CancelToken* token = nullptr) {
  return cycloidal_type(g, sylow_profile(g, token), token);
}

/// mu(G) = C_G(G') for Sylow-cyclic G, with its defining properties checked.
inline Subgroup mcc_subgroup(const Group& g, bool assume_sylow_cyclic = false) {
  if (!assume_sylow_cyclic && !is_sylow_cyclic(g))
    throw Error(ErrorKind::NotSylowCyclic, g.origin() + " is not Sylow-cyclic");
  auto derived = commutator_subgroup(g);
  auto mu = centralizer(derived);
  if (!is_cyclic(mu)) throw std::logic_error("mcc_subgroup: centralizer of G' is not cyclic");
  if (!is_normal(mu)) throw std::logic_error("mcc_subgroup: not normal");
  if (!(mu == join(derived, center(g)))) throw std::logic_error("mcc_subgroup: differs from G'Z(G)");
  if (g.order() > 1 && !(mu.order() > mu.index())) throw std::logic_error("mcc_subgroup: |mu| <= index");
  return mu;
}

// --- Semiprime-cyclic scan ---------------------------------------------------

struct SemiprimeResult {
  bool semiprime_cyclic = true;
  std::optional<Subgroup> witness;  // a noncyclic subgroup of order p q
};

namespace detail {

/// <x, y> if it has at most `bound` elements.
inline std::optional<Subgroup> bounded_join(const Group& g, Element x, Element y, std::size_t bound) {
  ElementSet seen(g.order());
  std::vector<Element> elems{0};
  seen.set(0);
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (auto s : {x, y}) {
      auto z = g.mul(elems[head], s);
      if (seen.test(z)) continue;
      if (elems.size() == bound) return std::nullopt;
      seen.set(z);
      elems.push_back(z);
    }
  return subgroup_from_closed_set(g, seen, {x, y});
}

}  // namespace detail

/// Every subgroup of order p q (p, q primes, possibly equal) is cyclic. Each
/// such subgroup is generated by two elements of prime order.
inline SemiprimeResult semiprime_scan(const Group& g, const CancelToken* token = nullptr) {
  std::vector<Element> gens;  // one generator per prime-order cyclic subgroup
  {
    ElementSet covered(g.order());
    for (Element x = 1; x < g.order(); ++x) {
      if (covered.test(x) || !is_prime(g.element_order(x))) continue;
      gens.push_back(x);
      for (Element y = x; y != 0; y = g.mul(y, x)) covered.set(y);
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    poll(token, "semiprime_scan");
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      auto x = gens[i], y = gens[j];
      const auto p = g.element_order(x), q = g.element_order(y);
      if (p != q && g.mul(x, y) == g.mul(y, x)) continue;  // cyclic of order pq
      auto h = detail::bounded_join(g, x, y, p * q);
      if (h && h->order() == p * q && !is_cyclic(*h)) return {false, std::move(h)};
    }
  }
  return {};
}

inline bool is_semiprime_cyclic(const Group& g) { return semiprime_scan(g).semiprime_cyclic; }

// --- Verdict -------------------------------------------------------------------

enum class WitnessKind { None, NoncyclicSemiprime, FermatSl2 };

struct FreelyRepresentableVerdict {
  bool answer = true;
  WitnessKind witness_kind = WitnessKind::None;
  std::optional<Subgroup> witness;
  std::size_t fermat_prime = 0;
  std::string criterion;              // for yes
  std::vector<Subgroup> supporting;   // for yes
};

namespace detail {

/// p with (p - 1) p (p + 1) = n, or 0.
inline std::size_t sl2_prime_for_order(std::size_t n) {
  for (std::size_t p = 2; (p - 1) * p * (p + 1) <= n; ++p)
    if ((p - 1) * p * (p + 1) == n && is_prime(p)) return p;
  return 0;
}

}  // namespace detail

inline FreelyRepresentableVerdict is_freely_representable(const Group& g, const Limits& limits = {},
                                                          const CancelToken* token = nullptr) {
  FreelyRepresentableVerdict v;
  auto sp = semiprime_scan(g, token);
  if (!sp.semiprime_cyclic) {
    v.answer = false;
    v.witness_kind = WitnessKind::NoncyclicSemiprime;
    v.witness = std::move(sp.witness);
    return v;
  }
  auto series = derived_series(g);
  if (series.back().is_trivial()) {
    v.criterion = "solvable semiprime-cyclic";
    return v;
  }
  const auto& perfect = series.back();
  const auto p = detail::sl2_prime_for_order(perfect.order());
  if (p >= 17 && is_fermat_prime(p)) {
    Limits big = limits;
    big.group_order = std::max(big.group_order, perfect.order());
    if (is_isomorphic(as_group(perfect, big).group, sl2(static_cast<std::int64_t>(p), big), token)) {
      v.answer = false;
      v.witness_kind = WitnessKind::FermatSl2;
      v.witness = perfect;
      v.fermat_prime = p;
      return v;
    }
  }
  if (p == 5 && is_isomorphic(as_group(perfect).group, sl2(5), token)) {
    // H = P x M of index <= 2 with M of order prime to 30 centralizing P.
    auto cent = centralizer(perfect);
    ElementSet mask(g.order());
    for (auto x : cent.elements())
      if (std::gcd(g.element_order(x), std::size_t{30}) == 1) mask.set(x);
    auto m_elems = mask.to_vector();
    auto m_gen = subgroup_generated(g, std::span<const Element>(m_elems));
    if (m_gen.order() == m_elems.size() && intersection(m_gen, perfect).is_trivial()) {
      auto h = join(perfect, m_gen);
      if (h.order() == perfect.order() * m_gen.order() && h.index() <= 2) {
        auto sub = is_freely_representable(as_group(m_gen, limits).group, limits, token);
        if (sub.answer) {
          v.criterion = "Suzuki-Zassenhaus structure";
          v.supporting = {perfect, m_gen, h};
          return v;
        }
      }
    }
    throw std::logic_error("non-solvable semiprime-cyclic group without the SL2(5) x M structure");
  }
  throw Error(ErrorKind::CapExceeded, "non-solvable group with perfect core of order " +
                                          std::to_string(perfect.order()) + " is outside the supported range");
}

// --- Report --------------------------------------------------------------------

struct ClassificationReport {
  std::size_t order = 1;
  std::vector<SylowEntry> sylow_profile;
  bool is_sylow_cyclic = false;
  bool is_sylow_cycloidal = false;
  bool solvable = true;
  Subgroup odd_core;
  CycloidalType cycloidal_type = CycloidalType::NotCycloidal;
  std::optional<Subgroup> mcc;
  std::optional<Element> unique_involution;
  std::optional<Subgroup> involution_subgroup;
  SemiprimeResult semiprime;
  FreelyRepresentableVerdict fr;
};

inline ClassificationReport classify(const Group& g, const Limits& limits = {}, const CancelToken* token = nullptr) {
  ClassificationReport r;
  r.order = g.order();
  r.sylow_profile = sylow_profile(g, token);
  r.is_sylow_cyclic = is_sylow_cyclic(r.sylow_profile);
  r.is_sylow_cycloidal = is_sylow_cycloidal(r.sylow_profile);
  r.solvable = is_solvable(g);
  r.odd_core = odd_core(g, token);
  r.cycloidal_type = r.is_sylow_cycloidal ? cycloidal_type(g, r.sylow_profile, token) : CycloidalType::NotCycloidal;
  if (r.is_sylow_cyclic) r.mcc = mcc_subgroup(g, true);
  auto invols = involutions(g);
  if (invols.size() == 1) {
    r.unique_involution = invols.front();
    r.involution_subgroup = subgroup_generated(g, {invols.front()});
  }
  r.semiprime = semiprime_scan(g, token);
  r.fr = is_freely_representable(g, limits, token);

  // Sylow-cyclic: FR iff every prime divides |mu(G)|.
  if (r.mcc) {
    bool all_divide = true;
    for (auto p : prime_factors(g.order())) all_divide = all_divide && r.mcc->order() % p == 0;
    if (all_divide != r.fr.answer) throw std::logic_error("classify: mu(G) criterion disagrees with the verdict");
  }
  if (r.is_sylow_cycloidal && !r.is_sylow_cyclic && !r.unique_involution)
    throw std::logic_error("classify: cycloidal non-Sylow-cyclic group without a unique involution");
  return r;
}

}  // namespace freerep
