// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "freerep/freerep.hpp"

using namespace freerep;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

Element by_label(const Group& g, const std::string& label) {
  for (Element x = 0; x < g.order(); ++x)
    if (g.name(x) == label) return x;
  throw std::runtime_error("no element labelled " + label);
}

// 1. certificate found <=> verdict "no", on every corpus group of order <= 128.
Outcome norm_relation_dichotomy() {
  Outcome o;
  std::size_t groups = 0, certificates = 0;
  for (auto& [name, g] : corpus::groups(128)) {
    ++groups;
    auto search = find_norm_relation(g);
    auto verdict = is_freely_representable(g);
    if (search.certificate) ++certificates;
    if (search.certificate.has_value() == verdict.answer || (search.certificate && !verify_certificate(*search.certificate))) {
      o.pass = false;
      o.note += " " + name;
    }
  }
  o.note = std::to_string(groups) + " groups, " + std::to_string(certificates) + " certificates" +
           (o.pass ? "" : "; disagreement:" + o.note);
  return o;
}

// 2. The two classical relations, written out literally.
Outcome wada_and_parry() {
  Outcome o;
  auto half = Rational(1, 2), third = Rational(1, 3);
  {
    auto g = direct_product(cyclic(2), cyclic(2));
    auto s1 = by_label(g, "(a,1)"), s2 = by_label(g, "(1,a)"), s12 = by_label(g, "(a,a)");
    auto h1 = subgroup_generated(g, {s1}), h2 = subgroup_generated(g, {s2}), h3 = subgroup_generated(g, {s12});
    // 2 = N H1 + N H2 - s1 N H3
    NormRelationCertificate wada{g,
                                 {{h1, GroupAlgebraElement::basis(g, 0, half)},
                                  {h2, GroupAlgebraElement::basis(g, 0, half)},
                                  {h3, GroupAlgebraElement::basis(g, s1, -half)}},
                                 false};
    NormRelationCertificate broken = wada;
    broken.terms[2].coefficient = GroupAlgebraElement::basis(g, 0, -half);
    if (!verify_certificate(wada)) o.pass = false, o.note += " Wada fails;";
    if (verify_certificate(broken)) o.pass = false, o.note += " Wada with 1 for s1 verifies;";
  }
  {
    auto g = direct_product(cyclic(3), cyclic(3));
    auto s = by_label(g, "(a,1)"), t = by_label(g, "(1,a)");
    auto st = g.mul(s, t), st2 = g.mul(s, g.mul(t, t));
    auto h1 = subgroup_generated(g, {s}), h2 = subgroup_generated(g, {t}), h3 = subgroup_generated(g, {st}),
         h4 = subgroup_generated(g, {st2});
    // 3 = N H1 + N H2 + N H3 - (s + s t) N H4
    auto a4 = GroupAlgebraElement::basis(g, s, -third) + GroupAlgebraElement::basis(g, st, -third);
    NormRelationCertificate parry{g,
                                  {{h1, GroupAlgebraElement::basis(g, 0, third)},
                                   {h2, GroupAlgebraElement::basis(g, 0, third)},
                                   {h3, GroupAlgebraElement::basis(g, 0, third)},
                                   {h4, a4}},
                                  false};
    if (!verify_certificate(parry)) o.pass = false, o.note += " Parry fails;";
  }
  if (o.pass) o.note = "both identities verify exactly; the perturbed Wada relation is rejected";
  return o;
}

// 3. Cyclic-subgroup counts, group order and the central involution.
Outcome sl2_census() {
  Outcome o;
  std::ostringstream note;
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    auto model = sl2_model(p);
    const auto& g = model.group;
    const auto q = static_cast<std::size_t>(p);
    std::size_t rows = 0, bad = 0;
    for (auto& r : cyclic_census(p)) {
      ++rows;
      bad += !r.match;
    }
    auto inv = involutions(g);
    bool minus_one = inv.size() == 1 && model.matrices[inv[0]].e == std::array<std::int64_t, 4>{p - 1, 0, 0, p - 1};
    bool order = g.order() == (q - 1) * q * (q + 1);
    if (bad || !minus_one || !order) o.pass = false;
    note << " p=" << p << ":" << rows - bad << "/" << rows << (minus_one ? "" : " involution!") << (order ? "" : " order!");
  }
  o.note = "rows matching" + note.str();
  return o;
}

// 4. Noncyclic subgroups of order p r exist exactly for the non-Fermat primes.
Outcome fermat_criterion() {
  Outcome o;
  std::ostringstream note;
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    auto w = fermat_pq_witness(p);
    const bool expected = p >= 7;
    bool ok = w.has_value() == expected;
    if (w) {
      auto checked = Subgroup::verified(w->parent(), std::vector<Element>(w->elements().begin(), w->elements().end()));
      const auto r = checked.order() / static_cast<std::size_t>(p);
      ok = ok && checked.order() % static_cast<std::size_t>(p) == 0 && is_prime(r) && r % 2 == 1 &&
           r != static_cast<std::size_t>(p) && !is_cyclic(checked);
      note << " p=" << p << ":" << checked.order();
    } else {
      note << " p=" << p << ":none";
    }
    o.pass = o.pass && ok;
  }
  o.note = "witness orders" + note.str();
  return o;
}

// 5. sd(7,9,2) and the scan below order 63.
Outcome order_63() {
  Outcome o;
  auto g = semidirect_cyclic({7, 9, 2});
  bool fr = is_freely_representable(g).answer;
  bool noncyclic = !is_cyclic(whole_group(g));
  auto mu = mcc_subgroup(g).order();
  if (!fr || !noncyclic || mu != 21) o.pass = false;
  std::size_t scanned = 0;
  std::string offenders;
  for (std::int64_t m = 1; m < 63; m += 2)
    for (std::int64_t n = 1; m * n < 63; n += 2) {
      if (std::gcd(m, n) != 1) continue;
      for (std::int64_t r = 0; r < std::max<std::int64_t>(m, 1); ++r) {
        SemidirectParams params{m, n, r};
        if (!params.violations().empty()) continue;
        Group h;
        try {
          h = semidirect_cyclic(params);
        } catch (const Error&) {
          continue;
        }
        ++scanned;
        if (!is_cyclic(whole_group(h)) && is_freely_representable(h).answer) {
          o.pass = false;
          offenders += " " + corpus::sd_name(params);
        }
      }
    }
  o.note = "sd(7,9,2): FR " + std::string(fr ? "yes" : "no") + ", mu order " + std::to_string(mu) + "; " +
           std::to_string(scanned) + " odd groups below 63 scanned" +
           (offenders.empty() ? ", none noncyclic FR" : "; noncyclic FR:" + offenders);
  return o;
}

// 6. The groups of order 210.
Outcome order_210() {
  Outcome o;
  auto result = survey210();
  auto bad = survey210_mismatches(result);
  std::size_t fr = 0;
  bool only_cyclic = true;
  for (auto& e : result.entries)
    if (e.freely_representable) {
      ++fr;
      only_cyclic = only_cyclic && e.m == 1;
    }
  o.pass = result.classes == 12 && bad.empty() && fr == 1 && only_cyclic;
  o.note = std::to_string(result.entries.size()) + " parameter sets, " + std::to_string(result.classes) +
           " classes, " + std::to_string(bad.size()) + " mu mismatches, " + std::to_string(fr) + " FR";
  return o;
}

// 7. 2-groups with a unique involution are cyclic or generalized quaternion.
Outcome two_groups() {
  Outcome o;
  std::size_t unique = 0, dihedral_rejected = 0;
  std::string bad;
  for (auto& [name, g] : corpus::groups(64)) {
    const auto n = g.order();
    if (n < 8 || !is_power_of_two(n)) continue;
    const bool one = involutions(g).size() == 1;
    const bool matched = is_isomorphic(g, cyclic(n)) || is_isomorphic(g, generalized_quaternion(n));
    if (one) {
      ++unique;
      if (!matched) bad += " " + name;
    }
    if (name[0] == 'D') {
      if (one || matched) bad += " " + name;
      else ++dihedral_rejected;
    }
  }
  o.pass = bad.empty() && unique > 0 && dihedral_rejected == 4;
  o.note = std::to_string(unique) + " unique-involution 2-groups matched, " + std::to_string(dihedral_rejected) +
           " dihedral 2-groups rejected" + (bad.empty() ? "" : "; failures:" + bad);
  return o;
}

// 8. Verified fixed-point-free representations.
Outcome free_representations() {
  Outcome o;
  std::vector<std::pair<std::string, Group>> targets;
  for (std::size_t n = 1; n <= 60; ++n) targets.emplace_back("C" + std::to_string(n), cyclic(n));
  targets.emplace_back("Q8", generalized_quaternion(8));
  targets.emplace_back("Q16", generalized_quaternion(16));
  targets.emplace_back("2T", binary_tetrahedral());
  targets.emplace_back("2O", binary_octahedral());
  targets.emplace_back("sd(7,9,2)", semidirect_cyclic({7, 9, 2}));
  targets.emplace_back("C5xQ8", direct_product(cyclic(5), generalized_quaternion(8)));
  targets.emplace_back("2D7", binary_dihedral(7));
  std::string bad, degrees;
  for (auto& [name, g] : targets) {
    bool ok = false;
    try {
      auto rep = build_free_representation(g);
      if (rep) {
        auto subs = all_subgroups(g);
        std::vector<Subgroup> nontrivial;
        for (auto& h : subs)
          if (!h.is_trivial()) nontrivial.push_back(h);
        auto report = verify_free(*rep, &nontrivial);
        ok = verify_homomorphism(*rep) && report.free && report.annihilation_checked;
        if (name[0] != 'C' || name.size() > 3) degrees += " " + name + ":" + std::to_string(rep->degree);
      }
    } catch (const Error& e) {
      bad += " " + name + "(" + e.what() + ")";
      continue;
    }
    if (!ok) bad += " " + name;
  }
  o.pass = bad.empty();
  o.note = std::to_string(targets.size()) + " groups; degrees" + degrees + (bad.empty() ? "" : "; failures:" + bad);
  return o;
}

// 9. Structure properties over the corpus up to order 200.
Outcome structure_properties() {
  Outcome o;
  std::map<std::string, std::size_t> failures;
  std::size_t groups = 0, sylow_cyclic = 0;
  auto fail = [&](const std::string& what, const std::string& name) {
    if (failures[what]++ < 3) o.note += " " + what + "@" + name;
  };
  for (auto& [name, g] : corpus::groups(200)) {
    ++groups;
    const auto n = g.order();
    for (auto d : divisors(n)) {
      const Element id = 0;
      if (count_nth_roots(g, std::span<const Element>(&id, 1), d) % d != 0) fail("frobenius", name);
    }
    auto profile = sylow_profile(g);
    for (auto& e : profile) {
      auto t = conjugates(e.subgroup).size();
      if (t % e.p != 1 % e.p || (n / e.order) % t != 0) fail("sylow-count", name);
    }
    auto subs = all_subgroups(g);
    bool all_abelian_cyclic = true;
    for (auto& h : subs)
      if (is_abelian(h) && !is_cyclic(h)) all_abelian_cyclic = false;
    if (all_abelian_cyclic != is_sylow_cycloidal(profile)) fail("cycloidal-abelian", name);

    auto o_g = odd_core(g);
    auto [quot, proj] = quotient_group(g, o_g);
    auto s2 = as_group(sylow_subgroup(g, 2)).group;
    auto q2 = as_group(sylow_subgroup(quot, 2)).group;
    if (!is_isomorphic(s2, q2)) fail("two-sylow-quotient", name);

    if (!is_sylow_cyclic(profile) || n == 1) continue;
    ++sylow_cyclic;
    auto gp = commutator_subgroup(g);
    auto [ab, ab_proj] = quotient_group(g, gp);
    const auto a = gp.order(), b = n / a;
    if (!is_cyclic(gp) || !is_cyclic(whole_group(ab)) || std::gcd(a, b) != 1 || a % 2 == 0) fail("g-prime", name);
    std::vector<Subgroup> complements;
    for (auto& h : subs)
      if (h.order() == b && intersection(h, gp).is_trivial()) complements.push_back(h);
    if (complements.size() != a || conjugates(complements.front()).size() != a) fail("complements", name);
    std::map<std::size_t, std::vector<Subgroup>> by_order;
    for (auto& h : subs) by_order[h.order()].push_back(h);
    for (auto d : divisors(n)) {
      auto it = by_order.find(d);
      if (it == by_order.end() || conjugates(it->second.front()).size() != it->second.size()) fail("divisor-conjugacy", name);
    }
    auto mu = mcc_subgroup(g);
    if (!(mu.order() > mu.index())) fail("mu-index", name);
  }
  o.pass = failures.empty();
  o.note = std::to_string(groups) + " groups (" + std::to_string(sylow_cyclic) + " Sylow-cyclic)" +
           (failures.empty() ? ", zero failures" : "; failures:" + o.note);
  return o;
}

// 10. The non-solvable cases.
Outcome non_solvable() {
  Outcome o;
  auto sl25 = sl2(5);
  auto c7sl25 = direct_product(cyclic(7), sl2(5));
  auto sl27 = sl2(7);
  bool a = is_freely_representable(sl25).answer;
  bool b = is_freely_representable(c7sl25).answer;
  auto v = is_freely_representable(sl27);
  bool c = !v.answer && v.witness && v.witness->order() == 21 && !is_cyclic(*v.witness);
  auto simple = [](const Group& g) {
    auto [q, proj] = quotient_group(g, center(g));
    return normal_subgroups(q).size() == 2 ? q.order() : 0;
  };
  auto psl5 = simple(sl25), psl7 = simple(sl27);
  o.pass = a && b && c && psl5 == 60 && psl7 == 168;
  o.note = std::string("SL2(5) FR ") + (a ? "yes" : "no") + ", C7xSL2(5) FR " + (b ? "yes" : "no") +
           ", SL2(7) FR " + (v.answer ? "yes" : "no") + " witness order " +
           (v.witness ? std::to_string(v.witness->order()) : "-") + ", PSL2(5) simple " + (psl5 ? "yes" : "no") +
           ", PSL2(7) simple " + (psl7 ? "yes" : "no");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"norm-relation dichotomy on the corpus up to order 128", norm_relation_dichotomy},
      {"Wada and Parry identities", wada_and_parry},
      {"SL2(F_p) cyclic-subgroup census, p = 3..13", sl2_census},
      {"Fermat criterion for noncyclic order p r subgroups", fermat_criterion},
      {"order-63 landmark and scan of smaller odd orders", order_63},
      {"order-210 survey", order_210},
      {"2-groups with a unique involution", two_groups},
      {"free representation certification", free_representations},
      {"structure properties on the corpus up to order 200", structure_properties},
      {"non-solvable branch", non_solvable},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !out.pass;
    std::printf("%s [%zu] %s: %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, out.note.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
