// freerep: command-line front end for the library.
// stdout carries the report, stderr the diagnostics.
// Exit codes: 0 success, 1 parse/construction error, 2 cap exceeded or deadline hit.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "freerep/freerep.hpp"

using namespace freerep;

namespace {

struct Output {
  json data;
  std::string text;
};

struct Context {
  Limits limits;
  std::unique_ptr<CancelToken> token;
  const CancelToken* tok() const { return token.get(); }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string describe(const Subgroup& h) {
  std::ostringstream out;
  out << "order " << h.order() << " {";
  for (std::size_t i = 0; i < h.elements().size(); ++i) out << (i ? "," : "") << h.parent().name(h.elements()[i]);
  out << "}";
  return out.str();
}

Output cmd_group(const std::string& spec, const Context& ctx) {
  auto g = build_group_from_spec(spec, ctx.limits);
  auto j = to_json(g);
  j["group_spec"] = to_string(parse_group_spec(spec));
  std::ostringstream t;
  t << "group " << j["group_spec"].get<std::string>() << " of order " << g.order() << "\n";
  return {std::move(j), t.str()};
}

Output cmd_analyze(const std::string& spec, const Context& ctx) {
  auto canonical = to_string(parse_group_spec(spec));
  auto g = build_group_from_spec(spec, ctx.limits);
  auto r = classify(g, ctx.limits, ctx.tok());
  auto j = to_json(r);
  j["group_spec"] = canonical;
  std::ostringstream t;
  t << "group:                " << canonical << " (order " << r.order << ")\n";
  t << "sylow profile:       ";
  for (auto& e : r.sylow_profile) t << " p=" << e.p << " order " << e.order << " " << to_string(e.type) << ";";
  t << "\n";
  t << "sylow-cyclic:         " << yes_no(r.is_sylow_cyclic) << "\n";
  t << "sylow-cycloidal:      " << yes_no(r.is_sylow_cycloidal) << "\n";
  t << "solvable:             " << yes_no(r.solvable) << "\n";
  t << "odd core:             order " << r.odd_core.order() << "\n";
  t << "cycloidal type:       " << to_string(r.cycloidal_type) << "\n";
  if (r.mcc) t << "mu(G):                order " << r.mcc->order() << "\n";
  t << "semiprime-cyclic:     " << yes_no(r.semiprime.semiprime_cyclic) << "\n";
  t << "freely representable: " << yes_no(r.fr.answer) << "\n";
  if (r.fr.answer) t << "criterion:            " << r.fr.criterion << "\n";
  if (r.fr.witness) t << "witness:              " << to_string(r.fr.witness_kind) << " " << describe(*r.fr.witness) << "\n";
  if (r.fr.fermat_prime) t << "fermat prime:         " << r.fr.fermat_prime << "\n";
  return {std::move(j), t.str()};
}

Output cmd_norm_relation(const std::string& spec, const Context& ctx) {
  auto canonical = to_string(parse_group_spec(spec));
  auto g = build_group_from_spec(spec, ctx.limits);
  auto search = find_norm_relation(g, ctx.limits, ctx.tok());
  std::ostringstream t;
  json j;
  if (!search.certificate) {
    j = {{"group_spec", canonical}, {"certificate", nullptr}, {"ideal_dimension", search.ideal_dimension}};
    t << canonical << ": none (freely representable)\n";
    return {std::move(j), t.str()};
  }
  j = to_json(*search.certificate, canonical);
  t << canonical << ": 1 = sum of " << search.certificate->terms.size() << " terms a_H N(H), verified "
    << yes_no(search.certificate->verified) << "\n";
  for (auto& term : search.certificate->terms) t << "  H " << describe(term.subgroup) << "  a_H = " << term.coefficient.str() << "\n";
  return {std::move(j), t.str()};
}

Output cmd_represent(const std::string& spec, const Context& ctx) {
  auto canonical = to_string(parse_group_spec(spec));
  auto g = build_group_from_spec(spec, ctx.limits);
  std::optional<Representation> rep;
  std::string reason;
  try {
    rep = build_free_representation(g, ctx.limits, ctx.tok());
    if (!rep) reason = "unsupported shape";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotFreelyRepresentable) throw;
    reason = "not freely representable: " + e.detail();
  }
  std::ostringstream t;
  if (!rep) {
    t << canonical << ": no representation built (" << reason << ")\n";
    return {{{"group_spec", canonical}, {"representation", nullptr}, {"reason", reason}}, t.str()};
  }
  auto free = verify_free(*rep);
  auto j = to_json(*rep, canonical);
  j["free"] = free.free;
  t << canonical << ": degree " << rep->degree << " over Q(zeta_" << rep->conductor << "), " << rep->construction
    << ", free " << yes_no(free.free) << "\n";
  return {std::move(j), t.str()};
}

Output cmd_census(const std::vector<std::int64_t>& primes, bool allow_large, const Context& ctx) {
  auto limits = ctx.limits;
  if (allow_large) limits.group_order = std::max<std::size_t>(limits.group_order, 4896);
  json rows = json::array();
  std::ostringstream t;
  bool all_ok = true;
  for (auto p : primes) {
    if (p >= 17 && !allow_large)
      throw Error(ErrorKind::CapExceeded, "census at p = " + std::to_string(p) + " needs --allow-large");
    poll(ctx.tok(), "census");
    auto g = sl2(p, limits);
    const auto q = static_cast<std::size_t>(p);
    auto census = cyclic_census(p, limits);
    bool rows_ok = std::all_of(census.begin(), census.end(), [](auto& r) { return r.match; });
    bool order_ok = g.order() == (q - 1) * q * (q + 1);
    auto inv = involutions(g);
    bool involution_ok = inv.size() == 1 && center(g).contains(inv.front());
    bool tri = trichotomy_check(p, limits);
    auto conj = conjugacy_and_normals_check(p, limits);
    bool norm = normalizer_structure_check(p, limits);
    auto witness = fermat_pq_witness(p, limits, ctx.tok());
    json jr = json::array();
    for (auto& r : census) jr.push_back(to_json(r));
    rows.push_back({{"p", p},
                    {"order", g.order()},
                    {"rows", std::move(jr)},
                    {"order_ok", order_ok},
                    {"unique_involution", involution_ok},
                    {"eigenvalue_trichotomy", tri},
                    {"conjugacy", conj.cyclic_conjugate && conj.intersections_in_center},
                    {"normal_subgroups", conj.normal_subgroups_ok && conj.binary_tetrahedral_ok},
                    {"normalizer", norm},
                    {"pr_witness", witness ? to_json(*witness) : json(nullptr)}});
    all_ok = all_ok && rows_ok && order_ok && involution_ok && tri && conj.ok() && norm;
    t << "SL2(" << p << "), order " << g.order() << "\n";
    t << "     m  predicted  observed\n";
    for (auto& r : census)
      t << std::setw(6) << r.m << std::setw(11) << r.predicted << std::setw(10) << r.observed << (r.match ? "" : "  MISMATCH")
        << "\n";
    t << "  unique involution " << yes_no(involution_ok) << ", trichotomy " << yes_no(tri) << ", conjugacy "
      << yes_no(conj.cyclic_conjugate && conj.intersections_in_center) << ", normal subgroups "
      << yes_no(conj.normal_subgroups_ok && conj.binary_tetrahedral_ok) << ", normalizer " << yes_no(norm) << "\n";
    t << "  noncyclic order p r subgroup: " << (witness ? describe(*witness) : std::string("none")) << "\n";
  }
  return {{{"census", std::move(rows)}, {"all_checks_pass", all_ok}}, t.str()};
}

Output cmd_survey210(const Context& ctx) {
  auto result = survey210(ctx.limits, ctx.tok());
  auto bad = survey210_mismatches(result);
  json entries = json::array();
  for (auto& e : result.entries) entries.push_back(to_json(e));
  std::size_t fr_count = 0;
  for (auto& e : result.entries) fr_count += e.freely_representable;
  std::ostringstream t;
  t << "  |A|    r  spec              mu  FR   class\n";
  for (auto& e : result.entries)
    t << std::setw(5) << e.m << std::setw(5) << e.r << "  " << std::left << std::setw(16) << e.spec << std::right
      << std::setw(4) << e.mu_order << "  " << std::setw(3) << yes_no(e.freely_representable) << std::setw(6) << e.iso_class
      << "\n";
  t << "isomorphism classes: " << result.classes << "; reference mismatches: " << bad.size() << "\n";
  return {{{"entries", std::move(entries)},
           {"classes", result.classes},
           {"freely_representable_count", fr_count},
           {"reference_mismatches", bad.size()},
           {"matches_reference", bad.empty()}},
          t.str()};
}

int exit_code(ErrorKind k) { return k == ErrorKind::CapExceeded || k == ErrorKind::Cancelled ? 2 : 1; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Freely representable finite groups: classification, norm relations, representations"};
  app.require_subcommand(1);
  bool as_json = false;
  std::optional<std::size_t> cap;
  std::optional<std::uint64_t> seed;
  std::optional<double> deadline;
  app.add_flag("--json", as_json, "emit JSON");
  app.add_option("--cap", cap, "override the enumeration caps");
  app.add_option("--seed", seed, "seed for sampled associativity and homomorphism checks");
  app.add_option("--deadline", deadline, "wall-clock budget in seconds")->check(CLI::PositiveNumber);

  std::string spec;
  auto* analyze = app.add_subcommand("analyze", "classify a group");
  analyze->add_option("spec", spec, "group spec")->required();
  auto* norm = app.add_subcommand("norm-relation", "search for a norm relation of unity");
  norm->add_option("spec", spec, "group spec")->required();
  auto* represent = app.add_subcommand("represent", "build a fixed-point-free representation");
  represent->add_option("spec", spec, "group spec")->required();
  auto* group = app.add_subcommand("group", "print the Cayley table");
  group->add_option("spec", spec, "group spec")->required();
  std::vector<std::int64_t> primes{3, 5, 7, 11, 13};
  bool allow_large = false;
  auto* census = app.add_subcommand("census", "cyclic-subgroup census of SL2(F_p)");
  census->add_option("p", primes, "odd primes");
  census->add_flag("--allow-large", allow_large, "permit p >= 17");
  auto* survey = app.add_subcommand("survey210", "the groups of order 210");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    json err = {{"kind", "ParseError"}, {"detail", e.what()}, {"offending_input", ""}};
    std::cerr << (as_json ? err.dump() : "error: " + std::string(e.what())) << "\n";
    return 1;
  }

  Context ctx;
  if (cap) ctx.limits.group_order = ctx.limits.subgroup_enumeration = ctx.limits.norm_relation = *cap;
  if (seed) ctx.limits.seed = *seed;
  if (deadline)
    ctx.token = std::make_unique<CancelToken>(std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(*deadline)));

  std::string offending = spec;
  try {
    Output out;
    if (*analyze) out = cmd_analyze(spec, ctx);
    else if (*norm) out = cmd_norm_relation(spec, ctx);
    else if (*represent) out = cmd_represent(spec, ctx);
    else if (*group) out = cmd_group(spec, ctx);
    else if (*census) {
      offending.clear();
      for (auto p : primes) offending += (offending.empty() ? "" : " ") + std::to_string(p);
      out = cmd_census(primes, allow_large, ctx);
    } else if (*survey) {
      offending.clear();
      out = cmd_survey210(ctx);
    }
    // written in one piece once the command has finished
    std::cout << (as_json ? out.data.dump(2) + "\n" : out.text) << std::flush;
    return 0;
  } catch (const Error& e) {
    if (as_json) std::cerr << error_json(e, offending).dump() << "\n";
    else std::cerr << "error: " << to_string(e.kind()) << ": " << e.detail() << " (input: " << offending << ")\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    json err = {{"kind", "Internal"}, {"detail", e.what()}, {"offending_input", offending}};
    std::cerr << (as_json ? err.dump() : "error: " + std::string(e.what())) << "\n";
    return 1;
  }
}
