#include "brauer/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <regex>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "brauer/axioms.hpp"
#include "brauer/errors.hpp"
#include "brauer/group.hpp"

namespace brauer {

using nlohmann::json;

namespace {

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json coeffs_json(const BurnsideRing& ring, const IntVector& v) {
  json coeffs = json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) coeffs[ring.label(i)] = integer_json(v[i]);
  return json{{"coeffs", coeffs}};
}

// Hermite basis with the largest subgroup class as the leading column, so
// each vector has a positive coefficient on its largest subgroup.
std::vector<IntVector> top_down_basis(const IntegerLattice& lattice) {
  std::vector<IntVector> rows = lattice.basis_vectors();
  for (auto& v : rows) std::reverse(v.begin(), v.end());
  rows = IntegerLattice::spanned_by(lattice.ambient_dim(), rows).basis_vectors();
  for (auto& v : rows) std::reverse(v.begin(), v.end());
  return rows;
}

json basis_json(const BurnsideRing& ring, const IntegerLattice& lattice) {
  json out = json::array();
  for (const auto& v : top_down_basis(lattice)) out.push_back(coeffs_json(ring, v));
  return out;
}

json invariants_json(const AbelianInvariants& a) {
  json out = json::array();
  for (const auto& f : a.factors()) out.push_back(integer_json(f));
  return out;
}

const char* verdict_kind(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Z: return "Z";
    case Verdict::Kind::CyclicQ: return "cyclic_q";
    case Verdict::Kind::Trivial: return "trivial";
    case Verdict::Kind::CharZeroEquivalent: return "char_zero_equivalent";
    case Verdict::Kind::OutOfClassification: return "out_of_classification";
  }
  return "";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read group spec file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<GroupSpec> family_shorthand(const std::string& s) {
  static const std::regex re(R"(^([a-z_0-9]+)\s*(?:\(\s*([0-9,\s]*)\))?$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) return std::nullopt;
  const std::string family = m[1];
  std::vector<unsigned long> args;
  std::stringstream ss(m[2].str());
  for (std::string tok; std::getline(ss, tok, ',');) {
    tok = trim(tok);
    if (tok.empty()) throw ValidationError("empty argument in '" + s + "'");
    args.push_back(std::stoul(tok));
  }
  json doc{{"family", family}};
  if (family == "elementary_abelian") {
    if (args.size() != 2) throw ValidationError("elementary_abelian takes (l, d)");
    doc["l"] = args[0];
    doc["d"] = args[1];
  } else if (family == "quaternion8") {
    if (!args.empty()) throw ValidationError("quaternion8 takes no arguments");
  } else if (family == "cyclic" || family == "symmetric" || family == "alternating" ||
             family == "dihedral") {
    if (args.size() != 1) throw ValidationError(family + " takes one argument");
    doc["n"] = args[0];
  } else {
    return std::nullopt;
  }
  return parse_group_spec(doc);
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    tok = trim(tok);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw ValidationError("bad prime list '" + text + "'");
    const std::uint64_t p = std::stoull(tok);
    Characteristic::prime(p);
    out.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string group;
  std::uint64_t p = 0;
  std::size_t max_order = kDefaultOrderBound;
  bool all_subquotients = false;
  bool emit_relations = false;
  bool timing = false;
  std::string format = "json";
};

std::string text_report(const PrimReport& r, const GroupSpec& spec) {
  const BurnsideRing& ring = *r.ring;
  std::ostringstream os;
  os << "group: " << (spec.name.empty() ? serialize(spec) : spec.name) << "\n";
  os << "order: " << ring.group().order() << "\n";
  os << "p: " << r.p << "\n";
  os << "subgroup classes: " << ring.rank() << "\n";
  os << "kernel rank: " << r.kernel.lattice.rank() << "\n";
  for (const auto& v : top_down_basis(r.kernel.lattice))
    os << "  " << BurnsideElement(r.ring, v) << "\n";
  os << "imprim rank: " << r.imprim.rank() << "\n";
  os << "prim: " << r.prim << "\n";
  os << "expected: " << r.expected.to_string() << "\n";
  if (r.generator)
    os << "generator: " << *r.generator << " (" << r.generator_source << ", "
       << (r.generator_generates ? "generates" : "does not generate") << ")\n";
  os << "match: " << (r.match ? "yes" : "no") << "\n";
  return os.str();
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  Timer timer;
  const GroupSpec spec = resolve_group_argument(a.group);
  const BuiltGroup built = build(spec, a.max_order);
  const RingPtr ring = BurnsideRing::create(built.group);
  const PrimReport report = analyze(
      ring, a.p, a.all_subquotients ? ImprimMode::AllSubquotients : ImprimMode::MaximalMinimal);
  std::string text;
  if (a.format == "json") {
    ReportOptions opt{a.emit_relations, a.timing, timer.seconds()};
    json doc = report_json(report, spec, built, opt);
    doc["imprim_mode"] = a.all_subquotients ? "all_subquotients" : "maximal_minimal";
    text = doc.dump(2) + "\n";
  } else {
    text = text_report(report, spec);
  }
  out << text;
  return report.match ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::size_t max_order = 60;
  std::string primes;
  bool all_subquotients = false;
  std::string format = "text";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  std::optional<std::set<std::uint64_t>> primes;
  if (!a.primes.empty()) {
    const auto list = parse_primes(a.primes);
    primes = std::set<std::uint64_t>(list.begin(), list.end());
  }
  const ImprimMode mode =
      a.all_subquotients ? ImprimMode::AllSubquotients : ImprimMode::MaximalMinimal;

  json rows = json::array();
  std::ostringstream table;
  table << std::left << std::setw(12) << "entry" << std::setw(4) << "p" << std::setw(7) << "order"
        << std::setw(10) << "prim" << std::setw(24) << "expected"
        << "match\n";
  std::size_t mismatches = 0, count = 0;
  std::map<std::string, RingPtr> rings;
  for (const CatalogEntry& e : verification_catalog()) {
    if (primes && !primes->count(e.p)) continue;
    const auto order = e.spec.predicted_order();
    if (order && *order > a.max_order) continue;
    RingPtr& ring = rings[e.name];
    if (!ring) ring = BurnsideRing::create(build(e.spec).group);
    if (ring->group().order() > a.max_order) continue;
    const PrimReport r = analyze(ring, e.p, mode);
    ++count;
    if (!r.match) ++mismatches;
    rows.push_back({{"entry", e.name},
                    {"p", e.p},
                    {"order", ring->group().order()},
                    {"prim", invariants_json(r.prim)},
                    {"expected", r.expected.to_string()},
                    {"match", r.match}});
    table << std::left << std::setw(12) << e.name << std::setw(4) << e.p << std::setw(7)
          << ring->group().order() << std::setw(10) << r.prim.to_string() << std::setw(24)
          << r.expected.to_string() << (r.match ? "yes" : "NO") << "\n";
  }
  if (a.format == "json") {
    out << json{{"schema_version", kReportSchemaVersion},
                {"entries", rows},
                {"mismatches", mismatches}}
               .dump(2)
        << "\n";
  } else {
    table << count << " entries, " << mismatches << " mismatches\n";
    out << table.str();
  }
  return mismatches == 0 ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- selftest

struct SelftestArgs {
  bool axioms = false;
  bool lattices = false;
  std::string group;
};

int cmd_selftest(const SelftestArgs& a, std::ostream& out) {
  const bool run_axioms = a.axioms || !a.lattices;
  const bool run_lattices = a.lattices || !a.axioms;
  std::ostringstream os;
  bool ok = true;

  if (run_axioms) {
    std::vector<GroupSpec> groups;
    if (!a.group.empty()) {
      groups.push_back(resolve_group_argument(a.group));
    } else {
      const std::pair<const char*, const char*> defaults[] = {
          {"S_3", "symmetric(3)"}, {"C_6", "cyclic(6)"}, {"D_4", "dihedral(4)"}, {"A_4", "alternating(4)"}};
      for (const auto& [name, text] : defaults) {
        groups.push_back(resolve_group_argument(text));
        groups.back().name = name;
      }
    }
    for (const GroupSpec& spec : groups) {
      const RingPtr ring = BurnsideRing::create(build(spec).group);
      const std::string name = spec.name.empty() ? serialize(spec) : spec.name;
      for (const AxiomResult& r : check_axioms(ring)) {
        ok = ok && r.passed();
        os << std::left << std::setw(8) << name << std::setw(16) << r.family << std::setw(6)
           << r.checks << (r.passed() ? "pass" : "FAIL " + r.first_failure) << "\n";
      }
    }
  }

  if (run_lattices) {
    std::map<std::string, RingPtr> rings;
    for (const CatalogEntry& e : verification_catalog()) {
      RingPtr& ring = rings[e.name];
      if (!ring) ring = BurnsideRing::create(build(e.spec).group);
      const RelationLattice k = kernel_lattice(ring, e.p);
      const bool rank_ok =
          k.lattice.rank() == expected_kernel_rank(*ring, Characteristic::prime(e.p));
      ok = ok && rank_ok;
      os << std::left << std::setw(12) << e.name << "p=" << std::setw(3) << e.p << std::setw(14)
         << "kernel_rank" << (rank_ok ? "pass" : "FAIL") << "\n";
      const StructuralFlags f = structural_predicates(ring->group(), e.p);
      const bool is_cp = f.order == e.p;
      const auto qe = f.quasi_elementary.find(e.p);
      if (!is_cp && qe != f.quasi_elementary.end() && qe->second) {
        const bool cert = noprimss_sublattice(ring, e.p).certified();
        ok = ok && cert;
        os << std::left << std::setw(12) << e.name << "p=" << std::setw(3) << e.p
           << std::setw(14) << "noprimss" << (cert ? "pass" : "FAIL") << "\n";
      }
    }
  }
  out << os.str();
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

GroupSpec resolve_group_argument(std::string_view arg) {
  const std::string s = trim(arg);
  if (s.empty()) throw ValidationError("empty group argument");
  if (s.front() == '{') return parse_group_spec(std::string_view(s));
  if (s.rfind("catalog:", 0) == 0) {
    const std::string name = s.substr(8);
    for (const CatalogEntry& e : verification_catalog())
      if (e.name == name) return e.spec;
    throw ValidationError("no catalog group named '" + name + "'");
  }
  if (auto spec = family_shorthand(s)) return *spec;
  return parse_group_spec(std::string_view(read_file(s)));
}

json report_json(const PrimReport& r, const GroupSpec& spec, const BuiltGroup& built,
                 const ReportOptions& options) {
  const BurnsideRing& ring = *r.ring;
  const Group& g = ring.group();
  const StructuralFlags f = structural_predicates(g, r.p);

  json quasi = json::object();
  for (const auto& [q, v] : f.quasi_elementary) quasi[std::to_string(q)] = v;
  json flags{{"soluble", f.soluble},
             {"p_group", f.p_group},
             {"cyclic", f.cyclic},
             {"cyclic_p_prime", f.cyclic_p_prime},
             {"quasi_elementary", quasi}};
  json group{{"order", g.order()}, {"spec", to_json(spec)}, {"flags", flags}};
  if (!spec.name.empty()) group["name"] = spec.name;
  if (built.certificate)
    group["action"] = {{"faithful", built.certificate->faithful},
                       {"irreducible", built.certificate->irreducible}};

  json labels = json::array();
  std::size_t cyclic_pp = 0;
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    labels.push_back(ring.label(i));
    if (ring.subgroups()[i].cyclic_p_prime(r.p)) ++cyclic_pp;
  }

  json expected{{"kind", verdict_kind(r.expected.kind)},
                {"rule", r.expected.rule},
                {"text", r.expected.to_string()}};
  if (r.expected.kind == Verdict::Kind::CyclicQ) expected["q"] = r.expected.q;
  if (r.expected.kind == Verdict::Kind::Z || r.expected.kind == Verdict::Kind::CyclicQ ||
      r.expected.kind == Verdict::Kind::Trivial)
    expected["invariants"] = invariants_json(r.expected.invariants());

  json doc{{"schema_version", kReportSchemaVersion},
           {"group", group},
           {"p", r.p},
           {"subgroup_classes", ring.rank()},
           {"subgroup_labels", labels},
           {"cyclic_p_prime_classes", cyclic_pp},
           {"kernel", {{"rank", r.kernel.lattice.rank()}, {"basis", basis_json(ring, r.kernel.lattice)}}},
           {"imprim", {{"rank", r.imprim.rank()}, {"basis", basis_json(ring, r.imprim)}}},
           {"prim", invariants_json(r.prim)},
           {"prim_text", r.prim.to_string()},
           {"expected", expected},
           {"match", r.match}};

  if (r.generator) {
    json gen = coeffs_json(ring, r.generator->coeffs());
    gen["source"] = r.generator_source;
    gen["in_kernel"] = r.generator_in_kernel;
    gen["generates"] = r.generator_generates;
    gen["text"] = r.generator->to_string();
    doc["generator"] = gen;
  } else {
    doc["generator"] = nullptr;
  }
  if (r.kernel_char0) {
    json c0{{"kernel_rank", r.kernel_char0->lattice.rank()},
            {"kernel_equal", r.kernel_char0->lattice == r.kernel.lattice}};
    if (r.prim_char0) c0["prim"] = invariants_json(*r.prim_char0);
    doc["char0"] = c0;
  }
  if (options.emit_relations) {
    json kernel = json::array();
    for (const auto& v : top_down_basis(r.kernel.lattice))
      kernel.push_back(BurnsideElement(r.ring, v).to_string());
    json imprim = json::array();
    for (const auto& gen : r.imprim_generators) {
      imprim.push_back(
          {{"kind", gen.kind == ImprimGenerator::Kind::Induced ? "induced" : "inflated"},
           {"from", ring.label(gen.class_index)},
           {"relation", coeffs_json(ring, gen.relation.coeffs())},
           {"text", gen.relation.to_string()}});
    }
    doc["relations"] = {{"kernel", kernel}, {"imprim_generators", imprim}};
  }
  if (options.timing) doc["timing"] = {{"seconds", options.seconds}};
  return doc;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brauer relations over semisimplified modular representations", "brauer"};
  app.require_subcommand(1);

  AnalyzeArgs aa;
  auto* analyze_cmd = app.add_subcommand("analyze", "Kernel, imprimitive lattice and Prim for one group");
  analyze_cmd->add_option("--group,-g", aa.group, "Inline JSON, catalog:<name>, family shorthand or file")
      ->required();
  analyze_cmd->add_option("--p,-p", aa.p, "Prime")->required();
  analyze_cmd->add_option("--max-order", aa.max_order, "Largest group order accepted");
  analyze_cmd->add_flag("--debug-imprim-all", aa.all_subquotients,
                        "Generate Imprim from every proper subquotient");
  analyze_cmd->add_flag("--emit-relations", aa.emit_relations, "Include every relation in readable form");
  analyze_cmd->add_flag("--timing", aa.timing, "Include wall-clock time (breaks byte identity)");
  analyze_cmd->add_option("--format", aa.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification catalog");
  verify_cmd->add_option("--max-order", va.max_order, "Skip groups larger than this");
  verify_cmd->add_option("--primes", va.primes, "Comma-separated primes to keep");
  verify_cmd->add_flag("--debug-imprim-all", va.all_subquotients,
                       "Generate Imprim from every proper subquotient");
  verify_cmd->add_option("--format", va.format, "text or json")
      ->check(CLI::IsMember({"json", "text"}));

  SelftestArgs sa;
  auto* selftest_cmd = app.add_subcommand("selftest", "Axiom suites and lattice certificates");
  selftest_cmd->add_flag("--axioms", sa.axioms, "Run the axiom suites");
  selftest_cmd->add_flag("--lattices", sa.lattices, "Check kernel ranks and noprimss certificates");
  selftest_cmd->add_option("--group,-g", sa.group, "Run the axiom suites on this group only");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    std::ostringstream buffer;
    int code = kExitOk;
    if (*analyze_cmd) {
      Characteristic::prime(aa.p);
      code = cmd_analyze(aa, buffer);
    } else if (*verify_cmd) {
      code = cmd_verify(va, buffer);
    } else {
      code = cmd_selftest(sa, buffer);
    }
    out << buffer.str();
    return code;
  } catch (const OrderBoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace brauer
