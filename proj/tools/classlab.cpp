#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "classlab/classes.hpp"
#include "classlab/config.hpp"
#include "classlab/errors.hpp"
#include "classlab/realization.hpp"
#include "classlab/selftest.hpp"
#include "classlab/structure.hpp"
#include "classlab/universe.hpp"

using namespace classlab;
using nlohmann::ordered_json;

namespace {

struct Global {
  bool json = false;
  std::string universe;
  int jobs = 0;
  std::uint64_t enum_cap = 0;
  std::uint64_t iso_cap = 0;
  std::size_t subgroup_limit = 0;
};

std::string describe(const PermGroup& g) {
  std::string name = known_name(g);
  return name.empty() ? "order " + std::to_string(g.order()) : name;
}

ordered_json group_json(const PermGroup& g) {
  return {{"name", describe(g)}, {"order", g.order()}, {"degree", g.degree()}, {"generators", g.generator_string()}};
}

ordered_json check(const std::string& name, const std::string& status, const std::string& witness = "") {
  ordered_json c{{"name", name}, {"status", status}};
  if (!witness.empty()) c["witness"] = witness;
  return c;
}

Catalog load_universe(const Global& global) {
  if (!global.universe.empty()) return Catalog::load(global.universe);
  return build_universe(UniverseSpec::with_default_extras());
}

class Report {
 public:
  Report(std::string command, ordered_json inputs) {
    doc_["command"] = std::move(command);
    doc_["inputs"] = std::move(inputs);
    doc_["results"] = ordered_json::object();
    doc_["checks"] = ordered_json::array();
  }
  ordered_json& results() { return doc_["results"]; }
  ordered_json& checks() { return doc_["checks"]; }
  void timing(ordered_json t) { timing_ = std::move(t); }

  bool failed() const {
    for (const auto& c : doc_["checks"])
      if (c["status"] == "fail") return true;
    return false;
  }

  ordered_json finish(double seconds) {
    ordered_json out = doc_;
    timing_["total_seconds"] = seconds;
    out["timing"] = timing_;
    return out;
  }

 private:
  ordered_json doc_;
  ordered_json timing_ = ordered_json::object();
};

// ---------------------------------------------------------------------------

void cmd_group(Report& report, const std::string& spec, std::ostream& text) {
  PermGroup g = parse_group_spec(spec);
  auto& res = report.results();
  res["group"] = group_json(g);
  const auto& lattice = normal_subgroups(g);
  ordered_json normals = ordered_json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i)
    normals.push_back({{"order", lattice.order(i)}, {"maximal", static_cast<bool>(lattice.maximal[i])},
                       {"generators", lattice.members[i].generator_string()}});
  res["normal_subgroups"] = normals;
  ordered_json simple = ordered_json::array();
  if (g.is_trivial()) {
    res["radical"] = nullptr;
  } else {
    res["radical"] = group_json(baer_radical(g));
    for (const auto& q : simple_quotients(g)) simple.push_back(describe(q));
  }
  res["simple_quotients"] = simple;
  res["predicates"] = {{"abelian", is_abelian(g)},     {"cyclic", is_cyclic(g)}, {"nilpotent", is_nilpotent(g)},
                       {"solvable", is_solvable(g)},   {"simple", is_simple(g)},
                       {"strongly_non_solvable", member(cls::fnr(), g)}};

  text << "group " << spec << ": " << describe(g) << ", order " << g.order() << ", degree " << g.degree() << "\n";
  text << "normal subgroups: " << lattice.size() << " (orders";
  for (std::size_t i = 0; i < lattice.size(); ++i) text << ' ' << lattice.order(i);
  text << ")\n";
  if (!g.is_trivial()) text << "radical: " << describe(baer_radical(g)) << "\n";
  text << "simple quotients: " << (simple.empty() ? "none" : "");
  for (std::size_t i = 0; i < simple.size(); ++i) text << (i ? ", " : "") << simple[i].get<std::string>();
  text << "\n";
  for (const auto& [k, v] : res["predicates"].items()) text << k << ": " << (v.get<bool>() ? "yes" : "no") << "\n";
}

void cmd_class(Report& report, const std::string& expr, const std::string& spec, std::ostream& text) {
  ClassPtr c = parse_class(expr);
  PermGroup g = parse_group_spec(spec);
  bool in = member(c, g);
  auto& res = report.results();
  res["class"] = c->to_string();
  res["group"] = group_json(g);
  res["member"] = in;
  text << spec << (in ? " is in " : " is not in ") << c->to_string() << "\n";
  if (c->kind == ClassKind::Dual && !in) {
    auto i = dual_witness(*c->children[0], g);
    const auto& lattice = normal_subgroups(g);
    const PermGroup& h = lattice.members[*i];
    res["witness"] = {{"normal_subgroup", group_json(h)}, {"quotient", group_json(lattice_quotient(g, *i))}};
    text << "witness: normal subgroup " << describe(h) << " <" << h.generator_string() << "> with quotient "
         << describe(lattice_quotient(g, *i)) << " in " << c->children[0]->to_string() << "\n";
  }
  if (c->kind == ClassKind::Hat && in) {
    auto series = hat_series(*c->children[0], g);
    ordered_json s = ordered_json::array();
    text << "series:";
    for (std::size_t i = 0; i < series->size(); ++i) {
      s.push_back(group_json((*series)[i]));
      text << (i ? " ⊴ " : " ") << describe((*series)[i]);
    }
    text << "\n";
    res["series"] = s;
  }
}

void cmd_audit(Report& report, const Global& global, const std::string& expr, bool all, const std::vector<bool>& which,
               std::ostream& text) {
  ClassPtr c = parse_class(expr);
  Catalog u = load_universe(global);
  auto& res = report.results();
  res["class"] = c->to_string();
  res["universe"] = u.spec.to_string();
  std::vector<AuditReport> audits;
  if (all) {
    auto k = classify(c, u);
    audits = k.audits;
    res["flags"] = {{"pre_formation", k.pre_formation},
                    {"formation", k.formation},
                    {"extensive_formation", k.extensive_formation},
                    {"pre_variety", k.pre_variety},
                    {"extensive_variety", k.extensive_variety}};
  } else {
    const Property props[] = {Property::C0, Property::C1, Property::C2, Property::C3};
    for (std::size_t i = 0; i < 4; ++i)
      if (which[i]) audits.push_back(audit_property(c, u, props[i]));
  }
  ordered_json list = ordered_json::array();
  for (const auto& a : audits) {
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : a.counterexamples)
      witnesses.push_back({{"group", w.group}, {"description", w.description}, {"subgroups", w.subgroups}});
    list.push_back({{"property", to_string(a.property)},
                    {"holds", a.holds},
                    {"violations", a.violations},
                    {"counterexamples", witnesses},
                    {"skipped", a.skipped}});
    text << to_string(a.property) << ": " << (a.holds ? "holds" : "fails") << " on " << a.domain;
    if (!a.skipped.empty()) text << " (" << a.skipped.size() << " skipped)";
    text << "\n";
    for (const auto& w : a.counterexamples) text << "  " << w.description << "\n";
  }
  res["audits"] = list;
  if (res.contains("flags"))
    for (const auto& [k, v] : res["flags"].items()) text << k << ": " << (v.get<bool>() ? "yes" : "no") << "\n";
}

void cmd_dual_chain(Report& report, const std::string& expr, const std::string& spec, std::uint64_t depth,
                    std::ostream& text) {
  ClassPtr c = parse_class(expr);
  PermGroup g = parse_group_spec(spec);
  ordered_json chain = ordered_json::array();
  for (std::uint64_t k = 0; k <= depth; ++k) {
    bool in = dual_chain_member(c, g, k);
    chain.push_back({{"depth", k}, {"member", in}});
    text << "depth " << k << ": " << (in ? "member" : "not a member") << "\n";
  }
  report.results() = {{"class", c->to_string()}, {"group", group_json(g)}, {"chain", chain}};
}

ordered_json certificate_json(const RealizationCertificate& cert) {
  ordered_json iso = ordered_json::array();
  const auto& f = cert.iso.forward;
  for (std::size_t i = 0; i < f.source().generators().size(); ++i)
    iso.push_back({{"source", f.source().generators()[i].to_cycle_string()}, {"image", f.images()[i].to_cycle_string()}});
  auto status = [](bool ran) { return ran ? "pass" : "skipped"; };
  return {{"target", group_json(cert.target)},
          {"g0", group_json(cert.g0)},
          {"h0", group_json(cert.h0)},
          {"gn", group_json(cert.gn)},
          {"embedding", [&] {
             ordered_json e = ordered_json::array();
             for (std::size_t i = 0; i < cert.embed.images().size(); ++i)
               e.push_back({{"source", cert.embed.source().generators()[i].to_cycle_string()},
                            {"image", cert.embed.images()[i].to_cycle_string()}});
             return e;
           }()},
          {"coordinates", cert.n},
          {"gamma", group_json(cert.gamma)},
          {"h", group_json(cert.h)},
          {"normalizer", group_json(cert.normalizer)},
          {"isomorphism", iso},
          {"checks",
           {{"structural", status(cert.checks.structural)},
            {"brute", status(cert.checks.brute)},
            {"order_arithmetic", status(cert.checks.order_arithmetic)},
            {"isomorphism", status(cert.checks.isomorphism)}}}};
}

void cmd_realize(Report& report, const std::string& spec, const std::string& top, std::size_t alt, bool no_brute,
                 const std::string& out, std::ostream& text) {
  RealizeOptions options;
  if (!top.empty()) options.top = parse_group_spec(top);
  if (alt) options.alt = alt;
  options.brute_check = !no_brute;
  auto cert = realize(parse_group_spec(spec), options);
  auto doc = certificate_json(cert);
  for (const auto& [k, v] : doc["checks"].items()) report.checks().push_back(check(k, v.get<std::string>()));
  report.results() = doc;
  if (!out.empty()) {
    std::ofstream file(out);
    if (!file) throw PreconditionError("cannot write " + out);
    file << doc.dump(2) << "\n";
  }
  text << "Γ: order " << cert.gamma.order() << " on " << cert.gamma.degree() << " points, N = " << cert.n << "\n";
  text << "H: order " << cert.h.order() << ", N_Γ(H): order " << cert.normalizer.order() << "\n";
  text << "N_Γ(H)/H ≅ " << spec << " certified\n";
  for (const auto& [k, v] : doc["checks"].items()) text << k << ": " << v.get<std::string>() << "\n";
}

void cmd_search(Report& report, const std::string& gamma_spec, const std::string& spec, std::size_t limit,
                std::ostream& text) {
  PermGroup gamma = parse_group_spec(gamma_spec);
  PermGroup g = parse_group_spec(spec);
  ordered_json hits = ordered_json::array();
  for (const auto& hit : brute_search(gamma, g, limit ? limit : limits().subgroup_limit)) {
    hits.push_back({{"h", group_json(hit.h)}, {"normalizer", group_json(hit.normalizer)}});
    text << "H = <" << hit.h.generator_string() << "> (order " << hit.h.order() << "), N(H) order "
         << hit.normalizer.order() << "\n";
  }
  text << hits.size() << " subgroups with N(H)/H ≅ " << spec << "\n";
  report.results() = {{"gamma", group_json(gamma)}, {"target", group_json(g)}, {"hits", hits}};
}

void cmd_universe_build(Report& report, std::size_t sym, const std::vector<std::string>& extras, bool no_defaults,
                        const std::string& out, std::ostream& text) {
  UniverseSpec spec = no_defaults ? UniverseSpec{sym, {}} : UniverseSpec::with_default_extras(sym);
  for (const auto& e : extras) spec.extras.push_back(e);
  Catalog u = build_universe(spec);
  if (!out.empty()) u.save(out);
  ordered_json names = ordered_json::array();
  for (const auto& e : u.entries) names.push_back({{"name", e.name}, {"order", e.group.order()}});
  report.results() = {{"spec", spec.to_string()}, {"size", u.size()}, {"entries", names}};
  text << u.size() << " groups";
  if (!out.empty()) text << " written to " << out;
  text << "\n";
  for (const auto& e : u.entries) text << "  " << e.name << " (order " << e.group.order() << ")\n";
}

void cmd_selftest(Report& report, const Global& global, const std::string& filter, std::ostream& text) {
  Catalog u = load_universe(global);
  auto results = run_selftest(u, filter);
  std::size_t pass = 0, fail = 0, skipped = 0;
  ordered_json timing = ordered_json::object();
  for (const auto& r : results) {
    ordered_json c{{"name", r.name}, {"status", r.status}, {"cases", r.cases}};
    if (!r.witnesses.empty()) c["witness"] = r.witnesses;
    report.checks().push_back(c);
    timing[r.name] = r.seconds;
    pass += r.status == "pass";
    fail += r.status == "fail";
    skipped += r.status == "skipped";
    text << (r.status == "pass" ? "PASS" : r.status == "fail" ? "FAIL" : "SKIP") << "  " << r.name << " (" << r.cases
         << " cases)\n";
    for (const auto& w : r.witnesses) text << "      " << w << "\n";
  }
  report.results() = {{"universe", u.spec.to_string()}, {"passed", pass}, {"failed", fail}, {"skipped", skipped}};
  report.timing({{"checks", timing}});
  text << pass << " passed, " << fail << " failed, " << skipped << " skipped\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite group classes, duals and normalizer-quotient realizations"};
  app.require_subcommand(1);
  app.fallthrough();
  Global global;
  app.add_flag("--json", global.json, "Print the JSON report instead of text");
  app.add_option("--universe", global.universe, "Catalog file (default: build the default universe)");
  app.add_option("--jobs", global.jobs, "Worker threads (default: available parallelism)")->check(CLI::NonNegativeNumber);
  app.add_option("--enum-cap", global.enum_cap, "Largest group order to enumerate");
  app.add_option("--iso-cap", global.iso_cap, "Largest group order for isomorphism search");
  app.add_option("--subgroup-limit", global.subgroup_limit, "Largest subgroup count to enumerate");

  std::string spec, spec2, expr, top, out, filter;
  std::size_t alt = 0, limit = 0, sym = 5;
  std::uint64_t depth = 3;
  bool no_brute = false, all = false, no_defaults = false;
  std::vector<bool> which(4, false);
  bool c0 = false, c1 = false, c2 = false, c3 = false;
  std::vector<std::string> extras;

  auto* group = app.add_subcommand("group", "Structure summary of a group");
  group->add_option("spec", spec, "Group spec")->required();

  auto* klass = app.add_subcommand("class", "Membership of a group in a class");
  klass->add_option("class", expr, "Class expression")->required();
  klass->add_option("spec", spec, "Group spec")->required();

  auto* audit = app.add_subcommand("audit", "Closure-property audits over the universe");
  audit->add_option("class", expr, "Class expression")->required();
  audit->add_flag("--all", all, "Audit C0 to C3 and classify");
  audit->add_flag("--c0", c0, "Subgroup closure");
  audit->add_flag("--c1", c1, "Quotient closure");
  audit->add_flag("--c2", c2, "Extension closure");
  audit->add_flag("--c3", c3, "Closure under subdirect products");

  auto* chain = app.add_subcommand("dual-chain", "Membership in iterated duals");
  chain->add_option("class", expr, "Class expression")->required();
  chain->add_option("spec", spec, "Group spec")->required();
  chain->add_option("--depth", depth, "Largest dual depth")->capture_default_str();

  auto* real = app.add_subcommand("realize", "Certify N_Γ(H)/H ≅ G");
  real->add_option("spec", spec, "Group spec")->required();
  real->add_option("--top", top, "Top group containing G");
  real->add_option("--alt", alt, "Use A_n as the top group through the regular action");
  real->add_flag("--no-brute-check", no_brute, "Skip the brute-force normalizer");
  real->add_option("--out", out, "Also write the certificate to a file");

  auto* search = app.add_subcommand("search", "Subgroups H of Γ with N_Γ(H)/H ≅ G");
  search->add_option("gamma", spec2, "Group spec for Γ")->required();
  search->add_option("spec", spec, "Group spec for G")->required();
  search->add_option("--limit", limit, "Subgroup count limit");

  auto* universe = app.add_subcommand("universe", "Catalog management");
  universe->require_subcommand(1);
  auto* build = universe->add_subcommand("build", "Build a catalog of small groups");
  build->add_option("--sym", sym, "Symmetric degree whose subgroups are enumerated")->capture_default_str();
  build->add_option("--extras", extras, "Additional group specs")->delimiter(',');
  build->add_flag("--no-default-extras", no_defaults, "Do not add the default extras");
  build->add_option("--out", out, "Output path");

  auto* selftest = app.add_subcommand("selftest", "Run the property suite and acceptance checks");
  selftest->add_option("--filter", filter, "Only checks whose name contains this text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  if (command == "universe") command = "universe build";
  ordered_json inputs = ordered_json::object();
  auto record = [&](const CLI::App* sub) {
    for (const auto* opt : sub->get_options()) {
      if (opt->count() == 0 || opt->get_single_name() == "help") continue;
      const auto& values = opt->results();
      inputs[opt->get_single_name()] = values.size() == 1 ? ordered_json(values[0]) : ordered_json(values);
    }
  };
  record(app.get_subcommands().front());
  for (const auto* sub : app.get_subcommands().front()->get_subcommands()) record(sub);
  if (!global.universe.empty()) inputs["universe"] = global.universe;
  Report report(command, inputs);
  std::ostringstream text;

  auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    load_limits_from_env();
    if (global.enum_cap) limits().enum_cap = global.enum_cap;
    if (global.iso_cap) limits().iso_cap = global.iso_cap;
    if (global.subgroup_limit) limits().subgroup_limit = global.subgroup_limit;
    if (global.jobs) set_jobs(global.jobs);
    which = {c0, c1, c2, c3};
    if (!all && !c0 && !c1 && !c2 && !c3) all = true;

    if (*group) cmd_group(report, spec, text);
    else if (*klass) cmd_class(report, expr, spec, text);
    else if (*audit) cmd_audit(report, global, expr, all, which, text);
    else if (*chain) cmd_dual_chain(report, expr, spec, depth, text);
    else if (*real) cmd_realize(report, spec, top, alt, no_brute, out, text);
    else if (*search) cmd_search(report, spec2, spec, limit, text);
    else if (*build) cmd_universe_build(report, sym, extras, no_defaults, out, text);
    else if (*selftest) cmd_selftest(report, global, filter, text);
    code = report.failed() ? 1 : 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const FalsificationAlarm& e) {
    std::cerr << "FALSIFICATION ALARM: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (global.json)
    std::cout << report.finish(seconds).dump(2) << "\n";
  else
    std::cout << text.str();
  return code;
}
