// Command-line front end: order queries, subgraph exports, pattern tables,
// well-organized profiles, enumeration, and the theorem-verification sweeps.
//
// Exit codes: 0 success (and all verifications PASS), 1 verification failure,
// 2 usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hess/gkm.hpp"
#include "hess/hessenberg.hpp"
#include "hess/order.hpp"
#include "hess/patterns.hpp"
#include "hess/perm.hpp"
#include "hess/verify.hpp"
#include "hess/wellorg.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

const char* b2s(bool b) { return b ? "true" : "false"; }

struct QueryArgs {
  std::string op = "leq";
  std::string u, v, hess;
  std::string format = "text";
};

int run_query(const QueryArgs& args) {
  const hess::Permutation u = hess::Permutation::parse(args.u);
  const hess::Permutation v = hess::Permutation::parse(args.v);
  std::optional<hess::HessenbergFunction> h;
  if (!args.hess.empty()) {
    h = hess::HessenbergFunction::parse(args.hess);
    if (h->size() != u.size()) throw std::invalid_argument("permutation and --hess sizes differ");
  }
  const bool wants_h = args.op == "hleq" || args.op == "hinterval";
  if (wants_h && !h) throw std::invalid_argument("--hess is required for " + args.op);

  ordered_json j;
  j["op"] = args.op;
  j["u"] = u.str();
  j["v"] = v.str();
  j["hess"] = h ? ordered_json(h->str()) : ordered_json(nullptr);

  if (args.op == "leq" || args.op == "hleq") {
    const bool r = args.op == "leq" ? hess::bruhat_leq(u, v) : hess::h_bruhat_leq(u, v, *h);
    j["result"] = r;
    if (args.format == "json")
      std::cout << j.dump(2) << "\n";
    else
      std::cout << u.str() << (r ? " <= " : " !<= ") << v.str()
                << (args.op == "hleq" ? " in the h-order " + h->str() : " in the Bruhat order")
                << "\n";
  } else if (args.op == "interval" || args.op == "hinterval") {
    const hess::BruhatInterval ivl =
        args.op == "interval" ? hess::bruhat_interval(u, v) : hess::h_interval(u, v, *h);
    std::vector<std::string> members;
    for (const hess::Permutation& m : ivl.members()) members.push_back(m.str());
    j["size"] = members.size();
    j["members"] = members;
    if (args.format == "json") {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "interval [" << u.str() << ", " << v.str() << "]"
                << (h ? "_" + h->str() : "") << " has " << members.size() << " members\n";
      for (const std::string& m : members) std::cout << m << "\n";
    }
  } else if (args.op == "chain") {
    const auto chain = hess::saturated_chain(u, v, h ? &*h : nullptr);
    std::vector<std::string> steps;
    if (chain)
      for (const hess::Permutation& m : *chain) steps.push_back(m.str());
    j["chain"] = chain ? ordered_json(steps) : ordered_json(nullptr);
    if (args.format == "json") {
      std::cout << j.dump(2) << "\n";
    } else if (chain) {
      for (size_t k = 0; k < steps.size(); ++k)
        std::cout << (k ? " < " : "") << steps[k];
      std::cout << "\n";
    } else {
      std::cout << "no saturated chain from " << u.str() << " to " << v.str() << "\n";
    }
  } else {
    throw std::invalid_argument("unknown query op '" + args.op + "'");
  }
  return 0;
}

struct GraphArgs {
  std::string perm, hess;
  std::string format = "dot";
  bool show_excluded = false;
  bool incomparability = false;
};

int run_graph(const GraphArgs& args) {
  const hess::HessenbergFunction h = hess::HessenbergFunction::parse(args.hess);
  if (args.incomparability) {
    std::cout << hess::incomparability_graph(h).dot();
    return 0;
  }
  if (args.perm.empty())
    throw std::invalid_argument("--perm is required unless --incomparability is given");
  const hess::Permutation w = hess::Permutation::parse(args.perm);
  if (w.size() != h.size()) throw std::invalid_argument("--perm and --hess sizes differ");

  const hess::InducedSubgraph g = hess::induced_subgraph(w, h);
  if (args.format == "dot") {
    std::cout << hess::to_dot(g, args.show_excluded);
    return 0;
  }

  const std::vector<hess::Permutation> verts = g.vertices();
  const std::vector<int> degs = g.degrees();
  const hess::RegularityResult reg = hess::is_regular(g);
  const auto edges = g.edges();

  if (args.format == "csv") {
    std::cout << "kind,a,b\n";
    for (size_t k = 0; k < verts.size(); ++k)
      std::cout << "vertex," << verts[k].str() << "," << degs[k] << "\n";
    for (auto [ra, rb] : edges)
      std::cout << "edge," << hess::lehmer_unrank(g.n(), ra).str() << ","
                << hess::lehmer_unrank(g.n(), rb).str() << "\n";
    return 0;
  }
  if (args.format == "json") {
    ordered_json j;
    j["base"] = w.str();
    j["hess"] = h.str();
    j["n"] = g.n();
    auto jv = ordered_json::array();
    for (size_t k = 0; k < verts.size(); ++k)
      jv.push_back({{"w", verts[k].str()}, {"degree", degs[k]}});
    j["vertices"] = jv;
    auto je = ordered_json::array();
    for (auto [ra, rb] : edges)
      je.push_back({hess::lehmer_unrank(g.n(), ra).str(), hess::lehmer_unrank(g.n(), rb).str()});
    j["edges"] = je;
    j["regular"] = reg.regular;
    j["min_degree"] = reg.min_degree;
    j["max_degree"] = reg.max_degree;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  // text
  std::cout << "subgraph for w=" << w.str() << " h=" << h.str() << ": " << verts.size()
            << " vertices, " << edges.size() << " edges, "
            << (reg.regular ? "regular" : "irregular") << " (degrees " << reg.min_degree << ".."
            << reg.max_degree << ")\n";
  for (size_t k = 0; k < verts.size(); ++k)
    std::cout << verts[k].str() << " deg=" << degs[k] << "\n";
  return 0;
}

struct PatternsArgs {
  std::string perm, hess;
  std::string format = "text";
};

int run_patterns(const PatternsArgs& args) {
  const hess::Permutation w = hess::Permutation::parse(args.perm);
  const hess::HessenbergFunction h = hess::HessenbergFunction::parse(args.hess);
  if (w.size() != h.size()) throw std::invalid_argument("--perm and --hess sizes differ");

  ordered_json results = ordered_json::array();
  for (hess::Pattern p : hess::all_patterns()) {
    const auto witness = hess::find_pattern(w, h, p);
    ordered_json row;
    row["pattern"] = std::string(hess::pattern_name(p));
    row["contained"] = witness.has_value();
    row["witness"] = witness ? ordered_json(witness->indices) : ordered_json(nullptr);
    results.push_back(row);
  }
  if (args.format == "json") {
    ordered_json j;
    j["perm"] = w.str();
    j["hess"] = h.str();
    j["results"] = results;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (args.format == "csv") {
    std::cout << "pattern,contained,witness\n";
    for (hess::Pattern p : hess::all_patterns()) {
      const auto witness = hess::find_pattern(w, h, p);
      std::cout << hess::pattern_name(p) << "," << b2s(witness.has_value()) << ","
                << (witness ? csv_field(witness->str()) : "") << "\n";
    }
    return 0;
  }
  std::cout << "associated patterns of w=" << w.str() << " with h=" << h.str() << "\n";
  for (hess::Pattern p : hess::all_patterns()) {
    const auto witness = hess::find_pattern(w, h, p);
    std::cout << "  " << hess::pattern_name(p)
              << (witness ? "  contained at " + witness->str() : "  avoided") << "\n";
  }
  return 0;
}

struct ProfileArgs {
  std::string perm, hess;
  std::string format = "json";
};

int run_profile(const ProfileArgs& args) {
  const hess::Permutation w = hess::Permutation::parse(args.perm);
  const hess::HessenbergFunction h = hess::HessenbergFunction::parse(args.hess);
  if (w.size() != h.size()) throw std::invalid_argument("--perm and --hess sizes differ");
  const hess::WellOrgProfile p = hess::profile(w, h);
  if (args.format == "json") {
    std::cout << hess::profile_json(w, h, p) << "\n";
    return 0;
  }
  std::cout << "w=" << w.str() << " h=" << h.str() << "\n";
  std::cout << "marked values:";
  for (int y : p.y_values) std::cout << " " << y;
  std::cout << "\nwell-organized: " << b2s(p.well_organized)
            << "\nkind: " << hess::kind_name(p.kind) << "\n";
  if (!p.wbar_chain.empty()) {
    std::cout << "chain:";
    for (const hess::Permutation& u : p.wbar_chain) std::cout << " " << u.str();
    std::cout << "\n";
  }
  return 0;
}

struct VerifyArgs {
  std::vector<std::string> theorems;
  bool all = false;
  bool scan = false;
  bool list = false;
  std::string predicate;
  int n = 5;
  int jobs = 1;
  std::uint64_t seed = 12345;
  std::string format = "text";
  bool timings = false;
};

int run_verify(const VerifyArgs& args) {
  if (args.list) {
    for (const auto& [id, summary] : hess::theorem_catalog())
      std::cout << id << "\n    " << summary << "\n";
    std::cout << "predicates:\n";
    for (const auto& [id, summary] : hess::predicate_catalog())
      std::cout << id << "\n    " << summary << "\n";
    return 0;
  }
  hess::VerifyOptions opt;
  opt.jobs = args.jobs;
  opt.seed = args.seed;

  if (args.scan) {
    const std::vector<hess::ScanRow> rows = hess::scan_pairs(args.n);
    if (args.format == "csv" || args.format == "text") {
      std::cout << "w,h,is_generator,regular,min_deg,max_deg,avoided(B),avoided(C),first_witness\n";
      for (const hess::ScanRow& r : rows)
        std::cout << r.w << "," << csv_field(r.h) << "," << b2s(r.generator) << ","
                  << b2s(r.regular) << "," << r.min_deg << "," << r.max_deg << ","
                  << b2s(r.avoids_b) << "," << b2s(r.avoids_c) << ","
                  << csv_field(r.first_witness) << "\n";
    } else {
      ordered_json j = ordered_json::array();
      for (const hess::ScanRow& r : rows)
        j.push_back({{"w", r.w},
                     {"h", r.h},
                     {"is_generator", r.generator},
                     {"regular", r.regular},
                     {"min_deg", r.min_deg},
                     {"max_deg", r.max_deg},
                     {"avoided_B", r.avoids_b},
                     {"avoided_C", r.avoids_c},
                     {"first_witness", r.first_witness}});
      std::cout << j.dump(2) << "\n";
    }
    return 0;
  }

  if (!args.predicate.empty()) {
    const hess::PredicateResult r = hess::find_counterexample(args.predicate, args.n, opt);
    if (args.format == "json")
      std::cout << hess::predicate_json(r, args.timings) << "\n";
    else
      std::cout << hess::predicate_text(r, args.timings);
    return r.pass() ? 0 : 1;
  }

  std::vector<std::string> ids = args.theorems;
  if (args.all || ids.empty()) {
    ids.clear();
    for (const auto& [id, summary] : hess::theorem_catalog()) ids.push_back(id);
  }
  bool all_pass = true;
  std::vector<hess::VerificationReport> reports;
  for (const std::string& id : ids) {
    reports.push_back(hess::verify_theorem(id, args.n, opt));
    all_pass = all_pass && reports.back().pass();
  }
  if (args.format == "json") {
    ordered_json j;
    auto arr = ordered_json::array();
    for (const auto& r : reports)
      arr.push_back(ordered_json::parse(hess::report_json(r, args.timings)));
    j["reports"] = arr;
    j["all_pass"] = all_pass;
    std::cout << j.dump(2) << "\n";
  } else if (args.format == "csv") {
    std::cout << "theorem_id,status,n_max,pairs_checked,failure_count,skips,w,h,detail\n";
    for (const auto& r : reports) {
      if (r.failures.empty()) {
        std::cout << r.theorem_id << "," << (r.pass() ? "PASS" : "FAIL") << "," << r.n_max << ","
                  << r.pairs_checked << "," << r.failure_count << "," << r.skips << ",,,\n";
      } else {
        for (const auto& f : r.failures)
          std::cout << r.theorem_id << "," << (r.pass() ? "PASS" : "FAIL") << "," << r.n_max << ","
                    << r.pairs_checked << "," << r.failure_count << "," << r.skips << "," << f.w
                    << "," << csv_field(f.h) << "," << csv_field(f.detail) << "\n";
      }
    }
  } else {
    for (const auto& r : reports) std::cout << hess::report_text(r, args.timings);
  }
  return all_pass ? 0 : 1;
}

struct EnumerateArgs {
  std::string kind = "hessenberg";
  int n = 0;
  std::string hess;
  std::string format = "text";
};

int run_enumerate(const EnumerateArgs& args) {
  std::vector<std::string> items;
  int n = args.n;
  if (args.kind == "hessenberg") {
    if (n < 1) throw std::invalid_argument("--n is required for --kind hessenberg");
    for (const hess::HessenbergFunction& h : hess::enumerate_hessenberg(n))
      items.push_back(h.str());
  } else if (args.kind == "generators") {
    if (args.hess.empty()) throw std::invalid_argument("--hess is required for --kind generators");
    const hess::HessenbergFunction h = hess::HessenbergFunction::parse(args.hess);
    n = h.size();
    for (const hess::Permutation& w : hess::generators(h)) items.push_back(w.str());
  } else {
    throw std::invalid_argument("unknown enumerate kind '" + args.kind + "'");
  }
  if (args.format == "json") {
    ordered_json j;
    j["kind"] = args.kind;
    j["n"] = n;
    j["count"] = items.size();
    j["items"] = items;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const std::string& s : items)
      std::cout << (args.format == "csv" ? csv_field(s) : s) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bruhat and h-Bruhat orders, Hessenberg GKM subgraphs, associated-pattern "
               "detection, and exhaustive verification sweeps"};
  app.require_subcommand(1);

  QueryArgs qa;
  CLI::App* query = app.add_subcommand("query", "order comparisons, intervals and chains");
  query->add_option("--op", qa.op, "leq|hleq|interval|hinterval|chain")->capture_default_str();
  query->add_option("--u", qa.u, "first permutation")->required();
  query->add_option("--v", qa.v, "second permutation")->required();
  query->add_option("--hess", qa.hess, "Hessenberg function, e.g. 3,3,4,4");
  query->add_option("--format", qa.format, "text|json")->capture_default_str();

  GraphArgs ga;
  CLI::App* graph = app.add_subcommand("graph", "induced subgraph of the GKM graph for (w, h)");
  graph->add_option("--perm", ga.perm, "base permutation w");
  graph->add_option("--hess", ga.hess, "Hessenberg function")->required();
  graph->add_option("--format", ga.format, "dot|csv|json|text")->capture_default_str();
  graph->add_flag("--show-excluded", ga.show_excluded,
                  "include non-member permutations grayed out (dot only)");
  graph->add_flag("--incomparability", ga.incomparability,
                  "emit the incomparability graph of h instead (dot)");

  PatternsArgs pa;
  CLI::App* patterns = app.add_subcommand("patterns", "associated-pattern table for (w, h)");
  patterns->add_option("--perm", pa.perm, "permutation w")->required();
  patterns->add_option("--hess", pa.hess, "Hessenberg function")->required();
  patterns->add_option("--format", pa.format, "text|json|csv")->capture_default_str();

  ProfileArgs pra;
  CLI::App* profile = app.add_subcommand("profile", "well-organized profile of (w, h)");
  profile->add_option("--perm", pra.perm, "permutation w")->required();
  profile->add_option("--hess", pra.hess, "Hessenberg function")->required();
  profile->add_option("--format", pra.format, "json|text")->capture_default_str();

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "exhaustive theorem sweeps and searches");
  verify->add_option("--theorem", va.theorems, "theorem id (repeatable); see --list");
  verify->add_flag("--all", va.all, "run the full catalog");
  verify->add_flag("--scan", va.scan, "emit the per-(w,h) sweep table at exactly size n");
  verify->add_flag("--list", va.list, "list theorem and predicate ids");
  verify->add_option("--predicate", va.predicate, "counterexample search id");
  verify->add_option("--n", va.n, "sweep sizes 1..n (scan: exactly n)")->capture_default_str();
  verify->add_option("--jobs", va.jobs, "worker threads, partitioned by h")
      ->envname("HESS_JOBS")
      ->capture_default_str();
  verify->add_option("--seed-scale", va.seed, "seed for randomized cross-checks")
      ->capture_default_str();
  verify->add_option("--format", va.format, "text|json|csv")->capture_default_str();
  verify->add_flag("--timings", va.timings, "include wall-clock times in the output");

  EnumerateArgs ea;
  CLI::App* enumerate = app.add_subcommand("enumerate", "Hessenberg functions or generators");
  enumerate->add_option("--kind", ea.kind, "hessenberg|generators")->capture_default_str();
  enumerate->add_option("--n", ea.n, "size for --kind hessenberg");
  enumerate->add_option("--hess", ea.hess, "Hessenberg function for --kind generators");
  enumerate->add_option("--format", ea.format, "text|json|csv")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*query) return run_query(qa);
    if (*graph) return run_graph(ga);
    if (*patterns) return run_patterns(pa);
    if (*profile) return run_profile(pra);
    if (*verify) return run_verify(va);
    if (*enumerate) return run_enumerate(ea);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
