#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dpcolor/bounds.hpp"
#include "dpcolor/cache.hpp"
#include "dpcolor/chromatic.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/families.hpp"
#include "dpcolor/multigraph.hpp"
#include "dpcolor/polynomial.hpp"
#include "dpcolor/search.hpp"
#include "dpcolor/version.hpp"

namespace dpc::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;
constexpr int kGuard = 3;

struct CommonOpts {
  bool json = false;
  Limits limits{};
  int threads = 1;
  std::chrono::steady_clock::time_point start;
};

struct GraphArgs {
  std::string path;
  std::string family;
  int n = -1;
  int k = -1;
  std::vector<int> lengths;
};

void attach_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_flag("--json", c.json, "emit a JSON report");
  cmd->add_option("--max-states", c.limits.max_states, "state guard for flat enumerations");
  cmd->add_option("--max-covers", c.limits.max_covers, "cover guard for stream scans");
  cmd->add_option("--max-nodes", c.limits.max_nodes_per_cover, "node budget per coloring count");
}

void attach_graph(CLI::App* cmd, GraphArgs& a) {
  auto* g = cmd->add_option("--graph", a.path, "graph file");
  auto* f = cmd->add_option("--family", a.family, "generator name");
  f->excludes(g);
  cmd->add_option("--n", a.n, "size parameter for edgeless/cycle/path/complete");
  cmd->add_option("--k", a.k, "index parameter for wheel_even/hk");
  cmd->add_option("--lengths", a.lengths, "theta path lengths")->delimiter(',');
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) throw std::invalid_argument("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Multigraph resolve_graph(const GraphArgs& a) {
  if (!a.path.empty()) return parse_graph(read_file(a.path));
  if (a.family.empty()) throw std::invalid_argument("give --graph FILE or --family NAME");
  static const std::set<std::string> size_families{"edgeless", "cycle", "path", "complete"};
  static const std::set<std::string> k_families{"wheel_even", "hk"};
  std::vector<int> params;
  if (size_families.count(a.family) != 0) {
    if (a.n < 0) throw std::invalid_argument("--family " + a.family + " needs --n");
    params = {a.n};
  } else if (k_families.count(a.family) != 0) {
    if (a.k < 0) throw std::invalid_argument("--family " + a.family + " needs --k");
    params = {a.k};
  } else if (a.family == "theta") {
    if (a.lengths.empty()) throw std::invalid_argument("--family theta needs --lengths");
    params = a.lengths;
  } else {
    if (a.n >= 0 || a.k >= 0 || !a.lengths.empty()) {
      throw std::invalid_argument("--family " + a.family + " takes no parameters");
    }
  }
  return family_generate(a.family, params);
}

ordered_json graph_params_json(const GraphArgs& a) {
  ordered_json p;
  if (!a.path.empty()) {
    p["graph"] = a.path;
    return p;
  }
  p["family"] = a.family;
  if (a.n >= 0) p["n"] = a.n;
  if (a.k >= 0) p["k"] = a.k;
  if (!a.lengths.empty()) p["lengths"] = a.lengths;
  return p;
}

ordered_json graph_block(const Multigraph& g) {
  GraphStats s = graph_stats(g);
  ordered_json j;
  j["n"] = s.n;
  j["l"] = s.l;
  j["degeneracy"] = s.degeneracy;
  if (s.girth) {
    j["girth"] = *s.girth;
  } else {
    j["girth"] = nullptr;
  }
  j["components"] = s.components;
  j["simple"] = g.is_simple();
  j["key"] = graph_key(g);
  return j;
}

ordered_json base_report(const std::string& command) {
  ordered_json j;
  j["tool"] = ordered_json{{"name", "dpc"}, {"version", kToolVersion}};
  j["command"] = command;
  return j;
}

void print_tree(std::ostream& out, const ordered_json& j, const std::string& prefix) {
  for (const auto& [key, value] : j.items()) {
    std::string label = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      print_tree(out, value, label);
    } else if (value.is_array()) {
      int i = 0;
      for (const auto& item : value) {
        std::string slot = label + "[" + std::to_string(i++) + "]";
        if (item.is_object() || item.is_array()) {
          print_tree(out, item, slot);
        } else {
          out << slot << ": " << (item.is_string() ? item.get<std::string>() : item.dump())
              << '\n';
        }
      }
    } else if (value.is_string()) {
      std::string text = value.get<std::string>();
      if (text.find('\n') == std::string::npos) {
        out << label << ": " << text << '\n';
      } else {
        out << label << ":" << '\n';
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) out << "  " << line << '\n';
      }
    } else {
      out << label << ": " << value.dump() << '\n';
    }
  }
}

int emit(const CommonOpts& c, ordered_json& report, std::ostream& out, int code = kOk) {
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - c.start)
                     .count();
  report["timings"] = ordered_json{{"elapsed_ms", elapsed}};
  if (c.json) {
    out << report.dump(2) << '\n';
  } else {
    ordered_json view = report;
    view.erase("tool");
    view.erase("command");
    print_tree(out, view, "");
  }
  return code;
}

SearchOptions search_options(const CommonOpts& c) {
  SearchOptions o;
  o.threads = c.threads;
  o.limits = c.limits;
  return o;
}

ordered_json pdp_result_json(const PdpResult& r) {
  ordered_json j;
  j["m"] = r.m;
  j["value"] = r.value;
  j["mode"] = pdp_mode_name(r.mode);
  j["witness_index"] = r.witness_index;
  j["covers_examined"] = r.covers_examined;
  j["witness"] = serialize_cover(r.witness);
  return j;
}

int cmd_stats(CommonOpts& c, const GraphArgs& ga, std::ostream& out) {
  Multigraph g = resolve_graph(ga);
  ordered_json report = base_report("stats");
  report["params"] = graph_params_json(ga);
  report["graph"] = graph_block(g);
  report["results"] = report["graph"];
  return emit(c, report, out);
}

int cmd_chrom(CommonOpts& c, const GraphArgs& ga, int m, std::ostream& out) {
  Multigraph g = resolve_graph(ga);
  ordered_json report = base_report("chrom");
  ordered_json params = graph_params_json(ga);
  params["m"] = m;
  report["params"] = params;
  report["graph"] = graph_block(g);
  report["results"] = ordered_json{{"m", m}, {"value", chromatic_poly_eval(g, m, c.limits)}};
  return emit(c, report, out);
}

int cmd_pdp(CommonOpts& c, const GraphArgs& ga, int m, bool heuristic,
            std::uint64_t iterations, std::uint64_t seed, const std::string& cache_path,
            std::ostream& out, std::ostream& err) {
  Multigraph g = resolve_graph(ga);
  ordered_json report = base_report("pdp");
  ordered_json params = graph_params_json(ga);
  params["m"] = m;
  params["mode"] = heuristic ? "heuristic" : "exact";
  if (heuristic) {
    params["iterations"] = iterations;
    params["seed"] = seed;
  }
  params["threads"] = c.threads;
  if (!cache_path.empty()) params["cache"] = cache_path;
  report["params"] = params;
  report["graph"] = graph_block(g);
  PdpResult res;
  if (heuristic) {
    res = pdp_heuristic(g, m, iterations, seed, search_options(c));
  } else if (cache_path.empty()) {
    res = pdp_exact(g, m, search_options(c));
  } else {
    ResultCache cache;
    try {
      cache = ResultCache::load(cache_path);
    } catch (const CacheError& e) {
      // Never trust a store that fails to parse; recompute and rewrite.
      err << "cache " << cache_path << ": " << e.what() << "; rebuilding" << '\n';
      std::filesystem::remove(cache_path);
      cache = ResultCache::load(cache_path);
    }
    auto hit = cache.get(graph_key(g), m);
    if (hit && hit->mode == "exact") {
      res.graph_key = hit->key;
      res.m = hit->m;
      res.value = hit->value;
      res.mode = PdpMode::exact;
      res.witness = parse_cover(hit->witness);
      res.covers_examined = hit->covers_examined;
      res.elapsed_ms = hit->elapsed_ms;
      res.witness_index = GaugeFixedFamily(g, m).index_of(res.witness);
    } else {
      res = pdp_exact(g, m, search_options(c));
      cache.put(to_cache_record(res));
    }
  }
  report["results"] = pdp_result_json(res);
  if (!heuristic && res.mode != PdpMode::exact) {
    int code = emit(c, report, out, kGuard);
    err << "exact search exceeded the cover budget; value is an upper bound" << '\n';
    return code;
  }
  return emit(c, report, out);
}

int cmd_poly(CommonOpts& c, const GraphArgs& ga, const std::string& cover_path,
             bool dump_factors, bool expand, std::ostream& out) {
  Multigraph g = resolve_graph(ga);
  FullCover cover = parse_cover(read_file(cover_path));
  ordered_json report = base_report("poly");
  ordered_json params = graph_params_json(ga);
  params["cover"] = cover_path;
  report["params"] = params;
  report["graph"] = graph_block(g);
  CoverPolynomial p = build_polynomial(g, cover);
  ordered_json results;
  results["formal_degree"] = p.factors.size();
  results["nonzeros"] = count_nonzeros(p, c.limits);
  if (dump_factors) results["factors"] = serialize_factors(p);
  if (expand) {
    ReducedPoly r = expand_reduced(p, c.limits);
    results["reduced_degree"] = reduced_degree(r);
    results["reduced_terms"] = r.terms.size();
    results["reduced"] = serialize_reduced(r);
  }
  report["results"] = results;
  return emit(c, report, out);
}

// Raw cover text in human mode so the output can be piped to a file.
int emit_cover_text(CommonOpts& c, ordered_json& report, const std::string& text,
                    std::ostream& out) {
  if (!c.json) {
    out << text;
    return kOk;
  }
  return emit(c, report, out);
}

int cmd_cover_enumerate(CommonOpts& c, const GraphArgs& ga, int m, std::uint64_t limit,
                        std::ostream& out) {
  Multigraph g = resolve_graph(ga);
  GaugeFixedFamily family(g, m);
  ordered_json report = base_report("cover enumerate");
  ordered_json params = graph_params_json(ga);
  params["m"] = m;
  params["limit"] = limit;
  report["params"] = params;
  report["graph"] = graph_block(g);
  ordered_json results;
  results["stream_size"] = family.size_overflows() ? ordered_json() : ordered_json(family.size());
  results["forest_edges"] = family.forest_edges();
  results["free_edges"] = family.free_edges();
  ordered_json covers = ordered_json::array();
  std::uint64_t shown = family.size_overflows() ? limit : std::min(limit, family.size());
  for (std::uint64_t i = 0; i < shown; ++i) {
    covers.push_back(ordered_json{{"index", i}, {"cover", serialize_cover(family.at(i))}});
  }
  results["covers"] = covers;
  report["results"] = results;
  return emit(c, report, out);
}

int cmd_cover_random(CommonOpts& c, const GraphArgs& ga, int m, std::uint64_t seed,
                     std::ostream& out) {
  Multigraph g = resolve_graph(ga);
  FullCover cover = random_cover(g, m, seed);
  ordered_json report = base_report("cover random");
  ordered_json params = graph_params_json(ga);
  params["m"] = m;
  params["seed"] = seed;
  report["params"] = params;
  report["graph"] = graph_block(g);
  report["results"] = ordered_json{{"cover", serialize_cover(cover)}};
  return emit_cover_text(c, report, serialize_cover(cover), out);
}

int cmd_cover_twist(CommonOpts& c, const GraphArgs& ga, const std::string& cover_path,
                    const std::string& gauge_path, std::ostream& out) {
  Multigraph g = resolve_graph(ga);
  FullCover cover = parse_cover(read_file(cover_path));
  Gauge gauge = parse_gauge(read_file(gauge_path));
  FullCover twisted = twist(g, cover, gauge);
  ordered_json report = base_report("cover twist");
  ordered_json params = graph_params_json(ga);
  params["cover"] = cover_path;
  params["gauge"] = gauge_path;
  report["params"] = params;
  report["graph"] = graph_block(g);
  report["results"] = ordered_json{{"cover", serialize_cover(twisted)}};
  return emit_cover_text(c, report, serialize_cover(twisted), out);
}

int cmd_cover_fix(CommonOpts& c, const GraphArgs& ga, const std::string& cover_path,
                  std::ostream& out) {
  Multigraph g = resolve_graph(ga);
  FullCover cover = parse_cover(read_file(cover_path));
  auto [fixed, gauge] = gauge_fix(g, cover);
  ordered_json report = base_report("cover fix");
  ordered_json params = graph_params_json(ga);
  params["cover"] = cover_path;
  report["params"] = params;
  report["graph"] = graph_block(g);
  report["results"] =
      ordered_json{{"cover", serialize_cover(fixed)}, {"gauge", serialize_gauge(gauge)}};
  return emit(c, report, out);
}

int cmd_cover_count(CommonOpts& c, const GraphArgs& ga, const std::string& cover_path,
                    std::uint64_t cap, std::ostream& out) {
  Multigraph g = resolve_graph(ga);
  FullCover cover = parse_cover(read_file(cover_path));
  CountResult res = count_colorings_capped(g, cover, cap, c.limits);
  ordered_json report = base_report("cover count");
  ordered_json params = graph_params_json(ga);
  params["cover"] = cover_path;
  if (cap != 0) params["cap"] = cap;
  report["params"] = params;
  report["graph"] = graph_block(g);
  report["results"] =
      ordered_json{{"count", res.count}, {"capped", res.capped}, {"nodes", res.nodes}};
  return emit(c, report, out);
}

int cmd_bound_theorem5(CommonOpts& c, const GraphArgs& ga, std::int64_t l_param,
                       std::ostream& out) {
  std::int64_t n = 0;
  std::int64_t l = 0;
  ordered_json report = base_report("bound theorem5");
  ordered_json params;
  ordered_json graph;
  if (!ga.path.empty() || !ga.family.empty()) {
    if (l_param >= 0) throw std::invalid_argument("--l only applies without a graph");
    Multigraph g = resolve_graph(ga);
    n = g.vertex_count();
    l = g.edge_count();
    params = graph_params_json(ga);
    graph = graph_block(g);
  } else {
    if (ga.n < 0 || l_param < 0) throw std::invalid_argument("need --n and --l, or a graph");
    n = ga.n;
    l = l_param;
    params["n"] = n;
    params["l"] = l;
  }
  report["params"] = params;
  if (!graph.is_null()) report["graph"] = graph;
  ordered_json results;
  results["n"] = n;
  results["l"] = l;
  results["bound"] = theorem5_bound(n, l);
  results["ceiling"] = theorem5_ceiling(n, l);
  results["boundary_case"] = (2 * n == l);
  report["results"] = results;
  return emit(c, report, out);
}

int cmd_bound_corollary9(CommonOpts& c, std::int64_t s, std::int64_t n, std::int64_t d,
                         std::int64_t t, std::ostream& out) {
  ordered_json report = base_report("bound corollary9");
  report["params"] = ordered_json{{"S", s}, {"n", n}, {"d", d}, {"t", t}};
  report["results"] = ordered_json{{"bound", corollary9_bound(s, n, d, t)}};
  return emit(c, report, out);
}

int cmd_bound_af(CommonOpts& c, const std::vector<int>& sizes, int d, std::ostream& out) {
  ordered_json report = base_report("bound af");
  report["params"] = ordered_json{{"sizes", sizes}, {"d", d}};
  report["results"] = ordered_json{{"min_nonzeros", alon_furedi_min({sizes, d})}};
  return emit(c, report, out);
}

int cmd_chidp(CommonOpts& c, const GraphArgs& ga, int m, std::ostream& out) {
  Multigraph g = resolve_graph(ga);
  ordered_json report = base_report("chidp");
  ordered_json params = graph_params_json(ga);
  params["m"] = m;
  report["params"] = params;
  report["graph"] = graph_block(g);
  ordered_json results;
  results["m"] = m;
  results["upper_bound_from_degeneracy"] = chi_dp_upper_from_degeneracy(g);
  results["verified_at_most_m"] = verify_chi_dp_le(g, m, c.limits);
  report["results"] = results;
  return emit(c, report, out);
}

int cmd_lemma8(CommonOpts& c, const GraphArgs& ga, std::ostream& out) {
  Multigraph g = resolve_graph(ga);
  Lemma8Report r = lemma8_check(g, c.limits);
  ordered_json report = base_report("lemma8");
  report["params"] = graph_params_json(ga);
  report["graph"] = graph_block(g);
  ordered_json results;
  results["uniquely_3_colorable"] = r.uniquely_3_colorable;
  results["chi_at_least_3"] = r.chi_at_least_3;
  results["chi_dp_at_most_3"] = r.chi_dp_at_most_3;
  results["chi_dp_evidence"] = r.chi_dp_evidence;
  results["edge_count_matches"] = r.edge_count_matches;
  results["chromatic_at_3"] = r.chromatic_at_3;
  results["applies"] = r.applies;
  if (r.applies) {
    results["conclusion"] = 6;
  } else {
    results["conclusion"] = nullptr;
  }
  report["results"] = results;
  return emit(c, report, out);
}

int cmd_compare(CommonOpts& c, const GraphArgs& ga, int m, std::ostream& out) {
  Multigraph g = resolve_graph(ga);
  CompareReport r = compare_chromatic(g, m, search_options(c));
  ordered_json report = base_report("compare");
  ordered_json params = graph_params_json(ga);
  params["m"] = m;
  report["params"] = params;
  report["graph"] = graph_block(g);
  ordered_json results;
  results["m"] = m;
  results["pdp"] = pdp_result_json(r.pdp);
  results["chromatic"] = r.chromatic;
  results["relation"] = r.strict ? "<" : "=";
  results["strict"] = r.strict;
  report["results"] = results;
  return emit(c, report, out);
}

struct SuiteCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

void add_check(std::vector<SuiteCheck>& checks, const std::string& name, bool pass,
               const std::string& detail) {
  checks.push_back({name, pass, detail});
}

std::string u64s(std::uint64_t v) { return std::to_string(v); }

// The curated verification suite: the exact values and bound checks the
// library is expected to reproduce, sized so the default run finishes in
// seconds.
std::vector<SuiteCheck> run_paper_suite(int max_k, const SearchOptions& opt) {
  std::vector<SuiteCheck> checks;
  for (int k = 1; k <= max_k; ++k) {
    Multigraph h = hk(k);
    bool ok = h.vertex_count() == 2 * k + 4 && h.edge_count() == 4 * k + 5;
    add_check(checks, "hk(" + std::to_string(k) + ") sizes", ok,
              "n=" + std::to_string(h.vertex_count()) + " l=" + std::to_string(h.edge_count()));
    Multigraph w = wheel_even(k);
    ok = w.vertex_count() == 2 * k + 3 && w.edge_count() == 4 * k + 4;
    add_check(checks, "wheel_even(" + std::to_string(k) + ") sizes", ok,
              "n=" + std::to_string(w.vertex_count()) + " l=" + std::to_string(w.edge_count()));
    int deg = degeneracy(h);
    add_check(checks, "degeneracy(hk(" + std::to_string(k) + ")) == 2", deg == 2,
              "got " + std::to_string(deg));
    bool unique = is_uniquely_k_colorable(h, 3, opt.limits);
    add_check(checks, "hk(" + std::to_string(k) + ") uniquely 3-colorable", unique,
              unique ? "one partition" : "not unique");
  }
  {
    int upper = chi_dp_upper_from_degeneracy(hk(1));
    add_check(checks, "chi_dp_upper_from_degeneracy(hk(1)) == 3", upper == 3,
              "got " + std::to_string(upper));
  }
  {
    std::int64_t v = chromatic_poly_eval(complete(3), 3, opt.limits);
    add_check(checks, "chromatic complete(3) at 3 == 6", v == 6, "got " + std::to_string(v));
    v = chromatic_poly_eval(path(3), 3, opt.limits);
    add_check(checks, "chromatic path(3) at 3 == 12", v == 12, "got " + std::to_string(v));
  }
  {
    double v = corollary9_bound(18, 6, 9, 3);
    double want = std::pow(3.0, 1.5);
    add_check(checks, "corollary9_bound(18,6,9,3) == 3^1.5", std::abs(v - want) < 1e-9,
              "got " + std::to_string(v));
  }
  {
    add_check(checks, "theorem5_ceiling(6,9) == 6", theorem5_ceiling(6, 9) == 6,
              u64s(theorem5_ceiling(6, 9)));
    add_check(checks, "theorem5_ceiling(5,8) == 3", theorem5_ceiling(5, 8) == 3,
              u64s(theorem5_ceiling(5, 8)));
    add_check(checks, "theorem5_ceiling(3,0) == 27", theorem5_ceiling(3, 0) == 27,
              u64s(theorem5_ceiling(3, 0)));
  }
  {
    PdpResult r = pdp_exact(digon(), 3, opt);
    add_check(checks, "pdp_exact(digon, 3) == 3", r.value == 3 && r.mode == PdpMode::exact,
              u64s(r.value));
    r = pdp_exact(edgeless(3), 3, opt);
    add_check(checks, "pdp_exact(edgeless(3), 3) == 27", r.value == 27 && r.mode == PdpMode::exact,
              u64s(r.value));
  }
  for (int k = 1; k <= max_k; ++k) {
    PdpResult r = pdp_exact(wheel_even(k), 3, opt);
    add_check(checks, "pdp_exact(wheel_even(" + std::to_string(k) + "), 3) == 3",
              r.value == 3 && r.mode == PdpMode::exact, u64s(r.value));
    r = pdp_exact(hk(k), 3, opt);
    add_check(checks, "pdp_exact(hk(" + std::to_string(k) + "), 3) == 6",
              r.value == 6 && r.mode == PdpMode::exact, u64s(r.value));
  }
  {
    CompareReport r = compare_chromatic(hk(1), 3, opt);
    add_check(checks, "compare hk(1) at 3: equality",
              !r.strict && r.pdp.value == 6 && r.chromatic == 6,
              u64s(r.pdp.value) + " vs " + std::to_string(r.chromatic));
  }
  {
    CompareReport r = compare_chromatic(theta({2, 3, 3, 3, 2}), 3, opt);
    add_check(checks, "compare theta(2,3,3,3,2) at 3: equality", !r.strict,
              u64s(r.pdp.value) + " vs " + std::to_string(r.chromatic));
  }
  {
    Theorem5Report r = verify_theorem5(wheel_even(1), opt);
    add_check(checks, "verify_theorem5(wheel_even(1)) tight", r.pass && r.tight,
              u64s(r.exact.value) + " >= " + u64s(r.bound_ceiling));
    r = verify_theorem5(hk(1), opt);
    add_check(checks, "verify_theorem5(hk(1)) tight", r.pass && r.tight,
              u64s(r.exact.value) + " >= " + u64s(r.bound_ceiling));
    r = verify_theorem5(edgeless(2), opt);
    add_check(checks, "verify_theorem5(edgeless(2)) == 9", r.pass && r.exact.value == 9,
              u64s(r.exact.value));
  }
  {
    Lemma8Report r = lemma8_check(hk(1), opt.limits);
    add_check(checks, "lemma8_check(hk(1)) applies with P(3) = 6",
              r.applies && r.chromatic_at_3 == 6, "P(3) = " + std::to_string(r.chromatic_at_3));
    r = lemma8_check(complete(3), opt.limits);
    add_check(checks, "lemma8_check(complete(3)) applies with P(3) = 6",
              r.applies && r.chromatic_at_3 == 6, "P(3) = " + std::to_string(r.chromatic_at_3));
  }
  return checks;
}

int cmd_verify(CommonOpts& c, const std::string& suite, int max_k, std::ostream& out,
               std::ostream& err) {
  if (suite != "paper-suite") throw std::invalid_argument("unknown suite: " + suite);
  std::vector<SuiteCheck> checks = run_paper_suite(max_k, search_options(c));
  int failures = 0;
  for (const SuiteCheck& ch : checks) {
    if (!ch.pass) ++failures;
  }
  ordered_json report = base_report("verify paper-suite");
  report["params"] = ordered_json{{"max_k", max_k}};
  ordered_json arr = ordered_json::array();
  for (const SuiteCheck& ch : checks) {
    arr.push_back(ordered_json{{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
  }
  report["results"] = ordered_json{{"checks", arr},
                                   {"total", checks.size()},
                                   {"failures", failures}};
  if (c.json) return emit(c, report, out, failures == 0 ? kOk : kVerifyFail);
  for (const SuiteCheck& ch : checks) {
    out << (ch.pass ? "[ok]   " : "[FAIL] ") << ch.name << " (" << ch.detail << ")" << '\n';
  }
  out << checks.size() << " checks, " << failures << " failures" << '\n';
  if (failures != 0) err << "verification failed" << '\n';
  return failures == 0 ? kOk : kVerifyFail;
}

int cmd_cache_ls(CommonOpts& c, const std::string& cache_path, std::ostream& out) {
  ResultCache cache = ResultCache::load(cache_path);
  ordered_json report = base_report("cache ls");
  report["params"] = ordered_json{{"cache", cache_path}};
  ordered_json arr = ordered_json::array();
  for (const CacheRecord& rec : cache.records()) {
    arr.push_back(ordered_json{{"key", rec.key},
                               {"m", rec.m},
                               {"value", rec.value},
                               {"mode", rec.mode},
                               {"covers_examined", rec.covers_examined},
                               {"tool_version", rec.tool_version}});
  }
  report["results"] = ordered_json{{"records", arr}, {"count", cache.records().size()}};
  return emit(c, report, out);
}

int cmd_cache_validate(CommonOpts& c, const std::string& cache_path, std::ostream& out,
                       std::ostream& err) {
  ResultCache cache = ResultCache::load(cache_path);  // throws CacheError when corrupt
  int bad = 0;
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < cache.records().size(); ++i) {
    const CacheRecord& rec = cache.records()[i];
    std::string problem;
    try {
      FullCover w = parse_cover(rec.witness);
      if (w.m != rec.m) problem = "witness fold size differs from m";
    } catch (const std::exception& e) {
      problem = std::string("witness does not parse: ") + e.what();
    }
    if (!problem.empty()) ++bad;
    arr.push_back(ordered_json{{"record", i},
                               {"key", rec.key},
                               {"m", rec.m},
                               {"ok", problem.empty()},
                               {"problem", problem.empty() ? ordered_json() : ordered_json(problem)}});
  }
  ordered_json report = base_report("cache validate");
  report["params"] = ordered_json{{"cache", cache_path}};
  report["results"] = ordered_json{{"records", arr},
                                   {"count", cache.records().size()},
                                   {"bad", bad}};
  int code = bad == 0 ? kOk : kVerifyFail;
  if (bad != 0) err << bad << " bad cache records" << '\n';
  return emit(c, report, out, code);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"DP color function toolkit", "dpc"};
  app.require_subcommand(1);

  CommonOpts common;
  common.start = std::chrono::steady_clock::now();
  int exit_code = kOk;

  GraphArgs ga;

  auto* stats = app.add_subcommand("stats", "graph statistics");
  attach_common(stats, common);
  attach_graph(stats, ga);
  stats->callback([&]() { exit_code = cmd_stats(common, ga, out); });

  int chrom_m = 3;
  auto* chrom = app.add_subcommand("chrom", "proper coloring count at m");
  attach_common(chrom, common);
  attach_graph(chrom, ga);
  chrom->add_option("--m", chrom_m, "color count")->required();
  chrom->callback([&]() { exit_code = cmd_chrom(common, ga, chrom_m, out); });

  int pdp_m = 3;
  bool pdp_exact_flag = false;
  bool pdp_heuristic_flag = false;
  std::uint64_t pdp_iterations = 1000;
  std::uint64_t pdp_seed = 0;
  std::string pdp_cache;
  auto* pdp = app.add_subcommand("pdp", "minimum coloring count over covers");
  attach_common(pdp, common);
  attach_graph(pdp, ga);
  pdp->add_option("--m", pdp_m, "fold size")->required();
  auto* exact_opt = pdp->add_flag("--exact", pdp_exact_flag, "exact stream scan (default)");
  auto* heur_opt = pdp->add_flag("--heuristic", pdp_heuristic_flag, "local search upper bound");
  exact_opt->excludes(heur_opt);
  pdp->add_option("--iterations", pdp_iterations, "heuristic evaluation budget");
  pdp->add_option("--seed", pdp_seed, "heuristic seed");
  pdp->add_option("--threads", common.threads, "worker threads for the exact scan");
  pdp->add_option("--cache", pdp_cache, "result cache file");
  pdp->callback([&]() {
    exit_code = cmd_pdp(common, ga, pdp_m, pdp_heuristic_flag, pdp_iterations, pdp_seed,
                        pdp_cache, out, err);
  });

  std::string poly_cover;
  bool poly_factors = false;
  bool poly_expand = false;
  auto* poly = app.add_subcommand("poly", "cover polynomial inspection");
  attach_common(poly, common);
  attach_graph(poly, ga);
  poly->add_option("--cover", poly_cover, "cover file")->required();
  poly->add_flag("--factors", poly_factors, "dump the factor list");
  poly->add_flag("--expand", poly_expand, "expand to the reduced form");
  poly->callback([&]() {
    exit_code = cmd_poly(common, ga, poly_cover, poly_factors, poly_expand, out);
  });

  auto* cover = app.add_subcommand("cover", "cover utilities");
  cover->require_subcommand(1);

  int cov_m = 3;
  std::uint64_t cov_limit = 10;
  auto* cov_enum = cover->add_subcommand("enumerate", "gauge-fixed stream");
  attach_common(cov_enum, common);
  attach_graph(cov_enum, ga);
  cov_enum->add_option("--m", cov_m, "fold size")->required();
  cov_enum->add_option("--limit", cov_limit, "covers to list");
  cov_enum->callback([&]() { exit_code = cmd_cover_enumerate(common, ga, cov_m, cov_limit, out); });

  std::uint64_t cov_seed = 0;
  auto* cov_rand = cover->add_subcommand("random", "seeded random cover");
  attach_common(cov_rand, common);
  attach_graph(cov_rand, ga);
  cov_rand->add_option("--m", cov_m, "fold size")->required();
  cov_rand->add_option("--seed", cov_seed, "generator seed");
  cov_rand->callback([&]() { exit_code = cmd_cover_random(common, ga, cov_m, cov_seed, out); });

  std::string cov_cover;
  std::string cov_gauge;
  auto* cov_twist = cover->add_subcommand("twist", "relabel fibers by a gauge");
  attach_common(cov_twist, common);
  attach_graph(cov_twist, ga);
  cov_twist->add_option("--cover", cov_cover, "cover file")->required();
  cov_twist->add_option("--gauge", cov_gauge, "gauge file")->required();
  cov_twist->callback([&]() {
    exit_code = cmd_cover_twist(common, ga, cov_cover, cov_gauge, out);
  });

  auto* cov_fix = cover->add_subcommand("fix", "gauge-fix a cover");
  attach_common(cov_fix, common);
  attach_graph(cov_fix, ga);
  cov_fix->add_option("--cover", cov_cover, "cover file")->required();
  cov_fix->callback([&]() { exit_code = cmd_cover_fix(common, ga, cov_cover, out); });

  std::uint64_t cov_cap = 0;
  auto* cov_count = cover->add_subcommand("count", "coloring count of a cover");
  attach_common(cov_count, common);
  attach_graph(cov_count, ga);
  cov_count->add_option("--cover", cov_cover, "cover file")->required();
  cov_count->add_option("--cap", cov_cap, "stop once this many colorings are found");
  cov_count->callback([&]() { exit_code = cmd_cover_count(common, ga, cov_cover, cov_cap, out); });

  auto* bound = app.add_subcommand("bound", "lower bounds");
  bound->require_subcommand(1);

  std::int64_t b_l = -1;
  auto* b_t5 = bound->add_subcommand("theorem5", "3^(n - l/2) floor");
  attach_common(b_t5, common);
  attach_graph(b_t5, ga);
  b_t5->add_option("--l", b_l, "edge count (with --n, instead of a graph)");
  b_t5->callback([&]() { exit_code = cmd_bound_theorem5(common, ga, b_l, out); });

  std::int64_t b_s = 0;
  std::int64_t b_n = 0;
  std::int64_t b_d = 0;
  std::int64_t b_t = 0;
  auto* b_c9 = bound->add_subcommand("corollary9", "t^((S-n-d)/(t-1)) floor");
  attach_common(b_c9, common);
  b_c9->add_option("--S", b_s, "sum of grid sizes")->required();
  b_c9->add_option("--n", b_n, "variable count")->required();
  b_c9->add_option("--d", b_d, "formal degree")->required();
  b_c9->add_option("--t", b_t, "largest grid size")->required();
  b_c9->callback([&]() { exit_code = cmd_bound_corollary9(common, b_s, b_n, b_d, b_t, out); });

  std::vector<int> b_sizes;
  int b_deg = 0;
  auto* b_af = bound->add_subcommand("af", "exact grid minimum");
  attach_common(b_af, common);
  b_af->add_option("--sizes", b_sizes, "grid sizes")->required()->delimiter(',');
  b_af->add_option("--d", b_deg, "formal degree")->required();
  b_af->callback([&]() { exit_code = cmd_bound_af(common, b_sizes, b_deg, out); });

  int chidp_m = 3;
  auto* chidp = app.add_subcommand("chidp", "verify every m-fold cover admits a coloring");
  attach_common(chidp, common);
  attach_graph(chidp, ga);
  chidp->add_option("--m", chidp_m, "fold size")->required();
  chidp->callback([&]() { exit_code = cmd_chidp(common, ga, chidp_m, out); });

  auto* lemma = app.add_subcommand("lemma8", "equality criterion report");
  attach_common(lemma, common);
  attach_graph(lemma, ga);
  lemma->callback([&]() { exit_code = cmd_lemma8(common, ga, out); });

  int cmp_m = 3;
  auto* cmp = app.add_subcommand("compare", "cover minimum versus proper colorings");
  attach_common(cmp, common);
  attach_graph(cmp, ga);
  cmp->add_option("--m", cmp_m, "fold size")->required();
  cmp->add_option("--threads", common.threads, "worker threads for the exact scan");
  cmp->callback([&]() { exit_code = cmd_compare(common, ga, cmp_m, out); });

  std::string verify_suite;
  int verify_max_k = 1;
  auto* verify = app.add_subcommand("verify", "built-in verification suites");
  attach_common(verify, common);
  verify->add_option("suite", verify_suite, "suite name (paper-suite)")->required();
  verify->add_option("--max-k", verify_max_k, "largest family index to exercise");
  verify->add_option("--threads", common.threads, "worker threads for exact scans");
  verify->callback([&]() { exit_code = cmd_verify(common, verify_suite, verify_max_k, out, err); });

  auto* cache = app.add_subcommand("cache", "result cache inspection");
  cache->require_subcommand(1);

  std::string cache_path;
  auto* cache_ls = cache->add_subcommand("ls", "list records");
  attach_common(cache_ls, common);
  cache_ls->add_option("--cache", cache_path, "cache file")->required();
  cache_ls->callback([&]() { exit_code = cmd_cache_ls(common, cache_path, out); });

  auto* cache_val = cache->add_subcommand("validate", "structural record checks");
  attach_common(cache_val, common);
  cache_val->add_option("--cache", cache_path, "cache file")->required();
  cache_val->callback([&]() { exit_code = cmd_cache_validate(common, cache_path, out, err); });

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("dpc");
  for (const std::string& a : args) argv_storage.push_back(a);
  std::vector<char*> argv;
  argv.reserve(argv_storage.size());
  for (std::string& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const GuardExceeded& e) {
    err << "refused: " << e.what() << '\n';
    return kGuard;
  } catch (const HypothesisError& e) {
    err << "hypothesis not met: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const CacheError& e) {
    err << "cache error: " << e.what() << '\n';
    return kVerifyFail;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFail;
  }
  return exit_code;
}

}  // namespace dpc::cli
