#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  RunResult r;
  r.code = dpc::cli::run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

nlohmann::json run_json(const std::vector<std::string>& args, int want_code = 0) {
  RunResult r = run(args);
  REQUIRE(r.code == want_code);
  return nlohmann::json::parse(r.out);
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) {
    path = (std::filesystem::temp_directory_path() / name).string();
    std::filesystem::remove(path);
  }
  ~TempFile() { std::filesystem::remove(path); }
  void write(const std::string& text) {
    std::ofstream f(path);
    f << text;
  }
};

}  // namespace

TEST_CASE("[cli] stats reports graph shape") {
  nlohmann::json j = run_json({"stats", "--family", "hk", "--k", "1", "--json"});
  CHECK(j["graph"]["n"] == 6);
  CHECK(j["graph"]["l"] == 9);
  CHECK(j["graph"]["degeneracy"] == 2);
  CHECK(j["tool"]["name"] == "dpc");
  CHECK(j.contains("timings"));
}

TEST_CASE("[cli] graph files load") {
  TempFile g("dpc_cli_graph.txt");
  g.write("3\n0 1\n1 2\n0 2\n");
  nlohmann::json j = run_json({"stats", "--graph", g.path, "--json"});
  CHECK(j["graph"]["n"] == 3);
  CHECK(j["graph"]["girth"] == 3);
}

TEST_CASE("[cli] usage errors exit with 2") {
  CHECK(run({"pdp", "--m", "3"}).code == 2);                          // no graph
  CHECK(run({"pdp", "--family", "nosuch", "--m", "3"}).code == 2);    // bad family
  CHECK(run({"pdp", "--family", "cycle", "--m", "3"}).code == 2);     // missing --n
  CHECK(run({"nosuch"}).code == 2);                                   // bad command
  CHECK(run({"stats", "--graph", "/nonexistent/g.txt"}).code == 2);   // unreadable file
  CHECK(run({"verify", "nosuch-suite"}).code == 2);                   // unknown suite
  CHECK(run({"bound", "theorem5"}).code == 2);                        // no inputs at all
  CHECK(run({"chrom", "--family", "digon", "--n", "4", "--m", "3"}).code == 2);  // stray --n
}

TEST_CASE("[cli] exact minimum over covers") {
  nlohmann::json j = run_json({"pdp", "--family", "digon", "--m", "3", "--json"});
  CHECK(j["results"]["value"] == 3);
  CHECK(j["results"]["mode"] == "exact");
  CHECK(j["results"]["witness_index"] == 3);
}

TEST_CASE("[cli] budget refusal exits with 3") {
  RunResult r = run({"pdp", "--family", "wheel_even", "--k", "1", "--m", "3", "--exact",
                     "--max-covers", "1", "--json"});
  CHECK(r.code == 3);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["results"]["mode"] == "heuristic-upper-bound");
  CHECK(j["results"]["value"] == 6);
  CHECK(!r.err.empty());
}

TEST_CASE("[cli] heuristic mode reports an upper bound") {
  nlohmann::json j = run_json({"pdp", "--family", "cycle", "--n", "4", "--m", "3", "--heuristic",
                               "--iterations", "40", "--seed", "5", "--json"});
  CHECK(j["results"]["mode"] == "heuristic-upper-bound");
  CHECK(j["results"]["value"].get<std::uint64_t>() >= 15);
}

TEST_CASE("[cli] cover pipeline from random to count") {
  TempFile cover("dpc_cli_cover.txt");
  RunResult rand = run({"cover", "random", "--family", "cycle", "--n", "4", "--m", "3",
                        "--seed", "7"});
  REQUIRE(rand.code == 0);
  cover.write(rand.out);
  nlohmann::json j = run_json({"cover", "count", "--family", "cycle", "--n", "4",
                               "--cover", cover.path, "--json"});
  CHECK(j["results"]["count"] == 18);
  CHECK(j["results"]["capped"] == false);

  nlohmann::json capped = run_json({"cover", "count", "--family", "cycle", "--n", "4",
                                    "--cover", cover.path, "--cap", "4", "--json"});
  CHECK(capped["results"]["count"] == 4);
  CHECK(capped["results"]["capped"] == true);
}

TEST_CASE("[cli] twisting by a gauge preserves the count") {
  TempFile cover("dpc_cli_twist_cover.txt");
  TempFile gauge("dpc_cli_twist_gauge.txt");
  TempFile twisted("dpc_cli_twisted.txt");
  RunResult rand = run({"cover", "random", "--family", "cycle", "--n", "4", "--m", "3",
                        "--seed", "3"});
  REQUIRE(rand.code == 0);
  cover.write(rand.out);
  // A gauge file: one permutation per vertex.
  gauge.write("m=3\n0: 1 2 0\n1: 0 1 2\n2: 2 1 0\n3: 0 2 1\n");
  RunResult tw = run({"cover", "twist", "--family", "cycle", "--n", "4",
                      "--cover", cover.path, "--gauge", gauge.path});
  REQUIRE(tw.code == 0);
  twisted.write(tw.out);
  nlohmann::json before = run_json({"cover", "count", "--family", "cycle", "--n", "4",
                                    "--cover", cover.path, "--json"});
  nlohmann::json after = run_json({"cover", "count", "--family", "cycle", "--n", "4",
                                   "--cover", twisted.path, "--json"});
  CHECK(before["results"]["count"] == after["results"]["count"]);
}

TEST_CASE("[cli] gauge fixing via the fix subcommand") {
  TempFile cover("dpc_cli_fix_cover.txt");
  RunResult rand = run({"cover", "random", "--family", "hk", "--k", "1", "--m", "3",
                        "--seed", "11"});
  REQUIRE(rand.code == 0);
  cover.write(rand.out);
  nlohmann::json j = run_json({"cover", "fix", "--family", "hk", "--k", "1",
                               "--cover", cover.path, "--json"});
  CHECK(j["results"].contains("cover"));
  CHECK(j["results"].contains("gauge"));
}

TEST_CASE("[cli] enumerate lists stream prefixes") {
  nlohmann::json j = run_json({"cover", "enumerate", "--family", "digon", "--m", "3",
                               "--limit", "3", "--json"});
  CHECK(j["results"]["stream_size"] == 6);
  CHECK(j["results"]["covers"].size() == 3);
  CHECK(j["results"]["covers"][0]["index"] == 0);
}

TEST_CASE("[cli] polynomial nonzeros match the cover count") {
  TempFile cover("dpc_cli_poly_cover.txt");
  RunResult rand = run({"cover", "random", "--family", "cycle", "--n", "5", "--m", "3",
                        "--seed", "13"});
  REQUIRE(rand.code == 0);
  cover.write(rand.out);
  nlohmann::json count = run_json({"cover", "count", "--family", "cycle", "--n", "5",
                                   "--cover", cover.path, "--json"});
  nlohmann::json poly = run_json({"poly", "--family", "cycle", "--n", "5",
                                  "--cover", cover.path, "--expand", "--json"});
  CHECK(poly["results"]["nonzeros"] == count["results"]["count"]);
  CHECK(poly["results"]["formal_degree"] == 5);
  CHECK(poly["results"].contains("reduced"));
}

TEST_CASE("[cli] bounds by parameters or by graph") {
  nlohmann::json by_params = run_json({"bound", "theorem5", "--n", "6", "--l", "9", "--json"});
  CHECK(by_params["results"]["ceiling"] == 6);
  nlohmann::json by_graph = run_json({"bound", "theorem5", "--family", "hk", "--k", "1",
                                      "--json"});
  CHECK(by_graph["results"]["ceiling"] == 6);
  CHECK(run({"bound", "theorem5", "--n", "3", "--l", "7", "--json"}).code == 2);  // 2n < l

  nlohmann::json c9 = run_json({"bound", "corollary9", "--S", "18", "--n", "6", "--d", "9",
                                "--t", "3", "--json"});
  CHECK(c9["results"]["bound"].get<double>() == doctest::Approx(5.196152).epsilon(1e-5));

  nlohmann::json af = run_json({"bound", "af", "--sizes", "3,3,3", "--d", "2", "--json"});
  CHECK(af["results"]["min_nonzeros"] == 9);
}

TEST_CASE("[cli] fold verification and comparison") {
  nlohmann::json chidp = run_json({"chidp", "--family", "cycle", "--n", "5", "--m", "3",
                                   "--json"});
  CHECK(chidp["results"]["verified_at_most_m"] == true);
  nlohmann::json lemma = run_json({"lemma8", "--family", "hk", "--k", "1", "--json"});
  CHECK(lemma["results"]["applies"] == true);
  CHECK(lemma["results"]["conclusion"] == 6);
  nlohmann::json cmp = run_json({"compare", "--family", "cycle", "--n", "4", "--m", "3",
                                 "--json"});
  CHECK(cmp["results"]["pdp"]["value"] == 15);
  CHECK(cmp["results"]["chromatic"] == 18);
  CHECK(cmp["results"]["strict"] == true);
}

TEST_CASE("[cli] verification suite passes and exits zero") {
  RunResult r = run({"verify", "paper-suite", "--max-k", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.out.find("0 failures") != std::string::npos);
}

TEST_CASE("[cli] cache round trip through the pdp command") {
  TempFile cache("dpc_cli_cache.jsonl");
  nlohmann::json first = run_json({"pdp", "--family", "hk", "--k", "1", "--m", "3",
                                   "--cache", cache.path, "--json"});
  nlohmann::json second = run_json({"pdp", "--family", "hk", "--k", "1", "--m", "3",
                                    "--cache", cache.path, "--json"});
  first.erase("timings");
  second.erase("timings");
  CHECK(first == second);

  nlohmann::json ls = run_json({"cache", "ls", "--cache", cache.path, "--json"});
  CHECK(ls["results"]["count"] == 1);
  nlohmann::json val = run_json({"cache", "validate", "--cache", cache.path, "--json"});
  CHECK(val["results"]["bad"] == 0);
}

TEST_CASE("[cli] corrupt cache fails validation commands but not pdp") {
  TempFile cache("dpc_cli_badcache.jsonl");
  cache.write("garbage\n");
  CHECK(run({"cache", "ls", "--cache", cache.path}).code == 1);
  CHECK(run({"cache", "validate", "--cache", cache.path}).code == 1);
  RunResult r = run({"pdp", "--family", "digon", "--m", "3", "--cache", cache.path, "--json"});
  CHECK(r.code == 0);
  CHECK(r.err.find("rebuilding") != std::string::npos);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["results"]["value"] == 3);
  // The store was rewritten with the fresh result.
  CHECK(run({"cache", "validate", "--cache", cache.path}).code == 0);
}

TEST_CASE("[cli] human output prints key value lines") {
  RunResult r = run({"stats", "--family", "digon"});
  CHECK(r.code == 0);
  CHECK(r.out.find("graph.n: 2") != std::string::npos);
  CHECK(r.out.find("results.key:") != std::string::npos);
}

TEST_CASE("[cli] determinism across repeated runs") {
  std::vector<std::string> args{"pdp", "--family", "wheel_even", "--k", "1", "--m", "3",
                                "--json"};
  nlohmann::json a = run_json(args);
  nlohmann::json b = run_json(args);
  a.erase("timings");
  b.erase("timings");
  CHECK(a == b);

  std::vector<std::string> threaded{"pdp", "--family", "wheel_even", "--k", "1", "--m", "3",
                                    "--threads", "4", "--json"};
  nlohmann::json c = run_json(threaded);
  CHECK(a["results"]["value"] == c["results"]["value"]);
  CHECK(a["results"]["witness_index"] == c["results"]["witness_index"]);
  CHECK(a["results"]["witness"] == c["results"]["witness"]);
}
