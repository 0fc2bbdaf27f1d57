#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ecg/codec.hpp"
#include "ecg/random_family.hpp"

using nlohmann::json;

namespace {

struct Run {
  int status = 0;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.status = ecg::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("alpha-prime auto on cp(4) takes the cograph path") {
  const auto r = cli({"alpha-prime", "--special", "cp:4"});
  REQUIRE(r.status == 0);
  const auto j = r.report();
  CHECK(j["schema"] == 1);
  CHECK(j["value"] == 4);
  CHECK(j["algorithm"] == "cograph-eq0");
  CHECK(j.contains("timings"));
  CHECK(j["input_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
}

TEST_CASE("theta on C_5") {
  const auto j = cli({"theta", "--special", "cycle:5"}).report();
  CHECK(j["value"] == 5);
  CHECK(j["optimal"] == true);
  CHECK(j["certificate"]["cliques"].size() == 5);
}

TEST_CASE("auto agrees with brute force") {
  for (const auto family : {"cograph", "dh", "arbitrary"})
    for (int seed = 0; seed < 8; ++seed) {
      const auto g = cli({"gen", "--family", family, "--n", "7", "--seed", std::to_string(seed)}).report();
      write("cli_gen.g6", g["certificate"]["graph6"].get<std::string>());
      const auto a = cli({"alpha-prime", "cli_gen.g6"});
      const auto b = cli({"alpha-prime", "cli_gen.g6", "--class", "brute"});
      REQUIRE(a.status == 0);
      REQUIRE(b.status == 0);
      CHECK(a.report()["value"] == b.report()["value"]);
    }
}

TEST_CASE("reports are deterministic apart from timings") {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"gen", "--family", "dh", "--n", "12", "--seed", "9"},
        std::vector<std::string>{"alpha-prime", "--special", "cp:5"},
        std::vector<std::string>{"theta", "--special", "wheel:5"}}) {
    auto a = cli(args).report();
    auto b = cli(args).report();
    a.erase("timings");
    b.erase("timings");
    CHECK(a.dump() == b.dump());
  }
  CHECK(cli({"gen", "--n", "9", "--seed", "1"}).report()["certificate"] !=
        cli({"gen", "--n", "9", "--seed", "2"}).report()["certificate"]);
}

TEST_CASE("reduce-sat on one clause") {
  write("cli_one.cnf", "p cnf 3 1\n1 2 3 0\n");
  const auto r = cli({"reduce-sat", "cli_one.cnf"});
  REQUIRE(r.status == 0);
  const auto j = r.report();
  CHECK(j["agree"] == true);
  CHECK(j["sat_oracle"] == true);
  CHECK(j["threshold"] == 11);
  CHECK(j["g_vertices"] == 12);
  CHECK(j["k_vertices"] == 18);
}

TEST_CASE("cover-multipartite output feeds verify-cover") {
  const auto c = cli({"cover-multipartite", "--n", "4", "--m", "5"});
  REQUIRE(c.status == 0);
  CHECK(c.report()["value"] == 16);
  write("cli_cover.json", c.out);
  const auto v = cli({"verify-cover", "--special", "multipartite:4,5", "--cover", "cli_cover.json"});
  CHECK(v.status == 0);
  CHECK(v.report()["value"] == true);
  write("cli_short.json", R"({"kind": "edge", "cliques": [[0, 4, 8, 12, 16]]})");
  const auto bad = cli({"verify-cover", "--special", "multipartite:4,5", "--cover", "cli_short.json"});
  CHECK(bad.status == ecg::cli::kNegative);
  CHECK(bad.report()["value"] == false);
}

TEST_CASE("exit statuses") {
  CHECK(cli({"ke", "no_such_file.g6"}).status == ecg::cli::kInputError);
  CHECK(cli({"ke", "--special", "banana:3"}).status == ecg::cli::kInputError);
  CHECK(cli({"theta"}).status == ecg::cli::kInputError);
  CHECK(cli({}).status == ecg::cli::kInputError);
  CHECK(cli({"alpha-prime", "--class", "brute", "--special", "cp:8"}).status == ecg::cli::kSizeGuard);
  CHECK(cli({"alpha-prime", "--class", "cograph", "--special", "path:4"}).status == ecg::cli::kInputError);
  const auto t = cli({"theta", "--special", "cp:5", "--budget", "1"});
  CHECK(t.status == ecg::cli::kBudgetExhausted);
  CHECK(t.report()["optimal"] == false);
  write("cli_big.cnf", "p cnf 5 1\n1 2 3 0\n");
  CHECK(cli({"reduce-sat", "cli_big.cnf"}).status == ecg::cli::kInputError);
  CHECK(cli({"reduce-sat", "cli_big.cnf", "--max-variables", "5"}).status == 0);
  CHECK(cli({"--guard", "0", "ke", "--special", "cp:2"}).status == ecg::cli::kInputError);
  CHECK(cli({"--help"}).status == 0);
}

TEST_CASE("text format") {
  const auto r = cli({"mols", "--order", "5", "--format", "text"});
  CHECK(r.status == 0);
  CHECK(r.out.find("value: 4\n") != std::string::npos);
  CHECK(r.out.find("orthogonal: true\n") != std::string::npos);
}

TEST_CASE("ke sidecar maps vertices to source edges") {
  const auto j = cli({"ke", "--special", "cp:3"}).report();
  CHECK(j["value"] == 12);
  CHECK(j["certificate"]["source_edges"].size() == 12);
  CHECK(ecg::parse_graph6(j["certificate"]["graph6"].get<std::string>()).order() == 12);
}
