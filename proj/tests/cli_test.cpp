#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "maskent/error.hpp"
#include "maskent/serialize.hpp"
#include "maskent/tightness.hpp"

using namespace maskent;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("maskent_cli_test_" + name);
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("field subcommand") {
  auto r = run({"field", "--p", "2", "--m", "2"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["irreducible"] == json::array({1, 1, 1}));
  CHECK(doc["q"] == 4);

  r = run({"field", "--q", "9"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["irreducible"] == json::array({1, 0, 1}));

  r = run({"field", "--q", "6"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("not a prime power") != std::string::npos);

  CHECK(run({"field", "--p", "4"}).code == 2);
  CHECK(run({"field", "--q", "8", "--p", "3"}).code == 2);
  CHECK(run({"field"}).code == 2);
}

TEST_CASE("tightness subcommand") {
  const auto r = run({"tightness", "--q", "3", "--n", "1"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["violations"].empty());
  CHECK(std::abs(doc["report"]["avg_h2"].get<double>() - 0.8479969) < 1e-7);
  CHECK(std::abs(doc["prediction"]["avg_h2"].get<double>() - 0.8479969) < 1e-7);
}

TEST_CASE("campaign subcommand") {
  auto r = run({"campaign", "--q", "2", "--n", "2", "--suite", "exhaustive"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["max_avg_cp"] == "9/16");
  CHECK(doc["argmax_count"] == 16);
  CHECK(doc["violations"].empty());

  r = run({"campaign", "--q", "3", "--n", "1", "--suite", "random", "--samples", "5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("f_digest,avg_cp", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);

  CHECK(run({"campaign", "--q", "2", "--suite", "annealing"}).code == 2);
  CHECK(run({"campaign", "--q", "4", "--n", "2", "--suite", "exhaustive"}).code == 2);  // budget
}

TEST_CASE("search subcommand and determinism") {
  const std::vector<std::string> args{"search", "--q", "2", "--n", "2", "--iters", "500", "--restarts", "2", "--seed", "3"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["config"]["mode"] == "hillclimb");
  CHECK(json::parse(a.out)["config"]["seed"] == 3);
}

TEST_CASE("verify subcommand and load_table") {
  const auto square = temp_file("square.json", table_to_json(square_family(3, 1)).dump());
  auto r = run({"verify", "--table", square.string()});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["report"]["avg_cp"] == "5/9");
  CHECK(cli::load_table(square) == square_family(3, 1));

  const auto gf2 = build_field(2, 1);
  const auto swap = FunctionTable::tabulate(gf2, 2, [&](const FieldVector& x) { return FieldVector(gf2, {x[1], x[0]}); });
  const auto swap_file = temp_file("swap.json", table_to_json(swap).dump());
  r = run({"verify", "--table", swap_file.string(), "--per-k"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["report"]["equality_holds"] == false);
  CHECK(doc["report"]["avg_cp"] == "5/16");
  CHECK(doc["report"]["per_k"].size() == 4);

  const auto partial = temp_file("partial.json", R"({"p": 3, "m": 1, "n": 1, "outputs": [[0], [1]]})");
  r = run({"verify", "--table", partial.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("not total") != std::string::npos);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

  const auto range = temp_file("range.json", R"({"p": 3, "m": 1, "n": 1, "outputs": [[0], [1], [3]]})");
  CHECK(run({"verify", "--table", range.string()}).code == 2);
  CHECK_THROWS_AS(cli::load_table(range), TableError);

  const auto garbage = temp_file("garbage.json", "{not json");
  CHECK(run({"verify", "--table", garbage.string()}).code == 2);
  CHECK(run({"verify", "--table", "/nonexistent/table.json"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--table", square.string(), "--format", "csv"}).code == 2);
}

TEST_CASE("--out writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "maskent_cli_test_out.json";
  std::filesystem::remove(path);
  const auto r = run({"field", "--q", "3", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(json::parse(in)["q"] == 3);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"field", "--q", "abc"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("budget environment override") {
  ::setenv("MASKENT_BUDGET", "10", 1);
  const auto r = run({"tightness", "--q", "3", "--n", "2"});
  ::unsetenv("MASKENT_BUDGET");
  CHECK(r.code == 2);
  CHECK(r.err.find("budget") != std::string::npos);
  CHECK(run({"tightness", "--q", "3", "--n", "2"}).code == 0);
}
