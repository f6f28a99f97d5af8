#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "nomaps/arith.hpp"
#include "nomaps/io.hpp"

using namespace nomaps;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove(p);
  return p;
}

CountTable sample(int arity) {
  CountTable t;
  t.model = "maps";
  t.n_max = 2;
  t.g2_max = 1;
  t.arity = arity;
  if (arity == 0) {
    t.rows = {{"maps", 1, 0, {}, "2"}, {"maps", 1, 1, {}, "1"}, {"maps", 2, 0, {}, "9"}, {"maps", 2, 1, {}, "10"}};
  } else {
    t.rows = {{"maps", 1, 0, {1, 2}, "1"}, {"maps", 1, 0, {2, 1}, "1"}, {"maps", 2, 1, {1, 2}, "123456789012345678901234567890"}};
  }
  return t;
}

}  // namespace

TEST_CASE("genus strings") {
  CHECK(genus_str(0) == "0");
  CHECK(genus_str(3) == "3/2");
  CHECK(genus_str(6) == "3");
  CHECK(parse_genus("2") == 4);
  CHECK(parse_genus("3/2") == 3);
  CHECK(parse_genus("1.5") == 3);
  CHECK_THROWS_AS(parse_genus("1/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_genus("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_genus("-1"), std::invalid_argument);
}

TEST_CASE("emit and parse round-trip in every format") {
  for (int arity : {0, 2}) {
    const CountTable t = sample(arity);
    for (Format f : {Format::table, Format::csv, Format::json}) {
      CAPTURE(arity);
      CAPTURE(int(f));
      CHECK(parse_emitted(emit(t, f), f, "maps") == t.rows);
    }
  }
}

TEST_CASE("maps csv holds the genus-2 count with four edges") {
  const Result r = run({"maps", "--n-max", "4", "--g-max", "2", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = parse_emitted(r.out, Format::csv, "maps");
  bool found = false;
  for (const auto& row : rows) {
    if (row.n == 4 && row.g2 == 4) {
      CHECK(row.value == "509");
      found = true;
    }
  }
  CHECK(found);
  CHECK(r.out.rfind("n,g=0,g=1/2,g=1,g=3/2,g=2\n", 0) == 0);
}

TEST_CASE("engines agree through the CLI") {
  const Result r = run({"maps", "--n-max", "6", "--engine", "both", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
}

TEST_CASE("verify exits zero on vanishing residuals") {
  const Result r = run({"verify", "ode-maps", "--order", "16"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS ode-maps", 0) == 0);
  const Result j = run({"--format", "json", "verify", "ode-ledoux"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"status\": \"pass\"") != std::string::npos);
}

TEST_CASE("bivariate and trivariate outputs sum to the totals") {
  for (const auto& [cmd, flag] : {std::pair<std::string, std::string>{"maps", "--bivariate"}, {"bipartite", "--trivariate"}}) {
    const auto totals = parse_emitted(run({cmd, "--n-max", "5", "--format", "csv"}).out, Format::csv, cmd);
    const auto split = parse_emitted(run({cmd, "--n-max", "5", flag, "--format", "csv"}).out, Format::csv, cmd);
    for (const auto& t : totals) {
      Integer sum = 0;
      for (const auto& s : split) {
        if (s.n == t.n && s.g2 == t.g2) sum += Integer(s.value);
      }
      CAPTURE(cmd);
      CAPTURE(t.n);
      CAPTURE(t.g2);
      CHECK(sum == Integer(t.value));
    }
  }
}

TEST_CASE("oracle output matches the recurrence output") {
  const Result o = run({"oracle", "--edges", "3", "--format", "csv"});
  const Result m = run({"maps", "--n-max", "3", "--bivariate", "--format", "csv"});
  REQUIRE(o.code == 0);
  const auto orows = parse_emitted(o.out, Format::csv, "maps");
  const auto mrows = parse_emitted(m.out, Format::csv, "maps");
  std::vector<CountRecord> m3;
  for (const auto& r : mrows) {
    if (r.n == 3) m3.push_back(r);
  }
  CHECK(orows == m3);
  const Result t = run({"oracle", "--edges", "3", "--filter", "triangulation", "--format", "csv"});
  CHECK(t.out == "n,g=0,g=1/2,g=1\n1,4,9,7\n");
}

TEST_CASE("cached output is byte-identical") {
  const auto path = temp_file("nomaps_cli_cache_test.ndjson");
  for (const std::vector<std::string> cmd :
       {std::vector<std::string>{"maps", "--n-max", "7", "--bivariate"}, {"bipartite", "--n-max", "6"},
        {"triangulations", "--n-max", "4"}, {"bip-oneface", "--n-max", "5"}}) {
    for (const char* fmt : {"table", "csv", "json"}) {
      std::vector<std::string> args{"--cache", path.string(), "--format", fmt};
      args.insert(args.end(), cmd.begin(), cmd.end());
      std::vector<std::string> uncached{"--no-cache", "--format", fmt};
      uncached.insert(uncached.end(), cmd.begin(), cmd.end());
      const Result first = run(args);
      const Result second = run(args);
      const Result plain = run(uncached);
      CAPTURE(cmd.front());
      CHECK(first.code == 0);
      CHECK(first.out == second.out);
      CHECK(first.out == plain.out);
    }
  }
  CountCache c(path);
  CHECK(c.size() > 0);
  const std::size_t before = c.size();
  run({"--cache", path.string(), "maps", "--n-max", "5", "--bivariate"});
  CHECK(CountCache(path).size() == before);
  std::filesystem::remove(path);
}

TEST_CASE("a corrupt cache is rejected") {
  const auto path = temp_file("nomaps_cli_bad_cache.ndjson");
  std::ofstream(path) << "{\"format\":\"something-else\"}\n";
  CHECK_THROWS_AS(CountCache{path}, std::runtime_error);
  CHECK(run({"--cache", path.string(), "maps", "--n-max", "2"}).code == 1);
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit with code two") {
  CHECK(run({}).code == 2);
  CHECK(run({"maps"}).code == 2);
  CHECK(run({"maps", "--n-max", "-1"}).code == 2);
  CHECK(run({"maps", "--n-max", "3", "--g-max", "1/3"}).code == 2);
  CHECK(run({"maps", "--n-max", "3", "--engine", "fast"}).code == 2);
  CHECK(run({"--format", "xml", "maps", "--n-max", "3"}).code == 2);
  CHECK(run({"verify", "no-such-identity"}).code == 2);
  CHECK(run({"verify", "ode-maps", "--order", "0"}).code == 2);
  CHECK(run({"verify", "ode-triangulations", "--order", "5"}).code == 2);
  CHECK(run({"oracle", "--edges", "9"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("empty ranges produce header-only tables") {
  const Result r = run({"maps", "--n-max", "0", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,g=0\n");
}
