#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cache_file.hpp"
#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using schurlc::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() /
         ("schurlc_test_" + std::to_string(::getpid()) + "_" + name);
}

struct NoEnvCache {
  NoEnvCache() { ::unsetenv("SCHURLC_CACHE"); }
};

}  // namespace

TEST_CASE_FIXTURE(NoEnvCache, "lr command") {
  CHECK(cli({"lr", "--mu", "[1]", "--nu", "[1]", "--theta", "[2]"}).out == "1\n");
  CHECK(cli({"lr", "--mu", "[]", "--nu", "[]", "--theta", "[]"}).out == "1\n");
  CHECK(cli({"lr", "--mu", "[1]", "--nu", "[1]", "--theta", "[3]"}).out == "0\n");
  const auto bad = cli({"lr", "--mu", "[1,2]", "--nu", "[1]", "--theta", "[2]"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
  CHECK(cli({"lr", "--mu", "[1]"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"lr", "--mu", "[1]", "--nu", "[1]", "--theta", "[2]", "--bogus"})
            .code == 2);
}

TEST_CASE_FIXTURE(NoEnvCache, "product command") {
  CHECK(cli({"product", "--mu", "[5,1]", "--nu", "[4,2]", "--vars", "2"}).out ==
        "1*[9,3] + 1*[8,4] + 1*[7,5]\n");
  CHECK(cli({"product", "--mu", "[]", "--nu", "[3]"}).out == "1*[3]\n");
  const auto r = cli({"product", "--mu", "[2,1]", "--nu", "[2,1]"});
  CHECK(r.out ==
        "1*[4,2] + 1*[4,1,1] + 1*[3,3] + 2*[3,2,1] + 1*[3,1,1,1] + "
        "1*[2,2,2] + 1*[2,2,1,1]\n");
}

TEST_CASE_FIXTURE(NoEnvCache, "qbinom and diagonal commands") {
  CHECK(cli({"qbinom", "--n", "4", "--k", "2"}).out ==
        "q^-4 + q^-2 + 2 + q^2 + q^4\n");
  CHECK(cli({"qbinom", "--n", "2", "--k", "3"}).code == 2);
  const auto row = cli({"diagonal", "--n", "4", "--k", "0", "--alpha", "0",
                        "--beta", "1", "--len", "5", "--imax", "3"});
  CHECK(row.code == 0);
  CHECK(row.out.find("verdict: holds") != std::string::npos);
  const auto fib = cli({"diagonal", "--n", "6", "--k", "0", "--alpha", "1",
                        "--beta", "1", "--len", "4", "--imax", "2"});
  CHECK(fib.code == 0);
  CHECK(fib.out.find("verdict: holds") != std::string::npos);
  CHECK(cli({"diagonal", "--n", "2", "--k", "3", "--alpha", "0", "--beta",
             "1"})
            .code == 2);
}

TEST_CASE_FIXTURE(NoEnvCache, "check command") {
  const auto fails =
      cli({"check", "--family", "[3,3];[3];[1,1]", "--terms", "4", "--imax", "1"});
  CHECK(fails.code == 1);
  CHECK(fails.out.find("n=1 i=0 fails") != std::string::npos);
  CHECK(fails.out.find("verdict: fails") != std::string::npos);
  CHECK(cli({"check", "--theorem1", "[2,1];1;1", "--terms", "5", "--imax", "2"})
            .code == 0);
  CHECK(cli({"check", "--family", "[];[];[1]", "--terms", "6", "--imax", "3"})
            .code == 0);
  CHECK(cli({"check", "--family", "[3,3];[3]"}).code == 2);
  CHECK(cli({"check"}).code == 2);
  CHECK(cli({"check", "--family", "[1];[];[1]", "--theorem1", "[1];1;1"}).code ==
        2);
}

TEST_CASE_FIXTURE(NoEnvCache, "json reports follow the schema") {
  const auto r = cli({"--output", "json", "--verbose", "check", "--family",
                      "[3,3];[3];[1,1]", "--terms", "4", "--imax", "1"});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("command") == "check");
  CHECK(j.at("params").at("lambda") == "[3,3]");
  CHECK(j.at("verdict") == "fails");
  REQUIRE(j.at("pairs").is_array());
  CHECK(j.at("pairs").size() == 3);
  CHECK(j.at("pairs")[0].contains("certificate"));
  CHECK(j.at("witness").at("n") == 1);
  CHECK(j.at("witness").at("coefficient").get<int>() < 0);
  CHECK(j.contains("certificate"));

  const auto quiet = nlohmann::json::parse(
      cli({"--output", "json", "check", "--theorem1", "[1];1;1"}).out);
  CHECK(quiet.at("verdict") == "holds");
  CHECK_FALSE(quiet.contains("witness"));
  CHECK_FALSE(quiet.at("pairs")[0].contains("certificate"));

  const auto lr = nlohmann::json::parse(
      cli({"--output", "json", "lr", "--mu", "[2,1]", "--nu", "[2,1]",
           "--theta", "[3,2,1]"})
          .out);
  CHECK(lr.at("result") == 2);
}

TEST_CASE_FIXTURE(NoEnvCache, "scan command") {
  const auto empty = cli({"scan", "--conjecture1"});
  CHECK(empty.code == 0);
  CHECK(empty.out == "points 0 holds 0 fails 0 vacuous 0 fails_tested_regime 0\n");
  const auto small = cli({"scan", "--conjecture1", "--max-size", "3",
                          "--beta-max-size", "1"});
  CHECK(small.code == 0);
  const auto eq = cli({"scan", "--conjecture1", "--max-size", "6", "--max-len",
                       "2", "--alpha-min", "1", "--alpha-max", "1",
                       "--beta-max-size", "3", "--imax", "0",
                       "--include-equal-length", "--parallelism", "2"});
  CHECK(eq.code == 0);
  CHECK(eq.out.find("lambda=[3,3] beta=[3] alpha=[1,1] regime=outside "
                    "verdict=fails at n=1 i=0") != std::string::npos);
  const auto c2 = cli({"scan", "--conjecture2", "--max-n", "4"});
  CHECK(c2.code == 0);
  CHECK(c2.out.find("fails_in_conjecture 0") != std::string::npos);
  CHECK(cli({"scan"}).code == 2);
  CHECK(cli({"scan", "--conjecture1", "--conjecture2"}).code == 2);
  CHECK(cli({"--parallelism", "0", "scan", "--conjecture1"}).code == 2);
}

TEST_CASE_FIXTURE(NoEnvCache, "cache file") {
  using namespace schurlc;
  const auto rec = cli::parse_record("[1];[1];[2];1");
  CHECK(rec.mu == Partition{1});
  CHECK(rec.theta == Partition{2});
  CHECK(rec.coeff == 1);
  CHECK(cli::format_record(rec) == "[1];[1];[2];1");
  CHECK_THROWS_AS(cli::parse_record("[1];[1];[2];x"), ParseError);

  const auto path = temp_path("cache.txt");
  std::filesystem::remove(path);
  const std::vector<std::string> scan{"--cache",      path.string(), "scan",
                                      "--conjecture1", "--max-size",  "3",
                                      "--beta-max-size", "1"};
  const auto cold = cli(scan);
  REQUIRE(std::filesystem::exists(path));
  const auto warm = cli(scan);
  CHECK(cold.out == warm.out);
  CHECK(cold.code == warm.code);

  std::ifstream in(path);
  const auto records = cli::read_records(in);
  CHECK_FALSE(records.empty());
  ProductCache loaded;
  cli::load_cache(path, loaded);
  CHECK(loaded.records() == records);
  const auto round = temp_path("round.txt");
  cli::store_cache(round, loaded);
  ProductCache again;
  cli::load_cache(round, again);
  CHECK(again.records() == records);

  {
    std::ofstream bad(path, std::ios::app);
    bad << "[1];[1];[2];x\n";
  }
  const auto corrupt = cli(scan);
  CHECK(corrupt.code == 4);
  CHECK(corrupt.err.find("line " + std::to_string(records.size() + 1)) !=
        std::string::npos);

  ::setenv("SCHURLC_CACHE", path.string().c_str(), 1);
  CHECK(cli({"lr", "--mu", "[1]", "--nu", "[1]", "--theta", "[2]"}).code == 4);
  ::unsetenv("SCHURLC_CACHE");

  CHECK(cli({"--cache", "/nonexistent-dir/x/cache.txt", "lr", "--mu", "[1]",
             "--nu", "[1]", "--theta", "[2]"})
            .code == 3);
  std::filesystem::remove(path);
  std::filesystem::remove(round);
}
