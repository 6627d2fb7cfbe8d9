#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "brauer/cli.hpp"

using namespace brauer;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze C_2 at 2") {
  const Run r = run({"analyze", "--group", "cyclic(2)", "--p", "2"});
  REQUIRE(r.code == kExitOk);
  const json doc = json::parse(r.out);
  CHECK(doc["kernel"]["basis"] == json::parse(R"([{"coeffs":{"{e}":-1,"C_2":2}}])"));
  CHECK(doc["prim"] == json::parse("[0]"));
  CHECK(doc["match"] == true);
  CHECK(doc["schema_version"] == kReportSchemaVersion);
  CHECK_FALSE(doc.contains("timing"));
}

TEST_CASE("analyze C_6 at 5 has no relations") {
  const Run r = run({"analyze", "--group", R"({"family":"cyclic","n":6})", "--p", "5"});
  REQUIRE(r.code == kExitOk);
  CHECK(json::parse(r.out)["kernel"]["rank"] == 0);
}

TEST_CASE("analyze a spec file") {
  const auto path = std::filesystem::temp_directory_path() / "brauer_s3xs3.json";
  {
    std::ofstream f(path);
    f << R"({"schema_version":1,"family":"direct_product",
             "factors":[{"family":"symmetric","n":3},{"family":"symmetric","n":3}]})";
  }
  const Run r = run({"analyze", "--group", path.string(), "--p", "2"});
  std::filesystem::remove(path);
  REQUIRE(r.code == kExitOk);
  CHECK(json::parse(r.out)["prim"] == json::parse("[2]"));
}

TEST_CASE("reports are byte identical across runs") {
  const std::vector<std::string> args{"analyze", "-g", "catalog:A_4", "-p", "3", "--emit-relations"};
  const Run a = run(args), b = run(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out).contains("relations"));
  const Run c = run({"analyze", "-g", "catalog:A_4", "-p", "3", "--debug-imprim-all"});
  CHECK(json::parse(c.out)["imprim"] == json::parse(a.out)["imprim"]);
}

TEST_CASE("timing is opt-in") {
  const Run r = run({"analyze", "-g", "cyclic(3)", "-p", "3", "--timing"});
  CHECK(json::parse(r.out).contains("timing"));
}

TEST_CASE("exit codes and no partial output") {
  const Run bad_json = run({"analyze", "-g", R"({"family":)", "-p", "2"});
  CHECK(bad_json.code == kExitInput);
  CHECK(bad_json.out.empty());
  CHECK(bad_json.err.find("line 1") != std::string::npos);

  const Run bad_prime = run({"analyze", "-g", "cyclic(6)", "-p", "6"});
  CHECK(bad_prime.code == kExitInput);
  CHECK(bad_prime.out.empty());

  const Run invalid = run({"analyze", "-g",
                           R"({"family":"semidirect","base":{"l":7,"d":1},"actor":{"cyclic":3},"action":[[7]]})",
                           "-p", "3"});
  CHECK(invalid.code == kExitInput);
  CHECK(invalid.out.empty());

  const Run missing = run({"analyze", "-g", "/no/such/file.json", "-p", "2"});
  CHECK(missing.code == kExitInput);

  const Run bound = run({"analyze", "-g", "alternating(5)", "-p", "5", "--max-order", "30"});
  CHECK(bound.code == kExitResource);
  CHECK(bound.out.empty());

  CHECK(run({"analyze", "-p", "2"}).code == kExitInput);
  CHECK(run({}).code == kExitInput);
  CHECK(run({"verify", "--primes", "2,x"}).code == kExitInput);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("verify") {
  SUBCASE("orders up to 40 over 2, 3, 5") {
    const Run r = run({"verify", "--max-order", "40", "--primes", "2,3,5"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find(" 0 mismatches") != std::string::npos);
    CHECK(r.out.find("A_5") == std::string::npos);
  }
  SUBCASE("orders up to 6 include C_p rows with Z") {
    const Run r = run({"verify", "--max-order", "6", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const json doc = json::parse(r.out);
    int cp_rows = 0;
    for (const auto& row : doc["entries"]) {
      CHECK(row["order"].get<int>() <= 6);
      const std::string name = row["entry"];
      if (name == "C_" + std::to_string(row["p"].get<int>())) {
        CHECK(row["prim"] == json::parse("[0]"));
        ++cp_rows;
      }
    }
    CHECK(cp_rows == 3);
  }
  SUBCASE("orders up to 60 include A_5") {
    const Run r = run({"verify", "--max-order", "60"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("A_5") != std::string::npos);
  }
}

TEST_CASE("selftest") {
  const Run r = run({"selftest", "--axioms"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("S_3     mackey          16    pass") != std::string::npos);
  CHECK(run({"selftest", "--lattices"}).code == kExitOk);
  CHECK(run({"selftest", "--axioms", "--group", "cyclic(6)"}).code == kExitOk);
}
