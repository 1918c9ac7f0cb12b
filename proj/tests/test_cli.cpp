// End-to-end checks of the command-line tool.  The binary path arrives as
// the first program argument (wired up by CTest).
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "uconf/json_io.hpp"

namespace {

std::string g_cli_path;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.output.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("series command reproduces the two-sphere configuration counts") {
  RunResult r = run_cli(
      R"(series --set '{"kind":"explicit","r":1,"points":[[0],[1]]}' )"
      R"(--space '{"kind":"euler","chi":2}' --bound 4)");
  REQUIRE(r.exit_code == 0);
  uconf::IntSeries f = uconf::parse_int_series(r.output);
  CHECK(f.bound() == uconf::DegreeBound::uniform(1, 4));
  CHECK(f.at(uconf::MultiIndex{0}) == 1);
  CHECK(f.at(uconf::MultiIndex{1}) == 2);
  CHECK(f.at(uconf::MultiIndex{2}) == 1);
  CHECK(f.at(uconf::MultiIndex{3}) == 0);
  CHECK(f.at(uconf::MultiIndex{4}) == 0);
}

TEST_CASE("factorize command emits the axes-only product representation") {
  RunResult r = run_cli(R"(factorize --set '{"kind":"axes","r":2}' --bound 4,4)");
  REQUIRE(r.exit_code == 0);
  uconf::Factorization fac = uconf::parse_factorization(r.output);
  uconf::Factorization expected{uconf::DegreeBound::uniform(2, 4),
                                {{uconf::MultiIndex{1, 0}, uconf::BigInt(-1)},
                                 {uconf::MultiIndex{0, 1}, uconf::BigInt(-1)},
                                 {uconf::MultiIndex{1, 1}, uconf::BigInt(1)}}};
  CHECK(fac == expected);
}

TEST_CASE("hd-series command emits polynomial coefficients") {
  RunResult r = run_cli(
      R"(hd-series --set '{"kind":"full","r":1}' --space '{"kind":"hd","e":"1+u*v"}' --bound 3)");
  REQUIRE(r.exit_code == 0);
  uconf::PolySeries f = uconf::parse_poly_series(r.output);
  CHECK(f.at(uconf::MultiIndex{2}) == uconf::parse_poly("1 + u*v + u^2*v^2"));
}

TEST_CASE("check command passes on the named sets") {
  RunResult r = run_cli("check --max-points 4 --bound 3");
  CHECK(r.exit_code == 0);
  auto report = nlohmann::json::parse(r.output);
  CHECK(report["passed"].get<bool>());
  CHECK(report["mismatches"].empty());
}

TEST_CASE("exit codes") {
  SUBCASE("malformed JSON exits 2") {
    CHECK(run_cli(R"(series --set '{oops' --space '{"kind":"euler","chi":1}' --bound 3)")
              .exit_code == 2);
  }
  SUBCASE("unknown kind exits 2") {
    CHECK(run_cli(R"(factorize --set '{"kind":"wat","r":1}' --bound 3)").exit_code == 2);
  }
  SUBCASE("missing @file exits 2") {
    CHECK(run_cli("factorize --set @/no/such/file.json --bound 3").exit_code == 2);
  }
  SUBCASE("semantic failure (0 not in I) exits 3") {
    CHECK(run_cli(R"(factorize --set '{"kind":"explicit","points":[[1]]}' --bound 3)")
              .exit_code == 3);
  }
  SUBCASE("bound arity mismatch exits 3") {
    CHECK(run_cli(R"(factorize --set '{"kind":"axes","r":2}' --bound 3,3,3)").exit_code == 3);
  }
  SUBCASE("hd-series rejects spaces without a Hodge-Deligne polynomial") {
    CHECK(run_cli(R"(hd-series --set '{"kind":"full","r":1}' )"
                  R"(--space '{"kind":"euler","chi":2}' --bound 3)")
              .exit_code == 3);
  }
}

TEST_CASE("byte-identical output for identical jobs") {
  const std::string args =
      R"(hd-series --set '{"kind":"max","caps":[3]}' --space '{"kind":"hd","e":"u*v-2"}' --bound 5)";
  RunResult first = run_cli(args);
  RunResult second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(!first.output.empty());
}

TEST_CASE("specs load from @file") {
  const std::string path = "/tmp/uconf_test_set.json";
  {
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    fputs(R"({"kind":"max","caps":[3]})", f);
    fclose(f);
  }
  RunResult r = run_cli("factorize --set @" + path + " --bound 8");
  REQUIRE(r.exit_code == 0);
  uconf::Factorization fac = uconf::parse_factorization(r.output);
  uconf::Factorization expected{uconf::DegreeBound::uniform(1, 8),
                                {{uconf::MultiIndex{1}, uconf::BigInt(-1)},
                                 {uconf::MultiIndex{3}, uconf::BigInt(1)}}};
  CHECK(fac == expected);
  remove(path.c_str());
}

TEST_CASE("table output is aligned text") {
  RunResult r = run_cli(
      R"(series --set '{"kind":"explicit","r":1,"points":[[0],[1]]}' )"
      R"(--space '{"kind":"euler","chi":2}' --bound 2 --output table)");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("coefficient") != std::string::npos);
  CHECK(r.output.find("(1)") != std::string::npos);
}

int main(int argc, char** argv) {
  doctest::Context context;
  if (argc > 1 && argv[1][0] != '-') {
    g_cli_path = argv[1];
    context.applyCommandLine(argc - 1, argv + 1);
  } else {
    g_cli_path = "./tools/uconf";
    context.applyCommandLine(argc, argv);
  }
  return context.run();
}
