#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "jack_fixture.hpp"
#include "stanleychar/polynomial_json.hpp"
#include "stanleychar/stanley.hpp"
#include "verify.hpp"

using namespace stanleychar;
using namespace stanleychar::cli;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  Result r;
  const ParseOutcome parsed = parse_command_line(args);
  if (!parsed.job) {
    r.code = parsed.exit_code;
    (parsed.exit_code == kExitOk ? r.out : r.err) = parsed.message;
    return r;
  }
  std::ostringstream out, err;
  r.code = run(*parsed.job, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct TempDir {
  std::filesystem::path path = std::filesystem::temp_directory_path() /
                               ("stanleychar-cli-" + std::to_string(std::random_device{}()));
  TempDir() { std::filesystem::create_directories(path); }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("character command") {
  CHECK(invoke({"char", "--pi", "3", "--lambda", "2,1"}).out == "-3\n");
  CHECK(invoke({"char", "--pi", "4", "--lambda", "2,1"}).out == "0\n");
  CHECK(invoke({"char", "--pi", "3", "--p", "1,1", "--q", "2,1"}).out == "-3\n");
  const Result json = invoke({"char", "--pi", "2,1", "--lambda", "3,1", "--output", "json"});
  CHECK(json.code == kExitOk);
  CHECK(nlohmann::json::parse(json.out)["value"] == oracle::normalized_character({2, 1}, {3, 1}).get_str());
}

TEST_CASE("symbolic commands") {
  CHECK(invoke({"kerov", "--k", "5", "--output", "text", "--no-cache"}).out == "R6 + 15*R4 + 5*R2^2 + 8*R2\n");

  const Result st = invoke({"stanley", "--pi", "5", "--ell", "3", "--output", "json"});
  REQUIRE(st.code == kExitOk);
  CHECK(polynomial_from_json(nlohmann::json::parse(st.out)["polynomial"]) == stanley_polynomial(Partition({5}), 3));

  const Result r4 = invoke({"cumulant", "--j", "4", "--ell", "2"});
  CHECK(r4.code == kExitOk);
  CHECK(parse_polynomial(r4.out.substr(0, r4.out.size() - 1)) == homogeneous_component(stanley_polynomial(Partition({3}), 2), 4));
  CHECK(invoke({"cumulant", "--j", "2", "--lambda", "4,2"}).out == "6\n");
}

TEST_CASE("maps command") {
  const Result r = invoke({"maps", "--pi", "5", "--sigma1", "(1,5,4,2)(3)", "--lambda", "3,1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("euler characteristic: 0\n") != std::string::npos);
  CHECK(r.out.find("genus: 1\n") != std::string::npos);
  CHECK(r.out.find("sigma2: (1,4)(2,3,5)\n") != std::string::npos);
  CHECK(invoke({"maps", "--pi", "5", "--sigma1", "(1,5,4,2)(3)", "--dot"}).out.rfind("graph map {", 0) == 0);
  const Result bad = invoke({"maps", "--pi", "5", "--sigma1", "(1,5,4,2)(3)", "--sigma2", "(1,2)"});
  CHECK(bad.code == kExitUsage);
  CHECK(invoke({"maps", "--pi", "3", "--sigma1", "(1,4)"}).code == kExitUsage);
}

TEST_CASE("usage errors are rejected before computing") {
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"nonsense"}).code == kExitUsage);
  CHECK(invoke({"char", "--pi", "3"}).code == kExitUsage);
  CHECK(invoke({"char", "--pi", "3,4", "--lambda", "2,1"}).code == kExitUsage);
  CHECK(invoke({"char", "--pi", "3", "--p", "1", "--q", "1,2"}).code == kExitUsage);
  CHECK(invoke({"char", "--pi", "3", "--p", "1,1", "--q", "1,2"}).code == kExitUsage);
  CHECK(invoke({"stanley", "--pi", "8"}).code == kExitUsage);
  CHECK(invoke({"stanley", "--pi", "3", "--ell", "0"}).code == kExitUsage);
  CHECK(invoke({"kerov", "--k", "0"}).code == kExitUsage);
  CHECK(invoke({"kerov", "--k", "9", "--no-cache"}).code == kExitUsage);
  CHECK(invoke({"verify", "--suite", "bogus"}).code == kExitUsage);
  CHECK(invoke({"verify", "--kmax", "8"}).code == kExitUsage);
  CHECK(invoke({"--threads", "0", "verify"}).code == kExitUsage);
  CHECK(invoke({"--output", "xml", "verify"}).code == kExitUsage);
  const Result help = invoke({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("kerov") != std::string::npos);

  JobSpec job;
  job.command = Command::Stanley;
  CHECK_THROWS_AS(validate(job), UsageError);
  job.pi = Partition({8});
  CHECK_THROWS_AS(validate(job), UsageError);
  job.force = true;
  CHECK_NOTHROW(validate(job));
}

TEST_CASE("verification suites") {
  const Result jack = invoke({"verify", "--suite", "jack-fixture"});
  CHECK(jack.code == kExitOk);
  CHECK(jack.out.find("summary: 2 passed, 0 failed") != std::string::npos);

  const VerifyReport report = run_verification("perm", 4, 1);
  CHECK(report.all_passed());
  CHECK(report.to_json()["failed"] == 0);
  CHECK_THROWS_AS(run_verification("nope", 3, 1), std::invalid_argument);

  VerifyReport failing;
  failing.checks.push_back({"demo", false, 3, {{"check", "demo"}, {"case", "x"}, {"expected", "1"}, {"actual", "2"}}});
  CHECK(failing.failed() == 1);
  CHECK(failing.to_text().find("FAIL demo (3 cases) first mismatch: {\"actual\":\"2\"") != std::string::npos);
}

TEST_CASE("jack fixture") {
  const Polynomial f = jack_fixture();
  CHECK(f.size() == 19);
  CHECK(parse_polynomial(jack_fixture_text()) == f);
  CHECK(coefficient(f, Monomial{{var_p(1), 1}, {var_q(1), 1}, {var_gamma(), 2}}) == 2);
  CHECK(coefficient(f, Monomial{{var_p(1), 3}, {var_q(1), 1}}) == 1);
  CHECK(substitute(f, {{var_gamma(), Polynomial(0)}}) == stanley_polynomial(Partition({3}), 2));
}

TEST_CASE("kerov cache through the command line") {
  TempDir dir;
  const std::string d = dir.path.string();
  const Result first = invoke({"kerov", "--k", "4", "--cache-dir", d});
  CHECK(first.out == "R5 + 5*R3\n");
  REQUIRE(std::filesystem::exists(dir.path / "K4.json"));
  CHECK(invoke({"kerov", "--k", "4", "--cache-dir", d}).out == first.out);

  // A tampered entry is recomputed and overwritten.
  std::ofstream(dir.path / "K4.json", std::ios::trunc) << "{\"schema\":1,\"k\":4,\"polynomial\":{\"terms\":[]}}";
  CHECK(invoke({"kerov", "--k", "4", "--cache-dir", d}).out == first.out);
  std::ifstream in(dir.path / "K4.json");
  CHECK(nlohmann::json::parse(in)["polynomial"]["terms"].size() == 2);

  CHECK(invoke({"kerov", "--k", "3", "--cache-dir", d, "--no-cache"}).out == "R4 + R2\n");
  CHECK_FALSE(std::filesystem::exists(dir.path / "K3.json"));
}

TEST_CASE("cache directory resolution") {
  ::setenv("STANLEYCHAR_CACHE", "/tmp/somewhere", 1);
  CHECK(default_cache_dir() == std::filesystem::path("/tmp/somewhere"));
  ::unsetenv("STANLEYCHAR_CACHE");
  ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
  CHECK(default_cache_dir() == std::filesystem::path("/tmp/xdg/stanleychar"));
  ::unsetenv("XDG_CACHE_HOME");
}

TEST_CASE("output does not depend on the thread count") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"stanley", "--pi", "3,2", "--ell", "2"}, {"kerov", "--k", "5", "--no-cache"}, {"verify", "--suite", "maps", "--kmax", "4"}}) {
    std::vector<std::string> one = {"--threads", "1"}, many = {"--threads", "5"};
    one.insert(one.end(), args.begin(), args.end());
    many.insert(many.end(), args.begin(), args.end());
    const Result a = invoke(one);
    clear_stanley_cache();
    const Result b = invoke(many);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
  }
}
