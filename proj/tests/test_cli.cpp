#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "excmono/cli.hpp"

using namespace excmono;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "excmono");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("k-type E8") {
  const Run r = run({"k-type", "E8"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("result") == nlohmann::json{{"g", "E8"}, {"k", "D8"}, {"pi1", "Z/2"}, {"c_alpha_prime", 2}});
  CHECK(j.at("command") == "k-type");
  CHECK(j.at("version") == kVersion);
  CHECK(j.at("passed") == true);
  CHECK_FALSE(j.contains("elapsed_seconds"));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"roots", "Z9"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"roots", "E8", "--bogus"}).code == 2);
  CHECK(run({"k-type", "E8", "--format", "xml"}).code == 2);
  CHECK(run({"k-type", "E8", "--format", "csv"}).code == 2);
  CHECK(run({"atilde", "B3"}).code == 2);
  CHECK(run({"monodromy", "A2"}).code == 2);
  CHECK(run({"a1", "trace", "--q", "7", "--lambda", "3"}).code == 2);
  CHECK(run({"rigid", "--group", "psl2", "--ell", "7"}).code == 2);
  CHECK(run({"rigid", "--group", "psl2", "--ell", "7", "--classes", "2a,3a,9z"}).code == 2);
}

TEST_CASE("output is byte-stable") {
  for (const std::vector<std::string> args : {std::vector<std::string>{"roots", "G2"}, {"atilde", "D6", "--irreps"},
                                              {"monodromy", "G2"}, {"verify-all", "--criterion", "2"}}) {
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("--timing adds elapsed time") {
  const auto j = nlohmann::json::parse(run({"roots", "A1", "--timing"}).out);
  CHECK(j.contains("elapsed_seconds"));
}

TEST_CASE("atilde and monodromy") {
  const auto a = nlohmann::json::parse(run({"atilde", "E7"}).out);
  CHECK(a.at("result").at("center_structure") == "mu4");
  const Run m = run({"monodromy", "E7"});
  CHECK(m.code == 0);
  const auto j = nlohmann::json::parse(m.out);
  CHECK(j.at("result").at("budget").at("dinf") == 63);
  CHECK(j.at("result").at("quasi_minuscule").at("dim_y") == 34);
}

TEST_CASE("a1 trace and scan") {
  const Run t = run({"a1", "trace", "--q", "13", "--lambda", "3"});
  const auto j = nlohmann::json::parse(t.out);
  CHECK(j.at("parameters").at("q") == 13);
  CHECK(t.code == (j.at("passed") == true ? 0 : 1));
  const Run csv = run({"a1", "scan", "--primes", "5,13", "--format", "csv"});
  CHECK(csv.out.rfind("q,lambda,t1_re,t1_im,t2,t3_re,t3_im,n_points,sym2,sym2_over_q\n", 0) == 0);
  const std::string path = "cli_test_traces.csv";
  const Run s = run({"a1", "scan", "--primes", "5", "--out", path});
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == csv.out.substr(0, buf.str().size()));
  CHECK(nlohmann::json::parse(s.out).at("result").at("rows") == 3);
  std::remove(path.c_str());
}

TEST_CASE("rigid") {
  const Run r = run({"rigid", "--group", "psl2", "--ell", "7", "--classes", "2a,3a,7a"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("result").at("strictly_rigid") == true);
  const Run p = run({"rigid", "--group", "pgl2", "--ell", "5"});
  CHECK(p.code == 0);
  const std::string path = "cli_test_group.json";
  {
    std::ofstream f(path);
    f << R"({"kind": "permutation", "degree": 4, "generators": [[1,0,2,3], [1,2,3,0]]})";
  }
  const Run f = run({"rigid", "--group", "file:" + path, "--classes", "2a,3a,4a"});
  CHECK(f.code == 0);
  CHECK(nlohmann::json::parse(f.out).at("result").at("group_order") == 24);
  std::remove(path.c_str());
  CHECK(run({"rigid", "--group", "file:/nonexistent.json", "--classes", "2a,3a,4a"}).code == 2);
}
