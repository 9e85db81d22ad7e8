// Golden harness for the command-line tool: runs the built binary (path in
// KOSTKA_BIN), captures stdout and the exit code.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const char* bin = std::getenv("KOSTKA_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "KOSTKA_BIN must point at the built binary");
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
  int status = pclose(pipe);
  res.code = WEXITSTATUS(status);
  return res;
}

}  // namespace

TEST_CASE("roots emits the root system") {
  auto r = run("roots --type B --rank 2");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["positive_roots"].size() == 4);

  CHECK(json::parse(run("roots --type A --rank 1").out)["positive_roots"].size() == 1);
  CHECK(json::parse(run("roots --type D --rank 4").out)["positive_roots"].size() == 12);
}

TEST_CASE("kostka values and cross checks") {
  auto r = run("kostka --type A --rank 2 --lambda-fw 1,1 --mu-fw 0,0");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["kostka"] == "2");

  auto same = run("kostka --type C --rank 2 --lambda-fw 1,1 --mu-fw 1,1");
  CHECK(json::parse(same.out)["kostka"] == "1");

  auto cc = run("kostka --type B --rank 2 --lambda-eps 1,0 --mu-eps 0,0 --cross-check");
  CHECK(cc.code == 0);
  json jc = json::parse(cc.out);
  CHECK(jc["kostka"] == "1");
  CHECK(jc["cross_check"]["agree"] == true);

  auto ccA = run("kostka --type A --rank 3 --lambda-fw 2,2,0 --mu-fw 0,1,0 --cross-check");
  CHECK(ccA.code == 0);
  json ja = json::parse(ccA.out);
  CHECK(ja["kostka"] == "4");
  CHECK(ja["cross_check"]["agree"] == true);

  auto nd = run("kostka --type B --rank 2 --lambda-fw 0,1 --mu-fw 0,0");
  CHECK(nd.code == 0);
  json jn = json::parse(nd.out);
  CHECK(jn["kostka"] == "0");
  CHECK(jn["note"] == "not dominated");
}

TEST_CASE("stretch table in csv") {
  auto r = run("stretch --type A --rank 2 --lambda-fw 1,1 --mu-fw 0,0 --nmax 4 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out == "N,K\n1,2\n2,3\n3,4\n4,5\n");
}

TEST_CASE("verify exit codes") {
  auto ok = run("verify --type A --rank 2 --lambda-fw 1,1 --mu-fw 0,0");
  CHECK(ok.code == 0);
  json j = json::parse(ok.out);
  CHECK(j["predicted"]["degree"] == 1);
  CHECK(j["fitted"]["degree"] == 1);
  CHECK(j["verdicts"]["fit_vs_predicted"] == "match");

  auto same = run("verify --type B --rank 2 --lambda-fw 1,0 --mu-fw 1,0");
  CHECK(same.code == 0);
  json js = json::parse(same.out);
  CHECK(js["predicted"]["degree"] == 0);
  CHECK(js["geometric_dimension"] == 0);

  auto bad = run("verify --type A --rank 2 --lambda-fw 1,1 --mu-fw 0,0 --expect 7");
  CHECK(bad.code == 1);

  // a trial-period list that can never validate
  auto inf = run("verify --type A --rank 2 --lambda-fw 1,1 --mu-fw 0,0 --periods 3 --nmax 5");
  CHECK(inf.code == 3);

  // non-integral difference is a usage error
  auto nd = run("verify --type B --rank 2 --lambda-fw 0,1 --mu-fw 0,0");
  CHECK(nd.code == 2);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("kostka --type A --rank 2 --lambda-fw 1,1").code == 2);           // missing mu
  CHECK(run("kostka --type Z --rank 2 --lambda-fw 1,1 --mu-fw 0,0").code == 2);
  CHECK(run("kostka --type A --rank 2 --lambda-fw 1,1 --mu-eps 0,0,0").code == 2);  // mixed bases
  CHECK(run("dim --type A --rank 2 --lambda-fw 1,1").code == 2);              // needs B/C/D
  CHECK(run("interior --type B --rank 2").code == 2);                         // missing lambda
  CHECK(run("kostka --type B --rank 7 --lambda-fw 1,0,0,0,0,0,0 --mu-fw 1,0,0,0,0,0,0 "
            "--method kostant")
            .code == 2);  // above the Weyl cap
  CHECK(run("nonsense").code == 2);
}

TEST_CASE("dim agrees with the oracle") {
  auto r = run("dim --type B --rank 5 --lambda-eps 3,1,1,0,0");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["formula"] == 20);
  CHECK(j["oracle"] == 20);
  CHECK(j["match"] == true);
}

TEST_CASE("interior reproduces the worked example") {
  auto r = run("interior --type B --rank 5 --lambda-eps 3,1,1,0,0");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["eta"][0] == json({"2", "1", "1/2", "0", "0"}));
  CHECK(j["lambda"][1] == json({"3/2", "3/4", "1/4", "0"}));
}

TEST_CASE("bz-count matches kostka") {
  auto r = run("bz-count --type D --rank 4 --lambda-fw 0,0,0,2 --mu-fw 0,0,0,0");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  auto k = run("kostka --type D --rank 4 --lambda-fw 0,0,0,2 --mu-fw 0,0,0,0 --method kostant");
  CHECK(j["kostka"] == json::parse(k.out)["kostka"]);
}

TEST_CASE("output is byte-identical across runs") {
  std::string cmd = "verify --type B --rank 2 --lambda-fw 0,2 --mu-fw 0,0";
  auto a = run(cmd);
  auto b = run(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  REQUIRE(!a.out.empty());
}
