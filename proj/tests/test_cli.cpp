#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "support.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "'" + std::string(HFK_CLI_PATH) + "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string file(const char* name) { return "'" + hfk::test::corpus(name) + "'"; }

std::string scratch(const std::string& name, const std::string& content) {
  auto dir = std::filesystem::temp_directory_path() / "hfk_cli_test";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << content;
  return "'" + path.string() + "'";
}

}  // namespace

TEST_CASE("validate exit codes") {
  CHECK(run("validate " + file("figure2.hd.json")).code == 0);
  CHECK(run("validate " + file("trefoil.grid")).code == 0);
  CHECK(run("validate " + scratch("bad.hd.json", "{\"genus\": 1")).code == 2);
  CHECK(run("validate " + scratch("bad.grid", "0 0\n1 0\n")).code == 2);
  CHECK(run("validate " + file("does_not_exist.hd.json")).code == 3);
  CHECK(run("validate " + scratch("figure2.txt", "{}")).code == 2);  // unknown extension
  CHECK(run("no-such-command").code == 2);
  Run v = run("--format json validate " + file("figure2.hd.json"));
  json j = json::parse(v.out);
  CHECK(j["h1"] == "Z");
}

TEST_CASE("homology totals") {
  CHECK(run("homology --total " + file("figure2.hd.json")).out == "0\n");
  CHECK(run("homology --total " + file("lens_e4.hd.json")).out == "4\n");
  CHECK(run("homology --total " + file("trefoil.grid")).out == "3\n");
  CHECK(run("homology --total --tilde " + file("trefoil.grid")).out == "48\n");
}

TEST_CASE("trefoil table") {
  Run r = run("--format csv homology " + file("trefoil.grid"));
  CHECK(r.code == 0);
  CHECK(r.out == "class,label,A,M,rank\n0,\"0\",-1,-2,1\n0,\"0\",0,-1,1\n0,\"0\",1,0,1\n");
  json j = json::parse(run("--format json homology " + file("trefoil.grid")).out);
  CHECK(j["total"] == 3);
}

TEST_CASE("output does not depend on the thread count") {
  for (const char* f : {"lens_e6.hd.json", "adapted_g2.hd.json", "figure8.grid"}) {
    CAPTURE(f);
    for (const char* fmt : {"json", "table", "csv"}) {
      std::string base = std::string("--format ") + fmt + " ";
      Run one = run(base + "--jobs 1 homology " + file(f));
      Run four = run(base + "--jobs 4 homology " + file(f));
      CHECK(one.code == 0);
      CHECK(one.out == four.out);
      CHECK(run(base + "--jobs 1 homology " + file(f)).out == one.out);
    }
  }
  std::string a = run("--format json --jobs 1 symmetry --check point-swap " + file("lens_e4.hd.json")).out;
  std::string b = run("--format json --jobs 3 symmetry --check point-swap " + file("lens_e4.hd.json")).out;
  CHECK(a == b);
}

TEST_CASE("symmetry command") {
  json e4 = json::parse(run("--format json symmetry --check evenness " + file("lens_e4.hd.json")).out);
  CHECK(e4["status"] == "pass");
  CHECK(e4["witnesses"]["applicable"] == true);
  json e3 = json::parse(run("--format json symmetry --check evenness " + file("lens_e3.hd.json")).out);
  CHECK(e3["status"] == "inapplicable");
  json ps = json::parse(run("--format json symmetry --check point-swap " + file("figure2.hd.json")).out);
  CHECK(ps["witnesses"]["identical_differential"] == true);
  CHECK(run("symmetry --check sideways " + file("figure2.hd.json")).code == 2);
}

TEST_CASE("chern command") {
  Run r = run("chern --domain P --generator a,c " + file("adapted_g2.hd.json"));
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 2) == "0\n");
  Run all = run("--format json chern --domain P " + file("adapted_g2.hd.json"));
  CHECK(all.code == 0);
  CHECK(all.out.find("\"chern-constancy\"") != std::string::npos);
  CHECK(run("chern --domain Q " + file("adapted_g2.hd.json")).code == 2);
  CHECK(run("chern --domain P --generator a,e " + file("adapted_g2.hd.json")).code == 2);  // not a generator
}

TEST_CASE("triangle command") {
  std::string zero = scratch("zero.json", "{\"total\": 0}");
  std::string three = scratch("three.txt", "3\n");
  std::string one = scratch("one.txt", "1\n");
  std::string five = scratch("five.txt", "5\n");
  json a = json::parse(run("--format json triangle " + zero + " " + three + " " + three).out);
  CHECK(a["status"] == "pass");
  json b = json::parse(run("--format json triangle " + one + " " + one + " " + one).out);
  CHECK(b["status"] == "pass");
  Run c = run("--format json triangle " + five + " " + one + " " + one);
  CHECK(c.code == 0);
  CHECK(json::parse(c.out)["status"] == "violation");
  CHECK(run("triangle " + zero + " " + three + " " + file("missing.txt")).code == 3);
  CHECK(run("triangle " + zero + " " + three + " " + scratch("junk.txt", "three")).code == 2);
}

TEST_CASE("fuzz command") {
  Run ok = run("fuzz --kind grids --count 50 --seed 7");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("all pass") != std::string::npos);
  Run zero = run("--format json fuzz --kind slopes --count 0");
  CHECK(zero.code == 0);
  CHECK(json::parse(zero.out)["status"] == "pass");
  Run bad = run("--format json fuzz --kind slopes --count 3 --seed 1 --mutate");
  CHECK(bad.code == 5);
  json j = json::parse(bad.out);
  REQUIRE(j["failures"].size() > 0);
  CHECK_FALSE(j["failures"][0]["reproducer"].get<std::string>().empty());
  Run badg = run("--format json fuzz --kind grids --count 2 --seed 1 --mutate");
  CHECK(badg.code == 5);
}

TEST_CASE("budget") {
  CHECK(run("homology " + file("trefoil.grid"), "HFK_BUDGET=1").code == 4);
  CHECK(run("--budget 1000 homology " + file("trefoil.grid"), "HFK_BUDGET=1").code == 0);
  CHECK(run("--budget 10 homology " + file("trefoil.grid")).code == 4);
}

TEST_CASE("lens command reproduces the corpus files") {
  for (int e = 1; e <= 6; ++e) {
    std::ifstream in(hfk::test::corpus("lens_e" + std::to_string(e) + ".hd.json"));
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(json::parse(run("lens " + std::to_string(e)).out) == json::parse(content));
  }
}
