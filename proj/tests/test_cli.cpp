#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(L2LIMITS_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe)) r.out += buf;
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("l2limits_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name, const std::string& content = "") const {
    const auto p = path / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p.string();
  }
};

}  // namespace

TEST_CASE("generate, validate and betti") {
  TempDir dir;
  const std::string ht = dir.file("hollow_triangle.scx");
  REQUIRE(run("generate --out " + ht + " fixture hollow_triangle").code == 0);
  const Run v = run("validate " + ht);
  CHECK(v.code == 0);
  CHECK(v.out.find("valid") != std::string::npos);
  const Run b = run("betti " + ht);
  CHECK(b.code == 0);
  CHECK(b.out == "p=0 b=1 norm=1/3\np=1 b=1 norm=1/3\n");
  CHECK(run("betti --exact " + ht).out == b.out);
  const std::string csv = dir.file("betti.csv");
  REQUIRE(run("betti " + ht + " --out " + csv).code == 0);
  std::ifstream in(csv);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "p,b_p,normalized\n0,1,1/3\n1,1,1/3\n");
}

TEST_CASE("spectrum atoms") {
  TempDir dir;
  const std::string ht = dir.file("ht.scx", "0 1\n1 2\n0 2\n");
  const Run s = run("spectrum " + ht + " --p 1");
  CHECK(s.code == 0);
  CHECK(s.out.rfind("eigenvalue,weight\n0,1/3\n3,2/3\n", 0) == 0);
  CHECK(s.out.find("nu({0}) = 1/3") != std::string::npos);
  CHECK(s.out.find("spectral radius = 3") != std::string::npos);
}

TEST_CASE("canon and bs-distance") {
  TempDir dir;
  const std::string e = dir.file("edge.scx", "5 9\n");
  const Run c = run("canon " + e + " --root 9");
  CHECK(c.code == 0);
  CHECK(c.out.rfind("code: 0 1 2\n", 0) == 0);
  const std::string c5 = dir.file("c5.scx", "0 1\n1 2\n2 3\n3 4\n4 0\n");
  const std::string c6 = dir.file("c6.scx", "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
  CHECK(run("bs-distance " + c5 + ":0 " + c6 + ":3").out == "1/2\n");
  CHECK(run("bs-distance " + c5 + ":0 " + c5 + ":2").out == "0\n");
  CHECK(run("bs-distance " + c5 + " " + c6 + ":0").code == 1);
}

TEST_CASE("measures: distance and mass transport") {
  TempDir dir;
  const std::string end = dir.file("end.json", R"({"support":[{"weight":"1","maximal_simplices":[[0,1],[1,2]],"root":0}]})");
  const std::string uni = dir.file(
      "uni.json",
      R"({"support":[{"weight":"2/3","maximal_simplices":[[0,1],[1,2]],"root":0},{"weight":"1/3","maximal_simplices":[[0,1],[1,2]],"root":1}]})");
  const Run mt = run("mass-transport " + uni);
  CHECK(mt.code == 0);
  CHECK(mt.out.find("# 0 of 12 functions fail") != std::string::npos);
  CHECK(run("mass-transport " + end).out.find("adjacent_to_degree_two,1,0,false") != std::string::npos);
  const Run md = run("measure-distance " + end + " " + uni + " --rmax 2");
  CHECK(md.code == 0);
  // TV = 1/3 at r = 1 and r = 2.
  CHECK(md.out.rfind("1/4 ", 0) == 0);
}

TEST_CASE("truncate writes a capped complex") {
  TempDir dir;
  const std::string star = dir.file("star.scx", "0 1\n0 2\n0 3\n0 4\n0 5\n");
  const Run t = run("truncate " + star + " --degree 3");
  CHECK(t.code == 0);
  CHECK(t.out == "0 3\n0 4\n0 5\n1\n2\n");
}

TEST_CASE("converge writes the experiment table") {
  TempDir dir;
  const std::string csv = dir.file("experiment.csv");
  const Run r = run("converge --family torus2d --levels 4,8 --p 1 --out " + csv);
  CHECK(r.code == 0);
  std::ifstream in(csv);
  std::string header, row4, row8;
  std::getline(in, header);
  std::getline(in, row4);
  std::getline(in, row8);
  CHECK(header == "n,|V|,p,b_p,b_p_normalized,m0,m1,m2,m3,m4,nu_eps_0.1,nu_eps_0.01,dist_to_last");
  CHECK(row4.rfind("4,16,1,2,0.125,", 0) == 0);
  CHECK(row8.rfind("8,64,1,2,0.03125,", 0) == 0);
  // Byte-stable across runs.
  const std::string again = dir.file("again.csv");
  REQUIRE(run("converge --family torus2d --levels 4,8 --p 1 --out " + again).code == 0);
  std::ifstream a(csv), b(again);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
}

TEST_CASE("exit codes") {
  TempDir dir;
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("betti /nonexistent.scx").code == 2);
  CHECK(run("betti " + dir.file("bad.scx", "0 1\n1 q\n")).code == 2);
  CHECK(run("measure-distance " + dir.file("bad.json", "{") + " " + dir.path.string() + "/bad.json --rmax 1").code == 2);
  CHECK(run("validate " + dir.file("split.scx", "root 0\n0 1\n2 3\n")).code == 3);
  CHECK(run("mass-transport " + dir.file("half.json", R"({"support":[{"weight":"1/2","maximal_simplices":[[0]],"root":0}]})")).code == 3);
  CHECK(run("converge --family flag --levels 10,40 --scale 8 --seed 1 --degree-bound 3 --out " + dir.file("x.csv")).code == 4);
  CHECK(run("generate torus2d --n 2").code == 3);
}
