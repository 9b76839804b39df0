#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "kzl/forced.hpp"
#include "kzl/instances.hpp"
#include "kzl/io.hpp"

using namespace kzl;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string bin() {
  const char* b = std::getenv("KZL_BIN");
  REQUIRE_MESSAGE(b, "KZL_BIN is not set");
  return b;
}

Run run(const std::string& args) {
  Run r;
  std::string cmd = bin() + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f);
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, k);
  int st = pclose(f);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

fs::path scratch() {
  static fs::path d = [] {
    fs::path p = fs::temp_directory_path() / ("kzl_cli_" + std::to_string(getpid()));
    fs::create_directories(p);
    return p;
  }();
  return d;
}

std::string put(const std::string& name, const json& j) {
  fs::path p = scratch() / name;
  io::write_file(p.string(), j);
  return p.string();
}

}  // namespace

TEST_CASE("help and usage errors") {
  CHECK(run("--help").code == 0);
  CHECK(run("alcove length --help").code == 0);
  CHECK(run("").code == 2);
  CHECK(run("alcove length --type A1 -p 5 --weight 11 --bogus").code == 2);
  CHECK(run("alcove length --type A1 --weight 11").code == 2);
  CHECK(run("alcove length --type A1 -p 5 --weight eleven").code == 2);
  CHECK(run("alg radical /nonexistent/file.json").code == 2);
  CHECK(run("verify criterion 99").code == 2);
}

TEST_CASE("alcove commands") {
  auto r = run("alcove length --type A1 -p 5 --weight 11");
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  CHECK(run("alcove oracle --type A1 -p 5 --weight 11").out == "2\n");
  CHECK(run("alcove length --type A2 -p 5 --weight 0,0").out == "0\n");
}

TEST_CASE("io round trips") {
  Field F(5);
  Algebra A = inst::path_a2(F);
  Algebra B = io::algebra_from_json(io::algebra_to_json(A));
  CHECK(B.n == A.n);
  CHECK(B.grading == A.grading);
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) CHECK(B.mul(B.unit(i), B.unit(j)) == A.mul(A.unit(i), A.unit(j)));
  auto L = lattice_quadratic(5, 5);
  auto L2 = io::lattice_from_json(io::lattice_to_json(L));
  CHECK(L2.n == 2);
  CHECK(forced_grading(L2).dims == std::vector<int>{2});
  auto AP = std::make_shared<const Algebra>(A);
  Module M = regular_module(AP);
  Module N = io::module_from_json(io::module_to_json(M), AP);
  CHECK(is_isomorphic(M, N));
  CHECK(N.grading == M.grading);
  CHECK(io::field_string(io::parse_field("Zloc(7)")) == "Zloc(7)");
  CHECK_THROWS_AS(io::parse_field("F4"), io::FormatError);
  json bad = io::algebra_to_json(A);
  bad["sc"][0][3] = "1/0";
  CHECK_THROWS(io::algebra_from_json(bad));
}

TEST_CASE("check koszul verdicts and exit codes") {
  Field F(5);
  auto x2 = put("x2.json", io::algebra_to_json(inst::truncated_polynomial(F, 2)));
  auto x3 = put("x3.json", io::algebra_to_json(inst::truncated_polynomial(F, 3)));
  CHECK(run("check koszul --alg " + x2 + " --nmax 5").code == 0);
  auto r = run("check koszul --alg " + x3 + " --nmax 5 --json");
  CHECK(r.code == 1);
  auto j = json::parse(r.out);
  CHECK(j["holds"] == false);
  CHECK(j["degree_bound"] == 5);
  CHECK(j["counterexample"]["n"] == 2);
  CHECK(j["counterexample"]["r"] == 3);
  auto pa = put("pa.json", io::algebra_to_json(inst::path_a2(F)));
  auto pa2 = put("pa2.json", io::algebra_to_json(inst::path_a2(F, 2)));
  CHECK(run("check sqkoszul --alg " + pa + " --idem 1,0 --labels 1 --labels 2").code == 0);
  auto s = run("check sqkoszul --alg " + pa2 + " --idem 1,0 --labels 1 --labels 2 --json");
  CHECK(s.code == 1);
  auto js = json::parse(s.out);
  CHECK(js["counterexample"]["n"] == 1);
  CHECK(js["counterexample"]["r"] == 2);
}

TEST_CASE("ext tables with the algebra named inside the module file") {
  Field F(5);
  auto A = std::make_shared<const Algebra>(inst::truncated_polynomial(F, 2));
  put("x2a.json", io::algebra_to_json(*A));
  Module k = inst::trivial_module(A, {A->unit(1)});
  json kj = io::module_to_json(k);
  kj["algebra"] = "x2a.json";
  auto m = put("k.json", kj);
  auto r = run("alg ext --m " + m + " --n " + m + " --nmax 3 --grades z");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  // ext^n(k, k<r>) over k[x]/(x^2) is one-dimensional, at r = n
  CHECK(j["entries"].size() == 4);
  for (const auto& e : j["entries"]) {
    CHECK(e["dim"] == 1);
    CHECK(e["shift"] == json::array({e["n"]}));
  }
  CHECK(run("alg ext --m " + put("k2.json", io::module_to_json(k)) + " --n " + m + " --nmax 3").code == 2);
}

TEST_CASE("forced grading from the command line") {
  auto f = put("q.json", io::lattice_to_json(lattice_quadratic(5, 5)));
  auto r = run("gr compare " + f);
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["forced"] == json::array({2}));
  CHECK(j["radical"] == json::array({1, 1}));
  CHECK(j["agree"] == false);
}

TEST_CASE("determinism") {
  std::string args = "sl2 verify weyl-filtration -p 5 --max-weight 30";
  auto a = run(args), b = run(args), c = run("--jobs 1 " + args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  auto s1 = run("sl2 schur -d 3 -p 3"), s2 = run("--jobs 1 sl2 schur -d 3 -p 3");
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
}

TEST_CASE("recipes") {
  json rec = {{"name", "smoke"},
              {"experiments",
               json::array({{{"name", "len"}, {"kind", "alcove-length"}, {"type", "A1"}, {"p", 5},
                             {"weight", json::array({11})}, {"expect", 2}},
                            {{"name", "c1"}, {"kind", "criterion"}, {"id", 1}, {"expect", true}}})}};
  auto f = put("rec.json", rec);
  auto r = run("recipe run " + f);
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["experiments"].size() == 2);
}

TEST_CASE("cleanup") { fs::remove_all(scratch()); }
