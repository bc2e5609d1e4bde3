#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(TORIC_IHC_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult res;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) res.out.append(buf.data(), n);
  int status = pclose(p);
  res.exit_code = WEXITSTATUS(status);
  return res;
}

std::string data_path(const std::string& name) {
  return std::string(TORIC_TEST_DATA) + "/" + name;
}

}  // namespace

TEST_CASE("validate: corpus fans pass, malformed files exit 2") {
  CHECK(run("validate corpus:P4").exit_code == 0);
  CHECK(run("validate corpus:BlP4_line").exit_code == 0);
  CHECK(run("validate " + data_path("broken.json")).exit_code == 2);
  CHECK(run("validate " + data_path("float_ray.json")).exit_code == 2);
  CHECK(run("validate corpus:NoSuchFan").exit_code == 2);
  CHECK(run("validate " + data_path("p2.json")).exit_code == 0);
  CHECK(run("validate " + data_path("p2_incomplete.json")).exit_code == 1);
}

TEST_CASE("classes: counts and kinds for the corpus examples") {
  RunResult p3 = run("classes corpus:P3");
  CHECK(p3.exit_code == 0);
  CHECK(p3.out.find("1 candidate class(es)") != std::string::npos);

  RunResult bl4 = run("classes corpus:BlP4_line");
  CHECK(bl4.exit_code == 0);
  CHECK(bl4.out.find("fiber-type: P^2-bundle over a 2-fold") != std::string::npos);
  CHECK(bl4.out.find("birational: P^2-bundle over a 1-fold") != std::string::npos);

  RunResult bl6 = run("classes corpus:BlP6_P3");
  CHECK(bl6.exit_code == 0);
  CHECK(bl6.out.find("fiber-type: P^4-bundle over a 2-fold") != std::string::npos);
  CHECK(bl6.out.find("birational: P^2-bundle over a 3-fold") != std::string::npos);
}

TEST_CASE("verify: exit codes follow the generation verdict") {
  RunResult cy = run("verify corpus:BlP4_line --anticanonical");
  CHECK(cy.exit_code == 0);
  CHECK(cy.out.find("count=18") != std::string::npos);
  CHECK(cy.out.find("count=186") != std::string::npos);
  CHECK(cy.out.find("generated-by-rational-curves") != std::string::npos);

  RunResult quintic = run("verify corpus:P4 -H 5");
  CHECK(quintic.exit_code == 0);
  CHECK(quintic.out.find("count=2875") != std::string::npos);

  RunResult gt = run("verify corpus:BlP6_P3 -H 8H-2E");
  CHECK(gt.exit_code == 1);
  CHECK(gt.out.find("inconclusive") != std::string::npos);
  CHECK(gt.out.find("nonzero-positive-dim") != std::string::npos);
}

TEST_CASE("count-lines matches the verify report") {
  CHECK(run("count-lines corpus:P4 -H 5 --class h").out == "2875\n");
  CHECK(run("count-lines corpus:BlP4_line --anticanonical --class e").out == "18\n");
  CHECK(run("count-lines corpus:BlP4_line --anticanonical --class h-e").out == "186\n");
  RunResult pd = run("count-lines corpus:BlP6_P3 -H 8H-2E --class h-e");
  CHECK(pd.exit_code == 0);
  CHECK(pd.out == "positive-dimensional\n");
}

TEST_CASE("decompose over the verified classes") {
  RunResult d = run("decompose corpus:BlP4_line --target h");
  CHECK(d.exit_code == 0);
  CHECK(d.out.find("1*(1,1,1,0,0,-1)") != std::string::npos);
  CHECK(d.out.find("1*(0,0,0,1,1,1)") != std::string::npos);
  RunResult nf = run("decompose corpus:BlP4_line --target [-1,-1,-1,-1,-1,0]");
  CHECK(nf.exit_code == 1);
}

TEST_CASE("json reports are byte-identical across runs and jobs settings") {
  RunResult a = run("verify corpus:BlP4_line --anticanonical --format json");
  RunResult b = run("verify corpus:BlP4_line --anticanonical --format json");
  RunResult c = run("verify corpus:BlP4_line --anticanonical --format json --jobs 2");
  RunResult d = run("verify corpus:BlP4_line --anticanonical --format json --jobs 1 --seed 7");
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out == d.out);
  CHECK(a.out.find("\"schema\": 1") != std::string::npos);
  CHECK(a.out.find("\"count\": \"186\"") != std::string::npos);
  CHECK(a.out.find("\"count\": \"18\"") != std::string::npos);
}

TEST_CASE("file-based fans accept raw divisor vectors") {
  RunResult r = run("verify " + data_path("p4.json") + " -H [5,0,0,0,0]");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("count=2875") != std::string::npos);
}
