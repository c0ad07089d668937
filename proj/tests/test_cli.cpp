#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fracpart/forms.hpp"

using namespace fracpart;

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI through the shell; stderr is folded into out when merge is set.
Run run(const std::string& args, bool merge = false, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + std::string("\"") + FRACPART_CLI_PATH + "\" " + args;
  cmd += merge ? " 2>&1" : " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const std::string t1_flags = "--family t1 --alpha -1/8 --d 6 --ell 7 --r 5";
const std::string t2_flags = "--family t2 --alpha 1/13 --ell 5 --r 7";

}  // namespace

TEST_CASE("coeffs") {
  auto r = run("coeffs --alpha -1 --n 5");
  CHECK(r.code == 0);
  CHECK(r.out == "0\t1/1\n1\t1/1\n2\t2/1\n3\t3/1\n4\t5/1\n5\t7/1\n");

  r = run("coeffs --alpha -1/8 --n 5");
  CHECK(r.code == 0);
  CHECK(r.out.substr(r.out.rfind("5\t")) == "5\t55615/262144\n");

  r = run("coeffs --alpha -1 --n 9 --mod 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("4\t0\n") != std::string::npos);
  CHECK(r.out.find("9\t0\n") != std::string::npos);

  r = run("coeffs --alpha 1/5 --n 3 --mod 5^1", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("NotLIntegral") != std::string::npos);

  r = run("coeffs --alpha -1 --n 3 --series");
  CHECK(r.out == "# prec=4\n0\t1/1\n1\t1/1\n2\t2/1\n3\t3/1\n");

  CHECK(run("coeffs --alpha 1/0 --n 3").code == 2);
  CHECK(run("coeffs --alpha -1 --n 3 --mod 6^1").code == 2);
}

TEST_CASE("eta") {
  auto r = run("eta --d 2 --n 13");
  CHECK(r.code == 0);
  CHECK(r.out == "1\t1/1\n13\t-2/1\n");

  r = run("eta --d 4 --n 6");
  CHECK(r.out == "1\t1/1\n");
  r = run("eta --d 4 --n 30");
  std::istringstream lines(r.out);
  std::size_t idx;
  std::string value;
  while (lines >> idx >> value) CHECK(idx % 6 == 1);

  r = run("eta --d 10 --n 50");
  std::ostringstream expected;
  const auto a = eta_power(10, 51);
  for (std::size_t i : a.support()) expected << i << '\t' << to_string(a[i]) << '\n';
  CHECK(r.out == expected.str());

  CHECK(run("eta --d 0 --n 5").code == 2);
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify " + t1_flags + " --nmax 10").code == 0);
  CHECK(run("verify " + t2_flags + " --nmax 10").code == 0);
  const auto bad = run("verify --family t1 --alpha -1/8 --d 6 --ell 13 --r 5 --nmax 10", true);
  CHECK(bad.code == 2);
  CHECK(bad.out.find("d-satisfactory") != std::string::npos);
  CHECK(run("verify --family t9 --alpha 1 --ell 5 --r 1").code == 2);
  CHECK(run("verify --family cw --alpha -1 --d 4 --ell 5 --r 4 --nmax 100 --max-prec 50").code == 2);

  // default range keeps the series below precision 3000
  const auto def = run("--format jsonl verify --family cw --alpha -1 --d 4 --ell 5 --r 4");
  CHECK(def.code == 0);
  CHECK(def.out.find("\"n_max\":599") != std::string::npos);

  // T3 at 13 is far beyond any default range
  const auto t3 = run("verify --family t3 --alpha '2/(13^13+1)' --ell 13 --v 1 --r '(13^12-1)/12'", true);
  CHECK(t3.code == 2);
  CHECK(t3.out.find("precision") != std::string::npos);
  CHECK(run("verify --family t3 --alpha '2/(13^13+1)' --ell 13 --v 1 --r '(11*13^12-1)/12'").code == 2);
}

TEST_CASE("jsonl certificates") {
  const auto one = run("--format jsonl verify " + t1_flags + " --nmax 20 --threads 1");
  const auto four = run("--format jsonl verify " + t1_flags + " --nmax 20 --threads 4");
  const auto env = run("--format jsonl verify " + t1_flags + " --nmax 20 --threads 8", false,
                       "CONGRUENCE_WORKBENCH_THREADS=2");
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(one.out == env.out);
  CHECK(one.out ==
        R"({"family":"t1","alpha":"-1/8","d":6,"ell":7,"e":2,"r":"5","modulus_power":2,"n_max":20,)"
        R"("status":"VERIFIED_IN_RANGE","artifact_version":"0.1.0"})"
        "\n");

  const auto path = std::filesystem::temp_directory_path() / "fracpart_cli_test.jsonl";
  std::filesystem::remove(path);
  CHECK(run("--out " + path.string() + " verify " + t2_flags + " --nmax 5").code == 0);
  CHECK(run("--out " + path.string() + " verify " + t2_flags + " --nmax 5").code == 0);
  const auto text = slurp(path);
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  CHECK(text.substr(0, text.find('\n')) == text.substr(text.find('\n') + 1, text.find('\n')));
  std::filesystem::remove(path);
}

TEST_CASE("sharpness") {
  auto r = run("sharpness " + t1_flags + " --nmax 3");
  CHECK(r.code == 0);
  CHECK(r.out == "witness\tn=0\tvalue=55615/262144\n");
  r = run("sharpness " + t2_flags + " --nmax 3");
  CHECK(r.code == 0);
  CHECK(r.out == "witness\tn=0\tvalue=-3395395/62748517\n");
  // p_139(4) = 13587250 carries 5^3, one more than the claimed power
  r = run("sharpness --family remark --alpha 139 --d 14 --ell 5 --r 4 --nmax 0");
  CHECK(r.code == 1);
  CHECK(r.out.rfind("inconclusive", 0) == 0);
}

TEST_CASE("find-w") {
  auto r = run("find-w --ell 13 --v 1");
  CHECK(r.code == 0);
  CHECK(r.out == "12\n");
  CHECK(run("find-w --ell 5 --v 2").out == "1\n");
  CHECK(run("find-w --ell 4 --v 1").code == 2);
}

TEST_CASE("residues") {
  CHECK(run("residues --d 6 --ell 7 --ord 1 --count 1").out == "5\n");
  CHECK(run("residues --d 2 --ell 5 --ord 1 --count 1").out == "7\n");
  CHECK(run("residues --d 2 --ell 13 --ord 12 --count 1").out == to_string(BigInt((ipow(13, 12) - 1) / 12)) + "\n");
  CHECK(run("residues --d 6 --ell 7 --ord 1 --count 3").out == "5\n19\n26\n");
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("coeffs --alpha -1").code == 2);
  CHECK(run("eta --d 2 --n 5 --bogus").code == 2);
  CHECK(run("--format xml eta --d 2 --n 5").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("seed-examples") {
  const auto r = run("seed-examples");
  CHECK(r.code == 0);
  CHECK(r.out.find("p_{-1/8}(5)\t55615/262144") != std::string::npos);
  CHECK(r.out.find("a_2(13)\t-2/1") != std::string::npos);
  CHECK(r.out.find("find_w(13, 1)\t12") != std::string::npos);
}
