#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/defcoh_cli_out.txt";
  const std::string cmd = std::string(DEFCOH_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_path);
  std::stringstream buf;
  buf << in.rdbuf();
  return RunResult{WEXITSTATUS(status), buf.str()};
}

std::string instance(const std::string& name) { return std::string(DEFCOH_INSTANCES_DIR) + "/" + name; }

std::string strip_timing(const std::string& text) {
  std::stringstream in(text), out;
  std::string line;
  while (std::getline(in, line))
    if (line.find("timing_ms") == std::string::npos) out << line << "\n";
  return out.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("cohomology tables for the bundled instances") {
  const auto sl2 = run("cohomology " + instance("sl2.json") + " --complex def --degrees -1..1");
  CHECK(sl2.exit_code == 0);
  CHECK(sl2.output.find("-1     3   0") != std::string::npos);

  const auto ab3 = run("cohomology " + instance("abelian3.json") + " --complex def --degrees -1..2 --format structured");
  CHECK(ab3.exit_code == 0);
  for (const char* frag : {"\"degree\": \"-1\", \"dim\": \"3\", \"cohomology\": \"3\"", "\"degree\": \"0\", \"dim\": \"9\", \"cohomology\": \"9\"",
                           "\"degree\": \"2\", \"dim\": \"3\", \"cohomology\": \"3\""})
    CHECK(ab3.output.find(frag) != std::string::npos);

  const auto la = run("cohomology " + instance("la_d10.json") + " --complex three-term --degrees -1..1 --format structured");
  CHECK(la.exit_code == 0);
  CHECK(la.output.find("\"degree\": \"-1\", \"dim\": \"4\", \"cohomology\": \"1\"") != std::string::npos);
  CHECK(la.output.find("\"degree\": \"0\", \"dim\": \"8\", \"cohomology\": \"2\"") != std::string::npos);
  CHECK(la.output.find("\"degree\": \"1\", \"dim\": \"4\", \"cohomology\": \"1\"") != std::string::npos);

  const auto ce = run("cohomology " + instance("sl2_adjoint_rep.json") + " --complex ce --degrees 0..3");
  CHECK(ce.exit_code == 0);

  const auto groupoid = run("cohomology " + instance("la_d10.json") + " --complex groupoid-full --degrees -1..1");
  CHECK(groupoid.exit_code == 0);
}

TEST_CASE("check suites pass on the bundled instances") {
  CHECK(run("check " + instance("vb_sl2_std.json") + " --suite les").exit_code == 0);
  CHECK(run("check " + instance("vb_sl2_std.json") + " --suite split").exit_code == 0);
  CHECK(run("check " + instance("vb_aff1_adjoint.json") + " --suite weights --count 20").exit_code == 0);
  CHECK(run("check " + instance("sl2.json") + " --suite mc --count 40").exit_code == 0);
  const auto quasi = run("check " + instance("la_iso.json") + " --suite quasi-iso --format structured");
  CHECK(quasi.exit_code == 0);
  CHECK(quasi.output.find("\"dim_full\": \"0\"") != std::string::npos);
  const auto vanest = run("vanest " + instance("twovect_rand_seed7.json"));
  CHECK(vanest.exit_code == 0);
  CHECK(vanest.output.find("verdict: PASS") != std::string::npos);
  CHECK(run("les " + instance("vb_aff1_adjoint.json")).exit_code == 0);
}

TEST_CASE("gauge command and convergence order") {
  const auto ok = run("gauge " + instance("aff1.json") + " --xi 0");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("verdict: PASS") != std::string::npos);

  const auto zero = run("gauge " + instance("sl2.json") + " --xi 0,0,0");
  CHECK(zero.exit_code == 0);
  CHECK(zero.output.find("max_abs_error: 0.000e+00") != std::string::npos);

  // Inner generators are derivations, so the trajectory is stationary and
  // even very coarse step counts match the oracle.
  const auto inner = run("gauge " + instance("sl2.json") + " --xi 2 --steps 10");
  CHECK(inner.exit_code == 0);

  // A generator that is not a derivation moves the bracket; ten RK4 steps at
  // eps = 1 are too coarse and the documented failure pins the convergence
  // order, while the default 1000 steps pass.
  const auto coarse = run("gauge " + instance("sl2.json") + " --delta \"0,1,0;0,0,1;1,0,0\" --steps 10");
  CHECK(coarse.exit_code == 1);
  CHECK(coarse.output.find("verdict: FAIL") != std::string::npos);
  const auto fine = run("gauge " + instance("sl2.json") + " --delta \"0,1,0;0,0,1;1,0,0\"");
  CHECK(fine.exit_code == 0);
  CHECK(fine.output.find("verdict: PASS") != std::string::npos);
}

TEST_CASE("exit codes: validation 1, parse 2") {
  const std::string dir = std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp";
  {
    std::ofstream bad(dir + "/defcoh_bad_skew.json");
    bad << R"({"kind":"lie_algebra","name":"bad","dim":2,"structure":[[0,0,1,"1"]]})";
  }
  const auto skew = run("cohomology " + dir + "/defcoh_bad_skew.json --complex def");
  CHECK(skew.exit_code == 1);
  CHECK(skew.output.find("skewness at (0,0)") != std::string::npos);

  {
    std::ofstream garbage(dir + "/defcoh_garbage.json");
    garbage << "this is not json";
  }
  CHECK(run("cohomology " + dir + "/defcoh_garbage.json --complex def").exit_code == 2);

  // Incompatible complex / instance pairing.
  CHECK(run("cohomology " + instance("sl2.json") + " --complex three-term").exit_code == 1);
  CHECK(run("check " + instance("sl2.json") + " --suite les").exit_code == 1);
}

TEST_CASE("random instances are deterministic on disk and reports diff cleanly") {
  const std::string dir = std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp";
  const std::string a = dir + "/defcoh_rand_a.json", b = dir + "/defcoh_rand_b.json";
  CHECK(run("random --family la --seed 1 --dim-caps 3 --out " + a).exit_code == 0);
  CHECK(run("random --family la --seed 1 --dim-caps 3 --out " + b).exit_code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(slurp(a).empty());

  CHECK(run("random --family vb --seed 3 --out " + a).exit_code == 0);
  const auto validate = run("check " + a + " --suite weights --count 10");
  CHECK(validate.exit_code == 0);

  // Structured reports are byte-identical once the timing field is dropped.
  const auto r1 = run("cohomology " + instance("sl2.json") + " --complex def --degrees -1..1 --format structured");
  const auto r2 = run("cohomology " + instance("sl2.json") + " --complex def --degrees -1..1 --format structured");
  CHECK(strip_timing(r1.output) == strip_timing(r2.output));
}

TEST_CASE("dimension cap from the environment") {
  const std::string dir = std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp";
  {
    std::ofstream big(dir + "/defcoh_big.json");
    big << R"({"kind":"lie_algebra","name":"big","dim":5,"structure":[]})";
  }
  const std::string cmd = "DEFCOH_MAX_DIM=4 " + std::string(DEFCOH_CLI_PATH) + " cohomology " + dir + "/defcoh_big.json --complex def > " +
                          dir + "/defcoh_cap_out.txt 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 1);
  CHECK(slurp(dir + "/defcoh_cap_out.txt").find("DEFCOH_MAX_DIM") != std::string::npos);
}
