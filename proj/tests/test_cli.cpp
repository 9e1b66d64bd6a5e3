#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  static int counter = 0;
  const std::string path = "cli_test_out_" + std::to_string(counter++) + ".txt";
  const std::string cmd = std::string(AFORGE_CLI) + " " + args + " >" + path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  std::remove(path.c_str());
  return r;
}

}  // namespace

TEST_CASE("cli classify") {
  const auto r = run("classify --potential coulomb:Z=1");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("case B, Coulomb tail\n", 0) == 0);
  CHECK(run("classify --potential inverse-square:alpha=50").out.rfind("case A", 0) == 0);
  CHECK(run("classify --potential cutoff-coulomb:Z=1,rcut=1").out.rfind("case C, Coulomb tail", 0) == 0);
}

TEST_CASE("cli trace") {
  const auto r = run("trace --potential coulomb:Z=1 --lambda-min 10 --lambda-max 100 --points 4");
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string header, row;
  std::getline(in, header);
  CHECK(header == "lambda,w,err,source");
  std::getline(in, row);
  CHECK(row.rfind("10,-0.0012", 0) == 0);
  CHECK(row.find(",second-order") != std::string::npos);

  CHECK(run("trace --potential coulomb:Z=1 --points 2").code == 2);
  CHECK(run("trace --potential coulomb:Z=1 --lambda-min 100 --lambda-max 10").code == 2);
  CHECK(run("trace --potential inverse-square:alpha=5 --method perturbative-2").code == 2);
  CHECK(run("trace --potential coulomb:Z=1 --method oracle").code == 2);
}

TEST_CASE("cli anomaly") {
  const auto r = run("anomaly --potential coulomb:Z=1 --lambda-max 100 --points 12");
  CHECK(r.code == 0);
  CHECK(r.out.find("a_e_reduced=0.2500\n") != std::string::npos);
  CHECK(r.out.find("a_n_reduced=0 (below tolerance)\n") != std::string::npos);

  const auto d = run("anomaly --potential coulomb:Z=1 --method perturbative-1");
  CHECK(d.code == 0);
  CHECK(d.out.find("a_e_status=divergent growth_exponent=0.50\n") != std::string::npos);

  const auto csv = run("anomaly --potential coulomb:Z=2 --lambda-max 100 --points 12 --format csv");
  CHECK(csv.out.rfind("case,a_n_reduced,", 0) == 0);

  const auto y = run("anomaly --potential yukawa:Z=1,kappa=1 --method perturbative-1");
  CHECK(y.code == 0);
  CHECK(y.out.find("a_e_status=zero") != std::string::npos);
}

TEST_CASE("cli output is deterministic and honours --out") {
  const std::string args = "trace --potential yukawa:Z=1,kappa=0.5 --points 5 --lambda-max 200";
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run(args + " --out cli_test_file.csv").out.empty());
  std::ifstream f("cli_test_file.csv");
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == a.out);
  std::remove("cli_test_file.csv");
}

TEST_CASE("cli reproduce") {
  const auto r = run("reproduce --target case-b-energy --Z 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("expected=0.25") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(run("reproduce --target w2-closed-form").code == 0);
  CHECK(run("reproduce --target w1-scaling").code == 0);
  CHECK(run("reproduce --target nonsense").code == 2);
}

TEST_CASE("cli argument errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("classify").code == 2);
  CHECK(run("classify --potential foo:Z=1").code == 2);
  CHECK(run("classify --potential coulomb:Z=-1").code == 2);
  CHECK(run("trace --potential coulomb:Z=1 --hbar 0").code == 2);
  CHECK(run("trace --potential coulomb:Z=1 --format xml").code == 2);
  CHECK(run("--help").code == 0);
}
