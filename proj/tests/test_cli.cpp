#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("SPTQ_CLI");
  REQUIRE_MESSAGE(bin != nullptr, "SPTQ_CLI must point at the CLI binary");
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("spt subcommand") {
  RunResult r = run_cli("spt --variant sptbar --n-max 4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "4 13"));
  r = run_cli("spt --variant m2spt --n-max 6");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "6 5"));
  r = run_cli("spt --variant spt --n-max 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 1\n");
  r = run_cli("spt --variant spt --n-max 5 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "n,value\n1,1\n"));
}

TEST_CASE("table subcommand") {
  RunResult r = run_cli("table --family NSB --n-max 3 --t 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "0 3 3 2\n"));
  CHECK(contains(r.out, "1 3 3 2\n"));
  CHECK(contains(r.out, "2 3 3 2\n"));

  r = run_cli("table --family NSB2 --n-max 8 --t 5");
  CHECK(r.exit_code == 0);
  for (int k = 0; k < 5; ++k)
    CHECK(contains(r.out, std::to_string(k) + " 5 8 3\n"));

  r = run_cli("table --family Mbar --n-max 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "0 0 1\n"));  // constant term of the crank series

  r = run_cli("table --family Nbar --n-max 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0 0 1\n");
  r = run_cli("table --family NSB --n-max 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());

  r = run_cli("table --family bogus --n-max 3");
  CHECK(r.exit_code == 2);
}

TEST_CASE("verify subcommand") {
  RunResult r = run_cli("verify s2b_summand_counterexample phi_entries --order 20");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "s2b_summand_counterexample: pass"));
  CHECK(contains(r.out, "phi_entries: pass"));

  r = run_cli("verify T2_5 --order 15 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "id,order,pass"));
  CHECK(contains(r.out, "T2_5,15,true"));

  r = run_cli("verify no_such_check");
  CHECK(r.exit_code == 2);
  r = run_cli("verify");
  CHECK(r.exit_code == 2);
  r = run_cli("verify --list");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "T2_17\n"));
}

TEST_CASE("bijection subcommand") {
  RunResult r = run_cli("bijection phi --n 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "(1+1+1, 1): pi1=1+1+1 pi2=- nu=3 k=0 kbar=2 sptcrank=-2"));
  CHECK(contains(r.out, "(2~+1, 1):"));

  r = run_cli("bijection psi --n 3 --size 16");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "10+6 -> 6+5+5"));
  CHECK(contains(r.out, "16 -> 4+4+4+4"));
  CHECK(contains(r.out, "7+5+4 -> 7+5+4"));

  r = run_cli("bijection phi --n 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "(1, 1):"));

  r = run_cli("bijection psi --n 3");  // missing --size
  CHECK(r.exit_code == 2);
  r = run_cli("bijection nope --n 3");
  CHECK(r.exit_code == 2);
}

TEST_CASE("output is byte-stable and formats agree") {
  RunResult a = run_cli("table --family NSB --n-max 6 --format csv");
  RunResult b = run_cli("table --family NSB --n-max 6 --format csv");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  RunResult t1 = run_cli("spt --variant sptbar1 --n-max 10");
  RunResult t2 = run_cli("spt --variant sptbar1 --n-max 10");
  CHECK(t1.out == t2.out);

  // json carries the same numbers as text
  RunResult j = run_cli("spt --variant sptbar1 --n-max 10 --format json");
  CHECK(j.exit_code == 0);
  CHECK(contains(j.out, "\"value\": \"20\""));   // sptbar1(5) = 20
  CHECK(contains(t1.out, "5 20"));
}

TEST_CASE("usage errors") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("spt").exit_code == 2);
  CHECK(run_cli("spt --variant nope --n-max 3").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}
