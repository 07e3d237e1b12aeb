#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef BICOH_CLI_PATH
#define BICOH_CLI_PATH "./bicoh"
#endif

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(BICOH_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 512> buf;
  while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  int status = pclose(pipe);
  r.code = WEXITSTATUS(status);
  return r;
}

}  // namespace

TEST_CASE("cli eval prints the labeled braid") {
  RunResult r = run_cli("eval \"R[x,y]\"");
  CHECK(r.code == 0);
  CHECK(r.out == "n=2 labels=x,y word=s1\n");
}

TEST_CASE("cli iso verdicts map to exit codes") {
  RunResult yes = run_cli("iso \"R[x,y]\" \"R[x,y]\"");
  CHECK(yes.code == 0);
  CHECK(yes.out.find("verdict=true") != std::string::npos);
  RunResult no = run_cli("iso \"R[x,y]\" \"R'[y,x]\"");
  CHECK(no.code == 1);
  CHECK(no.out.find("verdict=false") != std::string::npos);
}

TEST_CASE("cli parse errors exit 2") {
  RunResult r = run_cli("eval \"R[x\"");
  CHECK(r.code == 2);
  RunResult usage = run_cli("cubes --path braid --samples 1");
  CHECK(usage.code == 2);
  RunResult unknown = run_cli("frobnicate");
  CHECK(unknown.code == 2);
}

TEST_CASE("cli eq2 decides parallel 2-cells") {
  RunResult yes =
      run_cli("eq2 \"id[x*y]\" \"(R[x,y];R'[x,y])\" \"id[x*y]\" \"(R[x,y];R'[x,y])\"");
  CHECK(yes.code == 0);
  RunResult no = run_cli("eq2 \"id[x*y]\" \"(R[x,y];R'[x,y])\" \"id[x*y]\" \"id[x*y]\"");
  CHECK(no.code == 1);
}

TEST_CASE("cli cubes golden lines") {
  RunResult braid = run_cli("cubes --path braid --samples 200");
  CHECK(braid.code == 0);
  CHECK(braid.out == "extracted: s1\n");
  RunResult assoc = run_cli("cubes --path assoc --samples 200");
  CHECK(assoc.code == 0);
  CHECK(assoc.out == "extracted: (empty)\n");
}

TEST_CASE("cli json reports are stable") {
  RunResult r = run_cli("--json eval \"R[x,y]\"");
  CHECK(r.code == 0);
  CHECK(r.out == R"({
  "command": "eval",
  "labels": [
    "x",
    "y"
  ],
  "n": 2,
  "word": "s1"
}
)");
  RunResult iso = run_cli("--json iso \"R[x,y]\" \"R'[y,x]\"");
  CHECK(iso.code == 1);
  CHECK(iso.out.find("\"verdict\": false") != std::string::npos);
  CHECK(iso.out.find("\"reason\": \"BraidDiffer\"") != std::string::npos);
}

TEST_CASE("cli movie round trip through files") {
  std::string dir = "cli_test_tmp";
  REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
  {
    // the two sides of CI-M3 at i=1, j=2
    std::ofstream a(dir + "/a.movie");
    a << "n=3\nn=3 s1 s2 s1\nn=3 s2 s1 s2\nn=3 s1 s2 s1\n";
    std::ofstream b(dir + "/b.movie");
    b << "n=3\nn=3 s1 s2 s1\n";
  }
  RunResult check = run_cli("movie-check " + dir + "/a.movie");
  CHECK(check.code == 0);
  RunResult search =
      run_cli("movie-search " + dir + "/a.movie " + dir + "/b.movie --budget 8 -o " + dir + "/c.cert");
  CHECK(search.code == 0);
  RunResult replay = run_cli("movie-check " + dir + "/a.movie --cert " + dir + "/c.cert --target " +
                             dir + "/b.movie");
  CHECK(replay.code == 0);
}

TEST_CASE("cli respects the BICOH_BUDGET environment override") {
  std::string dir = "cli_test_tmp";
  REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
  {
    std::ofstream a(dir + "/m3a.movie");
    a << "n=3\nn=3 s1 s2 s1\nn=3 s2 s1 s2\nn=3 s1 s2 s1\nn=3 s2 s1 s2\nn=3 s1 s2 s1\n";
    std::ofstream b(dir + "/m3b.movie");
    b << "n=3\nn=3 s1 s2 s1\n";
  }
  // reaching the one-frame movie takes two steps; a budget of 1 must fail
  RunResult tight = run_cli("movie-search " + dir + "/m3a.movie " + dir + "/m3b.movie --budget 1");
  CHECK(tight.code == 1);
  setenv("BICOH_BUDGET", "1", 1);
  RunResult env_tight = run_cli("movie-search " + dir + "/m3a.movie " + dir + "/m3b.movie");
  CHECK(env_tight.code == 1);
  setenv("BICOH_BUDGET", "8", 1);
  RunResult env_ok = run_cli("movie-search " + dir + "/m3a.movie " + dir + "/m3b.movie");
  CHECK(env_ok.code == 0);
  unsetenv("BICOH_BUDGET");
  // --threads does not change the certificate
  RunResult t1 = run_cli("movie-search " + dir + "/m3a.movie " + dir + "/m3b.movie --budget 4");
  RunResult t4 =
      run_cli("movie-search " + dir + "/m3a.movie " + dir + "/m3b.movie --budget 4 --threads 4");
  CHECK(t1.out == t4.out);
}

TEST_CASE("cli axioms suites") {
  RunResult fourth = run_cli("axioms --which 4 --object \"x*x*x\"");
  CHECK(fourth.code == 0);
  CHECK(fourth.out.find("verdict true") != std::string::npos);
  RunResult moves = run_cli("axioms --which moves");
  CHECK(moves.code == 0);
  CHECK(moves.out.find("CI-M4: GATED") != std::string::npos);
  RunResult units = run_cli("axioms --which units");
  CHECK(units.code == 0);
}
