// Black-box tests of the command-line front end.  argv[1] is the path to the
// schubert_cli binary.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

namespace {

std::string cli;
int failures = 0;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_raw(const std::string& cmd) {
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    std::cerr << "FATAL: popen failed for: " << cmd << '\n';
    std::exit(2);
  }
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = "'" + cli + "' " + args;
  if (merge_stderr) cmd += " 2>&1";
  return run_raw(cmd);
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << '\n';
  }
}

void expect_out(const std::string& args, int code, const std::string& out) {
  const RunResult r = run(args);
  expect(r.code == code && r.out == out,
         args + "\n  got exit " + std::to_string(r.code) + " output:\n" + r.out);
}

void expect_err(const std::string& args, int code, const std::string& needle) {
  const RunResult r = run(args, true);
  expect(r.code == code && r.out.find(needle) != std::string::npos,
         args + "\n  got exit " + std::to_string(r.code) + " output:\n" + r.out);
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path =
      std::filesystem::temp_directory_path() / ("cli_test_" + std::to_string(getpid()) + "_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const std::string s1432 =
    "1*x2^2 x3^1 + 1*x1^1 x2^1 x3^1 + 1*x1^1 x2^2 + 1*x1^2 x3^1 + 1*x1^2 x2^1";
const std::string s31524 =
    "1*x1^2 x3^2 + 1*x1^2 x2^1 x3^1 + 1*x1^2 x2^2 + 1*x1^3 x3^1 + 1*x1^3 x2^1";

void test_schubert() {
  expect_out("schubert 1234", 0, "1\n");
  expect_out("schubert 21", 0, "1*x1^1\n");
  expect_out("schubert 1432", 0, s1432 + "\n");
  expect_out("schubert 31524 --method=bpd", 0, s31524 + "\n");
  expect_out("schubert 31524 --method=ddiff --no-verify", 0, s31524 + "\n");
  expect_err("schubert 331", 1, "error:");
  expect_err("schubert", 1, "");
  expect_err("schubert 1432 --method=magic", 1, "");
}

void test_bpds() {
  expect_out("bpds 31524 --count", 0, "5\n");
  expect_out("bpds 1432 --count", 0, "5\n");
  expect_out("bpds 21", 0, ".r\nr+\n");
  expect_err("bpds 21 --count --render", 1, "error: choose one of --count/--render");
}

void test_rsk_roundtrip() {
  const std::string q = "1_1 2_3 1_2 2_4";
  const RunResult l = run("rsk '" + q + "' --left");
  expect(l.code == 0, "rsk --left exit code");
  const auto cut = l.out.rfind('\n', l.out.size() - 2);
  const std::string grid = l.out.substr(0, cut);
  const std::string chain = l.out.substr(cut + 1, l.out.size() - cut - 2);
  expect(chain == "12345 <4 12354 <2 13254 <3 14253 <1 24153", "left recording chain: " + chain);
  const std::string gridfile = write_temp("rskgrid", grid + "\n");
  expect_out("unrsk '" + gridfile + "' --chain '" + chain + "' --left", 0, q + "\n");

  const RunResult r = run("rsk '" + q + "' --right");
  expect(r.code == 0 && r.out.find("12345 <1 21345 <3 21435 <2 31425 <4 31524\n") !=
                            std::string::npos,
         "rsk --right output:\n" + r.out);
  expect_err("rsk '" + q + "' --left --right", 1, "error: choose exactly one of --left/--right");
}

void test_insert() {
  const std::string g21 = write_temp("g21", ".r\nr+\n");
  expect_out("insert '" + g21 + "' 1_2 --left", 0, "..r\nr-+\n|r+\n");
  const RunResult t = run("insert '" + g21 + "' 1_2 --left --trace");
  expect(t.code == 0 && t.out.rfind("STEP min-droop", 0) == 0, "insert --trace output:\n" + t.out);
  // grid on stdin
  const RunResult s = run_raw("printf '.r\\nr+\\n' | '" + cli + "' insert - 1_2 --right");
  expect(s.code == 0 && !s.out.empty(), "insert from stdin:\n" + s.out);
  const std::string bad = write_temp("bad", ".r\nr%\n");
  expect_err("insert '" + bad + "' 1_2", 1, "error: invalid grid");
  expect_err("insert '" + g21 + "' 3_2", 1, "error:");
  expect_err("insert /nonexistent/file 1_2", 1, "error: cannot open file");
}

void test_lr() {
  expect_out("lr 13542 1432", 0,
             "156324 1\n164325 1\n246315 1\n25431 1\n263415 1\n34521 1\n35412 1\n");
  expect_err("lr 1432 13542", 1,
             "error: separated-descent condition d1(w) >= d2(v) violated (d1=2 < d2=4)");
  const RunResult j = run("lr 13542 1432 --json");
  expect(j.code == 0, "lr --json exit code");
  const auto parsed = nlohmann::json::parse(j.out, nullptr, false);
  expect(!parsed.is_discarded() && parsed["w"] == "13542" && parsed["v"] == "1432" &&
             parsed["verified_against_oracle"] == true &&
             parsed["constants"].size() == 7 && parsed["constants"]["34521"] == 1,
         "lr --json payload:\n" + j.out);
}

void test_growth_jdt_chains() {
  expect_out("growth --bottom '1234 <2 1324 <3 1342' --right '1342 <3 13524 <2 15324'", 0,
             "13425\t14325\t15324\n"
             "12435\t13425\t13524\n"
             "12345\t13245\t13425\n"
             "k:\t2\t3\n"
             "l:\t3\t2\n");
  expect_out("jdt --c '1234 <2 1324 <3 1342' --d '1342 <3 13524 <2 15324'", 0,
             "1234 <3 1243 <2 1342\n");
  expect_err("jdt --c '1234 <2 1324' --d '1432 <3 2431'", 1, "error:");
  expect_out("chains 13542 --up", 0, "12345 <3 12435 <4 12534 <4 12543 <4 13542\n");
  expect_out("chains 1432 --down", 0, "1234 <3 1243 <2 1342 <2 1432\n");
  expect_err("chains 1432", 1, "error: choose exactly one of --up/--down");
}

void test_check_suites() {
  expect_out("check oracle --group S3", 0, "OK oracle group=S3\n");
  const RunResult m = run("check monk --group S2");
  expect(m.code == 0 && m.out.rfind("OK monk group=S2", 0) == 0, "check monk:\n" + m.out);
  const RunResult c = run("check comm --group S2");
  expect(c.code == 0 && c.out.rfind("OK comm group=S2", 0) == 0, "check comm:\n" + c.out);
  const RunResult f = run("check rsk-fibers --group S3 --seed 5");
  expect(f.code == 0 && f.out.rfind("OK rsk-fibers max_k=2", 0) == 0, "check rsk-fibers:\n" + f.out);
  expect_err("check oracle --group X3", 1, "error: group must look like S4");
  expect_err("check oracle --group S9", 1, "error: group size out of range");
  expect_err("check everything", 1, "");
}

void test_env_cap() {
  const RunResult r = run_raw("env SCHUBERT_MAX_N=4 '" + cli + "' schubert 31524 2>&1");
  expect(r.code == 1 && r.out.find("exceeds SCHUBERT_MAX_N = 4") != std::string::npos,
         "SCHUBERT_MAX_N cap:\n" + r.out);
  const RunResult b = run_raw("env SCHUBERT_MAX_N=zero '" + cli + "' schubert 21 2>&1");
  expect(b.code == 1 && b.out.find("SCHUBERT_MAX_N") != std::string::npos,
         "bad SCHUBERT_MAX_N:\n" + b.out);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-schubert_cli>\n";
    return 2;
  }
  cli = argv[1];
  test_schubert();
  test_bpds();
  test_rsk_roundtrip();
  test_insert();
  test_lr();
  test_growth_jdt_chains();
  test_check_suites();
  test_env_cap();
  if (failures) {
    std::cerr << failures << " CLI test(s) failed\n";
    return 1;
  }
  std::cout << "all CLI tests passed\n";
  return 0;
}
