#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(UNIMODAL_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("nz command") {
  const Run a = run("nz --coeffs 1,1,1,1,1");
  CHECK(a.code == 0);
  CHECK(a.out.find("\"nz\": 4") != std::string::npos);
  const Run b = run("nz --coeffs 1,1,-1,-1,1 --check skew");
  CHECK(b.code == 0);
  CHECK(b.out.find("\"nz\": 0") != std::string::npos);
  CHECK(run("nz --coeffs 1,1,1").out.find("\"nz\": 2") != std::string::npos);
  CHECK(run("nz --coeffs 1,a").code == 2);
  CHECK(run("nz").code == 2);
  CHECK(run("nz --coeffs 1,2").code == 3);
  CHECK(run("nz --coeffs 1,2,3 --lift").code == 0);
  CHECK(run("nz --coeffs 1,1,1 --check skew").code == 3);

  const std::string path = "cli_test_cos.json";
  std::ofstream(path) << "{\"type\":\"cos\",\"coeffs\":[1,2]}";
  const Run c = run("nz --file " + path);
  CHECK(c.code == 0);
  CHECK(c.out.find("\"nz\": 2") != std::string::npos);
  std::ofstream(path) << "{not json";
  CHECK(run("nz --file " + path).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("census, counterexample and fekete commands") {
  const Run c = run("census --family sr-littlewood --n 1..16");
  CHECK(c.code == 0);
  CHECK(lines(c.out) == 17);
  CHECK(c.out.find("sr-littlewood,16,512,4,16,615/64,") != std::string::npos);
  CHECK(run("census --family nope --n 1..3").code == 2);
  const Run skew = run("census --family skew-littlewood --n 1..8");
  CHECK(skew.code == 0);
  CHECK(lines(skew.out) == 3);

  const Run k = run("counterexample --n 1..50");
  CHECK(k.code == 0);
  CHECK(lines(k.out) == 51);
  CHECK(k.out.find(",false,") == std::string::npos);

  const Run f = run("fekete --p 5..50 --numeric");
  CHECK(f.code == 0);
  CHECK(lines(f.out) == 1 + 13);
}

TEST_CASE("verify command") {
  const Run v = run("verify --suite littlewood-l1 --count 20 --seed 7");
  CHECK(v.code == 0);
  CHECK(lines(v.out) == 21);
  CHECK(v.out.find(",false") == std::string::npos);
  CHECK(run("verify --suite nope").code == 3);
  CHECK(run("verify --suite lcm --seed x").code == 2);
  CHECK(run("verify --suite lcm --eps 2").code == 2);
}

TEST_CASE("scatter output is identical across worker counts") {
  const Run a = run("scatter --family sr-littlewood --n 8..12 --eps 0.1 --workers 1");
  const Run b = run("scatter --family sr-littlewood --n 8..12 --eps 0.1 --workers 3");
  const Run c = run("scatter --family sr-littlewood --n 8..12 --eps 0.1");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(lines(a.out) == 1 + 32 + 32 + 64 + 64 + 128);
  CHECK(a.out.rfind("poly_id,degree,abs_P1,nz,nz_star,epsilon,bound_value,nc_1,nc_2,nc_3\n", 0) == 0);
  CHECK(run("scatter --family sr-littlewood --n 2..4 --eps 1.5").code == 3);
}

TEST_CASE("config file with flag override") {
  const std::string path = "cli_test.conf";
  std::ofstream(path) << "n_lo = 2\nn_hi = 4\nworkers = 2\n";
  const Run a = run("--config " + path + " census");
  CHECK(a.code == 0);
  CHECK(lines(a.out) == 4);
  const Run b = run("--config " + path + " census --n 2..2");
  CHECK(lines(b.out) == 2);
  std::ofstream(path) << "bogus = 1\n";
  CHECK(run("--config " + path + " census").code == 2);
  std::remove(path.c_str());
}
