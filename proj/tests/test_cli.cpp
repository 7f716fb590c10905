#include "doctest.h"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(NRT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(const std::string& name) { return std::string(NRT_TEST_TMP) + "/" + name; }

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

} // namespace

using nlohmann::json;

TEST_CASE("version and usage errors") {
  auto v = run("--version");
  CHECK(v.code == 0);
  CHECK(v.out == "nrt 0.1.0\n");
  CHECK(run("frobnicate").code == 2);
  CHECK(run("sphere --q 2 --r 2").code == 2);
  CHECK(run("sphere --q 2 --r 2 --n 2 --bogus 1").code == 2);
  CHECK(run("sphere --q 1 --r 2 --n 2").code == 2);
  CHECK(run("bounds --q 2 --r 2 --n 2 --d 9").code == 2);
  CHECK(run("asym --q 2 --r 1 --curve nope").code == 2);
  CHECK(run("lp --q 2 --r 1 --n 2 --program II").code == 2);
  auto help = run("asym --help");
  CHECK(help.code == 0);
  CHECK(help.out.find("--grid") != std::string::npos);
}

TEST_CASE("sphere") {
  auto r = run("sphere --q 2 --r 2 --n 2");
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  std::vector<std::string> counts;
  for (const auto& s : j.at("shapes")) counts.push_back(s.at("count"));
  // lexicographic shape order; the six counts as a multiset
  CHECK(counts == std::vector<std::string>{"1", "4", "4", "2", "4", "1"});
  std::sort(counts.begin(), counts.end());
  CHECK(counts == std::vector<std::string>{"1", "1", "2", "4", "4", "4"});
  CHECK(j.at("total") == "16");
  auto one = json::parse(run("sphere --q 2 --r 2 --n 2 --d 2").out);
  CHECK(one.at("sphere_size") == "5");
  CHECK(one.at("shapes").size() == 2);
}

TEST_CASE("bounds") {
  auto r = run("bounds --q 2 --r 2 --n 2 --d 4");
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("best").at("upper-on-code-size") == "singleton");
  auto d1 = json::parse(run("bounds --q 2 --r 2 --n 2 --d 1").out);
  for (const auto& b : d1.at("bounds"))
    if (b.at("name") == "singleton") CHECK(b.at("value") == "16");
  const auto path = temp_path("table.json");
  auto t = run("bounds --q 2 --r 2 --n 2 --d 4 --json " + path);
  CHECK(t.code == 0);
  CHECK(t.out.find("plotkin\tupper-on-code-size\t8/3") != std::string::npos);
  std::ifstream in(path);
  CHECK(json::parse(in).at("d") == 4);
}

TEST_CASE("lp and certificates") {
  const auto cert = temp_path("cert.json");
  auto r = run("lp --q 2 --r 2 --n 1 --d 2 --certificate " + cert);
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out).at("value") == "2");
  auto c = run("check-cert --file " + cert);
  CHECK(c.code == 0);
  CHECK(json::parse(c.out).at("code_bound") == "2");
  CHECK(json::parse(run("lp --q 2 --r 1 --n 3 --t 0 --program II").out).at("value") == "1");
  CHECK(json::parse(run("lp --q 2 --r 1 --n 3 --t 2 --program II").out).at("value") == "4");

  // F = 1 + K_1/4 is positive at weight 2
  const auto bad = temp_path("bad.json");
  write(bad, R"({"q":2,"r":1,"n":2,"d":2,"F0":"1","F":{"1":"1/4"}})");
  CHECK(run("check-cert --file " + bad).code == 4);
  write(bad, R"({"q":2,"r":1)");
  CHECK(run("check-cert --file " + bad).code == 2);
}

TEST_CASE("asym csv") {
  auto r = run("asym --q 2 --r 2 --curve be --grid 7");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "delta,rate,curve,q,r");
  int rows = 0;
  std::string first;
  while (std::getline(in, line)) {
    if (rows == 0) first = line;
    ++rows;
  }
  CHECK(rows == 7);
  CHECK(first == "0,1,be,2,2");

  const auto path = temp_path("lp.csv");
  REQUIRE(run("asym --q 2 --r 1 --curve lp --grid 200 --delta-max 0.5 --out " + path).code == 0);
  std::ifstream f(path);
  std::getline(f, line);
  CHECK(line == "delta,rate,curve,q,r,tau,tau1");
  int n = 0;
  double worst = 0.0;
  while (std::getline(f, line)) {
    double delta = 0.0, rate = 0.0;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf", &delta, &rate) == 2);
    const double x = 0.5 - std::sqrt(delta * (1.0 - delta));
    const double ref = x <= 0.0 ? 0.0 : -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
    worst = std::max(worst, std::abs(rate - ref));
    ++n;
  }
  CHECK(n == 200);
  CHECK(worst < 1e-6);
  CHECK(run("asym --q 2 --r 3 --curve lp2 --grid 5").code == 2);
}

TEST_CASE("verify-ooa, macwilliams, net") {
  const auto arr = temp_path("a.txt");
  write(arr, "2 1 2\n0 0\n1 1\n");
  auto v = run("verify-ooa --file " + arr);
  CHECK(v.code == 0);
  CHECK(v.out == "strength 1, index 1\n");
  write(arr, "2 1 2\n0 0\n1 7\n");
  CHECK(run("verify-ooa --file " + arr).code == 2);

  const auto gen = temp_path("g.txt");
  write(gen, "2 2 1\n1 1\n");
  auto m = run("macwilliams --gen " + gen);
  REQUIRE(m.code == 0);
  const auto j = json::parse(m.out);
  CHECK(j.at("dual_verified") == true);
  CHECK(j.at("self_dual_enumerator") == true);
  CHECK(j.at("dual").at("coeffs") == json{{"0,0", "1"}, {"0,1", "1"}});

  auto net = json::parse(run("net --q 2 --t 0 --m 2 --s 2").out);
  CHECK(net.at("ooa").at("strength") == 2);
  CHECK(net.at("ooa").at("n") == 2);
  CHECK(net.at("ooa").at("r") == 2);
  CHECK(net.at("ooa").at("size") == "4");
  CHECK(run("net --q 2 --t 3 --m 2 --s 2").code == 2);
}

TEST_CASE("budget exit code") {
  // 2^21 vectors is above the enumeration cap
  std::string row = "1";
  for (int i = 1; i < 21; ++i) row += " 0";
  const auto gen = temp_path("big.txt");
  write(gen, "2 7 3\n" + row + "\n");
  CHECK(run("macwilliams --gen " + gen).code == 3);
  CHECK(run("verify-ooa --file " + gen).code == 3);
}
