#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"
#include "test_util.hpp"

// End-to-end tests against the real binary (path injected by the build).
namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(PICNUM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("classify: verdict fields in JSON, exit 0") {
  const auto r = run_cli("classify --genus 2 --rank 1 --degree 4 --assume stable --json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "classify");
  CHECK(j["outputs"]["conclusion"] == "E0_stable");
  CHECK(j["outputs"]["picard"]["rank0"] == "3");
  CHECK(j["outputs"]["picard"]["theta_slope"] == "-2/3");
  CHECK(j["inputs"]["genus"] == "2");
  CHECK(j["citations"].is_array());
  CHECK(j["citations"].size() == 1);
}

TEST_CASE("JSON reports re-serialize byte-identically") {
  for (const std::string args :
       {std::string("classify --genus 2 --rank 1 --degree 4 --assume stable"),
        std::string("clifford --genus 2 --polygon 1:3,1:1"),
        std::string("fm --genus 2 --rank 1 --degree 5"),
        std::string("orth --genus 2 --e 1:4 --f 1:3 --kind minus"),
        std::string("popa --r 2 --h 2"),
        std::string("popa regimes --genus 3 --mu 5/2"),
        std::string("oracle-verify --genus 2 --max-rank 2 --deg-range 0:4")}) {
    const auto r = run_cli(args + " --json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
  }
}

TEST_CASE("numbers are serialized as exact strings everywhere") {
  const auto r = run_cli("popa --r 2 --h 2 --json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["outputs"]["P"] == "8");
  CHECK(j["outputs"]["P"].is_string());
}

TEST_CASE("guaranteed-ranks subcommand") {
  const auto r = run_cli("popa regimes --genus 3 --mu 5/2 --json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "popa regimes");
  CHECK(j["outputs"]["popa"]["regime"] == "F0_exists");
  CHECK(j["outputs"]["popa"]["k_min"] == "12");
  CHECK(j["outputs"]["popa"]["R_min"] == "24");
}

TEST_CASE("text mode reports timing, JSON mode never does") {
  const auto text = run_cli("popa --r 1 --h 1");
  CHECK(text.code == 0);
  CHECK(text.out.find("timing") != std::string::npos);
  const auto js = run_cli("popa --r 1 --h 1 --json");
  CHECK(js.out.find("timing") == std::string::npos);
}

TEST_CASE("oracle-verify: clean pass and summary") {
  const auto r = run_cli("oracle-verify --genus 2 --max-rank 2 --deg-range 0:2 --json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["outputs"]["bundles"] == "20");  // 5 pieces: 5 + C(6,2) multisets
  CHECK(j["outputs"]["failures"] == "0");
  const std::string summary = j["outputs"]["summary"];
  CHECK(summary.find("all checks passed") != std::string::npos);
}

TEST_CASE("validation failures exit with code 2 and a structured error") {
  const auto r = run_cli("classify --genus 1 --rank 1 --degree 0 --json");
  CHECK(r.code == 2);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("error"));

  const auto text = run_cli("fm --genus 2 --rank 1 --degree 2 --restrict minus");
  CHECK(text.code == 2);  // restriction regime needs slope > 2g-1
  CHECK(text.out.rfind("error:", 0) == 0);

  const auto parse_fail = run_cli("classify --genus 2 --rank 1");
  CHECK(parse_fail.code != 0);  // missing required --degree (argument parser)
}

TEST_CASE("sweep writes the verdict grid as CSV") {
  const std::string path = "picnum_test_sweep.csv";
  const auto r = run_cli("sweep --genus 2 --rank-max 1 --deg-range 3:4 --out " + path +
                         " --json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["outputs"]["rows"] == "2");

  std::ifstream csv(path);
  REQUIRE(csv.good());
  std::string line;
  std::getline(csv, line);
  CHECK(line == "g,r,d,mu,regime,conclusion,rank0,rank1,theta_slope,citation");
  std::getline(csv, line);
  CHECK(line ==
        "2,1,3,3,mu = 2g-1,E0_semistable,2,,,"
        "E0 locally free of rank g*rk at slope 2g-1");
  std::getline(csv, line);
  CHECK(line ==
        "2,1,4,4,mu > 2g-1,E0_semistable,3,,-2/3,"
        "E0 semistability at slope above 2g-1 (non-strict variant)");
  csv.close();
  std::remove(path.c_str());
}
