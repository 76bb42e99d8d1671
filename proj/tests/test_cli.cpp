#include "json.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(MSA_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
  int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  REQUIRE(run_cli("").exit_code == 2);
  REQUIRE(run_cli("enumerate").exit_code == 2);            // missing --word
  REQUIRE(run_cli("enumerate --word '+x+'").exit_code == 2);
  REQUIRE(run_cli("verify --max-n 1").exit_code == 2);
  REQUIRE(run_cli("verify --max-n 99").exit_code == 2);
  REQUIRE(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("enumerate produces nine rows on A4 words") {
  RunResult r = run_cli("enumerate --word '+++' --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  REQUIRE(j["word"] == "+++");
  REQUIRE(j["reps"].size() == 9);
  for (const auto& rep : j["reps"]) {
    REQUIRE(rep["dim"] == 9);
    REQUIRE(rep.contains("presentation"));
    REQUIRE(rep["presentation"]["quiver"].contains("vertices"));
  }
}

TEST_CASE("enumerate on the empty word is empty") {
  RunResult r = run_cli("enumerate --word '' --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  REQUIRE(j["reps"].empty());
}

TEST_CASE("enumerate flags the disconnected representatives of +-+") {
  RunResult r = run_cli("enumerate --word '+-+' --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  int disconnected = 0;
  for (const auto& rep : j["reps"]) disconnected += !rep["connected"].get<bool>();
  REQUIRE(disconnected == 3);
}

TEST_CASE("present filters by tag") {
  RunResult r = run_cli("present --word '+++' --rep 'A(-1)' --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  REQUIRE(j["presentations"].size() == 1);
  REQUIRE(j["presentations"][0]["tag"] == "A(-1)");
  REQUIRE(j["presentations"][0]["relations"].size() == 1);
  REQUIRE(run_cli("present --word '+++' --rep 'A(9)'").exit_code == 2);
}

TEST_CASE("orbits and isoclasses run") {
  RunResult orb = run_cli("orbits --word '+-' --format json");
  REQUIRE(orb.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(orb.output);
  REQUIRE(j["aut_order"] == 2);
  REQUIRE(j["orbits"].size() == 3);

  RunResult iso = run_cli("isoclasses --word '+-' --format json");
  REQUIRE(iso.exit_code == 0);
  nlohmann::json ji = nlohmann::json::parse(iso.output);
  REQUIRE(ji["verdict"] == "pass");
  REQUIRE(ji["isoclasses"].size() == 2);  // the split reps are disconnected
}

TEST_CASE("verify exits zero on a small sweep") {
  RunResult r = run_cli("verify --max-n 4 --workers 1 --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  REQUIRE(j["words"] == 15);
  REQUIRE(j["failures"] == 0);
  REQUIRE(j["reports"].size() == 15);
}

TEST_CASE("words audit exits zero and is vacuous at zero length") {
  RunResult r = run_cli("words --max-len 6 --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  REQUIRE(j["no_odd_w3"] == true);
  REQUIRE(j["all_w3_star_symmetric"] == true);
  bool has_plus_minus = false;
  for (const auto& s : j["solutions"]) {
    if (s["w2"] == "+-" && s["w3"] == "+-") has_plus_minus = true;
  }
  REQUIRE(has_plus_minus);

  RunResult empty = run_cli("words --max-len 0 --format json");
  REQUIRE(empty.exit_code == 0);
  REQUIRE(nlohmann::json::parse(empty.output)["solutions"].empty());
}

TEST_CASE("output is byte-stable and --out writes files") {
  RunResult a = run_cli("enumerate --word '+-+' --format json");
  RunResult b = run_cli("enumerate --word '+-+' --format json");
  REQUIRE(a.output == b.output);

  std::string file = "/tmp/msa_cli_out_test.json";
  RunResult c = run_cli("enumerate --word '+-+' --format json --out " + file);
  REQUIRE(c.exit_code == 0);
  std::ifstream f(file);
  REQUIRE(f.good());
  std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  REQUIRE(content == a.output);
  std::remove(file.c_str());
}
