#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LJMOD_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden_path(const std::string& name) { return std::string(GOLDEN_DIR) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("golden outputs") {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"block --d 2", "block_d2.json"},
      {"decomp --d 2", "decomp_d2.json"},
      {"decomp --d 2 --format csv", "decomp_d2.csv"},
      {"decomp --d 2 --format csv --inverse", "decomp_d2_inverse.csv"},
      {"scan --dmax 2", "scan_dmax2.json"},
      {"scan --dmax 3 --format csv", "scan_dmax3.csv"},
      {"orbits --e 2 --dims 1,1", "orbits_e2.json"},
      {"orbits --e 2 --dims 1,1 --format dot", "orbits_e2.dot"},
      {"brauer trace --matrix " + golden_path("diag_2_4_f7.json"), "brauer_diag_2_4_f7.json"},
  };
  for (const auto& [args, file] : cases) {
    CAPTURE(args);
    const auto r = run(args);
    CHECK(r.code == 0);
    CHECK(r.out == golden(file));
  }
}

TEST_CASE("determinism") {
  for (const std::string args : {"scan --dmax 6", "decomp --d 4 --format csv", "orbits --e 3 --dims 2,1,2",
                                 "scan --dmax 3 --source kl", "block --d 6 --epsilon 3"}) {
    CAPTURE(args);
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("documented examples") {
  CHECK(run("arith ainv --d 2 --t 1 --q 5").out == "8\n");
  CHECK(run("arith order --q 5 --l 3").out == "2\n");
  CHECK(run("arith lpart --n 36 --l 3").out == "9\n");
  CHECK(run("arith screen --d 6 --q 5 --l 3 --kind other").out == "undecided\n");
  CHECK(run("arith screen --d 6 --q 5 --l 3 --kind non-elliptic").out == "zero\n");
  CHECK(run("kl --d 4 --u 2,1,3,4 --w 3,4,1,2").out == "1\n");
  CHECK(run("kl --d 4 --u 1,3,2,4 --w 3,4,1,2").out == "1 1\n");
  CHECK(run("kl --d 3 --u 1,2,3 --w 1,2,3").out == "1\n");
  CHECK(nlohmann::json::parse(run("block --d 1").out)["count"] == 1);
  CHECK(nlohmann::json::parse(run("block --d 3").out)["count"] == 7);
  CHECK(nlohmann::json::parse(run("scan --dmax 8").out)["all_effective"] == true);
  CHECK(nlohmann::json::parse(run("bridge --d 3 --all").out)["count"] == 48);
  const auto s1 = nlohmann::json::parse(run("scan --dmax 1").out);
  CHECK(s1["reports"][0]["simples"][0]["coeffs"] == nlohmann::json::array({1}));
}

TEST_CASE("exit codes") {
  CHECK(run("block --d 4 --epsilon 3").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("block").code == 2);
  CHECK(run("decomp --d 2 --format xml").code == 2);
  CHECK(run("scan --dmax 13").code == 3);
  CHECK(run("decomp --d 13").code == 3);
  CHECK(run("scan --dmax 4 --source kl").code == 2);
  CHECK(run("kl --d 3 --u 1,2,3 --w 1,1,3").code == 2);
  CHECK(run("kl --d 3 --u 1,2,3 --w 7,8,-9").code == 0);
  CHECK(run("kl --d 3 --u 1,2,3 --w 2,3,4").code == 2);
  CHECK(run("kl --d 3 --u 1,2,3 --w 0,2,4 --max-length 0").code == 3);
  CHECK(run("arith ainv --d 6 --t 4 --q 2").code == 2);
  CHECK(run("brauer trace --matrix /nonexistent.json").code == 2);
  CHECK(run("orbits --e 2 --dims 0,0").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("kl cache file") {
  const auto path = (std::filesystem::temp_directory_path() / "ljmod_cli_cache.json").string();
  std::filesystem::remove(path);
  const auto a = run("kl --d 3 --u 1,2,3 --w 0,2,4 --cache " + path);
  CHECK(a.code == 0);
  CHECK(std::filesystem::exists(path));
  const auto cache = nlohmann::json::parse(std::ifstream(path));
  CHECK(cache["format"] == "ljmod-kl-cache");
  CHECK(cache["version"] == 1);
  const auto b = run("kl --d 3 --u 1,2,3 --w 0,2,4 --cache " + path);
  CHECK(b.out == a.out);
  {
    std::ofstream out(path);
    out << R"({"format":"ljmod-kl-cache","version":0,"d":3,"entries":[[[1,2,3],[0,2,4],[5]]]})";
  }
  CHECK(run("kl --d 3 --u 1,2,3 --w 0,2,4 --cache " + path).out == a.out);
  std::filesystem::remove(path);
}

}  // TEST_SUITE
