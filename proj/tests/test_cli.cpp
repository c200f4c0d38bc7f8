#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <json.hpp>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LOGDER_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("logder-cli-" + std::to_string(getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    auto p = path / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("analyze reports") {
  auto r = run("analyze --corpus ex-4.2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "SPOG: yes, POexp = (1,3,4,4), level 4"));
  r = run("analyze --corpus boolean-3");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "free: yes, exp = (1,1,1)"));
  CHECK(contains(r.out, "chi(t) = (t - 1)^3"));

  auto a = run("analyze --corpus ex-4.4 --json");
  auto b = run("analyze --corpus ex-4.4 --json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["spog"]["level"] == 5);
  CHECK(j["betti"]["generators"] == nlohmann::json({1, 3, 4, 4, 5}));

  r = run("analyze --corpus A3 --dump-derivations --degree-scan 4 --json");
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["generators"].size() == 3);
  CHECK(j["degree_scan"].size() == 5);
}

TEST_CASE("input errors exit with 2") {
  TempDir dir;
  CHECK(run("analyze " + dir.write("empty.txt", "")).code == 2);
  CHECK(run("analyze " + (dir.path / "missing.txt").string()).code == 2);
  CHECK(run("analyze " + dir.write("prop.txt", "dimension = 2\nhyperplanes = [[1, 2], [2, 4]]\n")).code == 2);
  CHECK(run("analyze " + dir.write("len.txt", "dimension = 3\nhyperplanes = [[1, 2]]\n")).code == 2);
  CHECK(run("analyze --corpus no-such-arrangement").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("certify --corpus A3 --mode sideways").code == 2);
  CHECK(run("replay " + dir.write("bad.json", "{\"nodes\": [")).code == 2);
}

TEST_CASE("malformed arrangement files never crash") {
  TempDir dir;
  const std::string valid = "# three lines\ndimension = 3\nhyperplanes = [[1, 0, 0], [0, 1, 0], [1, -1/2, 0],\n"
                            "  [0, 0, 1]]\ndistinguished = 2\n";
  REQUIRE(run("analyze " + dir.write("valid.txt", valid)).code == 0);
  std::mt19937 rng(7);
  const std::string alphabet = "0123456789-/[],= \n#xdimensionhyperplanes";
  for (int trial = 0; trial < 120; ++trial) {
    std::string text = valid;
    const int edits = 1 + static_cast<int>(rng() % 3);
    for (int e = 0; e < edits; ++e) {
      const std::size_t pos = rng() % text.size();
      switch (rng() % 3) {
        case 0: text.erase(pos, 1); break;
        case 1: text.insert(pos, 1, alphabet[rng() % alphabet.size()]); break;
        default: text[pos] = alphabet[rng() % alphabet.size()]; break;
      }
    }
    const int code = run("analyze " + dir.write("mutant.txt", text)).code;
    CAPTURE(text);
    CHECK((code == 0 || code == 2));
  }
}

TEST_CASE("certify and replay") {
  TempDir dir;
  const std::string cert = (dir.path / "ex42.json").string();
  auto r = run("certify --corpus ex-4.2 --mode stair-spog -o " + cert);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "spog POexp (1,3,4,4) level 4"));
  CHECK(run("replay " + cert).code == 0);

  std::ifstream in(cert);
  auto j = nlohmann::json::parse(in);
  j["nodes"][j["root"].get<std::size_t>()]["claim"]["level"] = 3;
  CHECK(run("replay " + dir.write("tampered.json", j.dump())).code == 1);

  CHECK(run("certify --corpus ex-4.3 --mode stair-spog").code == 0);
  CHECK(run("certify --corpus ex-4.4 --mode stair-spog").code == 1);
  CHECK(run("certify --corpus generic-3-4 --mode stair-free").code == 1);
  CHECK(run("certify --corpus A4 --mode stair-free --budget 0").code == 4);
  auto first = run("certify --corpus B3 --mode stair-free --json");
  auto second = run("certify --corpus B3 --mode stair-free --json");
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("paper suite entry points") {
  auto r = run("paper-suite --list");
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 8);
  r = run("paper-suite --criterion 1 --criterion 8");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "PASS  1 ex-4.2"));
  r = run("paper-suite --criterion 1 --criterion 8 --perturb");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "FAIL  1 ex-4.2"));
  CHECK(contains(r.out, "FAIL  8 certify"));
}

TEST_CASE("corpus listing") {
  auto r = run("corpus");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "ex-4.6-H2"));
  r = run("corpus ex-4.5");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "dimension = 4"));
}
