#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(WCG_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

const std::string kCase2 = "--m-sr 0 --m-st 0 --m-rt 2 --w-r 1 --w-s 5 --w-t 2";
const std::string kCase4 = "--m-sr 5 --m-st 4 --m-rt 2 --w-r 2 --w-s 2 --w-t 1";

}  // namespace

TEST_CASE("bound") {
  const Result r = run("bound " + kCase2);
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["N"] == 5);
}

TEST_CASE("mult s s is the quadratic relation") {
  const Result r = run("mult s s " + kCase4);
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["text"] == "(1*v^0)*T_ + (1*v^2 + -1*v^-2)*T_s");
}

TEST_CASE("elements echo in normal form") {
  const auto j = nlohmann::json::parse(run("f tr rt e " + kCase2).out);
  CHECK(j["x"] == "rt");
  CHECK(j["z"] == "");
}

TEST_CASE("classify") {
  const auto j = nlohmann::json::parse(run("classify --m-sr 6 --m-st 3 --m-rt 2 --w-r 1 --w-s 1 --w-t 1").out);
  CHECK(j["kind"] == "AFFINE_SPECIAL");
}

TEST_CASE("exit codes") {
  CHECK(run("classify --m-sr 5 --m-st 4 --m-rt 2 --w-r 1 --w-s 2 --w-t 1").code == 2);
  CHECK(run("mult sq s " + kCase4).code == 2);
  CHECK(run("bound --m-sr 5").code == 2);
  CHECK(run("nonsense").code == 2);
  CHECK(run("lemmas 4 " + kCase4 + " --config /nonexistent.json").code == 2);
  CHECK(run("lemmas 4 " + kCase4).code == 3);
  CHECK(run("verify " + kCase4).code == 0);
}

TEST_CASE("config file with flag overrides") {
  const std::string path = "test_cli_config.json";
  std::ofstream(path) << R"({"m_sr": 5, "m_st": 4, "m_rt": 2, "w_r": 2, "w_s": 2, "w_t": 1,
                            "radii": {"word_ball": 6, "length_ball": 5, "hecke_ball": 4}})";
  const Result r = run("lemmas 5 --config " + path);
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["suites"].size() == 7);
  CHECK(run("bound --config " + path + " --w-t 3").code == 0);
  CHECK(run("bound --config " + path + " --w-r 1").code == 2);
}

TEST_CASE("cells edge list and pretty output") {
  const std::string edges = "test_cli_edges.txt";
  const Result r = run("cells --m-sr 3 --m-st 3 --m-rt 2 --max-len 6 --edges " + edges);
  CHECK(r.code == 0);
  std::ifstream in(edges);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line.back() != ' ');
  const Result p = run("bound --pretty " + kCase2);
  CHECK(p.out.find("N: 5") != std::string::npos);
}
