#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "jarnik/cli.hpp"

using namespace jarnik;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "jarnik");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("jarnik_test_" + name);
}

}  // namespace

TEST_CASE("formula subcommand") {
  const auto h = call({"formula", "--heisenberg", "--gamma", "2", "--n", "2"});
  CHECK(h.code == cli::kExitOk);
  CHECK(h.out == "2\n");
  CHECK(call({"formula", "--heisenberg", "--gamma", "-1", "--n", "2"}).code == cli::kExitInvalid);
  CHECK(call({"formula", "--gamma", "-1"}).code == cli::kExitInvalid);
  CHECK(call({"formula", "--gamma", "1/2", "--alpha", "2", "--dims", "0,1,1,1,0"}).out == "11/4\n");
  CHECK(call({"formula", "--heisenberg", "--gamma", "3/2", "--n", "3"}).out == "4\n");
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == cli::kExitInvalid);
  CHECK(call({"bogus"}).code == cli::kExitInvalid);
  CHECK(call({"cf", "--x", "1/0"}).code == cli::kExitInvalid);
  CHECK(call({"count-slope", "--n", "2", "--box", "1,0", "--C", "8,16"}).code == cli::kExitInvalid);
  CHECK(call({"--format", "xml", "cf", "--x", "1/3"}).code == cli::kExitInvalid);
}

TEST_CASE("count-slope output embeds the config and is reproducible") {
  const std::vector<std::string> args{"count-slope", "--n", "2", "--box", "0,1", "--C", "8,16,32"};
  const auto a = call(args);
  REQUIRE(a.code == cli::kExitOk);
  CHECK(a.out.rfind("# config: {\"command\":\"count-slope\"", 0) == 0);
  CHECK(a.out.find("\nC,count\n8,1096\n16,15754\n") != std::string::npos);
  CHECK(a.out.find("# fit: ") != std::string::npos);
  CHECK(a.err.find("slope=") != std::string::npos);
  auto threaded = args;
  threaded.insert(threaded.begin(), {"--threads", "3"});
  CHECK(call(threaded).out == a.out);
}

TEST_CASE("json artifacts and --out") {
  const auto path = temp_file("cf.json");
  std::filesystem::remove(path);
  const auto r = call({"--format", "json", "--out", path.string(), "cf", "--x", "415/93", "--k", "6"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(!r.out.empty());
  const auto j = nlohmann::json::parse(slurp(path));
  CHECK(j["config"]["x"] == "415/93");
  REQUIRE(j["rows"].size() == 4);
  CHECK(j["rows"][3]["q"] == "93");
  CHECK(j["terminated"] == true);
  std::filesystem::remove(path);
}

TEST_CASE("resource budget") {
  setenv("JARNIK_ENUM_BUDGET", "100", 1);
  const auto r = call({"enumerate", "--n", "2", "--box", "0,1", "--C", "20"});
  unsetenv("JARNIK_ENUM_BUDGET");
  CHECK(r.code == cli::kExitResource);
  CHECK(call({"enumerate", "--n", "2", "--box", "0,1", "--C", "3"}).code == cli::kExitOk);
}

TEST_CASE("degenerate Cantor tree writes partial output") {
  const auto path = temp_file("cantor.csv");
  std::filesystem::remove(path);
  const auto r = call({"--out", path.string(), "cantor", "--schedule", "1,2"});
  CHECK(r.code == cli::kExitDegenerate);
  const auto text = slurp(path);
  CHECK(text.find("# degenerate_level: 2") != std::string::npos);
  CHECK(text.find("\n0,1,1,1,") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("seeded box counting is reproducible") {
  const std::vector<std::string> args{"boxdim", "--source", "square", "--points", "2000", "--seed", "7",
                                      "--eps", "0.25,0.125,0.0625"};
  const auto a = call(args), b = call(args);
  REQUIRE(a.code == cli::kExitOk);
  CHECK(a.out == b.out);
  auto other = args;
  other[6] = "8";
  CHECK(call(other).out != a.out);
}
