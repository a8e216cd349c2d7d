#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(LEFCALC_CLI) + " " + args + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buffer{};
  while (std::fgets(buffer.data(), buffer.size(), pipe)) result.out += buffer.data();
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

const std::string kPaper = std::string(LEFCALC_SOURCE_DIR) + "/data/paper_example.json";

}  // namespace

TEST_CASE("lambda and lhom on named sets") {
  const std::vector<std::pair<std::string, std::string>> expected{
      {"X1", "1\n"}, {"X2", "1\n"}, {"X3", "-1\n"}, {"X4", "0\n"}, {"X5", "0\n"}};
  for (const auto& [name, value] : expected) {
    INFO(name);
    const Run l = run("lambda --instance " + kPaper + " --set " + name);
    CHECK(l.status == 0);
    CHECK(l.out == value);
    CHECK(run("lhom --instance " + kPaper + " --set " + name).out == value);
  }
}

TEST_CASE("integrate and sheaf-lefschetz on the bundled example") {
  CHECK(run("integrate --instance " + kPaper).out == "3\n");
  CHECK(run("integrate --method barrow --instance " + kPaper).out == "3\n");
  CHECK(run("sheaf-lefschetz --instance " + kPaper).out == "3\n");
}

TEST_CASE("verify runs every suite") {
  const Run r = run("verify --property all --cases 200 --seed 7");
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("well-defined") != std::string::npos);
}

TEST_CASE("verify reports mutations as failures") {
  const Run r = run("verify --property hopf --cases 50 --mutate flip-chain-sign --json");
  CHECK(r.status == 1);
  CHECK(r.out.find("\"pass\":false") != std::string::npos);
  CHECK(r.out.find("\"instance\"") != std::string::npos);
}

TEST_CASE("verify replays a single instance") {
  const Run r = run("verify --property representation --instance " + kPaper);
  CHECK(r.status == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("bad input exits with status 2") {
  CHECK(run("lambda --instance /nonexistent.json").status == 2);
  CHECK(run("lambda --instance " + kPaper + " --set NOPE").status == 2);
  CHECK(run("verify --property nope").status == 2);
  CHECK(run("verify --cases 0").status == 2);
  CHECK(run("frobnicate").status == 2);

  const auto bad = std::filesystem::temp_directory_path() / "lefcalc_bad_map.json";
  std::ofstream(bad) << R"({"vertex_count": 3, "maximal": [[0, 1, 2]], "map": [0, 1, 5]})";
  CHECK(run("lambda --instance " + bad.string()).status == 2);
  std::filesystem::remove(bad);
}

TEST_CASE("example writes the bundled document") {
  const Run r = run("example paper");
  CHECK(r.status == 0);
  std::ifstream in(kPaper);
  std::string file((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(r.out == file);
}
