// Runs the command-line tool as a subprocess.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" + SYMDYN_CLI + "' " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(SYMDYN_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("nilpotency --rule " + data("constant0.rule") + " --shift full").code == 0);
  CHECK(run("limitset --rule " + data("and.rule") + " --budget 3").code == 2);
  CHECK(run("nilpotency --rule " + data("broken.rule")).code == 1);
  CHECK(run("nilpotency --elementary 300").code == 1);
  CHECK(run("nilpotency --elementary 6 --max-power 0").code == 1);
  CHECK(run("nilpotency --no-such-flag").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("--help").code == 0);
}

TEST_CASE("text output") {
  const auto r = run("nilpotency --rule " + data("constant0.rule"));
  CHECK(r.out.find("Nilpotent(1)") != std::string::npos);
  CHECK(r.out.find("time: ") != std::string::npos);
  const auto e = run("nilpotency --rule " + data("broken.rule"));
  CHECK(e.out.find("broken.rule:4: unknown symbol '2'") != std::string::npos);
  CHECK(e.out.rfind("error: ", 0) == 0);
}

TEST_CASE("JSON output is valid, stable and timing free") {
  const std::string args = "--json nilpotency --rule " + data("xor.rule") + " --shift " + data("golden.sft");
  const auto a = run(args);
  // XOR does not preserve the golden mean: an input error.
  CHECK(a.code == 1);

  const std::string ok = "--json nilpotency --rule " + data("and.rule") + " --jobs 3";
  const auto b = run(ok), c = run(ok);
  CHECK(b.code == 0);
  CHECK(b.out == c.out);
  const auto j = nlohmann::json::parse(b.out);
  CHECK(j["command"] == "nilpotency");
  CHECK(j["verdict"] == "NonNilpotent");
  CHECK(b.out.find("seconds") == std::string::npos);
  CHECK(j.dump(2) + "\n" == b.out);
}

TEST_CASE("subcommands") {
  CHECK(nlohmann::json::parse(run("--json mixing --shift " + data("period2.graph")).out)["verdict"] == "NotMixing");
  CHECK(run("mixing --shift golden").code == 0);
  CHECK(run("image --rule " + data("and.rule")).code == 0);
  CHECK(run("spacetime --rule " + data("identity.rule") + " --shift golden --i-max 1 --j-max 1").code == 0);
  CHECK(run("periodic --elementary 6 --period 2").code == 0);
  CHECK(run("chainrec --rule " + data("xor.rule") + " --point '1' --lo 0 --hi 0 --max-period 2").code == 0);
  CHECK(run("example riccati-not-in-image").code == 0);
  CHECK(run("example --list").out.find("square-plus-one") != std::string::npos);
  CHECK(run("example nope").code == 1);
}

TEST_CASE("the disk cache does not change results") {
  const auto dir = std::filesystem::temp_directory_path() / "symdyn-cli-cache-test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const std::string args = "--json limitset --rule " + data("and.rule") + " --budget 4";
  const auto plain = run(args);
  const auto cold = run(args, "LIMITSET_CACHE_DIR='" + dir.string() + "'");
  const auto warm = run(args, "LIMITSET_CACHE_DIR='" + dir.string() + "'");
  CHECK(plain.out == cold.out);
  CHECK(cold.out == warm.out);
  CHECK_FALSE(std::filesystem::is_empty(dir));
  std::filesystem::remove_all(dir);
}
