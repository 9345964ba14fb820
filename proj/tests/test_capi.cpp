// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "symdyn/symdyn.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  sd_string_free(s);
  return out;
}

nlohmann::json report_json(sd_report* r) {
  char* text = nullptr;
  REQUIRE(sd_report_json(r, &text) == SD_OK);
  return nlohmann::json::parse(take(text));
}

}  // namespace

TEST_CASE("nilpotency through the C interface") {
  sd_ca* ca = nullptr;
  REQUIRE(sd_ca_parse("alphabet: 0 1\nmemory: 0 1\nrule: 0 0 -> 0\nrule: 0 1 -> 0\nrule: 1 0 -> 0\nrule: 1 1 -> 0\n",
                      "zero", &ca) == SD_OK);
  sd_shift* full = nullptr;
  REQUIRE(sd_shift_preset("full", ca, &full) == SD_OK);
  sd_report* r = nullptr;
  REQUIRE(sd_nilpotency(full, ca, nullptr, &r) == SD_OK);
  CHECK(sd_report_outcome(r) == 0);
  const auto j = report_json(r);
  CHECK(j["verdict"] == "Nilpotent(1)");
  CHECK(sd_report_seconds(r) >= 0);
  sd_report_free(r);
  sd_shift_free(full);
  sd_ca_free(ca);
}

TEST_CASE("elementary rules, presets and limit sets") {
  sd_ca* ca = nullptr;
  REQUIRE(sd_ca_elementary(204, &ca) == SD_OK);
  char* text = nullptr;
  REQUIRE(sd_ca_serialize(ca, &text) == SD_OK);
  CHECK(take(text).find("memory: -1 0 1") != std::string::npos);
  sd_shift* golden = nullptr;
  REQUIRE(sd_shift_preset("golden", ca, &golden) == SD_OK);
  sd_report* r = nullptr;
  REQUIRE(sd_limit_set(golden, ca, 4, &r) == SD_OK);
  CHECK(sd_report_outcome(r) == 0);
  sd_report_free(r);
  REQUIRE(sd_mixing(golden, &r) == SD_OK);
  CHECK(report_json(r)["verdict"] == "Mixing");
  sd_report_free(r);
  sd_shift_free(golden);
  sd_ca_free(ca);
}

TEST_CASE("inconclusive runs report outcome 2") {
  sd_ca* ca = nullptr;
  REQUIRE(sd_ca_parse("alphabet: 0 1\nmemory: 0 1\nrule: 0 0 -> 0\nrule: 0 1 -> 0\nrule: 1 0 -> 0\nrule: 1 1 -> 1\n",
                      "and", &ca) == SD_OK);
  sd_shift* full = nullptr;
  REQUIRE(sd_shift_preset("full", ca, &full) == SD_OK);
  sd_report* r = nullptr;
  REQUIRE(sd_limit_set(full, ca, 3, &r) == SD_OK);
  CHECK(sd_report_outcome(r) == 2);
  sd_report_free(r);
  sd_shift_free(full);
  sd_ca_free(ca);
}

TEST_CASE("errors set status codes and messages") {
  sd_ca* ca = nullptr;
  CHECK(sd_ca_parse("alphabet: 0 1\nmemory: 0\nrule: 0 -> 2\n", "bad.rule", &ca) == SD_ERR_PARSE);
  CHECK(ca == nullptr);
  CHECK(std::string(sd_last_error()).rfind("bad.rule:3:", 0) == 0);
  CHECK(sd_ca_elementary(256, &ca) != SD_OK);
  CHECK(sd_ca_load("/nonexistent.rule", &ca) == SD_ERR_PARSE);
  CHECK(sd_ca_parse(nullptr, "x", &ca) == SD_ERR_ARG);

  REQUIRE(sd_ca_elementary(6, &ca) == SD_OK);
  sd_shift* s = nullptr;
  CHECK(sd_shift_preset("nope", ca, &s) != SD_OK);
  sd_report* r = nullptr;
  CHECK(sd_example("no-such-example", &r) != SD_OK);
  CHECK(std::string(sd_last_error()).size() > 0);
  sd_ca_free(ca);
}

TEST_CASE("reports parse back") {
  sd_report* r = nullptr;
  REQUIRE(sd_example("riccati-not-in-image", &r) == SD_OK);
  char* text = nullptr;
  REQUIRE(sd_report_json(r, &text) == SD_OK);
  const std::string json = take(text);
  sd_report* back = nullptr;
  REQUIRE(sd_report_parse_json(json.c_str(), &back) == SD_OK);
  REQUIRE(sd_report_json(back, &text) == SD_OK);
  CHECK(take(text) == json);
  REQUIRE(sd_report_text(back, &text) == SD_OK);
  CHECK_FALSE(take(text).empty());
  sd_report_free(back);
  sd_report_free(r);
  CHECK(sd_report_parse_json("{", &back) == SD_ERR_PARSE);
}

TEST_CASE("every listed example runs decisively") {
  char* names = nullptr;
  REQUIRE(sd_example_names(&names) == SD_OK);
  const std::string all = take(names);
  std::size_t count = 0, pos = 0;
  while (pos < all.size()) {
    const auto end = all.find('\n', pos);
    const std::string name = all.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? all.size() : end + 1;
    if (name.empty()) continue;
    sd_report* r = nullptr;
    INFO(name);
    CHECK(sd_example(name.c_str(), &r) == SD_OK);
    if (r) CHECK(sd_report_outcome(r) == 0);
    sd_report_free(r);
    ++count;
  }
  CHECK(count >= 10);
}

TEST_CASE("error messages are per thread") {
  sd_ca* ca = nullptr;
  CHECK(sd_ca_parse("junk", "main-thread", &ca) == SD_ERR_PARSE);
  std::string other;
  std::thread t([&] { other = sd_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK(std::string(sd_last_error()).find("main-thread") != std::string::npos);
}
