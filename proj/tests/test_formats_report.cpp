#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "symdyn/error.hpp"
#include "symdyn/formats.hpp"
#include "symdyn/report.hpp"

using namespace symdyn;

namespace {

std::string data(const std::string& name) { return read_text_file(std::string(SYMDYN_DATA_DIR) + "/" + name); }

int parse_error_line(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("sample files round trip") {
  const auto x = parse_rule(data("xor.rule"), "xor.rule");
  CHECK(x == CellularAutomaton::from_rule_number(2, {0, 1}, 6));
  CHECK(parse_rule(serialize(x)) == x);
  CHECK(serialize(parse_rule(serialize(x))) == serialize(x));

  const auto g = parse_sft(data("golden.sft"));
  CHECK(g.allowed().size() == 3);
  CHECK(serialize(parse_sft(serialize(g))) == serialize(g));

  const auto p = parse_graph(data("period2.graph"));
  CHECK(p.num_vertices() == 2);
  CHECK(serialize(parse_graph(serialize(p))) == serialize(p));
  CHECK(equal_subshifts(parse_shift(data("period2.graph")), p));
  CHECK(equal_subshifts(parse_shift(data("golden.sft")), presentation_of(g)));

  const auto r = parse_poly_rule(data("riccati.poly"));
  CHECK(r == riccati_rule());
  CHECK(parse_poly_rule(serialize(r)) == r);
  const auto proj = parse_poly_rule("memory: 0\npoly: t0^2 + 1\nmode: projective\n");
  CHECK(proj == square_plus_one(PolyMode::Projective));
  CHECK(parse_poly_rule(serialize(proj)) == proj);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error_line([] { parse_rule(data("broken.rule"), "broken.rule"); }) == 4);
  try {
    parse_rule(data("broken.rule"), "data/broken.rule");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()) == "data/broken.rule:4: unknown symbol '2'");
  }
  // Missing table entry.
  CHECK(parse_error_line([] { parse_rule("alphabet: 0 1\nmemory: 0\nrule: 0 -> 1\n"); }) > 0);
  // Duplicate entry.
  CHECK(parse_error_line([] { parse_rule("alphabet: 0 1\nmemory: 0\nrule: 0 -> 1\nrule: 0 -> 0\nrule: 1 -> 1\n"); }) ==
        4);
  CHECK(parse_error_line([] { parse_sft("alphabet: 0 1\nwindow: 0 1\nallow: 0\n"); }) == 3);
  CHECK(parse_error_line([] { parse_graph("alphabet: a\nvertex: v\nedge: v w a\n"); }) == 3);
  CHECK(parse_error_line([] { parse_poly_rule("memory: 0 1\npoly: t1 -\n"); }) == 2);
  CHECK(parse_error_line([] { parse_shift("bogus: 1\n"); }) == 1);
  CHECK(parse_error_line([] { read_text_file("/nonexistent/file.rule"); }) == 0);
}

TEST_CASE("property: random rules and SFTs round trip") {
  auto& gen = oracle::rng();
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t k = 1 + gen() % 3;
    const auto alpha = FiniteAlphabet::numeric(k);
    std::vector<std::int64_t> memory;
    for (std::int64_t m = -2; m <= 2; ++m)
      if (gen() % 2) memory.push_back(m);
    if (memory.empty()) memory.push_back(0);
    std::size_t size = 1;
    for (std::size_t i = 0; i < memory.size(); ++i) size *= k;
    std::vector<Symbol> table(size);
    for (auto& t : table) t = static_cast<Symbol>(gen() % k);
    const CellularAutomaton ca(alpha, memory, table);
    CHECK(parse_rule(serialize(ca)) == ca);

    std::set<Word> allowed;
    for (const auto& w : oracle::all_words(k, 2))
      if (gen() % 2) allowed.insert(w);
    const Sft s(alpha, Window(-1, 0), allowed);
    const Sft back = parse_sft(serialize(s));
    CHECK(back.window() == s.window());
    CHECK(back.allowed() == s.allowed());
  }
}

TEST_CASE("proof objects round trip") {
  const auto proof = not_in_image_certificate();
  const auto text = serialize(proof);
  const auto back = parse_proof(text);
  CHECK(serialize(back) == text);
  CHECK(replay(back).ok);
  // Corrupting the completed square in the text is caught on replay.
  auto bad = back;
  bad.steps[1].offset = Rational(1, 2);
  CHECK_FALSE(replay(parse_proof(serialize(bad))).ok);
}

TEST_CASE("reports round trip through JSON") {
  Report r;
  r.command = "nilpotency";
  r.verdict = "Nilpotent(1)";
  r.payload = {{"rule", "x"}, {"terminal", "0"}};
  r.certificates = nlohmann::json::array({{{"type", "constant-power"}, {"replayed", true}}});
  r.budgets = {{"max_power", 8}};
  r.flags = {{"mixing", true}};
  r.seconds = 1.5;
  const auto text = dump_json(r);
  CHECK(text.back() == '\n');
  const Report back = parse_report(text);
  CHECK(back == r);
  CHECK(dump_json(back) == text);
  CHECK(text.find("seconds") == std::string::npos);
  CHECK(exit_code(Outcome::Decisive) == 0);
  CHECK(exit_code(Outcome::Inconclusive) == 2);
  CHECK(parse_outcome(to_string(Outcome::Inconclusive)) == Outcome::Inconclusive);

  CHECK_THROWS_AS(parse_report("{\"command\": \"x\"}"), ParseError);
  CHECK_THROWS_AS(parse_report("not json"), ParseError);
  auto j = to_json(r);
  j["verdict"] = 3;
  CHECK_THROWS_AS(report_from_json(j), ParseError);
}

TEST_CASE("text rendering") {
  Report r;
  r.command = "mixing";
  r.verdict = "Mixing";
  r.payload = {{"lines", "a\nb"}};
  const auto text = render_text(r);
  CHECK(text.find("Mixing") != std::string::npos);
  CHECK(text.find("lines: |") != std::string::npos);
}
