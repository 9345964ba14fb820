#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "symdyn/automaton.hpp"
#include "symdyn/error.hpp"

using namespace symdyn;

namespace {

const FiniteAlphabet bin({"0", "1"});

CellularAutomaton xor_rule() { return CellularAutomaton(bin, {0, 1}, {0, 1, 1, 0}); }
CellularAutomaton and_rule() { return CellularAutomaton(bin, {0, 1}, {0, 0, 0, 1}); }

CellularAutomaton random_rule(std::mt19937_64& gen, std::size_t k) {
  std::vector<std::int64_t> memory;
  for (std::int64_t m = -1; m <= 1; ++m)
    if (gen() % 2) memory.push_back(m);
  if (memory.empty()) memory.push_back(0);
  std::size_t size = 1;
  for (std::size_t i = 0; i < memory.size(); ++i) size *= k;
  std::vector<Symbol> table(size);
  for (auto& t : table) t = static_cast<Symbol>(gen() % k);
  return CellularAutomaton(FiniteAlphabet::numeric(k), memory, table);
}

}  // namespace

TEST_CASE("rule numbering") {
  // Table index 0 is the least significant digit of a rule number.
  CHECK(CellularAutomaton::from_rule_number(2, {0, 1}, 6) == xor_rule());
  CHECK(CellularAutomaton::from_rule_number(2, {0, 1}, 8) == and_rule());
  const auto r110 = CellularAutomaton::elementary(110);
  // Wolfram: neighbourhood 4l + 2c + r indexes bit of the rule number.
  for (unsigned n = 0; n < 8; ++n)
    CHECK(r110.rule({static_cast<Symbol>(n >> 2), static_cast<Symbol>((n >> 1) & 1), static_cast<Symbol>(n & 1)}) ==
          ((110u >> n) & 1u));
  CHECK_THROWS_AS(CellularAutomaton(bin, {1, 0}, {0, 1, 1, 0}), DomainError);
  CHECK_THROWS_AS(CellularAutomaton(bin, {0, 1}, {0, 1, 1}), DomainError);
  CHECK_THROWS_AS(CellularAutomaton(bin, {0, 1}, {0, 1, 1, 2}), DomainError);
}

TEST_CASE("application to patterns and periodic points") {
  CHECK(xor_rule().apply_to_pattern(Pattern::at(0, {0, 1, 1, 0})) == Pattern::at(0, {1, 0, 1}));
  const Pattern p = Pattern::at(-2, {1, 0, 1, 1});
  CHECK(CellularAutomaton::identity(bin).apply_to_pattern(p) == p);
  CHECK(CellularAutomaton::constant(bin, 0).apply_to_word({1, 0, 1, 1, 0}) == Word{0, 0, 0, 0, 0});
  CHECK(xor_rule().apply_to_periodic(PeriodicConfig(Word{0, 1})) == PeriodicConfig::constant(1));
  CHECK(CellularAutomaton::constant(bin, 0).apply_to_periodic(PeriodicConfig(Word{0, 1, 1})) ==
        PeriodicConfig::constant(0));
  // Memory [-1, 1] places the output at the centre.
  CHECK(CellularAutomaton::elementary(204).apply_to_pattern(Pattern::at(0, {1, 0, 1})) == Pattern::at(1, {0}));
}

TEST_CASE("property: local evaluation matches the table oracle") {
  auto& gen = oracle::rng();
  for (int trial = 0; trial < 60; ++trial) {
    const auto ca = random_rule(gen, 2 + gen() % 2);
    const std::size_t len = 6;
    Word w(len);
    for (auto& c : w) c = static_cast<Symbol>(gen() % ca.source().size());
    CHECK(ca.apply_to_word(w) == oracle::apply_word(ca, w));
    Word cells(1 + gen() % 5);
    for (auto& c : cells) c = static_cast<Symbol>(gen() % ca.source().size());
    CHECK(ca.apply_to_periodic(PeriodicConfig(cells)) == PeriodicConfig(oracle::apply_periodic(ca, cells)));
  }
}

TEST_CASE("composition") {
  const auto one = compose(xor_rule(), 1);
  CHECK(one.automaton() == xor_rule());
  // (a + b) + (b + c) = a + c
  const auto two = compose(xor_rule(), 2).automaton();
  CHECK(two.hull() == Window(0, 2));
  for (const auto& w : oracle::all_words(2, 3)) CHECK(two.rule(w) == (w[0] ^ w[2]));
  const CellularAutomaton zero(bin, {0, 1}, {0, 0, 0, 0});
  const auto c7 = compose(zero, 7);
  CHECK(c7.hull().size() == 7 * (2 - 1) + 1);
  CHECK(c7.automaton().is_constant());
}

TEST_CASE("property: tau^n as one rule equals n applications") {
  auto& gen = oracle::rng();
  for (int trial = 0; trial < 30; ++trial) {
    const auto ca = random_rule(gen, 2);
    const std::size_t n = 1 + gen() % 3;
    for (auto mode : {ComposedRule::Mode::Table, ComposedRule::Mode::Lazy}) {
      const auto c = compose(ca, n, mode);
      for (int s = 0; s < 20; ++s) {
        Word w(c.hull().size());
        for (auto& x : w) x = static_cast<Symbol>(gen() % 2);
        Word it = w;
        for (std::size_t i = 0; i < n; ++i) it = oracle::apply_word(ca, it);
        // The hull of tau^n may be shorter than n times the hull when offsets are absent.
        const auto full_width = n * (ca.hull().size() - 1) + 1;
        if (full_width == w.size()) CHECK(c.evaluate(w) == it.at(0));
      }
    }
  }
}

TEST_CASE("images of subshifts") {
  const Sft golden(bin, Window(0, 1), {{0, 0}, {0, 1}, {1, 0}});
  CHECK(equal_subshifts(image_presentation(CellularAutomaton::identity(bin), golden), presentation_of(golden)));
  const auto zero = image_presentation(CellularAutomaton::constant(bin, 0), Sft::full(bin));
  CHECK(equal_subshifts(zero, presentation_of(FiniteSubshift::from_orbits(bin, {PeriodicConfig::constant(0)}))));

  const auto img = image_presentation(and_rule(), Sft::full(bin));
  CHECK_FALSE(equal_subshifts(img, presentation_of(Sft::full(bin))));
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto src = oracle::sft_words(Sft::full(bin), n + 1);
    CHECK(oracle::graph_words(img, n) == oracle::image_words(and_rule(), src));
  }
}

TEST_CASE("property: image presentations match brute-force image words") {
  auto& gen = oracle::rng();
  for (int trial = 0; trial < 25; ++trial) {
    const auto ca = random_rule(gen, 2);
    std::set<Word> allowed;
    for (const auto& w : oracle::all_words(2, 2))
      if (gen() % 4) allowed.insert(w);
    const Sft src(bin, Window(0, 1), allowed);
    const auto img = image_presentation(ca, src);
    const std::size_t width = ca.hull().size();
    for (std::size_t n = 1; n <= 5; ++n)
      CHECK(oracle::graph_words(img, n) == oracle::image_words(ca, oracle::sft_words(src, n + width - 1)));
  }
}

TEST_CASE("restriction to subgroups") {
  const CellularAutomaton spread(bin, {0, 2}, {0, 1, 1, 0});
  CHECK(restrict_to_subgroup(spread, 2) == xor_rule());
  const CellularAutomaton id(bin, {0}, {0, 1});
  CHECK(restrict_to_subgroup(id, 3) == id);
  CHECK_THROWS_AS(restrict_to_subgroup(xor_rule(), 2), DomainError);
}

TEST_CASE("restriction factors the dynamics over cosets") {
  const CellularAutomaton spread(bin, {0, 2}, {0, 1, 1, 0});
  const auto plain = restrict_to_subgroup(spread, 2);
  auto& gen = oracle::rng();
  for (int trial = 0; trial < 40; ++trial) {
    Word cells(2 * (1 + gen() % 3));
    for (auto& c : cells) c = static_cast<Symbol>(gen() % 2);
    const PeriodicConfig x(cells);
    const PeriodicConfig y = spread.apply_to_periodic(x);
    for (std::int64_t c = 0; c < 2; ++c)
      CHECK(coset_component(y, 2, c) == plain.apply_to_periodic(coset_component(x, 2, c)));
    CHECK(interleave({coset_component(x, 2, 0), coset_component(x, 2, 1)}) == x);
  }
  // Window languages of the limit sets agree under re-indexing: both are full.
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto a = oracle::image_words(spread, oracle::sft_words(Sft::full(bin), n + 2));
    const auto b = oracle::image_words(plain, oracle::sft_words(Sft::full(bin), n + 1));
    CHECK(a.size() == (std::size_t{1} << n));
    CHECK(b.size() == (std::size_t{1} << n));
  }
}

TEST_CASE("Lagrange lifts") {
  CHECK(lagrange_lift(CellularAutomaton::constant(bin, 0), {0, 1}).is_zero());
  CHECK(lagrange_lift(CellularAutomaton::identity(bin), {0, 1}) == Polynomial::variable(0));
  const Polynomial t0 = Polynomial::variable(0), t1 = Polynomial::variable(1);
  const Polynomial x = lagrange_lift(xor_rule(), {0, 1});
  CHECK(x == t0 + t1 - Polynomial(2) * t0 * t1);
  for (const auto& w : oracle::all_words(2, 2))
    CHECK(x.evaluate(std::map<std::int64_t, Rational>{{0, w[0]}, {1, w[1]}}) == xor_rule().rule(w));
  CHECK_THROWS_AS(lagrange_lift(xor_rule(), {1, 1}), DomainError);
}
