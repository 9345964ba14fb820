#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <thread>

#include "oracles.hpp"
#include "symdyn/error.hpp"
#include "symdyn/spacetime.hpp"

using namespace symdyn;

namespace {

const FiniteAlphabet bin({"0", "1"});

Sft golden() { return Sft(bin, Window(0, 1), {{0, 0}, {0, 1}, {1, 0}}); }
Sft path() { return Sft(FiniteAlphabet({"a", "b", "c"}), Window(0, 1), {{0, 1}, {1, 2}}); }
CellularAutomaton xor_rule() { return CellularAutomaton(bin, {0, 1}, {0, 1, 1, 0}); }
CellularAutomaton and_rule() { return CellularAutomaton(bin, {0, 1}, {0, 0, 0, 1}); }
CellularAutomaton id_rule() { return CellularAutomaton::identity(bin); }

}  // namespace

TEST_CASE("cells of the space-time system") {
  const auto full = SpaceTimeSystem::build(Sft::full(bin), id_rule());
  for (std::int64_t i = 0; i <= 2; ++i)
    for (std::int64_t j = 0; j <= 1; ++j)
      CHECK(full.cell(i, j)->size() == (std::size_t{1} << (2 * (i + j) + 1)));
  CHECK(full.cell(0, 0)->size() == 2);

  const auto g = SpaceTimeSystem::build(golden(), id_rule());
  CHECK(g.cell(0, 0)->size() == 2);
  CHECK(g.cell(1, 0)->size() == 5);
  // Fibonacci counts of golden-mean words of length 2n + 1.
  CHECK(g.cell(2, 0)->size() == 13);

  const auto p = SpaceTimeSystem::build(path(), CellularAutomaton::identity(path().alphabet()));
  for (std::int64_t i = 0; i <= 2; ++i) CHECK(p.cell(i, 0)->empty());
}

TEST_CASE("the builder checks its hypotheses") {
  CHECK_THROWS_AS(SpaceTimeSystem::build(golden(), xor_rule()), DomainError);
  CHECK_THROWS_AS(SpaceTimeSystem::build(path(), id_rule()), DomainError);
}

TEST_CASE("commutation of p and q") {
  CHECK(check_commutation(SpaceTimeSystem::build(golden(), id_rule()), 0, 0).holds);
  const auto fx = SpaceTimeSystem::build(Sft::full(bin), xor_rule());
  for (std::int64_t i = 0; i <= 2; ++i)
    for (std::int64_t j = 0; j <= 2; ++j) {
      const auto r = check_commutation(fx, i, j);
      CHECK(r.holds);
      CHECK(r.checked == (std::size_t{1} << (2 * (i + j) + 5)));
    }
  CHECK(check_commutation(SpaceTimeSystem::build(Sft::full(bin), and_rule()), 1, 1).holds);
}

TEST_CASE("outer approximations") {
  const auto g = SpaceTimeSystem::build(golden(), id_rule());
  for (std::int64_t K = 0; K <= 3; ++K) CHECK(outer_intersection(g, 0, 0, K) == *g.cell(0, 0));

  const auto p = SpaceTimeSystem::build(path(), CellularAutomaton::identity(path().alphabet()));
  CHECK(outer_intersection(p, 0, 0, 0).size() == 3);
  CHECK(outer_intersection(p, 0, 0, 2).empty());

  const auto f = SpaceTimeSystem::build(Sft::full(bin), xor_rule());
  for (std::int64_t i = 0; i <= 1; ++i)
    for (std::int64_t j = 0; j <= 1; ++j) CHECK(outer_intersection(f, i, j, i + 2) == *f.cell(i, j));
}

TEST_CASE("property: outer approximations contain the cells and shrink in K") {
  auto& gen = oracle::rng();
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t k = 1 + gen() % 3;
    std::set<Word> allowed;
    for (const auto& w : oracle::all_words(k, 2))
      if (gen() % 3) allowed.insert(w);
    const Sft s(FiniteAlphabet::numeric(k), Window(0, 1), allowed);
    const auto sys = SpaceTimeSystem::build(s, CellularAutomaton::identity(s.alphabet()));
    WindowLanguage prev = outer_intersection(sys, 0, 0, 0);
    for (std::int64_t K = 1; K <= 4; ++K) {
      const auto cur = outer_intersection(sys, 0, 0, K);
      for (const auto& w : cur.words()) CHECK(prev.contains(w));
      for (const auto& w : sys.cell(0, 0)->words()) CHECK(cur.contains(w));
      prev = cur;
    }
  }
}

TEST_CASE("backward orbits") {
  const auto fx = SpaceTimeSystem::build(Sft::full(bin), xor_rule());
  const auto r = backward_orbit_search(fx, PeriodicConfig::constant(0), 3);
  REQUIRE(r.status == SearchStatus::Found);
  REQUIRE(r.orbit);
  CHECK(r.orbit->depth() == 3);
  CHECK(verify_backward_orbit(fx, *r.orbit));

  const CellularAutomaton zero(bin, {0}, {0, 0});
  const auto fz = SpaceTimeSystem::build(Sft::full(bin), zero);
  const auto nf = backward_orbit_search(fz, PeriodicConfig::constant(1), 1);
  CHECK(nf.status == SearchStatus::NotFound);
  REQUIRE(nf.certificate);
  CHECK(verify_no_preimage(fz, *nf.certificate));

  const auto fa = SpaceTimeSystem::build(Sft::full(bin), and_rule());
  const auto ones = backward_orbit_search(fa, PeriodicConfig::constant(1), 5);
  REQUIRE(ones.orbit);
  for (const auto& x : ones.orbit->periodic) CHECK(x == PeriodicConfig::constant(1));
  CHECK(verify_backward_orbit(fa, *ones.orbit));
}

TEST_CASE("a corrupted backward orbit is rejected") {
  const auto fx = SpaceTimeSystem::build(Sft::full(bin), xor_rule());
  auto r = backward_orbit_search(fx, PeriodicConfig(Word{0, 1}), 2);
  REQUIRE(r.orbit);
  REQUIRE(r.orbit->is_periodic());
  CHECK(verify_backward_orbit(fx, *r.orbit));
  r.orbit->periodic.back() = PeriodicConfig(Word{1, 1, 0});
  CHECK_FALSE(verify_backward_orbit(fx, *r.orbit));
}

TEST_CASE("starred grids") {
  const CellularAutomaton zero(bin, {0, 1}, {0, 0, 0, 0});
  const auto g0 = starred_grid(SpaceTimeSystem::build(Sft::full(bin), zero), 0, 2, 2);
  REQUIRE(g0.first_empty);
  CHECK(g0.first_empty->second == 1);
  CHECK(g0.cells[0][1].empty());

  for (const auto& ca : {id_rule(), xor_rule()}) {
    const auto g = starred_grid(SpaceTimeSystem::build(Sft::full(bin), ca), 0, 3, 3);
    CHECK_FALSE(g.first_empty);
    for (const auto& row : g.cells)
      for (const auto& c : row) CHECK_FALSE(c.empty());
  }
}

TEST_CASE("cells may be queried concurrently") {
  const auto sys = SpaceTimeSystem::build(Sft::full(bin), xor_rule());
  std::vector<std::size_t> sizes(4);
  std::vector<std::thread> ts;
  for (std::size_t t = 0; t < 4; ++t) ts.emplace_back([&, t] { sizes[t] = sys.cell(2, 1)->size(); });
  for (auto& t : ts) t.join();
  for (auto s : sizes) CHECK(s == (std::size_t{1} << 7));
}

TEST_CASE("searches honour cancellation") {
  const auto fx = SpaceTimeSystem::build(Sft::full(bin), xor_rule());
  SearchBudget b;
  b.cancel.cancel();
  const auto r = backward_orbit_search(fx, PeriodicConfig(Word{0, 1, 1}), 4, b);
  CHECK(r.status == SearchStatus::Exhausted);
}
