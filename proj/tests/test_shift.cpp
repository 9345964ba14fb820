#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "symdyn/automaton.hpp"
#include "symdyn/error.hpp"
#include "symdyn/shift.hpp"

using namespace symdyn;

namespace {

const FiniteAlphabet bin({"0", "1"});

Sft golden() { return Sft(bin, Window(0, 1), {{0, 0}, {0, 1}, {1, 0}}); }
Sft path() { return Sft(FiniteAlphabet({"a", "b", "c"}), Window(0, 1), {{0, 1}, {1, 2}}); }

SoficPresentation period_two() {
  SoficPresentation p(bin);
  p.add_vertex("even");
  p.add_vertex("odd");
  p.add_edge(0, 1, 0);
  p.add_edge(1, 0, 1);
  return p;
}

std::set<Word> as_set(const std::vector<Word>& ws) { return {ws.begin(), ws.end()}; }

Sft random_sft(std::mt19937_64& gen) {
  const std::size_t k = 1 + gen() % 3;
  const std::size_t d = 1 + gen() % 3;
  std::set<Word> allowed;
  for (const auto& w : oracle::all_words(k, d))
    if (gen() % 3) allowed.insert(w);
  return Sft(FiniteAlphabet::numeric(k), Window(0, static_cast<std::int64_t>(d) - 1), allowed);
}

}  // namespace

TEST_CASE("window languages of SFTs") {
  const auto g = window_language(golden(), Window(0, 2));
  CHECK(as_set(g.words()) == std::set<Word>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 0, 1}});
  CHECK(as_set(g.words()) == oracle::sft_words(golden(), 3));
  CHECK(window_language(Sft::full(bin), Window(0, 1)).size() == 4);
  CHECK(window_language(path(), Window(0, 0)).empty());
}

TEST_CASE("locally admissible sets may exceed the language") {
  const BallGroup z = BallGroup::integers(1);
  const auto a10 = local_window_set(golden(), z, 1, 0);
  CHECK(a10.window() == Window(-1, 1));
  CHECK(a10.size() == 5);
  const auto ab = local_window_set(path(), Window(0, 1));
  CHECK(as_set(ab.words()) == std::set<Word>{{0, 1}, {1, 2}});
  CHECK(is_empty(path()).empty);
  for (std::int64_t i = 0; i <= 2; ++i)
    CHECK(local_window_set(Sft::full(bin), z, i, 1).size() == (std::size_t{1} << (2 * (i + 1) + 1)));
}

TEST_CASE("emptiness") {
  const auto g = is_empty(golden());
  CHECK_FALSE(g.empty);
  REQUIRE(g.witness);
  CHECK(contains_periodic(presentation_of(golden()), *g.witness));
  CHECK(is_empty(path()).empty);
  CHECK_FALSE(is_empty(Sft::full(bin)).empty);
}

TEST_CASE("canonical presentations") {
  // Two presentations of the full shift.
  SoficPresentation twice(bin);
  twice.add_vertex("u");
  twice.add_vertex("v");
  for (std::uint32_t a = 0; a < 2; ++a)
    for (std::uint32_t b = 0; b < 2; ++b)
      for (Symbol s = 0; s < 2; ++s) twice.add_edge(a, b, s);
  const auto c1 = canonical_presentation(twice);
  const auto c2 = canonical_presentation(presentation_of(Sft::full(bin)));
  CHECK(c1 == c2);
  CHECK(c1.num_vertices() == 1);
  CHECK(c1.edges().size() == 2);
  CHECK(canonical_presentation(c1) == c1);
  CHECK(canonical_presentation(presentation_of(golden())).num_vertices() == 2);
}

TEST_CASE("subshift equality") {
  const auto g = presentation_of(golden());
  CHECK(equal_subshifts(g, g));
  CHECK_FALSE(equal_subshifts(presentation_of(Sft::full(bin)), g));
  // Double cover of the golden mean: each vertex split in two copies.
  SoficPresentation cover(bin);
  for (int i = 0; i < 4; ++i) cover.add_vertex("v" + std::to_string(i));
  // vertices 0,1 = last symbol 0; 2,3 = last symbol 1
  for (std::uint32_t from : {0u, 1u})
    for (std::uint32_t to : {0u, 1u}) cover.add_edge(from, to, 0);
  for (std::uint32_t from : {0u, 1u}) cover.add_edge(from, from + 2, 1);
  for (std::uint32_t from : {2u, 3u}) cover.add_edge(from, from - 2, 0);
  for (std::size_t n = 1; n <= 8; ++n) CHECK(oracle::graph_words(cover, n) == oracle::sft_words(golden(), n));
  CHECK(equal_subshifts(cover, g));
  CHECK_THROWS_AS(equal_subshifts(g, presentation_of(path())), DomainError);
}

TEST_CASE("property: language comparisons agree with brute-force words") {
  auto& gen = oracle::rng();
  for (int trial = 0; trial < 40; ++trial) {
    const Sft a = random_sft(gen);
    const auto pa = presentation_of(a);
    for (std::size_t n = 1; n <= 5; ++n) {
      CHECK(as_set(words_of_length(pa, n)) == oracle::sft_words(a, n));
      CHECK(oracle::graph_words(canonical_presentation(pa), n) == oracle::sft_words(a, n));
    }
    CHECK(is_empty(a).empty == oracle::sft_words(a, 1).empty());
    // Removing a pattern gives a subshift.
    std::set<Word> fewer = a.allowed();
    if (!fewer.empty()) fewer.erase(fewer.begin());
    const Sft b(a.alphabet(), a.window(), fewer);
    CHECK(is_subshift_of(presentation_of(b), pa));
  }
}

TEST_CASE("mixing") {
  CHECK(is_mixing(Sft::full(bin)).mixing);
  CHECK(is_mixing(golden()).mixing);
  const auto m = is_mixing(period_two());
  CHECK_FALSE(m.mixing);
  CHECK(m.reason == MixingReason::Periodic);
  CHECK(m.period == 2);
  CHECK_THROWS_AS(is_mixing(path()), DomainError);
}

TEST_CASE("finite subshifts as SFTs") {
  const auto orbit2 = FiniteSubshift::from_orbits(bin, {PeriodicConfig(Word{0, 1})});
  const Sft s2 = finite_to_sft(orbit2);
  CHECK(s2.window() == Window(-1, 1));
  CHECK(s2.allowed() == std::set<Word>{{0, 1, 0}, {1, 0, 1}});
  CHECK(equal_subshifts(presentation_of(s2), presentation_of(orbit2)));

  const auto zero = FiniteSubshift::from_orbits(bin, {PeriodicConfig::constant(0)});
  const Sft s0 = finite_to_sft(zero);
  CHECK(s0.window() == Window(-1, 1));
  CHECK(s0.allowed() == std::set<Word>{{0, 0, 0}});

  const auto orbit3 = FiniteSubshift::from_orbits(bin, {PeriodicConfig(Word{0, 0, 1})});
  const Sft s3 = finite_to_sft(orbit3);
  CHECK(s3.window() == Window(-1, 2));
  const auto c3 = canonical_presentation(presentation_of(s3));
  CHECK(c3.num_vertices() == 3);
  CHECK(c3.edges().size() == 3);

  CHECK_THROWS_AS(finite_to_sft(FiniteSubshift(bin, {PeriodicConfig(Word{0, 0, 1})})), DomainError);
}

TEST_CASE("sub-finite-type presentations") {
  for (const auto& seed : {PeriodicConfig(Word{0, 1}), PeriodicConfig::constant(0), PeriodicConfig(Word{0, 0, 1})}) {
    const auto fs = FiniteSubshift::from_orbits(bin, {seed});
    const auto sft = sub_finite_type_presentation(fs);
    CHECK(sft.auxiliary.alphabet().size() == fs.size());
    CHECK(equal_subshifts(image_presentation(sft.projection, sft.auxiliary), presentation_of(fs)));
    // x -> x(0) on the auxiliary points is a bijection onto the members.
    const auto pts = periodic_points(presentation_of(sft.auxiliary), seed.period());
    std::set<PeriodicConfig> images;
    for (const auto& y : pts) images.insert(sft.projection.apply_to_periodic(y));
    CHECK(pts.size() == fs.size());
    CHECK(images.size() == fs.size());
  }
}

TEST_CASE("periodic points") {
  const auto pts = periodic_points(presentation_of(golden()), 3);
  // Words of length 3 avoiding 11 cyclically: 000, 001, 010, 100.
  CHECK(pts.size() == 4);
  CHECK(periodic_points(period_two(), 1).empty());
  CHECK(periodic_points(period_two(), 2).size() == 2);
}
