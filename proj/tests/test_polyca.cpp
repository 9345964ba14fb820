#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "symdyn/error.hpp"
#include "symdyn/polyca.hpp"

using namespace symdyn;

namespace {

using G = RationalConfig;

Polynomial t(std::int64_t i) { return Polynomial::variable(i); }

// tau^n(x) on [lo, hi] for tau(x)(k) = x(k+1) - x(k)^2, written out by hand.
std::vector<Rational> forward(const std::function<Rational(std::int64_t)>& x, std::size_t n, std::int64_t lo,
                              std::int64_t hi) {
  std::vector<Rational> row;
  for (std::int64_t k = lo; k <= hi + static_cast<std::int64_t>(n); ++k) row.push_back(x(k));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<Rational> next;
    for (std::size_t i = 0; i + 1 < row.size(); ++i) next.push_back(row[i + 1] - row[i] * row[i]);
    row = std::move(next);
  }
  return row;
}

std::function<Rational(std::int64_t)> values_of(const RationalConfigPtr& c) {
  return [c](std::int64_t k) { return (*c)(k); };
}

Rational random_rational(std::mt19937_64& gen) {
  Rational q(static_cast<long>(gen() % 11) - 5, static_cast<unsigned long>(1 + gen() % 4));
  q.canonicalize();
  return q;
}

// Finitely supported c: given values on [lo, hi], zero elsewhere.
RationalConfigPtr pattern(std::int64_t lo, std::vector<Rational> values) {
  return std::make_shared<const G>(lo, std::move(values), G::Constant{Rational(0)}, G::Constant{Rational(0)});
}

}  // namespace

TEST_CASE("exact evaluation") {
  const auto r = riccati_rule();
  CHECK(eval_rule(r, std::vector<Rational>{1, 1}) == 0);
  CHECK(eval_rule(r, std::vector<Rational>{0, 0}) == 0);
  CHECK(eval_rule(r, std::vector<Rational>{Rational(1, 2), 3}) == Rational(11, 4));
  CHECK_THROWS_AS(eval_rule(r, std::vector<ExactScalar>{ExactScalar::infinity(), Rational(1)}), DomainError);

  const auto proj = square_plus_one(PolyMode::Projective);
  CHECK(eval_rule(proj, std::vector<ExactScalar>{ExactScalar::infinity()}).is_infinity());
  CHECK(eval_rule(proj, std::vector<ExactScalar>{Rational(2)}) == ExactScalar(Rational(5)));
  CHECK(ExactScalar::parse("inf").is_infinity());
  CHECK(ExactScalar::parse("-3/6") == ExactScalar(Rational(-1, 2)));
  CHECK_THROWS_AS(PolyRule({0, 1}, t(0), PolyMode::Projective), DomainError);
}

TEST_CASE("the nu family") {
  const auto f = nu_family(4);
  CHECK(f.nu[0] == -(t(0) * t(0)));
  const Polynomial d = t(1) - t(0) * t(0);
  CHECK(f.nu[1] == -(t(1) * t(1)) - d * d);
  for (std::size_t n = 1; n <= 4; ++n) {
    // Oracle: compose the rule with itself symbolically by substitution.
    Polynomial mu = t(0);
    for (std::size_t s = 0; s < n; ++s) {
      std::map<std::int64_t, Polynomial> sub;
      for (std::int64_t v = 0; v <= static_cast<std::int64_t>(s); ++v) sub[v] = t(v + 1) - t(v) * t(v);
      mu = mu.substitute(sub);
    }
    CHECK(mu == f.mu[n - 1]);
    CHECK((f.mu[n - 1] - t(static_cast<std::int64_t>(n)) - f.nu[n - 1]).is_zero());
    std::map<std::int64_t, Rational> origin;
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) origin[v] = 0;
    CHECK(f.nu[n - 1].evaluate(origin) == 0);
  }
  CHECK_THROWS_AS(nu_family(7, 100), ResourceError);
}

TEST_CASE("property: the nu recursion agrees with direct iteration") {
  auto& gen = oracle::rng();
  const auto fam = nu_family(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + gen() % 8;
    std::vector<Rational> pt(n + 1);
    for (auto& q : pt) q = random_rational(gen);
    const auto direct = forward([&](std::int64_t k) { return pt[static_cast<std::size_t>(k)]; }, n, 0, 0);
    const std::vector<Rational> head(pt.begin(), pt.begin() + static_cast<long>(n));
    CHECK(direct[0] == pt[n] + nu_eval(n, head));
    if (n <= 5) {
      std::map<std::int64_t, Rational> env;
      for (std::size_t i = 0; i < n; ++i) env[static_cast<std::int64_t>(i)] = pt[i];
      CHECK(fam.nu[n - 1].evaluate(env) == nu_eval(n, head));
    }
  }
}

TEST_CASE("density ladders") {
  const auto one = omega_density_witness(G::constant(Rational(1)), 0, 2);
  REQUIRE(one.d.size() == 3);
  for (std::int64_t k = -3; k <= 5; ++k) CHECK((*one.d[0])(k) == (k >= 0 ? 1 : 0));
  CHECK(verify_density_ladder(one, Window(0, 2)));
  for (std::size_t k = 1; k <= 2; ++k) {
    CHECK(forward(values_of(one.d[k]), k, 0, 2) == std::vector<Rational>{1, 1, 1});
    CHECK((*one.d[k])(0) == 0);
  }

  const auto zero = omega_density_witness(G::constant(Rational(0)), -4, 3);
  for (const auto& d : zero.d)
    for (std::int64_t k = -6; k <= 6; ++k) CHECK((*d)(k) == 0);

  const auto pat = omega_density_witness(pattern(0, {1, 2, 3}), 0, 3);
  CHECK(verify_density_ladder(pat, Window(0, 2)));
  CHECK(forward(values_of(pat.d[3]), 3, 0, 2) == std::vector<Rational>{1, 2, 3});
}

TEST_CASE("shifted preimages") {
  const auto z = shifted_preimage(G::constant(Rational(0)), 2);
  for (std::int64_t k = -4; k <= 6; ++k) CHECK((*z)(k) == 0);

  const auto one = shifted_preimage(G::constant(Rational(1)), 1);
  CHECK((*one)(0) == 1);
  CHECK((*one)(1) == 2);
  CHECK(forward(values_of(one), 1, 0, 0) == std::vector<Rational>{1});
}

TEST_CASE("property: shifted preimages pass forward iteration") {
  auto& gen = oracle::rng();
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> vals(7);
    for (auto& q : vals) q = random_rational(gen);
    const auto c = pattern(-3, vals);
    const std::size_t n = 1 + gen() % 3;
    const auto d = shifted_preimage(c, n);
    for (std::int64_t k = -3; k <= 0; ++k) CHECK((*d)(k) == (*c)(k));
    const auto lo = 1 - static_cast<std::int64_t>(n);
    const auto img = forward(values_of(d), n, lo, 3);
    for (std::int64_t k = lo; k <= 3; ++k) CHECK(img[static_cast<std::size_t>(k - lo)] == (*c)(k));
  }
}

TEST_CASE("recurrent witnesses") {
  const auto z = recurrent_witness(G::constant(Rational(0)), 1, 2);
  for (std::int64_t k = -10; k <= 10; ++k) CHECK((*z.d)(k) == 0);
  CHECK(check_return(values_of(z.d), 2).passed);

  const auto r = recurrent_witness(G::constant(Rational(1)), 1, 1);
  for (std::int64_t k = -5; k <= 6; ++k) CHECK((*r.d)(k) == 1);
  const auto c1 = check_return(values_of(r.d), 1);
  CHECK(c1.power == 9);
  CHECK(c1.window == Window(-2, 3));
  CHECK(c1.passed);
  // Independent replay of the power-9 return.
  CHECK(forward(values_of(r.d), 9, -2, 3) == std::vector<Rational>(6, Rational(1)));
}

TEST_CASE("the not-in-image proof") {
  const auto proof = not_in_image_certificate();
  CHECK(proof.steps.size() == 4);
  const auto ok = replay(proof);
  CHECK(ok.ok);
  CHECK(std::all_of(ok.step_ok.begin(), ok.step_ok.end(), [](bool b) { return b; }));

  auto bad = proof;
  REQUIRE(bad.steps[1].kind == StepKind::SquareCompletion);
  bad.steps[1].offset = Rational(1, 2);
  const auto fail = replay(bad);
  CHECK_FALSE(fail.ok);
  CHECK_FALSE(fail.step_ok[1]);
  CHECK_FALSE(fail.failure.empty());

  auto bad_disc = proof;
  bad_disc.steps[0].claimed = Rational(3);
  CHECK_FALSE(replay(bad_disc).ok);

  const auto w = recurrent_witness(G::constant(Rational(1)), 1, 1);
  CHECK(not_in_image_consistency(proof, values_of(w.d)));
  CHECK_FALSE(not_in_image_consistency(bad, values_of(w.d)));
  CHECK_FALSE(not_in_image_consistency(proof, [](std::int64_t) { return Rational(0); }));
}

TEST_CASE("the backward chain drifts as the proof states") {
  // b(k+1) = 1 + b(k)^2 from any rational start grows by at least 3/4 per step.
  auto& gen = oracle::rng();
  for (int trial = 0; trial < 30; ++trial) {
    Rational b = random_rational(gen);
    for (int s = 0; s < 5; ++s) {
      const Rational next = 1 + b * b;
      CHECK(next - b >= Rational(3, 4));
      CHECK(next >= 1);
      b = next;
    }
  }
}

TEST_CASE("interval iteration") {
  const auto it = interval_iteration(square_plus_one(), 4, std::nullopt);
  REQUIRE(it.enclosures.size() == 4);
  const std::vector<Rational> expected{1, 2, 5, 26};
  for (std::size_t n = 0; n < 4; ++n) {
    CHECK(it.enclosures[n].lower == expected[n]);
    CHECK_FALSE(it.enclosures[n].upper);
  }

  const auto probe = interval_iteration(square_plus_one(), 4, Rational(1000000));
  // Oracle: first n with a_n > 10^6 by direct iteration.
  Rational a = 0;
  std::size_t first = 0;
  for (std::size_t n = 1; n <= 20 && !first; ++n) {
    a = a * a + 1;
    if (a > 1000000) first = n;
  }
  REQUIRE(probe.empty_at);
  CHECK(*probe.empty_at == first);
  CHECK(first == 7);

  const auto proj = interval_iteration(square_plus_one(PolyMode::Projective), 5, std::nullopt);
  REQUIRE(proj.projective);
  CHECK(proj.projective->omega_is_infinity);
  CHECK(proj.projective->non_nilpotent);
  CHECK(proj.projective->orbit_of_zero == std::vector<Rational>{1, 2, 5, 26, 677});
  CHECK(replay(square_plus_one(PolyMode::Projective), *proj.projective));
  auto broken = *proj.projective;
  broken.orbit_of_zero[2] = 6;
  CHECK_FALSE(replay(square_plus_one(PolyMode::Projective), broken));

  CHECK_THROWS_AS(interval_iteration(riccati_rule(), 2, std::nullopt), DomainError);
}

TEST_CASE("property: enclosures contain sampled images") {
  auto& gen = oracle::rng();
  const auto rule = square_plus_one();
  for (int trial = 0; trial < 40; ++trial) {
    Rational lo = random_rational(gen), hi = random_rational(gen);
    if (hi < lo) std::swap(lo, hi);
    const IntervalEnclosure in{lo, hi, false};
    const auto out = image_of_interval(rule, in);
    for (int s = 0; s <= 8; ++s) {
      const Rational x = lo + (hi - lo) * Rational(s, 8);
      CHECK(out.contains(ExactScalar(x * x + 1)));
    }
  }
}

TEST_CASE("table lifts") {
  const FiniteAlphabet bin({"0", "1"});
  const CellularAutomaton xr(bin, {0, 1}, {0, 1, 1, 0});
  const auto lx = lift_check(xr, {0, 1});
  CHECK(lx.agrees);
  CHECK(lx.inputs_checked == 4);
  CHECK(eval_rule(lx.rule, std::vector<Rational>{1, 1}) == 0);

  const auto lz = lift_check(CellularAutomaton::constant(bin, 0), {0, 1});
  CHECK(lz.agrees);
  for (const auto& w : oracle::all_words(2, 1)) CHECK(eval_rule(lz.rule, std::vector<Rational>{w[0]}) == 0);

  // Three symbols: 2 marks a cell after a 1; the rule keeps that shape.
  const FiniteAlphabet three({"0", "1", "2"});
  std::vector<Symbol> table(9);
  for (const auto& w : oracle::all_words(3, 2)) table[w[0] * 3 + w[1]] = static_cast<Symbol>(w[0] == 1 ? 2 : w[1] % 2);
  const CellularAutomaton g3(three, {0, 1}, table);
  const auto l3 = lift_check(g3, {0, 1, 2});
  CHECK(l3.agrees);
  CHECK(l3.inputs_checked == 9);
  for (const auto& w : oracle::all_words(3, 2))
    CHECK(eval_rule(l3.rule, std::vector<Rational>{w[0], w[1]}) == Rational(table[w[0] * 3 + w[1]]));
}
