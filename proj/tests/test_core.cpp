#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "symdyn/core.hpp"
#include "symdyn/error.hpp"
#include "symdyn/exact.hpp"
#include "symdyn/generated_config.hpp"

using namespace symdyn;

TEST_CASE("balls of Z") {
  const auto g = BallGroup::integers(1);
  CHECK(g.ball_interval(0) == Window(0, 0));
  CHECK(g.ball_interval(3) == Window(-3, 3));
  CHECK_THROWS_AS(g.ball_interval(-1), DomainError);
}

TEST_CASE("balls of Z^2 match the product-set expansion") {
  const auto g = BallGroup::lattice(2, 1);
  const Box b = g.ball(2);
  // Oracle: M^2 = M + M as a set of points.
  std::set<std::vector<std::int64_t>> sum;
  for (std::int64_t a = -1; a <= 1; ++a)
    for (std::int64_t b2 = -1; b2 <= 1; ++b2)
      for (std::int64_t c = -1; c <= 1; ++c)
        for (std::int64_t d = -1; d <= 1; ++d) sum.insert({a + c, b2 + d});
  const auto pts = b.elements();
  CHECK(std::set<std::vector<std::int64_t>>(pts.begin(), pts.end()) == sum);
  CHECK(b.size() == 25);
}

TEST_CASE("pattern restriction and translation") {
  const Pattern p = Pattern::at(0, {0, 1, 0});
  CHECK(p.restrict(Window(0, 1)).values() == Word{0, 1});
  CHECK(p.restrict(p.window()) == p);
  CHECK(Pattern::at(-1, {0, 1, 0, 1}).restrict(Window(1, 2)).values() == Word{0, 1});
  CHECK_THROWS_AS(p.restrict(Window(2, 3)), DomainError);

  const Pattern q = Pattern::at(0, {0, 1});
  CHECK(q.translate(1) == Pattern::at(1, {0, 1}));
  CHECK(q.translate(0) == q);
  CHECK(q.translate(-2).translate(2) == q);
  CHECK_THROWS_AS(Pattern(Window(0, 2), Word{0, 1}), DomainError);
}

TEST_CASE("periodic configurations") {
  const PeriodicConfig x(Word{0, 1});
  CHECK(x(5) == 1);
  CHECK(x(-1) == 1);
  CHECK(PeriodicConfig(Word{0, 1, 0, 1}) == x);
  CHECK(PeriodicConfig(Word{0, 1, 0, 1}).least_period() == 2);
  CHECK(x.translate(1) == PeriodicConfig(Word{1, 0}));
  CHECK(x.with_period(6).cells() == Word{0, 1, 0, 1, 0, 1});
  CHECK_THROWS_AS(x.with_period(3), DomainError);
  CHECK(shift_orbit(PeriodicConfig(Word{0, 0, 1})).size() == 3);
  CHECK(shift_orbit(PeriodicConfig::constant(1)).size() == 1);
}

TEST_CASE("property: translation is a group action on periodic configurations") {
  auto& gen = oracle::rng();
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t p = 1 + gen() % 6;
    Word cells(p);
    for (auto& c : cells) c = static_cast<Symbol>(gen() % 3);
    const PeriodicConfig x(cells);
    const std::int64_t a = static_cast<std::int64_t>(gen() % 11) - 5;
    const std::int64_t b = static_cast<std::int64_t>(gen() % 11) - 5;
    CHECK(x.translate(a).translate(b) == x.translate(a + b));
    CHECK(x.translate(static_cast<std::int64_t>(p)) == x);
    for (std::int64_t n = -7; n <= 7; ++n) CHECK(x.translate(a)(n) == x(n - a));
  }
}

TEST_CASE("generated configurations") {
  using G = GeneratedConfig<Rational>;
  const auto c = G::constant(Rational(1));
  // Zero below m = 0, c above.
  const G split(0, {}, G::Constant{Rational(0)}, G::Delegate{c, 0});
  CHECK(split(-3) == 0);
  CHECK(split(7) == 1);
  // d(n+1) = d(n) + 1 from d(0) = 0.
  const G counter(0, {Rational(0)}, G::Undefined{},
                  G::Recurrence{1, [](std::int64_t, std::span<const Rational> prev) { return prev[0] + 1; }});
  CHECK(counter(4) == 4);
  CHECK_THROWS_AS(counter(-1), RangeError);
}

TEST_CASE("rationals and polynomials") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("x"), DomainError);

  const Polynomial t0 = Polynomial::variable(0), t1 = Polynomial::variable(1);
  const Polynomial r = t1 - t0 * t0;
  CHECK(r.to_string() == "-t0^2 + t1");
  CHECK(parse_polynomial(r.to_string()) == r);
  CHECK(parse_polynomial("1*t1^1 - t0^2") == r);
  CHECK(r.shift_variables(2) == Polynomial::variable(3) - Polynomial::variable(2).pow(2));
  CHECK(r.evaluate(std::map<std::int64_t, Rational>{{0, 1}, {1, 1}}) == 0);
  CHECK(r.substitute({{1, t0}}) == t0 - t0 * t0);
  CHECK((r - r).is_zero());
  CHECK_THROWS_AS(parse_polynomial("t0 +"), DomainError);
}

TEST_CASE("property: polynomial ring laws and printing round trip") {
  auto& gen = oracle::rng();
  auto random_poly = [&] {
    Polynomial p;
    const int terms = 1 + static_cast<int>(gen() % 4);
    for (int i = 0; i < terms; ++i) {
      Monomial m;
      for (std::int64_t v = -1; v <= 1; ++v)
        if (gen() % 2) m.push_back({v, static_cast<std::uint32_t>(1 + gen() % 3)});
      p.add_term(m, Rational(static_cast<long>(gen() % 9) - 4, static_cast<unsigned long>(1 + gen() % 3)));
    }
    return p;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    INFO(a.to_string(), " reparsed ", parse_polynomial(a.to_string()).to_string());
    CHECK(parse_polynomial(a.to_string()) == a);
    const std::map<std::int64_t, Rational> pt{{-1, Rational(2, 3)}, {0, Rational(-1)}, {1, Rational(5, 2)}};
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
  }
}
