#include "symdyn/polyca.hpp"

#include <algorithm>
#include <map>

#include "symdyn/error.hpp"

namespace symdyn {

// --- scalars and rules --------------------------------------------------------------

const Rational& ExactScalar::value() const {
  if (!value_) throw RangeError("the point at infinity has no rational value");
  return *value_;
}

std::string ExactScalar::to_string() const { return value_ ? symdyn::to_string(*value_) : "inf"; }

ExactScalar ExactScalar::parse(const std::string& text) {
  if (text == "inf" || text == "∞") return infinity();
  return ExactScalar(parse_rational(text));
}

const char* to_string(PolyMode m) { return m == PolyMode::Affine ? "affine" : "projective"; }

PolyMode parse_poly_mode(const std::string& text) {
  if (text == "affine") return PolyMode::Affine;
  if (text == "projective") return PolyMode::Projective;
  throw DomainError("unknown polynomial rule mode '" + text + "'");
}

PolyRule::PolyRule(std::vector<std::int64_t> mem, Polynomial p, PolyMode m)
    : memory(std::move(mem)), poly(std::move(p)), mode(m) {
  if (memory.empty()) throw DomainError("polynomial rule: memory must be nonempty");
  std::sort(memory.begin(), memory.end());
  if (std::adjacent_find(memory.begin(), memory.end()) != memory.end())
    throw DomainError("polynomial rule: repeated memory offset");
  for (auto g : poly.variables())
    if (!std::binary_search(memory.begin(), memory.end(), g))
      throw DomainError("polynomial rule: variable t" + std::to_string(g) + " is not in the memory");
  if (mode == PolyMode::Projective && memory.size() != 1)
    throw DomainError("polynomial rule: projective mode needs a unary rule");
}

Window PolyRule::hull() const { return Window(memory.front(), memory.back()); }

PolyRule riccati_rule() {
  return PolyRule({0, 1}, Polynomial::variable(1) - Polynomial::variable(0).pow(2));
}

PolyRule square_plus_one(PolyMode mode) {
  return PolyRule({0}, Polynomial::variable(0).pow(2) + Polynomial(Rational(1)), mode);
}

Rational eval_rule(const PolyRule& rule, const std::vector<Rational>& values) {
  if (values.size() != rule.memory.size()) throw DomainError("eval_rule: one value per memory offset expected");
  std::map<std::int64_t, Rational> at;
  for (std::size_t i = 0; i < values.size(); ++i) at.emplace(rule.memory[i], values[i]);
  return rule.poly.evaluate(at);
}

ExactScalar eval_rule(const PolyRule& rule, const std::vector<ExactScalar>& values) {
  if (values.size() != rule.memory.size()) throw DomainError("eval_rule: one value per memory offset expected");
  const bool any_inf = std::any_of(values.begin(), values.end(), [](const auto& v) { return v.is_infinity(); });
  if (any_inf) {
    if (rule.mode == PolyMode::Affine) throw DomainError("eval_rule: infinity is not a point of the affine line");
    // Homogenized unary rule at (1 : 0).
    if (rule.poly.total_degree() >= 1) return ExactScalar::infinity();
    return ExactScalar(rule.poly.coefficient({}));
  }
  std::vector<Rational> plain;
  plain.reserve(values.size());
  for (const auto& v : values) plain.push_back(v.value());
  return ExactScalar(eval_rule(rule, plain));
}

std::vector<Rational> iterate_on_window(const PolyRule& rule, const ValueSource& x, std::size_t n, const Window& w) {
  if (rule.mode != PolyMode::Affine) throw DomainError("iterate_on_window: affine rules only");
  const Window h = rule.hull();
  const auto nn = static_cast<std::int64_t>(n);
  std::int64_t lo = w.lo() + nn * h.lo();
  std::int64_t hi = w.hi() + nn * h.hi();
  std::vector<Rational> cur;
  cur.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t k = lo; k <= hi; ++k) cur.push_back(x(k));
  std::vector<Rational> args(rule.memory.size());
  for (std::size_t step = 0; step < n; ++step) {
    const std::int64_t nlo = lo - h.lo(), nhi = hi - h.hi();
    std::vector<Rational> next;
    next.reserve(static_cast<std::size_t>(nhi - nlo + 1));
    for (std::int64_t k = nlo; k <= nhi; ++k) {
      for (std::size_t i = 0; i < rule.memory.size(); ++i)
        args[i] = cur[static_cast<std::size_t>(k + rule.memory[i] - lo)];
      next.push_back(eval_rule(rule, args));
    }
    cur = std::move(next);
    lo = nlo;
    hi = nhi;
  }
  return cur;
}

Polynomial symbolic_power(const PolyRule& rule, std::size_t n, std::size_t term_budget) {
  if (n == 0) throw DomainError("symbolic_power: n must be positive");
  Polynomial p = rule.poly;
  for (std::size_t k = 1; k < n; ++k) {
    std::map<std::int64_t, Polynomial> subs;
    for (auto g : p.variables()) subs.emplace(g, rule.poly.shift_variables(g));
    p = p.substitute(subs);
    if (p.num_terms() > term_budget)
      throw ResourceError("symbolic_power: " + std::to_string(p.num_terms()) + " terms at power " +
                          std::to_string(k + 1));
  }
  return p;
}

// --- nu family --------------------------------------------------------------------------

NuFamily nu_family(std::size_t n, std::size_t term_budget) {
  if (n == 0) throw DomainError("nu_family: n must be positive");
  NuFamily f;
  f.nu.push_back(-Polynomial::variable(0).pow(2));
  f.mu.push_back(Polynomial::variable(1) + f.nu.back());
  for (std::size_t k = 1; k < n; ++k) {
    Polynomial next = f.nu.back().shift_variables(1) - f.mu.back().pow(2);
    if (next.num_terms() > term_budget)
      throw ResourceError("nu_family: nu_" + std::to_string(k + 1) + " has " + std::to_string(next.num_terms()) +
                          " terms, budget " + std::to_string(term_budget));
    f.mu.push_back(Polynomial::variable(static_cast<std::int64_t>(k + 1)) + next);
    f.nu.push_back(std::move(next));
  }
  return f;
}

Rational nu_eval(std::size_t n, const std::vector<Rational>& t) {
  if (n == 0 || t.size() != n) throw DomainError("nu_eval: need exactly n arguments");
  // row[s] = nu_k(t_s, ..., t_{s+k-1})
  std::vector<Rational> row(n);
  for (std::size_t s = 0; s < n; ++s) row[s] = -(t[s] * t[s]);
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t s = 0; s + k < n; ++s) {
      const Rational m = t[s + k] + row[s];
      row[s] = row[s + 1] - m * m;
    }
  }
  return row[0];
}

// --- witnesses ------------------------------------------------------------------------

DensityLadder omega_density_witness(const RationalConfigPtr& c, std::int64_t m, std::size_t K) {
  DensityLadder ladder;
  ladder.m = m;
  ladder.d.push_back(std::make_shared<const RationalConfig>(m, std::vector<Rational>{},
                                                            RationalConfig::Constant{Rational(0)},
                                                            RationalConfig::Delegate{c, 0}));
  for (std::size_t k = 0; k < K; ++k) {
    RationalConfigPtr prev = ladder.d.back();
    RationalConfig::Recurrence rec{1, [prev](std::int64_t idx, std::span<const Rational> before) {
                                     return Rational(prev->at(idx - 1) + before[0] * before[0]);
                                   }};
    ladder.d.push_back(std::make_shared<const RationalConfig>(m, std::vector<Rational>{Rational(0)},
                                                              RationalConfig::Constant{Rational(0)}, std::move(rec)));
  }
  return ladder;
}

bool verify_density_ladder(const DensityLadder& ladder, const Window& w) {
  const auto target = ladder.d[0]->fresh_copy();
  std::vector<Rational> want;
  for (std::int64_t k = w.lo(); k <= w.hi(); ++k) want.push_back(target->at(k));
  const PolyRule rule = riccati_rule();
  for (std::size_t k = 0; k < ladder.d.size(); ++k) {
    const auto dk = ladder.d[k]->fresh_copy();
    if (iterate_on_window(rule, [&](std::int64_t i) { return dk->at(i); }, k, w) != want) return false;
  }
  return true;
}

RationalConfigPtr shifted_preimage(const RationalConfigPtr& c, std::size_t n, std::size_t bit_budget) {
  if (n == 0) throw DomainError("shifted_preimage: n must be positive");
  const auto nn = static_cast<std::int64_t>(n);
  RationalConfig::Recurrence rec{n, [c, n, nn, bit_budget](std::int64_t k, std::span<const Rational> before) {
                                   Rational v = c->at(k - nn) -
                                                nu_eval(n, std::vector<Rational>(before.begin(), before.end()));
                                   if (bit_size(v) > bit_budget)
                                     throw ResourceError("shifted preimage: value at index " + std::to_string(k) +
                                                         " needs " + std::to_string(bit_size(v)) +
                                                         " bits, budget " + std::to_string(bit_budget));
                                   return v;
                                 }};
  return std::make_shared<const RationalConfig>(1, std::vector<Rational>{}, RationalConfig::Delegate{c, 0},
                                                std::move(rec));
}

namespace {
std::int64_t pow3(std::size_t e) {
  std::int64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= 3;
  return r;
}
}  // namespace

RecurrentWitness recurrent_witness(const RationalConfigPtr& c, std::size_t n0, std::size_t N,
                                   std::size_t bit_budget) {
  if (n0 < 1 || N < n0) throw DomainError("recurrent_witness: need 1 <= n0 <= N");
  if (N > 30) throw ResourceError("recurrent_witness: N too large for 64-bit windows");
  RationalConfigPtr d = c;
  for (std::size_t n = n0; n <= N; ++n) {
    const std::int64_t s = 2 * pow3(n);
    const auto L = static_cast<std::size_t>(pow3(n + 1));
    // c'(k) = d_n(k + s); d' = shifted preimage of c'; d_{n+1}(k) = d'(k - s).
    auto shifted = std::make_shared<const RationalConfig>(0, std::vector<Rational>{},
                                                          RationalConfig::Delegate{d, s},
                                                          RationalConfig::Delegate{d, s});
    auto pre = shifted_preimage(shifted, L, bit_budget);
    d = std::make_shared<const RationalConfig>(0, std::vector<Rational>{}, RationalConfig::Delegate{pre, -s},
                                               RationalConfig::Delegate{pre, -s});
  }
  return RecurrentWitness{n0, N, d};
}

ReturnCheck check_return(const ValueSource& d, std::size_t n) {
  ReturnCheck r;
  r.n = n;
  r.power = static_cast<std::size_t>(pow3(n + 1));
  const std::int64_t h = pow3(n);
  r.window = Window(-h + 1, h);
  try {
    const auto lhs = iterate_on_window(riccati_rule(), d, r.power, r.window);
    std::vector<Rational> rhs;
    for (std::int64_t k = r.window.lo(); k <= r.window.hi(); ++k) rhs.push_back(d(k));
    r.passed = lhs == rhs;
  } catch (const ResourceError& e) {
    r.passed = false;
    r.resource_note = e.what();
  }
  return r;
}

// --- proof objects ----------------------------------------------------------------------

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::Discriminant: return "discriminant";
    case StepKind::SquareCompletion: return "square-completion";
    case StepKind::LowerBound: return "lower-bound";
    case StepKind::ChainLength: return "chain-length";
  }
  return "?";
}

StepKind parse_step_kind(const std::string& text) {
  for (auto k : {StepKind::Discriminant, StepKind::SquareCompletion, StepKind::LowerBound, StepKind::ChainLength})
    if (text == to_string(k)) return k;
  throw DomainError("unknown proof step kind '" + text + "'");
}

ProofObject not_in_image_certificate() {
  const Polynomial t = Polynomial::variable(0);
  const Polynomial one(Rational(1));
  ProofObject p;
  p.title = "the configuration equal to 1 on every k <= 0 has no preimage under t1 - t0^2";

  ProofStep disc;
  disc.kind = StepKind::Discriminant;
  disc.lhs = t.pow(2) - t + one;
  disc.coefficients = {Rational(1), Rational(-1), Rational(1)};
  disc.claimed = Rational(-3);
  disc.conclusion = "t^2 - t + 1 has discriminant -3 < 0, so b = 1 + b^2 has no real solution";
  p.steps.push_back(disc);

  ProofStep sq;
  sq.kind = StepKind::SquareCompletion;
  sq.lhs = one + t.pow(2) - t;
  sq.center = Rational(1, 2);
  sq.scale = Rational(1);
  sq.offset = Rational(3, 4);
  sq.conclusion = "b(k+1) - b(k) = (b(k) - 1/2)^2 + 3/4 >= 3/4";
  p.steps.push_back(sq);

  ProofStep lb;
  lb.kind = StepKind::LowerBound;
  lb.lhs = one + t.pow(2);
  lb.claimed = Rational(1);
  lb.conclusion = "every chain value b(k+1) = 1 + b(k)^2 is at least 1";
  p.steps.push_back(lb);

  ProofStep chain;
  chain.kind = StepKind::ChainLength;
  chain.drift = sq.offset;
  chain.bound = lb.claimed;
  chain.samples = {Rational(1), Rational(2), Rational(5), Rational(26), Rational(458330)};
  chain.conclusion =
      "a chain ending at b(0) has at most ceil(4(b(0) - 1)/3) + 1 terms, but a preimage needs b(k) for all k <= 0";
  p.steps.push_back(chain);

  p.remarks.push_back("over the complex numbers the rule is surjective; that argument needs square roots and is "
                      "not mechanized");
  return p;
}

namespace {

bool even_nonnegative(const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    if (c < 0) return false;
    for (const auto& [var, e] : m)
      if (e % 2 != 0) return false;
  }
  return true;
}

Integer ceil_div(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

ReplayResult replay(const ProofObject& proof) {
  ReplayResult r;
  const Polynomial t = Polynomial::variable(0);
  std::optional<Rational> drift_proved, bound_proved;
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& s = proof.steps[i];
    bool ok = false;
    switch (s.kind) {
      case StepKind::Discriminant: {
        if (s.coefficients.size() != 3) break;
        const Rational &a = s.coefficients[0], &b = s.coefficients[1], &c = s.coefficients[2];
        const Polynomial q = Polynomial(a) * t.pow(2) + Polynomial(b) * t + Polynomial(c);
        ok = q == s.lhs && Rational(b * b - 4 * a * c) == s.claimed && s.claimed < 0 && a > 0;
        break;
      }
      case StepKind::SquareCompletion: {
        const Polynomial shifted = t - Polynomial(s.center);
        const Polynomial rhs = Polynomial(s.scale) * shifted.pow(2) + Polynomial(s.offset);
        ok = (s.lhs - rhs).is_zero() && s.scale >= 0 && s.offset > 0;
        if (ok) drift_proved = s.offset;
        break;
      }
      case StepKind::LowerBound: {
        ok = even_nonnegative(s.lhs - Polynomial(s.claimed));
        if (ok) bound_proved = s.claimed;
        break;
      }
      case StepKind::ChainLength: {
        ok = drift_proved && bound_proved && *drift_proved == s.drift && *bound_proved == s.bound && s.drift > 0 &&
             !s.samples.empty();
        for (const auto& B : s.samples) {
          if (!ok) break;
          const Rational span = B - s.bound;
          const Integer steps = span < 0 ? Integer(0) : ceil_div(Rational(span / s.drift));
          // Going back steps + 1 times would push the value below the bound.
          ok = Rational(B - Rational(steps + 1) * s.drift) < s.bound;
        }
        break;
      }
    }
    r.step_ok.push_back(ok);
    if (!ok && r.ok) {
      r.ok = false;
      r.failure = "step " + std::to_string(i + 1) + " (" + to_string(s.kind) + ") does not replay";
    }
  }
  return r;
}

bool not_in_image_consistency(const ProofObject& proof, const ValueSource& d, std::int64_t depth) {
  if (!replay(proof).ok) return false;
  for (std::int64_t k = -depth; k <= 0; ++k)
    if (d(k) != 1) return false;
  return true;
}

// --- interval iteration --------------------------------------------------------------------

bool IntervalEnclosure::contains(const ExactScalar& x) const {
  if (x.is_infinity()) return infinity;
  const Rational& v = x.value();
  return (!lower || *lower <= v) && (!upper || v <= *upper);
}

std::string IntervalEnclosure::to_string() const {
  std::string s = "[" + (lower ? symdyn::to_string(*lower) : std::string("-inf")) + ", " +
                  (upper ? symdyn::to_string(*upper) : std::string("+inf")) + "]";
  if (infinity) s += " + {inf}";
  return s;
}

namespace {

struct Quadratic {
  Rational a2, a1, a0;
  int degree = 0;
  Rational at(const Rational& x) const { return Rational(a2 * x * x + a1 * x + a0); }
};

Quadratic unary_quadratic(const PolyRule& rule) {
  if (!rule.is_unary()) throw DomainError("interval iteration: the rule must be unary");
  const std::int64_t g = rule.memory[0];
  if (rule.poly.total_degree() > 2) throw DomainError("interval iteration: degree above 2 is not supported");
  Quadratic q;
  q.a2 = rule.poly.coefficient({{g, 2}});
  q.a1 = rule.poly.coefficient({{g, 1}});
  q.a0 = rule.poly.coefficient({});
  q.degree = q.a2 != 0 ? 2 : (q.a1 != 0 ? 1 : 0);
  return q;
}

using Bound = std::optional<Rational>;  // nullopt: infinite in the relevant direction

// Image of [l, u] under a quadratic with positive leading coefficient.
std::pair<Bound, Bound> upward_parabola(const Quadratic& q, const Bound& l, const Bound& u) {
  const Rational h = -q.a1 / (2 * q.a2);
  Bound lo;
  if ((!l || *l <= h) && (!u || h <= *u))
    lo = q.at(h);
  else if (l && h < *l)
    lo = q.at(*l);
  else
    lo = q.at(*u);
  Bound hi;
  if (l && u) hi = std::max(q.at(*l), q.at(*u));
  return {lo, hi};
}

}  // namespace

IntervalEnclosure image_of_interval(const PolyRule& rule, const IntervalEnclosure& in) {
  const Quadratic q = unary_quadratic(rule);
  IntervalEnclosure out;
  if (q.degree == 0) {
    out.lower = out.upper = q.a0;
    return out;
  }
  out.infinity = in.infinity;  // infinity is fixed in projective mode
  if (q.degree == 1) {
    Bound a = in.lower ? Bound(q.at(*in.lower)) : std::nullopt;
    Bound b = in.upper ? Bound(q.at(*in.upper)) : std::nullopt;
    if (q.a1 > 0) {
      out.lower = a;
      out.upper = b;
    } else {
      out.lower = b;
      out.upper = a;
    }
    return out;
  }
  if (q.a2 > 0) {
    std::tie(out.lower, out.upper) = upward_parabola(q, in.lower, in.upper);
  } else {
    const Quadratic neg{-q.a2, -q.a1, -q.a0, 2};
    auto [lo, hi] = upward_parabola(neg, in.lower, in.upper);
    if (hi) out.lower = Rational(-*hi);
    if (lo) out.upper = Rational(-*lo);
  }
  return out;
}

IntervalIteration interval_iteration(const PolyRule& rule, std::size_t n, const std::optional<Rational>& probe,
                                     std::size_t max_steps) {
  const Quadratic q = unary_quadratic(rule);
  IntervalIteration r;
  IntervalEnclosure cur;
  cur.infinity = rule.mode == PolyMode::Projective;
  const std::size_t limit = std::max(n, probe ? max_steps : n);
  for (std::size_t step = 1; step <= limit; ++step) {
    cur = image_of_interval(rule, cur);
    if (step <= n) r.enclosures.push_back(cur);
    if (probe && !r.empty_at) {
      const bool above = cur.lower && *cur.lower > *probe;
      const bool below = cur.upper && *cur.upper < -*probe;
      if (above || below) r.empty_at = step;
    }
    if (step >= n && (!probe || r.empty_at)) break;
  }
  if (rule.mode == PolyMode::Projective) {
    ProjectiveVerdict v;
    Rational x = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      x = q.at(x);
      v.orbit_of_zero.push_back(x);
    }
    const bool inf_fixed = eval_rule(rule, std::vector<ExactScalar>{ExactScalar::infinity()}).is_infinity();
    bool increasing = !v.orbit_of_zero.empty() && v.orbit_of_zero[0] > 0;
    for (std::size_t k = 1; k < v.orbit_of_zero.size(); ++k)
      increasing = increasing && v.orbit_of_zero[k] > v.orbit_of_zero[k - 1];
    // f(x) - x = a2 x^2 + (a1 - 1) x + a0 > 0 with a uniform gap: every finite
    // orbit escapes, so the only point surviving all images is infinity.
    const Rational gap_disc = (q.a1 - 1) * (q.a1 - 1) - 4 * q.a2 * q.a0;
    v.omega_is_infinity = inf_fixed && q.degree == 2 && q.a2 > 0 && gap_disc < 0;
    v.non_nilpotent = inf_fixed && increasing;
    r.projective = v;
  }
  return r;
}

bool replay(const PolyRule& rule, const ProjectiveVerdict& v) {
  if (rule.mode != PolyMode::Projective) return false;
  const Quadratic q = unary_quadratic(rule);
  if (!eval_rule(rule, std::vector<ExactScalar>{ExactScalar::infinity()}).is_infinity()) return false;
  Rational x = 0;
  for (std::size_t k = 0; k < v.orbit_of_zero.size(); ++k) {
    const Rational next = eval_rule(rule, std::vector<Rational>{x});
    if (next != v.orbit_of_zero[k] || next <= x) return false;
    x = next;
  }
  const Rational gap_disc = (q.a1 - 1) * (q.a1 - 1) - 4 * q.a2 * q.a0;
  const bool omega = q.degree == 2 && q.a2 > 0 && gap_disc < 0;
  return v.omega_is_infinity == omega && v.non_nilpotent == !v.orbit_of_zero.empty();
}

// --- lifts -------------------------------------------------------------------------------

LiftCheck lift_check(const CellularAutomaton& ca, const std::vector<Rational>& values) {
  LiftCheck r;
  r.rule = PolyRule(ca.memory(), lagrange_lift(ca, values));
  r.agrees = true;
  std::vector<Rational> args(ca.memory().size());
  for (std::size_t i = 0; i < ca.table().size(); ++i) {
    const Word in = ca.entry(i);
    for (std::size_t j = 0; j < in.size(); ++j) args[j] = values[in[j]];
    ++r.inputs_checked;
    if (eval_rule(r.rule, args) != values[ca.table()[i]]) {
      r.agrees = false;
      break;
    }
  }
  return r;
}

}  // namespace symdyn
