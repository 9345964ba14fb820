#pragma once

// Polynomial cellular automata over the rationals and the projective
// rational line: exact evaluation, the nu-family of the Riccati-type rule
// t1 - t0^2, explicit preimage and recurrence witnesses, the
// not-in-image proof object, and interval iteration for unary rules.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/automaton.hpp"
#include "symdyn/exact.hpp"
#include "symdyn/generated_config.hpp"

namespace symdyn {

// A rational, or the point at infinity of the projective line.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(const Rational& q) : value_(q) {}  // NOLINT(implicit)
  static ExactScalar infinity() {
    ExactScalar s;
    s.value_.reset();
    return s;
  }

  bool is_infinity() const noexcept { return !value_; }
  const Rational& value() const;  // RangeError at infinity
  std::string to_string() const;  // "inf" or p/q
  static ExactScalar parse(const std::string& text);

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.value_ == b.value_; }

 private:
  std::optional<Rational> value_ = Rational(0);
};

enum class PolyMode { Affine, Projective };
const char* to_string(PolyMode m);
PolyMode parse_poly_mode(const std::string& text);

// mu(p) = poly(p(m_0), ..., p(m_k)) with variables t_g, g in memory. In
// projective mode the rule is unary and extended to infinity by its
// homogenization (x : y) -> (y^d f(x/y) : y^d), so infinity is fixed when
// deg f >= 1.
struct PolyRule {
  std::vector<std::int64_t> memory;  // sorted, distinct
  Polynomial poly;
  PolyMode mode = PolyMode::Affine;

  PolyRule() = default;
  PolyRule(std::vector<std::int64_t> memory, Polynomial poly, PolyMode mode = PolyMode::Affine);

  Window hull() const;
  bool is_unary() const { return memory.size() == 1; }

  friend bool operator==(const PolyRule& a, const PolyRule& b) {
    return a.memory == b.memory && a.poly == b.poly && a.mode == b.mode;
  }
};

// t1 - t0^2 on memory {0, 1}.
PolyRule riccati_rule();
// a -> a^2 + 1 on memory {0}.
PolyRule square_plus_one(PolyMode mode = PolyMode::Affine);

// Values listed in memory order. Infinity in affine mode is a DomainError.
ExactScalar eval_rule(const PolyRule& rule, const std::vector<ExactScalar>& values_on_memory);
Rational eval_rule(const PolyRule& rule, const std::vector<Rational>& values_on_memory);

using RationalConfig = GeneratedConfig<Rational>;
using RationalConfigPtr = std::shared_ptr<const RationalConfig>;
using ValueSource = std::function<Rational(std::int64_t)>;

// tau^n(x) on the window w, by n direct applications of the rule on the
// widened windows. Affine rules only.
std::vector<Rational> iterate_on_window(const PolyRule& rule, const ValueSource& x, std::size_t n, const Window& w);

// Symbolic tau^n as a polynomial in t_g, g in the n-fold memory sumset.
Polynomial symbolic_power(const PolyRule& rule, std::size_t n, std::size_t term_budget = 1u << 20);

// nu[k-1] = nu_k(t_0..t_{k-1}) and mu[k-1] = t_k + nu_k for the rule t1 - t0^2.
struct NuFamily {
  std::vector<Polynomial> nu;
  std::vector<Polynomial> mu;
};
// ResourceError when any polynomial exceeds the term budget.
NuFamily nu_family(std::size_t n, std::size_t term_budget = 1u << 16);

// nu_n(t_0, ..., t_{n-1}) evaluated numerically through the recursion,
// O(n^2) ring operations, without expanding the polynomial.
Rational nu_eval(std::size_t n, const std::vector<Rational>& t);

// d_0 = c on [m, inf) and 0 below m; tau(d_{k+1}) = d_k with d_{k+1} = 0 on
// (-inf, m].
struct DensityLadder {
  std::int64_t m = 0;
  std::vector<RationalConfigPtr> d;  // d[0] .. d[K]
};
DensityLadder omega_density_witness(const RationalConfigPtr& c, std::int64_t m, std::size_t K);
// tau^k(d_k) = d_0 on w for every k <= K, from fresh evaluations.
bool verify_density_ladder(const DensityLadder& ladder, const Window& w);

// d(k) = c(k) for k <= 0 and d(k) = c(k - n) - nu_n(d(k - n), ..., d(k - 1))
// for k >= 1, so tau^n(d)(k) = c(k) for k >= 1 - n.
RationalConfigPtr shifted_preimage(const RationalConfigPtr& c, std::size_t n,
                                   std::size_t bit_budget = std::size_t{1} << 20);

// Per-value size limit for recurrent_witness; larger values raise ResourceError.
inline constexpr std::size_t kDefaultWitnessBits = std::size_t{1} << 20;

// d agrees with c on (-inf, 2*3^n0] and tau^(3^(n+1))(d) = d on
// [-3^n + 1, 3^n] for n0 <= n <= N.
struct RecurrentWitness {
  std::size_t n0 = 1;
  std::size_t N = 1;
  RationalConfigPtr d;
};
RecurrentWitness recurrent_witness(const RationalConfigPtr& c, std::size_t n0, std::size_t N,
                                   std::size_t bit_budget = kDefaultWitnessBits);

struct ReturnCheck {
  std::size_t n = 0;       // level
  std::size_t power = 0;   // 3^(n+1)
  Window window;           // [-3^n + 1, 3^n]
  bool passed = false;
  std::optional<std::string> resource_note;  // set when the bit budget stopped the check
};
// tau^(3^(n+1))(d) = d on [-3^n + 1, 3^n], computed by forward iteration.
ReturnCheck check_return(const ValueSource& d, std::size_t n);

// --- proof objects ------------------------------------------------------------------

enum class StepKind { Discriminant, SquareCompletion, LowerBound, ChainLength };
const char* to_string(StepKind k);
StepKind parse_step_kind(const std::string& text);

// One exact, independently checkable fact about a univariate polynomial in t0.
struct ProofStep {
  StepKind kind = StepKind::Discriminant;
  // Discriminant: quadratic a t^2 + b t + c with claimed value; negative with
  //   a > 0 means the quadratic is positive everywhere.
  // SquareCompletion: lhs == scale * (t - center)^2 + offset identically.
  // LowerBound: lhs - bound is a polynomial with only even exponents and
  //   nonnegative coefficients.
  // ChainLength: drift and bound taken from earlier steps; for each sample
  //   start B the backward chain length is at most ceil((B - bound)/drift) + 1.
  Polynomial lhs;
  std::vector<Rational> coefficients;  // Discriminant: a, b, c
  Rational claimed = 0;                // discriminant value or the lower bound
  Rational center = 0;
  Rational scale = 1;
  Rational offset = 0;
  Rational drift = 0;
  Rational bound = 0;
  std::vector<Rational> samples;
  std::string conclusion;
};

struct ProofObject {
  std::string title;
  std::vector<ProofStep> steps;
  std::vector<std::string> remarks;  // statements recorded but not mechanized
};

struct ReplayResult {
  bool ok = true;
  std::vector<bool> step_ok;
  std::string failure;  // first failing step, human readable
};

// No rational (or real) b satisfies b = 1 + b^2, so the configuration with
// value 1 on every k <= 0 has no preimage under t1 - t0^2.
ProofObject not_in_image_certificate();
ReplayResult replay(const ProofObject& proof);

// The certificate replays and d(k) = 1 on [-depth, 0], so the recurrent
// witness built from c = 1 lies outside the image.
bool not_in_image_consistency(const ProofObject& proof, const ValueSource& d, std::int64_t depth = 32);

// --- interval iteration ---------------------------------------------------------------

// [lower, upper] with nullopt for -inf / +inf; `infinity` adds the
// projective point.
struct IntervalEnclosure {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  bool infinity = false;

  bool contains(const ExactScalar& x) const;
  std::string to_string() const;
};

struct ProjectiveVerdict {
  bool omega_is_infinity = false;  // Omega = {inf^Z}
  bool non_nilpotent = false;      // inf fixed, orbit of 0 finite and strictly increasing
  std::vector<Rational> orbit_of_zero;  // f^1(0), ..., f^n(0)
};

struct IntervalIteration {
  std::vector<IntervalEnclosure> enclosures;  // I_1 .. I_n
  // First n with inf I_n > B: Omega has no configuration valued in [-B, B].
  std::optional<std::size_t> empty_at;
  std::optional<ProjectiveVerdict> projective;
};

// Unary rules of degree <= 2; DomainError otherwise. The search for
// empty_at continues past n up to max_steps.
IntervalIteration interval_iteration(const PolyRule& rule, std::size_t n, const std::optional<Rational>& probe,
                                     std::size_t max_steps = 64);
IntervalEnclosure image_of_interval(const PolyRule& rule, const IntervalEnclosure& in);
bool replay(const PolyRule& rule, const ProjectiveVerdict& v);

// --- table lifts ----------------------------------------------------------------------

struct LiftCheck {
  PolyRule rule;
  bool agrees = false;
  std::size_t inputs_checked = 0;
};
LiftCheck lift_check(const CellularAutomaton& ca, const std::vector<Rational>& values);

}  // namespace symdyn
