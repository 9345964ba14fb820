#pragma once

// Limit sets, nilpotency verdicts with replayable certificates, periodic and
// chain-recurrent points, and integer-alphabet fixture maps.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symdyn/automaton.hpp"
#include "symdyn/exact.hpp"
#include "symdyn/shift.hpp"
#include "symdyn/spacetime.hpp"

namespace symdyn {

// Memoizes image presentations. Keys are opaque strings; implementations
// must be safe to call from several threads.
class PresentationCache {
 public:
  virtual ~PresentationCache() = default;
  virtual std::optional<SoficPresentation> get(const std::string& key) = 0;
  virtual void put(const std::string& key, const SoficPresentation& value) = 0;
};

struct ImageChain {
  // steps[n] is the canonical presentation of tau^n(Sigma).
  std::vector<SoficPresentation> steps;
  // Least n with tau^(n+1)(Sigma) = tau^n(Sigma), when reached within budget.
  std::optional<std::size_t> stabilized_at;
};

// Computes up to N images; the chain must descend (tau(Sigma) inside Sigma),
// otherwise DomainError. Resource errors name the failing step.
ImageChain image_chain(const SoficPresentation& sigma, const CellularAutomaton& tau, std::size_t N,
                       PresentationCache* cache = nullptr, std::size_t state_cap = kDefaultStateCap);

// Finite iff every cyclic component is a simple cycle and no cyclic
// component reaches another one. Members are the cycle label sequences.
struct Finiteness {
  bool finite = false;
  std::vector<PeriodicConfig> members;  // sorted, least-period form
};
Finiteness finiteness(const SoficPresentation& p);

struct LimitSetReport {
  bool stabilized = false;
  std::size_t steps = 0;  // n0 when stabilized, else the budget N
  // Omega when stabilized, else tau^N(Sigma) (a superset of Omega).
  SoficPresentation presentation;
  bool invariance_verified = false;  // tau(Omega) = Omega as presentations
  std::vector<Symbol> alphabet_values;  // {x(0)} of the presented shift
  std::optional<Finiteness> finiteness;  // only when stabilized
};
LimitSetReport limit_set(const SoficPresentation& sigma, const CellularAutomaton& tau, std::size_t N,
                         PresentationCache* cache = nullptr);

// --- nilpotency --------------------------------------------------------------

// tau^power(x)(0) = terminal for every x in Sigma.
struct ConstantPowerCertificate {
  std::size_t power = 0;
  Symbol terminal = 0;
};
// x != y with tau^a(x) = x and tau^b(y) = y; both lie in Omega.
struct PeriodicPairCertificate {
  PeriodicConfig x;
  std::size_t x_period = 0;
  PeriodicConfig y;
  std::size_t y_period = 0;
};
// The image chain stabilizes at n0 and Omega = tau^n0(Sigma) has at least two
// points: either two distinct listed members or an infinite presentation.
struct OmegaMembersCertificate {
  std::size_t n0 = 0;
  std::vector<PeriodicConfig> members;
  bool infinite = false;
};

enum class VerdictKind { Nilpotent, NonNilpotent, Unknown };
const char* to_string(VerdictKind k);

enum class Prover { Witness, ConstantPower, Chain, None };
const char* to_string(Prover p);

struct NilpotencyBudget {
  std::size_t max_power = 8;   // constant-power prover: n <= max_power
  std::size_t max_period = 6;  // witness prover: spatial periods p <= max_period
  std::size_t chain_steps = 8; // chain prover: image steps <= chain_steps
  std::size_t jobs = 1;        // provers run concurrently within a level when > 1
  std::size_t pattern_cap = std::size_t{1} << 22;
  std::size_t state_cap = std::size_t{1} << 14;
  PresentationCache* cache = nullptr;
};

struct NilpotencyVerdict {
  VerdictKind kind = VerdictKind::Unknown;
  Prover prover = Prover::None;
  std::size_t level = 0;  // interleaving level at which the certificate appeared
  std::variant<std::monostate, ConstantPowerCertificate, PeriodicPairCertificate, OmegaMembersCertificate>
      certificate;
  MixingResult mixing;
  bool within_hypotheses = false;  // Sigma mixing
  // What each prover reached before the verdict.
  std::size_t powers_tried = 0;
  std::size_t periods_tried = 0;
  std::size_t chain_steps_done = 0;
  bool chain_gave_up = false;
  // Set when the chain prover saw Omega stabilize before the verdict.
  std::optional<bool> omega_singleton;
  std::optional<bool> omega_finite;
};

// Sigma must be nonempty and tau(Sigma) inside Sigma.
NilpotencyVerdict nilpotency(const SoficPresentation& sigma, const CellularAutomaton& tau,
                             const NilpotencyBudget& budget = {});

// Independent replays of each certificate type.
bool replay(const SoficPresentation& sigma, const CellularAutomaton& tau, const ConstantPowerCertificate& c,
            std::size_t cap = std::size_t{1} << 22);
bool replay(const SoficPresentation& sigma, const CellularAutomaton& tau, const PeriodicPairCertificate& c);
bool replay(const SoficPresentation& sigma, const CellularAutomaton& tau, const OmegaMembersCertificate& c);
bool replay(const SoficPresentation& sigma, const CellularAutomaton& tau, const NilpotencyVerdict& v);

// --- periodic and chain-recurrent points ---------------------------------------

// Union of the eventual cycles of tau on Sigma-points of period dividing p.
std::vector<PeriodicConfig> omega_in_fixed_points(const SoficPresentation& sigma, const CellularAutomaton& tau,
                                                  std::size_t p, std::size_t cap = std::size_t{1} << 22);

// chain = x, u_1, ..., x with tau(u_k) = u_{k+1} on F.
struct ChainCertificate {
  std::vector<PeriodicConfig> chain;
  Window entourage;
  std::size_t period = 0;
};
struct ChainSearchResult {
  std::optional<ChainCertificate> certificate;  // empty means Exhausted
  std::size_t periods_searched = 0;
};
ChainSearchResult chain_recurrence_certificate(const SoficPresentation& sigma, const CellularAutomaton& tau,
                                               const PeriodicConfig& x, const Window& F, std::size_t max_period,
                                               std::size_t cap = std::size_t{1} << 22);
bool replay(const CellularAutomaton& tau, const ChainCertificate& c);

// --- integer fixtures ----------------------------------------------------------

enum class FixtureKind { EmptyLimit, SingletonNotPointwise, StrictInvariance, SurjectivePointwiseNilpotent };
FixtureKind parse_fixture_kind(const std::string& name);
const char* to_string(FixtureKind k);

// Cantor pairing (n, x) -> (n + x)(n + x + 1)/2 + x and its inverse.
Integer cantor_pair(const Integer& n, const Integer& x);
std::pair<Integer, Integer> cantor_unpair(const Integer& z);

// Self-map of the nonnegative integers. The promoted cellular automaton has
// memory {0}: tau(x)(g) = f(x(g)).
struct UnaryFixtureMap {
  FixtureKind kind;
  std::function<Integer(const Integer&)> f;
  std::string description;

  std::vector<Integer> promote(const std::vector<Integer>& cells) const;
};
UnaryFixtureMap appendix_fixture(FixtureKind kind);

// Members of [0, K] lying in f^n([0, R]) for every n <= N.
std::vector<Integer> probe_limit_set(const UnaryFixtureMap& m, std::size_t N, const Integer& R, const Integer& K);

// strict_invariance: element (n, k), n >= 2, 2 <= k <= n, of the auxiliary
// set Y is encoded as 2 + cantor(n - 2, k - 2); y0 = 0, y1 = 1.
Integer strict_invariance_code(const Integer& n, const Integer& k);

}  // namespace symdyn
