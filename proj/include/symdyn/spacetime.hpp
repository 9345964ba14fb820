#pragma once

// Space-time inverse system of a cellular automaton on a subshift of Z:
// cells Sigma_ij = Sigma restricted to the ball M^(i+j), horizontal
// restrictions p, vertical maps q, outer approximations A_ij, backward orbit
// search and the starred subsystem.

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/automaton.hpp"
#include "symdyn/core.hpp"
#include "symdyn/shift.hpp"

namespace symdyn {

// Cooperative cancellation shared between a caller and a running search.
class CancellationToken {
 public:
  CancellationToken() : flag_(std::make_shared<std::atomic<bool>>(false)) {}
  void cancel() const { flag_->store(true); }
  bool cancelled() const { return flag_->load(); }

 private:
  std::shared_ptr<std::atomic<bool>> flag_;
};

class SpaceTimeSystem {
 public:
  // tau must be an endomorphism of the alphabet with tau(Sigma) inside Sigma.
  static SpaceTimeSystem build(const Sft& sigma, const CellularAutomaton& tau);
  static SpaceTimeSystem build(const SoficPresentation& sigma, const CellularAutomaton& tau);

  const BallGroup& group() const noexcept { return group_; }
  const CellularAutomaton& tau() const noexcept { return tau_; }
  const SoficPresentation& presentation() const noexcept { return presentation_; }
  const std::optional<Sft>& sft() const noexcept { return sft_; }

  Window window(std::int64_t i, std::int64_t j) const { return group_.ball_interval(i + j); }
  // Sigma_ij, computed once per i + j.
  std::shared_ptr<const WindowLanguage> cell(std::int64_t i, std::int64_t j,
                                             std::size_t cap = kDefaultPatternCap) const;

  // p_ij : Sigma_{i+1,j} -> Sigma_ij
  Pattern p(std::int64_t i, std::int64_t j, const Pattern& sigma) const;
  // q_ij : Sigma_{i,j+1} -> Sigma_ij
  Pattern q(std::int64_t i, std::int64_t j, const Pattern& sigma) const;
  // p_ijk : Sigma_kj -> Sigma_ij for k >= i
  Pattern p(std::int64_t i, std::int64_t j, std::int64_t k, const Pattern& sigma) const;

 private:
  SpaceTimeSystem(SoficPresentation pres, std::optional<Sft> sft, CellularAutomaton tau);

  struct Cache {
    std::mutex mutex;
    std::map<std::int64_t, std::shared_ptr<const WindowLanguage>> cells;
  };

  SoficPresentation presentation_;
  std::optional<Sft> sft_;
  CellularAutomaton tau_;
  BallGroup group_;
  std::shared_ptr<Cache> cache_;
};

struct CommutationResult {
  bool holds = true;
  std::size_t checked = 0;
  std::optional<Pattern> counterexample;
};
// Exhaustive over Sigma_{i+1,j+1}.
CommutationResult check_commutation(const SpaceTimeSystem& sys, std::int64_t i, std::int64_t j,
                                    std::size_t cap = kDefaultPatternCap);

// Intersection over i <= k <= K of p_ijk(A_kj). Requires an SFT base.
WindowLanguage outer_intersection(const SpaceTimeSystem& sys, std::int64_t i, std::int64_t j, std::int64_t K,
                                  std::size_t cap = kDefaultPatternCap);

// x_0 = target and tau(x_{m+1}) = x_m. Either periodic configurations or
// patterns, each preimage window widened by the memory hull.
struct BackwardOrbit {
  std::vector<PeriodicConfig> periodic;
  std::vector<Pattern> patterns;

  bool is_periodic() const { return !periodic.empty(); }
  std::size_t depth() const { return (is_periodic() ? periodic.size() : patterns.size()) - 1; }
};

enum class SearchStatus { Found, NotFound, Exhausted };
const char* to_string(SearchStatus s);

// NotFound: the pattern `blocked` has no preimage under tau^depth among the
// patterns of Sigma on the widened window.
struct NoPreimageCertificate {
  Pattern blocked;
  std::size_t depth = 0;
};

struct BackwardSearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<BackwardOrbit> orbit;
  std::optional<NoPreimageCertificate> certificate;
  std::string note;
};

struct SearchBudget {
  std::size_t max_period = 6;
  std::size_t pattern_cap = std::size_t{1} << 20;
  CancellationToken cancel;
};

// Domain error when the target is not in Sigma.
BackwardSearchResult backward_orbit_search(const SpaceTimeSystem& sys, const PeriodicConfig& target, std::size_t n,
                                           const SearchBudget& budget = {});
BackwardSearchResult backward_orbit_search(const SpaceTimeSystem& sys, const Pattern& target, std::size_t n,
                                           const SearchBudget& budget = {});

// Independent replays.
bool verify_backward_orbit(const SpaceTimeSystem& sys, const BackwardOrbit& orbit);
bool verify_no_preimage(const SpaceTimeSystem& sys, const NoPreimageCertificate& cert,
                        std::size_t cap = kDefaultPatternCap);

struct StarredGrid {
  Symbol terminal = 0;
  // cells[i][j] = Sigma*_ij
  std::vector<std::vector<WindowLanguage>> cells;
  // Smallest j >= 1 (then smallest i) with Sigma*_ij empty; this certifies
  // tau^j(x) = terminal^Z for every x in Sigma.
  std::optional<std::pair<std::int64_t, std::int64_t>> first_empty;
};
StarredGrid starred_grid(const SpaceTimeSystem& sys, Symbol terminal, std::int64_t i_max, std::int64_t j_max,
                         std::size_t cap = kDefaultPatternCap);

}  // namespace symdyn
