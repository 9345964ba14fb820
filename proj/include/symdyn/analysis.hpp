#pragma once

// Analyses behind the command-line front end. Each returns a Report whose
// certificates have been replayed by the independent checkers; a failed
// replay is an internal Error, never a decisive report.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/dynamics.hpp"
#include "symdyn/report.hpp"

namespace symdyn {

struct ShiftInput {
  SoficPresentation presentation;
  std::optional<Sft> sft;
  std::string label;
};

// "full" or "golden" (no two adjacent copies of the last symbol) over `alphabet`.
ShiftInput shift_preset(const std::string& name, const FiniteAlphabet& alphabet);
// SFT or graph text.
ShiftInput shift_from_text(const std::string& text, const std::string& source);

std::uint64_t fnv1a64(const std::string& bytes);

// Canonical presentations on disk, one file per key named by its FNV-1a
// hash. The key is stored alongside the value and compared on load, so a
// hash collision is a miss.
class DiskCache : public PresentationCache {
 public:
  explicit DiskCache(std::string dir);
  // From LIMITSET_CACHE_DIR; nullptr when unset or empty.
  static std::unique_ptr<DiskCache> from_env();

  std::optional<SoficPresentation> get(const std::string& key) override;
  void put(const std::string& key, const SoficPresentation& value) override;

  std::size_t hits() const;
  std::size_t misses() const;

 private:
  std::string path_for(const std::string& key) const;
  std::string dir_;
  mutable std::mutex mutex_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

Report analyze_nilpotency(const ShiftInput& sigma, const CellularAutomaton& tau, const NilpotencyBudget& budget);
Report analyze_limit_set(const ShiftInput& sigma, const CellularAutomaton& tau, std::size_t N,
                         PresentationCache* cache = nullptr);
Report analyze_image(const ShiftInput& sigma, const CellularAutomaton& tau);
// Commutation for i, j <= the bounds, the starred grid for `terminal`, and
// outer approximations when the base is an SFT.
Report analyze_spacetime(const ShiftInput& sigma, const CellularAutomaton& tau, std::int64_t i_max,
                         std::int64_t j_max, std::optional<Symbol> terminal, std::size_t cap = kDefaultPatternCap);
Report analyze_periodic(const ShiftInput& sigma, const CellularAutomaton& tau, std::size_t p,
                        std::size_t cap = kDefaultPatternCap);
Report analyze_chainrec(const ShiftInput& sigma, const CellularAutomaton& tau, const PeriodicConfig& x,
                        const Window& F, std::size_t max_period, std::size_t cap = kDefaultPatternCap);
Report analyze_mixing(const ShiftInput& sigma);

std::vector<std::string> example_names();
// DomainError for an unknown name.
Report run_example(const std::string& name);

}  // namespace symdyn
