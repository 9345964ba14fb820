#pragma once

// Cellular automata over Z with a finite rule table.

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "symdyn/core.hpp"
#include "symdyn/exact.hpp"
#include "symdyn/shift.hpp"

namespace symdyn {

// Largest rule table stored explicitly.
inline constexpr std::size_t kDefaultTableCap = std::size_t{1} << 22;

// tau(x)(n) = mu(x(n + m_0), ..., x(n + m_{k-1})) for the declared memory
// offsets m_0 < ... < m_{k-1}. The table is indexed in mixed radix |B| with
// the first offset most significant (so an elementary rule number reads
// 4l + 2c + r).
class CellularAutomaton {
 public:
  CellularAutomaton(FiniteAlphabet source, FiniteAlphabet target, std::vector<std::int64_t> memory,
                    std::vector<Symbol> table);
  // Same alphabet on both sides.
  CellularAutomaton(FiniteAlphabet alphabet, std::vector<std::int64_t> memory, std::vector<Symbol> table);

  static CellularAutomaton from_function(FiniteAlphabet source, FiniteAlphabet target,
                                         std::vector<std::int64_t> memory,
                                         const std::function<Symbol(const Word&)>& mu,
                                         std::size_t cap = kDefaultTableCap);
  // Rule number read in base |A|, least significant digit = table index 0.
  static CellularAutomaton from_rule_number(std::size_t alphabet_size, std::vector<std::int64_t> memory,
                                            std::uint64_t number);
  // Wolfram numbering, memory {-1, 0, 1} over {0, 1}.
  static CellularAutomaton elementary(unsigned number);
  static CellularAutomaton identity(const FiniteAlphabet& a);
  static CellularAutomaton constant(const FiniteAlphabet& a, Symbol value);
  // tau(x)(n) = x(n + 1)
  static CellularAutomaton shift(const FiniteAlphabet& a);

  const FiniteAlphabet& source() const noexcept { return source_; }
  const FiniteAlphabet& target() const noexcept { return target_; }
  bool is_endomorphism() const { return source_ == target_; }
  const std::vector<std::int64_t>& memory() const noexcept { return memory_; }
  // Interval hull of the memory.
  Window hull() const { return hull_; }
  const std::vector<Symbol>& table() const noexcept { return table_; }

  std::size_t index_of(const Word& values_on_memory) const;
  Word entry(std::size_t index) const;
  Symbol rule(const Word& values_on_memory) const { return table_[index_of(values_on_memory)]; }
  // Evaluate at a position of a word laid out over the hull, reading only memory cells.
  Symbol rule_at(const Word& w, std::size_t hull_start) const;

  // Output on {n : n + hull subset of the pattern window}. kDontCare cells
  // propagate when read.
  Pattern apply_to_pattern(const Pattern& p) const;
  Word apply_to_word(const Word& w) const;
  PeriodicConfig apply_to_periodic(const PeriodicConfig& x) const;

  // Drops memory offsets the rule does not depend on; a constant rule gets
  // memory {0}.
  CellularAutomaton normalize() const;
  bool is_constant() const;

  friend bool operator==(const CellularAutomaton& a, const CellularAutomaton& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.memory_ == b.memory_ && a.table_ == b.table_;
  }

 private:
  FiniteAlphabet source_;
  FiniteAlphabet target_;
  std::vector<std::int64_t> memory_;
  Window hull_;
  std::vector<Symbol> table_;
  std::vector<std::size_t> place_;  // mixed-radix place value per offset
};

// tau^n as a single local rule on the n-fold sumset of the memory.
class ComposedRule {
 public:
  enum class Mode { Table, Lazy };

  const CellularAutomaton& base() const noexcept { return *base_; }
  std::size_t power() const noexcept { return power_; }
  Mode mode() const noexcept { return mode_; }
  const std::vector<std::int64_t>& memory() const noexcept { return memory_; }
  Window hull() const { return hull_; }

  // Values laid out over the hull (cells outside the sumset are ignored).
  Symbol evaluate(const Word& over_hull) const;
  // Only in table mode.
  const CellularAutomaton& automaton() const;

 private:
  friend ComposedRule compose(const CellularAutomaton&, std::size_t, ComposedRule::Mode, std::size_t);
  std::shared_ptr<const CellularAutomaton> base_;
  std::size_t power_ = 1;
  Mode mode_ = Mode::Lazy;
  std::vector<std::int64_t> memory_;
  Window hull_;
  std::shared_ptr<const CellularAutomaton> table_;
};

// Table mode throws ResourceError when |B|^|M^n| exceeds the cap.
ComposedRule compose(const CellularAutomaton& ca, std::size_t n, ComposedRule::Mode mode = ComposedRule::Mode::Table,
                     std::size_t cap = kDefaultTableCap);

// Sliding-block image: higher-block presentation of the source at the hull
// width, edges relabelled by mu, then canonicalized.
SoficPresentation image_presentation(const CellularAutomaton& ca, const SoficPresentation& source);
SoficPresentation image_presentation(const CellularAutomaton& ca, const Sft& source);

// tau restricted to hZ: memory divided by h, same table.
CellularAutomaton restrict_to_subgroup(const CellularAutomaton& ca, std::int64_t h);
// phi_c(x)(n) = x(c + h n)
PeriodicConfig coset_component(const PeriodicConfig& x, std::int64_t h, std::int64_t c);
Pattern coset_component(const Pattern& p, std::int64_t h, std::int64_t c);
// Inverse of the coset decomposition: x(c + h n) = parts[c](n).
PeriodicConfig interleave(const std::vector<PeriodicConfig>& parts);

// Polynomial in t_g (g in memory) agreeing with mu under the embedding
// symbol s -> values[s]. Source and target must coincide. Non-injective
// embeddings are a DomainError.
Polynomial lagrange_lift(const CellularAutomaton& ca, const std::vector<Rational>& values);

// Finite subshift X as tau'(Sigma'): Sigma' over the alphabet B = X (symbols
// b0, b1, ... in member order) with window [-1, 1] forcing y(g) to be y(0)
// translated by -g, and tau'(y)(g) = y(g)(0). Verified by presentation
// equality before returning.
struct SubFiniteType {
  Sft auxiliary;
  CellularAutomaton projection;
};
SubFiniteType sub_finite_type_presentation(const FiniteSubshift& fs);

}  // namespace symdyn
