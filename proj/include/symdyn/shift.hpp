#pragma once

// Subshifts of Z: finite type (window + allowed patterns), window languages,
// and sofic shifts presented by finite labelled graphs, with the automata
// algebra used to compare them.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symdyn/core.hpp"

namespace symdyn {

// Default enumeration cap for explicitly stored pattern sets.
inline constexpr std::size_t kDefaultPatternCap = std::size_t{1} << 22;
// Default cap on the number of states created by subset construction.
inline constexpr std::size_t kDefaultStateCap = std::size_t{1} << 18;

// Sigma(D, P): configurations all of whose D-windows lie in P.
class Sft {
 public:
  Sft(FiniteAlphabet alphabet, Window window, std::set<Word> allowed);
  // Full shift, presented with D = {0} and P = A.
  static Sft full(const FiniteAlphabet& alphabet);

  const FiniteAlphabet& alphabet() const noexcept { return alphabet_; }
  const Window& window() const noexcept { return window_; }
  const std::set<Word>& allowed() const noexcept { return allowed_; }

  bool allows(const Word& w) const { return allowed_.count(w) != 0; }
  // Every D-translate that fits inside the pattern's window is allowed.
  bool locally_admissible(const Pattern& p) const;
  bool locally_admissible(const Word& w) const;

  friend bool operator==(const Sft& a, const Sft& b) {
    return a.alphabet_ == b.alphabet_ && a.window_ == b.window_ && a.allowed_ == b.allowed_;
  }

 private:
  FiniteAlphabet alphabet_;
  Window window_;
  std::set<Word> allowed_;
};

// A duplicate-free set of patterns sharing one window, kept sorted.
class WindowLanguage {
 public:
  WindowLanguage() = default;
  WindowLanguage(Window window, std::vector<Word> words);

  const Window& window() const noexcept { return window_; }
  const std::vector<Word>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  bool contains(const Word& w) const;
  std::vector<Pattern> patterns() const;

  friend bool operator==(const WindowLanguage& a, const WindowLanguage& b) {
    return a.window_ == b.window_ && a.words_ == b.words_;
  }

 private:
  Window window_ = Window::empty_window();
  std::vector<Word> words_;
};

WindowLanguage intersect(const WindowLanguage& a, const WindowLanguage& b);

struct Edge {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  Symbol label = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite labelled directed graph; the presented subshift is the set of label
// sequences of bi-infinite paths.
class SoficPresentation {
 public:
  SoficPresentation() = default;
  explicit SoficPresentation(FiniteAlphabet alphabet) : alphabet_(std::move(alphabet)) {}

  std::uint32_t add_vertex(std::string name);
  void add_edge(std::uint32_t from, std::uint32_t to, Symbol label);

  const FiniteAlphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_vertices() const noexcept { return vertex_names_.size(); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertex_names_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  friend bool operator==(const SoficPresentation&, const SoficPresentation&) = default;

 private:
  FiniteAlphabet alphabet_;
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
};

// Finite shift-closed set of periodic configurations (least-period form).
class FiniteSubshift {
 public:
  FiniteSubshift(FiniteAlphabet alphabet, std::vector<PeriodicConfig> members);
  // Union of the shift orbits of the given configurations.
  static FiniteSubshift from_orbits(FiniteAlphabet alphabet, const std::vector<PeriodicConfig>& seeds);

  const FiniteAlphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<PeriodicConfig>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool shift_closed() const;
  bool contains(const PeriodicConfig& x) const;

 private:
  FiniteAlphabet alphabet_;
  std::vector<PeriodicConfig> members_;
};

// --- presentations ---------------------------------------------------------

// Edge graph of locally admissible words: vertices are (|D|-1)-blocks, edges
// are allowed D-patterns labelled by their last symbol.
SoficPresentation presentation_of(const Sft& sft);
SoficPresentation presentation_of(const FiniteSubshift& fs);

// Keep only vertices that lie on a bi-infinite path.
SoficPresentation trim(const SoficPresentation& p);

struct Emptiness {
  bool empty = true;
  std::optional<PeriodicConfig> witness;  // read off a cycle when nonempty
};
Emptiness is_empty(const SoficPresentation& p);
Emptiness is_empty(const Sft& sft);

// Labels of length-`length` paths of the trimmed presentation, sorted.
std::vector<Word> words_of_length(const SoficPresentation& p, std::size_t length,
                                  std::size_t cap = kDefaultPatternCap);
bool accepts_word(const SoficPresentation& p, const Word& w);
bool contains_periodic(const SoficPresentation& p, const PeriodicConfig& x);
// Points of the presented shift with period dividing p, stored on period p,
// sorted. ResourceError when |A|^p exceeds the cap.
std::vector<PeriodicConfig> periodic_points(const SoficPresentation& pres, std::size_t p,
                                           std::size_t cap = kDefaultPatternCap);

// {x|_E : x in Sigma}: globally extendable patterns only.
WindowLanguage window_language(const Sft& sft, const Window& e, std::size_t cap = kDefaultPatternCap);
WindowLanguage window_language(const SoficPresentation& p, const Window& e,
                               std::size_t cap = kDefaultPatternCap);

// Locally admissible patterns on a window (every D-translate inside it is in P).
WindowLanguage local_window_set(const Sft& sft, const Window& e, std::size_t cap = kDefaultPatternCap);
// A_ij on the ball M^{i+j} of the given group.
WindowLanguage local_window_set(const Sft& sft, const BallGroup& group, std::int64_t i, std::int64_t j,
                                std::size_t cap = kDefaultPatternCap);

// Minimal deterministic automaton of the factor language, numbered by
// breadth-first search from the initial state in symbol order. Missing
// transitions are -1. Two presentations present the same subshift iff their
// canonical forms compare equal.
struct CanonicalForm {
  std::size_t alphabet_size = 0;
  std::size_t num_states = 0;
  std::vector<std::int32_t> delta;  // num_states * alphabet_size, state 0 initial
  bool empty_language = true;       // true when the subshift is empty

  std::int32_t next(std::size_t state, Symbol a) const { return delta[state * alphabet_size + a]; }
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};
CanonicalForm canonical_form(const SoficPresentation& p, std::size_t state_cap = kDefaultStateCap);

// Trimmed, right-resolving, follower-separated presentation derived from the
// canonical form (vertices q0, q1, ... in canonical order).
SoficPresentation canonical_presentation(const SoficPresentation& p, std::size_t state_cap = kDefaultStateCap);

// Alphabet mismatch is a DomainError.
bool equal_subshifts(const SoficPresentation& a, const SoficPresentation& b);

// Language inclusion X_a subset X_b (product construction on canonical forms).
bool is_subshift_of(const SoficPresentation& a, const SoficPresentation& b);

enum class MixingReason { Mixing, Reducible, Periodic };

struct MixingResult {
  bool mixing = false;
  MixingReason reason = MixingReason::Reducible;
  std::size_t period = 0;  // period of the minimal irreducible cover when irreducible
};
const char* to_string(MixingReason r);

// Empty subshift is a DomainError.
MixingResult is_mixing(const SoficPresentation& p);
MixingResult is_mixing(const Sft& sft);

// Finite subshift as an SFT: D = [-1, k+1] where [0, k] is the shortest
// window separating all members, P = the members' D-patterns. Throws
// DomainError when the input is not shift-closed.
Sft finite_to_sft(const FiniteSubshift& fs);

// Strongly connected components (Tarjan), each sorted; components listed in
// reverse topological order.
std::vector<std::vector<std::uint32_t>> strongly_connected_components(const SoficPresentation& p);

}  // namespace symdyn
