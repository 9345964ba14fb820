#pragma once

// Vocabulary shared by every module: windows over Z (and boxes over Z^d),
// ball groups, finite alphabets, patterns and periodic configurations.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "symdyn/error.hpp"

namespace symdyn {

using Symbol = std::uint16_t;
using Word = std::vector<Symbol>;

// Marks a padded coordinate of a non-interval window inside its interval hull.
inline constexpr Symbol kDontCare = 0xFFFF;

// Floor modulo, always in [0, m).
inline std::int64_t floor_mod(std::int64_t n, std::int64_t m) {
  const std::int64_t r = n % m;
  return r < 0 ? r + m : r;
}

// Finite integer interval [lo, hi]; empty when lo > hi.
class Window {
 public:
  Window() = default;
  Window(std::int64_t lo, std::int64_t hi) : lo_(lo), hi_(hi) {}

  static Window empty_window() { return Window(0, -1); }
  static Window of_length(std::int64_t start, std::int64_t length) {
    return Window(start, start + length - 1);
  }

  std::int64_t lo() const noexcept { return lo_; }
  std::int64_t hi() const noexcept { return hi_; }
  bool empty() const noexcept { return lo_ > hi_; }
  std::size_t size() const noexcept {
    return empty() ? 0 : static_cast<std::size_t>(hi_ - lo_ + 1);
  }

  bool contains(std::int64_t n) const noexcept { return lo_ <= n && n <= hi_; }
  bool contains(const Window& w) const noexcept {
    return w.empty() || (lo_ <= w.lo_ && w.hi_ <= hi_);
  }

  Window translated(std::int64_t g) const { return empty() ? *this : Window(lo_ + g, hi_ + g); }

  // Minkowski sum: {a + b : a in *this, b in other}.
  Window sum(const Window& other) const {
    if (empty() || other.empty()) return empty_window();
    return Window(lo_ + other.lo_, hi_ + other.hi_);
  }

  // Canonical element order (increasing).
  std::vector<std::int64_t> elements() const;

  friend bool operator==(const Window& a, const Window& b) {
    if (a.empty() && b.empty()) return true;
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }
  friend bool operator<(const Window& a, const Window& b) {
    return a.lo_ != b.lo_ ? a.lo_ < b.lo_ : a.hi_ < b.hi_;
  }

  std::string to_string() const;

 private:
  std::int64_t lo_ = 0;
  std::int64_t hi_ = -1;
};

// Interval hull of a set of integers.
Window hull(const std::vector<std::int64_t>& elements);

// Axis-aligned box in Z^d, used for bounded bookkeeping only.
struct Box {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;

  std::size_t dim() const noexcept { return lo.size(); }
  std::size_t size() const noexcept;
  bool contains(const std::vector<std::int64_t>& point) const;
  bool contains(const Box& other) const;
  // Lexicographic order on coordinates.
  std::vector<std::vector<std::int64_t>> elements() const;
  // Only valid when dim() == 1.
  Window interval() const;
};

// Z or Z^d with the symmetric generating box [-radius, radius]^d.
// The identity belongs to the generating set and the set is closed under
// inversion, so the balls form an increasing exhaustion.
class BallGroup {
 public:
  static BallGroup integers(std::int64_t radius = 1) { return BallGroup(1, radius); }
  static BallGroup lattice(int dim, std::int64_t radius = 1) { return BallGroup(dim, radius); }

  // Smallest integer ball group whose generating set contains every offset
  // (radius at least 1).
  static BallGroup containing(const std::vector<std::int64_t>& offsets);

  int dim() const noexcept { return dim_; }
  std::int64_t radius() const noexcept { return radius_; }
  bool is_integers() const noexcept { return dim_ == 1; }

  Box generators() const { return ball(1); }
  Box ball(std::int64_t n) const;
  // Ball of Z as an interval: [-n*radius, n*radius].
  Window ball_interval(std::int64_t n) const;

 private:
  BallGroup(int dim, std::int64_t radius);

  int dim_;
  std::int64_t radius_;
};

class FiniteAlphabet {
 public:
  FiniteAlphabet() = default;
  explicit FiniteAlphabet(std::vector<std::string> names);
  // Symbols named "0", "1", ..., "k-1".
  static FiniteAlphabet numeric(std::size_t k);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Symbol s) const;
  Symbol id(std::string_view name) const;
  bool has(std::string_view name) const { return index_.count(std::string(name)) != 0; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::string format(const Word& w, std::string_view sep = "") const;

  friend bool operator==(const FiniteAlphabet& a, const FiniteAlphabet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Symbol, std::less<>> index_;
};

// Assignment of symbols to every element of a window.
class Pattern {
 public:
  Pattern() = default;
  Pattern(Window window, Word values);
  // Pattern on [start, start + |values| - 1].
  static Pattern at(std::int64_t start, Word values);

  const Window& window() const noexcept { return window_; }
  const Word& values() const noexcept { return values_; }
  Symbol operator()(std::int64_t n) const;
  bool is_complete() const;

  // Requires sub inside window(); otherwise DomainError.
  Pattern restrict(const Window& sub) const;
  // (g p)(h) = p(h - g), carried on window + g.
  Pattern translate(std::int64_t g) const;

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.window_ == b.window_ && a.values_ == b.values_;
  }
  friend bool operator<(const Pattern& a, const Pattern& b) {
    return a.window_ == b.window_ ? a.values_ < b.values_ : a.window_ < b.window_;
  }

 private:
  Window window_ = Window::empty_window();
  Word values_;
};

// x in Fix(pZ) stored as its values on [0, p).
class PeriodicConfig {
 public:
  PeriodicConfig() = default;
  explicit PeriodicConfig(Word cells);
  static PeriodicConfig constant(Symbol s) { return PeriodicConfig(Word{s}); }

  std::size_t period() const noexcept { return cells_.size(); }
  const Word& cells() const noexcept { return cells_; }
  Symbol operator()(std::int64_t n) const {
    return cells_[static_cast<std::size_t>(floor_mod(n, static_cast<std::int64_t>(cells_.size())))];
  }

  Pattern restrict(const Window& w) const;
  PeriodicConfig translate(std::int64_t g) const;
  // Same configuration, stored on its least period.
  PeriodicConfig reduced() const;
  // Same configuration, stored on period q (q must be a multiple of the least period).
  PeriodicConfig with_period(std::size_t q) const;
  std::size_t least_period() const;
  bool is_constant() const { return least_period() == 1; }

  // Equality as configurations of A^Z.
  friend bool operator==(const PeriodicConfig& a, const PeriodicConfig& b) {
    return a.reduced().cells_ == b.reduced().cells_;
  }
  friend bool operator<(const PeriodicConfig& a, const PeriodicConfig& b) {
    return a.reduced().cells_ < b.reduced().cells_;
  }

 private:
  Word cells_{0};
};

// Shift orbit of a periodic configuration (least-period representatives).
std::vector<PeriodicConfig> shift_orbit(const PeriodicConfig& x);

}  // namespace symdyn
