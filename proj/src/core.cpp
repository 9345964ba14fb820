#include "symdyn/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace symdyn {

std::vector<std::int64_t> Window::elements() const {
  std::vector<std::int64_t> out;
  out.reserve(size());
  for (std::int64_t n = lo_; n <= hi_; ++n) out.push_back(n);
  return out;
}

std::string Window::to_string() const {
  if (empty()) return "[]";
  return "[" + std::to_string(lo_) + "," + std::to_string(hi_) + "]";
}

Window hull(const std::vector<std::int64_t>& elements) {
  if (elements.empty()) return Window::empty_window();
  auto [mn, mx] = std::minmax_element(elements.begin(), elements.end());
  return Window(*mn, *mx);
}

std::size_t Box::size() const noexcept {
  std::size_t n = 1;
  for (std::size_t k = 0; k < dim(); ++k) {
    if (hi[k] < lo[k]) return 0;
    n *= static_cast<std::size_t>(hi[k] - lo[k] + 1);
  }
  return n;
}

bool Box::contains(const std::vector<std::int64_t>& point) const {
  if (point.size() != dim()) return false;
  for (std::size_t k = 0; k < dim(); ++k)
    if (point[k] < lo[k] || point[k] > hi[k]) return false;
  return true;
}

bool Box::contains(const Box& other) const {
  if (other.size() == 0) return true;
  if (other.dim() != dim()) return false;
  for (std::size_t k = 0; k < dim(); ++k)
    if (other.lo[k] < lo[k] || other.hi[k] > hi[k]) return false;
  return true;
}

std::vector<std::vector<std::int64_t>> Box::elements() const {
  std::vector<std::vector<std::int64_t>> out;
  if (size() == 0) return out;
  out.reserve(size());
  std::vector<std::int64_t> cur = lo;
  while (true) {
    out.push_back(cur);
    // odometer with the last coordinate fastest: lexicographic order
    std::size_t k = dim();
    while (k > 0) {
      --k;
      if (cur[k] < hi[k]) {
        ++cur[k];
        break;
      }
      cur[k] = lo[k];
      if (k == 0) return out;
    }
    if (dim() == 0) return out;
  }
}

Window Box::interval() const {
  if (dim() != 1) throw DomainError("Box::interval: box is not one-dimensional");
  return Window(lo[0], hi[0]);
}

BallGroup::BallGroup(int dim, std::int64_t radius) : dim_(dim), radius_(radius) {
  if (dim < 1) throw DomainError("BallGroup: dimension must be positive");
  if (radius < 1) throw DomainError("BallGroup: generating radius must be at least 1");
}

BallGroup BallGroup::containing(const std::vector<std::int64_t>& offsets) {
  std::int64_t r = 1;
  for (auto g : offsets) r = std::max(r, g < 0 ? -g : g);
  return BallGroup(1, r);
}

Box BallGroup::ball(std::int64_t n) const {
  if (n < 0) throw DomainError("ball: radius index must be nonnegative");
  Box b;
  b.lo.assign(static_cast<std::size_t>(dim_), -n * radius_);
  b.hi.assign(static_cast<std::size_t>(dim_), n * radius_);
  return b;
}

Window BallGroup::ball_interval(std::int64_t n) const {
  if (dim_ != 1) throw DomainError("ball_interval: group is not Z");
  if (n < 0) throw DomainError("ball: radius index must be nonnegative");
  return Window(-n * radius_, n * radius_);
}

FiniteAlphabet::FiniteAlphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() >= kDontCare) throw DomainError("alphabet too large");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw DomainError("alphabet: empty symbol name");
    if (!index_.emplace(names_[i], static_cast<Symbol>(i)).second)
      throw DomainError("alphabet: duplicate symbol '" + names_[i] + "'");
  }
}

FiniteAlphabet FiniteAlphabet::numeric(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back(std::to_string(i));
  return FiniteAlphabet(std::move(names));
}

const std::string& FiniteAlphabet::name(Symbol s) const {
  if (s >= names_.size()) throw DomainError("alphabet: symbol id out of range");
  return names_[s];
}

Symbol FiniteAlphabet::id(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw DomainError("alphabet: unknown symbol '" + std::string(name) + "'");
  return it->second;
}

std::string FiniteAlphabet::format(const Word& w, std::string_view sep) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += sep;
    out += w[i] == kDontCare ? std::string("*") : name(w[i]);
  }
  return out;
}

Pattern::Pattern(Window window, Word values) : window_(window), values_(std::move(values)) {
  if (values_.size() != window_.size())
    throw DomainError("pattern: " + std::to_string(values_.size()) + " values for window " +
                      window_.to_string());
}

Pattern Pattern::at(std::int64_t start, Word values) {
  const auto n = static_cast<std::int64_t>(values.size());
  return Pattern(Window::of_length(start, n), std::move(values));
}

Symbol Pattern::operator()(std::int64_t n) const {
  if (!window_.contains(n))
    throw DomainError("pattern: index " + std::to_string(n) + " outside " + window_.to_string());
  return values_[static_cast<std::size_t>(n - window_.lo())];
}

bool Pattern::is_complete() const {
  return std::find(values_.begin(), values_.end(), kDontCare) == values_.end();
}

Pattern Pattern::restrict(const Window& sub) const {
  if (!window_.contains(sub))
    throw DomainError("restrict: " + sub.to_string() + " is not contained in " + window_.to_string());
  if (sub.empty()) return Pattern(sub, {});
  auto first = values_.begin() + (sub.lo() - window_.lo());
  return Pattern(sub, Word(first, first + static_cast<std::ptrdiff_t>(sub.size())));
}

Pattern Pattern::translate(std::int64_t g) const { return Pattern(window_.translated(g), values_); }

PeriodicConfig::PeriodicConfig(Word cells) : cells_(std::move(cells)) {
  if (cells_.empty()) throw DomainError("periodic configuration: period must be positive");
}

Pattern PeriodicConfig::restrict(const Window& w) const {
  Word v;
  v.reserve(w.size());
  for (std::int64_t n = w.lo(); n <= w.hi(); ++n) v.push_back((*this)(n));
  return Pattern(w, std::move(v));
}

PeriodicConfig PeriodicConfig::translate(std::int64_t g) const {
  const auto p = static_cast<std::int64_t>(period());
  Word v(cells_.size());
  for (std::int64_t n = 0; n < p; ++n) v[static_cast<std::size_t>(n)] = (*this)(n - g);
  return PeriodicConfig(std::move(v));
}

std::size_t PeriodicConfig::least_period() const {
  const std::size_t p = cells_.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < p && ok; ++i) ok = cells_[i] == cells_[i - d];
    if (ok) return d;
  }
  return p;
}

PeriodicConfig PeriodicConfig::reduced() const {
  const std::size_t d = least_period();
  if (d == cells_.size()) return *this;
  return PeriodicConfig(Word(cells_.begin(), cells_.begin() + static_cast<std::ptrdiff_t>(d)));
}

PeriodicConfig PeriodicConfig::with_period(std::size_t q) const {
  const std::size_t d = least_period();
  if (q == 0 || q % d)
    throw DomainError("with_period: " + std::to_string(q) + " is not a multiple of the least period " +
                      std::to_string(d));
  Word v(q);
  for (std::size_t i = 0; i < q; ++i) v[i] = cells_[i % d];
  return PeriodicConfig(std::move(v));
}

std::vector<PeriodicConfig> shift_orbit(const PeriodicConfig& x) {
  const PeriodicConfig r = x.reduced();
  std::vector<PeriodicConfig> out;
  for (std::size_t g = 0; g < r.period(); ++g) out.push_back(r.translate(static_cast<std::int64_t>(g)));
  return out;
}

}  // namespace symdyn
