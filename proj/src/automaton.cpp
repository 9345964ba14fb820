#include "symdyn/automaton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace symdyn {

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace

CellularAutomaton::CellularAutomaton(FiniteAlphabet source, FiniteAlphabet target, std::vector<std::int64_t> memory,
                                     std::vector<Symbol> table)
    : source_(std::move(source)), target_(std::move(target)), memory_(std::move(memory)), table_(std::move(table)) {
  if (source_.size() == 0 || target_.size() == 0) throw DomainError("cellular automaton: empty alphabet");
  if (memory_.empty()) throw DomainError("cellular automaton: memory must be nonempty");
  if (!std::is_sorted(memory_.begin(), memory_.end()))
    throw DomainError("cellular automaton: memory offsets must be listed in increasing order");
  for (std::size_t i = 1; i < memory_.size(); ++i)
    if (memory_[i] == memory_[i - 1])
      throw DomainError("cellular automaton: duplicate memory offset " + std::to_string(memory_[i]));
  hull_ = Window(memory_.front(), memory_.back());
  const std::size_t k = memory_.size();
  const std::size_t expected = checked_power(source_.size(), k, kDefaultTableCap);
  if (expected > kDefaultTableCap) throw ResourceError("cellular automaton: rule table too large");
  if (table_.size() != expected)
    throw DomainError("cellular automaton: table has " + std::to_string(table_.size()) + " entries, expected " +
                      std::to_string(expected));
  for (Symbol s : table_)
    if (s >= target_.size()) throw DomainError("cellular automaton: table value outside target alphabet");
  place_.assign(k, 1);
  for (std::size_t i = k; i-- > 1;) place_[i - 1] = place_[i] * source_.size();
}

CellularAutomaton::CellularAutomaton(FiniteAlphabet alphabet, std::vector<std::int64_t> memory, std::vector<Symbol> table)
    : CellularAutomaton(alphabet, alphabet, std::move(memory), std::move(table)) {}

CellularAutomaton CellularAutomaton::from_function(FiniteAlphabet source, FiniteAlphabet target,
                                                   std::vector<std::int64_t> memory,
                                                   const std::function<Symbol(const Word&)>& mu, std::size_t cap) {
  std::sort(memory.begin(), memory.end());
  const std::size_t k = memory.size();
  const std::size_t n = checked_power(source.size(), k, cap);
  if (n > cap) throw ResourceError("rule table exceeds " + std::to_string(cap) + " entries");
  std::vector<Symbol> table(n);
  Word w(k, 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rem = idx;
    for (std::size_t i = k; i-- > 0;) {
      w[i] = static_cast<Symbol>(rem % source.size());
      rem /= source.size();
    }
    table[idx] = mu(w);
  }
  return CellularAutomaton(std::move(source), std::move(target), std::move(memory), std::move(table));
}

CellularAutomaton CellularAutomaton::from_rule_number(std::size_t alphabet_size, std::vector<std::int64_t> memory,
                                                      std::uint64_t number) {
  const FiniteAlphabet a = FiniteAlphabet::numeric(alphabet_size);
  const std::size_t n = checked_power(alphabet_size, memory.size(), kDefaultTableCap);
  std::vector<Symbol> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    table[i] = static_cast<Symbol>(number % alphabet_size);
    number /= alphabet_size;
  }
  if (number != 0) throw DomainError("rule number out of range for this alphabet and memory");
  return CellularAutomaton(a, std::move(memory), std::move(table));
}

CellularAutomaton CellularAutomaton::elementary(unsigned number) {
  if (number > 255) throw DomainError("elementary rule number must be in [0, 255]");
  return from_rule_number(2, {-1, 0, 1}, number);
}

CellularAutomaton CellularAutomaton::identity(const FiniteAlphabet& a) {
  std::vector<Symbol> table(a.size());
  std::iota(table.begin(), table.end(), Symbol{0});
  return CellularAutomaton(a, {0}, std::move(table));
}

CellularAutomaton CellularAutomaton::constant(const FiniteAlphabet& a, Symbol value) {
  return CellularAutomaton(a, {0}, std::vector<Symbol>(a.size(), value));
}

CellularAutomaton CellularAutomaton::shift(const FiniteAlphabet& a) {
  std::vector<Symbol> table(a.size());
  std::iota(table.begin(), table.end(), Symbol{0});
  return CellularAutomaton(a, {1}, std::move(table));
}

std::size_t CellularAutomaton::index_of(const Word& v) const {
  if (v.size() != memory_.size()) throw DomainError("rule: wrong number of memory values");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] >= source_.size()) throw DomainError("rule: symbol outside source alphabet");
    idx += v[i] * place_[i];
  }
  return idx;
}

Word CellularAutomaton::entry(std::size_t index) const {
  Word w(memory_.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<Symbol>((index / place_[i]) % source_.size());
  return w;
}

Symbol CellularAutomaton::rule_at(const Word& w, std::size_t hull_start) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < memory_.size(); ++i) {
    const Symbol s = w[hull_start + static_cast<std::size_t>(memory_[i] - hull_.lo())];
    if (s == kDontCare) return kDontCare;
    idx += s * place_[i];
  }
  return table_[idx];
}

Word CellularAutomaton::apply_to_word(const Word& w) const {
  const std::size_t width = hull_.size();
  if (w.size() < width)
    throw DomainError("apply: input of length " + std::to_string(w.size()) + " is narrower than the memory hull (" +
                      std::to_string(width) + " cells required)");
  Word out(w.size() - width + 1);
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = rule_at(w, n);
  return out;
}

Pattern CellularAutomaton::apply_to_pattern(const Pattern& p) const {
  Word out = apply_to_word(p.values());
  const Window w = Window::of_length(p.window().lo() - hull_.lo(), static_cast<std::int64_t>(out.size()));
  return Pattern(w, std::move(out));
}

PeriodicConfig CellularAutomaton::apply_to_periodic(const PeriodicConfig& x) const {
  if (!is_endomorphism() && x.cells().empty()) throw DomainError("apply: empty configuration");
  const auto p = static_cast<std::int64_t>(x.period());
  Word out(x.period());
  Word vals(memory_.size());
  for (std::int64_t n = 0; n < p; ++n) {
    for (std::size_t i = 0; i < memory_.size(); ++i) vals[i] = x(n + memory_[i]);
    out[static_cast<std::size_t>(n)] = table_[index_of(vals)];
  }
  return PeriodicConfig(std::move(out));
}

bool CellularAutomaton::is_constant() const {
  return std::all_of(table_.begin(), table_.end(), [&](Symbol s) { return s == table_.front(); });
}

CellularAutomaton CellularAutomaton::normalize() const {
  if (is_constant()) return CellularAutomaton(source_, target_, {0}, std::vector<Symbol>(source_.size(), table_[0]));
  const std::size_t k = memory_.size();
  const std::size_t b = source_.size();
  std::vector<bool> sensitive(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t idx = 0; idx < table_.size() && !sensitive[i]; ++idx) {
      const std::size_t digit = (idx / place_[i]) % b;
      if (digit != 0) continue;
      for (std::size_t s = 1; s < b; ++s)
        if (table_[idx + s * place_[i]] != table_[idx]) {
          sensitive[i] = true;
          break;
        }
    }
  }
  std::vector<std::int64_t> mem;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < k; ++i)
    if (sensitive[i]) {
      mem.push_back(memory_[i]);
      keep.push_back(i);
    }
  if (mem.size() == k) return *this;
  const std::size_t n = checked_power(b, mem.size(), kDefaultTableCap);
  std::vector<Symbol> table(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t rem = j, idx = 0;
    for (std::size_t t = keep.size(); t-- > 0;) {
      idx += (rem % b) * place_[keep[t]];
      rem /= b;
    }
    table[j] = table_[idx];
  }
  return CellularAutomaton(source_, target_, std::move(mem), std::move(table));
}

// --- composition -------------------------------------------------------------

Symbol ComposedRule::evaluate(const Word& over_hull) const {
  if (over_hull.size() != hull_.size()) throw DomainError("composed rule: input must cover the hull");
  if (mode_ == Mode::Table) return table_->rule_at(over_hull, 0);
  Word w = over_hull;
  for (std::size_t i = 0; i < power_; ++i) w = base_->apply_to_word(w);
  return w[0];
}

const CellularAutomaton& ComposedRule::automaton() const {
  if (!table_) throw DomainError("composed rule: no table in lazy mode");
  return *table_;
}

ComposedRule compose(const CellularAutomaton& ca, std::size_t n, ComposedRule::Mode mode, std::size_t cap) {
  if (n == 0) throw DomainError("compose: power must be positive");
  if (n > 1 && !ca.is_endomorphism()) throw DomainError("compose: source and target alphabets differ");
  ComposedRule r;
  r.base_ = std::make_shared<const CellularAutomaton>(ca);
  r.power_ = n;
  r.mode_ = mode;
  std::set<std::int64_t> sum{0};
  for (std::size_t i = 0; i < n; ++i) {
    std::set<std::int64_t> next;
    for (auto a : sum)
      for (auto m : ca.memory()) next.insert(a + m);
    sum = std::move(next);
  }
  r.memory_.assign(sum.begin(), sum.end());
  r.hull_ = Window(r.memory_.front(), r.memory_.back());
  if (mode == ComposedRule::Mode::Lazy) return r;
  if (n == 1) {
    r.table_ = r.base_;
    return r;
  }
  const std::size_t k = r.memory_.size();
  const std::size_t b = ca.source().size();
  const std::size_t size = checked_power(b, k, cap);
  if (size > cap)
    throw ResourceError("compose: table for power " + std::to_string(n) + " exceeds " + std::to_string(cap) +
                        " entries; use lazy mode");
  std::vector<Symbol> table(size);
  Word w(r.hull_.size(), kDontCare);
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::size_t rem = idx;
    for (std::size_t t = k; t-- > 0;) {
      w[static_cast<std::size_t>(r.memory_[t] - r.hull_.lo())] = static_cast<Symbol>(rem % b);
      rem /= b;
    }
    Word v = w;
    for (std::size_t i = 0; i < n; ++i) v = ca.apply_to_word(v);
    table[idx] = v[0];
  }
  r.table_ = std::make_shared<const CellularAutomaton>(ca.source(), ca.target(), r.memory_, std::move(table));
  return r;
}

// --- images -------------------------------------------------------------------

SoficPresentation image_presentation(const CellularAutomaton& ca, const SoficPresentation& source) {
  if (!(ca.source() == source.alphabet()))
    throw DomainError("image: automaton source alphabet differs from the subshift alphabet");
  const SoficPresentation t = trim(source);
  SoficPresentation img(ca.target());
  const std::size_t w = ca.hull().size();
  if (w == 1) {
    for (std::size_t v = 0; v < t.num_vertices(); ++v) img.add_vertex(t.vertex_names()[v]);
    for (const auto& e : t.edges()) img.add_edge(e.from, e.to, ca.rule(Word{e.label}));
    return canonical_presentation(img);
  }
  std::vector<std::vector<std::uint32_t>> out(t.num_vertices());
  for (std::uint32_t i = 0; i < t.edges().size(); ++i) out[t.edges()[i].from].push_back(i);
  // Vertices: paths of w-1 edges.
  std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
  std::vector<std::vector<std::uint32_t>> paths;
  std::vector<std::uint32_t> path;
  auto extend = [&](auto&& self, std::uint32_t at) -> void {
    if (path.size() == w - 1) {
      ids.emplace(path, static_cast<std::uint32_t>(paths.size()));
      paths.push_back(path);
      return;
    }
    for (auto e : out[at]) {
      path.push_back(e);
      self(self, t.edges()[e].to);
      path.pop_back();
    }
  };
  for (std::uint32_t v = 0; v < t.num_vertices(); ++v) extend(extend, v);
  for (std::size_t i = 0; i < paths.size(); ++i) img.add_vertex("p" + std::to_string(i));
  Word labels(w);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& p = paths[i];
    for (auto e : out[t.edges()[p.back()].to]) {
      std::vector<std::uint32_t> longer = p;
      longer.push_back(e);
      for (std::size_t k = 0; k < w; ++k) labels[k] = t.edges()[longer[k]].label;
      std::vector<std::uint32_t> suffix(longer.begin() + 1, longer.end());
      img.add_edge(static_cast<std::uint32_t>(i), ids.at(suffix), ca.rule_at(labels, 0));
    }
  }
  return canonical_presentation(img);
}

SoficPresentation image_presentation(const CellularAutomaton& ca, const Sft& source) {
  return image_presentation(ca, presentation_of(source));
}

// --- subgroups ----------------------------------------------------------------

CellularAutomaton restrict_to_subgroup(const CellularAutomaton& ca, std::int64_t h) {
  if (h < 1) throw DomainError("restrict_to_subgroup: index must be positive");
  std::vector<std::int64_t> mem;
  for (auto m : ca.memory()) {
    if (m % h != 0)
      throw DomainError("restrict_to_subgroup: memory element " + std::to_string(m) + " is not in " +
                        std::to_string(h) + "Z");
    mem.push_back(m / h);
  }
  return CellularAutomaton(ca.source(), ca.target(), std::move(mem), ca.table());
}

PeriodicConfig coset_component(const PeriodicConfig& x, std::int64_t h, std::int64_t c) {
  if (h < 1) throw DomainError("coset_component: index must be positive");
  const auto p = static_cast<std::int64_t>(x.period());
  const std::int64_t q = p / std::gcd(p, h);
  Word v(static_cast<std::size_t>(q));
  for (std::int64_t n = 0; n < q; ++n) v[static_cast<std::size_t>(n)] = x(c + h * n);
  return PeriodicConfig(std::move(v));
}

Pattern coset_component(const Pattern& p, std::int64_t h, std::int64_t c) {
  if (h < 1) throw DomainError("coset_component: index must be positive");
  if (p.window().empty()) return p;
  auto ceil_div = [](std::int64_t a, std::int64_t b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); };
  auto floor_div = [](std::int64_t a, std::int64_t b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
  const std::int64_t lo = ceil_div(p.window().lo() - c, h);
  const std::int64_t hi = floor_div(p.window().hi() - c, h);
  Word v;
  for (std::int64_t n = lo; n <= hi; ++n) v.push_back(p(c + h * n));
  return Pattern(Window(lo, hi), std::move(v));
}

PeriodicConfig interleave(const std::vector<PeriodicConfig>& parts) {
  if (parts.empty()) throw DomainError("interleave: no components");
  const auto h = static_cast<std::int64_t>(parts.size());
  std::int64_t l = 1;
  for (const auto& x : parts) l = std::lcm(l, static_cast<std::int64_t>(x.period()));
  Word v(static_cast<std::size_t>(h * l));
  for (std::int64_t n = 0; n < l; ++n)
    for (std::int64_t c = 0; c < h; ++c) v[static_cast<std::size_t>(c + h * n)] = parts[static_cast<std::size_t>(c)](n);
  return PeriodicConfig(std::move(v));
}

// --- Lagrange lift ------------------------------------------------------------

Polynomial lagrange_lift(const CellularAutomaton& ca, const std::vector<Rational>& values) {
  if (!ca.is_endomorphism()) throw DomainError("lagrange_lift: source and target alphabets differ");
  const std::size_t b = ca.source().size();
  if (values.size() != b) throw DomainError("lagrange_lift: need one value per symbol");
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = i + 1; j < b; ++j)
      if (values[i] == values[j])
        throw DomainError("lagrange_lift: symbols " + ca.source().name(static_cast<Symbol>(i)) + " and " +
                          ca.source().name(static_cast<Symbol>(j)) + " share the value " + to_string(values[i]));
  // basis[(a, g)] = prod_{c != a} (t_g - v_c) / (v_a - v_c)
  std::map<std::pair<std::size_t, std::int64_t>, Polynomial> basis;
  for (auto g : ca.memory())
    for (std::size_t a = 0; a < b; ++a) {
      Polynomial l(Rational(1));
      for (std::size_t c = 0; c < b; ++c) {
        if (c == a) continue;
        Polynomial factor = Polynomial::variable(g) - Polynomial(values[c]);
        factor *= Polynomial(Rational(1) / (values[a] - values[c]));
        l *= factor;
      }
      basis.emplace(std::make_pair(a, g), std::move(l));
    }
  Polynomial out;
  for (std::size_t idx = 0; idx < ca.table().size(); ++idx) {
    const Rational& v = values[ca.table()[idx]];
    if (v == 0) continue;
    const Word e = ca.entry(idx);
    Polynomial term(v);
    for (std::size_t i = 0; i < e.size(); ++i) term *= basis.at({e[i], ca.memory()[i]});
    out += term;
  }
  return out;
}

// --- sub-finite-type presentation ---------------------------------------------

SubFiniteType sub_finite_type_presentation(const FiniteSubshift& fs) {
  if (fs.size() == 0) throw DomainError("sub_finite_type_presentation: the subshift must be nonempty");
  if (!fs.shift_closed()) throw DomainError("sub_finite_type_presentation: the set is not closed under the shift");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < fs.size(); ++i) names.push_back("b" + std::to_string(i));
  const FiniteAlphabet b(names);
  auto symbol_of = [&](const PeriodicConfig& x) {
    auto it = std::lower_bound(fs.members().begin(), fs.members().end(), x.reduced());
    return static_cast<Symbol>(it - fs.members().begin());
  };
  std::set<Word> allowed;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto& x = fs.members()[i];
    allowed.insert(Word{symbol_of(x.translate(1)), static_cast<Symbol>(i), symbol_of(x.translate(-1))});
  }
  Sft aux(b, Window(-1, 1), std::move(allowed));
  std::vector<Symbol> table(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) table[i] = fs.members()[i](0);
  CellularAutomaton proj(b, fs.alphabet(), {0}, std::move(table));
  if (!equal_subshifts(image_presentation(proj, aux), presentation_of(fs)))
    throw std::logic_error("sub_finite_type_presentation: image differs from the input subshift");
  return SubFiniteType{std::move(aux), std::move(proj)};
}

}  // namespace symdyn
