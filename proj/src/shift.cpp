#include "symdyn/shift.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace symdyn {

namespace {

void check_word(const FiniteAlphabet& a, const Word& w, const char* what) {
  for (Symbol s : w)
    if (s >= a.size()) throw DomainError(std::string(what) + ": symbol id out of alphabet range");
}

// Per vertex, per symbol: successor vertices.
struct LabelledAdjacency {
  std::size_t k = 0;
  std::vector<std::vector<std::uint32_t>> succ;  // index v * k + a

  explicit LabelledAdjacency(const SoficPresentation& p) : k(p.alphabet().size()) {
    succ.resize(p.num_vertices() * k);
    for (const auto& e : p.edges()) succ[e.from * k + e.label].push_back(e.to);
    for (auto& s : succ) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
  }

  std::vector<std::uint32_t> step(const std::vector<std::uint32_t>& set, Symbol a) const {
    std::vector<std::uint32_t> out;
    for (auto v : set) {
      const auto& s = succ[v * k + a];
      out.insert(out.end(), s.begin(), s.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

std::vector<std::uint32_t> all_vertices(std::size_t n) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  return v;
}

// Moore partition refinement on a partial DFA. Returns the class of each state.
std::vector<std::int32_t> refine(std::size_t n, std::size_t k, const std::vector<std::int32_t>& delta) {
  std::vector<std::int32_t> cls(n, 0);
  std::size_t num_classes = n ? 1 : 0;
  while (true) {
    std::map<std::vector<std::int32_t>, std::int32_t> sig_ids;
    std::vector<std::int32_t> next(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::int32_t> sig;
      sig.reserve(k + 1);
      sig.push_back(cls[s]);
      for (std::size_t a = 0; a < k; ++a) {
        const auto t = delta[s * k + a];
        sig.push_back(t < 0 ? -1 : cls[static_cast<std::size_t>(t)]);
      }
      auto [it, inserted] = sig_ids.emplace(std::move(sig), static_cast<std::int32_t>(sig_ids.size()));
      next[s] = it->second;
    }
    const std::size_t count = sig_ids.size();
    cls = std::move(next);
    if (count == num_classes) return cls;
    num_classes = count;
  }
}

// Breadth-first renumbering of the quotient automaton from `initial`.
CanonicalForm bfs_canonical(std::size_t k, std::int32_t initial_class, std::size_t num_classes,
                            const std::vector<std::int32_t>& class_delta) {
  CanonicalForm cf;
  cf.alphabet_size = k;
  cf.empty_language = false;
  std::vector<std::int32_t> number(num_classes, -1);
  std::vector<std::int32_t> order;
  std::deque<std::int32_t> queue{initial_class};
  number[static_cast<std::size_t>(initial_class)] = 0;
  order.push_back(initial_class);
  while (!queue.empty()) {
    const auto c = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < k; ++a) {
      const auto t = class_delta[static_cast<std::size_t>(c) * k + a];
      if (t >= 0 && number[static_cast<std::size_t>(t)] < 0) {
        number[static_cast<std::size_t>(t)] = static_cast<std::int32_t>(order.size());
        order.push_back(t);
        queue.push_back(t);
      }
    }
  }
  cf.num_states = order.size();
  cf.delta.assign(cf.num_states * k, -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      const auto t = class_delta[static_cast<std::size_t>(order[i]) * k + a];
      cf.delta[i * k + a] = t < 0 ? -1 : number[static_cast<std::size_t>(t)];
    }
  }
  return cf;
}

std::size_t gcd_period(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& arcs) {
  // BFS levels from vertex 0; the period of a strongly connected graph is the
  // gcd of level[u] + 1 - level[v] over all arcs.
  std::vector<std::vector<std::uint32_t>> out(n);
  for (auto [u, v] : arcs) out[u].push_back(v);
  std::vector<std::int64_t> level(n, -1);
  std::deque<std::uint32_t> q{0};
  level[0] = 0;
  while (!q.empty()) {
    auto u = q.front();
    q.pop_front();
    for (auto v : out[u])
      if (level[v] < 0) {
        level[v] = level[u] + 1;
        q.push_back(v);
      }
  }
  std::int64_t g = 0;
  for (auto [u, v] : arcs) {
    const std::int64_t d = level[u] + 1 - level[v];
    g = std::gcd(g, d < 0 ? -d : d);
  }
  return static_cast<std::size_t>(g);
}

}  // namespace

// --- Sft -------------------------------------------------------------------

Sft::Sft(FiniteAlphabet alphabet, Window window, std::set<Word> allowed)
    : alphabet_(std::move(alphabet)), window_(window), allowed_(std::move(allowed)) {
  if (window_.empty()) throw DomainError("sft: defining window must be nonempty");
  for (const auto& w : allowed_) {
    if (w.size() != window_.size())
      throw DomainError("sft: allowed pattern of length " + std::to_string(w.size()) +
                        " does not match window " + window_.to_string());
    check_word(alphabet_, w, "sft");
  }
}

Sft Sft::full(const FiniteAlphabet& alphabet) {
  std::set<Word> allowed;
  for (std::size_t a = 0; a < alphabet.size(); ++a) allowed.insert(Word{static_cast<Symbol>(a)});
  return Sft(alphabet, Window(0, 0), std::move(allowed));
}

bool Sft::locally_admissible(const Word& w) const {
  const std::size_t d = window_.size();
  if (w.size() < d) return true;
  Word factor(d);
  for (std::size_t s = 0; s + d <= w.size(); ++s) {
    std::copy(w.begin() + static_cast<std::ptrdiff_t>(s), w.begin() + static_cast<std::ptrdiff_t>(s + d),
              factor.begin());
    if (!allows(factor)) return false;
  }
  return true;
}

bool Sft::locally_admissible(const Pattern& p) const { return locally_admissible(p.values()); }

// --- WindowLanguage ----------------------------------------------------------

WindowLanguage::WindowLanguage(Window window, std::vector<Word> words)
    : window_(window), words_(std::move(words)) {
  for (const auto& w : words_)
    if (w.size() != window_.size()) throw DomainError("window language: pattern length mismatch");
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool WindowLanguage::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

std::vector<Pattern> WindowLanguage::patterns() const {
  std::vector<Pattern> out;
  out.reserve(words_.size());
  for (const auto& w : words_) out.emplace_back(window_, w);
  return out;
}

WindowLanguage intersect(const WindowLanguage& a, const WindowLanguage& b) {
  if (!(a.window() == b.window())) throw DomainError("intersect: window mismatch");
  std::vector<Word> out;
  std::set_intersection(a.words().begin(), a.words().end(), b.words().begin(), b.words().end(),
                        std::back_inserter(out));
  return WindowLanguage(a.window(), std::move(out));
}

// --- SoficPresentation -------------------------------------------------------

std::uint32_t SoficPresentation::add_vertex(std::string name) {
  vertex_names_.push_back(std::move(name));
  return static_cast<std::uint32_t>(vertex_names_.size() - 1);
}

void SoficPresentation::add_edge(std::uint32_t from, std::uint32_t to, Symbol label) {
  if (from >= num_vertices() || to >= num_vertices()) throw DomainError("edge: vertex out of range");
  if (label >= alphabet_.size()) throw DomainError("edge: label outside alphabet");
  edges_.push_back(Edge{from, to, label});
}

// --- FiniteSubshift ----------------------------------------------------------

FiniteSubshift::FiniteSubshift(FiniteAlphabet alphabet, std::vector<PeriodicConfig> members)
    : alphabet_(std::move(alphabet)) {
  for (auto& m : members) {
    check_word(alphabet_, m.cells(), "finite subshift");
    members_.push_back(m.reduced());
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

FiniteSubshift FiniteSubshift::from_orbits(FiniteAlphabet alphabet, const std::vector<PeriodicConfig>& seeds) {
  std::vector<PeriodicConfig> all;
  for (const auto& s : seeds)
    for (auto& x : shift_orbit(s)) all.push_back(std::move(x));
  return FiniteSubshift(std::move(alphabet), std::move(all));
}

bool FiniteSubshift::contains(const PeriodicConfig& x) const {
  return std::binary_search(members_.begin(), members_.end(), x.reduced());
}

bool FiniteSubshift::shift_closed() const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](const PeriodicConfig& x) { return contains(x.translate(1)); });
}

// --- presentations -----------------------------------------------------------

SoficPresentation presentation_of(const Sft& sft) {
  SoficPresentation p(sft.alphabet());
  const std::size_t d = sft.window().size();
  if (d == 1) {
    const auto v = p.add_vertex("e");
    for (const auto& w : sft.allowed()) p.add_edge(v, v, w[0]);
    return p;
  }
  std::map<Word, std::uint32_t> ids;
  auto vertex = [&](const Word& block) {
    auto it = ids.find(block);
    if (it != ids.end()) return it->second;
    const auto id = p.add_vertex("b" + sft.alphabet().format(block, "_"));
    ids.emplace(block, id);
    return id;
  };
  for (const auto& w : sft.allowed()) {
    const Word prefix(w.begin(), w.end() - 1);
    const Word suffix(w.begin() + 1, w.end());
    const auto from = vertex(prefix);
    const auto to = vertex(suffix);
    p.add_edge(from, to, w.back());
  }
  return p;
}

SoficPresentation presentation_of(const FiniteSubshift& fs) {
  SoficPresentation p(fs.alphabet());
  std::vector<bool> done(fs.size(), false);
  std::size_t orbit = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (done[i]) continue;
    const auto& x = fs.members()[i];
    for (const auto& y : shift_orbit(x)) {
      auto it = std::lower_bound(fs.members().begin(), fs.members().end(), y);
      if (it != fs.members().end() && *it == y) done[static_cast<std::size_t>(it - fs.members().begin())] = true;
    }
    const std::size_t period = x.period();
    const auto first = static_cast<std::uint32_t>(p.num_vertices());
    for (std::size_t j = 0; j < period; ++j)
      p.add_vertex("o" + std::to_string(orbit) + "_" + std::to_string(j));
    for (std::size_t j = 0; j < period; ++j)
      p.add_edge(first + static_cast<std::uint32_t>(j), first + static_cast<std::uint32_t>((j + 1) % period),
                 x.cells()[j]);
    ++orbit;
  }
  return p;
}

SoficPresentation trim(const SoficPresentation& p) {
  const std::size_t n = p.num_vertices();
  std::vector<std::size_t> indeg(n, 0), outdeg(n, 0);
  std::vector<std::vector<std::uint32_t>> in(n), out(n);
  for (const auto& e : p.edges()) {
    ++outdeg[e.from];
    ++indeg[e.to];
    out[e.from].push_back(e.to);
    in[e.to].push_back(e.from);
  }
  std::vector<bool> alive(n, true);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t v = 0; v < n; ++v)
    if (indeg[v] == 0 || outdeg[v] == 0) {
      alive[v] = false;
      queue.push_back(v);
    }
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto w : out[v])
      if (alive[w] && --indeg[w] == 0) {
        alive[w] = false;
        queue.push_back(w);
      }
    for (auto u : in[v])
      if (alive[u] && --outdeg[u] == 0) {
        alive[u] = false;
        queue.push_back(u);
      }
  }
  SoficPresentation t(p.alphabet());
  std::vector<std::uint32_t> remap(n, 0);
  for (std::uint32_t v = 0; v < n; ++v)
    if (alive[v]) remap[v] = t.add_vertex(p.vertex_names()[v]);
  for (const auto& e : p.edges())
    if (alive[e.from] && alive[e.to]) t.add_edge(remap[e.from], remap[e.to], e.label);
  return t;
}

Emptiness is_empty(const SoficPresentation& p) {
  const SoficPresentation t = trim(p);
  if (t.num_vertices() == 0) return {};
  std::vector<std::int64_t> first_out(t.num_vertices(), -1);
  for (std::size_t i = 0; i < t.edges().size(); ++i) {
    auto& f = first_out[t.edges()[i].from];
    if (f < 0) f = static_cast<std::int64_t>(i);
  }
  // Every trimmed vertex has an out-edge, so walking first edges must cycle.
  std::vector<std::int64_t> seen_at(t.num_vertices(), -1);
  std::vector<Symbol> labels;
  std::uint32_t v = 0;
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<std::int64_t>(labels.size());
    const auto& e = t.edges()[static_cast<std::size_t>(first_out[v])];
    labels.push_back(e.label);
    v = e.to;
  }
  Word cycle(labels.begin() + seen_at[v], labels.end());
  return Emptiness{false, PeriodicConfig(std::move(cycle)).reduced()};
}

Emptiness is_empty(const Sft& sft) { return is_empty(presentation_of(sft)); }

std::vector<Word> words_of_length(const SoficPresentation& p, std::size_t length, std::size_t cap) {
  const SoficPresentation t = trim(p);
  std::vector<Word> out;
  if (t.num_vertices() == 0) return out;
  if (length == 0) return {Word{}};
  const LabelledAdjacency adj(t);
  const std::size_t k = t.alphabet().size();
  struct Frame {
    std::vector<std::uint32_t> set;
    Symbol next;
  };
  std::vector<Frame> stack;
  Word word;
  stack.push_back(Frame{all_vertices(t.num_vertices()), 0});
  while (!stack.empty()) {
    auto& top = stack.back();
    if (top.next >= k) {
      stack.pop_back();
      if (!word.empty()) word.pop_back();
      continue;
    }
    const Symbol a = top.next++;
    auto nxt = adj.step(top.set, a);
    if (nxt.empty()) continue;
    word.push_back(a);
    if (word.size() == length) {
      if (out.size() >= cap) throw ResourceError("words_of_length: more than " + std::to_string(cap) + " words");
      out.push_back(word);
      word.pop_back();
      continue;
    }
    stack.push_back(Frame{std::move(nxt), 0});
  }
  return out;
}

bool accepts_word(const SoficPresentation& p, const Word& w) {
  const SoficPresentation t = trim(p);
  if (t.num_vertices() == 0) return false;
  const LabelledAdjacency adj(t);
  auto set = all_vertices(t.num_vertices());
  for (Symbol a : w) {
    if (a >= t.alphabet().size()) return false;
    set = adj.step(set, a);
    if (set.empty()) return false;
  }
  return true;
}

bool contains_periodic(const SoficPresentation& p, const PeriodicConfig& x) {
  const SoficPresentation t = trim(p);
  const std::size_t n = t.num_vertices();
  if (n == 0) return false;
  const LabelledAdjacency adj(t);
  // reach[u] = vertices reachable from u by a path labelled with one period.
  std::vector<std::vector<std::uint32_t>> reach(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    std::vector<std::uint32_t> set{u};
    for (Symbol a : x.cells()) {
      if (a >= t.alphabet().size()) return false;
      set = adj.step(set, a);
      if (set.empty()) break;
    }
    reach[u] = std::move(set);
  }
  // x is presented iff the period relation has a cycle.
  std::vector<int> color(n, 0);
  for (std::uint32_t s = 0; s < n; ++s) {
    if (color[s]) continue;
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{s, 0}};
    color[s] = 1;
    while (!stack.empty()) {
      auto& [u, i] = stack.back();
      if (i < reach[u].size()) {
        const auto v = reach[u][i++];
        if (color[v] == 1) return true;
        if (color[v] == 0) {
          color[v] = 1;
          stack.emplace_back(v, 0);
        }
      } else {
        color[u] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

// All words of length p whose periodic extension lies in the presented shift.
std::vector<PeriodicConfig> periodic_points(const SoficPresentation& pres, std::size_t p, std::size_t cap) {
  const std::size_t k = pres.alphabet().size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < p; ++i) {
    if (total > cap / std::max<std::size_t>(k, 1)) throw ResourceError("periodic enumeration exceeds the pattern cap");
    total *= k;
  }
  const SoficPresentation t = trim(pres);
  std::vector<PeriodicConfig> out;
  Word w(p, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    for (std::size_t i = p; i-- > 0;) {
      w[i] = static_cast<Symbol>(rem % k);
      rem /= k;
    }
    PeriodicConfig x(w);
    if (contains_periodic(t, x)) out.push_back(std::move(x));
  }
  return out;
}

WindowLanguage window_language(const Sft& sft, const Window& e, std::size_t cap) {
  return WindowLanguage(e, words_of_length(presentation_of(sft), e.size(), cap));
}

WindowLanguage window_language(const SoficPresentation& p, const Window& e, std::size_t cap) {
  return WindowLanguage(e, words_of_length(p, e.size(), cap));
}

WindowLanguage local_window_set(const Sft& sft, const Window& e, std::size_t cap) {
  const std::size_t n = e.size();
  const std::size_t k = sft.alphabet().size();
  const std::size_t d = sft.window().size();
  std::vector<Word> out;
  if (n == 0) return WindowLanguage(e, {Word{}});
  if (k == 0) return WindowLanguage(e, {});
  Word w;
  w.reserve(n);
  std::vector<Symbol> next{0};
  Word factor(d);
  while (!next.empty()) {
    if (next.back() >= k) {
      next.pop_back();
      if (!w.empty()) w.pop_back();
      continue;
    }
    w.push_back(next.back()++);
    bool ok = true;
    if (w.size() >= d) {
      std::copy(w.end() - static_cast<std::ptrdiff_t>(d), w.end(), factor.begin());
      ok = sft.allows(factor);
    }
    if (!ok) {
      w.pop_back();
      continue;
    }
    if (w.size() == n) {
      if (out.size() >= cap) throw ResourceError("local_window_set: more than " + std::to_string(cap) + " patterns");
      out.push_back(w);
      w.pop_back();
      continue;
    }
    next.push_back(0);
  }
  return WindowLanguage(e, std::move(out));
}

WindowLanguage local_window_set(const Sft& sft, const BallGroup& group, std::int64_t i, std::int64_t j,
                                std::size_t cap) {
  return local_window_set(sft, group.ball_interval(i + j), cap);
}

// --- canonical forms ---------------------------------------------------------

CanonicalForm canonical_form(const SoficPresentation& p, std::size_t state_cap) {
  const SoficPresentation t = trim(p);
  const std::size_t k = t.alphabet().size();
  if (t.num_vertices() == 0) {
    CanonicalForm cf;
    cf.alphabet_size = k;
    return cf;
  }
  const LabelledAdjacency adj(t);
  std::map<std::vector<std::uint32_t>, std::int32_t> ids;
  std::vector<std::vector<std::uint32_t>> states;
  std::vector<std::int32_t> delta;
  auto intern = [&](std::vector<std::uint32_t> set) {
    auto it = ids.find(set);
    if (it != ids.end()) return it->second;
    if (states.size() >= state_cap)
      throw ResourceError("subset construction exceeded " + std::to_string(state_cap) + " states");
    const auto id = static_cast<std::int32_t>(states.size());
    ids.emplace(set, id);
    states.push_back(std::move(set));
    delta.resize(states.size() * k, -1);
    return id;
  };
  intern(all_vertices(t.num_vertices()));
  for (std::size_t s = 0; s < states.size(); ++s) {
    for (std::size_t a = 0; a < k; ++a) {
      auto nxt = adj.step(states[s], static_cast<Symbol>(a));
      if (nxt.empty()) continue;
      const auto id = intern(std::move(nxt));
      delta[s * k + a] = id;
    }
  }
  const std::size_t n = states.size();
  const auto cls = refine(n, k, delta);
  const std::size_t num_classes = static_cast<std::size_t>(*std::max_element(cls.begin(), cls.end())) + 1;
  std::vector<std::int32_t> class_delta(num_classes * k, -1);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t a = 0; a < k; ++a) {
      const auto t2 = delta[s * k + a];
      class_delta[static_cast<std::size_t>(cls[s]) * k + a] = t2 < 0 ? -1 : cls[static_cast<std::size_t>(t2)];
    }
  return bfs_canonical(k, cls[0], num_classes, class_delta);
}

SoficPresentation canonical_presentation(const SoficPresentation& p, std::size_t state_cap) {
  const CanonicalForm cf = canonical_form(p, state_cap);
  SoficPresentation g(p.alphabet());
  for (std::size_t s = 0; s < cf.num_states; ++s) g.add_vertex("q" + std::to_string(s));
  for (std::size_t s = 0; s < cf.num_states; ++s)
    for (std::size_t a = 0; a < cf.alphabet_size; ++a) {
      const auto t = cf.next(s, static_cast<Symbol>(a));
      if (t >= 0) g.add_edge(static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t), static_cast<Symbol>(a));
    }
  SoficPresentation trimmed = trim(g);
  SoficPresentation out(p.alphabet());
  for (std::size_t v = 0; v < trimmed.num_vertices(); ++v) out.add_vertex("q" + std::to_string(v));
  for (const auto& e : trimmed.edges()) out.add_edge(e.from, e.to, e.label);
  return out;
}

bool equal_subshifts(const SoficPresentation& a, const SoficPresentation& b) {
  if (!(a.alphabet() == b.alphabet())) throw DomainError("equal_subshifts: alphabet mismatch");
  return canonical_form(a) == canonical_form(b);
}

bool is_subshift_of(const SoficPresentation& a, const SoficPresentation& b) {
  if (!(a.alphabet() == b.alphabet())) throw DomainError("is_subshift_of: alphabet mismatch");
  const CanonicalForm ca = canonical_form(a);
  const CanonicalForm cb = canonical_form(b);
  if (ca.empty_language) return true;
  if (cb.empty_language) return false;
  const std::size_t k = ca.alphabet_size;
  std::set<std::pair<std::int32_t, std::int32_t>> seen{{0, 0}};
  std::deque<std::pair<std::int32_t, std::int32_t>> q{{0, 0}};
  while (!q.empty()) {
    auto [x, y] = q.front();
    q.pop_front();
    for (std::size_t s = 0; s < k; ++s) {
      const auto nx = ca.next(static_cast<std::size_t>(x), static_cast<Symbol>(s));
      if (nx < 0) continue;
      const auto ny = cb.next(static_cast<std::size_t>(y), static_cast<Symbol>(s));
      if (ny < 0) return false;
      if (seen.emplace(nx, ny).second) q.emplace_back(nx, ny);
    }
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> strongly_connected_components(const SoficPresentation& p) {
  const std::size_t n = p.num_vertices();
  std::vector<std::vector<std::uint32_t>> out_adj(n);
  for (const auto& e : p.edges()) out_adj[e.from].push_back(e.to);
  std::vector<std::int64_t> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::vector<std::vector<std::uint32_t>> comps;
  std::int64_t counter = 0;
  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<std::pair<std::uint32_t, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i < out_adj[v].size()) {
        const auto w = out_adj[v][i++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          std::vector<std::uint32_t> comp;
          std::uint32_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp.push_back(w);
          } while (w != v);
          std::sort(comp.begin(), comp.end());
          comps.push_back(std::move(comp));
        }
        const auto finished = v;
        call.pop_back();
        if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[finished]);
      }
    }
  }
  return comps;
}

const char* to_string(MixingReason r) {
  switch (r) {
    case MixingReason::Mixing: return "mixing";
    case MixingReason::Reducible: return "reducible";
    case MixingReason::Periodic: return "periodic";
  }
  return "?";
}

MixingResult is_mixing(const SoficPresentation& p) {
  const SoficPresentation canon = canonical_presentation(p);
  if (canon.num_vertices() == 0) throw DomainError("is_mixing: the subshift is empty");
  const std::size_t k = canon.alphabet().size();
  for (const auto& comp : strongly_connected_components(canon)) {
    std::vector<std::int64_t> local(canon.num_vertices(), -1);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<std::int64_t>(i);
    SoficPresentation sub(canon.alphabet());
    for (std::size_t i = 0; i < comp.size(); ++i) sub.add_vertex(canon.vertex_names()[comp[i]]);
    for (const auto& e : canon.edges())
      if (local[e.from] >= 0 && local[e.to] >= 0)
        sub.add_edge(static_cast<std::uint32_t>(local[e.from]), static_cast<std::uint32_t>(local[e.to]), e.label);
    if (sub.edges().empty()) continue;
    if (!equal_subshifts(sub, canon)) continue;
    // Irreducible component presenting the whole shift. It is right-resolving;
    // merging follower-equivalent vertices yields the minimal irreducible cover.
    const std::size_t n = sub.num_vertices();
    std::vector<std::int32_t> delta(n * k, -1);
    for (const auto& e : sub.edges()) delta[e.from * k + e.label] = static_cast<std::int32_t>(e.to);
    const auto cls = refine(n, k, delta);
    const std::size_t m = static_cast<std::size_t>(*std::max_element(cls.begin(), cls.end())) + 1;
    std::set<std::pair<std::uint32_t, std::uint32_t>> arcs;
    for (const auto& e : sub.edges())
      arcs.emplace(static_cast<std::uint32_t>(cls[e.from]), static_cast<std::uint32_t>(cls[e.to]));
    // Renumber so that class of vertex 0 is reachable-from root 0 (any root works).
    const std::size_t period =
        gcd_period(m, std::vector<std::pair<std::uint32_t, std::uint32_t>>(arcs.begin(), arcs.end()));
    MixingResult r;
    r.period = period;
    r.mixing = period == 1;
    r.reason = r.mixing ? MixingReason::Mixing : MixingReason::Periodic;
    return r;
  }
  return MixingResult{false, MixingReason::Reducible, 0};
}

MixingResult is_mixing(const Sft& sft) { return is_mixing(presentation_of(sft)); }

Sft finite_to_sft(const FiniteSubshift& fs) {
  if (fs.size() == 0) throw DomainError("finite_to_sft: the subshift must be nonempty");
  if (!fs.shift_closed()) throw DomainError("finite_to_sft: the set is not closed under the shift");
  std::size_t lcm = 1;
  for (const auto& x : fs.members()) lcm = std::lcm(lcm, x.period());
  std::int64_t k = 0;
  for (;; ++k) {
    std::set<Word> seen;
    for (const auto& x : fs.members()) seen.insert(x.restrict(Window(0, k)).values());
    if (seen.size() == fs.size()) break;
    if (static_cast<std::size_t>(k) > lcm) throw std::logic_error("finite_to_sft: no separating window");
  }
  const Window d(-1, k + 1);
  std::set<Word> allowed;
  for (const auto& x : fs.members()) allowed.insert(x.restrict(d).values());
  Sft sft(fs.alphabet(), d, std::move(allowed));
  if (!equal_subshifts(presentation_of(sft), presentation_of(fs)))
    throw std::logic_error("finite_to_sft: constructed SFT differs from the input subshift");
  return sft;
}

}  // namespace symdyn
