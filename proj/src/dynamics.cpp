#include "symdyn/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "symdyn/error.hpp"

namespace symdyn {

namespace {

std::string cache_key(const CellularAutomaton& tau, const SoficPresentation& p) {
  std::ostringstream os;
  os << "image|A=";
  for (const auto& n : tau.source().names()) os << n << ',';
  os << "|M=";
  for (auto m : tau.memory()) os << m << ',';
  os << "|T=";
  for (auto t : tau.table()) os << t << ',';
  os << "|V=" << p.num_vertices() << "|E=";
  for (const auto& e : p.edges()) os << e.from << ':' << e.to << ':' << e.label << ',';
  return os.str();
}

bool cyclic_component(const SoficPresentation& p, const std::vector<std::uint32_t>& comp) {
  if (comp.size() > 1) return true;
  for (const auto& e : p.edges())
    if (e.from == comp[0] && e.to == comp[0]) return true;
  return false;
}

// Subset-state DFS over words of a fixed length accepted by a trimmed
// presentation. visit returns false to stop early.
class WordWalker {
 public:
  explicit WordWalker(const SoficPresentation& trimmed) : k_(trimmed.alphabet().size()) {
    succ_.resize(trimmed.num_vertices() * k_);
    for (const auto& e : trimmed.edges()) succ_[e.from * k_ + e.label].push_back(e.to);
    all_.resize(trimmed.num_vertices());
    std::iota(all_.begin(), all_.end(), 0u);
  }

  // Returns false when visit stopped the walk or the cap was hit (capped set).
  template <class Visit>
  bool walk(std::size_t length, std::size_t cap, Visit&& visit) {
    visited_ = 0;
    capped_ = false;
    Word w;
    return dfs(length, all_, w, cap, visit);
  }
  bool capped() const { return capped_; }

 private:
  template <class Visit>
  bool dfs(std::size_t length, const std::vector<std::uint32_t>& states, Word& w, std::size_t cap, Visit& visit) {
    if (w.size() == length) {
      if (++visited_ > cap) {
        capped_ = true;
        return false;
      }
      return visit(w);
    }
    for (std::size_t a = 0; a < k_; ++a) {
      std::vector<std::uint32_t> next;
      for (auto s : states) {
        const auto& ss = succ_[s * k_ + a];
        next.insert(next.end(), ss.begin(), ss.end());
      }
      if (next.empty()) continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      w.push_back(static_cast<Symbol>(a));
      const bool go = dfs(length, next, w, cap, visit);
      w.pop_back();
      if (!go) return false;
    }
    return true;
  }

  std::size_t k_;
  std::vector<std::vector<std::uint32_t>> succ_;
  std::vector<std::uint32_t> all_;
  std::size_t visited_ = 0;
  bool capped_ = false;
};

// Eventual cycles of tau on a finite tau-invariant point set. Returns each
// cyclic point with the length of its cycle.
std::vector<std::pair<PeriodicConfig, std::size_t>> eventual_cycles(const std::vector<PeriodicConfig>& points,
                                                                     const CellularAutomaton& tau) {
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < points.size(); ++i) index.emplace(points[i].cells(), i);
  const std::size_t p = points.empty() ? 0 : points[0].period();
  std::vector<std::size_t> next(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Word img = tau.apply_to_periodic(points[i]).with_period(p).cells();
    auto it = index.find(img);
    if (it == index.end()) throw DomainError("tau does not map Sigma into itself on periodic points");
    next[i] = it->second;
  }
  // Colour-based cycle detection on a functional graph.
  std::vector<int> state(points.size(), 0);
  std::vector<std::size_t> cycle_len(points.size(), 0);
  for (std::size_t s = 0; s < points.size(); ++s) {
    if (state[s]) continue;
    std::vector<std::size_t> path;
    std::size_t v = s;
    while (!state[v]) {
      state[v] = 1;
      path.push_back(v);
      v = next[v];
    }
    if (state[v] == 1) {
      auto it = std::find(path.begin(), path.end(), v);
      const std::size_t len = static_cast<std::size_t>(path.end() - it);
      for (; it != path.end(); ++it) cycle_len[*it] = len;
    }
    for (auto u : path) state[u] = 2;
  }
  std::vector<std::pair<PeriodicConfig, std::size_t>> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (cycle_len[i]) out.emplace_back(points[i], cycle_len[i]);
  return out;
}

std::size_t tau_period(const CellularAutomaton& tau, const PeriodicConfig& x, std::size_t bound) {
  PeriodicConfig y = x;
  for (std::size_t n = 1; n <= bound; ++n) {
    y = tau.apply_to_periodic(y);
    if (y == x) return n;
  }
  return 0;
}

// Up to `want` distinct periodic points read off short cycles of the graph.
std::vector<PeriodicConfig> sample_periodic_points(const SoficPresentation& trimmed, std::size_t want) {
  std::set<PeriodicConfig> found;
  const std::size_t n = trimmed.num_vertices();
  std::vector<std::vector<Edge>> out(n);
  for (const auto& e : trimmed.edges()) out[e.from].push_back(e);
  std::size_t budget = 1 << 16;
  for (std::uint32_t v = 0; v < n && found.size() < want; ++v) {
    Word w;
    std::function<void(std::uint32_t)> dfs = [&](std::uint32_t u) {
      if (found.size() >= want || budget == 0) return;
      --budget;
      for (const auto& e : out[u]) {
        w.push_back(e.label);
        if (e.to == v) found.insert(PeriodicConfig(w).reduced());
        if (w.size() < n) dfs(e.to);
        w.pop_back();
        if (found.size() >= want) return;
      }
    };
    dfs(v);
  }
  return {found.begin(), found.end()};
}

struct LevelResult {
  bool found = false;
  VerdictKind kind = VerdictKind::Unknown;
  std::variant<std::monostate, ConstantPowerCertificate, PeriodicPairCertificate, OmegaMembersCertificate> cert;
};

LevelResult witness_prover(const SoficPresentation& sigma, const CellularAutomaton& tau, std::size_t p,
                           std::size_t cap) {
  LevelResult r;
  const auto cycles = eventual_cycles(periodic_points(sigma, p, cap), tau);
  if (cycles.size() < 2) return r;
  r.found = true;
  r.kind = VerdictKind::NonNilpotent;
  r.cert = PeriodicPairCertificate{cycles[0].first.reduced(), cycles[0].second, cycles[1].first.reduced(),
                                   cycles[1].second};
  return r;
}

LevelResult constant_power_prover(const SoficPresentation& trimmed, const CellularAutomaton& tau, std::size_t n,
                                  std::size_t cap, bool& capped) {
  LevelResult r;
  const ComposedRule rule = compose(tau, n, ComposedRule::Mode::Lazy);
  std::optional<Symbol> value;
  bool constant = true;
  WordWalker walker(trimmed);
  walker.walk(rule.hull().size(), cap, [&](const Word& w) {
    const Symbol s = rule.evaluate(w);
    if (value && *value != s) {
      constant = false;
      return false;
    }
    value = s;
    return true;
  });
  capped = walker.capped();
  if (!constant || capped || !value) return r;
  r.found = true;
  r.kind = VerdictKind::Nilpotent;
  r.cert = ConstantPowerCertificate{n, *value};
  return r;
}

}  // namespace

// --- image chain ------------------------------------------------------------------

ImageChain image_chain(const SoficPresentation& sigma, const CellularAutomaton& tau, std::size_t N,
                       PresentationCache* cache, std::size_t state_cap) {
  if (!tau.is_endomorphism() || !(tau.source() == sigma.alphabet()))
    throw DomainError("image chain: automaton and subshift alphabets differ");
  ImageChain chain;
  try {
    chain.steps.push_back(canonical_presentation(sigma, state_cap));
  } catch (const ResourceError& e) {
    throw ResourceError(std::string("image chain step 0: ") + e.what());
  }
  for (std::size_t n = 1; n <= N; ++n) {
    const SoficPresentation& prev = chain.steps.back();
    std::optional<SoficPresentation> next;
    const std::string key = cache ? cache_key(tau, prev) : std::string();
    if (cache) next = cache->get(key);
    if (!next) {
      try {
        next = canonical_presentation(image_presentation(tau, prev), state_cap);
      } catch (const ResourceError& e) {
        throw ResourceError("image chain step " + std::to_string(n) + ": " + e.what());
      }
      if (cache) cache->put(key, *next);
    }
    if (!is_subshift_of(*next, prev))
      throw DomainError("image chain step " + std::to_string(n) + ": tau(Sigma) is not contained in Sigma");
    if (equal_subshifts(*next, prev)) {
      chain.stabilized_at = n - 1;
      return chain;
    }
    chain.steps.push_back(std::move(*next));
  }
  return chain;
}

Finiteness finiteness(const SoficPresentation& input) {
  const SoficPresentation p = input.num_vertices() ? canonical_presentation(input) : input;
  Finiteness r;
  const auto comps = strongly_connected_components(p);
  std::vector<std::size_t> comp_of(p.num_vertices());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (auto v : comps[c]) comp_of[v] = c;
  std::vector<bool> cyclic(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) cyclic[c] = cyclic_component(p, comps[c]);

  std::vector<std::size_t> internal_out(p.num_vertices(), 0);
  std::vector<std::set<std::size_t>> comp_succ(comps.size());
  for (const auto& e : p.edges()) {
    if (comp_of[e.from] == comp_of[e.to])
      ++internal_out[e.from];
    else
      comp_succ[comp_of[e.from]].insert(comp_of[e.to]);
  }
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (!cyclic[c]) continue;
    for (auto v : comps[c])
      if (internal_out[v] != 1) return r;
    // No other cyclic component may be reachable.
    std::vector<bool> seen(comps.size(), false);
    std::deque<std::size_t> q{c};
    seen[c] = true;
    while (!q.empty()) {
      const auto u = q.front();
      q.pop_front();
      for (auto w : comp_succ[u]) {
        if (seen[w]) continue;
        if (cyclic[w]) return r;
        seen[w] = true;
        q.push_back(w);
      }
    }
  }
  r.finite = true;
  std::set<PeriodicConfig> members;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (!cyclic[c]) continue;
    const std::uint32_t start = comps[c][0];
    Word w;
    std::uint32_t v = start;
    do {
      for (const auto& e : p.edges())
        if (e.from == v && comp_of[e.to] == c) {
          w.push_back(e.label);
          v = e.to;
          break;
        }
    } while (v != start);
    const PeriodicConfig x = PeriodicConfig(w).reduced();
    for (auto& y : shift_orbit(x)) members.insert(y.reduced());
  }
  r.members.assign(members.begin(), members.end());
  return r;
}

LimitSetReport limit_set(const SoficPresentation& sigma, const CellularAutomaton& tau, std::size_t N,
                         PresentationCache* cache) {
  const ImageChain chain = image_chain(sigma, tau, N, cache);
  LimitSetReport r;
  r.presentation = chain.steps.back();
  r.stabilized = chain.stabilized_at.has_value();
  r.steps = r.stabilized ? *chain.stabilized_at : N;
  std::set<Symbol> values;
  const SoficPresentation trimmed = trim(r.presentation);
  for (const auto& e : trimmed.edges()) values.insert(e.label);
  r.alphabet_values.assign(values.begin(), values.end());
  if (r.stabilized) {
    r.invariance_verified = equal_subshifts(image_presentation(tau, r.presentation), r.presentation);
    r.finiteness = finiteness(r.presentation);
  }
  return r;
}

// --- nilpotency -----------------------------------------------------------------

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Nilpotent: return "Nilpotent";
    case VerdictKind::NonNilpotent: return "NonNilpotent";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "?";
}

const char* to_string(Prover p) {
  switch (p) {
    case Prover::Witness: return "witness";
    case Prover::ConstantPower: return "constant-power";
    case Prover::Chain: return "chain";
    case Prover::None: return "none";
  }
  return "?";
}

NilpotencyVerdict nilpotency(const SoficPresentation& sigma, const CellularAutomaton& tau,
                             const NilpotencyBudget& budget) {
  if (is_empty(sigma).empty) throw DomainError("nilpotency: Sigma is empty");
  if (!tau.is_endomorphism() || !(tau.source() == sigma.alphabet()))
    throw DomainError("nilpotency: automaton and subshift alphabets differ");
  if (!is_subshift_of(image_presentation(tau, sigma), sigma))
    throw DomainError("nilpotency: tau(Sigma) is not contained in Sigma");

  NilpotencyVerdict v;
  v.mixing = is_mixing(sigma);
  v.within_hypotheses = v.mixing.mixing;

  const SoficPresentation trimmed = trim(sigma);
  // Chain prover state, advanced one image per level.
  std::vector<SoficPresentation> chain;
  bool chain_done = false;

  auto chain_step = [&](std::size_t level) -> LevelResult {
    LevelResult r;
    if (chain_done || v.chain_gave_up) return r;
    try {
      if (chain.empty()) chain.push_back(canonical_presentation(sigma, budget.state_cap));
      const SoficPresentation& prev = chain.back();
      std::optional<SoficPresentation> next;
      const std::string key = budget.cache ? cache_key(tau, prev) : std::string();
      if (budget.cache) next = budget.cache->get(key);
      if (!next) {
        next = canonical_presentation(image_presentation(tau, prev), budget.state_cap);
        if (budget.cache) budget.cache->put(key, *next);
      }
      v.chain_steps_done = level;
      if (!equal_subshifts(*next, prev)) {
        chain.push_back(std::move(*next));
        return r;
      }
    } catch (const ResourceError&) {
      v.chain_gave_up = true;
      return r;
    }
    chain_done = true;
    const std::size_t n0 = level - 1;
    const SoficPresentation& omega = chain.back();
    const Finiteness fin = finiteness(omega);
    v.omega_finite = fin.finite;
    v.omega_singleton = fin.finite && fin.members.size() == 1;
    r.found = true;
    if (*v.omega_singleton) {
      r.kind = VerdictKind::Nilpotent;
      r.cert = ConstantPowerCertificate{std::max<std::size_t>(n0, 1), fin.members[0].cells()[0]};
    } else if (fin.finite) {
      const auto& x = fin.members[0];
      const auto& y = fin.members[1];
      r.kind = VerdictKind::NonNilpotent;
      r.cert = PeriodicPairCertificate{x, tau_period(tau, x, fin.members.size()), y,
                                       tau_period(tau, y, fin.members.size())};
    } else {
      r.kind = VerdictKind::NonNilpotent;
      r.cert = OmegaMembersCertificate{n0, sample_periodic_points(trim(omega), 2), true};
    }
    return r;
  };

  const std::size_t levels = std::max({budget.max_power, budget.max_period, budget.chain_steps});
  for (std::size_t level = 1; level <= levels; ++level) {
    const bool run_w = level <= budget.max_period;
    const bool run_c = level <= budget.max_power;
    const bool run_ch = level <= budget.chain_steps;
    LevelResult w, c, ch;
    bool power_capped = false;
    auto witness_task = [&] {
      try {
        return witness_prover(sigma, tau, level, budget.pattern_cap);
      } catch (const ResourceError&) {
        return LevelResult{};
      }
    };
    auto power_task = [&] { return constant_power_prover(trimmed, tau, level, budget.pattern_cap, power_capped); };
    if (budget.jobs > 1) {
      std::future<LevelResult> fw, fc;
      if (run_w) fw = std::async(std::launch::async, witness_task);
      if (run_c) fc = std::async(std::launch::async, power_task);
      if (run_ch) ch = chain_step(level);
      if (run_w) w = fw.get();
      if (run_c) c = fc.get();
    } else {
      if (run_w) w = witness_task();
      if (!w.found && run_c) c = power_task();
      if (!w.found && !c.found && run_ch) ch = chain_step(level);
    }
    if (run_w) v.periods_tried = level;
    if (run_c && !power_capped) v.powers_tried = level;
    for (auto [res, prover] : {std::pair{&w, Prover::Witness}, std::pair{&c, Prover::ConstantPower},
                               std::pair{&ch, Prover::Chain}}) {
      if (!res->found) continue;
      v.kind = res->kind;
      v.prover = prover;
      v.level = level;
      v.certificate = res->cert;
      return v;
    }
  }
  return v;
}

bool replay(const SoficPresentation& sigma, const CellularAutomaton& tau, const ConstantPowerCertificate& c,
            std::size_t cap) {
  if (c.power == 0) return false;
  // Iterate tau directly on every word of Sigma of width n(w-1)+1.
  const std::size_t width = tau.hull().size();
  const std::size_t len = c.power * (width - 1) + 1;
  bool ok = true;
  for (const auto& w : words_of_length(sigma, len, cap)) {
    Word u = w;
    for (std::size_t k = 0; k < c.power; ++k) u = tau.apply_to_word(u);
    if (u.size() != 1 || u[0] != c.terminal) {
      ok = false;
      break;
    }
  }
  return ok;
}

bool replay(const SoficPresentation& sigma, const CellularAutomaton& tau, const PeriodicPairCertificate& c) {
  if (c.x == c.y || c.x_period == 0 || c.y_period == 0) return false;
  if (!contains_periodic(sigma, c.x) || !contains_periodic(sigma, c.y)) return false;
  auto returns = [&](const PeriodicConfig& x, std::size_t n) {
    PeriodicConfig y = x;
    for (std::size_t k = 0; k < n; ++k) y = tau.apply_to_periodic(y);
    return y == x;
  };
  return returns(c.x, c.x_period) && returns(c.y, c.y_period);
}

bool replay(const SoficPresentation& sigma, const CellularAutomaton& tau, const OmegaMembersCertificate& c) {
  const ImageChain chain = image_chain(sigma, tau, c.n0 + 1);
  if (!chain.stabilized_at || *chain.stabilized_at != c.n0) return false;
  const SoficPresentation& omega = chain.steps.back();
  std::set<PeriodicConfig> distinct;
  for (const auto& x : c.members) {
    if (!contains_periodic(omega, x)) return false;
    distinct.insert(x.reduced());
  }
  if (distinct.size() >= 2) return true;
  return c.infinite && !finiteness(omega).finite;
}

bool replay(const SoficPresentation& sigma, const CellularAutomaton& tau, const NilpotencyVerdict& v) {
  return std::visit(
      [&](const auto& c) -> bool {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, std::monostate>) {
          return v.kind == VerdictKind::Unknown;
        } else if constexpr (std::is_same_v<C, ConstantPowerCertificate>) {
          return v.kind == VerdictKind::Nilpotent && replay(sigma, tau, c);
        } else {
          return v.kind == VerdictKind::NonNilpotent && replay(sigma, tau, c);
        }
      },
      v.certificate);
}

// --- periodic and chain-recurrent points ---------------------------------------------

std::vector<PeriodicConfig> omega_in_fixed_points(const SoficPresentation& sigma, const CellularAutomaton& tau,
                                                  std::size_t p, std::size_t cap) {
  if (p == 0) throw DomainError("omega_in_fixed_points: period must be positive");
  std::vector<PeriodicConfig> out;
  for (auto& [x, len] : eventual_cycles(periodic_points(sigma, p, cap), tau)) out.push_back(x);
  return out;
}

ChainSearchResult chain_recurrence_certificate(const SoficPresentation& sigma, const CellularAutomaton& tau,
                                               const PeriodicConfig& x, const Window& F, std::size_t max_period,
                                               std::size_t cap) {
  if (!contains_periodic(sigma, x)) throw DomainError("chain recurrence: x is not in Sigma");
  ChainSearchResult r;
  const std::size_t base = x.least_period();
  for (std::size_t p = base; p <= max_period; p += base) {
    r.periods_searched = p;
    const auto points = periodic_points(sigma, p, cap);
    std::map<Word, std::vector<std::size_t>> by_window;
    for (std::size_t i = 0; i < points.size(); ++i) by_window[points[i].restrict(F).values()].push_back(i);
    std::size_t source = points.size();
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i] == x) source = i;
    if (source == points.size()) continue;
    std::vector<std::size_t> parent(points.size(), points.size());
    std::vector<bool> seen(points.size(), false);
    std::deque<std::size_t> q{source};
    std::optional<std::size_t> closing;
    while (!q.empty() && !closing) {
      const auto u = q.front();
      q.pop_front();
      const auto key = tau.apply_to_periodic(points[u]).restrict(F).values();
      auto it = by_window.find(key);
      if (it == by_window.end()) continue;
      for (auto w : it->second) {
        if (w == source) {
          closing = u;
          break;
        }
        if (seen[w]) continue;
        seen[w] = true;
        parent[w] = u;
        q.push_back(w);
      }
    }
    if (!closing) continue;
    std::vector<PeriodicConfig> path{points[source]};
    for (std::size_t u = *closing; u != source; u = parent[u]) path.push_back(points[u]);
    std::reverse(path.begin() + 1, path.end());
    path.push_back(points[source]);
    for (auto& y : path) y = y.reduced();
    r.certificate = ChainCertificate{std::move(path), F, p};
    return r;
  }
  return r;
}

bool replay(const CellularAutomaton& tau, const ChainCertificate& c) {
  if (c.chain.size() < 2 || !(c.chain.front() == c.chain.back())) return false;
  for (std::size_t k = 0; k + 1 < c.chain.size(); ++k) {
    if (!(tau.apply_to_periodic(c.chain[k]).restrict(c.entourage) == c.chain[k + 1].restrict(c.entourage)))
      return false;
  }
  return true;
}

// --- integer fixtures ----------------------------------------------------------------

FixtureKind parse_fixture_kind(const std::string& name) {
  if (name == "empty_limit") return FixtureKind::EmptyLimit;
  if (name == "singleton_not_pointwise") return FixtureKind::SingletonNotPointwise;
  if (name == "strict_invariance") return FixtureKind::StrictInvariance;
  if (name == "surjective_pointwise_nilpotent") return FixtureKind::SurjectivePointwiseNilpotent;
  throw DomainError("unknown fixture kind '" + name + "'");
}

const char* to_string(FixtureKind k) {
  switch (k) {
    case FixtureKind::EmptyLimit: return "empty_limit";
    case FixtureKind::SingletonNotPointwise: return "singleton_not_pointwise";
    case FixtureKind::StrictInvariance: return "strict_invariance";
    case FixtureKind::SurjectivePointwiseNilpotent: return "surjective_pointwise_nilpotent";
  }
  return "?";
}

Integer cantor_pair(const Integer& n, const Integer& x) {
  if (n < 0 || x < 0) throw DomainError("cantor_pair: arguments must be nonnegative");
  const Integer s = n + x;
  return Integer(s * (s + 1) / 2 + x);
}

std::pair<Integer, Integer> cantor_unpair(const Integer& z) {
  if (z < 0) throw DomainError("cantor_unpair: argument must be nonnegative");
  // s = floor((sqrt(8z + 1) - 1) / 2), corrected for rounding.
  Integer s = (Integer(sqrt(Integer(8 * z + 1))) - 1) / 2;
  while (s * (s + 1) / 2 > z) --s;
  while ((s + 1) * (s + 2) / 2 <= z) ++s;
  const Integer x = z - s * (s + 1) / 2;
  return {Integer(s - x), x};
}

Integer strict_invariance_code(const Integer& n, const Integer& k) {
  if (n < 2 || k < 2 || k > n) throw DomainError("strict_invariance_code: need n >= 2 and 2 <= k <= n");
  return Integer(2 + cantor_pair(n - 2, k - 2));
}

std::vector<Integer> UnaryFixtureMap::promote(const std::vector<Integer>& cells) const {
  std::vector<Integer> out;
  out.reserve(cells.size());
  for (const auto& c : cells) out.push_back(f(c));
  return out;
}

UnaryFixtureMap appendix_fixture(FixtureKind kind) {
  UnaryFixtureMap m{kind, {}, {}};
  switch (kind) {
    case FixtureKind::EmptyLimit:
      m.f = [](const Integer& n) { return Integer(n + 1); };
      m.description = "f(n) = n + 1";
      break;
    case FixtureKind::SingletonNotPointwise:
      m.f = [](const Integer& n) { return n <= 1 ? Integer(1) : Integer(n + 1); };
      m.description = "f(0) = f(1) = 1, f(n) = n + 1 for n >= 2";
      break;
    case FixtureKind::StrictInvariance:
      m.f = [](const Integer& z) {
        if (z <= 1) return Integer(0);
        const auto [a, b] = cantor_unpair(Integer(z - 2));
        if (b > a) return z;  // not a code of Y: fixed
        const Integer n = a + 2, k = b + 2;
        if (k == 2) return Integer(1);
        return strict_invariance_code(n, Integer(k - 1));
      };
      m.description = "Y = disjoint union of {0..n} (n >= 2) with k -> k - 1, all 0s glued to y0 = 0 and all 1s to "
                      "y1 = 1; (n, k) encoded as 2 + cantor(n - 2, k - 2) for 2 <= k <= n; other integers fixed";
      break;
    case FixtureKind::SurjectivePointwiseNilpotent:
      m.f = [](const Integer& z) {
        if (z == 0) return Integer(0);
        const auto [n, x] = cantor_unpair(Integer(z - 1));
        if (n == 0) return Integer(0);
        return Integer(cantor_pair(Integer(n - 1), x) + 1);
      };
      m.description = "xi(n, x) = cantor(n, x) + 1; f(xi(n, x)) = xi(n - 1, x), f(xi(0, x)) = 0, f(0) = 0";
      break;
  }
  return m;
}

std::vector<Integer> probe_limit_set(const UnaryFixtureMap& m, std::size_t N, const Integer& R, const Integer& K) {
  if (R < 0 || K < 0) throw DomainError("probe_limit_set: ranges must be nonnegative");
  std::set<Integer> s;
  for (Integer i = 0; i <= R; ++i) s.insert(i);
  std::set<Integer> inter;
  for (const auto& x : s)
    if (x <= K) inter.insert(x);
  for (std::size_t n = 1; n <= N && !inter.empty(); ++n) {
    std::set<Integer> next;
    for (const auto& x : s) next.insert(m.f(x));
    s = std::move(next);
    std::set<Integer> kept;
    for (const auto& x : inter)
      if (s.count(x)) kept.insert(x);
    inter = std::move(kept);
  }
  return {inter.begin(), inter.end()};
}

}  // namespace symdyn
