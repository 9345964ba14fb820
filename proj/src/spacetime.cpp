#include "symdyn/spacetime.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace symdyn {

namespace {

std::int64_t memory_radius(const CellularAutomaton& tau) {
  std::int64_t r = 1;
  for (auto m : tau.memory()) r = std::max(r, m < 0 ? -m : m);
  return r;
}

}  // namespace

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NotFound: return "not-found";
    case SearchStatus::Exhausted: return "exhausted";
  }
  return "?";
}

SpaceTimeSystem::SpaceTimeSystem(SoficPresentation pres, std::optional<Sft> sft, CellularAutomaton tau)
    : presentation_(std::move(pres)),
      sft_(std::move(sft)),
      tau_(std::move(tau)),
      group_(BallGroup::integers(memory_radius(tau_))),
      cache_(std::make_shared<Cache>()) {
  if (!tau_.is_endomorphism()) throw DomainError("space-time system: the automaton must map A^Z to itself");
  if (!(tau_.source() == presentation_.alphabet()))
    throw DomainError("space-time system: automaton and subshift alphabets differ");
  if (!is_subshift_of(image_presentation(tau_, presentation_), presentation_))
    throw DomainError("space-time system: tau(Sigma) is not contained in Sigma");
}

SpaceTimeSystem SpaceTimeSystem::build(const Sft& sigma, const CellularAutomaton& tau) {
  return SpaceTimeSystem(presentation_of(sigma), sigma, tau);
}

SpaceTimeSystem SpaceTimeSystem::build(const SoficPresentation& sigma, const CellularAutomaton& tau) {
  return SpaceTimeSystem(sigma, std::nullopt, tau);
}

std::shared_ptr<const WindowLanguage> SpaceTimeSystem::cell(std::int64_t i, std::int64_t j, std::size_t cap) const {
  if (i < 0 || j < 0) throw DomainError("space-time cell indices must be nonnegative");
  const std::int64_t s = i + j;
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->cells.find(s);
    if (it != cache_->cells.end()) return it->second;
  }
  auto lang = std::make_shared<const WindowLanguage>(window_language(presentation_, group_.ball_interval(s), cap));
  std::lock_guard lock(cache_->mutex);
  return cache_->cells.emplace(s, std::move(lang)).first->second;
}

Pattern SpaceTimeSystem::p(std::int64_t i, std::int64_t j, const Pattern& sigma) const {
  return p(i, j, i + 1, sigma);
}

Pattern SpaceTimeSystem::p(std::int64_t i, std::int64_t j, std::int64_t k, const Pattern& sigma) const {
  if (k < i) throw DomainError("p_ijk requires k >= i");
  if (!(sigma.window() == window(k, j))) throw DomainError("p: pattern is not on M^(k+j)");
  return sigma.restrict(window(i, j));
}

Pattern SpaceTimeSystem::q(std::int64_t i, std::int64_t j, const Pattern& sigma) const {
  if (!(sigma.window() == window(i, j + 1))) throw DomainError("q: pattern is not on M^(i+j+1)");
  return tau_.apply_to_pattern(sigma).restrict(window(i, j));
}

CommutationResult check_commutation(const SpaceTimeSystem& sys, std::int64_t i, std::int64_t j, std::size_t cap) {
  CommutationResult r;
  const auto top = sys.cell(i + 1, j + 1, cap);
  const auto target = sys.cell(i, j, cap);
  for (const auto& sigma : top->patterns()) {
    const Pattern lhs = sys.q(i, j, sys.p(i, j + 1, sigma));
    const Pattern rhs = sys.p(i, j, sys.q(i + 1, j, sigma));
    ++r.checked;
    if (!(lhs == rhs) || !target->contains(lhs.values())) {
      r.holds = false;
      r.counterexample = sigma;
      return r;
    }
  }
  return r;
}

WindowLanguage outer_intersection(const SpaceTimeSystem& sys, std::int64_t i, std::int64_t j, std::int64_t K,
                                  std::size_t cap) {
  if (!sys.sft()) throw DomainError("outer_intersection: the base subshift must be given as an SFT");
  if (K < i) throw DomainError("outer_intersection: depth K must be at least i");
  const Window target = sys.window(i, j);
  std::optional<std::set<Word>> acc;
  for (std::int64_t k = i; k <= K; ++k) {
    const WindowLanguage a = local_window_set(*sys.sft(), sys.group(), k, j, cap);
    std::set<Word> proj;
    for (const auto& w : a.words()) proj.insert(Pattern(a.window(), w).restrict(target).values());
    if (!acc) {
      acc = std::move(proj);
    } else {
      std::set<Word> inter;
      std::set_intersection(acc->begin(), acc->end(), proj.begin(), proj.end(), std::inserter(inter, inter.end()));
      acc = std::move(inter);
    }
  }
  return WindowLanguage(target, std::vector<Word>(acc->begin(), acc->end()));
}

// --- backward orbits ------------------------------------------------------------

namespace {

// Preimages of v under tau among words accepted by the trimmed presentation.
class PreimageEnumerator {
 public:
  PreimageEnumerator(const SoficPresentation& trimmed, const CellularAutomaton& tau)
      : t_(trimmed), tau_(tau), k_(trimmed.alphabet().size()), width_(tau.hull().size()) {
    succ_.resize(t_.num_vertices() * k_);
    for (const auto& e : t_.edges()) succ_[e.from * k_ + e.label].push_back(e.to);
  }

  // Appends preimages to out; returns false when the cap would be exceeded.
  bool preimages(const Word& v, std::size_t cap, std::vector<Word>& out, const CancellationToken& cancel) const {
    const std::size_t len = v.size() + width_ - 1;
    std::vector<std::uint32_t> all(t_.num_vertices());
    std::iota(all.begin(), all.end(), 0u);
    Word u;
    return dfs(v, len, all, u, cap, out, cancel);
  }

 private:
  bool dfs(const Word& v, std::size_t len, const std::vector<std::uint32_t>& states, Word& u, std::size_t cap,
           std::vector<Word>& out, const CancellationToken& cancel) const {
    if (cancel.cancelled()) return false;
    if (u.size() == len) {
      if (out.size() >= cap) return false;
      out.push_back(u);
      return true;
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
      u.push_back(static_cast<Symbol>(a));
      bool ok = true;
      if (u.size() >= width_) {
        const std::size_t pos = u.size() - width_;
        ok = tau_.rule_at(u, pos) == v[pos];
      }
      if (ok && !dfs(v, len, next, u, cap, out, cancel)) {
        u.pop_back();
        return false;
      }
      u.pop_back();
    }
    return true;
  }

  const SoficPresentation& t_;
  const CellularAutomaton& tau_;
  std::size_t k_;
  std::size_t width_;
  std::vector<std::vector<std::uint32_t>> succ_;
};

enum class LadderOutcome { Found, Blocked, Capped };

struct Ladder {
  LadderOutcome outcome = LadderOutcome::Capped;
  std::vector<Pattern> patterns;
  std::size_t blocked_depth = 0;
};

Ladder pattern_ladder(const SpaceTimeSystem& sys, const Pattern& target, std::size_t n, const SearchBudget& budget) {
  const SoficPresentation t = trim(sys.presentation());
  const PreimageEnumerator pre(t, sys.tau());
  const Window hull = sys.tau().hull();
  // level[m] maps each pattern to the index of its image in level[m - 1].
  std::vector<std::vector<Word>> levels{{target.values()}};
  std::vector<std::vector<std::size_t>> parent{{0}};
  Ladder r;
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Word> next;
    std::vector<std::size_t> par;
    std::set<Word> seen;
    for (std::size_t idx = 0; idx < levels.back().size(); ++idx) {
      std::vector<Word> found;
      if (!pre.preimages(levels.back()[idx], budget.pattern_cap, found, budget.cancel)) return r;
      for (auto& u : found)
        if (seen.insert(u).second) {
          next.push_back(std::move(u));
          par.push_back(idx);
          if (next.size() > budget.pattern_cap) return r;
        }
    }
    if (next.empty()) {
      r.outcome = LadderOutcome::Blocked;
      r.blocked_depth = m;
      return r;
    }
    levels.push_back(std::move(next));
    parent.push_back(std::move(par));
  }
  r.outcome = LadderOutcome::Found;
  std::size_t idx = 0;
  std::vector<Word> chain(n + 1);
  for (std::size_t m = n + 1; m-- > 0;) {
    chain[m] = levels[m][idx];
    idx = parent[m][idx];
  }
  Window w = target.window();
  for (std::size_t m = 0; m <= n; ++m) {
    r.patterns.emplace_back(w, chain[m]);
    w = Window(w.lo() + hull.lo(), w.hi() + hull.hi());
  }
  return r;
}

}  // namespace

BackwardSearchResult backward_orbit_search(const SpaceTimeSystem& sys, const Pattern& target, std::size_t n,
                                           const SearchBudget& budget) {
  if (!accepts_word(sys.presentation(), target.values()))
    throw DomainError("backward_orbit_search: target pattern does not occur in Sigma");
  BackwardSearchResult res;
  const Ladder l = pattern_ladder(sys, target, n, budget);
  if (l.outcome == LadderOutcome::Found) {
    res.status = SearchStatus::Found;
    res.orbit = BackwardOrbit{{}, l.patterns};
  } else if (l.outcome == LadderOutcome::Blocked) {
    res.status = SearchStatus::NotFound;
    res.certificate = NoPreimageCertificate{target, l.blocked_depth};
  } else {
    res.note = budget.cancel.cancelled() ? "cancelled" : "pattern cap reached";
  }
  return res;
}

BackwardSearchResult backward_orbit_search(const SpaceTimeSystem& sys, const PeriodicConfig& target, std::size_t n,
                                           const SearchBudget& budget) {
  if (!contains_periodic(sys.presentation(), target))
    throw DomainError("backward_orbit_search: target configuration is not in Sigma");
  const PeriodicConfig x0 = target.reduced();
  BackwardSearchResult res;
  if (n == 0) {
    res.status = SearchStatus::Found;
    res.orbit = BackwardOrbit{{x0}, {}};
    return res;
  }
  const auto& tau = sys.tau();
  for (std::size_t p = x0.period(); p <= budget.max_period; p += x0.period()) {
    if (budget.cancel.cancelled()) {
      res.note = "cancelled";
      return res;
    }
    const auto points = periodic_points(sys.presentation(), p, budget.pattern_cap);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < points.size(); ++i) index.emplace(points[i].cells(), i);
    std::vector<std::size_t> image(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) image[i] = index.at(tau.apply_to_periodic(points[i]).cells());
    // reach[d][i]: points[i] starts a backward chain of length d.
    std::vector<std::vector<bool>> reach(n + 1, std::vector<bool>(points.size(), false));
    std::fill(reach[0].begin(), reach[0].end(), true);
    for (std::size_t d = 1; d <= n; ++d)
      for (std::size_t i = 0; i < points.size(); ++i)
        if (reach[d - 1][i]) reach[d][image[i]] = true;
    const std::size_t start = index.at(x0.with_period(p).cells());
    if (!reach[n][start]) continue;
    BackwardOrbit orbit;
    orbit.periodic.push_back(x0);
    std::size_t cur = start;
    for (std::size_t d = n; d-- > 0;) {
      for (std::size_t i = 0; i < points.size(); ++i)
        if (image[i] == cur && reach[d][i]) {
          cur = i;
          break;
        }
      orbit.periodic.push_back(points[cur].reduced());
    }
    res.status = SearchStatus::Found;
    res.orbit = std::move(orbit);
    return res;
  }
  // No periodic ladder within the budget; look for a pattern-level obstruction.
  const std::int64_t len = std::max<std::int64_t>(static_cast<std::int64_t>(x0.period()),
                                                  static_cast<std::int64_t>(tau.hull().size()));
  const Pattern window = x0.restrict(Window(0, len - 1));
  const Ladder l = pattern_ladder(sys, window, n, budget);
  if (l.outcome == LadderOutcome::Blocked) {
    res.status = SearchStatus::NotFound;
    res.certificate = NoPreimageCertificate{window, l.blocked_depth};
    return res;
  }
  res.note = "no spatially periodic preimage chain with period <= " + std::to_string(budget.max_period);
  return res;
}

bool verify_backward_orbit(const SpaceTimeSystem& sys, const BackwardOrbit& orbit) {
  const auto& tau = sys.tau();
  if (orbit.is_periodic()) {
    for (const auto& x : orbit.periodic)
      if (!contains_periodic(sys.presentation(), x)) return false;
    for (std::size_t m = 0; m + 1 < orbit.periodic.size(); ++m)
      if (!(tau.apply_to_periodic(orbit.periodic[m + 1]) == orbit.periodic[m])) return false;
    return true;
  }
  if (orbit.patterns.empty()) return false;
  for (const auto& p : orbit.patterns)
    if (!accepts_word(sys.presentation(), p.values())) return false;
  for (std::size_t m = 0; m + 1 < orbit.patterns.size(); ++m) {
    const Pattern img = tau.apply_to_pattern(orbit.patterns[m + 1]);
    if (!img.window().contains(orbit.patterns[m].window())) return false;
    if (!(img.restrict(orbit.patterns[m].window()) == orbit.patterns[m])) return false;
  }
  return true;
}

bool verify_no_preimage(const SpaceTimeSystem& sys, const NoPreimageCertificate& cert, std::size_t cap) {
  const auto& tau = sys.tau();
  const Window hull = tau.hull();
  const auto d = static_cast<std::int64_t>(cert.depth);
  const Window wide(cert.blocked.window().lo() + d * hull.lo(), cert.blocked.window().hi() + d * hull.hi());
  const WindowLanguage lang = window_language(sys.presentation(), wide, cap);
  for (const auto& w : lang.words()) {
    Word v = w;
    for (std::int64_t m = 0; m < d; ++m) v = tau.apply_to_word(v);
    if (v == cert.blocked.values()) return false;
  }
  return true;
}

StarredGrid starred_grid(const SpaceTimeSystem& sys, Symbol terminal, std::int64_t i_max, std::int64_t j_max,
                         std::size_t cap) {
  if (terminal >= sys.presentation().alphabet().size()) throw DomainError("starred_grid: terminal symbol not in alphabet");
  if (i_max < 0 || j_max < 0) throw DomainError("starred_grid: bounds must be nonnegative");
  StarredGrid g;
  g.terminal = terminal;
  g.cells.resize(static_cast<std::size_t>(i_max + 1));
  for (std::int64_t i = 0; i <= i_max; ++i) {
    auto& row = g.cells[static_cast<std::size_t>(i)];
    const Window w0 = sys.window(i, 0);
    std::vector<Word> base;
    for (const auto& w : sys.cell(i, 0, cap)->words())
      if (Pattern(w0, w)(0) != terminal) base.push_back(w);
    row.emplace_back(w0, std::move(base));
    for (std::int64_t j = 1; j <= j_max; ++j) {
      const WindowLanguage& below = row.back();
      const Window wj = sys.window(i, j);
      std::vector<Word> keep;
      for (const auto& w : sys.cell(i, j, cap)->words())
        if (below.contains(sys.q(i, j - 1, Pattern(wj, w)).values())) keep.push_back(w);
      row.emplace_back(wj, std::move(keep));
    }
  }
  for (std::int64_t j = 1; j <= j_max && !g.first_empty; ++j)
    for (std::int64_t i = 0; i <= i_max; ++i)
      if (g.cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].empty()) {
        g.first_empty = std::make_pair(i, j);
        break;
      }
  return g;
}

}  // namespace symdyn
