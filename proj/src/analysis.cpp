#include "symdyn/analysis.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "symdyn/error.hpp"
#include "symdyn/formats.hpp"
#include "symdyn/polyca.hpp"

namespace symdyn {

using nlohmann::json;

namespace {

std::string cfg(const FiniteAlphabet& a, const PeriodicConfig& x) { return a.format(x.reduced().cells(), " "); }

json words_json(const FiniteAlphabet& a, const std::vector<Word>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(a.format(w, " "));
  return out;
}

void require_replay(bool ok, const std::string& what) {
  if (!ok) throw Error("internal: " + what + " certificate failed its replay");
}

json mixing_flags(const MixingResult& m) {
  return json{{"mixing", m.mixing}, {"mixing_reason", to_string(m.reason)}, {"mixing_period", m.period}};
}

// Words of tau^n(Sigma) by direct iteration on words of Sigma, against the
// words of a presentation, for every length whose preimages stay small.
bool same_words_after_power(const SoficPresentation& sigma, const CellularAutomaton& tau, std::size_t n,
                            const SoficPresentation& target, std::size_t max_source_len = 14) {
  const std::size_t grow = n * (tau.hull().size() - 1);
  for (std::size_t len = 1; len + grow <= max_source_len || len == 1; ++len) {
    std::set<Word> images;
    for (const auto& w : words_of_length(sigma, len + grow)) {
      Word u = w;
      for (std::size_t k = 0; k < n; ++k) u = tau.apply_to_word(u);
      images.insert(u);
    }
    const auto want = words_of_length(target, len);
    if (std::vector<Word>(images.begin(), images.end()) != want) return false;
    if (len + grow > max_source_len) break;
  }
  return true;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

// --- inputs -----------------------------------------------------------------------------

ShiftInput shift_preset(const std::string& name, const FiniteAlphabet& alphabet) {
  if (name == "full") {
    Sft s = Sft::full(alphabet);
    return {presentation_of(s), s, "full"};
  }
  if (name == "golden") {
    if (alphabet.size() < 2) throw DomainError("golden mean shift needs at least two symbols");
    const Symbol last = static_cast<Symbol>(alphabet.size() - 1);
    std::set<Word> allowed;
    for (Symbol a = 0; a < alphabet.size(); ++a)
      for (Symbol b = 0; b < alphabet.size(); ++b)
        if (!(a == last && b == last)) allowed.insert(Word{a, b});
    Sft s(alphabet, Window(0, 1), std::move(allowed));
    return {presentation_of(s), s, "golden"};
  }
  throw DomainError("unknown shift preset '" + name + "' (expected full, golden or a file)");
}

ShiftInput shift_from_text(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::string line;
  bool is_sft = false;
  while (std::getline(in, line)) {
    if (line.rfind("window:", 0) == 0 || line.rfind("allow:", 0) == 0) is_sft = true;
  }
  if (is_sft) {
    Sft s = parse_sft(text, source);
    return {presentation_of(s), s, source};
  }
  return {parse_graph(text, source), std::nullopt, source};
}

// --- disk cache ---------------------------------------------------------------------------

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

DiskCache::DiskCache(std::string dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw DomainError("cache directory '" + dir_ + "': " + ec.message());
}

std::unique_ptr<DiskCache> DiskCache::from_env() {
  const char* dir = std::getenv("LIMITSET_CACHE_DIR");
  if (!dir || !*dir) return nullptr;
  return std::make_unique<DiskCache>(dir);
}

std::string DiskCache::path_for(const std::string& key) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.graph", static_cast<unsigned long long>(fnv1a64(key)));
  return (std::filesystem::path(dir_) / name).string();
}

std::optional<SoficPresentation> DiskCache::get(const std::string& key) {
  std::lock_guard lock(mutex_);
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string content = ss.str();
  // Layout: key length, newline, key, graph text.
  const auto nl = content.find('\n');
  try {
    const std::size_t len = std::stoul(content.substr(0, nl));
    if (nl == std::string::npos || content.size() < nl + 1 + len || content.compare(nl + 1, len, key) != 0) {
      ++misses_;
      return std::nullopt;
    }
    SoficPresentation p = parse_graph(content.substr(nl + 1 + len), path_for(key));
    ++hits_;
    return p;
  } catch (const std::exception&) {
    ++misses_;
    return std::nullopt;
  }
}

void DiskCache::put(const std::string& key, const SoficPresentation& value) {
  std::lock_guard lock(mutex_);
  const std::string path = path_for(key);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << key.size() << '\n' << key << serialize(value);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
}

std::size_t DiskCache::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

std::size_t DiskCache::misses() const {
  std::lock_guard lock(mutex_);
  return misses_;
}

// --- nilpotency ------------------------------------------------------------------------------

Report analyze_nilpotency(const ShiftInput& sigma, const CellularAutomaton& tau, const NilpotencyBudget& budget) {
  Timer timer;
  const NilpotencyVerdict v = nilpotency(sigma.presentation, tau, budget);
  require_replay(replay(sigma.presentation, tau, v), "nilpotency");
  const FiniteAlphabet& a = sigma.presentation.alphabet();
  Report r;
  r.command = "nilpotency";
  r.outcome = v.kind == VerdictKind::Unknown ? Outcome::Inconclusive : Outcome::Decisive;
  r.payload = {{"kind", to_string(v.kind)}, {"prover", to_string(v.prover)}, {"level", v.level},
               {"shift", sigma.label}};
  std::visit(
      [&](const auto& c) {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, ConstantPowerCertificate>) {
          r.verdict = "Nilpotent(" + std::to_string(c.power) + ")";
          r.payload["n0"] = c.power;
          r.payload["terminal"] = a.name(c.terminal);
          r.certificates.push_back({{"type", "constant-power"},
                                    {"power", c.power},
                                    {"terminal", a.name(c.terminal)},
                                    {"replayed", true}});
        } else if constexpr (std::is_same_v<C, PeriodicPairCertificate>) {
          r.verdict = "NonNilpotent";
          r.certificates.push_back({{"type", "periodic-pair"},
                                    {"x", cfg(a, c.x)},
                                    {"x_tau_period", c.x_period},
                                    {"y", cfg(a, c.y)},
                                    {"y_tau_period", c.y_period},
                                    {"replayed", true}});
        } else if constexpr (std::is_same_v<C, OmegaMembersCertificate>) {
          r.verdict = "NonNilpotent";
          json members = json::array();
          for (const auto& x : c.members) members.push_back(cfg(a, x));
          r.certificates.push_back({{"type", "omega-members"},
                                    {"n0", c.n0},
                                    {"members", members},
                                    {"infinite", c.infinite},
                                    {"replayed", true}});
        } else {
          r.verdict = "Unknown";
        }
      },
      v.certificate);
  r.flags = mixing_flags(v.mixing);
  r.flags["nonempty"] = true;
  r.flags["within_hypotheses"] = v.within_hypotheses;
  if (v.omega_finite) {
    r.flags["omega_finite"] = *v.omega_finite;
    r.flags["omega_singleton"] = *v.omega_singleton;
    const bool nil = v.kind == VerdictKind::Nilpotent;
    r.flags["equivalence_holds"] = nil == *v.omega_singleton && *v.omega_singleton == *v.omega_finite;
  }
  r.budgets = {{"max_power", budget.max_power},       {"max_period", budget.max_period},
               {"chain_steps", budget.chain_steps},   {"jobs", budget.jobs},
               {"pattern_cap", budget.pattern_cap},   {"state_cap", budget.state_cap},
               {"powers_tried", v.powers_tried},      {"periods_tried", v.periods_tried},
               {"chain_steps_done", v.chain_steps_done}, {"chain_gave_up", v.chain_gave_up}};
  r.seconds = timer.seconds();
  return r;
}

// --- limit sets ---------------------------------------------------------------------------------

Report analyze_limit_set(const ShiftInput& sigma, const CellularAutomaton& tau, std::size_t N,
                         PresentationCache* cache) {
  Timer timer;
  const LimitSetReport ls = limit_set(sigma.presentation, tau, N, cache);
  const FiniteAlphabet& a = sigma.presentation.alphabet();
  Report r;
  r.command = "limitset";
  r.payload["shift"] = sigma.label;
  r.payload["presentation"] = serialize(ls.presentation);
  r.payload["vertices"] = ls.presentation.num_vertices();
  r.payload["edges"] = ls.presentation.edges().size();
  json values = json::array();
  for (auto s : ls.alphabet_values) values.push_back(a.name(s));
  r.payload["alphabet_values"] = values;
  r.budgets = {{"N", N}};
  if (ls.stabilized) {
    r.verdict = "Stabilized(" + std::to_string(ls.steps) + ")";
    r.outcome = Outcome::Decisive;
    r.payload["n0"] = ls.steps;
    r.payload["finite"] = ls.finiteness->finite;
    r.payload["periodic"] = ls.finiteness->finite;
    r.payload["singleton"] = ls.finiteness->finite && ls.finiteness->members.size() == 1;
    if (ls.finiteness->finite) {
      json members = json::array();
      for (const auto& x : ls.finiteness->members) members.push_back(cfg(a, x));
      r.payload["members"] = members;
    }
    require_replay(ls.invariance_verified, "invariance");
    // Independent word-level check of tau^n0(Sigma) = tau^(n0+1)(Sigma) = Omega.
    require_replay(same_words_after_power(sigma.presentation, tau, ls.steps, ls.presentation) &&
                       same_words_after_power(sigma.presentation, tau, ls.steps + 1, ls.presentation),
                   "stabilization");
    r.certificates.push_back({{"type", "stabilization"}, {"n0", ls.steps}, {"replayed", true}});
    r.certificates.push_back({{"type", "invariance"}, {"statement", "tau(Omega) = Omega"}, {"replayed", true}});
  } else {
    r.verdict = "Truncated(" + std::to_string(N) + ")";
    r.outcome = Outcome::Inconclusive;
    json langs = json::object();
    for (std::size_t len = 1; len <= 3; ++len)
      langs[std::to_string(len)] = words_json(a, words_of_length(ls.presentation, len));
    r.payload["window_languages"] = langs;
  }
  r.seconds = timer.seconds();
  return r;
}

Report analyze_image(const ShiftInput& sigma, const CellularAutomaton& tau) {
  Timer timer;
  const SoficPresentation img = canonical_presentation(image_presentation(tau, sigma.presentation));
  require_replay(same_words_after_power(sigma.presentation, tau, 1, img), "image");
  Report r;
  r.command = "image";
  r.verdict = "Image";
  r.payload = {{"shift", sigma.label},
               {"presentation", serialize(img)},
               {"vertices", img.num_vertices()},
               {"edges", img.edges().size()},
               {"surjective_onto_sigma", equal_subshifts(img, sigma.presentation)},
               {"inside_sigma", is_subshift_of(img, sigma.presentation)}};
  r.certificates.push_back({{"type", "word-agreement"}, {"statement", "words of tau(Sigma) match"}, {"replayed", true}});
  r.seconds = timer.seconds();
  return r;
}

// --- space-time ------------------------------------------------------------------------------------

Report analyze_spacetime(const ShiftInput& sigma, const CellularAutomaton& tau, std::int64_t i_max,
                         std::int64_t j_max, std::optional<Symbol> terminal, std::size_t cap) {
  Timer timer;
  if (i_max < 0 || j_max < 0) throw DomainError("spacetime: bounds must be nonnegative");
  const SpaceTimeSystem sys =
      sigma.sft ? SpaceTimeSystem::build(*sigma.sft, tau) : SpaceTimeSystem::build(sigma.presentation, tau);
  const FiniteAlphabet& a = sigma.presentation.alphabet();
  Report r;
  r.command = "spacetime";
  r.payload["shift"] = sigma.label;
  json cells = json::array();
  bool all = true;
  for (std::int64_t i = 0; i <= i_max; ++i)
    for (std::int64_t j = 0; j <= j_max; ++j) {
      const auto c = check_commutation(sys, i, j, cap);
      json e{{"i", i}, {"j", j}, {"checked", c.checked}, {"commutes", c.holds}, {"size", sys.cell(i, j, cap)->size()}};
      if (c.counterexample) e["counterexample"] = a.format(c.counterexample->values(), " ");
      if (sys.sft()) {
        const auto outer = outer_intersection(sys, i, j, i + 2, cap);
        e["outer_equals_window_language"] = outer == *sys.cell(i, j, cap);
      }
      all = all && c.holds;
      cells.push_back(e);
    }
  r.payload["cells"] = cells;
  r.verdict = all ? "Commutes" : "CommutationFailure";
  if (terminal) {
    const StarredGrid g = starred_grid(sys, *terminal, i_max, j_max, cap);
    json grid = json::array();
    for (std::size_t i = 0; i < g.cells.size(); ++i) {
      json row = json::array();
      for (const auto& c : g.cells[i]) row.push_back(c.size());
      grid.push_back(row);
    }
    r.payload["starred_sizes"] = grid;
    r.payload["terminal"] = a.name(*terminal);
    if (g.first_empty) {
      const auto [i, j] = *g.first_empty;
      require_replay(replay(sigma.presentation, tau, ConstantPowerCertificate{static_cast<std::size_t>(j), *terminal}),
                     "starred-empty");
      r.certificates.push_back({{"type", "starred-empty"},
                                {"i", i},
                                {"j", j},
                                {"statement", "tau^" + std::to_string(j) + " is constant " + a.name(*terminal)},
                                {"replayed", true}});
    }
  }
  r.budgets = {{"i_max", i_max}, {"j_max", j_max}, {"pattern_cap", cap}};
  r.seconds = timer.seconds();
  return r;
}

// --- periodic points and chain recurrence -------------------------------------------------------------

Report analyze_periodic(const ShiftInput& sigma, const CellularAutomaton& tau, std::size_t p, std::size_t cap) {
  Timer timer;
  const auto points = omega_in_fixed_points(sigma.presentation, tau, p, cap);
  const FiniteAlphabet& a = sigma.presentation.alphabet();
  Report r;
  r.command = "periodic";
  r.verdict = "Found(" + std::to_string(points.size()) + ")";
  json list = json::array();
  for (const auto& x : points) {
    std::size_t len = 0;
    PeriodicConfig y = x;
    for (std::size_t k = 1; k <= points.size(); ++k) {
      y = tau.apply_to_periodic(y);
      if (y == x) {
        len = k;
        break;
      }
    }
    require_replay(len > 0 && contains_periodic(sigma.presentation, x), "periodic-cycle");
    list.push_back(cfg(a, x));
    r.certificates.push_back({{"type", "tau-cycle"}, {"point", cfg(a, x)}, {"tau_period", len}, {"replayed", true}});
  }
  r.payload = {{"shift", sigma.label}, {"period", p}, {"points", list}};
  r.budgets = {{"pattern_cap", cap}};
  r.seconds = timer.seconds();
  return r;
}

Report analyze_chainrec(const ShiftInput& sigma, const CellularAutomaton& tau, const PeriodicConfig& x,
                        const Window& F, std::size_t max_period, std::size_t cap) {
  Timer timer;
  const auto res = chain_recurrence_certificate(sigma.presentation, tau, x, F, max_period, cap);
  const FiniteAlphabet& a = sigma.presentation.alphabet();
  Report r;
  r.command = "chainrec";
  r.payload = {{"shift", sigma.label}, {"point", cfg(a, x)}, {"entourage", F.to_string()}};
  r.budgets = {{"max_period", max_period}, {"periods_searched", res.periods_searched}};
  if (res.certificate) {
    require_replay(replay(tau, *res.certificate), "chain");
    r.verdict = "ChainRecurrent";
    json chain = json::array();
    for (const auto& y : res.certificate->chain) chain.push_back(cfg(a, y));
    r.certificates.push_back({{"type", "epsilon-chain"},
                              {"chain", chain},
                              {"entourage", F.to_string()},
                              {"period", res.certificate->period},
                              {"replayed", true}});
  } else {
    r.verdict = "Exhausted";
    r.outcome = Outcome::Inconclusive;
  }
  r.seconds = timer.seconds();
  return r;
}

Report analyze_mixing(const ShiftInput& sigma) {
  Timer timer;
  const MixingResult m = is_mixing(sigma.presentation);
  Report r;
  r.command = "mixing";
  r.verdict = m.mixing ? "Mixing" : "NotMixing";
  r.payload = {{"shift", sigma.label}, {"reason", to_string(m.reason)}, {"period", m.period}};
  r.seconds = timer.seconds();
  return r;
}

// --- examples -------------------------------------------------------------------------------------------

namespace {

Report example_not_in_image() {
  const ProofObject proof = not_in_image_certificate();
  const ReplayResult rep = replay(proof);
  require_replay(rep.ok, "not-in-image");
  // Round trip through the text form, replayed again.
  const ProofObject again = parse_proof(serialize(proof));
  require_replay(replay(again).ok, "not-in-image (reparsed)");
  const RecurrentWitness w = recurrent_witness(RationalConfig::constant(Rational(1)), 1, 1);
  const bool consistent = not_in_image_consistency(proof, [&](std::int64_t k) { return w.d->at(k); });
  const ReturnCheck ret = check_return([&](std::int64_t k) { return w.d->at(k); }, 1);
  Report r;
  r.command = "example";
  r.verdict = "NotInImage";
  r.payload = {{"name", "riccati-not-in-image"}, {"proof", serialize(proof)}, {"steps", proof.steps.size()}};
  r.certificates.push_back({{"type", "proof-object"}, {"steps", proof.steps.size()}, {"replayed", true}});
  r.flags = {{"consistency", consistent}, {"witness_recurrent_power_9", ret.passed}};
  return r;
}

Report example_density() {
  const auto c = RationalConfig::constant(Rational(1));
  const DensityLadder ladder = omega_density_witness(c, 0, 2);
  const Window w(0, 2);
  require_replay(verify_density_ladder(ladder, w), "density ladder");
  Report r;
  r.command = "example";
  r.verdict = "InLimitSetWindow";
  json d = json::array();
  for (std::int64_t k = -2; k <= 4; ++k) d.push_back(to_string(ladder.d[0]->at(k)));
  json d1 = json::array(), d2 = json::array();
  for (std::int64_t k = -2; k <= 4; ++k) {
    d1.push_back(to_string(ladder.d[1]->at(k)));
    d2.push_back(to_string(ladder.d[2]->at(k)));
  }
  r.payload = {{"name", "riccati-density"}, {"m", 0}, {"K", 2}, {"indices", "-2..4"},
               {"d", d}, {"d1", d1}, {"d2", d2}};
  r.certificates.push_back({{"type", "ladder"}, {"window", w.to_string()}, {"replayed", true}});
  return r;
}

Report example_shifted_preimage() {
  const auto c = RationalConfig::constant(Rational(1));
  const auto d = shifted_preimage(c, 1);
  const auto fresh = d->fresh_copy();
  const auto img = iterate_on_window(riccati_rule(), [&](std::int64_t k) { return fresh->at(k); }, 1, Window(0, 5));
  bool ok = true;
  for (const auto& v : img) ok = ok && v == 1;
  require_replay(ok, "shifted preimage");
  Report r;
  r.command = "example";
  r.verdict = "Preimage";
  json vals = json::array();
  for (std::int64_t k = -1; k <= 4; ++k) vals.push_back(to_string(d->at(k)));
  r.payload = {{"name", "riccati-shifted-preimage"}, {"n", 1}, {"indices", "-1..4"}, {"d", vals}};
  r.certificates.push_back({{"type", "forward-check"}, {"window", "[0, 5]"}, {"replayed", true}});
  return r;
}

Report example_recurrent() {
  const RecurrentWitness w = recurrent_witness(RationalConfig::constant(Rational(1)), 1, 1);
  const auto fresh = w.d->fresh_copy();
  const ReturnCheck ret = check_return([&](std::int64_t k) { return fresh->at(k); }, 1);
  require_replay(ret.passed, "recurrence");
  Report r;
  r.command = "example";
  r.verdict = "Recurrent";
  r.payload = {{"name", "riccati-recurrent"}, {"n0", 1}, {"N", 1}, {"power", ret.power},
               {"window", ret.window.to_string()}};
  r.certificates.push_back({{"type", "return"}, {"power", ret.power}, {"window", ret.window.to_string()},
                            {"replayed", true}});
  return r;
}

Report example_square_plus_one(PolyMode mode) {
  const PolyRule rule = square_plus_one(mode);
  Report r;
  r.command = "example";
  if (mode == PolyMode::Affine) {
    const auto it = interval_iteration(rule, 4, Rational(1000000));
    json encl = json::array();
    for (const auto& e : it.enclosures) encl.push_back(e.to_string());
    require_replay(it.empty_at.has_value(), "interval emptiness");
    r.verdict = "EmptyOnProbe(" + std::to_string(*it.empty_at) + ")";
    r.payload = {{"name", "square-plus-one"}, {"rule", rule.poly.to_string()}, {"enclosures", encl},
                 {"probe", "1000000"}, {"empty_at", *it.empty_at}};
    r.certificates.push_back({{"type", "interval-enclosure"}, {"empty_at", *it.empty_at}, {"replayed", true}});
  } else {
    const auto it = interval_iteration(rule, 6, std::nullopt);
    const ProjectiveVerdict& v = *it.projective;
    require_replay(replay(rule, v) && v.omega_is_infinity && v.non_nilpotent, "projective");
    json orbit = json::array();
    for (const auto& q : v.orbit_of_zero) orbit.push_back(to_string(q));
    r.verdict = "NonNilpotent";
    r.payload = {{"name", "projective-square-plus-one"}, {"rule", rule.poly.to_string()},
                 {"omega", "{inf^Z}"}, {"orbit_of_zero", orbit}};
    r.certificates.push_back({{"type", "projective"}, {"statement", "inf fixed, orbit of 0 finite and increasing"},
                              {"replayed", true}});
  }
  return r;
}

Report example_fixture(FixtureKind kind) {
  const UnaryFixtureMap m = appendix_fixture(kind);
  Report r;
  r.command = "example";
  r.payload = {{"name", to_string(kind)}, {"map", m.description}};
  auto ints = [](const std::vector<Integer>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
  };
  switch (kind) {
    case FixtureKind::EmptyLimit: {
      const auto probe = probe_limit_set(m, 20, 200, 40);
      const bool ok = probe.empty() || probe.front() >= 20;
      require_replay(ok, "empty-limit probe");
      r.verdict = "ProbeExcludesBelow(20)";
      r.payload["probe"] = {{"N", 20}, {"R", 200}, {"K", 40}, {"survivors", ints(probe)}};
      break;
    }
    case FixtureKind::SingletonNotPointwise: {
      const auto probe = probe_limit_set(m, 101, 200, 100);
      Integer x = 2;
      bool refuted = true;
      for (int k = 1; k <= 1000; ++k) {
        x = m.f(x);
        refuted = refuted && x == k + 2;
      }
      require_replay(probe.size() == 1 && probe[0] == 1 && refuted, "singleton probe");
      r.verdict = "SingletonNotPointwise";
      r.payload["probe"] = {{"N", 101}, {"R", 200}, {"K", 100}, {"survivors", ints(probe)}};
      r.payload["orbit_of_2"] = "f^k(2) = k + 2 for k <= 1000";
      break;
    }
    case FixtureKind::StrictInvariance: {
      const auto probe = probe_limit_set(m, 20, 2000, 200);
      const std::set<Integer> L(probe.begin(), probe.end());
      bool y1_in_image = false;
      for (const auto& x : probe) y1_in_image = y1_in_image || m.f(x) == 1;
      const bool ok = L.count(1) && m.f(Integer(1)) == 0 && !y1_in_image;
      require_replay(ok, "strict invariance probe");
      r.verdict = "StrictInvariance";
      r.payload["probe"] = {{"N", 20}, {"R", 2000}, {"K", 200}, {"survivors", probe.size()}};
      r.payload["y1_in_probe"] = true;
      r.payload["f(y1)"] = "0";
      r.payload["y1_in_f(probe)"] = false;
      break;
    }
    case FixtureKind::SurjectivePointwiseNilpotent: {
      const Integer top = 10000;
      std::set<Integer> hit;
      for (Integer x = 0; x <= 2 * top; ++x) {
        const Integer y = m.f(x);
        if (y <= top) hit.insert(y);
      }
      const bool surjective = hit.size() == static_cast<std::size_t>(top.get_ui() + 1);
      bool nilpotent = true;
      std::size_t longest = 0;
      for (Integer z = 0; z <= top && nilpotent; ++z) {
        Integer y = z;
        std::size_t steps = 0;
        while (y != 0 && steps <= 200) {
          y = m.f(y);
          ++steps;
        }
        nilpotent = y == 0;
        longest = std::max(longest, steps);
      }
      require_replay(surjective && nilpotent, "surjective pointwise nilpotent");
      r.verdict = "SurjectivePointwiseNilpotent";
      r.payload["range"] = "[0, 10000]";
      r.payload["longest_orbit_to_0"] = longest;
      break;
    }
  }
  r.certificates.push_back({{"type", "finite-probe"}, {"replayed", true}});
  return r;
}

Report example_nu_family() {
  const NuFamily f = nu_family(4);
  const PolyRule rule = riccati_rule();
  json nus = json::array();
  bool ok = true;
  for (std::size_t n = 1; n <= 4; ++n) {
    nus.push_back(f.nu[n - 1].to_string());
    ok = ok && (symbolic_power(rule, n) - f.mu[n - 1]).is_zero();
  }
  require_replay(ok, "nu family");
  Report r;
  r.command = "example";
  r.verdict = "Identity";
  r.payload = {{"name", "nu-family"}, {"nu", nus}};
  r.certificates.push_back({{"type", "polynomial-identity"}, {"statement", "mu_n = t_n + nu_n for n <= 4"},
                            {"replayed", true}});
  return r;
}

}  // namespace

std::vector<std::string> example_names() {
  return {"riccati-not-in-image", "riccati-density", "riccati-shifted-preimage", "riccati-recurrent",
          "nu-family", "square-plus-one", "projective-square-plus-one", "empty-limit",
          "singleton-not-pointwise", "strict-invariance", "surjective-pointwise-nilpotent"};
}

Report run_example(const std::string& name) {
  Timer timer;
  Report r;
  if (name == "riccati-not-in-image") r = example_not_in_image();
  else if (name == "riccati-density") r = example_density();
  else if (name == "riccati-shifted-preimage") r = example_shifted_preimage();
  else if (name == "riccati-recurrent") r = example_recurrent();
  else if (name == "nu-family") r = example_nu_family();
  else if (name == "square-plus-one") r = example_square_plus_one(PolyMode::Affine);
  else if (name == "projective-square-plus-one") r = example_square_plus_one(PolyMode::Projective);
  else if (name == "empty-limit") r = example_fixture(FixtureKind::EmptyLimit);
  else if (name == "singleton-not-pointwise") r = example_fixture(FixtureKind::SingletonNotPointwise);
  else if (name == "strict-invariance") r = example_fixture(FixtureKind::StrictInvariance);
  else if (name == "surjective-pointwise-nilpotent") r = example_fixture(FixtureKind::SurjectivePointwiseNilpotent);
  else throw DomainError("unknown example '" + name + "'");
  r.seconds = timer.seconds();
  return r;
}

}  // namespace symdyn
