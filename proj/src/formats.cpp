#include "symdyn/formats.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "symdyn/error.hpp"

namespace symdyn {

namespace {

struct Line {
  int number = 0;
  std::string key;
  std::string value;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<Line> split_lines(const std::string& text, const std::string& source) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    const std::string t = trim(raw);
    if (t.empty() || t[0] == '#') continue;
    const auto colon = t.find(':');
    if (colon == std::string::npos) throw ParseError(source, n, "expected 'key: value'");
    out.push_back({n, trim(t.substr(0, colon)), trim(t.substr(colon + 1))});
  }
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::int64_t parse_int(const std::string& s, const std::string& source, int line) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(source, line, "expected an integer, got '" + s + "'");
  }
}

std::vector<std::int64_t> parse_ints(const std::string& s, const std::string& source, int line) {
  std::vector<std::int64_t> out;
  for (const auto& w : words(s)) out.push_back(parse_int(w, source, line));
  return out;
}

FiniteAlphabet parse_alphabet(const Line& l, const std::string& source) {
  const auto names = words(l.value);
  if (names.empty()) throw ParseError(source, l.number, "alphabet must list at least one symbol");
  try {
    return FiniteAlphabet(names);
  } catch (const Error& e) {
    throw ParseError(source, l.number, e.what());
  }
}

Word parse_word(const FiniteAlphabet& a, const std::string& s, const std::string& source, int line) {
  Word w;
  for (const auto& name : words(s)) {
    if (!a.has(name)) throw ParseError(source, line, "unknown symbol '" + name + "'");
    w.push_back(a.id(name));
  }
  return w;
}

Rational parse_q(const std::string& s, const std::string& source, int line) {
  try {
    return parse_rational(s);
  } catch (const Error& e) {
    throw ParseError(source, line, e.what());
  }
}

Polynomial parse_p(const std::string& s, const std::string& source, int line) {
  try {
    return parse_polynomial(s);
  } catch (const Error& e) {
    throw ParseError(source, line, e.what());
  }
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i];
  return out;
}

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

std::string join_q(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + to_string(v[i]);
  return out;
}

const Line& expect_first(const std::vector<Line>& lines, const std::string& key, const std::string& source) {
  if (lines.empty()) throw ParseError(source, 0, "empty input");
  if (lines[0].key != key) throw ParseError(source, lines[0].number, "expected '" + key + ":' first");
  return lines[0];
}

}  // namespace

// --- SFT -------------------------------------------------------------------------------

Sft parse_sft(const std::string& text, const std::string& source) {
  const auto lines = split_lines(text, source);
  const FiniteAlphabet a = parse_alphabet(expect_first(lines, "alphabet", source), source);
  if (lines.size() < 2 || lines[1].key != "window")
    throw ParseError(source, lines.size() < 2 ? lines[0].number : lines[1].number, "expected 'window:'");
  const auto bounds = parse_ints(lines[1].value, source, lines[1].number);
  if (bounds.size() != 2 || bounds[0] > bounds[1])
    throw ParseError(source, lines[1].number, "window needs two integers lo <= hi");
  const Window win(bounds[0], bounds[1]);
  std::set<Word> allowed;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.key != "allow") throw ParseError(source, l.number, "unexpected key '" + l.key + "'");
    Word w = parse_word(a, l.value, source, l.number);
    if (w.size() != win.size())
      throw ParseError(source, l.number, "pattern has " + std::to_string(w.size()) + " symbols, window has " +
                                             std::to_string(win.size()));
    if (!allowed.insert(std::move(w)).second) throw ParseError(source, l.number, "duplicate pattern");
  }
  return Sft(a, win, std::move(allowed));
}

std::string serialize(const Sft& sft) {
  std::string out = "alphabet: " + join(sft.alphabet().names()) + "\n";
  out += "window: " + std::to_string(sft.window().lo()) + " " + std::to_string(sft.window().hi()) + "\n";
  for (const auto& w : sft.allowed()) out += "allow: " + sft.alphabet().format(w, " ") + "\n";
  return out;
}

// --- graphs ----------------------------------------------------------------------------

SoficPresentation parse_graph(const std::string& text, const std::string& source) {
  const auto lines = split_lines(text, source);
  SoficPresentation p(parse_alphabet(expect_first(lines, "alphabet", source), source));
  std::map<std::string, std::uint32_t> ids;
  bool edges_started = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const auto w = words(l.value);
    if (l.key == "vertex") {
      if (edges_started) throw ParseError(source, l.number, "vertices must precede edges");
      if (w.size() != 1) throw ParseError(source, l.number, "vertex needs exactly one name");
      if (ids.count(w[0])) throw ParseError(source, l.number, "duplicate vertex '" + w[0] + "'");
      ids[w[0]] = p.add_vertex(w[0]);
    } else if (l.key == "edge") {
      edges_started = true;
      if (w.size() != 3) throw ParseError(source, l.number, "edge needs: from to label");
      for (int k = 0; k < 2; ++k)
        if (!ids.count(w[k])) throw ParseError(source, l.number, "unknown vertex '" + w[k] + "'");
      if (!p.alphabet().has(w[2])) throw ParseError(source, l.number, "unknown label '" + w[2] + "'");
      p.add_edge(ids[w[0]], ids[w[1]], p.alphabet().id(w[2]));
    } else {
      throw ParseError(source, l.number, "unexpected key '" + l.key + "'");
    }
  }
  return p;
}

std::string serialize(const SoficPresentation& p) {
  std::string out = "alphabet: " + join(p.alphabet().names()) + "\n";
  for (const auto& v : p.vertex_names()) out += "vertex: " + v + "\n";
  for (const auto& e : p.edges())
    out += "edge: " + p.vertex_names()[e.from] + " " + p.vertex_names()[e.to] + " " + p.alphabet().name(e.label) +
           "\n";
  return out;
}

SoficPresentation parse_shift(const std::string& text, const std::string& source) {
  const auto lines = split_lines(text, source);
  for (const auto& l : lines) {
    if (l.key == "window" || l.key == "allow") return presentation_of(parse_sft(text, source));
    if (l.key == "vertex" || l.key == "edge") return parse_graph(text, source);
  }
  throw ParseError(source, lines.empty() ? 0 : lines.back().number, "neither an SFT nor a graph description");
}

// --- rules -----------------------------------------------------------------------------

CellularAutomaton parse_rule(const std::string& text, const std::string& source) {
  const auto lines = split_lines(text, source);
  const FiniteAlphabet a = parse_alphabet(expect_first(lines, "alphabet", source), source);
  std::size_t i = 1;
  FiniteAlphabet target = a;
  if (i < lines.size() && lines[i].key == "target") target = parse_alphabet(lines[i++], source);
  if (i >= lines.size() || lines[i].key != "memory")
    throw ParseError(source, i < lines.size() ? lines[i].number : lines.back().number, "expected 'memory:'");
  const int memory_line = lines[i].number;
  const auto memory = parse_ints(lines[i++].value, source, memory_line);
  if (memory.empty()) throw ParseError(source, memory_line, "memory must be nonempty");
  for (std::size_t k = 1; k < memory.size(); ++k)
    if (memory[k] <= memory[k - 1]) throw ParseError(source, memory_line, "memory offsets must be increasing");
  std::size_t entries = 1;
  for (std::size_t k = 0; k < memory.size(); ++k) {
    entries *= a.size();
    if (entries > kDefaultTableCap) throw ParseError(source, memory_line, "rule table too large");
  }
  std::vector<Symbol> table(entries, 0);
  std::vector<int> seen_at(entries, 0);
  // Index computation mirrors the engine's mixed radix, first offset most significant.
  for (; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.key != "rule") throw ParseError(source, l.number, "unexpected key '" + l.key + "'");
    const auto arrow = l.value.find("->");
    if (arrow == std::string::npos) throw ParseError(source, l.number, "expected 'inputs -> output'");
    const Word in = parse_word(a, l.value.substr(0, arrow), source, l.number);
    const Word out = parse_word(target, l.value.substr(arrow + 2), source, l.number);
    if (in.size() != memory.size()) throw ParseError(source, l.number, "one input symbol per memory offset expected");
    if (out.size() != 1) throw ParseError(source, l.number, "exactly one output symbol expected");
    std::size_t idx = 0;
    for (Symbol s : in) idx = idx * a.size() + s;
    if (seen_at[idx])
      throw ParseError(source, l.number, "duplicate table entry (first given on line " + std::to_string(seen_at[idx]) +
                                             ")");
    seen_at[idx] = l.number;
    table[idx] = out[0];
  }
  for (std::size_t idx = 0; idx < entries; ++idx) {
    if (seen_at[idx]) continue;
    Word missing(memory.size());
    std::size_t r = idx;
    for (std::size_t k = memory.size(); k-- > 0;) {
      missing[k] = static_cast<Symbol>(r % a.size());
      r /= a.size();
    }
    throw ParseError(source, lines.back().number,
                     "incomplete table: no entry for inputs '" + a.format(missing, " ") + "'");
  }
  try {
    return CellularAutomaton(a, target, memory, std::move(table));
  } catch (const Error& e) {
    throw ParseError(source, memory_line, e.what());
  }
}

std::string serialize(const CellularAutomaton& ca) {
  std::string out = "alphabet: " + join(ca.source().names()) + "\n";
  if (!ca.is_endomorphism()) out += "target: " + join(ca.target().names()) + "\n";
  out += "memory: " + join_ints(ca.memory()) + "\n";
  for (std::size_t i = 0; i < ca.table().size(); ++i)
    out += "rule: " + ca.source().format(ca.entry(i), " ") + " -> " + ca.target().name(ca.table()[i]) + "\n";
  return out;
}

// --- polynomial rules ---------------------------------------------------------------------

PolyRule parse_poly_rule(const std::string& text, const std::string& source) {
  const auto lines = split_lines(text, source);
  const Line& m = expect_first(lines, "memory", source);
  const auto memory = parse_ints(m.value, source, m.number);
  if (lines.size() < 2 || lines[1].key != "poly")
    throw ParseError(source, lines.size() < 2 ? m.number : lines[1].number, "expected 'poly:'");
  const Polynomial poly = parse_p(lines[1].value, source, lines[1].number);
  PolyMode mode = PolyMode::Affine;
  if (lines.size() >= 3) {
    if (lines[2].key != "mode") throw ParseError(source, lines[2].number, "unexpected key '" + lines[2].key + "'");
    try {
      mode = parse_poly_mode(lines[2].value);
    } catch (const Error& e) {
      throw ParseError(source, lines[2].number, e.what());
    }
  }
  if (lines.size() > 3) throw ParseError(source, lines[3].number, "unexpected trailing line");
  try {
    return PolyRule(memory, poly, mode);
  } catch (const Error& e) {
    throw ParseError(source, m.number, e.what());
  }
}

std::string serialize(const PolyRule& rule) {
  return "memory: " + join_ints(rule.memory) + "\npoly: " + rule.poly.to_string() + "\nmode: " + to_string(rule.mode) +
         "\n";
}

// --- proof objects ---------------------------------------------------------------------------

ProofObject parse_proof(const std::string& text, const std::string& source) {
  const auto lines = split_lines(text, source);
  ProofObject p;
  p.title = expect_first(lines, "title", source).value;
  ProofStep* cur = nullptr;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.key == "step") {
      const auto w = words(l.value);
      if (w.size() != 2) throw ParseError(source, l.number, "step needs: <number> <kind>");
      if (parse_int(w[0], source, l.number) != static_cast<std::int64_t>(p.steps.size() + 1))
        throw ParseError(source, l.number, "steps must be numbered consecutively from 1");
      ProofStep s;
      try {
        s.kind = parse_step_kind(w[1]);
      } catch (const Error& e) {
        throw ParseError(source, l.number, e.what());
      }
      p.steps.push_back(s);
      cur = &p.steps.back();
      continue;
    }
    if (l.key == "remark") {
      p.remarks.push_back(l.value);
      cur = nullptr;
      continue;
    }
    if (!cur) throw ParseError(source, l.number, "'" + l.key + ":' outside a step");
    if (l.key == "lhs") {
      cur->lhs = parse_p(l.value, source, l.number);
    } else if (l.key == "coefficients") {
      cur->coefficients.clear();
      for (const auto& w : words(l.value)) cur->coefficients.push_back(parse_q(w, source, l.number));
    } else if (l.key == "samples") {
      cur->samples.clear();
      for (const auto& w : words(l.value)) cur->samples.push_back(parse_q(w, source, l.number));
    } else if (l.key == "claimed") {
      cur->claimed = parse_q(l.value, source, l.number);
    } else if (l.key == "center") {
      cur->center = parse_q(l.value, source, l.number);
    } else if (l.key == "scale") {
      cur->scale = parse_q(l.value, source, l.number);
    } else if (l.key == "offset") {
      cur->offset = parse_q(l.value, source, l.number);
    } else if (l.key == "drift") {
      cur->drift = parse_q(l.value, source, l.number);
    } else if (l.key == "bound") {
      cur->bound = parse_q(l.value, source, l.number);
    } else if (l.key == "conclusion") {
      cur->conclusion = l.value;
    } else {
      throw ParseError(source, l.number, "unexpected key '" + l.key + "'");
    }
  }
  return p;
}

std::string serialize(const ProofObject& proof) {
  std::string out = "title: " + proof.title + "\n";
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& s = proof.steps[i];
    out += "step: " + std::to_string(i + 1) + " " + to_string(s.kind) + "\n";
    switch (s.kind) {
      case StepKind::Discriminant:
        out += "lhs: " + s.lhs.to_string() + "\ncoefficients: " + join_q(s.coefficients) +
               "\nclaimed: " + to_string(s.claimed) + "\n";
        break;
      case StepKind::SquareCompletion:
        out += "lhs: " + s.lhs.to_string() + "\ncenter: " + to_string(s.center) + "\nscale: " + to_string(s.scale) +
               "\noffset: " + to_string(s.offset) + "\n";
        break;
      case StepKind::LowerBound:
        out += "lhs: " + s.lhs.to_string() + "\nclaimed: " + to_string(s.claimed) + "\n";
        break;
      case StepKind::ChainLength:
        out += "drift: " + to_string(s.drift) + "\nbound: " + to_string(s.bound) + "\nsamples: " + join_q(s.samples) +
               "\n";
        break;
    }
    out += "conclusion: " + s.conclusion + "\n";
  }
  for (const auto& r : proof.remarks) out += "remark: " + r + "\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace symdyn
