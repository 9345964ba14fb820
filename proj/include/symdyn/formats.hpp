#pragma once

// Line-oriented text formats. Blank lines and lines starting with '#' are
// ignored; serialize(parse(text)) reproduces canonical text byte for byte.
//
//   SFT      alphabet: 0 1 / window: 0 1 / allow: 0 1 (one line per pattern)
//   graph    alphabet: a b / vertex: v / edge: v w a
//   rule     alphabet: 0 1 / [target: 0 1] / memory: 0 1 / rule: 0 1 -> 1
//   poly     memory: 0 1 / poly: t1 - t0^2 / [mode: projective]
//   proof    title: ... / step: 1 discriminant / <key>: <value> ... / remark: ...

#include <string>

#include "symdyn/automaton.hpp"
#include "symdyn/polyca.hpp"
#include "symdyn/shift.hpp"

namespace symdyn {

// `source` names the input in ParseError messages.
Sft parse_sft(const std::string& text, const std::string& source = "<sft>");
std::string serialize(const Sft& sft);

SoficPresentation parse_graph(const std::string& text, const std::string& source = "<graph>");
std::string serialize(const SoficPresentation& p);

// Incomplete or duplicate tables are parse errors.
CellularAutomaton parse_rule(const std::string& text, const std::string& source = "<rule>");
std::string serialize(const CellularAutomaton& ca);

PolyRule parse_poly_rule(const std::string& text, const std::string& source = "<poly>");
std::string serialize(const PolyRule& rule);

ProofObject parse_proof(const std::string& text, const std::string& source = "<proof>");
std::string serialize(const ProofObject& proof);

// Either an SFT or a graph file, decided by the first keyword.
SoficPresentation parse_shift(const std::string& text, const std::string& source = "<shift>");

// Whole file. A missing or unreadable file is a ParseError at line 0.
std::string read_text_file(const std::string& path);

}  // namespace symdyn
