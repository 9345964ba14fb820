#pragma once

// Structured result of one analysis: verdict, payload, certificates, budgets
// and hypothesis flags. JSON keys are stable; timing is kept out of JSON so
// identical runs give identical documents.

#include <string>

#include "json.hpp"

namespace symdyn {

enum class Outcome { Decisive, Inconclusive };
const char* to_string(Outcome o);
Outcome parse_outcome(const std::string& s);
// 0 for a decisive verdict, 2 for Unknown / Truncated / Exhausted.
int exit_code(Outcome o);

struct Report {
  std::string command;
  std::string verdict;
  Outcome outcome = Outcome::Decisive;
  nlohmann::json payload = nlohmann::json::object();
  nlohmann::json certificates = nlohmann::json::array();  // each carries "replayed": true
  nlohmann::json budgets = nlohmann::json::object();
  nlohmann::json flags = nlohmann::json::object();
  double seconds = 0;  // not serialized

  friend bool operator==(const Report& a, const Report& b) {
    return a.command == b.command && a.verdict == b.verdict && a.outcome == b.outcome && a.payload == b.payload &&
           a.certificates == b.certificates && a.budgets == b.budgets && a.flags == b.flags;
  }
};

nlohmann::json to_json(const Report& r);
// Missing or mistyped keys are a ParseError.
Report report_from_json(const nlohmann::json& j);
Report parse_report(const std::string& text);
std::string dump_json(const Report& r);  // two-space indent, trailing newline
std::string render_text(const Report& r);

}  // namespace symdyn
