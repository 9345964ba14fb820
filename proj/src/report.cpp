#include "symdyn/report.hpp"

#include <sstream>

#include "symdyn/error.hpp"

namespace symdyn {

using nlohmann::json;

const char* to_string(Outcome o) { return o == Outcome::Decisive ? "decisive" : "inconclusive"; }

Outcome parse_outcome(const std::string& s) {
  if (s == "decisive") return Outcome::Decisive;
  if (s == "inconclusive") return Outcome::Inconclusive;
  throw ParseError("<report>", 0, "unknown outcome '" + s + "'");
}

int exit_code(Outcome o) { return o == Outcome::Decisive ? 0 : 2; }

json to_json(const Report& r) {
  return json{{"command", r.command},   {"verdict", r.verdict}, {"outcome", to_string(r.outcome)},
              {"payload", r.payload},   {"certificates", r.certificates},
              {"budgets", r.budgets},   {"flags", r.flags}};
}

Report report_from_json(const json& j) {
  auto need = [&](const char* key, json::value_t type) -> const json& {
    if (!j.is_object() || !j.contains(key)) throw ParseError("<report>", 0, std::string("missing key '") + key + "'");
    const json& v = j.at(key);
    if (v.type() != type) throw ParseError("<report>", 0, std::string("key '") + key + "' has the wrong type");
    return v;
  };
  Report r;
  r.command = need("command", json::value_t::string).get<std::string>();
  r.verdict = need("verdict", json::value_t::string).get<std::string>();
  r.outcome = parse_outcome(need("outcome", json::value_t::string).get<std::string>());
  r.payload = need("payload", json::value_t::object);
  r.certificates = need("certificates", json::value_t::array);
  r.budgets = need("budgets", json::value_t::object);
  r.flags = need("flags", json::value_t::object);
  return r;
}

Report parse_report(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("<report>", 0, e.what());
  }
  return report_from_json(j);
}

std::string dump_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

namespace {

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render(std::ostringstream& os, const json& v, const std::string& indent) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (x.is_structured() && !x.empty()) {
        os << indent << k << ":\n";
        render(os, x, indent + "  ");
      } else if (x.is_string() && x.get<std::string>().find('\n') != std::string::npos) {
        // Embedded file text: one indented block.
        os << indent << k << ": |\n";
        std::istringstream lines(x.get<std::string>());
        for (std::string line; std::getline(lines, line);) os << indent << "  " << line << "\n";
      } else {
        os << indent << k << ": " << scalar(x) << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_structured()) {
        os << indent << "-\n";
        render(os, x, indent + "  ");
      } else {
        os << indent << "- " << scalar(x) << "\n";
      }
    }
  } else {
    os << indent << scalar(v) << "\n";
  }
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.command << ": " << r.verdict << " (" << to_string(r.outcome) << ")\n";
  if (!r.payload.empty()) {
    os << "result:\n";
    render(os, r.payload, "  ");
  }
  if (!r.certificates.empty()) {
    os << "certificates:\n";
    render(os, r.certificates, "  ");
  }
  if (!r.flags.empty()) {
    os << "flags:\n";
    render(os, r.flags, "  ");
  }
  if (!r.budgets.empty()) {
    os << "budgets:\n";
    render(os, r.budgets, "  ");
  }
  return os.str();
}

}  // namespace symdyn
