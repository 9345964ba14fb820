#include "symdyn/symdyn.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "symdyn/analysis.hpp"
#include "symdyn/error.hpp"
#include "symdyn/formats.hpp"

struct sd_ca {
  symdyn::CellularAutomaton ca;
};
struct sd_shift {
  symdyn::ShiftInput input;
};
struct sd_report {
  symdyn::Report report;
};

namespace {

thread_local std::string last_error;

// Runs f, mapping exceptions onto status codes.
template <class F>
sd_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return SD_OK;
  } catch (const symdyn::ParseError& e) {
    last_error = e.what();
    return SD_ERR_PARSE;
  } catch (const symdyn::DomainError& e) {
    last_error = e.what();
    return SD_ERR_DOMAIN;
  } catch (const symdyn::ResourceError& e) {
    last_error = e.what();
    return SD_ERR_RESOURCE;
  } catch (const symdyn::RangeError& e) {
    last_error = e.what();
    return SD_ERR_RANGE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SD_ERR_RESOURCE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SD_ERR_INTERNAL;
  }
}

sd_status bad_arg(const char* what) {
  last_error = what;
  return SD_ERR_ARG;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

symdyn::NilpotencyBudget to_budget(const sd_budgets* b) {
  symdyn::NilpotencyBudget nb;
  if (!b) return nb;
  nb.max_power = b->max_power;
  nb.max_period = b->max_period;
  nb.chain_steps = b->chain_steps;
  nb.jobs = b->jobs ? b->jobs : 1;
  nb.pattern_cap = static_cast<std::size_t>(b->pattern_cap);
  nb.state_cap = static_cast<std::size_t>(b->state_cap);
  return nb;
}

template <class F>
sd_status make_report(sd_report** out, F&& f) {
  if (!out) return bad_arg("output pointer is NULL");
  *out = nullptr;
  return guarded([&] { *out = new sd_report{f()}; });
}

}  // namespace

extern "C" {

void sd_budgets_default(sd_budgets* out) {
  if (!out) return;
  const symdyn::NilpotencyBudget d;
  out->max_power = static_cast<uint32_t>(d.max_power);
  out->max_period = static_cast<uint32_t>(d.max_period);
  out->chain_steps = static_cast<uint32_t>(d.chain_steps);
  out->jobs = static_cast<uint32_t>(d.jobs);
  out->pattern_cap = d.pattern_cap;
  out->state_cap = d.state_cap;
}

sd_status sd_ca_parse(const char* text, const char* source_name, sd_ca** out) {
  if (!text || !out) return bad_arg("text and output pointer are required");
  *out = nullptr;
  return guarded([&] { *out = new sd_ca{symdyn::parse_rule(text, source_name ? source_name : "<rule>")}; });
}

sd_status sd_ca_load(const char* path, sd_ca** out) {
  if (!path || !out) return bad_arg("path and output pointer are required");
  *out = nullptr;
  return guarded([&] { *out = new sd_ca{symdyn::parse_rule(symdyn::read_text_file(path), path)}; });
}

sd_status sd_ca_elementary(unsigned number, sd_ca** out) {
  if (!out) return bad_arg("output pointer is NULL");
  if (number > 255) return bad_arg("elementary rule numbers are 0..255");
  *out = nullptr;
  return guarded([&] { *out = new sd_ca{symdyn::CellularAutomaton::elementary(number)}; });
}

sd_status sd_ca_serialize(const sd_ca* ca, char** out) {
  if (!ca || !out) return bad_arg("rule and output pointer are required");
  return guarded([&] { *out = dup(symdyn::serialize(ca->ca)); });
}

void sd_ca_free(sd_ca* ca) { delete ca; }

sd_status sd_shift_parse(const char* text, const char* source_name, sd_shift** out) {
  if (!text || !out) return bad_arg("text and output pointer are required");
  *out = nullptr;
  return guarded([&] { *out = new sd_shift{symdyn::shift_from_text(text, source_name ? source_name : "<shift>")}; });
}

sd_status sd_shift_load(const char* path, sd_shift** out) {
  if (!path || !out) return bad_arg("path and output pointer are required");
  *out = nullptr;
  return guarded([&] { *out = new sd_shift{symdyn::shift_from_text(symdyn::read_text_file(path), path)}; });
}

sd_status sd_shift_preset(const char* name, const sd_ca* ca, sd_shift** out) {
  if (!name || !ca || !out) return bad_arg("name, rule and output pointer are required");
  *out = nullptr;
  return guarded([&] { *out = new sd_shift{symdyn::shift_preset(name, ca->ca.source())}; });
}

void sd_shift_free(sd_shift* shift) { delete shift; }

sd_status sd_nilpotency(const sd_shift* shift, const sd_ca* ca, const sd_budgets* budgets, sd_report** out) {
  if (!shift || !ca) return bad_arg("shift and rule are required");
  return make_report(out, [&] { return symdyn::analyze_nilpotency(shift->input, ca->ca, to_budget(budgets)); });
}

sd_status sd_limit_set(const sd_shift* shift, const sd_ca* ca, uint32_t n, sd_report** out) {
  if (!shift || !ca) return bad_arg("shift and rule are required");
  return make_report(out, [&] {
    auto cache = symdyn::DiskCache::from_env();
    return symdyn::analyze_limit_set(shift->input, ca->ca, n, cache.get());
  });
}

sd_status sd_image(const sd_shift* shift, const sd_ca* ca, sd_report** out) {
  if (!shift || !ca) return bad_arg("shift and rule are required");
  return make_report(out, [&] { return symdyn::analyze_image(shift->input, ca->ca); });
}

sd_status sd_spacetime_check(const sd_shift* shift, const sd_ca* ca, int32_t i_max, int32_t j_max,
                             const char* terminal, sd_report** out) {
  if (!shift || !ca) return bad_arg("shift and rule are required");
  return make_report(out, [&] {
    std::optional<symdyn::Symbol> t;
    if (terminal) {
      const auto& a = shift->input.presentation.alphabet();
      if (!a.has(terminal)) throw symdyn::DomainError(std::string("terminal symbol '") + terminal + "' not in alphabet");
      t = a.id(terminal);
    }
    return symdyn::analyze_spacetime(shift->input, ca->ca, i_max, j_max, t);
  });
}

sd_status sd_periodic(const sd_shift* shift, const sd_ca* ca, uint32_t period, sd_report** out) {
  if (!shift || !ca) return bad_arg("shift and rule are required");
  return make_report(out, [&] { return symdyn::analyze_periodic(shift->input, ca->ca, period); });
}

sd_status sd_chainrec(const sd_shift* shift, const sd_ca* ca, const char* point, int64_t lo, int64_t hi,
                      uint32_t max_period, sd_report** out) {
  if (!shift || !ca || !point) return bad_arg("shift, rule and point are required");
  if (lo > hi) return bad_arg("entourage needs lo <= hi");
  return make_report(out, [&] {
    const auto& a = shift->input.presentation.alphabet();
    std::istringstream in(point);
    std::string name;
    symdyn::Word cells;
    while (in >> name) {
      if (!a.has(name)) throw symdyn::DomainError("point: unknown symbol '" + name + "'");
      cells.push_back(a.id(name));
    }
    if (cells.empty()) throw symdyn::DomainError("point: at least one symbol expected");
    return symdyn::analyze_chainrec(shift->input, ca->ca, symdyn::PeriodicConfig(cells), symdyn::Window(lo, hi),
                                    max_period);
  });
}

sd_status sd_mixing(const sd_shift* shift, sd_report** out) {
  if (!shift) return bad_arg("shift is required");
  return make_report(out, [&] { return symdyn::analyze_mixing(shift->input); });
}

sd_status sd_example(const char* name, sd_report** out) {
  if (!name) return bad_arg("example name is required");
  return make_report(out, [&] { return symdyn::run_example(name); });
}

sd_status sd_example_names(char** out) {
  if (!out) return bad_arg("output pointer is NULL");
  return guarded([&] {
    std::string s;
    for (const auto& n : symdyn::example_names()) s += n + "\n";
    *out = dup(s);
  });
}

sd_status sd_report_json(const sd_report* report, char** out) {
  if (!report || !out) return bad_arg("report and output pointer are required");
  return guarded([&] { *out = dup(symdyn::dump_json(report->report)); });
}

sd_status sd_report_text(const sd_report* report, char** out) {
  if (!report || !out) return bad_arg("report and output pointer are required");
  return guarded([&] { *out = dup(symdyn::render_text(report->report)); });
}

sd_status sd_report_parse_json(const char* json, sd_report** out) {
  if (!json) return bad_arg("json text is required");
  return make_report(out, [&] { return symdyn::parse_report(json); });
}

int sd_report_outcome(const sd_report* report) {
  return report ? symdyn::exit_code(report->report.outcome) : 1;
}

double sd_report_seconds(const sd_report* report) { return report ? report->report.seconds : 0.0; }

void sd_report_free(sd_report* report) { delete report; }

void sd_string_free(char* s) { std::free(s); }

const char* sd_last_error(void) { return last_error.c_str(); }

}  // extern "C"
