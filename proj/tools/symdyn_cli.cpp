// Command-line front end. Links only the C API.
//
// Exit codes: 0 decisive verdict, 2 Unknown / Truncated / Exhausted, 1 usage
// or input error.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "symdyn/symdyn.h"

namespace {

struct Inputs {
  std::string rule;
  std::optional<unsigned> elementary;
  std::string shift = "full";
};

struct Output {
  bool json = false;
};

int fail(const std::string& what) {
  std::cerr << "error: " << what << "\n";
  return 1;
}

int fail_status(sd_status s) {
  std::cerr << "error: " << sd_last_error() << "\n";
  return s == SD_OK ? 0 : 1;
}

using CaPtr = std::unique_ptr<sd_ca, decltype(&sd_ca_free)>;
using ShiftPtr = std::unique_ptr<sd_shift, decltype(&sd_shift_free)>;
using ReportPtr = std::unique_ptr<sd_report, decltype(&sd_report_free)>;

std::string take(char* s) {
  std::string out = s ? s : "";
  sd_string_free(s);
  return out;
}

// Prints the report and returns the exit code for its outcome.
int emit(sd_report* raw, const Output& out) {
  ReportPtr report(raw, sd_report_free);
  char* text = nullptr;
  if (out.json) {
    if (sd_status s = sd_report_json(report.get(), &text); s != SD_OK) return fail_status(s);
    const std::string doc = take(text);
    // The document must parse back to the same report.
    sd_report* back = nullptr;
    if (sd_status s = sd_report_parse_json(doc.c_str(), &back); s != SD_OK) return fail_status(s);
    ReportPtr back_ptr(back, sd_report_free);
    char* again = nullptr;
    sd_report_json(back, &again);
    if (take(again) != doc) return fail("structured report does not round-trip");
    std::cout << doc;
  } else {
    if (sd_status s = sd_report_text(report.get(), &text); s != SD_OK) return fail_status(s);
    std::cout << take(text);
    std::printf("time: %.3f s\n", sd_report_seconds(report.get()));
  }
  return sd_report_outcome(report.get());
}

void add_rule_options(CLI::App* cmd, Inputs& in) {
  auto* rule = cmd->add_option("--rule", in.rule, "rule file");
  auto* ele = cmd->add_option("--elementary", in.elementary, "Wolfram number of an elementary rule")
                  ->check(CLI::Range(0, 255));
  rule->excludes(ele);
}

void add_shift_option(CLI::App* cmd, Inputs& in) {
  cmd->add_option("--shift", in.shift, "full, golden, or an SFT/graph file")->capture_default_str();
}

std::optional<int> load(const Inputs& in, CaPtr& ca, ShiftPtr& shift, bool need_rule = true) {
  sd_ca* c = nullptr;
  if (in.elementary) {
    if (sd_status s = sd_ca_elementary(*in.elementary, &c); s != SD_OK) return fail_status(s);
  } else if (!in.rule.empty()) {
    if (sd_status s = sd_ca_load(in.rule.c_str(), &c); s != SD_OK) return fail_status(s);
  } else if (need_rule) {
    return fail("a rule is required (--rule FILE or --elementary N)");
  }
  ca.reset(c);
  sd_shift* sh = nullptr;
  sd_status s;
  if (in.shift == "full" || in.shift == "golden") {
    if (!ca) {
      // Presets take their alphabet from the rule; default to {0, 1}.
      sd_ca* bin = nullptr;
      sd_ca_elementary(204, &bin);
      CaPtr tmp(bin, sd_ca_free);
      s = sd_shift_preset(in.shift.c_str(), tmp.get(), &sh);
    } else {
      s = sd_shift_preset(in.shift.c_str(), ca.get(), &sh);
    }
  } else {
    s = sd_shift_load(in.shift.c_str(), &sh);
  }
  if (s != SD_OK) return fail_status(s);
  shift.reset(sh);
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Limit sets, nilpotency and space-time systems of cellular automata"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.json, "structured output");

  sd_budgets budgets;
  sd_budgets_default(&budgets);

  Inputs nil_in;
  auto* nil = app.add_subcommand("nilpotency", "three-valued nilpotency verdict with a replayed certificate");
  add_rule_options(nil, nil_in);
  add_shift_option(nil, nil_in);
  nil->add_option("--max-power", budgets.max_power, "constant-power prover bound")->check(CLI::PositiveNumber);
  nil->add_option("--max-period", budgets.max_period, "witness prover period bound")->check(CLI::PositiveNumber);
  nil->add_option("--chain-steps", budgets.chain_steps, "chain prover image steps")->check(CLI::PositiveNumber);
  nil->add_option("--pattern-cap", budgets.pattern_cap, "word enumeration cap")->check(CLI::PositiveNumber);
  nil->add_option("--jobs", budgets.jobs, "provers run in parallel when > 1")->check(CLI::PositiveNumber);

  Inputs ls_in;
  std::uint32_t ls_budget = 8;
  auto* ls = app.add_subcommand("limitset", "image chain until stabilization or the budget");
  add_rule_options(ls, ls_in);
  add_shift_option(ls, ls_in);
  ls->add_option("--budget", ls_budget, "number of image steps N")->check(CLI::PositiveNumber)->capture_default_str();

  Inputs img_in;
  auto* img = app.add_subcommand("image", "canonical presentation of tau(Sigma)");
  add_rule_options(img, img_in);
  add_shift_option(img, img_in);

  Inputs st_in;
  std::int32_t i_max = 2, j_max = 2;
  std::string terminal;
  auto* st = app.add_subcommand("spacetime", "space-time commutation, outer approximations and starred grid");
  add_rule_options(st, st_in);
  add_shift_option(st, st_in);
  st->add_option("--i-max", i_max, "largest i")->check(CLI::NonNegativeNumber)->capture_default_str();
  st->add_option("--j-max", j_max, "largest j")->check(CLI::NonNegativeNumber)->capture_default_str();
  st->add_option("--terminal", terminal, "terminal symbol for the starred grid");

  Inputs per_in;
  std::uint32_t period = 1;
  auto* per = app.add_subcommand("periodic", "eventual cycles on spatially periodic points");
  add_rule_options(per, per_in);
  add_shift_option(per, per_in);
  per->add_option("--period", period, "spatial period p")->check(CLI::PositiveNumber)->capture_default_str();

  Inputs cr_in;
  std::string point;
  std::int64_t lo = 0, hi = 0;
  std::uint32_t cr_period = 6;
  auto* cr = app.add_subcommand("chainrec", "epsilon-chain through a periodic point");
  add_rule_options(cr, cr_in);
  add_shift_option(cr, cr_in);
  cr->add_option("--point", point, "one period of the point, symbols separated by spaces")->required();
  cr->add_option("--lo", lo, "entourage window start")->capture_default_str();
  cr->add_option("--hi", hi, "entourage window end")->capture_default_str();
  cr->add_option("--max-period", cr_period, "largest spatial period searched")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  Inputs mix_in;
  auto* mix = app.add_subcommand("mixing", "topological mixing of a subshift");
  add_shift_option(mix, mix_in);
  add_rule_options(mix, mix_in);

  std::string example;
  bool list = false;
  auto* ex = app.add_subcommand("example", "reproduce a named construction");
  ex->add_option("name", example, "example name");
  ex->add_flag("--list", list, "print the example names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  CaPtr ca(nullptr, sd_ca_free);
  ShiftPtr shift(nullptr, sd_shift_free);
  sd_report* report = nullptr;
  sd_status s = SD_OK;

  if (*nil) {
    if (auto r = load(nil_in, ca, shift)) return *r;
    s = sd_nilpotency(shift.get(), ca.get(), &budgets, &report);
  } else if (*ls) {
    if (auto r = load(ls_in, ca, shift)) return *r;
    s = sd_limit_set(shift.get(), ca.get(), ls_budget, &report);
  } else if (*img) {
    if (auto r = load(img_in, ca, shift)) return *r;
    s = sd_image(shift.get(), ca.get(), &report);
  } else if (*st) {
    if (auto r = load(st_in, ca, shift)) return *r;
    s = sd_spacetime_check(shift.get(), ca.get(), i_max, j_max, terminal.empty() ? nullptr : terminal.c_str(), &report);
  } else if (*per) {
    if (auto r = load(per_in, ca, shift)) return *r;
    s = sd_periodic(shift.get(), ca.get(), period, &report);
  } else if (*cr) {
    if (auto r = load(cr_in, ca, shift)) return *r;
    if (lo > hi) return fail("--lo must not exceed --hi");
    s = sd_chainrec(shift.get(), ca.get(), point.c_str(), lo, hi, cr_period, &report);
  } else if (*mix) {
    if (auto r = load(mix_in, ca, shift, false)) return *r;
    s = sd_mixing(shift.get(), &report);
  } else if (*ex) {
    if (list || example.empty()) {
      char* names = nullptr;
      sd_example_names(&names);
      std::cout << take(names);
      return list ? 0 : 1;
    }
    s = sd_example(example.c_str(), &report);
  }
  if (s != SD_OK) return fail_status(s);
  return emit(report, out);
}
