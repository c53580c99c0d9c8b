#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lc/adequacy.hpp"
#include "lc/numerals.hpp"
#include "lc/report.hpp"
#include "lc/syntax.hpp"

namespace lc::cli {

namespace {

struct Options {
  std::string term;
  std::string file;
  std::string defs;
  std::string candidate;
  std::string system = "nour";
  std::string custom;
  Fuel fuel = 0;
  std::size_t bound = 50;
  std::size_t max_size = 12;
  std::size_t law_bound = 3;
  unsigned threads = 0;
  bool trace = false;
  bool json = false;
};

// Raised for anything that should end the run with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Definitions load_definitions(const Options& opt) {
  if (opt.defs.empty()) return {};
  return parse_program(SourceText{read_file(opt.defs), opt.defs}).definitions;
}

Term load_term(const Options& opt, const std::string& file, const char* what) {
  const Definitions defs = load_definitions(opt);
  if (!file.empty()) return parse_program(SourceText{read_file(file), file}, defs).value();
  if (!opt.term.empty()) return parse_program(SourceText{opt.term, "<inline>"}, defs).value();
  throw UsageError(std::string("no ") + what + " given");
}

NumeralSystem load_system(const Options& opt) {
  if (opt.custom.empty()) return builtin(opt.system);
  const Definitions defs = parse_program(SourceText{read_file(opt.custom), opt.custom}).definitions;
  auto get = [&](const char* name) {
    const Term* t = defs.find(name);
    if (t == nullptr) throw UsageError("'" + opt.custom + "' does not define '" + name + "'");
    return *t;
  };
  NumeralSystem sys{std::filesystem::path(opt.custom).stem().string(), get("zero"), get("succ"), get("zero_test"),
                    {}};
  validate(sys);
  return sys;
}

void emit(std::ostream& out, const Options& opt, const report::json& j, const std::string& text) {
  if (opt.json) {
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
}

int cmd_parse(const Options& opt, std::ostream& out) {
  const Term t = load_term(opt, opt.file, "term");
  report::json free = report::json::array();
  for (const auto& v : free_vars(t)) free.push_back(v);
  const report::json j{{"canonical", canonical(t)},
                       {"readable", print(t)},
                       {"size", t.size()},
                       {"closed", t.is_closed()},
                       {"free_vars", std::move(free)}};
  emit(out, opt, j, canonical(t) + "\n");
  return kOk;
}

int cmd_reduce(const Options& opt, std::ostream& out, Strategy strategy) {
  const Term t = load_term(opt, opt.file, "term");
  ReduceOptions ro;
  ro.trace = opt.trace;
  const ReductionOutcome outcome = strategy == Strategy::Head ? head_reduce(t, opt.fuel, ro) : normalize(t, opt.fuel, ro);
  emit(out, opt, report::to_json(outcome), report::trace_text(outcome) + report::to_text(outcome));
  return outcome.reached() ? kOk : kFailed;
}

int cmd_numerals_verify(const Options& opt, std::ostream& out) {
  if (opt.bound < 1) throw UsageError("--bound must be at least 1");
  const LawReport rep = verify_laws(load_system(opt), opt.bound, opt.fuel);
  emit(out, opt, report::to_json(rep), report::to_text(rep));
  return rep.all_pass() ? kOk : kFailed;
}

int cmd_pred_check(const Options& opt, std::ostream& out) {
  const Term candidate = load_term(opt, opt.candidate, "candidate");
  const PredecessorReport rep = check_predecessor(load_system(opt), candidate, opt.bound, opt.fuel);
  emit(out, opt, report::to_json(rep), report::to_text(rep));
  return rep.all_pass() ? kOk : kFailed;
}

int cmd_refute(const Options& opt, std::ostream& out) {
  const Term candidate = load_term(opt, opt.candidate, "candidate");
  const RefutationResult result = refute(load_system(opt), candidate, opt.fuel);
  emit(out, opt, report::to_json(result), report::to_text(result));
  const auto* cert = std::get_if<RefutationCertificate>(&result);
  return cert != nullptr && cert->verdict == RefutationVerdict::Refuted ? kOk : kFailed;
}

int cmd_search(const Options& opt, std::ostream& out) {
  const NumeralSystem sys = load_system(opt);
  const SearchResult result = search_predecessor(sys, opt.max_size, opt.law_bound, opt.fuel, opt.threads);
  emit(out, opt, report::to_json(result, sys.name, opt.max_size, opt.law_bound, opt.fuel),
       report::to_text(result, sys.name, opt.max_size, opt.law_bound, opt.fuel));
  return result.found ? kFailed : kOk;
}

}  // namespace

Fuel default_fuel() {
  if (const char* env = std::getenv(kFuelEnv)) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultFuel;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  opt.fuel = default_fuel();

  CLI::App app{"Lambda-calculus workbench: reduction, numeral systems and predecessor refutation", "lcw"};
  app.require_subcommand(1);

  auto add_term = [&](CLI::App* sub) {
    sub->add_option("term", opt.term, "Inline term text");
    sub->add_option("--file", opt.file, "Read the term from a file")->check(CLI::ExistingFile);
    sub->add_option("--defs", opt.defs, "Definitions file (name = term per line)")->check(CLI::ExistingFile);
  };
  auto add_candidate = [&](CLI::App* sub) {
    sub->add_option("term", opt.term, "Inline candidate term");
    sub->add_option("--candidate", opt.candidate, "Read the candidate from a file")->check(CLI::ExistingFile);
    sub->add_option("--defs", opt.defs, "Definitions file (name = term per line)")->check(CLI::ExistingFile);
  };
  auto add_system = [&](CLI::App* sub) {
    sub->add_option("--system", opt.system, "Builtin numeral system: church, nour, nour-paper");
    sub->add_option("--custom", opt.custom, "Definitions file providing zero, succ and zero_test")
        ->check(CLI::ExistingFile);
  };
  auto add_fuel = [&](CLI::App* sub) {
    sub->add_option("--fuel", opt.fuel, std::string("Contraction budget (default ") + std::to_string(opt.fuel) + ")");
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "Emit JSON"); };

  CLI::App* parse_cmd = app.add_subcommand("parse", "Parse a term and print its canonical form");
  add_term(parse_cmd);
  add_json(parse_cmd);

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "Head-reduce a term");
  CLI::App* normalize_cmd = app.add_subcommand("normalize", "Normal-order reduction to beta-normal form");
  for (CLI::App* sub : {reduce_cmd, normalize_cmd}) {
    add_term(sub);
    add_fuel(sub);
    add_json(sub);
    sub->add_flag("--trace", opt.trace, "Record every intermediate term");
  }

  CLI::App* verify_cmd = app.add_subcommand("numerals-verify", "Check the numeral-system laws up to a bound");
  add_system(verify_cmd);
  add_fuel(verify_cmd);
  add_json(verify_cmd);
  verify_cmd->add_option("--bound", opt.bound, "Highest numeral index checked (default 50)");

  CLI::App* pred_cmd = app.add_subcommand("pred-check", "Check a predecessor candidate up to a bound");
  add_candidate(pred_cmd);
  add_system(pred_cmd);
  add_fuel(pred_cmd);
  add_json(pred_cmd);
  pred_cmd->add_option("--bound", opt.bound, "Number of law instances checked (default 50)");

  CLI::App* refute_cmd = app.add_subcommand("refute", "Produce a refutation certificate for a predecessor candidate");
  add_candidate(refute_cmd);
  add_system(refute_cmd);
  add_fuel(refute_cmd);
  add_json(refute_cmd);

  CLI::App* search_cmd = app.add_subcommand("search", "Exhaustive predecessor search over small closed terms");
  add_system(search_cmd);
  add_fuel(search_cmd);
  add_json(search_cmd);
  search_cmd->add_option("--max-size", opt.max_size, "Largest candidate size (default 12)");
  search_cmd->add_option("--law-bound", opt.law_bound, "Law instances per candidate (default 3)");
  search_cmd->add_option("--threads", opt.threads, "Worker threads (default: hardware concurrency)");

  CLI::App* selftest_cmd = app.add_subcommand("selftest", "Run the invariant suite at reduced bounds");
  add_fuel(selftest_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "lcw: error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(opt, out);
    if (reduce_cmd->parsed()) return cmd_reduce(opt, out, Strategy::Head);
    if (normalize_cmd->parsed()) return cmd_reduce(opt, out, Strategy::NormalOrder);
    if (verify_cmd->parsed()) return cmd_numerals_verify(opt, out);
    if (pred_cmd->parsed()) return cmd_pred_check(opt, out);
    if (refute_cmd->parsed()) return cmd_refute(opt, out);
    if (search_cmd->parsed()) return cmd_search(opt, out);
    if (selftest_cmd->parsed()) return selftest(out, opt.fuel);
  } catch (const ParseError& e) {
    err << "lcw: error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // UnknownSystem, NotClosed, WrongSystem, invalid custom systems
    err << "lcw: error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "lcw: error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace lc::cli
