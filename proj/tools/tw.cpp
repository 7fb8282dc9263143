// tw — a workbench for Gödel's System T: parse, typecheck, and evaluate
// programs; interpret them in the set-theoretical model; and reproduce the
// counter-example showing that model is not fully abstract.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "tw/denot.hpp"
#include "tw/eval.hpp"
#include "tw/fuzz.hpp"
#include "tw/json_io.hpp"
#include "tw/ninf.hpp"
#include "tw/parse.hpp"
#include "tw/prelude.hpp"
#include "tw/pretty.hpp"
#include "tw/typecheck.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

// bad input from the user, as opposed to a failed property
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Palette {
  std::string green;
  std::string red;
  std::string bold;
  std::string reset;
};

Palette make_palette() {
  const char* env = std::getenv("TW_COLOR");
  bool on;
  if (env && std::string(env) == "1") {
    on = true;
  } else if (env && std::string(env) == "0") {
    on = false;
  } else {
    on = isatty(STDOUT_FILENO);
  }
  if (!on) return {};
  return {"\x1b[32m", "\x1b[31m", "\x1b[1m", "\x1b[0m"};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

tw::Term require_main(const tw::SourceFile& file, const std::string& path) {
  if (!file.main) {
    throw UsageError(path + ": file has no main term (only definitions)");
  }
  return *file.main;
}

tw::Type predicate_type() {
  using tw::Type;
  return Type::arrow(Type::arrow(Type::nat(), Type::boolean()), Type::boolean());
}

std::string bits_to_string(const std::vector<int>& bits) {
  std::string s;
  s.reserve(bits.size());
  for (int b : bits) s.push_back(b ? '1' : '0');
  return s;
}

// The N-infinity point a monotone prefix is consistent with.
std::string classify_prefix(const std::vector<int>& bits) {
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) return std::to_string(i) + "-bar";
  }
  return "infinity (no 1 in the first " + std::to_string(bits.size()) + " bits)";
}

int cmd_check(const std::string& path, bool json, const Palette& pal) {
  tw::SourceFile file = tw::parse(read_file(path));
  nlohmann::json defs = nlohmann::json::array();
  for (const auto& [name, term] : file.definitions) {
    tw::Type ty = tw::typecheck(term);
    defs.push_back({{"name", name}, {"type", ty.to_string()}});
    if (!json) std::cout << name << " : " << ty.to_string() << "\n";
  }
  nlohmann::json out = {{"file", path}, {"definitions", defs}, {"main_type", nullptr}};
  if (file.main) {
    tw::Type ty = tw::typecheck(*file.main);
    out["main_type"] = ty.to_string();
    if (!json) std::cout << "main : " << ty.to_string() << "\n";
  }
  if (json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << pal.green << "ok" << pal.reset << ": " << path << "\n";
  }
  return kExitOk;
}

int cmd_eval(const std::string& path, bool json) {
  tw::SourceFile file = tw::parse(read_file(path));
  tw::Term main = require_main(file, path);
  tw::Type ty = tw::typecheck(main);
  tw::MachineValue value = tw::eval_closed(main);
  nlohmann::json out = {{"type", ty.to_string()}, {"value", nullptr}};
  std::string shown;
  if (value.is_nat()) {
    out["value"] = value.nat_value();
    shown = std::to_string(value.nat_value());
  } else if (value.is_bool()) {
    out["value"] = value.bool_value();
    shown = value.bool_value() ? "true" : "false";
  } else {
    shown = "<function of type " + ty.to_string() + ">";
  }
  std::cout << (json ? out.dump(2) : shown) << "\n";
  return kExitOk;
}

int cmd_eps(const std::string& path, uint64_t prefix_len, bool json) {
  tw::SourceFile file = tw::parse(read_file(path));
  tw::Term p = require_main(file, path);
  tw::Type ty = tw::typecheck(p);
  if (ty != predicate_type()) {
    throw tw::TypeError({}, "eps needs a main term of type " + predicate_type().to_string() +
                                ", got " + ty.to_string());
  }
  tw::BitStream stream =
      tw::sem_to_stream(tw::apply_sem(tw::denote(tw::tm_eps()), tw::denote(p)));
  std::vector<int> bits = stream.prefix(prefix_len);
  bool monotone = tw::member_prefix_check(stream, prefix_len) == 1;
  if (json) {
    nlohmann::json out = {{"prefix", bits_to_string(bits)},
                          {"length", prefix_len},
                          {"monotone", monotone},
                          {"classification", nullptr}};
    if (monotone) out["classification"] = classify_prefix(bits);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "prefix:         " << bits_to_string(bits) << "\n";
    if (monotone) {
      std::cout << "classification: " << classify_prefix(bits) << "\n";
    } else {
      std::cout << "classification: not monotone (outside N-infinity)\n";
    }
  }
  return kExitOk;
}

int cmd_modulus(const std::string& path, uint64_t max_n, bool json) {
  tw::SourceFile file = tw::parse(read_file(path));
  tw::Term f = require_main(file, path);
  tw::Type ty = tw::typecheck(f);
  if (ty != predicate_type()) {
    throw tw::TypeError({}, "modulus needs a main term of type " +
                                predicate_type().to_string() + ", got " + ty.to_string());
  }
  std::optional<uint64_t> n = tw::agreement_index(tw::denote(f), max_n);
  if (json) {
    nlohmann::json out = {{"bound", max_n}, {"agreement_index", nullptr}};
    if (n) out["agreement_index"] = *n;
    std::cout << out.dump(2) << "\n";
  } else if (n) {
    std::cout << "agreement index: " << *n << "\n";
  } else {
    std::cout << "no agreement index up to " << max_n
              << " (a definable functional would have one)\n";
  }
  return kExitOk;
}

int cmd_kreisel(uint64_t bound, bool control, bool json, const Palette& pal) {
  tw::CounterexampleReport report =
      control ? tw::run_counterexample_control(bound) : tw::run_counterexample(bound);
  if (json) {
    std::cout << nlohmann::json(report).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "test value:            " << report.test_value << "\n"
            << "antecedent holds:      " << report.antecedent_holds << "\n"
            << "consequent holds:      " << report.consequent_holds << "\n"
            << "eps prefix zero up to: " << report.eps_prefix_zero_up_to << "\n"
            << "f at infinity:         " << report.f_kreisel_at_infinity << "\n"
            << "f at 0-bar:            " << report.f_kreisel_at_zerobar << "\n";
  if (control) {
    std::cout << pal.green << "control run" << pal.reset
              << ": with a constant functional, test comes out 1.\n";
  } else {
    std::cout << pal.bold << "test(f) = 0" << pal.reset
              << " although test denotes 1 on every definable argument: the set model"
                 " separates terms no context can tell apart.\n";
  }
  return kExitOk;
}

int cmd_fuzz(const std::string& type_text, uint64_t count, uint64_t seed,
             const std::string& mode, uint64_t max_size, bool json, const Palette& pal) {
  tw::GenConfig cfg{tw::parse_type_text(type_text), max_size, seed, count};
  if (cfg.target_type != predicate_type()) {
    throw UsageError("fuzz mode '" + mode + "' needs --type \"" +
                     predicate_type().to_string() + "\"");
  }
  tw::FuzzReport report;
  if (mode == "constancy") {
    report = tw::check_test_constancy(cfg);
  } else {
    report = tw::check_eps_oracle(cfg, 64);
  }
  if (json) {
    std::cout << nlohmann::json(report).dump(2) << "\n";
  } else {
    std::cout << "mode:     " << mode << "\n"
              << "samples:  " << report.samples << "\n"
              << "failures: " << report.failures.size() << "\n"
              << "seed:     " << report.seed << "\n"
              << "elapsed:  " << report.elapsed_ms << " ms\n";
    for (uint64_t index : report.failures) {
      std::cout << pal.red << "failed sample " << index << pal.reset << "\n";
    }
    std::cout << (report.ok() ? pal.green + "ok" : pal.red + "FAILED") << pal.reset << "\n";
  }
  return report.ok() ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  Palette pal = make_palette();

  CLI::App app{"Workbench for Gödel's System T and its set-theoretical model"};
  app.require_subcommand(1);
  bool json = false;

  std::string check_file;
  CLI::App* check = app.add_subcommand("check", "Parse and typecheck a .t file");
  check->add_option("file", check_file, "Input file")->required();
  check->add_flag("--json", json, "Machine-readable output");

  std::string eval_file;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate the main term of a .t file");
  eval->add_option("file", eval_file, "Input file")->required();
  eval->add_flag("--json", json, "Machine-readable output");

  std::string eps_file;
  uint64_t eps_prefix = 64;
  CLI::App* eps = app.add_subcommand(
      "eps", "Apply the selection functional to a predicate and print the stream prefix");
  eps->add_option("file", eps_file, "Predicate of type (nat -> bool) -> bool")->required();
  eps->add_option("--prefix", eps_prefix, "Prefix length")->default_val(64);
  eps->add_flag("--json", json, "Machine-readable output");

  std::string modulus_file;
  uint64_t modulus_max = 1000;
  CLI::App* modulus = app.add_subcommand(
      "modulus", "Least n with f(n-bar) = f(infinity), the witness continuity provides");
  modulus->add_option("file", modulus_file, "Functional of type (nat -> bool) -> bool")
      ->required();
  modulus->add_option("--max", modulus_max, "Scan bound")->default_val(1000);
  modulus->add_flag("--json", json, "Machine-readable output");

  CLI::App* demo = app.add_subcommand("demo", "Built-in demonstrations");
  demo->require_subcommand(1);
  uint64_t kreisel_bound = 100000;
  bool kreisel_control = false;
  CLI::App* kreisel =
      demo->add_subcommand("kreisel", "Run the counter-example to full abstraction");
  kreisel->add_option("--bound", kreisel_bound, "Zero-prefix validation bound")
      ->default_val(100000);
  kreisel->add_flag("--control", kreisel_control,
                    "Run the same pipeline with a constant functional instead");
  kreisel->add_flag("--json", json, "Machine-readable output");

  std::string fuzz_type = "(nat -> bool) -> bool";
  uint64_t fuzz_count = 100;
  uint64_t fuzz_seed = 1;
  uint64_t fuzz_size = 40;
  std::string fuzz_mode = "eps";
  CLI::App* fuzz = app.add_subcommand("fuzz", "Property harnesses over generated terms");
  fuzz->add_option("--type", fuzz_type, "Target type of generated terms")
      ->default_str("(nat -> bool) -> bool");
  fuzz->add_option("--count", fuzz_count, "Generated samples")->default_val(100);
  fuzz->add_option("--seed", fuzz_seed, "Generator seed")->default_val(1);
  fuzz->add_option("--size", fuzz_size, "AST node budget per term")->default_val(40);
  fuzz->add_option("--mode", fuzz_mode, "Property to check")
      ->check(CLI::IsMember({"constancy", "eps"}))
      ->default_val("eps");
  fuzz->add_flag("--json", json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return cmd_check(check_file, json, pal);
    if (*eval) return cmd_eval(eval_file, json);
    if (*eps) return cmd_eps(eps_file, eps_prefix, json);
    if (*modulus) return cmd_modulus(modulus_file, modulus_max, json);
    if (*kreisel) return cmd_kreisel(kreisel_bound, kreisel_control, json, pal);
    if (*fuzz) return cmd_fuzz(fuzz_type, fuzz_count, fuzz_seed, fuzz_mode, fuzz_size, json, pal);
  } catch (const UsageError& e) {
    std::cerr << pal.red << "error" << pal.reset << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const tw::ParseError& e) {
    std::cerr << pal.red << "error" << pal.reset << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const tw::TypeError& e) {
    std::cerr << pal.red << "error" << pal.reset << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    // property violations, certificate violations, generator failures
    std::cerr << pal.red << "error" << pal.reset << ": " << e.what() << "\n";
    return kExitPropertyFailure;
  }
  return kExitUsage;
}
