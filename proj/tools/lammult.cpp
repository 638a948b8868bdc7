#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "lammult/harness.hpp"
#include "lammult/serialize.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_eval(const std::string& file, const std::string& machine, std::size_t fuel) {
  lammult::Term t = lammult::parse(read_input(file));
  if (machine == "pe") {
    auto r = lammult::pe_run(t, fuel);
    if (!r.outcome.halted()) {
      std::cerr << "fuel exhausted after " << r.outcome.steps << " steps\n";
      return 1;
    }
    std::cout << lammult::print(lammult::unload(r.outcome)) << "\n";
    return 0;
  }
  auto r = machine == "ea" ? lammult::ea_run(t, fuel) : lammult::stg_run(t, fuel);
  if (!r.outcome.halted()) {
    std::cerr << "fuel exhausted after " << r.outcome.steps << " steps\n";
    return 1;
  }
  std::cout << lammult::print(lammult::unload(r.outcome)) << "\n";
  return 0;
}

int run_trace(const std::string& file, const std::string& machine, std::size_t fuel) {
  lammult::Term t = lammult::parse(read_input(file));
  if (machine == "pe") {
    auto r = lammult::pe_run(t, fuel);
    std::cout << lammult::trace_json_lines(r.trace, r.outcome);
    return 0;
  }
  auto r = machine == "ea" ? lammult::ea_run(t, fuel) : lammult::stg_run(t, fuel);
  std::cout << lammult::trace_json_lines(r.trace, r.outcome);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lammult — a laboratory for the multi-argument lambda calculus"};
  app.require_subcommand(1);

  std::string file = "-";
  std::string machine = "pe";
  std::size_t fuel = 1000;
  std::uint64_t count = 1000;
  std::size_t max_size = 50;
  std::uint64_t seed = 1;
  bool open_terms = false;

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "term file, or - for stdin");
  };
  auto add_fuel = [&](CLI::App* cmd) {
    cmd->add_option("--fuel", fuel, "step budget")->check(CLI::PositiveNumber);
  };
  auto add_machine = [&](CLI::App* cmd) {
    cmd->add_option("--machine", machine, "which machine to run")
        ->check(CLI::IsMember({"pe", "ea", "stg"}));
  };

  CLI::App* eval = app.add_subcommand("eval", "run a machine, print the unloaded result");
  add_file(eval);
  add_machine(eval);
  add_fuel(eval);

  CLI::App* trace = app.add_subcommand("trace", "run a machine, print the trace as JSON lines");
  add_file(trace);
  add_machine(trace);
  add_fuel(trace);

  CLI::App* compare = app.add_subcommand("compare", "run all machines and the stage chain, print a diff report");
  add_file(compare);
  add_fuel(compare);

  CLI::App* stages = app.add_subcommand("stages", "run the six derivation stages, print the chain report");
  add_file(stages);
  add_fuel(stages);

  CLI::App* fz = app.add_subcommand("fuzz", "differential-test generated terms");
  fz->add_option("--count", count, "number of terms")->check(CLI::PositiveNumber);
  fz->add_option("--max-size", max_size, "size bound per term")->check(CLI::PositiveNumber);
  add_fuel(fz);
  fz->add_option("--seed", seed, "base seed");
  fz->add_flag("--open", open_terms, "allow free variables in generated terms");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) return run_eval(file, machine, fuel);
    if (trace->parsed()) return run_trace(file, machine, fuel);
    if (compare->parsed()) {
      lammult::Term t = lammult::parse(read_input(file));
      lammult::DiffReport rep = lammult::differential(t, fuel);
      std::cout << lammult::diff_report_json(rep) << "\n";
      switch (rep.verdict) {
        case lammult::Verdict::Agree: return 0;
        case lammult::Verdict::Mismatch: return 1;
        case lammult::Verdict::AllFuelExhausted: return 2;
      }
      return 1;
    }
    if (stages->parsed()) {
      lammult::Term t = lammult::parse(read_input(file));
      lammult::ChainReport rep = lammult::check_stage_chain(t, fuel);
      std::cout << lammult::chain_report_json(t, rep) << "\n";
      return rep.agree() ? 0 : 1;
    }
    if (fz->parsed()) {
      lammult::FuzzSummary sum =
          lammult::fuzz(count, max_size, fuel, seed, !open_terms);
      std::cout << lammult::fuzz_summary_json(sum) << "\n";
      return sum.mismatch == 0 ? 0 : 1;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
