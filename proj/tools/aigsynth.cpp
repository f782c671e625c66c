// Command-line driver: synthesizes AIGER implementations from safety
// specifications and generates the add/mult benchmark families.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "aigsynth/bench.hpp"
#include "aigsynth/synth.hpp"

namespace {

int run_gen(const std::string& kind, unsigned bits, const std::string& out_path) {
  using namespace aigsynth;
  BenchKind k;
  if (kind == "add")
    k = BenchKind::kAdd;
  else if (kind == "mult")
    k = BenchKind::kMult;
  else {
    std::cerr << "error: unknown benchmark kind '" << kind << "'\n";
    return kExitError;
  }
  Aig aig = gen_benchmark(k, bits);
  std::string text = write_aiger(aig);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitError;
    }
    out << text;
  }
  return 0;
}

int run_synth(const std::string& input, const std::string& out_path,
              const std::string& method_str, const std::string& negw_str,
              bool verify, double timeout, const std::string& stats_path) {
  using namespace aigsynth;

  Method method;
  if (!parse_method(method_str, method)) {
    std::cerr << "error: unknown method '" << method_str << "'\n";
    return kExitError;
  }
  NegWMode negw;
  if (negw_str == "aux")
    negw = NegWMode::kAux;
  else if (negw_str == "learn")
    negw = NegWMode::kLearn;
  else {
    std::cerr << "error: unknown --negw mode '" << negw_str << "'\n";
    return kExitError;
  }

  std::ifstream in(input);
  if (!in) {
    std::cerr << "error: cannot read " << input << "\n";
    return kExitError;
  }
  Aig spec_aig = parse_aiger(in);

  SynthOptions opt;
  opt.method = method;
  opt.negw = negw;
  opt.verify = verify;
  opt.timeout_s = timeout;
  std::string name = input;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos)
    name = name.substr(slash + 1);
  if (auto dot = name.find_last_of('.'); dot != std::string::npos)
    name = name.substr(0, dot);
  opt.bench_name = name;

  SynthOutcome outcome = run_synthesis(spec_aig, opt);
  if (!stats_path.empty())
    append_stats_csv(stats_path, opt.bench_name, method, outcome);

  if (outcome.exit_code == kExitUnrealizable) {
    std::cout << "UNREALIZABLE\n";
    return kExitUnrealizable;
  }

  std::cout << "REALIZABLE\n";
  std::cout << "and_gates=" << outcome.and_gates
            << " time_region=" << outcome.time_winning_region_s
            << "s time_extract=" << outcome.time_extraction_s << "s";
  if (outcome.verify_ran)
    std::cout << " verified=" << (outcome.verified ? "yes" : "no");
  std::cout << "\n";

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitError;
    }
    out << write_aiger(outcome.implementation);
  }
  return kExitRealizable;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SAT/QBF-based synthesis of AIGER circuits from safety "
               "specifications"};
  app.require_subcommand(0, 1);

  std::string input, out_path, stats_path;
  std::string method = "sl";
  std::string negw = "aux";
  bool verify = false;
  double timeout = 0;

  app.add_option("input", input, "AIGER safety specification (.aag)");
  app.add_option("-o,--output", out_path, "write the implementation here");
  app.add_option("--method", method, "extraction method: ql, sl, sln, si")
      ->default_str("sl");
  app.add_option("--negw", negw, "negated-region encoding: aux, learn")
      ->default_str("aux");
  app.add_flag("--verify", verify, "model check the result");
  app.add_option("--timeout", timeout, "time budget in seconds (0 = none)");
  app.add_option("--stats", stats_path, "append a CSV stats row here");

  auto* gen = app.add_subcommand("gen", "generate an add/mult benchmark");
  std::string kind = "add";
  unsigned bits = 2;
  std::string gen_out;
  gen->add_option("--kind", kind, "benchmark family: add, mult")->required();
  gen->add_option("--bits", bits, "operand width")->required();
  gen->add_option("-o,--output", gen_out, "output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return run_gen(kind, bits, gen_out);
    if (input.empty()) {
      std::cerr << "error: no input file given\n";
      return aigsynth::kExitError;
    }
    return run_synth(input, out_path, method, negw, verify, timeout, stats_path);
  } catch (const aigsynth::timeout_error&) {
    std::cerr << "timeout\n";
    return aigsynth::kExitTimeout;
  } catch (const aigsynth::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return aigsynth::kExitError;
  }
}
