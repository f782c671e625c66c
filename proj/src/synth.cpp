#include "aigsynth/synth.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "aigsynth/circuit.hpp"
#include "aigsynth/extract_interp.hpp"
#include "aigsynth/extract_qbf.hpp"
#include "aigsynth/game.hpp"
#include "aigsynth/verify.hpp"

namespace aigsynth {

const char* method_name(Method m) {
  switch (m) {
    case Method::kQbfLearn: return "ql";
    case Method::kInterp: return "sl";
    case Method::kInterpNoDeps: return "sln";
    case Method::kExternalInterp: return "si";
  }
  return "?";
}

bool parse_method(const std::string& s, Method& out) {
  if (s == "ql") out = Method::kQbfLearn;
  else if (s == "sl") out = Method::kInterp;
  else if (s == "sln") out = Method::kInterpNoDeps;
  else if (s == "si") out = Method::kExternalInterp;
  else return false;
  return true;
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

SynthOutcome run_synthesis(const Aig& spec_aig, const SynthOptions& opt) {
  if (opt.method == Method::kExternalInterp)
    throw error("method 'si' requires an external interpolator, which is not "
                "configured in this build");

  Deadline deadline = opt.timeout_s > 0 ? Deadline::after_seconds(opt.timeout_s)
                                        : Deadline{};
  auto t_start = std::chrono::steady_clock::now();

  SynthOutcome outcome;
  VarPool pool;
  SafetySpec spec = spec_from_aig(spec_aig, pool);

  auto t_region = std::chrono::steady_clock::now();
  WinningRegion w = compute_winning_region(spec, pool, deadline);
  outcome.time_winning_region_s = seconds_since(t_region);

  if (!check_realizability(spec, w)) {
    outcome.exit_code = kExitUnrealizable;
    outcome.realizable = false;
    outcome.time_total_s = seconds_since(t_start);
    return outcome;
  }
  outcome.realizable = true;

  auto t_extract = std::chrono::steady_clock::now();
  std::vector<OutputFunction> functions;
  DependencyGraph deps;
  if (opt.method == Method::kQbfLearn) {
    QbfLearnResult r =
        extract_by_qbf_learning(spec, w, pool, opt.negw, deadline);
    functions = std::move(r.functions);
    outcome.iterations_per_output = std::move(r.iterations_per_output);
    // Functions over states and inputs only: no inter-output edges.
  } else {
    InterpOptions iopt;
    iopt.dependency_opt = opt.method == Method::kInterp;
    iopt.negw = opt.negw;
    iopt.deadline = deadline;
    InterpResult r = extract_by_interpolation(spec, w, pool, iopt);
    functions = std::move(r.functions);
    deps = std::move(r.deps);
    outcome.iterations_per_output = std::move(r.iterations_per_output);
  }
  outcome.time_extraction_s = seconds_since(t_extract);

  outcome.implementation = build_implementation(spec, functions, deps);
  outcome.and_gates = outcome.implementation.gates.size();

  if (opt.verify) {
    outcome.verify_ran = true;
    Verdict v = verify_implementation(spec, outcome.implementation, w);
    outcome.verified = v.pass;
    if (!v.pass)
      throw internal_error("verification failed at check " +
                           std::to_string(v.failed_check) +
                           " with counterexample " +
                           to_string(v.counterexample));
  }

  outcome.time_total_s = seconds_since(t_start);
  outcome.exit_code = kExitRealizable;
  return outcome;
}

void append_stats_csv(const std::string& path, const std::string& benchmark,
                      Method method, const SynthOutcome& outcome) {
  bool fresh = !std::filesystem::exists(path);
  std::ofstream out(path, std::ios::app);
  if (!out) throw error("cannot open stats file: " + path);
  if (fresh)
    out << "benchmark,method,time_winning_region_s,time_extraction_s,"
           "time_total_s,aig_and_gates,per_output_iterations,verified\n";
  std::ostringstream iters;
  for (std::size_t i = 0; i < outcome.iterations_per_output.size(); ++i) {
    if (i) iters << ';';
    iters << outcome.iterations_per_output[i];
  }
  out << benchmark << ',' << method_name(method) << ','
      << outcome.time_winning_region_s << ',' << outcome.time_extraction_s
      << ',' << outcome.time_total_s << ',' << outcome.and_gates << ','
      << iters.str() << ',';
  if (outcome.verify_ran) out << (outcome.verified ? 1 : 0);
  out << '\n';
}

}  // namespace aigsynth
