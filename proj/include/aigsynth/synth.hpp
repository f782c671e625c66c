#pragma once

#include <string>
#include <vector>

#include "aigsynth/aig.hpp"
#include "aigsynth/extract.hpp"

namespace aigsynth {

enum class Method { kQbfLearn, kInterp, kInterpNoDeps, kExternalInterp };

const char* method_name(Method m);
bool parse_method(const std::string& s, Method& out);

// SyntComp-style exit codes.
inline constexpr int kExitRealizable = 10;
inline constexpr int kExitUnrealizable = 20;
inline constexpr int kExitError = 1;
inline constexpr int kExitTimeout = 2;

struct SynthOptions {
  Method method = Method::kInterp;
  NegWMode negw = NegWMode::kAux;
  bool verify = false;
  double timeout_s = 0;  // 0 = unlimited
  std::string bench_name = "spec";
};

struct SynthOutcome {
  int exit_code = kExitError;
  bool realizable = false;
  bool verify_ran = false;
  bool verified = false;
  std::size_t and_gates = 0;
  double time_winning_region_s = 0;
  double time_extraction_s = 0;
  double time_total_s = 0;
  std::vector<int> iterations_per_output;
  Aig implementation;  // meaningful when realizable
};

// Full pipeline: game model, winning region, realizability gate, extraction
// by the selected method, circuit assembly, optional verification. Throws
// timeout_error when the budget runs out and error subtypes on bad input.
SynthOutcome run_synthesis(const Aig& spec_aig, const SynthOptions& opt);

// Appends one row (with a header for new files) to the stats CSV:
// benchmark,method,time_winning_region_s,time_extraction_s,time_total_s,
// aig_and_gates,per_output_iterations,verified
void append_stats_csv(const std::string& path, const std::string& benchmark,
                      Method method, const SynthOutcome& outcome);

}  // namespace aigsynth
