#include <doctest.h>

#include "aigsynth/extract_interp.hpp"
#include "aigsynth/extract_qbf.hpp"
#include "aigsynth/game.hpp"
#include "aigsynth/verify.hpp"
#include "oracles.hpp"
#include "toys.hpp"

using namespace aigsynth;

namespace {

// End-to-end on a toy spec: region, extraction, assembly, verification.
void synthesize_and_verify(const Aig& aig, bool qbf_method, bool dependency_opt,
                           NegWMode negw = NegWMode::kAux) {
  VarPool pool;
  SafetySpec spec = spec_from_aig(aig, pool);
  WinningRegion w = compute_winning_region(spec, pool);
  REQUIRE(check_realizability(spec, w));

  std::vector<OutputFunction> functions;
  DependencyGraph deps;
  if (qbf_method) {
    auto r = extract_by_qbf_learning(spec, w, pool, negw);
    functions = r.functions;
  } else {
    InterpOptions opt;
    opt.dependency_opt = dependency_opt;
    opt.negw = negw;
    auto r = extract_by_interpolation(spec, w, pool, opt);
    functions = r.functions;
    deps = r.deps;
  }
  Aig impl = build_implementation(spec, functions, deps);
  Verdict v = verify_implementation(spec, impl, w);
  CHECK(v.pass);
  CHECK(simulate_error_runs(impl, 500, 60, 1) == 0);
}

}  // namespace

TEST_SUITE("extract_qbf") {

TEST_CASE("single-output relational examples") {
  // ¬S = o xor i: the function must copy the input.
  VarPool pool;
  pool.reserve_through(2);
  Cnf not_s;
  not_s.add_clause({1, 2});    // (i ∨ o)
  not_s.add_clause({-1, -2});  // (¬i ∨ ¬o)
  int iters = 0;
  Cnf f = learn_output_function_qbf(not_s, std::vector<int>{1},
                                    std::vector<int>{}, 2, pool, &iters);
  REQUIRE(f.clause_count() == 1);
  CHECK(f.clauses()[0] == Clause({1}));
  CHECK(iters == 1);

  // ¬S = ⊥: the output is unconstrained, the loop never fires.
  VarPool pool2;
  pool2.reserve_through(2);
  Cnf bot;
  bot.add_clause(Clause{});
  f = learn_output_function_qbf(bot, std::vector<int>{1}, std::vector<int>{}, 2,
                                pool2, &iters);
  CHECK(f.is_true());
  CHECK(iters == 0);

  // ¬S = (o): the output must always be false.
  VarPool pool3;
  pool3.reserve_through(2);
  Cnf must_not;
  must_not.add_clause({2});
  f = learn_output_function_qbf(must_not, std::vector<int>{1},
                                std::vector<int>{}, 2, pool3, &iters);
  CHECK(f.has_empty_clause());
}

TEST_CASE("learned clauses strictly shrink the context space") {
  // ¬S says the move is disallowed exactly when o agrees with i1 ∧ i2, so
  // the learned function must be its complement.
  VarPool pool;
  pool.reserve_through(3);
  Cnf not_s;  // o <-> (i1 ∧ i2)
  not_s.add_clause({-3, 1});
  not_s.add_clause({-3, 2});
  not_s.add_clause({3, -1, -2});
  int iters = 0;
  Cnf f = learn_output_function_qbf(not_s, std::vector<int>{1, 2},
                                    std::vector<int>{}, 3, pool, &iters);
  CHECK(iters == 1);
  Cnf expected;
  expected.add_clause({-1, -2});
  CHECK(oracles::cnf_equivalent(f, expected, {1, 2}));
}

TEST_CASE("toy specs synthesize and verify via QBF learning") {
  synthesize_and_verify(toys::xor_spec(), true, false);
  synthesize_and_verify(toys::absorbing_error_spec(), true, false);
  synthesize_and_verify(toys::agree_spec(), true, false);
  synthesize_and_verify(toys::combinational_xor_spec(), true, false);
  synthesize_and_verify(toys::xor_spec(), true, false, NegWMode::kLearn);
}

}  // TEST_SUITE

TEST_SUITE("extract_interp") {

TEST_CASE("interpolant learning examples") {
  // must_false ⊥: zero iterations, result ⊤.
  {
    Cnf m1;
    m1.add_clause({1});
    Cnf m0;
    m0.add_clause(Clause{});
    int iters = 0;
    Cnf f = learn_interpolant(m1, m0, std::vector<int>{1}, &iters);
    CHECK(f.is_true());
    CHECK(iters == 0);
  }
  // Single shared variable: one iteration learns (d).
  {
    Cnf m1;
    m1.add_clause({1});
    Cnf m0;
    m0.add_clause({-1});
    int iters = 0;
    Cnf f = learn_interpolant(m1, m0, std::vector<int>{1}, &iters);
    REQUIRE(f.clause_count() == 1);
    CHECK(f.clauses()[0] == Clause({1}));
    CHECK(iters == 1);
  }
  // must_true ⊥: the empty core collapses the function to false.
  {
    Cnf m1;
    m1.add_clause(Clause{});
    Cnf m0;
    m0.add_clause({-1});
    int iters = 0;
    Cnf f = learn_interpolant(m1, m0, std::vector<int>{1}, &iters);
    CHECK(f.has_empty_clause());
  }
  // Overlapping pair is a strategy conflict.
  {
    Cnf m1;
    m1.add_clause({1});
    Cnf m0;
    m0.add_clause({1});
    CHECK_THROWS_AS(
        learn_interpolant(m1, m0, std::vector<int>{1}, nullptr),
        strategy_conflict_error);
  }
}

TEST_CASE("interpolant contract on random disjoint pairs") {
  std::mt19937 rng(31337);
  int done = 0;
  while (done < 60) {
    int nvars = 2 + static_cast<int>(rng() % 6);
    Cnf m1 = oracles::random_cnf(rng, nvars, 2 + rng() % 6);
    Cnf m0 = oracles::random_cnf(rng, nvars, 2 + rng() % 6);
    std::vector<int> vars;
    for (int v = 1; v <= nvars; ++v) vars.push_back(v);
    bool disjoint = true;
    for (std::uint64_t m = 0; m < (1ull << nvars); ++m)
      if (oracles::cnf_holds(m1, vars, m) && oracles::cnf_holds(m0, vars, m))
        disjoint = false;
    if (!disjoint) continue;
    ++done;
    Cnf f = learn_interpolant(m1, m0, vars, nullptr);
    for (std::uint64_t m = 0; m < (1ull << nvars); ++m) {
      if (oracles::cnf_holds(m1, vars, m)) CHECK(oracles::cnf_holds(f, vars, m));
      if (oracles::cnf_holds(f, vars, m)) CHECK_FALSE(oracles::cnf_holds(m0, vars, m));
    }
  }
}

TEST_CASE("must-pair on the keep-x game") {
  // T: x' = o, region x. The output must be true whenever the play is in
  // the region, and is never forced false.
  VarPool pool;
  SafetySpec spec = spec_from_aig(toys::keep_x_spec(), pool);
  Cnf region;
  region.add_clause({spec.state_vars[0]});
  WinningRegion w = WinningRegion::from_current(region, spec);

  InterpOptions opt;
  InterpContext ctx(spec, w, pool, opt);
  int v = spec.ctrl_vars[0];
  MustPair pair = ctx.build_must_pair(v);

  SatSession must_false;
  must_false.add_cnf(pair.must_false);
  CHECK_FALSE(must_false.solve());  // never forced to 0

  // must_true projected to the dependable variables is exactly "x".
  auto models = oracles::projected_models(pair.must_true, {spec.state_vars[0]});
  CHECK(models == std::set<std::uint64_t>{1});

  int iters = 0;
  Cnf f = learn_interpolant(pair.must_true, pair.must_false, pair.dependable,
                            &iters, Deadline{});
  CHECK(f.is_true());
}

TEST_CASE("agreeing outputs coordinate through resubstitution") {
  VarPool pool;
  SafetySpec spec = spec_from_aig(toys::agree_spec(), pool);
  WinningRegion w = compute_winning_region(spec, pool);
  InterpOptions opt;
  auto r = extract_by_interpolation(spec, w, pool, opt);
  REQUIRE(r.functions.size() == 2);
  CHECK(r.deps.acyclic(spec.ctrl_vars));

  Aig impl = build_implementation(spec, r.functions, r.deps);
  CHECK(verify_implementation(spec, impl, w).pass);
}

TEST_CASE("toy specs synthesize and verify via interpolation") {
  for (bool dep_opt : {true, false}) {
    synthesize_and_verify(toys::xor_spec(), false, dep_opt);
    synthesize_and_verify(toys::absorbing_error_spec(), false, dep_opt);
    synthesize_and_verify(toys::agree_spec(), false, dep_opt);
    synthesize_and_verify(toys::combinational_xor_spec(), false, dep_opt);
  }
  synthesize_and_verify(toys::xor_spec(), false, true, NegWMode::kLearn);
}

TEST_CASE("post-minimization removes redundant structure") {
  VarPool pool;
  pool.reserve_through(10);
  SafetySpec spec = spec_from_aig(toys::xor_spec(), pool);
  WinningRegion w = compute_winning_region(spec, pool);

  // Inflate the correct function with a redundant clause, then minimize.
  int v = spec.ctrl_vars[0];
  int i = spec.input_vars[0];
  Cnf func;
  func.add_clause({i});
  func.add_clause({i, spec.state_vars[0]});  // absorbed by (i)
  std::vector<OutputFunction> fs{{v, func}};
  DependencyGraph deps;
  post_minimize(spec, w, fs, deps, pool, NegWMode::kAux);
  CHECK(fs[0].func.clause_count() <= 1);

  Aig impl = build_implementation(spec, fs, deps);
  CHECK(verify_implementation(spec, impl, w).pass);
}

}  // TEST_SUITE
