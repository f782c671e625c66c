#include <doctest.h>

#include "aigsynth/aig.hpp"
#include "aigsynth/bench.hpp"
#include "aigsynth/sat.hpp"
#include "oracles.hpp"
#include "toys.hpp"

using namespace aigsynth;

TEST_SUITE("aiger") {

TEST_CASE("parse: smallest AND circuit") {
  Aig aig = parse_aiger("aag 3 2 0 1 1\n2\n4\n6\n6 2 4\n");
  CHECK(aig.max_var == 3);
  CHECK(aig.inputs == std::vector<unsigned>{2, 4});
  CHECK(aig.latches.empty());
  CHECK(aig.outputs == std::vector<unsigned>{6});
  REQUIRE(aig.gates.size() == 1);
  CHECK(aig.gates[0].lhs == 6);
  CHECK(aig.gates[0].rhs0 == 2);
  CHECK(aig.gates[0].rhs1 == 4);
}

TEST_CASE("parse: constant-false output") {
  Aig aig = parse_aiger("aag 0 0 0 1 0\n0\n");
  CHECK(aig.max_var == 0);
  CHECK(aig.outputs == std::vector<unsigned>{0});
}

TEST_CASE("parse: controllable symbol names") {
  Aig aig = parse_aiger(
      "aag 2 2 0 1 0\n2\n4\n0\ni0 request\ni1 controllable_grant\n");
  REQUIRE(aig.input_names.size() == 2);
  CHECK(aig.input_names[1] == "controllable_grant");
}

TEST_CASE("parse errors carry line information") {
  CHECK_THROWS_AS(parse_aiger("aag 1 1\n"), parse_error);
  CHECK_THROWS_AS(parse_aiger("aag 1 1 0 0 0\n"), parse_error);  // missing input
  CHECK_THROWS_AS(parse_aiger("aag 1 0 0 1 0\n9\n"), parse_error);  // range
  CHECK_THROWS_AS(parse_aiger("aag 2 1 0 1 1\n2\n4\n4 6 2\n"), parse_error);
  try {
    parse_aiger("aag 1 1 0 0 0\nx\n");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("write/parse round-trip is byte-identical") {
  std::string text = "aag 3 2 0 1 1\n2\n4\n6\n6 2 4\n";
  CHECK(write_aiger(parse_aiger(text)) == text);

  std::string empty = "aag 0 0 0 0 0\n";
  CHECK(write_aiger(parse_aiger(empty)) == empty);

  // Symbols survive the round trip.
  std::string named =
      "aag 2 2 0 1 0\n2\n4\n2\ni0 a\ni1 controllable_b\no0 bad\n";
  CHECK(write_aiger(parse_aiger(named)) == named);
}

TEST_CASE("generated benchmarks round-trip") {
  for (unsigned n : {1u, 2u, 4u}) {
    Aig add = gen_benchmark(BenchKind::kAdd, n);
    std::string text = write_aiger(add);
    CHECK(write_aiger(parse_aiger(text)) == text);
    Aig mult = gen_benchmark(BenchKind::kMult, n);
    text = write_aiger(mult);
    CHECK(write_aiger(parse_aiger(text)) == text);
  }
}

TEST_CASE("benchmark interface shape") {
  Aig add2 = gen_benchmark(BenchKind::kAdd, 2);
  VarPool pool;
  SafetySpec s = spec_from_aig(add2, pool);
  CHECK(s.input_vars.size() == 4);
  CHECK(s.ctrl_vars.size() == 2);
  CHECK(s.state_vars.size() == 2);

  Aig mult2 = gen_benchmark(BenchKind::kMult, 2);
  VarPool pool2;
  SafetySpec m = spec_from_aig(mult2, pool2);
  CHECK(m.input_vars.size() == 4);
  CHECK(m.ctrl_vars.size() == 4);
  CHECK(mult2.latches.empty());       // combinational in the file
  CHECK(m.synthetic_error_latch);     // game model adds the error latch
  CHECK(m.state_vars.size() == 1);

  CHECK_THROWS_AS(gen_benchmark(BenchKind::kAdd, 0), error);
}

TEST_CASE("spec_from_aig: single latch x' = o") {
  Aig aig = toys::keep_x_spec();
  VarPool pool;
  SafetySpec spec = spec_from_aig(aig, pool);
  REQUIRE(spec.state_vars.size() == 1);
  REQUIRE(spec.ctrl_vars.size() == 1);
  CHECK(spec.error_lit == Lit::neg(spec.state_vars[0]));

  // T's models over (x, o, x') match x' = o.
  int x = spec.state_vars[0];
  int o = spec.ctrl_vars[0];
  int xn = spec.next_of.at(x);
  auto models = oracles::projected_models(spec.transition, {x, o, xn});
  std::set<std::uint64_t> expected;
  for (std::uint64_t m = 0; m < 4; ++m)
    expected.insert(m | (((m >> 1) & 1) << 2));  // x' copies o
  CHECK(models == expected);
}

TEST_CASE("spec_from_aig: synthetic error latch for combinational bad") {
  Aig aig = toys::combinational_xor_spec();
  VarPool pool;
  SafetySpec spec = spec_from_aig(aig, pool);
  CHECK(spec.synthetic_error_latch);
  CHECK(spec.state_vars.size() == 1);
  CHECK(spec.error_lit == Lit::pos(spec.state_vars[0]));
}

TEST_CASE("spec_from_aig rejects unsupported shapes") {
  {  // no controllable input
    AigBuilder b;
    b.add_input("i");
    unsigned x = b.add_latch("x");
    b.set_latch_next(x, x);
    b.add_output(x, "bad");
    Aig aig = b.finish();
    VarPool pool;
    CHECK_THROWS_AS(spec_from_aig(aig, pool), unsupported_spec_error);
  }
  {  // two outputs
    AigBuilder b;
    unsigned o = b.add_input("controllable_o");
    b.add_output(o, "bad");
    b.add_output(o, "bad2");
    Aig aig = b.finish();
    VarPool pool;
    CHECK_THROWS_AS(spec_from_aig(aig, pool), unsupported_spec_error);
  }
}

TEST_CASE("transition relations are deterministic and complete") {
  for (const Aig& aig :
       {toys::xor_spec(), toys::agree_spec(), toys::combinational_xor_spec(),
        gen_benchmark(BenchKind::kAdd, 2), gen_benchmark(BenchKind::kMult, 2)}) {
    VarPool pool;
    SafetySpec spec = spec_from_aig(aig, pool);

    // Determinism: T ∧ T[copy] with equal unprimed vars forces equal
    // primed vars (checked pairwise by SAT).
    std::vector<int> copy_group = spec.next_vars;
    copy_group.insert(copy_group.end(), spec.aux_vars.begin(),
                      spec.aux_vars.end());
    auto [t2, ren] = rename_apart(spec.transition, copy_group, pool);
    for (int nv : spec.next_vars) {
      SatSession s;
      s.add_cnf(spec.transition);
      s.add_cnf(t2);
      int nv2 = ren.image_var(nv);
      // nv ≠ nv2
      int sel = pool.fresh();
      s.add_clause({-sel, nv});
      s.add_clause({-sel, -nv2});
      int sel2 = pool.fresh();
      s.add_clause({-sel2, -nv});
      s.add_clause({-sel2, nv2});
      s.add_clause({sel, sel2});
      CHECK_FALSE(s.solve());
    }

    // Completeness: every (state, input, output) assignment extends to a
    // model of T.
    std::vector<int> frees = spec.state_vars;
    frees.insert(frees.end(), spec.input_vars.begin(), spec.input_vars.end());
    frees.insert(frees.end(), spec.ctrl_vars.begin(), spec.ctrl_vars.end());
    if (frees.size() <= 10) {
      SatSession s;
      s.add_cnf(spec.transition);
      for (std::uint64_t m = 0; m < (1ull << frees.size()); ++m) {
        std::vector<Lit> lits;
        for (std::size_t i = 0; i < frees.size(); ++i)
          lits.push_back((m >> i) & 1 ? Lit::pos(frees[i]) : Lit::neg(frees[i]));
        CHECK(s.solve(Cube(std::move(lits))));
      }
    }
  }
}

}  // TEST_SUITE
