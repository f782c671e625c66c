#include <doctest.h>

#include <random>
#include <set>

#include "aigsynth/cnf.hpp"
#include "oracles.hpp"

using namespace aigsynth;

TEST_SUITE("cnf") {

TEST_CASE("literal negation is an involution") {
  Lit a = Lit::pos(3);
  CHECK(-(-a) == a);
  CHECK((-a).var() == 3);
  CHECK((-a).negative());
}

TEST_CASE("clause normalization") {
  Clause c({2, -1, 2});
  CHECK(c.size() == 2);
  CHECK_FALSE(c.is_tautology());

  Clause taut({1, -1, 2});
  CHECK(taut.is_tautology());

  Clause empty{};
  CHECK(empty.empty());
}

TEST_CASE("cnf drops tautologies and tracks falsity") {
  Cnf f;
  f.add_clause({1, -1});
  CHECK(f.is_true());
  f.add_clause({2});
  CHECK(f.clause_count() == 1);
  CHECK_FALSE(f.has_empty_clause());
  f.add_clause(Clause{});
  CHECK(f.has_empty_clause());
}

TEST_CASE("varpool issues increasing ids and disjoint groups") {
  VarPool pool;
  pool.reserve_through(4);
  int a = pool.fresh();
  int b = pool.fresh();
  CHECK(a == 5);
  CHECK(b == 6);
  pool.add_group("x", {1, 2});
  pool.add_group("i", {3, 4});
  CHECK_THROWS_AS(pool.add_group("bad", {2}), internal_error);
  CHECK(pool.group("x") == std::vector<int>{1, 2});
}

TEST_CASE("tseitin: single AND gate") {
  VarPool pool;
  pool.reserve_through(2);
  std::unordered_map<unsigned, Lit> node_lit{{1u, Lit::pos(1)}, {2u, Lit::pos(2)}};
  std::vector<AndGate> gates{{6, 2, 4}};  // g = a ∧ b
  Cnf cnf = tseitin_encode_aig(gates, pool, node_lit);
  CHECK(cnf.clause_count() == 3);
  CHECK(pool.max_allocated() == 3);  // one fresh var
  CHECK(node_lit.at(3u) == Lit::pos(3));

  // Projection onto {a, b, g} matches the AND truth table.
  std::vector<int> vars{1, 2, 3};
  auto models = oracles::all_models(cnf, vars);
  std::set<std::uint64_t> expected{0b000, 0b001, 0b010, 0b111};
  CHECK(models == expected);
}

TEST_CASE("tseitin: constant-true node yields a unit clause") {
  VarPool pool;
  pool.reserve_through(1);
  std::unordered_map<unsigned, Lit> node_lit{{1u, Lit::pos(1)}};
  std::vector<AndGate> gates{{4, 2, 1}};  // g = a ∧ true
  Cnf cnf = tseitin_encode_aig(gates, pool, node_lit);
  bool has_unit = false;
  for (const Clause& c : cnf.clauses())
    if (c.size() == 1 && !c.lits()[0].negative()) has_unit = true;
  CHECK(has_unit);

  // g ≡ a once the constant is constrained.
  int g = node_lit.at(2u).var();
  auto models = oracles::projected_models(cnf, {1, g});
  CHECK(models == std::set<std::uint64_t>{0b00, 0b11});

  // g = a ∧ false is constant false.
  VarPool pool2;
  pool2.reserve_through(1);
  std::unordered_map<unsigned, Lit> node_lit2{{1u, Lit::pos(1)}};
  std::vector<AndGate> gates2{{4, 2, 0}};
  Cnf cnf2 = tseitin_encode_aig(gates2, pool2, node_lit2);
  int g2 = node_lit2.at(2u).var();
  auto models2 = oracles::projected_models(cnf2, {1, g2});
  CHECK(models2 == std::set<std::uint64_t>{0b00, 0b01});
}

TEST_CASE("tseitin: chain of two gates") {
  VarPool pool;
  pool.reserve_through(3);
  std::unordered_map<unsigned, Lit> node_lit{
      {1u, Lit::pos(1)}, {2u, Lit::pos(2)}, {3u, Lit::pos(3)}};
  std::vector<AndGate> gates{{8, 2, 4}, {10, 8, 6}};  // g1=a∧b, g2=g1∧c
  Cnf cnf = tseitin_encode_aig(gates, pool, node_lit);
  CHECK(cnf.clause_count() == 6);
  CHECK(pool.max_allocated() == 5);  // two fresh vars

  // Satisfying assignments projected to {a,b,c,g2} equal a∧b∧c's table.
  std::vector<int> proj{1, 2, 3, 5};
  auto models = oracles::projected_models(cnf, proj);
  std::set<std::uint64_t> expected;
  for (std::uint64_t m = 0; m < 8; ++m) {
    bool g = (m & 1) && (m & 2) && (m & 4);
    expected.insert(m | (g ? 8u : 0u));
  }
  CHECK(models == expected);
}

TEST_CASE("tseitin: undefined operand is rejected") {
  VarPool pool;
  pool.reserve_through(1);
  std::unordered_map<unsigned, Lit> node_lit{{1u, Lit::pos(1)}};
  std::vector<AndGate> gates{{6, 2, 4}};  // node 2 undefined
  CHECK_THROWS_AS(tseitin_encode_aig(gates, pool, node_lit),
                  malformed_graph_error);
}

TEST_CASE("tseitin property: random graphs match their truth table") {
  std::mt19937 rng(7);
  for (int round = 0; round < 60; ++round) {
    int n_inputs = 2 + static_cast<int>(rng() % 3);
    int n_gates = 1 + static_cast<int>(rng() % 8);
    VarPool pool;
    pool.reserve_through(n_inputs);
    std::unordered_map<unsigned, Lit> node_lit;
    for (int i = 1; i <= n_inputs; ++i)
      node_lit.emplace(static_cast<unsigned>(i), Lit::pos(i));
    std::vector<AndGate> gates;
    for (int g = 0; g < n_gates; ++g) {
      unsigned lhs = 2u * (n_inputs + g + 1);
      std::uniform_int_distribution<unsigned> operand(2, lhs - 1);
      gates.push_back({lhs, operand(rng), operand(rng)});
    }
    Cnf cnf = tseitin_encode_aig(gates, pool, node_lit);

    // Simulate the graph directly and compare projections.
    std::vector<int> inputs;
    for (int i = 1; i <= n_inputs; ++i) inputs.push_back(i);
    int out_var = node_lit.at(static_cast<unsigned>(n_inputs + n_gates)).var();
    std::vector<int> proj = inputs;
    proj.push_back(out_var);

    std::set<std::uint64_t> expected;
    for (std::uint64_t m = 0; m < (1ull << n_inputs); ++m) {
      std::vector<bool> val(n_inputs + n_gates + 1, false);
      for (int i = 0; i < n_inputs; ++i) val[1 + i] = (m >> i) & 1;
      auto lit_val = [&](unsigned l) {
        if (l <= 1) return l == 1;
        bool v = val[l >> 1];
        return (l & 1) ? !v : v;
      };
      for (const AndGate& g : gates)
        val[g.lhs >> 1] = lit_val(g.rhs0) && lit_val(g.rhs1);
      bool out = val[n_inputs + n_gates];
      expected.insert(m | (out ? (1ull << n_inputs) : 0u));
    }
    CHECK(oracles::projected_models(cnf, proj) == expected);
  }
}

TEST_CASE("negation: unit clauses negate directly") {
  VarPool pool;
  pool.reserve_through(1);
  Cnf f;
  f.add_clause({1});
  Cnf n = negate_cnf_with_aux(f, pool);
  REQUIRE(n.clause_count() == 1);
  CHECK(n.clauses()[0] == Clause({-1}));
  CHECK(pool.max_allocated() == 1);  // no aux vars
}

TEST_CASE("negation: binary clause uses one aux var") {
  VarPool pool;
  pool.reserve_through(2);
  Cnf f;
  f.add_clause({1, 2});
  Cnf n = negate_cnf_with_aux(f, pool);
  CHECK(pool.max_allocated() == 3);
  auto models = oracles::projected_models(n, {1, 2});
  CHECK(models == std::set<std::uint64_t>{0b00});
}

TEST_CASE("negation: two units yield the complement region") {
  VarPool pool;
  pool.reserve_through(2);
  Cnf f;
  f.add_clause({1});
  f.add_clause({2});
  Cnf n = negate_cnf_with_aux(f, pool);
  auto models = oracles::projected_models(n, {1, 2});
  CHECK(models == std::set<std::uint64_t>{0b00, 0b01, 0b10});
}

TEST_CASE("negation: edge cases") {
  VarPool pool;
  Cnf top;  // ⊤
  Cnf n_top = negate_cnf_with_aux(top, pool);
  CHECK(n_top.has_empty_clause());

  Cnf bottom;
  bottom.add_clause(Clause{});
  Cnf n_bot = negate_cnf_with_aux(bottom, pool);
  CHECK(n_bot.is_true());
}

TEST_CASE("negation property: projection is the exact complement") {
  std::mt19937 rng(11);
  for (int round = 0; round < 120; ++round) {
    int nvars = 1 + static_cast<int>(rng() % 6);
    int nclauses = 1 + static_cast<int>(rng() % 8);
    Cnf f = oracles::random_cnf(rng, nvars, nclauses);
    VarPool pool;
    pool.reserve_through(nvars);
    Cnf n = negate_cnf_with_aux(f, pool);

    std::vector<int> vars;
    for (int v = 1; v <= nvars; ++v) vars.push_back(v);
    auto f_models = oracles::all_models(f, vars);
    auto n_models = oracles::projected_models(n, vars);
    std::set<std::uint64_t> complement;
    for (std::uint64_t m = 0; m < (1ull << nvars); ++m)
      if (!f_models.count(m)) complement.insert(m);
    CHECK(n_models == complement);
  }
}

TEST_CASE("rename_apart: basic, identity, tautology") {
  VarPool pool;
  pool.reserve_through(2);
  Cnf f;
  f.add_clause({1, 2});  // (x ∨ o), group {o}

  auto [g, map] = rename_apart(f, std::vector<int>{2}, pool);
  CHECK(map.image_var(2) == 3);
  CHECK(g.clauses()[0] == Clause({1, 3}));

  auto [h, empty_map] = rename_apart(f, std::vector<int>{}, pool);
  CHECK(h == f);
  CHECK(empty_map.empty());

  // A tautological clause stays a tautology under renaming, so it is
  // dropped from the image just as it would be dropped on construction.
  Cnf t;
  t.add_clause({2, -2});
  auto [ti, tmap] = rename_apart(t, std::vector<int>{2}, pool);
  CHECK(ti.is_true());
}

TEST_CASE("rename_apart: result shares no group variable with the input") {
  std::mt19937 rng(23);
  for (int round = 0; round < 40; ++round) {
    int nvars = 2 + static_cast<int>(rng() % 6);
    Cnf f = oracles::random_cnf(rng, nvars, 6);
    std::vector<int> group;
    for (int v = 1; v <= nvars; ++v)
      if (rng() % 2) group.push_back(v);
    VarPool pool;
    pool.reserve_through(nvars);
    auto [g, map] = rename_apart(f, group, pool);
    for (int v : g.vars())
      for (int gv : group) CHECK(v != gv);
  }
}

}  // TEST_SUITE
