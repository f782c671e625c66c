#include <doctest.h>

#include <random>

#include "aigsynth/neglearn.hpp"
#include "oracles.hpp"

using namespace aigsynth;

TEST_SUITE("neglearn") {

TEST_CASE("binary clause learns both unit complements") {
  Cnf f;
  f.add_clause({1, 2});
  Cnf n = neg_learn(f);
  CHECK(oracles::cnf_equivalent(
      n, [] { Cnf g; g.add_clause({-1}); g.add_clause({-2}); return g; }(),
      {1, 2}));
  // No auxiliary variables: exactly the input's variables.
  for (int v : n.vars()) CHECK((v == 1 || v == 2));
}

TEST_CASE("negation of true is false") {
  Cnf top;
  Cnf n = neg_learn(top);
  CHECK(n.has_empty_clause());
}

TEST_CASE("unit clause negates to its complement") {
  Cnf f;
  f.add_clause({1});
  Cnf n = neg_learn(f);
  CHECK(oracles::cnf_equivalent(n, [] { Cnf g; g.add_clause({-1}); return g; }(),
                                {1}));
}

TEST_CASE("random formulas: learned negation is exact and aux-free") {
  std::mt19937 rng(4242);
  for (int round = 0; round < 220; ++round) {
    int nvars = 1 + static_cast<int>(rng() % 12);
    int nclauses = 1 + static_cast<int>(rng() % 20);
    Cnf f = oracles::random_cnf(rng, nvars, nclauses);

    Cnf n = neg_learn(f);

    std::vector<int> vars;
    for (int v = 1; v <= nvars; ++v) vars.push_back(v);
    auto f_models = oracles::all_models(f, vars);
    std::uint64_t model_count = 0;
    for (std::uint64_t m = 0; m < (1ull << nvars); ++m) {
      bool fm = f_models.count(m) != 0;
      bool nm = oracles::cnf_holds(n, vars, m);
      CHECK(fm == !nm);
      if (fm) ++model_count;
    }
    // Each iteration excludes at least one model of f.
    if (model_count == 0)
      CHECK(n.clause_count() == 0);
    else
      CHECK(n.clause_count() <= model_count);
    for (int v : n.vars()) CHECK(v <= f.max_var());
  }
}

}  // TEST_SUITE
