#include "aigsynth/qbf.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <unordered_set>

#include "aigsynth/checks.hpp"
#include "aigsynth/errors.hpp"

namespace aigsynth {

QbfSession::QbfSession(QuantPrefix prefix, VarPool& pool)
    : prefix_(std::move(prefix)), pool_(&pool) {
  auto add_block = [&](const std::vector<int>& vars, Block b) {
    for (int v : vars) {
      AIGSYNTH_CHECK(v >= 1);
      if (!block_of_.emplace(v, b).second)
        throw contract_error("quantifier blocks are not disjoint");
    }
  };
  add_block(prefix_.outer_exists, Block::kOuter);
  add_block(prefix_.forall, Block::kForall);
  add_block(prefix_.inner_exists, Block::kInner);

  abstraction_.register_vars(prefix_.outer_exists);
  matrix_check_.register_vars(prefix_.outer_exists);
  matrix_check_.register_vars(prefix_.forall);
  matrix_check_.register_vars(prefix_.inner_exists);
}

QbfSession::Block QbfSession::block_of(int var) const {
  auto it = block_of_.find(var);
  if (it == block_of_.end())
    throw contract_error("matrix variable " + std::to_string(var) +
                         " is not quantified");
  return it->second;
}

void QbfSession::push_into_abstraction(const Clause& c, const Expansion& e) {
  std::vector<Lit> lits;
  for (Lit l : c.lits()) {
    switch (block_of(l.var())) {
      case Block::kOuter:
        lits.push_back(l);
        break;
      case Block::kForall:
        if (e.forall_model.contains(l)) return;  // satisfied by this expansion
        break;
      case Block::kInner:
        lits.push_back(e.inner_copy.image(l));
        break;
    }
  }
  abstraction_.add_clause(Clause(std::move(lits)));
}

void QbfSession::add_clause(const Clause& c) {
  if (c.is_tautology()) return;
  bool pure_outer = true;
  for (Lit l : c.lits())
    if (block_of(l.var()) != Block::kOuter) pure_outer = false;
  matrix_.add_clause(c);
  matrix_check_.add_clause(c);
  if (pure_outer) {
    // Instantiates identically in every copy; add once.
    abstraction_.add_clause(c);
    return;
  }
  for (const Expansion& e : expansions_) push_into_abstraction(c, e);
}

void QbfSession::add_cnf(const Cnf& f) {
  for (const Clause& c : f.clauses()) add_clause(c);
}

void QbfSession::add_expansion(const Cube& forall_model) {
  Expansion e;
  e.forall_model = forall_model;
  std::unordered_map<int, int> copy;
  for (int v : prefix_.inner_exists) copy.emplace(v, pool_->fresh());
  e.inner_copy = Renaming(std::move(copy));
  for (const Clause& c : matrix_.clauses()) {
    bool pure_outer = true;
    for (Lit l : c.lits())
      if (block_of(l.var()) != Block::kOuter) pure_outer = false;
    if (!pure_outer) push_into_abstraction(c, e);
  }
  expansions_.push_back(std::move(e));
}

bool QbfSession::find_forall_counterexample(const Cube& outer_model,
                                            Cube& out_cex,
                                            const Deadline& deadline) {
  // Search for a forall assignment y making matrix|outer,y unsatisfiable
  // over the inner block. Candidates come from a scratch session refined
  // with negated instantiations of the matrix.
  SatSession candidates;
  candidates.register_vars(prefix_.forall);
  while (true) {
    deadline.poll();
    auto cand = candidates.solve_assuming(Cube{}, prefix_.forall);
    if (!cand.sat) return false;

    std::vector<Lit> both;
    both.reserve(outer_model.size() + cand.model.size());
    for (Lit l : outer_model.lits()) both.push_back(l);
    for (Lit l : cand.model.lits()) both.push_back(l);
    auto check = matrix_check_.solve_assuming(Cube(std::move(both)),
                                              prefix_.inner_exists);
    if (!check.sat) {
      out_cex = cand.model;
      return true;
    }
    // The candidate fails: some inner assignment satisfies the matrix.
    // Require future candidates to falsify the matrix under that witness.
    Cnf residue;
    for (const Clause& c : matrix_.clauses()) {
      std::vector<Lit> lits;
      bool satisfied = false;
      for (Lit l : c.lits()) {
        if (outer_model.contains(l) || check.model.contains(l)) {
          satisfied = true;
          break;
        }
        if (outer_model.contains(-l) || check.model.contains(-l)) continue;
        lits.push_back(l);
      }
      if (!satisfied) residue.add_clause(Clause(std::move(lits)));
    }
    candidates.add_cnf(negate_cnf_with_aux(residue, *pool_));
  }
}

QbfSession::Result QbfSession::solve_assuming(const Cube& outer_assumptions,
                                              const Deadline& deadline) {
  for (Lit l : outer_assumptions.lits())
    if (block_of(l.var()) != Block::kOuter)
      throw contract_error("assumption variable is not in the outer block");

  while (true) {
    deadline.poll();
    auto cand =
        abstraction_.solve_assuming(outer_assumptions, prefix_.outer_exists);
    if (!cand.sat) {
      failed_ = abstraction_.last_failed_assumptions();
      return {false, Cube{}};
    }
    Cube cex;
    if (!find_forall_counterexample(cand.model, cex, deadline))
      return {true, cand.model};
    add_expansion(cex);
  }
}

Cube QbfSession::core(const Cube& start, const Deadline& deadline) {
  if (solve_assuming(start, deadline).sat)
    throw contract_error("qbf core: formula holds under the given cube");
  Cube core = failed_;

  std::size_t i = 0;
  while (i < core.size()) {
    deadline.poll();
    Cube candidate = core.without(i);
    if (!solve_assuming(candidate, deadline).sat)
      core = failed_;
    else
      ++i;
  }

  if (runtime_checks_enabled()) {
    for (Lit l : core.lits()) AIGSYNTH_CHECK(start.contains(l));
    AIGSYNTH_CHECK(!solve_assuming(core, deadline).sat);
    for (std::size_t k = 0; k < core.size(); ++k)
      AIGSYNTH_CHECK(solve_assuming(core.without(k), deadline).sat);
  }
  return core;
}

namespace {

int parse_int_token(const std::string& tok, int line_no) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw parse_error("expected integer, got '" + tok + "'", line_no);
  }
}

}  // namespace

QdimacsProblem parse_qdimacs(std::istream& in) {
  QdimacsProblem problem;
  std::vector<std::pair<char, std::vector<int>>> blocks;
  bool header_seen = false;
  int declared_vars = 0;
  int declared_clauses = 0;
  int line_no = 0;
  std::string line;
  std::unordered_set<int> quantified;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "p") {
      std::string fmt;
      if (!(ls >> fmt) || fmt != "cnf")
        throw parse_error("expected 'p cnf <vars> <clauses>'", line_no);
      std::string a, b;
      if (!(ls >> a >> b)) throw parse_error("truncated problem line", line_no);
      declared_vars = parse_int_token(a, line_no);
      declared_clauses = parse_int_token(b, line_no);
      header_seen = true;
      continue;
    }
    if (tok == "e" || tok == "a") {
      if (!header_seen) throw parse_error("quantifier before problem line", line_no);
      std::vector<int> vars;
      std::string t;
      bool terminated = false;
      while (ls >> t) {
        int v = parse_int_token(t, line_no);
        if (v == 0) {
          terminated = true;
          break;
        }
        if (v < 0 || v > declared_vars)
          throw parse_error("variable out of range", line_no);
        if (!quantified.insert(v).second)
          throw parse_error("variable quantified twice", line_no);
        vars.push_back(v);
      }
      if (!terminated) throw parse_error("quantifier line missing 0", line_no);
      if (!blocks.empty() && blocks.back().first == tok[0])
        blocks.back().second.insert(blocks.back().second.end(), vars.begin(),
                                    vars.end());
      else
        blocks.emplace_back(tok[0], std::move(vars));
      continue;
    }
    // Clause line.
    if (!header_seen) throw parse_error("clause before problem line", line_no);
    std::vector<Lit> lits;
    int v = parse_int_token(tok, line_no);
    bool terminated = false;
    while (true) {
      if (v == 0) {
        terminated = true;
        break;
      }
      if (std::abs(v) > declared_vars)
        throw parse_error("literal out of range", line_no);
      lits.push_back(Lit(v));
      std::string t;
      if (!(ls >> t)) break;
      v = parse_int_token(t, line_no);
    }
    if (!terminated) throw parse_error("clause line missing 0", line_no);
    problem.matrix.add_clause(Clause(std::move(lits)));
  }

  if (!header_seen) throw parse_error("missing problem line", 1);
  if (static_cast<int>(problem.matrix.clause_count()) > declared_clauses)
    throw parse_error("more clauses than declared", line_no);
  if (blocks.size() > 3)
    throw parse_error("prefix has more than three blocks", line_no);

  // Map onto ∃∀∃; free variables are outermost existential.
  std::vector<int> free_vars;
  for (int v = 1; v <= declared_vars; ++v)
    if (!quantified.count(v)) free_vars.push_back(v);

  auto shape_error = [&]() {
    return parse_error("prefix shape does not fit exists-forall-exists",
                       line_no);
  };
  QuantPrefix& p = problem.prefix;
  p.outer_exists = free_vars;
  if (blocks.size() == 1) {
    if (blocks[0].first == 'e') {
      if (free_vars.empty())
        p.outer_exists = blocks[0].second;
      else
        p.inner_exists = blocks[0].second;
    } else {
      p.forall = blocks[0].second;
    }
  } else if (blocks.size() == 2) {
    if (blocks[0].first == 'e' && blocks[1].first == 'a') {
      if (!free_vars.empty()) throw shape_error();
      p.outer_exists = blocks[0].second;
      p.forall = blocks[1].second;
    } else if (blocks[0].first == 'a' && blocks[1].first == 'e') {
      p.forall = blocks[0].second;
      p.inner_exists = blocks[1].second;
    } else {
      throw shape_error();
    }
  } else if (blocks.size() == 3) {
    if (blocks[0].first != 'e' || blocks[1].first != 'a' ||
        blocks[2].first != 'e' || !free_vars.empty())
      throw shape_error();
    p.outer_exists = blocks[0].second;
    p.forall = blocks[1].second;
    p.inner_exists = blocks[2].second;
  }
  return problem;
}

QdimacsProblem parse_qdimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_qdimacs(in);
}

}  // namespace aigsynth
