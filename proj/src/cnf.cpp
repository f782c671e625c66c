#include "aigsynth/cnf.hpp"

#include <algorithm>
#include <sstream>

namespace aigsynth {

namespace detail {

bool normalize_lits(std::vector<Lit>& lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 1; i < lits.size(); ++i)
    if (lits[i].var() == lits[i - 1].var()) return true;
  return false;
}

}  // namespace detail

bool Clause::contains(Lit l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

Clause Clause::without(std::size_t idx) const {
  AIGSYNTH_CHECK(idx < lits_.size());
  std::vector<Lit> rest;
  rest.reserve(lits_.size() - 1);
  for (std::size_t i = 0; i < lits_.size(); ++i)
    if (i != idx) rest.push_back(lits_[i]);
  return Clause(std::move(rest));
}

bool Cube::contains(Lit l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

Cube Cube::without(std::size_t idx) const {
  AIGSYNTH_CHECK(idx < lits_.size());
  std::vector<Lit> rest;
  rest.reserve(lits_.size() - 1);
  for (std::size_t i = 0; i < lits_.size(); ++i)
    if (i != idx) rest.push_back(lits_[i]);
  return Cube(std::move(rest));
}

Cube Cube::project(std::span<const int> vars) const {
  std::vector<Lit> kept;
  for (int v : vars) {
    if (contains(Lit::pos(v)))
      kept.push_back(Lit::pos(v));
    else if (contains(Lit::neg(v)))
      kept.push_back(Lit::neg(v));
  }
  return Cube(std::move(kept));
}

void Cnf::add_clause(Clause c) {
  if (c.is_tautology()) return;
  if (c.empty()) has_empty_ = true;
  for (Lit l : c.lits()) max_var_ = std::max(max_var_, l.var());
  clauses_.push_back(std::move(c));
}

void Cnf::append(const Cnf& other) {
  for (const Clause& c : other.clauses()) add_clause(c);
}

std::size_t Cnf::literal_count() const {
  std::size_t n = 0;
  for (const Clause& c : clauses_) n += c.size();
  return n;
}

std::vector<int> Cnf::vars() const {
  std::vector<int> out;
  for (const Clause& c : clauses_)
    for (Lit l : c.lits()) out.push_back(l.var());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int VarPool::fresh() { return next_++; }

std::vector<int> VarPool::fresh_block(std::size_t n) {
  std::vector<int> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(fresh());
  return out;
}

void VarPool::reserve_through(int var) {
  AIGSYNTH_CHECK(var >= 0);
  next_ = std::max(next_, var + 1);
}

void VarPool::add_group(const std::string& name, std::vector<int> vars) {
  AIGSYNTH_CHECK(!groups_.count(name));
  for (int v : vars) {
    AIGSYNTH_CHECK(v >= 1 && v <= max_allocated());
    auto [it, inserted] = owner_.emplace(v, name);
    if (!inserted)
      throw internal_error("variable " + std::to_string(v) + " already in group '" +
                           it->second + "'");
  }
  groups_.emplace(name, std::move(vars));
}

const std::vector<int>& VarPool::group(const std::string& name) const {
  auto it = groups_.find(name);
  AIGSYNTH_CHECK(it != groups_.end());
  return it->second;
}

bool VarPool::has_group(const std::string& name) const {
  return groups_.count(name) != 0;
}

namespace {

// Resolves an AIGER literal to a CNF literal, creating the constant-true
// variable on first use of literal 0/1.
Lit aiger_lit_to_cnf(unsigned aiger_lit, VarPool& pool,
                     std::unordered_map<unsigned, Lit>& node_lit, Cnf& cnf) {
  unsigned var = aiger_lit >> 1;
  auto it = node_lit.find(var);
  if (it == node_lit.end()) {
    if (var != 0)
      throw malformed_graph_error("gate references undefined node " +
                                  std::to_string(var));
    // AIGER literal 0 is constant false, so node 0 maps to the negation of
    // a fresh variable constrained true.
    Lit t = Lit::pos(pool.fresh());
    cnf.add_unit(t);
    it = node_lit.emplace(0u, -t).first;
  }
  Lit base = it->second;
  return (aiger_lit & 1u) ? -base : base;
}

}  // namespace

Cnf tseitin_encode_aig(std::span<const AndGate> gates, VarPool& pool,
                       std::unordered_map<unsigned, Lit>& node_lit) {
  std::vector<AndGate> ordered(gates.begin(), gates.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const AndGate& a, const AndGate& b) { return a.lhs < b.lhs; });

  Cnf cnf;
  for (const AndGate& g : ordered) {
    if (g.lhs & 1u || g.lhs == 0)
      throw malformed_graph_error("gate output must be a positive literal");
    if (g.rhs0 >= g.lhs || g.rhs1 >= g.lhs)
      throw malformed_graph_error("gate operands must precede the gate");
    Lit a = aiger_lit_to_cnf(g.rhs0, pool, node_lit, cnf);
    Lit b = aiger_lit_to_cnf(g.rhs1, pool, node_lit, cnf);
    unsigned var = g.lhs >> 1;
    Lit out;
    if (auto it = node_lit.find(var); it != node_lit.end()) {
      out = it->second;
    } else {
      out = Lit::pos(pool.fresh());
      node_lit.emplace(var, out);
    }
    cnf.add_clause(Clause({(-out).dimacs(), a.dimacs()}));
    cnf.add_clause(Clause({(-out).dimacs(), b.dimacs()}));
    cnf.add_clause(Clause({out.dimacs(), (-a).dimacs(), (-b).dimacs()}));
  }
  return cnf;
}

NegationParts cnf_negation_parts(const Cnf& f, VarPool& pool) {
  NegationParts parts;
  if (f.has_empty_clause()) {
    parts.always_true = true;
    return parts;
  }
  for (const Clause& c : f.clauses()) {
    if (c.size() == 1) {
      parts.disjuncts.push_back(-c.lits()[0]);
      continue;
    }
    int k = pool.fresh();
    parts.aux_vars.push_back(k);
    for (Lit l : c.lits())
      parts.defs.add_clause(Clause({-k, (-l).dimacs()}));
    parts.disjuncts.push_back(Lit::pos(k));
  }
  return parts;
}

Cnf negate_cnf_with_aux(const Cnf& f, VarPool& pool, std::vector<int>* aux_vars) {
  NegationParts parts = cnf_negation_parts(f, pool);
  if (aux_vars) *aux_vars = parts.aux_vars;
  if (parts.always_true) return Cnf{};
  Cnf out = std::move(parts.defs);
  std::vector<Lit> disj = parts.disjuncts;
  std::vector<int> dimacs;
  dimacs.reserve(disj.size());
  for (Lit l : disj) dimacs.push_back(l.dimacs());
  std::vector<Lit> lits;
  lits.reserve(dimacs.size());
  for (int d : dimacs) lits.push_back(Lit(d));
  out.add_clause(Clause(std::move(lits)));
  return out;
}

Cnf negate_cnf_with_aux(const Cnf& f, VarPool& pool) {
  return negate_cnf_with_aux(f, pool, nullptr);
}

int Renaming::image_var(int var) const {
  auto it = map_.find(var);
  return it == map_.end() ? var : it->second;
}

Lit Renaming::image(Lit l) const {
  int v = image_var(l.var());
  return l.negative() ? Lit::neg(v) : Lit::pos(v);
}

Clause Renaming::image(const Clause& c) const {
  std::vector<Lit> lits;
  lits.reserve(c.size());
  for (Lit l : c.lits()) lits.push_back(image(l));
  return Clause(std::move(lits));
}

Cnf Renaming::image(const Cnf& f) const {
  Cnf out;
  for (const Clause& c : f.clauses()) out.add_clause(image(c));
  return out;
}

Cube Renaming::image(const Cube& c) const {
  std::vector<Lit> lits;
  lits.reserve(c.size());
  for (Lit l : c.lits()) lits.push_back(image(l));
  return Cube(std::move(lits));
}

std::pair<Cnf, Renaming> rename_apart(const Cnf& f, std::span<const int> group,
                                      VarPool& pool) {
  std::unordered_map<int, int> map;
  map.reserve(group.size());
  for (int v : group) {
    AIGSYNTH_CHECK(v >= 1);
    AIGSYNTH_CHECK(map.emplace(v, pool.fresh()).second);
  }
  Renaming r(std::move(map));
  return {r.image(f), r};
}

std::string to_string(Lit l) { return std::to_string(l.dimacs()); }

std::string to_string(const Clause& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ' ';
    os << c.lits()[i].dimacs();
  }
  os << ')';
  return os.str();
}

std::string to_string(const Cube& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ' ';
    os << c.lits()[i].dimacs();
  }
  os << ']';
  return os.str();
}

std::string to_string(const Cnf& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.clause_count(); ++i) {
    if (i) os << ' ';
    os << to_string(f.clauses()[i]);
  }
  return os.str();
}

}  // namespace aigsynth
