#include "aigsynth/circuit.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "aigsynth/errors.hpp"

namespace aigsynth {

void DependencyGraph::set_edges(int from, std::vector<int> to) {
  std::sort(to.begin(), to.end());
  to.erase(std::unique(to.begin(), to.end()), to.end());
  adj_[from] = std::move(to);
}

const std::vector<int>& DependencyGraph::edges(int from) const {
  static const std::vector<int> kEmpty;
  auto it = adj_.find(from);
  return it == adj_.end() ? kEmpty : it->second;
}

bool DependencyGraph::has_path(int from, int to) const {
  std::unordered_set<int> seen;
  std::vector<int> stack{from};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    if (!seen.insert(v).second) continue;
    for (int w : edges(v)) stack.push_back(w);
  }
  return false;
}

bool DependencyGraph::acyclic(const std::vector<int>& nodes) const {
  for (int v : nodes)
    for (int w : edges(v))
      if (w == v || has_path(w, v)) return false;
  return true;
}

std::vector<int> DependencyGraph::build_order(const std::vector<int>& nodes) const {
  std::vector<int> order;
  std::unordered_set<int> done;
  std::unordered_set<int> visiting;
  std::function<void(int)> visit = [&](int v) {
    if (done.count(v)) return;
    if (!visiting.insert(v).second)
      throw internal_error("dependency graph has a cycle");
    for (int w : edges(v)) visit(w);
    visiting.erase(v);
    done.insert(v);
    order.push_back(v);
  };
  for (int v : nodes) visit(v);
  return order;
}

Cnf resubstitute(const Cnf& strategy, int v, const Cnf& f_v, VarPool& pool,
                 std::vector<int>* new_aux) {
  Cnf out = strategy;
  if (f_v.has_empty_clause()) {
    out.add_clause({-v});
    if (new_aux) new_aux->clear();
    return out;
  }
  // v -> f_v
  for (const Clause& c : f_v.clauses()) {
    std::vector<Lit> lits{Lit::neg(v)};
    lits.insert(lits.end(), c.lits().begin(), c.lits().end());
    out.add_clause(Clause(std::move(lits)));
  }
  // f_v -> v, via one activation literal per multi-literal clause
  NegationParts parts = cnf_negation_parts(f_v, pool);
  out.append(parts.defs);
  std::vector<Lit> disj{Lit::pos(v)};
  disj.insert(disj.end(), parts.disjuncts.begin(), parts.disjuncts.end());
  out.add_clause(Clause(std::move(disj)));
  if (new_aux) *new_aux = parts.aux_vars;
  return out;
}

unsigned AigBuilder::add_input(const std::string& name) {
  unsigned lit = next_lit_;
  next_lit_ += 2;
  inputs_.push_back(lit);
  input_names_.push_back(name);
  return lit;
}

unsigned AigBuilder::add_latch(const std::string& name) {
  unsigned lit = next_lit_;
  next_lit_ += 2;
  latches_.push_back({lit, 0});
  latch_names_.push_back(name);
  return lit;
}

void AigBuilder::set_latch_next(unsigned latch_lit, unsigned next_lit) {
  for (Aig::Latch& l : latches_)
    if (l.current == latch_lit) {
      l.next = next_lit;
      return;
    }
  throw internal_error("set_latch_next: unknown latch");
}

void AigBuilder::add_output(unsigned lit, const std::string& name) {
  outputs_.push_back(lit);
  output_names_.push_back(name);
}

unsigned AigBuilder::make_and(unsigned a, unsigned b) {
  if (a > b) std::swap(a, b);  // canonical operand order: a <= b
  if (a == 0) return 0;
  if (a == 1) return b;
  if (a == b) return a;
  if ((a ^ b) == 1u) return 0;  // x ∧ ¬x
  std::uint64_t key = (static_cast<std::uint64_t>(b) << 32) | a;
  if (auto it = strash_.find(key); it != strash_.end()) return it->second;
  unsigned lit = next_lit_;
  next_lit_ += 2;
  gates_.push_back({lit, b, a});
  strash_.emplace(key, lit);
  return lit;
}

unsigned AigBuilder::make_or(unsigned a, unsigned b) {
  return negate(make_and(negate(a), negate(b)));
}

unsigned AigBuilder::make_xor(unsigned a, unsigned b) {
  return make_and(negate(make_and(a, b)), negate(make_and(negate(a), negate(b))));
}

unsigned AigBuilder::make_and(const std::vector<unsigned>& lits) {
  unsigned acc = 1;
  for (unsigned l : lits) acc = make_and(acc, l);
  return acc;
}

unsigned AigBuilder::make_or(const std::vector<unsigned>& lits) {
  unsigned acc = 0;
  for (unsigned l : lits) acc = make_or(acc, l);
  return acc;
}

Aig AigBuilder::finish() const {
  Aig aig;
  aig.max_var = (next_lit_ - 2) >> 1;
  aig.inputs = inputs_;
  aig.latches = latches_;
  aig.outputs = outputs_;
  aig.gates = gates_;
  aig.input_names = input_names_;
  aig.latch_names = latch_names_;
  aig.output_names = output_names_;
  aig.validate();
  return aig;
}

namespace {

// Evaluates literals of the original specification circuit inside the new
// one, with controllable inputs redirected to their synthesized nets.
class OriginalConeBuilder {
 public:
  OriginalConeBuilder(const SafetySpec& spec, AigBuilder& builder)
      : builder_(builder) {
    for (const auto& [var, gate] : spec.gate_of) gate_of_.emplace(var, gate);
  }

  void map_var(int orig_var, unsigned new_lit) { net_[orig_var] = new_lit; }
  bool mapped(int orig_var) const { return net_.count(orig_var) != 0; }

  unsigned lit(unsigned orig_lit) {
    unsigned var = orig_lit >> 1;
    unsigned base;
    if (var == 0) {
      base = 0;  // builder literal 0 is constant false, matching AIGER
    } else {
      auto it = net_.find(static_cast<int>(var));
      if (it != net_.end()) {
        base = it->second;
      } else {
        auto g = gate_of_.find(static_cast<int>(var));
        if (g == gate_of_.end())
          throw internal_error("original cone references an unmapped node");
        base = builder_.make_and(lit(g->second.rhs0), lit(g->second.rhs1));
        net_.emplace(static_cast<int>(var), base);
      }
    }
    return (orig_lit & 1u) ? AigBuilder::negate(base) : base;
  }

 private:
  AigBuilder& builder_;
  std::unordered_map<int, AndGate> gate_of_;
  std::unordered_map<int, unsigned> net_;  // original var -> new literal
};

}  // namespace

Aig build_implementation(const SafetySpec& spec,
                         const std::vector<OutputFunction>& functions,
                         const DependencyGraph& deps) {
  std::vector<int> ctrl_nodes = spec.ctrl_vars;
  if (!deps.acyclic(ctrl_nodes))
    throw internal_error("output dependency graph has a cycle");

  AigBuilder builder;
  OriginalConeBuilder cones(spec, builder);

  // Interface: uncontrollable inputs then latches, original order and names.
  for (std::size_t i = 0; i < spec.aig.inputs.size(); ++i) {
    int var = static_cast<int>(spec.aig.inputs[i] >> 1);
    if (spec.ctrl_lit.count(var) != 0) continue;
    std::string name =
        i < spec.aig.input_names.size() ? spec.aig.input_names[i] : "";
    unsigned lit = builder.add_input(name);
    cones.map_var(var, lit);
  }
  std::vector<unsigned> latch_lits;
  for (std::size_t i = 0; i < spec.aig.latches.size(); ++i) {
    std::string name =
        i < spec.aig.latch_names.size() ? spec.aig.latch_names[i] : "";
    unsigned lit = builder.add_latch(name);
    latch_lits.push_back(lit);
    cones.map_var(static_cast<int>(spec.aig.latches[i].current >> 1), lit);
  }

  std::unordered_map<int, Cnf> func_of;
  for (const OutputFunction& f : functions) func_of.emplace(f.ctrl_var, f.func);
  for (int v : spec.ctrl_vars)
    if (!func_of.count(v))
      throw internal_error("missing synthesized function for an output");

  // Synthesized nets in dependency order: a CNF is an AND of ORs over
  // mapped literals; admitted auxiliaries inline their defining cones.
  for (int v : deps.build_order(ctrl_nodes)) {
    const Cnf& f = func_of.at(v);
    unsigned net;
    if (f.has_empty_clause()) {
      net = 0;
    } else {
      std::vector<unsigned> clause_lits;
      for (const Clause& c : f.clauses()) {
        std::vector<unsigned> lits;
        lits.reserve(c.size());
        for (Lit l : c.lits()) {
          unsigned base = cones.lit(2u * static_cast<unsigned>(l.var()));
          lits.push_back(l.negative() ? AigBuilder::negate(base) : base);
        }
        clause_lits.push_back(builder.make_or(lits));
      }
      net = builder.make_and(clause_lits);
    }
    cones.map_var(v, net);
  }

  // Latch updates and the error output come from the original cones,
  // now evaluated over the synthesized outputs.
  for (std::size_t i = 0; i < spec.aig.latches.size(); ++i)
    builder.set_latch_next(latch_lits[i], cones.lit(spec.aig.latches[i].next));
  std::string out_name =
      spec.aig.output_names.empty() ? "" : spec.aig.output_names[0];
  builder.add_output(cones.lit(spec.aig.outputs[0]), out_name);

  return builder.finish();
}

}  // namespace aigsynth
