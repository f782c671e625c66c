#include "aigsynth/aig.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <unordered_set>

#include "aigsynth/errors.hpp"

namespace aigsynth {

void Aig::validate() const {
  std::unordered_set<unsigned> defined;  // variable indices
  auto check_even = [&](unsigned lit, const char* what) {
    if (lit & 1u || lit == 0)
      throw malformed_graph_error(std::string(what) +
                                  " literal must be positive and even");
    if (lit > 2 * max_var + 1)
      throw malformed_graph_error(std::string(what) + " literal out of range");
  };
  auto check_ref = [&](unsigned lit, const char* what) {
    if (lit > 2 * max_var + 1)
      throw malformed_graph_error(std::string(what) + " literal out of range");
    unsigned var = lit >> 1;
    if (var != 0 && !defined.count(var))
      throw malformed_graph_error(std::string(what) + " references undefined literal " +
                                  std::to_string(lit));
  };

  for (unsigned l : inputs) {
    check_even(l, "input");
    if (!defined.insert(l >> 1).second)
      throw malformed_graph_error("literal defined twice");
  }
  for (const Latch& l : latches) {
    check_even(l.current, "latch");
    if (!defined.insert(l.current >> 1).second)
      throw malformed_graph_error("literal defined twice");
  }
  for (const AndGate& g : gates) {
    check_even(g.lhs, "and");
    if (g.rhs0 >= g.lhs || g.rhs1 >= g.lhs)
      throw malformed_graph_error("and operands must be smaller than the lhs");
    if (!defined.insert(g.lhs >> 1).second)
      throw malformed_graph_error("literal defined twice");
  }
  for (const AndGate& g : gates) {
    check_ref(g.rhs0, "and");
    check_ref(g.rhs1, "and");
  }
  for (const Latch& l : latches) check_ref(l.next, "latch next");
  for (unsigned l : outputs) check_ref(l, "output");
  if (!input_names.empty() && input_names.size() != inputs.size())
    throw malformed_graph_error("input symbol count mismatch");
}

namespace {

unsigned parse_lit(const std::string& tok, int line_no) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw parse_error("expected literal, got '" + tok + "'", line_no);
  try {
    unsigned long v = std::stoul(tok);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw parse_error("literal out of range: " + tok, line_no);
  }
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

}  // namespace

Aig parse_aiger(std::istream& in) {
  int line_no = 0;
  std::string line;
  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    return true;
  };

  if (!next_line()) throw parse_error("empty file", 1);
  std::vector<std::string> header = split_ws(line);
  if (header.size() != 6 || header[0] != "aag")
    throw parse_error("expected header 'aag M I L O A'", line_no);
  unsigned m = parse_lit(header[1], line_no);
  unsigned ni = parse_lit(header[2], line_no);
  unsigned nl = parse_lit(header[3], line_no);
  unsigned no = parse_lit(header[4], line_no);
  unsigned na = parse_lit(header[5], line_no);
  if (ni + nl + na > m) throw parse_error("header counts exceed maxvar", line_no);

  Aig aig;
  aig.max_var = m;
  for (unsigned i = 0; i < ni; ++i) {
    if (!next_line()) throw parse_error("missing input line", line_no + 1);
    std::vector<std::string> toks = split_ws(line);
    if (toks.size() != 1) throw parse_error("input line must hold one literal", line_no);
    aig.inputs.push_back(parse_lit(toks[0], line_no));
  }
  for (unsigned i = 0; i < nl; ++i) {
    if (!next_line()) throw parse_error("missing latch line", line_no + 1);
    std::vector<std::string> toks = split_ws(line);
    if (toks.size() != 2 && toks.size() != 3)
      throw parse_error("latch line must hold 'current next'", line_no);
    if (toks.size() == 3 && toks[2] != "0")
      throw unsupported_spec_error("nonzero latch reset values are unsupported");
    aig.latches.push_back({parse_lit(toks[0], line_no), parse_lit(toks[1], line_no)});
  }
  for (unsigned i = 0; i < no; ++i) {
    if (!next_line()) throw parse_error("missing output line", line_no + 1);
    std::vector<std::string> toks = split_ws(line);
    if (toks.size() != 1) throw parse_error("output line must hold one literal", line_no);
    aig.outputs.push_back(parse_lit(toks[0], line_no));
  }
  for (unsigned i = 0; i < na; ++i) {
    if (!next_line()) throw parse_error("missing and line", line_no + 1);
    std::vector<std::string> toks = split_ws(line);
    if (toks.size() != 3)
      throw parse_error("and line must hold 'lhs rhs0 rhs1'", line_no);
    aig.gates.push_back({parse_lit(toks[0], line_no), parse_lit(toks[1], line_no),
                         parse_lit(toks[2], line_no)});
  }

  aig.input_names.assign(aig.inputs.size(), "");
  aig.latch_names.assign(aig.latches.size(), "");
  aig.output_names.assign(aig.outputs.size(), "");
  bool any_symbol = false;
  while (next_line()) {
    if (line.empty()) continue;
    if (line[0] == 'c') break;  // comment section: ignore the rest
    std::size_t sp = line.find(' ');
    if (sp == std::string::npos || sp < 2)
      throw parse_error("malformed symbol line", line_no);
    char kind = line[0];
    std::string idx_str = line.substr(1, sp - 1);
    std::string name = line.substr(sp + 1);
    if (idx_str.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("malformed symbol index", line_no);
    unsigned idx = static_cast<unsigned>(std::stoul(idx_str));
    any_symbol = true;
    if (kind == 'i' && idx < aig.inputs.size())
      aig.input_names[idx] = name;
    else if (kind == 'l' && idx < aig.latches.size())
      aig.latch_names[idx] = name;
    else if (kind == 'o' && idx < aig.outputs.size())
      aig.output_names[idx] = name;
    else
      throw parse_error("symbol index out of range", line_no);
  }
  if (!any_symbol) {
    aig.input_names.clear();
    aig.latch_names.clear();
    aig.output_names.clear();
  }

  std::sort(aig.gates.begin(), aig.gates.end(),
            [](const AndGate& a, const AndGate& b) { return a.lhs < b.lhs; });
  try {
    aig.validate();
  } catch (const malformed_graph_error& e) {
    throw parse_error(e.what(), line_no);
  }
  return aig;
}

Aig parse_aiger(const std::string& text) {
  std::istringstream in(text);
  return parse_aiger(in);
}

std::string write_aiger(const Aig& aig) {
  aig.validate();
  std::ostringstream os;
  os << "aag " << aig.max_var << ' ' << aig.inputs.size() << ' '
     << aig.latches.size() << ' ' << aig.outputs.size() << ' '
     << aig.gates.size() << '\n';
  for (unsigned l : aig.inputs) os << l << '\n';
  for (const Aig::Latch& l : aig.latches) os << l.current << ' ' << l.next << '\n';
  for (unsigned l : aig.outputs) os << l << '\n';
  for (const AndGate& g : aig.gates)
    os << g.lhs << ' ' << g.rhs0 << ' ' << g.rhs1 << '\n';
  for (std::size_t i = 0; i < aig.input_names.size(); ++i)
    if (!aig.input_names[i].empty()) os << 'i' << i << ' ' << aig.input_names[i] << '\n';
  for (std::size_t i = 0; i < aig.latch_names.size(); ++i)
    if (!aig.latch_names[i].empty()) os << 'l' << i << ' ' << aig.latch_names[i] << '\n';
  for (std::size_t i = 0; i < aig.output_names.size(); ++i)
    if (!aig.output_names[i].empty()) os << 'o' << i << ' ' << aig.output_names[i] << '\n';
  return os.str();
}

std::vector<int> SafetySpec::all_vars_of_transition() const {
  return transition.vars();
}

Renaming SafetySpec::prime_renaming() const {
  std::unordered_map<int, int> map(next_of.begin(), next_of.end());
  return Renaming(std::move(map));
}

std::vector<int> SafetySpec::structural_support(int var) const {
  std::vector<int> out;
  std::unordered_set<int> seen;
  std::vector<int> stack{var};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (!seen.insert(v).second) continue;
    auto it = gate_of.find(v);
    if (it == gate_of.end()) {
      if (v != const_true_var) out.push_back(v);
      continue;
    }
    stack.push_back(static_cast<int>(it->second.rhs0 >> 1));
    stack.push_back(static_cast<int>(it->second.rhs1 >> 1));
  }
  // Drop the constant node (support of constants is empty).
  out.erase(std::remove(out.begin(), out.end(), 0), out.end());
  std::sort(out.begin(), out.end());
  return out;
}

SafetySpec spec_from_aig(const Aig& aig, VarPool& pool) {
  aig.validate();
  if (aig.outputs.size() != 1)
    throw unsupported_spec_error("specification must have exactly one output");

  SafetySpec spec;
  spec.aig = aig;
  pool.reserve_through(static_cast<int>(aig.max_var));

  // AIGER variable k maps to CNF variable k.
  std::unordered_map<unsigned, Lit> node_lit;
  for (std::size_t i = 0; i < aig.inputs.size(); ++i) {
    int var = static_cast<int>(aig.inputs[i] >> 1);
    bool controllable =
        i < aig.input_names.size() &&
        aig.input_names[i].rfind(kControllablePrefix, 0) == 0;
    if (controllable) {
      spec.ctrl_vars.push_back(var);
      spec.ctrl_lit.emplace(var, aig.inputs[i]);
    } else {
      spec.input_vars.push_back(var);
    }
    node_lit.emplace(aig.inputs[i] >> 1, Lit::pos(var));
  }
  if (spec.ctrl_vars.empty())
    throw unsupported_spec_error("specification has no controllable input");

  for (const Aig::Latch& l : aig.latches) {
    int var = static_cast<int>(l.current >> 1);
    spec.state_vars.push_back(var);
    node_lit.emplace(l.current >> 1, Lit::pos(var));
  }
  // Gate variable k encodes AIGER variable k.
  for (const AndGate& g : aig.gates)
    node_lit.emplace(g.lhs >> 1, Lit::pos(static_cast<int>(g.lhs >> 1)));

  spec.transition = tseitin_encode_aig(aig.gates, pool, node_lit);
  for (const AndGate& g : aig.gates) {
    int var = static_cast<int>(g.lhs >> 1);
    spec.aux_vars.push_back(var);
    spec.gate_of.emplace(var, g);
  }
  if (auto it = node_lit.find(0u); it != node_lit.end()) {
    spec.const_true_var = it->second.var();
    spec.aux_vars.push_back(spec.const_true_var);
  }

  auto lit_of = [&](unsigned aiger_lit) -> Lit {
    unsigned var = aiger_lit >> 1;
    if (var == 0) {
      if (spec.const_true_var == 0) {
        spec.const_true_var = pool.fresh();
        spec.aux_vars.push_back(spec.const_true_var);
        spec.transition.add_unit(Lit::pos(spec.const_true_var));
      }
      Lit t = Lit::pos(spec.const_true_var);
      return (aiger_lit & 1u) ? t : -t;  // literal 1 is true, 0 is false
    }
    Lit base = node_lit.at(var);
    return (aiger_lit & 1u) ? -base : base;
  };

  // x'_i defined functionally from the latch next-state cone.
  for (const Aig::Latch& l : aig.latches) {
    int cur = static_cast<int>(l.current >> 1);
    int primed = pool.fresh();
    spec.next_vars.push_back(primed);
    spec.next_of.emplace(cur, primed);
    Lit next = lit_of(l.next);
    spec.transition.add_clause(Clause({-primed, next.dimacs()}));
    spec.transition.add_clause(Clause({primed, (-next).dimacs()}));
  }

  // Error literal: a latch-literal output marks unsafe states directly; a
  // combinational output is wrapped in a fresh absorbing error latch
  // (err' <-> err ∨ bad).
  unsigned bad = aig.outputs[0];
  unsigned bad_var = bad >> 1;
  bool latch_output = false;
  for (const Aig::Latch& l : aig.latches)
    if ((l.current >> 1) == bad_var) latch_output = true;

  if (latch_output) {
    spec.error_lit = (bad & 1u) ? Lit::neg(static_cast<int>(bad_var))
                                : Lit::pos(static_cast<int>(bad_var));
  } else {
    spec.synthetic_error_latch = true;
    int err = pool.fresh();
    int err_next = pool.fresh();
    spec.state_vars.push_back(err);
    spec.next_vars.push_back(err_next);
    spec.next_of.emplace(err, err_next);
    Lit bad_lit = lit_of(bad);
    // err' <-> (err ∨ bad)
    spec.transition.add_clause(Clause({-err_next, err, bad_lit.dimacs()}));
    spec.transition.add_clause(Clause({err_next, -err}));
    spec.transition.add_clause(Clause({err_next, (-bad_lit).dimacs()}));
    spec.error_lit = Lit::pos(err);
  }
  return spec;
}

}  // namespace aigsynth
