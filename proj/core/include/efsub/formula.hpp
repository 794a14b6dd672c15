#pragma once

#include <memory>
#include <string>
#include <vector>

#include "efsub/graph.hpp"

namespace efsub {

// First-order formulas over the vocabulary {~, =}. Nodes are immutable and
// shared. An empty conjunction is true, an empty disjunction is false.
class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class NodeKind { Exists, Forall, And, Or, Not, Adj, Eq };

class Formula {
 public:
  NodeKind kind;
  std::string var;                   // Exists / Forall
  std::string lhs, rhs;              // Adj / Eq
  std::vector<FormulaPtr> children;  // quantifiers and Not hold one child

  static FormulaPtr exists(std::string var, FormulaPtr body);
  static FormulaPtr forall(std::string var, FormulaPtr body);
  static FormulaPtr conj(std::vector<FormulaPtr> parts);
  static FormulaPtr disj(std::vector<FormulaPtr> parts);
  static FormulaPtr negation(FormulaPtr body);
  static FormulaPtr adjacent(std::string x, std::string y);
  static FormulaPtr equal(std::string x, std::string y);
};

// Standard Tarskian truth over g's vertex set, by direct enumeration of
// assignments. Throws if f has a free variable.
bool evaluate(const FormulaPtr& f, const Graph& g);

int quantifier_depth(const FormulaPtr& f);
// Number of distinct variable names; reuse across scopes does not add.
int variable_width(const FormulaPtr& f);

// The canonical containment sentence for pattern f: one existential per
// pattern vertex, pairwise distinctness, one adjacency conjunct per edge.
FormulaPtr canonical_subgraph_sentence(const Graph& f);

// The width-s star sentence: s outer existentials asserting distinctness,
// then for each i a rebinding of x_i to a common neighbor of the others.
// Requires s >= 3.
FormulaPtr phi_s_sentence(int s);

// Parenthesized ASCII rendering, e.g. (exists x1 (and (not (eq x1 x2)) (adj x1 x2))).
// parse_formula(format_formula(f)) reproduces f.
std::string format_formula(const FormulaPtr& f);
FormulaPtr parse_formula(const std::string& text);

}  // namespace efsub
