#pragma once

#include <cstddef>
#include <string>

#include "psi/normalize.hpp"

namespace psi {

inline constexpr int kTraceSchema = 1;

struct TraceBudgets {
  std::size_t class_budget;
  std::size_t graph_budget;
};

/// JSON document for the reduction graph of a term:
///   { "schema": 1, "input", "budgets", "complete", "nodes", "edges",
///     "normal_forms", "traces" }
/// Nodes carry the entry term of each class; edges carry the rule, the
/// equivalence witness and the reduct; traces lead to each normal form.
std::string trace_json(const ReductionGraph& graph, const TraceBudgets& budgets,
                       int indent = 2);

/// The same graph in Graphviz DOT: one node per class labelled with its
/// entry term, one edge per reduction labelled with the rule name. Normal
/// forms are drawn with a double border.
std::string trace_dot(const ReductionGraph& graph);

}  // namespace psi
