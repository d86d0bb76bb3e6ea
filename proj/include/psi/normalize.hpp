#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "psi/rewrite.hpp"

namespace psi {

/// One step of reduction modulo equivalence: `from` is equivalent to the
/// last term of `witness`, which reduces by `rule` to `to`.
struct TraceStep {
  Term from;
  std::vector<Term> witness;  // from, ..., redex
  Rule rule;
  Term to;
};

struct ReductionTrace {
  Term input;
  std::vector<TraceStep> steps;
  Term result;
  /// False when some class exploration hit its budget.
  bool exhaustive = true;
};

/// The reduction graph over equivalence classes reachable from a term.
/// Each node is one class, entered through the term that first reached it.
class ReductionGraph {
 public:
  struct Edge {
    std::size_t target;
    Rule rule;
    std::vector<Term> witness;
    Term reduct;
  };
  struct Node {
    Term entry;
    std::size_t class_size;
    bool class_exhausted;
    std::vector<Edge> edges;
    std::size_t parent;  // first discovering node; root points to itself
  };

  /// Explores every class reachable from `r`. `max_nodes` bounds the number
  /// of classes; `class_budget` bounds each class.
  ReductionGraph(const Term& r, std::size_t class_budget,
                 std::size_t max_nodes);

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& root() const { return nodes_[0]; }
  /// True when every class closed and the node bound was never reached.
  bool complete() const { return complete_; }
  /// Normal forms in discovery order.
  std::vector<std::size_t> normal_forms() const;
  /// Trace from the root to node `n` along discovery edges.
  ReductionTrace trace_to(std::size_t n) const;
  /// Length of the longest path from the root. Throws
  /// std::logic_error if the graph has a cycle.
  std::size_t longest_path() const;

 private:
  std::vector<Node> nodes_;
  std::unordered_map<std::string, std::size_t> by_member_;
  bool complete_ = true;
};

enum class Strategy { Deterministic, Exhaustive };

/// Default bound on the classes an exhaustive search may visit.
inline constexpr std::size_t kDefaultGraphBudget = 10000;

/// Deterministic: always follows the alpha-least reduct, one trace.
/// Exhaustive: one trace per normal form.
std::vector<ReductionTrace> normalize(const Term& r, Strategy strategy,
                                      std::size_t class_budget,
                                      std::size_t graph_budget =
                                          kDefaultGraphBudget);
std::vector<ReductionTrace> normalize(const Term& r, Strategy strategy);

}  // namespace psi
