#include "psi/normalize.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "psi/alpha.hpp"

namespace psi {

ReductionGraph::ReductionGraph(const Term& r, std::size_t class_budget,
                               std::size_t max_nodes) {
  std::deque<EquivClass> pending;

  // Returns the node holding t's class, creating it when t is new.
  auto node_for = [&](const Term& t, std::size_t parent)
      -> std::optional<std::size_t> {
    if (auto it = by_member_.find(alpha_key(t)); it != by_member_.end())
      return it->second;
    if (nodes_.size() >= max_nodes) {
      complete_ = false;
      return std::nullopt;
    }
    std::size_t id = nodes_.size();
    EquivClass cls = equiv_class(t, class_budget);
    if (!cls.exhausted()) complete_ = false;
    for (std::size_t i = 0; i < cls.size(); ++i)
      by_member_.emplace(cls.key(i), id);
    nodes_.push_back({t, cls.size(), cls.exhausted(), {}, parent});
    pending.push_back(std::move(cls));
    return id;
  };

  node_for(r, 0);
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    EquivClass cls = std::move(pending.front());
    pending.pop_front();
    for (auto& red : reducts_of(cls)) {
      auto target = node_for(red.term, id);
      if (!target) continue;
      nodes_[id].edges.push_back(
          {*target, red.rule, cls.witness(red.member), red.term});
    }
  }
}

std::vector<std::size_t> ReductionGraph::normal_forms() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].edges.empty()) out.push_back(i);
  return out;
}

ReductionTrace ReductionGraph::trace_to(std::size_t n) const {
  std::vector<std::size_t> path{n};
  while (path.back() != 0) path.push_back(nodes_[path.back()].parent);
  std::reverse(path.begin(), path.end());

  ReductionTrace trace{root().entry, {}, nodes_[n].entry, complete_};
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Node& from = nodes_[path[i]];
    const Node& to = nodes_[path[i + 1]];
    const Edge* chosen = nullptr;
    for (const auto& e : from.edges) {
      if (e.target != path[i + 1]) continue;
      if (!chosen || alpha_equal(e.reduct, to.entry)) chosen = &e;
      if (alpha_equal(e.reduct, to.entry)) break;
    }
    trace.steps.push_back({from.entry, chosen->witness, chosen->rule,
                           chosen->reduct});
  }
  return trace;
}

std::size_t ReductionGraph::longest_path() const {
  enum class Mark { New, Active, Done };
  std::vector<Mark> mark(nodes_.size(), Mark::New);
  std::vector<std::size_t> depth(nodes_.size(), 0);
  // Iterative post-order DFS.
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  mark[0] = Mark::Active;
  while (!stack.empty()) {
    auto& [n, next] = stack.back();
    if (next < nodes_[n].edges.size()) {
      std::size_t t = nodes_[n].edges[next++].target;
      if (mark[t] == Mark::Active)
        throw std::logic_error("reduction graph has a cycle");
      if (mark[t] == Mark::New) {
        mark[t] = Mark::Active;
        stack.emplace_back(t, 0);
      }
      continue;
    }
    std::size_t best = 0;
    for (const auto& e : nodes_[n].edges)
      best = std::max(best, depth[e.target] + 1);
    depth[n] = best;
    mark[n] = Mark::Done;
    stack.pop_back();
  }
  return depth[0];
}

std::vector<ReductionTrace> normalize(const Term& r, Strategy strategy,
                                      std::size_t class_budget,
                                      std::size_t graph_budget) {
  if (strategy == Strategy::Exhaustive) {
    ReductionGraph graph(r, class_budget, graph_budget);
    std::vector<ReductionTrace> traces;
    for (std::size_t n : graph.normal_forms())
      traces.push_back(graph.trace_to(n));
    return traces;
  }

  ReductionTrace trace{r, {}, r, true};
  for (std::size_t steps = 0;; ++steps) {
    if (steps >= graph_budget) {
      trace.exhaustive = false;
      break;
    }
    StepResult step = reduce_step(trace.result, class_budget);
    if (!step.cls.exhausted()) trace.exhaustive = false;
    if (step.reducts.empty()) break;
    const Reduct* least = nullptr;
    std::string least_key;
    for (const auto& red : step.reducts) {
      std::string key = alpha_key(red.term);
      if (!least || key < least_key) {
        least = &red;
        least_key = std::move(key);
      }
    }
    trace.steps.push_back({trace.result, step.cls.witness(least->member),
                           least->rule, least->term});
    trace.result = least->term;
  }
  return {trace};
}

std::vector<ReductionTrace> normalize(const Term& r, Strategy strategy) {
  return normalize(r, strategy, default_class_budget());
}

}  // namespace psi
