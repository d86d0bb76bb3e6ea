#include "psi/trace.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

#include "psi/format.hpp"

namespace psi {

namespace {

using json = nlohmann::ordered_json;

json chain(const std::vector<Term>& terms) {
  json out = json::array();
  for (const auto& t : terms) out.push_back(format(t));
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string trace_json(const ReductionGraph& graph, const TraceBudgets& budgets,
                       int indent) {
  json doc;
  doc["schema"] = kTraceSchema;
  doc["input"] = format(graph.root().entry);
  doc["budgets"] = {{"class", budgets.class_budget},
                    {"graph", budgets.graph_budget}};
  doc["complete"] = graph.complete();

  json nodes = json::array();
  json edges = json::array();
  const auto& all = graph.nodes();
  for (std::size_t i = 0; i < all.size(); ++i) {
    nodes.push_back({{"id", i},
                     {"term", format(all[i].entry)},
                     {"class_size", all[i].class_size},
                     {"class_exhausted", all[i].class_exhausted}});
    for (const auto& e : all[i].edges)
      edges.push_back({{"from", i},
                       {"to", e.target},
                       {"rule", to_string(e.rule)},
                       {"witness", chain(e.witness)},
                       {"reduct", format(e.reduct)}});
  }
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);

  json normal = json::array();
  json traces = json::array();
  for (std::size_t n : graph.normal_forms()) {
    normal.push_back(n);
    ReductionTrace trace = graph.trace_to(n);
    json steps = json::array();
    for (const auto& s : trace.steps)
      steps.push_back({{"from", format(s.from)},
                       {"witness", chain(s.witness)},
                       {"rule", to_string(s.rule)},
                       {"to", format(s.to)}});
    traces.push_back({{"result", format(trace.result)},
                      {"exhaustive", trace.exhaustive},
                      {"steps", std::move(steps)}});
  }
  doc["normal_forms"] = std::move(normal);
  doc["traces"] = std::move(traces);
  return doc.dump(indent) + "\n";
}

std::string trace_dot(const ReductionGraph& graph) {
  std::ostringstream out;
  out << "digraph reduction {\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  const auto& all = graph.nodes();
  std::set<std::size_t> normal;
  for (std::size_t n : graph.normal_forms()) normal.insert(n);
  for (std::size_t i = 0; i < all.size(); ++i) {
    out << "  n" << i << " [label=\"" << dot_escape(format(all[i].entry))
        << "\"";
    if (normal.contains(i)) out << ", peripheries=2";
    out << "];\n";
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& e : all[i].edges)
      out << "  n" << i << " -> n" << e.target << " [label=\""
          << to_string(e.rule) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace psi
