#include "cpog/graph.hpp"

#include <json.hpp>

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cpog {

bool adjacent(std::int64_t order_u, std::int64_t order_v) {
  if (order_u < 1 || order_v < 1) throw std::domain_error("element orders must be positive");
  std::int64_t g = std::gcd(order_u, order_v);
  return g == 1 || is_prime(g);
}

CoprimeOrderGraph build_graph(const GroupSpec& spec, std::int64_t cap) {
  CoprimeOrderGraph graph;
  graph.spec = spec;
  graph.vertices = enumerate_elements(spec, cap);
  graph.n = static_cast<std::int64_t>(graph.vertices.size());
  graph.orders.reserve(graph.vertices.size());
  for (const GroupElement& g : graph.vertices) graph.orders.push_back(element_order(spec, g));

  // Vertices sorted by order form consecutive runs; adjacency depends only
  // on orders, so one gcd test per run pair fills a whole block.
  std::vector<std::pair<std::int64_t, std::int64_t>> runs;  // (begin, end)
  for (std::int64_t i = 0; i < graph.n;) {
    std::int64_t j = i;
    while (j < graph.n && graph.orders[j] == graph.orders[i]) ++j;
    runs.emplace_back(i, j);
    i = j;
  }

  graph.adjacency_.assign(static_cast<std::size_t>(graph.n) * static_cast<std::size_t>(graph.n), false);
  graph.degrees.assign(static_cast<std::size_t>(graph.n), 0);
  for (std::size_t a = 0; a < runs.size(); ++a) {
    for (std::size_t b = a; b < runs.size(); ++b) {
      if (!adjacent(graph.orders[runs[a].first], graph.orders[runs[b].first])) continue;
      for (std::int64_t i = runs[a].first; i < runs[a].second; ++i)
        for (std::int64_t j = (a == b ? i + 1 : runs[b].first); j < runs[b].second; ++j) {
          graph.adjacency_[static_cast<std::size_t>(i * graph.n + j)] = true;
          graph.adjacency_[static_cast<std::size_t>(j * graph.n + i)] = true;
          graph.degrees[static_cast<std::size_t>(i)]++;
          graph.degrees[static_cast<std::size_t>(j)]++;
        }
    }
  }
  return graph;
}

std::int64_t brute_degree(const CoprimeOrderGraph& graph, std::int64_t i) {
  if (i < 0 || i >= graph.n) throw std::out_of_range("vertex index out of range");
  std::int64_t d = 0;
  for (std::int64_t j = 0; j < graph.n; ++j)
    if (j != i && graph.edge(i, j)) ++d;
  return d;
}

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> edge_list(const CoprimeOrderGraph& graph) {
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (std::int64_t i = 0; i < graph.n; ++i)
    for (std::int64_t j = i + 1; j < graph.n; ++j)
      if (graph.edge(i, j)) edges.emplace_back(i, j);
  return edges;
}

}  // namespace

std::string export_graph(const CoprimeOrderGraph& graph, ExportFormat format,
                         const std::optional<SpectrumAnnotation>& spectrum) {
  switch (format) {
    case ExportFormat::dot: {
      std::ostringstream out;
      out << "graph \"" << render_spec(graph.spec) << "\" {\n";
      for (std::int64_t i = 0; i < graph.n; ++i)
        out << "  v" << i << " [label=\"" << element_label(graph.vertices[static_cast<std::size_t>(i)])
            << "/" << graph.orders[static_cast<std::size_t>(i)] << "\"];\n";
      for (const auto& [i, j] : edge_list(graph)) out << "  v" << i << " -- v" << j << ";\n";
      out << "}\n";
      return out.str();
    }
    case ExportFormat::csv: {
      std::ostringstream out;
      out << "source,target\n";
      for (const auto& [i, j] : edge_list(graph)) out << i << "," << j << "\n";
      return out.str();
    }
    case ExportFormat::json: {
      nlohmann::ordered_json doc;
      doc["group"] = render_spec(graph.spec);
      doc["order"] = graph.n;
      doc["vertices"] = nlohmann::ordered_json::array();
      for (std::int64_t i = 0; i < graph.n; ++i) {
        doc["vertices"].push_back({{"element", element_label(graph.vertices[static_cast<std::size_t>(i)])},
                                   {"order", graph.orders[static_cast<std::size_t>(i)]},
                                   {"degree", graph.degrees[static_cast<std::size_t>(i)]}});
      }
      doc["edges"] = nlohmann::ordered_json::array();
      for (const auto& [i, j] : edge_list(graph)) doc["edges"].push_back({i, j});
      if (spectrum) {
        nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
        for (const auto& [ev, m] : spectrum->closed_form.pairs) pairs.push_back({ev, m});
        doc["spectrum"] = {{"closed_form", pairs}, {"certified", spectrum->certified}};
      }
      return doc.dump(2) + "\n";
    }
  }
  throw std::invalid_argument("unsupported export format");
}

}  // namespace cpog
