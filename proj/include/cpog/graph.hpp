#pragma once

#include "cpog/bigint.hpp"
#include "cpog/group.hpp"
#include "cpog/spectrum.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cpog {

/// Simple undirected graph on the elements of a group, with x ~ y iff
/// gcd(o(x), o(y)) is 1 or a prime. Vertices are in canonical order
/// (identity first), adjacency is a packed symmetric bit matrix with zero
/// diagonal, and degrees[i] counts the true entries of row i.
struct CoprimeOrderGraph {
  GroupSpec spec;
  std::vector<GroupElement> vertices;
  std::vector<std::int64_t> orders;   // orders[i] = o(vertices[i])
  std::vector<std::int64_t> degrees;
  std::int64_t n = 0;

  bool edge(std::int64_t i, std::int64_t j) const {
    return adjacency_[static_cast<std::size_t>(i * n + j)];
  }

  std::vector<bool> adjacency_;  // row-major n*n bits
};

/// Adjacency predicate as a function of the two element orders.
bool adjacent(std::int64_t order_u, std::int64_t order_v);

CoprimeOrderGraph build_graph(const GroupSpec& spec, std::int64_t cap = kDefaultCap);

/// Recounts row i of the adjacency matrix; equals graph.degrees[i].
std::int64_t brute_degree(const CoprimeOrderGraph& graph, std::int64_t i);

/// Laplacian L = D - A: diagonal of degrees, -1 where adjacent, else 0.
template <typename Scalar = BigInt>
DenseMatrix<Scalar> laplacian(const CoprimeOrderGraph& graph) {
  DenseMatrix<Scalar> L(graph.n, graph.n);
  for (std::int64_t i = 0; i < graph.n; ++i)
    for (std::int64_t j = 0; j < graph.n; ++j) {
      if (i == j)
        L(i, j) = Scalar(graph.degrees[static_cast<std::size_t>(i)]);
      else
        L(i, j) = graph.edge(i, j) ? Scalar(-1) : Scalar(0);
    }
  return L;
}

enum class ExportFormat { dot, csv, json };

/// Spectrum attachment for JSON export.
struct SpectrumAnnotation {
  Spectrum closed_form;
  bool certified = false;
};

/// Serializes the graph. DOT: undirected with "element/order" labels.
/// CSV: `source,target` header then zero-based edges with source < target.
/// JSON: {group, order, vertices:[{element, order, degree}], edges:[[i,j]]}
/// plus an optional spectrum object when an annotation is supplied.
std::string export_graph(const CoprimeOrderGraph& graph, ExportFormat format,
                         const std::optional<SpectrumAnnotation>& spectrum = std::nullopt);

}  // namespace cpog
