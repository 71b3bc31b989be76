#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zdposet/index_set.hpp"
#include "zdposet/poset.hpp"

namespace zdp {

/// [x]: the zero-divisors sharing one annihilator.
struct AnnClass {
  ElementId representative = 0; ///< smallest member index
  ElementSet members;
  IdealSet ann;

  bool operator==(const AnnClass &) const = default;
};

/// A vertex is either one zero-divisor or one annihilator class.
using VertexTag = std::variant<ElementId, AnnClass>;

/// Simple undirected graph on at most 64 vertices.
class ZdGraph {
public:
  ZdGraph() = default;
  /// Throws InvalidGraphError unless `adjacency` is symmetric with an empty
  /// diagonal and sized like `vertices`.
  ZdGraph(std::vector<VertexTag> vertices, std::vector<VertexSet> adjacency);

  /// Graph on n element-vertices tagged 0..n-1.
  static ZdGraph from_edges(std::size_t n, const std::vector<std::pair<VertexId, VertexId>> &edges);
  static ZdGraph complete(std::size_t n);

  std::size_t size() const { return vertices_.size(); }
  std::size_t edge_count() const;
  const std::vector<VertexTag> &vertices() const { return vertices_; }
  const VertexTag &vertex(VertexId v) const { return vertices_.at(v); }
  VertexSet all() const { return VertexSet::first(size()); }
  VertexSet neighbors(VertexId v) const { return adjacency_.at(v); }
  bool adjacent(VertexId u, VertexId v) const { return adjacency_.at(u).contains(v); }

  bool operator==(const ZdGraph &) const = default;

private:
  std::vector<VertexTag> vertices_;
  std::vector<VertexSet> adjacency_;
};

/// nullopt stands for infinity.
using Length = std::optional<std::size_t>;

/// Γ(P): vertices Z(P)^x in index order, x–y iff L(x,y) = {0}.
ZdGraph gamma(const Poset &p);
/// Z(P)^x partitioned by annihilator, ordered by representative.
std::vector<AnnClass> ann_classes(const Poset &p);
/// Γ_E(P): one vertex per annihilator class, adjacency via representatives.
ZdGraph gamma_e(const Poset &p);

Length distance(const ZdGraph &g, VertexId u, VertexId v);
/// Throws TooFewVerticesError below two vertices.
Length diameter(const ZdGraph &g);
Length girth(const ZdGraph &g);
std::size_t clique_number(const ZdGraph &g);
/// One maximum clique (the first one found).
VertexSet maximum_clique(const ZdGraph &g);
std::size_t degree(const ZdGraph &g, VertexId v);
VertexSet neighborhood(const ZdGraph &g, VertexId v);
bool is_connected(const ZdGraph &g);

struct ShapeReport {
  bool is_complete = false;
  bool is_star = false;
  bool is_regular = false;
  bool is_cycle = false;
  /// Parts ordered by smallest vertex; present iff the graph is complete
  /// multipartite with at least two parts.
  std::optional<std::vector<VertexSet>> complete_multipartite;
};
ShapeReport classify_shape(const ZdGraph &g);

/// Quotient of g by equal neighborhoods. Element-vertices merge into an
/// AnnClass whose ann is {0} plus the neighbors' elements.
ZdGraph reduce_graph(const ZdGraph &g);

/// Graphviz text; element-vertices are labelled by their label, class
/// vertices as `[repr]{members}`.
std::string to_dot(const Poset &p, const ZdGraph &g, const std::string &name);

/// Display label of a vertex (same text as the DOT label).
std::string vertex_label(const Poset &p, const VertexTag &tag);

} // namespace zdp
