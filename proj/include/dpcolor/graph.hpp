#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dpcolor {

class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// One record per adjacent pair, u < v.
struct EdgeRecord {
  int u = 0;
  int v = 0;
  int multiplicity = 1;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// Loopless multigraph on vertices 0..n-1. Records are kept sorted by (u, v)
/// with at most one record per unordered pair.
class Multigraph {
public:
  Multigraph() = default;
  explicit Multigraph(int n);
  Multigraph(int n, const std::vector<std::pair<int, int>>& edges);

  /// Adds `count` parallel edges between u and v.
  void add_edge(int u, int v, int count = 1);

  int vertex_count() const { return n_; }
  /// m: total number of edges counted with multiplicity.
  int edge_count() const;
  /// Number of adjacent pairs (edges of the underlying simple graph).
  int pair_count() const { return static_cast<int>(edges_.size()); }
  int max_multiplicity() const;
  bool is_simple() const;
  bool is_connected() const;
  int multiplicity(int u, int v) const;
  /// Index of the record for {u, v}, if adjacent.
  std::optional<int> edge_index(int u, int v) const;

  const std::vector<EdgeRecord>& edges() const { return edges_; }
  std::vector<std::vector<int>> adjacency() const;

  /// Connected components, each a sorted vertex list, ordered by smallest vertex.
  std::vector<std::vector<int>> components() const;
  /// Subgraph induced on `vertices`, relabelled in the given order.
  Multigraph induced(const std::vector<int>& vertices) const;
  /// Underlying simple graph.
  Multigraph underlying() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
  int n_ = 0;
  std::vector<EdgeRecord> edges_;
};

/// An oriented copy of every record of a multigraph: arcs[i] orients edges()[i].
struct Arc {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Orientation {
  std::vector<Arc> arcs;
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

/// Every edge oriented from the lower to the higher index.
Orientation canonical_orientation(const Multigraph& g);

/// Rooted spanning tree of a connected graph, given as indices into
/// Multigraph::edges().
struct SpanningTree {
  std::vector<int> edge_indices;   // sorted
  std::vector<int> parent;         // parent[root] == -1
  std::vector<int> parent_edge;    // record index joining v to its parent, -1 at the root
  std::vector<int> order;          // BFS visitation order, root first

  bool contains(int edge_index) const;
};

/// BFS tree from vertex 0, neighbours in increasing order.
SpanningTree spanning_tree(const Multigraph& g);

/// Tree made from explicit pairs; validated to be a spanning tree of g.
/// Its BFS order and parents are computed from vertex 0 inside the tree.
SpanningTree spanning_tree_from_pairs(const Multigraph& g, const std::vector<std::pair<int, int>>& pairs);

/// BFS forest: one tree per component, rooted at its smallest vertex.
SpanningTree spanning_forest(const Multigraph& g);

/// Adds `extra` parallel edges to every edge outside the tree.
Multigraph add_parallel_edges(const Multigraph& g, const SpanningTree& t, int extra);

// Parsers and encoders.
Multigraph parse_graph6(std::string_view text);
std::string encode_graph6(const Multigraph& g);
/// Lines "u v [mult]", 0-based; blank lines and '#' comments are skipped.
Multigraph parse_edge_list(std::string_view text);
std::string encode_edge_list(const Multigraph& g);
/// Comma-separated "u-v" pairs, e.g. "0-1,1-2".
std::vector<std::pair<int, int>> parse_pair_list(std::string_view text);

/// Reads a graph file; graph6 if the first non-empty line looks like graph6,
/// edge list otherwise.
Multigraph parse_graph_auto(std::string_view text);

}  // namespace dpcolor
