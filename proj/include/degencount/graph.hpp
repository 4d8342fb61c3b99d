#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace degencount {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph in compressed adjacency form. Neighbour lists are
/// sorted; every edge is stored in both endpoint lists. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on `n` vertices. Duplicate edges (in either direction)
    /// are collapsed; a self-loop or an endpoint >= n throws GraphError.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t num_edges() const { return adjacency_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const
    {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    std::size_t max_degree() const;
    bool has_edge(Vertex u, Vertex v) const;

    /// Each edge once, as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    /// Original vertex labels from ingestion; identity labels for graphs built
    /// in code.
    const std::vector<std::uint64_t> & labels() const { return labels_; }
    void set_labels(std::vector<std::uint64_t> labels);

    friend bool operator==(const Graph & a, const Graph & b)
    {
        return a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_;
    }

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
    std::vector<std::uint64_t> labels_;
};

/// Reads the whitespace-separated edge-list format: one "u v" pair per line,
/// "v <id>" declares a vertex, blank lines and '#' comments are ignored.
/// Vertices are relabelled 0..n-1 in order of first appearance.
Graph load_graph(std::istream & in);
Graph load_graph_file(const std::string & path);
Graph parse_graph(const std::string & text);

/// Writes `g` in the same format, using its original labels. Every vertex is
/// declared first so isolated vertices and the vertex order survive.
void write_edge_list(const Graph & g, std::ostream & out);

/// A vertex elimination order witnessing degeneracy `kappa`: every vertex has
/// at most `kappa` neighbours later in `order`.
struct DegeneracyOrder {
    std::vector<Vertex> order;
    std::size_t kappa = 0;

    /// position[v] is the index of v in `order`.
    std::vector<std::size_t> positions() const;
};

/// Greedy minimum-degree peel with a bucket queue, O(n + m).
DegeneracyOrder degeneracy_order(const Graph & g);

/// Same peel with ties broken by smallest `priority[v]` instead of id, which
/// yields other valid degeneracy orders of the same graph.
DegeneracyOrder degeneracy_order(const Graph & g, std::span<const std::uint32_t> priority);

/// Acyclic digraph in compressed out-adjacency form (sorted out-lists).
class OrientedGraph {
public:
    OrientedGraph() = default;

    /// Throws GraphError on out-of-range endpoints, self-loops, or (when
    /// `require_acyclic`) a directed cycle. Parallel arcs are collapsed.
    static OrientedGraph from_arcs(std::size_t n, std::span<const Edge> arcs, bool require_acyclic = true);

    std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t num_arcs() const { return targets_.size(); }
    std::span<const Vertex> out_neighbors(Vertex v) const
    {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::size_t out_degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    std::size_t max_out_degree() const { return max_out_degree_; }
    bool has_arc(Vertex u, Vertex v) const;
    std::vector<Edge> arcs() const;
    std::vector<std::size_t> in_degrees() const;

    /// Kahn's algorithm; independent of how the graph was built.
    bool is_acyclic() const;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
    std::size_t max_out_degree_ = 0;
};

/// Orients each edge from the earlier to the later vertex of `order`.
OrientedGraph orient_by_degeneracy(const Graph & g, const DegeneracyOrder & order);

/// Categorical (tensor) product: (a,b) ~ (c,d) iff a~c and b~d. Vertex (a,b)
/// gets id a * n2 + b. Throws GuardExceeded when n1 * n2 > max_vertices.
Graph tensor_product(const Graph & g1, const Graph & g2, std::size_t max_vertices = std::size_t{1} << 28);

/// g joined with a clique of size h: the new vertices n..n+h-1 are pairwise
/// adjacent and adjacent to every old vertex.
Graph join_with_clique(const Graph & g, std::size_t h);

/// Length of a shortest cycle, 0 for forests.
std::size_t girth(const Graph & g);

} // namespace degencount
