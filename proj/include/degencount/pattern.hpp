#pragma once

#include <degencount/bigint.hpp>
#include <degencount/graph.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace degencount {

/// Patterns are stored as bitmask adjacency rows, so 32 vertices is a hard
/// ceiling independent of the configurable caps below.
inline constexpr std::size_t kPatternHardMax = 32;

using VertexMask = std::uint32_t;

struct PatternLimits {
    std::size_t max_vertices = 10;
    std::size_t max_supergraph_nonedges = 20;
    std::size_t max_orientation_edges = 25;
};

class Pattern {
public:
    Pattern() = default;
    explicit Pattern(std::size_t n);

    static Pattern from_edges(std::size_t n, std::span<const Edge> edges);
    static Pattern from_graph(const Graph & g);

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const;
    VertexMask neighbors(std::size_t v) const { return adj_[v]; }
    std::size_t degree(std::size_t v) const;
    bool has_edge(std::size_t u, std::size_t v) const { return (adj_[u] >> v) & 1u; }
    VertexMask all_vertices() const { return n_ == 32 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1; }

    void add_edge(std::size_t u, std::size_t v);
    void remove_edge(std::size_t u, std::size_t v);

    std::vector<Edge> edges() const;
    std::vector<Edge> non_edges() const;
    Graph to_graph() const;

    /// Subgraph induced by `mask`, vertices renumbered in increasing order.
    Pattern induced(VertexMask mask) const;
    /// Relabels vertex v to perm[v].
    Pattern permuted(std::span<const std::size_t> perm) const;

    bool is_connected() const;
    bool is_forest() const;
    std::vector<VertexMask> components() const;

    friend bool operator==(const Pattern & a, const Pattern & b) = default;

private:
    std::size_t n_ = 0;
    std::array<VertexMask, kPatternHardMax> adj_{};
};

/// Throws GuardExceeded when v(h) exceeds the cap.
void check_pattern_size(const Pattern & h, std::size_t cap);

/// A pattern together with the labels it was written with, so witnesses can
/// be reported in the user's vertex names.
struct NamedPattern {
    Pattern pattern;
    std::vector<std::uint64_t> labels;
    std::string name;
};

/// Builtin names "C<k>", "P<k>", "K<k>", "K<a>,<b>", "star<k>", "C'<k>",
/// edge-list literals "0-1,1-2" (optionally prefixed "n:" to fix the vertex
/// count) and "@path" for an edge-list file.
NamedPattern parse_pattern(const std::string & spec);

Pattern cycle_pattern(std::size_t k);
/// Path on k vertices.
Pattern path_pattern(std::size_t k);
Pattern complete_pattern(std::size_t k);
Pattern complete_bipartite_pattern(std::size_t a, std::size_t b);
/// K_{1,k}.
Pattern star_pattern(std::size_t k);
/// C_k with one pendant vertex attached to vertex 0.
Pattern pendant_cycle_pattern(std::size_t k);
Pattern empty_pattern(std::size_t n);

/// Set partition of {0..n-1}. Blocks are vertex masks ordered by their
/// smallest element.
class Partition {
public:
    Partition() = default;
    Partition(std::size_t n, std::vector<VertexMask> blocks);
    static Partition singletons(std::size_t n);
    static Partition from_labels(std::span<const std::uint8_t> labels);

    std::size_t ground_size() const { return n_; }
    std::size_t num_blocks() const { return blocks_.size(); }
    const std::vector<VertexMask> & blocks() const { return blocks_; }
    /// Block index of each vertex.
    std::vector<std::uint8_t> labels() const;

    friend bool operator==(const Partition & a, const Partition & b) = default;
    friend bool operator<(const Partition & a, const Partition & b) { return a.blocks_ < b.blocks_; }

private:
    std::size_t n_ = 0;
    std::vector<VertexMask> blocks_;
};

struct PartitionHash {
    std::size_t operator()(const Partition & p) const;
};

/// All partitions of V(h), in lexicographic order of restricted-growth strings.
std::vector<Partition> enumerate_partitions(const Pattern & h, std::size_t cap = PatternLimits{}.max_vertices);
std::vector<Partition> enumerate_partitions(std::size_t n);
/// Streams the partitions of {0..n-1} in the same order without storing them.
void for_each_partition(std::size_t n, const std::function<void(const Partition &)> & fn);

struct QuotientResult {
    /// Loop-free skeleton. When has_loop is set, hom into any simple graph is 0.
    Pattern graph;
    bool has_loop = false;
};

/// Block i of p becomes vertex i of the quotient.
QuotientResult quotient(const Pattern & h, const Partition & p);

/// True iff every block of p lies inside a block of q.
bool refines(const Partition & p, const Partition & q);

/// Partition of the quotient's vertex set induced by q, where p refines q.
Partition relative_partition(const Partition & p, const Partition & q);

/// mu(P0, p) = (-1)^(n - |p|) * prod (|U| - 1)!.
std::int64_t mobius_partition(const Partition & p);

/// Möbius function of a finite poset computed from mu(x,x)=1 and
/// sum_{x<=z<=y} mu(x,z) = 0. Quadratic memory, cubic time.
class MobiusTable {
public:
    std::size_t size() const { return n_; }
    /// mu(i, j) for i <= j, 0 for incomparable or reversed pairs.
    std::int64_t mu(std::size_t i, std::size_t j) const { return mu_[i * n_ + j]; }
    bool leq(std::size_t i, std::size_t j) const { return leq_[i * n_ + j]; }

private:
    friend MobiusTable poset_mobius(std::size_t, const std::function<bool(std::size_t, std::size_t)> &);
    std::size_t n_ = 0;
    std::vector<std::int64_t> mu_;
    std::vector<char> leq_;
};

/// Elements are 0..n-1. Throws GraphError if `leq` is not reflexive,
/// antisymmetric and transitive.
MobiusTable poset_mobius(std::size_t n, const std::function<bool(std::size_t, std::size_t)> & leq);

/// mu(from, q) for every q >= from in a family of partitions under
/// refinement, using the same recursion but only enumerating the
/// refinements of each q. Suited to large families where the full table is
/// out of reach. Entries for q not above `from` are absent.
std::unordered_map<Partition, std::int64_t, PartitionHash> restricted_partition_mobius(
    const std::vector<Partition> & family, const Partition & from);

struct Supergraph {
    Pattern graph;
    std::size_t added = 0;
};

/// All H u E for E a subset of the non-edges, in increasing order of the
/// subset's bitmask over non_edges().
std::vector<Supergraph> enumerate_supergraphs(const Pattern & h, const PatternLimits & limits = {});

/// Isomorphism-invariant encoding: two patterns are isomorphic iff their
/// keys are equal.
using CanonicalKey = std::string;

struct CanonicalForm {
    CanonicalKey key;
    /// perm[v] is the position of v in the canonical labelling.
    std::vector<std::size_t> perm;
};

CanonicalForm canonical_form(const Pattern & h);
CanonicalKey canonical_key(const Pattern & h);
Pattern canonical_pattern(const Pattern & h);
bool isomorphic(const Pattern & a, const Pattern & b);

BigInt count_automorphisms(const Pattern & h);

/// Every graph on exactly n vertices up to isomorphism, in canonical form.
std::vector<Pattern> all_graphs_up_to_iso(std::size_t n);

std::string describe(const Pattern & h);

} // namespace degencount
