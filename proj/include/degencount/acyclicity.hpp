#pragma once

#include <degencount/pattern.hpp>

#include <json.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace degencount {

/// Acyclic orientation of a small pattern, as out- and in-neighbour masks.
class PatternDag {
public:
    PatternDag() = default;
    explicit PatternDag(std::size_t n) : n_(n) {}

    /// Throws GraphError if the arcs contain a directed cycle.
    static PatternDag from_arcs(std::size_t n, std::span<const Edge> arcs);

    std::size_t num_vertices() const { return n_; }
    VertexMask out(std::size_t v) const { return out_[v]; }
    VertexMask in(std::size_t v) const { return in_[v]; }
    bool has_arc(std::size_t u, std::size_t v) const { return (out_[u] >> v) & 1u; }
    void add_arc(std::size_t u, std::size_t v);

    VertexMask sources() const;
    /// Vertices reachable from v, v included.
    VertexMask reach(std::size_t v) const;
    /// Kahn order with smallest-id tie-breaking; empty if cyclic.
    std::vector<std::size_t> topological_order() const;
    bool is_acyclic() const;
    Pattern underlying() const;
    std::vector<Edge> arcs() const;

private:
    std::size_t n_ = 0;
    std::array<VertexMask, kPatternHardMax> out_{};
    std::array<VertexMask, kPatternHardMax> in_{};
};

/// Every acyclic orientation of h, labelled (no isomorphism reduction). The
/// order matches filtering orientation masks 0..2^e-1, where bit i set
/// reverses the i-th edge of h.edges().
std::vector<PatternDag> acyclic_orientations(const Pattern & h, const PatternLimits & limits = {});

struct Hypergraph {
    std::size_t num_vertices = 0;
    std::vector<VertexMask> edges;
};

/// Tree on hyperedge indices 0..k-1.
struct JoinTree {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// One hyperedge R(u) per source u, sources in increasing order. Sources with
/// equal reach sets give duplicate hyperedges; they are kept.
Hypergraph reachability_hypergraph(const PatternDag & d);

/// GYO reduction alone.
bool gyo_reduces(const Hypergraph & f);

bool has_running_intersection(const Hypergraph & f, const JoinTree & t);

struct AlphaAcyclicity {
    bool acyclic = false;
    std::optional<JoinTree> tree;
};

/// GYO decides; on acceptance a maximum-weight spanning tree on intersection
/// sizes is built and checked for running intersection. A failed check
/// throws ContractViolation.
AlphaAcyclicity is_alpha_acyclic_hypergraph(const Hypergraph & f);

struct Obstruction {
    VertexMask subset = 0;
    /// 1: the traces on subset form a single cycle; 2: every
    /// (|subset|-1)-subset is a trace and no edge covers subset.
    int condition = 0;
};

/// Exhaustive search over vertex subsets of size >= 3 in order of (size,
/// mask). Returns the first obstruction found.
std::optional<Obstruction> obstruction_oracle(const Hypergraph & f, std::size_t max_vertices = 12);

/// An induced cycle of length >= min_length, vertices in cycle order starting
/// at its smallest vertex.
std::optional<std::vector<std::size_t>> find_induced_cycle(const Pattern & h, std::size_t min_length = 6);

enum class AcyclicityMethod { orientations, induced_cycles, both };

/// With method `both`, disagreement between the two deciders throws
/// ContractViolation.
bool is_alpha_acyclic_graph(const Pattern & h, AcyclicityMethod method = AcyclicityMethod::induced_cycles,
                            const PatternLimits & limits = {});

struct QuotientWitness {
    Partition partition;
    /// Cycle in quotient vertices (block indices).
    std::vector<std::size_t> cycle;
};

struct Classification {
    bool hom_easy = false;
    bool inj_easy = false;
    bool ind_easy = false;
    std::optional<std::vector<std::size_t>> hom_witness;
    std::optional<QuotientWitness> inj_witness;
    std::optional<VertexMask> ind_witness;
};

Classification classify(const Pattern & h, const PatternLimits & limits = {});

/// Canonical keys of the spanning subgraphs of C6, one per isomorphism class.
const std::vector<CanonicalKey> & c6_spanning_subgraph_keys();

/// {hom_easy, inj_easy, ind_easy, witnesses}; witness vertices are reported
/// through `labels`.
nlohmann::json to_json(const Classification & c, const std::vector<std::uint64_t> & labels);

} // namespace degencount
