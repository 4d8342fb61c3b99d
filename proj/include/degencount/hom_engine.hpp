#pragma once

#include <degencount/acyclicity.hpp>
#include <degencount/bigint.hpp>
#include <degencount/graph.hpp>
#include <degencount/oracle.hpp>
#include <degencount/pattern.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace degencount {

/// Table of partial homomorphisms over `scope` (pattern vertices in a fixed
/// topological order). Row i occupies rows[i*width .. (i+1)*width).
template <typename Count>
struct BasicRelation {
    std::vector<std::size_t> scope;
    std::vector<Vertex> rows;
    std::vector<Count> mult;

    std::size_t width() const { return scope.size(); }
    std::size_t size() const { return mult.size(); }
    std::span<const Vertex> row(std::size_t i) const { return {rows.data() + i * width(), width()}; }
};

using PartialHomRelation = BasicRelation<BigInt>;

/// Host graph with its degeneracy order and orientation, computed on first
/// use and then kept. Forest and oracle counts never trigger the peel.
class HostCache {
public:
    explicit HostCache(const Graph & g);
    HostCache(const Graph & g, DegeneracyOrder order);

    const Graph & graph() const { return *g_; }
    const DegeneracyOrder & order() const;
    const OrientedGraph & oriented() const;

private:
    const Graph * g_;
    mutable std::optional<DegeneracyOrder> order_;
    mutable std::optional<OrientedGraph> oriented_;
};

/// Maps of hdir restricted to R(source) that preserve arcs, multiplicity 1.
PartialHomRelation materialize_source_relation(const PatternDag & hdir, std::size_t source, const OrientedGraph & gdir);

/// Join-tree dynamic program over the reachability hypergraph of hdir. Throws
/// GraphError when that hypergraph is not alpha-acyclic.
BigInt directed_hom_count(const PatternDag & hdir, const OrientedGraph & gdir);

/// Sum of directed_hom_count over all acyclic orientations of h against the
/// degeneracy orientation of the host. Throws GraphError if h has an induced
/// cycle of length >= 6.
BigInt hom_count_alpha_acyclic(const Pattern & h, const Graph & g, const PatternLimits & limits = {});
BigInt hom_count_alpha_acyclic(const Pattern & h, const HostCache & host, const PatternLimits & limits = {});

/// Tree dynamic program for forest patterns; valid on every host.
BigInt forest_hom_count(const Pattern & h, const Graph & g);

enum class HomPolicy { automatic, force_oracle };
enum class DispatchPath { forest, alpha_acyclic, oracle, oracle_fallback };

std::string to_string(DispatchPath p);

struct HomOptions {
    HomPolicy policy = HomPolicy::automatic;
    PatternLimits limits;
    OracleLimits oracle;
};

struct HomResult {
    BigInt value;
    DispatchPath path = DispatchPath::forest;
    std::optional<std::string> warning;
    /// Set when the count used the degeneracy orientation.
    std::optional<std::size_t> kappa;
    std::size_t orientations = 0;
    double seconds = 0;
};

/// Forests go to the tree DP, other alpha-acyclic patterns to the join-tree
/// engine, and everything else to the brute-force oracle with a warning.
HomResult hom_count(const Pattern & h, const Graph & g, const HomOptions & options = {});
HomResult hom_count(const Pattern & h, const HostCache & host, const HomOptions & options = {});

/// The path hom_count would take under automatic policy.
DispatchPath plan_hom(const Pattern & h, const PatternLimits & limits = {});

} // namespace degencount
