#pragma once

#include <degencount/bigint.hpp>
#include <degencount/graph.hpp>
#include <degencount/hom_engine.hpp>
#include <degencount/oracle.hpp>
#include <degencount/pattern.hpp>
#include <degencount/pipelines.hpp>

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace degencount {

/// Every edge becomes a path of length ell (ell - 1 new vertices per edge,
/// appended in edge order).
Graph subdivide_edges(const Graph & f, std::size_t ell);

/// Every edge {x,y} becomes two internally disjoint x-y paths of lengths p
/// and q. A length-1 path is the original edge; p = q = 1 is rejected.
Graph parallel_paths(const Graph & f, std::size_t p, std::size_t q);

enum class GadgetSuite { k0mod3, k7, k5, k4, k4mod6, k2mod6, c8_system };

GadgetSuite parse_suite(const std::string & name);
std::string to_string(GadgetSuite s);

struct IdentityResult {
    std::string name;
    BigInt lhs;
    BigInt rhs;
    bool pass = false;
};

struct GraphSize {
    std::string name;
    std::size_t vertices = 0;
    std::size_t edges = 0;
};

struct GadgetReport {
    std::string construction;
    std::vector<GraphSize> graphs;
    std::vector<IdentityResult> identities;

    bool all_pass() const;
    const IdentityResult * find(const std::string & name) const;
    nlohmann::json to_json() const;
};

struct GadgetOptions {
    OracleLimits oracle;
    std::size_t max_input_vertices = 10;
    /// Re-evaluates the alpha-acyclic hom terms with the fast engine and
    /// reports agreement as extra identities.
    bool engine_recheck = true;
    /// Subdivision lengths for the k0mod3 suite.
    std::vector<std::size_t> ells{2, 3};
};

/// Builds the suite's gadget graphs from f and evaluates both sides of each
/// identity with the brute-force oracle.
GadgetReport verify_gadget_identities(const Graph & f, GadgetSuite suite, const GadgetOptions & options = {});

/// Partitions P of V(C_k) whose quotient is P0 itself, a simple forest, or
/// (when with_short_cycles) isomorphic to C'_{k-2} or C_{k-2}.
struct RestrictedCycleFamily {
    std::size_t k = 0;
    std::vector<Partition> members;
    std::vector<Partition> pendant;  // quotient ~ C'_{k-2}
    std::vector<Partition> short_cycle;  // quotient ~ C_{k-2}
};

RestrictedCycleFamily restricted_cycle_family(std::size_t k, bool with_short_cycles);

/// sum_{Q in family} mu(P0, Q) * hom(C_k/Q, .), like terms merged.
LinearCombination restricted_inversion(const RestrictedCycleFamily & family);

/// sum over Q outside {P0} u pendant u short_cycle of c_Q * hom(C_k/Q, .),
/// where c_Q sums mu(P, Q) over P in {P0} u pendant u short_cycle, P <= Q.
LinearCombination forest_correction(const RestrictedCycleFamily & family);

struct QuotientClass {
    Pattern pattern;
    std::size_t partitions = 0;
};

struct QuotientCensus {
    std::size_t k = 0;
    std::size_t partitions = 0;
    std::size_t loop_quotients = 0;
    std::vector<QuotientClass> simple_classes;
    std::size_t pendant_count = 0;       // quotient ~ C'_{k-2}
    std::size_t short_cycle_count = 0;   // quotient ~ C_{k-2}
    std::size_t one_shorter_count = 0;   // quotient ~ C_{k-1}
    bool refinement_two_and_two = false;
    /// For even k and each odd l < k, the number of partitions whose quotient
    /// has exactly one odd cycle, of length l. Zero is expected for l > k/2.
    std::map<std::size_t, std::size_t> unicyclic_odd;

    bool lemmas_hold() const;
    nlohmann::json to_json() const;
};

QuotientCensus quotient_census(std::size_t k);

/// Evaluates a linear combination of hom counts on a host. The disentangler
/// treats it as a black box.
using LcEvaluator = std::function<BigInt(const LinearCombination &, const Graph &)>;

struct DisentangleOptions {
    std::uint64_t seed = 0x5eed'2024;
    std::size_t budget_per_row = 10'000;
    HomOptions hom;
};

struct DisentangleResult {
    /// hom(H_j, g) aligned with lc.terms().
    std::vector<BigInt> homs;
    std::vector<Graph> helpers;
    std::vector<BigInt> b;
    std::vector<std::vector<BigInt>> matrix;
    std::size_t candidates_tried = 0;
};

/// Finds helper graphs F_i with M_ij = c_j hom(H_j, F_i) invertible, queries
/// b_i = evaluator(lc, F_i x g) and solves M x = b exactly.
DisentangleResult disentangle_linear_combination(const LinearCombination & lc, const Graph & g,
                                                 const LcEvaluator & evaluator, const DisentangleOptions & options = {});

/// Default evaluator: sum of c_j * hom_count(H_j, host).
LcEvaluator default_lc_evaluator(const HomOptions & options = {});

/// hom(h, K_q), by summing falling factorials over loop-free quotients.
BigInt hom_into_complete(const Pattern & h, std::size_t q);

struct RecoveredHom {
    Pattern pattern;
    BigInt coefficient;
    BigInt hom;
};

/// hom(H_i, g) for every induced subgraph class H_i of h (including the empty
/// graph), using only hom(h, .) evaluations on clique joins of tensor
/// products.
std::vector<RecoveredHom> recover_induced_subgraph_homs(
    const Pattern & h, const Graph & g, const std::function<BigInt(const Pattern &, const Graph &)> & hom_evaluator,
    const DisentangleOptions & options = {});

} // namespace degencount
