#pragma once

#include <degencount/acyclicity.hpp>
#include <degencount/bigint.hpp>
#include <degencount/graph.hpp>
#include <degencount/pattern.hpp>

#include <cstdint>

namespace degencount {

/// The brute-force counters examine candidate images one at a time; the
/// guard caps the number examined rather than n^v(h), so sparse hosts with
/// many vertices stay in reach.
struct OracleLimits {
    std::uint64_t max_steps = 2'000'000'000;
};

BigInt brute_hom(const Pattern & h, const Graph & g, const OracleLimits & limits = {});
BigInt brute_inj(const Pattern & h, const Graph & g, const OracleLimits & limits = {});
BigInt brute_ind(const Pattern & h, const Graph & g, const OracleLimits & limits = {});
/// Arc-preserving maps of an oriented pattern into an oriented host.
BigInt brute_directed_hom(const PatternDag & hdir, const OrientedGraph & gdir, const OracleLimits & limits = {});

} // namespace degencount
