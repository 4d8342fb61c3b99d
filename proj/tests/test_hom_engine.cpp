#include <doctest.h>

#include <degencount/errors.hpp>
#include <degencount/generators.hpp>
#include <degencount/hom_engine.hpp>

#include "naive.hpp"

#include <set>

using namespace degencount;

namespace {

PatternDag arc_dag()
{
    PatternDag d(2);
    d.add_arc(0, 1);
    return d;
}

PatternDag transitive(std::size_t n)
{
    PatternDag d(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            d.add_arc(i, j);
    return d;
}

OrientedGraph transitive_host(std::size_t n)
{
    std::vector<Edge> arcs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            arcs.emplace_back(i, j);
    return OrientedGraph::from_arcs(n, arcs);
}

BigInt sum_degree_squares(const Graph & g)
{
    BigInt s = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        s += BigInt(g.degree(v)) * g.degree(v);
    return s;
}

} // namespace

TEST_CASE("materialized source relations")
{
    std::vector<Edge> path{{0, 1}, {1, 2}};
    auto host = OrientedGraph::from_arcs(3, path);
    auto r = materialize_source_relation(arc_dag(), 0, host);
    CHECK(r.width() == 2);
    REQUIRE(r.size() == 2);
    std::set<std::vector<Vertex>> rows;
    for (std::size_t i = 0; i < r.size(); ++i) {
        rows.emplace(r.row(i).begin(), r.row(i).end());
        CHECK(r.mult[i] == 1);
    }
    CHECK(rows == std::set<std::vector<Vertex>>{{0, 1}, {1, 2}});

    auto none = materialize_source_relation(arc_dag(), 0, OrientedGraph::from_arcs(4, {}));
    CHECK(none.size() == 0);

    CHECK(materialize_source_relation(transitive(3), 0, transitive_host(4)).size() == 4);
}

TEST_CASE("directed hom counts")
{
    Rng rng(21);
    auto g = random_gnp(12, 0.4, rng);
    auto gdir = orient_by_degeneracy(g, degeneracy_order(g));
    CHECK(directed_hom_count(arc_dag(), gdir) == gdir.num_arcs());

    auto k3 = complete_graph(3);
    auto k3dir = orient_by_degeneracy(k3, degeneracy_order(k3));
    BigInt total = 0;
    for (const auto & d : acyclic_orientations(complete_pattern(3)))
        total += directed_hom_count(d, k3dir);
    CHECK(total == 6);

    for (int i = 0; i < 40; ++i) {
        auto h = random_pattern(2 + i % 4, 0.5, rng);
        auto host = random_gnp(10, 0.4, rng);
        auto hdir = orient_by_degeneracy(host, degeneracy_order(host));
        for (const auto & d : acyclic_orientations(h))
            CHECK(directed_hom_count(d, hdir) == brute_directed_hom(d, hdir));
    }

    PatternDag alt(6);
    for (std::size_t i = 0; i < 6; i += 2) {
        alt.add_arc(i, (i + 1) % 6);
        alt.add_arc(i, (i + 5) % 6);
    }
    CHECK_THROWS_AS(directed_hom_count(alt, gdir), GraphError);
}

TEST_CASE("alpha-acyclic engine examples")
{
    Rng rng(8);
    auto g = random_gnp(30, 0.2, rng);
    CHECK(hom_count_alpha_acyclic(complete_pattern(2), g) == 2 * g.num_edges());
    CHECK(hom_count_alpha_acyclic(cycle_pattern(5), cycle_graph(5)) == 10);
    CHECK(hom_count_alpha_acyclic(complete_pattern(3), cycle_graph(8)) == 0);
    CHECK(hom_count_alpha_acyclic(complete_pattern(3), random_tree(40, rng)) == 0);
    CHECK_THROWS_AS(hom_count_alpha_acyclic(cycle_pattern(6), g), GraphError);
    CHECK(hom_count_alpha_acyclic(cycle_pattern(3), Graph{}) == 0);
    CHECK(hom_count_alpha_acyclic(empty_pattern(0), g) == 1);
}

TEST_CASE("alpha-acyclic engine matches the oracle")
{
    Rng rng(1234);
    std::size_t tested = 0;
    for (int i = 0; i < 150; ++i) {
        auto h = random_pattern(1 + i % 6, 0.3 + 0.1 * (i % 5), rng);
        if (! is_alpha_acyclic_graph(h))
            continue;
        auto g = i % 3 ? random_gnp(11, 0.35, rng) : random_degenerate(12, 2, rng);
        CHECK(hom_count_alpha_acyclic(h, g) == naive::hom(h, g));
        ++tested;
    }
    CHECK(tested > 100);
    for (std::size_t k = 3; k <= 5; ++k) {
        auto g = random_gnp(12, 0.5, rng);
        CHECK(hom_count_alpha_acyclic(cycle_pattern(k), g) == brute_hom(cycle_pattern(k), g));
    }
}

TEST_CASE("result does not depend on the degeneracy order")
{
    Rng rng(55);
    const Pattern patterns[] = {cycle_pattern(5), cycle_pattern(4), complete_pattern(4), pendant_cycle_pattern(3),
                                complete_bipartite_pattern(2, 3)};
    for (int i = 0; i < 10; ++i) {
        auto g = random_degenerate(40, 3, rng);
        for (const auto & h : patterns) {
            auto base = hom_count_alpha_acyclic(h, g);
            for (int t = 0; t < 5; ++t) {
                std::vector<std::uint32_t> priority(g.num_vertices());
                for (auto & p : priority)
                    p = static_cast<std::uint32_t>(rng());
                HostCache host(g, degeneracy_order(g, priority));
                CHECK(hom_count_alpha_acyclic(h, host) == base);
            }
        }
    }
}

TEST_CASE("hom is multiplicative over components")
{
    Rng rng(66);
    for (int i = 0; i < 20; ++i) {
        auto g = random_gnp(12, 0.4, rng);
        Pattern both(7);
        for (auto [u, v] : cycle_pattern(4).edges())
            both.add_edge(u, v);
        for (auto [u, v] : complete_pattern(3).edges())
            both.add_edge(u + 4, v + 4);
        CHECK(hom_count_alpha_acyclic(both, g) ==
              hom_count_alpha_acyclic(cycle_pattern(4), g) * hom_count_alpha_acyclic(complete_pattern(3), g));
    }
}

TEST_CASE("forest engine")
{
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        auto g = random_gnp(25, 0.2, rng);
        CHECK(forest_hom_count(path_pattern(3), g) == sum_degree_squares(g));
        CHECK(forest_hom_count(empty_pattern(1), g) == g.num_vertices());
        Pattern matching(4);
        matching.add_edge(0, 1);
        matching.add_edge(2, 3);
        BigInt twice_m = 2 * g.num_edges();
        CHECK(forest_hom_count(matching, g) == twice_m * twice_m);
    }
    CHECK_THROWS_AS(forest_hom_count(cycle_pattern(3), complete_graph(3)), GraphError);
    CHECK(forest_hom_count(empty_pattern(0), complete_graph(3)) == 1);

    for (int i = 0; i < 30; ++i) {
        auto f = random_forest_pattern(1 + i % 6, rng);
        auto small = random_gnp(8, 0.4, rng);
        CHECK(forest_hom_count(f, small) == naive::hom(f, small));
        auto g = random_degenerate(60, 1 + i % 3, rng);
        CHECK(forest_hom_count(f, g) == hom_count_alpha_acyclic(f, g));
    }
}

TEST_CASE("large counts promote past 64 bits")
{
    auto k = complete_graph(40);
    // hom(star_k, K_n) = n (n-1)^k
    BigInt expected = 40;
    for (int i = 0; i < 12; ++i)
        expected *= 39;
    CHECK(forest_hom_count(star_pattern(12), k) == expected);
    CHECK(expected > BigInt(std::numeric_limits<std::uint64_t>::max()));
    BigInt k4 = BigInt(40) * 39 * 38 * 37;
    CHECK(hom_count_alpha_acyclic(complete_pattern(4), k) == k4);
}

TEST_CASE("dispatch")
{
    Rng rng(17);
    auto g = random_gnp(10, 0.4, rng);

    auto p5 = hom_count(path_pattern(5), g);
    CHECK(p5.path == DispatchPath::forest);
    CHECK_FALSE(p5.warning);
    CHECK(p5.value == naive::hom(path_pattern(5), g));

    auto c4 = hom_count(cycle_pattern(4), g);
    CHECK(c4.path == DispatchPath::alpha_acyclic);
    CHECK(c4.orientations == 14);
    CHECK(c4.value == naive::hom(cycle_pattern(4), g));

    auto c6 = hom_count(cycle_pattern(6), g);
    CHECK(c6.path == DispatchPath::oracle_fallback);
    REQUIRE(c6.warning);
    CHECK(c6.warning->find("exponential") != std::string::npos);
    CHECK(c6.value == naive::hom(cycle_pattern(6), g));

    HomOptions forced;
    forced.policy = HomPolicy::force_oracle;
    auto c5 = hom_count(cycle_pattern(5), g, forced);
    CHECK(c5.path == DispatchPath::oracle);
    CHECK(c5.value == hom_count(cycle_pattern(5), g).value);

    CHECK(plan_hom(path_pattern(5)) == DispatchPath::forest);
    CHECK(plan_hom(complete_pattern(4)) == DispatchPath::alpha_acyclic);
    CHECK(plan_hom(cycle_pattern(7)) == DispatchPath::oracle_fallback);
    CHECK(to_string(DispatchPath::alpha_acyclic) == "alpha-acyclic");
}
