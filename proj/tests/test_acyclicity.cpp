#include <doctest.h>

#include <degencount/acyclicity.hpp>
#include <degencount/errors.hpp>
#include <degencount/generators.hpp>

#include "naive.hpp"

#include <bit>

using namespace degencount;

namespace {

VertexMask set_of(std::initializer_list<std::size_t> vs)
{
    VertexMask m = 0;
    for (auto v : vs)
        m |= VertexMask{1} << v;
    return m;
}

// Alternating orientation of C6: even vertices are sources.
PatternDag alternating_c6()
{
    PatternDag d(6);
    for (std::size_t i = 0; i < 6; i += 2) {
        d.add_arc(i, (i + 1) % 6);
        d.add_arc(i, (i + 5) % 6);
    }
    return d;
}

// Some vertex subset of size >= 6 induces a connected 2-regular graph.
bool has_long_induced_cycle(const Pattern & h)
{
    auto n = h.num_vertices();
    for (VertexMask m = 1; m < (VertexMask{1} << n); ++m) {
        if (std::popcount(m) < 6)
            continue;
        auto sub = h.induced(m);
        bool two_regular = true;
        for (std::size_t v = 0; v < sub.num_vertices() && two_regular; ++v)
            two_regular = sub.degree(v) == 2;
        if (two_regular && sub.is_connected())
            return true;
    }
    return false;
}

// H[U] embeds into C6 on the same 6 vertices for some 6-subset U.
bool has_c6_spanning_subgraph(const Pattern & h)
{
    auto n = h.num_vertices();
    auto c6 = cycle_pattern(6);
    for (VertexMask m = 0; m < (VertexMask{1} << n); ++m) {
        if (std::popcount(m) != 6)
            continue;
        auto sub = h.induced(m);
        std::vector<std::size_t> p{0, 1, 2, 3, 4, 5};
        do {
            bool ok = true;
            for (auto [u, v] : sub.edges())
                ok = ok && c6.has_edge(p[u], p[v]);
            if (ok)
                return true;
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return false;
}

std::size_t count_orientations_naive(const Pattern & h)
{
    auto es = h.edges();
    std::size_t count = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << es.size()); ++mask) {
        std::vector<Edge> arcs;
        for (std::size_t i = 0; i < es.size(); ++i)
            arcs.push_back((mask >> i) & 1 ? Edge{es[i].second, es[i].first} : es[i]);
        PatternDag d(h.num_vertices());
        for (auto [u, v] : arcs)
            d.add_arc(u, v);
        count += d.is_acyclic();
    }
    return count;
}

} // namespace

TEST_CASE("acyclic orientation counts")
{
    CHECK(acyclic_orientations(complete_pattern(3)).size() == 6);
    CHECK(acyclic_orientations(complete_pattern(2)).size() == 2);
    CHECK(acyclic_orientations(cycle_pattern(4)).size() == 14);
    CHECK(acyclic_orientations(empty_pattern(3)).size() == 1);
    // the chromatic polynomial at -1 gives 24 for K4
    CHECK(acyclic_orientations(complete_pattern(4)).size() == 24);

    Rng rng(31);
    for (int i = 0; i < 20; ++i) {
        auto h = random_pattern(6, 0.4, rng);
        auto all = acyclic_orientations(h);
        CHECK(all.size() == count_orientations_naive(h));
        for (const auto & d : all) {
            CHECK(d.is_acyclic());
            CHECK(d.underlying() == h);
        }
    }
    CHECK_THROWS_AS(acyclic_orientations(complete_pattern(8), PatternLimits{10, 20, 20}), GuardExceeded);
}

TEST_CASE("reachability hypergraphs")
{
    PatternDag arc(2);
    arc.add_arc(0, 1);
    auto f = reachability_hypergraph(arc);
    CHECK(f.edges == std::vector<VertexMask>{set_of({0, 1})});

    auto c6 = reachability_hypergraph(alternating_c6());
    CHECK(c6.edges == std::vector<VertexMask>{set_of({0, 1, 5}), set_of({2, 1, 3}), set_of({4, 3, 5})});

    PatternDag tt(3);
    tt.add_arc(0, 1);
    tt.add_arc(0, 2);
    tt.add_arc(1, 2);
    CHECK(reachability_hypergraph(tt).edges == std::vector<VertexMask>{set_of({0, 1, 2})});
}

TEST_CASE("alpha-acyclic hypergraphs")
{
    Hypergraph absorbed{3, {set_of({0, 1}), set_of({1, 2}), set_of({0, 1, 2})}};
    auto r = is_alpha_acyclic_hypergraph(absorbed);
    CHECK(r.acyclic);
    REQUIRE(r.tree);
    CHECK(r.tree->edges.size() == 2);
    CHECK(has_running_intersection(absorbed, *r.tree));

    auto c6 = reachability_hypergraph(alternating_c6());
    CHECK_FALSE(is_alpha_acyclic_hypergraph(c6).acyclic);
    CHECK_FALSE(is_alpha_acyclic_hypergraph(c6).tree);

    Hypergraph triangle{3, {set_of({0, 1}), set_of({1, 2}), set_of({0, 2})}};
    CHECK_FALSE(gyo_reduces(triangle));
    // every spanning tree of the three edges breaks running intersection
    for (JoinTree t : {JoinTree{{{0, 1}, {1, 2}}}, JoinTree{{{0, 1}, {0, 2}}}, JoinTree{{{0, 2}, {1, 2}}}})
        CHECK_FALSE(has_running_intersection(triangle, t));

    Hypergraph path{4, {set_of({0, 1}), set_of({1, 2}), set_of({2, 3})}};
    auto p = is_alpha_acyclic_hypergraph(path);
    CHECK(p.acyclic);
    CHECK(has_running_intersection(path, *p.tree));
    CHECK_FALSE(has_running_intersection(path, JoinTree{{{0, 2}, {2, 1}}}));
}

TEST_CASE("obstruction oracle")
{
    auto c6 = obstruction_oracle(reachability_hypergraph(alternating_c6()));
    REQUIRE(c6);
    CHECK(c6->subset == set_of({1, 3, 5}));
    CHECK(c6->condition == 1);

    CHECK_FALSE(obstruction_oracle(Hypergraph{3, {set_of({0, 1, 2})}}));

    auto tri = obstruction_oracle(Hypergraph{3, {set_of({0, 1}), set_of({1, 2}), set_of({0, 2})}});
    REQUIRE(tri);
    CHECK(tri->subset == set_of({0, 1, 2}));
    CHECK(tri->condition == 1);

    // tetrahedron boundary: every 3-subset is an edge, nothing covers all 4
    Hypergraph tetra{4, {set_of({0, 1, 2}), set_of({0, 1, 3}), set_of({0, 2, 3}), set_of({1, 2, 3})}};
    auto t = obstruction_oracle(tetra);
    REQUIRE(t);
    CHECK(t->subset == set_of({0, 1, 2, 3}));
    CHECK(t->condition == 2);
    CHECK_FALSE(gyo_reduces(tetra));
}

TEST_CASE("GYO agrees with the obstruction oracle on reachability hypergraphs")
{
    std::size_t checked = 0, cyclic = 0;
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto & h : all_graphs_up_to_iso(n))
            for (const auto & d : acyclic_orientations(h)) {
                auto f = reachability_hypergraph(d);
                auto gyo = is_alpha_acyclic_hypergraph(f);
                bool obstructed = obstruction_oracle(f).has_value();
                CHECK(gyo.acyclic != obstructed);
                if (gyo.acyclic)
                    CHECK(has_running_intersection(f, *gyo.tree));
                ++checked;
                cyclic += ! gyo.acyclic;
            }
    CHECK(checked > 10'000);
    CHECK(cyclic > 0);
}

TEST_CASE("induced cycles")
{
    auto c6 = find_induced_cycle(cycle_pattern(6));
    REQUIRE(c6);
    CHECK(c6->size() == 6);
    CHECK(c6->front() == 0);
    CHECK_FALSE(find_induced_cycle(cycle_pattern(5)));
    CHECK_FALSE(find_induced_cycle(complete_pattern(7)));
    auto c4 = find_induced_cycle(cycle_pattern(4), 4);
    REQUIRE(c4);
    CHECK(c4->size() == 4);

    Rng rng(6);
    for (int i = 0; i < 200; ++i) {
        auto h = random_pattern(8, 0.35, rng);
        auto c = find_induced_cycle(h);
        CHECK(c.has_value() == has_long_induced_cycle(h));
        if (! c)
            continue;
        VertexMask m = 0;
        for (auto v : *c)
            m |= VertexMask{1} << v;
        auto sub = h.induced(m);
        CHECK(sub.num_edges() == c->size());
        for (std::size_t j = 0; j < c->size(); ++j)
            CHECK(h.has_edge((*c)[j], (*c)[(j + 1) % c->size()]));
    }
}

TEST_CASE("alpha-acyclic graphs: both deciders agree")
{
    CHECK(is_alpha_acyclic_graph(cycle_pattern(5), AcyclicityMethod::both));
    CHECK_FALSE(is_alpha_acyclic_graph(cycle_pattern(6), AcyclicityMethod::both));
    CHECK(is_alpha_acyclic_graph(cycle_pattern(4), AcyclicityMethod::both));

    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto & h : all_graphs_up_to_iso(n)) {
            bool a = is_alpha_acyclic_graph(h, AcyclicityMethod::orientations);
            bool b = is_alpha_acyclic_graph(h, AcyclicityMethod::induced_cycles);
            CHECK(a == b);
        }
    Rng rng(77);
    for (int i = 0; i < 40; ++i) {
        auto h = random_pattern(7, 0.3, rng);
        CHECK(is_alpha_acyclic_graph(h, AcyclicityMethod::orientations) ==
              is_alpha_acyclic_graph(h, AcyclicityMethod::induced_cycles));
    }
    Rng crng(78);
    for (int i = 0; i < 30; ++i)
        CHECK(is_alpha_acyclic_graph(random_chordal_pattern(8, crng)));
}

TEST_CASE("classification examples")
{
    auto c5 = classify(cycle_pattern(5));
    CHECK(c5.hom_easy);
    CHECK(c5.inj_easy);
    CHECK(c5.ind_easy);

    auto c6 = classify(cycle_pattern(6));
    CHECK_FALSE(c6.hom_easy);
    CHECK_FALSE(c6.inj_easy);
    CHECK_FALSE(c6.ind_easy);
    REQUIRE(c6.hom_witness);
    CHECK(c6.hom_witness->size() == 6);
    REQUIRE(c6.inj_witness);
    REQUIRE(c6.ind_witness);
    CHECK(std::popcount(*c6.ind_witness) == 6);

    for (std::size_t k = 3; k <= 5; ++k)
        CHECK(classify(cycle_pattern(k)).hom_easy);
    for (std::size_t k = 6; k <= 10; ++k)
        CHECK_FALSE(classify(cycle_pattern(k)).hom_easy);

    auto p5 = classify(path_pattern(5));
    CHECK((p5.hom_easy && p5.inj_easy && p5.ind_easy));
    auto k4 = classify(complete_pattern(4));
    CHECK((k4.hom_easy && k4.inj_easy && k4.ind_easy));

    // P7 is a forest but its quotients include C6
    auto p7 = classify(path_pattern(7));
    CHECK(p7.hom_easy);
    CHECK_FALSE(p7.inj_easy);
    REQUIRE(p7.inj_witness);
    auto q = quotient(path_pattern(7), p7.inj_witness->partition);
    CHECK_FALSE(q.has_loop);
    CHECK(p7.inj_witness->cycle.size() >= 6);

    CHECK(c6_spanning_subgraph_keys().size() == 12);
}

TEST_CASE("every pattern on at most 5 vertices is inj-easy")
{
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto & h : all_graphs_up_to_iso(n)) {
            auto c = classify(h);
            CHECK(c.hom_easy);
            CHECK(c.inj_easy);
            CHECK(c.ind_easy);
        }
}

TEST_CASE("classification is monotone: ind-easy implies inj-easy implies hom-easy")
{
    Rng rng(13);
    for (int i = 0; i < 150; ++i) {
        auto h = random_pattern(6 + i % 3, 0.2 + 0.1 * (i % 5), rng);
        auto c = classify(h);
        if (c.ind_easy)
            CHECK(c.inj_easy);
        if (c.inj_easy)
            CHECK(c.hom_easy);
        CHECK(c.hom_easy == ! has_long_induced_cycle(h));
        CHECK(c.ind_easy == ! has_c6_spanning_subgraph(h));
        bool quotients_ok = true;
        if (h.num_vertices() <= 7)
            for (const auto & p : enumerate_partitions(h)) {
                auto q = quotient(h, p);
                if (! q.has_loop && has_long_induced_cycle(q.graph))
                    quotients_ok = false;
            }
        else
            quotients_ok = c.inj_easy;
        CHECK(c.inj_easy == quotients_ok);
    }
}

TEST_CASE("split and chordal samples")
{
    Rng rng(101);
    for (int i = 0; i < 60; ++i) {
        auto split = random_split_pattern(4 + i % 5, rng);
        CHECK(classify(split).inj_easy);
        auto chordal = random_chordal_pattern(4 + i % 5, rng);
        CHECK(classify(chordal).hom_easy);
    }
}

TEST_CASE("classification JSON reports labels")
{
    auto named = parse_pattern("10-11,11-12,12-13,13-14,14-15,15-10");
    auto j = to_json(classify(named.pattern), named.labels);
    CHECK(j["hom_easy"] == false);
    auto w = j["witnesses"]["hom"]["vertices"].get<std::vector<std::uint64_t>>();
    CHECK(w.size() == 6);
    CHECK(w.front() == 10);
}
