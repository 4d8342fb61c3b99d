#include <degencount/errors.hpp>
#include <degencount/generators.hpp>

#include <algorithm>
#include <bit>
#include <set>

namespace degencount {

Graph cycle_graph(std::size_t n)
{
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    if (n < 3)
        throw GraphError("cycles need at least 3 vertices");
    return Graph::from_edges(n, e);
}

Graph path_graph(std::size_t n)
{
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i)
        e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    return Graph::from_edges(n, e);
}

Graph complete_graph(std::size_t n)
{
    std::vector<Edge> e;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return Graph::from_edges(n, e);
}

Graph empty_graph(std::size_t n) { return Graph::from_edges(n, {}); }

Graph random_gnp(std::size_t n, double p, Rng & rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng))
                e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return Graph::from_edges(n, e);
}

Graph random_tree(std::size_t n, Rng & rng)
{
    if (n <= 1)
        return empty_graph(n);
    if (n == 2)
        return path_graph(2);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::size_t> code(n - 2), degree(n, 1);
    for (auto & c : code) {
        c = pick(rng);
        ++degree[c];
    }
    std::vector<Edge> e;
    std::set<std::size_t> leaves;
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves.insert(v);
    for (auto c : code) {
        std::size_t leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        e.emplace_back(static_cast<Vertex>(leaf), static_cast<Vertex>(c));
        if (--degree[c] == 1)
            leaves.insert(c);
    }
    std::size_t a = *leaves.begin();
    std::size_t b = *std::next(leaves.begin());
    e.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    return Graph::from_edges(n, e);
}

Graph random_degenerate(std::size_t n, std::size_t kappa, Rng & rng)
{
    std::vector<Edge> e;
    std::vector<Vertex> picked;
    for (std::size_t v = 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> count(0, std::min(kappa, v));
        std::uniform_int_distribution<Vertex> earlier(0, static_cast<Vertex>(v - 1));
        std::size_t k = count(rng);
        picked.clear();
        while (picked.size() < k) {
            Vertex u = earlier(rng);
            if (std::find(picked.begin(), picked.end(), u) == picked.end())
                picked.push_back(u);
        }
        for (Vertex u : picked)
            e.emplace_back(u, static_cast<Vertex>(v));
    }
    return Graph::from_edges(n, e);
}

namespace {

// Pairing model where loops and multi-edges are removed by random edge
// switches; restarting until the pairing is simple fails for large r.
Graph random_cubic_switching(std::size_t r, Rng & rng)
{
    std::vector<Vertex> points(3 * r);
    for (std::size_t i = 0; i < points.size(); ++i)
        points[i] = static_cast<Vertex>(i / 3);
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Edge> e;
    for (std::size_t i = 0; i < points.size(); i += 2)
        e.emplace_back(points[i], points[i + 1]);

    auto norm = [](Edge x) { return x.first < x.second ? x : Edge{x.second, x.first}; };
    std::multiset<Edge> present;
    for (auto x : e)
        present.insert(norm(x));
    auto bad = [&](Edge x) { return x.first == x.second || present.count(norm(x)) > 1; };

    std::uniform_int_distribution<std::size_t> pick(0, e.size() - 1);
    for (std::size_t rounds = 0; rounds < 100 * e.size(); ++rounds) {
        std::vector<std::size_t> defects;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (bad(e[i]))
                defects.push_back(i);
        if (defects.empty())
            return Graph::from_edges(r, e);
        for (std::size_t i : defects) {
            std::size_t j = pick(rng);
            if (i == j)
                continue;
            Edge a = e[i], b = e[j];
            Edge na{a.first, b.first}, nb{a.second, b.second};
            if (na.first == na.second || nb.first == nb.second)
                continue;
            present.erase(present.find(norm(a)));
            present.erase(present.find(norm(b)));
            present.insert(norm(na));
            present.insert(norm(nb));
            e[i] = na;
            e[j] = nb;
        }
    }
    throw GuardExceeded("could not sample a simple cubic graph");
}

} // namespace

Graph random_cubic(std::size_t r, Rng & rng)
{
    if (r % 2 || r < 4)
        throw GraphError("cubic graphs need an even vertex count >= 4");
    if (r > 64)
        return random_cubic_switching(r, rng);
    std::vector<Vertex> points(3 * r);
    for (std::size_t i = 0; i < points.size(); ++i)
        points[i] = static_cast<Vertex>(i / 3);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::shuffle(points.begin(), points.end(), rng);
        std::vector<Edge> e;
        e.reserve(points.size() / 2);
        bool simple = true;
        for (std::size_t i = 0; i < points.size() && simple; i += 2) {
            Vertex a = std::min(points[i], points[i + 1]);
            Vertex b = std::max(points[i], points[i + 1]);
            simple = a != b;
            e.emplace_back(a, b);
        }
        if (! simple)
            continue;
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            continue;
        return Graph::from_edges(r, e);
    }
    throw GuardExceeded("could not sample a simple cubic graph");
}

Graph degen2_host(std::size_t n, std::uint64_t seed)
{
    Rng rng(seed);
    std::size_t r = static_cast<std::size_t>(static_cast<double>(n) / 2.5 + 0.5);
    r += r % 2;
    r = std::max<std::size_t>(r, 4);
    Graph cubic = random_cubic(r, rng);
    std::vector<Edge> e;
    Vertex next = static_cast<Vertex>(r);
    for (auto [u, v] : cubic.edges()) {
        e.emplace_back(u, next);
        e.emplace_back(next, v);
        ++next;
    }
    return Graph::from_edges(next, e);
}

Pattern random_connected_pattern(std::size_t n, double p, Rng & rng)
{
    Pattern h = Pattern::from_graph(random_tree(n, rng));
    std::bernoulli_distribution coin(p);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng))
                h.add_edge(u, v);
    return h;
}

Pattern random_forest_pattern(std::size_t n, Rng & rng)
{
    Pattern h = Pattern::from_graph(random_tree(n, rng));
    // drop each tree edge with probability 1/3 to get a forest
    std::bernoulli_distribution drop(1.0 / 3.0);
    for (auto [u, v] : h.edges())
        if (drop(rng))
            h.remove_edge(u, v);
    return h;
}

Pattern random_split_pattern(std::size_t n, Rng & rng)
{
    std::uniform_int_distribution<std::size_t> size(0, n);
    std::size_t k = size(rng);
    Pattern h(n);
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = u + 1; v < k; ++v)
            h.add_edge(u, v);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = k; v < n; ++v)
            if (coin(rng))
                h.add_edge(u, v);
    return h;
}

Pattern random_chordal_pattern(std::size_t n, Rng & rng)
{
    Pattern h(n);
    for (std::size_t v = 1; v < n; ++v) {
        // grow a random clique among 0..v-1 greedily from a random seed
        std::uniform_int_distribution<std::size_t> pick(0, v - 1);
        std::bernoulli_distribution coin(0.5);
        VertexMask clique = VertexMask{1} << pick(rng);
        for (std::size_t u = 0; u < v; ++u) {
            if (clique & (VertexMask{1} << u))
                continue;
            if ((h.neighbors(u) & clique) == clique && coin(rng))
                clique |= VertexMask{1} << u;
        }
        if (coin(rng) || v == 1)
            for (VertexMask m = clique; m; m &= m - 1)
                h.add_edge(static_cast<std::size_t>(std::countr_zero(m)), v);
    }
    return h;
}

Pattern random_pattern(std::size_t n, double p, Rng & rng)
{
    Pattern h(n);
    std::bernoulli_distribution coin(p);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng))
                h.add_edge(u, v);
    return h;
}

} // namespace degencount
