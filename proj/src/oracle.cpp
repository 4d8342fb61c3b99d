#include <degencount/errors.hpp>
#include <degencount/oracle.hpp>

#include <algorithm>
#include <bit>

namespace degencount {

namespace {

enum class Mode { hom, inj, ind };

// Pattern vertices by decreasing degree, then greedily the vertex with the
// most already-placed neighbours so candidates come from adjacency lists.
std::vector<std::size_t> search_order(std::size_t n, const std::function<VertexMask(std::size_t)> & nbrs)
{
    std::vector<std::size_t> order;
    VertexMask placed = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        std::pair<int, int> best_key{-1, -1};
        for (std::size_t v = 0; v < n; ++v) {
            if (placed & (VertexMask{1} << v))
                continue;
            std::pair<int, int> key{std::popcount(nbrs(v) & placed), std::popcount(nbrs(v))};
            if (key > best_key) {
                best_key = key;
                best = v;
            }
        }
        order.push_back(best);
        placed |= VertexMask{1} << best;
    }
    return order;
}

class UndirectedSearch {
public:
    UndirectedSearch(const Pattern & h, const Graph & g, Mode mode, const OracleLimits & limits) :
        h_(h), g_(g), mode_(mode), limits_(limits), image_(h.num_vertices())
    {
        order_ = search_order(h.num_vertices(), [&](std::size_t v) { return h.neighbors(v); });
        VertexMask placed = 0;
        for (std::size_t v : order_) {
            std::vector<std::size_t> adj, non;
            for (std::size_t u = 0; u < h.num_vertices(); ++u)
                if (placed & (VertexMask{1} << u))
                    (h.has_edge(u, v) ? adj : non).push_back(u);
            placed_adj_.push_back(std::move(adj));
            placed_non_.push_back(std::move(non));
            placed |= VertexMask{1} << v;
        }
    }

    BigInt run()
    {
        if (h_.num_vertices() == 0)
            return 1;
        if (mode_ != Mode::hom && h_.num_vertices() > g_.num_vertices())
            return 0;
        return go(0).to_big();
    }

private:
    bool fits(std::size_t i, Vertex w) const
    {
        for (std::size_t u : placed_adj_[i])
            if (! g_.has_edge(image_[u], w))
                return false;
        if (mode_ != Mode::hom)
            for (std::size_t k = 0; k < i; ++k)
                if (image_[order_[k]] == w)
                    return false;
        if (mode_ == Mode::ind)
            for (std::size_t u : placed_non_[i])
                if (g_.has_edge(image_[u], w))
                    return false;
        return true;
    }

    void step()
    {
        if (++steps_ > limits_.max_steps)
            throw GuardExceeded("brute-force search exceeded " + std::to_string(limits_.max_steps) + " steps");
    }

    CheckedU64 go(std::size_t i)
    {
        const std::size_t v = order_[i];
        const bool last = i + 1 == order_.size();
        CheckedU64 total = 0;
        auto visit = [&](Vertex w) {
            step();
            if (! fits(i, w))
                return;
            if (last) {
                total += 1;
                return;
            }
            image_[v] = w;
            total += go(i + 1);
        };
        if (! placed_adj_[i].empty()) {
            // anchor at the placed neighbour whose image has fewest neighbours
            Vertex anchor = image_[placed_adj_[i].front()];
            for (std::size_t u : placed_adj_[i])
                if (g_.degree(image_[u]) < g_.degree(anchor))
                    anchor = image_[u];
            for (Vertex w : g_.neighbors(anchor))
                visit(w);
        }
        else {
            for (std::size_t w = 0; w < g_.num_vertices(); ++w)
                visit(static_cast<Vertex>(w));
        }
        return total;
    }

    const Pattern & h_;
    const Graph & g_;
    Mode mode_;
    OracleLimits limits_;
    std::vector<std::size_t> order_;
    std::vector<std::vector<std::size_t>> placed_adj_, placed_non_;
    std::vector<Vertex> image_;
    std::uint64_t steps_ = 0;
};

BigInt run_undirected(const Pattern & h, const Graph & g, Mode mode, const OracleLimits & limits)
{
    try {
        return UndirectedSearch(h, g, mode, limits).run();
    }
    catch (const CountOverflow &) {
        throw GuardExceeded("brute-force count exceeds 64 bits");
    }
}

} // namespace

BigInt brute_hom(const Pattern & h, const Graph & g, const OracleLimits & limits)
{
    return run_undirected(h, g, Mode::hom, limits);
}

BigInt brute_inj(const Pattern & h, const Graph & g, const OracleLimits & limits)
{
    return run_undirected(h, g, Mode::inj, limits);
}

BigInt brute_ind(const Pattern & h, const Graph & g, const OracleLimits & limits)
{
    return run_undirected(h, g, Mode::ind, limits);
}

namespace {

class DirectedSearch {
public:
    DirectedSearch(const PatternDag & d, const OrientedGraph & g, const OracleLimits & limits) :
        d_(d), g_(g), limits_(limits), image_(d.num_vertices())
    {
        const std::size_t n = g.num_vertices();
        in_offsets_.assign(n + 1, 0);
        for (auto [u, v] : g.arcs())
            ++in_offsets_[v + 1];
        for (std::size_t v = 0; v < n; ++v)
            in_offsets_[v + 1] += in_offsets_[v];
        in_sources_.resize(g.num_arcs());
        auto fill = in_offsets_;
        for (auto [u, v] : g.arcs())
            in_sources_[fill[v]++] = u;

        order_ = search_order(d.num_vertices(), [&](std::size_t v) { return d.in(v) | d.out(v); });
        VertexMask placed = 0;
        for (std::size_t v : order_) {
            std::vector<std::size_t> ins, outs;
            for (std::size_t u = 0; u < d.num_vertices(); ++u)
                if (placed & (VertexMask{1} << u)) {
                    if (d.has_arc(u, v))
                        ins.push_back(u);
                    if (d.has_arc(v, u))
                        outs.push_back(u);
                }
            placed_in_.push_back(std::move(ins));
            placed_out_.push_back(std::move(outs));
            placed |= VertexMask{1} << v;
        }
    }

    BigInt run()
    {
        if (d_.num_vertices() == 0)
            return 1;
        try {
            return go(0).to_big();
        }
        catch (const CountOverflow &) {
            throw GuardExceeded("brute-force count exceeds 64 bits");
        }
    }

private:
    bool fits(std::size_t i, Vertex w) const
    {
        for (std::size_t u : placed_in_[i])
            if (! g_.has_arc(image_[u], w))
                return false;
        for (std::size_t u : placed_out_[i])
            if (! g_.has_arc(w, image_[u]))
                return false;
        return true;
    }

    CheckedU64 go(std::size_t i)
    {
        const std::size_t v = order_[i];
        const bool last = i + 1 == order_.size();
        CheckedU64 total = 0;
        auto visit = [&](Vertex w) {
            if (++steps_ > limits_.max_steps)
                throw GuardExceeded("brute-force search exceeded " + std::to_string(limits_.max_steps) + " steps");
            if (! fits(i, w))
                return;
            if (last) {
                total += 1;
                return;
            }
            image_[v] = w;
            total += go(i + 1);
        };
        if (! placed_in_[i].empty()) {
            for (Vertex w : g_.out_neighbors(image_[placed_in_[i].front()]))
                visit(w);
        }
        else if (! placed_out_[i].empty()) {
            Vertex t = image_[placed_out_[i].front()];
            for (std::size_t k = in_offsets_[t]; k < in_offsets_[t + 1]; ++k)
                visit(in_sources_[k]);
        }
        else {
            for (std::size_t w = 0; w < g_.num_vertices(); ++w)
                visit(static_cast<Vertex>(w));
        }
        return total;
    }

    const PatternDag & d_;
    const OrientedGraph & g_;
    OracleLimits limits_;
    std::vector<std::size_t> in_offsets_;
    std::vector<Vertex> in_sources_;
    std::vector<std::size_t> order_;
    std::vector<std::vector<std::size_t>> placed_in_, placed_out_;
    std::vector<Vertex> image_;
    std::uint64_t steps_ = 0;
};

} // namespace

BigInt brute_directed_hom(const PatternDag & hdir, const OrientedGraph & gdir, const OracleLimits & limits)
{
    return DirectedSearch(hdir, gdir, limits).run();
}

} // namespace degencount
