#include <degencount/errors.hpp>
#include <degencount/graph.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>
#include <string_view>
#include <unordered_map>

namespace degencount {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges)
{
    if (n > std::numeric_limits<Vertex>::max())
        throw GraphError("too many vertices");

    std::vector<std::size_t> deg(n + 1, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw GraphError("edge endpoint out of range");
        if (u == v)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        ++deg[u];
        ++deg[v];
    }

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v)
        g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adjacency_.resize(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        g.adjacency_[fill[u]++] = v;
        g.adjacency_[fill[v]++] = u;
    }

    // sort and dedup each list, then compact
    std::size_t write = 0;
    std::vector<std::size_t> new_offsets(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        auto first = g.adjacency_.begin() + g.offsets_[v];
        auto last = g.adjacency_.begin() + g.offsets_[v + 1];
        std::sort(first, last);
        last = std::unique(first, last);
        new_offsets[v] = write;
        for (auto it = first; it != last; ++it)
            g.adjacency_[write++] = *it;
    }
    new_offsets[n] = write;
    g.adjacency_.resize(write);
    g.adjacency_.shrink_to_fit();
    g.offsets_ = std::move(new_offsets);

    g.labels_.resize(n);
    std::iota(g.labels_.begin(), g.labels_.end(), std::uint64_t{0});
    return g;
}

std::size_t Graph::max_degree() const
{
    std::size_t d = 0;
    for (std::size_t v = 0; v < num_vertices(); ++v)
        d = std::max(d, degree(static_cast<Vertex>(v)));
    return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    if (degree(u) > degree(v))
        std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (std::size_t u = 0; u < num_vertices(); ++u)
        for (Vertex v : neighbors(static_cast<Vertex>(u)))
            if (u < v)
                out.emplace_back(static_cast<Vertex>(u), v);
    return out;
}

void Graph::set_labels(std::vector<std::uint64_t> labels)
{
    if (labels.size() != num_vertices())
        throw GraphError("label table size does not match vertex count");
    labels_ = std::move(labels);
}

namespace {

std::string_view trim(std::string_view s)
{
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; };
    while (! s.empty() && is_space(s.front()))
        s.remove_prefix(1);
    while (! s.empty() && is_space(s.back()))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t parse_id(std::string_view tok, std::size_t line)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("expected a nonnegative integer, got '" + std::string(tok) + "'", line);
    return value;
}

} // namespace

Graph load_graph(std::istream & in)
{
    std::unordered_map<std::uint64_t, Vertex> ids;
    std::vector<std::uint64_t> labels;
    std::vector<Edge> edges;

    auto intern = [&](std::uint64_t label) {
        auto [it, inserted] = ids.try_emplace(label, static_cast<Vertex>(labels.size()));
        if (inserted)
            labels.push_back(label);
        return it->second;
    };

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        auto toks = split_ws(line);
        if (toks.size() == 2 && toks[0] == "v") {
            intern(parse_id(toks[1], line_no));
            continue;
        }
        if (toks.size() != 2)
            throw ParseError("expected two vertex ids", line_no);
        auto a = parse_id(toks[0], line_no);
        auto b = parse_id(toks[1], line_no);
        if (a == b)
            throw ParseError("self-loop at vertex " + std::to_string(a), line_no);
        Vertex u = intern(a);
        Vertex v = intern(b);
        edges.emplace_back(u, v);
    }

    auto g = Graph::from_edges(labels.size(), edges);
    g.set_labels(std::move(labels));
    return g;
}

Graph load_graph_file(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw ParseError("cannot open '" + path + "'");
    return load_graph(in);
}

Graph parse_graph(const std::string & text)
{
    std::istringstream in(text);
    return load_graph(in);
}

void write_edge_list(const Graph & g, std::ostream & out)
{
    const auto & labels = g.labels();
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        out << "v " << labels[v] << '\n';
    for (auto [u, v] : g.edges())
        out << labels[u] << ' ' << labels[v] << '\n';
}

std::vector<std::size_t> DegeneracyOrder::positions() const
{
    std::vector<std::size_t> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[order[i]] = i;
    return pos;
}

DegeneracyOrder degeneracy_order(const Graph & g)
{
    const std::size_t n = g.num_vertices();
    // vert holds vertices sorted by residual degree; bin[d] is where degree d starts
    std::vector<std::size_t> residual(n), pos(n);
    std::size_t max_deg = 0;
    for (std::size_t v = 0; v < n; ++v) {
        residual[v] = g.degree(static_cast<Vertex>(v));
        max_deg = std::max(max_deg, residual[v]);
    }
    std::vector<std::size_t> bin(max_deg + 2, 0);
    for (std::size_t v = 0; v < n; ++v)
        ++bin[residual[v] + 1];
    for (std::size_t d = 1; d < bin.size(); ++d)
        bin[d] += bin[d - 1];
    std::vector<Vertex> vert(n);
    {
        auto next = bin;
        for (std::size_t v = 0; v < n; ++v) {
            pos[v] = next[residual[v]]++;
            vert[pos[v]] = static_cast<Vertex>(v);
        }
    }

    DegeneracyOrder result;
    result.order.assign(vert.begin(), vert.end());
    for (std::size_t i = 0; i < n; ++i) {
        Vertex v = vert[i];
        result.order[i] = v;
        result.kappa = std::max(result.kappa, residual[v]);
        for (Vertex w : g.neighbors(v)) {
            if (pos[w] <= i || residual[w] <= residual[v])
                continue;
            // move w to the front of its bin, then shrink the bin by one
            std::size_t dw = residual[w], front = std::max(bin[dw], i + 1);
            Vertex u = vert[front];
            std::swap(vert[front], vert[pos[w]]);
            pos[u] = pos[w];
            pos[w] = front;
            bin[dw] = front + 1;
            --residual[w];
        }
    }
    return result;
}

DegeneracyOrder degeneracy_order(const Graph & g, std::span<const std::uint32_t> priority)
{
    const std::size_t n = g.num_vertices();
    if (priority.size() != n)
        throw GraphError("priority table size does not match vertex count");

    // Bucket queue over residual degree. Each bucket is a min-heap on
    // (priority, vertex) with lazy deletion of stale entries.
    using Entry = std::pair<std::uint32_t, Vertex>;
    using Bucket = std::priority_queue<Entry, std::vector<Entry>, std::greater<>>;

    std::vector<std::size_t> residual(n);
    std::size_t max_deg = 0;
    for (std::size_t v = 0; v < n; ++v) {
        residual[v] = g.degree(static_cast<Vertex>(v));
        max_deg = std::max(max_deg, residual[v]);
    }
    std::vector<Bucket> buckets(max_deg + 1);
    for (std::size_t v = 0; v < n; ++v)
        buckets[residual[v]].emplace(priority[v], static_cast<Vertex>(v));

    std::vector<char> removed(n, 0);
    DegeneracyOrder result;
    result.order.reserve(n);
    std::size_t current = 0;
    while (result.order.size() < n) {
        // residual degrees drop by at most one per removal, so the minimum
        // nonempty bucket is never below current - 1
        if (current > 0)
            --current;
        Vertex v = 0;
        bool found = false;
        while (! found) {
            auto & bucket = buckets[current];
            while (! bucket.empty()) {
                auto [prio, cand] = bucket.top();
                bucket.pop();
                if (! removed[cand] && residual[cand] == current) {
                    v = cand;
                    found = true;
                    break;
                }
            }
            if (! found)
                ++current;
        }
        removed[v] = 1;
        result.kappa = std::max(result.kappa, residual[v]);
        result.order.push_back(v);
        for (Vertex w : g.neighbors(v))
            if (! removed[w]) {
                --residual[w];
                buckets[residual[w]].emplace(priority[w], w);
            }
    }
    return result;
}

OrientedGraph OrientedGraph::from_arcs(std::size_t n, std::span<const Edge> arcs, bool require_acyclic)
{
    OrientedGraph d;
    d.offsets_.assign(n + 1, 0);
    for (auto [u, v] : arcs) {
        if (u >= n || v >= n)
            throw GraphError("arc endpoint out of range");
        if (u == v)
            throw GraphError("self-loop arc at vertex " + std::to_string(u));
        ++d.offsets_[u + 1];
    }
    for (std::size_t v = 0; v < n; ++v)
        d.offsets_[v + 1] += d.offsets_[v];
    d.targets_.resize(arcs.size());
    std::vector<std::size_t> fill(d.offsets_.begin(), d.offsets_.end() - 1);
    for (auto [u, v] : arcs)
        d.targets_[fill[u]++] = v;

    std::size_t write = 0;
    std::vector<std::size_t> new_offsets(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        auto first = d.targets_.begin() + d.offsets_[v];
        auto last = d.targets_.begin() + d.offsets_[v + 1];
        std::sort(first, last);
        last = std::unique(first, last);
        new_offsets[v] = write;
        for (auto it = first; it != last; ++it)
            d.targets_[write++] = *it;
        d.max_out_degree_ = std::max(d.max_out_degree_, write - new_offsets[v]);
    }
    new_offsets[n] = write;
    d.targets_.resize(write);
    d.offsets_ = std::move(new_offsets);

    if (require_acyclic && ! d.is_acyclic())
        throw GraphError("digraph has a directed cycle");
    return d;
}

bool OrientedGraph::has_arc(Vertex u, Vertex v) const
{
    auto out = out_neighbors(u);
    return std::binary_search(out.begin(), out.end(), v);
}

std::vector<Edge> OrientedGraph::arcs() const
{
    std::vector<Edge> out;
    out.reserve(num_arcs());
    for (std::size_t u = 0; u < num_vertices(); ++u)
        for (Vertex v : out_neighbors(static_cast<Vertex>(u)))
            out.emplace_back(static_cast<Vertex>(u), v);
    return out;
}

std::vector<std::size_t> OrientedGraph::in_degrees() const
{
    std::vector<std::size_t> in(num_vertices(), 0);
    for (Vertex v : targets_)
        ++in[v];
    return in;
}

bool OrientedGraph::is_acyclic() const
{
    auto in = in_degrees();
    std::vector<Vertex> stack;
    for (std::size_t v = 0; v < num_vertices(); ++v)
        if (in[v] == 0)
            stack.push_back(static_cast<Vertex>(v));
    std::size_t seen = 0;
    while (! stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        ++seen;
        for (Vertex w : out_neighbors(v))
            if (--in[w] == 0)
                stack.push_back(w);
    }
    return seen == num_vertices();
}

OrientedGraph orient_by_degeneracy(const Graph & g, const DegeneracyOrder & order)
{
    if (order.order.size() != g.num_vertices())
        throw GraphError("degeneracy order does not match the graph's vertex count");
    auto pos = order.positions();
    std::vector<Edge> arcs;
    arcs.reserve(g.num_edges());
    for (auto [u, v] : g.edges()) {
        if (pos[u] < pos[v])
            arcs.emplace_back(u, v);
        else
            arcs.emplace_back(v, u);
    }
    return OrientedGraph::from_arcs(g.num_vertices(), arcs, false);
}

Graph tensor_product(const Graph & g1, const Graph & g2, std::size_t max_vertices)
{
    const std::size_t n1 = g1.num_vertices(), n2 = g2.num_vertices();
    if (n2 != 0 && n1 > max_vertices / n2)
        throw GuardExceeded("tensor product would exceed " + std::to_string(max_vertices) + " vertices");
    std::vector<Edge> edges;
    edges.reserve(2 * g1.num_edges() * g2.num_edges());
    for (auto [a, c] : g1.edges())
        for (auto [b, d] : g2.edges()) {
            edges.emplace_back(static_cast<Vertex>(a * n2 + b), static_cast<Vertex>(c * n2 + d));
            edges.emplace_back(static_cast<Vertex>(a * n2 + d), static_cast<Vertex>(c * n2 + b));
        }
    return Graph::from_edges(n1 * n2, edges);
}

Graph join_with_clique(const Graph & g, std::size_t h)
{
    if (h == 0)
        throw GraphError("clique size must be positive");
    const std::size_t n = g.num_vertices();
    auto edges = g.edges();
    for (std::size_t i = 0; i < h; ++i) {
        auto c = static_cast<Vertex>(n + i);
        for (std::size_t v = 0; v < n; ++v)
            edges.emplace_back(static_cast<Vertex>(v), c);
        for (std::size_t j = i + 1; j < h; ++j)
            edges.emplace_back(c, static_cast<Vertex>(n + j));
    }
    return Graph::from_edges(n + h, edges);
}

std::size_t girth(const Graph & g)
{
    const std::size_t n = g.num_vertices();
    std::size_t best = 0;
    std::vector<std::size_t> dist(n), parent(n);
    std::vector<Vertex> queue;
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
        dist[s] = 0;
        parent[s] = n;
        queue.assign(1, static_cast<Vertex>(s));
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            if (best && 2 * dist[v] + 1 >= best)
                break;
            for (Vertex w : g.neighbors(v)) {
                if (dist[w] == std::numeric_limits<std::size_t>::max()) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
                else if (parent[v] != w) {
                    std::size_t len = dist[v] + dist[w] + 1;
                    if (best == 0 || len < best)
                        best = len;
                }
            }
        }
    }
    return best;
}

} // namespace degencount
