#include <degencount/acyclicity.hpp>
#include <degencount/errors.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace degencount {

namespace {

VertexMask bit(std::size_t v) { return VertexMask{1} << v; }

std::size_t lowest(VertexMask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

std::size_t popcount(VertexMask m) { return static_cast<std::size_t>(std::popcount(m)); }

VertexMask reach_from(const std::array<VertexMask, kPatternHardMax> & out, std::size_t v)
{
    VertexMask seen = bit(v);
    VertexMask frontier = seen;
    while (frontier) {
        std::size_t u = lowest(frontier);
        frontier &= frontier - 1;
        VertexMask fresh = out[u] & ~seen;
        seen |= fresh;
        frontier |= fresh;
    }
    return seen;
}

} // namespace

PatternDag PatternDag::from_arcs(std::size_t n, std::span<const Edge> arcs)
{
    if (n > kPatternHardMax)
        throw GuardExceeded("pattern too large");
    PatternDag d(n);
    for (auto [u, v] : arcs) {
        if (u >= n || v >= n || u == v)
            throw GraphError("invalid pattern arc");
        d.add_arc(u, v);
    }
    if (! d.is_acyclic())
        throw GraphError("pattern orientation has a directed cycle");
    return d;
}

void PatternDag::add_arc(std::size_t u, std::size_t v)
{
    out_[u] |= bit(v);
    in_[v] |= bit(u);
}

VertexMask PatternDag::sources() const
{
    VertexMask s = 0;
    for (std::size_t v = 0; v < n_; ++v)
        if (in_[v] == 0)
            s |= bit(v);
    return s;
}

VertexMask PatternDag::reach(std::size_t v) const { return reach_from(out_, v); }

std::vector<std::size_t> PatternDag::topological_order() const
{
    std::vector<std::size_t> order;
    VertexMask placed = 0;
    VertexMask all = n_ == 32 ? ~VertexMask{0} : bit(n_) - 1;
    while (placed != all) {
        bool progress = false;
        for (std::size_t v = 0; v < n_; ++v)
            if (! (placed & bit(v)) && (in_[v] & ~placed) == 0) {
                order.push_back(v);
                placed |= bit(v);
                progress = true;
                break;
            }
        if (! progress)
            return {};
    }
    return order;
}

bool PatternDag::is_acyclic() const { return topological_order().size() == n_; }

Pattern PatternDag::underlying() const
{
    Pattern h(n_);
    for (std::size_t u = 0; u < n_; ++u)
        for (VertexMask m = out_[u]; m; m &= m - 1)
            h.add_edge(u, lowest(m));
    return h;
}

std::vector<Edge> PatternDag::arcs() const
{
    std::vector<Edge> out;
    for (std::size_t u = 0; u < n_; ++u)
        for (VertexMask m = out_[u]; m; m &= m - 1)
            out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(lowest(m)));
    return out;
}

namespace {

void orient_from(const std::vector<Edge> & edges, std::size_t i, PatternDag & cur,
                 std::array<VertexMask, kPatternHardMax> & out, std::vector<PatternDag> & result)
{
    // edges are decided from the highest index down, choice 0 first, which
    // reproduces increasing mask order
    if (i == 0) {
        result.push_back(cur);
        return;
    }
    auto [a, b] = edges[i - 1];
    for (int flip = 0; flip < 2; ++flip) {
        std::size_t u = flip ? b : a;
        std::size_t v = flip ? a : b;
        if (reach_from(out, v) & bit(u))
            continue;
        auto saved = cur;
        out[u] |= bit(v);
        cur.add_arc(u, v);
        orient_from(edges, i - 1, cur, out, result);
        out[u] &= ~bit(v);
        cur = saved;
    }
}

} // namespace

std::vector<PatternDag> acyclic_orientations(const Pattern & h, const PatternLimits & limits)
{
    auto edges = h.edges();
    if (edges.size() > limits.max_orientation_edges)
        throw GuardExceeded("pattern has " + std::to_string(edges.size()) + " edges, orientation cap is " +
                            std::to_string(limits.max_orientation_edges));
    std::vector<PatternDag> result;
    PatternDag cur(h.num_vertices());
    std::array<VertexMask, kPatternHardMax> out{};
    orient_from(edges, edges.size(), cur, out, result);
    return result;
}

Hypergraph reachability_hypergraph(const PatternDag & d)
{
    if (! d.is_acyclic())
        throw GraphError("reachability hypergraph needs an acyclic orientation");
    Hypergraph f{d.num_vertices(), {}};
    for (VertexMask s = d.sources(); s; s &= s - 1)
        f.edges.push_back(d.reach(lowest(s)));
    return f;
}

bool gyo_reduces(const Hypergraph & f)
{
    std::vector<VertexMask> edges = f.edges;
    bool changed = true;
    while (changed && ! edges.empty()) {
        changed = false;
        // vertices in at most one hyperedge
        VertexMask once = 0, twice = 0;
        for (auto e : edges) {
            twice |= once & e;
            once |= e;
        }
        VertexMask lonely = once & ~twice;
        if (lonely) {
            for (auto & e : edges)
                e &= ~lonely;
            changed = true;
        }
        // hyperedges that are empty or contained in another one
        for (std::size_t i = 0; i < edges.size(); ++i) {
            bool absorbed = edges[i] == 0;
            for (std::size_t j = 0; j < edges.size() && ! absorbed; ++j)
                absorbed = j != i && (edges[i] & edges[j]) == edges[i];
            if (absorbed) {
                edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return edges.empty();
}

bool has_running_intersection(const Hypergraph & f, const JoinTree & t)
{
    const std::size_t k = f.edges.size();
    if (k == 0)
        return t.edges.empty();
    if (t.edges.size() != k - 1)
        return false;
    std::vector<std::vector<std::size_t>> adj(k);
    for (auto [a, b] : t.edges) {
        if (a >= k || b >= k)
            return false;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (std::size_t s = 0; s < k; ++s) {
        // parent pointers from s; also confirms the tree is connected
        std::vector<std::size_t> parent(k, k);
        std::vector<std::size_t> stack{s};
        parent[s] = s;
        while (! stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t y : adj[x])
                if (parent[y] == k) {
                    parent[y] = x;
                    stack.push_back(y);
                }
        }
        for (std::size_t t2 = 0; t2 < k; ++t2) {
            if (parent[t2] == k)
                return false;
            VertexMask common = f.edges[s] & f.edges[t2];
            for (std::size_t x = t2; x != s; x = parent[x])
                if ((f.edges[x] & common) != common)
                    return false;
        }
    }
    return true;
}

AlphaAcyclicity is_alpha_acyclic_hypergraph(const Hypergraph & f)
{
    if (! gyo_reduces(f))
        return {false, std::nullopt};

    const std::size_t k = f.edges.size();
    struct Candidate {
        std::size_t weight, a, b;
    };
    std::vector<Candidate> cand;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            cand.push_back({popcount(f.edges[a] & f.edges[b]), a, b});
    std::stable_sort(cand.begin(), cand.end(), [](const Candidate & x, const Candidate & y) { return x.weight > y.weight; });

    std::vector<std::size_t> comp(k);
    std::iota(comp.begin(), comp.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (comp[x] != x)
            x = comp[x] = comp[comp[x]];
        return x;
    };
    JoinTree t;
    for (const auto & c : cand) {
        std::size_t ra = find(c.a), rb = find(c.b);
        if (ra == rb)
            continue;
        comp[ra] = rb;
        t.edges.emplace_back(c.a, c.b);
    }
    if (! has_running_intersection(f, t))
        throw ContractViolation("GYO accepted a hypergraph but the spanning-tree join tree fails running intersection");
    return {true, std::move(t)};
}

namespace {

bool traces_form_one_cycle(const std::vector<VertexMask> & traces, VertexMask s)
{
    const std::size_t k = popcount(s);
    if (traces.size() != k)
        return false;
    std::array<VertexMask, kPatternHardMax> adj{};
    for (auto t : traces) {
        if (popcount(t) != 2)
            return false;
        std::size_t a = lowest(t), b = lowest(t & (t - 1));
        adj[a] |= bit(b);
        adj[b] |= bit(a);
    }
    for (VertexMask m = s; m; m &= m - 1)
        if (popcount(adj[lowest(m)]) != 2)
            return false;
    // 2-regular with k edges on k vertices: a single cycle iff connected
    return (reach_from(adj, lowest(s)) & s) == s;
}

} // namespace

std::optional<Obstruction> obstruction_oracle(const Hypergraph & f, std::size_t max_vertices)
{
    const std::size_t n = f.num_vertices;
    if (n > max_vertices)
        throw GuardExceeded("obstruction search limited to " + std::to_string(max_vertices) + " vertices");
    for (std::size_t size = 3; size <= n; ++size)
        for (VertexMask s = 0; s < bit(n); ++s) {
            if (popcount(s) != size)
                continue;
            std::set<VertexMask> traces;
            bool covered = false;
            for (auto e : f.edges) {
                VertexMask t = e & s;
                if (popcount(t) >= 2)
                    traces.insert(t);
                covered = covered || t == s;
            }
            std::vector<VertexMask> tv(traces.begin(), traces.end());
            if (traces_form_one_cycle(tv, s))
                return Obstruction{s, 1};
            if (! covered) {
                bool all = true;
                for (VertexMask m = s; m && all; m &= m - 1)
                    all = traces.contains(s & ~bit(lowest(m)));
                if (all)
                    return Obstruction{s, 2};
            }
        }
    return std::nullopt;
}

namespace {

bool extend_induced_path(const Pattern & h, std::vector<std::size_t> & path, VertexMask on_path, VertexMask allowed,
                         std::size_t min_length)
{
    const std::size_t start = path.front();
    const std::size_t last = path.back();
    for (VertexMask cand = h.neighbors(last) & allowed & ~on_path; cand; cand &= cand - 1) {
        std::size_t w = lowest(cand);
        VertexMask touch = h.neighbors(w) & on_path;
        if (touch == bit(last)) {
            path.push_back(w);
            if (extend_induced_path(h, path, on_path | bit(w), allowed, min_length))
                return true;
            path.pop_back();
        }
        else if (path.size() >= 2 && touch == (bit(last) | bit(start))) {
            if (path.size() + 1 >= min_length) {
                path.push_back(w);
                return true;
            }
        }
    }
    return false;
}

} // namespace

std::optional<std::vector<std::size_t>> find_induced_cycle(const Pattern & h, std::size_t min_length)
{
    const std::size_t n = h.num_vertices();
    for (std::size_t s = 0; s < n; ++s) {
        // cycle's smallest vertex is s; only larger vertices may follow
        VertexMask allowed = h.all_vertices() & ~(bit(s + 1) - 1);
        std::vector<std::size_t> path{s};
        if (extend_induced_path(h, path, bit(s), allowed, std::max<std::size_t>(min_length, 3)))
            return path;
    }
    return std::nullopt;
}

bool is_alpha_acyclic_graph(const Pattern & h, AcyclicityMethod method, const PatternLimits & limits)
{
    check_pattern_size(h, limits.max_vertices);
    auto by_orientations = [&] {
        for (const auto & d : acyclic_orientations(h, limits))
            if (! gyo_reduces(reachability_hypergraph(d)))
                return false;
        return true;
    };
    auto by_cycles = [&] { return ! find_induced_cycle(h, 6).has_value(); };

    switch (method) {
    case AcyclicityMethod::orientations:
        return by_orientations();
    case AcyclicityMethod::induced_cycles:
        return by_cycles();
    case AcyclicityMethod::both: {
        bool a = by_orientations();
        bool b = by_cycles();
        if (a != b)
            throw ContractViolation("orientation and induced-cycle deciders disagree on " + describe(h));
        return a;
    }
    }
    return false;
}

const std::vector<CanonicalKey> & c6_spanning_subgraph_keys()
{
    static const std::vector<CanonicalKey> keys = [] {
        auto c6 = cycle_pattern(6).edges();
        std::set<CanonicalKey> found;
        for (unsigned mask = 0; mask < 64; ++mask) {
            Pattern h(6);
            for (std::size_t i = 0; i < 6; ++i)
                if ((mask >> i) & 1u)
                    h.add_edge(c6[i].first, c6[i].second);
            found.insert(canonical_key(h));
        }
        return std::vector<CanonicalKey>(found.begin(), found.end());
    }();
    return keys;
}

Classification classify(const Pattern & h, const PatternLimits & limits)
{
    check_pattern_size(h, limits.max_vertices);
    Classification c;

    c.hom_witness = find_induced_cycle(h, 6);
    c.hom_easy = ! c.hom_witness;

    c.inj_easy = true;
    for_each_partition(h.num_vertices(), [&](const Partition & p) {
        if (! c.inj_easy)
            return;
        auto q = quotient(h, p);
        if (q.has_loop)
            return;
        if (auto cyc = find_induced_cycle(q.graph, 6)) {
            c.inj_easy = false;
            c.inj_witness = QuotientWitness{p, *cyc};
        }
    });

    c.ind_easy = true;
    const auto & keys = c6_spanning_subgraph_keys();
    const std::size_t n = h.num_vertices();
    if (n >= 6)
        for (VertexMask u = 0; u < bit(n) && c.ind_easy; ++u) {
            if (popcount(u) != 6)
                continue;
            if (std::binary_search(keys.begin(), keys.end(), canonical_key(h.induced(u)))) {
                c.ind_easy = false;
                c.ind_witness = u;
            }
        }
    return c;
}

nlohmann::json to_json(const Classification & c, const std::vector<std::uint64_t> & labels)
{
    auto label = [&](std::size_t v) { return v < labels.size() ? labels[v] : static_cast<std::uint64_t>(v); };
    nlohmann::json witnesses = nlohmann::json::object();
    if (c.hom_witness) {
        nlohmann::json cyc = nlohmann::json::array();
        for (auto v : *c.hom_witness)
            cyc.push_back(label(v));
        witnesses["hom"] = {{"kind", "induced_cycle"}, {"vertices", cyc}};
    }
    if (c.inj_witness) {
        const auto & blocks = c.inj_witness->partition.blocks();
        nlohmann::json part = nlohmann::json::array();
        for (auto b : blocks) {
            nlohmann::json blk = nlohmann::json::array();
            for (VertexMask m = b; m; m &= m - 1)
                blk.push_back(label(lowest(m)));
            part.push_back(blk);
        }
        nlohmann::json cyc = nlohmann::json::array();
        for (auto i : c.inj_witness->cycle)
            cyc.push_back(part[i]);
        witnesses["inj"] = {{"kind", "quotient_induced_cycle"}, {"partition", part}, {"cycle_blocks", cyc}};
    }
    if (c.ind_witness) {
        nlohmann::json set = nlohmann::json::array();
        for (VertexMask m = *c.ind_witness; m; m &= m - 1)
            set.push_back(label(lowest(m)));
        witnesses["ind"] = {{"kind", "induced_c6_spanning_subgraph"}, {"vertices", set}};
    }
    return {{"hom_easy", c.hom_easy}, {"inj_easy", c.inj_easy}, {"ind_easy", c.ind_easy}, {"witnesses", witnesses}};
}

} // namespace degencount
