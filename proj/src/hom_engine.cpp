#include <degencount/errors.hpp>
#include <degencount/hom_engine.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <string>
#include <unordered_map>

namespace degencount {

namespace {

std::size_t lowest(VertexMask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

} // namespace

HostCache::HostCache(const Graph & g) : g_(&g) {}

HostCache::HostCache(const Graph & g, DegeneracyOrder order) : g_(&g), order_(std::move(order)) {}

const DegeneracyOrder & HostCache::order() const
{
    if (! order_)
        order_ = degeneracy_order(*g_);
    return *order_;
}

const OrientedGraph & HostCache::oriented() const
{
    if (! oriented_)
        oriented_ = orient_by_degeneracy(*g_, order());
    return *oriented_;
}

namespace {

template <typename Count>
BasicRelation<Count> materialize(const PatternDag & d, std::size_t source, const OrientedGraph & g,
                                 const std::vector<std::size_t> & topo_pos)
{
    BasicRelation<Count> rel;
    for (VertexMask m = d.reach(source); m; m &= m - 1)
        rel.scope.push_back(lowest(m));
    std::sort(rel.scope.begin(), rel.scope.end(), [&](std::size_t a, std::size_t b) { return topo_pos[a] < topo_pos[b]; });

    const std::size_t w = rel.scope.size();
    // for each scope position, the earlier scope positions with an arc into it
    std::vector<std::vector<std::size_t>> preds(w);
    for (std::size_t i = 0; i < w; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (d.has_arc(rel.scope[j], rel.scope[i]))
                preds[i].push_back(j);
    for (std::size_t i = 1; i < w; ++i)
        if (preds[i].empty())
            throw ContractViolation("scope vertex without an in-arc from the scope");

    std::vector<Vertex> img(w);
    auto extend = [&](auto && self, std::size_t i) -> void {
        if (i == w) {
            rel.rows.insert(rel.rows.end(), img.begin(), img.end());
            rel.mult.push_back(Count(1));
            return;
        }
        for (Vertex x : g.out_neighbors(img[preds[i].front()])) {
            bool ok = true;
            for (std::size_t k = 1; k < preds[i].size() && ok; ++k)
                ok = g.has_arc(img[preds[i][k]], x);
            if (! ok)
                continue;
            img[i] = x;
            self(self, i + 1);
        }
    };
    for (std::size_t x = 0; x < g.num_vertices(); ++x) {
        img[0] = static_cast<Vertex>(x);
        extend(extend, 1);
    }
    return rel;
}

std::vector<std::size_t> topo_positions(const PatternDag & d)
{
    auto order = d.topological_order();
    if (order.size() != d.num_vertices())
        throw GraphError("pattern orientation has a directed cycle");
    std::vector<std::size_t> pos(d.num_vertices());
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[order[i]] = i;
    return pos;
}

std::u32string project(std::span<const Vertex> row, const std::vector<std::size_t> & cols)
{
    std::u32string key(cols.size(), U'\0');
    for (std::size_t i = 0; i < cols.size(); ++i)
        key[i] = static_cast<char32_t>(row[cols[i]]);
    return key;
}

// Sums of child multiplicities grouped by the shared columns. One shared
// vertex indexes a dense array, two are packed into a 64-bit key for an
// open-addressing table, and wider keys use a string-keyed map.
template <typename Count>
class SharedSums {
public:
    SharedSums(const BasicRelation<Count> & c, const std::vector<std::size_t> & cols, std::size_t host_n) :
        cols_(cols)
    {
        switch (cols.size()) {
        case 0:
            for (const auto & m : c.mult)
                single_ += m;
            break;
        case 1:
            dense_.assign(host_n, Count(0));
            for (std::size_t r = 0; r < c.size(); ++r)
                dense_[c.row(r)[cols[0]]] += c.mult[r];
            break;
        case 2: {
            std::size_t cap = 16;
            while (cap < 2 * c.size())
                cap <<= 1;
            keys_.assign(cap, kEmpty);
            sums_.assign(cap, Count(0));
            for (std::size_t r = 0; r < c.size(); ++r)
                sums_[slot(pack(c.row(r)))] += c.mult[r];
            break;
        }
        default:
            wide_.reserve(c.size());
            for (std::size_t r = 0; r < c.size(); ++r)
                wide_[project(c.row(r), cols)] += c.mult[r];
        }
    }

    /// Sum for the parent row whose shared columns are `pcols`; null if none.
    const Count * find(std::span<const Vertex> row, const std::vector<std::size_t> & pcols) const
    {
        switch (pcols.size()) {
        case 0:
            return &single_;
        case 1:
            return &dense_[row[pcols[0]]];
        case 2: {
            std::uint64_t key = (std::uint64_t{row[pcols[0]]} << 32) | row[pcols[1]];
            for (std::size_t i = mix(key) & (keys_.size() - 1);; i = (i + 1) & (keys_.size() - 1)) {
                if (keys_[i] == key)
                    return &sums_[i];
                if (keys_[i] == kEmpty)
                    return nullptr;
            }
        }
        default: {
            auto it = wide_.find(project(row, pcols));
            return it == wide_.end() ? nullptr : &it->second;
        }
        }
    }

private:
    static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

    static std::uint64_t mix(std::uint64_t x)
    {
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        return x;
    }
    std::uint64_t pack(std::span<const Vertex> row) const
    {
        return (std::uint64_t{row[cols_[0]]} << 32) | row[cols_[1]];
    }
    std::size_t slot(std::uint64_t key)
    {
        std::size_t i = mix(key) & (keys_.size() - 1);
        while (keys_[i] != kEmpty && keys_[i] != key)
            i = (i + 1) & (keys_.size() - 1);
        keys_[i] = key;
        return i;
    }

    std::vector<std::size_t> cols_;
    Count single_{0};
    std::vector<Count> dense_;
    std::vector<std::uint64_t> keys_;
    std::vector<Count> sums_;
    std::unordered_map<std::u32string, Count> wide_;
};

template <typename Count>
struct JoinTreeDp {
    std::vector<BasicRelation<Count>> rel;
    std::vector<std::vector<std::size_t>> adj;
    std::size_t host_n = 0;

    // Folds every child subtree of `node` into rel[node]; rows with no match
    // in some child are dropped.
    void reduce(std::size_t node, std::size_t parent)
    {
        for (std::size_t child : adj[node]) {
            if (child == parent)
                continue;
            reduce(child, node);
            auto & c = rel[child];
            auto & p = rel[node];

            std::vector<std::size_t> ccols, pcols;
            for (std::size_t i = 0; i < c.scope.size(); ++i) {
                auto it = std::find(p.scope.begin(), p.scope.end(), c.scope[i]);
                if (it != p.scope.end()) {
                    ccols.push_back(i);
                    pcols.push_back(static_cast<std::size_t>(it - p.scope.begin()));
                }
            }

            SharedSums<Count> sums(c, ccols, host_n);
            c = {};
            std::size_t w = p.width(), out = 0;
            for (std::size_t r = 0; r < p.size(); ++r) {
                const Count * m = sums.find(p.row(r), pcols);
                if (! m || is_zero(*m))
                    continue;
                if (out != r)
                    std::copy_n(p.rows.begin() + r * w, w, p.rows.begin() + out * w);
                p.mult[out] = p.mult[r] * *m;
                ++out;
            }
            p.rows.resize(out * w);
            p.mult.resize(out);
        }
    }
};

template <typename Count>
Count directed_count(const PatternDag & d, const OrientedGraph & g)
{
    if (d.num_vertices() == 0)
        return Count(1);
    auto f = reachability_hypergraph(d);
    auto acyclic = is_alpha_acyclic_hypergraph(f);
    if (! acyclic.acyclic)
        throw GraphError("reachability hypergraph of the orientation is not alpha-acyclic");

    auto pos = topo_positions(d);
    JoinTreeDp<Count> dp;
    dp.host_n = g.num_vertices();
    std::vector<std::size_t> sources;
    for (VertexMask s = d.sources(); s; s &= s - 1)
        sources.push_back(lowest(s));
    for (std::size_t s : sources)
        dp.rel.push_back(materialize<Count>(d, s, g, pos));

    const std::size_t k = dp.rel.size();
    dp.adj.assign(k, {});
    for (auto [a, b] : acyclic.tree->edges) {
        dp.adj[a].push_back(b);
        dp.adj[b].push_back(a);
    }
    std::size_t root = 0;
    for (std::size_t i = 1; i < k; ++i)
        if (std::popcount(f.edges[i]) > std::popcount(f.edges[root]))
            root = i;
    dp.reduce(root, k);

    Count total(0);
    for (const auto & m : dp.rel[root].mult)
        total += m;
    return total;
}

// Vertex of least eccentricity within the component, ties to the smallest id.
std::size_t tree_center(const Pattern & h, VertexMask comp)
{
    std::size_t best = lowest(comp), best_ecc = h.num_vertices();
    for (VertexMask m = comp; m; m &= m - 1) {
        std::size_t v = lowest(m), ecc = 0;
        for (VertexMask frontier = VertexMask{1} << v, seen = frontier; frontier; ++ecc) {
            VertexMask next = 0;
            for (VertexMask f = frontier; f; f &= f - 1)
                next |= h.neighbors(lowest(f));
            frontier = next & ~seen;
            seen |= next;
        }
        if (ecc < best_ecc) {
            best = v;
            best_ecc = ecc;
        }
    }
    return best;
}

template <typename Count>
Count forest_count(const Pattern & h, const Graph & g)
{
    const std::size_t n = g.num_vertices();
    const std::string leaf_code = "()";
    // isomorphic rooted subtrees share one table; isomorphic components one total
    std::unordered_map<std::string, std::vector<Count>> table;
    std::unordered_map<std::string, Count> component_total;
    Count product(1);
    for (VertexMask comp : h.components()) {
        std::size_t root = tree_center(h, comp);
        std::vector<std::size_t> order{root};
        std::vector<std::vector<std::size_t>> children(h.num_vertices());
        VertexMask seen = VertexMask{1} << root;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (VertexMask m = h.neighbors(order[i]) & ~seen; m; m &= m - 1) {
                std::size_t c = lowest(m);
                seen |= VertexMask{1} << c;
                children[order[i]].push_back(c);
                order.push_back(c);
            }

        std::vector<std::string> code(h.num_vertices());
        for (std::size_t i = order.size(); i-- > 0;) {
            std::size_t v = order[i];
            std::vector<std::string> parts;
            for (std::size_t c : children[v])
                parts.push_back(code[c]);
            std::sort(parts.begin(), parts.end());
            code[v] = "(";
            for (const auto & part : parts)
                code[v] += part;
            code[v] += ")";
        }
        if (auto it = component_total.find(code[root]); it != component_total.end()) {
            product *= it->second;
            continue;
        }

        Count total(0);
        if (code[root] == leaf_code) {
            total = Count(n);
        } else {
            for (std::size_t i = order.size(); i-- > 0;) {
                std::size_t v = order[i];
                if (code[v] == leaf_code || table.contains(code[v]))
                    continue;
                std::vector<std::pair<std::string, std::size_t>> groups;
                for (std::size_t c : children[v]) {
                    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto & gr) { return gr.first == code[c]; });
                    if (it == groups.end())
                        groups.emplace_back(code[c], 1);
                    else
                        ++it->second;
                }
                // table[code][x]: homomorphisms of the subtree with its root mapped to x
                std::vector<Count> cur(n, Count(1));
                for (const auto & [child, k] : groups) {
                    const std::vector<Count> * below = child == leaf_code ? nullptr : &table.at(child);
                    for (std::size_t x = 0; x < n; ++x) {
                        Count sum(0);
                        if (below)
                            for (Vertex y : g.neighbors(static_cast<Vertex>(x)))
                                sum += (*below)[y];
                        else
                            sum = Count(g.degree(static_cast<Vertex>(x)));
                        for (std::size_t j = 0; j < k; ++j)
                            cur[x] *= sum;
                    }
                }
                table.emplace(code[v], std::move(cur));
            }
            for (const auto & c : table.at(code[root]))
                total += c;
        }
        component_total.emplace(code[root], total);
        product *= total;
    }
    return product;
}

} // namespace

PartialHomRelation materialize_source_relation(const PatternDag & hdir, std::size_t source, const OrientedGraph & gdir)
{
    if (source >= hdir.num_vertices() || hdir.in(source) != 0)
        throw GraphError("relation anchor must be a source of the orientation");
    return materialize<BigInt>(hdir, source, gdir, topo_positions(hdir));
}

BigInt directed_hom_count(const PatternDag & hdir, const OrientedGraph & gdir)
{
    return with_count_promotion([&]<typename Count>() { return directed_count<Count>(hdir, gdir); });
}

BigInt hom_count_alpha_acyclic(const Pattern & h, const HostCache & host, const PatternLimits & limits)
{
    if (find_induced_cycle(h, 6))
        throw GraphError("pattern " + describe(h) + " has an induced cycle of length >= 6");
    auto orientations = acyclic_orientations(h, limits);
    return with_count_promotion([&]<typename Count>() {
        Count total(0);
        for (const auto & d : orientations)
            total += directed_count<Count>(d, host.oriented());
        return total;
    });
}

BigInt hom_count_alpha_acyclic(const Pattern & h, const Graph & g, const PatternLimits & limits)
{
    HostCache host(g);
    return hom_count_alpha_acyclic(h, host, limits);
}

BigInt forest_hom_count(const Pattern & h, const Graph & g)
{
    if (! h.is_forest())
        throw GraphError("pattern " + describe(h) + " is not a forest");
    return with_count_promotion([&]<typename Count>() { return forest_count<Count>(h, g); });
}

std::string to_string(DispatchPath p)
{
    switch (p) {
    case DispatchPath::forest:
        return "forest";
    case DispatchPath::alpha_acyclic:
        return "alpha-acyclic";
    case DispatchPath::oracle:
        return "oracle";
    case DispatchPath::oracle_fallback:
        return "oracle-fallback";
    }
    return "unknown";
}

DispatchPath plan_hom(const Pattern & h, const PatternLimits & limits)
{
    check_pattern_size(h, limits.max_vertices);
    if (h.is_forest())
        return DispatchPath::forest;
    if (! find_induced_cycle(h, 6))
        return DispatchPath::alpha_acyclic;
    return DispatchPath::oracle_fallback;
}

HomResult hom_count(const Pattern & h, const HostCache & host, const HomOptions & options)
{
    auto start = std::chrono::steady_clock::now();
    HomResult r;
    r.path = options.policy == HomPolicy::force_oracle ? DispatchPath::oracle : plan_hom(h, options.limits);
    switch (r.path) {
    case DispatchPath::forest:
        r.value = forest_hom_count(h, host.graph());
        break;
    case DispatchPath::alpha_acyclic:
        r.orientations = acyclic_orientations(h, options.limits).size();
        r.value = hom_count_alpha_acyclic(h, host, options.limits);
        r.kappa = host.order().kappa;
        break;
    case DispatchPath::oracle:
        r.value = brute_hom(h, host.graph(), options.oracle);
        break;
    case DispatchPath::oracle_fallback:
        r.warning = "exponential fallback: pattern " + describe(h) + " is not alpha-acyclic";
        r.value = brute_hom(h, host.graph(), options.oracle);
        break;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

HomResult hom_count(const Pattern & h, const Graph & g, const HomOptions & options)
{
    HostCache host(g);
    return hom_count(h, host, options);
}

} // namespace degencount
