#include <degencount/errors.hpp>
#include <degencount/pattern.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

namespace degencount {

namespace {

VertexMask bit(std::size_t v) { return VertexMask{1} << v; }

std::size_t popcount(VertexMask m) { return static_cast<std::size_t>(std::popcount(m)); }

std::size_t lowest(VertexMask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

} // namespace

Pattern::Pattern(std::size_t n) : n_(n)
{
    if (n > kPatternHardMax)
        throw GuardExceeded("patterns are limited to " + std::to_string(kPatternHardMax) + " vertices");
}

Pattern Pattern::from_edges(std::size_t n, std::span<const Edge> edges)
{
    Pattern h(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw GraphError("pattern edge endpoint out of range");
        if (u == v)
            throw GraphError("self-loop in pattern");
        h.add_edge(u, v);
    }
    return h;
}

Pattern Pattern::from_graph(const Graph & g)
{
    Pattern h(g.num_vertices());
    for (auto [u, v] : g.edges())
        h.add_edge(u, v);
    return h;
}

std::size_t Pattern::num_edges() const
{
    std::size_t twice = 0;
    for (std::size_t v = 0; v < n_; ++v)
        twice += popcount(adj_[v]);
    return twice / 2;
}

std::size_t Pattern::degree(std::size_t v) const { return popcount(adj_[v]); }

void Pattern::add_edge(std::size_t u, std::size_t v)
{
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Pattern::remove_edge(std::size_t u, std::size_t v)
{
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

std::vector<Edge> Pattern::edges() const
{
    std::vector<Edge> out;
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = u + 1; v < n_; ++v)
            if (has_edge(u, v))
                out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return out;
}

std::vector<Edge> Pattern::non_edges() const
{
    std::vector<Edge> out;
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = u + 1; v < n_; ++v)
            if (! has_edge(u, v))
                out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return out;
}

Graph Pattern::to_graph() const
{
    auto e = edges();
    return Graph::from_edges(n_, e);
}

Pattern Pattern::induced(VertexMask mask) const
{
    std::array<std::size_t, kPatternHardMax> index{};
    std::size_t k = 0;
    for (std::size_t v = 0; v < n_; ++v)
        if (mask & bit(v))
            index[v] = k++;
    Pattern out(k);
    for (std::size_t u = 0; u < n_; ++u) {
        if (! (mask & bit(u)))
            continue;
        VertexMask nb = adj_[u] & mask;
        while (nb) {
            std::size_t v = lowest(nb);
            nb &= nb - 1;
            out.adj_[index[u]] |= bit(index[v]);
        }
    }
    return out;
}

Pattern Pattern::permuted(std::span<const std::size_t> perm) const
{
    Pattern out(n_);
    for (auto [u, v] : edges())
        out.add_edge(perm[u], perm[v]);
    return out;
}

std::vector<VertexMask> Pattern::components() const
{
    std::vector<VertexMask> out;
    VertexMask left = all_vertices();
    while (left) {
        VertexMask comp = bit(lowest(left));
        VertexMask frontier = comp;
        while (frontier) {
            std::size_t v = lowest(frontier);
            frontier &= frontier - 1;
            VertexMask fresh = adj_[v] & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

bool Pattern::is_connected() const { return components().size() <= 1; }

bool Pattern::is_forest() const { return num_edges() + components().size() == n_; }

void check_pattern_size(const Pattern & h, std::size_t cap)
{
    if (h.num_vertices() > cap)
        throw GuardExceeded("pattern has " + std::to_string(h.num_vertices()) + " vertices, cap is " + std::to_string(cap));
}

Pattern cycle_pattern(std::size_t k)
{
    if (k < 3)
        throw ParseError("cycles need at least 3 vertices");
    Pattern h(k);
    for (std::size_t i = 0; i < k; ++i)
        h.add_edge(i, (i + 1) % k);
    return h;
}

Pattern path_pattern(std::size_t k)
{
    Pattern h(k);
    for (std::size_t i = 0; i + 1 < k; ++i)
        h.add_edge(i, i + 1);
    return h;
}

Pattern complete_pattern(std::size_t k)
{
    Pattern h(k);
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = u + 1; v < k; ++v)
            h.add_edge(u, v);
    return h;
}

Pattern complete_bipartite_pattern(std::size_t a, std::size_t b)
{
    Pattern h(a + b);
    for (std::size_t u = 0; u < a; ++u)
        for (std::size_t v = 0; v < b; ++v)
            h.add_edge(u, a + v);
    return h;
}

Pattern star_pattern(std::size_t k) { return complete_bipartite_pattern(1, k); }

Pattern pendant_cycle_pattern(std::size_t k)
{
    auto c = cycle_pattern(k);
    Pattern h(k + 1);
    for (auto [u, v] : c.edges())
        h.add_edge(u, v);
    h.add_edge(0, k);
    return h;
}

Pattern empty_pattern(std::size_t n) { return Pattern(n); }

namespace {

std::size_t parse_size(std::string_view tok, const std::string & spec)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("cannot parse pattern '" + spec + "'");
    if (value > kPatternHardMax)
        throw GuardExceeded("pattern '" + spec + "' exceeds " + std::to_string(kPatternHardMax) + " vertices");
    return value;
}

std::uint64_t parse_label(std::string_view tok, const std::string & spec)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("cannot parse pattern '" + spec + "'");
    return value;
}

NamedPattern identity_named(Pattern h, std::string name)
{
    std::vector<std::uint64_t> labels(h.num_vertices());
    std::iota(labels.begin(), labels.end(), std::uint64_t{0});
    return {std::move(h), std::move(labels), std::move(name)};
}

NamedPattern parse_edge_literal(const std::string & spec)
{
    std::string_view body = spec;
    std::optional<std::size_t> fixed_n;
    if (auto colon = body.find(':'); colon != std::string_view::npos) {
        fixed_n = parse_size(body.substr(0, colon), spec);
        body.remove_prefix(colon + 1);
    }

    std::vector<std::uint64_t> labels;
    std::vector<Edge> edges;
    auto intern = [&](std::uint64_t label) -> Vertex {
        if (fixed_n) {
            if (label >= *fixed_n)
                throw ParseError("vertex " + std::to_string(label) + " out of range in pattern '" + spec + "'");
            return static_cast<Vertex>(label);
        }
        auto it = std::find(labels.begin(), labels.end(), label);
        if (it != labels.end())
            return static_cast<Vertex>(it - labels.begin());
        labels.push_back(label);
        return static_cast<Vertex>(labels.size() - 1);
    };

    while (! body.empty()) {
        auto comma = body.find(',');
        auto item = body.substr(0, comma);
        body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
        if (item.empty())
            continue;
        auto dash = item.find('-');
        if (dash == std::string_view::npos)
            throw ParseError("expected 'u-v' in pattern '" + spec + "'");
        auto a = intern(parse_label(item.substr(0, dash), spec));
        auto b = intern(parse_label(item.substr(dash + 1), spec));
        if (a == b)
            throw ParseError("self-loop in pattern '" + spec + "'");
        edges.emplace_back(a, b);
    }

    if (fixed_n) {
        labels.resize(*fixed_n);
        std::iota(labels.begin(), labels.end(), std::uint64_t{0});
    }
    if (labels.size() > kPatternHardMax)
        throw GuardExceeded("pattern '" + spec + "' exceeds " + std::to_string(kPatternHardMax) + " vertices");
    auto h = Pattern::from_edges(labels.size(), edges);
    return {std::move(h), std::move(labels), spec};
}

} // namespace

NamedPattern parse_pattern(const std::string & spec)
{
    if (spec.empty())
        throw ParseError("empty pattern spec");
    if (spec.front() == '@') {
        auto g = load_graph_file(spec.substr(1));
        if (g.num_vertices() > kPatternHardMax)
            throw GuardExceeded("pattern file has too many vertices");
        return {Pattern::from_graph(g), g.labels(), spec};
    }
    std::string_view s = spec;
    if (s.starts_with("C'"))
        return identity_named(pendant_cycle_pattern(parse_size(s.substr(2), spec)), spec);
    if (s.starts_with("star"))
        return identity_named(star_pattern(parse_size(s.substr(4), spec)), spec);
    if (s.size() > 1 && (s[0] == 'C' || s[0] == 'P' || s[0] == 'K')) {
        auto rest = s.substr(1);
        if (s[0] == 'K') {
            if (auto comma = rest.find(','); comma != std::string_view::npos)
                return identity_named(complete_bipartite_pattern(parse_size(rest.substr(0, comma), spec),
                                                                 parse_size(rest.substr(comma + 1), spec)),
                                      spec);
            return identity_named(complete_pattern(parse_size(rest, spec)), spec);
        }
        if (s[0] == 'C')
            return identity_named(cycle_pattern(parse_size(rest, spec)), spec);
        return identity_named(path_pattern(parse_size(rest, spec)), spec);
    }
    return parse_edge_literal(spec);
}

Partition::Partition(std::size_t n, std::vector<VertexMask> blocks) : n_(n), blocks_(std::move(blocks))
{
    VertexMask seen = 0;
    for (auto b : blocks_) {
        if (b == 0 || (seen & b))
            throw GraphError("partition blocks must be nonempty and disjoint");
        seen |= b;
    }
    VertexMask all = n == 32 ? ~VertexMask{0} : bit(n) - 1;
    if (seen != all)
        throw GraphError("partition blocks do not cover the ground set");
    std::sort(blocks_.begin(), blocks_.end(), [](VertexMask a, VertexMask b) { return lowest(a) < lowest(b); });
}

Partition Partition::singletons(std::size_t n)
{
    std::vector<VertexMask> blocks(n);
    for (std::size_t v = 0; v < n; ++v)
        blocks[v] = bit(v);
    return Partition(n, std::move(blocks));
}

Partition Partition::from_labels(std::span<const std::uint8_t> labels)
{
    std::vector<VertexMask> blocks;
    for (std::size_t v = 0; v < labels.size(); ++v) {
        if (labels[v] >= blocks.size())
            blocks.resize(labels[v] + 1, 0);
        blocks[labels[v]] |= bit(v);
    }
    std::erase(blocks, VertexMask{0});
    return Partition(labels.size(), std::move(blocks));
}

std::vector<std::uint8_t> Partition::labels() const
{
    std::vector<std::uint8_t> out(n_);
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        VertexMask b = blocks_[i];
        while (b) {
            out[lowest(b)] = static_cast<std::uint8_t>(i);
            b &= b - 1;
        }
    }
    return out;
}

std::size_t PartitionHash::operator()(const Partition & p) const
{
    std::size_t h = p.ground_size();
    for (auto b : p.blocks())
        h = h * 1000003u ^ b;
    return h;
}

void for_each_partition(std::size_t n, const std::function<void(const Partition &)> & fn)
{
    if (n > kPatternHardMax)
        throw GuardExceeded("partition ground set too large");
    if (n == 0) {
        fn(Partition(0, {}));
        return;
    }
    // restricted-growth strings a[0]=0, a[i] <= 1 + max(a[0..i-1])
    std::vector<std::uint8_t> a(n, 0), prefix_max(n, 0);
    while (true) {
        fn(Partition::from_labels(a));
        std::size_t i = n - 1;
        while (i > 0 && a[i] > prefix_max[i - 1])
            --i;
        if (i == 0)
            return;
        ++a[i];
        prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            a[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

std::vector<Partition> enumerate_partitions(std::size_t n)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition & p) { out.push_back(p); });
    return out;
}

std::vector<Partition> enumerate_partitions(const Pattern & h, std::size_t cap)
{
    check_pattern_size(h, cap);
    return enumerate_partitions(h.num_vertices());
}

QuotientResult quotient(const Pattern & h, const Partition & p)
{
    if (p.ground_size() != h.num_vertices())
        throw GraphError("partition ground set does not match the pattern");
    const auto & blocks = p.blocks();
    QuotientResult r{Pattern(blocks.size()), false};
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        VertexMask reach = 0;
        VertexMask b = blocks[i];
        while (b) {
            reach |= h.neighbors(lowest(b));
            b &= b - 1;
        }
        if (reach & blocks[i])
            r.has_loop = true;
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            if (reach & blocks[j])
                r.graph.add_edge(i, j);
    }
    return r;
}

bool refines(const Partition & p, const Partition & q)
{
    if (p.ground_size() != q.ground_size())
        throw GraphError("partitions over different ground sets");
    for (auto b : p.blocks()) {
        bool inside = false;
        for (auto c : q.blocks())
            if ((b & c) == b) {
                inside = true;
                break;
            }
        if (! inside)
            return false;
    }
    return true;
}

Partition relative_partition(const Partition & p, const Partition & q)
{
    if (! refines(p, q))
        throw GraphError("relative partition requires p to refine q");
    const auto & pb = p.blocks();
    std::vector<VertexMask> blocks;
    for (auto c : q.blocks()) {
        VertexMask m = 0;
        for (std::size_t i = 0; i < pb.size(); ++i)
            if ((pb[i] & c) == pb[i])
                m |= bit(i);
        blocks.push_back(m);
    }
    return Partition(pb.size(), std::move(blocks));
}

std::int64_t mobius_partition(const Partition & p)
{
    std::int64_t value = 1;
    for (auto b : p.blocks())
        for (std::int64_t f = 2; f < static_cast<std::int64_t>(popcount(b)); ++f)
            value *= f;
    return (p.ground_size() - p.num_blocks()) % 2 ? -value : value;
}

MobiusTable poset_mobius(std::size_t n, const std::function<bool(std::size_t, std::size_t)> & leq)
{
    MobiusTable t;
    t.n_ = n;
    t.leq_.assign(n * n, 0);
    t.mu_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t.leq_[i * n + j] = leq(i, j) ? 1 : 0;

    for (std::size_t i = 0; i < n; ++i) {
        if (! t.leq_[i * n + i])
            throw GraphError("order relation is not reflexive");
        for (std::size_t j = i + 1; j < n; ++j)
            if (t.leq_[i * n + j] && t.leq_[j * n + i])
                throw GraphError("order relation is not antisymmetric");
    }
    if (n <= 400)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (t.leq_[i * n + j])
                    for (std::size_t k = 0; k < n; ++k)
                        if (t.leq_[j * n + k] && ! t.leq_[i * n + k])
                            throw GraphError("order relation is not transitive");

    // a linear extension: strictly smaller elements have strictly smaller
    // down-sets
    std::vector<std::size_t> down(n, 0), ext(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            down[j] += t.leq_[i * n + j];
    std::iota(ext.begin(), ext.end(), std::size_t{0});
    std::stable_sort(ext.begin(), ext.end(), [&](std::size_t a, std::size_t b) { return down[a] < down[b]; });

    for (std::size_t i = 0; i < n; ++i) {
        t.mu_[i * n + i] = 1;
        for (std::size_t y : ext) {
            if (y == i || ! t.leq_[i * n + y])
                continue;
            std::int64_t sum = 0;
            for (std::size_t z = 0; z < n; ++z)
                if (z != y && t.leq_[i * n + z] && t.leq_[z * n + y])
                    sum += t.mu_[i * n + z];
            t.mu_[i * n + y] = -sum;
        }
    }
    return t;
}

namespace {

// Calls fn on every partition R with from <= R <= q.
void for_each_between(const Partition & from, const Partition & q, const std::function<void(const Partition &)> & fn)
{
    auto rel = relative_partition(from, q);
    const auto & fb = from.blocks();
    std::vector<std::vector<std::size_t>> groups;
    for (auto c : rel.blocks()) {
        std::vector<std::size_t> g;
        for (VertexMask m = c; m; m &= m - 1)
            g.push_back(lowest(m));
        groups.push_back(std::move(g));
    }

    std::vector<std::vector<Partition>> local;
    for (auto & g : groups)
        local.push_back(enumerate_partitions(g.size()));

    std::vector<std::size_t> choice(groups.size(), 0);
    while (true) {
        std::vector<VertexMask> blocks;
        for (std::size_t gi = 0; gi < groups.size(); ++gi)
            for (auto lb : local[gi][choice[gi]].blocks()) {
                VertexMask m = 0;
                for (VertexMask x = lb; x; x &= x - 1)
                    m |= fb[groups[gi][lowest(x)]];
                blocks.push_back(m);
            }
        fn(Partition(from.ground_size(), std::move(blocks)));

        std::size_t gi = 0;
        while (gi < groups.size() && ++choice[gi] == local[gi].size())
            choice[gi++] = 0;
        if (gi == groups.size())
            return;
    }
}

} // namespace

std::unordered_map<Partition, std::int64_t, PartitionHash> restricted_partition_mobius(
    const std::vector<Partition> & family, const Partition & from)
{
    std::unordered_map<Partition, std::int64_t, PartitionHash> in_family;
    std::vector<const Partition *> above;
    for (const auto & q : family)
        if (refines(from, q)) {
            in_family.emplace(q, 0);
            above.push_back(&q);
        }
    if (! in_family.contains(from))
        throw GraphError("restricted Möbius base element is not in the family");

    // finer partitions first, so every strict lower bound is finished
    std::stable_sort(above.begin(), above.end(),
                     [](const Partition * a, const Partition * b) { return a->num_blocks() > b->num_blocks(); });

    std::unordered_map<Partition, std::int64_t, PartitionHash> mu;
    mu.emplace(from, 1);
    for (const Partition * q : above) {
        if (*q == from)
            continue;
        std::int64_t sum = 0;
        for_each_between(from, *q, [&](const Partition & r) {
            if (r == *q)
                return;
            if (auto it = mu.find(r); it != mu.end())
                sum += it->second;
        });
        mu.emplace(*q, -sum);
    }
    return mu;
}

std::vector<Supergraph> enumerate_supergraphs(const Pattern & h, const PatternLimits & limits)
{
    check_pattern_size(h, limits.max_vertices);
    auto missing = h.non_edges();
    if (missing.size() > limits.max_supergraph_nonedges)
        throw GuardExceeded("pattern has " + std::to_string(missing.size()) + " non-edges, supergraph cap is " +
                            std::to_string(limits.max_supergraph_nonedges));
    std::vector<Supergraph> out;
    out.reserve(std::size_t{1} << missing.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << missing.size()); ++mask) {
        Supergraph s{h, static_cast<std::size_t>(std::popcount(mask))};
        for (std::size_t i = 0; i < missing.size(); ++i)
            if ((mask >> i) & 1u)
                s.graph.add_edge(missing[i].first, missing[i].second);
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

class Canonizer {
public:
    explicit Canonizer(const Pattern & h) : h_(h), n_(h.num_vertices()) {}

    CanonicalForm run()
    {
        std::vector<std::uint8_t> cells(n_, 0);
        search(cells);
        CanonicalForm f;
        f.key.push_back(static_cast<char>(n_));
        for (auto row : best_rows_)
            f.key.append(reinterpret_cast<const char *>(&row), sizeof row);
        f.perm = best_perm_;
        return f;
    }

private:
    // colour refinement; cell ids stay ordered consistently with the input
    std::size_t refine(std::vector<std::uint8_t> & cells) const
    {
        std::size_t count = cells.empty() ? 0 : *std::max_element(cells.begin(), cells.end()) + 1u;
        while (true) {
            std::vector<std::vector<std::uint8_t>> sig(n_);
            for (std::size_t v = 0; v < n_; ++v) {
                sig[v].assign(count + 1, 0);
                sig[v][0] = cells[v];
                for (VertexMask nb = h_.neighbors(v); nb; nb &= nb - 1)
                    ++sig[v][1 + cells[lowest(nb)]];
            }
            auto sorted = sig;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            for (std::size_t v = 0; v < n_; ++v)
                cells[v] = static_cast<std::uint8_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
            if (sorted.size() == count)
                return count;
            count = sorted.size();
        }
    }

    void search(std::vector<std::uint8_t> cells)
    {
        std::size_t count = refine(cells);
        if (count == n_) {
            leaf(cells);
            return;
        }
        std::vector<std::size_t> size(count, 0);
        for (auto c : cells)
            ++size[c];
        std::uint8_t target = 0;
        while (size[target] == 1)
            ++target;

        std::vector<std::size_t> candidates;
        for (std::size_t v = 0; v < n_; ++v) {
            if (cells[v] != target)
                continue;
            bool twin = false;
            for (std::size_t u : candidates)
                if ((h_.neighbors(u) & ~bit(v)) == (h_.neighbors(v) & ~bit(u))) {
                    twin = true;
                    break;
                }
            if (! twin)
                candidates.push_back(v);
        }

        for (std::size_t v : candidates) {
            auto next = cells;
            for (std::size_t u = 0; u < n_; ++u)
                if (u == v)
                    next[u] = target;
                else if (cells[u] >= target)
                    next[u] = static_cast<std::uint8_t>(cells[u] + 1);
            search(std::move(next));
        }
    }

    void leaf(const std::vector<std::uint8_t> & cells)
    {
        std::vector<VertexMask> rows(n_, 0);
        for (std::size_t v = 0; v < n_; ++v)
            for (VertexMask nb = h_.neighbors(v); nb; nb &= nb - 1)
                rows[cells[v]] |= bit(cells[lowest(nb)]);
        if (! have_best_ || rows > best_rows_) {
            have_best_ = true;
            best_rows_ = std::move(rows);
            best_perm_.assign(cells.begin(), cells.end());
        }
    }

    const Pattern & h_;
    std::size_t n_;
    std::vector<VertexMask> best_rows_;
    std::vector<std::size_t> best_perm_;
    bool have_best_ = false;
};

} // namespace

CanonicalForm canonical_form(const Pattern & h) { return Canonizer(h).run(); }

CanonicalKey canonical_key(const Pattern & h) { return canonical_form(h).key; }

Pattern canonical_pattern(const Pattern & h)
{
    auto f = canonical_form(h);
    return h.permuted(f.perm);
}

bool isomorphic(const Pattern & a, const Pattern & b)
{
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
        return false;
    return canonical_key(a) == canonical_key(b);
}

namespace {

std::uint64_t count_automorphisms_from(const Pattern & h, std::vector<std::size_t> & image, VertexMask used, std::size_t v)
{
    const std::size_t n = h.num_vertices();
    if (v == n)
        return 1;
    std::uint64_t total = 0;
    for (std::size_t w = 0; w < n; ++w) {
        if ((used & bit(w)) || h.degree(w) != h.degree(v))
            continue;
        bool ok = true;
        for (std::size_t u = 0; u < v && ok; ++u)
            ok = h.has_edge(u, v) == h.has_edge(image[u], w);
        if (! ok)
            continue;
        image[v] = w;
        total += count_automorphisms_from(h, image, used | bit(w), v + 1);
    }
    return total;
}

} // namespace

BigInt count_automorphisms(const Pattern & h)
{
    if (h.num_vertices() > 20)
        throw GuardExceeded("automorphism count limited to 20 vertices");
    std::vector<std::size_t> image(h.num_vertices());
    return BigInt(count_automorphisms_from(h, image, 0, 0));
}

std::vector<Pattern> all_graphs_up_to_iso(std::size_t n)
{
    if (n > 6)
        throw GuardExceeded("exhaustive graph generation is limited to 6 vertices");
    auto pairs = Pattern(n).non_edges();
    std::set<CanonicalKey> seen;
    std::vector<Pattern> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        Pattern h(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1u)
                h.add_edge(pairs[i].first, pairs[i].second);
        auto f = canonical_form(h);
        if (seen.insert(f.key).second)
            out.push_back(h.permuted(f.perm));
    }
    return out;
}

std::string describe(const Pattern & h)
{
    std::ostringstream os;
    os << h.num_vertices() << ':';
    bool first = true;
    for (auto [u, v] : h.edges()) {
        os << (first ? "" : ",") << u << '-' << v;
        first = false;
    }
    return os.str();
}

} // namespace degencount
