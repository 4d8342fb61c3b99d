#include <degencount/errors.hpp>
#include <degencount/gadgets.hpp>
#include <degencount/generators.hpp>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

namespace degencount {

namespace {

void append_path(std::vector<Edge> & e, Vertex x, Vertex y, std::size_t len, Vertex & next)
{
    if (len == 1) {
        e.emplace_back(x, y);
        return;
    }
    Vertex prev = x;
    for (std::size_t i = 1; i < len; ++i) {
        e.emplace_back(prev, next);
        prev = next++;
    }
    e.emplace_back(prev, y);
}

} // namespace

Graph subdivide_edges(const Graph & f, std::size_t ell)
{
    if (ell < 2)
        throw GraphError("subdivision length must be at least 2");
    std::vector<Edge> e;
    Vertex next = static_cast<Vertex>(f.num_vertices());
    for (auto [x, y] : f.edges())
        append_path(e, x, y, ell, next);
    return Graph::from_edges(next, e);
}

Graph parallel_paths(const Graph & f, std::size_t p, std::size_t q)
{
    if (p == 0 || q == 0)
        throw GraphError("path lengths must be positive");
    if (p == 1 && q == 1)
        throw GraphError("p = q = 1 would duplicate every edge");
    std::vector<Edge> e;
    Vertex next = static_cast<Vertex>(f.num_vertices());
    for (auto [x, y] : f.edges()) {
        append_path(e, x, y, p, next);
        append_path(e, x, y, q, next);
    }
    return Graph::from_edges(next, e);
}

GadgetSuite parse_suite(const std::string & name)
{
    static const std::pair<const char *, GadgetSuite> names[] = {
        {"k0mod3", GadgetSuite::k0mod3}, {"k7", GadgetSuite::k7},         {"k5", GadgetSuite::k5},
        {"k4", GadgetSuite::k4},         {"k4mod6", GadgetSuite::k4mod6}, {"k2mod6", GadgetSuite::k2mod6},
        {"c8-system", GadgetSuite::c8_system}, {"c8_system", GadgetSuite::c8_system},
    };
    for (auto [n, s] : names)
        if (name == n)
            return s;
    throw std::invalid_argument("unknown gadget suite '" + name + "'");
}

std::string to_string(GadgetSuite s)
{
    switch (s) {
    case GadgetSuite::k0mod3: return "k0mod3";
    case GadgetSuite::k7: return "k7";
    case GadgetSuite::k5: return "k5";
    case GadgetSuite::k4: return "k4";
    case GadgetSuite::k4mod6: return "k4mod6";
    case GadgetSuite::k2mod6: return "k2mod6";
    case GadgetSuite::c8_system: return "c8-system";
    }
    return "?";
}

bool GadgetReport::all_pass() const
{
    return std::all_of(identities.begin(), identities.end(), [](const IdentityResult & r) { return r.pass; });
}

const IdentityResult * GadgetReport::find(const std::string & name) const
{
    for (const auto & r : identities)
        if (r.name == name)
            return &r;
    return nullptr;
}

nlohmann::json GadgetReport::to_json() const
{
    nlohmann::json j;
    j["construction"] = construction;
    j["graphs"] = nlohmann::json::array();
    for (const auto & g : graphs)
        j["graphs"].push_back({{"name", g.name}, {"vertices", g.vertices}, {"edges", g.edges}});
    j["identities"] = nlohmann::json::array();
    for (const auto & r : identities)
        j["identities"].push_back({{"name", r.name}, {"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)}, {"pass", r.pass}});
    j["all_pass"] = all_pass();
    return j;
}

namespace {

// Oracle counts against one graph, memoised by canonical form, with an
// optional engine re-check of every hom term the fast paths accept.
class OracleSide {
public:
    OracleSide(std::string name, const Graph & g, const GadgetOptions & options, GadgetReport & report)
        : name_(std::move(name)), g_(g), options_(options), report_(report)
    {
        report.graphs.push_back({name_, g.num_vertices(), g.num_edges()});
    }

    const Graph & graph() const { return g_; }

    BigInt hom(const Pattern & h)
    {
        auto key = canonical_key(h);
        if (auto it = hom_.find(key); it != hom_.end())
            return it->second;
        BigInt v = brute_hom(h, g_, options_.oracle);
        hom_.emplace(key, v);
        if (options_.engine_recheck && plan_hom(h) != DispatchPath::oracle_fallback) {
            BigInt fast = hom_count(h, g_).value;
            report_.identities.push_back(
                {"engine hom(" + describe(h) + ", " + name_ + ") = oracle", fast, v, fast == v});
        }
        return v;
    }

    BigInt inj(const Pattern & h)
    {
        auto key = canonical_key(h);
        if (auto it = inj_.find(key); it != inj_.end())
            return it->second;
        BigInt v = brute_inj(h, g_, options_.oracle);
        inj_.emplace(key, v);
        return v;
    }

    BigInt evaluate(const LinearCombination & lc)
    {
        BigInt total = 0;
        for (const auto & t : lc.terms())
            total += t.coefficient * hom(t.pattern);
        return total;
    }

private:
    std::string name_;
    const Graph & g_;
    const GadgetOptions & options_;
    GadgetReport & report_;
    std::map<CanonicalKey, BigInt> hom_;
    std::map<CanonicalKey, BigInt> inj_;
};

void check(GadgetReport & r, std::string name, const BigInt & lhs, const BigInt & rhs)
{
    r.identities.push_back({std::move(name), lhs, rhs, lhs == rhs});
}

BigInt sum_degree_pairs(const Graph & f)
{
    BigInt total = 0;
    for (Vertex v = 0; v < f.num_vertices(); ++v) {
        BigInt d = f.degree(v);
        total += 4 * d * (d - 1);
    }
    return total;
}

void run_k0mod3(const Graph & f, const GadgetOptions & o, GadgetReport & r)
{
    OracleSide F("F", f, o, r);
    BigInt tri = F.inj(cycle_pattern(3));
    for (std::size_t ell : o.ells) {
        std::string suffix = "[l=" + std::to_string(ell) + "]";
        Graph sub = subdivide_edges(f, ell);
        OracleSide G("G" + suffix, sub, o, r);
        Pattern c = cycle_pattern(3 * ell);
        BigInt inj_c = G.inj(c);
        check(r, "inj(C" + std::to_string(3 * ell) + ",G) = l inj(C3,F) " + suffix, inj_c, BigInt(ell) * tri);
        std::size_t gi = girth(sub);
        check(r, "girth(G) >= 3l " + suffix, gi == 0 || gi >= 3 * ell ? 1 : 0, 1);
        check(r, "girth(G) = 3l iff F has a triangle " + suffix, gi == 3 * ell ? 1 : 0, tri > 0 ? 1 : 0);
        auto family = restricted_cycle_family(3 * ell, false);
        check(r, "inj(C" + std::to_string(3 * ell) + ",G) = restricted inversion " + suffix, inj_c,
              G.evaluate(restricted_inversion(family)));
    }
}

void run_k7(const Graph & f, const GadgetOptions & o, GadgetReport & r)
{
    OracleSide F("F", f, o, r);
    Graph g = parallel_paths(f, 2, 3);
    OracleSide G("G", g, o, r);
    BigInt inj7 = G.inj(cycle_pattern(7));
    BigInt inj5 = G.inj(cycle_pattern(5));
    BigInt inj5p = G.inj(pendant_cycle_pattern(5));
    check(r, "inj(C7,G) = 7 inj(C3,F)", inj7, 7 * F.inj(cycle_pattern(3)));
    check(r, "hom(C7,G) = inj(C7,G) + 7 inj(C'5,G) + 7 inj(C5,G)", G.hom(cycle_pattern(7)), inj7 + 7 * inj5p + 7 * inj5);
    check(r, "inj(C5,G) = 10 e(F)", inj5, 10 * BigInt(f.num_edges()));
    check(r, "inj(C'5,G) = sum 4 d(d-1)", inj5p, sum_degree_pairs(f));
    if (f.num_edges() > 0)
        check(r, "girth(G) = 5", girth(g), 5);
}

void run_k5(const Graph & f, const GadgetOptions & o, GadgetReport & r)
{
    OracleSide F("F", f, o, r);
    Graph gp = parallel_paths(f, 1, 2);
    OracleSide G("G'", gp, o, r);
    Pattern c5 = cycle_pattern(5), c3 = cycle_pattern(3), c3p = pendant_cycle_pattern(3);
    BigInt hf = F.hom(c5), hg = G.hom(c5);
    BigInt i3 = F.inj(c3), i3p = F.inj(c3p);
    check(r, "hom(C5,G') - hom(C5,F) = 5 inj(C'3,F) + 13 inj(C3,F)", hg - hf, 5 * i3p + 13 * i3);
    check(r, "hom(C5,F) = inj(C5,F) + 5 inj(C'3,F) + 5 inj(C3,F)", hf, F.inj(c5) + 5 * i3p + 5 * i3);
    check(r, "hom(C5,G') = inj(C5,G') + 5 inj(C'3,G') + 5 inj(C3,G')", hg,
          G.inj(c5) + 5 * G.inj(c3p) + 5 * G.inj(c3));
    check(r, "inj(C3,G') = inj(C3,F)", G.inj(c3), i3);
    check(r, "inj(C5,G') = inj(C5,F) + 3 inj(C3,F)", G.inj(c5), F.inj(c5) + 3 * i3);
    check(r, "inj(C'3,G') = 2 inj(C'3,F) + 2 inj(C3,F)", G.inj(c3p), 2 * i3p + 2 * i3);
    check(r, "hom(C5,G') - hom(C5,F) = 15 inj(K2,F) + 20 inj(P3,F) + 15 inj(C3,F) + 5 inj(C'3,F) + 5 inj(C4,F)",
          hg - hf,
          15 * F.inj(path_pattern(2)) + 20 * F.inj(path_pattern(3)) + 15 * i3 + 5 * i3p + 5 * F.inj(cycle_pattern(4)));
}

void run_k4(const Graph & f, const GadgetOptions & o, GadgetReport & r)
{
    OracleSide F("F", f, o, r);
    Graph gp = parallel_paths(f, 1, 2);
    OracleSide G("G'", gp, o, r);
    Pattern c4 = cycle_pattern(4);
    check(r, "inj(C4,G') = inj(C4,F) + 4 inj(C3,F)", G.inj(c4), F.inj(c4) + 4 * F.inj(cycle_pattern(3)));
    check(r, "inj(C4,F) = hom(C4,F) - 2 hom(P3,F) + hom(K2,F)", F.inj(c4),
          F.hom(c4) - 2 * F.hom(path_pattern(3)) + F.hom(path_pattern(2)));
    check(r, "hom(K2,F) = 2 e(F)", F.hom(path_pattern(2)), 2 * BigInt(f.num_edges()));
    BigInt squares = 0;
    for (Vertex v = 0; v < f.num_vertices(); ++v)
        squares += BigInt(f.degree(v)) * f.degree(v);
    check(r, "hom(K1,2,F) = sum d^2", F.hom(path_pattern(3)), squares);
}

void run_k4mod6(const Graph & f, const GadgetOptions & o, GadgetReport & r)
{
    const std::size_t k = 10, ell = 3;
    OracleSide F("F", f, o, r);
    Graph g = parallel_paths(f, ell, ell + 1);
    OracleSide G("G", g, o, r);
    BigInt inj_k = G.inj(cycle_pattern(k));
    check(r, "inj(C10,G) = 10 inj(C3,F)", inj_k, BigInt(k) * F.inj(cycle_pattern(3)));
    check(r, "inj(C10,G) = restricted inversion", inj_k, G.evaluate(restricted_inversion(restricted_cycle_family(k, false))));
}

// Left side of the summed inversion: inj(C_k) + k inj(C'_{k-2}) + k inj(C_{k-2}).
BigInt summed_injective(OracleSide & s, std::size_t k)
{
    return s.inj(cycle_pattern(k)) + BigInt(k) * s.inj(pendant_cycle_pattern(k - 2)) +
           BigInt(k) * s.inj(cycle_pattern(k - 2));
}

void run_k2mod6(const Graph & f, const GadgetOptions & o, GadgetReport & r)
{
    const std::size_t k = 8;
    OracleSide F("F", f, o, r);
    Graph g = subdivide_edges(f, 2);
    OracleSide G("G", g, o, r);
    auto family = restricted_cycle_family(k, true);
    check(r, "inj(C8,G) = restricted inversion", G.inj(cycle_pattern(k)), G.evaluate(restricted_inversion(family)));
    check(r, "inj(C8,G) + 8 inj(C'6,G) + 8 inj(C6,G) = sum c_Q hom(C8/Q,G) + hom(C8,G)", summed_injective(G, k),
          G.evaluate(forest_correction(family)) + G.hom(cycle_pattern(k)));
    BigInt tri = F.inj(cycle_pattern(3));
    check(r, "inj(C'6,G) + inj(C6,G) > 0 iff F has a triangle",
          G.inj(pendant_cycle_pattern(6)) + G.inj(cycle_pattern(6)) > 0 ? 1 : 0, tri > 0 ? 1 : 0);
}

void run_c8(const Graph & f, const GadgetOptions & o, GadgetReport & r)
{
    const std::size_t k = 8;
    OracleSide F("F", f, o, r);
    Graph g = subdivide_edges(f, 2);
    Graph gp = parallel_paths(f, 2, 3);
    OracleSide G("G", g, o, r);
    OracleSide H("G'", gp, o, r);
    Pattern c3 = cycle_pattern(3), c4 = cycle_pattern(4), c6 = cycle_pattern(6), c8 = cycle_pattern(8);
    Pattern c6p = pendant_cycle_pattern(6);
    BigInt tri = F.inj(c3), sq = F.inj(c4);
    check(r, "inj(C6,G) = 2 inj(C3,F)", G.inj(c6), 2 * tri);
    check(r, "inj(C6,G') = 2 inj(C3,F)", H.inj(c6), 2 * tri);
    check(r, "inj(C8,G) = 2 inj(C4,F)", G.inj(c8), 2 * sq);
    check(r, "inj(C8,G') = 2 inj(C4,F) + 8 inj(C3,F)", H.inj(c8), 2 * sq + 8 * tri);
    check(r, "inj(C'6,G') = 2 inj(C'6,G) + 2 inj(C3,F)", H.inj(c6p), 2 * G.inj(c6p) + 2 * tri);

    auto family = restricted_cycle_family(k, true);
    auto correction = forest_correction(family);
    BigInt corr_g = G.evaluate(correction), corr_h = H.evaluate(correction);
    BigInt hom_g = G.hom(c8), hom_h = H.hom(c8);
    check(r, "G: inj(C8) + 8 inj(C'6) + 8 inj(C6) = sum c_Q hom(C8/Q) + hom(C8)", summed_injective(G, k), corr_g + hom_g);
    check(r, "G': inj(C8) + 8 inj(C'6) + 8 inj(C6) = sum c_Q hom(C8/Q) + hom(C8)", summed_injective(H, k),
          corr_h + hom_h);
    check(r, "2 inj(C4,F) + 8 inj(C'6,G) + 16 inj(C3,F) = sum c_Q hom(C8/Q,G) + hom(C8,G)",
          2 * sq + 8 * G.inj(c6p) + 16 * tri, corr_g + hom_g);
    check(r, "2 inj(C4,F) + 16 inj(C'6,G) + 40 inj(C3,F) = sum c_Q hom(C8/Q,G') + hom(C8,G')",
          2 * sq + 16 * G.inj(c6p) + 40 * tri, corr_h + hom_h);
    check(r, "8 inj(C'6,G) + 24 inj(C3,F) = S' + hom(C8,G') - hom(C8,G)", 8 * G.inj(c6p) + 24 * tri,
          (corr_h - corr_g) + hom_h - hom_g);
}

} // namespace

GadgetReport verify_gadget_identities(const Graph & f, GadgetSuite suite, const GadgetOptions & options)
{
    if (f.num_vertices() > options.max_input_vertices)
        throw GuardExceeded("gadget input has " + std::to_string(f.num_vertices()) + " vertices, cap is " +
                            std::to_string(options.max_input_vertices));
    GadgetReport r;
    r.construction = to_string(suite);
    switch (suite) {
    case GadgetSuite::k0mod3: run_k0mod3(f, options, r); break;
    case GadgetSuite::k7: run_k7(f, options, r); break;
    case GadgetSuite::k5: run_k5(f, options, r); break;
    case GadgetSuite::k4: run_k4(f, options, r); break;
    case GadgetSuite::k4mod6: run_k4mod6(f, options, r); break;
    case GadgetSuite::k2mod6: run_k2mod6(f, options, r); break;
    case GadgetSuite::c8_system: run_c8(f, options, r); break;
    }
    return r;
}

RestrictedCycleFamily restricted_cycle_family(std::size_t k, bool with_short_cycles)
{
    if (k < 3 || k > PatternLimits{}.max_vertices)
        throw GuardExceeded("cycle length out of range for partition enumeration");
    if (with_short_cycles && k < 5)
        throw GraphError("C'_{k-2} needs k >= 5");
    RestrictedCycleFamily fam;
    fam.k = k;
    Pattern c = cycle_pattern(k);
    CanonicalKey pendant_key, short_key;
    if (with_short_cycles) {
        pendant_key = canonical_key(pendant_cycle_pattern(k - 2));
        short_key = canonical_key(cycle_pattern(k - 2));
    }
    for_each_partition(k, [&](const Partition & p) {
        if (p.num_blocks() == k) {
            fam.members.push_back(p);
            return;
        }
        auto q = quotient(c, p);
        if (q.has_loop)
            return;
        if (q.graph.is_forest()) {
            fam.members.push_back(p);
            return;
        }
        if (! with_short_cycles)
            return;
        auto key = canonical_key(q.graph);
        if (key == pendant_key) {
            fam.members.push_back(p);
            fam.pendant.push_back(p);
        }
        else if (key == short_key) {
            fam.members.push_back(p);
            fam.short_cycle.push_back(p);
        }
    });
    return fam;
}

LinearCombination restricted_inversion(const RestrictedCycleFamily & family)
{
    Pattern c = cycle_pattern(family.k);
    auto mu = restricted_partition_mobius(family.members, Partition::singletons(family.k));
    LinearCombination lc;
    for (const auto & q : family.members)
        if (auto it = mu.find(q); it != mu.end())
            lc.add(quotient(c, q).graph, it->second);
    return lc;
}

LinearCombination forest_correction(const RestrictedCycleFamily & family)
{
    Pattern c = cycle_pattern(family.k);
    std::vector<Partition> bottom{Partition::singletons(family.k)};
    bottom.insert(bottom.end(), family.pendant.begin(), family.pendant.end());
    bottom.insert(bottom.end(), family.short_cycle.begin(), family.short_cycle.end());
    std::set<Partition> excluded(bottom.begin(), bottom.end());

    std::map<Partition, BigInt> coeff;
    for (const auto & p : bottom)
        for (const auto & [q, m] : restricted_partition_mobius(family.members, p))
            if (! excluded.count(q))
                coeff[q] += m;
    LinearCombination lc;
    for (const auto & [q, cq] : coeff)
        lc.add(quotient(c, q).graph, cq);
    return lc;
}

namespace {

// Lengths of the simple cycles of h, each cycle listed once.
std::vector<std::size_t> simple_cycle_lengths(const Pattern & h)
{
    std::vector<std::size_t> out;
    std::size_t n = h.num_vertices();
    for (std::size_t s = 0; s < n; ++s) {
        VertexMask allowed = h.all_vertices() & ~((VertexMask{2} << s) - 1);
        std::vector<std::size_t> path{s};
        std::function<void(std::size_t, VertexMask)> walk = [&](std::size_t v, VertexMask used) {
            for (VertexMask m = h.neighbors(v); m; m &= m - 1) {
                auto w = static_cast<std::size_t>(std::countr_zero(m));
                if (w == s && path.size() >= 3)
                    out.push_back(path.size());
                if (! ((allowed & ~used) >> w & 1u))
                    continue;
                path.push_back(w);
                walk(w, used | (VertexMask{1} << w));
                path.pop_back();
            }
        };
        walk(s, 0);
    }
    // every cycle was found once per direction
    std::sort(out.begin(), out.end());
    std::vector<std::size_t> once;
    for (std::size_t i = 0; i < out.size(); i += 2)
        once.push_back(out[i]);
    return once;
}

} // namespace

QuotientCensus quotient_census(std::size_t k)
{
    if (k < 4 || k > 9)
        throw GuardExceeded("quotient census supports 4 <= k <= 9");
    QuotientCensus c;
    c.k = k;
    Pattern ck = cycle_pattern(k);
    CanonicalKey pendant_key, short_key;
    if (k >= 5) {
        pendant_key = canonical_key(pendant_cycle_pattern(k - 2));
        short_key = canonical_key(cycle_pattern(k - 2));
    }
    CanonicalKey shorter_key = canonical_key(cycle_pattern(k - 1));
    std::map<CanonicalKey, std::size_t> index;
    std::vector<Partition> pendant, short_cycle;

    for_each_partition(k, [&](const Partition & p) {
        ++c.partitions;
        auto q = quotient(ck, p);
        if (q.has_loop) {
            ++c.loop_quotients;
            return;
        }
        auto form = canonical_form(q.graph);
        auto [it, fresh] = index.emplace(form.key, c.simple_classes.size());
        if (fresh)
            c.simple_classes.push_back({q.graph.permuted(form.perm), 0});
        ++c.simple_classes[it->second].partitions;
        if (k >= 5 && form.key == pendant_key)
            pendant.push_back(p);
        if (k >= 5 && form.key == short_key)
            short_cycle.push_back(p);
        if (form.key == shorter_key)
            ++c.one_shorter_count;
        if (k % 2 == 0) {
            std::vector<std::size_t> odd;
            for (auto len : simple_cycle_lengths(q.graph))
                if (len % 2)
                    odd.push_back(len);
            if (odd.size() == 1)
                ++c.unicyclic_odd[odd[0]];
        }
    });
    if (k % 2 == 0)
        for (std::size_t l = 3; l < k; l += 2)
            c.unicyclic_odd.emplace(l, 0);

    c.pendant_count = pendant.size();
    c.short_cycle_count = short_cycle.size();
    bool ok = k >= 5;
    for (const auto & p : pendant)
        ok = ok && std::count_if(short_cycle.begin(), short_cycle.end(), [&](const Partition & q) { return refines(p, q); }) == 2;
    for (const auto & q : short_cycle)
        ok = ok && std::count_if(pendant.begin(), pendant.end(), [&](const Partition & p) { return refines(p, q); }) == 2;
    c.refinement_two_and_two = ok;
    return c;
}

bool QuotientCensus::lemmas_hold() const
{
    bool ok = one_shorter_count == 0;
    for (const auto & [len, count] : unicyclic_odd)
        ok = ok && (2 * len <= k || count == 0);
    if (k >= 5)
        ok = ok && pendant_count == k && short_cycle_count == k && refinement_two_and_two;
    return ok;
}

nlohmann::json QuotientCensus::to_json() const
{
    nlohmann::json j;
    j["k"] = k;
    j["partitions"] = partitions;
    j["loop_quotients"] = loop_quotients;
    j["pendant_count"] = pendant_count;
    j["short_cycle_count"] = short_cycle_count;
    j["one_shorter_count"] = one_shorter_count;
    j["refinement_two_and_two"] = refinement_two_and_two;
    j["unicyclic_odd"] = nlohmann::json::object();
    for (const auto & [len, count] : unicyclic_odd)
        j["unicyclic_odd"][std::to_string(len)] = count;
    j["classes"] = nlohmann::json::array();
    for (const auto & cl : simple_classes)
        j["classes"].push_back({{"pattern", describe(cl.pattern)}, {"partitions", cl.partitions}});
    j["lemmas_hold"] = lemmas_hold();
    return j;
}

namespace {

// Incremental row echelon form over the rationals; accepts a row only if it
// is independent of the rows accepted so far.
class RankTracker {
public:
    explicit RankTracker(std::size_t width) : width_(width) {}

    bool try_add(const std::vector<BigInt> & row)
    {
        std::vector<BigRational> r(row.begin(), row.end());
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            std::size_t piv = pivots_[i];
            if (r[piv] == 0)
                continue;
            BigRational factor = r[piv] / basis_[i][piv];
            for (std::size_t j = 0; j < width_; ++j)
                r[j] -= factor * basis_[i][j];
        }
        auto it = std::find_if(r.begin(), r.end(), [](const BigRational & x) { return x != 0; });
        if (it == r.end())
            return false;
        pivots_.push_back(static_cast<std::size_t>(it - r.begin()));
        basis_.push_back(std::move(r));
        return true;
    }

    std::size_t rank() const { return basis_.size(); }

private:
    std::size_t width_;
    std::vector<std::vector<BigRational>> basis_;
    std::vector<std::size_t> pivots_;
};

std::vector<BigRational> solve_exact(std::vector<std::vector<BigInt>> m, std::vector<BigInt> b)
{
    std::size_t k = b.size();
    std::vector<std::vector<BigRational>> a(k, std::vector<BigRational>(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            a[i][j] = m[i][j];
        a[i][k] = b[i];
    }
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && a[piv][col] == 0)
            ++piv;
        if (piv == k)
            throw ContractViolation("helper matrix is singular");
        std::swap(a[piv], a[col]);
        for (std::size_t i = 0; i < k; ++i) {
            if (i == col || a[i][col] == 0)
                continue;
            BigRational factor = a[i][col] / a[col][col];
            for (std::size_t j = col; j <= k; ++j)
                a[i][j] -= factor * a[col][j];
        }
    }
    std::vector<BigRational> x(k);
    for (std::size_t i = 0; i < k; ++i)
        x[i] = a[i][k] / a[i][i];
    return x;
}

} // namespace

DisentangleResult disentangle_linear_combination(const LinearCombination & lc, const Graph & g,
                                                 const LcEvaluator & evaluator, const DisentangleOptions & options)
{
    const auto & terms = lc.terms();
    std::size_t k = terms.size();
    DisentangleResult res;
    if (k == 0)
        return res;
    std::size_t max_v = 1;
    for (const auto & t : terms)
        max_v = std::max(max_v, t.pattern.num_vertices());
    std::size_t pool_max = max_v + 2;

    Rng rng(options.seed);
    std::uniform_int_distribution<std::size_t> size(1, pool_max);
    std::uniform_real_distribution<double> density(0.2, 0.9);
    RankTracker rank(k);
    std::size_t since_last = 0;
    while (rank.rank() < k) {
        if (since_last++ >= options.budget_per_row)
            throw GuardExceeded("helper graph search exhausted its budget at rank " + std::to_string(rank.rank()) +
                                " of " + std::to_string(k));
        ++res.candidates_tried;
        std::size_t n = size(rng);
        Graph f = random_connected_pattern(n, density(rng), rng).to_graph();
        std::vector<BigInt> row(k);
        for (std::size_t j = 0; j < k; ++j)
            row[j] = terms[j].coefficient * brute_hom(terms[j].pattern, f, options.hom.oracle);
        if (! rank.try_add(row))
            continue;
        res.helpers.push_back(std::move(f));
        res.matrix.push_back(std::move(row));
        since_last = 0;
    }

    for (const auto & f : res.helpers)
        res.b.push_back(evaluator(lc, tensor_product(f, g)));
    auto x = solve_exact(res.matrix, res.b);
    for (const auto & v : x) {
        if (denominator(v) != 1)
            throw ContractViolation("disentangled hom count is not an integer");
        res.homs.push_back(numerator(v));
    }
    return res;
}

LcEvaluator default_lc_evaluator(const HomOptions & options)
{
    return [options](const LinearCombination & lc, const Graph & host) {
        CountSession session(host, options);
        return session.evaluate(lc);
    };
}

BigInt hom_into_complete(const Pattern & h, std::size_t q)
{
    BigInt total = 0;
    for_each_partition(h.num_vertices(), [&](const Partition & p) {
        if (p.num_blocks() > q || quotient(h, p).has_loop)
            return;
        BigInt falling = 1;
        for (std::size_t i = 0; i < p.num_blocks(); ++i)
            falling *= q - i;
        total += falling;
    });
    return total;
}

std::vector<RecoveredHom> recover_induced_subgraph_homs(
    const Pattern & h, const Graph & g, const std::function<BigInt(const Pattern &, const Graph &)> & hom_evaluator,
    const DisentangleOptions & options)
{
    check_pattern_size(h, options.hom.limits.max_vertices);
    std::size_t n = h.num_vertices();
    VertexMask all = h.all_vertices();
    LinearCombination lc;
    for (VertexMask u = 0;; ++u) {
        lc.add(h.induced(u), hom_into_complete(h.induced(all & ~u), n));
        if (u == all)
            break;
    }
    for (const auto & t : lc.terms())
        if (t.coefficient <= 0)
            throw ContractViolation("non-positive clique-join coefficient for " + describe(t.pattern));

    LcEvaluator via_join = [&](const LinearCombination &, const Graph & host) {
        return hom_evaluator(h, join_with_clique(host, n));
    };
    auto res = disentangle_linear_combination(lc, g, via_join, options);
    std::vector<RecoveredHom> out;
    for (std::size_t i = 0; i < lc.size(); ++i)
        out.push_back({lc.terms()[i].pattern, lc.terms()[i].coefficient, res.homs[i]});
    return out;
}

} // namespace degencount
