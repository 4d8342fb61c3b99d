#include <degencount/errors.hpp>
#include <degencount/pipelines.hpp>

namespace degencount {

void LinearCombination::add(const Pattern & h, const BigInt & c)
{
    if (c.is_zero())
        return;
    auto form = canonical_form(h);
    auto it = index_.find(form.key);
    if (it == index_.end()) {
        index_.emplace(form.key, terms_.size());
        terms_.push_back({h.permuted(form.perm), c});
        return;
    }
    terms_[it->second].coefficient += c;
    if (terms_[it->second].coefficient.is_zero()) {
        std::size_t gone = it->second;
        terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(gone));
        index_.erase(it);
        for (auto & [key, pos] : index_)
            if (pos > gone)
                --pos;
    }
}

void LinearCombination::add(const LinearCombination & other, const BigInt & scale)
{
    for (const auto & t : other.terms())
        add(t.pattern, t.coefficient * scale);
}

BigInt LinearCombination::coefficient(const Pattern & h) const
{
    auto it = index_.find(canonical_key(h));
    return it == index_.end() ? BigInt(0) : terms_[it->second].coefficient;
}

LinearCombination inj_linear_combination(const Pattern & h, const PatternLimits & limits)
{
    check_pattern_size(h, limits.max_vertices);
    LinearCombination lc;
    for_each_partition(h.num_vertices(), [&](const Partition & p) {
        auto q = quotient(h, p);
        if (! q.has_loop)
            lc.add(q.graph, mobius_partition(p));
    });
    return lc;
}

LinearCombination ind_linear_combination(const Pattern & h, const PatternLimits & limits)
{
    std::map<CanonicalKey, LinearCombination> inj_cache;
    LinearCombination lc;
    for (const auto & s : enumerate_supergraphs(h, limits)) {
        auto key = canonical_key(s.graph);
        auto it = inj_cache.find(key);
        if (it == inj_cache.end())
            it = inj_cache.emplace(key, inj_linear_combination(s.graph, limits)).first;
        lc.add(it->second, s.added % 2 ? -1 : 1);
    }
    return lc;
}

CountSession::CountSession(const Graph & g, HomOptions options) : host_(g), options_(options) {}

BigInt CountSession::hom(const Pattern & h)
{
    auto key = canonical_key(h);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;
    auto r = hom_count(h, host_, options_);
    if (r.path == DispatchPath::oracle_fallback)
        fallbacks_.push_back(describe(h));
    memo_.emplace(key, r.value);
    return r.value;
}

BigInt CountSession::evaluate(const LinearCombination & lc)
{
    BigInt total = 0;
    for (const auto & t : lc.terms())
        total += t.coefficient * hom(t.pattern);
    return total;
}

BigInt CountSession::inj(const Pattern & h)
{
    auto value = evaluate(inj_linear_combination(h, options_.limits));
    if (value < 0)
        throw ContractViolation("negative injective count for " + describe(h));
    return value;
}

BigInt CountSession::ind(const Pattern & h)
{
    if (h.num_vertices() > graph().num_vertices())
        return 0;
    auto value = evaluate(ind_linear_combination(h, options_.limits));
    if (value < 0)
        throw ContractViolation("negative induced count for " + describe(h));
    return value;
}

BigInt CountSession::copies(const Pattern & h, bool induced)
{
    BigInt labelled = induced ? ind(h) : inj(h);
    BigInt aut = count_automorphisms(h);
    if (labelled % aut != 0)
        throw ContractViolation("labelled count not divisible by aut for " + describe(h));
    return labelled / aut;
}

BigInt evaluate_linear_combination(const LinearCombination & lc, const Graph & g, const HomOptions & options)
{
    CountSession s(g, options);
    return s.evaluate(lc);
}

BigInt inj_count(const Pattern & h, const Graph & g, const HomOptions & options)
{
    CountSession s(g, options);
    return s.inj(h);
}

BigInt ind_count(const Pattern & h, const Graph & g, const HomOptions & options)
{
    CountSession s(g, options);
    return s.ind(h);
}

BigInt copy_count(const Pattern & h, const Graph & g, bool induced, const HomOptions & options)
{
    CountSession s(g, options);
    return s.copies(h, induced);
}

} // namespace degencount
