#pragma once

#include <degencount/bigint.hpp>
#include <degencount/graph.hpp>
#include <degencount/hom_engine.hpp>
#include <degencount/pattern.hpp>

#include <map>
#include <string>
#include <vector>

namespace degencount {

struct LinearTerm {
    Pattern pattern;
    BigInt coefficient;
};

/// sum_i c_i * hom(H_i, .) with pairwise non-isomorphic H_i (stored in
/// canonical form) and no zero coefficients.
class LinearCombination {
public:
    /// Adds c * hom(h, .), merging with an isomorphic term if present.
    void add(const Pattern & h, const BigInt & c);
    void add(const LinearCombination & other, const BigInt & scale = 1);

    const std::vector<LinearTerm> & terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    /// Coefficient of the term isomorphic to h, 0 if absent.
    BigInt coefficient(const Pattern & h) const;

private:
    std::vector<LinearTerm> terms_;
    std::map<CanonicalKey, std::size_t> index_;
};

/// inj(h, .) as a combination of hom(h/P, .) over loop-free quotients.
LinearCombination inj_linear_combination(const Pattern & h, const PatternLimits & limits = {});

/// ind(h, .) expanded over supergraphs and then quotients.
LinearCombination ind_linear_combination(const Pattern & h, const PatternLimits & limits = {});

/// Evaluates hom counts against one host, memoised by canonical form, and
/// records which terms left the fast paths.
class CountSession {
public:
    explicit CountSession(const Graph & g, HomOptions options = {});

    const Graph & graph() const { return host_.graph(); }
    const HostCache & host() const { return host_; }

    BigInt hom(const Pattern & h);
    BigInt evaluate(const LinearCombination & lc);
    BigInt inj(const Pattern & h);
    BigInt ind(const Pattern & h);
    /// Unlabelled (induced) copies: inj or ind divided by aut(h).
    BigInt copies(const Pattern & h, bool induced);

    /// Patterns whose hom count used the oracle fallback.
    const std::vector<std::string> & fallbacks() const { return fallbacks_; }
    std::size_t hom_evaluations() const { return memo_.size(); }

private:
    HostCache host_;
    HomOptions options_;
    std::map<CanonicalKey, BigInt> memo_;
    std::vector<std::string> fallbacks_;
};

BigInt evaluate_linear_combination(const LinearCombination & lc, const Graph & g, const HomOptions & options = {});
BigInt inj_count(const Pattern & h, const Graph & g, const HomOptions & options = {});
BigInt ind_count(const Pattern & h, const Graph & g, const HomOptions & options = {});
BigInt copy_count(const Pattern & h, const Graph & g, bool induced, const HomOptions & options = {});

} // namespace degencount
