#pragma once

#include <optional>
#include <vector>

#include "mldkit/poly.hpp"

namespace mldkit {

// Weight vector in Q^d with strictly positive entries.
struct Weight {
    std::vector<Rat> entries;

    explicit Weight(std::vector<Rat> e) : entries(std::move(e)) {
        for (const auto& w : entries)
            if (w <= 0) throw DomainError("weight entries must be positive");
    }

    std::size_t dim() const { return entries.size(); }

    friend bool operator==(const Weight& a, const Weight& b) { return a.entries == b.entries; }
};

inline Rat weight_of_monomial(const Weight& w, const Exponent& alpha) {
    if (alpha.size() != w.dim()) throw DomainError("exponent arity mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0) throw NegativeExponent("monomial with negative exponent");
        s += w.entries[i] * Rat(alpha[i]);
    }
    return s;
}

inline ExtRat weight_of_poly(const Weight& w, const Poly& h) {
    if (h.dim != w.dim()) throw DomainError("polynomial arity mismatch");
    if (h.is_zero()) return ExtRat::inf();
    bool have = false;
    Rat best = 0;
    for (const auto& [e, c] : h.terms) {
        Rat v = weight_of_monomial(w, e);
        if (!have || v < best) { best = v; have = true; }
    }
    return ExtRat::of(best);
}

inline Poly leading_term(const Weight& w, const Poly& h) {
    if (h.is_zero()) throw ZeroPolynomial("leading term of the zero polynomial");
    Rat target = weight_of_poly(w, h).value;
    Poly out;
    out.dim = h.dim;
    for (const auto& [e, c] : h.terms)
        if (weight_of_monomial(w, e) == target) out.add_term(e, c);
    return out;
}

inline bool is_w_homogeneous(const Weight& w, const Poly& h) {
    if (h.is_zero()) return true;
    return leading_term(w, h) == h;
}

inline Poly truncate(const Poly& h, const Int& c) {
    if (c < 0) throw DomainError("truncation degree must be non-negative");
    Poly out;
    out.dim = h.dim;
    for (const auto& [e, coeff] : h.terms) {
        Int total = 0;
        for (const auto& k : e) total += k;
        if (total <= c) out.add_term(e, coeff);
    }
    return out;
}

// w >= w2 componentwise, and/or w = mu * w2 for one scalar mu; a weight can
// be a scalar multiple with mu < 1, in which case geq is false.
struct WeightComparison {
    bool geq = false;
    std::optional<Rat> scalar_multiple;

    bool incomparable() const { return !geq && !scalar_multiple.has_value(); }
};

inline WeightComparison compare_weights(const Weight& w, const Weight& w2) {
    if (w.dim() != w2.dim()) throw DomainError("weight arity mismatch");
    WeightComparison res;
    res.geq = true;
    for (std::size_t i = 0; i < w.dim(); ++i)
        if (w.entries[i] < w2.entries[i]) { res.geq = false; break; }
    if (w.dim() > 0) {
        Rat mu = w.entries[0] / w2.entries[0];
        bool scalar = true;
        for (std::size_t i = 1; i < w.dim(); ++i)
            if (w.entries[i] != mu * w2.entries[i]) { scalar = false; break; }
        if (scalar) res.scalar_multiple = mu;
    }
    return res;
}

inline Weight scale_weight(const Rat& mu, const Weight& w) {
    if (mu <= 0) throw DomainError("weight scale must be positive");
    std::vector<Rat> e;
    e.reserve(w.dim());
    for (const auto& x : w.entries) e.push_back(mu * x);
    return Weight(std::move(e));
}

} // namespace mldkit
