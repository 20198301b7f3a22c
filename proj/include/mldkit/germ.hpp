#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mldkit/weights.hpp"

namespace mldkit {

// Diagonal action of Z/n on C^d by characters a_1..a_d, stored mod n.
struct CyclicAction {
    Int n = 1;
    std::vector<Int> chars;

    CyclicAction() = default;
    CyclicAction(const Int& order, std::vector<Int> cs) : n(order), chars(std::move(cs)) {
        if (n < 1) throw DomainError("cyclic action order must be positive");
        for (auto& a : chars) a = mod_floor(a, n);
    }
};

inline Int character_of(const CyclicAction& action, const Exponent& alpha) {
    if (alpha.size() != action.chars.size()) throw DomainError("exponent arity mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        s += action.chars[i] * alpha[i];
    return mod_floor(s, action.n);
}

inline bool is_semi_invariant(const CyclicAction& action, const Poly& h) {
    if (h.is_zero()) return true;
    std::optional<Int> chi;
    for (const auto& [e, c] : h.terms) {
        Int v = character_of(action, e);
        if (!chi) chi = v;
        else if (*chi != v) return false;
    }
    return true;
}

enum class GermTag { None, Smooth, cA_over_n, cD_41, cD_52, cD2_41, cD2_52 };

inline std::string germ_tag_name(GermTag t) {
    switch (t) {
        case GermTag::None: return "none";
        case GermTag::Smooth: return "smooth";
        case GermTag::cA_over_n: return "cA/n";
        case GermTag::cD_41: return "cD-4.1";
        case GermTag::cD_52: return "cD-5.2";
        case GermTag::cD2_41: return "cD/2-4.1";
        case GermTag::cD2_52: return "cD/2-5.2";
    }
    return "none";
}

inline GermTag germ_tag_from_name(const std::string& s) {
    if (s == "none" || s.empty()) return GermTag::None;
    if (s == "smooth") return GermTag::Smooth;
    if (s == "cA/n") return GermTag::cA_over_n;
    if (s == "cD-4.1") return GermTag::cD_41;
    if (s == "cD-5.2") return GermTag::cD_52;
    if (s == "cD/2-4.1") return GermTag::cD2_41;
    if (s == "cD/2-5.2") return GermTag::cD2_52;
    throw ParseError("unknown germ tag '" + s + "'");
}

struct BoundaryDivisor {
    Rat coeff = 0;
    Poly defining;
};

// Complete intersection germ (phi_1 = ... = phi_m = 0) in C^d modulo a
// diagonal cyclic action; m < d and every equation is semi-invariant.
struct HyperquotientGerm {
    std::size_t d = 0;
    CyclicAction action;
    std::vector<Poly> eqs;
    GermTag tag = GermTag::None;
    std::vector<BoundaryDivisor> boundary;
};

inline HyperquotientGerm make_hyperquotient_germ(std::size_t d, CyclicAction action,
                                                 std::vector<Poly> eqs,
                                                 GermTag tag = GermTag::None,
                                                 std::vector<BoundaryDivisor> boundary = {}) {
    if (d == 0) throw DomainError("germ dimension must be positive");
    if (action.chars.size() != d) throw DomainError("action arity mismatch");
    if (eqs.size() >= d) throw DomainError("germ needs fewer equations than variables");
    for (const auto& e : eqs) {
        if (e.dim != d) throw DomainError("equation arity mismatch");
        if (!is_semi_invariant(action, e))
            throw NotSemiInvariant("equation is not semi-invariant under the action");
    }
    for (const auto& b : boundary) {
        if (b.defining.dim != d) throw DomainError("boundary arity mismatch");
        if (b.coeff < 0) throw DomainError("boundary coefficient must be non-negative");
        if (b.defining.is_zero()) throw ZeroDivisor("boundary divisor with zero defining polynomial");
        if (!is_semi_invariant(action, b.defining))
            throw NotSemiInvariant("boundary polynomial is not semi-invariant under the action");
    }
    HyperquotientGerm g;
    g.d = d;
    g.action = std::move(action);
    g.eqs = std::move(eqs);
    g.tag = tag;
    g.boundary = std::move(boundary);
    return g;
}

// Weight (1/n)(w_1,...,w_d) with w_i = b*a_i mod n for a common witness b.
struct AdmissibleWeight {
    std::vector<Int> numerators;
    Int n = 1;
    Int witness_b = 0;

    Weight to_weight() const {
        std::vector<Rat> e;
        e.reserve(numerators.size());
        for (const auto& w : numerators) e.push_back(make_rat(w, n));
        return Weight(std::move(e));
    }
};

// Smallest b in [0,n) with w_i = b*a_i mod n for all i, if one exists.
inline std::optional<Int> is_admissible(const HyperquotientGerm& germ,
                                        const std::vector<Int>& numerators) {
    if (numerators.size() != germ.d) throw DomainError("weight arity mismatch");
    for (const auto& w : numerators)
        if (w <= 0) throw DomainError("weight numerators must be positive");
    const Int& n = germ.action.n;
    for (Int b = 0; b < n; ++b) {
        bool ok = true;
        for (std::size_t i = 0; i < germ.d; ++i)
            if (mod_floor(numerators[i], n) != mod_floor(b * germ.action.chars[i], n)) {
                ok = false;
                break;
            }
        if (ok) return b;
    }
    return std::nullopt;
}

inline AdmissibleWeight make_admissible_weight(const HyperquotientGerm& germ,
                                               const std::vector<Int>& numerators) {
    auto b = is_admissible(germ, numerators);
    if (!b) throw NotAdmissible("weight numerators violate the character congruences");
    return AdmissibleWeight{numerators, germ.action.n, *b};
}

inline std::vector<AdmissibleWeight> enumerate_admissible_weights(const HyperquotientGerm& germ,
                                                                  const Int& max_total) {
    if (max_total < 1) throw DomainError("max_total must be positive");
    std::vector<AdmissibleWeight> out;
    std::vector<Int> w(germ.d, Int(1));
    if (Int(germ.d) > max_total) return out;
    // lexicographic odometer over positive vectors with sum <= max_total
    auto sum_of = [&](std::size_t upto) {
        Int s = 0;
        for (std::size_t i = 0; i < upto; ++i) s += w[i];
        return s;
    };
    std::size_t level = 0;
    while (true) {
        if (level == germ.d) {
            auto b = is_admissible(germ, w);
            if (b) out.push_back(AdmissibleWeight{w, germ.action.n, *b});
            --level;
            ++w[level];
            continue;
        }
        Int used = sum_of(level);
        Int remaining_slots = Int(germ.d) - Int(level) - 1;
        if (used + w[level] + remaining_slots > max_total) {
            if (level == 0) break;
            w[level] = 1;
            --level;
            ++w[level];
            continue;
        }
        ++level;
    }
    return out;
}

namespace detail {

inline void check_weight_matches(const HyperquotientGerm& germ, const AdmissibleWeight& w) {
    if (w.numerators.size() != germ.d) throw DomainError("weight arity mismatch");
    if (w.n != germ.action.n) throw DomainError("weight denominator differs from germ order");
    for (std::size_t i = 0; i < germ.d; ++i)
        if (mod_floor(w.numerators[i], w.n) !=
            mod_floor(w.witness_b * germ.action.chars[i], w.n))
            throw NotAdmissible("stored witness fails the character congruences");
}

} // namespace detail

// w(X at x) = (1/n) sum w_i - sum w(phi_i) - 1.
inline ExtRat germ_weight_discrepancy(const HyperquotientGerm& germ, const AdmissibleWeight& w) {
    detail::check_weight_matches(germ, w);
    Weight wt = w.to_weight();
    Rat total = 0;
    for (std::size_t i = 0; i < germ.d; ++i) total += wt.entries[i];
    Rat eqsum = 0;
    for (const auto& phi : germ.eqs) {
        if (phi.is_zero()) throw ZeroEquation("equation is the zero polynomial");
        eqsum += weight_of_poly(wt, phi).value;
    }
    return ExtRat::of(total - eqsum - 1);
}

inline Rat boundary_weight(const HyperquotientGerm& germ, const std::vector<BoundaryDivisor>& b,
                           const AdmissibleWeight& w) {
    detail::check_weight_matches(germ, w);
    Weight wt = w.to_weight();
    Rat s = 0;
    for (const auto& div : b) {
        if (div.defining.is_zero()) throw ZeroDivisor("boundary divisor with zero defining polynomial");
        s += div.coeff * weight_of_poly(wt, div.defining).value;
    }
    return s;
}

// a(E_w, X, B) = 1 + w(X at x) - w(B) for the weighted blow-up divisor.
inline ExtRat log_discrepancy(const HyperquotientGerm& germ, const std::vector<BoundaryDivisor>& b,
                              const AdmissibleWeight& w) {
    ExtRat wxx = germ_weight_discrepancy(germ, w);
    Rat wb = boundary_weight(germ, b, w);
    if (wxx.infinite) return ExtRat::inf();
    return ExtRat::of(1 + wxx.value - wb);
}

struct CtBound {
    ExtRat bound = ExtRat::inf();
    std::optional<AdmissibleWeight> minimizer;
};

// Minimum of w(X at x)/w(D) over the enumerated admissible weights: an
// upper bound for the canonical threshold, never the exact value.
inline CtBound ct_upper_bound(const HyperquotientGerm& germ, const BoundaryDivisor& d,
                              const Int& max_total) {
    if (d.defining.is_zero()) throw ZeroDivisor("threshold divisor with zero defining polynomial");
    auto weights = enumerate_admissible_weights(germ, max_total);
    if (weights.empty()) throw EmptyEnumeration("no admissible weight within the budget");
    CtBound best;
    for (const auto& w : weights) {
        Weight wt = w.to_weight();
        Rat wd = weight_of_poly(wt, d.defining).value;
        if (wd == 0) continue; // divisor misses the origin: no constraint
        Rat wxx = germ_weight_discrepancy(germ, w).value;
        ExtRat ratio = ExtRat::of(wxx / wd);
        if (ratio < best.bound) {
            best.bound = ratio;
            best.minimizer = w;
        }
    }
    return best;
}

inline bool coefficient_sum_check(bool is_smooth, const std::vector<Rat>& coeffs) {
    Rat s = 0;
    for (const auto& c : coeffs) {
        if (c < 0) throw DomainError("coefficients must be non-negative");
        s += c;
    }
    return is_smooth ? s <= 2 : s <= 1;
}

// mld over a codimension-2 point of a smooth space: 2 - mult when the
// pair stays lc there, undefined past mult 1.
inline std::optional<Rat> codim2_mld(const Rat& mult) {
    if (mult > 1) return std::nullopt;
    return Rat(2 - mult);
}

} // namespace mldkit
