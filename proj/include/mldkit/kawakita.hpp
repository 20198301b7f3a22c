#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mldkit/germ.hpp"

namespace mldkit {

enum class KawakitaCase { None, Case1, Case21, Case22, Case31, Case32 };

inline std::string kawakita_case_name(KawakitaCase c) {
    switch (c) {
        case KawakitaCase::None: return "none";
        case KawakitaCase::Case1: return "1";
        case KawakitaCase::Case21: return "2.1";
        case KawakitaCase::Case22: return "2.2";
        case KawakitaCase::Case31: return "3.1";
        case KawakitaCase::Case32: return "3.2";
    }
    return "none";
}

struct ConditionCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct PatternReport {
    KawakitaCase which = KawakitaCase::None;
    bool matched = false;  // a structural case was identified
    bool all_pass = false; // every side condition of that case holds
    std::vector<ConditionCheck> checks;
    std::map<std::string, Int> params;
};

namespace detail {

inline Exponent mk_exp(std::size_t dim, std::initializer_list<int> e) {
    Exponent out;
    out.reserve(dim);
    for (int k : e) out.push_back(Int(k));
    while (out.size() < dim) out.push_back(Int(0));
    return out;
}

inline bool has_term(const Poly& p, const Exponent& e) { return p.terms.count(e) > 0; }

inline void add_check(PatternReport& rep, const std::string& name, bool pass,
                      const std::string& detail = "") {
    rep.checks.push_back({name, pass, detail});
}

// Minimal weight among support terms selected by the predicate; nothing
// selected means the optional piece of the normal form is absent.
inline std::optional<Rat> min_weight_where(const Weight& wt, const Poly& p,
                                           const std::function<bool(const Exponent&)>& pred) {
    std::optional<Rat> best;
    for (const auto& [e, c] : p.terms) {
        if (!pred(e)) continue;
        Rat v = weight_of_monomial(wt, e);
        if (!best || v < *best) best = v;
    }
    return best;
}

inline std::optional<Int> exact_quotient(const Int& num, const Int& den) {
    if (den == 0 || num % den != 0) return std::nullopt;
    return Int(num / den);
}

inline void finish_report(PatternReport& rep) {
    rep.all_pass = rep.matched;
    for (const auto& c : rep.checks)
        if (!c.pass) { rep.all_pass = false; break; }
}

inline bool guard_arity(PatternReport& rep, KawakitaCase which, const HyperquotientGerm& germ,
                        std::size_t d, std::size_t m) {
    rep.which = which;
    if (germ.d != d || germ.eqs.size() != m) {
        rep.matched = false;
        add_check(rep, "ambient shape", false,
                  "expected dimension " + std::to_string(d) + " with " + std::to_string(m) +
                      " equation(s)");
        finish_report(rep);
        return false;
    }
    rep.matched = true;
    return true;
}

inline void check_case1(const HyperquotientGerm& germ, const AdmissibleWeight& w,
                        PatternReport& rep) {
    if (!guard_arity(rep, KawakitaCase::Case1, germ, 4, 1)) return;
    const Int& n = germ.action.n;
    const Int b = germ.action.chars[2];
    const Int r1 = w.numerators[0], r2 = w.numerators[1], a = w.numerators[2];
    rep.params["n"] = n;
    rep.params["b"] = b;
    rep.params["r1"] = r1;
    rep.params["r2"] = r2;
    rep.params["a"] = a;
    const Poly& phi = germ.eqs[0];
    Weight wt = w.to_weight();

    add_check(rep, "w4 = n", w.numerators[3] == n);
    add_check(rep, "x1*x2 in phi", has_term(phi, mk_exp(4, {1, 1, 0, 0})));
    Rat wphi = weight_of_poly(wt, phi).value;
    add_check(rep, "n*w(phi) = r1+r2", Rat(n) * wphi == Rat(r1 + r2));
    auto d = exact_quotient(r1 + r2, a * n);
    add_check(rep, "r1+r2 = a*d*n", d.has_value() && *d >= 1,
              d ? "d = " + d->str() : "a*n does not divide r1+r2");
    add_check(rep, "a = b*r1 mod n", mod_floor(a, n) == mod_floor(b * r1, n));
    if (d) {
        rep.params["d"] = *d;
        add_check(rep, "x3^(d*n) in g",
                  has_term(phi, mk_exp(4, {0, 0, static_cast<int>(*d * n), 0})));
    } else {
        add_check(rep, "x3^(d*n) in g", false, "d undefined");
    }
    bool g_shape = true;
    for (const auto& [e, c] : phi.terms) {
        if (e == mk_exp(4, {1, 1, 0, 0})) continue;
        if (e[0] != 0 || e[1] != 0 || e[2] % n != 0) { g_shape = false; break; }
    }
    add_check(rep, "g depends only on x3^n and x4", g_shape);
    finish_report(rep);
}

inline void check_case21(const HyperquotientGerm& germ, const AdmissibleWeight& w,
                         PatternReport& rep) {
    if (!guard_arity(rep, KawakitaCase::Case21, germ, 4, 1)) return;
    const Int r = w.numerators[1], a = w.numerators[2];
    rep.params["r"] = r;
    rep.params["a"] = a;
    const Poly& phi = germ.eqs[0];
    Weight wt = w.to_weight();

    add_check(rep, "weight form (r+1, r, a, 1)",
              w.numerators[0] == r + 1 && w.numerators[3] == 1);
    add_check(rep, "a odd", a % 2 == 1);
    auto d = exact_quotient(2 * r + 1, a);
    add_check(rep, "2r+1 = a*d with odd d >= 3", d.has_value() && *d % 2 == 1 && *d >= 3,
              d ? "d = " + d->str() : "a does not divide 2r+1");
    add_check(rep, "w(phi) = 2r+1", weight_of_poly(wt, phi) == ExtRat::of(Rat(2 * r + 1)));
    add_check(rep, "x1^2 in phi", has_term(phi, mk_exp(4, {2, 0, 0, 0})));
    add_check(rep, "x2^2*x4 in phi", has_term(phi, mk_exp(4, {0, 2, 0, 1})));
    if (d) {
        rep.params["d"] = *d;
        add_check(rep, "x3^d in phi", has_term(phi, mk_exp(4, {0, 0, static_cast<int>(*d), 0})));
        if (*d > 3) {
            add_check(rep, "mu = lambda = 0 when d > 3",
                      !has_term(phi, mk_exp(4, {0, 0, 3, 0})) &&
                          !has_term(phi, mk_exp(4, {0, 1, 2, 0})));
        }
    } else {
        add_check(rep, "x3^d in phi", false, "d undefined");
    }
    auto qw = min_weight_where(wt, phi, [](const Exponent& e) { return e[0] == 1; });
    if (qw) add_check(rep, "x1*q terms weigh 2r+1", *qw == Rat(2 * r + 1));
    finish_report(rep);
}

inline void check_case22(const HyperquotientGerm& germ, const AdmissibleWeight& w,
                         PatternReport& rep) {
    if (!guard_arity(rep, KawakitaCase::Case22, germ, 5, 2)) return;
    const Int r = w.numerators[1], a = w.numerators[2];
    rep.params["r"] = r;
    rep.params["a"] = a;
    const Poly& phi1 = germ.eqs[0];
    const Poly& phi2 = germ.eqs[1];
    Weight wt = w.to_weight();

    add_check(rep, "weight form (r+1, r, a, 1, r+2)",
              w.numerators[0] == r + 1 && w.numerators[3] == 1 && w.numerators[4] == r + 2);
    auto d = exact_quotient(r + 1, a);
    add_check(rep, "r+1 = a*d with d >= 2", d.has_value() && *d >= 2,
              d ? "d = " + d->str() : "a does not divide r+1");
    add_check(rep, "w(phi1) = 2(r+1)", weight_of_poly(wt, phi1) == ExtRat::of(Rat(2 * (r + 1))));
    add_check(rep, "w(phi2) = r+1", weight_of_poly(wt, phi2) == ExtRat::of(Rat(r + 1)));
    add_check(rep, "x1^2 in phi1", has_term(phi1, mk_exp(5, {2, 0, 0, 0, 0})));
    add_check(rep, "x2*x5 in phi1", has_term(phi1, mk_exp(5, {0, 1, 0, 0, 1})));
    add_check(rep, "x2*x4 in phi2", has_term(phi2, mk_exp(5, {0, 1, 0, 1, 0})));
    add_check(rep, "x5 in phi2", has_term(phi2, mk_exp(5, {0, 0, 0, 0, 1})));
    if (d) {
        rep.params["d"] = *d;
        add_check(rep, "x3^d in phi2", has_term(phi2, mk_exp(5, {0, 0, static_cast<int>(*d), 0, 0})));
    } else {
        add_check(rep, "x3^d in phi2", false, "d undefined");
    }
    auto qw = min_weight_where(wt, phi2, [](const Exponent& e) {
        return e[3] >= 1 && !(e[1] == 1 && e[3] == 1 && e[0] == 0 && e[2] == 0 && e[4] == 0);
    });
    if (qw) add_check(rep, "q*x4 terms weigh r+1", *qw == Rat(r + 1));
    finish_report(rep);
}

inline void check_case31(const HyperquotientGerm& germ, const AdmissibleWeight& w,
                         PatternReport& rep) {
    if (!guard_arity(rep, KawakitaCase::Case31, germ, 4, 1)) return;
    const Int r = w.numerators[1], a = w.numerators[2];
    rep.params["r"] = r;
    rep.params["a"] = a;
    const Poly& phi = germ.eqs[0];
    Weight wt = w.to_weight();

    add_check(rep, "weight form (1/2)(r+2, r, a, 2)",
              w.numerators[0] == r + 2 && w.numerators[3] == 2);
    add_check(rep, "a odd", a % 2 == 1);
    add_check(rep, "r odd", r % 2 == 1);
    auto d = exact_quotient(r + 1, a);
    add_check(rep, "r+1 = a*d", d.has_value() && *d >= 1,
              d ? "d = " + d->str() : "a does not divide r+1");
    add_check(rep, "w(phi) = r+1", weight_of_poly(wt, phi) == ExtRat::of(Rat(r + 1)));
    add_check(rep, "x1^2 in phi", has_term(phi, mk_exp(4, {2, 0, 0, 0})));
    add_check(rep, "x2^2*x4 in phi", has_term(phi, mk_exp(4, {0, 2, 0, 1})));
    if (d) {
        rep.params["d"] = *d;
        add_check(rep, "x3^(2d) in p",
                  has_term(phi, mk_exp(4, {0, 0, static_cast<int>(2 * *d), 0})));
    } else {
        add_check(rep, "x3^(2d) in p", false, "d undefined");
    }
    bool p_shape = true;
    for (const auto& [e, c] : phi.terms) {
        if (e[0] != 0 || e[1] != 0) continue;
        if (e[2] % 2 != 0) { p_shape = false; break; }
    }
    add_check(rep, "p depends only on x3^2 and x4", p_shape);
    auto qw = min_weight_where(wt, phi, [](const Exponent& e) { return e[0] == 1; });
    if (qw) add_check(rep, "x1*x3*q terms weigh r+1", *qw == Rat(r + 1));
    finish_report(rep);
}

inline void check_case32(const HyperquotientGerm& germ, const AdmissibleWeight& w,
                         PatternReport& rep) {
    if (!guard_arity(rep, KawakitaCase::Case32, germ, 5, 2)) return;
    const Int r = w.numerators[1], a = w.numerators[2];
    rep.params["r"] = r;
    rep.params["a"] = a;
    const Poly& phi1 = germ.eqs[0];
    const Poly& phi2 = germ.eqs[1];
    Weight wt = w.to_weight();

    add_check(rep, "weight form (1/2)(r+2, r, a, 2, r+4)",
              w.numerators[0] == r + 2 && w.numerators[3] == 2 && w.numerators[4] == r + 4);
    auto d = exact_quotient(r + 2, a);
    add_check(rep, "r+2 = a*d with odd d", d.has_value() && *d % 2 == 1,
              d ? "d = " + d->str() : "a does not divide r+2");
    add_check(rep, "w(phi1) = r+2", weight_of_poly(wt, phi1) == ExtRat::of(Rat(r + 2)));
    add_check(rep, "w(phi2) = (r+2)/2", weight_of_poly(wt, phi2) == ExtRat::of(make_rat(r + 2, 2)));
    add_check(rep, "x1^2 in phi1", has_term(phi1, mk_exp(5, {2, 0, 0, 0, 0})));
    add_check(rep, "x2*x5 in phi1", has_term(phi1, mk_exp(5, {0, 1, 0, 0, 1})));
    add_check(rep, "x2*x4 in phi2", has_term(phi2, mk_exp(5, {0, 1, 0, 1, 0})));
    add_check(rep, "x5 in phi2", has_term(phi2, mk_exp(5, {0, 0, 0, 0, 1})));
    if (d) {
        rep.params["d"] = *d;
        add_check(rep, "x3^d in phi2", has_term(phi2, mk_exp(5, {0, 0, static_cast<int>(*d), 0, 0})));
    } else {
        add_check(rep, "x3^d in phi2", false, "d undefined");
    }
    auto qw = min_weight_where(wt, phi2, [](const Exponent& e) {
        return e[1] == 0 && e[3] >= 1;
    });
    if (qw) add_check(rep, "q*x3*x4 terms weigh (r+2)/2", *qw == make_rat(r + 2, 2));
    finish_report(rep);
}

inline bool chars_are(const CyclicAction& act, std::initializer_list<int> cs) {
    std::size_t i = 0;
    for (int c : cs) {
        if (i >= act.chars.size()) return false;
        if (act.chars[i] != mod_floor(Int(c), act.n)) return false;
        ++i;
    }
    return i == act.chars.size();
}

inline KawakitaCase structural_case(const HyperquotientGerm& germ, const AdmissibleWeight& w) {
    const Int& n = germ.action.n;
    if (germ.d == 4 && germ.eqs.size() == 1) {
        bool ca_chars = chars_are(germ.action, {1, -1, static_cast<int>(germ.action.chars[2]), 0});
        if (ca_chars && w.numerators[3] == n && has_term(germ.eqs[0], mk_exp(4, {1, 1, 0, 0})))
            return KawakitaCase::Case1;
        if (n == 1 && has_term(germ.eqs[0], mk_exp(4, {0, 2, 0, 1})))
            return KawakitaCase::Case21;
        if (n == 2 && chars_are(germ.action, {1, 1, 1, 0}) &&
            has_term(germ.eqs[0], mk_exp(4, {0, 2, 0, 1})))
            return KawakitaCase::Case31;
    }
    if (germ.d == 5 && germ.eqs.size() == 2) {
        if (n == 1) return KawakitaCase::Case22;
        if (n == 2 && chars_are(germ.action, {1, 1, 1, 0, 1})) return KawakitaCase::Case32;
    }
    return KawakitaCase::None;
}

} // namespace detail

// Matches (germ, w) against the classified weight table for terminal
// threefold normal forms and verifies the matched row's side conditions.
inline PatternReport check_kawakita_pattern(const HyperquotientGerm& germ,
                                            const AdmissibleWeight& w) {
    if (germ.d != 4 && germ.d != 5)
        throw UnsupportedDimension("pattern table covers ambient dimensions 4 and 5 only");
    detail::check_weight_matches(germ, w);

    PatternReport rep;
    KawakitaCase which = KawakitaCase::None;
    switch (germ.tag) {
        case GermTag::cA_over_n: which = KawakitaCase::Case1; break;
        case GermTag::cD_41: which = KawakitaCase::Case21; break;
        case GermTag::cD_52: which = KawakitaCase::Case22; break;
        case GermTag::cD2_41: which = KawakitaCase::Case31; break;
        case GermTag::cD2_52: which = KawakitaCase::Case32; break;
        case GermTag::Smooth: return rep;
        case GermTag::None: which = detail::structural_case(germ, w); break;
    }
    switch (which) {
        case KawakitaCase::Case1: detail::check_case1(germ, w, rep); break;
        case KawakitaCase::Case21: detail::check_case21(germ, w, rep); break;
        case KawakitaCase::Case22: detail::check_case22(germ, w, rep); break;
        case KawakitaCase::Case31: detail::check_case31(germ, w, rep); break;
        case KawakitaCase::Case32: detail::check_case32(germ, w, rep); break;
        case KawakitaCase::None: break;
    }
    return rep;
}

struct Certificate {
    Rat predicted_wXx;
    GermTag via_tag = GermTag::None;
    int subcase = 1;
};

namespace detail {

using Support = std::vector<Exponent>;

inline Support support_of(const Poly& p) {
    Support s;
    for (const auto& [e, c] : p.terms) s.push_back(e);
    return s;
}

inline bool support_equals(const Poly& p, const Support& target) {
    if (p.terms.size() != target.size()) return false;
    for (const auto& e : target)
        if (!has_term(p, e)) return false;
    return true;
}

// Mandatory terms must all appear; everything else must come from the
// optional list.
inline bool support_within(const Poly& p, const Support& mandatory, const Support& optional_terms) {
    for (const auto& e : mandatory)
        if (!has_term(p, e)) return false;
    for (const auto& [e, c] : p.terms) {
        bool known = false;
        for (const auto& m : mandatory)
            if (e == m) { known = true; break; }
        for (const auto& o : optional_terms)
            if (e == o) { known = true; break; }
        if (!known) return false;
    }
    return true;
}

inline std::optional<Certificate> certify_cA(const HyperquotientGerm& germ,
                                             const AdmissibleWeight& w) {
    if (germ.d != 4 || germ.eqs.size() != 1) return std::nullopt;
    const Int& n = germ.action.n;
    const Int b = germ.action.chars[2];
    const Int r1 = w.numerators[0], r2 = w.numerators[1], a = w.numerators[2];
    if (w.numerators[3] != n) return std::nullopt;
    auto d = exact_quotient(r1 + r2, a * n);
    if (!d || *d < 1) return std::nullopt;
    if (mod_floor(a, n) != mod_floor(b * r1, n)) return std::nullopt;
    Poly lead = leading_term(w.to_weight(), germ.eqs[0]);
    if (!has_term(lead, mk_exp(4, {1, 1, 0, 0}))) return std::nullopt;
    if (lead.terms.size() < 2) return std::nullopt;
    for (const auto& [e, c] : lead.terms) {
        if (e == mk_exp(4, {1, 1, 0, 0})) continue;
        if (e[0] != 0 || e[1] != 0) return std::nullopt;
    }
    if (!has_term(lead, mk_exp(4, {0, 0, static_cast<int>(*d * n), 0}))) return std::nullopt;
    return Certificate{make_rat(a, n), GermTag::cA_over_n, 1};
}

inline std::optional<Certificate> certify_cD_41(const HyperquotientGerm& germ,
                                                const AdmissibleWeight& w) {
    if (germ.d != 4 || germ.eqs.size() != 1 || germ.action.n != 1) return std::nullopt;
    Poly lead = leading_term(w.to_weight(), germ.eqs[0]);
    const Int r = w.numerators[1], a = w.numerators[2];
    if (w.numerators[0] == r + 1 && w.numerators[3] == 1) {
        auto d = exact_quotient(2 * r + 1, a);
        if (d && *d >= 1 &&
            support_equals(lead, {mk_exp(4, {0, 2, 0, 1}),
                                  mk_exp(4, {0, 0, static_cast<int>(*d), 0})}))
            return Certificate{Rat(a), GermTag::cD_41, 1};
    }
    if (w.numerators[0] == w.numerators[1] && w.numerators[2] == 2 && w.numerators[3] == 1) {
        Int dd = w.numerators[0];
        if (support_equals(lead, {mk_exp(4, {2, 0, 0, 0}),
                                  mk_exp(4, {0, 0, static_cast<int>(dd), 0})}))
            return Certificate{Rat(2), GermTag::cD_41, 2};
    }
    return std::nullopt;
}

inline std::optional<Certificate> certify_cD_52(const HyperquotientGerm& germ,
                                                const AdmissibleWeight& w) {
    if (germ.d != 5 || germ.eqs.size() != 2 || germ.action.n != 1) return std::nullopt;
    Weight wt = w.to_weight();
    Poly lead1 = leading_term(wt, germ.eqs[0]);
    Poly lead2 = leading_term(wt, germ.eqs[1]);
    const Int r = w.numerators[1], a = w.numerators[2];
    if (w.numerators[0] == r + 1 && w.numerators[3] == 1 && w.numerators[4] == r + 2) {
        auto d = exact_quotient(r + 1, a);
        if (d && *d >= 1) {
            int di = static_cast<int>(*d);
            bool ok1 = support_within(lead1,
                                      {mk_exp(5, {2, 0, 0, 0, 0}), mk_exp(5, {0, 1, 0, 0, 1})},
                                      {mk_exp(5, {0, 0, 2 * di, 0, 0}),
                                       mk_exp(5, {0, 1, di, 1, 0}), mk_exp(5, {0, 2, 0, 2, 0})});
            bool ok2 = support_equals(lead2, {mk_exp(5, {0, 1, 0, 1, 0}),
                                              mk_exp(5, {0, 0, di, 0, 0})});
            if (ok1 && ok2) return Certificate{Rat(a), GermTag::cD_52, 1};
        }
    }
    if (w.numerators[0] == w.numerators[1] && w.numerators[0] == w.numerators[4] &&
        w.numerators[2] == 1 && w.numerators[3] == 1) {
        int di = static_cast<int>(w.numerators[0]);
        bool ok1 = support_within(lead1,
                                  {mk_exp(5, {2, 0, 0, 0, 0}), mk_exp(5, {0, 1, 0, 0, 1})},
                                  {mk_exp(5, {0, 0, 2 * di, 0, 0})});
        bool ok2 = support_equals(lead2, {mk_exp(5, {0, 0, 0, 0, 1}),
                                          mk_exp(5, {0, 0, di, 0, 0})});
        if (ok1 && ok2) return Certificate{Rat(1), GermTag::cD_52, 2};
    }
    return std::nullopt;
}

inline std::optional<Certificate> certify_cD2_41(const HyperquotientGerm& germ,
                                                 const AdmissibleWeight& w) {
    if (germ.d != 4 || germ.eqs.size() != 1 || germ.action.n != 2) return std::nullopt;
    if (!chars_are(germ.action, {1, 1, 1, 0})) return std::nullopt;
    const Int r = w.numerators[1], a = w.numerators[2];
    if (w.numerators[0] != r + 2 || w.numerators[3] != 2) return std::nullopt;
    auto d = exact_quotient(r + 1, a);
    if (!d || *d < 1) return std::nullopt;
    Poly lead = leading_term(w.to_weight(), germ.eqs[0]);
    if (!support_equals(lead, {mk_exp(4, {0, 2, 0, 1}),
                               mk_exp(4, {0, 0, static_cast<int>(2 * *d), 0})}))
        return std::nullopt;
    return Certificate{make_rat(a, 2), GermTag::cD2_41, 1};
}

inline std::optional<Certificate> certify_cD2_52(const HyperquotientGerm& germ,
                                                 const AdmissibleWeight& w) {
    if (germ.d != 5 || germ.eqs.size() != 2 || germ.action.n != 2) return std::nullopt;
    if (!chars_are(germ.action, {1, 1, 1, 0, 1})) return std::nullopt;
    const Int r = w.numerators[1], a = w.numerators[2];
    if (w.numerators[0] != r + 2 || w.numerators[3] != 2 || w.numerators[4] != r + 4)
        return std::nullopt;
    auto d = exact_quotient(r + 2, a);
    if (!d || *d < 1) return std::nullopt;
    Weight wt = w.to_weight();
    Poly lead1 = leading_term(wt, germ.eqs[0]);
    Poly lead2 = leading_term(wt, germ.eqs[1]);
    int di = static_cast<int>(*d);
    bool ok1 = support_within(lead1, {mk_exp(5, {2, 0, 0, 0, 0}), mk_exp(5, {0, 1, 0, 0, 1})},
                              {mk_exp(5, {0, 0, 2 * di, 0, 0})});
    bool ok2 = support_equals(lead2, {mk_exp(5, {0, 1, 0, 1, 0}), mk_exp(5, {0, 0, di, 0, 0})});
    if (!ok1 || !ok2) return std::nullopt;
    return Certificate{make_rat(a, 2), GermTag::cD2_52, 1};
}

} // namespace detail

// Certifies irreducibility of the exceptional divisor of the w-weighted
// blow-up through the classified leading-term criteria only; anything
// outside them is Unknown (nullopt). The predicted discrepancy always
// agrees with germ_weight_discrepancy; a mismatch would mean the shape
// table itself is wrong, hence the hard logic check.
inline std::optional<Certificate> irreducibility_certificate(const HyperquotientGerm& germ,
                                                             const AdmissibleWeight& w) {
    detail::check_weight_matches(germ, w);
    std::optional<Certificate> cert;
    switch (germ.tag) {
        case GermTag::cA_over_n: cert = detail::certify_cA(germ, w); break;
        case GermTag::cD_41: cert = detail::certify_cD_41(germ, w); break;
        case GermTag::cD_52: cert = detail::certify_cD_52(germ, w); break;
        case GermTag::cD2_41: cert = detail::certify_cD2_41(germ, w); break;
        case GermTag::cD2_52: cert = detail::certify_cD2_52(germ, w); break;
        default: return std::nullopt;
    }
    if (!cert) return std::nullopt;
    ExtRat actual = germ_weight_discrepancy(germ, w);
    if (actual.infinite || actual.value != cert->predicted_wXx)
        throw std::logic_error("certificate prediction disagrees with the weight formula");
    return cert;
}

} // namespace mldkit
