// End-to-end acceptance run: one line per criterion, nonzero exit on any
// failure. Randomized criteria use a fixed seed so the run is reproducible.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mldkit/verify.hpp"

using namespace mldkit;

namespace {

constexpr std::uint64_t kSeed = 1729;
int g_failures = 0;

void report(int num, const std::string& name, bool pass,
            const std::vector<std::string>& notes = {}) {
    std::cout << "criterion " << num << " (" << name << "): " << (pass ? "pass" : "FAIL") << "\n";
    if (!pass) {
        ++g_failures;
        std::size_t shown = 0;
        for (const auto& n : notes) {
            if (n.empty()) continue;
            std::cout << "  - " << n << "\n";
            if (++shown == 3) break;
        }
    }
}

template <typename F>
std::vector<std::string> run_parallel(std::size_t n, F&& fn) {
    std::vector<std::string> msgs(n);
    parallel_for(n, [&](std::size_t i) { msgs[i] = fn(i); });
    return msgs;
}

bool all_empty(const std::vector<std::string>& msgs) {
    for (const auto& m : msgs)
        if (!m.empty()) return false;
    return true;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool criterion1_quotient_mld_formula(std::vector<std::string>& notes) {
    auto t0 = std::chrono::steady_clock::now();
    for (int d = 2; d <= 4; ++d) {
        for (int n = 1; n <= 12; ++n) {
            QuotientToricGerm qt = quotient_germ_to_toric(Int(n), std::vector<Int>(d, Int(1)));
            ToricPair pair =
                make_toric_pair(qt.germ, std::vector<Rat>(qt.germ.rays.size(), Rat(0)));
            MldResult res = toric_mld(pair);
            if (res.neg_infinity || res.value != make_rat(Int(d), Int(n))) {
                notes.push_back("wrong mld for d=" + std::to_string(d) + " n=" + std::to_string(n));
                return false;
            }
            PsiFunction psi0 = psi_zero(qt.germ);
            std::optional<Rat> brute;
            for (const auto& p : enumerate_low_psi0_points(qt.germ, Int(d + 3))) {
                Rat v = psi0.eval(p);
                if (!brute || v < *brute) brute = v;
            }
            if (!brute || *brute != res.value) {
                notes.push_back("brute-force scan disagrees for d=" + std::to_string(d) +
                                " n=" + std::to_string(n));
                return false;
            }
        }
    }
    double secs = seconds_since(t0);
    if (secs >= 10.0) {
        notes.push_back("runtime " + std::to_string(secs) + "s exceeds the 10s budget");
        return false;
    }
    return true;
}

bool criterion2_witness_bound(std::vector<std::string>& notes) {
    auto msgs = run_parallel(200, [](std::size_t idx) -> std::string {
        Rng rng(detail::mix_seed(kSeed, idx ^ 0x51));
        static const int schedule[10] = {0, 0, 0, 1, 1, 1, 2, 3, 4, 5};
        ToricGerm g = detail::random_cone(rng, schedule[idx % 10]);
        ToricPair pair = make_toric_pair(g, detail::random_lc_coeffs(rng, g));
        MldResult res = toric_mld(pair);
        if (res.neg_infinity) return "lc pair reported as not lc";
        if (psi_zero(g).eval(res.witness) > Rat(g.dim))
            return "witness exceeds the dimension bound";
        if (!in_relint(g, res.witness)) return "witness left the relative interior";
        return "";
    });
    notes = msgs;
    return all_empty(msgs);
}

bool criterion3_germ_toric_oracle(std::vector<std::string>& notes) {
    auto msgs = run_parallel(100, [](std::size_t idx) -> std::string {
        Rng rng(detail::mix_seed(kSeed, idx ^ 0xA1));
        for (int attempt = 0; attempt < 200; ++attempt) {
            std::size_t d = static_cast<std::size_t>(rng.range(2, 3));
            Int n = rng.int_range(1, 12);
            std::vector<Int> chars;
            for (std::size_t j = 0; j < d; ++j)
                chars.push_back(rng.int_range(0, n.convert_to<long long>() - 1));
            QuotientToricGerm qt;
            try {
                qt = quotient_germ_to_toric(n, chars);
            } catch (const DomainError&) {
                continue;
            }
            bool primitive_images = true;
            for (std::size_t j = 0; j < d && primitive_images; ++j) {
                std::vector<Int> unit(d, Int(0));
                unit[j] = n;
                LatticePoint img = qt.to_lattice(unit);
                Int g = 0;
                for (const auto& v : img) g = gcd(g, v);
                if (g < 0) g = -g;
                if (g != 1) primitive_images = false;
            }
            if (!primitive_images) continue;

            std::vector<BoundaryDivisor> boundary;
            std::vector<Rat> coeffs;
            for (std::size_t j = 0; j < d; ++j) {
                Rat bj = rng.unit(6);
                coeffs.push_back(bj);
                if (bj != 0) {
                    Poly xi;
                    xi.dim = d;
                    Exponent e(d, Int(0));
                    e[j] = 1;
                    xi.add_term(e, Rat(1));
                    boundary.push_back(BoundaryDivisor{bj, xi});
                }
            }
            HyperquotientGerm germ = make_hyperquotient_germ(
                d, CyclicAction{n, chars}, {}, n == 1 ? GermTag::Smooth : GermTag::None, boundary);
            PsiFunction psi = psi_from_pair(make_toric_pair(qt.germ, coeffs));
            auto weights = enumerate_admissible_weights(germ, Int(30));
            if (weights.empty()) return "no admissible weights within the budget";
            for (const auto& w : weights) {
                ExtRat lhs = log_discrepancy(germ, boundary, w);
                LatticePoint pt = qt.to_lattice(w.numerators);
                if (lhs.infinite || lhs.value != psi.eval(pt))
                    return "log discrepancy disagrees with the toric psi value";
            }
            return "";
        }
        return "could not generate a valid quotient sample";
    });
    notes = msgs;
    return all_empty(msgs);
}

bool criterion4_c_invariances(std::vector<std::string>& notes) {
    auto msgs = run_parallel(10000, [](std::size_t idx) -> std::string {
        Rng rng(detail::mix_seed(kSeed, idx ^ 0x64));
        Int r = rng.int_range(1, 200);
        Int b = rng.coprime_to(r);
        long long rv = r.convert_to<long long>();
        Int i = rng.int_range(-3 * rv, 3 * rv);
        if (c_point(r, b, i) != c_point(r, b, i + r)) return "c is not periodic in i";
        if (c_point(r, b, i) != c_point(r, r - b, i)) return "c changed under b -> r-b";
        if (A_Q(r, b, i) != A_Q(r, b, residue(i, r))) return "A_Q changed under residue reduction";
        return "";
    });
    notes = msgs;
    return all_empty(msgs);
}

bool criterion5_family(std::vector<std::string>& notes) {
    auto t0 = std::chrono::steady_clock::now();
    for (int rp = 2; rp <= 5; ++rp) {
        FamilyReport rep = remark_family(Int(rp));
        if (!rep.all_pass) {
            notes.push_back("side condition failed at rparam=" + std::to_string(rp));
            return false;
        }
        const auto& p1 = rep.config.points[0];
        const auto& p2 = rep.config.points[1];
        Int imax = 2 * lcm(p1.r, p2.r);
        if (!verify_delta_identity(rep.config, Int(rp), imax).pass()) {
            notes.push_back("delta identity failed at rparam=" + std::to_string(rp));
            return false;
        }
        if (index_from_basket(p1.r, p1.d_class, p2.r, p2.d_class) != rp) {
            notes.push_back("reconstructed index differs at rparam=" + std::to_string(rp));
            return false;
        }
        if (!check_divisibility_conclusion(rep.config, Int(rp))) {
            notes.push_back("divisibility conclusion failed at rparam=" + std::to_string(rp));
            return false;
        }
    }
    double secs = seconds_since(t0);
    if (secs >= 30.0) {
        notes.push_back("runtime " + std::to_string(secs) + "s exceeds the 30s budget");
        return false;
    }
    return true;
}

bool criterion6_threshold_sets(std::vector<std::string>& notes) {
    for (int k = 1; k <= 2; ++k) {
        Rat lo = make_rat(Int(1), Int(k + 1));
        std::vector<Rat> small = enumerate_smooth_ct_set(Int(k), Int(50));
        std::vector<Rat> large = enumerate_smooth_ct_set(Int(k), Int(100));
        for (const auto& v : large)
            if (v <= lo) {
                notes.push_back("value at or below the floor for k=" + std::to_string(k));
                return false;
            }
        if (large.front() - lo > make_rat(Int(2), Int(100))) {
            notes.push_back("minimum too far from the floor for k=" + std::to_string(k));
            return false;
        }
        Rat eps = make_rat(Int(1), Int(20));
        auto tail = [&](const std::vector<Rat>& vals) {
            std::size_t c = 0;
            for (const auto& v : vals)
                if (v > lo + eps) ++c;
            return c;
        };
        if (tail(small) != tail(large)) {
            notes.push_back("tail count did not stabilize for k=" + std::to_string(k));
            return false;
        }
    }
    return true;
}

bool criterion7_pattern_instance(std::vector<std::string>& notes) {
    Poly phi;
    phi.dim = 4;
    phi.add_term(Exponent{Int(1), Int(1), Int(0), Int(0)}, Rat(1));
    phi.add_term(Exponent{Int(0), Int(0), Int(7), Int(0)}, Rat(1));
    phi.add_term(Exponent{Int(0), Int(0), Int(0), Int(3)}, Rat(1));
    HyperquotientGerm germ = make_hyperquotient_germ(
        4, CyclicAction{Int(7), {Int(1), Int(6), Int(2), Int(0)}}, {phi}, GermTag::cA_over_n, {});
    AdmissibleWeight w = make_admissible_weight(germ, {Int(5), Int(16), Int(3), Int(7)});

    PatternReport rep = check_kawakita_pattern(germ, w);
    if (rep.which != KawakitaCase::Case1 || !rep.all_pass) {
        notes.push_back("structural case (1) did not pass");
        return false;
    }
    auto cert = irreducibility_certificate(germ, w);
    if (!cert) {
        notes.push_back("no certificate for the cA/7 instance");
        return false;
    }
    ExtRat disc = germ_weight_discrepancy(germ, w);
    if (disc.infinite || disc.value != make_rat(Int(3), Int(7)) ||
        cert->predicted_wXx != disc.value) {
        notes.push_back("discrepancy is not 3/7");
        return false;
    }
    return true;
}

bool criterion8_chain_shadow(std::vector<std::string>& notes) {
    auto msgs = run_parallel(500, [](std::size_t idx) -> std::string {
        Rng rng(detail::mix_seed(kSeed, idx ^ 0x88));
        std::size_t dim = static_cast<std::size_t>(rng.range(1, 4));
        int len = static_cast<int>(rng.range(2, 8));
        std::vector<NewtonPolytope> seq;
        for (int i = 0; i < len; ++i) seq.push_back(detail::random_polytope(rng, dim, 20, 6));

        std::vector<std::size_t> chain = longest_descending_chain(seq);
        if (chain.empty()) return "chain cannot be empty";
        for (std::size_t a = 0; a + 1 < chain.size(); ++a) {
            if (chain[a] >= chain[a + 1]) return "chain positions are not ascending";
            if (!is_subpolytope(seq[chain[a + 1]], seq[chain[a]]))
                return "consecutive chain entries are not nested";
        }

        NewtonPolytope acc = seq[0];
        for (int i = 1; i < len; ++i) {
            NewtonPolytope next = union_of(acc, seq[i]);
            if (!is_subpolytope(acc, next)) return "union-built sequence descended";
            acc = next;
        }
        return "";
    });
    notes = msgs;
    return all_empty(msgs);
}

bool criterion9_alct_oracle(std::vector<std::string>& notes) {
    {
        ToricGerm g = make_toric_germ(2, {{Int(1), Int(0)}, {Int(0), Int(1)}});
        ToricPair pair = make_toric_pair(g, {Rat(0), Rat(0)});
        AlctResult one = toric_alct(pair, {Rat(1), Rat(0)}, Rat(1));
        AlctResult half = toric_alct(pair, {Rat(1), Rat(1)}, Rat(1));
        if (one.plus_infinity || one.value != Rat(1) || half.plus_infinity ||
            half.value != make_rat(Int(1), Int(2))) {
            notes.push_back("plane fixtures disagree");
            return false;
        }
    }
    auto msgs = run_parallel(100, [](std::size_t idx) -> std::string {
        Rng rng(detail::mix_seed(kSeed, idx ^ 0xC9));
        Rat a = idx % 3 == 0 ? Rat(0) : (idx % 3 == 1 ? Rat(1) : Rat(3, 2));
        for (int attempt = 0; attempt < 100; ++attempt) {
            int kind = (idx % 2 == 0) ? 0 : 1;
            ToricGerm g = detail::random_cone(rng, kind);
            std::vector<Rat> coeffs;
            for (std::size_t i = 0; i < g.rays.size(); ++i)
                coeffs.push_back(a >= 1 ? rng.unit(4) * Rat(1, 4) : rng.unit(4));
            ToricPair pair = make_toric_pair(g, coeffs);
            MldResult at0 = toric_mld(pair);
            if (at0.neg_infinity || at0.value < a) continue;
            std::vector<Rat> dco;
            bool pos = false;
            for (std::size_t i = 0; i < g.rays.size(); ++i) {
                Rat v = rng.range(0, 2) == 0 ? Rat(0) : rng.rat(1, 2, 2);
                if (v > 0) pos = true;
                dco.push_back(v);
            }
            if (!pos) dco[0] = 1;

            AlctResult got = toric_alct(pair, dco, a);
            if (got.plus_infinity) return "alct reported unbounded with a nonzero divisor";

            auto is_alc = [&](const Rat& t) {
                std::vector<Rat> moved;
                for (std::size_t i = 0; i < coeffs.size(); ++i) {
                    moved.push_back(coeffs[i] + t * dco[i]);
                    if (moved.back() > 1) return false;
                }
                MldResult m = toric_mld(make_toric_pair(g, moved));
                return !m.neg_infinity && m.value >= a;
            };
            Rat lo = 0, hi = 1;
            int guard = 0;
            while (is_alc(hi) && guard++ < 40) {
                lo = hi;
                hi *= 2;
            }
            if (guard >= 40) return "bisection found no upper endpoint";
            for (int it = 0; it < 60; ++it) {
                Rat mid = (lo + hi) / 2;
                if (is_alc(mid))
                    lo = mid;
                else
                    hi = mid;
            }
            if (detail::simplest_in(lo, hi) != got.value)
                return "alct disagrees with the bisection oracle";
            return "";
        }
        return "could not generate an instance at the requested level";
    });
    notes = msgs;
    return all_empty(msgs);
}

template <typename F>
void run_criterion(int num, const std::string& name, F&& fn) {
    std::vector<std::string> notes;
    bool pass = false;
    try {
        pass = fn(notes);
    } catch (const std::exception& e) {
        notes.push_back(std::string("unexpected exception: ") + e.what());
    }
    report(num, name, pass, notes);
}

} // namespace

int main() {
    run_criterion(1, "quotient mld formula vs brute force", criterion1_quotient_mld_formula);
    run_criterion(2, "witness dimension bound", criterion2_witness_bound);
    run_criterion(3, "germ vs toric cross-module oracle", criterion3_germ_toric_oracle);
    run_criterion(4, "point contribution invariances", criterion4_c_invariances);
    run_criterion(5, "side-condition family checks", criterion5_family);
    run_criterion(6, "threshold set structure", criterion6_threshold_sets);
    run_criterion(7, "pattern instance discrepancy 3/7", criterion7_pattern_instance);
    run_criterion(8, "descending chain shadow", criterion8_chain_shadow);
    run_criterion(9, "threshold vs bisection oracle", criterion9_alct_oracle);

    if (g_failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " acceptance criteria failed\n";
    return 1;
}
