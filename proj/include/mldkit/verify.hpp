#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mldkit/germ.hpp"
#include "mldkit/kawakita.hpp"
#include "mldkit/newton.hpp"
#include "mldkit/reid.hpp"
#include "mldkit/thresholds.hpp"
#include "mldkit/toric.hpp"

namespace mldkit {

// Deterministic generator: all draws go through modulo reduction of the
// standardized mt19937_64 stream, so results are identical across
// platforms and thread counts.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    long long range(long long lo, long long hi) { // inclusive
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(raw() % span);
    }

    Int int_range(long long lo, long long hi) { return Int(range(lo, hi)); }

    Rat rat(long long num_lo, long long num_hi, long long den_max) {
        return make_rat(int_range(num_lo, num_hi), int_range(1, den_max));
    }

    Rat unit(long long den_max) { // in [0, 1]
        Int den = int_range(1, den_max);
        Int num = Int(range(0, den.convert_to<long long>()));
        return make_rat(num, den);
    }

    Int coprime_to(const Int& r) {
        while (true) {
            Int b = int_range(1, r.convert_to<long long>());
            if (gcd(b, r) == 1) return b;
        }
    }

  private:
    std::mt19937_64 eng_;
};

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t idx) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (idx + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace detail

inline unsigned configured_thread_count() {
    if (const char* env = std::getenv("MLDKIT_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

template <typename F>
void parallel_for(std::size_t n, F&& fn) {
    unsigned workers = configured_thread_count();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> messages;

    bool pass() const { return failures == 0; }
};

class Checker {
  public:
    explicit Checker(std::string name) { result.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        ++result.checks;
        if (!ok) {
            ++result.failures;
            if (result.messages.size() < 10) result.messages.push_back(what);
        }
    }

    // fn(idx) returns an empty string on success, a diagnostic otherwise
    template <typename F>
    void parallel(std::size_t n, F&& fn) {
        std::vector<std::string> msgs(n);
        parallel_for(n, [&](std::size_t i) { msgs[i] = fn(i); });
        for (auto& m : msgs) check(m.empty(), m);
    }

    SuiteResult result;
};

// ---------------------------------------------------------------- random data

namespace detail {

inline Poly random_poly(Rng& rng, std::size_t dim, int max_terms, int max_exp) {
    Poly p;
    p.dim = dim;
    int terms = static_cast<int>(rng.range(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        Exponent e(dim);
        for (std::size_t j = 0; j < dim; ++j) e[j] = rng.int_range(0, max_exp);
        Rat c = rng.rat(-5, 5, 3);
        if (c == 0) c = 1;
        p.add_term(e, c);
    }
    if (p.is_zero()) p.add_term(Exponent(dim, Int(0)), Rat(1));
    return p;
}

inline Weight random_weight(Rng& rng, std::size_t dim) {
    std::vector<Rat> e;
    e.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j) e.push_back(rng.rat(1, 8, 4));
    return Weight(std::move(e));
}

inline NewtonPolytope random_polytope(Rng& rng, std::size_t dim, int max_coord, int max_gens) {
    std::vector<LatticePoint> gens;
    int g = static_cast<int>(rng.range(1, max_gens));
    for (int t = 0; t < g; ++t) {
        LatticePoint p(dim);
        for (std::size_t j = 0; j < dim; ++j) p[j] = rng.int_range(0, max_coord);
        gens.push_back(std::move(p));
    }
    return from_generators(dim, gens);
}

// kind selects a family; every returned cone is valid by construction
inline ToricGerm random_cone(Rng& rng, int kind) {
    switch (kind) {
    case 0: { // dim 2, random primitive rays
        while (true) {
            LatticePoint a{rng.int_range(-6, 6), rng.int_range(-6, 6)};
            LatticePoint b{rng.int_range(-6, 6), rng.int_range(-6, 6)};
            if ((a[0] == 0 && a[1] == 0) || (b[0] == 0 && b[1] == 0)) continue;
            if (a[0] * b[1] - a[1] * b[0] == 0) continue;
            return make_toric_germ(2, {a, b});
        }
    }
    case 1: { // dim 3 simplicial: sheared orthant
        IntMatrix u = IntMatrix::identity(3);
        for (int s = 0; s < 2; ++s) {
            std::size_t i = static_cast<std::size_t>(rng.range(0, 2));
            std::size_t j = static_cast<std::size_t>(rng.range(0, 2));
            if (i != j) u.at(i, j) = rng.int_range(-2, 2);
        }
        std::vector<LatticePoint> rays;
        for (std::size_t i = 0; i < 3; ++i) {
            LatticePoint e(3, Int(0));
            e[i] = 1;
            rays.push_back(mat_vec(u, e));
        }
        return make_toric_germ(3, std::move(rays));
    }
    case 2: { // dim 3 non-simplicial: cone over a quadrilateral
        Int p = rng.int_range(1, 3), q = rng.int_range(1, 3);
        Int r = rng.int_range(1, 3), s = rng.int_range(1, 3);
        return make_toric_germ(3, {{p, Int(0), Int(1)},
                                   {Int(0), q, Int(1)},
                                   {-r, Int(0), Int(1)},
                                   {Int(0), -s, Int(1)}});
    }
    case 3: { // dim 3 cyclic quotient
        Int n = rng.int_range(2, 8);
        std::vector<Int> chars{Int(1), rng.int_range(0, n.convert_to<long long>() - 1),
                               rng.int_range(0, n.convert_to<long long>() - 1)};
        return quotient_germ_to_toric(n, chars).germ;
    }
    case 4: { // dim 4 simplicial: one shear
        IntMatrix u = IntMatrix::identity(4);
        std::size_t i = static_cast<std::size_t>(rng.range(0, 3));
        std::size_t j = static_cast<std::size_t>(rng.range(0, 3));
        if (i != j) u.at(i, j) = rng.int_range(-2, 2);
        std::vector<LatticePoint> rays;
        for (std::size_t k = 0; k < 4; ++k) {
            LatticePoint e(4, Int(0));
            e[k] = 1;
            rays.push_back(mat_vec(u, e));
        }
        return make_toric_germ(4, std::move(rays));
    }
    default: { // dim 4 order-2 quotient
        std::vector<Int> chars(4);
        bool nonzero = false;
        for (auto& c : chars) {
            c = rng.int_range(0, 1);
            if (c != 0) nonzero = true;
        }
        if (!nonzero) chars[0] = 1;
        return quotient_germ_to_toric(Int(2), chars).germ;
    }
    }
}

inline std::vector<Rat> random_lc_coeffs(Rng& rng, const ToricGerm& g) {
    // for the quadrilateral family the four ray values must stay linear:
    // sample a covector small enough to keep every coefficient in [0, 1]
    if (g.rays.size() > g.dim) {
        std::vector<Rat> cov{make_rat(rng.int_range(-1, 1), rng.int_range(6, 12)),
                             make_rat(rng.int_range(-1, 1), rng.int_range(6, 12)), Rat(1, 2)};
        std::vector<Rat> coeffs;
        for (const auto& r : g.rays) {
            Rat v = 0;
            for (std::size_t j = 0; j < 3; ++j) v += cov[j] * Rat(r[j]);
            coeffs.push_back(1 - v);
        }
        return coeffs;
    }
    std::vector<Rat> coeffs;
    for (std::size_t i = 0; i < g.rays.size(); ++i) coeffs.push_back(rng.unit(4));
    return coeffs;
}

inline Rat psi0_value(const PsiFunction& psi, const LatticePoint& x) { return psi.eval(x); }

inline Rat det_rat(const IntMatrix& m) {
    const std::size_t n = m.rows;
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            Rat f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

// simplest rational in [lo, hi] via the Stern-Brocot walk; needs hi >= lo >= 0
inline Rat simplest_in(const Rat& lo, const Rat& hi) {
    Int fl = rat_floor(lo);
    if (Rat(fl) == lo) return lo;
    if (rat_ceil(lo) <= rat_floor(hi)) return Rat(rat_ceil(lo));
    Rat flo = lo - Rat(fl), fhi = hi - Rat(fl);
    return Rat(fl) + 1 / simplest_in(1 / fhi, 1 / flo);
}

} // namespace detail

// ------------------------------------------------------------------- suites

inline void suite_rational(Checker& c, std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < 2000; ++t) {
        Rat a = rng.rat(-20, 20, 12), b = rng.rat(-20, 20, 12), d = rng.rat(-20, 20, 12);
        c.check((a + b) + d == a + (b + d), "rational addition is not associative");
        c.check(a * (b + d) == a * b + a * d, "rational multiplication does not distribute");
        c.check((a * b) * d == a * (b * d), "rational multiplication is not associative");
        c.check(parse_rat(rat_to_string(a)) == a, "rational print/parse round trip failed");
        Int fl = rat_floor(a);
        c.check(Rat(fl) <= a && a < Rat(fl + 1), "rational floor out of range");
        if (a != 0) c.check(a * (1 / a) == 1, "rational inverse failed");
    }
}

inline void suite_lattice(Checker& c, std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < 300; ++t) {
        std::size_t rows = static_cast<std::size_t>(rng.range(1, 5));
        std::size_t cols = static_cast<std::size_t>(rng.range(1, 5));
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.int_range(-30, 30);
        HnfResult h = hermite_normal_form(m);
        c.check(h.U * m == h.H, "unimodular transform does not reproduce the normal form");
        Rat det = detail::det_rat(h.U);
        c.check(det == 1 || det == -1, "transform is not unimodular");
        for (std::size_t r = 0; r < h.rank; ++r) {
            std::size_t pc = h.pivot_cols[r];
            c.check(h.H.at(r, pc) > 0, "pivot not positive");
            for (std::size_t i = 0; i < r; ++i)
                c.check(h.H.at(i, pc) >= 0 && h.H.at(i, pc) < h.H.at(r, pc),
                        "entry above pivot not reduced");
        }
        auto kernel = left_kernel_basis(m);
        c.check(kernel.size() == rows - h.rank, "kernel dimension mismatch");
        for (const auto& y : kernel) {
            LatticePoint prod = vec_mat(y, m);
            bool zero = true;
            for (const auto& v : prod)
                if (v != 0) zero = false;
            c.check(zero, "kernel vector does not annihilate the matrix");
        }
    }

    for (int t = 0; t < 200; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.range(1, 4));
        std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
        std::vector<Rat> x0(n), b(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i) {
            x0[i] = rng.rat(-6, 6, 4);
            for (std::size_t j = 0; j < n; ++j) a[i][j] = rng.rat(-6, 6, 3);
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) b[i] += a[i][j] * x0[j];
        LinearSolution sol = solve_rational(a, b);
        if (sol.kind == SolveKind::Solution) {
            bool ok = true;
            for (std::size_t i = 0; i < n; ++i) {
                Rat dot = 0;
                for (std::size_t j = 0; j < n; ++j) dot += a[i][j] * sol.x[j];
                if (dot != b[i]) ok = false;
            }
            c.check(ok, "linear solve residual nonzero");
        } else {
            c.check(sol.kind == SolveKind::Underdetermined,
                    "constructed solvable system reported inconsistent");
        }
    }

    c.parallel(200, [&, seed](std::size_t idx) -> std::string {
        Rng r(detail::mix_seed(seed, idx));
        std::size_t dim = static_cast<std::size_t>(r.range(1, 4));
        std::vector<Constraint> cons;
        std::vector<long long> lo(dim), hi(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            lo[j] = r.range(-5, 0);
            hi[j] = r.range(0, 5);
            std::vector<Rat> row(dim, Rat(0));
            row[j] = -1;
            cons.push_back(Constraint{row, Rat(-lo[j]), false});
            row[j] = 1;
            cons.push_back(Constraint{row, Rat(hi[j]), false});
        }
        int extra = static_cast<int>(r.range(0, 3));
        for (int e = 0; e < extra; ++e) {
            std::vector<Rat> row(dim);
            for (std::size_t j = 0; j < dim; ++j) row[j] = r.rat(-3, 3, 2);
            cons.push_back(Constraint{row, r.rat(-6, 12, 2), r.range(0, 1) == 1});
        }
        std::vector<LatticePoint> got = enumerate_lattice_points(dim, cons);
        std::vector<LatticePoint> want;
        LatticePoint x(dim);
        for (std::size_t j = 0; j < dim; ++j) x[j] = lo[j];
        while (true) {
            bool ok = true;
            for (const auto& con : cons) {
                Rat dot = 0;
                for (std::size_t j = 0; j < dim; ++j) dot += con.a[j] * Rat(x[j]);
                if (con.strict ? !(dot < con.b) : !(dot <= con.b)) {
                    ok = false;
                    break;
                }
            }
            if (ok) want.push_back(x);
            std::size_t j = dim;
            bool done = false;
            while (j > 0) {
                --j;
                if (x[j] < hi[j]) {
                    ++x[j];
                    break;
                }
                x[j] = lo[j];
                if (j == 0) done = true;
            }
            if (done) break;
        }
        if (got != want) return "lattice enumeration disagrees with brute-force box scan";
        return "";
    });
}

inline void suite_newton(Checker& c, std::uint64_t seed) {
    Rng rng(seed);
    auto antichain = [](const NewtonPolytope& n) {
        for (std::size_t i = 0; i < n.vertices.size(); ++i)
            for (std::size_t j = 0; j < n.vertices.size(); ++j)
                if (i != j && dominates(n.vertices[i], n.vertices[j])) return false;
        return true;
    };
    for (int t = 0; t < 200; ++t) {
        std::size_t dim = static_cast<std::size_t>(rng.range(1, 4));
        NewtonPolytope a = detail::random_polytope(rng, dim, 20, 8);
        NewtonPolytope b = detail::random_polytope(rng, dim, 20, 8);
        c.check(antichain(a) && antichain(b), "vertex set is not an antichain");
        NewtonPolytope u = union_of(a, b);
        c.check(antichain(u), "union vertex set is not an antichain");
        c.check(is_subpolytope(a, u) && is_subpolytope(b, u), "union lost a part");
    }

    for (int t = 0; t < 100; ++t) {
        std::size_t dim = static_cast<std::size_t>(rng.range(1, 4));
        std::size_t len = static_cast<std::size_t>(rng.range(2, 10));
        std::vector<NewtonPolytope> seq;
        NewtonPolytope acc;
        acc.dim = dim;
        for (std::size_t j = 0; j < len; ++j) {
            LatticePoint v(dim);
            for (std::size_t k = 0; k < dim; ++k) v[k] = rng.int_range(0, 20);
            acc = union_of(acc, from_generators(dim, {v}));
            seq.push_back(acc);
        }
        bool ascending = true;
        for (std::size_t j = 0; j + 1 < len; ++j)
            for (std::size_t jp = j + 1; jp < len; ++jp)
                if (is_subpolytope(seq[jp], seq[j]) && !(seq[jp] == seq[j])) ascending = false;
        c.check(ascending, "union-built sequence has a strict descent");
    }

    c.parallel(500, [&, seed](std::size_t idx) -> std::string {
        Rng r(detail::mix_seed(seed, idx ^ 0x5eed));
        std::size_t dim = static_cast<std::size_t>(r.range(1, 4));
        std::size_t len = static_cast<std::size_t>(r.range(2, 9));
        std::vector<NewtonPolytope> seq;
        for (std::size_t j = 0; j < len; ++j) seq.push_back(detail::random_polytope(r, dim, 20, 6));
        std::vector<std::size_t> chain = longest_descending_chain(seq);
        if (chain.empty()) return "empty chain";
        for (std::size_t u = 0; u + 1 < chain.size(); ++u) {
            if (chain[u] >= chain[u + 1]) return "chain indices not increasing";
            for (std::size_t v = u + 1; v < chain.size(); ++v)
                if (!is_subpolytope(seq[chain[v]], seq[chain[u]]))
                    return "chain pair fails containment";
        }
        if (idx < 60) { // local optimality: deleting a non-chain element never helps
            for (std::size_t del = 0; del < len; ++del) {
                if (std::find(chain.begin(), chain.end(), del) != chain.end()) continue;
                std::vector<NewtonPolytope> shorter;
                for (std::size_t j = 0; j < len; ++j)
                    if (j != del) shorter.push_back(seq[j]);
                if (longest_descending_chain(shorter).size() != chain.size())
                    return "deleting a non-chain element changed the chain length";
            }
        }
        return "";
    });
}

inline void suite_weights(Checker& c, std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < 300; ++t) {
        std::size_t dim = static_cast<std::size_t>(rng.range(1, 4));
        Weight w = detail::random_weight(rng, dim);
        Poly h = detail::random_poly(rng, dim, 6, 6);
        Rat mu = rng.rat(1, 9, 5);
        c.check(leading_term(scale_weight(mu, w), h) == leading_term(w, h),
                "leading term not scale invariant");

        Poly p = detail::random_poly(rng, dim, 5, 5);
        Poly q = detail::random_poly(rng, dim, 5, 5);
        Poly prod = p * q;
        c.check(leading_term(w, prod) == leading_term(w, p) * leading_term(w, q),
                "product law for leading terms failed");
        c.check(weight_of_poly(w, prod) == weight_of_poly(w, p) + weight_of_poly(w, q),
                "weights not additive on products");

        NewtonPolytope inner = newton_polytope_of(leading_term(w, h));
        c.check(is_subpolytope(inner, newton_polytope_of(h)),
                "leading-term staircase escapes the full staircase");
    }

    for (int t = 0; t < 300; ++t) {
        std::size_t dim = static_cast<std::size_t>(rng.range(1, 4));
        Weight w2 = detail::random_weight(rng, dim);
        Rat mu = rng.rat(1, 6, 4);
        std::vector<Rat> entries;
        for (std::size_t j = 0; j < dim; ++j)
            entries.push_back(mu * w2.entries[j] + rng.rat(0, 4, 3) * Rat(rng.range(0, 1)));
        Weight w(entries);
        WeightComparison cmp = compare_weights(w, scale_weight(mu, w2));
        c.check(cmp.geq, "constructed dominating weight not recognized");
        Poly h = detail::random_poly(rng, dim, 6, 6);
        c.check(weight_of_poly(w, h).value >= mu * weight_of_poly(w2, h).value,
                "superadditivity under domination failed");
    }
}

inline void suite_germs(Checker& c, std::uint64_t seed) {
    // cross-module oracle: quotient-germ discrepancies are toric psi values
    c.parallel(100, [seed](std::size_t idx) -> std::string {
        Rng rng(detail::mix_seed(seed, idx ^ 0xA1));
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
            ToricPair pair = make_toric_pair(qt.germ, coeffs);
            PsiFunction psi = psi_from_pair(pair);
            auto weights = enumerate_admissible_weights(germ, Int(30));
            if (weights.empty()) return "no admissible weights within budget";
            for (const auto& w : weights) {
                ExtRat lhs = log_discrepancy(germ, boundary, w);
                LatticePoint pt = qt.to_lattice(w.numerators);
                if (lhs.infinite || lhs.value != psi.eval(pt))
                    return "log discrepancy disagrees with the toric psi value";
            }
            return "";
        }
        return "could not generate a free-in-codimension-one quotient sample";
    });

    // every weight passing pattern case (1) has discrepancy a/n
    c.parallel(60, [seed](std::size_t idx) -> std::string {
        Rng rng(detail::mix_seed(seed, idx ^ 0xB2));
        for (int attempt = 0; attempt < 200; ++attempt) {
            Int n = rng.int_range(2, 8);
            Int b = rng.coprime_to(n);
            Int r1 = rng.int_range(1, 12);
            Int a = mod_floor(b * r1, n);
            if (a == 0) continue;
            Int dq = rng.int_range(1, 3);
            Int r2 = a * dq * n - r1;
            if (r2 < 1) continue;
            std::vector<Int> chars{Int(1), n - 1, b, Int(0)};
            Int x3pow = dq * n, x4pow = a * dq;
            Poly phi;
            phi.dim = 4;
            phi.add_term(Exponent{Int(1), Int(1), Int(0), Int(0)}, Rat(1));
            phi.add_term(Exponent{Int(0), Int(0), x3pow, Int(0)}, Rat(1));
            phi.add_term(Exponent{Int(0), Int(0), Int(0), x4pow}, Rat(1));
            HyperquotientGerm germ =
                make_hyperquotient_germ(4, CyclicAction{n, chars}, {phi}, GermTag::cA_over_n, {});
            AdmissibleWeight w = make_admissible_weight(germ, {r1, r2, a, n});
            PatternReport rep = check_kawakita_pattern(germ, w);
            if (rep.which != KawakitaCase::Case1 || !rep.all_pass)
                return "constructed case-1 instance did not match";
            ExtRat disc = germ_weight_discrepancy(germ, w);
            if (disc.infinite || disc.value != make_rat(a, n))
                return "case-1 discrepancy differs from a/n";
            auto cert = irreducibility_certificate(germ, w);
            if (!cert) return "case-1 certificate missing";
            return "";
        }
        return "could not generate a case-1 sample";
    });

    // ct_upper_bound is antitone in the enumeration budget
    c.parallel(40, [seed](std::size_t idx) -> std::string {
        Rng rng(detail::mix_seed(seed, idx ^ 0xC3));
        std::size_t d = 3;
        Int n = rng.int_range(1, 6);
        std::vector<Int> chars;
        for (std::size_t j = 0; j < d; ++j)
            chars.push_back(rng.int_range(0, n.convert_to<long long>() - 1));
        HyperquotientGerm germ = make_hyperquotient_germ(
            d, CyclicAction{n, chars}, {}, n == 1 ? GermTag::Smooth : GermTag::None, {});
        Poly div;
        div.dim = d;
        Exponent e(d);
        for (std::size_t j = 0; j < d; ++j) e[j] = rng.int_range(0, 2);
        bool zero = true;
        for (const auto& v : e)
            if (v != 0) zero = false;
        if (zero) e[0] = 1;
        div.add_term(e, Rat(1));
        ExtRat prev = ExtRat::inf();
        for (long long budget = 3; budget <= 6; ++budget) {
            CtBound bound;
            try {
                bound = ct_upper_bound(germ, BoundaryDivisor{Rat(1), div}, Int(budget));
            } catch (const EmptyEnumeration&) {
                continue;
            }
            if (!(bound.bound <= prev)) return "ct upper bound increased with a larger budget";
            prev = bound.bound;
        }
        return "";
    });

    // enumerated witnesses really are the least admissible character multiplier
    Rng rng(detail::mix_seed(seed, 0xD4));
    for (int t = 0; t < 100; ++t) {
        std::size_t d = static_cast<std::size_t>(rng.range(2, 3));
        Int n = rng.int_range(1, 9);
        std::vector<Int> chars;
        for (std::size_t j = 0; j < d; ++j)
            chars.push_back(rng.int_range(0, n.convert_to<long long>() - 1));
        HyperquotientGerm germ = make_hyperquotient_germ(
            d, CyclicAction{n, chars}, {}, n == 1 ? GermTag::Smooth : GermTag::None, {});
        auto weights = enumerate_admissible_weights(germ, Int(12));
        std::vector<std::vector<Int>> nums;
        for (const auto& w : weights) {
            nums.push_back(w.numerators);
            bool minimal = true;
            for (Int bb = 0; bb < w.witness_b; ++bb) {
                bool all = true;
                for (std::size_t j = 0; j < d; ++j)
                    if (mod_floor(w.numerators[j], n) != mod_floor(bb * chars[j], n)) all = false;
                if (all) minimal = false;
            }
            c.check(minimal, "witness multiplier is not minimal");
        }
        c.check(std::is_sorted(nums.begin(), nums.end()), "weights not in lexicographic order");
    }

    c.check(coefficient_sum_check(true, {Rat(1), Rat(1, 2)}), "smooth coefficient budget broken");
    c.check(!coefficient_sum_check(false, {Rat(1), Rat(1, 2)}),
            "singular coefficient budget broken");
    c.check(codim2_mld(Rat(1, 2)) == Rat(3, 2), "codimension-two mld formula broken");
    c.check(!codim2_mld(Rat(3, 2)).has_value(), "codimension-two mld defined past mult 1");
}

inline void suite_toric(Checker& c, std::uint64_t seed) {
    // witness bound, value consistency, oracle equivalence, fold validity
    c.parallel(200, [seed](std::size_t idx) -> std::string {
        Rng rng(detail::mix_seed(seed, idx ^ 0xE5));
        static const int schedule[10] = {0, 0, 0, 1, 1, 1, 2, 3, 4, 5};
        int kind = schedule[idx % 10];
        ToricGerm g = detail::random_cone(rng, kind);
        std::vector<Rat> coeffs = detail::random_lc_coeffs(rng, g);
        ToricPair pair = make_toric_pair(g, coeffs);
        MldResult res = toric_mld(pair);
        if (res.neg_infinity) return "lc pair reported as not lc";

        PsiFunction psi0 = psi_zero(g);
        PsiFunction psi = psi_from_pair(pair);
        if (!in_relint(g, res.witness)) return "witness not in the relative interior";
        if (psi0.eval(res.witness) > Rat(g.dim)) return "witness exceeds the psi0 bound";
        if (psi.eval(res.witness) != res.value) return "witness value mismatch";

        Rat best;
        bool have = false;
        for (const auto& x : enumerate_low_psi0_points(g, Int(g.dim + 3))) {
            Rat v = psi.eval(x);
            if (!have || v < best) {
                best = v;
                have = true;
            }
        }
        if (!have || best != res.value) return "brute-force oracle found a different minimum";

        const Fold& f = res.fold;
        Rat s0 = 0;
        for (std::size_t j = 0; j < f.ray_indices.size(); ++j) {
            if (!(f.folded_lambda[j] > 0 && f.folded_lambda[j] <= 1))
                return "folded coefficient outside (0,1]";
            s0 += f.folded_lambda[j];
        }
        std::vector<std::vector<Rat>> a(g.dim, std::vector<Rat>(f.ray_indices.size()));
        for (std::size_t row = 0; row < g.dim; ++row)
            for (std::size_t col = 0; col < f.ray_indices.size(); ++col)
                a[row][col] = Rat(g.rays[f.ray_indices[col]][row]);
        for (std::size_t row = 0; row < g.dim; ++row) {
            Rat dot = 0;
            for (std::size_t col = 0; col < f.ray_indices.size(); ++col)
                dot += a[row][col] * f.folded_lambda[col];
            if (dot != Rat(f.folded_point[row])) return "folded point does not match its weights";
        }
        if (!in_relint(g, f.folded_point)) return "folded point left the relative interior";
        if (s0 != psi0.eval(f.folded_point)) return "folded psi0 inconsistent";
        return "";
    });

    // unimodular invariance
    c.parallel(60, [seed](std::size_t idx) -> std::string {
        Rng rng(detail::mix_seed(seed, idx ^ 0xF6));
        static const int schedule[4] = {0, 1, 2, 3};
        ToricGerm g = detail::random_cone(rng, schedule[idx % 4]);
        std::vector<Rat> coeffs = detail::random_lc_coeffs(rng, g);
        ToricPair pair = make_toric_pair(g, coeffs);
        MldResult base = toric_mld(pair);

        const std::size_t d = g.dim;
        IntMatrix u = IntMatrix::identity(d);
        for (int s = 0; s < 3; ++s) {
            std::size_t i = static_cast<std::size_t>(rng.range(0, static_cast<long long>(d) - 1));
            std::size_t j = static_cast<std::size_t>(rng.range(0, static_cast<long long>(d) - 1));
            if (i == j) continue;
            IntMatrix shear = IntMatrix::identity(d);
            shear.at(i, j) = rng.int_range(-1, 1);
            u = shear * u;
        }
        std::vector<LatticePoint> rays;
        for (const auto& r : g.rays) rays.push_back(mat_vec(u, r));
        ToricGerm g2 = make_toric_germ(d, rays);
        ToricPair pair2 = make_toric_pair(g2, coeffs);
        MldResult moved = toric_mld(pair2);
        if (base.neg_infinity || moved.neg_infinity) return "lc pair reported as not lc";
        if (moved.value != base.value) return "mld changed under a unimodular map";
        LatticePoint img = mat_vec(u, base.witness);
        PsiFunction psi2 = psi_from_pair(pair2);
        if (!in_relint(g2, img)) return "witness image left the cone interior";
        if (psi2.eval(img) != base.value) return "witness image no longer attains the mld";
        return "";
    });

    // monotonicity in the boundary
    c.parallel(60, [seed](std::size_t idx) -> std::string {
        Rng rng(detail::mix_seed(seed, idx ^ 0xA7));
        static const int schedule[4] = {0, 1, 3, 4};
        ToricGerm g = detail::random_cone(rng, schedule[idx % 4]);
        std::vector<Rat> coeffs;
        for (std::size_t i = 0; i < g.rays.size(); ++i) coeffs.push_back(rng.unit(4));
        std::vector<Rat> smaller;
        for (const auto& b : coeffs) {
            Rat delta = rng.unit(4) * Rat(rng.range(0, 1));
            Rat nb = b - delta;
            if (nb < 0) nb = 0;
            smaller.push_back(nb);
        }
        MldResult big = toric_mld(make_toric_pair(g, coeffs));
        MldResult small = toric_mld(make_toric_pair(g, smaller));
        if (big.neg_infinity || small.neg_infinity) return "lc pair reported as not lc";
        if (!(small.value >= big.value)) return "mld not monotone under shrinking the boundary";
        return "";
    });

    // orbit-point reduction: face recognition and psi compatibility
    c.parallel(40, [seed](std::size_t idx) -> std::string {
        Rng rng(detail::mix_seed(seed, idx ^ 0xB8));
        static const int schedule[4] = {0, 1, 2, 3};
        ToricGerm g = detail::random_cone(rng, schedule[idx % 4]);
        std::vector<Rat> coeffs = detail::random_lc_coeffs(rng, g);
        ToricPair pair = make_toric_pair(g, coeffs);
        PsiFunction psi = psi_from_pair(pair);
        const std::size_t nrays = g.rays.size();
        for (std::size_t mask = 0; mask < (std::size_t(1) << nrays); ++mask) {
            std::vector<std::size_t> face;
            for (std::size_t i = 0; i < nrays; ++i)
                if (mask & (std::size_t(1) << i)) face.push_back(i);
            Reduction red;
            try {
                red = reduce_orbit_point(g, face);
            } catch (const NotAFace&) {
                continue;
            }
            if (red.kept_rays != face) return "kept rays differ from the requested face";
            if (red.face_dim + red.codim != g.dim) return "face dimension bookkeeping broken";
            if (face.size() == nrays) {
                if (!red.reduced || !(red.reduced->rays == g.rays)) return "full face not identity";
                continue;
            }
            if (face.empty()) {
                if (red.reduced) return "empty face should reduce to a point";
                continue;
            }
            if (!red.reduced) return "proper face lost its reduced germ";
            std::vector<Rat> rcoeffs;
            for (auto i : red.kept_rays) rcoeffs.push_back(coeffs[i]);
            PsiFunction rpsi = psi_from_pair(make_toric_pair(*red.reduced, rcoeffs));
            LatticePoint y(red.face_dim, Int(0));
            for (const auto& ray : red.reduced->rays)
                for (std::size_t j = 0; j < red.face_dim; ++j) y[j] += ray[j];
            LatticePoint x(g.dim, Int(0));
            for (std::size_t i = 0; i < red.face_dim; ++i)
                for (std::size_t j = 0; j < g.dim; ++j) x[j] += y[i] * red.basis.at(i, j);
            if (rpsi.eval(y) != psi.eval(x)) return "reduced psi disagrees on the face span";
        }
        return "";
    });

    // alct against the bisection oracle
    c.parallel(100, [seed](std::size_t idx) -> std::string {
        Rng rng(detail::mix_seed(seed, idx ^ 0xC9));
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
            if (guard >= 40) return "bisection oracle found no upper endpoint";
            for (int it = 0; it < 60; ++it) {
                Rat mid = (lo + hi) / 2;
                if (is_alc(mid))
                    lo = mid;
                else
                    hi = mid;
            }
            Rat reconstructed = detail::simplest_in(lo, hi);
            if (reconstructed != got.value) return "alct disagrees with the bisection oracle";
            return "";
        }
        return "could not generate an alct instance at the requested level";
    });
}

inline void suite_reid(Checker& c, std::uint64_t seed) {
    c.parallel(10000, [seed](std::size_t idx) -> std::string {
        Rng rng(detail::mix_seed(seed, idx ^ 0xDA));
        Int r = rng.int_range(1, 200);
        Int b = rng.coprime_to(r);
        long long rr = r.convert_to<long long>();
        Int i = rng.int_range(-3 * rr, 3 * rr);
        if (c_point(r, b, i) != c_point(r, b, i + r)) return "c_x not periodic in i";
        if (c_point(r, b, i) != c_point(r, r - b, i)) return "c_x not invariant under b -> r-b";
        if (A_Q(r, b, i) != A_Q(r, b, residue(i, r))) return "A_Q not determined by the residue";
        return "";
    });

    Rng rng(detail::mix_seed(seed, 0xEB));
    for (long long r = 1; r <= 60; ++r) {
        for (int t = 0; t < 3; ++t) {
            Int b = rng.coprime_to(Int(r));
            Rat sum = 0;
            for (Int j = 0; j < r; ++j) sum += B_Q(Int(r), j * b);
            c.check(sum == make_rat(Int(r * r - 1), Int(12)), "period sum of B_Q incorrect");
        }
    }

    for (long long rp = 2; rp <= 5; ++rp) {
        FamilyReport fam = remark_family(Int(rp));
        c.check(fam.all_pass, "family side conditions failed");
        const Int r1 = fam.config.points[0].r, r2 = fam.config.points[1].r;
        Int imax = 2 * lcm(r1, r2);
        DeltaReport rep = verify_delta_identity(fam.config, Int(rp), imax);
        c.check(rep.pass(), "delta identity violated on the family");
        c.check(index_from_basket(r1, fam.config.points[0].d_class, r2,
                                  fam.config.points[1].d_class) == Int(rp),
                "index reconstruction incorrect on the family");
        c.check(check_divisibility_conclusion(fam.config, Int(rp)),
                "divisibility conclusion violated on the family");
    }

    // perturbing v2 breaks the identity; v1 cannot (d1 = r1 spans full periods)
    {
        FamilyReport fam = remark_family(Int(2));
        const auto& q1 = fam.config.points[0];
        const auto& q2 = fam.config.points[1];
        BasketConfig bad = make_basket_config(
            fam.config.n, fam.config.a, fam.config.b_amb,
            make_fictitious_point(q1.r, q1.b, q1.d_class, q1.v),
            make_fictitious_point(q2.r, q2.b, q2.d_class, q2.v + 1));
        c.check(!verify_delta_identity(bad, Int(2), Int(144)).pass(),
                "perturbed second point went undetected");
        BasketConfig shifted = make_basket_config(
            fam.config.n, fam.config.a, fam.config.b_amb,
            make_fictitious_point(q1.r, q1.b, q1.d_class, q1.v + 1),
            make_fictitious_point(q2.r, q2.b, q2.d_class, q2.v));
        c.check(verify_delta_identity(shifted, Int(2), Int(144)).pass(),
                "full-period first point unexpectedly sensitive to v");
    }
}

inline void suite_thresholds(Checker& c, std::uint64_t seed) {
    for (long long k = 1; k <= 2; ++k) {
        std::vector<Rat> at50 = enumerate_smooth_ct_set(Int(k), Int(50));
        std::vector<Rat> at100 = enumerate_smooth_ct_set(Int(k), Int(100));
        std::vector<Rat> ca100 = enumerate_cA_ct_set(Int(k), Int(100));
        Rat floorv = make_rat(Int(1), Int(k + 1));
        for (const auto& v : at100) c.check(v > floorv, "threshold value at or below 1/(k+1)");
        for (const auto& v : ca100) c.check(v > floorv, "cA threshold value at or below 1/(k+1)");
        for (const auto& v : at100)
            c.check(std::binary_search(ca100.begin(), ca100.end(), v),
                    "smooth threshold value missing from the cA set");
        Rat cut = floorv + Rat(1, 20);
        auto tail = [&](const std::vector<Rat>& vals) {
            std::size_t n = 0;
            for (const auto& v : vals)
                if (v > cut) ++n;
            return n;
        };
        c.check(tail(at50) == tail(at100), "threshold tail count not stabilized");
        c.check(std::is_sorted(at100.begin(), at100.end()), "threshold set not sorted");
        c.check(std::adjacent_find(at100.begin(), at100.end()) == at100.end(),
                "threshold set has duplicates");
        AccumulationReport rep = accumulation_scan(at100, {floorv}, {Rat(0), Rat(1, 20)});
        c.check(rep.min_gap <= make_rat(Int(2), Int(100)), "minimum too far from 1/(k+1)");
    }
    c.check(ik_contains(Int(1), Rat(3, 7)), "small numerator rejected");
    c.check(!ik_contains(Int(1), Rat(65, 131)), "large numerator accepted");

    for (long long m = 1; m <= 200; ++m) {
        ComparisonBounds b = comparison_bounds(Rat(1), Int(m), Rat(1));
        c.check(b.lo == m && b.hi == m, "identity comparison bounds broken");
    }
    c.check(comparison_bounds(Rat(1, 2), Int(5), Rat(2)).lo == 3 &&
                comparison_bounds(Rat(1, 2), Int(5), Rat(2)).hi == 10,
            "comparison bounds arithmetic broken");

    Rng rng(detail::mix_seed(seed, 0xFC));
    for (int t = 0; t < 30; ++t) {
        std::size_t m0 = static_cast<std::size_t>(rng.range(1, 3));
        std::size_t len = static_cast<std::size_t>(rng.range(4, t < 3 ? 256 : 64));
        std::vector<std::vector<Rat>> seqs(m0, std::vector<Rat>(len));
        for (auto& s : seqs)
            for (auto& v : s) v = rng.rat(1, 40, 8);
        RatioSubsequence out = monotone_ratio_subsequence(seqs);
        c.check(!out.indices.empty(), "empty monotone subsequence");
        bool mono = true;
        for (std::size_t j = 0; j < m0; ++j)
            for (std::size_t u = 0; u + 1 < out.indices.size(); ++u) {
                Rat prev = seqs[j][out.indices[u]] / seqs[out.pivot][out.indices[u]];
                Rat next = seqs[j][out.indices[u + 1]] / seqs[out.pivot][out.indices[u + 1]];
                if (next > prev) mono = false;
            }
        c.check(mono, "selected subsequence is not ratio-monotone");
        bool increasing = std::is_sorted(out.indices.begin(), out.indices.end()) &&
                          std::adjacent_find(out.indices.begin(), out.indices.end()) ==
                              out.indices.end();
        c.check(increasing, "subsequence indices not strictly increasing");
    }
    {
        std::vector<std::vector<Rat>> one{{Rat(3), Rat(1), Rat(4), Rat(1), Rat(5)}};
        RatioSubsequence out = monotone_ratio_subsequence(one);
        c.check(out.pivot == 0 && out.indices.size() == 5, "single sequence must keep every index");
    }
}

// ----------------------------------------------------------------- registry

inline const std::vector<std::pair<std::string, void (*)(Checker&, std::uint64_t)>>&
suite_table() {
    static const std::vector<std::pair<std::string, void (*)(Checker&, std::uint64_t)>> table = {
        {"rational", &suite_rational},   {"lattice", &suite_lattice},
        {"newton", &suite_newton},       {"weights", &suite_weights},
        {"germs", &suite_germs},         {"toric", &suite_toric},
        {"reid", &suite_reid},           {"thresholds", &suite_thresholds},
    };
    return table;
}

inline std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : suite_table()) names.push_back(name);
    return names;
}

inline SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
    for (const auto& [n, fn] : suite_table()) {
        if (n == name) {
            Checker c(n);
            fn(c, seed);
            return c.result;
        }
    }
    throw DomainError("unknown verification suite: " + name);
}

inline std::vector<SuiteResult> run_all_suites(std::uint64_t seed) {
    std::vector<SuiteResult> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(run_suite(name, seed));
    return out;
}

} // namespace mldkit
