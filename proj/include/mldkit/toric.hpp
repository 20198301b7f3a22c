#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <vector>

#include "mldkit/lattice.hpp"

namespace mldkit {

// Strongly convex full-dimensional rational cone given by its extremal
// primitive ray generators, together with the inward facet normals used
// for membership and relative-interior tests. The facet list may contain
// redundant supporting normals; every genuine facet normal is present,
// which is all the tests rely on.
struct ToricGerm {
    std::size_t dim = 0;
    std::vector<LatticePoint> rays;
    std::vector<LatticePoint> facets;
};

struct ToricPair {
    ToricGerm germ;
    std::vector<Rat> coeffs;
};

struct PsiFunction {
    std::vector<Rat> covector;

    Rat eval(const LatticePoint& x) const {
        Rat s = 0;
        for (std::size_t i = 0; i < covector.size(); ++i) s += covector[i] * Rat(x[i]);
        return s;
    }
};

namespace detail {

inline Int dot(const LatticePoint& a, const LatticePoint& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline std::size_t rank_of_rows(const std::vector<LatticePoint>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    return hermite_normal_form(m).rank;
}

// All supporting normals spanned by (dim-1)-subsets of the rays; includes
// every facet normal of the cone.
inline std::vector<LatticePoint> supporting_normals(std::size_t dim,
                                                    const std::vector<LatticePoint>& rays) {
    std::set<LatticePoint> found;
    std::vector<std::size_t> idx(dim - 1);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t k) {
        if (k == dim - 1) {
            IntMatrix m(dim - 1, dim);
            for (std::size_t i = 0; i + 1 < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = rays[idx[i]][j];
            auto kernel = left_kernel_basis(m.transposed());
            if (kernel.size() != 1) return;
            LatticePoint v = primitive_vector(kernel[0]);
            bool nonneg = true, nonpos = true;
            for (const auto& r : rays) {
                Int d = dot(v, r);
                if (d > 0) nonpos = false;
                if (d < 0) nonneg = false;
            }
            if (nonneg == nonpos) return; // either zero map or both sides hit
            if (nonpos)
                for (auto& c : v) c = -c;
            found.insert(v);
            return;
        }
        for (std::size_t i = start; i + (dim - 1 - k) <= rays.size(); ++i) {
            idx[k] = i;
            rec(i + 1, k + 1);
        }
    };
    if (dim >= 2) rec(0, 0);
    return std::vector<LatticePoint>(found.begin(), found.end());
}

} // namespace detail

inline ToricGerm make_toric_germ(std::size_t dim, std::vector<LatticePoint> rays) {
    if (dim == 0) throw InvalidCone("cone dimension must be positive");
    if (rays.empty()) throw InvalidCone("cone needs at least one ray");
    for (auto& r : rays) {
        if (r.size() != dim) throw InvalidCone("ray arity mismatch");
        bool zero = true;
        for (const auto& c : r)
            if (c != 0) { zero = false; break; }
        if (zero) throw InvalidCone("zero ray");
        r = primitive_vector(std::move(r));
    }
    {
        std::set<LatticePoint> seen(rays.begin(), rays.end());
        if (seen.size() != rays.size()) throw InvalidCone("duplicate rays");
    }
    if (detail::rank_of_rows(rays, dim) != dim)
        throw InvalidCone("rays do not span the ambient space");
    if (dim > 4 && rays.size() > dim)
        throw UnsupportedDimension("non-simplicial cones supported up to dimension 4");

    ToricGerm g;
    g.dim = dim;
    g.rays = std::move(rays);
    if (dim == 1) {
        if (g.rays.size() != 1) throw InvalidCone("cone contains a line");
        g.facets = {g.rays[0]};
        return g;
    }
    g.facets = detail::supporting_normals(dim, g.rays);
    LatticePoint interior(dim, Int(0));
    for (const auto& f : g.facets)
        for (std::size_t j = 0; j < dim; ++j) interior[j] += f[j];
    for (const auto& r : g.rays)
        if (detail::dot(interior, r) <= 0) throw InvalidCone("cone is not strongly convex");
    for (const auto& r : g.rays) {
        std::vector<LatticePoint> vanishing;
        for (const auto& f : g.facets)
            if (detail::dot(f, r) == 0) vanishing.push_back(f);
        if (detail::rank_of_rows(vanishing, dim) != dim - 1)
            throw InvalidCone("ray is not extremal");
    }
    return g;
}

inline ToricPair make_toric_pair(ToricGerm germ, std::vector<Rat> coeffs) {
    if (coeffs.size() != germ.rays.size()) throw DomainError("one coefficient per ray required");
    return ToricPair{std::move(germ), std::move(coeffs)};
}

inline bool in_cone(const ToricGerm& g, const LatticePoint& x) {
    for (const auto& f : g.facets)
        if (detail::dot(f, x) < 0) return false;
    return true;
}

inline bool in_relint(const ToricGerm& g, const LatticePoint& x) {
    for (const auto& f : g.facets)
        if (detail::dot(f, x) <= 0) return false;
    return true;
}

// The unique linear function with prescribed ray values, when it exists.
inline PsiFunction psi_with_ray_values(const ToricGerm& g, const std::vector<Rat>& values) {
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    for (std::size_t i = 0; i < g.rays.size(); ++i) {
        std::vector<Rat> row;
        row.reserve(g.dim);
        for (std::size_t j = 0; j < g.dim; ++j) row.push_back(Rat(g.rays[i][j]));
        a.push_back(std::move(row));
        b.push_back(values[i]);
    }
    LinearSolution sol = solve_rational(std::move(a), std::move(b));
    if (sol.kind == SolveKind::Inconsistent)
        throw NotRCartier("prescribed ray values admit no linear extension");
    if (sol.kind == SolveKind::Underdetermined)
        throw InvalidCone("rays do not span the ambient space");
    return PsiFunction{std::move(sol.x)};
}

inline PsiFunction psi_from_pair(const ToricPair& pair) {
    std::vector<Rat> values;
    values.reserve(pair.coeffs.size());
    for (const auto& b : pair.coeffs) values.push_back(1 - b);
    return psi_with_ray_values(pair.germ, values);
}

inline PsiFunction psi_zero(const ToricGerm& g) {
    return psi_with_ray_values(g, std::vector<Rat>(g.rays.size(), Rat(1)));
}

namespace detail {

struct IntegerForm {
    std::vector<Int> num;
    Int den = 1;
};

inline IntegerForm integerize_covector(const std::vector<Rat>& c) {
    IntegerForm f;
    for (const auto& q : c) f.den = lcm(f.den, rat_den(q));
    f.num.reserve(c.size());
    for (const auto& q : c) f.num.push_back(rat_num(q) * (f.den / rat_den(q)));
    return f;
}

// Visits every lattice point of relint(sigma) with psi0 <= cap, in
// ascending lexicographic order. The region sits inside the box spanned
// by 0 and cap * (each ray), since psi0 is 1 on every primitive ray.
inline void for_each_region_point(const ToricGerm& g, const PsiFunction& psi0, const Int& cap,
                                  const std::function<void(const LatticePoint&)>& fn) {
    IntegerForm p0 = integerize_covector(psi0.covector);
    Int bound = cap * p0.den;
    std::vector<Int> lo(g.dim, Int(0)), hi(g.dim, Int(0));
    for (std::size_t j = 0; j < g.dim; ++j)
        for (const auto& r : g.rays) {
            Int v = cap * r[j];
            if (v < lo[j]) lo[j] = v;
            if (v > hi[j]) hi[j] = v;
        }

    bool fits = true;
    {
        const Int lim = Int(std::numeric_limits<std::int64_t>::max() / 4);
        for (std::size_t j = 0; j < g.dim; ++j) {
            Int m = max(abs(lo[j]), abs(hi[j]));
            for (const auto& f : g.facets)
                if (abs(f[j]) * m * Int(g.dim) > lim) fits = false;
            if (abs(p0.num[j]) * m * Int(g.dim) > lim) fits = false;
        }
        if (abs(bound) > lim) fits = false;
    }

    if (fits) {
        const std::size_t d = g.dim;
        std::vector<std::int64_t> llo(d), lhi(d);
        for (std::size_t j = 0; j < d; ++j) {
            llo[j] = lo[j].convert_to<std::int64_t>();
            lhi[j] = hi[j].convert_to<std::int64_t>();
        }
        std::vector<std::vector<std::int64_t>> fac;
        for (const auto& f : g.facets) {
            std::vector<std::int64_t> row(d);
            for (std::size_t j = 0; j < d; ++j) row[j] = f[j].convert_to<std::int64_t>();
            fac.push_back(std::move(row));
        }
        std::vector<std::int64_t> p0n(d);
        for (std::size_t j = 0; j < d; ++j) p0n[j] = p0.num[j].convert_to<std::int64_t>();
        const std::int64_t lbound = bound.convert_to<std::int64_t>();

        std::vector<std::int64_t> x(llo);
        LatticePoint xi(d);
        while (true) {
            std::int64_t s0 = 0;
            for (std::size_t j = 0; j < d; ++j) s0 += p0n[j] * x[j];
            if (s0 <= lbound) {
                bool inside = true;
                for (const auto& f : fac) {
                    std::int64_t s = 0;
                    for (std::size_t j = 0; j < d; ++j) s += f[j] * x[j];
                    if (s <= 0) { inside = false; break; }
                }
                if (inside) {
                    for (std::size_t j = 0; j < d; ++j) xi[j] = x[j];
                    fn(xi);
                }
            }
            std::size_t j = d;
            bool done = false;
            while (j > 0) {
                --j;
                if (x[j] < lhi[j]) { ++x[j]; break; }
                x[j] = llo[j];
                if (j == 0) done = true;
            }
            if (done) break;
        }
        return;
    }

    LatticePoint x(lo);
    while (true) {
        Int s0 = 0;
        for (std::size_t j = 0; j < g.dim; ++j) s0 += p0.num[j] * x[j];
        if (s0 <= bound && in_relint(g, x)) fn(x);
        std::size_t j = g.dim;
        bool done = false;
        while (j > 0) {
            --j;
            if (x[j] < hi[j]) { ++x[j]; break; }
            x[j] = lo[j];
            if (j == 0) done = true;
        }
        if (done) break;
    }
}

} // namespace detail

// Lattice points of relint(sigma) with psi0 value at most cap, lex order.
inline std::vector<LatticePoint> enumerate_low_psi0_points(const ToricGerm& g, const Int& cap) {
    PsiFunction psi0 = psi_zero(g);
    std::vector<LatticePoint> out;
    detail::for_each_region_point(g, psi0, cap, [&](const LatticePoint& x) { out.push_back(x); });
    return out;
}

struct Fold {
    std::vector<std::size_t> ray_indices;
    std::vector<Rat> lambda;        // e = sum lambda_j * ray
    std::vector<Rat> folded_lambda; // each in (0, 1]
    LatticePoint folded_point;
};

// Writes e as a strictly positive combination of an independent ray
// subset (first valid subset in (size, lex) order), then folds every
// coefficient into (0,1] by subtracting integer multiples of the rays.
inline Fold caratheodory_decompose(const ToricGerm& g, const LatticePoint& e) {
    if (e.size() != g.dim) throw DomainError("point arity mismatch");
    bool zero = true;
    for (const auto& c : e)
        if (c != 0) { zero = false; break; }
    if (zero || !in_cone(g, e)) throw NotInCone("point is not in the cone (or is zero)");

    const std::size_t nrays = g.rays.size();
    std::vector<std::size_t> subset;
    Fold fold;
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t want) {
        if (subset.size() == want) {
            std::vector<LatticePoint> rows;
            for (auto i : subset) rows.push_back(g.rays[i]);
            if (detail::rank_of_rows(rows, g.dim) != want) return false;
            std::vector<std::vector<Rat>> a(g.dim, std::vector<Rat>(want));
            std::vector<Rat> b(g.dim);
            for (std::size_t row = 0; row < g.dim; ++row) {
                for (std::size_t col = 0; col < want; ++col)
                    a[row][col] = Rat(g.rays[subset[col]][row]);
                b[row] = Rat(e[row]);
            }
            LinearSolution sol = solve_rational(std::move(a), std::move(b));
            if (sol.kind != SolveKind::Solution) return false;
            for (const auto& l : sol.x)
                if (l <= 0) return false;
            fold.ray_indices = subset;
            fold.lambda = sol.x;
            return true;
        }
        for (std::size_t i = start; i + (want - subset.size()) <= nrays; ++i) {
            subset.push_back(i);
            if (rec(i + 1, want)) return true;
            subset.pop_back();
        }
        return false;
    };
    bool ok = false;
    for (std::size_t s = 1; s <= g.dim && !ok; ++s) {
        subset.clear();
        ok = rec(0, s);
    }
    if (!ok) throw NotInCone("no positive independent decomposition exists");

    fold.folded_lambda.reserve(fold.lambda.size());
    fold.folded_point.assign(g.dim, Int(0));
    for (std::size_t j = 0; j < fold.lambda.size(); ++j) {
        Rat l = fold.lambda[j];
        Rat folded = l + 1 - Rat(rat_ceil(l));
        fold.folded_lambda.push_back(folded);
    }
    // folded point stays integral: it differs from e by integer multiples
    // of the chosen rays
    for (std::size_t k = 0; k < g.dim; ++k) fold.folded_point[k] = e[k];
    for (std::size_t j = 0; j < fold.lambda.size(); ++j) {
        Int shift = rat_ceil(fold.lambda[j]) - 1;
        for (std::size_t k = 0; k < g.dim; ++k)
            fold.folded_point[k] -= shift * g.rays[fold.ray_indices[j]][k];
    }
    return fold;
}

struct MldResult {
    bool neg_infinity = false;
    Rat value = 0;
    LatticePoint witness;
    Fold fold;
};

// mld = min of psi over the lattice points in the relative interior; for
// lc pairs a minimizer exists with psi0 <= dim, so the enumeration there
// is exhaustive. Lexicographically least witness.
inline MldResult toric_mld(const ToricPair& pair) {
    const ToricGerm& g = pair.germ;
    PsiFunction psi = psi_from_pair(pair);
    PsiFunction psi0 = psi_zero(g);
    MldResult res;
    for (const auto& b : pair.coeffs)
        if (b > 1) {
            res.neg_infinity = true;
            return res;
        }

    detail::IntegerForm pb = detail::integerize_covector(psi.covector);
    std::optional<Int> best;
    LatticePoint witness;
    detail::for_each_region_point(g, psi0, Int(g.dim), [&](const LatticePoint& x) {
        Int v = 0;
        for (std::size_t j = 0; j < g.dim; ++j) v += pb.num[j] * x[j];
        if (!best || v < *best) {
            best = v;
            witness = x;
        }
    });
    if (!best) throw DomainError("internal: enumeration region is empty");
    res.value = make_rat(*best, pb.den);
    res.witness = witness;
    res.fold = caratheodory_decompose(g, witness);
    return res;
}

struct AlctResult {
    bool plus_infinity = false;
    Rat value = 0;
};

// Largest t with (B + t*D) log canonical of level a: the minimum of the
// ray constraints (coefficients at most 1) and the finitely many point
// constraints psi_B - t*psi_D >= a over the psi0 <= dim region, all of
// which stay valid across the whole lc range of t.
inline AlctResult toric_alct(const ToricPair& pair, const std::vector<Rat>& dcoeffs, const Rat& a) {
    const ToricGerm& g = pair.germ;
    if (dcoeffs.size() != g.rays.size()) throw DomainError("one divisor coefficient per ray required");
    bool any_positive = false;
    for (const auto& d : dcoeffs) {
        if (d < 0) throw DomainError("divisor coefficients must be non-negative");
        if (d > 0) any_positive = true;
    }
    if (!any_positive) throw DomainError("divisor coefficients must not all vanish");
    if (a < 0) throw DomainError("threshold level must be non-negative");

    MldResult at_zero = toric_mld(pair);
    if (at_zero.neg_infinity || at_zero.value < a)
        throw BelowThresholdAtZero("pair already below the requested level at t = 0");

    std::vector<Rat> dvals(dcoeffs);
    PsiFunction psi_d = psi_with_ray_values(g, dvals);
    PsiFunction psi_b = psi_from_pair(pair);
    PsiFunction psi0 = psi_zero(g);

    std::optional<Rat> best;
    for (std::size_t i = 0; i < g.rays.size(); ++i) {
        if (dcoeffs[i] == 0) continue;
        Rat t = (1 - pair.coeffs[i]) / dcoeffs[i];
        if (!best || t < *best) best = t;
    }
    detail::IntegerForm pb = detail::integerize_covector(psi_b.covector);
    detail::IntegerForm pd = detail::integerize_covector(psi_d.covector);
    detail::for_each_region_point(g, psi0, Int(g.dim), [&](const LatticePoint& x) {
        Int dnum = 0, bnum = 0;
        for (std::size_t j = 0; j < g.dim; ++j) {
            dnum += pd.num[j] * x[j];
            bnum += pb.num[j] * x[j];
        }
        if (dnum <= 0) return; // psi_D >= 0 on the cone; zero never binds
        Rat t = (make_rat(bnum, pb.den) - a) / make_rat(dnum, pd.den);
        if (!best || t < *best) best = t;
    });
    if (!best) return AlctResult{true, 0};
    return AlctResult{false, *best};
}

struct QuotientToricGerm {
    ToricGerm germ;
    Int n = 1;
    IntMatrix basis; // rows generate n*N inside Z^d

    // image of (1/n)(w_1..w_d) in the rebased lattice
    LatticePoint to_lattice(const std::vector<Int>& numerators) const {
        std::vector<std::vector<Rat>> a(germ.dim, std::vector<Rat>(germ.dim));
        std::vector<Rat> b(germ.dim);
        for (std::size_t row = 0; row < germ.dim; ++row) {
            for (std::size_t col = 0; col < germ.dim; ++col)
                a[row][col] = Rat(basis.at(col, row));
            b[row] = Rat(numerators[row]);
        }
        LinearSolution sol = solve_rational(std::move(a), std::move(b));
        if (sol.kind != SolveKind::Solution)
            throw DomainError("quotient basis is degenerate");
        LatticePoint out(germ.dim);
        for (std::size_t j = 0; j < germ.dim; ++j) {
            if (rat_den(sol.x[j]) != 1)
                throw NotAdmissible("numerators do not lie in the quotient lattice");
            out[j] = rat_num(sol.x[j]);
        }
        return out;
    }

    // numerators of n * (rebased point) back in the original coordinates
    std::vector<Int> from_lattice(const LatticePoint& y) const {
        std::vector<Int> out(germ.dim, Int(0));
        for (std::size_t i = 0; i < germ.dim; ++i)
            for (std::size_t j = 0; j < germ.dim; ++j) out[j] += y[i] * basis.at(i, j);
        return out;
    }
};

// Rebase N = Z^d + Z*(1/n)(a_1..a_d) to Z^d and push the positive orthant
// through; the result is the toric model of the cyclic quotient germ.
inline QuotientToricGerm quotient_germ_to_toric(const Int& n, const std::vector<Int>& chars) {
    if (n < 1) throw DomainError("quotient order must be positive");
    const std::size_t d = chars.size();
    if (d == 0) throw DomainError("empty character vector");
    IntMatrix stacked(d + 1, d);
    for (std::size_t i = 0; i < d; ++i) stacked.at(i, i) = n;
    for (std::size_t j = 0; j < d; ++j) stacked.at(d, j) = mod_floor(chars[j], n);
    HnfResult h = hermite_normal_form(stacked);
    if (h.rank != d) throw DomainError("quotient lattice is degenerate");
    QuotientToricGerm q;
    q.n = n;
    q.basis = IntMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) q.basis.at(i, j) = h.H.at(i, j);

    std::vector<LatticePoint> rays;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Int> unit(d, Int(0));
        unit[i] = n;
        QuotientToricGerm tmp;
        tmp.n = n;
        tmp.basis = q.basis;
        tmp.germ.dim = d;
        rays.push_back(primitive_vector(tmp.to_lattice(unit)));
    }
    q.germ = make_toric_germ(d, std::move(rays));
    return q;
}

struct Reduction {
    std::size_t face_dim = 0;
    std::size_t codim = 0;
    std::optional<ToricGerm> reduced;
    std::vector<std::size_t> kept_rays; // face ray indices, ascending
    IntMatrix basis;                    // rows: basis of the face's saturated sublattice
};

// Splits off the torus factor transverse to a face: the germ of the
// reduced cone inside the face's saturated lattice computes the mld at
// the face's orbit point.
inline Reduction reduce_orbit_point(const ToricGerm& g, const std::vector<std::size_t>& face) {
    std::set<std::size_t> sel(face.begin(), face.end());
    for (auto i : sel)
        if (i >= g.rays.size()) throw NotAFace("ray index out of range");

    std::vector<LatticePoint> killers;
    for (const auto& f : g.facets) {
        bool vanishes = true;
        for (auto i : sel)
            if (detail::dot(f, g.rays[i]) != 0) { vanishes = false; break; }
        if (vanishes) killers.push_back(f);
    }
    for (std::size_t j = 0; j < g.rays.size(); ++j) {
        if (sel.count(j)) continue;
        bool in_face = true;
        for (const auto& f : killers)
            if (detail::dot(f, g.rays[j]) != 0) { in_face = false; break; }
        if (in_face) throw NotAFace("ray subset is not the full ray set of a face");
    }

    Reduction red;
    red.kept_rays.assign(sel.begin(), sel.end());
    if (sel.size() == g.rays.size()) {
        red.face_dim = g.dim;
        red.codim = 0;
        red.reduced = g;
        red.basis = IntMatrix::identity(g.dim);
        return red;
    }
    if (sel.empty()) {
        red.face_dim = 0;
        red.codim = g.dim;
        return red;
    }

    std::vector<LatticePoint> face_rays;
    for (auto i : red.kept_rays) face_rays.push_back(g.rays[i]);
    IntMatrix m(face_rays.size(), g.dim);
    for (std::size_t i = 0; i < face_rays.size(); ++i)
        for (std::size_t j = 0; j < g.dim; ++j) m.at(i, j) = face_rays[i][j];
    auto perp = left_kernel_basis(m.transposed()); // right kernel of m: normal directions
    IntMatrix z(perp.size(), g.dim);
    for (std::size_t i = 0; i < perp.size(); ++i)
        for (std::size_t j = 0; j < g.dim; ++j) z.at(i, j) = perp[i][j];
    auto span_basis = left_kernel_basis(z.transposed()); // right kernel of z: the face span
    const std::size_t c = span_basis.size();

    red.face_dim = c;
    red.codim = g.dim - c;
    red.basis = IntMatrix(c, g.dim);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < g.dim; ++j) red.basis.at(i, j) = span_basis[i][j];

    std::vector<LatticePoint> reduced_rays;
    for (const auto& r : face_rays) {
        std::vector<std::vector<Rat>> a(g.dim, std::vector<Rat>(c));
        std::vector<Rat> b(g.dim);
        for (std::size_t row = 0; row < g.dim; ++row) {
            for (std::size_t col = 0; col < c; ++col) a[row][col] = Rat(red.basis.at(col, row));
            b[row] = Rat(r[row]);
        }
        LinearSolution sol = solve_rational(std::move(a), std::move(b));
        if (sol.kind != SolveKind::Solution)
            throw NotAFace("face ray outside the face span");
        LatticePoint y(c);
        for (std::size_t j = 0; j < c; ++j) {
            if (rat_den(sol.x[j]) != 1) throw NotAFace("face lattice is not saturated");
            y[j] = rat_num(sol.x[j]);
        }
        reduced_rays.push_back(std::move(y));
    }
    red.reduced = make_toric_germ(c, std::move(reduced_rays));
    return red;
}

} // namespace mldkit
