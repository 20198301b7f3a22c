#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "mldkit/rational.hpp"

namespace mldkit {

using LatticePoint = std::vector<Int>;

struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Int(0)) {}

    Int& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix c(a.rows, b.cols);
        for (std::size_t i = 0; i < a.rows; ++i)
            for (std::size_t k = 0; k < a.cols; ++k) {
                if (a.at(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols; ++j)
                    c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return c;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
    }
};

inline LatticePoint mat_vec(const IntMatrix& m, const LatticePoint& v) {
    LatticePoint out(m.rows, Int(0));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

inline LatticePoint vec_mat(const LatticePoint& v, const IntMatrix& m) {
    LatticePoint out(m.cols, Int(0));
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols; ++j) out[j] += v[i] * m.at(i, j);
    }
    return out;
}

struct HnfResult {
    IntMatrix H; // row Hermite normal form of the input
    IntMatrix U; // unimodular, U * M = H
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

// Row-style HNF: pivots positive, entries above a pivot reduced into
// [0, pivot), rows below the rank all zero.
inline HnfResult hermite_normal_form(const IntMatrix& m) {
    HnfResult res;
    res.H = m;
    res.U = IntMatrix::identity(m.rows);
    IntMatrix& h = res.H;
    IntMatrix& u = res.U;

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < h.cols; ++j) std::swap(h.at(a, j), h.at(b, j));
        for (std::size_t j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& factor) {
        if (factor == 0) return;
        for (std::size_t j = 0; j < h.cols; ++j) h.at(dst, j) += factor * h.at(src, j);
        for (std::size_t j = 0; j < u.cols; ++j) u.at(dst, j) += factor * u.at(src, j);
    };
    auto negate_row = [&](std::size_t r) {
        for (std::size_t j = 0; j < h.cols; ++j) h.at(r, j) = -h.at(r, j);
        for (std::size_t j = 0; j < u.cols; ++j) u.at(r, j) = -u.at(r, j);
    };

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < h.cols && pivot_row < h.rows; ++col) {
        while (true) {
            std::size_t best = h.rows;
            for (std::size_t i = pivot_row; i < h.rows; ++i) {
                if (h.at(i, col) == 0) continue;
                if (best == h.rows ||
                    abs(h.at(i, col)) < abs(h.at(best, col)))
                    best = i;
            }
            if (best == h.rows) break;
            swap_rows(pivot_row, best);
            bool clean = true;
            for (std::size_t i = pivot_row + 1; i < h.rows; ++i) {
                if (h.at(i, col) == 0) continue;
                Int q = floor_div(h.at(i, col), h.at(pivot_row, col));
                add_row(i, pivot_row, -q);
                if (h.at(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(pivot_row, col) == 0) continue;
        if (h.at(pivot_row, col) < 0) negate_row(pivot_row);
        for (std::size_t i = 0; i < pivot_row; ++i) {
            Int q = floor_div(h.at(i, col), h.at(pivot_row, col));
            add_row(i, pivot_row, -q);
        }
        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

// Basis of { y integer : M^T y = 0 } when rows of kernel... more precisely:
// returns a basis of the left kernel { y : y * M = 0 } of M.
inline std::vector<LatticePoint> left_kernel_basis(const IntMatrix& m) {
    HnfResult h = hermite_normal_form(m);
    std::vector<LatticePoint> basis;
    for (std::size_t i = h.rank; i < m.rows; ++i) {
        LatticePoint row(m.rows);
        for (std::size_t j = 0; j < m.rows; ++j) row[j] = h.U.at(i, j);
        basis.push_back(std::move(row));
    }
    return basis;
}

enum class SolveKind { Solution, Inconsistent, Underdetermined };

struct LinearSolution {
    SolveKind kind = SolveKind::Inconsistent;
    std::vector<Rat> x; // populated only when kind == Solution
};

// Exact Gaussian elimination on A x = b over the rationals.
inline LinearSolution solve_rational(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t pivot = m;
        for (std::size_t i = row; i < m; ++i)
            if (a[i][col] != 0) { pivot = i; break; }
        if (pivot == m) continue;
        std::swap(a[row], a[pivot]);
        std::swap(b[row], b[pivot]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[row][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (b[i] != 0) return {SolveKind::Inconsistent, {}};
    if (row < n) return {SolveKind::Underdetermined, {}};
    LinearSolution sol;
    sol.kind = SolveKind::Solution;
    sol.x.assign(n, Rat(0));
    for (std::size_t i = 0; i < row; ++i)
        sol.x[pivot_col_of_row[i]] = b[i] / a[i][pivot_col_of_row[i]];
    return sol;
}

// One linear constraint <a, x> <= b, or strict when `strict` is set.
struct Constraint {
    std::vector<Rat> a;
    Rat b = 0;
    bool strict = false;
};

namespace detail {

struct IntConstraint {
    std::vector<Int> a;
    Int b = 0;
};

// Over integer points, <a,x> < b with integral data is <a,x> <= b-1;
// with rational b it is <a,x> <= ceil(b)-1, and <= is <a,x> <= floor(b).
inline std::vector<IntConstraint> integerize(std::size_t dim, const std::vector<Constraint>& cs) {
    std::vector<IntConstraint> out;
    for (const auto& c : cs) {
        if (c.a.size() != dim) throw DomainError("constraint arity mismatch");
        Int l = 1;
        for (const auto& q : c.a) l = lcm(l, rat_den(q));
        IntConstraint ic;
        ic.a.reserve(dim);
        for (const auto& q : c.a) ic.a.push_back(rat_num(q) * (l / rat_den(q)));
        Rat rb = c.b * Rat(l);
        ic.b = c.strict ? rat_ceil(rb) - 1 : rat_floor(rb);
        out.push_back(std::move(ic));
    }
    return out;
}

// Dividing a row by the gcd of its coefficients and flooring the bound
// keeps the integer solution set and the recession cone unchanged, which
// is all the enumeration relies on.
inline std::vector<IntConstraint> normalize_rows(const std::vector<IntConstraint>& rows) {
    std::map<std::vector<Int>, Int> best;
    for (const auto& r : rows) {
        Int g = 0;
        for (const auto& c : r.a) g = gcd(g, c);
        std::vector<Int> a = r.a;
        Int b = r.b;
        if (g > 1) {
            for (auto& c : a) c /= g;
            b = floor_div(b, g);
        }
        auto it = best.find(a);
        if (it == best.end()) best.emplace(std::move(a), b);
        else if (b < it->second) it->second = b;
    }
    std::vector<IntConstraint> out;
    out.reserve(best.size());
    for (auto& [a, b] : best) out.push_back({a, b});
    return out;
}

// Fourier-Motzkin elimination of variable k. Rows keep exact Int data;
// combining a positive-coefficient row with a negative one cancels x_k.
inline std::vector<IntConstraint> fm_eliminate(const std::vector<IntConstraint>& rows, std::size_t k) {
    std::vector<const IntConstraint*> pos, neg, zero;
    for (const auto& r : rows) {
        if (r.a[k] > 0) pos.push_back(&r);
        else if (r.a[k] < 0) neg.push_back(&r);
        else zero.push_back(&r);
    }
    std::vector<IntConstraint> out;
    for (const auto* z : zero) out.push_back(*z);
    for (const auto* p : pos)
        for (const auto* q : neg) {
            Int cp = p->a[k];
            Int cq = -q->a[k];
            Int g = gcd(cp, cq);
            Int fp = cq / g, fq = cp / g;
            IntConstraint c;
            c.a.resize(p->a.size());
            for (std::size_t j = 0; j < c.a.size(); ++j)
                c.a[j] = fp * p->a[j] + fq * q->a[j];
            c.b = fp * p->b + fq * q->b;
            out.push_back(std::move(c));
        }
    return normalize_rows(out);
}

} // namespace detail

// All integer points satisfying every constraint, in ascending
// lexicographic order. Throws UnboundedRegion when the real solution set
// is nonempty but unbounded; an empty region returns an empty list.
inline std::vector<LatticePoint> enumerate_lattice_points(std::size_t dim,
                                                          const std::vector<Constraint>& constraints) {
    auto rows = detail::normalize_rows(detail::integerize(dim, constraints));
    for (const auto& r : rows) {
        bool all_zero = true;
        for (const auto& c : r.a)
            if (c != 0) { all_zero = false; break; }
        if (all_zero && r.b < 0) return {};
    }

    std::vector<Int> lo(dim), hi(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        auto proj = rows;
        for (std::size_t k = 0; k < dim; ++k) {
            if (k == j) continue;
            proj = detail::fm_eliminate(proj, k);
        }
        bool has_lo = false, has_hi = false;
        Int best_lo = 0, best_hi = 0;
        for (const auto& r : proj) {
            const Int& c = r.a[j];
            if (c == 0) {
                if (r.b < 0) return {};
                continue;
            }
            if (c > 0) {
                Int bound = floor_div(r.b, c);
                if (!has_hi || bound < best_hi) { best_hi = bound; has_hi = true; }
            } else {
                Int bound = -floor_div(r.b, -c); // ceil(b/c) for c < 0
                if (!has_lo || bound > best_lo) { best_lo = bound; has_lo = true; }
            }
        }
        if (!has_lo || !has_hi)
            throw UnboundedRegion("coordinate " + std::to_string(j) + " is unbounded");
        if (best_lo > best_hi) return {};
        lo[j] = best_lo;
        hi[j] = best_hi;
    }

    std::vector<LatticePoint> out;
    LatticePoint x(lo);
    while (true) {
        bool ok = true;
        for (const auto& r : rows) {
            Int s = 0;
            for (std::size_t j = 0; j < dim; ++j) s += r.a[j] * x[j];
            if (s > r.b) { ok = false; break; }
        }
        if (ok) out.push_back(x);
        std::size_t j = dim;
        while (j > 0) {
            --j;
            if (x[j] < hi[j]) { ++x[j]; break; }
            x[j] = lo[j];
            if (j == 0) return out;
        }
        if (dim == 0) return out;
    }
}

inline bool lex_less(const LatticePoint& a, const LatticePoint& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline LatticePoint primitive_vector(LatticePoint v) {
    Int g = 0;
    for (const auto& c : v) g = gcd(g, c);
    if (g > 1)
        for (auto& c : v) c /= g;
    return v;
}

} // namespace mldkit
