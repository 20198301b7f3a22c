#pragma once

#include <algorithm>
#include <vector>

#include "mldkit/lattice.hpp"
#include "mldkit/poly.hpp"

namespace mldkit {

// Monomial staircase: the up-closed subset of Z^d_{>=0} generated by its
// vertex antichain. p lies in the polytope iff some vertex is <= p
// componentwise. The empty polytope represents the zero series.
struct NewtonPolytope {
    std::size_t dim = 0;
    std::vector<LatticePoint> vertices; // lex-sorted antichain

    friend bool operator==(const NewtonPolytope& a, const NewtonPolytope& b) {
        return a.dim == b.dim && a.vertices == b.vertices;
    }
};

inline bool dominates(const LatticePoint& p, const LatticePoint& v) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] < v[i]) return false;
    return true;
}

inline NewtonPolytope from_generators(std::size_t dim, const std::vector<LatticePoint>& points) {
    for (const auto& p : points) {
        if (p.size() != dim) throw DomainError("generator arity mismatch");
        for (const auto& c : p)
            if (c < 0) throw NegativeExponent("newton polytope generator with negative coordinate");
    }
    NewtonPolytope n;
    n.dim = dim;
    for (const auto& p : points) {
        bool dominated = false;
        for (const auto& q : points)
            if (q != p && (dominates(p, q) && !dominates(q, p))) { dominated = true; break; }
        // exact duplicates survive the scan above; dedupe via lex sort below
        if (!dominated) n.vertices.push_back(p);
    }
    std::sort(n.vertices.begin(), n.vertices.end(), lex_less);
    n.vertices.erase(std::unique(n.vertices.begin(), n.vertices.end()), n.vertices.end());
    return n;
}

inline bool contains(const NewtonPolytope& n, const LatticePoint& p) {
    if (p.size() != n.dim) throw DomainError("point arity mismatch");
    for (const auto& v : n.vertices)
        if (dominates(p, v)) return true;
    return false;
}

inline bool is_subpolytope(const NewtonPolytope& n1, const NewtonPolytope& n2) {
    if (n1.dim != n2.dim) throw DomainError("polytope dimension mismatch");
    for (const auto& v : n1.vertices)
        if (!contains(n2, v)) return false;
    return true;
}

inline NewtonPolytope union_of(const NewtonPolytope& n1, const NewtonPolytope& n2) {
    if (n1.dim != n2.dim) throw DomainError("polytope dimension mismatch");
    std::vector<LatticePoint> gens = n1.vertices;
    gens.insert(gens.end(), n2.vertices.begin(), n2.vertices.end());
    return from_generators(n1.dim, gens);
}

// Longest subsequence i_1 < i_2 < ... with N_{i_j} containing N_{i_{j+1}}
// for every j. Among all longest chains, returns the lexicographically
// least index list: forward DP on "longest chain starting here", then a
// greedy left-to-right reconstruction.
inline std::vector<std::size_t> longest_descending_chain(const std::vector<NewtonPolytope>& seq) {
    if (seq.empty()) throw DomainError("empty polytope sequence");
    const std::size_t n = seq.size();
    for (const auto& p : seq)
        if (p.dim != seq[0].dim) throw DomainError("polytope dimension mismatch");

    std::vector<std::vector<bool>> contains_next(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            contains_next[i][j] = is_subpolytope(seq[j], seq[i]);

    std::vector<std::size_t> best(n, 1);
    for (std::size_t ii = n; ii > 0; --ii) {
        std::size_t i = ii - 1;
        for (std::size_t j = i + 1; j < n; ++j)
            if (contains_next[i][j]) best[i] = std::max(best[i], 1 + best[j]);
    }

    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total = std::max(total, best[i]);

    std::vector<std::size_t> chain;
    std::size_t remaining = total;
    std::size_t prev = n;
    for (std::size_t i = 0; i < n && remaining > 0; ++i) {
        if (best[i] != remaining) continue;
        if (prev != n && !contains_next[prev][i]) continue;
        chain.push_back(i);
        prev = i;
        --remaining;
    }
    return chain;
}

inline NewtonPolytope newton_polytope_of(const Poly& h) {
    std::vector<LatticePoint> gens;
    gens.reserve(h.terms.size());
    for (const auto& [e, c] : h.terms) gens.push_back(e);
    return from_generators(h.dim, gens);
}

} // namespace mldkit
