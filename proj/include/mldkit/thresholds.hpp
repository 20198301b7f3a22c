#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "mldkit/errors.hpp"
#include "mldkit/rational.hpp"

namespace mldkit {

enum class CtKind { SmoothCT, CAcT };

struct CtValue {
    Rat value;
    Int r1;
    Int r2;
    Int dm; // the weighted blow-up denominator (m, or the product d*m)
};

namespace detail {

// Candidate canonical-threshold values (r1+r2)/q over 1 <= r1 <= k+1,
// r1 <= r2 <= cap, (k+1)*r2 <= q < (k+1)*(r1+r2). Deduplicated by value,
// keeping the first witness in (r1, r2, q) scan order; ascending.
inline std::vector<CtValue> ct_entries(const Int& k, const Int& cap) {
    if (k < 1) throw DomainError("k must be positive");
    if (cap < 1) throw DomainError("cap must be positive");
    std::map<Rat, CtValue> byval;
    for (Int r1 = 1; r1 <= k + 1; ++r1)
        for (Int r2 = r1; r2 <= cap; ++r2)
            for (Int q = (k + 1) * r2; q < (k + 1) * (r1 + r2); ++q) {
                Rat v = make_rat(r1 + r2, q);
                byval.emplace(v, CtValue{v, r1, r2, q});
            }
    std::vector<CtValue> out;
    out.reserve(byval.size());
    for (auto& kv : byval) out.push_back(kv.second);
    return out;
}

} // namespace detail

inline std::vector<CtValue> enumerate_ct_entries(CtKind kind, const Int& k, const Int& cap) {
    (void)kind; // both candidate sets sweep the same window, over m or over d*m
    return detail::ct_entries(k, cap);
}

inline std::vector<Rat> enumerate_smooth_ct_set(const Int& k, const Int& cap) {
    std::vector<Rat> out;
    for (const auto& e : detail::ct_entries(k, cap)) out.push_back(e.value);
    return out;
}

inline std::vector<Rat> enumerate_cA_ct_set(const Int& k, const Int& cap) {
    std::vector<Rat> out;
    for (const auto& e : detail::ct_entries(k, cap)) out.push_back(e.value);
    return out;
}

inline bool ik_contains(const Int& k, const Rat& t) {
    if (k < 1) throw DomainError("k must be positive");
    if (t <= 0) throw DomainError("threshold value must be positive");
    return rat_num(t) <= 16 * (k + 1) * (k + 1);
}

struct AccumulationReport {
    std::vector<Rat> values;  // sorted, unique
    std::vector<Rat> targets; // sorted ascending
    std::vector<Rat> eps_ladder;
    // counts[t][e]: values v with targets[t] + eps < v, and v < next target
    std::vector<std::vector<std::size_t>> counts;
    Rat min_value;
    Rat min_gap; // distance from min(values) to the least target
};

inline AccumulationReport accumulation_scan(std::vector<Rat> values, std::vector<Rat> targets,
                                            std::vector<Rat> eps_ladder) {
    if (values.empty()) throw DomainError("no values to scan");
    if (targets.empty()) throw DomainError("no scan targets");
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::sort(targets.begin(), targets.end());

    AccumulationReport rep;
    rep.values = std::move(values);
    rep.targets = std::move(targets);
    rep.eps_ladder = std::move(eps_ladder);
    rep.min_value = rep.values.front();
    Rat gap = rep.min_value - rep.targets.front();
    rep.min_gap = gap < 0 ? -gap : gap;
    for (std::size_t t = 0; t < rep.targets.size(); ++t) {
        std::vector<std::size_t> row;
        bool has_upper = t + 1 < rep.targets.size();
        for (const auto& eps : rep.eps_ladder) {
            Rat lo = rep.targets[t] + eps;
            std::size_t count = 0;
            for (const auto& v : rep.values)
                if (v > lo && (!has_upper || v < rep.targets[t + 1])) ++count;
            row.push_back(count);
        }
        rep.counts.push_back(std::move(row));
    }
    return rep;
}

struct ComparisonBounds {
    Int lo;
    Int hi;

    bool empty() const { return lo > hi; }
    bool contains(const Int& mprime) const { return lo <= mprime && mprime <= hi; }
};

inline ComparisonBounds comparison_bounds(const Rat& mu, const Int& m, const Rat& ratio) {
    if (mu < 0) throw DomainError("weight multiplier must be non-negative");
    if (m < 1) throw DomainError("m must be positive");
    if (ratio <= 0) throw DomainError("weight ratio must be positive");
    return ComparisonBounds{rat_ceil(mu * Rat(m)), rat_floor(ratio * Rat(m))};
}

struct RatioSubsequence {
    std::size_t pivot = 0;
    std::vector<std::size_t> indices;
};

namespace detail {

// Longest non-increasing subsequence of vals restricted to idx, keeping
// the lexicographically least index set among the longest ones.
inline std::vector<std::size_t> longest_nonincreasing(const std::vector<Rat>& vals,
                                                      const std::vector<std::size_t>& idx) {
    const std::size_t n = idx.size();
    if (n == 0) return {};
    std::vector<std::size_t> best(n, 1);
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = i + 1; j < n; ++j)
            if (vals[idx[j]] <= vals[idx[i]] && best[j] + 1 > best[i]) best[i] = best[j] + 1;
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total = std::max(total, best[i]);
    std::vector<std::size_t> out;
    std::size_t need = total;
    std::size_t prev = n; // sentinel: nothing chosen yet
    for (std::size_t i = 0; i < n && need > 0; ++i) {
        if (best[i] != need) continue;
        if (prev != n && vals[idx[i]] > vals[idx[prev]]) continue;
        out.push_back(idx[i]);
        prev = i;
        --need;
    }
    return out;
}

} // namespace detail

// Picks a pivot column k and a subsequence of positions along which every
// ratio sequence seq_j / seq_k is non-increasing, by repeatedly extracting
// the longest non-increasing subsequence of each ratio sequence.
inline RatioSubsequence monotone_ratio_subsequence(const std::vector<std::vector<Rat>>& seqs) {
    if (seqs.empty() || seqs.front().empty()) throw DegenerateInput("empty sequence list");
    const std::size_t len = seqs.front().size();
    for (const auto& s : seqs) {
        if (s.size() != len) throw DomainError("sequences must have equal length");
        for (const auto& v : s)
            if (v <= 0) throw DomainError("sequence entries must be positive");
    }
    RatioSubsequence result;
    for (std::size_t k = 0; k < seqs.size(); ++k) {
        std::vector<std::size_t> kept(len);
        for (std::size_t i = 0; i < len; ++i) kept[i] = i;
        for (std::size_t j = 0; j < seqs.size(); ++j) {
            if (j == k) continue;
            std::vector<Rat> ratio(len);
            for (std::size_t i = 0; i < len; ++i) ratio[i] = seqs[j][i] / seqs[k][i];
            kept = detail::longest_nonincreasing(ratio, kept);
        }
        if (kept.size() > result.indices.size()) { // ties keep the least pivot
            result.pivot = k;
            result.indices = kept;
        }
    }
    return result;
}

} // namespace mldkit
