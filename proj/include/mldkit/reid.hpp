#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mldkit/errors.hpp"
#include "mldkit/rational.hpp"

namespace mldkit {

// Fictitious cyclic quotient point of type 1/r(1,-1,b) carrying the class
// d of the divisor near the point and the normalized weight v <= r/2.
struct FictitiousPoint {
    Int r = 1;
    Int b = 0;
    Int d_class = 0;
    Int v = 0;
};

struct BasketConfig {
    Int n = 1;
    Int a = 0;
    Int b_amb = 0;
    std::array<FictitiousPoint, 2> points;
};

struct IntersectionData {
    Rat E3 = 0;
    Rat E2K = 0;
    Rat Ec2 = 0;
};

inline FictitiousPoint make_fictitious_point(Int r, Int b, Int d_class, Int v) {
    if (r < 1) throw DomainError("point index must be positive");
    if (gcd(b, r) != 1) throw NotCoprime("point class b must be coprime to r");
    if (v < 0 || 2 * v > r) throw DomainError("basket weight must lie in [0, r/2]");
    return FictitiousPoint{std::move(r), std::move(b), std::move(d_class), std::move(v)};
}

inline BasketConfig make_basket_config(Int n, Int a, Int b_amb, FictitiousPoint q1,
                                       FictitiousPoint q2) {
    if (n < 1) throw DomainError("ambient index must be positive");
    if (gcd(b_amb, n) != 1) throw NotCoprime("ambient character must be coprime to n");
    return BasketConfig{std::move(n), std::move(a), std::move(b_amb), {std::move(q1), std::move(q2)}};
}

inline Int residue(const Int& m, const Int& n) {
    if (n < 1) throw DomainError("residue modulus must be positive");
    return mod_floor(m, n);
}

// Sum with reversed-bounds convention: empty when to = from-1, and
// minus the sum over the gap when the bounds cross further.
template <typename F>
Rat gen_sum(F&& term, const Int& from, const Int& to) {
    if (from <= to) {
        Rat s = 0;
        for (Int j = from; j <= to; ++j) s += term(j);
        return s;
    }
    if (to == from - 1) return Rat(0);
    Rat s = 0;
    for (Int j = to + 1; j <= from - 1; ++j) s += term(j);
    return -s;
}

inline Rat B_Q(const Int& r, const Int& i) {
    if (r < 1) throw DomainError("point index must be positive");
    Int res = residue(i, r);
    return make_rat(res * (r - res), 2 * r);
}

namespace detail {

inline std::int64_t residue64(std::int64_t m, std::int64_t n) {
    std::int64_t r = m % n;
    return r < 0 ? r + n : r;
}

// numerator over 2r of sum_{j=lo..hi} B(j*b) - B(j*b - v), lo <= hi
inline Int bdiff_numerator(const Int& r, const Int& b, const Int& v, const Int& lo,
                           const Int& hi) {
    if (lo > hi) return Int(0);
    const Int count = hi - lo + 1;
    const Int safety = Int(std::numeric_limits<std::int64_t>::max() / 4);
    bool fits = r < (Int(1) << 31) && abs(b) < (Int(1) << 31) && abs(v) < (Int(1) << 31) &&
                max(abs(lo), abs(hi)) * abs(b) + abs(v) < safety && count * r * r < safety;
    if (fits) {
        const std::int64_t rr = r.convert_to<std::int64_t>();
        const std::int64_t bb = b.convert_to<std::int64_t>();
        const std::int64_t vv = v.convert_to<std::int64_t>();
        const std::int64_t l = lo.convert_to<std::int64_t>();
        const std::int64_t h = hi.convert_to<std::int64_t>();
        std::int64_t acc = 0;
        for (std::int64_t j = l; j <= h; ++j) {
            std::int64_t p = residue64(j * bb, rr);
            std::int64_t q = residue64(j * bb - vv, rr);
            acc += p * (rr - p) - q * (rr - q);
        }
        return Int(acc);
    }
    Int acc = 0;
    for (Int j = lo; j <= hi; ++j) {
        Int p = mod_floor(j * b, r);
        Int q = mod_floor(j * b - v, r);
        acc += p * (r - p) - q * (r - q);
    }
    return acc;
}

inline Int b_numerator(const Int& r, const Int& b, const Int& lo, const Int& hi) {
    if (lo > hi) return Int(0);
    const Int count = hi - lo + 1;
    const Int safety = Int(std::numeric_limits<std::int64_t>::max() / 4);
    bool fits = r < (Int(1) << 31) && abs(b) < (Int(1) << 31) &&
                max(abs(lo), abs(hi)) * abs(b) < safety && count * r * r < safety;
    if (fits) {
        const std::int64_t rr = r.convert_to<std::int64_t>();
        const std::int64_t bb = b.convert_to<std::int64_t>();
        const std::int64_t l = lo.convert_to<std::int64_t>();
        const std::int64_t h = hi.convert_to<std::int64_t>();
        std::int64_t acc = 0;
        for (std::int64_t j = l; j <= h; ++j) {
            std::int64_t p = residue64(j * bb, rr);
            acc += p * (rr - p);
        }
        return Int(acc);
    }
    Int acc = 0;
    for (Int j = lo; j <= hi; ++j) {
        Int p = mod_floor(j * b, r);
        acc += p * (r - p);
    }
    return acc;
}

// gen-sum of B(r, j*b) numerators for j in [from, to] with crossing bounds
inline Rat b_gen_sum(const Int& r, const Int& b, const Int& from, const Int& to) {
    if (from <= to) return make_rat(b_numerator(r, b, from, to), 2 * r);
    if (to == from - 1) return Rat(0);
    return -make_rat(b_numerator(r, b, to + 1, from - 1), 2 * r);
}

inline std::optional<Int> mod_inverse(const Int& a, const Int& n) {
    Int old_r = mod_floor(a, n), rr = n;
    Int old_s = 1, s = 0;
    while (rr != 0) {
        Int q = old_r / rr;
        Int tmp = old_r - q * rr;
        old_r = rr;
        rr = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) return std::nullopt;
    return mod_floor(old_s, n);
}

} // namespace detail

inline Rat A_Q(const Int& r, const Int& b, const Int& i) {
    if (r < 1) throw DomainError("point index must be positive");
    if (gcd(b, r) != 1) throw NotCoprime("class b must be coprime to r");
    Rat lead = make_rat(-i * (r * r - 1), 12 * r);
    return lead + detail::b_gen_sum(r, b, Int(1), i - 1);
}

inline Rat c_point(const Int& r, const Int& b, const Int& i) {
    return A_Q(r, b, i);
}

inline Rat delta_difference(const BasketConfig& config, const Int& i) {
    Rat total = 0;
    for (const auto& q : config.points) {
        Int from = i * q.d_class;
        Int to = (i + 1) * q.d_class - 1;
        if (from <= to)
            total += make_rat(detail::bdiff_numerator(q.r, q.b, q.v, from, to), 2 * q.r);
        else if (to != from - 1)
            total -= make_rat(detail::bdiff_numerator(q.r, q.b, q.v, to + 1, from - 1), 2 * q.r);
    }
    return total;
}

struct DeltaReport {
    Int r = 1;
    Int imax = 0;
    std::vector<Int> violations;

    bool pass() const { return violations.empty(); }
};

// Checks delta_r(i+1) - delta_r(i) = delta_difference(config, i) on
// [0, imax], where delta_r is the indicator of divisibility by r.
inline DeltaReport verify_delta_identity(const BasketConfig& config, const Int& r,
                                         const Int& imax) {
    if (r < 1) throw DomainError("index must be positive");
    if (imax < 1) throw DomainError("imax must be positive");
    DeltaReport report;
    report.r = r;
    report.imax = imax;
    auto delta = [&](const Int& i) { return mod_floor(i, r) == 0 ? Rat(1) : Rat(0); };
    for (Int i = 0; i <= imax; ++i) {
        if (delta(i + 1) - delta(i) != delta_difference(config, i)) report.violations.push_back(i);
    }
    return report;
}

inline Int index_from_basket(const Int& r1, const Int& d1, const Int& r2, const Int& d2) {
    if (r1 < 1 || d1 < 1 || r2 < 1 || d2 < 1) throw DomainError("all basket entries must be positive");
    return lcm(r1 / gcd(r1, d1), r2 / gcd(r2, d2));
}

inline bool check_divisibility_conclusion(const BasketConfig& config, const Int& r) {
    if (r < 1) throw DomainError("index must be positive");
    if (mod_floor(config.n, r) != 0)
        throw SideConditionViolated("r must divide the ambient index n");
    Int rsum = config.points[0].r + config.points[1].r;
    if (mod_floor(rsum, config.n) != 0)
        throw SideConditionViolated("n must divide r1 + r2");
    return mod_floor(gcd(config.points[0].r, config.points[1].r), r) == 0;
}

struct FamilyReport {
    Int rparam = 2;
    BasketConfig config;
    std::vector<std::pair<std::string, bool>> conditions;
    bool all_pass = true;
};

// One-parameter family of basket configurations satisfying every side
// condition of the divisibility statement, for any rparam >= 2.
inline FamilyReport remark_family(const Int& rparam) {
    if (rparam < 2) throw DomainError("family parameter must be at least 2");
    const Int& r = rparam;
    Int n = r * (4 * r * r - 2 * r - 1);
    Int a = r;
    Int b = 4 * r * r + 2 * r - 1;
    Int r1 = (2 * r - 1) * (2 * r - 1) * r * r;
    Int b1 = 4 * r * r * r - r + 1;
    Int r2 = 2 * r * r * (r - 1);
    Int d2 = 2 * r * (r - 1);
    FamilyReport rep;
    rep.rparam = rparam;
    rep.config = make_basket_config(n, a, b, make_fictitious_point(r1, b1, r1, Int(1)),
                                    make_fictitious_point(r2, 2 * r * r - 1, d2, Int(1)));
    auto add = [&](std::string name, bool pass) {
        rep.conditions.emplace_back(std::move(name), pass);
        rep.all_pass = rep.all_pass && pass;
    };
    add("r divides n", mod_floor(n, r) == 0);
    add("gcd(b, n) = 1", gcd(b, n) == 1);
    Int num = a - b * r1;
    add("n divides a - b*r1", mod_floor(num, n) == 0);
    add("a*n divides r1 + r2", mod_floor(r1 + r2, a * n) == 0);
    add("gcd((a - b*r1)/n, r1) = 1", mod_floor(num, n) == 0 && gcd(num / n, r1) == 1);
    return rep;
}

struct ChiDifference {
    Rat value = 0;
    std::array<int, 2> sign_branch{1, 1};
    std::array<Int, 2> f{Int(0), Int(0)};
};

// Euler-characteristic difference from caller-supplied intersection
// numbers plus the basket correction; f_Q is recovered from v_Q via
// f*b = +v (mod r), falling back to the -v branch, and the branch used
// is reported alongside the value.
inline ChiDifference chi_difference(const BasketConfig& config, const IntersectionData& data,
                                    const Int& i, const Int& m) {
    if (m < 1) throw DomainError("multiple m must be positive");
    ChiDifference out;
    out.value = Rat(1, 6) * data.E3 + Rat(1, 4) * data.E2K + Rat(1, 12) * data.Ec2;
    for (std::size_t k = 0; k < 2; ++k) {
        const auto& q = config.points[k];
        if (q.r == 1) {
            out.f[k] = 0;
            continue;
        }
        auto binv = detail::mod_inverse(q.b, q.r);
        if (!binv) throw AmbiguousF("no divisor class f reproduces the basket weight");
        Int fplus = mod_floor(*binv * q.v, q.r);
        Int fminus = mod_floor(-(*binv) * q.v, q.r);
        if (fplus >= 0 && fplus < q.r) {
            out.f[k] = fplus;
            out.sign_branch[k] = 1;
        } else if (fminus >= 0 && fminus < q.r) {
            out.f[k] = fminus;
            out.sign_branch[k] = -1;
        } else {
            throw AmbiguousF("no divisor class f reproduces the basket weight");
        }
        Int arg = i * q.d_class;
        out.value += A_Q(q.r, q.b, arg) - A_Q(q.r, q.b, arg - out.f[k]);
    }
    return out;
}

} // namespace mldkit
