#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <cstddef>
#include <string>

#include "mldkit/errors.hpp"

namespace mldkit {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int rat_num(const Rat& q) { return Int(boost::multiprecision::numerator(q)); }
inline Int rat_den(const Rat& q) { return Int(boost::multiprecision::denominator(q)); }

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw ParseError("zero denominator");
    return Rat(num, den); // GMP canonicalizes: lowest terms, positive denominator
}

// Floor division with remainder in [0, |b|): the sign convention every
// residue computation in this library relies on.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
    Int r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) r += b;
    return r;
}

inline Int rat_floor(const Rat& q) { return floor_div(rat_num(q), rat_den(q)); }

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

inline std::string rat_to_string(const Rat& q) {
    if (rat_den(q) == 1) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

inline Int parse_int(const std::string& text) {
    std::size_t i = 0, n = text.size();
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = n;
    while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
    if (i == j) throw ParseError("empty integer");
    std::string body = text.substr(i, j - i);
    std::size_t k = (body[0] == '+' || body[0] == '-') ? 1 : 0;
    if (k == body.size()) throw ParseError("bad integer '" + text + "'");
    for (; k < body.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(body[k])))
            throw ParseError("bad integer '" + text + "'");
    return Int(body);
}

// Accepts "p/q" or "p"; rejects zero denominators ("1/0") and any other
// malformed text.
inline Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    return make_rat(num, den);
}

// Rational extended with a single +infinity, the weight of the zero
// polynomial. No -infinity and no arithmetic that could produce inf - inf.
struct ExtRat {
    bool infinite = false;
    Rat value = 0;

    static ExtRat inf() { return ExtRat{true, 0}; }
    static ExtRat of(const Rat& v) { return ExtRat{false, v}; }

    bool is_finite() const { return !infinite; }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.infinite || b.infinite) return a.infinite == b.infinite;
        return a.value == b.value;
    }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.value < b.value;
    }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a == b || a < b; }

    ExtRat operator+(const ExtRat& o) const {
        if (infinite || o.infinite) return inf();
        return of(value + o.value);
    }
};

inline std::string ext_rat_to_string(const ExtRat& e) {
    return e.infinite ? std::string("inf") : rat_to_string(e.value);
}

} // namespace mldkit
