#pragma once

#include <map>
#include <string>
#include <vector>

#include "mldkit/rational.hpp"

namespace mldkit {

using Exponent = std::vector<Int>;

// Sparse polynomial in variables x1..xdim with rational coefficients.
// Invariant: no stored term has coefficient zero, every exponent is
// componentwise nonnegative of length dim.
struct Poly {
    std::size_t dim = 0;
    std::map<Exponent, Rat> terms;

    bool is_zero() const { return terms.empty(); }

    void add_term(const Exponent& e, const Rat& c) {
        if (e.size() != dim) throw DomainError("exponent arity mismatch");
        for (const auto& k : e)
            if (k < 0) throw NegativeExponent("monomial with negative exponent");
        if (c == 0) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        if (a.dim != b.dim) throw DomainError("polynomial arity mismatch");
        Poly out = a;
        for (const auto& [e, c] : b.terms) out.add_term(e, c);
        return out;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.dim != b.dim) throw DomainError("polynomial arity mismatch");
        Poly out;
        out.dim = a.dim;
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                Exponent e(a.dim);
                for (std::size_t i = 0; i < a.dim; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.dim == b.dim && a.terms == b.terms;
    }
};

inline Poly monomial(std::size_t dim, const Exponent& e, const Rat& c = 1) {
    Poly p;
    p.dim = dim;
    p.add_term(e, c);
    return p;
}

namespace detail {

// Grammar: poly := term (('+'|'-') term)*, term := factor ('*' factor)*,
// factor := rational | var ('^' nat)?, var := 'x' nat. Whitespace free.
struct PolyParser {
    const std::string& s;
    std::size_t pos = 0;
    std::size_t dim;

    PolyParser(const std::string& text, std::size_t d) : s(text), dim(d) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    Int parse_nat() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected number at offset " + std::to_string(start));
        return Int(s.substr(start, pos - start));
    }

    // factor: either a rational constant or a power of one variable
    void parse_factor(Exponent& e, Rat& coeff) {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of polynomial");
        if (s[pos] == 'x') {
            ++pos;
            Int idx = parse_nat();
            if (idx < 1 || idx > Int(dim))
                throw ParseError("variable x" + idx.str() + " out of range for arity " + std::to_string(dim));
            Int exp = 1;
            if (eat('^')) exp = parse_nat();
            e[static_cast<std::size_t>(idx) - 1] += exp;
        } else if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            Int num = parse_nat();
            if (eat('/')) {
                Int den = parse_nat();
                coeff *= make_rat(num, den);
            } else {
                coeff *= Rat(num);
            }
        } else {
            throw ParseError(std::string("unexpected character '") + s[pos] + "' at offset " +
                             std::to_string(pos));
        }
    }

    Poly parse() {
        Poly p;
        p.dim = dim;
        bool first = true;
        while (true) {
            skip_ws();
            if (pos >= s.size()) {
                if (first) throw ParseError("empty polynomial text (use \"0\" for zero)");
                break;
            }
            int sign = 1;
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else if (!first) throw ParseError("expected '+' or '-' at offset " + std::to_string(pos));
            Exponent e(dim, Int(0));
            Rat coeff = sign;
            parse_factor(e, coeff);
            while (eat('*')) parse_factor(e, coeff);
            p.add_term(e, coeff);
            first = false;
        }
        return p;
    }
};

} // namespace detail

inline Poly parse_poly(std::size_t dim, const std::string& text) {
    return detail::PolyParser(text, dim).parse();
}

inline std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms) {
        Rat ac = c < 0 ? Rat(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < p.dim; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + e[i].str();
        }
        if (mono.empty()) {
            out += rat_to_string(ac);
        } else {
            if (ac != 1) out += rat_to_string(ac) + "*";
            out += mono;
        }
    }
    return out;
}

} // namespace mldkit
