#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mldkit/germ.hpp"
#include "mldkit/newton.hpp"
#include "mldkit/reid.hpp"
#include "mldkit/toric.hpp"

namespace mldkit {

using Json = nlohmann::json;

namespace detail {

[[noreturn]] inline void bad_key(const std::string& key, const std::string& what) {
    throw ParseError("key '" + key + "': " + what);
}

inline const Json& require_key(const Json& j, const std::string& key,
                               const std::string& label = "") {
    const std::string& name = label.empty() ? key : label;
    if (!j.is_object()) bad_key(name, "enclosing value is not an object");
    auto it = j.find(key);
    if (it == j.end()) bad_key(name, "missing");
    return *it;
}

} // namespace detail

inline Int json_to_int(const Json& j, const std::string& key) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return parse_int(j.get<std::string>());
        } catch (const ParseError& e) {
            detail::bad_key(key, e.what());
        }
    }
    detail::bad_key(key, "expected an integer or a decimal string");
}

inline Rat json_to_rat(const Json& j, const std::string& key) {
    if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const ParseError& e) {
            detail::bad_key(key, e.what());
        }
    }
    detail::bad_key(key, "expected an integer or a \"p/q\" string");
}

inline LatticePoint json_to_point(const Json& j, const std::string& key) {
    if (!j.is_array()) detail::bad_key(key, "expected an array of integers");
    LatticePoint p;
    p.reserve(j.size());
    for (const auto& c : j) p.push_back(json_to_int(c, key));
    return p;
}

inline std::vector<Rat> json_to_rat_list(const Json& j, const std::string& key) {
    if (!j.is_array()) detail::bad_key(key, "expected an array of rationals");
    std::vector<Rat> out;
    out.reserve(j.size());
    for (const auto& c : j) out.push_back(json_to_rat(c, key));
    return out;
}

struct ToricInput {
    ToricPair pair;
    std::vector<Rat> dcoeffs; // empty when absent
    std::optional<QuotientToricGerm> quotient;
};

// Accepts either explicit rays or the cyclic quotient shorthand:
//   {"dim": 2, "rays": [[2,-1],[0,1]], "coeffs": ["1/2", 0]}
//   {"quotient": {"n": 2, "chars": [1, 1]}}
inline ToricInput parse_toric_input(const Json& j) {
    ToricInput input;
    ToricGerm germ;
    if (j.is_object() && j.contains("quotient")) {
        const Json& q = j.at("quotient");
        Int n = json_to_int(detail::require_key(q, "n"), "quotient.n");
        const Json& chars_json = detail::require_key(q, "chars");
        if (!chars_json.is_array() || chars_json.empty())
            detail::bad_key("quotient.chars", "expected a non-empty array");
        std::vector<Int> chars;
        for (const auto& c : chars_json) chars.push_back(json_to_int(c, "quotient.chars"));
        input.quotient = quotient_germ_to_toric(n, chars);
        germ = input.quotient->germ;
    } else {
        std::size_t dim = 0;
        {
            Int d = json_to_int(detail::require_key(j, "dim"), "dim");
            if (d < 1) detail::bad_key("dim", "must be positive");
            dim = d.convert_to<std::size_t>();
        }
        const Json& rays_json = detail::require_key(j, "rays");
        if (!rays_json.is_array() || rays_json.empty())
            detail::bad_key("rays", "expected a non-empty array of lattice points");
        std::vector<LatticePoint> rays;
        for (const auto& r : rays_json) {
            LatticePoint p = json_to_point(r, "rays");
            if (p.size() != dim) detail::bad_key("rays", "ray arity differs from dim");
            rays.push_back(std::move(p));
        }
        germ = make_toric_germ(dim, std::move(rays));
    }
    std::vector<Rat> coeffs(germ.rays.size(), Rat(0));
    if (j.is_object() && j.contains("coeffs")) {
        coeffs = json_to_rat_list(j.at("coeffs"), "coeffs");
        if (coeffs.size() != germ.rays.size())
            detail::bad_key("coeffs", "expected one coefficient per ray");
    }
    if (j.is_object() && j.contains("dcoeffs")) {
        input.dcoeffs = json_to_rat_list(j.at("dcoeffs"), "dcoeffs");
        if (input.dcoeffs.size() != germ.rays.size())
            detail::bad_key("dcoeffs", "expected one coefficient per ray");
    }
    input.pair = make_toric_pair(std::move(germ), std::move(coeffs));
    return input;
}

// {"dim": 2, "generators": [[3,0],[1,1],[0,2]]}
inline NewtonPolytope parse_newton_input(const Json& j) {
    Int d = json_to_int(detail::require_key(j, "dim"), "dim");
    if (d < 1) detail::bad_key("dim", "must be positive");
    std::size_t dim = d.convert_to<std::size_t>();
    const Json& gens = detail::require_key(j, "generators");
    if (!gens.is_array()) detail::bad_key("generators", "expected an array of exponent vectors");
    std::vector<Exponent> exps;
    for (const auto& g : gens) exps.push_back(json_to_point(g, "generators"));
    return from_generators(dim, std::move(exps));
}

// {"dim": 2, "polytopes": [[[1,0]], [[2,0],[0,1]], ...]}
inline std::vector<NewtonPolytope> parse_newton_chain_input(const Json& j) {
    Int d = json_to_int(detail::require_key(j, "dim"), "dim");
    if (d < 1) detail::bad_key("dim", "must be positive");
    std::size_t dim = d.convert_to<std::size_t>();
    const Json& seq = detail::require_key(j, "polytopes");
    if (!seq.is_array() || seq.empty())
        detail::bad_key("polytopes", "expected a non-empty array of generator lists");
    std::vector<NewtonPolytope> out;
    for (const auto& gens : seq) {
        if (!gens.is_array()) detail::bad_key("polytopes", "expected generator lists");
        std::vector<Exponent> exps;
        for (const auto& g : gens) exps.push_back(json_to_point(g, "polytopes"));
        out.push_back(from_generators(dim, std::move(exps)));
    }
    return out;
}

// {"n": 22, "a": 2, "b": 19,
//  "points": [{"r":36,"b":31,"d":36,"v":1}, {"r":8,"b":7,"d":4,"v":1}]}
inline BasketConfig parse_basket_input(const Json& j) {
    Int n = json_to_int(detail::require_key(j, "n"), "n");
    Int a = json_to_int(detail::require_key(j, "a"), "a");
    Int b = json_to_int(detail::require_key(j, "b"), "b");
    const Json& pts = detail::require_key(j, "points");
    if (!pts.is_array() || pts.size() != 2)
        detail::bad_key("points", "expected exactly two basket points");
    std::vector<FictitiousPoint> fp;
    for (const auto& p : pts) {
        fp.push_back(make_fictitious_point(
            json_to_int(detail::require_key(p, "r", "points.r"), "points.r"),
            json_to_int(detail::require_key(p, "b", "points.b"), "points.b"),
            json_to_int(detail::require_key(p, "d", "points.d"), "points.d"),
            json_to_int(detail::require_key(p, "v", "points.v"), "points.v")));
    }
    return make_basket_config(n, a, b, fp[0], fp[1]);
}

// {"dim": 4, "quotient": {"n": 7, "chars": [5,16,3,7]},
//  "equations": ["x1*x2 + x3^7 + x4^3"], "tag": "cA/n",
//  "boundary": [{"coeff": "1/2", "poly": "x1"}]}
inline HyperquotientGerm parse_germ_input(const Json& j) {
    Int d = json_to_int(detail::require_key(j, "dim"), "dim");
    if (d < 1) detail::bad_key("dim", "must be positive");
    std::size_t dim = d.convert_to<std::size_t>();

    Int n(1);
    std::vector<Int> chars(dim, Int(0));
    if (j.contains("quotient")) {
        const Json& q = j.at("quotient");
        n = json_to_int(detail::require_key(q, "n"), "quotient.n");
        const Json& cj = detail::require_key(q, "chars");
        if (!cj.is_array() || cj.size() != dim)
            detail::bad_key("quotient.chars", "expected one character per coordinate");
        chars.clear();
        for (const auto& c : cj) chars.push_back(json_to_int(c, "quotient.chars"));
    }

    std::vector<Poly> eqs;
    if (j.contains("equations")) {
        const Json& ej = j.at("equations");
        if (!ej.is_array()) detail::bad_key("equations", "expected an array of polynomial strings");
        for (const auto& e : ej) {
            if (!e.is_string()) detail::bad_key("equations", "expected polynomial strings");
            eqs.push_back(parse_poly(dim, e.get<std::string>()));
        }
    }

    GermTag tag = GermTag::None;
    if (j.contains("tag")) {
        const Json& tj = j.at("tag");
        if (!tj.is_string()) detail::bad_key("tag", "expected a string");
        tag = germ_tag_from_name(tj.get<std::string>());
    }

    std::vector<BoundaryDivisor> boundary;
    if (j.contains("boundary")) {
        const Json& bj = j.at("boundary");
        if (!bj.is_array()) detail::bad_key("boundary", "expected an array of components");
        for (const auto& comp : bj) {
            Rat coeff =
                json_to_rat(detail::require_key(comp, "coeff", "boundary.coeff"), "boundary.coeff");
            const Json& pj = detail::require_key(comp, "poly", "boundary.poly");
            if (!pj.is_string()) detail::bad_key("boundary.poly", "expected a polynomial string");
            boundary.push_back(BoundaryDivisor{coeff, parse_poly(dim, pj.get<std::string>())});
        }
    }
    return make_hyperquotient_germ(dim, CyclicAction{n, chars}, std::move(eqs), tag,
                                   std::move(boundary));
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return j;
}

} // namespace mldkit
