#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mldkit/json_io.hpp"
#include "mldkit/verify.hpp"

namespace mldkit {

namespace detail {

inline Json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return Json(v.convert_to<std::int64_t>());
    return Json(v.str());
}

inline Json point_to_json(const LatticePoint& p) {
    Json arr = Json::array();
    for (const auto& v : p) arr.push_back(int_to_json(v));
    return arr;
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

} // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact minimal log discrepancy and canonical threshold toolkit", "mldkit"};
    app.require_subcommand(1);

    std::string file;
    std::string a_str = "0";
    std::string weight_str;
    std::int64_t budget = 30;

    auto* tmld = app.add_subcommand("toric-mld", "minimal log discrepancy of a toric pair");
    tmld->add_option("file", file, "toric pair JSON")->required();

    auto* tlct = app.add_subcommand("toric-lct", "log canonical threshold of a toric divisor");
    tlct->add_option("file", file, "toric pair JSON with dcoeffs")->required();
    tlct->add_option("--a", a_str, "log canonicity level, rational p/q")->capture_default_str();

    auto* gdisc = app.add_subcommand("germ-discrepancy", "weighted blow-up discrepancy of a germ");
    gdisc->add_option("file", file, "germ JSON")->required();
    gdisc->add_option("--weight", weight_str, "comma-separated weight numerators")->required();

    auto* gweights = app.add_subcommand("germ-weights", "admissible weights within a budget");
    gweights->add_option("file", file, "germ JSON")->required();
    gweights->add_option("--budget", budget, "bound on the numerator sum")->capture_default_str();

    auto* newton = app.add_subcommand("newton", "monomial staircase operations");
    newton->require_subcommand(1);
    auto* nreduce = newton->add_subcommand("reduce", "vertex antichain of a generator set");
    nreduce->add_option("file", file, "staircase JSON")->required();
    auto* nchain = newton->add_subcommand("chain", "longest descending chain in a sequence");
    nchain->add_option("file", file, "staircase sequence JSON")->required();

    auto* reid = app.add_subcommand("reid", "basket Riemann-Roch quantities");
    reid->require_subcommand(1);
    std::int64_t rr = 1, rb = 1, ri = 0;
    auto* rc = reid->add_subcommand("c", "contribution c(r,b,i) of one fictitious point");
    rc->add_option("r", rr, "point index r")->required();
    rc->add_option("b", rb, "point weight b, coprime to r")->required();
    rc->add_option("i", ri, "divisor multiple i")->required();
    std::int64_t dr = 1, dimax = 1;
    auto* rdelta = reid->add_subcommand("delta-check", "delta identity over a basket file");
    rdelta->add_option("file", file, "basket JSON")->required();
    rdelta->add_option("--r", dr, "divisibility index")->required();
    rdelta->add_option("--imax", dimax, "verify i in [0, imax]")->required();
    std::int64_t ir1 = 1, id1 = 1, ir2 = 1, id2 = 1;
    auto* rindex = reid->add_subcommand("index", "reconstructed index from two points");
    rindex->add_option("r1", ir1, "first point index")->required();
    rindex->add_option("d1", id1, "first point divisor class")->required();
    rindex->add_option("r2", ir2, "second point index")->required();
    rindex->add_option("d2", id2, "second point divisor class")->required();
    std::int64_t famr = 2;
    auto* rfamily = reid->add_subcommand("family", "side-condition family at parameter r");
    rfamily->add_option("r", famr, "family parameter, at least 2")->required();

    auto* ctscan = app.add_subcommand("ct-scan", "candidate canonical threshold values");
    std::string kind = "smooth";
    std::int64_t ck = 1, ccap = 100;
    std::string csv_path;
    ctscan->add_option("--kind", kind, "smooth or cA")
        ->check(CLI::IsMember({"smooth", "cA"}))
        ->capture_default_str();
    ctscan->add_option("--k", ck, "mld level parameter")->required();
    ctscan->add_option("--cap", ccap, "enumeration cap")->required();
    ctscan->add_option("--emit-csv", csv_path, "also write value,r1,r2,dm rows to a file");

    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    std::string suite;
    std::uint64_t seed = 1729;
    verify->add_option("--suite", suite, "run a single named suite");
    verify->add_option("--seed", seed, "seed for the randomized checks")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*tmld) {
            ToricInput in = parse_toric_input(read_json_file(file));
            MldResult res = toric_mld(in.pair);
            Json j;
            if (res.neg_infinity) {
                j["mld"] = "-infinity";
            } else {
                j["mld"] = rat_to_string(res.value);
                j["witness"] = detail::point_to_json(res.witness);
            }
            detail::emit(out, j);
        } else if (*tlct) {
            ToricInput in = parse_toric_input(read_json_file(file));
            if (in.dcoeffs.empty())
                throw ParseError("key 'dcoeffs': required for threshold computations");
            AlctResult res = toric_alct(in.pair, in.dcoeffs, parse_rat(a_str));
            Json j;
            j["lct"] = res.plus_infinity ? "+infinity" : rat_to_string(res.value);
            detail::emit(out, j);
        } else if (*gdisc) {
            HyperquotientGerm germ = parse_germ_input(read_json_file(file));
            std::vector<Int> nums;
            std::string tok;
            for (char ch : weight_str + ",") {
                if (ch == ',') {
                    if (!tok.empty()) nums.push_back(parse_int(tok));
                    tok.clear();
                } else {
                    tok.push_back(ch);
                }
            }
            AdmissibleWeight w = make_admissible_weight(germ, nums);
            ExtRat disc = germ_weight_discrepancy(germ, w);
            Json j;
            j["discrepancy"] = ext_rat_to_string(disc);
            detail::emit(out, j);
        } else if (*gweights) {
            HyperquotientGerm germ = parse_germ_input(read_json_file(file));
            auto weights = enumerate_admissible_weights(germ, Int(budget));
            Json j;
            j["count"] = weights.size();
            j["n"] = detail::int_to_json(germ.action.n);
            Json arr = Json::array();
            for (const auto& w : weights) {
                LatticePoint nums(w.numerators.begin(), w.numerators.end());
                arr.push_back(detail::point_to_json(nums));
            }
            j["weights"] = arr;
            detail::emit(out, j);
        } else if (*nreduce) {
            NewtonPolytope n = parse_newton_input(read_json_file(file));
            Json j;
            j["dim"] = n.dim;
            Json arr = Json::array();
            for (const auto& v : n.vertices) arr.push_back(detail::point_to_json(v));
            j["vertices"] = arr;
            detail::emit(out, j);
        } else if (*nchain) {
            std::vector<NewtonPolytope> seq = parse_newton_chain_input(read_json_file(file));
            std::vector<std::size_t> chain = longest_descending_chain(seq);
            Json j;
            j["chain"] = chain;
            j["length"] = chain.size();
            detail::emit(out, j);
        } else if (*rc) {
            Json j;
            j["c"] = rat_to_string(c_point(Int(rr), Int(rb), Int(ri)));
            detail::emit(out, j);
        } else if (*rdelta) {
            BasketConfig cfg = parse_basket_input(read_json_file(file));
            DeltaReport rep = verify_delta_identity(cfg, Int(dr), Int(dimax));
            Json j;
            j["imax"] = detail::int_to_json(rep.imax);
            j["pass"] = rep.pass();
            Json viol = Json::array();
            for (const auto& v : rep.violations) viol.push_back(detail::int_to_json(v));
            j["violations"] = viol;
            detail::emit(out, j);
        } else if (*rindex) {
            Json j;
            j["index"] =
                detail::int_to_json(index_from_basket(Int(ir1), Int(id1), Int(ir2), Int(id2)));
            detail::emit(out, j);
        } else if (*rfamily) {
            FamilyReport rep = remark_family(Int(famr));
            Json j;
            j["all_pass"] = rep.all_pass;
            Json conds = Json::array();
            for (const auto& [name, pass] : rep.conditions) {
                Json c;
                c["condition"] = name;
                c["pass"] = pass;
                conds.push_back(c);
            }
            j["conditions"] = conds;
            Json cfg;
            cfg["n"] = detail::int_to_json(rep.config.n);
            cfg["a"] = detail::int_to_json(rep.config.a);
            cfg["b"] = detail::int_to_json(rep.config.b_amb);
            Json pts = Json::array();
            for (const auto& p : rep.config.points) {
                Json q;
                q["r"] = detail::int_to_json(p.r);
                q["b"] = detail::int_to_json(p.b);
                q["d"] = detail::int_to_json(p.d_class);
                q["v"] = detail::int_to_json(p.v);
                pts.push_back(q);
            }
            cfg["points"] = pts;
            j["config"] = cfg;
            detail::emit(out, j);
        } else if (*ctscan) {
            CtKind ck_kind = kind == "smooth" ? CtKind::SmoothCT : CtKind::CAcT;
            std::vector<CtValue> entries = enumerate_ct_entries(ck_kind, Int(ck), Int(ccap));
            Json j;
            j["cap"] = ccap;
            j["count"] = entries.size();
            j["k"] = ck;
            j["kind"] = kind;
            Json vals = Json::array();
            for (const auto& e : entries) vals.push_back(rat_to_string(e.value));
            j["values"] = vals;
            detail::emit(out, j);
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path);
                if (!csv) throw DomainError("cannot open csv output file " + csv_path);
                csv << "value_num,value_den,r1,r2,dm\n";
                for (const auto& e : entries)
                    csv << rat_num(e.value) << "," << rat_den(e.value) << "," << e.r1 << ","
                        << e.r2 << "," << e.dm << "\n";
            }
        } else if (*verify) {
            std::vector<SuiteResult> results;
            if (!suite.empty()) {
                results.push_back(run_suite(suite, seed));
            } else {
                results = run_all_suites(seed);
            }
            std::size_t wname = 5;
            for (const auto& r : results) wname = std::max(wname, r.name.size());
            out << std::left << std::setw(static_cast<int>(wname + 2)) << "suite"
                << std::right << std::setw(10) << "checks" << std::setw(10) << "failures"
                << "  status\n";
            bool all_ok = true;
            for (const auto& r : results) {
                out << std::left << std::setw(static_cast<int>(wname + 2)) << r.name
                    << std::right << std::setw(10) << r.checks << std::setw(10) << r.failures
                    << "  " << (r.pass() ? "pass" : "FAIL") << "\n";
                all_ok = all_ok && r.pass();
            }
            for (const auto& r : results)
                for (const auto& m : r.messages) out << "[" << r.name << "] " << m << "\n";
            if (!all_ok) return 1;
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace mldkit
