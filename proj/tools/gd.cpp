/** @file gd.cpp
 *  @brief Command-line front end: catalog inspection and verification,
 *         point/profile classification, theorem suites, cross-world
 *         checks, artifact replay and aggregate reports.
 *
 *  Exit codes: 0 success, 1 verification failure, 2 usage or schema
 *  error, 3 decided-nothing (Unknown only).  Output is deterministic for
 *  a fixed (argv, seed); set GD_COLOR=1 for ANSI colors in markdown
 *  output (off by default to keep byte-identical reports).
 */
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gdyn/report.hpp"

namespace {

using gdyn::Json;

struct Style {
    bool color = false;
    std::string good(const std::string& s) const {
        return color ? "\x1b[32m" + s + "\x1b[0m" : s;
    }
    std::string bad(const std::string& s) const {
        return color ? "\x1b[31m" + s + "\x1b[0m" : s;
    }
    std::string warn(const std::string& s) const {
        return color ? "\x1b[33m" + s + "\x1b[0m" : s;
    }
};

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw gdyn::SchemaError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw gdyn::SchemaError("cannot parse " + path + ": " + e.what());
    }
    return j;
}

/// Resolve "catalog:NAME" or an --input file into a block groupoid.
gdyn::BlockGroupoid load_target(const std::string& target,
                                const std::string& input, bool strict) {
    if (target.rfind("catalog:", 0) == 0) {
        const gdyn::Fixture& f = gdyn::catalog_fixture(target.substr(8));
        auto g = f.block();
        if (!g)
            throw gdyn::SchemaError("fixture " + f.name +
                                    " has no block-groupoid form");
        return *g;
    }
    if (!input.empty()) {
        Json j = read_json_file(input);
        // accept either a bare groupoid or a fixture instance wrapping one
        if (j.is_object() && j.contains("groupoid")) j = j["groupoid"];
        return gdyn::groupoid_from_json(j, strict);
    }
    throw gdyn::SchemaError(
        "target must be catalog:NAME, or provide --input FILE");
}

void emit(const Json& j, const std::string& format, std::ostream& os) {
    if (format == "json") os << j.dump(2) << "\n";
}

int exit_for(bool any_fail, bool any_unknown, bool any_decided) {
    if (any_fail) return 1;
    if (any_unknown && !any_decided) return 3;
    return 0;
}

// ---- subcommand bodies ------------------------------------------------------

int cmd_catalog_list(const std::string& format) {
    Json names = Json::array();
    for (const std::string& n : gdyn::catalog_names()) names.push_back(n);
    if (format == "json") {
        emit(Json{{"fixtures", names}}, format, std::cout);
    } else {
        for (const std::string& n : gdyn::catalog_names()) {
            const gdyn::Fixture& f = gdyn::catalog_fixture(n);
            std::cout << n << " — " << f.summary << "\n";
        }
    }
    return 0;
}

int cmd_catalog_show(const std::string& name, const std::string& format) {
    const gdyn::Fixture& f = gdyn::catalog_fixture(name);
    Json j = gdyn::fixture_json(f);
    if (format == "json") {
        emit(j, format, std::cout);
    } else {
        std::cout << "# " << f.name << "\n\n" << f.summary << "\n\n"
                  << "## expected\n";
        for (const gdyn::FixtureCheck& c : f.checks)
            std::cout << "- " << c.query << " = " << c.expected
                      << (c.witness_data ? "  (witness data)" : "") << "\n";
        std::cout << "\n## instance\n```json\n" << j["instance"].dump(2)
                  << "\n```\n";
    }
    return 0;
}

int cmd_catalog_verify(const std::string& name, const std::string& format,
                       const Style& st) {
    Json rep;
    int mismatches = 0, unknowns = 0;
    if (name.empty()) {
        rep = gdyn::build_catalog_report();
        mismatches = rep["mismatches"].get<int>();
        unknowns = rep["unknowns"].get<int>();
    } else {
        gdyn::FixtureReport r = gdyn::run_fixture(gdyn::catalog_fixture(name));
        mismatches = r.mismatches;
        unknowns = r.unknowns;
        rep = Json{{"report", "catalog"},
                   {"mismatches", r.mismatches},
                   {"unknowns", r.unknowns},
                   {"fixtures", Json::array({gdyn::to_json(r)})}};
    }
    if (format == "json") {
        emit(rep, format, std::cout);
    } else {
        for (const Json& fj : rep["fixtures"]) {
            bool ok = fj["mismatches"].get<int>() == 0;
            std::cout << (ok ? st.good("ok  ") : st.bad("FAIL")) << " "
                      << fj["name"].get<std::string>() << " ("
                      << fj["checks"].size() << " checks)\n";
            if (!ok)
                for (const Json& c : fj["checks"])
                    if (!c["ok"].get<bool>())
                        std::cout << "     " << c["query"].get<std::string>()
                                  << ": expected '" << c["expected"].get<std::string>()
                                  << "', actual '" << c["actual"].get<std::string>()
                                  << "'\n";
        }
        std::cout << "mismatches: " << mismatches << ", unknowns: " << unknowns
                  << "\n";
    }
    if (mismatches > 0) return 1;
    if (unknowns > 0) return 3;
    return 0;
}

int cmd_classify(const std::string& target, const std::string& input,
                 bool strict, const std::string& point,
                 const std::string& format, const Style& st) {
    gdyn::BlockGroupoid g = load_target(target, input, strict);
    gdyn::CanonicalAction act(g);
    bool any_unknown = false, any_decided = false;
    auto note = [&](gdyn::Verdict v) {
        if (v == gdyn::Verdict::Unknown) any_unknown = true;
        else any_decided = true;
    };
    Json out{{"target", target.empty() ? input : target}};
    if (!point.empty()) {
        gdyn::SymPoint p = g.base.kind == gdyn::SpaceKind::RealLine
            ? gdyn::SymPoint(gdyn::Point::parse(point))
            : gdyn::SymPoint((gdyn::GrpSet::Int)std::stoll(point));
        if (!g.base.carrier.contains(p))
            throw gdyn::SchemaError("point " + point + " is not in the carrier");
        gdyn::PointFlags f = act.classify_point(p);
        for (gdyn::Verdict v : {f.fixed, f.periodic, f.weakly_periodic,
                                f.almost_periodic, f.recurrent, f.nonwandering})
            note(v);
        out["point"] = point;
        out["flags"] = gdyn::to_json(f);
        if (format != "json") {
            Json fj = out["flags"];
            for (auto& [k, v] : fj.items())
                std::cout << k << ": " << v.get<std::string>() << "\n";
        }
    } else {
        gdyn::TransitivityProfile t = act.transitivity_profile();
        gdyn::MixingProfile m = act.mixing_profile();
        for (const gdyn::Prop* p :
             {&t.transitive, &t.pointwise_transitive,
              &t.weakly_pointwise_transitive, &t.prop_i, &t.prop_i_prime,
              &t.prop_ii, &t.prop_iii, &t.prop_iv, &m.weak, &m.strong})
            note(p->v);
        out["profile"] = gdyn::to_json(t);
        out["mixing"] = gdyn::to_json(m);
        Json sets = Json::object();
        auto put_set = [&](const char* key, gdyn::PointClass k) {
            try {
                sets[key] = gdyn::to_json(act.point_class_set(k));
            } catch (const std::logic_error&) {
                sets[key] = "not-applicable";
            }
        };
        put_set("fix", gdyn::PointClass::Fix);
        put_set("per", gdyn::PointClass::Per);
        put_set("wper", gdyn::PointClass::WPer);
        put_set("alper", gdyn::PointClass::AlPer);
        put_set("rec", gdyn::PointClass::Rec);
        put_set("nw", gdyn::PointClass::NW);
        out["sets"] = std::move(sets);
        if (format != "json") {
            for (auto& [k, v] : out["profile"].items()) {
                std::string verdict = v["verdict"].get<std::string>();
                std::string mark = verdict == "holds" ? st.good(verdict)
                                 : verdict == "fails" ? st.bad(verdict)
                                                      : st.warn(verdict);
                std::cout << k << ": " << mark << "\n";
            }
        }
    }
    emit(out, format, std::cout);
    return exit_for(false, any_unknown, any_decided);
}

int cmd_check(const std::string& target, const std::string& input, bool strict,
              const std::string& property, const std::string& format,
              const Style& st) {
    gdyn::BlockGroupoid g = load_target(target, input, strict);
    gdyn::CanonicalAction act(g);
    gdyn::Prop result;
    if (property == "open") {
        auto rep = g.openness();
        result = rep.open ? gdyn::holds("arrow set open in the product")
                          : gdyn::fails(rep.reason);
    } else if (property == "strongly-noncompact") {
        result = act.strongly_noncompact()
            ? gdyn::holds("every d-fibre is non-compact")
            : gdyn::fails("some d-fibre is compact");
    } else if (property == "semisimple") {
        result = act.is_semisimple() == gdyn::Verdict::Holds
            ? gdyn::holds("every point lies in a minimal set")
            : gdyn::fails("some invariant closure is not minimal");
    } else if (property == "weak-mixing") {
        result = act.mixing_profile().weak;
    } else if (property == "strong-mixing") {
        result = act.mixing_profile().strong;
    } else {
        gdyn::TransitivityProfile t = act.transitivity_profile();
        if (property == "transitive") result = t.transitive;
        else if (property == "pointwise-transitive") result = t.pointwise_transitive;
        else if (property == "weakly-pointwise-transitive")
            result = t.weakly_pointwise_transitive;
        else if (property == "prop-i") result = t.prop_i;
        else if (property == "prop-i-prime") result = t.prop_i_prime;
        else if (property == "prop-ii") result = t.prop_ii;
        else if (property == "recurrent-transitivity" || property == "prop-iii")
            result = t.prop_iii;
        else if (property == "topological-transitivity" || property == "prop-iv")
            result = t.prop_iv;
        else
            throw gdyn::SchemaError("unknown property: " + property);
    }
    Json out{{"target", target.empty() ? input : target},
             {"property", property},
             {"result", gdyn::to_json(result)}};
    // for catalog targets, attach the fixture's machine-checkable witness data
    if (target.rfind("catalog:", 0) == 0) {
        Json wit = Json::array();
        const gdyn::Fixture& f = gdyn::catalog_fixture(target.substr(8));
        for (const gdyn::FixtureCheck& c : f.checks)
            if (c.witness_data)
                wit.push_back(Json{{"query", c.query}, {"value", c.eval()}});
        out["witness_data"] = std::move(wit);
    }
    if (format == "json") {
        emit(out, format, std::cout);
    } else {
        std::string verdict = gdyn::verdict_str(result.v);
        std::string mark = result.v == gdyn::Verdict::Holds ? st.good(verdict)
                         : result.v == gdyn::Verdict::Fails ? st.bad(verdict)
                                                            : st.warn(verdict);
        std::cout << property << ": " << mark << "\n";
        if (!result.witness.empty())
            std::cout << "witness: " << result.witness << "\n";
        if (out.contains("witness_data"))
            for (const Json& w : out["witness_data"])
                std::cout << "witness data: " << w["query"].get<std::string>()
                          << " = " << w["value"].get<std::string>() << "\n";
    }
    return exit_for(false, result.v == gdyn::Verdict::Unknown,
                    result.v != gdyn::Verdict::Unknown);
}

int cmd_verify_theorems(std::uint64_t seed, int cases,
                        const std::string& format, const Style& st) {
    Json idr = gdyn::build_suite_report("identity-suite",
                                        gdyn::run_identity_suite(seed, cases));
    Json thr = gdyn::build_suite_report("theorem-suite",
                                        gdyn::run_theorem_suite(seed, cases));
    int violations = idr["violations"].get<int>() + thr["violations"].get<int>();
    if (format == "json") {
        emit(Json{{"identity", idr}, {"theorems", thr}}, format, std::cout);
    } else {
        for (const Json* rep : {&idr, &thr}) {
            std::cout << "## " << (*rep)["report"].get<std::string>() << "\n";
            for (const Json& c : (*rep)["claims"]) {
                bool ok = c["violations"].get<int>() == 0;
                std::cout << (ok ? st.good("ok  ") : st.bad("FAIL")) << " "
                          << c["name"].get<std::string>() << " ("
                          << c["cases"].get<int>() << " cases";
                if (!c["observations"].empty())
                    std::cout << ", " << c["observations"].size()
                              << " non-Hausdorff observations";
                std::cout << ")\n";
                for (const Json& note : c["notes"])
                    std::cout << "     " << note.get<std::string>() << "\n";
            }
        }
        std::cout << "violations: " << violations << "\n";
    }
    return violations > 0 ? 1 : 0;
}

int cmd_cross_check(std::uint64_t seed, int cases, const std::string& artifacts,
                    const std::string& format, const Style& st) {
    Json rep = gdyn::build_crosscheck_report(seed, cases);
    if (!artifacts.empty()) {
        std::ofstream out(artifacts);
        out << rep["artifacts"].dump(2) << "\n";
    }
    if (format == "json") {
        emit(rep, format, std::cout);
    } else {
        std::cout << "cross-check: " << rep["encodable"].get<int>() << "/"
                  << cases << " encodable, " << rep["items"].get<int>()
                  << " predicates compared\n"
                  << "disagreements: "
                  << (rep["disagreements"].get<int>() == 0
                          ? st.good("0")
                          : st.bad(std::to_string(rep["disagreements"].get<int>())))
                  << ", unknown rate: " << rep["unknown_rate_percent"].get<double>()
                  << "%\n";
        for (const Json& a : rep["artifacts"])
            std::cout << "artifact: seed=" << a["seed"].get<std::uint64_t>()
                      << " predicate=" << a["predicate"].get<std::string>()
                      << " symbolic=" << a["symbolic"].get<std::string>()
                      << " reference=" << a["reference"].get<std::string>() << "\n";
    }
    if (rep["disagreements"].get<int>() > 0) return 1;
    if (rep["unknown_rate_percent"].get<double>() > 10.0) return 3;
    return 0;
}

int cmd_replay(const std::string& file, const std::string& format,
               const Style& st) {
    Json in = read_json_file(file);
    Json list = in.is_array() ? in : Json::array({in});
    Json results = Json::array();
    bool all_reproduced = true, any = false;
    for (const Json& a : list) {
        Json r = gdyn::replay_artifact(a);
        any = true;
        if (!r["reproduced"].get<bool>()) all_reproduced = false;
        results.push_back(std::move(r));
    }
    if (format == "json") {
        emit(Json{{"replayed", results}}, format, std::cout);
    } else {
        for (const Json& r : results)
            std::cout << "seed=" << r["seed"].get<std::uint64_t>() << " "
                      << r["predicate"].get<std::string>() << ": "
                      << (r["reproduced"].get<bool>()
                              ? st.good("reproduced")
                              : st.warn("not reproduced"))
                      << "\n";
    }
    if (!any) return 2;
    return all_reproduced ? 0 : 1;
}

int cmd_report(std::uint64_t seed, int cases, const std::string& format,
               const Style& st) {
    Json cat = gdyn::build_catalog_report();
    Json idr = gdyn::build_suite_report("identity-suite",
                                        gdyn::run_identity_suite(seed, cases));
    Json thr = gdyn::build_suite_report("theorem-suite",
                                        gdyn::run_theorem_suite(seed, cases));
    Json ccr = gdyn::build_crosscheck_report(seed, cases);
    Json full{{"catalog", cat},
              {"identity", idr},
              {"theorems", thr},
              {"cross_check", ccr}};
    bool fail = cat["mismatches"].get<int>() > 0 ||
                idr["violations"].get<int>() > 0 ||
                thr["violations"].get<int>() > 0 ||
                ccr["disagreements"].get<int>() > 0;
    bool unk = cat["unknowns"].get<int>() > 0 ||
               ccr["unknown_rate_percent"].get<double>() > 10.0;
    if (format == "json") {
        emit(full, format, std::cout);
    } else {
        auto line = [&](const std::string& name, bool ok, const std::string& det) {
            std::cout << (ok ? st.good("ok  ") : st.bad("FAIL")) << " " << name
                      << ": " << det << "\n";
        };
        line("catalog", cat["mismatches"].get<int>() == 0,
             std::to_string(cat["mismatches"].get<int>()) + " mismatches, " +
                 std::to_string(cat["unknowns"].get<int>()) + " unknowns");
        line("identity-suite", idr["violations"].get<int>() == 0,
             std::to_string(idr["cases"].get<int>()) + " cases, " +
                 std::to_string(idr["violations"].get<int>()) + " violations");
        line("theorem-suite", thr["violations"].get<int>() == 0,
             std::to_string(thr["cases"].get<int>()) + " cases, " +
                 std::to_string(thr["violations"].get<int>()) + " violations, " +
                 std::to_string(thr["observations"].get<int>()) +
                 " non-Hausdorff observations");
        line("cross-check", ccr["disagreements"].get<int>() == 0,
             std::to_string(ccr["encodable"].get<int>()) + " encodable, " +
                 std::to_string(ccr["disagreements"].get<int>()) +
                 " disagreements, unknown rate " +
                 std::to_string(ccr["unknown_rate_percent"].get<double>()) + "%");
    }
    return exit_for(fail, unk, true);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"groupoid dynamics toolkit"};
    app.require_subcommand(1);

    std::string format = "md";
    std::string input, point, property, name, target, file, artifacts;
    bool strict = false;
    std::uint64_t seed = 1;
    int cases = 100;

    Style st;
    if (const char* c = std::getenv("GD_COLOR")) st.color = std::string(c) == "1";

    app.add_option("--format", format, "output format: json or md")
        ->check(CLI::IsMember({"json", "md"}));

    auto* cat = app.add_subcommand("catalog", "fixture catalog");
    cat->require_subcommand(1);
    cat->add_subcommand("list", "list fixtures");
    auto* show = cat->add_subcommand("show", "print one fixture");
    show->add_option("name", name, "fixture name")->required();
    auto* verify = cat->add_subcommand("verify", "run expected-value checks");
    verify->add_option("name", name, "fixture name (default: all)");

    auto* classify = app.add_subcommand("classify", "point flags or full profile");
    classify->add_option("target", target, "catalog:NAME or use --input");
    classify->add_option("--input", input, "instance JSON file");
    classify->add_option("--point", point, "point to classify");
    classify->add_flag("--strict-carrier", strict,
                       "reject out-of-carrier cells instead of clipping");

    auto* check = app.add_subcommand("check", "decide one property");
    check->add_option("target", target, "catalog:NAME or use --input");
    check->add_option("--input", input, "instance JSON file");
    check->add_option("--property", property, "property name")->required();
    check->add_flag("--strict-carrier", strict,
                    "reject out-of-carrier cells instead of clipping");

    auto* vt = app.add_subcommand("verify-theorems", "run the random suites");
    vt->add_option("--seed", seed, "base seed");
    vt->add_option("--cases", cases, "cases per claim");

    auto* cc = app.add_subcommand("cross-check",
                                  "symbolic vs finite-world agreement");
    cc->add_option("--seed", seed, "base seed");
    cc->add_option("--cases", cases, "number of seeds");
    cc->add_option("--artifacts", artifacts, "write disagreement artifacts here");

    auto* rp = app.add_subcommand("replay", "re-evaluate failure artifacts");
    rp->add_option("file", file, "artifact JSON file")->required();

    auto* rep = app.add_subcommand("report", "aggregate verification report");
    rep->add_option("--seed", seed, "base seed");
    rep->add_option("--cases", cases, "cases per suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cat->parsed()) {
            if (cat->get_subcommand("list")->parsed()) return cmd_catalog_list(format);
            if (cat->get_subcommand("show")->parsed())
                return cmd_catalog_show(name, format);
            return cmd_catalog_verify(name, format, st);
        }
        if (classify->parsed())
            return cmd_classify(target, input, strict, point, format, st);
        if (check->parsed())
            return cmd_check(target, input, strict, property, format, st);
        if (vt->parsed()) return cmd_verify_theorems(seed, cases, format, st);
        if (cc->parsed()) return cmd_cross_check(seed, cases, artifacts, format, st);
        if (rp->parsed()) return cmd_replay(file, format, st);
        if (rep->parsed()) return cmd_report(seed, cases, format, st);
    } catch (const gdyn::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gdyn::UnknownFixture& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
