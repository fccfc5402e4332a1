/** @file report.hpp
 *  @brief Deterministic JSON report builders shared by the CLI and the
 *         acceptance runner.
 *
 *  Every builder is a pure function of its arguments (fixed seeds, fixed
 *  case counts), contains no timestamps or durations, and emits entries
 *  in a canonical order, so repeated runs produce byte-identical output.
 *  Disagreements and Unknown verdicts are embedded as replayable
 *  artifacts: the generating seed plus the predicate and both answers.
 */
#pragma once

#include <string>
#include <vector>

#include "gdyn/catalog.hpp"
#include "gdyn/crosscheck.hpp"
#include "gdyn/suites.hpp"

namespace gdyn {

inline Json build_catalog_report() {
    Json fixtures = Json::array();
    int mismatches = 0, unknowns = 0;
    for (const FixtureReport& r : catalog_verify_all()) {
        mismatches += r.mismatches;
        unknowns += r.unknowns;
        fixtures.push_back(to_json(r));
    }
    return Json{{"report", "catalog"},
                {"mismatches", mismatches},
                {"unknowns", unknowns},
                {"fixtures", std::move(fixtures)}};
}

inline Json to_json(const SuiteResult& r) {
    Json notes = Json::array();
    for (const std::string& n : r.notes) notes.push_back(n);
    Json obs = Json::array();
    for (const std::string& o : r.observations) obs.push_back(o);
    return Json{{"name", r.name},
                {"cases", r.cases},
                {"violations", r.violations},
                {"notes", std::move(notes)},
                {"observations", std::move(obs)}};
}

inline Json build_suite_report(const std::string& which,
                               const std::vector<SuiteResult>& results) {
    Json claims = Json::array();
    int cases = 0, violations = 0, observations = 0;
    for (const SuiteResult& r : results) {
        cases += r.cases;
        violations += r.violations;
        observations += (int)r.observations.size();
        claims.push_back(to_json(r));
    }
    return Json{{"report", which},
                {"cases", cases},
                {"violations", violations},
                {"observations", observations},
                {"claims", std::move(claims)}};
}

/// One replayable artifact for a cross-check item.
inline Json artifact_json(const AgreementReport& rep, const AgreeItem& it) {
    return Json{{"seed", rep.seed},
                {"family", rep.family},
                {"predicate", it.predicate},
                {"symbolic", it.symbolic},
                {"reference", it.reference}};
}

inline Json build_crosscheck_report(std::uint64_t seed0, int cases) {
    Json runs = Json::array();
    Json artifacts = Json::array();
    int encodable = 0, items = 0, disagreements = 0, unknowns = 0;
    for (int k = 0; k < cases; ++k) {
        std::uint64_t seed = seed0 + (std::uint64_t)k;
        FiniteInstance inst = gen_instance(seed);
        AgreementReport rep;
        try {
            rep = cross_check(inst);
        } catch (const NotEncodable&) {
            continue;
        }
        ++encodable;
        items += (int)rep.items.size();
        disagreements += rep.disagreements();
        unknowns += rep.unknowns();
        for (const AgreeItem& it : rep.items)
            if (it.status != AgreeStatus::Agree)
                artifacts.push_back(artifact_json(rep, it));
        runs.push_back(Json{{"seed", seed},
                            {"family", rep.family},
                            {"items", (int)rep.items.size()},
                            {"disagreements", rep.disagreements()},
                            {"unknowns", rep.unknowns()}});
    }
    double rate = items == 0 ? 0.0 : (double)unknowns / (double)items;
    return Json{{"report", "cross-check"},
                {"seed", seed0},
                {"cases", cases},
                {"encodable", encodable},
                {"items", items},
                {"disagreements", disagreements},
                {"unknowns", unknowns},
                {"unknown_rate_percent", (int)(rate * 10000) / 100.0},
                {"artifacts", std::move(artifacts)},
                {"runs", std::move(runs)}};
}

/// Re-evaluate one artifact: regenerate the instance from its seed and
/// compare the fresh answers with the recorded ones.
inline Json replay_artifact(const Json& artifact) {
    std::uint64_t seed = artifact.at("seed").get<std::uint64_t>();
    std::string predicate = artifact.at("predicate").get<std::string>();
    FiniteInstance inst = gen_instance(seed);
    AgreementReport rep = cross_check(inst);
    Json out{{"seed", seed}, {"predicate", predicate}, {"found", false},
             {"reproduced", false}};
    for (const AgreeItem& it : rep.items) {
        if (it.predicate != predicate) continue;
        out["found"] = true;
        out["symbolic"] = it.symbolic;
        out["reference"] = it.reference;
        bool same = it.symbolic == artifact.value("symbolic", std::string()) &&
                    it.reference == artifact.value("reference", std::string());
        out["reproduced"] = same;
        break;
    }
    return out;
}

} // namespace gdyn
