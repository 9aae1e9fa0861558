// SPDX-License-Identifier: Apache-2.0
#pragma once

/**
 * @file report.hpp
 * @brief JSON serialisation of check results. Field order is fixed by
 * ordered_json; elements are always written in element syntax.
 */

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qord/poset.hpp"
#include "qord/structure.hpp"
#include "qord/value_table.hpp"

namespace qord {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "qord 1.0.0";

namespace report {

inline Json elements(const std::vector<Element>& xs)
{
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(x.to_string());
    return a;
}

inline Json pair(const Element& x, const Element& y) { return Json::array({x.to_string(), y.to_string()}); }

inline Json to_json(const AxiomOutcome& o)
{
    Json j;
    j["axiom"] = o.axiom;
    j["status"] = o.pass ? "Pass" : "Fail";
    j["count"] = o.count;
    if (!o.pass) {
        j["variables"] = o.variables;
        j["witness"] = elements(o.witness);
    }
    if (!o.note.empty()) j["note"] = o.note;
    return j;
}

inline Json to_json(const AxiomReport& r)
{
    Json j;
    j["qo"] = r.qo_id;
    j["universe"] = r.universe;
    j["status"] = r.passed() ? "Pass" : "Fail";
    Json outs = Json::array();
    for (const auto& o : r.outcomes) outs.push_back(to_json(o));
    j["outcomes"] = std::move(outs);
    return j;
}

inline Json to_json(const Decision& d)
{
    Json j;
    j["decision"] = decision_name(d);
    if (const auto* r = std::get_if<Refuted>(&d)) {
        j["witness"] = pair(r->x, r->y);
        if (r->cited) {
            j["cited_witness"] = pair(r->cited->first, r->cited->second);
            j["citation"] = r->citation;
        }
    } else if (const auto* n = std::get_if<NotRefuted>(&d)) {
        j["pairs_checked"] = n->pairs_checked;
        j["universe"] = n->universe;
    } else {
        const auto& v = std::get<Verified>(d);
        j["rule"] = v.rule;
        j["citation"] = v.citation;
        j["pairs_checked"] = v.pairs_checked;
        j["universe"] = v.universe;
    }
    return j;
}

inline Json to_json(const ValueTable& t)
{
    Json j;
    j["qo"] = t.source();
    j["universe"] = t.universe();
    j["classes"] = t.classes().size();
    j["universe_classes"] = t.universe_class_count();
    j["neutral"] = t.neutral();
    Json reps = Json::array();
    for (const auto& c : t.classes()) reps.push_back(c.members.front().to_string());
    j["representatives"] = std::move(reps);
    j["infinity"] = elements(t.infinity());
    j["checks"] = to_json(t.checks());
    return j;
}

inline Json to_json(const MutationReport& m)
{
    Json j;
    j["base"] = m.base_id;
    j["status"] = m.passed() ? "Pass" : "Fail";
    Json arr = Json::array();
    for (const auto& r : m.mutants) {
        Json e;
        e["mutant"] = r.mutant;
        e["caught"] = r.caught();
        e["classified_before"] = to_string(r.classified_before);
        e["classified_after"] = to_string(r.classified_after);
        if (const auto* f = r.report.first_failure()) e["first_failure"] = to_json(*f);
        if (!r.ordering_suite_error.empty()) e["ordering_suite_error"] = r.ordering_suite_error;
        arr.push_back(std::move(e));
    }
    j["mutants"] = std::move(arr);
    return j;
}

inline Json node_json(const CatalogEntry& e)
{
    Json j;
    j["id"] = e.id();
    j["kind"] = to_string(e.qo.declared_kind());
    j["support"] = e.qo.declared_support().name();
    j["provenance"] = e.qo.provenance();
    return j;
}

inline Json to_json(const Poset& P)
{
    Json j;
    j["ring"] = P.ring.name();
    j["universe"] = P.universe;
    Json nodes = Json::array();
    for (const auto& e : P.nodes) nodes.push_back(node_json(e));
    j["nodes"] = std::move(nodes);
    Json rel = Json::array();
    for (std::size_t a = 0; a < P.size(); ++a)
        for (std::size_t b = 0; b < P.size(); ++b) {
            if (a == b) continue;
            Json d = to_json(P.decisions[a][b]);
            Json e;
            e["lower"] = P.id(a);
            e["upper"] = P.id(b);
            for (auto& [k, v] : d.items()) e[k] = v;
            rel.push_back(std::move(e));
        }
    j["relation"] = std::move(rel);
    Json hasse = Json::array();
    for (auto [a, b] : P.hasse) hasse.push_back(Json::array({P.id(a), P.id(b)}));
    j["hasse"] = std::move(hasse);
    j["maximum"] = P.maximum ? Json(P.id(*P.maximum)) : Json(nullptr);
    return j;
}

inline Json ids(const Poset& P, const std::vector<std::size_t>& xs)
{
    Json a = Json::array();
    for (auto i : xs) a.push_back(P.id(i));
    return a;
}

inline Json to_json(const TreeCertificate& T)
{
    Json j;
    j["support"] = T.support;
    j["maximum"] = T.poset.id(T.maximum);
    Json br = Json::array();
    for (const auto& b : T.branches) br.push_back(ids(T.poset, b));
    j["branches"] = std::move(br);
    Json ups;
    for (std::size_t i = 0; i < T.poset.size(); ++i) ups[T.poset.id(i)] = ids(T.poset, T.up_sets[i]);
    j["up_sets"] = std::move(ups);
    Json nr = Json::array();
    for (auto [a, b] : T.not_refuted_edges) nr.push_back(Json::array({T.poset.id(a), T.poset.id(b)}));
    j["not_refuted_edges"] = std::move(nr);
    j["poset"] = to_json(T.poset);
    return j;
}

inline Json to_json(const Verdict& v)
{
    Json j;
    j["property"] = v.property;
    j["qo"] = v.qo_id;
    j["verdict"] = to_string(v.kind);
    if (!v.rule.empty()) j["rule"] = v.rule;
    j["explanation"] = v.explanation;
    if (!v.witness_map.empty()) {
        Json m = Json::array();
        for (const auto& [x, y] : v.witness_map) m.push_back(pair(x, y));
        j["witness_map"] = std::move(m);
    }
    if (v.unmatched) j["unmatched"] = v.unmatched->to_string();
    j["pairs_searched"] = v.pairs_searched;
    j["universe"] = v.universe;
    return j;
}

inline Json to_json(const InterplayReport& r)
{
    Json j;
    j["status"] = r.passed() ? "Pass" : "Fail";
    j["edges_checked"] = r.edges_checked;
    Json v = Json::array();
    for (const auto& x : r.violations) v.push_back(Json::array({x.property, x.lower, x.upper}));
    j["violations"] = std::move(v);
    j["manis_not_special"] = r.manis_not_special;
    return j;
}

inline Json to_json(const SubtreeReport& r)
{
    Json j;
    j["property"] = r.property;
    j["provenance"] = r.provenance;
    j["status"] = r.problems.empty() ? "Pass" : "Fail";
    Json s = Json::array();
    for (const auto& [support, members] : r.subtrees) {
        Json e;
        e["support"] = support;
        e["members"] = members;
        s.push_back(std::move(e));
    }
    j["subtrees"] = std::move(s);
    j["problems"] = r.problems;
    return j;
}

inline Json to_json(const DependencyPartition& D)
{
    Json j;
    j["support"] = D.support;
    j["blocks"] = D.blocks;
    j["excluded_trivial"] = D.trivial ? Json(*D.trivial) : Json(nullptr);
    j["symmetric"] = D.symmetric;
    j["transitive"] = D.transitive;
    Json p = Json::array();
    for (const auto& x : D.pairs) {
        Json e;
        e["a"] = x.a;
        e["b"] = x.b;
        e["dependent"] = x.dependent;
        if (x.shared) e["shared"] = *x.shared;
        p.push_back(std::move(e));
    }
    j["pairs"] = std::move(p);
    return j;
}

inline Json to_json(const KaplanskyReport& r)
{
    Json j;
    j["K1"] = r.k1 ? "Pass" : "Fail";
    j["K2"] = r.k2 ? "Pass" : "Fail";
    j["chains"] = r.chains;
    Json c = Json::array();
    for (const auto& [lo, hi] : r.covers)
        c.push_back(Json::array({Json::array({lo.first, lo.second}), Json::array({hi.first, hi.second})}));
    j["covers"] = std::move(c);
    j["details"] = r.details;
    return j;
}

inline Json to_json(const Forest& F)
{
    Json j;
    Json trees = Json::array();
    for (const auto& t : F.trees) {
        Json e;
        e["support"] = t.support.name();
        e["tree"] = to_json(t.tree);
        trees.push_back(std::move(e));
    }
    j["trees"] = std::move(trees);
    Json cross = Json::array();
    for (const auto& [a, b] : F.cross_le) cross.push_back(Json::array({a, b}));
    j["cross_support_le"] = std::move(cross);
    return j;
}

inline Json to_json(const QcompReport& r)
{
    Json j;
    j["qo"] = r.qo_id;
    j["ideal"] = r.ideal;
    j["agree"] = r.agree();
    j["convexity"] = to_json(r.convexity);
    j["coarsening"] = to_json(r.coarsening);
    return j;
}

inline Json to_json(const ConvexityCharacterisation& c)
{
    Json j;
    j["qo"] = c.qo_id;
    j["special_witnessed"] = c.special_witnessed;
    j["all_larger_primes_nonconvex"] = c.all_larger_primes_nonconvex;
    j["agree"] = c.agree();
    Json p = Json::array();
    for (const auto& [ideal, d] : c.primes) p.push_back(Json::array({ideal, d}));
    j["larger_primes"] = std::move(p);
    return j;
}

} // namespace report

} // namespace qord
