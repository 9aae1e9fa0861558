// SPDX-License-Identifier: Apache-2.0
#pragma once

/**
 * @file acceptance.hpp
 * @brief The acceptance battery, criteria 1 to 9. Each criterion runs on
 * its own pinned universe and returns a JSON detail block; the overall
 * report carries no timings so it is reproducible byte for byte.
 */

#include <chrono>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qord/dot.hpp"
#include "qord/report.hpp"

namespace qord::acceptance {

struct Options {
    /// Replace Z:vp:2 by its swap mutant under the same id.
    bool corrupt_catalog = false;
};

struct Criterion {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string summary;
    Json details;
    double budget_seconds = 0; // 0: no budget
    double seconds = 0;        // measured; never serialised
};

inline const std::vector<Ring>& rings()
{
    static const std::vector<Ring> r{Ring::integers(), Ring::poly_uni(), Ring::poly_bi()};
    return r;
}

inline Universe default_universe(Ring r) { return Universe(r, UniverseBounds::defaults(r)); }

inline Catalog suite_catalog(Ring r, const Options& opt, int prime_bound = kDefaultPrimeBound)
{
    Catalog c = catalog(r, prime_bound);
    if (opt.corrupt_catalog && r == Ring::integers())
        for (auto& e : c.entries)
            if (e.id() == "Z:vp:2") {
                const QuasiOrder m = mutants::swap(e.qo);
                e.qo = e.qo.with_compare("Z:vp:2", [m](const Element& x, const Element& y) { return m.compare(x, y); });
            }
    return c;
}

namespace detail {

inline std::string yes(bool b) { return b ? "yes" : "no"; }

inline std::vector<CatalogEntry> with_support(const Catalog& c, const Ideal& s)
{
    std::vector<CatalogEntry> out;
    for (const auto& e : c.entries)
        if (e.qo.declared_support() == s) out.push_back(e);
    return out;
}

} // namespace detail

/// QR1-QR4 on every catalog entry, and the mutants of every non-trivial
/// entry.
inline Criterion criterion1(const Options& opt)
{
    Criterion c{1, "axiom battery", true, {}, Json::object(), 60, 0};
    std::size_t checked = 0, failed = 0, mutants_caught = 0, mutants_total = 0;
    Json rings_json = Json::array();
    for (Ring r : rings()) {
        const Universe U = default_universe(r);
        const Catalog cat = suite_catalog(r, opt);
        const auto reports = check_qr_axioms(cat.quasi_orders(), U);
        Json rj;
        rj["ring"] = r.name();
        rj["universe"] = U.descriptor();
        rj["universe_size"] = U.size();
        Json reps = Json::array();
        for (const auto& rep : reports) {
            ++checked;
            if (!rep.passed()) ++failed, c.pass = false;
            reps.push_back(report::to_json(rep));
        }
        rj["reports"] = std::move(reps);
        Json muts = Json::array();
        for (const auto& e : cat.entries) {
            if (e.qo.is_trivial()) continue;
            const MutationReport m = mutation_suite(e.qo, U);
            for (const auto& x : m.mutants) {
                ++mutants_total;
                if (x.caught()) ++mutants_caught;
            }
            if (!m.passed()) c.pass = false;
            muts.push_back(report::to_json(m));
        }
        rj["mutation"] = std::move(muts);
        rings_json.push_back(std::move(rj));
    }
    c.details["rings"] = std::move(rings_json);
    c.summary = std::to_string(checked - failed) + "/" + std::to_string(checked) + " catalog entries pass QR1-QR4; " +
                std::to_string(mutants_caught) + "/" + std::to_string(mutants_total) + " mutants caught";
    return c;
}

/// classify against declared kind; value tables for valuations; O1-O4 and
/// derived lemmas for every entry.
inline Criterion criterion2(const Options& opt)
{
    Criterion c{2, "dichotomy", true, {}, Json::object(), 0, 0};
    std::size_t vals = 0, ords = 0, bad = 0;
    Json entries = Json::array();
    for (Ring r : rings()) {
        const Universe U = default_universe(r);
        const Catalog cat = suite_catalog(r, opt);
        std::vector<QuasiOrder> orderings;
        for (const auto& e : cat.entries)
            if (classify(e.qo) == Kind::Ordering) orderings.push_back(e.qo);
        const std::vector<AxiomReport> ordering_reports = check_ordering_axioms(orderings, U);
        std::size_t next_ordering = 0;
        for (const auto& e : cat.entries) {
            Json j;
            j["qo"] = e.id();
            const Kind k = classify(e.qo);
            j["declared"] = to_string(e.qo.declared_kind());
            j["classified"] = to_string(k);
            bool ok = k == e.qo.declared_kind();
            try {
                if (k == Kind::Valuation) {
                    ++vals;
                    const ValueTable t = extract_valuation(e.qo, U);
                    j["value_table"] = report::to_json(t);
                    ok = ok && t.checks().passed();
                    if (e.qo.has_valuation()) {
                        const AxiomReport m = check_valuation_map(e.qo, U);
                        j["valuation_map"] = report::to_json(m);
                        ok = ok && m.passed();
                    }
                } else {
                    ++ords;
                    const AxiomReport& o = ordering_reports[next_ordering++];
                    j["ordering_axioms"] = report::to_json(o);
                    ok = ok && o.passed();
                }
                const AxiomReport l = check_derived_lemmas(e.qo, U);
                j["derived_lemmas"] = report::to_json(l);
                ok = ok && l.passed();
            } catch (const Error& ex) {
                j["error"] = ex.what();
                ok = false;
            }
            j["status"] = ok ? "Pass" : "Fail";
            if (!ok) ++bad, c.pass = false;
            entries.push_back(std::move(j));
        }
    }
    c.details["entries"] = std::move(entries);
    c.summary = std::to_string(vals) + " valuations with verified value tables, " + std::to_string(ords) +
                " orderings with O1-O4; " + std::to_string(bad) + " failing";
    return c;
}

/// Support-(0) tree on Z with primes up to 23 on [-12, 12].
inline Criterion criterion3(const Options& opt)
{
    Criterion c{3, "integer tree with primes up to 23", true, {}, Json::object(), 10, 0};
    const Ring r = Ring::integers();
    UniverseBounds b = UniverseBounds::defaults(r);
    b.magnitude = 12;
    const Universe U(r, b);
    const auto nodes = detail::with_support(suite_catalog(r, opt, 23), Ideal::zero(r));
    const std::size_t n = nodes.size();
    std::vector<RelationTable> tables;
    for (const auto& e : nodes) tables.emplace_back(e.qo, U);
    std::size_t top = n;
    for (std::size_t i = 0; i < n; ++i)
        if (nodes[i].qo.is_trivial()) top = i;
    c.details["universe"] = U.descriptor();
    c.details["nodes"] = Json::array();
    for (const auto& e : nodes) c.details["nodes"].push_back(e.id());
    if (top == n) {
        c.pass = false;
        c.summary = "no trivial node";
        return c;
    }

    std::size_t refuted = 0, directed = 0, unordered_ok = 0, unordered = 0;
    Json unrefuted = Json::array();
    Json witnesses = Json::array();
    bool top_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == top) continue;
        top_ok = top_ok && not_refuted(compare_qos(nodes[i].qo, nodes[top].qo, tables[i], tables[top], U));
        top_ok = top_ok && is_refuted(compare_qos(nodes[top].qo, nodes[i].qo, tables[top], tables[i], U));
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == top) continue;
            ++unordered;
            bool both = true;
            for (auto [a, d] : {std::pair{i, j}, std::pair{j, i}}) {
                ++directed;
                const Decision dec = compare_qos(nodes[a].qo, nodes[d].qo, tables[a], tables[d], U);
                if (const auto* rf = std::get_if<Refuted>(&dec)) {
                    ++refuted;
                    Json w;
                    w["lower"] = nodes[a].id();
                    w["upper"] = nodes[d].id();
                    w["witness"] = report::pair(rf->x, rf->y);
                    witnesses.push_back(std::move(w));
                } else {
                    both = false;
                    unrefuted.push_back(Json::array({nodes[a].id(), nodes[d].id()}));
                }
            }
            if (both) ++unordered_ok;
        }
    }
    c.details["maximum_is_trivial"] = top_ok;
    c.details["directed_refuted"] = refuted;
    c.details["directed_total"] = directed;
    c.details["witnesses"] = std::move(witnesses);
    c.details["not_refuted"] = std::move(unrefuted);
    c.pass = top_ok && refuted == directed;

    if (!c.pass) {
        c.details["analysis"] =
            "refuting A <= v_q needs 0 <=_A x <=_A y with v_q(y) > v_q(x) >= 0, so y is a nonzero multiple of q; "
            "for q > 12 no such y lies in [-12, 12]. The unrefuted comparisons are exactly those whose upper "
            "node is v_q with q in {13, 17, 19, 23}, including triv(0) <= v_q, so neither the pairwise "
            "refutations nor the separation of triv(0) from those leaves can be shown on this universe.";
        UniverseBounds wide = b;
        wide.magnitude = 23;
        const Universe W(r, wide);
        Json diag;
        diag["universe"] = W.descriptor();
        try {
            const Poset P = build_poset(nodes, W);
            const TreeCertificate T = check_tree(P, Ideal::zero(r));
            std::size_t leaves = 0;
            for (std::size_t i = 0; i < P.size(); ++i) {
                bool minimal = true;
                for (std::size_t j = 0; j < P.size(); ++j) minimal = minimal && !P.lt(j, i);
                if (minimal) ++leaves;
            }
            diag["tree_certified"] = true;
            diag["maximum"] = P.id(T.maximum);
            diag["leaves"] = leaves;
            diag["hasse_edges"] = P.hasse.size();
        } catch (const Error& ex) {
            diag["tree_certified"] = false;
            diag["error"] = ex.what();
        }
        c.details["diagnostic_wider_universe"] = std::move(diag);
    }
    c.summary = std::to_string(refuted) + "/" + std::to_string(directed) + " directed comparisons refuted on " +
                U.descriptor() + " (" + std::to_string(unordered_ok) + "/" + std::to_string(unordered) +
                " pairs refuted both ways); maximum triv(0): " + detail::yes(top_ok);
    return c;
}

/// The bivariate diamond.
inline Criterion criterion4(const Options& opt)
{
    Criterion c{4, "bivariate diamond", true, {}, Json::object(), 30, 0};
    const Ring r = Ring::poly_bi();
    const Universe U = default_universe(r);
    const Catalog cat = suite_catalog(r, opt);
    auto get = [&](const std::string& id) -> const CatalogEntry& { return *cat.find(id); };
    const auto& v = get("QXY:v");
    const auto& w = get("QXY:w");
    const auto& u = get("QXY:u");
    const auto& t0 = get("QXY:triv:0");
    const auto& tY = get("QXY:triv:Y");
    const Element X = parse_element(r, "X"), Y = parse_element(r, "Y");
    const Element X2 = parse_element(r, "X^2"), Y2 = parse_element(r, "Y^2");

    Json checks = Json::array();
    auto expect = [&](const std::string& what, bool ok, Json detail) {
        Json j;
        j["check"] = what;
        j["status"] = ok ? "Pass" : "Fail";
        j["detail"] = std::move(detail);
        checks.push_back(std::move(j));
        c.pass = c.pass && ok;
    };
    auto cmp = [&](const CatalogEntry& a, const CatalogEntry& b) { return compare_qos(a, b, U); };

    for (const auto* up : {&u, &w}) {
        const Decision d = cmp(v, *up);
        expect("v <= " + up->id(), not_refuted(d), report::to_json(d));
    }
    const Decision uw = cmp(u, w), wu = cmp(w, u);
    expect("u <= w refuted", is_refuted(uw), report::to_json(uw));
    expect("w <= u refuted", is_refuted(wu), report::to_json(wu));
    expect("(X, X^2) refutes u <= w", qord::detail::refutes(u.qo, w.qo, X, X2), report::pair(X, X2));
    expect("(Y, Y^2) refutes w <= u", qord::detail::refutes(w.qo, u.qo, Y, Y2), report::pair(Y, Y2));
    {
        // value comparison behind the first witness: w(X) = 1 < 2 = w(X^2), u(X) = u(X^2) = 0
        const auto& wv = w.qo.valuation();
        const auto& uv = u.qo.valuation();
        const bool ok = wv(X) == ExtValue::of(1) && wv(X2) == ExtValue::of(2) && uv(X) == ExtValue::of(0) &&
                        uv(X2) == ExtValue::of(0);
        Json vals;
        vals["w(X)"] = wv(X).to_string();
        vals["w(X^2)"] = wv(X2).to_string();
        vals["u(X)"] = uv(X).to_string();
        vals["u(X^2)"] = uv(X2).to_string();
        expect("values at (X, X^2)", ok, std::move(vals));
    }
    const Ideal qY = Ideal::parse(r, "(Y)");
    for (const auto* e : {&v, &w, &u}) {
        const Decision d = convexity_check(qY, e->qo, U);
        expect("(Y) convex for " + e->id(), not_refuted(d), report::to_json(d));
    }
    for (auto [a, b] : {std::pair{&v, &tY}, std::pair{&u, &t0}, std::pair{&u, &tY}, std::pair{&w, &tY}}) {
        const Decision d = cmp(*a, *b);
        expect(a->id() + " <= " + b->id(), not_refuted(d), report::to_json(d));
    }

    const Poset P = build_poset({v, w, u, t0, tY}, U);
    std::set<std::pair<std::string, std::string>> got, want{{"QXY:v", "QXY:w"},
                                                            {"QXY:v", "QXY:u"},
                                                            {"QXY:u", "QXY:triv:0"},
                                                            {"QXY:u", "QXY:triv:Y"},
                                                            {"QXY:w", "QXY:triv:Y"}};
    for (auto [a, b] : P.hasse) got.emplace(P.id(a), P.id(b));
    Json edges = Json::array();
    for (auto [a, b] : P.hasse) edges.push_back(Json::array({P.id(a), P.id(b)}));
    expect("diamond edge set", got == want, std::move(edges));
    c.details["checks"] = std::move(checks);
    c.details["dot"] = to_dot(P, "diamond");
    std::size_t passed = 0;
    for (const auto& j : c.details["checks"]) passed += j["status"] == "Pass";
    c.summary = std::to_string(passed) + "/" + std::to_string(c.details["checks"].size()) + " diamond checks pass";
    return c;
}

/// Fixed-support posets and tree certificates on every ring, Kaplansky
/// on the integer and univariate trees.
inline Criterion criterion5(const Options& opt)
{
    Criterion c{5, "partial order and tree certificates", true, {}, Json::object(), 0, 0};
    std::size_t trees = 0, kap = 0;
    Json rings_json = Json::array();
    for (Ring r : rings()) {
        const Universe U = default_universe(r);
        Json rj;
        rj["ring"] = r.name();
        try {
            const Forest F = forest_partition(suite_catalog(r, opt).entries, U);
            Json ts = Json::array();
            for (const auto& t : F.trees) {
                ++trees;
                Json tj;
                tj["support"] = t.support.name();
                tj["maximum"] = t.tree.poset.id(t.tree.maximum);
                Json br = Json::array();
                for (const auto& b : t.tree.branches) br.push_back(report::ids(t.tree.poset, b));
                tj["branches"] = std::move(br);
                if (r != Ring::poly_bi()) {
                    const KaplanskyReport K = kaplansky_check(t.tree);
                    tj["kaplansky"] = report::to_json(K);
                    ++kap;
                    c.pass = c.pass && K.k1 && K.k2;
                }
                ts.push_back(std::move(tj));
            }
            rj["trees"] = std::move(ts);
        } catch (const Error& ex) {
            rj["error"] = ex.what();
            c.pass = false;
        }
        rings_json.push_back(std::move(rj));
    }
    c.details["rings"] = std::move(rings_json);
    c.summary = std::to_string(trees) + " fixed-support trees certified, Kaplansky checked on " +
                std::to_string(kap) + (c.pass ? "" : "; failures present");
    return c;
}

/// Convexity against coarsening by the trivial quasi-ordering.
inline Criterion criterion6(const Options& opt)
{
    Criterion c{6, "convexity equivalence", true, {}, Json::object(), 0, 0};
    std::size_t total = 0, agree = 0;
    Json pairs = Json::array();
    for (Ring r : rings()) {
        const Universe U = default_universe(r);
        for (const auto& e : suite_catalog(r, opt).entries)
            for (const auto& q : shipped_primes(r, kDefaultPrimeBound)) {
                const QcompReport rep = qcomp_equivalence(e.qo, q, U);
                ++total;
                if (rep.agree()) ++agree;
                Json j;
                j["qo"] = rep.qo_id;
                j["ideal"] = rep.ideal;
                j["convex"] = decision_name(rep.convexity);
                j["coarser_than_trivial"] = decision_name(rep.coarsening);
                j["agree"] = rep.agree();
                pairs.push_back(std::move(j));
            }
    }
    c.pass = agree == total;
    c.details["pairs"] = std::move(pairs);
    c.summary = std::to_string(agree) + "/" + std::to_string(total) + " (quasi-ordering, prime) pairs agree";
    return c;
}

/// Special and Manis verdicts with their interplay.
inline Criterion criterion7(const Options& opt)
{
    Criterion c{7, "structure predicates", true, {}, Json::object(), 0, 0};
    Json checks = Json::array();
    auto expect = [&](const std::string& what, bool ok) {
        Json j;
        j["check"] = what;
        j["status"] = ok ? "Pass" : "Fail";
        checks.push_back(std::move(j));
        c.pass = c.pass && ok;
    };
    Json verdicts = Json::array();
    for (Ring r : rings()) {
        const Universe U = default_universe(r);
        const Catalog cat = suite_catalog(r, opt);
        try {
            const Poset P = build_poset(cat.entries, U);
            const Forest F = forest_partition(cat.entries, U);
            const Verdicts V = evaluate_verdicts(P, U);
            for (std::size_t i = 0; i < P.size(); ++i) {
                const auto& e = P.nodes[i];
                const auto& sp = V.special[i];
                const auto& mn = V.manis[i];
                verdicts.push_back(report::to_json(sp));
                verdicts.push_back(report::to_json(mn));
                expect(e.id() + " witness maps re-validate", revalidate(sp, e.qo) && revalidate(mn, e.qo));
                if (e.id() == "Z:leq") {
                    expect("Z:leq special witnessed", sp.kind == VerdictKind::Witnessed);
                    expect("Z:leq not Manis", mn.fails());
                }
                if (e.id().rfind("Z:vp:", 0) == 0)
                    expect(e.id() + " not special by exact rule",
                           sp.fails() && sp.rule == "nonnegative-value-semigroup");
                if (e.qo.is_trivial()) expect(e.id() + " Manis", mn.holds());
                if (classify(e.qo) == Kind::Ordering)
                    expect(e.id() + " Manis iff support maximal", mn.holds() == e.qo.declared_support().is_maximal());
                const ConvexityCharacterisation cc = convexity_characterisation(e, sp, U);
                expect(e.id() + " special iff larger primes non-convex", cc.agree());
            }
            const InterplayReport I = interplay_check(P, V);
            expect(r.name() + ": monotone along edges and Manis implies special", I.passed());
            const SubtreeReport S = subtree_check(F, P, V, false);
            expect(r.name() + ": special nodes form upward-closed subtrees", S.passed());
            const SubtreeReport M = subtree_check(F, P, V, true);
            expect(r.name() + ": Manis nodes form upward-closed subtrees (" + M.provenance + ")", M.passed());
        } catch (const Error& ex) {
            expect(r.name() + ": " + ex.what(), false);
        }
    }
    c.details["checks"] = std::move(checks);
    c.details["verdicts"] = std::move(verdicts);
    std::size_t passed = 0;
    for (const auto& j : c.details["checks"]) passed += j["status"] == "Pass";
    c.summary = std::to_string(passed) + "/" + std::to_string(c.details["checks"].size()) + " predicate checks pass";
    return c;
}

/// Dependency blocks on the fixed-support trees.
inline Criterion criterion8(const Options& opt)
{
    Criterion c{8, "dependency", true, {}, Json::object(), 0, 0};
    Json trees = Json::array();
    bool z_singletons = false, qx_shared = false;
    for (Ring r : rings()) {
        const Universe U = default_universe(r);
        try {
            const Forest F = forest_partition(suite_catalog(r, opt).entries, U);
            for (const auto& t : F.trees) {
                const DependencyPartition D = dependency_classes(t.tree);
                c.pass = c.pass && D.symmetric && D.transitive;
                Json j = report::to_json(D);
                j["ring"] = r.name();
                trees.push_back(std::move(j));
                if (!(t.support == Ideal::zero(r))) continue;
                auto block_of = [&](const std::string& id) -> const std::vector<std::string>* {
                    for (const auto& b : D.blocks)
                        if (std::find(b.begin(), b.end(), id) != b.end()) return &b;
                    return nullptr;
                };
                if (r == Ring::integers()) {
                    z_singletons = true;
                    for (const char* id : {"Z:leq", "Z:vp:2", "Z:vp:3", "Z:vp:5"}) {
                        const auto* b = block_of(id);
                        z_singletons = z_singletons && b && b->size() == 1;
                    }
                }
                if (r == Ring::poly_uni()) {
                    const auto* b = block_of("QX:Pna");
                    qx_shared = b && std::find(b->begin(), b->end(), "QX:vdeg") != b->end();
                }
            }
        } catch (const Error& ex) {
            c.pass = false;
            c.details["error"] = ex.what();
        }
    }
    c.details["trees"] = std::move(trees);
    c.details["integer_singletons"] = z_singletons;
    c.details["Pna_vdeg_share_block"] = qx_shared;
    c.pass = c.pass && z_singletons && qx_shared;
    c.summary = std::string("integer blocks singleton: ") + detail::yes(z_singletons) +
                "; QX:Pna with QX:vdeg: " + detail::yes(qx_shared) + "; symmetric and transitive: " +
                detail::yes(c.pass);
    return c;
}

inline Json criterion_json(const Criterion& c)
{
    Json j;
    j["id"] = c.id;
    j["title"] = c.title;
    j["status"] = c.pass ? "Pass" : "Fail";
    j["summary"] = c.summary;
    if (c.budget_seconds > 0) j["budget_seconds"] = c.budget_seconds;
    j["details"] = c.details;
    return j;
}

inline Criterion timed(const std::function<Criterion(const Options&)>& f, const Options& opt)
{
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c = f(opt);
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_seconds > 0 && c.seconds > c.budget_seconds) {
        c.pass = false;
        c.summary += "; runtime budget exceeded";
    }
    return c;
}

inline std::vector<Criterion> run_core(const Options& opt)
{
    const std::vector<std::function<Criterion(const Options&)>> fs{criterion1, criterion2, criterion3, criterion4,
                                                                     criterion5, criterion6, criterion7, criterion8};
    std::vector<Criterion> out;
    for (const auto& f : fs) out.push_back(timed(f, opt));
    return out;
}

inline Json core_json(const std::vector<Criterion>& cs)
{
    Json a = Json::array();
    for (const auto& c : cs) a.push_back(criterion_json(c));
    return a;
}

/// Determinism: a second run of criteria 1-8 serialises to the same bytes.
inline Criterion criterion9(const Options& opt, const std::vector<Criterion>& first)
{
    Criterion c{9, "determinism", true, {}, Json::object(), 0, 0};
    const auto t0 = std::chrono::steady_clock::now();
    const std::string a = core_json(first).dump(2);
    const std::string b = core_json(run_core(opt)).dump(2);
    c.pass = a == b;
    c.details["bytes"] = a.size();
    if (!c.pass) {
        std::size_t k = 0;
        while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
        c.details["first_difference_at"] = k;
    }
    c.summary = c.pass ? "second run of criteria 1-8 is byte-identical (" + std::to_string(a.size()) + " bytes)"
                       : "reports differ";
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

inline std::vector<Criterion> run_suite(const Options& opt)
{
    std::vector<Criterion> out = run_core(opt);
    out.push_back(criterion9(opt, out));
    return out;
}

inline bool all_pass(const std::vector<Criterion>& cs)
{
    return std::all_of(cs.begin(), cs.end(), [](const Criterion& c) { return c.pass; });
}

} // namespace qord::acceptance
