// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: catalog, check, compare, tree, forest, convex,
// special, manis, suite. Exit codes: 0 success, 1 a mathematical check
// failed, 2 usage or configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qord/qord.hpp"

namespace {

using qord::Json;

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Every setting a run depends on. Serialised into the report so a run can
/// be repeated from its echo alone.
struct RunConfig {
    std::string command;
    std::optional<std::string> ring;
    std::optional<long long> bound;
    std::optional<unsigned> max_exp;
    std::optional<unsigned> max_terms;
    std::optional<std::string> coeffs;
    std::optional<unsigned> samples;
    std::optional<std::uint64_t> seed;
    std::optional<int> prime_bound;
    std::optional<std::string> support;
    std::optional<std::string> ideal;
    std::optional<std::string> mutant;
    std::optional<std::string> relation;
    std::vector<std::string> ids;
    bool corrupt_catalog = false;
    std::string out;
    std::string dot;
    std::string config_file;
    bool json = false;

    int prime_bound_or_default() const { return prime_bound.value_or(qord::kDefaultPrimeBound); }

    qord::Ring ring_or(const std::optional<qord::Ring>& fallback = std::nullopt) const
    {
        if (ring) return qord::parse_ring(*ring);
        if (fallback) return *fallback;
        throw UsageError("--ring is required for '" + command + "'");
    }

    qord::UniverseBounds bounds(qord::Ring r) const
    {
        qord::UniverseBounds b = qord::UniverseBounds::defaults(r);
        if (bound) b.magnitude = *bound;
        if (max_exp) b.max_exp = *max_exp;
        if (max_terms) b.max_terms = *max_terms;
        if (samples) b.samples = *samples;
        if (seed) b.seed = *seed;
        if (coeffs) {
            b.coeffs.clear();
            std::stringstream ss(*coeffs);
            std::string part;
            while (std::getline(ss, part, ','))
                if (!part.empty()) b.coeffs.push_back(qord::parse_rational(part));
        }
        return b;
    }

    Json echo() const
    {
        Json j;
        j["command"] = command;
        auto put = [&](const char* key, const auto& opt) {
            if (opt) j[key] = *opt;
        };
        put("ring", ring);
        put("bound", bound);
        put("max_exp", max_exp);
        put("max_terms", max_terms);
        put("coeffs", coeffs);
        put("samples", samples);
        put("seed", seed);
        put("prime_bound", prime_bound);
        put("support", support);
        put("ideal", ideal);
        put("mutant", mutant);
        put("relation", relation);
        if (!ids.empty()) j["ids"] = ids;
        if (corrupt_catalog) j["corrupt_catalog"] = true;
        return j;
    }
};

/// Fills every setting not given on the command line from a JSON config.
void apply_config_file(RunConfig& c)
{
    if (c.config_file.empty()) return;
    std::ifstream in(c.config_file);
    if (!in) throw UsageError("cannot open config file " + c.config_file);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("config file " + c.config_file + " is not valid JSON: " + e.what());
    }
    if (!j.is_object()) throw UsageError("config file must hold a JSON object");
    static const std::set<std::string> known{"ring",    "bound",       "max_exp", "max_terms", "coeffs",
                                             "samples", "seed",        "prime_bound", "support", "ideal",
                                             "mutant",  "relation",    "ids",     "corrupt_catalog"};
    for (const auto& [k, v] : j.items())
        if (!known.count(k)) throw UsageError("unknown config key '" + k + "'");
    try {
        auto fill = [&](const char* key, auto& opt) {
            using T = typename std::decay_t<decltype(opt)>::value_type;
            if (!opt && j.contains(key)) opt = j[key].template get<T>();
        };
        fill("ring", c.ring);
        fill("bound", c.bound);
        fill("max_exp", c.max_exp);
        fill("max_terms", c.max_terms);
        fill("samples", c.samples);
        fill("seed", c.seed);
        fill("prime_bound", c.prime_bound);
        fill("support", c.support);
        fill("ideal", c.ideal);
        fill("mutant", c.mutant);
        fill("relation", c.relation);
        if (!c.coeffs && j.contains("coeffs")) {
            const auto& v = j["coeffs"];
            if (v.is_array()) {
                std::string s;
                for (const auto& x : v) s += (s.empty() ? "" : ",") + (x.is_string() ? x.get<std::string>() : x.dump());
                c.coeffs = s;
            } else {
                c.coeffs = v.get<std::string>();
            }
        }
        if (c.ids.empty() && j.contains("ids")) c.ids = j["ids"].get<std::vector<std::string>>();
        if (!c.corrupt_catalog && j.contains("corrupt_catalog")) c.corrupt_catalog = j["corrupt_catalog"].get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("config value has the wrong type: ") + e.what());
    }
}

struct Outcome {
    Json results;
    bool pass = true;
    std::string text; // human-readable lines
};

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << content;
}

std::string decision_text(const qord::Decision& d)
{
    std::string s = qord::decision_name(d);
    if (const auto* r = std::get_if<qord::Refuted>(&d)) {
        s += " (" + r->x.to_string() + ", " + r->y.to_string() + ")";
        if (r->cited) s += ", cited (" + r->cited->first.to_string() + ", " + r->cited->second.to_string() + ")";
    } else if (const auto* v = std::get_if<qord::Verified>(&d)) {
        s += " [" + v->rule + "] " + v->citation;
    } else {
        s += " after " + std::to_string(std::get<qord::NotRefuted>(d).pairs_checked) + " pairs";
    }
    return s;
}

std::string failure_text(const qord::AxiomReport& r)
{
    const auto* f = r.first_failure();
    if (!f) return "Pass";
    std::string w;
    for (const auto& x : f->witness) w += (w.empty() ? "" : ", ") + x.to_string();
    return "Fail at " + f->axiom + " (" + f->variables + ") = (" + w + ")";
}

qord::CatalogEntry resolve(const RunConfig& c, const std::string& id)
{
    try {
        return qord::find_entry(id, c.prime_bound_or_default());
    } catch (const qord::Error& e) {
        throw UsageError(e.what());
    }
}

// ---------------------------------------------------------------------------

Outcome cmd_catalog(const RunConfig& c)
{
    const qord::Ring r = c.ring_or();
    const qord::Catalog cat = qord::catalog(r, c.prime_bound_or_default());
    Outcome o;
    o.results = Json::array();
    for (const auto& e : cat.entries) {
        Json j = qord::report::node_json(e);
        j["description"] = e.description;
        Json facts = Json::array();
        for (const auto& f : e.facts) {
            Json fj;
            fj["coarser"] = f.coarser;
            fj["holds"] = f.holds;
            if (f.witness) fj["witness"] = qord::report::pair(f.witness->first, f.witness->second);
            fj["citation"] = f.citation;
            facts.push_back(std::move(fj));
        }
        j["facts"] = std::move(facts);
        o.results.push_back(std::move(j));
        o.text += e.id() + "  " + qord::to_string(e.qo.declared_kind()) + "  support " +
                  e.qo.declared_support().name() + "  " + e.qo.provenance() + "\n";
    }
    return o;
}

qord::QuasiOrder apply_mutant(const RunConfig& c, const qord::QuasiOrder& qo, const qord::Universe& U)
{
    if (!c.mutant) return qo;
    if (*c.mutant == "swap") return qord::mutants::swap(qo);
    if (*c.mutant == "collapse") return qord::mutants::sign_collapse(qo);
    if (*c.mutant == "break") return qord::mutants::break_transitivity(qo, U);
    throw UsageError("unknown mutant '" + *c.mutant + "' (expected swap, collapse or break)");
}

Outcome cmd_check(const RunConfig& c)
{
    if (c.ids.empty()) throw UsageError("check needs at least one quasi-ordering id");
    Outcome o;
    o.results = Json::array();
    for (const auto& id : c.ids) {
        const qord::CatalogEntry e = resolve(c, id);
        const qord::Ring r = e.qo.ring();
        if (c.ring && qord::parse_ring(*c.ring) != r) throw UsageError(id + " does not live on " + *c.ring);
        const qord::Universe U(r, c.bounds(r));
        const qord::QuasiOrder qo = apply_mutant(c, e.qo, U);
        Json j;
        j["qo"] = qo.id();
        j["universe"] = U.descriptor();
        const qord::Kind k = qord::classify(qo);
        j["declared"] = qord::to_string(e.qo.declared_kind());
        j["classified"] = qord::to_string(k);
        bool ok = true;
        std::string line = qo.id() + "  " + qord::to_string(k);

        const qord::AxiomReport qr = qord::check_qr_axioms(qo, U);
        j["qr_axioms"] = qord::report::to_json(qr);
        ok = ok && qr.passed();
        line += "\n  QR: " + failure_text(qr);
        if (k != e.qo.declared_kind()) {
            ok = false;
            line += "\n  classify disagrees with the declared kind " + std::string(qord::to_string(e.qo.declared_kind()));
        }
        try {
            (void)qord::support_of(qo, U);
            j["support"] = "Pass";
        } catch (const qord::VerificationError& ex) {
            j["support"] = ex.what();
            ok = false;
            line += std::string("\n  support: ") + ex.what();
        }
        const qord::AxiomReport lem = qord::check_derived_lemmas(qo, U);
        j["derived_lemmas"] = qord::report::to_json(lem);
        ok = ok && lem.passed();
        line += "\n  derived lemmas: " + failure_text(lem);
        if (k == qord::Kind::Ordering) {
            const qord::AxiomReport ord = qord::check_ordering_axioms(qo, U);
            j["ordering_axioms"] = qord::report::to_json(ord);
            ok = ok && ord.passed();
            line += "\n  ordered ring: " + failure_text(ord);
        } else {
            try {
                const qord::ValueTable t = qord::extract_valuation(qo, U);
                j["value_table"] = qord::report::to_json(t);
                ok = ok && t.checks().passed();
                line += "\n  value table: " + std::to_string(t.classes().size()) + " classes, " +
                        failure_text(t.checks());
            } catch (const qord::VerificationError& ex) {
                j["value_table"] = ex.what();
                ok = false;
                line += std::string("\n  value table: ") + ex.what();
            }
            if (qo.has_valuation()) {
                const qord::AxiomReport m = qord::check_valuation_map(qo, U);
                j["valuation_map"] = qord::report::to_json(m);
                ok = ok && m.passed();
                line += "\n  valuation map: " + failure_text(m);
            }
        }
        j["status"] = ok ? "Pass" : "Fail";
        o.pass = o.pass && ok;
        o.results.push_back(std::move(j));
        o.text += line + "\n";
    }
    return o;
}

Outcome cmd_compare(const RunConfig& c)
{
    if (c.ids.size() != 2) throw UsageError("compare needs exactly two quasi-ordering ids");
    const qord::CatalogEntry a = resolve(c, c.ids[0]), b = resolve(c, c.ids[1]);
    if (a.qo.ring() != b.qo.ring())
        throw UsageError(a.id() + " and " + b.id() + " live on different rings");
    const qord::Ring r = a.qo.ring();
    const qord::Universe U(r, c.bounds(r));
    const qord::Decision d = qord::compare_qos(a, b, U);
    Outcome o;
    o.results["lower"] = a.id();
    o.results["upper"] = b.id();
    o.results["universe"] = U.descriptor();
    const qord::Json dj = qord::report::to_json(d);
    for (const auto& [k, v] : dj.items()) o.results[k] = v;
    o.text = a.id() + " <= " + b.id() + ": " + decision_text(d) + "\n";
    return o;
}

std::vector<qord::CatalogEntry> entries_with_support(const qord::Catalog& cat, const qord::Ideal& s)
{
    std::vector<qord::CatalogEntry> out;
    for (const auto& e : cat.entries)
        if (e.qo.declared_support() == s) out.push_back(e);
    return out;
}

std::string branches_text(const qord::TreeCertificate& T)
{
    std::string s;
    for (const auto& b : T.branches) {
        s += "  branch:";
        for (auto i : b) s += " " + T.poset.id(i);
        s += "\n";
    }
    return s;
}

Outcome cmd_tree(const RunConfig& c)
{
    const qord::Ring r = c.ring_or();
    if (!c.support) throw UsageError("tree needs --support");
    qord::Ideal s = qord::Ideal::zero(r);
    try {
        s = qord::Ideal::parse(r, *c.support);
    } catch (const qord::Error& e) {
        throw UsageError(e.what());
    }
    const qord::Universe U(r, c.bounds(r));
    const auto nodes = entries_with_support(qord::catalog(r, c.prime_bound_or_default()), s);
    if (nodes.empty()) throw UsageError("no catalog entry has support " + s.name());
    Outcome o;
    const qord::Forest F = qord::forest_partition(nodes, U);
    const qord::TreeCertificate& T = F.trees.front().tree;
    const qord::Poset P = qord::build_poset(nodes, U);
    const qord::Verdicts V = qord::evaluate_verdicts(P, U);
    const qord::DependencyPartition D = qord::dependency_classes(T);
    o.results["tree"] = qord::report::to_json(T);
    if (T.poset.size() <= 20) {
        const qord::KaplanskyReport K = qord::kaplansky_check(T);
        o.results["kaplansky"] = qord::report::to_json(K);
        o.pass = o.pass && K.k1 && K.k2;
        o.text += std::string("  Kaplansky K1 ") + (K.k1 ? "Pass" : "Fail") + ", K2 " + (K.k2 ? "Pass" : "Fail") + "\n";
    }
    o.results["dependency"] = qord::report::to_json(D);
    const qord::SubtreeReport S = qord::subtree_check(F, P, V, false);
    const qord::SubtreeReport M = qord::subtree_check(F, P, V, true);
    o.results["special_subtree"] = qord::report::to_json(S);
    o.results["manis_subtree"] = qord::report::to_json(M);
    o.pass = o.pass && D.symmetric && D.transitive && S.passed() && M.passed();
    Json notes = Json::array();
    if (r == qord::Ring::poly_uni() && s.is_zero() && P.index_of("QX:Pa") && P.index_of("QX:w")) {
        const auto pa = *P.index_of("QX:Pa"), w = *P.index_of("QX:w");
        if (P.le(pa, w))
            notes.push_back("QX:Pa <= QX:w is not refuted by the computed relation; a drawing with QX:Pa as "
                            "its own branch directly under the trivial node disagrees with it; the computed relation is "
                            "reported unchanged");
    }
    o.results["notes"] = notes;
    o.text = "tree at " + s.name() + " on " + U.descriptor() + ", maximum " + T.poset.id(T.maximum) + "\n" +
             branches_text(T) + o.text;
    std::string blocks;
    for (const auto& b : D.blocks) {
        blocks += " {";
        for (std::size_t i = 0; i < b.size(); ++i) blocks += (i ? ", " : "") + b[i];
        blocks += "}";
    }
    o.text += "  dependency blocks:" + blocks + "\n";
    for (const auto& n : notes) o.text += "  note: " + n.get<std::string>() + "\n";
    if (!c.dot.empty()) write_file(c.dot, qord::to_dot(T.poset, "tree"));
    return o;
}

Outcome cmd_forest(const RunConfig& c)
{
    const qord::Ring r = c.ring_or();
    const bool with_le = c.relation && *c.relation == "le";
    if (c.relation && !with_le && *c.relation != "primed")
        throw UsageError("--relation must be 'le' or 'primed'");
    const qord::Universe U(r, c.bounds(r));
    const qord::Catalog cat = qord::catalog(r, c.prime_bound_or_default());
    const qord::Forest F = qord::forest_partition(cat.entries, U);
    Outcome o;
    Json j = qord::report::to_json(F);
    if (!with_le) j.erase("cross_support_le");
    o.results = std::move(j);
    o.text = std::to_string(F.trees.size()) + " trees on " + U.descriptor() + "\n";
    for (const auto& t : F.trees) {
        o.text += "tree at " + t.support.name() + ", maximum " + t.tree.poset.id(t.tree.maximum) + "\n";
        o.text += branches_text(t.tree);
    }
    if (with_le)
        for (const auto& [a, b] : F.cross_le) o.text += "  cross-support " + a + " <= " + b + " (outside <=')\n";
    if (!c.dot.empty()) {
        write_file(c.dot, qord::to_dot(F, with_le));
        const std::string stem = c.dot.size() > 4 && c.dot.substr(c.dot.size() - 4) == ".dot"
                                     ? c.dot.substr(0, c.dot.size() - 4)
                                     : c.dot;
        for (const auto& t : F.trees)
            write_file(stem + "." + t.support.short_name() + ".dot", qord::to_dot(t.tree.poset, "tree"));
    }
    return o;
}

Outcome cmd_convex(const RunConfig& c)
{
    const qord::Ring r = c.ring_or(c.ids.empty() ? std::nullopt : std::optional(qord::ring_of_id(c.ids.front())));
    const qord::Universe U(r, c.bounds(r));
    std::vector<qord::CatalogEntry> entries;
    if (c.ids.empty())
        entries = qord::catalog(r, c.prime_bound_or_default()).entries;
    else
        for (const auto& id : c.ids) entries.push_back(resolve(c, id));
    std::vector<qord::Ideal> ideals;
    if (c.ideal) {
        try {
            ideals.push_back(qord::Ideal::parse(r, *c.ideal));
        } catch (const qord::Error& e) {
            throw UsageError(e.what());
        }
    } else {
        ideals = qord::shipped_primes(r, c.prime_bound_or_default());
    }
    Outcome o;
    o.results = Json::array();
    for (const auto& e : entries) {
        if (e.qo.ring() != r) throw UsageError(e.id() + " does not live on " + r.name());
        for (const auto& q : ideals) {
            const qord::QcompReport rep = qord::qcomp_equivalence(e.qo, q, U);
            o.pass = o.pass && rep.agree();
            o.results.push_back(qord::report::to_json(rep));
            o.text += e.id() + " / " + q.name() + ": convex " + decision_text(rep.convexity) + "; coarser than trivial " +
                      decision_text(rep.coarsening) + (rep.agree() ? "" : "  DISAGREE") + "\n";
        }
    }
    return o;
}

Outcome cmd_predicate(const RunConfig& c, bool manis)
{
    const qord::Ring r = c.ring_or(c.ids.empty() ? std::nullopt : std::optional(qord::ring_of_id(c.ids.front())));
    const qord::Universe U(r, c.bounds(r));
    std::vector<qord::CatalogEntry> entries;
    if (c.ids.empty())
        entries = qord::catalog(r, c.prime_bound_or_default()).entries;
    else
        for (const auto& id : c.ids) entries.push_back(resolve(c, id));
    Outcome o;
    o.results = Json::array();
    for (const auto& e : entries) {
        if (e.qo.ring() != r) throw UsageError(e.id() + " does not live on " + r.name());
        const qord::Verdict v = manis ? qord::is_manis(e, U) : qord::is_special(e, U);
        if (!qord::revalidate(v, e.qo)) o.pass = false;
        o.results.push_back(qord::report::to_json(v));
        o.text += e.id() + ": " + qord::to_string(v.kind) + (v.rule.empty() ? "" : " [" + v.rule + "]") + "  " +
                  v.explanation + "\n";
    }
    return o;
}

Outcome cmd_suite(const RunConfig& c)
{
    qord::acceptance::Options opt;
    opt.corrupt_catalog = c.corrupt_catalog;
    const auto cs = qord::acceptance::run_suite(opt);
    Outcome o;
    o.results = Json::array();
    for (const auto& x : cs) {
        o.results.push_back(qord::acceptance::criterion_json(x));
        o.text += "criterion " + std::to_string(x.id) + " " + (x.pass ? "PASS" : "FAIL") + "  " + x.title + ": " +
                  x.summary + "\n";
        if (!x.pass && o.pass) {
            o.pass = false;
            o.text += "first failing criterion: " + std::to_string(x.id) + "\n";
        }
    }
    return o;
}

int run(RunConfig& c)
{
    apply_config_file(c);
    Outcome o;
    if (c.command == "catalog") o = cmd_catalog(c);
    else if (c.command == "check") o = cmd_check(c);
    else if (c.command == "compare") o = cmd_compare(c);
    else if (c.command == "tree") o = cmd_tree(c);
    else if (c.command == "forest") o = cmd_forest(c);
    else if (c.command == "convex") o = cmd_convex(c);
    else if (c.command == "special") o = cmd_predicate(c, false);
    else if (c.command == "manis") o = cmd_predicate(c, true);
    else if (c.command == "suite") o = cmd_suite(c);
    else throw UsageError("unknown command");

    Json report;
    report["tool"] = qord::kVersion;
    report["config"] = c.echo();
    report["status"] = o.pass ? "Pass" : "Fail";
    report["results"] = o.results;
    const std::string doc = report.dump(2) + "\n";
    if (!c.out.empty()) write_file(c.out, doc);
    if (c.json)
        std::cout << doc;
    else
        std::cout << o.text;
    return o.pass ? kOk : kMathFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"qord: quasi-orderings on Z, Q[X] and Q[X,Y]"};
    app.require_subcommand(1, 1);
    RunConfig c;

    auto shared = [&](CLI::App* sub) {
        sub->add_option_function<std::string>("--ring", [&](const std::string& v) { c.ring = v; }, "Z, QX or QXY");
        sub->add_option_function<long long>("--bound", [&](long long v) { c.bound = v; }, "integer magnitude bound B");
        sub->add_option_function<unsigned>("--max-exp", [&](unsigned v) { c.max_exp = v; }, "exponent bound D");
        sub->add_option_function<unsigned>("--max-terms", [&](unsigned v) { c.max_terms = v; }, "term bound T");
        sub->add_option_function<std::string>("--coeffs", [&](const std::string& v) { c.coeffs = v; },
                                              "coefficient list C, comma separated");
        sub->add_option_function<unsigned>("--samples", [&](unsigned v) { c.samples = v; }, "seeded extra samples S");
        sub->add_option_function<std::uint64_t>("--seed", [&](std::uint64_t v) { c.seed = v; }, "sampling seed");
        sub->add_option_function<int>("--prime-bound", [&](int v) { c.prime_bound = v; },
                                      "largest prime p for Z:vp:p and (p)");
        sub->add_option("--out", c.out, "write the JSON report here");
        sub->add_option("--dot", c.dot, "write the Hasse diagram here");
        sub->add_option("--config", c.config_file, "JSON config; command-line flags take precedence");
        sub->add_flag("--json", c.json, "print the JSON report instead of text");
    };

    auto* catalog = app.add_subcommand("catalog", "list catalog entries");
    auto* check = app.add_subcommand("check", "axioms, derived lemmas, classification and value table");
    auto* compare = app.add_subcommand("compare", "decide coarsening of two quasi-orderings");
    auto* tree = app.add_subcommand("tree", "certify the fixed-support tree");
    auto* forest = app.add_subcommand("forest", "partition the catalog into fixed-support trees");
    auto* convex = app.add_subcommand("convex", "convexity against coarsening by the trivial quasi-ordering");
    auto* special = app.add_subcommand("special", "specialness verdicts");
    auto* manis = app.add_subcommand("manis", "Manis verdicts");
    auto* suite = app.add_subcommand("suite", "run the acceptance battery");
    for (auto* s : {catalog, check, compare, tree, forest, convex, special, manis, suite}) shared(s);
    for (auto* s : {check, compare, convex, special, manis}) s->add_option("ids", c.ids, "quasi-ordering ids");
    check->add_option_function<std::string>("--mutant", [&](const std::string& v) { c.mutant = v; },
                                            "swap, collapse or break");
    tree->add_option_function<std::string>("--support", [&](const std::string& v) { c.support = v; },
                                           "support ideal, e.g. 0, 2, X, X,Y");
    forest->add_option_function<std::string>("--relation", [&](const std::string& v) { c.relation = v; },
                                              "'le' also reports cross-support coarsenings");
    convex->add_option_function<std::string>("--ideal", [&](const std::string& v) { c.ideal = v; },
                                             "prime ideal; default all shipped primes");
    suite->add_flag("--corrupt-catalog", c.corrupt_catalog, "replace Z:vp:2 by its swap mutant");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    c.command = app.get_subcommands().front()->get_name();
    try {
        return run(c);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const qord::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const qord::RingMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const qord::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const qord::VerificationError& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kMathFailure;
    }
}
