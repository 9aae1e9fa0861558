// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <regex>
#include <set>
#include <sstream>

#include "qord/catalog.hpp"
#include "qord/dot.hpp"
#include "qord/report.hpp"

using namespace qord;

namespace {

Universe defaults(Ring r) { return Universe(r, UniverseBounds::defaults(r)); }

std::set<std::pair<std::string, std::string>> dot_edges(const std::string& dot)
{
    static const std::regex edge(R"re(^\s*"([^"]+)" -> "([^"]+)")re");
    std::set<std::pair<std::string, std::string>> out;
    std::istringstream in(dot);
    std::string line;
    std::smatch m;
    while (std::getline(in, line))
        if (std::regex_search(line, m, edge)) out.emplace(m[1], m[2]);
    return out;
}

} // namespace

TEST(Report, RefutationWitnessParsesBack)
{
    const Ring R = Ring::poly_bi();
    const Universe U = defaults(R);
    const Poset P = build_poset(catalog(R).entries, U);
    const Json j = report::to_json(P);
    std::size_t refuted = 0;
    for (const auto& rel : j["relation"]) {
        if (rel["decision"] != "Refuted") continue;
        ++refuted;
        const auto lo = find_entry(rel["lower"].get<std::string>()), hi = find_entry(rel["upper"].get<std::string>());
        const Element x = parse_element(R, rel["witness"][0].get<std::string>());
        const Element y = parse_element(R, rel["witness"][1].get<std::string>());
        EXPECT_TRUE(detail::refutes(lo.qo, hi.qo, x, y)) << rel.dump();
        if (rel.contains("cited_witness")) {
            const Element cx = parse_element(R, rel["cited_witness"][0].get<std::string>());
            const Element cy = parse_element(R, rel["cited_witness"][1].get<std::string>());
            EXPECT_TRUE(detail::refutes(lo.qo, hi.qo, cx, cy));
        }
    }
    EXPECT_GT(refuted, 0u);
}

TEST(Report, AxiomFailureWitnessParsesBack)
{
    const Universe U = defaults(Ring::integers());
    const auto m = mutants::swap(find_entry("Z:leq").qo);
    const Json j = report::to_json(check_qr_axioms(m, U));
    EXPECT_EQ(j["status"], "Fail");
    for (const auto& o : j["outcomes"]) {
        if (o["axiom"] != "QR1") continue;
        ASSERT_EQ(o["status"], "Fail");
        const Element a = parse_element(Ring::integers(), o["witness"][0].get<std::string>());
        const Element b = parse_element(Ring::integers(), o["witness"][1].get<std::string>());
        EXPECT_FALSE(m.lt(a, b));
    }
}

TEST(Report, FieldOrderIsStable)
{
    const Universe U = defaults(Ring::integers());
    const Json j = report::to_json(check_qr_axioms(find_entry("Z:leq").qo, U));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"qo", "universe", "status", "outcomes"}));
    EXPECT_FALSE(j["outcomes"][0].contains("witness"));
}

TEST(Report, PosetJsonIsDeterministic)
{
    const Universe U = defaults(Ring::poly_uni());
    const auto a = report::to_json(build_poset(catalog(Ring::poly_uni()).entries, U)).dump(2);
    const auto b = report::to_json(build_poset(catalog(Ring::poly_uni()).entries, U)).dump(2);
    EXPECT_EQ(a, b);
}

TEST(Report, DotEdgesAreTheHasseEdges)
{
    for (Ring r : {Ring::integers(), Ring::poly_uni(), Ring::poly_bi()}) {
        const Poset P = build_poset(catalog(r).entries, defaults(r));
        std::set<std::pair<std::string, std::string>> hasse;
        for (auto [a, b] : P.hasse) hasse.emplace(P.id(a), P.id(b));
        const std::string dot = to_dot(P);
        EXPECT_EQ(dot_edges(dot), hasse) << r.name();
        EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
    }
}

TEST(Report, DotMarksMaximumAndUnprovenEdges)
{
    const Ring Z = Ring::integers();
    std::vector<CatalogEntry> nodes{find_entry("Z:vp:2"), find_entry("Z:triv:2")};
    const Poset P = build_poset(nodes, defaults(Z));
    const std::string dot = to_dot(P);
    EXPECT_NE(dot.find("\"Z:triv:2\" [label=\"Z:triv:2\\nValuation\", peripheries=2]"), std::string::npos) << dot;
    EXPECT_NE(dot.find("\"Z:vp:2\" -> \"Z:triv:2\" [style=dashed]"), std::string::npos) << dot;
}

TEST(Report, ForestDotHasOneClusterPerSupport)
{
    const Universe U = defaults(Ring::poly_bi());
    const Forest F = forest_partition(catalog(Ring::poly_bi()).entries, U);
    const std::string dot = to_dot(F, true);
    std::size_t clusters = 0;
    for (std::size_t pos = 0; (pos = dot.find("subgraph", pos)) != std::string::npos; ++pos) ++clusters;
    EXPECT_EQ(clusters, F.trees.size());
    EXPECT_NE(dot.find("style=dotted"), std::string::npos);
}
