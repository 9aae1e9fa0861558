// SPDX-License-Identifier: Apache-2.0
#pragma once

/**
 * @file dot.hpp
 * @brief Graphviz export of Hasse diagrams. Bottom-to-top layout, solid
 * edges for Verified and dashed for NotRefuted, double border on the
 * maximum. Output order follows the node and edge order of the poset.
 */

#include <sstream>
#include <string>

#include "qord/poset.hpp"

namespace qord {

namespace detail {

inline std::string dot_quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

// Two-line node label; the line break stays a DOT escape.
inline std::string dot_label(const std::string& id, const std::string& kind)
{
    const std::string a = dot_quote(id), b = dot_quote(kind);
    return a.substr(0, a.size() - 1) + "\\n" + b.substr(1);
}

inline void dot_body(std::ostringstream& os, const Poset& P, const std::string& indent)
{
    for (std::size_t i = 0; i < P.size(); ++i) {
        os << indent << dot_quote(P.id(i))
           << " [label=" << dot_label(P.id(i), to_string(P.nodes[i].qo.declared_kind()));
        if (P.maximum && *P.maximum == i) os << ", peripheries=2";
        os << "];\n";
    }
    for (auto [a, b] : P.hasse) {
        os << indent << dot_quote(P.id(a)) << " -> " << dot_quote(P.id(b));
        os << (std::holds_alternative<NotRefuted>(P.decisions[a][b]) ? " [style=dashed]" : " [style=solid]");
        os << ";\n";
    }
}

} // namespace detail

/// One digraph for one poset; edges are exactly the Hasse edges.
inline std::string to_dot(const Poset& P, const std::string& name = "qord")
{
    std::ostringstream os;
    os << "digraph " << detail::dot_quote(name) << " {\n  rankdir=BT;\n  node [shape=box];\n";
    detail::dot_body(os, P, "  ");
    os << "}\n";
    return os.str();
}

/// Combined forest: one cluster per support; cross-support coarsenings, if
/// requested, are drawn dotted and grey.
inline std::string to_dot(const Forest& F, bool with_cross = false, const std::string& name = "forest")
{
    std::ostringstream os;
    os << "digraph " << detail::dot_quote(name) << " {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t t = 0; t < F.trees.size(); ++t) {
        os << "  subgraph " << detail::dot_quote("cluster_" + std::to_string(t)) << " {\n";
        os << "    label=" << detail::dot_quote("support " + F.trees[t].support.name()) << ";\n";
        detail::dot_body(os, F.trees[t].tree.poset, "    ");
        os << "  }\n";
    }
    if (with_cross)
        for (const auto& [a, b] : F.cross_le)
            os << "  " << detail::dot_quote(a) << " -> " << detail::dot_quote(b)
               << " [style=dotted, color=gray];\n";
    os << "}\n";
    return os.str();
}

} // namespace qord
