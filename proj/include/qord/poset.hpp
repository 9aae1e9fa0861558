// SPDX-License-Identifier: Apache-2.0
#pragma once

/**
 * @file poset.hpp
 * @brief Finite posets of quasi-orderings under coarsening, tree
 * certificates, and the partition of a catalog into fixed-support trees.
 *
 * A relation entry counts as true when its Decision is not Refuted. The
 * certificate records which of its edges rest on a mere NotRefuted search.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qord/coarsening.hpp"

namespace qord {

struct Poset {
    Ring ring;
    std::string universe;
    std::vector<CatalogEntry> nodes;
    std::vector<std::vector<Decision>> decisions; // decisions[i][j]: nodes[i] <= nodes[j]
    std::vector<std::pair<std::size_t, std::size_t>> hasse; // (lower, upper)
    std::optional<std::size_t> maximum;

    std::size_t size() const { return nodes.size(); }
    const std::string& id(std::size_t i) const { return nodes[i].id(); }
    bool le(std::size_t i, std::size_t j) const { return not_refuted(decisions[i][j]); }
    bool lt(std::size_t i, std::size_t j) const { return i != j && le(i, j); }
    std::optional<std::size_t> index_of(const std::string& id) const
    {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i].id() == id) return i;
        return std::nullopt;
    }
};

namespace detail {

inline void finish_poset(Poset& P)
{
    const std::size_t n = P.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!P.lt(i, j)) continue;
            bool covered = true;
            for (std::size_t k = 0; k < n && covered; ++k)
                if (k != i && k != j && P.lt(i, k) && P.lt(k, j)) covered = false;
            if (covered) P.hasse.emplace_back(i, j);
        }
    for (std::size_t m = 0; m < n && !P.maximum; ++m) {
        bool top = true;
        for (std::size_t i = 0; i < n; ++i) top = top && P.le(i, m);
        if (top) P.maximum = m;
    }
}

} // namespace detail

/// Fills the relation matrix with compare_qos and validates it as a partial
/// order. Throws VerificationError on a transitivity or antisymmetry
/// violation and when a declared coarsening fact is refuted.
inline Poset build_poset(const std::vector<CatalogEntry>& entries, const Universe& U)
{
    Poset P{U.ring(), U.descriptor(), entries, {}, {}, std::nullopt};
    const std::size_t n = entries.size();
    std::vector<RelationTable> tables;
    tables.reserve(n);
    for (const auto& e : entries) {
        if (e.qo.ring() != U.ring()) throw PreconditionError(e.id() + " does not live on " + U.ring().name());
        tables.emplace_back(e.qo, U);
    }
    P.decisions.assign(n, std::vector<Decision>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const DeclaredFact* fact = entries[i].fact_about(entries[j].id());
            P.decisions[i][j] = compare_qos(entries[i].qo, entries[j].qo, tables[i], tables[j], U, fact);
            if (fact && fact->holds && is_refuted(P.decisions[i][j])) {
                const auto& r = std::get<Refuted>(P.decisions[i][j]);
                throw VerificationError("declared fact " + entries[i].id() + " <= " + entries[j].id() +
                                        " is refuted by (" + r.x.to_string() + ", " + r.y.to_string() + ")");
            }
        }
    for (std::size_t i = 0; i < n; ++i) {
        if (!P.le(i, i)) throw VerificationError("reflexivity fails at " + P.id(i));
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && P.le(i, j) && P.le(j, i))
                throw VerificationError("antisymmetry fails: " + P.id(i) + " and " + P.id(j) +
                                        " are not separated on " + U.descriptor() + "; the universe is too small");
            for (std::size_t k = 0; k < n; ++k)
                if (P.le(i, j) && P.le(j, k) && !P.le(i, k))
                    throw VerificationError("transitivity fails: " + P.id(i) + " <= " + P.id(j) + " <= " + P.id(k));
        }
    }
    detail::finish_poset(P);
    return P;
}

/// Restriction of a poset to a subset of its nodes (in the given order).
inline Poset subposet(const Poset& P, const std::vector<std::size_t>& keep)
{
    Poset S{P.ring, P.universe, {}, {}, {}, std::nullopt};
    for (auto i : keep) S.nodes.push_back(P.nodes[i]);
    S.decisions.assign(keep.size(), std::vector<Decision>(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b) S.decisions[a][b] = P.decisions[keep[a]][keep[b]];
    detail::finish_poset(S);
    return S;
}

struct TreeCertificate {
    Poset poset;
    std::string support;
    std::size_t maximum = 0;
    std::vector<std::vector<std::size_t>> up_sets;  // per node, ascending chain starting at the node
    std::vector<std::vector<std::size_t>> branches; // maximal chains, ascending
    std::vector<std::pair<std::size_t, std::size_t>> not_refuted_edges; // Hasse edges without citation

    std::size_t branch_length(std::size_t b) const { return branches[b].size(); }
};

namespace detail {

inline TreeCertificate certify_tree(const Poset& P, const std::string& support_name, std::size_t top)
{
    const std::size_t n = P.size();
    TreeCertificate c{P, support_name, top, {}, {}, {}};
    for (std::size_t i = 0; i < n; ++i)
        if (!P.le(i, top))
            throw VerificationError(P.id(top) + " is not the maximum: " + P.id(i) + " <= " + P.id(top) + " is refuted");
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> up;
        for (std::size_t j = 0; j < n; ++j)
            if (P.le(i, j)) up.push_back(j);
        for (std::size_t a = 0; a < up.size(); ++a)
            for (std::size_t b = a + 1; b < up.size(); ++b)
                if (!P.le(up[a], up[b]) && !P.le(up[b], up[a]))
                    throw VerificationError("up-set of " + P.id(i) + " is not a chain: " + P.id(up[a]) + " and " +
                                            P.id(up[b]) + " are incomparable");
        std::sort(up.begin(), up.end(), [&](std::size_t a, std::size_t b) { return P.lt(a, b); });
        c.up_sets.push_back(up);
    }
    for (std::size_t i = 0; i < n; ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < n; ++j) minimal = minimal && !P.lt(j, i);
        if (minimal) c.branches.push_back(c.up_sets[i]);
    }
    for (auto [a, b] : P.hasse)
        if (std::holds_alternative<NotRefuted>(P.decisions[a][b])) c.not_refuted_edges.emplace_back(a, b);
    return c;
}

inline std::size_t trivial_node(const Poset& P, const Ideal& support)
{
    for (std::size_t i = 0; i < P.size(); ++i)
        if (P.nodes[i].qo.is_trivial() && P.nodes[i].qo.declared_support() == support) return i;
    throw PreconditionError("no trivial quasi-ordering with support " + support.name() + " among the nodes");
}

} // namespace detail

/// Certifies a fixed-support poset as a tree: the trivial node is the
/// maximum and every up-set is a chain.
inline TreeCertificate check_tree(const Poset& P, const Ideal& expected_support)
{
    for (const auto& e : P.nodes)
        if (!(e.qo.declared_support() == expected_support))
            throw PreconditionError(e.id() + " has support " + e.qo.declared_support().name() + ", not " +
                                    expected_support.name() + "; use forest_partition for mixed supports");
    return detail::certify_tree(P, expected_support.name(), detail::trivial_node(P, expected_support));
}

/// Tree over the valuations with support q together with the q-convex
/// orderings whose support lies in q; the maximum is the trivial node at q.
inline TreeCertificate check_generalized_tree(const Poset& P, const Ideal& q, const Universe& U)
{
    for (const auto& e : P.nodes) {
        const Ideal& s = e.qo.declared_support();
        if (classify(e.qo) == Kind::Valuation) {
            if (!(s == q)) throw PreconditionError(e.id() + " is a valuation with support other than " + q.name());
        } else {
            if (!ideal_subset(s, q))
                throw PreconditionError(e.id() + " is an ordering whose support is not contained in " + q.name());
            if (is_refuted(convexity_check(q, e.qo, U)))
                throw PreconditionError(q.name() + " is not convex for the ordering " + e.id());
        }
    }
    return detail::certify_tree(P, q.name() + " (convex orderings and valuations)", detail::trivial_node(P, q));
}

struct ForestTree {
    Ideal support;
    TreeCertificate tree;
};

struct Forest {
    std::vector<ForestTree> trees;
    /// Cross-support pairs (lower, upper) whose coarsening is not refuted;
    /// these are outside the primed relation because the supports differ.
    std::vector<std::pair<std::string, std::string>> cross_le;
};

/// Groups the entries by declared support and certifies each group as a
/// tree. The primed relation (q1 <= q2 and supp q2 within supp q1 on the
/// universe) is checked never to relate different groups.
inline Forest forest_partition(const std::vector<CatalogEntry>& entries, const Universe& U)
{
    Forest F;
    if (entries.empty()) return F;
    const Poset all = build_poset(entries, U);
    std::vector<std::vector<char>> in_support(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (const auto& x : U) in_support[i].push_back(entries[i].qo.equiv(x, Element::zero(U.ring())));
    auto support_within = [&](std::size_t a, std::size_t b) {
        for (std::size_t k = 0; k < U.size(); ++k)
            if (in_support[a][k] && !in_support[b][k]) return false;
        return true;
    };

    std::vector<std::vector<std::size_t>> groups;
    std::vector<Ideal> supports;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Ideal& s = entries[i].qo.declared_support();
        auto it = std::find(supports.begin(), supports.end(), s);
        if (it == supports.end()) {
            supports.push_back(s);
            groups.push_back({i});
        } else {
            groups[static_cast<std::size_t>(it - supports.begin())].push_back(i);
        }
    }
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = 0; j < entries.size(); ++j) {
            if (entries[i].qo.declared_support() == entries[j].qo.declared_support() || !all.le(i, j)) continue;
            F.cross_le.emplace_back(all.id(i), all.id(j));
            if (support_within(j, i))
                throw VerificationError("primed relation crosses supports: " + all.id(i) + " <=' " + all.id(j));
        }
    for (std::size_t g = 0; g < groups.size(); ++g)
        F.trees.push_back({supports[g], check_tree(subposet(all, groups[g]), supports[g])});
    return F;
}

} // namespace qord
