// SPDX-License-Identifier: Apache-2.0
#pragma once

/**
 * @file structure.hpp
 * @brief Special and Manis predicates, their behaviour along coarsening,
 * the special subtrees, dependency classes and the Kaplansky properties of
 * finite trees.
 *
 * Existence is shown by an explicit witness map found in the universe.
 * Nonexistence is only ever concluded from an exact rule about the closed
 * form of the quasi-ordering; an exhausted search yields Unknown.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qord/poset.hpp"

namespace qord {

enum class VerdictKind { Witnessed, HoldsByRule, Fails, Unknown };

inline const char* to_string(VerdictKind k)
{
    switch (k) {
    case VerdictKind::Witnessed: return "Witnessed";
    case VerdictKind::HoldsByRule: return "HoldsByRule";
    case VerdictKind::Fails: return "Fails";
    case VerdictKind::Unknown: return "Unknown";
    }
    return "?";
}

struct Verdict {
    std::string property; // "special" or "manis"
    std::string qo_id;
    VerdictKind kind = VerdictKind::Unknown;
    std::vector<std::pair<Element, Element>> witness_map; // x -> partner y
    std::string rule;                                     // exact rule id when one decided the verdict
    std::string explanation;
    std::optional<Element> unmatched; // first non-support x without a partner in the universe
    std::uint64_t pairs_searched = 0;
    std::string universe;

    bool holds() const { return kind == VerdictKind::Witnessed || kind == VerdictKind::HoldsByRule; }
    bool fails() const { return kind == VerdictKind::Fails; }
};

namespace detail {

/// For each non-support x, the first y in the universe with pred(x * y).
template <class Pred>
Verdict partner_search(const CatalogEntry& e, const Universe& U, std::string property, Pred pred)
{
    Verdict v;
    v.property = std::move(property);
    v.qo_id = e.id();
    v.universe = U.descriptor();
    const Element zero = Element::zero(U.ring());
    bool complete = true;
    for (const auto& x : U) {
        if (e.qo.equiv(x, zero)) continue;
        bool found = false;
        for (const auto& y : U) {
            ++v.pairs_searched;
            if (pred(x * y)) {
                v.witness_map.emplace_back(x, y);
                found = true;
                break;
            }
        }
        if (!found && complete) {
            complete = false;
            v.unmatched = x;
        }
    }
    if (complete) {
        v.kind = VerdictKind::Witnessed;
    } else {
        v.witness_map.clear();
    }
    return v;
}

/// First non-support universe element strictly below 1 (positive value).
inline std::optional<Element> below_one(const CatalogEntry& e, const Universe& U)
{
    const Element zero = Element::zero(U.ring()), one = Element::one(U.ring());
    for (const auto& x : U)
        if (!e.qo.equiv(x, zero) && e.qo.lt(x, one)) return x;
    return std::nullopt;
}

/// First universe element strictly above 1 (negative value).
inline std::optional<Element> above_one(const CatalogEntry& e, const Universe& U)
{
    const Element one = Element::one(U.ring());
    for (const auto& x : U)
        if (e.qo.lt(one, x)) return x;
    return std::nullopt;
}

} // namespace detail

/// Special: every non-support x has some y with 1 <= xy.
inline Verdict is_special(const CatalogEntry& e, const Universe& U)
{
    const Element one = Element::one(U.ring());
    Verdict v = detail::partner_search(e, U, "special", [&](const Element& p) { return e.qo.le(one, p); });
    if (v.holds()) return v;
    if (classify(e.qo) == Kind::Valuation && e.value_sign == ValueSign::Nonnegative) {
        if (auto x = detail::below_one(e, U)) {
            v.kind = VerdictKind::Fails;
            v.rule = "nonnegative-value-semigroup";
            v.explanation = "the valuation is nonnegative on the whole ring and v(" + x->to_string() +
                            ") > 0, so v(" + x->to_string() + " * y) = v(" + x->to_string() +
                            ") + v(y) > 0 = v(1) for every y outside the support";
            v.unmatched = *x;
            return v;
        }
    }
    v.kind = VerdictKind::Unknown;
    v.explanation = "no partner in the universe for " + v.unmatched->to_string() + " and no exact rule applies";
    return v;
}

/// Manis: every non-support x has some y with 1 ~ xy.
inline Verdict is_manis(const CatalogEntry& e, const Universe& U)
{
    const Element one = Element::one(U.ring());
    Verdict v = detail::partner_search(e, U, "manis", [&](const Element& p) { return e.qo.equiv(one, p); });
    const Ideal& support = e.qo.declared_support();
    if (classify(e.qo) == Kind::Ordering) {
        if (support.is_maximal()) {
            if (!v.holds()) {
                v.kind = VerdictKind::HoldsByRule;
                v.rule = "ordering-maximal-support";
                v.explanation = "an ordering is Manis iff its support is maximal; " + support.name() + " is maximal";
            }
        } else {
            if (v.holds())
                throw VerificationError(e.id() + ": Manis witness map found although the ordering's support " +
                                        support.name() + " is not maximal");
            v.kind = VerdictKind::Fails;
            v.rule = "ordering-nonmaximal-support";
            v.explanation = "an ordering is Manis iff its support is maximal; " + support.name() + " is not maximal";
        }
        return v;
    }
    if (v.holds()) return v;
    if (e.value_sign == ValueSign::Nonnegative) {
        if (auto x = detail::below_one(e, U)) {
            v.kind = VerdictKind::Fails;
            v.rule = "nonnegative-value-semigroup";
            v.explanation = "v(" + x->to_string() + " * y) >= v(" + x->to_string() + ") > 0 = v(1) for every y";
            v.unmatched = *x;
            return v;
        }
    }
    if (e.value_sign == ValueSign::Nonpositive) {
        if (auto x = detail::above_one(e, U)) {
            v.kind = VerdictKind::Fails;
            v.rule = "nonpositive-value-semigroup";
            v.explanation = "v(" + x->to_string() + " * y) <= v(" + x->to_string() + ") < 0 = v(1) for every y";
            v.unmatched = *x;
            return v;
        }
    }
    v.kind = VerdictKind::Unknown;
    v.explanation = "no partner in the universe for " + v.unmatched->to_string() + " and no exact rule applies";
    return v;
}

/// Re-validates a witness map element by element against the oracle.
inline bool revalidate(const Verdict& v, const QuasiOrder& qo)
{
    const Element one = Element::one(qo.ring());
    for (const auto& [x, y] : v.witness_map) {
        Element p = x * y;
        bool ok = v.property == "manis" ? qo.equiv(one, p) : qo.le(one, p);
        if (!ok) return false;
    }
    return true;
}

struct Verdicts {
    std::vector<Verdict> special; // indexed like the poset nodes
    std::vector<Verdict> manis;
};

inline Verdicts evaluate_verdicts(const Poset& P, const Universe& U)
{
    Verdicts out;
    for (const auto& e : P.nodes) {
        out.special.push_back(is_special(e, U));
        out.manis.push_back(is_manis(e, U));
    }
    return out;
}

struct InterplayViolation {
    std::string property;
    std::string lower;
    std::string upper;
};

struct InterplayReport {
    std::uint64_t edges_checked = 0;
    std::vector<InterplayViolation> violations;   // upward monotonicity failures
    std::vector<std::string> manis_not_special;   // nodes where Manis holds and special fails
    bool passed() const { return violations.empty() && manis_not_special.empty(); }
};

/// Along every non-refuted q1 <= q2: special q1 forces q2 not to fail
/// specialness, and likewise for Manis. Also Manis implies special per node.
inline InterplayReport interplay_check(const Poset& P, const Verdicts& V)
{
    InterplayReport r;
    for (std::size_t i = 0; i < P.size(); ++i) {
        if (V.manis[i].holds() && V.special[i].fails()) r.manis_not_special.push_back(P.id(i));
        for (std::size_t j = 0; j < P.size(); ++j) {
            if (!P.lt(i, j)) continue;
            ++r.edges_checked;
            if (V.special[i].holds() && V.special[j].fails()) r.violations.push_back({"special", P.id(i), P.id(j)});
            if (V.manis[i].holds() && V.manis[j].fails()) r.violations.push_back({"manis", P.id(i), P.id(j)});
        }
    }
    return r;
}

struct SubtreeReport {
    std::string property;
    std::string provenance;
    std::vector<std::pair<std::string, std::vector<std::string>>> subtrees; // support -> member ids
    std::vector<std::string> problems;
    bool passed() const { return problems.empty(); }
};

/// The nodes with the property form, inside each fixed-support tree, an
/// upward closed set containing the trivial node; no two of them with
/// different supports are comparable in `all`.
inline SubtreeReport subtree_check(const Forest& F, const Poset& all, const Verdicts& V, bool manis)
{
    SubtreeReport r;
    r.property = manis ? "manis" : "special";
    r.provenance = manis ? "derived by analogy with the special case" : "ordered disjoint union of special subtrees";
    const auto& verdicts = manis ? V.manis : V.special;
    auto holds = [&](const std::string& id) { return verdicts[*all.index_of(id)].holds(); };
    for (const auto& t : F.trees) {
        const Poset& P = t.tree.poset;
        std::vector<std::string> members;
        for (std::size_t i = 0; i < P.size(); ++i)
            if (holds(P.id(i))) members.push_back(P.id(i));
        if (!holds(P.id(t.tree.maximum))) r.problems.push_back("trivial node " + P.id(t.tree.maximum) + " lacks the property");
        for (std::size_t i = 0; i < P.size(); ++i)
            for (std::size_t j = 0; j < P.size(); ++j)
                if (P.lt(i, j) && holds(P.id(i)) && !holds(P.id(j)))
                    r.problems.push_back("not upward closed: " + P.id(i) + " <= " + P.id(j));
        r.subtrees.emplace_back(t.support.name(), std::move(members));
    }
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (i == j || !verdicts[i].holds() || !verdicts[j].holds()) continue;
            if (all.nodes[i].qo.declared_support() == all.nodes[j].qo.declared_support()) continue;
            if (all.le(i, j)) r.problems.push_back("cross-support comparability " + all.id(i) + " <= " + all.id(j));
        }
    return r;
}

struct DependencyPartition {
    std::string support;
    std::vector<std::vector<std::string>> blocks;
    std::optional<std::string> trivial; // kept apart: it has no non-trivial coarsening
    struct Pair {
        std::string a, b;
        bool dependent = false;
        std::optional<std::string> shared; // first shared non-trivial coarsening
    };
    std::vector<Pair> pairs;
    bool transitive = true;
    bool symmetric = true;
};

/// Two non-trivial nodes are dependent iff some non-trivial node is
/// coarser than both. Uses the tree's relation as computed; symmetry and
/// transitivity are checked, not assumed.
inline DependencyPartition dependency_classes(const TreeCertificate& T)
{
    const Poset& P = T.poset;
    const std::size_t n = P.size();
    DependencyPartition D;
    D.support = T.support;
    D.trivial = P.id(T.maximum);
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < n; ++i)
        if (i != T.maximum) nodes.push_back(i);

    auto shared = [&](std::size_t a, std::size_t b) -> std::optional<std::size_t> {
        for (std::size_t k = 0; k < n; ++k)
            if (k != T.maximum && P.le(a, k) && P.le(b, k)) return k;
        return std::nullopt;
    };
    std::vector<std::vector<char>> dep(n, std::vector<char>(n, 0));
    for (auto a : nodes)
        for (auto b : nodes) dep[a][b] = shared(a, b).has_value();
    for (std::size_t x = 0; x < nodes.size(); ++x)
        for (std::size_t y = x + 1; y < nodes.size(); ++y) {
            auto a = nodes[x], b = nodes[y];
            auto s = shared(a, b);
            D.pairs.push_back({P.id(a), P.id(b), s.has_value(), s ? std::optional(P.id(*s)) : std::nullopt});
            if (dep[a][b] != dep[b][a]) D.symmetric = false;
        }
    for (auto a : nodes)
        for (auto b : nodes)
            for (auto c : nodes)
                if (dep[a][b] && dep[b][c] && !dep[a][c]) D.transitive = false;

    std::vector<char> placed(n, 0);
    for (auto a : nodes) {
        if (placed[a]) continue;
        std::vector<std::string> block;
        for (auto b : nodes)
            if (!placed[b] && dep[a][b]) {
                placed[b] = 1;
                block.push_back(P.id(b));
            }
        D.blocks.push_back(std::move(block));
    }
    return D;
}

struct KaplanskyReport {
    bool k1 = true;
    bool k2 = true;
    std::uint64_t chains = 0;
    std::vector<std::string> details;
    /// For each strict pair (a, b): a covering pair (c, d) with a <= c < d <= b.
    std::vector<std::pair<std::pair<std::string, std::string>, std::pair<std::string, std::string>>> covers;
};

/// (K1) every nonempty chain has a supremum and an infimum in the node
/// set; (K2) every strict pair a < b contains a covering pair.
inline KaplanskyReport kaplansky_check(const TreeCertificate& T)
{
    const Poset& P = T.poset;
    const std::size_t n = P.size();
    KaplanskyReport r;
    if (n > 20) throw PreconditionError("chain enumeration is limited to 20 nodes");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> chain;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) chain.push_back(i);
        bool is_chain = true;
        for (auto a : chain)
            for (auto b : chain) is_chain = is_chain && (P.le(a, b) || P.le(b, a));
        if (!is_chain) continue;
        ++r.chains;
        auto bound = [&](bool upper) -> std::optional<std::size_t> {
            std::vector<std::size_t> bounds;
            for (std::size_t k = 0; k < n; ++k) {
                bool ok = true;
                for (auto c : chain) ok = ok && (upper ? P.le(c, k) : P.le(k, c));
                if (ok) bounds.push_back(k);
            }
            for (auto b : bounds) {
                bool best = true;
                for (auto o : bounds) best = best && (upper ? P.le(b, o) : P.le(o, b));
                if (best) return b;
            }
            return std::nullopt;
        };
        if (!bound(true) || !bound(false)) {
            r.k1 = false;
            std::string s;
            for (auto c : chain) s += (s.empty() ? "" : ", ") + P.id(c);
            r.details.push_back("chain {" + s + "} lacks a supremum or an infimum");
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!P.lt(a, b)) continue;
            std::optional<std::pair<std::size_t, std::size_t>> cover;
            for (auto [c, d] : P.hasse)
                if (P.le(a, c) && P.le(d, b)) {
                    cover = std::pair{c, d};
                    break;
                }
            if (!cover) {
                r.k2 = false;
                r.details.push_back("no covering pair between " + P.id(a) + " and " + P.id(b));
                continue;
            }
            r.covers.push_back({{P.id(a), P.id(b)}, {P.id(cover->first), P.id(cover->second)}});
        }
    return r;
}

/// Cross-check of the convexity characterisation of specialness: a
/// witnessed special verdict must coincide with every shipped prime
/// strictly above the support failing to be convex.
struct ConvexityCharacterisation {
    std::string qo_id;
    bool special_witnessed = false;
    bool all_larger_primes_nonconvex = true;
    std::vector<std::pair<std::string, std::string>> primes; // ideal -> decision name
    bool agree() const { return special_witnessed == all_larger_primes_nonconvex; }
};

inline ConvexityCharacterisation convexity_characterisation(const CatalogEntry& e, const Verdict& special,
                                                           const Universe& U, int prime_bound = kDefaultPrimeBound)
{
    ConvexityCharacterisation c{e.id(), special.kind == VerdictKind::Witnessed, true, {}};
    const Ideal& s = e.qo.declared_support();
    for (const auto& q : shipped_primes(U.ring(), prime_bound)) {
        if (!ideal_subset(s, q) || ideal_subset(q, s)) continue;
        Decision d = convexity_check(q, e.qo, U);
        c.primes.emplace_back(q.name(), decision_name(d));
        if (!is_refuted(d)) c.all_larger_primes_nonconvex = false;
    }
    return c;
}

} // namespace qord
