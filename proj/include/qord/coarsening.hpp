// SPDX-License-Identifier: Apache-2.0
#pragma once

/**
 * @file coarsening.hpp
 * @brief The coarsening relation: q1 <= q2 iff 0 <=_1 x <=_1 y implies
 * x <=_2 y. Finite universes can refute it but never prove it, hence the
 * three-valued Decision.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qord/axioms.hpp"
#include "qord/catalog.hpp"

namespace qord {

struct Refuted {
    Element x;
    Element y;
    /// A declared witness from the catalog, re-validated against both oracles.
    std::optional<std::pair<Element, Element>> cited;
    std::string citation;
};

struct NotRefuted {
    std::uint64_t pairs_checked = 0;
    std::string universe;
};

struct Verified {
    std::string rule;
    std::string citation;
    std::uint64_t pairs_checked = 0;
    std::string universe;
};

using Decision = std::variant<Refuted, NotRefuted, Verified>;

inline bool is_refuted(const Decision& d) { return std::holds_alternative<Refuted>(d); }
inline bool not_refuted(const Decision& d) { return !is_refuted(d); }

inline const char* decision_name(const Decision& d)
{
    switch (d.index()) {
    case 0: return "Refuted";
    case 1: return "NotRefuted";
    default: return "Verified";
    }
}

namespace detail {

/// Does (x, y) refute q1 <= q2 when checked directly against the oracles?
inline bool refutes(const QuasiOrder& q1, const QuasiOrder& q2, const Element& x, const Element& y)
{
    const Element zero = Element::zero(q1.ring());
    return q1.le(zero, x) && q1.le(x, y) && !q2.le(x, y);
}

inline std::optional<std::pair<std::size_t, std::size_t>> first_refutation(const RelationTable& t1,
                                                                           const RelationTable& t2,
                                                                           std::size_t zero,
                                                                           std::uint64_t& checked)
{
    checked = 0;
    const std::size_t n = t1.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!t1.le(zero, i)) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (!t1.le(i, j)) continue;
            ++checked;
            if (!t2.le(i, j)) return std::pair{i, j};
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Searches every universe pair in canonical order. A declared fact never
/// bypasses the search: a claim `holds` upgrades a clean search to
/// Verified, a refutation claim contributes its witness as `cited` after
/// re-checking it. Throws VerificationError if a cited witness does not
/// refute.
inline Decision compare_qos(const QuasiOrder& q1, const QuasiOrder& q2, const RelationTable& t1,
                            const RelationTable& t2, const Universe& U, const DeclaredFact* fact = nullptr)
{
    if (q1.ring() != q2.ring() || q1.ring() != U.ring())
        throw RingMismatch(q1.id() + " and " + q2.id() + " live on different rings");
    std::uint64_t checked = 0;
    auto hit = detail::first_refutation(t1, t2, U.zero_index(), checked);
    if (hit) {
        Refuted r{U[hit->first], U[hit->second], std::nullopt, {}};
        if (fact && !fact->holds && fact->witness) {
            if (!detail::refutes(q1, q2, fact->witness->first, fact->witness->second))
                throw VerificationError("declared witness (" + fact->witness->first.to_string() + ", " +
                                        fact->witness->second.to_string() + ") does not refute " + q1.id() +
                                        " <= " + q2.id());
            r.cited = fact->witness;
            r.citation = fact->citation;
        }
        return r;
    }
    if (fact && fact->holds) return Verified{"declared", fact->citation, checked, U.descriptor()};
    if (q1.id() == q2.id()) return Verified{"reflexive", "every quasi-ordering is coarser than itself", checked, U.descriptor()};
    return NotRefuted{checked, U.descriptor()};
}

inline Decision compare_qos(const QuasiOrder& q1, const QuasiOrder& q2, const Universe& U,
                            const DeclaredFact* fact = nullptr)
{
    if (q1.ring() != q2.ring()) throw RingMismatch(q1.id() + " and " + q2.id() + " live on different rings");
    return compare_qos(q1, q2, RelationTable(q1, U), RelationTable(q2, U), U, fact);
}

inline Decision compare_qos(const CatalogEntry& e1, const CatalogEntry& e2, const Universe& U)
{
    return compare_qos(e1.qo, e2.qo, U, e1.fact_about(e2.id()));
}

/// 0 <=_1 x implies 0 <=_2 x on the universe. The converse is checked when
/// both supports agree on the universe and both oracles have the same kind;
/// an ordering below a valuation breaks it at x = -1. Requires q1 <= q2 not
/// to be refuted.
inline AxiomReport positivity_transfer_check(const QuasiOrder& q1, const QuasiOrder& q2, const Universe& U)
{
    using detail::fail;
    using detail::outcome;
    const RelationTable t1(q1, U), t2(q2, U);
    if (is_refuted(compare_qos(q1, q2, t1, t2, U)))
        throw PreconditionError(q1.id() + " <= " + q2.id() + " is refuted on " + U.descriptor());
    const std::size_t zero = U.zero_index();
    AxiomOutcome forward = outcome("positivity-transfer", "x");
    AxiomOutcome backward = outcome("positivity-equivalence", "x");
    AxiomOutcome support = outcome("support-monotone", "x");
    bool same_support = true;
    for (std::size_t x = 0; x < U.size(); ++x) same_support = same_support && t1.eq(x, zero) == t2.eq(x, zero);
    const bool same_kind = classify(q1) == classify(q2);
    for (std::size_t x = 0; x < U.size(); ++x) {
        if (t1.le(zero, x)) {
            forward.count++;
            if (!t2.le(zero, x)) fail(forward, {U[x]});
        }
        if (same_support && same_kind && t2.le(zero, x)) {
            backward.count++;
            if (!t1.le(zero, x)) fail(backward, {U[x]});
        }
        if (t1.eq(x, zero)) {
            support.count++;
            if (!t2.eq(x, zero)) fail(support, {U[x]});
        }
    }
    AxiomReport rep{q1.id() + " <= " + q2.id(), U.descriptor(), {forward, support}};
    if (same_support && same_kind) rep.outcomes.push_back(backward);
    else if (same_support) rep.outcomes.front().note = "converse not checked: an ordering below a valuation";
    return rep;
}

/// Refuted with (x, y) when 0 <= x <= y, y in the ideal and x outside it.
inline Decision convexity_check(const Ideal& ideal, const QuasiOrder& qo, const Universe& U)
{
    if (ideal.ring() != qo.ring() || U.ring() != qo.ring())
        throw RingMismatch(ideal.name() + " and " + qo.id() + " live on different rings");
    const RelationTable t(qo, U);
    const std::size_t zero = U.zero_index();
    std::vector<char> member(U.size());
    for (std::size_t i = 0; i < U.size(); ++i) member[i] = ideal.contains(U[i]);
    std::uint64_t checked = 0;
    for (std::size_t x = 0; x < U.size(); ++x) {
        if (!t.le(zero, x)) continue;
        for (std::size_t y = 0; y < U.size(); ++y) {
            if (!t.le(x, y) || !member[y]) continue;
            ++checked;
            if (!member[x]) return Refuted{U[x], U[y], std::nullopt, {}};
        }
    }
    return NotRefuted{checked, U.descriptor()};
}

struct QcompReport {
    std::string qo_id;
    std::string ideal;
    Decision convexity;  // is the ideal convex for qo?
    Decision coarsening; // qo <= trivial quasi-ordering at the ideal
    bool agree() const { return is_refuted(convexity) == is_refuted(coarsening); }
};

/// Convexity of a prime ideal against coarsening by the trivial
/// quasi-ordering at that ideal; the two must agree.
inline QcompReport qcomp_equivalence(const QuasiOrder& qo, const Ideal& q, const Universe& U)
{
    if (!q.is_prime()) throw PreconditionError(q.name() + " is not prime");
    if (q.ring() != qo.ring()) throw RingMismatch(q.name() + " and " + qo.id() + " live on different rings");
    return {qo.id(), q.name(), convexity_check(q, qo, U), compare_qos(qo, QuasiOrder::trivial(q), U)};
}

struct NoMaximumReport {
    Ideal p;
    Ideal q;
    bool nested = false;              // p is a proper subset of q
    std::optional<Element> y;         // y in q \ p with 0 <=_p 1 <=_p y and y <_q 1
    Decision p_below_q;               // triv(p) <= triv(q)
    Decision q_below_p;               // triv(q) <= triv(p)
};

/// Shows that trivial quasi-orderings at two different primes are not
/// comparable. For nested primes p < q the witness is (1, y) with y in
/// q \ p; for incomparable primes both directions are refuted by search.
inline NoMaximumReport no_global_maximum_demo(const Ideal& p, const Ideal& q, const Universe& U)
{
    if (!p.is_prime() || !q.is_prime()) throw PreconditionError("both ideals must be prime");
    if (p.ring() != q.ring() || p.ring() != U.ring()) throw RingMismatch("ideals live on different rings");
    if (p == q) throw PreconditionError("the two primes must differ");
    const QuasiOrder tp = QuasiOrder::trivial(p), tq = QuasiOrder::trivial(q);
    NoMaximumReport out{p, q, ideal_subset(p, q) && !ideal_subset(q, p), std::nullopt,
                        compare_qos(tp, tq, U), compare_qos(tq, tp, U)};
    if (out.nested) {
        const Element zero = Element::zero(U.ring()), one = Element::one(U.ring());
        for (const auto& y : U)
            if (q.contains(y) && !p.contains(y) && tp.le(zero, one) && tp.le(one, y) && tq.lt(y, one)) {
                out.y = y;
                break;
            }
    }
    return out;
}

} // namespace qord
