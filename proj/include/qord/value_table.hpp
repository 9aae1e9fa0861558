// SPDX-License-Identifier: Apache-2.0
#pragma once

/**
 * @file value_table.hpp
 * @brief Extraction of the value semigroup of a valuation-type
 * quasi-ordering: the non-support elements modulo equivalence, ordered by
 * [x] <= [y] iff y <= x, with [x] + [y] = [xy].
 *
 * The table starts from the equivalence classes met in a universe and adds
 * the classes of all pairwise products of universe elements (one closure
 * pass). Addition is recorded for pairs of universe classes; sums that
 * would need a deeper closure stay undefined.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "qord/axioms.hpp"

namespace qord {

struct ValueClass {
    std::vector<Element> members; // universe members, or the first product found for closure classes
    bool from_closure = false;
};

/// Position of an element in the value order: a class index, or infinity
/// for support elements.
struct ClassRef {
    bool infinite = false;
    std::size_t index = 0;

    friend bool operator==(ClassRef, ClassRef) = default;
    friend bool operator<(ClassRef a, ClassRef b)
    {
        if (a.infinite || b.infinite) return !a.infinite && b.infinite;
        return a.index < b.index;
    }
};

class ValueTable {
public:
    const std::string& source() const { return qo_.id(); }
    const std::string& universe() const { return universe_; }
    /// Classes in ascending value order.
    const std::vector<ValueClass>& classes() const { return classes_; }
    /// Support elements of the universe; their class is infinity.
    const std::vector<Element>& infinity() const { return infinity_; }
    std::size_t neutral() const { return neutral_; }
    /// Sum of two classes if recorded.
    std::optional<std::size_t> sum(std::size_t a, std::size_t b) const { return sum_[a][b]; }
    /// Verification outcomes gathered during extraction.
    const AxiomReport& checks() const { return checks_; }

    std::size_t universe_class_count() const
    {
        return static_cast<std::size_t>(
            std::count_if(classes_.begin(), classes_.end(), [](const ValueClass& c) { return !c.from_closure; }));
    }

    /// Class of an arbitrary element, or nullopt when it falls strictly
    /// between recorded classes.
    std::optional<ClassRef> class_of(const Element& x) const
    {
        if (qo_.equiv(x, Element::zero(qo_.ring()))) return ClassRef{true, 0};
        std::size_t lo = 0, hi = classes_.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            // ascending value order is descending in the quasi-ordering
            Cmp c = qo_.compare(x, classes_[mid].members.front());
            if (c == Cmp::Equivalent) return ClassRef{false, mid};
            if (c == Cmp::Less)
                lo = mid + 1;
            else
                hi = mid;
        }
        return std::nullopt;
    }

    friend ValueTable extract_valuation(const QuasiOrder& qo, const Universe& U);

private:
    explicit ValueTable(QuasiOrder qo) : qo_(std::move(qo)) {}

    QuasiOrder qo_;
    std::string universe_;
    std::vector<ValueClass> classes_;
    std::vector<Element> infinity_;
    std::size_t neutral_ = 0;
    std::vector<std::vector<std::optional<std::size_t>>> sum_;
    AxiomReport checks_;
};

/// Builds and verifies the value table. Checks well-definedness of the
/// addition, strictness and totality of the class order, associativity,
/// cancellation and monotonicity where sums are recorded, neutrality of
/// [1], V1-V4 for the induced map, and the round trip x <= y iff
/// v(y) <= v(x). Throws PreconditionError for orderings and
/// VerificationError carrying the first failing witness.
inline ValueTable extract_valuation(const QuasiOrder& qo, const Universe& U)
{
    using detail::fail;
    using detail::outcome;
    if (classify(qo) != Kind::Valuation)
        throw PreconditionError(qo.id() + " is an ordering (-1 < 0); it has no value semigroup");

    ValueTable t(qo);
    t.universe_ = U.descriptor();
    const Ring ring = qo.ring();
    const Element zero = Element::zero(ring), one = Element::one(ring);
    const detail::UniverseView view(qo, U);
    if (!view.preorder) {
        const AxiomOutcome* bad = !view.consistency.pass    ? &view.consistency
                                  : !view.reflexivity.pass  ? &view.reflexivity
                                                            : &view.transitivity;
        std::string w;
        for (const auto& e : bad->witness) w += (w.empty() ? "" : ", ") + e.to_string();
        throw VerificationError(qo.id() + ": relation is not a total preorder (" + bad->axiom + " fails at " + w + ")");
    }

    // Universe classes, ascending in value order = descending in the relation.
    for (auto g = view.groups.rbegin(); g != view.groups.rend(); ++g) {
        std::vector<Element> members;
        for (auto i : *g) members.push_back(U[i]);
        if (qo.equiv(members.front(), zero)) {
            t.infinity_ = std::move(members);
            continue;
        }
        t.classes_.push_back({std::move(members), false});
    }
    if (t.infinity_.empty()) throw VerificationError(qo.id() + ": 0 is missing from the universe");

    // Closure pass: classes of products of universe elements.
    const std::size_t n = U.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Element p = U[i] * U[j];
            if (t.class_of(p)) continue;
            std::size_t pos = 0;
            while (pos < t.classes_.size() && qo.lt(p, t.classes_[pos].members.front())) ++pos;
            t.classes_.insert(t.classes_.begin() + static_cast<std::ptrdiff_t>(pos), ValueClass{{p}, true});
        }
    const std::size_t k = t.classes_.size();

    AxiomOutcome order = outcome("class-order-strict", "x,y");
    AxiomOutcome well = outcome("addition-well-defined", "x,y");
    AxiomOutcome assoc = outcome("addition-associative", "a,b,c");
    AxiomOutcome cancel = outcome("addition-cancellative", "a,x,y,b");
    AxiomOutcome mono = outcome("addition-monotone", "a,b,c");
    AxiomOutcome neutral = outcome("neutral-element", "x");
    AxiomOutcome v1 = outcome("V1", "0");
    AxiomOutcome v2 = outcome("V2", "1");
    AxiomOutcome v3 = outcome("V3", "x,y");
    AxiomOutcome v4 = outcome("V4", "x,y");
    AxiomOutcome round = outcome("round-trip", "x,y");

    for (std::size_t a = 0; a + 1 < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            order.count++;
            if (!qo.lt(t.classes_[b].members.front(), t.classes_[a].members.front()))
                fail(order, {t.classes_[a].members.front(), t.classes_[b].members.front()});
        }

    // Addition table from universe representatives; every representative
    // pair must land in the same class.
    t.sum_.assign(k, std::vector<std::optional<std::size_t>>(k));
    std::vector<std::optional<ClassRef>> cls(n);
    for (std::size_t i = 0; i < n; ++i) cls[i] = t.class_of(U[i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (cls[i]->infinite || cls[j]->infinite) continue;
            auto c = t.class_of(U[i] * U[j]);
            well.count++;
            if (!c || c->infinite) {
                fail(well, {U[i], U[j]});
                continue;
            }
            auto& slot = t.sum_[cls[i]->index][cls[j]->index];
            if (!slot)
                slot = c->index;
            else if (*slot != c->index)
                fail(well, {U[i], U[j]});
        }

    auto rep = [&](std::size_t c) { return t.classes_[c].members.front(); };
    auto add = [&](std::optional<std::size_t> a, std::optional<std::size_t> b) -> std::optional<std::size_t> {
        if (!a || !b) return std::nullopt;
        return t.sum_[*a][*b];
    };
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t c = 0; c < k; ++c) {
                auto l = add(add(a, b), c), r = add(a, add(b, c));
                if (l && r) {
                    assoc.count++;
                    if (*l != *r) fail(assoc, {rep(a), rep(b), rep(c)});
                }
                // a <= b implies a + c <= b + c
                auto ac = add(a, c), bc = add(b, c);
                if (a <= b && ac && bc) {
                    mono.count++;
                    if (*ac > *bc) fail(mono, {rep(a), rep(b), rep(c)});
                }
            }
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t x = 0; x < k; ++x)
            for (std::size_t y = 0; y < k; ++y)
                for (std::size_t b = 0; b < k; ++b) {
                    auto l = add(add(a, x), b), r = add(add(a, y), b);
                    if (!l || !r) continue;
                    cancel.count++;
                    if (*l == *r && x != y) fail(cancel, {rep(a), rep(x), rep(y), rep(b)});
                }

    auto one_ref = t.class_of(one);
    v2.count = 1;
    if (!one_ref || one_ref->infinite) {
        fail(v2, {one});
    } else {
        t.neutral_ = one_ref->index;
        for (std::size_t x = 0; x < k; ++x) {
            auto s = add(t.neutral_, x);
            if (!s) continue;
            neutral.count++;
            if (*s != x) fail(neutral, {rep(x)});
        }
    }
    v1.count = 1;
    if (auto z = t.class_of(zero); !z || !z->infinite) fail(v1, {zero});

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const ClassRef ci = *cls[i], cj = *cls[j];
            // V3: v(xy) = v(x) + v(y), with infinity absorbing.
            v3.count++;
            auto cp = t.class_of(U[i] * U[j]);
            if (ci.infinite || cj.infinite) {
                if (!cp || !cp->infinite) fail(v3, {U[i], U[j]});
            } else {
                auto s = t.sum_[ci.index][cj.index];
                if (!cp || cp->infinite || !s || *s != cp->index) fail(v3, {U[i], U[j]});
            }
            // V4: v(x + y) >= min(v(x), v(y)), read off against the
            // representative of the smaller value.
            v4.count++;
            const Element& low = cj < ci ? U[j] : U[i];
            if (qo.compare(U[i] + U[j], low) == Cmp::Greater) fail(v4, {U[i], U[j]});
            // Round trip: x <= y iff v(y) <= v(x).
            round.count++;
            bool le = view.table.le(i, j);
            bool value_le = !(ci < cj);
            if (le != value_le) fail(round, {U[i], U[j]});
        }

    t.checks_ = {qo.id(), U.descriptor(), {order, well, assoc, cancel, mono, neutral, v1, v2, v3, v4, round}};
    if (const auto* f = t.checks_.first_failure()) {
        std::string w;
        for (const auto& e : f->witness) w += (w.empty() ? "" : ", ") + e.to_string();
        throw VerificationError(qo.id() + ": value table check " + f->axiom + " fails at (" + w + ")");
    }
    return t;
}

/// V1-V4 for the closed-form valuation map of a valuation-induced oracle,
/// plus agreement of the map with the oracle on every universe pair.
inline AxiomReport check_valuation_map(const QuasiOrder& qo, const Universe& U)
{
    using detail::fail;
    using detail::outcome;
    if (!qo.has_valuation()) throw PreconditionError(qo.id() + " carries no closed-form valuation");
    const auto& v = qo.valuation();
    const Ring ring = qo.ring();
    AxiomOutcome v1 = outcome("V1", "0"), v2 = outcome("V2", "1");
    AxiomOutcome v3 = outcome("V3", "x,y"), v4 = outcome("V4", "x,y");
    AxiomOutcome induces = outcome("induces-relation", "x,y");
    v1.count = v2.count = 1;
    if (!v(Element::zero(ring)).infinite) fail(v1, {Element::zero(ring)});
    if (v(Element::one(ring)) != ExtValue::of(0)) fail(v2, {Element::one(ring)});
    std::vector<ExtValue> val;
    for (const auto& x : U) val.push_back(v(x));
    for (std::size_t i = 0; i < U.size(); ++i)
        for (std::size_t j = 0; j < U.size(); ++j) {
            v3.count++;
            if (v(U[i] * U[j]) != val[i] + val[j]) fail(v3, {U[i], U[j]});
            v4.count++;
            if (v(U[i] + U[j]) < std::min(val[i], val[j])) fail(v4, {U[i], U[j]});
            induces.count++;
            bool le = qo.le(U[i], U[j]);
            if (le != (val[j] <= val[i])) fail(induces, {U[i], U[j]});
        }
    return {qo.id(), U.descriptor(), {v1, v2, v3, v4, induces}};
}

} // namespace qord
