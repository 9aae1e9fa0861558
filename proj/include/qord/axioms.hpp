// SPDX-License-Identifier: Apache-2.0
#pragma once

/**
 * @file axioms.hpp
 * @brief Exhaustive verification of the quasi-ordered ring axioms QR1-QR4,
 * the ordered ring axioms O1-O4, a set of derived sign lemmas, and negative
 * controls built from corrupted oracles.
 *
 * Every check quantifies over all tuples of universe elements. Products and
 * sums of universe elements are formed exactly and compared even when they
 * leave the universe.
 *
 * QR2 and QR3 range over 4-tuples (a, b, x, y). Since the shipped rings are
 * commutative, axb = (ab)x, so the engine groups tuples by the product
 * m = ab and checks one row m*x_1, ..., m*x_n per distinct m. Within a row
 * both axioms reduce to monotonicity statements between two rank vectors,
 * which take linear time once the row is ranked.
 */

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qord/quasi_order.hpp"

namespace qord {

struct AxiomOutcome {
    std::string axiom;
    std::string variables; // names of the witness components, e.g. "a,b,x,y"
    bool pass = true;
    std::uint64_t count = 0; // tuples whose hypothesis held
    std::vector<Element> witness;
    std::string note;
};

struct AxiomReport {
    std::string qo_id;
    std::string universe;
    std::vector<AxiomOutcome> outcomes;

    bool passed() const
    {
        return std::all_of(outcomes.begin(), outcomes.end(), [](const AxiomOutcome& o) { return o.pass; });
    }
    const AxiomOutcome* find(std::string_view axiom) const
    {
        for (const auto& o : outcomes)
            if (o.axiom == axiom) return &o;
        return nullptr;
    }
    const AxiomOutcome* first_failure() const
    {
        for (const auto& o : outcomes)
            if (!o.pass) return &o;
        return nullptr;
    }
};

namespace detail {

using Rank = std::uint32_t;

/// Ranks `xs` under `qo` so that rank(x) < rank(y) iff x < y. Returns
/// nullopt when the oracle contradicts its own sort, which happens only for
/// relations that are not total preorders on `xs`.
inline std::optional<std::vector<Rank>> rank_order(const QuasiOrder& qo, const std::vector<Element>& xs)
{
    const std::size_t n = xs.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Rank> rank(n, 0);
    if (n == 0) return rank;

    if (qo.has_valuation()) {
        std::vector<ExtValue> v;
        v.reserve(n);
        for (const auto& x : xs) v.push_back(qo.valuation()(x));
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return v[j] < v[i]; });
        Rank r = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k > 0 && v[idx[k]] != v[idx[k - 1]]) ++r;
            rank[idx[k]] = r;
        }
        return rank;
    }

    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t i, std::size_t j) { return qo.compare(xs[i], xs[j]) == Cmp::Less; });
    Rank r = 0;
    for (std::size_t k = 1; k < n; ++k) {
        Cmp c = qo.compare(xs[idx[k - 1]], xs[idx[k]]);
        if (c == Cmp::Greater) return std::nullopt;
        if (c == Cmp::Less) ++r;
        rank[idx[k]] = r;
    }
    return rank;
}

inline AxiomOutcome outcome(std::string axiom, std::string variables)
{
    AxiomOutcome o;
    o.axiom = std::move(axiom);
    o.variables = std::move(variables);
    return o;
}

inline void fail(AxiomOutcome& o, std::vector<Element> witness)
{
    if (!o.pass) return;
    o.pass = false;
    o.witness = std::move(witness);
}

/// Per-oracle view of the universe: the relation table, its preorder
/// checks, and ranks when the relation is a total preorder.
struct UniverseView {
    const QuasiOrder* qo = nullptr;
    RelationTable table;
    AxiomOutcome consistency = outcome("consistency", "x,y");
    AxiomOutcome reflexivity = outcome("reflexivity", "x");
    AxiomOutcome transitivity = outcome("transitivity", "x,y,z");
    bool preorder = false;
    std::vector<Rank> rank;
    std::vector<std::vector<std::size_t>> groups; // equivalence classes in ascending order

    UniverseView(const QuasiOrder& q, const Universe& U) : qo(&q), table(q, U)
    {
        const std::size_t n = U.size();
        for (std::size_t i = 0; i < n; ++i) {
            reflexivity.count++;
            if (table.at(i, i) != Cmp::Equivalent) fail(reflexivity, {U[i]});
            for (std::size_t j = i + 1; j < n; ++j) {
                consistency.count++;
                if (table.at(i, j) != reverse(table.at(j, i))) fail(consistency, {U[i], U[j]});
            }
        }
        const std::size_t words = (n + 63) / 64;
        std::vector<std::uint64_t> le(n * words, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (table.le(i, j)) le[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!table.le(i, j)) continue;
                for (std::size_t w = 0; w < words; ++w) {
                    std::uint64_t reach = le[j * words + w];
                    transitivity.count += static_cast<std::uint64_t>(std::popcount(reach));
                    std::uint64_t bad = reach & ~le[i * words + w];
                    if (bad && transitivity.pass) {
                        std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(bad));
                        fail(transitivity, {U[i], U[j], U[k]});
                    }
                }
            }
        preorder = consistency.pass && reflexivity.pass && transitivity.pass;
        if (!preorder) return;

        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return table.lt(i, j); });
        rank.assign(n, 0);
        Rank r = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k > 0 && table.lt(idx[k - 1], idx[k])) ++r;
            rank[idx[k]] = r;
            if (groups.size() <= r) groups.emplace_back();
            groups[r].push_back(idx[k]);
        }
    }
};

/// Distinct products ab over the universe, each with the unordered index
/// pairs {i <= j} producing it, listed in lexicographic order. Rows appear
/// in the order of their first pair.
struct ProductRows {
    std::vector<Element> products;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> pairs;

    explicit ProductRows(const Universe& U)
    {
        std::map<Element, std::size_t, CanonicalLess> seen;
        for (std::uint32_t i = 0; i < U.size(); ++i)
            for (std::uint32_t j = i; j < U.size(); ++j) {
                Element m = U[i] * U[j];
                auto [it, fresh] = seen.emplace(m, products.size());
                if (fresh) {
                    products.push_back(std::move(m));
                    pairs.emplace_back();
                }
                pairs[it->second].emplace_back(i, j);
            }
    }
};

struct RowFailure {
    std::pair<std::uint32_t, std::uint32_t> pair{UINT32_MAX, UINT32_MAX};
    std::size_t row = 0;
    bool found = false;

    void offer(std::pair<std::uint32_t, std::uint32_t> p, std::size_t r)
    {
        if (!found || p < pair) {
            pair = p;
            row = r;
            found = true;
        }
    }
};

/// Per-row monotonicity: QR2 asks that x <= y implies mx <= my, QR3 that
/// mx <= my implies x <= y.
struct RowVerdict {
    bool qr2 = true;
    bool qr3 = true;
};

inline RowVerdict row_verdict_ranked(const UniverseView& view, const std::vector<Rank>& r)
{
    RowVerdict out;
    bool first = true;
    Rank below_max = 0;
    for (const auto& group : view.groups) {
        Rank lo = r[group.front()], hi = lo;
        for (auto i : group) {
            lo = std::min(lo, r[i]);
            hi = std::max(hi, r[i]);
        }
        if (lo != hi) out.qr2 = false;
        if (!first) {
            if (lo < below_max) out.qr2 = false;
            if (lo <= below_max) out.qr3 = false;
        }
        below_max = first ? hi : std::max(below_max, hi);
        first = false;
    }
    return out;
}

/// First failing (x, y) of a row in lexicographic order, for the axiom
/// selected by `qr2`.
inline std::optional<std::pair<std::size_t, std::size_t>> first_row_witness(const QuasiOrder& qo,
                                                                            const UniverseView& view,
                                                                            const std::vector<Element>& row,
                                                                            bool qr2)
{
    const std::size_t n = row.size();
    auto ranks = view.preorder ? rank_order(qo, row) : std::nullopt;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            bool row_le = ranks ? (*ranks)[x] <= (*ranks)[y] : qo.compare(row[x], row[y]) != Cmp::Greater;
            bool base_le = view.table.le(x, y);
            if (qr2 ? (base_le && !row_le) : (row_le && !base_le)) return std::pair{x, y};
        }
    return std::nullopt;
}

/// Rows z + x for every z, x in the universe.
struct SumRows {
    const Universe* universe = nullptr;
    std::vector<std::vector<Element>> rows;

    explicit SumRows(const Universe& U) : universe(&U), rows(U.size(), std::vector<Element>(U.size()))
    {
        for (std::size_t z = 0; z < U.size(); ++z)
            for (std::size_t x = 0; x < U.size(); ++x) rows[z][x] = U[x] + U[z];
    }
};

/// QR4 (x <= y, z not ~ y implies x + z <= y + z) and its unconditional
/// form O4.
inline void sum_axioms(const QuasiOrder& qo, const UniverseView& view, const SumRows& sums, AxiomOutcome& qr4,
                       AxiomOutcome& o4, bool stop_at_qr4_failure = false)
{
    const Universe& U = *sums.universe;
    const std::size_t n = U.size();
    std::vector<std::optional<std::vector<Rank>>> ranks(n);
    std::vector<char> ranked(n, 0);
    auto sum_le = [&](std::size_t x, std::size_t y, std::size_t z) {
        if (!ranked[z]) {
            if (view.preorder) ranks[z] = rank_order(qo, sums.rows[z]);
            ranked[z] = 1;
        }
        if (ranks[z]) return (*ranks[z])[x] <= (*ranks[z])[y];
        return qo.compare(sums.rows[z][x], sums.rows[z][y]) != Cmp::Greater;
    };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (!view.table.le(x, y)) continue;
            for (std::size_t z = 0; z < n; ++z) {
                bool ok = sum_le(x, y, z);
                o4.count++;
                if (!ok) fail(o4, {U[x], U[y], U[z]});
                if (view.table.eq(z, y)) continue;
                qr4.count++;
                if (!ok) {
                    fail(qr4, {U[x], U[y], U[z]});
                    if (stop_at_qr4_failure) return;
                }
            }
        }
}

struct QrBatchResult {
    AxiomReport qr;
    AxiomOutcome o4 = outcome("O4", "x,y,z");
};

inline std::vector<QrBatchResult> run_qr_batch(const std::vector<QuasiOrder>& qos, const Universe& U)
{
    const std::size_t n = U.size();
    const std::uint64_t n2 = static_cast<std::uint64_t>(n) * n;
    const std::size_t zero = U.zero_index(), one = U.one_index();

    std::vector<UniverseView> views;
    views.reserve(qos.size());
    for (const auto& q : qos) {
        if (q.ring() != U.ring()) throw RingMismatch(q.id() + " does not live on " + U.ring().name());
        views.emplace_back(q, U);
    }

    std::vector<QrBatchResult> out(qos.size());
    std::vector<AxiomOutcome> qr1(qos.size(), outcome("QR1", "0,1"));
    std::vector<AxiomOutcome> qr2(qos.size(), outcome("QR2", "a,b,x,y"));
    std::vector<AxiomOutcome> qr3(qos.size(), outcome("QR3", "a,b,x,y"));
    std::vector<AxiomOutcome> qr4(qos.size(), outcome("QR4", "x,y,z"));

    for (std::size_t q = 0; q < qos.size(); ++q) {
        qr1[q].count = 1;
        if (!views[q].table.lt(zero, one)) fail(qr1[q], {U[zero], U[one]});
    }

    // QR2 / QR3 over product rows.
    const ProductRows rows(U);
    std::vector<RowFailure> fail2(qos.size()), fail3(qos.size());
    std::vector<Element> row(n);
    for (std::size_t r = 0; r < rows.products.size(); ++r) {
        bool row_built = false;
        for (std::size_t q = 0; q < qos.size(); ++q) {
            const auto& view = views[q];
            std::optional<std::pair<std::uint32_t, std::uint32_t>> first2, first3;
            for (auto [i, j] : rows.pairs[r]) {
                std::uint64_t ordered = i == j ? 1 : 2;
                if (view.table.le(zero, i) && view.table.le(zero, j)) {
                    qr2[q].count += ordered * n2;
                    if (!first2) first2 = std::pair{i, j};
                }
                if (view.table.lt(zero, i) && view.table.lt(zero, j)) {
                    qr3[q].count += ordered * n2;
                    if (!first3) first3 = std::pair{i, j};
                }
            }
            if (!first2 && !first3) continue;
            if (!row_built) {
                for (std::size_t x = 0; x < n; ++x) row[x] = rows.products[r] * U[x];
                row_built = true;
            }
            RowVerdict verdict;
            auto ranks = view.preorder ? rank_order(qos[q], row) : std::nullopt;
            if (ranks) {
                verdict = row_verdict_ranked(view, *ranks);
            } else {
                verdict.qr2 = !first2 || !first_row_witness(qos[q], view, row, true);
                verdict.qr3 = !first3 || !first_row_witness(qos[q], view, row, false);
            }
            if (first2 && !verdict.qr2) fail2[q].offer(*first2, r);
            if (first3 && !verdict.qr3) fail3[q].offer(*first3, r);
        }
    }
    for (std::size_t q = 0; q < qos.size(); ++q) {
        for (int axiom = 2; axiom <= 3; ++axiom) {
            const RowFailure& f = axiom == 2 ? fail2[q] : fail3[q];
            if (!f.found) continue;
            for (std::size_t x = 0; x < n; ++x) row[x] = rows.products[f.row] * U[x];
            auto xy = first_row_witness(qos[q], views[q], row, axiom == 2);
            fail(axiom == 2 ? qr2[q] : qr3[q], {U[f.pair.first], U[f.pair.second], U[xy->first], U[xy->second]});
        }
    }

    const SumRows sums(U);
    for (std::size_t q = 0; q < qos.size(); ++q) sum_axioms(qos[q], views[q], sums, qr4[q], out[q].o4);

    for (std::size_t q = 0; q < qos.size(); ++q) {
        auto& rep = out[q].qr;
        rep.qo_id = qos[q].id();
        rep.universe = U.descriptor();
        rep.outcomes = {views[q].consistency, views[q].reflexivity, views[q].transitivity,
                        qr1[q],            qr2[q],            qr3[q],
                        qr4[q]};
    }
    return out;
}

} // namespace detail

/// QR1-QR4 plus the preorder laws (consistency of reversed pairs,
/// reflexivity, transitivity) for several oracles on one universe. Shared
/// products and sums are formed once for the whole batch.
inline std::vector<AxiomReport> check_qr_axioms(const std::vector<QuasiOrder>& qos, const Universe& U)
{
    std::vector<AxiomReport> out;
    for (auto& r : detail::run_qr_batch(qos, U)) out.push_back(std::move(r.qr));
    return out;
}

inline AxiomReport check_qr_axioms(const QuasiOrder& qo, const Universe& U)
{
    return check_qr_axioms(std::vector<QuasiOrder>{qo}, U).front();
}

/// Sign lemmas that follow from QR1-QR4. The ultrametric inequality and the
/// positivity of every element are checked for valuation-type oracles only;
/// the unconditional form of "a < b implies -b < -a" for orderings only.
inline AxiomReport check_derived_lemmas(const QuasiOrder& qo, const Universe& U)
{
    using detail::fail;
    using detail::outcome;
    const std::size_t n = U.size();
    const RelationTable t(qo, U);
    const std::size_t zero = U.zero_index();
    const Kind kind = classify(qo);
    std::vector<std::size_t> negation(n);
    for (std::size_t i = 0; i < n; ++i) negation[i] = *U.index_of(-U[i]);
    auto neg = [&](std::size_t i) { return negation[i]; };

    AxiomOutcome absorb = outcome("support-absorption", "x,y");
    AxiomOutcome neg_support = outcome("support-negation", "x");
    AxiomOutcome nonpos = outcome("negation-of-nonpositive", "x");
    AxiomOutcome reverse_neg = outcome("negation-reverses-negatives", "a,b");
    AxiomOutcome strict_neg = outcome("strict-negation-reverses", "a,b");
    AxiomOutcome sign = outcome("ordering-sign-symmetry", "x");
    AxiomOutcome separated = outcome("ordering-sign-separation", "x");
    AxiomOutcome positive = outcome("valuation-positivity", "x");
    AxiomOutcome ultra = outcome("valuation-ultrametric", "x,y");

    for (std::size_t x = 0; x < n; ++x) {
        const std::size_t nx = neg(x);
        if (t.eq(x, zero)) {
            neg_support.count++;
            if (!t.eq(nx, zero)) fail(neg_support, {U[x]});
            for (std::size_t y = 0; y < n; ++y) {
                absorb.count++;
                if (!qo.equiv(U[x] + U[y], U[y])) fail(absorb, {U[x], U[y]});
            }
        }
        if (t.le(x, zero)) {
            nonpos.count++;
            if (!t.le(zero, nx)) fail(nonpos, {U[x]});
        }
        if (kind == Kind::Ordering) {
            sign.count++;
            if (t.le(zero, x) != t.le(nx, zero)) fail(sign, {U[x]});
            if (!t.eq(x, zero)) {
                separated.count++;
                if (t.eq(x, nx)) fail(separated, {U[x]});
            }
        } else {
            positive.count++;
            if (!t.le(zero, x)) fail(positive, {U[x]});
        }
    }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t na = neg(a), nb = neg(b);
            if (t.le(a, b) && t.lt(b, zero)) {
                reverse_neg.count++;
                if (!(t.lt(zero, nb) && t.le(nb, na))) fail(reverse_neg, {U[a], U[b]});
            }
            bool strict_applies = t.lt(a, b) && (kind == Kind::Ordering || t.lt(b, zero));
            if (strict_applies) {
                strict_neg.count++;
                if (!t.lt(nb, na)) fail(strict_neg, {U[a], U[b]});
            }
            if (kind == Kind::Valuation) {
                ultra.count++;
                const Element& mx = t.le(a, b) ? U[b] : U[a];
                if (qo.compare(U[a] + U[b], mx) == Cmp::Greater) fail(ultra, {U[a], U[b]});
            }
        }

    AxiomReport rep{qo.id(), U.descriptor(), {absorb, neg_support, nonpos, reverse_neg, strict_neg}};
    if (kind == Kind::Ordering) {
        rep.outcomes.push_back(sign);
        rep.outcomes.push_back(separated);
    } else {
        rep.outcomes.push_back(positive);
        rep.outcomes.push_back(ultra);
    }
    return rep;
}

namespace detail {

inline AxiomReport ordering_report(const QuasiOrder& qo, const Universe& U, const QrBatchResult& batch)
{
    const std::size_t n = U.size();
    const RelationTable t(qo, U);
    const std::size_t zero = U.zero_index();
    const Element z = U[zero];

    AxiomOutcome o1 = *batch.qr.find("QR1");
    o1.axiom = "O1";
    AxiomOutcome o2 = *batch.qr.find("QR2");
    o2.axiom = "O2";
    AxiomOutcome o3 = outcome("O3", "x,y");
    AxiomOutcome add = outcome("cone-additive", "x,y");
    AxiomOutcome mul = outcome("cone-multiplicative", "x,y");
    AxiomOutcome total = outcome("cone-total", "x");
    AxiomOutcome support = outcome("cone-support", "x");

    for (std::size_t x = 0; x < n; ++x) {
        const std::size_t nx = *U.index_of(-U[x]);
        total.count++;
        if (!t.le(zero, x) && !t.le(zero, nx)) fail(total, {U[x]});
        support.count++;
        if ((t.le(zero, x) && t.le(zero, nx)) != t.eq(x, zero)) fail(support, {U[x]});
        for (std::size_t y = 0; y < n; ++y) {
            Element prod = U[x] * U[y];
            if (qo.le(prod, z)) {
                o3.count++;
                if (!t.le(x, zero) && !t.le(y, zero)) fail(o3, {U[x], U[y]});
            }
            if (t.le(zero, x) && t.le(zero, y)) {
                add.count++;
                mul.count++;
                if (!qo.le(z, U[x] + U[y])) fail(add, {U[x], U[y]});
                if (!qo.le(z, prod)) fail(mul, {U[x], U[y]});
            }
        }
    }
    return {qo.id(), U.descriptor(), {o1, o2, o3, batch.o4, add, mul, total, support}};
}

} // namespace detail

/// O1-O4 and closure of the positive cone P = {x : 0 <= x} for several
/// orderings on one universe. Throws PreconditionError unless every oracle
/// classifies as an ordering.
inline std::vector<AxiomReport> check_ordering_axioms(const std::vector<QuasiOrder>& qos, const Universe& U)
{
    for (const auto& qo : qos)
        if (classify(qo) != Kind::Ordering)
            throw PreconditionError(qo.id() +
                                    " is not an ordering (-1 < 0 fails); the ordered ring axioms do not apply");
    const auto batch = detail::run_qr_batch(qos, U);
    std::vector<AxiomReport> out;
    for (std::size_t q = 0; q < qos.size(); ++q) out.push_back(detail::ordering_report(qos[q], U, batch[q]));
    return out;
}

inline AxiomReport check_ordering_axioms(const QuasiOrder& qo, const Universe& U)
{
    return check_ordering_axioms(std::vector<QuasiOrder>{qo}, U).front();
}

// ---------------------------------------------------------------------------
// Negative controls.

namespace mutants {

/// Less and Greater exchanged.
inline QuasiOrder swap(const QuasiOrder& qo)
{
    return qo.with_compare(qo.id() + "~swap", [qo](const Element& x, const Element& y) { return reverse(qo.compare(x, y)); });
}

/// Pulls the relation back along x -> |x|, where |x| is whichever of x, -x
/// is nonnegative. Makes -1 and 1 equivalent.
inline QuasiOrder sign_collapse(const QuasiOrder& qo)
{
    return qo.with_compare(qo.id() + "~collapse", [qo](const Element& x, const Element& y) {
        const Element zero = Element::zero(x.ring());
        const Element ax = qo.le(zero, x) ? x : -x;
        const Element ay = qo.le(zero, y) ? y : -y;
        return qo.compare(ax, ay);
    });
}

/// Finds the first strict chain a < b < c in the universe and declares
/// c < a, keeping every other answer. Throws if no such chain exists.
inline QuasiOrder break_transitivity(const QuasiOrder& qo, const Universe& U)
{
    const RelationTable t(qo, U);
    for (std::size_t a = 0; a < U.size(); ++a)
        for (std::size_t b = 0; b < U.size(); ++b) {
            if (!t.lt(a, b)) continue;
            for (std::size_t c = 0; c < U.size(); ++c) {
                if (!t.lt(b, c)) continue;
                Element ea = U[a], ec = U[c];
                return qo.with_compare(qo.id() + "~break", [qo, ea, ec](const Element& x, const Element& y) {
                    if (x == ea && y == ec) return Cmp::Greater;
                    if (x == ec && y == ea) return Cmp::Less;
                    return qo.compare(x, y);
                });
            }
        }
    throw PreconditionError(qo.id() + " has no strict 3-chain on " + U.descriptor());
}

} // namespace mutants

struct MutantResult {
    std::string mutant; // "swap", "collapse", "break"
    AxiomReport report;
    Kind classified_before = Kind::Unknown;
    Kind classified_after = Kind::Unknown;
    std::string ordering_suite_error; // set when the O-suite precondition rejected the mutant
    bool caught() const { return !report.passed(); }
};

struct MutationReport {
    std::string base_id;
    std::vector<MutantResult> mutants;
    bool passed() const
    {
        return std::all_of(mutants.begin(), mutants.end(), [](const MutantResult& m) { return m.caught(); });
    }
};

/// Stops at the first failing group of checks: preorder laws, QR1, QR4,
/// then the rest. Outcomes after the first failure are not evaluated and
/// are left out of the report.
inline AxiomReport check_qr_axioms_until_failure(const QuasiOrder& qo, const Universe& U)
{
    const detail::UniverseView view(qo, U);
    AxiomReport rep{qo.id(), U.descriptor(), {view.consistency, view.reflexivity, view.transitivity}};
    if (!rep.passed()) return rep;
    AxiomOutcome qr1 = detail::outcome("QR1", "0,1");
    qr1.count = 1;
    if (!view.table.lt(U.zero_index(), U.one_index())) detail::fail(qr1, {U[U.zero_index()], U[U.one_index()]});
    rep.outcomes.push_back(qr1);
    if (!rep.passed()) return rep;
    AxiomOutcome qr4 = detail::outcome("QR4", "x,y,z"), o4 = detail::outcome("O4", "x,y,z");
    detail::sum_axioms(qo, view, detail::SumRows(U), qr4, o4, true);
    qr4.note = "stopped at the first failure";
    rep.outcomes.push_back(qr4);
    if (!rep.passed()) return rep;
    return check_qr_axioms(qo, U);
}

/// Runs the QR battery on corrupted variants of `qo`: Less and Greater
/// swapped, one transitivity chain broken, and for orderings -1 ~ 1 forced.
/// The suite passes iff every mutant fails at least one axiom.
inline MutationReport mutation_suite(const QuasiOrder& qo, const Universe& U)
{
    MutationReport out{qo.id(), {}};
    const Kind before = classify(qo);
    auto run = [&](std::string name, const QuasiOrder& m) {
        MutantResult r{std::move(name), check_qr_axioms_until_failure(m, U), before, classify(m), {}};
        if (before == Kind::Ordering) {
            try {
                (void)check_ordering_axioms(m, U);
            } catch (const PreconditionError& e) {
                r.ordering_suite_error = e.what();
            }
        }
        out.mutants.push_back(std::move(r));
    };
    run("swap", mutants::swap(qo));
    if (before == Kind::Ordering) run("collapse", mutants::sign_collapse(qo));
    run("break", mutants::break_transitivity(qo, U));
    return out;
}

} // namespace qord
