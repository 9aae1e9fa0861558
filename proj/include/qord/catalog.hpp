// SPDX-License-Identifier: Apache-2.0
#pragma once

/**
 * @file catalog.hpp
 * @brief Named quasi-orderings on the shipped rings, addressable by stable
 * string ids such as `Z:vp:3`, `QX:Pna` or `QXY:triv:Y`.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qord/quasi_order.hpp"

namespace qord {

/// A coarsening claim attached to a catalog entry. `holds` claims
/// this <= coarser; otherwise the claim is a refutation with an explicit
/// witness pair.
struct DeclaredFact {
    std::string coarser;
    bool holds = true;
    std::optional<std::pair<Element, Element>> witness;
    std::string citation;
};

/// Sign of a valuation over the whole ring, known from its closed form.
/// Used by exact rules that decide nonexistence questions a finite search
/// cannot.
enum class ValueSign { Unknown, Nonnegative, Nonpositive };

struct CatalogEntry {
    QuasiOrder qo;
    std::string description;
    std::vector<DeclaredFact> facts;
    ValueSign value_sign = ValueSign::Unknown;

    const std::string& id() const { return qo.id(); }

    const DeclaredFact* fact_about(const std::string& coarser) const
    {
        auto it = std::find_if(facts.begin(), facts.end(), [&](const DeclaredFact& f) { return f.coarser == coarser; });
        return it == facts.end() ? nullptr : &*it;
    }
};

struct Catalog {
    Ring ring;
    std::vector<CatalogEntry> entries;

    const CatalogEntry* find(const std::string& id) const
    {
        auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.id() == id; });
        return it == entries.end() ? nullptr : &*it;
    }
    std::vector<QuasiOrder> quasi_orders() const
    {
        std::vector<QuasiOrder> out;
        for (const auto& e : entries) out.push_back(e.qo);
        return out;
    }
};

namespace valuations {

inline ExtValue p_adic(const Element& x, long p)
{
    Integer n = x.integer();
    if (n == 0) return ExtValue::infinity();
    std::int64_t k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return ExtValue::of(k);
}

inline ExtValue minus_degree(const Element& f)
{
    if (f.is_zero()) return ExtValue::infinity();
    return ExtValue::of(-static_cast<std::int64_t>(f.poly().leading().mono.degree()));
}

/// Order of vanishing at 0 of a univariate polynomial.
inline ExtValue lowest_exponent(const Element& f)
{
    if (f.is_zero()) return ExtValue::infinity();
    return ExtValue::of(f.poly().lowest().mono.x);
}

/// Minimum exponent pair under the inverse lexicographic order (compare the
/// Y exponent first), stored as (Y exponent, X exponent).
inline ExtValue invlex_min(const Element& f)
{
    if (f.is_zero()) return ExtValue::infinity();
    ExtValue best = ExtValue::infinity();
    for (const auto& t : f.poly().terms()) best = std::min(best, ExtValue::of(t.mono.y, t.mono.x));
    return best;
}

/// Minimum X exponent over the Y-free monomials; infinite if none.
inline ExtValue min_x_over_y_free(const Element& f)
{
    ExtValue best = ExtValue::infinity();
    for (const auto& t : f.poly().terms())
        if (t.mono.y == 0) best = std::min(best, ExtValue::of(t.mono.x));
    return best;
}

inline ExtValue min_y(const Element& f)
{
    ExtValue best = ExtValue::infinity();
    for (const auto& t : f.poly().terms()) best = std::min(best, ExtValue::of(t.mono.y));
    return best;
}

} // namespace valuations

namespace orderings {

inline Cmp from_sign(int s) { return s > 0 ? Cmp::Less : s < 0 ? Cmp::Greater : Cmp::Equivalent; }

/// Sign of the coefficient of y - x at its lowest (from_top == false) or
/// highest monomial, without forming the difference.
inline int difference_sign(const Poly& x, const Poly& y, bool from_top)
{
    const auto& a = x.terms();
    const auto& b = y.terms();
    if (!from_top) {
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) return rational_sign(a[i].coef) > 0 ? -1 : 1;
            if (i == a.size() || b[j].mono < a[i].mono) return rational_sign(b[j].coef) > 0 ? 1 : -1;
            if (int c = rational_compare(b[j].coef, a[i].coef); c != 0) return c;
            ++i;
            ++j;
        }
        return 0;
    }
    std::size_t i = a.size(), j = b.size();
    while (i > 0 || j > 0) {
        if (j == 0 || (i > 0 && b[j - 1].mono < a[i - 1].mono)) return rational_sign(a[i - 1].coef) > 0 ? -1 : 1;
        if (i == 0 || a[i - 1].mono < b[j - 1].mono) return rational_sign(b[j - 1].coef) > 0 ? 1 : -1;
        if (int c = rational_compare(b[j - 1].coef, a[i - 1].coef); c != 0) return c;
        --i;
        --j;
    }
    return 0;
}

} // namespace orderings

namespace detail {

inline DeclaredFact coarser_than(std::string coarser, std::string citation)
{
    return {std::move(coarser), true, std::nullopt, std::move(citation)};
}

inline const char* kMaximumCitation = "the trivial quasi-ordering is the maximum of its fixed-support tree";

inline Catalog integer_catalog(int prime_bound)
{
    const Ring Z = Ring::integers();
    const Ideal zero = Ideal::zero(Z);
    Catalog c{Z, {}};

    auto leq = QuasiOrder(
        "Z:leq", Z,
        [](const Element& x, const Element& y) {
            return x.integer() < y.integer() ? Cmp::Less : y.integer() < x.integer() ? Cmp::Greater : Cmp::Equivalent;
        },
        Kind::Ordering, zero, "standard ordering of the integers");
    c.entries.push_back({leq, "x <= y iff y - x >= 0", {coarser_than("Z:triv:0", kMaximumCitation)}});

    for (int p = 2; p <= prime_bound; ++p) {
        if (!is_prime(p)) continue;
        auto id = "Z:vp:" + std::to_string(p);
        auto vp = QuasiOrder::from_valuation(
            id, Z, [p](const Element& x) { return valuations::p_adic(x, p); }, zero,
            "p-adic valuation for p = " + std::to_string(p));
        c.entries.push_back({vp, "x <= y iff v_p(y) <= v_p(x), v_p = exponent of p, v_p(0) = inf",
                             {coarser_than("Z:triv:0", kMaximumCitation)}, ValueSign::Nonnegative});
    }

    c.entries.push_back({QuasiOrder::trivial(zero), "two classes: {0} and Z \\ {0}", {}, ValueSign::Nonnegative});
    for (int p = 2; p <= prime_bound; ++p) {
        if (!is_prime(p)) continue;
        Ideal P = Ideal::integers({p});
        c.entries.push_back({QuasiOrder::trivial(P), "two classes: (p) and its complement", {}, ValueSign::Nonnegative});
    }
    return c;
}

inline Catalog univariate_catalog()
{
    const Ring R = Ring::poly_uni();
    const Ideal zero = Ideal::zero(R);
    const Ideal X = Ideal::monomial(R, {{1, 0}});
    Catalog c{R, {}};

    auto pa = QuasiOrder(
        "QX:Pa", R,
        [](const Element& x, const Element& y) {
            return orderings::from_sign(orderings::difference_sign(x.poly(), y.poly(), false));
        },
        Kind::Ordering, zero,
        "cone of polynomials whose lowest nonzero coefficient is positive; conventionally named 'Archimedean' "
        "although X is infinitesimal under this cone");
    c.entries.push_back({pa, "P = {f : coefficient of the lowest monomial of f is > 0} u {0}",
                         {coarser_than("QX:triv:0", kMaximumCitation)}});

    auto pna = QuasiOrder(
        "QX:Pna", R,
        [](const Element& x, const Element& y) {
            return orderings::from_sign(orderings::difference_sign(x.poly(), y.poly(), true));
        },
        Kind::Ordering, zero,
        "cone of polynomials with positive leading coefficient; conventionally named "
        "'non-Archimedean' although X is infinitely large under this cone");
    c.entries.push_back({pna, "P = {f : leading coefficient of f is > 0} u {0}",
                         {coarser_than("QX:vdeg", "the leading-coefficient cone is compatible with -deg"),
                          coarser_than("QX:triv:0", kMaximumCitation)}});

    auto vdeg = QuasiOrder::from_valuation("QX:vdeg", R, valuations::minus_degree, zero, "degree valuation");
    c.entries.push_back({vdeg, "v(f) = -deg f", {coarser_than("QX:triv:0", kMaximumCitation)}, ValueSign::Nonpositive});

    auto w = QuasiOrder::from_valuation("QX:w", R, valuations::lowest_exponent, zero, "X-adic valuation");
    c.entries.push_back({w, "w(f) = order of vanishing of f at 0", {coarser_than("QX:triv:0", kMaximumCitation)},
                         ValueSign::Nonnegative});

    auto eval0 = QuasiOrder(
        "QX:eval0", R,
        [](const Element& x, const Element& y) {
            const int c = rational_compare(x.poly().constant_term(), y.poly().constant_term());
            return c < 0 ? Cmp::Less : c > 0 ? Cmp::Greater : Cmp::Equivalent;
        },
        Kind::Ordering, X,
        "derived example: evaluation at 0, an ordering with support (X) that properly contains the "
        "cone of QX:Pa");
    c.entries.push_back({eval0, "f <= g iff f(0) <= g(0)", {coarser_than("QX:triv:X", kMaximumCitation)}});

    c.entries.push_back({QuasiOrder::trivial(zero), "two classes: {0} and its complement", {}, ValueSign::Nonnegative});
    c.entries.push_back({QuasiOrder::trivial(X), "two classes: (X) and its complement", {}, ValueSign::Nonnegative});
    return c;
}

inline Catalog bivariate_catalog()
{
    const Ring R = Ring::poly_bi();
    const Ideal zero = Ideal::zero(R);
    const Ideal Y = Ideal::monomial(R, {{0, 1}});
    const Ideal XY = Ideal::monomial(R, {{1, 0}, {0, 1}});
    const Element x = Element::x(R), y = Element::y(R);
    Catalog c{R, {}};

    const char* diamond = "v refines both w and u in the bivariate diamond";
    auto v = QuasiOrder::from_valuation("QXY:v", R, valuations::invlex_min, zero,
                                        "Z x Z valued, inverse lexicographic (Y exponent compared first)");
    c.entries.push_back({v, "v(f) = min over monomials X^i Y^j of (i, j) in inverse lexicographic order",
                         {coarser_than("QXY:w", diamond), coarser_than("QXY:u", diamond),
                          coarser_than("QXY:triv:0", kMaximumCitation),
                          coarser_than("QXY:triv:Y", "v lies below the trivial quasi-ordering at (Y)")},
                         ValueSign::Nonnegative});

    auto w = QuasiOrder::from_valuation("QXY:w", R, valuations::min_x_over_y_free, Y,
                                        "X-adic valuation of f(X, 0), support (Y)");
    c.entries.push_back(
        {w, "w(f) = min X exponent over the Y-free monomials of f (inf if none)",
         {coarser_than("QXY:triv:Y", kMaximumCitation),
          {"QXY:u", false, std::pair{y, y * y}, "w(Y) = w(Y^2) = inf while u(Y) = 1 < 2 = u(Y^2)"}},
         ValueSign::Nonnegative});

    auto u = QuasiOrder::from_valuation("QXY:u", R, valuations::min_y, zero, "Y-adic valuation");
    c.entries.push_back(
        {u, "u(f) = min Y exponent over the monomials of f",
         {coarser_than("QXY:triv:0", kMaximumCitation),
          coarser_than("QXY:triv:Y", "(Y) is u-convex"),
          {"QXY:w", false, std::pair{x, x * x}, "u(X) = u(X^2) = 0 while w(X) = 1 < 2 = w(X^2)"}},
         ValueSign::Nonnegative});

    c.entries.push_back({QuasiOrder::trivial(zero), "two classes: {0} and its complement", {}, ValueSign::Nonnegative});
    c.entries.push_back({QuasiOrder::trivial(Y), "two classes: (Y) and its complement", {}, ValueSign::Nonnegative});
    c.entries.push_back({QuasiOrder::trivial(XY), "two classes: (X, Y) and its complement", {}, ValueSign::Nonnegative});
    return c;
}

} // namespace detail

inline constexpr int kDefaultPrimeBound = 5;

inline Catalog catalog(Ring ring, int prime_bound = kDefaultPrimeBound)
{
    switch (ring.id()) {
    case RingId::Integers: return detail::integer_catalog(prime_bound);
    case RingId::PolyUni: return detail::univariate_catalog();
    case RingId::PolyBi: return detail::bivariate_catalog();
    }
    return {};
}

/// Ring encoded in the prefix of a catalog id.
inline Ring ring_of_id(const std::string& id)
{
    auto colon = id.find(':');
    if (colon == std::string::npos) throw ParseError("quasi-ordering id '" + id + "' has no ring prefix");
    return parse_ring(id.substr(0, colon));
}

/// Resolves an id against the catalog. Beyond the catalog proper, `Z:vp:N`
/// resolves for any prime N and `<ring>:triv:<ideal>` for any shipped prime.
inline CatalogEntry find_entry(const std::string& id, int prime_bound = kDefaultPrimeBound)
{
    const Ring ring = ring_of_id(id);
    Catalog c = catalog(ring, prime_bound);
    if (const auto* e = c.find(id)) return *e;

    const std::string rest = id.substr(id.find(':') + 1);
    if (ring.id() == RingId::Integers && rest.rfind("vp:", 0) == 0) {
        long p = std::stol(rest.substr(3));
        if (detail::is_prime(p)) {
            Catalog wide = catalog(ring, static_cast<int>(p));
            if (const auto* e = wide.find(id)) return *e;
        }
    }
    if (rest.rfind("triv:", 0) == 0) {
        Ideal q = Ideal::parse(ring, rest.substr(5));
        if (q.is_prime()) {
            auto t = QuasiOrder::trivial(q);
            return {t, "two classes: " + q.name() + " and its complement", {}, ValueSign::Nonnegative};
        }
    }
    throw ParseError("unknown quasi-ordering id '" + id + "'");
}

} // namespace qord
