// SPDX-License-Identifier: Apache-2.0
#pragma once

/**
 * @file ring.hpp
 * @brief Exact arithmetic for the three concrete rings: the integers, Q[X]
 * and Q[X,Y].
 *
 * Integers are arbitrary precision. Polynomials are sparse: a vector of
 * terms sorted ascending in graded lexicographic order (X before Y, so
 * Y < X < Y^2 < XY < X^2), with no zero coefficients. The zero polynomial
 * is the empty vector. Every element has exactly one representation, so
 * structural equality is mathematical equality.
 */

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qord/error.hpp"

namespace qord {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class RingId : std::uint8_t { Integers, PolyUni, PolyBi };

/// Handle to one of the shipped rings. Cheap to copy; compares by id.
class Ring {
public:
    constexpr Ring() = default;
    constexpr explicit Ring(RingId id) : id_(id) {}

    static constexpr Ring integers() { return Ring(RingId::Integers); }
    static constexpr Ring poly_uni() { return Ring(RingId::PolyUni); }
    static constexpr Ring poly_bi() { return Ring(RingId::PolyBi); }

    constexpr RingId id() const { return id_; }
    constexpr bool is_polynomial() const { return id_ != RingId::Integers; }
    constexpr int variables() const
    {
        return id_ == RingId::Integers ? 0 : id_ == RingId::PolyUni ? 1 : 2;
    }
    // All shipped rings are commutative.
    constexpr bool commutative() const { return true; }

    /// Short identifier used in catalog ids and on the command line.
    std::string short_name() const
    {
        switch (id_) {
        case RingId::Integers: return "Z";
        case RingId::PolyUni: return "QX";
        case RingId::PolyBi: return "QXY";
        }
        return "?";
    }

    std::string name() const
    {
        switch (id_) {
        case RingId::Integers: return "Z";
        case RingId::PolyUni: return "Q[X]";
        case RingId::PolyBi: return "Q[X,Y]";
        }
        return "?";
    }

    friend constexpr bool operator==(Ring, Ring) = default;

private:
    RingId id_ = RingId::Integers;
};

inline Ring parse_ring(std::string_view s)
{
    if (s == "Z") return Ring::integers();
    if (s == "QX") return Ring::poly_uni();
    if (s == "QXY") return Ring::poly_bi();
    throw ParseError("unknown ring id '" + std::string(s) + "' (expected Z, QX or QXY)");
}

/// Exponent pair X^x Y^y.
struct Monomial {
    std::uint32_t x = 0;
    std::uint32_t y = 0;

    constexpr std::uint32_t degree() const { return x + y; }
    constexpr bool is_one() const { return x == 0 && y == 0; }
    constexpr bool divides(Monomial other) const { return x <= other.x && y <= other.y; }

    friend constexpr Monomial operator*(Monomial a, Monomial b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr bool operator==(Monomial, Monomial) = default;
    // graded lexicographic, X before Y
    friend constexpr std::strong_ordering operator<=>(Monomial a, Monomial b)
    {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        return a.x <=> b.x;
    }
};

struct Term {
    Monomial mono;
    Rational coef;

    friend bool operator==(const Term&, const Term&) = default;
};

class Poly {
public:
    Poly() = default;

    /// Builds a canonical polynomial from arbitrary terms (any order,
    /// repeated monomials, zero coefficients allowed).
    static Poly from_terms(std::vector<Term> terms)
    {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.mono < b.mono; });
        Poly p;
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
                p.terms_.back().coef += t.coef;
            else
                p.terms_.push_back(std::move(t));
        }
        std::erase_if(p.terms_, [](const Term& t) { return t.coef == 0; });
        return p;
    }

    static Poly constant(Rational c)
    {
        Poly p;
        if (c != 0) p.terms_.push_back({Monomial{}, std::move(c)});
        return p;
    }

    static Poly monomial(Monomial m, Rational c = 1)
    {
        Poly p;
        if (c != 0) p.terms_.push_back({m, std::move(c)});
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Lowest term in graded lexicographic order. Requires nonzero.
    const Term& lowest() const { return terms_.front(); }
    /// Leading term. Requires nonzero.
    const Term& leading() const { return terms_.back(); }

    Rational constant_term() const
    {
        if (!terms_.empty() && terms_.front().mono.is_one()) return terms_.front().coef;
        return 0;
    }

    friend Poly operator+(const Poly& a, const Poly& b)
    {
        Poly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin(), j = b.terms_.begin();
        while (i != a.terms_.end() && j != b.terms_.end()) {
            if (i->mono < j->mono) {
                r.terms_.push_back(*i++);
            } else if (j->mono < i->mono) {
                r.terms_.push_back(*j++);
            } else {
                Rational c = i->coef + j->coef;
                if (c != 0) r.terms_.push_back({i->mono, std::move(c)});
                ++i;
                ++j;
            }
        }
        r.terms_.insert(r.terms_.end(), i, a.terms_.end());
        r.terms_.insert(r.terms_.end(), j, b.terms_.end());
        return r;
    }

    friend Poly operator-(const Poly& a)
    {
        Poly r = a;
        for (auto& t : r.terms_) t.coef = -t.coef;
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Term> out;
        out.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coef * t.coef});
        return from_terms(std::move(out));
    }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    std::vector<Term> terms_;
};

/// An element of one of the shipped rings.
class Element {
public:
    Element() = default;
    Element(Ring ring, Integer value) : ring_(ring), value_(std::move(value))
    {
        if (ring.is_polynomial()) value_ = Poly::constant(Rational(std::get<Integer>(value_)));
    }
    Element(Ring ring, Poly value) : ring_(ring), value_(std::move(value))
    {
        if (!ring.is_polynomial()) throw RingMismatch("polynomial value given for the integers");
        if (ring.id() == RingId::PolyUni)
            for (const auto& t : poly().terms())
                if (t.mono.y != 0) throw RingMismatch("Y does not occur in Q[X]");
    }

    static Element from_int(Ring ring, long long v) { return Element(ring, Integer(v)); }
    static Element zero(Ring ring) { return from_int(ring, 0); }
    static Element one(Ring ring) { return from_int(ring, 1); }
    static Element x(Ring ring) { return Element(ring, Poly::monomial({1, 0})); }
    static Element y(Ring ring) { return Element(ring, Poly::monomial({0, 1})); }

    Ring ring() const { return ring_; }
    bool is_integer() const { return std::holds_alternative<Integer>(value_); }
    const Integer& integer() const { return std::get<Integer>(value_); }
    const Poly& poly() const { return std::get<Poly>(value_); }

    bool is_zero() const { return is_integer() ? integer() == 0 : poly().is_zero(); }

    /// Number of nonzero terms (integers count as a single constant term).
    std::size_t term_count() const
    {
        if (is_integer()) return integer() == 0 ? 0 : 1;
        return poly().size();
    }

    friend Element operator+(const Element& a, const Element& b)
    {
        check_same(a, b);
        if (a.is_integer()) return Element(a.ring_, Integer(a.integer() + b.integer()));
        return Element(a.ring_, a.poly() + b.poly(), Trusted{});
    }
    friend Element operator-(const Element& a)
    {
        if (a.is_integer()) return Element(a.ring_, Integer(-a.integer()));
        return Element(a.ring_, -a.poly(), Trusted{});
    }
    friend Element operator-(const Element& a, const Element& b) { return a + (-b); }
    friend Element operator*(const Element& a, const Element& b)
    {
        check_same(a, b);
        if (a.is_integer()) return Element(a.ring_, Integer(a.integer() * b.integer()));
        return Element(a.ring_, a.poly() * b.poly(), Trusted{});
    }

    friend bool operator==(const Element& a, const Element& b)
    {
        return a.ring_ == b.ring_ && a.value_ == b.value_;
    }

    std::string to_string() const;

private:
    struct Trusted {};
    Element(Ring ring, Poly value, Trusted) : ring_(ring), value_(std::move(value)) {}

    static void check_same(const Element& a, const Element& b)
    {
        if (a.ring_ != b.ring_)
            throw RingMismatch("operands belong to " + a.ring_.name() + " and " + b.ring_.name());
    }

    Ring ring_;
    std::variant<Integer, Poly> value_;
};

enum class ArithOp { Add, Mul, Neg };

/// Single entry point for the three ring operations; `y` is ignored for Neg.
inline Element ring_arith(const Element& x, const Element& y, ArithOp op)
{
    switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Neg: return -x;
    }
    return x;
}

// ---------------------------------------------------------------------------
// Canonical enumeration order: fewer terms first, then term by term from the
// lowest monomial, comparing monomial, then |coefficient|, then sign
// (positive first). On the integers this is 0, 1, -1, 2, -2, ...

/// -1, 0 or 1.
inline int rational_sign(const Rational& a) { return boost::multiprecision::numerator(a).sign(); }

/// Three-way comparison by cross-multiplication; integral values compare
/// their numerators directly.
inline int rational_compare(const Rational& a, const Rational& b)
{
    const Integer na = boost::multiprecision::numerator(a), nb = boost::multiprecision::numerator(b);
    const Integer da = boost::multiprecision::denominator(a), db = boost::multiprecision::denominator(b);
    if (da == 1 && db == 1) return na.compare(nb) < 0 ? -1 : na.compare(nb) > 0 ? 1 : 0;
    const Integer l = na * db, r = nb * da;
    return l < r ? -1 : r < l ? 1 : 0;
}

namespace detail {

inline std::strong_ordering compare_coef(const Rational& a, const Rational& b)
{
    const int sa = rational_sign(a), sb = rational_sign(b);
    if (int c = rational_compare(sa < 0 ? Rational(-a) : a, sb < 0 ? Rational(-b) : b); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (sa == sb) return std::strong_ordering::equal;
    return sa > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

} // namespace detail

inline std::strong_ordering canonical_order(const Element& a, const Element& b)
{
    if (auto c = a.ring().id() <=> b.ring().id(); c != 0) return c;
    if (a.is_integer()) {
        Integer aa = abs(a.integer()), bb = abs(b.integer());
        if (aa < bb) return std::strong_ordering::less;
        if (bb < aa) return std::strong_ordering::greater;
        if (a.integer() == b.integer()) return std::strong_ordering::equal;
        return a.integer() > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    const auto& ta = a.poly().terms();
    const auto& tb = b.poly().terms();
    if (auto c = ta.size() <=> tb.size(); c != 0) return c;
    for (std::size_t i = 0; i < ta.size(); ++i) {
        if (auto c = ta[i].mono <=> tb[i].mono; c != 0) return c;
        if (auto c = detail::compare_coef(ta[i].coef, tb[i].coef); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

struct CanonicalLess {
    bool operator()(const Element& a, const Element& b) const { return canonical_order(a, b) < 0; }
};

// ---------------------------------------------------------------------------
// Textual syntax: decimals for integers; polynomials as `3*X^2*Y - 1/2`,
// leading term first, coefficient 1 omitted in front of a monomial.

inline std::string rational_to_string(const Rational& q)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    Integer num = numerator(q), den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline std::string monomial_to_string(Monomial m)
{
    std::string s;
    auto var = [&s](char v, std::uint32_t e) {
        if (e == 0) return;
        if (!s.empty()) s += '*';
        s += v;
        if (e > 1) s += '^' + std::to_string(e);
    };
    var('X', m.x);
    var('Y', m.y);
    return s;
}

inline std::string Element::to_string() const
{
    if (is_integer()) return integer().str();
    const auto& terms = poly().terms();
    if (terms.empty()) return "0";
    std::string out;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        bool negative = it->coef < 0;
        Rational mag = abs(it->coef);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (it->mono.is_one()) {
            out += rational_to_string(mag);
        } else {
            if (mag != 1) out += rational_to_string(mag) + "*";
            out += monomial_to_string(it->mono);
        }
    }
    return out;
}

namespace detail {

class ElementParser {
public:
    ElementParser(Ring ring, std::string_view text) : ring_(ring), s_(text) {}

    Element parse()
    {
        if (!ring_.is_polynomial()) return Element(ring_, parse_integer_literal());
        std::vector<Term> terms;
        skip_ws();
        bool negative = false;
        if (peek() == '-' || peek() == '+') negative = get() == '-';
        terms.push_back(parse_term(negative));
        for (;;) {
            skip_ws();
            if (at_end()) break;
            char c = get();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            terms.push_back(parse_term(c == '-'));
        }
        return Element(ring_, Poly::from_terms(std::move(terms)));
    }

private:
    Integer parse_integer_literal()
    {
        skip_ws();
        bool negative = false;
        if (peek() == '-' || peek() == '+') negative = get() == '-';
        Integer v = parse_digits();
        skip_ws();
        if (!at_end()) fail("trailing characters after integer");
        return negative ? Integer(-v) : v;
    }

    Term parse_term(bool negative)
    {
        Term t{Monomial{}, Rational(1)};
        parse_factor(t);
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            get();
            parse_factor(t);
        }
        if (negative) t.coef = -t.coef;
        return t;
    }

    void parse_factor(Term& t)
    {
        skip_ws();
        char c = peek();
        if (c == 'X' || c == 'Y') {
            get();
            if (c == 'Y' && ring_.id() != RingId::PolyBi) fail("Y is not a variable of " + ring_.name());
            std::uint32_t e = 1;
            skip_ws();
            if (peek() == '^') {
                get();
                skip_ws();
                e = static_cast<std::uint32_t>(parse_digits());
            }
            (c == 'X' ? t.mono.x : t.mono.y) += e;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = parse_digits();
            Integer den = 1;
            if (peek() == '/') {
                get();
                den = parse_digits();
                if (den == 0) fail("zero denominator");
            }
            t.coef *= Rational(num, den);
        } else {
            fail("expected a number, X or Y");
        }
    }

    Integer parse_digits()
    {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    char get() { return at_end() ? '\0' : s_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("cannot parse '" + std::string(s_) + "' at offset " + std::to_string(pos_) +
                         ": " + what);
    }

    Ring ring_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Element parse_element(Ring ring, std::string_view text)
{
    return detail::ElementParser(ring, text).parse();
}

inline Rational parse_rational(std::string_view text)
{
    Element e = parse_element(Ring::poly_uni(), text);
    const auto& t = e.poly().terms();
    if (t.empty()) return 0;
    if (t.size() != 1 || !t.front().mono.is_one())
        throw ParseError("'" + std::string(text) + "' is not a rational number");
    return t.front().coef;
}

} // namespace qord
