// SPDX-License-Identifier: Apache-2.0
#pragma once

/**
 * @file ideal.hpp
 * @brief The shipped ideal families and their decidable membership.
 *
 * On the integers any finitely generated ideal is principal, generated by the
 * gcd of its generators. On the polynomial rings only monomial ideals are
 * supported: (0), (X), (Y) and (X, Y). A polynomial lies in a monomial ideal
 * iff each of its monomials is divisible by some generator.
 */

#include <string>
#include <vector>

#include <boost/integer/common_factor.hpp>

#include "qord/ring.hpp"

namespace qord {

namespace detail {

inline bool is_prime(const Integer& n)
{
    if (n < 2) return false;
    for (Integer d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace detail

class Ideal {
public:
    /// Integer ideal generated by `generators`; normalised to (gcd).
    static Ideal integers(std::vector<Integer> generators)
    {
        Integer g = 0;
        for (const auto& v : generators) g = boost::integer::gcd(g, Integer(abs(v)));
        Ideal I;
        I.ring_ = Ring::integers();
        I.gcd_ = g;
        if (g != 0) I.generators_.push_back(Element(I.ring_, g));
        I.name_ = "(" + g.str() + ")";
        I.prime_ = g == 0 || detail::is_prime(g);
        I.maximal_ = g != 0 && detail::is_prime(g);
        return I;
    }

    /// Monomial ideal of a polynomial ring. Generators that are divisible by
    /// another generator are dropped.
    static Ideal monomial(Ring ring, std::vector<Monomial> generators)
    {
        if (!ring.is_polynomial()) throw PreconditionError("monomial ideals live in polynomial rings");
        Ideal I;
        I.ring_ = ring;
        std::sort(generators.begin(), generators.end());
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        for (auto m : generators) {
            if (ring.id() == RingId::PolyUni && m.y != 0)
                throw PreconditionError("Y does not occur in Q[X]");
            bool redundant = false;
            for (auto k : I.monomials_) redundant = redundant || k.divides(m);
            if (!redundant) I.monomials_.push_back(m);
        }
        for (auto m : I.monomials_) I.generators_.push_back(Element(ring, Poly::monomial(m)));

        if (I.monomials_.empty()) {
            I.name_ = "(0)";
        } else {
            I.name_ = "(";
            for (std::size_t i = I.monomials_.size(); i-- > 0;) {
                I.name_ += monomial_to_string(I.monomials_[i]);
                if (i != 0) I.name_ += ", ";
            }
            I.name_ += ")";
        }
        // Monomial ideals are prime iff generated by a set of variables.
        bool by_variables = true;
        for (auto m : I.monomials_) by_variables = by_variables && m.degree() == 1;
        bool unit = I.monomials_.size() == 1 && I.monomials_.front().is_one();
        I.prime_ = by_variables && !unit;
        I.maximal_ = I.prime_ && static_cast<int>(I.monomials_.size()) == ring.variables();
        return I;
    }

    static Ideal zero(Ring ring)
    {
        return ring.is_polynomial() ? monomial(ring, {}) : integers({});
    }

    /// Parses the command-line spelling of a shipped ideal: `0`, `7`, `X`,
    /// `Y`, `X,Y` (parentheses optional).
    static Ideal parse(Ring ring, std::string text)
    {
        std::erase_if(text, [](char c) { return c == '(' || c == ')' || c == ' '; });
        if (!ring.is_polynomial()) return integers({parse_element(ring, text).integer()});
        if (text == "0") return zero(ring);
        std::vector<Monomial> gens;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t comma = text.find(',', start);
            std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            Element e = parse_element(ring, part);
            if (e.poly().size() != 1 || e.poly().lowest().coef != 1)
                throw ParseError("ideal generator '" + part + "' is not a monic monomial");
            gens.push_back(e.poly().lowest().mono);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return monomial(ring, std::move(gens));
    }

    Ring ring() const { return ring_; }
    const std::vector<Element>& generators() const { return generators_; }
    const std::string& name() const { return name_; }
    /// Name without parentheses or spaces, as used in catalog ids: `0`, `2`, `X,Y`.
    std::string short_name() const
    {
        std::string s = name_;
        std::erase_if(s, [](char c) { return c == '(' || c == ')' || c == ' '; });
        return s;
    }
    bool is_prime() const { return prime_; }
    bool is_maximal() const { return maximal_; }
    bool is_zero() const { return generators_.empty(); }

    bool contains(const Element& x) const
    {
        if (x.ring() != ring_)
            throw RingMismatch("element of " + x.ring().name() + " tested against an ideal of " + ring_.name());
        if (!ring_.is_polynomial()) return gcd_ == 0 ? x.integer() == 0 : x.integer() % gcd_ == 0;
        for (const auto& t : x.poly().terms()) {
            bool hit = false;
            for (auto g : monomials_) hit = hit || g.divides(t.mono);
            if (!hit) return false;
        }
        return true;
    }

    friend bool operator==(const Ideal& a, const Ideal& b)
    {
        return a.ring_ == b.ring_ && a.name_ == b.name_;
    }

private:
    Ring ring_;
    std::vector<Element> generators_;
    std::vector<Monomial> monomials_;
    Integer gcd_ = 0;
    std::string name_;
    bool prime_ = false;
    bool maximal_ = false;
};

inline bool ideal_contains(const Ideal& ideal, const Element& x) { return ideal.contains(x); }

/// The prime ideals shipped for `ring`, ordered from (0) upwards. For the
/// integers these are (0) and (p) for every prime p <= prime_bound.
inline std::vector<Ideal> shipped_primes(Ring ring, int prime_bound)
{
    std::vector<Ideal> out{Ideal::zero(ring)};
    switch (ring.id()) {
    case RingId::Integers:
        for (int p = 2; p <= prime_bound; ++p)
            if (detail::is_prime(p)) out.push_back(Ideal::integers({p}));
        break;
    case RingId::PolyUni:
        out.push_back(Ideal::monomial(ring, {{1, 0}}));
        break;
    case RingId::PolyBi:
        out.push_back(Ideal::monomial(ring, {{1, 0}}));
        out.push_back(Ideal::monomial(ring, {{0, 1}}));
        out.push_back(Ideal::monomial(ring, {{1, 0}, {0, 1}}));
        break;
    }
    return out;
}

/// Membership-wise inclusion of two monomial or integer ideals.
inline bool ideal_subset(const Ideal& a, const Ideal& b)
{
    for (const auto& g : a.generators())
        if (!b.contains(g)) return false;
    return true;
}

} // namespace qord
