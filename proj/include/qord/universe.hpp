// SPDX-License-Identifier: Apache-2.0
#pragma once

/**
 * @file universe.hpp
 * @brief Finite, deterministic test domains over which universally
 * quantified claims are checked exhaustively.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qord/ring.hpp"

namespace qord {

struct UniverseBounds {
    long long magnitude = 8;        // B: integers in [-B, B]
    unsigned max_exp = 3;           // D: componentwise exponent bound
    unsigned max_terms = 2;         // T: at most T nonzero terms
    std::vector<Rational> coeffs{-2, -1, 1, 2}; // C
    unsigned samples = 0;           // S: seeded extras beyond the exhaustive part
    std::uint64_t seed = 1;

    /// Default universe of each ring used by the acceptance battery.
    static UniverseBounds defaults(Ring ring)
    {
        UniverseBounds b;
        switch (ring.id()) {
        case RingId::Integers: b.magnitude = 8; break;
        case RingId::PolyUni:
            b.max_exp = 3;
            b.max_terms = 2;
            b.coeffs = {-2, -1, 1, 2};
            break;
        case RingId::PolyBi:
            b.max_exp = 2;
            b.max_terms = 2;
            b.coeffs = {-1, 1};
            break;
        }
        return b;
    }
};

class Universe {
public:
    Universe(Ring ring, UniverseBounds bounds) : ring_(ring), bounds_(std::move(bounds))
    {
        validate();
        if (ring_.is_polynomial())
            enumerate_polynomials();
        else
            enumerate_integers();
        if (elements_.empty()) throw PreconditionError("bounds produce an empty universe");
        for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
    }

    Ring ring() const { return ring_; }
    const UniverseBounds& bounds() const { return bounds_; }
    const std::vector<Element>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const Element& operator[](std::size_t i) const { return elements_[i]; }
    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    std::optional<std::size_t> index_of(const Element& x) const
    {
        auto it = index_.find(x);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    bool contains(const Element& x) const { return index_.count(x) != 0; }

    std::size_t zero_index() const { return *index_of(Element::zero(ring_)); }
    std::size_t one_index() const { return *index_of(Element::one(ring_)); }
    std::size_t minus_one_index() const { return *index_of(Element::from_int(ring_, -1)); }

    /// Stable human-readable description, e.g. `QX[D=3,T=2,C={-2,-1,1,2},S=0,seed=1]`.
    std::string descriptor() const
    {
        std::string s = ring_.short_name() + "[";
        if (!ring_.is_polynomial()) {
            s += "B=" + std::to_string(bounds_.magnitude);
        } else {
            s += "D=" + std::to_string(bounds_.max_exp) + ",T=" + std::to_string(bounds_.max_terms) + ",C={";
            for (std::size_t i = 0; i < bounds_.coeffs.size(); ++i)
                s += (i ? "," : "") + rational_to_string(bounds_.coeffs[i]);
            s += "}";
        }
        s += ",S=" + std::to_string(bounds_.samples) + ",seed=" + std::to_string(bounds_.seed) + "]";
        return s;
    }

private:
    void validate() const
    {
        if (!ring_.is_polynomial()) {
            if (bounds_.magnitude < 2) throw PreconditionError("integer magnitude bound must be at least 2");
            return;
        }
        if (bounds_.max_exp < 1) throw PreconditionError("max exponent must be at least 1");
        if (bounds_.max_terms < 1) throw PreconditionError("max term count must be at least 1");
        if (bounds_.coeffs.empty()) throw PreconditionError("coefficient set is empty");
        bool unit = false;
        for (const auto& c : bounds_.coeffs) {
            if (c == 0) throw PreconditionError("coefficient set must not contain 0");
            unit = unit || abs(c) == 1;
        }
        if (!unit) throw PreconditionError("coefficient set must contain 1 or -1");
    }

    void enumerate_integers()
    {
        const long long b = bounds_.magnitude;
        for (long long k = 0; k <= b; ++k) {
            elements_.push_back(Element::from_int(ring_, k));
            if (k != 0) elements_.push_back(Element::from_int(ring_, -k));
        }
        std::set<Element, CanonicalLess> seen(elements_.begin(), elements_.end());
        std::mt19937_64 rng(bounds_.seed);
        const unsigned long long span = 2ULL * static_cast<unsigned long long>(b * b) + 1;
        for (unsigned s = 0; s < bounds_.samples; ++s) {
            long long v = static_cast<long long>(rng() % span) - b * b;
            append_with_negation(Element::from_int(ring_, v), seen);
        }
    }

    std::vector<Monomial> monomials(unsigned max_exp) const
    {
        std::vector<Monomial> out;
        unsigned ymax = ring_.id() == RingId::PolyBi ? max_exp : 0;
        for (std::uint32_t x = 0; x <= max_exp; ++x)
            for (std::uint32_t y = 0; y <= ymax; ++y) out.push_back({x, y});
        std::sort(out.begin(), out.end());
        return out;
    }

    void enumerate_polynomials()
    {
        std::set<Element, CanonicalLess> all;
        all.insert(Element::zero(ring_));
        all.insert(Element::one(ring_));
        all.insert(Element::from_int(ring_, -1));

        const auto monos = monomials(bounds_.max_exp);
        const auto& coeffs = bounds_.coeffs;
        std::vector<std::size_t> pick;
        // every subset of at most T monomials, every coefficient assignment
        auto emit_subsets = [&](auto&& self, std::size_t from) -> void {
            if (!pick.empty()) {
                std::vector<std::size_t> choice(pick.size(), 0);
                for (;;) {
                    std::vector<Term> terms;
                    for (std::size_t k = 0; k < pick.size(); ++k) terms.push_back({monos[pick[k]], coeffs[choice[k]]});
                    Element e(ring_, Poly::from_terms(std::move(terms)));
                    all.insert(-e);
                    all.insert(std::move(e));
                    std::size_t k = 0;
                    while (k < choice.size() && ++choice[k] == coeffs.size()) choice[k++] = 0;
                    if (k == choice.size()) break;
                }
            }
            if (pick.size() == bounds_.max_terms) return;
            for (std::size_t i = from; i < monos.size(); ++i) {
                pick.push_back(i);
                self(self, i + 1);
                pick.pop_back();
            }
        };
        emit_subsets(emit_subsets, 0);
        elements_.assign(all.begin(), all.end());

        std::mt19937_64 rng(bounds_.seed);
        const auto loose = monomials(bounds_.max_exp + 1);
        for (unsigned s = 0; s < bounds_.samples; ++s) {
            std::size_t n = 1 + rng() % (bounds_.max_terms + 1);
            std::vector<Term> terms;
            for (std::size_t k = 0; k < n; ++k)
                terms.push_back({loose[rng() % loose.size()], coeffs[rng() % coeffs.size()]});
            append_with_negation(Element(ring_, Poly::from_terms(std::move(terms))), all);
        }
    }

    void append_with_negation(Element e, std::set<Element, CanonicalLess>& seen)
    {
        Element neg = -e;
        if (seen.insert(e).second) elements_.push_back(std::move(e));
        if (seen.insert(neg).second) elements_.push_back(std::move(neg));
    }

    Ring ring_;
    UniverseBounds bounds_;
    std::vector<Element> elements_;
    std::map<Element, std::size_t, CanonicalLess> index_;
};

inline Universe enumerate_universe(Ring ring, UniverseBounds bounds) { return Universe(ring, std::move(bounds)); }

} // namespace qord
