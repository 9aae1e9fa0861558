// SPDX-License-Identifier: Apache-2.0
#pragma once

/**
 * @file quasi_order.hpp
 * @brief Quasi-ordering oracles: total preorders on a ring, answered pair by
 * pair as Less / Equivalent / Greater.
 *
 * A quasi-ordering is either an ordering (-1 < 0) or is induced by a
 * valuation v through x <= y iff v(y) <= v(x). Oracles built from a
 * valuation keep the valuation map as a key, which the verifiers use to
 * evaluate the same relation without repeated pairwise calls.
 */

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qord/ideal.hpp"
#include "qord/universe.hpp"

namespace qord {

enum class Cmp : std::uint8_t { Less, Equivalent, Greater };

inline Cmp reverse(Cmp c)
{
    return c == Cmp::Less ? Cmp::Greater : c == Cmp::Greater ? Cmp::Less : Cmp::Equivalent;
}

inline const char* to_string(Cmp c)
{
    switch (c) {
    case Cmp::Less: return "Less";
    case Cmp::Equivalent: return "Equivalent";
    case Cmp::Greater: return "Greater";
    }
    return "?";
}

enum class Kind : std::uint8_t { Ordering, Valuation, Unknown };

inline const char* to_string(Kind k)
{
    switch (k) {
    case Kind::Ordering: return "Ordering";
    case Kind::Valuation: return "Valuation";
    case Kind::Unknown: return "Unknown";
    }
    return "?";
}

/// Element of Z x Z (lexicographic on (major, minor)) extended by an
/// absorbing maximum. Z-valued maps leave `minor` at zero.
struct ExtValue {
    bool infinite = false;
    std::int64_t major = 0;
    std::int64_t minor = 0;

    static ExtValue infinity() { return {true, 0, 0}; }
    static ExtValue of(std::int64_t major, std::int64_t minor = 0) { return {false, major, minor}; }

    friend ExtValue operator+(ExtValue a, ExtValue b)
    {
        if (a.infinite || b.infinite) return infinity();
        return of(a.major + b.major, a.minor + b.minor);
    }
    friend bool operator==(ExtValue a, ExtValue b)
    {
        if (a.infinite || b.infinite) return a.infinite == b.infinite;
        return a.major == b.major && a.minor == b.minor;
    }
    friend std::strong_ordering operator<=>(ExtValue a, ExtValue b)
    {
        if (a.infinite || b.infinite) return a.infinite <=> b.infinite;
        if (auto c = a.major <=> b.major; c != 0) return c;
        return a.minor <=> b.minor;
    }

    std::string to_string() const
    {
        if (infinite) return "inf";
        if (minor == 0) return std::to_string(major);
        return "(" + std::to_string(major) + "," + std::to_string(minor) + ")";
    }
};

class QuasiOrder {
public:
    using CompareFn = std::function<Cmp(const Element&, const Element&)>;
    using ValuationFn = std::function<ExtValue(const Element&)>;

    QuasiOrder(std::string id, Ring ring, CompareFn compare, Kind declared_kind, Ideal declared_support,
               std::string provenance = {})
        : id_(std::move(id)), ring_(ring), compare_(std::move(compare)), kind_(declared_kind),
          support_(std::move(declared_support)), provenance_(std::move(provenance))
    {
        if (support_.ring() != ring_) throw RingMismatch("declared support lives in another ring");
    }

    /// Oracle induced by a valuation: x <= y iff v(y) <= v(x).
    static QuasiOrder from_valuation(std::string id, Ring ring, ValuationFn v, Ideal declared_support,
                                     std::string provenance = {})
    {
        auto cmp = [v](const Element& x, const Element& y) {
            auto c = v(y) <=> v(x);
            return c < 0 ? Cmp::Less : c > 0 ? Cmp::Greater : Cmp::Equivalent;
        };
        QuasiOrder q(std::move(id), ring, cmp, Kind::Valuation, std::move(declared_support),
                     std::move(provenance));
        q.valuation_ = std::move(v);
        return q;
    }

    /// The trivial quasi-ordering at a prime ideal: two classes, the ideal
    /// and its complement.
    static QuasiOrder trivial(const Ideal& q, std::string id = {})
    {
        if (!q.is_prime()) throw PreconditionError("trivial quasi-ordering needs a prime ideal, got " + q.name());
        if (id.empty()) id = q.ring().short_name() + ":triv:" + q.short_name();
        auto v = [q](const Element& x) { return q.contains(x) ? ExtValue::infinity() : ExtValue::of(0); };
        QuasiOrder t = from_valuation(std::move(id), q.ring(), v, q, "trivial valuation with support " + q.name());
        t.trivial_ = true;
        return t;
    }

    const std::string& id() const { return id_; }
    Ring ring() const { return ring_; }
    Kind declared_kind() const { return kind_; }
    const Ideal& declared_support() const { return support_; }
    const std::string& provenance() const { return provenance_; }
    bool is_trivial() const { return trivial_; }

    /// Closed-form valuation map when the oracle is valuation-induced.
    const ValuationFn& valuation() const { return valuation_; }
    bool has_valuation() const { return static_cast<bool>(valuation_); }

    Cmp compare(const Element& x, const Element& y) const
    {
        if (x.ring() != ring_ || y.ring() != ring_)
            throw RingMismatch(id_ + " is a quasi-ordering on " + ring_.name());
        return compare_(x, y);
    }
    bool le(const Element& x, const Element& y) const { return compare(x, y) != Cmp::Greater; }
    bool lt(const Element& x, const Element& y) const { return compare(x, y) == Cmp::Less; }
    bool equiv(const Element& x, const Element& y) const { return compare(x, y) == Cmp::Equivalent; }

    /// Copy with a replaced oracle; the valuation key is dropped because the
    /// new relation need not be induced by it.
    QuasiOrder with_compare(std::string id, CompareFn compare) const
    {
        QuasiOrder q = *this;
        q.id_ = std::move(id);
        q.compare_ = std::move(compare);
        q.valuation_ = nullptr;
        q.trivial_ = false;
        return q;
    }

private:
    std::string id_;
    Ring ring_;
    CompareFn compare_;
    Kind kind_;
    Ideal support_;
    std::string provenance_;
    ValuationFn valuation_;
    bool trivial_ = false;
};

inline Cmp compare(const QuasiOrder& qo, const Element& x, const Element& y) { return qo.compare(x, y); }

/// Ordering if -1 < 0, otherwise valuation.
inline Kind classify(const QuasiOrder& qo)
{
    const Ring r = qo.ring();
    return qo.lt(Element::from_int(r, -1), Element::zero(r)) ? Kind::Ordering : Kind::Valuation;
}

struct SupportResult {
    std::vector<Element> elements; // universe elements equivalent to 0
    Ideal declared;
};

/// Computes the support on a universe and checks it against the declared
/// support ideal. Throws VerificationError naming the first disagreeing
/// element.
inline SupportResult support_of(const QuasiOrder& qo, const Universe& universe)
{
    if (universe.ring() != qo.ring()) throw RingMismatch("universe and quasi-ordering rings differ");
    SupportResult out{{}, qo.declared_support()};
    const Element zero = Element::zero(qo.ring());
    for (const auto& x : universe) {
        bool computed = qo.equiv(x, zero);
        if (computed != qo.declared_support().contains(x))
            throw VerificationError(qo.id() + ": element " + x.to_string() + (computed ? " is" : " is not") +
                                    " equivalent to 0 but declared support " + qo.declared_support().name() +
                                    (computed ? " excludes it" : " contains it"));
        if (computed) out.elements.push_back(x);
    }
    return out;
}

/// Pairwise relation of a quasi-ordering on a universe, evaluated once.
class RelationTable {
public:
    RelationTable(const QuasiOrder& qo, const Universe& universe) : n_(universe.size()), cells_(n_ * n_)
    {
        if (universe.ring() != qo.ring()) throw RingMismatch("universe and quasi-ordering rings differ");
        if (qo.has_valuation()) {
            std::vector<ExtValue> key;
            key.reserve(n_);
            for (const auto& x : universe) key.push_back(qo.valuation()(x));
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j) {
                    auto c = key[j] <=> key[i];
                    cells_[i * n_ + j] = c < 0 ? Cmp::Less : c > 0 ? Cmp::Greater : Cmp::Equivalent;
                }
        } else {
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j) cells_[i * n_ + j] = qo.compare(universe[i], universe[j]);
        }
    }

    std::size_t size() const { return n_; }
    Cmp at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
    bool le(std::size_t i, std::size_t j) const { return at(i, j) != Cmp::Greater; }
    bool lt(std::size_t i, std::size_t j) const { return at(i, j) == Cmp::Less; }
    bool eq(std::size_t i, std::size_t j) const { return at(i, j) == Cmp::Equivalent; }

private:
    std::size_t n_;
    std::vector<Cmp> cells_;
};

} // namespace qord
