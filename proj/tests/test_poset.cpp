// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <functional>
#include <set>
#include <string>

#include "oracles.hpp"
#include "qord/catalog.hpp"
#include "qord/poset.hpp"

using namespace qord;

namespace {

Universe defaults(Ring r) { return Universe(r, UniverseBounds::defaults(r)); }

using IntRel = std::function<bool(long long, long long)>;

// Relation of each integer catalog id computed from divisibility and <.
IntRel integer_oracle(const std::string& id)
{
    auto from_val = [](std::function<std::optional<long long>(long long)> v) -> IntRel {
        return [v](long long x, long long y) { return oracle::val_le(v(x), v(y)); };
    };
    if (id == "Z:leq") return [](long long x, long long y) { return x <= y; };
    const auto tail = id.substr(id.rfind(':') + 1);
    const long long p = std::stoll(tail);
    if (id.rfind("Z:vp:", 0) == 0)
        return from_val([p](long long n) -> std::optional<long long> {
            auto k = oracle::vp(n, p);
            return k ? std::optional<long long>(*k) : std::nullopt;
        });
    if (p == 0) return from_val([](long long n) -> std::optional<long long> { return n == 0 ? std::nullopt : std::optional<long long>(0); });
    return from_val([p](long long n) -> std::optional<long long> { return n % p == 0 ? std::nullopt : std::optional<long long>(0); });
}

std::set<std::pair<std::string, std::string>> hasse_ids(const Poset& P)
{
    std::set<std::pair<std::string, std::string>> s;
    for (auto [a, b] : P.hasse) s.emplace(P.id(a), P.id(b));
    return s;
}

// Test-only ordering on Q[X, Y]: sign of the coefficient of the lowest
// monomial in inverse lexicographic order (Y exponent first).
QuasiOrder invlex_ordering()
{
    const Ring R = Ring::poly_bi();
    return QuasiOrder(
        "QXY:invlex", R,
        [](const Element& x, const Element& y) {
            const auto d = oracle::dense(y - x);
            if (d.empty()) return Cmp::Equivalent;
            auto best = d.begin();
            for (auto it = d.begin(); it != d.end(); ++it)
                if (std::pair{it->first.second, it->first.first} < std::pair{best->first.second, best->first.first})
                    best = it;
            return best->second > 0 ? Cmp::Less : Cmp::Greater;
        },
        Kind::Ordering, Ideal::zero(R));
}

// Lowest monomial in graded lexicographic order; (Y) is not convex for it.
QuasiOrder graded_ordering()
{
    const Ring R = Ring::poly_bi();
    return QuasiOrder(
        "QXY:grlex", R,
        [](const Element& x, const Element& y) {
            const Element d = y - x;
            if (d.is_zero()) return Cmp::Equivalent;
            return d.poly().lowest().coef > 0 ? Cmp::Less : Cmp::Greater;
        },
        Kind::Ordering, Ideal::zero(R));
}

} // namespace

TEST(Poset, IntegerHasseMatchesBruteForce)
{
    const Universe U = defaults(Ring::integers());
    const auto c = catalog(Ring::integers());
    const Poset P = build_poset(c.entries, U);
    const std::size_t n = c.entries.size();
    std::vector<std::vector<char>> le(n, std::vector<char>(n, 1));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const auto ra = integer_oracle(c.entries[a].id()), rb = integer_oracle(c.entries[b].id());
            for (const auto& x : U)
                for (const auto& y : U) {
                    const long long ix = oracle::as_int(x), iy = oracle::as_int(y);
                    if (ra(0, ix) && ra(ix, iy) && !rb(ix, iy)) le[a][b] = 0;
                }
            EXPECT_EQ(P.le(a, b), le[a][b] == 1) << P.id(a) << " <= " << P.id(b);
        }
    std::set<std::pair<std::string, std::string>> expect;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || !le[a][b]) continue;
            bool cover = true;
            for (std::size_t k = 0; k < n; ++k)
                if (k != a && k != b && le[a][k] && le[k][b]) cover = false;
            if (cover) expect.emplace(c.entries[a].id(), c.entries[b].id());
        }
    EXPECT_EQ(hasse_ids(P), expect);
    EXPECT_FALSE(P.maximum.has_value());
}

TEST(Poset, IntegerTreeAtZero)
{
    const Universe U = defaults(Ring::integers());
    std::vector<CatalogEntry> zero_support;
    for (const auto& e : catalog(Ring::integers()).entries)
        if (e.qo.declared_support().is_zero()) zero_support.push_back(e);
    const auto T = check_tree(build_poset(zero_support, U), Ideal::zero(Ring::integers()));
    EXPECT_EQ(T.poset.id(T.maximum), "Z:triv:0");
    ASSERT_EQ(T.branches.size(), 4u);
    for (const auto& b : T.branches) {
        EXPECT_EQ(b.size(), 2u);
        EXPECT_EQ(b.back(), T.maximum);
    }
}

TEST(Poset, UnivariateTree)
{
    const Universe U = defaults(Ring::poly_uni());
    std::vector<CatalogEntry> zero_support;
    for (const auto& e : catalog(Ring::poly_uni()).entries)
        if (e.qo.declared_support().is_zero()) zero_support.push_back(e);
    const auto T = check_tree(build_poset(zero_support, U), Ideal::zero(Ring::poly_uni()));
    std::set<std::vector<std::string>> branches;
    for (const auto& b : T.branches) {
        std::vector<std::string> ids;
        for (auto i : b) ids.push_back(T.poset.id(i));
        branches.insert(ids);
    }
    EXPECT_EQ(branches, (std::set<std::vector<std::string>>{{"QX:Pa", "QX:w", "QX:triv:0"},
                                                            {"QX:Pna", "QX:vdeg", "QX:triv:0"}}));
}

TEST(Poset, BivariateDiamondEdges)
{
    const Universe U = defaults(Ring::poly_bi());
    const Poset P = build_poset(catalog(Ring::poly_bi()).entries, U);
    const auto h = hasse_ids(P);
    for (auto e : std::vector<std::pair<std::string, std::string>>{
             {"QXY:v", "QXY:w"}, {"QXY:v", "QXY:u"}, {"QXY:u", "QXY:triv:0"}, {"QXY:u", "QXY:triv:Y"}, {"QXY:w", "QXY:triv:Y"}})
        EXPECT_TRUE(h.count(e)) << e.first << " -> " << e.second;
    EXPECT_FALSE(P.le(*P.index_of("QXY:u"), *P.index_of("QXY:w")));
    EXPECT_FALSE(P.le(*P.index_of("QXY:w"), *P.index_of("QXY:u")));
}

TEST(Poset, MixedSupportsNeedForest)
{
    const Universe U = defaults(Ring::integers());
    EXPECT_THROW(check_tree(build_poset(catalog(Ring::integers()).entries, U), Ideal::zero(Ring::integers())),
                 PreconditionError);
}

TEST(Poset, TooSmallUniverseBreaksAntisymmetry)
{
    UniverseBounds b;
    b.magnitude = 2;
    const Universe U(Ring::integers(), b);
    try {
        build_poset(catalog(Ring::integers()).entries, U);
        FAIL() << "expected an antisymmetry failure";
    } catch (const VerificationError& e) {
        EXPECT_NE(std::string(e.what()).find("too small"), std::string::npos);
    }
}

TEST(Poset, ForestPerSupport)
{
    const Universe U = defaults(Ring::integers());
    const Forest F = forest_partition(catalog(Ring::integers()).entries, U);
    ASSERT_EQ(F.trees.size(), 4u);
    EXPECT_EQ(F.trees[0].support.name(), "(0)");
    for (std::size_t t = 1; t < F.trees.size(); ++t) EXPECT_EQ(F.trees[t].tree.poset.size(), 1u);
    std::set<std::pair<std::string, std::string>> cross(F.cross_le.begin(), F.cross_le.end());
    EXPECT_TRUE(cross.count({"Z:vp:2", "Z:triv:2"}));
    EXPECT_FALSE(cross.count({"Z:leq", "Z:triv:2"}));

    const Forest G = forest_partition(catalog(Ring::poly_bi()).entries, defaults(Ring::poly_bi()));
    std::vector<std::string> supports;
    for (const auto& t : G.trees) supports.push_back(t.support.name());
    EXPECT_EQ(supports, (std::vector<std::string>{"(0)", "(Y)", "(X, Y)"}));
}

TEST(Poset, GeneralizedTreeWithConvexOrdering)
{
    const Ring R = Ring::poly_bi();
    const Universe U = defaults(R);
    const Ideal Y = Ideal::monomial(R, {{0, 1}});
    std::vector<CatalogEntry> nodes{{invlex_ordering(), "test ordering", {}}, find_entry("QXY:w"),
                                    find_entry("QXY:triv:Y")};
    const auto T = check_generalized_tree(build_poset(nodes, U), Y, U);
    ASSERT_EQ(T.branches.size(), 1u);
    std::vector<std::string> chain;
    for (auto i : T.branches[0]) chain.push_back(T.poset.id(i));
    EXPECT_EQ(chain, (std::vector<std::string>{"QXY:invlex", "QXY:w", "QXY:triv:Y"}));

    std::vector<CatalogEntry> with_v = nodes;
    with_v.push_back(find_entry("QXY:v"));
    EXPECT_THROW(check_generalized_tree(build_poset(with_v, U), Y, U), PreconditionError);

    std::vector<CatalogEntry> nonconvex{{graded_ordering(), "test ordering", {}}, find_entry("QXY:triv:Y")};
    EXPECT_THROW(check_generalized_tree(build_poset(nonconvex, U), Y, U), PreconditionError);
}

TEST(Poset, SubposetKeepsDecisions)
{
    const Universe U = defaults(Ring::poly_bi());
    const Poset P = build_poset(catalog(Ring::poly_bi()).entries, U);
    const Poset S = subposet(P, {*P.index_of("QXY:v"), *P.index_of("QXY:triv:0")});
    ASSERT_EQ(S.hasse.size(), 1u);
    EXPECT_EQ(S.id(S.hasse[0].first), "QXY:v");
    EXPECT_EQ(S.maximum, std::optional<std::size_t>(1));
}
