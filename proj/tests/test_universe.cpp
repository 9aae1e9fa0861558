// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <set>
#include <string>

#include "oracles.hpp"
#include "qord/universe.hpp"

using namespace qord;

namespace {

// All polynomials with at most `terms` nonzero terms, exponents componentwise
// at most `max_exp`, coefficients in `coeffs`, by brute-force subset search.
std::set<oracle::Dense> brute_force(int vars, unsigned max_exp, unsigned terms, const std::vector<long long>& coeffs)
{
    std::vector<std::pair<unsigned, unsigned>> monos;
    for (unsigned i = 0; i <= max_exp; ++i)
        for (unsigned j = 0; j <= (vars == 2 ? max_exp : 0u); ++j) monos.emplace_back(i, j);
    std::set<oracle::Dense> out{oracle::Dense{}};
    std::vector<oracle::Dense> frontier{oracle::Dense{}};
    for (unsigned t = 0; t < terms; ++t) {
        std::vector<oracle::Dense> next;
        for (const auto& p : frontier)
            for (const auto& m : monos) {
                if (p.count(m)) continue;
                for (long long c : coeffs) {
                    auto q = p;
                    q[m] = c;
                    if (out.insert(q).second) next.push_back(q);
                }
            }
        frontier = std::move(next);
    }
    return out;
}

std::set<oracle::Dense> as_dense(const Universe& U)
{
    std::set<oracle::Dense> s;
    for (const auto& x : U) s.insert(oracle::dense(x));
    return s;
}

} // namespace

TEST(Universe, BivariateDefaultCount)
{
    Universe U(Ring::poly_bi(), UniverseBounds::defaults(Ring::poly_bi()));
    const auto expect = brute_force(2, 2, 2, {-1, 1});
    EXPECT_EQ(expect.size(), 163u);
    EXPECT_EQ(U.size(), expect.size());
    EXPECT_EQ(as_dense(U), expect);
}

TEST(Universe, UnivariateDefaultMatchesBruteForce)
{
    Universe U(Ring::poly_uni(), UniverseBounds::defaults(Ring::poly_uni()));
    const auto expect = brute_force(1, 3, 2, {-2, -1, 1, 2});
    EXPECT_EQ(U.size(), expect.size());
    EXPECT_EQ(as_dense(U), expect);
}

TEST(Universe, SmallestUnivariate)
{
    UniverseBounds b = UniverseBounds::defaults(Ring::poly_uni());
    b.max_exp = 1;
    b.max_terms = 1;
    b.coeffs = {1};
    Universe U(Ring::poly_uni(), b);
    std::vector<std::string> got;
    for (const auto& x : U) got.push_back(x.to_string());
    EXPECT_EQ(got, (std::vector<std::string>{"0", "1", "-1", "X", "-X"}));
    EXPECT_EQ(U.descriptor(), "QX[D=1,T=1,C={1},S=0,seed=1]");
}

TEST(Universe, IntegersAreTheInterval)
{
    UniverseBounds b;
    b.magnitude = 12;
    Universe U(Ring::integers(), b);
    ASSERT_EQ(U.size(), 25u);
    std::set<long long> got;
    for (const auto& x : U) got.insert(oracle::as_int(x));
    EXPECT_EQ(*got.begin(), -12);
    EXPECT_EQ(*got.rbegin(), 12);
    EXPECT_EQ(got.size(), 25u);
}

TEST(Universe, ClosedUnderNegationAndIndexed)
{
    for (Ring r : {Ring::integers(), Ring::poly_uni(), Ring::poly_bi()}) {
        Universe U(r, UniverseBounds::defaults(r));
        for (std::size_t i = 0; i < U.size(); ++i) {
            EXPECT_TRUE(U.contains(-U[i]));
            EXPECT_EQ(U.index_of(U[i]), i);
        }
        EXPECT_EQ(U[U.zero_index()], Element::zero(r));
        EXPECT_EQ(U[U.one_index()], Element::one(r));
        EXPECT_EQ(U[U.minus_one_index()], Element::from_int(r, -1));
    }
}

TEST(Universe, SamplesAreSeeded)
{
    UniverseBounds b = UniverseBounds::defaults(Ring::poly_bi());
    b.samples = 20;
    b.seed = 3;
    Universe a(Ring::poly_bi(), b), c(Ring::poly_bi(), b);
    ASSERT_EQ(a.size(), c.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], c[i]);
    EXPECT_GT(a.size(), 163u);
    b.seed = 4;
    Universe d(Ring::poly_bi(), b);
    bool differs = d.size() != a.size();
    for (std::size_t i = 0; !differs && i < a.size(); ++i) differs = !(a[i] == d[i]);
    EXPECT_TRUE(differs);
}

TEST(Universe, InvalidBounds)
{
    UniverseBounds b = UniverseBounds::defaults(Ring::poly_uni());
    b.max_terms = 0;
    EXPECT_THROW(Universe(Ring::poly_uni(), b), PreconditionError);
    UniverseBounds z;
    z.magnitude = 0;
    EXPECT_THROW(Universe(Ring::integers(), z), PreconditionError);
}
