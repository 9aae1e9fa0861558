// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qord/catalog.hpp"
#include "qord/coarsening.hpp"

using namespace qord;

namespace {

Universe defaults(Ring r) { return Universe(r, UniverseBounds::defaults(r)); }

Element Zi(long long v) { return Element::from_int(Ring::integers(), v); }

// 0 <=_1 x <=_1 y and not x <=_2 y, evaluated with division oracles on Z.
bool padic_refutes(long long p, long long q, long long x, long long y)
{
    auto v = [](long long n, long long r) -> std::optional<long long> {
        auto k = oracle::vp(n, r);
        return k ? std::optional<long long>(*k) : std::nullopt;
    };
    return oracle::val_le(v(0, p), v(x, p)) && oracle::val_le(v(x, p), v(y, p)) && !oracle::val_le(v(x, q), v(y, q));
}

} // namespace

TEST(Coarsening, PadicPairsRefutedWithCheckedWitness)
{
    const Universe U = defaults(Ring::integers());
    for (long long p : {2, 3, 5})
        for (long long q : {2, 3, 5}) {
            if (p == q) continue;
            const auto d = compare_qos(find_entry("Z:vp:" + std::to_string(p)), find_entry("Z:vp:" + std::to_string(q)), U);
            ASSERT_TRUE(is_refuted(d));
            const auto& r = std::get<Refuted>(d);
            EXPECT_TRUE(padic_refutes(p, q, oracle::as_int(r.x), oracle::as_int(r.y)));
        }
    // (2, 3) is another refutation of v2 <= v3
    EXPECT_TRUE(padic_refutes(2, 3, 2, 3));
    EXPECT_TRUE(detail::refutes(find_entry("Z:vp:2").qo, find_entry("Z:vp:3").qo, Zi(2), Zi(3)));
}

TEST(Coarsening, ReflexiveIsVerified)
{
    const Universe U = defaults(Ring::integers());
    const auto d = compare_qos(find_entry("Z:leq"), find_entry("Z:leq"), U);
    ASSERT_TRUE(std::holds_alternative<Verified>(d));
}

TEST(Coarsening, OrderingAndValuationIncomparable)
{
    const Universe U = defaults(Ring::integers());
    const auto leq = find_entry("Z:leq"), v2 = find_entry("Z:vp:2");
    const auto a = compare_qos(leq, v2, U), b = compare_qos(v2, leq, U);
    ASSERT_TRUE(is_refuted(a));
    ASSERT_TRUE(is_refuted(b));
    const auto& ra = std::get<Refuted>(a);
    const auto& rb = std::get<Refuted>(b);
    EXPECT_TRUE(detail::refutes(leq.qo, v2.qo, ra.x, ra.y));
    EXPECT_TRUE(detail::refutes(v2.qo, leq.qo, rb.x, rb.y));
    // first witness in canonical order
    EXPECT_EQ(ra.x.to_string(), "1");
    EXPECT_EQ(ra.y.to_string(), "2");
}

TEST(Coarsening, DeclaredDiamondFacts)
{
    const Universe U = defaults(Ring::poly_bi());
    const auto v = find_entry("QXY:v"), w = find_entry("QXY:w"), u = find_entry("QXY:u");
    const auto vw = compare_qos(v, w, U);
    ASSERT_TRUE(std::holds_alternative<Verified>(vw));
    EXPECT_EQ(std::get<Verified>(vw).rule, "declared");
    EXPECT_TRUE(std::holds_alternative<Verified>(compare_qos(v, u, U)));

    const auto uw = compare_qos(u, w, U);
    ASSERT_TRUE(is_refuted(uw));
    const auto& r = std::get<Refuted>(uw);
    EXPECT_EQ(r.x.to_string(), "1");
    EXPECT_EQ(r.y.to_string(), "X");
    ASSERT_TRUE(r.cited.has_value());
    EXPECT_EQ(r.cited->first.to_string(), "X");
    EXPECT_EQ(r.cited->second.to_string(), "X^2");
    EXPECT_TRUE(detail::refutes(u.qo, w.qo, r.cited->first, r.cited->second));

    const auto wu = compare_qos(w, u, U);
    ASSERT_TRUE(is_refuted(wu));
    const auto& s = std::get<Refuted>(wu);
    EXPECT_EQ(s.x.to_string(), "Y");
    EXPECT_EQ(s.y.to_string(), "0");
    EXPECT_EQ(s.cited->second.to_string(), "Y^2");
}

TEST(Coarsening, FalseDeclaredFactIsCaught)
{
    const Universe U = defaults(Ring::integers());
    const auto leq = find_entry("Z:leq"), v2 = find_entry("Z:vp:2");
    DeclaredFact claim{"Z:vp:2", true, std::nullopt, "made up"};
    // a claim never bypasses the search
    EXPECT_TRUE(is_refuted(compare_qos(leq.qo, v2.qo, U, &claim)));
    DeclaredFact bad_witness{"Z:vp:2", false, std::pair{Zi(1), Zi(2)}, "made up"};
    EXPECT_THROW(compare_qos(v2.qo, leq.qo, U, &bad_witness), VerificationError);
}

TEST(Coarsening, RingMismatch)
{
    const Universe U = defaults(Ring::integers());
    EXPECT_THROW(compare_qos(find_entry("Z:leq").qo, find_entry("QX:Pa").qo, U), RingMismatch);
}

TEST(Coarsening, UnivariateConeAgainstDegree)
{
    const Universe U = defaults(Ring::poly_uni());
    const auto pna = find_entry("QX:Pna"), vdeg = find_entry("QX:vdeg"), pa = find_entry("QX:Pa");
    EXPECT_TRUE(std::holds_alternative<Verified>(compare_qos(pna, vdeg, U)));
    const auto d = compare_qos(pa, vdeg, U);
    ASSERT_TRUE(is_refuted(d));
    EXPECT_TRUE(detail::refutes(pa.qo, vdeg.qo, std::get<Refuted>(d).x, std::get<Refuted>(d).y));
    const auto pt = positivity_transfer_check(pna.qo, vdeg.qo, U);
    EXPECT_TRUE(pt.passed());
    EXPECT_EQ(pt.find("positivity-equivalence"), nullptr);
    // the converse fails at -1 for an ordering below a valuation
    EXPECT_TRUE(vdeg.qo.le(Element::zero(Ring::poly_uni()), Element::from_int(Ring::poly_uni(), -1)));
    EXPECT_FALSE(pna.qo.le(Element::zero(Ring::poly_uni()), Element::from_int(Ring::poly_uni(), -1)));
    EXPECT_THROW(positivity_transfer_check(pa.qo, vdeg.qo, U), PreconditionError);
}

TEST(Coarsening, PositivityEquivalenceBetweenValuations)
{
    const Universe U = defaults(Ring::poly_bi());
    const auto rep = positivity_transfer_check(find_entry("QXY:v").qo, find_entry("QXY:u").qo, U);
    EXPECT_TRUE(rep.passed());
    ASSERT_NE(rep.find("positivity-equivalence"), nullptr);
    const auto q = find_entry("QX:Pna").qo;
    EXPECT_TRUE(positivity_transfer_check(q, q, defaults(Ring::poly_uni())).passed());
}

TEST(Coarsening, ConvexityOfPrimes)
{
    const Universe U = defaults(Ring::integers());
    const auto v2 = find_entry("Z:vp:2").qo, leq = find_entry("Z:leq").qo;
    EXPECT_FALSE(is_refuted(convexity_check(Ideal::integers({2}), v2, U)));
    const auto d3 = convexity_check(Ideal::integers({3}), v2, U);
    ASSERT_TRUE(is_refuted(d3));
    const auto& r = std::get<Refuted>(d3);
    const long long x = oracle::as_int(r.x), y = oracle::as_int(r.y);
    EXPECT_TRUE(y % 3 == 0 && x % 3 != 0);
    EXPECT_TRUE(v2.le(Zi(0), r.x) && v2.le(r.x, r.y));
    EXPECT_TRUE(is_refuted(convexity_check(Ideal::integers({2}), leq, U)));
}

TEST(Coarsening, ConvexityAgreesWithTrivialCoarsening)
{
    for (Ring r : {Ring::integers(), Ring::poly_uni(), Ring::poly_bi()}) {
        const Universe U = defaults(r);
        for (const auto& e : catalog(r).entries)
            for (const auto& q : shipped_primes(r, kDefaultPrimeBound)) {
                const auto rep = qcomp_equivalence(e.qo, q, U);
                EXPECT_TRUE(rep.agree()) << e.id() << " at " << q.name();
            }
    }
    EXPECT_THROW(qcomp_equivalence(find_entry("Z:leq").qo, Ideal::integers({6}), defaults(Ring::integers())),
                 PreconditionError);
}

TEST(Coarsening, TrivialsAtDifferentPrimesAreIncomparable)
{
    const Universe U = defaults(Ring::integers());
    const auto rep = no_global_maximum_demo(Ideal::zero(Ring::integers()), Ideal::integers({2}), U);
    EXPECT_TRUE(rep.nested);
    ASSERT_TRUE(rep.y.has_value());
    EXPECT_EQ(oracle::as_int(*rep.y) % 2, 0);
    EXPECT_TRUE(is_refuted(rep.p_below_q));
    EXPECT_TRUE(is_refuted(rep.q_below_p));

    const auto two_three = no_global_maximum_demo(Ideal::integers({2}), Ideal::integers({3}), U);
    EXPECT_FALSE(two_three.nested);
    EXPECT_TRUE(is_refuted(two_three.p_below_q));
    EXPECT_TRUE(is_refuted(two_three.q_below_p));
}
