// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "qord/axioms.hpp"
#include "qord/catalog.hpp"

using namespace qord;

namespace {

Universe small(Ring r)
{
    UniverseBounds b = UniverseBounds::defaults(r);
    if (r.is_polynomial()) {
        b.max_exp = r.variables() == 1 ? 2 : 1;
        b.coeffs = {-1, 1};
    }
    return Universe(r, b);
}

// Re-evaluates a failing outcome's witness against the oracle directly.
bool witness_violates(const QuasiOrder& q, const AxiomOutcome& o)
{
    const auto& w = o.witness;
    const Ring r = q.ring();
    const Element zero = Element::zero(r);
    if (o.axiom == "QR1") return !q.lt(w[0], w[1]);
    if (o.axiom == "transitivity") return q.le(w[0], w[1]) && q.le(w[1], w[2]) && !q.le(w[0], w[2]);
    if (o.axiom == "QR4") return q.le(w[0], w[1]) && !q.equiv(w[2], w[1]) && !q.le(w[0] + w[2], w[1] + w[2]);
    if (o.axiom == "QR2") {
        const Element m = w[0] * w[1];
        return q.le(zero, w[0]) && q.le(zero, w[1]) && q.le(w[2], w[3]) && !q.le(w[2] * m, w[3] * m);
    }
    if (o.axiom == "QR3") {
        const Element m = w[0] * w[1];
        return q.lt(zero, w[0]) && q.lt(zero, w[1]) && q.le(w[2] * m, w[3] * m) && !q.le(w[2], w[3]);
    }
    return false;
}

QuasiOrder absolute_value_order()
{
    return QuasiOrder(
        "Z:abs", Ring::integers(),
        [](const Element& x, const Element& y) {
            const Integer a = abs(x.integer()), b = abs(y.integer());
            return a < b ? Cmp::Less : b < a ? Cmp::Greater : Cmp::Equivalent;
        },
        Kind::Unknown, Ideal::zero(Ring::integers()));
}

} // namespace

TEST(Axioms, CatalogSatisfiesQrOnSmallUniverses)
{
    for (Ring r : {Ring::integers(), Ring::poly_uni(), Ring::poly_bi()}) {
        const Universe U = small(r);
        const auto c = catalog(r);
        const auto reps = check_qr_axioms(c.quasi_orders(), U);
        ASSERT_EQ(reps.size(), c.entries.size());
        for (const auto& rep : reps) {
            EXPECT_TRUE(rep.passed()) << rep.qo_id;
            EXPECT_EQ(rep.universe, U.descriptor());
            ASSERT_NE(rep.find("QR4"), nullptr);
            EXPECT_GT(rep.find("QR4")->count, 0u);
        }
    }
}

TEST(Axioms, TransitivityCountMatchesTripleLoop)
{
    const Universe U = small(Ring::integers());
    const auto rep = check_qr_axioms(find_entry("Z:leq").qo, U);
    std::uint64_t expect = 0;
    for (const auto& x : U)
        for (const auto& y : U)
            for (const auto& z : U)
                if (oracle::as_int(x) <= oracle::as_int(y) && oracle::as_int(y) <= oracle::as_int(z)) ++expect;
    EXPECT_EQ(rep.find("transitivity")->count, expect);
}

TEST(Axioms, SwapFailsQr1AtZeroOne)
{
    const Universe U = small(Ring::integers());
    const auto m = mutants::swap(find_entry("Z:vp:2").qo);
    const auto rep = check_qr_axioms(m, U);
    const auto* f = rep.find("QR1");
    ASSERT_FALSE(f->pass);
    EXPECT_EQ(f->witness[0].to_string(), "0");
    EXPECT_EQ(f->witness[1].to_string(), "1");
    EXPECT_TRUE(witness_violates(m, *f));
}

TEST(Axioms, AbsoluteValueFailsQr4WithValidWitness)
{
    const Universe U = small(Ring::integers());
    const auto q = absolute_value_order();
    const auto rep = check_qr_axioms(q, U);
    const auto* f = rep.find("QR4");
    ASSERT_FALSE(f->pass);
    EXPECT_TRUE(witness_violates(q, *f));
    for (const auto& o : rep.outcomes) {
        if (!o.pass) {
            EXPECT_TRUE(witness_violates(q, o)) << o.axiom;
        }
    }
}

TEST(Axioms, EveryReportedWitnessIsGenuine)
{
    const Universe U = small(Ring::poly_uni());
    for (const auto& e : catalog(Ring::poly_uni()).entries) {
        if (e.qo.is_trivial()) {
            // two classes admit no strict 3-chain to break
            EXPECT_THROW(mutants::break_transitivity(e.qo, U), PreconditionError);
            continue;
        }
        for (const auto& m : {mutants::swap(e.qo), mutants::break_transitivity(e.qo, U)}) {
            const auto rep = check_qr_axioms(m, U);
            EXPECT_FALSE(rep.passed()) << m.id();
            for (const auto& o : rep.outcomes) {
                if (!o.pass && o.axiom != "consistency" && o.axiom != "reflexivity") {
                    EXPECT_TRUE(witness_violates(m, o)) << m.id() << " " << o.axiom;
                }
            }
        }
    }
}

TEST(Axioms, BreakMutantFailsTransitivity)
{
    const Universe U = small(Ring::integers());
    const auto m = mutants::break_transitivity(find_entry("Z:leq").qo, U);
    const auto rep = check_qr_axioms_until_failure(m, U);
    const auto* f = rep.first_failure();
    ASSERT_NE(f, nullptr);
    EXPECT_EQ(f->axiom, "transitivity");
    EXPECT_TRUE(witness_violates(m, *f));
}

TEST(Axioms, FailFastStopsAfterFirstFailure)
{
    const Universe U = small(Ring::integers());
    const auto rep = check_qr_axioms_until_failure(mutants::swap(find_entry("Z:leq").qo), U);
    EXPECT_FALSE(rep.passed());
    EXPECT_EQ(rep.outcomes.back().axiom, "QR1");
    EXPECT_EQ(rep.find("QR4"), nullptr);
}

TEST(Axioms, MutationSuiteCatchesEveryMutant)
{
    const Universe U = small(Ring::integers());
    const auto ord = mutation_suite(find_entry("Z:leq").qo, U);
    EXPECT_TRUE(ord.passed());
    ASSERT_EQ(ord.mutants.size(), 3u);
    EXPECT_EQ(ord.mutants[1].mutant, "collapse");
    EXPECT_EQ(ord.mutants[1].classified_after, Kind::Valuation);
    EXPECT_FALSE(ord.mutants[1].ordering_suite_error.empty());

    const auto val = mutation_suite(find_entry("Z:vp:3").qo, U);
    EXPECT_TRUE(val.passed());
    EXPECT_EQ(val.mutants.size(), 2u);
}

TEST(Axioms, OrderingAxiomsRequireAnOrdering)
{
    const Universe U = small(Ring::integers());
    EXPECT_THROW(check_ordering_axioms(find_entry("Z:vp:2").qo, U), PreconditionError);
    EXPECT_TRUE(check_ordering_axioms(find_entry("Z:leq").qo, U).passed());
    const Universe V = small(Ring::poly_uni());
    const auto reps = check_ordering_axioms(std::vector<QuasiOrder>{find_entry("QX:Pa").qo, find_entry("QX:Pna").qo,
                                                                    find_entry("QX:eval0").qo},
                                            V);
    for (const auto& r : reps) EXPECT_TRUE(r.passed()) << r.qo_id;
}

TEST(Axioms, DerivedLemmasHoldOnCatalog)
{
    for (Ring r : {Ring::integers(), Ring::poly_uni(), Ring::poly_bi()}) {
        const Universe U = small(r);
        for (const auto& e : catalog(r).entries) EXPECT_TRUE(check_derived_lemmas(e.qo, U).passed()) << e.id();
    }
}

TEST(Axioms, ClassifyByMinusOne)
{
    EXPECT_EQ(classify(find_entry("Z:leq").qo), Kind::Ordering);
    EXPECT_EQ(classify(find_entry("Z:vp:5").qo), Kind::Valuation);
    EXPECT_EQ(classify(mutants::sign_collapse(find_entry("QX:Pa").qo)), Kind::Valuation);
}
