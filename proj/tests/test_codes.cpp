#include <gtest/gtest.h>

#include "z4lcd/codes.hpp"
#include "z4lcd/oracle.hpp"

using namespace z4lcd;

namespace {

// Ids for N = 7: 0 = g[1,1] = X-1, 1 = f[1,7], 2 = f*[1,7].
constexpr FactorId kG11 = 0, kF17 = 1, kF17Star = 2;

struct N7 : ::testing::Test {
    TablePtr table = make_factor_table(7);
    DivisorSet ids(std::vector<FactorId> v) const { return DivisorSet(table, std::move(v)); }
    CodeSpec code(std::vector<FactorId> f, std::vector<FactorId> g, std::vector<FactorId> h) const {
        return CodeSpec(ids(std::move(f)), ids(std::move(g)), ids(std::move(h)));
    }
};

std::vector<DivisorSet> all_subsets(const TablePtr& t) {
    std::vector<DivisorSet> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << t->size()); ++mask) {
        std::vector<FactorId> ids;
        for (FactorId id = 0; id < t->size(); ++id)
            if (mask >> id & 1) ids.push_back(id);
        out.emplace_back(t, std::move(ids));
    }
    return out;
}

}  // namespace

TEST_F(N7, DivisorPoly) {
    EXPECT_EQ(divisor_poly(ids({})), Z4Poly::one());
    EXPECT_EQ(divisor_poly(DivisorSet::all(table)), Z4Poly::x_pow_minus_one(7));
    // f17 f17* = (X^7 - 1)/(X - 1)
    const auto expected = divmod_monic(Z4Poly::x_pow_minus_one(7), Z4Poly{3, 1}).first;
    EXPECT_EQ(divisor_poly(ids({kF17, kF17Star})), expected);
    EXPECT_EQ(expected, Z4Poly({1, 1, 1, 1, 1, 1, 1}));
}

TEST_F(N7, ReciprocalSet) {
    EXPECT_EQ(reciprocal_set(ids({kG11})), ids({kG11}));
    EXPECT_EQ(reciprocal_set(ids({kF17})), ids({kF17Star}));
    EXPECT_EQ(reciprocal_set(ids({})), ids({}));
}

TEST_F(N7, FactorDivisor) {
    EXPECT_EQ(factor_divisor(Z4Poly::x_pow_minus_one(7), table), DivisorSet::all(table));
    EXPECT_EQ(factor_divisor(Z4Poly::one(), table), ids({}));
    EXPECT_EQ(factor_divisor(Z4Poly{3, 1}, table), ids({kG11}));
    EXPECT_EQ(factor_divisor(Z4Poly{3, 2, 3, 1}, table), ids({kF17Star}));
}

TEST_F(N7, FactorDivisorRejectsNonDivisors) {
    EXPECT_THROW(factor_divisor(Z4Poly{1, 1}, table), std::invalid_argument);  // X+1 is not X-1 over Z4
    EXPECT_THROW(factor_divisor(Z4Poly{0, 1}, table), std::invalid_argument);
    EXPECT_THROW(factor_divisor(Z4Poly{1, 2}, table), std::invalid_argument);  // not monic
    EXPECT_THROW(factor_divisor(Z4Poly{}, table), std::invalid_argument);
    EXPECT_THROW(factor_divisor(Z4Poly{3, 1} * Z4Poly{3, 1}, table), std::invalid_argument);
    EXPECT_THROW(factor_divisor(Z4Poly{3, 1}, nullptr), std::invalid_argument);
}

TEST_F(N7, DivisorSetValidation) {
    EXPECT_THROW(ids({3}), std::invalid_argument);
    EXPECT_THROW(DivisorSet(nullptr, {}), std::invalid_argument);
    EXPECT_EQ(ids({2, 0, 2}).members().size(), 2u);
    const auto other = make_factor_table(7);
    EXPECT_THROW(ids({0}) | DivisorSet(other, {1}), std::invalid_argument);
}

TEST_F(N7, CodeSpecValidation) {
    EXPECT_THROW(code({0}, {0}, {1, 2}), std::invalid_argument);  // overlap
    EXPECT_THROW(code({0}, {}, {1}), std::invalid_argument);      // missing 2
    EXPECT_THROW(CodeSpec::from_fg(ids({0, 1}), ids({1})), std::invalid_argument);
    const auto c = CodeSpec::from_fg(ids({1}), ids({0}));
    EXPECT_EQ(c.h(), ids({2}));
    const auto other = make_factor_table(7);
    EXPECT_THROW(CodeSpec(ids({0}), ids({1}), DivisorSet(other, {2})), std::invalid_argument);
}

TEST_F(N7, HullReportExamples) {
    const auto lcd = hull_report(code({kG11}, {}, {kF17, kF17Star}));
    EXPECT_EQ(lcd.degH, 0u);
    EXPECT_EQ(lcd.degG, 0u);
    EXPECT_EQ(lcd.hullSize, 1);
    EXPECT_TRUE(lcd.lcd);

    const auto c = code({kF17}, {}, {kG11, kF17Star});
    const auto r = hull_report(c);
    EXPECT_EQ(r.H, ids({kF17Star}));
    EXPECT_EQ(r.degH, 3u);
    EXPECT_TRUE(r.G.is_empty());
    EXPECT_EQ(r.hullSize, 64);
    EXPECT_FALSE(r.lcd);
    EXPECT_EQ(oracle::hull_bruteforce(c), 64u);

    const auto two = hull_report(code({}, {0, 1, 2}, {}));
    EXPECT_TRUE(two.H.is_empty());
    EXPECT_EQ(two.G, DivisorSet::all(table));
    EXPECT_EQ(two.hullSize, 128);
    EXPECT_FALSE(two.lcd);
}

TEST(Codes, TwoCodeAtN3HasHullEight) {
    const auto t = make_factor_table(3);
    const CodeSpec c(DivisorSet::empty(t), DivisorSet::all(t), DivisorSet::empty(t));
    EXPECT_EQ(hull_report(c).hullSize, 8);
    EXPECT_EQ(code_size(c), 8);
    EXPECT_EQ(oracle::hull_bruteforce(c), 8u);
    EXPECT_EQ(oracle::expand_code(c).size(), 8u);
}

TEST_F(N7, CodeSize) {
    EXPECT_EQ(code_size(code({}, {}, {0, 1, 2})), BigCount(1) << 14);
    EXPECT_EQ(code_size(code({0, 1, 2}, {}, {})), 1);
    EXPECT_EQ(code_size(code({0}, {1}, {2})), 4 * 4 * 4 * 8);
}

TEST_F(N7, IsLcdExamples) {
    EXPECT_TRUE(is_lcd(code({kF17, kF17Star}, {}, {kG11})));
    EXPECT_FALSE(is_lcd(code({kF17}, {}, {kG11, kF17Star})));
    EXPECT_TRUE(is_lcd(code({0, 1, 2}, {}, {})));
    EXPECT_TRUE(is_lcd(code({}, {}, {0, 1, 2})));
}

TEST_F(N7, ReciprocalCode) {
    const auto c = code({kF17}, {kG11}, {kF17Star});
    EXPECT_EQ(c.reciprocal(), code({kF17Star}, {kG11}, {kF17}));
    EXPECT_EQ(c.reciprocal().reciprocal(), c);
}

TEST(Codes, AllPartitionsCount) {
    for (std::uint64_t N : {1, 3, 7, 15}) {
        const auto t = make_factor_table(N);
        std::size_t expected = 1;
        for (std::size_t k = 0; k < t->size(); ++k) expected *= 3;
        EXPECT_EQ(all_partitions(t).size(), expected);
    }
}

// For every odd N <= 15 and every partition: is_lcd iff g = 1 and f is reciprocal-closed.
TEST(CodesProperty, LcdCriterionHoldsForEveryPartition) {
    for (std::uint64_t N = 1; N <= 15; N += 2) {
        const auto t = make_factor_table(N);
        for (const auto& c : all_partitions(t))
            ASSERT_EQ(is_lcd(c), c.g().is_empty() && reciprocal_set(c.f()) == c.f()) << "N=" << N;
    }
}

TEST(CodesProperty, ReciprocalSetIsInvolutionAndMatchesPolynomialReciprocal) {
    for (std::uint64_t N = 1; N <= 15; N += 2) {
        const auto t = make_factor_table(N);
        for (const auto& d : all_subsets(t)) {
            ASSERT_EQ(reciprocal_set(reciprocal_set(d)), d);
            ASSERT_EQ(divisor_poly(reciprocal_set(d)), reciprocal(divisor_poly(d))) << "N=" << N;
        }
    }
}

TEST(CodesProperty, FactorDivisorRoundTrip) {
    for (std::uint64_t N = 1; N <= 15; N += 2) {
        const auto t = make_factor_table(N);
        for (const auto& d : all_subsets(t)) ASSERT_EQ(factor_divisor(divisor_poly(d), t), d) << "N=" << N;
    }
}

TEST(CodesProperty, HullDegreeAccounting) {
    for (std::uint64_t N = 1; N <= 15; N += 2) {
        const auto t = make_factor_table(N);
        for (const auto& c : all_partitions(t)) {
            const auto r = hull_report(c);
            const auto lcm_set = c.f() | reciprocal_set(c.h());
            ASSERT_TRUE((r.H & lcm_set).is_empty());
            ASSERT_EQ(r.H.degree() + lcm_set.degree() + r.G.degree(), N);
            ASSERT_EQ(r.hullSize, BigCount(1) << (2 * r.degH + r.degG));
            // Degrees agree with the polynomials themselves.
            ASSERT_EQ(static_cast<int>(r.degH), divisor_poly(r.H).degree());
            ASSERT_EQ(static_cast<int>(r.degG), divisor_poly(r.G).degree());
        }
    }
}

// Z4[X] is not a domain, so check the set-theoretic gcd against divisibility:
// H divides both h and f*, and no larger table divisor does.
TEST(CodesProperty, HullGcdIsGreatestCommonTableDivisor) {
    for (std::uint64_t N = 1; N <= 9; N += 2) {
        const auto t = make_factor_table(N);
        for (const auto& c : all_partitions(t)) {
            const auto h = divisor_poly(c.h());
            const auto fstar = reciprocal(divisor_poly(c.f()));
            const auto H = hull_report(c).H;
            for (const auto& r : t->records()) {
                const bool divides_both = divmod_monic(h, r.poly).second.is_zero() && divmod_monic(fstar, r.poly).second.is_zero();
                ASSERT_EQ(divides_both, H.contains(r.id));
            }
        }
    }
}
