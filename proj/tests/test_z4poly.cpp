#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "z4lcd/z4poly.hpp"

using namespace z4lcd;

namespace {

Z4Poly random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(-1, max_degree), coef(0, 3);
    std::vector<int> c(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& v : c) v = coef(rng);
    return Z4Poly(c);
}

// Monic with constant term 1 or 3; degree 0 forces the polynomial 1.
Z4Poly random_reciprocable(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree), coef(0, 3), unit(0, 1);
    const int d = deg(rng);
    if (d == 0) return Z4Poly::one();
    std::vector<int> c(static_cast<std::size_t>(d + 1));
    for (auto& v : c) v = coef(rng);
    c.front() = unit(rng) ? 3 : 1;
    c.back() = 1;
    return Z4Poly(c);
}

Z4Poly random_monic(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree), coef(0, 3);
    std::vector<int> c(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& v : c) v = coef(rng);
    c.back() = 1;
    return Z4Poly(c);
}

const Z4Poly kXm1{3, 1};
const Z4Poly kF17{3, 1, 2, 1};
const Z4Poly kF17Star{3, 2, 3, 1};
const Z4Poly kX7m1{3, 0, 0, 0, 0, 0, 0, 1};

}  // namespace

TEST(Z4Poly, NormalizesAndReducesCoefficients) {
    EXPECT_TRUE(Z4Poly({0, 0, 4}).is_zero());
    EXPECT_EQ(Z4Poly({-1, 1}), kXm1);
    EXPECT_EQ(Z4Poly({3, 1, 0, 0}).degree(), 1);
    EXPECT_EQ(Z4Poly{}.degree(), kZeroDegree);
    EXPECT_EQ(Z4Poly::x_pow_minus_one(7), kX7m1);
    EXPECT_EQ(Z4Poly::x_pow_minus_one(1), kXm1);
}

TEST(Z4Poly, Add) {
    EXPECT_TRUE((Z4Poly{1, 1} + Z4Poly{3, 3}).is_zero());
    EXPECT_EQ(Z4Poly({3, 1, 2, 1}) + Z4Poly({0, 0, 0, 0}), kF17);
    EXPECT_TRUE((Z4Poly{2, 2} + Z4Poly{2, 2}).is_zero());
}

TEST(Z4Poly, MulReproducesFactorizationOfX7Minus1) {
    EXPECT_EQ(kXm1 * kF17 * kF17Star, kX7m1);
    EXPECT_EQ(Z4Poly::one() * kF17, kF17);
    EXPECT_TRUE((Z4Poly{} * kF17).is_zero());
    // 2 * 2 = 0 makes the product degree drop
    EXPECT_TRUE((Z4Poly{2} * Z4Poly{0, 2}).is_zero());
}

TEST(Z4Poly, DivmodMonic) {
    auto [q, r] = divmod_monic(kX7m1, kXm1);
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(q * kXm1 + r, kX7m1);
    EXPECT_EQ(q, Z4Poly({1, 1, 1, 1, 1, 1, 1}));

    auto [q2, r2] = divmod_monic(kF17, kF17);
    EXPECT_EQ(q2, Z4Poly::one());
    EXPECT_TRUE(r2.is_zero());

    auto [q3, r3] = divmod_monic(Z4Poly::one(), kXm1);
    EXPECT_TRUE(q3.is_zero());
    EXPECT_EQ(r3, Z4Poly::one());
}

TEST(Z4Poly, DivmodRejectsNonMonicDivisor) {
    EXPECT_THROW(divmod_monic(kX7m1, Z4Poly({1, 2})), std::invalid_argument);
    EXPECT_THROW(divmod_monic(kX7m1, Z4Poly({1, 3})), std::invalid_argument);
    EXPECT_THROW(divmod_monic(kX7m1, Z4Poly{}), std::invalid_argument);
}

TEST(Z4Poly, Reciprocal) {
    EXPECT_EQ(reciprocal(kF17), kF17Star);
    EXPECT_EQ(reciprocal(kF17Star), kF17);
    EXPECT_EQ(reciprocal(Z4Poly::one()), Z4Poly::one());
    EXPECT_EQ(reciprocal(kXm1), kXm1);
    // a0 = 3 scales the reversed coefficients by 3
    EXPECT_EQ(reciprocal(Z4Poly({3, 2, 1})), Z4Poly({3, 2, 1}));
    EXPECT_EQ(reciprocal(Z4Poly({3, 1, 0, 1})), Z4Poly({3, 0, 3, 1}));
}

TEST(Z4Poly, ReciprocalRejectsInvalidInput) {
    EXPECT_THROW(reciprocal(Z4Poly({1, 3})), std::invalid_argument);   // leading 3
    EXPECT_THROW(reciprocal(Z4Poly({2, 1})), std::invalid_argument);   // constant 2
    EXPECT_THROW(reciprocal(Z4Poly({0, 1})), std::invalid_argument);   // constant 0
    EXPECT_THROW(reciprocal(Z4Poly{}), std::invalid_argument);
    EXPECT_THROW(is_self_reciprocal(Z4Poly({2, 1})), std::invalid_argument);
}

TEST(Z4Poly, SelfReciprocal) {
    EXPECT_TRUE(is_self_reciprocal(kXm1));
    EXPECT_FALSE(is_self_reciprocal(kF17));
    EXPECT_TRUE(is_self_reciprocal(Z4Poly::one()));
    EXPECT_TRUE(is_self_reciprocal(kF17 * kF17Star));
}

TEST(Z4Poly, ReduceMod2) {
    EXPECT_EQ(reduce_mod2(kF17), F2Poly({1, 1, 0, 1}));
    EXPECT_TRUE(reduce_mod2(Z4Poly{2, 2}).is_zero());
    EXPECT_EQ(reduce_mod2(kX7m1), F2Poly::x_pow_plus_one(7));
}

TEST(F2Poly, Arithmetic) {
    const F2Poly a{1, 1, 0, 1}, b{1, 0, 1, 1}, x1{1, 1};
    EXPECT_EQ(x1 * a * b, F2Poly::x_pow_plus_one(7));
    EXPECT_TRUE((a + a).is_zero());
    auto [q, r] = divmod(F2Poly::x_pow_plus_one(7), a);
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(q, x1 * b);
    EXPECT_EQ(gcd(F2Poly::x_pow_plus_one(7), a * x1), a * x1);
    EXPECT_EQ(gcd(a, b), F2Poly::one());
    EXPECT_TRUE(gcd(F2Poly{}, F2Poly{}).is_zero());
    EXPECT_THROW(divmod(a, F2Poly{}), std::invalid_argument);
}

TEST(Z4PolyText, CoefficientStrings) {
    EXPECT_EQ(to_coeff_string(kF17), "3,1,2,1");
    EXPECT_EQ(to_coeff_string(Z4Poly{}), "");
    EXPECT_EQ(parse_z4poly("3,1,2,1"), kF17);
    EXPECT_EQ(parse_z4poly(" -1, 1 "), kXm1);
    EXPECT_EQ(parse_z4poly("+3,1"), kXm1);
    EXPECT_TRUE(parse_z4poly("").is_zero());
    EXPECT_TRUE(parse_z4poly("0,4").is_zero());
    EXPECT_THROW(parse_z4poly("1,,2"), std::invalid_argument);
    EXPECT_THROW(parse_z4poly("a"), std::invalid_argument);
    EXPECT_THROW(parse_z4poly("1,2,"), std::invalid_argument);
    EXPECT_THROW(parse_z4poly("1.5"), std::invalid_argument);
}

TEST(Z4PolyText, SymbolicUsesSignedStyle) {
    EXPECT_EQ(to_symbolic(kF17), "X^3+2X^2+X-1");
    EXPECT_EQ(to_symbolic(kF17Star), "X^3-X^2+2X-1");
    EXPECT_EQ(to_symbolic(kXm1), "X-1");
    EXPECT_EQ(to_symbolic(Z4Poly{}), "0");
    EXPECT_EQ(to_symbolic(Z4Poly{2}), "2");
    EXPECT_EQ(to_symbolic(Z4Poly{0, 0, 3}), "-X^2");
    EXPECT_EQ(to_symbolic(F2Poly{1, 1, 0, 1}), "X^3+X+1");
}

// ---------------------------------------------------------------- properties

TEST(Z4PolyProperty, RingAxioms) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = random_poly(rng, 8), b = random_poly(rng, 8), c = random_poly(rng, 8);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a + b, b + a);
        ASSERT_TRUE((a - a).is_zero());
    }
}

TEST(Z4PolyProperty, DegreeOfProductWithUnitLeadingCoefficient) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = random_monic(rng, 8);
        auto b = random_poly(rng, 8);
        if (b.is_zero()) continue;
        ASSERT_EQ((a * b).degree(), a.degree() + b.degree());
        ASSERT_EQ((scale(a, 3) * b).degree(), a.degree() + b.degree());
    }
}

TEST(Z4PolyProperty, DivmodRoundTrip) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 5000; ++trial) {
        const auto a = random_poly(rng, 14);
        const auto d = random_monic(rng, 6);
        auto [q, r] = divmod_monic(a, d);
        ASSERT_EQ(q * d + r, a);
        ASSERT_LT(r.degree(), d.degree());
    }
}

TEST(Z4PolyProperty, ReciprocalInvolutionAndMultiplicativity) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 5000; ++trial) {
        const auto f = random_reciprocable(rng, 10), g = random_reciprocable(rng, 10);
        ASSERT_EQ(reciprocal(reciprocal(f)), f);
        ASSERT_EQ(reciprocal(f * g), reciprocal(f) * reciprocal(g));
        ASSERT_TRUE(reciprocal(f).is_monic());
        const auto a0 = reciprocal(f).coeff(0);
        ASSERT_TRUE(a0 == 1 || a0 == 3);
    }
}

TEST(Z4PolyProperty, CoefficientStringRoundTrip) {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 500; ++trial) {
        const auto a = random_poly(rng, 12);
        ASSERT_EQ(parse_z4poly(to_coeff_string(a)), a);
    }
}
