#include <random>

#include <gtest/gtest.h>

#include "f2rep/gf2poly.hpp"
#include "oracles.hpp"

using namespace f2rep;

namespace {

F2Poly P(std::initializer_list<std::size_t> exps) { return F2Poly::from_exponents(exps); }

// 1 + x + x^7 + x^9
const F2Poly kF31 = P({0, 1, 7, 9});

// exponent set of (1 + x^63) / (1 + x + x^7 + x^9)
const std::vector<std::size_t> kF31Cofactor = {0,  1,  2,  3,  4,  5,  6,  8,  9,  10, 11, 12, 13,
                                               16, 17, 18, 19, 20, 22, 24, 25, 26, 27, 32, 33, 34,
                                               36, 37, 38, 40, 41, 44, 45, 48, 50, 52, 54};

} // namespace

TEST(F2Poly, ZeroHasNoDegree) {
    F2Poly z;
    EXPECT_TRUE(z.is_zero());
    EXPECT_FALSE(z.degree().has_value());
    EXPECT_EQ(ell1(z), 0u);
    EXPECT_EQ(ell0(z, 4), 5u);
    EXPECT_EQ(to_string(z), "0");
}

TEST(F2Poly, FromIndex) {
    EXPECT_EQ(F2Poly::from_index(11), P({0, 1, 3}));
    EXPECT_EQ(F2Poly::from_index(1), F2Poly::one());
    EXPECT_EQ(F2Poly::from_index(6), P({1, 2}));
    EXPECT_TRUE(F2Poly::from_index(0).is_zero());
    EXPECT_EQ(to_string(F2Poly::from_index(11)), "x^3 + x + 1");
}

TEST(F2Poly, IndexRoundTripAndParity) {
    for (std::uint64_t n = 0; n < (1u << 16); ++n) {
        const auto p = F2Poly::from_index(n);
        ASSERT_EQ(p.index(), BigInt(n));
        ASSERT_EQ(p.constant_term(), n % 2 == 1);
    }
    const BigInt big = (BigInt(1) << 130) + (BigInt(1) << 64) + 5;
    EXPECT_EQ(F2Poly::from_index(big).index(), big);
    EXPECT_EQ(*F2Poly::from_index(big).degree(), 130u);
}

TEST(F2Poly, CanonicalEquality) {
    EXPECT_EQ(F2Poly::from_words({5, 0, 0}), F2Poly::from_index(5));
    EXPECT_EQ(P({3, 3}), F2Poly{});
    EXPECT_EQ(P({200}) + P({200}), F2Poly{});
}

TEST(Mul, Examples) {
    EXPECT_EQ(mul(P({0, 1}), P({0, 1, 2})), P({0, 3}));
    EXPECT_EQ(mul(P({0, 1}), P({0, 7, 8})), kF31);
    const auto p = P({0, 1, 3});
    EXPECT_EQ(mul(p, p), P({0, 2, 6}));
}

TEST(Mul, MatchesSchoolbookOracle) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = oracle::random_poly(rng, rng() % 300, false);
        const auto b = oracle::random_poly(rng, rng() % 300, false);
        const auto expected = oracle::to_poly(oracle::mul(oracle::to_coeffs(a), oracle::to_coeffs(b)));
        ASSERT_EQ(mul(a, b), expected) << to_hex(a) << " * " << to_hex(b);
        ASSERT_EQ(*mul(a, b).degree(), *a.degree() + *b.degree());
        ASSERT_LE(ell1(mul(a, b)), ell1(a) * ell1(b));
    }
}

TEST(Mul, SparseAndDenseKernelsAgree) {
    std::mt19937_64 rng(11);
    const auto dense = oracle::random_poly(rng, 2000, true);
    const auto sparse = P({0, 3, 700, 1999});
    const auto expected = oracle::to_poly(oracle::mul(oracle::to_coeffs(dense), oracle::to_coeffs(sparse)));
    EXPECT_EQ(mul(dense, sparse), expected);
    EXPECT_EQ(mul(sparse, dense), expected);
}

TEST(Frobenius, SquareSubstitutesXSquared) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = oracle::random_poly(rng, rng() % 500, false);
        const auto sq = square(p);
        ASSERT_EQ(sq, mul(p, p));
        for (std::size_t i = 0; i <= *sq.degree(); ++i) {
            ASSERT_EQ(sq.coeff(i), i % 2 == 0 && p.coeff(i / 2));
        }
        // p^(2^3) = p(x^8)
        PolyBuilder expect;
        for (auto e : p.exponents()) expect.set(8 * e);
        ASSERT_EQ(frobenius(p, 3), std::move(expect).build());
    }
}

TEST(DivRem, Examples) {
    auto [q, r] = divrem(binomial(63), kF31);
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(q.exponents(), kF31Cofactor);
    EXPECT_EQ(ell1(q), 37u);
    EXPECT_EQ(ell0(q, 62), 26u);

    auto [q2, r2] = divrem(P({0, 3}), P({0, 1, 2}));
    EXPECT_EQ(q2, P({0, 1}));
    EXPECT_TRUE(r2.is_zero());

    const auto p = P({0, 5, 77});
    auto [q3, r3] = divrem(p, p);
    EXPECT_EQ(q3, F2Poly::one());
    EXPECT_TRUE(r3.is_zero());
}

TEST(DivRem, ZeroDivisorThrows) { EXPECT_THROW(divrem(P({0, 1}), F2Poly{}), DivisionByZero); }

TEST(DivRem, IdentityOnRandomInputs) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = oracle::random_poly(rng, rng() % 400, false);
        const auto b = oracle::random_poly(rng, rng() % 150, false);
        auto [q, r] = divrem(a, b);
        ASSERT_EQ(mul(b, q) + r, a);
        if (!r.is_zero()) ASSERT_LT(*r.degree(), *b.degree());
        const auto ref = oracle::divrem(oracle::to_coeffs(a), oracle::to_coeffs(b));
        ASSERT_EQ(q, oracle::to_poly(ref.q));
        ASSERT_EQ(r, oracle::to_poly(ref.r));
    }
}

TEST(ModPowX, Examples) {
    EXPECT_EQ(modpow_x(63, kF31), F2Poly::one());
    EXPECT_EQ(modpow_x(0, P({0, 1, 2})), F2Poly::one());
    const auto r21 = modpow_x(21, kF31);
    EXPECT_FALSE(r21.is_zero());
    EXPECT_NE(r21, F2Poly::one());
    EXPECT_EQ(modpow_x(5, P({0, 1})), F2Poly::one());
}

TEST(ModPowX, RejectsNonUnitModulus) {
    EXPECT_THROW(modpow_x(3, P({1, 4})), NoOrder);
    EXPECT_THROW(modpow_x(3, F2Poly::one()), ContractError);
    EXPECT_THROW(modpow_x(3, F2Poly{}), DivisionByZero);
}

TEST(ModPowX, MatchesStepwiseOracle) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 12; ++trial) {
        const auto m = oracle::random_poly(rng, 1 + rng() % 40, true);
        const auto mc = oracle::to_coeffs(m);
        for (std::uint64_t e = 0; e <= 4096; e += 1 + rng() % 37) {
            ASSERT_EQ(modpow_x(e, m), oracle::to_poly(oracle::powx_naive(e, mc))) << to_string(m) << " e=" << e;
        }
    }
}

TEST(Reciprocal, Examples) {
    EXPECT_EQ(reciprocal(kF31), P({0, 2, 8, 9}));
    EXPECT_EQ(reciprocal(P({0, 1})), P({0, 1}));
    EXPECT_EQ(reciprocal(P({0, 1, 8, 10})), P({0, 2, 9, 10}));
    EXPECT_THROW(reciprocal(F2Poly{}), ContractError);
}

TEST(Reciprocal, InvolutiveWithUnitConstant) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = oracle::random_poly(rng, rng() % 300, true);
        ASSERT_EQ(reciprocal(reciprocal(f)), f);
    }
}

TEST(Ell, Ell0RejectsShortView) {
    EXPECT_THROW(ell0(kF31, 8), ContractError);
    EXPECT_EQ(ell0(kF31, 9), 6u);
}

TEST(OnePlusXPow, MatchesRepeatedMultiplication) {
    F2Poly acc = F2Poly::one();
    for (std::uint64_t n = 0; n <= 300; ++n) {
        ASSERT_EQ(one_plus_x_pow(n), acc) << n;
        acc = mul(acc, P({0, 1}));
    }
}

TEST(Text, FormatsAndParses) {
    EXPECT_EQ(to_string(kF31), "x^9 + x^7 + x + 1");
    EXPECT_EQ(to_hex(kF31), "0x283");
    EXPECT_EQ(parse_poly("x^9 + x^7 + x + 1"), kF31);
    EXPECT_EQ(parse_poly("x^9+x^7+x+1"), kF31);
    EXPECT_EQ(parse_poly("1 + x + x^7 + x^9"), kF31);
    EXPECT_EQ(parse_poly("0x283"), kF31);
    EXPECT_EQ(parse_poly("@643"), kF31);
    EXPECT_EQ(parse_poly("x^{9}+x^7+x+1"), kF31);
    EXPECT_EQ(parse_poly("0"), F2Poly{});
    EXPECT_EQ(to_hex(P({0, 64})), "0x10000000000000001");
    EXPECT_EQ(parse_poly("0x10000000000000001"), P({0, 64}));
}

TEST(Text, ParseErrorsNameTheToken) {
    try {
        parse_poly("x^9 + y + 1");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("'y'"), std::string::npos);
    }
    EXPECT_THROW(parse_poly(""), ParseError);
    EXPECT_THROW(parse_poly("x^ + 1"), ParseError);
    EXPECT_THROW(parse_poly("x^9 + + 1"), ParseError);
    EXPECT_THROW(parse_poly("0xZZ"), ParseError);
    EXPECT_THROW(parse_poly("@12a"), ParseError);
}

TEST(Text, RoundTripAllForms) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = oracle::random_poly(rng, rng() % 200, rng() & 1u);
        ASSERT_EQ(parse_poly(to_string(p)), p);
        ASSERT_EQ(parse_poly(to_hex(p)), p);
        ASSERT_EQ(parse_poly("@" + p.index().str()), p);
    }
}

TEST(BitCap, GuardsLargeAllocations) {
    const auto saved = bit_cap();
    set_bit_cap(1000);
    EXPECT_THROW(require_bits(1001, "test"), BitCapExceeded);
    EXPECT_NO_THROW(require_bits(1000, "test"));
    set_bit_cap(saved);
}
