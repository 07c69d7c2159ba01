#include <bit>

#include <gtest/gtest.h>

#include "f2rep/families.hpp"
#include "oracles.hpp"

using namespace f2rep;

namespace {

using Pair = std::pair<std::uint64_t, std::uint64_t>;

F2Poly P(std::initializer_list<std::size_t> exps) { return F2Poly::from_exponents(exps); }

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t out = 1;
    while (e--) out *= b;
    return out;
}

} // namespace

TEST(Build, Examples) {
    EXPECT_EQ(build({3, FamilyVariant::One, false}), P({0, 1, 7, 9}));
    EXPECT_EQ(build({3, FamilyVariant::Two, false}), P({0, 1, 8, 10}));
    EXPECT_EQ(build({3, FamilyVariant::Two, true}), P({0, 2, 9, 10}));
    EXPECT_EQ(build({3, FamilyVariant::One, true}), P({0, 2, 8, 9}));
    for (unsigned r = 1; r <= 12; ++r) {
        EXPECT_EQ(*build({r, FamilyVariant::One, false}).degree(), (1u << r) + 1);
        EXPECT_EQ(*build({r, FamilyVariant::Two, false}).degree(), (1u << r) + 2);
        for (auto v : {FamilyVariant::One, FamilyVariant::Two}) {
            EXPECT_EQ(reciprocal(build({r, v, false})), build({r, v, true}));
        }
    }
    EXPECT_THROW(build({0, FamilyVariant::One, false}), ContractError);
}

TEST(Predict, CountsAddUpAndExceedTheThreshold) {
    for (unsigned r = 1; r <= 20; ++r) {
        for (auto v : {FamilyVariant::One, FamilyVariant::Two}) {
            const auto p = predict(r, v);
            ASSERT_EQ(p.c + p.d, p.period);
            if (r >= 3) {
                ASSERT_GT(p.c, p.d + 1);
                // c / period > 1 - (3/4)^r  <=>  c·4^r > (4^r - 3^r)·period
                ASSERT_GT(BigInt(p.c) * ipow(4, r), (BigInt(ipow(4, r)) - ipow(3, r)) * p.period);
            }
        }
    }
    EXPECT_EQ(predict(3, FamilyVariant::One).period, 63u);
    EXPECT_EQ(predict(3, FamilyVariant::Two).period, 73u);
    EXPECT_EQ(predict(3, FamilyVariant::Two).c, 45u);
}

TEST(GProduct, SmallRExpansion) {
    EXPECT_EQ(g_product(1, FamilyVariant::One), P({0, 1}));
}

TEST(GProduct, TimesTrinomialIsSparse) {
    for (unsigned r = 1; r <= 10; ++r) {
        const std::size_t p = std::size_t{1} << r;
        EXPECT_EQ(mul(P({0, p - 1, p}), g_product(r, FamilyVariant::One)), binomial(p * p - 1)) << r;
        EXPECT_EQ(mul(P({0, p, p + 1}), g_product(r, FamilyVariant::Two)), P({0, p * p, p * p + p})) << r;
    }
}

TEST(GProduct, FactorsThroughOnePlusXTimesH) {
    // g_{r,1} = (1 + x) h_{r,1}
    for (unsigned r = 1; r <= 7; ++r) {
        EXPECT_EQ(g_product(r, FamilyVariant::One), mul(P({0, 1}), h_closed_form(r, FamilyVariant::One))) << r;
    }
}

TEST(HClosedForm, EqualsDivisionCofactor) {
    for (unsigned r = 1; r <= 8; ++r) {
        for (auto v : {FamilyVariant::One, FamilyVariant::Two}) {
            const auto f = build({r, v, false});
            const auto period = predict(r, v).period;
            ASSERT_EQ(h_closed_form(r, v), cofactor(f, period)) << "r=" << r << " v=" << static_cast<int>(v);
        }
    }
}

TEST(HClosedForm, TermCounts) {
    for (unsigned r = 2; r <= 9; ++r) {
        const auto h1 = h_closed_form(r, FamilyVariant::One);
        EXPECT_EQ(ell1(h1), ipow(4, r) - ipow(3, r));
        EXPECT_EQ(ell0(h1, ipow(4, r) - 2), ipow(3, r) - 1);
        // before padding to the full period the zero count is 3^r - 2^r
        EXPECT_EQ(ell0(h1, ipow(4, r) - ipow(2, r) - 1), ipow(3, r) - ipow(2, r));

        const auto h2 = h_closed_form(r, FamilyVariant::Two);
        EXPECT_EQ(ell1(h2), ipow(4, r) - ipow(3, r) + ipow(2, r));
        EXPECT_EQ(ell0(h2, ipow(4, r) + ipow(2, r)), ipow(3, r) + 1);
    }
}

TEST(AbIdentity, Examples) {
    EXPECT_TRUE(ab_lemma_check(1, 2, 1));
    EXPECT_TRUE(ab_lemma_check(7, 8, 3));
    EXPECT_TRUE(ab_lemma_check(3, 5, 4));
    EXPECT_THROW(ab_lemma_check(5, 3, 2), ContractError);
    EXPECT_THROW(ab_lemma_check(0, 3, 2), ContractError);
}

TEST(AbIdentity, HoldsForAllSmallParameters) {
    for (std::uint64_t b = 2; b <= 24; ++b) {
        for (std::uint64_t a = 1; a < b; ++a) {
            for (unsigned m = 1; m <= 5; ++m) ASSERT_TRUE(ab_lemma_check(a, b, m)) << a << "," << b << "," << m;
        }
    }
}

TEST(AbIdentity, ExpandedByOracle) {
    // (1 + x^3 + x^5)·(1 + x^3 + x^5)(1 + x^6 + x^10) via schoolbook coefficients
    auto t = oracle::from_exponents({0, 3, 5});
    auto lhs = oracle::mul(oracle::mul(t, t), oracle::from_exponents({0, 6, 10}));
    EXPECT_EQ(lhs, oracle::from_exponents({0, 12, 20}));
}

TEST(Glaisher, SumMatchesClosedForm) {
    EXPECT_EQ(glaisher_sum(2), 5u);
    for (unsigned r = 2; r <= 20; ++r) EXPECT_EQ(glaisher_sum(r), ipow(3, r) - ipow(2, r)) << r;
    EXPECT_THROW(glaisher_sum(1), ContractError);
}

TEST(Glaisher, OddBinomialCount) {
    EXPECT_EQ(odd_binomial_count(0), 1);
    // row n of Pascal's triangle mod 2 built by the additive rule
    std::vector<std::uint8_t> row{1};
    for (std::uint64_t n = 0; n <= 1024; ++n) {
        std::uint64_t odd = 0;
        for (auto b : row) odd += b;
        ASSERT_EQ(odd_binomial_count(n), odd) << n;
        ASSERT_EQ(odd_binomial_count(n), ell1(one_plus_x_pow(n))) << n;
        std::vector<std::uint8_t> next(row.size() + 1, 0);
        for (std::size_t i = 0; i < row.size(); ++i) {
            next[i] ^= row[i];
            next[i + 1] ^= row[i];
        }
        row = std::move(next);
    }
}

TEST(VerifyFamily, WorkedExamples) {
    auto v31 = verify_family({3, FamilyVariant::One, false});
    EXPECT_TRUE(v31.all_ok());
    EXPECT_EQ(v31.beta.beta(), Pair(37, 26));
    EXPECT_TRUE(v31.order_exact);
    EXPECT_EQ(v31.beta.period, 63u);
    EXPECT_TRUE(v31.robust);
    EXPECT_EQ(v31.closed_form_matches, std::optional<bool>(true));

    auto v32 = verify_family({3, FamilyVariant::Two, false});
    EXPECT_TRUE(v32.all_ok());
    EXPECT_EQ(v32.beta.beta(), Pair(45, 28));
    EXPECT_TRUE(v32.order_exact);

    auto rec = verify_family({3, FamilyVariant::Two, true});
    EXPECT_TRUE(rec.all_ok());
    EXPECT_FALSE(rec.closed_form_matches.has_value());
    EXPECT_EQ(rec.beta.beta(), v32.beta.beta());
}

TEST(VerifyFamily, NonCoprimeCountsStillExactOrder) {
    auto v = verify_family({6, FamilyVariant::Two, false});
    EXPECT_NE(std::gcd(v.prediction.c, v.prediction.d), 1u);
    EXPECT_EQ(v.prediction.period, 4161u);
    EXPECT_TRUE(v.order_exact);
    EXPECT_TRUE(v.all_ok());
}

TEST(VerifyFamily, SmallRIsReportedNotAsserted) {
    for (unsigned r = 1; r <= 2; ++r) {
        for (auto var : {FamilyVariant::One, FamilyVariant::Two}) {
            auto v = verify_family({r, var, false});
            EXPECT_FALSE(v.robustness_asserted);
            EXPECT_TRUE(v.period_divides);
            EXPECT_TRUE(v.matches_prediction);
        }
    }
}

TEST(VerifyFamily, CeilingNeedsOptIn) {
    EXPECT_THROW(verify_family({11, FamilyVariant::One, false}), ContractError);
}

TEST(VerifyFamily, BitCapFailsFast) {
    const auto saved = bit_cap();
    set_bit_cap(1000);
    EXPECT_THROW(verify_family({6, FamilyVariant::One, false}), BitCapExceeded);
    set_bit_cap(saved);
}

TEST(VerifyFamily, ReciprocalPairsShareBeta) {
    for (unsigned r = 3; r <= 6; ++r) {
        for (auto var : {FamilyVariant::One, FamilyVariant::Two}) {
            const auto a = verify_family({r, var, false});
            const auto b = verify_family({r, var, true});
            ASSERT_TRUE(a.all_ok());
            ASSERT_TRUE(b.all_ok());
            ASSERT_EQ(a.beta.beta(), b.beta.beta());
            ASSERT_EQ(a.order_exact, b.order_exact);
        }
    }
}
