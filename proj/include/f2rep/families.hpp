#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "f2rep/gf2poly.hpp"
#include "f2rep/order_beta.hpp"

namespace f2rep {

enum class FamilyVariant : int { One = 1, Two = 2 };

/// One member of the four robust quadrinomial families:
///   variant 1:  1 + x + x^(2^r - 1) + x^(2^r + 1)   reciprocal 1 + x^2 + x^(2^r) + x^(2^r + 1)
///   variant 2:  1 + x + x^(2^r) + x^(2^r + 2)       reciprocal 1 + x^2 + x^(2^r + 1) + x^(2^r + 2)
struct FamilySpec {
    unsigned r = 3;
    FamilyVariant variant = FamilyVariant::One;
    bool reciprocal = false;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string to_string(const FamilySpec& spec);

/// Closed-form period and cofactor weights. c + d == period.
struct FamilyPrediction {
    std::uint64_t period = 0;
    std::uint64_t c = 0;
    std::uint64_t d = 0;
};

/// Largest r for which family sizes fit the 64-bit period arithmetic.
inline constexpr unsigned kMaxFamilyR = 30;
/// Exact-order certification ceiling without an explicit override.
inline constexpr unsigned kDefaultOrderCeiling = 10;

FamilyPrediction predict(unsigned r, FamilyVariant variant);
F2Poly build(const FamilySpec& spec);

/// Variant 1: prod_{j<r} (1 + x^((2^r-1)2^j) + x^(2^r 2^j)) + x^(4^r - 2^r).
/// Variant 2: prod_{j<r} (1 + x^(2^j 2^r) + x^(2^j (2^r+1))).
F2Poly g_product(unsigned r, FamilyVariant variant);

/// The cofactor written out as a sum:
///   variant 1:  sum_{j < 4^r-2^r} x^j  +  sum_{n=1}^{2^r-1} x^((2^r-1)n) (1+x)^(n-1)
///   variant 2:  (1 + x^(4^r)) / (1 + x)  +  sum_{i=1}^{2^r-1} x^(2^r i) (1+x)^(i-1)
/// Throws std::logic_error if two blocks of the variant-1 sum would overlap.
F2Poly h_closed_form(unsigned r, FamilyVariant variant);

/// (1 + x^a + x^b) · prod_{j<m} (1 + x^(2^j a) + x^(2^j b)) == 1 + x^(2^m a) + x^(2^m b)
bool ab_lemma_check(std::uint64_t a, std::uint64_t b, unsigned m);

/// sum_{k=0}^{2^r - 2} 2^popcount(k), computed term by term.
std::uint64_t glaisher_sum(unsigned r);
/// Odd entries in row n of Pascal's triangle: 2^popcount(n).
BigInt odd_binomial_count(std::uint64_t n);

struct FamilyVerdict {
    FamilySpec spec;
    FamilyPrediction prediction;
    bool period_divides = false;
    bool order_exact = false;
    BetaReport beta;
    bool matches_prediction = false;
    /// Only evaluated for non-reciprocal members, which have a closed form.
    std::optional<bool> closed_form_matches;
    bool robust = false;
    /// The robustness claim needs r >= 3; for r = 1, 2 it is reported only.
    bool robustness_asserted = false;
    /// gamma > 1 - (3/4)^r
    bool gamma_above_bound = false;

    /// Every asserted property holds.
    bool all_ok() const;
};

struct VerifyOptions {
    /// Allow r above kDefaultOrderCeiling (slow).
    bool beyond_ceiling = false;
};

FamilyVerdict verify_family(const FamilySpec& spec, const VerifyOptions& options = {});

} // namespace f2rep
