#include "f2rep/families.hpp"

#include <bit>
#include <stdexcept>

namespace f2rep {

namespace {

std::uint64_t pow_u64(std::uint64_t base, unsigned e) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < e; ++i) out *= base;
    return out;
}

void require_r(unsigned r) {
    if (r < 1 || r > kMaxFamilyR) {
        throw ContractError("family parameter r must lie in [1, " + std::to_string(kMaxFamilyR) + "], got " +
                            std::to_string(r));
    }
}

F2Poly trinomial(std::size_t a, std::size_t b) {
    PolyBuilder t(b + 1);
    t.flip(0);
    t.flip(a);
    t.flip(b);
    return std::move(t).build();
}

F2Poly all_ones(std::size_t count) {
    PolyBuilder b(count);
    for (std::size_t j = 0; j < count; ++j) b.set(j);
    return std::move(b).build();
}

} // namespace

std::string to_string(const FamilySpec& spec) {
    return std::string(spec.reciprocal ? "f_(R)," : "f_") + std::to_string(spec.r) + "," +
           std::to_string(static_cast<int>(spec.variant));
}

FamilyPrediction predict(unsigned r, FamilyVariant variant) {
    require_r(r);
    const std::uint64_t four = pow_u64(4, r);
    const std::uint64_t three = pow_u64(3, r);
    const std::uint64_t two = pow_u64(2, r);
    if (variant == FamilyVariant::One) return {four - 1, four - three, three - 1};
    return {four + two + 1, four - three + two, three + 1};
}

F2Poly build(const FamilySpec& spec) {
    require_r(spec.r);
    const std::size_t p = std::size_t{1} << spec.r;
    if (spec.variant == FamilyVariant::One) {
        return spec.reciprocal ? F2Poly::from_exponents({0, 2, p, p + 1}) : F2Poly::from_exponents({0, 1, p - 1, p + 1});
    }
    return spec.reciprocal ? F2Poly::from_exponents({0, 2, p + 1, p + 2}) : F2Poly::from_exponents({0, 1, p, p + 2});
}

F2Poly g_product(unsigned r, FamilyVariant variant) {
    require_r(r);
    const std::size_t p = std::size_t{1} << r;
    require_bits(p * p + p, "g_product");
    F2Poly g = F2Poly::one();
    for (unsigned j = 0; j < r; ++j) {
        const std::size_t scale = std::size_t{1} << j;
        g = variant == FamilyVariant::One ? mul(g, trinomial((p - 1) * scale, p * scale))
                                          : mul(g, trinomial(scale * p, scale * (p + 1)));
    }
    if (variant == FamilyVariant::One) g = g + F2Poly::monomial(p * p - p);
    return g;
}

F2Poly h_closed_form(unsigned r, FamilyVariant variant) {
    require_r(r);
    const std::size_t p = std::size_t{1} << r;
    const std::size_t ones = variant == FamilyVariant::One ? p * p - p : p * p;
    require_bits(ones + p + 2, "h_closed_form");

    PolyBuilder blocks(ones + 1);
    std::size_t previous_top = 0;
    for (std::size_t n = 1; n < p; ++n) {
        const F2Poly binom = one_plus_x_pow(n - 1);
        const std::size_t shift = variant == FamilyVariant::One ? (p - 1) * n : p * n;
        if (variant == FamilyVariant::One) {
            if (n > 1 && previous_top >= shift) throw std::logic_error("h_closed_form: overlapping blocks in S_r,1");
            previous_top = shift + *binom.degree();
        }
        blocks.add_shifted(binom, shift);
    }
    PolyBuilder h(all_ones(ones));
    h.add_shifted(std::move(blocks).build(), 0);
    return std::move(h).build();
}

bool ab_lemma_check(std::uint64_t a, std::uint64_t b, unsigned m) {
    if (a == 0 || a >= b) throw ContractError("ab_lemma_check needs 0 < a < b");
    if (m < 1 || m > 40) throw ContractError("ab_lemma_check needs 1 <= m <= 40");
    require_bits(static_cast<std::size_t>(b << m) + 1, "ab_lemma_check");
    F2Poly lhs = trinomial(a, b);
    for (unsigned j = 0; j < m; ++j) lhs = mul(lhs, trinomial(a << j, b << j));
    return lhs == trinomial(a << m, b << m);
}

std::uint64_t glaisher_sum(unsigned r) {
    if (r < 2 || r > 32) throw ContractError("glaisher_sum needs 2 <= r <= 32");
    const std::uint64_t last = (std::uint64_t{1} << r) - 2;
    std::uint64_t total = 0;
    for (std::uint64_t k = 0; k <= last; ++k) total += std::uint64_t{1} << std::popcount(k);
    return total;
}

BigInt odd_binomial_count(std::uint64_t n) { return BigInt(1) << std::popcount(n); }

bool FamilyVerdict::all_ok() const {
    if (!period_divides || !matches_prediction) return false;
    if (spec.r <= kDefaultOrderCeiling && !order_exact) return false;
    if (closed_form_matches && !*closed_form_matches) return false;
    if (robustness_asserted && !(robust && gamma_above_bound)) return false;
    return true;
}

FamilyVerdict verify_family(const FamilySpec& spec, const VerifyOptions& options) {
    require_r(spec.r);
    if (spec.r > kDefaultOrderCeiling && !options.beyond_ceiling) {
        throw ContractError("r = " + std::to_string(spec.r) + " is above the verification ceiling of " +
                            std::to_string(kDefaultOrderCeiling) + "; pass the beyond-ceiling option");
    }
    FamilyVerdict v;
    v.spec = spec;
    v.prediction = predict(spec.r, spec.variant);
    require_bits(static_cast<std::size_t>(v.prediction.period) + 1, "verify_family");

    const F2Poly f = build(spec);
    const auto check = verify_order_divides(f, v.prediction.period);
    v.period_divides = check.divides;
    v.order_exact = check.exact;
    v.robustness_asserted = spec.r >= 3;
    if (!v.period_divides) return v;

    const F2Poly cof = cofactor(f, v.prediction.period);
    v.beta = make_report(f, v.prediction.period, check.exact, cof);
    v.matches_prediction = v.beta.ell1 == v.prediction.c && v.beta.ell0 == v.prediction.d;
    if (!spec.reciprocal) v.closed_form_matches = h_closed_form(spec.r, spec.variant) == cof;
    v.robust = v.beta.robust;

    // 1 - (3/4)^r = (4^r - 3^r) / 4^r
    const BigInt four = BigInt(1) << (2 * spec.r);
    const BigInt three = boost::multiprecision::pow(BigInt(3), spec.r);
    v.gamma_above_bound = v.beta.gamma > Rational(four - three, four);
    return v;
}

} // namespace f2rep
