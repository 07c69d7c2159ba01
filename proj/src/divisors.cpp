#include "f2rep/divisors.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace f2rep {

namespace {

std::uint64_t order_of_two(std::uint64_t d) {
    if (d == 1) return 1;
    std::uint64_t k = 1;
    std::uint64_t v = 2 % d;
    while (v != 1) {
        v = (v * 2) % d;
        ++k;
    }
    return k;
}

F2Poly random_below(std::size_t degree, std::mt19937_64& rng) {
    std::vector<F2Poly::word_type> w((degree + 63) / 64, 0);
    for (auto& word : w) word = rng();
    if (degree % 64 != 0) w.back() &= (F2Poly::word_type{1} << (degree % 64)) - 1;
    return F2Poly::from_words(std::move(w));
}

void split_into(const F2Poly& h, std::size_t m, std::mt19937_64& rng, std::vector<F2Poly>& out) {
    const std::size_t dh = *h.degree();
    if (dh == m) {
        out.push_back(h);
        return;
    }
    if (dh % m != 0) throw ContractError("split_equal_degree: degree is not a multiple of the factor degree");
    for (;;) {
        // Tr(a) = a + a^2 + ... + a^(2^(m-1)) mod h
        const F2Poly a = random_below(dh, rng);
        F2Poly power = a;
        F2Poly trace = a;
        for (std::size_t i = 1; i < m; ++i) {
            power = mod(square(power), h);
            trace = trace + power;
        }
        const F2Poly g = gcd(h, trace);
        if (g.is_zero() || *g.degree() == 0 || *g.degree() == dh) continue;
        split_into(g, m, rng, out);
        split_into(divrem(h, g).quotient, m, rng, out);
        return;
    }
}

} // namespace

bool index_less(const F2Poly& a, const F2Poly& b) noexcept {
    const auto aw = a.words();
    const auto bw = b.words();
    if (aw.size() != bw.size()) return aw.size() < bw.size();
    for (std::size_t k = aw.size(); k-- > 0;) {
        if (aw[k] != bw[k]) return aw[k] < bw[k];
    }
    return false;
}

F2Poly cyclotomic_mod2(std::uint64_t d) {
    if (d == 0) throw ContractError("cyclotomic_mod2: d must be positive");
    require_bits(static_cast<std::size_t>(d) + 1, "cyclotomic_mod2");
    F2Poly out = binomial(static_cast<std::size_t>(d));
    for (std::uint64_t e = 1; e < d; ++e) {
        if (d % e == 0) out = divrem(out, cyclotomic_mod2(e)).quotient;
    }
    return out;
}

std::vector<F2Poly> split_equal_degree(const F2Poly& h, std::size_t factor_degree, std::uint64_t seed) {
    if (h.is_zero() || *h.degree() == 0) return {};
    if (factor_degree == 0) throw ContractError("split_equal_degree: factor degree must be positive");
    std::mt19937_64 rng(seed);
    std::vector<F2Poly> out;
    split_into(h, factor_degree, rng, out);
    std::sort(out.begin(), out.end(), index_less);
    return out;
}

std::vector<F2Poly> irreducible_factors_of_binomial(std::uint64_t n) {
    if (n == 0) throw ContractError("irreducible_factors_of_binomial: n must be positive");
    std::uint64_t odd = n;
    while (odd % 2 == 0) odd /= 2;
    std::vector<F2Poly> out;
    for (std::uint64_t d = 1; d <= odd; ++d) {
        if (odd % d != 0) continue;
        auto parts = split_equal_degree(cyclotomic_mod2(d), static_cast<std::size_t>(order_of_two(d)), d);
        out.insert(out.end(), parts.begin(), parts.end());
    }
    std::sort(out.begin(), out.end(), index_less);
    return out;
}

std::vector<F2Poly> polynomials_of_order_at_most(std::uint64_t max_order) {
    std::vector<F2Poly> all;
    for (std::uint64_t n = 1; n <= max_order; ++n) {
        const auto factors = irreducible_factors_of_binomial(n);
        std::uint64_t multiplicity = n;
        std::uint64_t power = 1;
        while (multiplicity % 2 == 0) {
            multiplicity /= 2;
            power *= 2;
        }
        // every product of factors[i]^k_i with 0 <= k_i <= power
        auto walk = [&](auto&& self, std::size_t i, const F2Poly& acc) -> void {
            if (i == factors.size()) {
                if (*acc.degree() >= 1) all.push_back(acc);
                return;
            }
            F2Poly cur = acc;
            for (std::uint64_t k = 0; k <= power; ++k) {
                self(self, i + 1, cur);
                if (k < power) cur = mul(cur, factors[i]);
            }
        };
        walk(walk, 0, F2Poly::one());
    }
    std::sort(all.begin(), all.end(), index_less);
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

} // namespace f2rep
