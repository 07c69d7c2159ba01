#pragma once

#include <cstdint>
#include <vector>

#include "f2rep/gf2poly.hpp"

namespace f2rep {

/// Orders polynomials by their P_n index.
bool index_less(const F2Poly& a, const F2Poly& b) noexcept;

/// The d-th cyclotomic polynomial reduced mod 2 (d odd gives a squarefree result).
F2Poly cyclotomic_mod2(std::uint64_t d);

/// Irreducible factors of a squarefree polynomial whose factors all have
/// degree `factor_degree`, split with random trace maps. Deterministic for a
/// fixed seed; output sorted by index.
std::vector<F2Poly> split_equal_degree(const F2Poly& h, std::size_t factor_degree, std::uint64_t seed = 1);

/// Distinct irreducible factors of 1 + x^n, sorted by index.
std::vector<F2Poly> irreducible_factors_of_binomial(std::uint64_t n);

/// Every polynomial with f(0) = 1, degree >= 1 and order <= max_order, i.e. every
/// nonconstant divisor of some 1 + x^D with D <= max_order. Sorted by index.
std::vector<F2Poly> polynomials_of_order_at_most(std::uint64_t max_order);

} // namespace f2rep
