#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "f2rep/gf2poly.hpp"

namespace f2rep {

using Rational = boost::multiprecision::cpp_rational;

/// Order and cofactor statistics of f: with f·f* = 1 + x^N, the counts of one
/// and zero coefficients of f* over its N slots, and their ratio gamma.
struct BetaReport {
    F2Poly poly;
    std::uint64_t period = 0;
    bool order_exact = false;
    std::uint64_t ell1 = 0;
    std::uint64_t ell0 = 0;
    Rational gamma;
    bool robust = false;

    std::pair<std::uint64_t, std::uint64_t> beta() const { return {ell1, ell0}; }
};

struct DivisibilityCheck {
    bool divides = false;
    bool exact = false;
};

struct GapCheck {
    std::uint64_t gap = 0;
    double bound = 0.0;
    bool ok = false;
};

/// Smallest D >= 1 with x^D = 1 mod f, found by stepping x^k one power at a time.
/// The default bound is 2^deg(f) - 1; throws BoundExceeded past scan_bound.
std::uint64_t order(const F2Poly& f, std::optional<std::uint64_t> scan_bound = std::nullopt);

/// Same as order() but returns nullopt instead of throwing when the bound is hit.
std::optional<std::uint64_t> try_order(const F2Poly& f, std::uint64_t scan_bound);

/// Whether f | 1 + x^candidate, and if so whether no maximal proper divisor
/// candidate/p also works (so candidate is the order).
DivisibilityCheck verify_order_divides(const F2Poly& f, std::uint64_t candidate);

/// Prime factors of n by trial division, ascending and without repetition.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// (1 + x^N) / f; throws NotAPeriod when f does not divide 1 + x^N.
F2Poly cofactor(const F2Poly& f, std::uint64_t period);

BetaReport beta(const F2Poly& f);
/// Statistics at a multiple N of the order; order_exact records whether N is minimal.
BetaReport beta_n(const F2Poly& f, std::uint64_t period);
/// Builds a report from a known cofactor at a period already checked to divide.
BetaReport make_report(const F2Poly& f, std::uint64_t period, bool order_exact, const F2Poly& cof);

bool is_robust(const F2Poly& f);
/// The two equivalent forms of the robustness threshold; both are evaluated.
bool robust_from_counts(std::uint64_t ell1, std::uint64_t ell0, std::uint64_t period);

/// |ell1 - ell0| against 2^(deg f / 2), compared exactly as gap^2 <= 2^deg.
GapCheck coordinate_gap_bound_check(const F2Poly& f);
GapCheck gap_check_from_report(const BetaReport& report);

} // namespace f2rep
