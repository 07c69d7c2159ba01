#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "f2rep/gf2poly.hpp"

namespace f2rep {

/// Allowed digits for representations n = sum e_i 2^i with e_i in the set.
/// Strictly increasing and always starting at 0.
class DigitSet {
  public:
    /// Sorts and validates; throws ContractError on duplicates or a missing 0.
    explicit DigitSet(std::vector<std::uint64_t> digits);

    /// Parses "{0,1,7,9}" (whitespace-insensitive, any order).
    static DigitSet parse(std::string_view text);

    const std::vector<std::uint64_t>& digits() const noexcept { return digits_; }
    std::uint64_t max_digit() const noexcept { return digits_.back(); }
    std::size_t size() const noexcept { return digits_.size(); }

    friend bool operator==(const DigitSet&, const DigitSet&) = default;

  private:
    std::vector<std::uint64_t> digits_;
};

/// Canonical "{0,1,7,9}".
std::string to_string(const DigitSet& set);

/// Residues modulo the period at which the representation count is odd.
struct ParityProfile {
    std::uint64_t period = 0;
    std::vector<std::uint64_t> odd_residues;
    bool order_exact = false;
};

/// sum_{a in A} x^a
F2Poly phi(const DigitSet& set);

/// Counts representations of n by peeling the lowest digit:
///   f(0) = 1,  f(n) = sum over a in A with a <= n, a = n (mod 2) of f((n - a) / 2).
/// Holds a memo, so one instance belongs to one thread.
class RepresentationCounter {
  public:
    explicit RepresentationCounter(DigitSet set);

    const BigInt& count(std::uint64_t n);
    const DigitSet& digit_set() const noexcept { return set_; }

  private:
    DigitSet set_;
    std::unordered_map<std::uint64_t, BigInt> memo_;
};

BigInt count_representations(const DigitSet& set, std::uint64_t n);

/// First `length` terms of f_A(n) mod 2, from the recurrence implied by
/// phi(x) · F(x) = 1: term n is the xor of the terms n - a for nonzero a in A.
std::vector<bool> parity_series(const DigitSet& set, std::size_t length);

/// Same series via polynomial division: the low `length` coefficients of 1/phi,
/// read off the quotient of x^(length - 1 + deg phi) by the reversed phi.
std::vector<bool> parity_series_by_division(const DigitSet& set, std::size_t length);

ParityProfile parity_profile(const DigitSet& set);

/// s(0) = 0, s(1) = 1, s(2n) = s(n), s(2n+1) = s(n) + s(n+1).
BigInt stern(std::uint64_t n);

/// Row k of the diatomic array: row 0 is (1, 1), each next row inserts the sum
/// of every adjacent pair. Length 2^k + 1.
std::vector<std::uint64_t> diatomic_row(unsigned k);

} // namespace f2rep
