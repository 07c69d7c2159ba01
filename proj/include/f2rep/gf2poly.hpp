#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "f2rep/errors.hpp"

namespace f2rep {

using BigInt = boost::multiprecision::cpp_int;

/// A polynomial over F2, stored as a little-endian bit vector: bit i of word k
/// is the coefficient of x^(64k + i). Words above the highest set bit are never
/// stored, so equality is plain vector equality.
class F2Poly {
  public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    F2Poly() = default;

    static F2Poly one();
    static F2Poly monomial(std::size_t exponent);
    static F2Poly from_exponents(std::span<const std::size_t> exponents);
    static F2Poly from_exponents(std::initializer_list<std::size_t> exponents);
    static F2Poly from_words(std::vector<word_type> words);

    /// P_n: the polynomial whose coefficients are the binary digits of n.
    static F2Poly from_index(std::uint64_t n);
    static F2Poly from_index(const BigInt& n);

    bool is_zero() const noexcept { return words_.empty(); }
    /// Highest exponent with a nonzero coefficient; empty for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;
    bool coeff(std::size_t i) const noexcept;
    bool constant_term() const noexcept { return coeff(0); }
    std::size_t weight() const noexcept;
    std::vector<std::size_t> exponents() const;
    std::span<const word_type> words() const noexcept { return words_; }
    std::size_t word_count() const noexcept { return words_.size(); }

    /// Inverse of from_index.
    BigInt index() const;
    std::optional<std::uint64_t> index_u64() const noexcept;

    friend bool operator==(const F2Poly&, const F2Poly&) = default;

  private:
    explicit F2Poly(std::vector<word_type> words);
    void trim() noexcept;

    std::vector<word_type> words_;

    friend class PolyBuilder;
};

/// Mutable scratch buffer for assembling a polynomial term by term.
class PolyBuilder {
  public:
    PolyBuilder() = default;
    explicit PolyBuilder(std::size_t bit_capacity);
    explicit PolyBuilder(const F2Poly& start);

    void flip(std::size_t i);
    void set(std::size_t i);
    bool test(std::size_t i) const noexcept;
    /// this += p * x^shift
    void add_shifted(const F2Poly& p, std::size_t shift);

    F2Poly build() &&;

  private:
    void reserve_bits(std::size_t bits);
    std::vector<F2Poly::word_type> words_;
};

F2Poly operator+(const F2Poly& a, const F2Poly& b);
F2Poly operator*(const F2Poly& a, const F2Poly& b);

/// Carry-less product. Uses per-term shift-xor when one factor is sparse and
/// word-by-word schoolbook otherwise, so the dense case is O(words(a)·words(b)).
F2Poly mul(const F2Poly& a, const F2Poly& b);

/// p(x)^2 = p(x^2): spreads the bits, no multiplication needed.
F2Poly square(const F2Poly& p);
/// p(x^(2^m)), equal to p^(2^m).
F2Poly frobenius(const F2Poly& p, unsigned m);

struct DivRem {
    F2Poly quotient;
    F2Poly remainder;
};

/// Euclidean division a = b·q + r with deg r < deg b. Throws DivisionByZero.
DivRem divrem(const F2Poly& a, const F2Poly& b);
F2Poly mod(const F2Poly& a, const F2Poly& b);
/// Greatest common divisor; gcd(0, 0) = 0.
F2Poly gcd(F2Poly a, F2Poly b);

/// x^exponent mod modulus by square-and-multiply. The modulus must have
/// constant term 1 and degree >= 1.
F2Poly modpow_x(std::uint64_t exponent, const F2Poly& modulus);

/// x^deg f · f(1/x). Throws ContractError on the zero polynomial.
F2Poly reciprocal(const F2Poly& f);

/// (1 + x)^n, built as the product of (1 + x^(2^k)) over the set bits k of n.
F2Poly one_plus_x_pow(std::uint64_t n);

/// 1 + x^n.
F2Poly binomial(std::size_t n);

/// Number of nonzero coefficients.
std::size_t ell1(const F2Poly& f) noexcept;
/// Number of zero coefficients of f viewed as a polynomial of degree n.
std::uint64_t ell0(const F2Poly& f, std::uint64_t n);

/// Descending-exponent text, e.g. "x^9 + x^7 + x + 1"; "0" for zero.
std::string to_string(const F2Poly& p);
/// Hex of the coefficient bitstring (the P_n index), e.g. "0x283".
std::string to_hex(const F2Poly& p);
std::ostream& operator<<(std::ostream& os, const F2Poly& p);

/// Accepts "x^9 + x^7 + x + 1", hex "0x283", or an index "@643".
F2Poly parse_poly(std::string_view text);

/// Upper bound on polynomial sizes (in bits) that bulk operations may
/// allocate. Default 2^28, overridden by the F2REP_BIT_CAP environment variable.
std::size_t bit_cap();
void set_bit_cap(std::size_t bits);
/// Throws BitCapExceeded when bits > bit_cap().
void require_bits(std::size_t bits, std::string_view what);

} // namespace f2rep
