#include "f2rep/gf2poly.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace f2rep {

namespace {

using word_type = F2Poly::word_type;
constexpr std::size_t kWordBits = F2Poly::word_bits;

std::size_t words_for_bits(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

void trim_words(std::vector<word_type>& w) {
    while (!w.empty() && w.back() == 0) w.pop_back();
}

// dst ^= src << shift, dst already large enough.
void xor_shifted(std::vector<word_type>& dst, std::span<const word_type> src, std::size_t shift) {
    const std::size_t off = shift / kWordBits;
    const unsigned s = shift % kWordBits;
    if (s == 0) {
        for (std::size_t k = 0; k < src.size(); ++k) dst[k + off] ^= src[k];
        return;
    }
    for (std::size_t k = 0; k < src.size(); ++k) {
        dst[k + off] ^= src[k] << s;
        const word_type spill = src[k] >> (kWordBits - s);
        if (spill != 0) dst[k + off + 1] ^= spill;
    }
}

// 64x64 -> 128 carry-less product, 4-bit window.
unsigned __int128 clmul64(word_type a, word_type b) {
    unsigned __int128 table[16];
    table[0] = 0;
    table[1] = a;
    for (int k = 2; k < 16; k += 2) {
        table[k] = table[k / 2] << 1;
        table[k + 1] = table[k] ^ a;
    }
    unsigned __int128 acc = 0;
    for (int nib = 15; nib >= 0; --nib) {
        acc <<= 4;
        acc ^= table[(b >> (4 * nib)) & 0xF];
    }
    return acc;
}

std::size_t highest_bit(word_type w) { return kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(w)); }

// Spread the 32 low bits of w into the even positions of a 64-bit word.
word_type spread32(word_type w) {
    w &= 0xFFFFFFFFull;
    w = (w | (w << 16)) & 0x0000FFFF0000FFFFull;
    w = (w | (w << 8)) & 0x00FF00FF00FF00FFull;
    w = (w | (w << 4)) & 0x0F0F0F0F0F0F0F0Full;
    w = (w | (w << 2)) & 0x3333333333333333ull;
    w = (w | (w << 1)) & 0x5555555555555555ull;
    return w;
}

std::atomic<std::size_t>& bit_cap_storage() {
    static std::atomic<std::size_t> cap = [] {
        std::size_t value = std::size_t{1} << 28;
        if (const char* env = std::getenv("F2REP_BIT_CAP"); env != nullptr && *env != '\0') {
            std::size_t parsed = 0;
            const char* end = env + std::char_traits<char>::length(env);
            auto [ptr, ec] = std::from_chars(env, end, parsed);
            if (ec == std::errc{} && ptr == end && parsed > 0) value = parsed;
        }
        return value;
    }();
    return cap;
}

} // namespace

// ---------------------------------------------------------------- F2Poly

F2Poly::F2Poly(std::vector<word_type> words) : words_(std::move(words)) { trim(); }

void F2Poly::trim() noexcept { trim_words(words_); }

F2Poly F2Poly::one() { return monomial(0); }

F2Poly F2Poly::monomial(std::size_t exponent) {
    std::vector<word_type> w(exponent / kWordBits + 1, 0);
    w.back() = word_type{1} << (exponent % kWordBits);
    return F2Poly(std::move(w));
}

F2Poly F2Poly::from_exponents(std::span<const std::size_t> exponents) {
    PolyBuilder b;
    for (auto e : exponents) b.flip(e);
    return std::move(b).build();
}

F2Poly F2Poly::from_exponents(std::initializer_list<std::size_t> exponents) {
    return from_exponents(std::span<const std::size_t>(exponents.begin(), exponents.size()));
}

F2Poly F2Poly::from_words(std::vector<word_type> words) { return F2Poly(std::move(words)); }

F2Poly F2Poly::from_index(std::uint64_t n) { return F2Poly(std::vector<word_type>{n}); }

F2Poly F2Poly::from_index(const BigInt& n) {
    if (n < 0) throw ContractError("polynomial index must be non-negative");
    std::vector<word_type> w;
    BigInt rest = n;
    while (rest != 0) {
        w.push_back(static_cast<word_type>(rest & BigInt(~word_type{0})));
        rest >>= kWordBits;
    }
    return F2Poly(std::move(w));
}

std::optional<std::size_t> F2Poly::degree() const noexcept {
    if (words_.empty()) return std::nullopt;
    return (words_.size() - 1) * kWordBits + highest_bit(words_.back());
}

bool F2Poly::coeff(std::size_t i) const noexcept {
    const std::size_t k = i / kWordBits;
    return k < words_.size() && ((words_[k] >> (i % kWordBits)) & 1u) != 0;
}

std::size_t F2Poly::weight() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::vector<std::size_t> F2Poly::exponents() const {
    std::vector<std::size_t> out;
    out.reserve(weight());
    for (std::size_t k = 0; k < words_.size(); ++k) {
        for (word_type w = words_[k]; w != 0; w &= w - 1) {
            out.push_back(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        }
    }
    return out;
}

BigInt F2Poly::index() const {
    BigInt n = 0;
    for (std::size_t k = words_.size(); k-- > 0;) {
        n <<= kWordBits;
        n |= words_[k];
    }
    return n;
}

std::optional<std::uint64_t> F2Poly::index_u64() const noexcept {
    if (words_.size() > 1) return std::nullopt;
    return words_.empty() ? 0 : words_[0];
}

// ---------------------------------------------------------------- PolyBuilder

PolyBuilder::PolyBuilder(std::size_t bit_capacity) { reserve_bits(bit_capacity); }

PolyBuilder::PolyBuilder(const F2Poly& start) : words_(start.words_) {}

void PolyBuilder::reserve_bits(std::size_t bits) {
    const std::size_t need = words_for_bits(bits);
    if (words_.size() < need) words_.resize(need, 0);
}

void PolyBuilder::flip(std::size_t i) {
    reserve_bits(i + 1);
    words_[i / kWordBits] ^= word_type{1} << (i % kWordBits);
}

void PolyBuilder::set(std::size_t i) {
    reserve_bits(i + 1);
    words_[i / kWordBits] |= word_type{1} << (i % kWordBits);
}

bool PolyBuilder::test(std::size_t i) const noexcept {
    const std::size_t k = i / kWordBits;
    return k < words_.size() && ((words_[k] >> (i % kWordBits)) & 1u) != 0;
}

void PolyBuilder::add_shifted(const F2Poly& p, std::size_t shift) {
    if (p.is_zero()) return;
    reserve_bits(*p.degree() + shift + 1);
    // one extra word absorbs the spill from the top source word
    if (words_.size() < p.words_.size() + shift / kWordBits + 1) words_.resize(p.words_.size() + shift / kWordBits + 1, 0);
    xor_shifted(words_, p.words_, shift);
}

F2Poly PolyBuilder::build() && { return F2Poly(std::move(words_)); }

// ---------------------------------------------------------------- arithmetic

F2Poly operator+(const F2Poly& a, const F2Poly& b) {
    const auto& big = a.word_count() >= b.word_count() ? a : b;
    const auto& small = a.word_count() >= b.word_count() ? b : a;
    std::vector<word_type> w(big.words().begin(), big.words().end());
    for (std::size_t k = 0; k < small.word_count(); ++k) w[k] ^= small.words()[k];
    return F2Poly::from_words(std::move(w));
}

F2Poly operator*(const F2Poly& a, const F2Poly& b) { return mul(a, b); }

F2Poly mul(const F2Poly& a, const F2Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& sparse = a.weight() <= b.weight() ? a : b;
    const auto& other = a.weight() <= b.weight() ? b : a;
    const std::size_t out_words = a.word_count() + b.word_count() + 1;

    if (sparse.weight() <= 16 * sparse.word_count()) {
        std::vector<word_type> out(out_words, 0);
        for (auto e : sparse.exponents()) xor_shifted(out, other.words(), e);
        return F2Poly::from_words(std::move(out));
    }

    std::vector<word_type> out(out_words, 0);
    const auto aw = a.words();
    const auto bw = b.words();
    for (std::size_t i = 0; i < aw.size(); ++i) {
        if (aw[i] == 0) continue;
        for (std::size_t j = 0; j < bw.size(); ++j) {
            if (bw[j] == 0) continue;
            const auto prod = clmul64(aw[i], bw[j]);
            out[i + j] ^= static_cast<word_type>(prod);
            out[i + j + 1] ^= static_cast<word_type>(prod >> 64);
        }
    }
    return F2Poly::from_words(std::move(out));
}

F2Poly square(const F2Poly& p) {
    std::vector<word_type> out(2 * p.word_count(), 0);
    for (std::size_t k = 0; k < p.word_count(); ++k) {
        out[2 * k] = spread32(p.words()[k]);
        out[2 * k + 1] = spread32(p.words()[k] >> 32);
    }
    return F2Poly::from_words(std::move(out));
}

F2Poly frobenius(const F2Poly& p, unsigned m) {
    F2Poly out = p;
    for (unsigned i = 0; i < m; ++i) out = square(out);
    return out;
}

DivRem divrem(const F2Poly& a, const F2Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    const std::size_t db = *b.degree();
    if (a.is_zero() || *a.degree() < db) return {F2Poly{}, a};

    const std::size_t da = *a.degree();
    std::vector<word_type> rem(a.words().begin(), a.words().end());
    rem.push_back(0);
    std::vector<word_type> quo(words_for_bits(da - db + 1), 0);

    const auto b_exps = b.exponents();
    const bool sparse = b_exps.size() < 2 * b.word_count();

    for (std::size_t i = da + 1; i-- > db;) {
        if (((rem[i / kWordBits] >> (i % kWordBits)) & 1u) == 0) continue;
        const std::size_t shift = i - db;
        quo[shift / kWordBits] |= word_type{1} << (shift % kWordBits);
        if (sparse) {
            for (auto e : b_exps) {
                const std::size_t pos = e + shift;
                rem[pos / kWordBits] ^= word_type{1} << (pos % kWordBits);
            }
        } else {
            xor_shifted(rem, b.words(), shift);
        }
    }
    return {F2Poly::from_words(std::move(quo)), F2Poly::from_words(std::move(rem))};
}

F2Poly mod(const F2Poly& a, const F2Poly& b) { return divrem(a, b).remainder; }

F2Poly gcd(F2Poly a, F2Poly b) {
    while (!b.is_zero()) {
        F2Poly r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

F2Poly modpow_x(std::uint64_t exponent, const F2Poly& modulus) {
    if (modulus.is_zero()) throw DivisionByZero();
    if (*modulus.degree() < 1) throw ContractError("modpow_x: modulus must have degree >= 1");
    if (!modulus.constant_term()) throw NoOrder("modpow_x: modulus has constant term 0, x is not invertible");

    const std::size_t dm = *modulus.degree();
    F2Poly result = F2Poly::one();
    if (exponent == 0) return result;
    for (std::size_t bit = highest_bit(exponent) + 1; bit-- > 0;) {
        result = mod(square(result), modulus);
        if ((exponent >> bit) & 1u) {
            PolyBuilder shifted;
            shifted.add_shifted(result, 1);
            if (shifted.test(dm)) shifted.add_shifted(modulus, 0);
            result = std::move(shifted).build();
        }
    }
    return result;
}

F2Poly reciprocal(const F2Poly& f) {
    if (f.is_zero()) throw ContractError("reciprocal of the zero polynomial");
    const std::size_t d = *f.degree();
    PolyBuilder b(d + 1);
    for (auto e : f.exponents()) b.set(d - e);
    return std::move(b).build();
}

F2Poly one_plus_x_pow(std::uint64_t n) {
    F2Poly out = F2Poly::one();
    for (unsigned k = 0; k < 64; ++k) {
        if (((n >> k) & 1u) == 0) continue;
        PolyBuilder b(out);
        b.add_shifted(out, std::size_t{1} << k);
        out = std::move(b).build();
    }
    return out;
}

F2Poly binomial(std::size_t n) {
    PolyBuilder b(n + 1);
    b.flip(0);
    b.flip(n);
    return std::move(b).build();
}

std::size_t ell1(const F2Poly& f) noexcept { return f.weight(); }

std::uint64_t ell0(const F2Poly& f, std::uint64_t n) {
    if (!f.is_zero() && *f.degree() > n) {
        throw ContractError("ell0: N = " + std::to_string(n) + " is below the degree " + std::to_string(*f.degree()));
    }
    return n + 1 - f.weight();
}

// ---------------------------------------------------------------- text forms

std::string to_string(const F2Poly& p) {
    if (p.is_zero()) return "0";
    auto exps = p.exponents();
    std::string out;
    for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
        if (!out.empty()) out += " + ";
        if (*it == 0) {
            out += "1";
        } else if (*it == 1) {
            out += "x";
        } else {
            out += "x^" + std::to_string(*it);
        }
    }
    return out;
}

std::string to_hex(const F2Poly& p) {
    if (p.is_zero()) return "0x0";
    std::ostringstream os;
    os << "0x" << std::hex << p.words().back();
    for (std::size_t k = p.word_count() - 1; k-- > 0;) {
        os.width(16);
        os.fill('0');
        os << p.words()[k];
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const F2Poly& p) { return os << to_string(p); }

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::size_t parse_exponent(std::string_view digits, std::string_view term) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw ParseError("bad exponent in term '" + std::string(term) + "'");
    }
    return value;
}

F2Poly parse_hex(std::string_view hex, std::string_view text) {
    if (hex.empty()) throw ParseError("empty hex literal '" + std::string(text) + "'");
    std::vector<word_type> w(words_for_bits(4 * hex.size()), 0);
    std::size_t bit = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
        const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(*it)));
        word_type nib = 0;
        if (c >= '0' && c <= '9') {
            nib = static_cast<word_type>(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            nib = static_cast<word_type>(c - 'a' + 10);
        } else {
            throw ParseError(std::string("bad hex digit '") + *it + "' in '" + std::string(text) + "'");
        }
        w[bit / kWordBits] |= nib << (bit % kWordBits);
    }
    return F2Poly::from_words(std::move(w));
}

} // namespace

F2Poly parse_poly(std::string_view text) {
    const std::string_view s = strip(text);
    if (s.empty()) throw ParseError("empty polynomial text");

    if (s.front() == '@') {
        const auto digits = strip(s.substr(1));
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw ParseError("bad index '" + std::string(s) + "'");
        }
        return F2Poly::from_index(BigInt(std::string(digits)));
    }
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) return parse_hex(s.substr(2), s);

    PolyBuilder b;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t plus = s.find('+', start);
        const std::size_t stop = plus == std::string_view::npos ? s.size() : plus;
        std::string term;
        for (char c : s.substr(start, stop - start)) {
            if (!std::isspace(static_cast<unsigned char>(c))) term += c;
        }
        if (term.empty()) throw ParseError("empty term in '" + std::string(s) + "'");
        if (term == "1") {
            b.flip(0);
        } else if (term == "0") {
            // contributes nothing
        } else if (term == "x" || term == "X") {
            b.flip(1);
        } else if (term.size() > 2 && (term[0] == 'x' || term[0] == 'X') && term[1] == '^') {
            std::string_view digits(term);
            digits.remove_prefix(2);
            if (!digits.empty() && digits.front() == '{' && digits.back() == '}') {
                digits = digits.substr(1, digits.size() - 2);
            }
            b.flip(parse_exponent(digits, term));
        } else {
            throw ParseError("unrecognized term '" + term + "'");
        }
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    return std::move(b).build();
}

// ---------------------------------------------------------------- bit cap

std::size_t bit_cap() { return bit_cap_storage().load(); }

void set_bit_cap(std::size_t bits) { bit_cap_storage().store(bits); }

void require_bits(std::size_t bits, std::string_view what) {
    if (bits > bit_cap()) {
        throw BitCapExceeded(std::string(what) + " needs " + std::to_string(bits) + " bits, over the cap of " +
                             std::to_string(bit_cap()) + " (set F2REP_BIT_CAP to raise it)");
    }
}

} // namespace f2rep
