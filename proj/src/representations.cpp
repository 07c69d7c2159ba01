#include "f2rep/representations.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "f2rep/order_beta.hpp"

namespace f2rep {

DigitSet::DigitSet(std::vector<std::uint64_t> digits) : digits_(std::move(digits)) {
    std::sort(digits_.begin(), digits_.end());
    if (std::adjacent_find(digits_.begin(), digits_.end()) != digits_.end()) {
        throw ContractError("digit set has a repeated digit");
    }
    if (digits_.empty() || digits_.front() != 0) throw ContractError("digit set must contain 0");
}

DigitSet DigitSet::parse(std::string_view text) {
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    }
    if (compact.size() < 2 || compact.front() != '{' || compact.back() != '}') {
        throw ParseError("digit set must look like {0,1,2}, got '" + std::string(text) + "'");
    }
    std::string_view body(compact);
    body = body.substr(1, body.size() - 2);
    std::vector<std::uint64_t> digits;
    while (!body.empty()) {
        const auto comma = body.find(',');
        const auto token = body.substr(0, comma);
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ParseError("bad digit '" + std::string(token) + "' in digit set");
        }
        digits.push_back(value);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
        if (body.empty()) throw ParseError("trailing comma in digit set");
    }
    return DigitSet(std::move(digits));
}

std::string to_string(const DigitSet& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(set.digits()[i]);
    }
    return out + "}";
}

F2Poly phi(const DigitSet& set) {
    require_bits(static_cast<std::size_t>(set.max_digit()) + 1, "phi");
    PolyBuilder b(static_cast<std::size_t>(set.max_digit()) + 1);
    for (auto a : set.digits()) b.set(static_cast<std::size_t>(a));
    return std::move(b).build();
}

RepresentationCounter::RepresentationCounter(DigitSet set) : set_(std::move(set)) { memo_.emplace(0, BigInt(1)); }

const BigInt& RepresentationCounter::count(std::uint64_t n) {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    BigInt total = 0;
    for (auto a : set_.digits()) {
        if (a > n) break;
        if ((n - a) % 2 == 0) total += count((n - a) / 2);
    }
    return memo_.emplace(n, std::move(total)).first->second;
}

BigInt count_representations(const DigitSet& set, std::uint64_t n) {
    RepresentationCounter counter(set);
    return counter.count(n);
}

std::vector<bool> parity_series(const DigitSet& set, std::size_t length) {
    std::vector<bool> bits(length, false);
    if (length == 0) return bits;
    bits[0] = true;
    const auto& digits = set.digits();
    for (std::size_t n = 1; n < length; ++n) {
        bool acc = false;
        for (std::size_t i = 1; i < digits.size() && digits[i] <= n; ++i) acc ^= bits[n - digits[i]];
        bits[n] = acc;
    }
    return bits;
}

std::vector<bool> parity_series_by_division(const DigitSet& set, std::size_t length) {
    std::vector<bool> bits(length, false);
    if (length == 0) return bits;
    const F2Poly p = phi(set);
    const std::size_t d = *p.degree();
    const F2Poly q = divrem(F2Poly::monomial(length - 1 + d), reciprocal(p)).quotient;
    for (std::size_t i = 0; i < length; ++i) bits[i] = q.coeff(length - 1 - i);
    return bits;
}

ParityProfile parity_profile(const DigitSet& set) {
    if (set.size() < 2) throw ContractError("parity profile needs a digit set with a nonzero digit");
    const F2Poly p = phi(set);
    ParityProfile out;
    out.period = order(p);
    out.order_exact = true;
    for (auto e : cofactor(p, out.period).exponents()) out.odd_residues.push_back(e);
    return out;
}

BigInt stern(std::uint64_t n) {
    // Walk the bits of n from the least significant end, keeping
    // s(m) = a·s(k) + b·s(k+1) for the prefix k still to be read.
    BigInt a = 1;
    BigInt b = 0;
    for (; n != 0; n >>= 1) {
        if (n & 1u) {
            b += a;
        } else {
            a += b;
        }
    }
    return b;
}

std::vector<std::uint64_t> diatomic_row(unsigned k) {
    if (k > 24) throw ContractError("diatomic_row: k above 24 needs more than 2^24 entries");
    std::vector<std::uint64_t> row{1, 1};
    for (unsigned level = 0; level < k; ++level) {
        std::vector<std::uint64_t> next;
        next.reserve(2 * row.size() - 1);
        for (std::size_t i = 0; i + 1 < row.size(); ++i) {
            next.push_back(row[i]);
            next.push_back(row[i] + row[i + 1]);
        }
        next.push_back(row.back());
        row = std::move(next);
    }
    return row;
}

} // namespace f2rep
