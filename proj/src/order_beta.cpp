#include "f2rep/order_beta.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace f2rep {

namespace {

void require_order_input(const F2Poly& f, const char* op) {
    if (f.is_zero()) throw ContractError(std::string(op) + ": zero polynomial has no order");
    if (!f.constant_term()) throw NoOrder(std::string(op) + ": constant term is 0, order undefined");
    if (*f.degree() < 1) throw ContractError(std::string(op) + ": degree must be at least 1");
}

std::uint64_t default_bound(std::size_t degree) {
    if (degree >= 64) return std::numeric_limits<std::uint64_t>::max();
    return (std::uint64_t{1} << degree) - 1;
}

// Single-word state: x^k mod f for deg f <= 63.
std::optional<std::uint64_t> scan_small(std::uint64_t f, std::size_t degree, std::uint64_t bound) {
    const std::uint64_t top = std::uint64_t{1} << degree;
    std::uint64_t state = 1;
    for (std::uint64_t k = 1; k <= bound; ++k) {
        state <<= 1;
        if (state & top) state ^= f;
        if (state == 1) return k;
    }
    return std::nullopt;
}

std::optional<std::uint64_t> scan_wide(const F2Poly& f, std::uint64_t bound) {
    const std::size_t degree = *f.degree();
    const auto fw = f.words();
    const std::size_t n = fw.size();
    const std::size_t top_word = degree / F2Poly::word_bits;
    const auto top_mask = F2Poly::word_type{1} << (degree % F2Poly::word_bits);
    std::vector<F2Poly::word_type> state(n, 0);
    state[0] = 1;
    auto is_one = [&] {
        if (state[0] != 1) return false;
        for (std::size_t k = 1; k < n; ++k) {
            if (state[k] != 0) return false;
        }
        return true;
    };
    for (std::uint64_t k = 1; k <= bound; ++k) {
        F2Poly::word_type carry = 0;
        for (std::size_t w = 0; w < n; ++w) {
            const auto next = state[w] >> (F2Poly::word_bits - 1);
            state[w] = (state[w] << 1) | carry;
            carry = next;
        }
        if (state[top_word] & top_mask) {
            for (std::size_t w = 0; w < n; ++w) state[w] ^= fw[w];
        }
        if (is_one()) return k;
    }
    return std::nullopt;
}

} // namespace

std::optional<std::uint64_t> try_order(const F2Poly& f, std::uint64_t scan_bound) {
    require_order_input(f, "order");
    const std::size_t degree = *f.degree();
    if (degree < F2Poly::word_bits) return scan_small(f.words()[0], degree, scan_bound);
    return scan_wide(f, scan_bound);
}

std::uint64_t order(const F2Poly& f, std::optional<std::uint64_t> scan_bound) {
    require_order_input(f, "order");
    const std::uint64_t bound = scan_bound.value_or(default_bound(*f.degree()));
    if (auto d = try_order(f, bound)) return *d;
    throw BoundExceeded("order of " + to_string(f) + " exceeds scan bound " + std::to_string(bound));
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

DivisibilityCheck verify_order_divides(const F2Poly& f, std::uint64_t candidate) {
    require_order_input(f, "verify_order_divides");
    if (candidate == 0) throw ContractError("verify_order_divides: candidate must be positive");
    const F2Poly one = F2Poly::one();
    DivisibilityCheck out;
    out.divides = modpow_x(candidate, f) == one;
    if (!out.divides) return out;
    out.exact = true;
    for (auto p : prime_factors(candidate)) {
        if (modpow_x(candidate / p, f) == one) {
            out.exact = false;
            break;
        }
    }
    return out;
}

F2Poly cofactor(const F2Poly& f, std::uint64_t period) {
    if (f.is_zero()) throw DivisionByZero();
    if (!f.constant_term()) throw NoOrder("cofactor: constant term is 0");
    if (period == 0) throw ContractError("cofactor: period must be positive");
    require_bits(static_cast<std::size_t>(period) + 1, "cofactor");
    auto [q, r] = divrem(binomial(static_cast<std::size_t>(period)), f);
    if (!r.is_zero()) {
        throw NotAPeriod(to_string(f) + " does not divide 1 + x^" + std::to_string(period));
    }
    return q;
}

bool robust_from_counts(std::uint64_t ell1, std::uint64_t ell0, std::uint64_t period) {
    const bool by_pair = ell1 > ell0 + 1;
    // ell1 > (N + 1) / 2, kept in integers
    const bool by_threshold = BigInt(2) * ell1 > BigInt(period) + 1;
    if (by_pair != by_threshold) throw std::logic_error("robustness criteria disagree");
    return by_pair;
}

BetaReport make_report(const F2Poly& f, std::uint64_t period, bool order_exact, const F2Poly& cof) {
    BetaReport rep;
    rep.poly = f;
    rep.period = period;
    rep.order_exact = order_exact;
    rep.ell1 = ell1(cof);
    rep.ell0 = ell0(cof, period - 1);
    rep.gamma = Rational(BigInt(rep.ell1), BigInt(period));
    rep.robust = robust_from_counts(rep.ell1, rep.ell0, period);
    return rep;
}

BetaReport beta(const F2Poly& f) {
    const std::uint64_t d = order(f);
    return make_report(f, d, true, cofactor(f, d));
}

BetaReport beta_n(const F2Poly& f, std::uint64_t period) {
    const auto check = verify_order_divides(f, period);
    if (!check.divides) {
        throw NotAPeriod(std::to_string(period) + " is not a multiple of the order of " + to_string(f));
    }
    return make_report(f, period, check.exact, cofactor(f, period));
}

bool is_robust(const F2Poly& f) { return beta(f).robust; }

GapCheck gap_check_from_report(const BetaReport& report) {
    const std::size_t k = *report.poly.degree();
    GapCheck out;
    out.gap = report.ell1 > report.ell0 ? report.ell1 - report.ell0 : report.ell0 - report.ell1;
    out.bound = std::pow(2.0, static_cast<double>(k) / 2.0);
    out.ok = BigInt(out.gap) * out.gap <= (BigInt(1) << k);
    return out;
}

GapCheck coordinate_gap_bound_check(const F2Poly& f) { return gap_check_from_report(beta(f)); }

} // namespace f2rep
