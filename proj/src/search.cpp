#include "f2rep/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <thread>

#include <json.hpp>

#include "f2rep/divisors.hpp"

namespace f2rep {

namespace {

// Enumerations never go past this many index bits.
constexpr unsigned kMaxEnumeratedDegree = 40;

std::size_t popcount_of(const F2Poly& p) { return p.weight(); }

bool shape_matches(Shape shape, const F2Poly& p) {
    switch (shape) {
    case Shape::All:
        return true;
    case Shape::Trinomial:
        return popcount_of(p) == 3;
    case Shape::Quadrinomial:
        return popcount_of(p) == 4;
    }
    return false;
}

unsigned effective_degree_max(const ScanConfig& config) {
    unsigned degree = kMaxEnumeratedDegree;
    if (config.degree_max) degree = std::min(degree, *config.degree_max);
    if (config.index_max) {
        if (*config.index_max <= 1) return 0;
        const unsigned from_index = 63 - static_cast<unsigned>(std::countl_zero(*config.index_max - 1));
        degree = std::min(degree, from_index);
    }
    return degree;
}

bool passes_filters(const ScanConfig& config, const F2Poly& p) {
    if (!p.constant_term() || !shape_matches(config.shape, p)) return false;
    if (config.degree_max && p.degree().value_or(0) > *config.degree_max) return false;
    if (config.index_max) {
        const auto idx = p.index_u64();
        if (!idx || *idx >= *config.index_max) return false;
    }
    return true;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

} // namespace

ScanConfig preset(std::string_view name) {
    ScanConfig c;
    if (name == "trinomials19") {
        c.shape = Shape::Trinomial;
        c.degree_max = 19;
    } else if (name == "quadrinomials18") {
        c.shape = Shape::Quadrinomial;
        c.degree_max = 18;
    } else if (name == "degree14") {
        c.degree_max = 14;
    } else if (name == "order83") {
        c.order_max = 83;
    } else {
        throw ContractError("unknown scan preset '" + std::string(name) + "'");
    }
    return c;
}

std::vector<std::string> preset_names() { return {"trinomials19", "quadrinomials18", "degree14", "order83"}; }

std::string_view to_string(ScanStatus status) {
    switch (status) {
    case ScanStatus::Ok:
        return "ok";
    case ScanStatus::Degenerate:
        return "degenerate";
    case ScanStatus::Unresolved:
        return "unresolved";
    }
    return "?";
}

ScanRecord evaluate(const F2Poly& f, std::optional<std::uint64_t> order_bound) {
    if (f.is_zero() || !f.constant_term()) throw NoOrder("scan: polynomial needs constant term 1");
    ScanRecord rec;
    rec.poly = f;
    const std::size_t degree = *f.degree();
    if (degree == 0) {
        rec.status = ScanStatus::Degenerate;
        return rec;
    }
    std::uint64_t bound = degree >= 64 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << degree) - 1;
    if (order_bound) bound = std::min(bound, *order_bound);
    const auto d = try_order(f, bound);
    if (!d) {
        rec.status = ScanStatus::Unresolved;
        return rec;
    }
    rec.report = make_report(f, *d, true, cofactor(f, *d));
    rec.gap = gap_check_from_report(*rec.report);
    return rec;
}

std::vector<F2Poly> scan_candidates(const ScanConfig& config) {
    std::vector<F2Poly> out;
    if (config.order_max) {
        for (auto& p : polynomials_of_order_at_most(*config.order_max)) {
            if (passes_filters(config, p)) out.push_back(std::move(p));
        }
        return out;
    }
    if (!config.degree_max && !config.index_max) {
        throw ContractError("scan needs a degree limit, an index limit or an order limit");
    }
    const unsigned dmax = effective_degree_max(config);
    if (config.degree_max && *config.degree_max > kMaxEnumeratedDegree) {
        throw ContractError("scan degree limit above " + std::to_string(kMaxEnumeratedDegree));
    }
    auto push = [&](F2Poly p) {
        if (passes_filters(config, p)) out.push_back(std::move(p));
    };
    switch (config.shape) {
    case Shape::All: {
        const std::uint64_t limit = std::uint64_t{1} << (dmax + 1);
        for (std::uint64_t n = 1; n < limit; n += 2) push(F2Poly::from_index(n));
        break;
    }
    case Shape::Trinomial:
        for (std::size_t b = 2; b <= dmax; ++b) {
            for (std::size_t a = 1; a < b; ++a) push(F2Poly::from_exponents({0, a, b}));
        }
        break;
    case Shape::Quadrinomial:
        for (std::size_t c = 3; c <= dmax; ++c) {
            for (std::size_t b = 2; b < c; ++b) {
                for (std::size_t a = 1; a < b; ++a) push(F2Poly::from_exponents({0, a, b, c}));
            }
        }
        break;
    }
    return out;
}

void scan(const ScanConfig& config, const RecordSink& sink, const ProgressFn& progress) {
    const auto candidates = scan_candidates(config);
    const unsigned jobs = std::max(1u, config.jobs);
    const std::size_t batch = std::max<std::size_t>(256, 64 * static_cast<std::size_t>(jobs));

    std::vector<ScanRecord> results;
    for (std::size_t start = 0; start < candidates.size(); start += batch) {
        const std::size_t count = std::min(batch, candidates.size() - start);
        results.assign(count, ScanRecord{});
        auto work = [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) results[i] = evaluate(candidates[start + i], config.order_bound);
        };
        if (jobs == 1) {
            work(0, count);
        } else {
            const std::size_t block = (count + jobs - 1) / jobs;
            std::vector<std::exception_ptr> errors(jobs);
            {
                std::vector<std::jthread> pool;
                for (std::size_t lo = 0, t = 0; lo < count; lo += block, ++t) {
                    pool.emplace_back([&, lo, t] {
                        try {
                            work(lo, std::min(count, lo + block));
                        } catch (...) {
                            errors[t] = std::current_exception();
                        }
                    });
                }
            }
            for (auto& e : errors) {
                if (e) std::rethrow_exception(e);
            }
        }
        for (const auto& rec : results) {
            if (config.robust_only) {
                if (rec.status == ScanStatus::Degenerate) continue;
                if (rec.status == ScanStatus::Ok && !rec.report->robust) continue;
            }
            sink(rec);
        }
        if (progress) progress(start + count, candidates.size());
    }
}

std::vector<ScanRecord> scan_all(const ScanConfig& config) {
    std::vector<ScanRecord> out;
    scan(config, [&](const ScanRecord& r) { out.push_back(r); });
    return out;
}

std::string to_csv_row(const ScanRecord& r) {
    std::string row = r.poly.index().str() + "," + to_string(r.poly) + "," + std::to_string(r.degree()) + ",";
    if (r.status == ScanStatus::Ok) {
        const auto& b = *r.report;
        row += std::to_string(b.period) + "," + bool_text(b.order_exact) + "," + std::to_string(b.ell1) + "," +
               std::to_string(b.ell0) + "," + numerator(b.gamma).str() + "," + denominator(b.gamma).str() + "," +
               bool_text(b.robust) + "," + std::to_string(r.gap->gap) + "," + bool_text(r.gap->ok) + ",";
    } else {
        row += ",,,,,,,,,";
    }
    return row + std::string(to_string(r.status));
}

std::string to_json_line(const ScanRecord& r) {
    nlohmann::ordered_json j;
    // scans stop at degree 40, so the index fits in 64 bits
    j["n"] = r.poly.index_u64().value();
    j["poly"] = to_string(r.poly);
    j["degree"] = r.degree();
    if (r.status == ScanStatus::Ok) {
        const auto& b = *r.report;
        j["order"] = b.period;
        j["order_exact"] = b.order_exact;
        j["ell1"] = b.ell1;
        j["ell0"] = b.ell0;
        // gamma's denominator divides the period, so both parts fit in 64 bits
        j["gamma_num"] = numerator(b.gamma).convert_to<std::uint64_t>();
        j["gamma_den"] = denominator(b.gamma).convert_to<std::uint64_t>();
        j["robust"] = b.robust;
        j["gap"] = r.gap->gap;
        j["bound_ok"] = r.gap->ok;
    } else {
        for (const char* key : {"order", "order_exact", "ell1", "ell0", "gamma_num", "gamma_den", "robust", "gap", "bound_ok"}) {
            j[key] = nullptr;
        }
    }
    j["status"] = std::string(to_string(r.status));
    return j.dump();
}

std::vector<FigureRow> figure_data(std::uint64_t index_max, unsigned jobs) {
    if (index_max < 5) throw ContractError("figure_data needs index_max >= 5");
    ScanConfig config;
    config.index_max = index_max;
    config.jobs = jobs;
    std::vector<FigureRow> rows;
    scan(config, [&](const ScanRecord& r) {
        const std::uint64_t n = *r.poly.index_u64();
        if (n < 5) return;
        if (r.status != ScanStatus::Ok) throw std::logic_error("figure_data: unresolved order for P_" + std::to_string(n));
        rows.push_back({n, r.report->gamma});
    });
    return rows;
}

std::string to_csv_row(const FigureRow& row) {
    char decimal[64];
    std::snprintf(decimal, sizeof decimal, "%.12f", row.gamma.convert_to<double>());
    return std::to_string(row.n) + "," + numerator(row.gamma).str() + "," + denominator(row.gamma).str() + "," + decimal;
}

std::vector<GapCensusRow> gap_census(unsigned degree_max, unsigned jobs) {
    if (degree_max < 1) throw ContractError("gap_census needs degree_max >= 1");
    ScanConfig config;
    config.degree_max = degree_max;
    config.jobs = jobs;
    std::vector<GapCensusRow> rows(degree_max);
    for (unsigned k = 1; k <= degree_max; ++k) {
        rows[k - 1].degree = k;
        rows[k - 1].bound = std::pow(2.0, k / 2.0);
    }
    scan(config, [&](const ScanRecord& r) {
        if (r.status != ScanStatus::Ok) return;
        auto& row = rows[r.degree() - 1];
        ++row.polynomials;
        if (row.polynomials == 1 || r.gap->gap > row.max_gap) {
            row.max_gap = r.gap->gap;
            row.witness = r.poly;
        }
        row.ok = row.ok && r.gap->ok;
    });
    return rows;
}

} // namespace f2rep
