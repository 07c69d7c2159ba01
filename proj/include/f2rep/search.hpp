#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "f2rep/gf2poly.hpp"
#include "f2rep/order_beta.hpp"

namespace f2rep {

enum class Shape { All, Trinomial, Quadrinomial };

/// What to scan. Only polynomials with constant term 1 (odd indices) are
/// ever visited; the remaining filters compose conjunctively.
struct ScanConfig {
    Shape shape = Shape::All;
    /// Largest degree to visit.
    std::optional<unsigned> degree_max;
    /// Exclusive upper limit on the P_n index.
    std::optional<std::uint64_t> index_max;
    /// Visit every polynomial of order <= this instead of enumerating indices.
    std::optional<std::uint64_t> order_max;
    /// Cap on the order scan per polynomial; records over it are "unresolved".
    std::optional<std::uint64_t> order_bound;
    bool robust_only = false;
    unsigned jobs = 1;
};

/// Named corpora: "trinomials19", "quadrinomials18", "degree14", "order83".
ScanConfig preset(std::string_view name);
std::vector<std::string> preset_names();

enum class ScanStatus { Ok, Degenerate, Unresolved };
std::string_view to_string(ScanStatus status);

struct ScanRecord {
    F2Poly poly;
    ScanStatus status = ScanStatus::Ok;
    /// Present when status is Ok.
    std::optional<BetaReport> report;
    std::optional<GapCheck> gap;

    std::size_t degree() const { return poly.degree().value_or(0); }
};

/// Full record for one polynomial with constant term 1.
ScanRecord evaluate(const F2Poly& f, std::optional<std::uint64_t> order_bound = std::nullopt);

/// Polynomials the config visits, ordered by index, before the robust filter.
std::vector<F2Poly> scan_candidates(const ScanConfig& config);

using RecordSink = std::function<void(const ScanRecord&)>;
using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

/// Evaluates every candidate and hands the records to `sink` in index order,
/// independent of config.jobs.
void scan(const ScanConfig& config, const RecordSink& sink, const ProgressFn& progress = {});
std::vector<ScanRecord> scan_all(const ScanConfig& config);

inline constexpr std::string_view kCsvHeader =
    "n,poly,degree,order,order_exact,ell1,ell0,gamma_num,gamma_den,robust,gap,bound_ok,status";
std::string to_csv_row(const ScanRecord& record);
std::string to_json_line(const ScanRecord& record);

struct FigureRow {
    std::uint64_t n = 0;
    Rational gamma;
};

/// (n, gamma(P_n)) for odd n in [5, index_max).
std::vector<FigureRow> figure_data(std::uint64_t index_max = 4096, unsigned jobs = 1);
inline constexpr std::string_view kFigureHeader = "n,gamma_num,gamma_den,gamma_decimal";
std::string to_csv_row(const FigureRow& row);

struct GapCensusRow {
    unsigned degree = 0;
    std::size_t polynomials = 0;
    std::uint64_t max_gap = 0;
    F2Poly witness;
    double bound = 0.0;
    /// Every polynomial of this degree has gap^2 <= 2^degree.
    bool ok = true;
};

/// Largest |ell1 - ell0| per degree over every polynomial with constant term 1.
std::vector<GapCensusRow> gap_census(unsigned degree_max = 14, unsigned jobs = 1);

} // namespace f2rep
