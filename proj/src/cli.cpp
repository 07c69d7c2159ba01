#include "f2rep/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "f2rep/families.hpp"
#include "f2rep/gf2poly.hpp"
#include "f2rep/order_beta.hpp"
#include "f2rep/representations.hpp"
#include "f2rep/search.hpp"

namespace f2rep::cli {

namespace {

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string gamma_text(const Rational& g) { return numerator(g).str() + "/" + denominator(g).str(); }

std::string beta_line(const BetaReport& b, bool label_as_order) {
    return std::string(label_as_order ? "order=" : "period=") + std::to_string(b.period) +
           " exact=" + bool_text(b.order_exact) + " beta=(" + std::to_string(b.ell1) + "," + std::to_string(b.ell0) +
           ") gamma=" + gamma_text(b.gamma) + " robust=" + bool_text(b.robust);
}

std::string verdict_line(const FamilyVerdict& v) {
    std::string line = "family=" + to_string(v.spec) + " poly=\"" + to_string(build(v.spec)) +
                       "\" period=" + std::to_string(v.prediction.period) + " divides=" + bool_text(v.period_divides) +
                       " exact=" + bool_text(v.order_exact);
    if (v.period_divides) {
        line += " beta=(" + std::to_string(v.beta.ell1) + "," + std::to_string(v.beta.ell0) + ")";
    }
    line += " predicted=(" + std::to_string(v.prediction.c) + "," + std::to_string(v.prediction.d) + ")";
    line += " closed_form=" + (v.closed_form_matches ? bool_text(*v.closed_form_matches) : std::string("n/a"));
    line += " robust=" + bool_text(v.robust) + (v.robustness_asserted ? "" : "(not asserted)");
    if (v.period_divides) line += " gamma=" + gamma_text(v.beta.gamma);
    line += " gamma_bound=" + bool_text(v.gamma_above_bound);
    line += " verdict=" + std::string(v.all_ok() ? "ok" : "FAIL");
    return line;
}

unsigned resolve_jobs(unsigned jobs) {
    if (jobs != 0) return jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

struct Options {
    std::string poly_text;
    std::uint64_t bound = 0;
    std::uint64_t period = 0;
    std::string format = "text";

    unsigned r = 3;
    int variant = 1;
    bool reciprocal = false;
    bool beyond_ceiling = false;
    unsigned r_min = 3;
    unsigned r_max = 8;

    std::string preset_name;
    std::string shape = "all";
    unsigned degree_max = 0;
    std::uint64_t index_max = 0;
    std::uint64_t order_bound = 0;
    bool robust_only = false;
    bool csv = false;
    bool json = false;
    bool quiet = false;
    unsigned jobs = 1;

    std::uint64_t figure_max = 4096;
    std::string out_path;

    std::string set_text;
    std::uint64_t n = 0;
    bool profile = false;
    std::size_t series = 0;
    unsigned row = 0;
};

int cmd_order(const Options& o, std::ostream& out) {
    const F2Poly f = parse_poly(o.poly_text);
    const auto bound = o.bound ? std::optional<std::uint64_t>(o.bound) : std::nullopt;
    const auto d = order(f, bound);
    out << "order=" << d << "\n";
    return 0;
}

int cmd_beta(const Options& o, std::ostream& out) {
    const F2Poly f = parse_poly(o.poly_text);
    if (o.period) {
        out << beta_line(beta_n(f, o.period), false) << "\n";
    } else {
        out << beta_line(beta(f), true) << "\n";
    }
    return 0;
}

int cmd_cofactor(const Options& o, std::ostream& out) {
    const F2Poly f = parse_poly(o.poly_text);
    const std::uint64_t period = o.period ? o.period : order(f);
    const F2Poly cof = cofactor(f, period);
    if (o.format == "hex") {
        out << to_hex(cof) << "\n";
    } else if (o.format == "exponents") {
        auto exps = cof.exponents();
        std::string line;
        for (auto it = exps.rbegin(); it != exps.rend(); ++it) line += (line.empty() ? "" : ",") + std::to_string(*it);
        out << line << "\n";
    } else {
        out << to_string(cof) << "\n";
    }
    return 0;
}

FamilyVariant variant_of(int v) {
    if (v == 1) return FamilyVariant::One;
    if (v == 2) return FamilyVariant::Two;
    throw ContractError("--variant must be 1 or 2");
}

int cmd_family_verify(const Options& o, std::ostream& out) {
    const FamilySpec spec{o.r, variant_of(o.variant), o.reciprocal};
    const auto v = verify_family(spec, {o.beyond_ceiling});
    out << verdict_line(v) << "\n";
    return v.all_ok() ? 0 : 1;
}

int cmd_family_range(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.r_max > kDefaultOrderCeiling && !o.beyond_ceiling) {
        throw ContractError("--r-max above " + std::to_string(kDefaultOrderCeiling) + " needs --beyond-ceiling");
    }
    if (o.r_max > kDefaultOrderCeiling) err << "warning: r above " << kDefaultOrderCeiling << " is slow\n";
    std::vector<FamilySpec> specs;
    for (unsigned r = o.r_min; r <= o.r_max; ++r) {
        for (auto variant : {FamilyVariant::One, FamilyVariant::Two}) {
            for (bool recip : {false, true}) specs.push_back({r, variant, recip});
        }
    }
    std::vector<std::optional<FamilyVerdict>> verdicts(specs.size());
    std::vector<std::exception_ptr> errors(specs.size());
    const unsigned jobs = resolve_jobs(o.jobs);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < specs.size(); i += jobs) {
                    try {
                        verdicts[i] = verify_family(specs[i], {o.beyond_ceiling});
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
    }
    bool ok = true;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        out << verdict_line(*verdicts[i]) << "\n";
        ok = ok && verdicts[i]->all_ok();
    }
    return ok ? 0 : 1;
}

ScanConfig scan_config(const Options& o) {
    ScanConfig c;
    if (!o.preset_name.empty()) {
        c = preset(o.preset_name);
    } else {
        if (o.shape == "trinomial") {
            c.shape = Shape::Trinomial;
        } else if (o.shape == "quadrinomial") {
            c.shape = Shape::Quadrinomial;
        } else if (o.shape != "all") {
            throw ContractError("unknown shape '" + o.shape + "'");
        }
        if (o.degree_max) c.degree_max = o.degree_max;
        if (o.index_max) c.index_max = o.index_max;
    }
    if (o.order_bound) c.order_bound = o.order_bound;
    c.robust_only = o.robust_only;
    c.jobs = resolve_jobs(o.jobs);
    return c;
}

ProgressFn progress_printer(std::ostream& err, bool quiet) {
    if (quiet) return {};
    return [&err, next = std::size_t{0}](std::size_t done, std::size_t total) mutable {
        const std::size_t pct = total ? done * 100 / total : 100;
        if (pct >= next || done == total) {
            err << "scanned " << done << "/" << total << "\n";
            next = pct + 10;
        }
    };
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
    const ScanConfig config = scan_config(o);
    if (!o.json) out << kCsvHeader << "\n";
    scan(
        config, [&](const ScanRecord& r) { out << (o.json ? to_json_line(r) : to_csv_row(r)) << "\n"; },
        progress_printer(err, o.quiet));
    return 0;
}

int cmd_figure(const Options& o, std::ostream& out, std::ostream& err) {
    const auto rows = figure_data(o.figure_max, resolve_jobs(o.jobs));
    std::ofstream file;
    std::ostream* sink = &out;
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file) throw ContractError("cannot open '" + o.out_path + "' for writing");
        sink = &file;
    }
    *sink << kFigureHeader << "\n";
    for (const auto& row : rows) *sink << to_csv_row(row) << "\n";
    if (!o.out_path.empty()) err << "wrote " << rows.size() << " rows to " << o.out_path << "\n";
    return 0;
}

int cmd_repr(const Options& o, std::ostream& out) {
    out << count_representations(DigitSet::parse(o.set_text), o.n) << "\n";
    return 0;
}

int cmd_parity(const Options& o, std::ostream& out) {
    const DigitSet set = DigitSet::parse(o.set_text);
    if (o.series) {
        std::string line;
        for (bool b : parity_series(set, o.series)) line += b ? '1' : '0';
        out << line << "\n";
        return 0;
    }
    const auto p = parity_profile(set);
    out << "set=" << to_string(set) << " period=" << p.period << " exact=" << bool_text(p.order_exact)
        << " odd=" << p.odd_residues.size() << " residues={";
    for (std::size_t i = 0; i < p.odd_residues.size(); ++i) out << (i ? "," : "") << p.odd_residues[i];
    out << "}\n";
    return 0;
}

int cmd_stern(const Options& o, std::ostream& out, bool by_row) {
    if (by_row) {
        const auto row = diatomic_row(o.row);
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
        out << "\n";
    } else {
        out << stern(o.n) << "\n";
    }
    return 0;
}

int cmd_gapcheck(const Options& o, std::ostream& out) {
    if (!o.poly_text.empty()) {
        const auto g = coordinate_gap_bound_check(parse_poly(o.poly_text));
        out << "gap=" << g.gap << " bound=" << g.bound << " ok=" << bool_text(g.ok) << "\n";
        return g.ok ? 0 : 1;
    }
    bool ok = true;
    out << "degree,polynomials,max_gap,witness,bound,ok\n";
    for (const auto& row : gap_census(o.degree_max ? o.degree_max : 14, resolve_jobs(o.jobs))) {
        char bound[32];
        std::snprintf(bound, sizeof bound, "%.6f", row.bound);
        out << row.degree << "," << row.polynomials << "," << row.max_gap << "," << to_string(row.witness) << ","
            << bound << "," << bool_text(row.ok) << "\n";
        ok = ok && row.ok;
    }
    return ok ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reciprocals of binary power series: order, cofactor statistics and robust polynomials", "f2rep"};
    app.require_subcommand(1);
    Options o;

    auto* order_cmd = app.add_subcommand("order", "Order of a polynomial with constant term 1");
    order_cmd->add_option("poly", o.poly_text, "Polynomial: x^9+x^7+x+1, 0x283 or @643")->required();
    order_cmd->add_option("--bound", o.bound, "Give up after this many steps");

    auto* beta_cmd = app.add_subcommand("beta", "Order, beta pair, gamma and robustness");
    beta_cmd->add_option("poly", o.poly_text, "Polynomial")->required();
    beta_cmd->add_option("--period", o.period, "Use this multiple of the order instead of the order");

    auto* cof_cmd = app.add_subcommand("cofactor", "(1 + x^N) / f");
    cof_cmd->add_option("poly", o.poly_text, "Polynomial")->required();
    cof_cmd->add_option("--period", o.period, "N (default: the order)");
    cof_cmd->add_option("--format", o.format, "text, hex or exponents")->check(CLI::IsMember({"text", "hex", "exponents"}));

    auto* family_cmd = app.add_subcommand("family", "Robust quadrinomial families");
    family_cmd->require_subcommand(1);
    auto* fam_verify = family_cmd->add_subcommand("verify", "Verify one family member");
    fam_verify->add_option("--r", o.r, "r >= 1")->required();
    fam_verify->add_option("--variant", o.variant, "1 or 2")->required();
    fam_verify->add_flag("--reciprocal", o.reciprocal, "Use the reciprocal polynomial");
    fam_verify->add_flag("--beyond-ceiling", o.beyond_ceiling, "Allow r above the default ceiling");
    auto* fam_range = family_cmd->add_subcommand("range", "Verify all four families for a range of r");
    fam_range->add_option("--r-max", o.r_max, "Largest r")->required();
    fam_range->add_option("--r-min", o.r_min, "Smallest r (default 3)");
    fam_range->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");
    fam_range->add_flag("--beyond-ceiling", o.beyond_ceiling, "Allow r above the default ceiling");

    auto* scan_cmd = app.add_subcommand("scan", "Exhaustive scan with CSV or JSON-lines output");
    auto* preset_opt = scan_cmd->add_option("--preset", o.preset_name, "trinomials19, quadrinomials18, degree14, order83")
                           ->check(CLI::IsMember(preset_names()));
    scan_cmd->add_option("--shape", o.shape, "all, trinomial or quadrinomial")->excludes(preset_opt);
    scan_cmd->add_option("--degree-max", o.degree_max, "Largest degree")->excludes(preset_opt);
    scan_cmd->add_option("--index-max", o.index_max, "Exclusive index limit")->excludes(preset_opt);
    scan_cmd->add_option("--order-bound", o.order_bound, "Cap on order scans");
    scan_cmd->add_flag("--robust-only", o.robust_only, "Only emit robust polynomials");
    auto* csv_flag = scan_cmd->add_flag("--csv", o.csv, "CSV output (default)");
    scan_cmd->add_flag("--json", o.json, "JSON-lines output")->excludes(csv_flag);
    scan_cmd->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");
    scan_cmd->add_flag("--quiet", o.quiet, "No progress on stderr");

    auto* figure_cmd = app.add_subcommand("figure", "(n, gamma(P_n)) for odd n in [5, max)");
    figure_cmd->add_option("--max", o.figure_max, "Exclusive index limit (default 4096)");
    figure_cmd->add_option("--out", o.out_path, "Write CSV here instead of stdout");
    figure_cmd->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");

    auto* repr_cmd = app.add_subcommand("repr", "Number of representations of n with digits from a set");
    repr_cmd->add_option("--set", o.set_text, "Digit set, e.g. {0,1,2}")->required();
    repr_cmd->add_option("--n", o.n, "n")->required();

    auto* parity_cmd = app.add_subcommand("parity", "Parity of the representation count");
    parity_cmd->add_option("--set", o.set_text, "Digit set, e.g. {0,1,7,9}")->required();
    auto* profile_flag = parity_cmd->add_flag("--profile", o.profile, "Period and odd residues (default)");
    parity_cmd->add_option("--series", o.series, "First N parities")->excludes(profile_flag);

    auto* stern_cmd = app.add_subcommand("stern", "Stern diatomic sequence");
    auto* stern_n = stern_cmd->add_option("--n", o.n, "s(n)");
    auto* stern_row = stern_cmd->add_option("--row", o.row, "Row k of the diatomic array");
    stern_n->excludes(stern_row);
    stern_cmd->require_option(1);

    auto* gap_cmd = app.add_subcommand("gapcheck", "|ell1 - ell0| against 2^(k/2)");
    gap_cmd->add_option("--degree-max", o.degree_max, "Census over all degrees up to this (default 14)");
    gap_cmd->add_option("--poly", o.poly_text, "Check one polynomial instead");
    gap_cmd->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (order_cmd->parsed()) return cmd_order(o, out);
        if (beta_cmd->parsed()) return cmd_beta(o, out);
        if (cof_cmd->parsed()) return cmd_cofactor(o, out);
        if (fam_verify->parsed()) return cmd_family_verify(o, out);
        if (fam_range->parsed()) return cmd_family_range(o, out, err);
        if (scan_cmd->parsed()) return cmd_scan(o, out, err);
        if (figure_cmd->parsed()) return cmd_figure(o, out, err);
        if (repr_cmd->parsed()) return cmd_repr(o, out);
        if (parity_cmd->parsed()) return cmd_parity(o, out);
        if (stern_cmd->parsed()) return cmd_stern(o, out, stern_row->count() > 0);
        if (gap_cmd->parsed()) return cmd_gapcheck(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace f2rep::cli
