// Command-line front end: single-point solves, neutral curves and surfaces,
// critical-point search, and regeneration of the reference comparison table.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "heatconv/io.hpp"
#include "heatconv/oracle.hpp"
#include "heatconv/secular.hpp"
#include "heatconv/sweep.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitSolver = 3;

struct Options {
    std::string method = "secular";
    std::string methods = "secular";
    int truncation = 8;
    int resolution = 64;
    int basis = 2;
    double n_rate = 0.0;
    double a_sq = 9.711;
    double n_min = 0.0, n_max = 16.0;
    double a_min = 1.0, a_max = 8.0;
    int samples = 64;
    int n_samples = 9, a_samples = 64;
    std::string out;
    std::string plot_out;
    std::string format = "csv";
};

heatconv::SolverSpec make_spec(const Options& opt, const std::string& name) {
    const auto method = heatconv::parse_method(name);
    if (!method) throw CLI::ValidationError("method", "unknown method '" + name + "'");
    heatconv::SolverSpec spec;
    spec.method = *method;
    spec.truncation = opt.truncation;
    spec.resolution = opt.resolution;
    spec.basis_size = opt.basis;
    return spec;
}

std::vector<heatconv::SolverSpec> parse_method_list(const Options& opt) {
    std::vector<heatconv::SolverSpec> specs;
    std::stringstream ss(opt.methods);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) specs.push_back(make_spec(opt, item));
    }
    if (specs.empty()) throw CLI::ValidationError("methods", "empty method list");
    return specs;
}

void write_records(const Options& opt, const std::vector<heatconv::ResultRecord>& records,
                   const std::string& command, const std::string& summary) {
    if (opt.out.empty()) return;
    if (opt.format == "json") {
        heatconv::atomic_write(opt.out, heatconv::to_json(records, command, summary).dump(2) + "\n");
    } else {
        heatconv::atomic_write(opt.out, heatconv::to_csv(records));
    }
}

void write_plot(const Options& opt, const std::vector<heatconv::NeutralPoint>& pts) {
    if (opt.plot_out.empty()) return;
    heatconv::atomic_write(opt.plot_out, heatconv::to_plot_data(pts));
}

int cmd_solve(const Options& opt) {
    const heatconv::SolverSpec spec = make_spec(opt, opt.method);
    const double a = std::sqrt(opt.a_sq);
    heatconv::ResultRecord rec;
    rec.n_rate = opt.n_rate;
    rec.a_sq = opt.a_sq;
    rec.method = heatconv::method_tag(spec);
    rec.order = heatconv::method_order(spec);
    rec.rayleigh = heatconv::evaluate_rayleigh(a, opt.n_rate, spec);
    rec.paper_value = heatconv::table1_paper_value(opt.n_rate, opt.a_sq, spec);
    if (rec.paper_value) rec.rel_deviation = (rec.rayleigh - *rec.paper_value) / *rec.paper_value;
    if (spec.method == heatconv::Method::FirstApprox)
        rec.note = "N not used by this method";

    std::ostringstream summary;
    summary << "solve N=" << heatconv::format_sig9(opt.n_rate)
            << " a2=" << heatconv::format_sig9(opt.a_sq) << " method=" << rec.method
            << " Ra=" << heatconv::format_sig9(rec.rayleigh);
    std::cout << summary.str() << "\n";
    write_records(opt, {rec}, "solve", summary.str());
    return 0;
}

int cmd_neutral_curve(const Options& opt) {
    const heatconv::SolverSpec spec = make_spec(opt, opt.method);
    const auto pts =
        heatconv::neutral_curve(opt.n_rate, opt.a_min, opt.a_max, opt.samples, spec);
    double ra_min = 0.0;
    for (const auto& pt : pts)
        if (pt.ok && (ra_min == 0.0 || pt.rayleigh < ra_min)) ra_min = pt.rayleigh;

    std::ostringstream summary;
    summary << "neutral-curve N=" << heatconv::format_sig9(opt.n_rate) << " a=["
            << heatconv::format_sig9(opt.a_min) << "," << heatconv::format_sig9(opt.a_max)
            << "] method=" << heatconv::method_tag(spec)
            << " min-Ra=" << heatconv::format_sig9(ra_min);
    std::cout << summary.str() << "\n";
    write_records(opt, heatconv::records_from_points(pts), "neutral-curve", summary.str());
    write_plot(opt, pts);
    return 0;
}

int cmd_neutral_surface(const Options& opt) {
    const heatconv::SolverSpec spec = make_spec(opt, opt.method);
    const auto pts = heatconv::neutral_surface(opt.n_min, opt.n_max, opt.n_samples,
                                               opt.a_min, opt.a_max, opt.a_samples, spec);
    std::ostringstream summary;
    summary << "neutral-surface N=[" << heatconv::format_sig9(opt.n_min) << ","
            << heatconv::format_sig9(opt.n_max) << "] a=[" << heatconv::format_sig9(opt.a_min)
            << "," << heatconv::format_sig9(opt.a_max)
            << "] method=" << heatconv::method_tag(spec) << " points=" << pts.size();
    std::cout << summary.str() << "\n";
    write_records(opt, heatconv::records_from_points(pts), "neutral-surface", summary.str());
    write_plot(opt, pts);
    return 0;
}

int cmd_critical(const Options& opt) {
    const heatconv::SolverSpec spec = make_spec(opt, opt.method);
    const auto cp = heatconv::critical_point(opt.n_rate, spec, opt.a_min, opt.a_max);
    heatconv::ResultRecord rec;
    rec.n_rate = cp.n_rate;
    rec.a_sq = cp.a_crit * cp.a_crit;
    rec.method = heatconv::method_tag(spec);
    rec.order = heatconv::method_order(spec);
    rec.rayleigh = cp.ra_crit;

    std::ostringstream summary;
    summary << "critical N=" << heatconv::format_sig9(opt.n_rate)
            << " method=" << rec.method << " a_c=" << heatconv::format_sig9(cp.a_crit)
            << " Ra_c=" << heatconv::format_sig9(cp.ra_crit);
    std::cout << summary.str() << "\n";
    write_records(opt, {rec}, "critical", summary.str());
    return 0;
}

int cmd_table1(const Options& opt) {
    const auto specs = parse_method_list(opt);
    const auto report = heatconv::table1_report(specs);
    const auto records = heatconv::records_from_table1(report);

    std::ostringstream summary;
    summary << "table1 methods=" << opt.methods << " rows=" << report.rows.size();
    std::cout << summary.str() << "\n";
    write_records(opt, records, "table1", summary.str());
    return 0;
}

int cmd_compare(const Options& opt) {
    const auto specs = parse_method_list(opt);
    const double a = std::sqrt(opt.a_sq);
    std::vector<heatconv::ResultRecord> records;
    for (const auto& spec : specs) {
        heatconv::ResultRecord rec;
        rec.n_rate = opt.n_rate;
        rec.a_sq = opt.a_sq;
        rec.method = heatconv::method_tag(spec);
        rec.order = heatconv::method_order(spec);
        rec.rayleigh = heatconv::evaluate_rayleigh(a, opt.n_rate, spec);
        rec.paper_value = heatconv::table1_paper_value(opt.n_rate, opt.a_sq, spec);
        if (rec.paper_value)
            rec.rel_deviation = (rec.rayleigh - *rec.paper_value) / *rec.paper_value;
        records.push_back(rec);
    }

    std::ostringstream summary;
    summary << "compare N=" << heatconv::format_sig9(opt.n_rate)
            << " a2=" << heatconv::format_sig9(opt.a_sq) << " methods=" << opt.methods;
    std::cout << summary.str() << "\n";
    for (const auto& rec : records)
        std::cout << "  " << rec.method << " Ra=" << heatconv::format_sig9(rec.rayleigh)
                  << "\n";
    write_records(opt, records, "compare", summary.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Critical Rayleigh numbers for internally heated convection "
                 "between rigid conducting walls"};
    app.require_subcommand(1);
    app.set_config("--config");

    Options opt;
    int (*handler)(const Options&) = nullptr;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--K", opt.truncation, "secular truncation")->check(CLI::PositiveNumber);
        sub->add_option("--resolution", opt.resolution, "oracle grid size")
            ->check(CLI::Range(32, 4096));
        sub->add_option("--basis", opt.basis, "variational basis size")
            ->check(CLI::Range(2, 64));
        sub->add_option("--out", opt.out, "output file path");
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* solve = app.add_subcommand("solve", "single (N, a2) eigenvalue");
    solve->add_option("--N", opt.n_rate, "heating rate parameter");
    solve->add_option("--a2", opt.a_sq, "squared wavenumber")->check(CLI::PositiveNumber);
    solve->add_option("--method", opt.method, "secular|oracle|variational|first-approx");
    add_common(solve);
    solve->callback([&] { handler = cmd_solve; });

    CLI::App* curve = app.add_subcommand("neutral-curve", "Ra(a) sweep at fixed N");
    curve->add_option("--N", opt.n_rate, "heating rate parameter");
    curve->add_option("--a-min", opt.a_min)->check(CLI::PositiveNumber);
    curve->add_option("--a-max", opt.a_max)->check(CLI::PositiveNumber);
    curve->add_option("--samples", opt.samples)->check(CLI::Range(2, 100000));
    curve->add_option("--method", opt.method);
    curve->add_option("--plot-out", opt.plot_out, "plot-ready data file");
    add_common(curve);
    curve->callback([&] { handler = cmd_neutral_curve; });

    CLI::App* surface = app.add_subcommand("neutral-surface", "Ra(a, N) tensor grid");
    surface->add_option("--N-min", opt.n_min);
    surface->add_option("--N-max", opt.n_max);
    surface->add_option("--N-samples", opt.n_samples)->check(CLI::Range(1, 10000));
    surface->add_option("--a-min", opt.a_min)->check(CLI::PositiveNumber);
    surface->add_option("--a-max", opt.a_max)->check(CLI::PositiveNumber);
    surface->add_option("--a-samples", opt.a_samples)->check(CLI::Range(1, 100000));
    surface->add_option("--method", opt.method);
    surface->add_option("--plot-out", opt.plot_out, "plot-ready data file");
    add_common(surface);
    surface->callback([&] { handler = cmd_neutral_surface; });

    CLI::App* critical = app.add_subcommand("critical", "minimize Ra over a");
    critical->add_option("--N", opt.n_rate);
    critical->add_option("--a-min", opt.a_min)->check(CLI::PositiveNumber);
    critical->add_option("--a-max", opt.a_max)->check(CLI::PositiveNumber);
    critical->add_option("--method", opt.method);
    add_common(critical);
    critical->callback([&] { handler = cmd_critical; });

    CLI::App* table1 = app.add_subcommand("table1", "reference table comparison");
    table1->add_option("--methods", opt.methods, "comma-separated method list");
    add_common(table1);
    table1->callback([&] { handler = cmd_table1; });

    CLI::App* compare = app.add_subcommand("compare", "methods side by side at one point");
    compare->add_option("--N", opt.n_rate);
    compare->add_option("--a2", opt.a_sq)->check(CLI::PositiveNumber);
    compare->add_option("--methods", opt.methods, "comma-separated method list");
    add_common(compare);
    compare->callback([&] { handler = cmd_compare; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        return handler(opt);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const heatconv::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    }
}
