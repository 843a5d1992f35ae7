#include "heatconv/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "heatconv/oracle.hpp"
#include "heatconv/secular.hpp"
#include "heatconv/variational.hpp"

namespace heatconv {

namespace {

/// Runs fn(i) for i in [0, count) on up to max_threads() workers. Results
/// land in a preallocated slot per index, so parallel and serial runs agree.
template <typename Fn>
void parallel_for(int count, Fn&& fn) {
    const int workers = std::min(count, std::max(1, max_threads()));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            for (int i = t; i < count; i += workers) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

NeutralPoint evaluate_point(double a, double n_rate, const SolverSpec& spec) {
    NeutralPoint pt;
    pt.a = a;
    pt.n_rate = n_rate;
    pt.method = method_tag(spec);
    try {
        pt.rayleigh = evaluate_rayleigh(a, n_rate, spec);
    } catch (const std::exception& e) {
        pt.ok = false;
        pt.error = e.what();
    }
    return pt;
}

}  // namespace

int max_threads() {
    if (const char* env = std::getenv("HEATCONV_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::string method_tag(const SolverSpec& spec) {
    switch (spec.method) {
        case Method::Secular: return "secular-K" + std::to_string(spec.truncation);
        case Method::Oracle: return "oracle";
        case Method::Variational: return "variational-K" + std::to_string(spec.basis_size);
        case Method::FirstApprox: return "first-approx";
    }
    return "unknown";
}

std::optional<Method> parse_method(const std::string& name) {
    if (name == "secular") return Method::Secular;
    if (name == "oracle") return Method::Oracle;
    if (name == "variational") return Method::Variational;
    if (name == "first-approx") return Method::FirstApprox;
    return std::nullopt;
}

int method_order(const SolverSpec& spec) {
    switch (spec.method) {
        case Method::Secular: return spec.truncation;
        case Method::Oracle: return spec.resolution;
        case Method::Variational: return spec.basis_size;
        case Method::FirstApprox: return 0;
    }
    return 0;
}

double evaluate_rayleigh(double a, double n_rate, const SolverSpec& spec) {
    if (!(a > 0.0)) throw std::domain_error("evaluate_rayleigh: a must be > 0");
    FlowParams params{n_rate, a * a, 1.0};
    switch (spec.method) {
        case Method::Secular:
            return smallest_rayleigh(assemble_secular_matrix(params, spec.truncation)).rayleigh;
        case Method::Oracle:
            return oracle_rayleigh(params, spec.resolution).rayleigh;
        case Method::Variational:
            return variational_ra(params, make_variational_basis(spec.basis_size));
        case Method::FirstApprox:
            return first_approximation_ra(a);
    }
    throw std::domain_error("evaluate_rayleigh: unknown method");
}

std::vector<NeutralPoint> neutral_curve(double n_rate, double a_min, double a_max,
                                        int samples, const SolverSpec& spec) {
    if (!(0.0 < a_min && a_min < a_max))
        throw std::domain_error("neutral_curve: need 0 < a_min < a_max");
    if (samples < 2) throw std::domain_error("neutral_curve: need samples >= 2");

    std::vector<NeutralPoint> pts(samples);
    const double step = (a_max - a_min) / (samples - 1);
    parallel_for(samples, [&](int i) {
        pts[i] = evaluate_point(a_min + i * step, n_rate, spec);
    });
    return pts;
}

std::vector<NeutralPoint> neutral_surface(double n_min, double n_max, int n_samples,
                                          double a_min, double a_max, int a_samples,
                                          const SolverSpec& spec) {
    if (!(0.0 < a_min && a_min <= a_max))
        throw std::domain_error("neutral_surface: need 0 < a_min <= a_max");
    if (!(n_min <= n_max)) throw std::domain_error("neutral_surface: need N_min <= N_max");
    if (n_samples < 1 || a_samples < 1)
        throw std::domain_error("neutral_surface: need at least one sample per axis");

    const double astep = a_samples > 1 ? (a_max - a_min) / (a_samples - 1) : 0.0;
    const double nstep = n_samples > 1 ? (n_max - n_min) / (n_samples - 1) : 0.0;
    std::vector<NeutralPoint> pts(static_cast<size_t>(n_samples) * a_samples);
    parallel_for(n_samples * a_samples, [&](int idx) {
        const int i = idx / a_samples;  // N outer
        const int j = idx % a_samples;
        pts[idx] = evaluate_point(a_min + j * astep, n_min + i * nstep, spec);
    });
    return pts;
}

CriticalPoint critical_point(double n_rate, const SolverSpec& spec, double a_lo,
                             double a_hi) {
    if (!(0.0 < a_lo && a_lo < a_hi))
        throw std::domain_error("critical_point: need 0 < a_lo < a_hi");

    // Coarse scan to certify an interior minimum before refining.
    const int scan_n = 33;
    std::vector<double> ra(scan_n);
    const double step = (a_hi - a_lo) / (scan_n - 1);
    parallel_for(scan_n, [&](int i) { ra[i] = evaluate_rayleigh(a_lo + i * step, n_rate, spec); });
    const auto it = std::min_element(ra.begin(), ra.end());
    const int imin = static_cast<int>(it - ra.begin());
    if (imin == 0 || imin == scan_n - 1) {
        std::ostringstream msg;
        msg << "critical_point: no interior minimum in [" << a_lo << ", " << a_hi
            << "]; scan endpoints Ra=" << ra.front() << " .. Ra=" << ra.back()
            << ", min at a=" << a_lo + imin * step;
        throw std::runtime_error(msg.str());
    }

    double lo = a_lo + (imin - 1) * step;
    double hi = a_lo + (imin + 1) * step;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    double fc = evaluate_rayleigh(c, n_rate, spec);
    double fd = evaluate_rayleigh(d, n_rate, spec);
    while (hi - lo > 1e-4) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = evaluate_rayleigh(c, n_rate, spec);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = evaluate_rayleigh(d, n_rate, spec);
        }
    }

    CriticalPoint cp;
    cp.n_rate = n_rate;
    cp.bracket = hi - lo;
    cp.a_crit = 0.5 * (lo + hi);
    cp.ra_crit = evaluate_rayleigh(cp.a_crit, n_rate, spec);
    return cp;
}

const std::vector<Table1Row>& table1_rows() {
    static const std::vector<Table1Row> rows = {
        {0, "9.711", 9.711, 1715.079324, 1715.079324, 1749.97575},
        {1, "9.711", 9.711, 1711.742588, 1704.733019, 1746.80944},
        {2, "9.711", 9.711, 1701.891001, 1695.265991, 1737.45025},
        {1, "10.0", 10.0, 1712.257687, 1705.203119, 1747.29100},
        {4, "10.0", 10.0, 1664.341789, 1659.087870, 1701.62704},
        {4, "12.0", 12.0, 1685.422373, 1680.142966, 1723.62407},
        {8, "12.0", 12.0, 1547.460446, 1546.437526, 1590.19681},
        {9, "12.0", 12.0, 1508.147637, 1508.070640, 1551.72378},
        {10, "12.0", 12.0, 1468.449223, 1469.223193, 1512.69203},
        {12, "12", 12.0, 1389.837162, 1392.166660, 1434.90396},
        {16, "12", 12.0, 1243.442054, 1247.400439, 1288.50149},
        {10, "9.0", 9.0, 1482.527042, 1482.391699, 1525.59302},
        {11, "9.0", 9.0, 1446.915467, 1447.488638, 1490.55802},
        {12, "9.00", 9.0, 1411.401914, 1412.610226, 1455.48233},
        {30, "12.00", 12.0, 879.104231, 884.196861, 917.507873},
        {50, "9.00", 9.0, 643.4478727, 647.561188, 673.848081},
    };
    return rows;
}

std::optional<double> table1_paper_value(double n_rate, double a_sq, const SolverSpec& spec) {
    for (const Table1Row& row : table1_rows()) {
        if (row.n_rate != n_rate || std::abs(row.a_sq - a_sq) > 1e-12) continue;
        if (spec.method == Method::Secular && spec.truncation == 2) return row.paper_k2;
        if (spec.method == Method::Secular && spec.truncation == 3) return row.paper_k3;
        if (spec.method == Method::Variational) return row.paper_var;
        if (spec.method == Method::FirstApprox && row.n_rate == 0.0) return row.paper_k2;
        return std::nullopt;
    }
    return std::nullopt;
}

Table1Report table1_report(const std::vector<SolverSpec>& methods) {
    Table1Report report;
    report.rows = table1_rows();
    const int nrows = static_cast<int>(report.rows.size());
    const int nmeth = static_cast<int>(methods.size());
    report.cells.assign(nrows, std::vector<Table1Cell>(nmeth));

    parallel_for(nrows * nmeth, [&](int idx) {
        const int i = idx / nmeth;
        const int j = idx % nmeth;
        const Table1Row& row = report.rows[i];
        const SolverSpec& spec = methods[j];
        Table1Cell& cell = report.cells[i][j];
        cell.method = method_tag(spec);
        cell.order = method_order(spec);
        cell.paper = table1_paper_value(row.n_rate, row.a_sq, spec);
        try {
            cell.computed = evaluate_rayleigh(std::sqrt(row.a_sq), row.n_rate, spec);
        } catch (const std::exception& e) {
            cell.ok = false;
            cell.error = e.what();
        }
    });
    return report;
}

}  // namespace heatconv
