// Acceptance gate: one pass/fail line per criterion, nonzero exit if any
// hard criterion fails. Criterion 8 is reported but does not gate.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "heatconv/numerics.hpp"
#include "heatconv/oracle.hpp"
#include "heatconv/secular.hpp"
#include "heatconv/sweep.hpp"
#include "heatconv/variational.hpp"
#include "theta_reference.hpp"

namespace fs = std::filesystem;
using namespace heatconv;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail,
            bool gating = true) {
    std::printf("[%s] criterion %d: %s%s%s%s\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
                detail.empty() ? "" : " (", detail.c_str(), detail.empty() ? "" : ")");
    if (!pass && gating) ++g_failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double secular_ra(double n, double a2, int k) {
    return smallest_rayleigh(assemble_secular_matrix({n, a2, 1.0}, k)).rayleigh;
}

// 1. Two- and three-term truncations reproduce every reference row within 1%.
void criterion1() {
    double worst = 0.0;
    bool pass = true;
    for (const auto& row : table1_rows()) {
        for (auto [k, paper] : {std::pair{2, row.paper_k2}, {3, row.paper_k3}}) {
            const double got = secular_ra(row.n_rate, row.a_sq, k);
            const double dev = std::abs(got - paper) / paper;
            worst = std::max(worst, dev);
            if (dev > 0.01) pass = false;
        }
    }
    report(1, "K=2 and K=3 match all 16 reference rows within 1%", pass,
           "worst relative deviation " + fmt(worst));
}

// 2. The closed-form first approximation at the classical wavenumber.
void criterion2() {
    const double got = first_approximation_ra(std::sqrt(9.711));
    const double dev = std::abs(got - 1715.079324) / 1715.079324;
    report(2, "closed form at a^2=9.711 equals 1715.079324 within 1e-3", dev <= 1e-3,
           "Ra=" + fmt(got) + ", deviation " + fmt(dev));
}

// 3. Independent collocation recovers the rigid-rigid benchmark minimum.
void criterion3() {
    SolverSpec spec;
    spec.method = Method::Oracle;
    spec.resolution = 64;
    const auto cp = critical_point(0.0, spec, 2.5, 4.0);
    const bool pass =
        std::abs(cp.ra_crit - 1707.762) <= 0.5 && std::abs(cp.a_crit - 3.117) <= 0.01;
    report(3, "collocation critical point at N=0 is Ra=1707.762+-0.5, a=3.117+-0.01", pass,
           "Ra_c=" + fmt(cp.ra_crit) + ", a_c=" + fmt(cp.a_crit));
}

// 4. A well-converged truncation agrees with collocation on every row.
void criterion4() {
    double worst = 0.0;
    bool pass = true;
    for (const auto& row : table1_rows()) {
        const double sec = secular_ra(row.n_rate, row.a_sq, 24);
        const double ora = oracle_rayleigh({row.n_rate, row.a_sq, 1.0}, 64).rayleigh;
        const double dev = std::abs(sec - ora) / ora;
        worst = std::max(worst, dev);
        if (dev > 0.005) pass = false;
    }
    report(4, "K=24 secular agrees with collocation within 0.5% on all rows", pass,
           "worst relative deviation " + fmt(worst));
}

// 5. Stronger heating destabilizes: Ra strictly decreases with N inside
//    every fixed-wavenumber group of the reference table.
void criterion5() {
    std::map<double, std::vector<std::pair<double, double>>> groups;
    for (const auto& row : table1_rows())
        groups[row.a_sq].push_back({row.n_rate, secular_ra(row.n_rate, row.a_sq, 8)});
    bool pass = true;
    for (auto& [a2, pts] : groups) {
        std::sort(pts.begin(), pts.end());
        for (size_t i = 1; i < pts.size(); ++i)
            if (!(pts[i].second < pts[i - 1].second)) pass = false;
    }
    report(5, "Ra strictly decreases with N within each fixed-a^2 group", pass, "");
}

// 6. The particular solutions solve the sixth-order problem: interior
//    residual below 1e-6 and all six wall conditions at the 1e-9 level.
void criterion6() {
    double worst_ode = 0.0, worst_bc = 0.0;
    for (const auto& row : table1_rows()) {
        const thetaref::real a = std::sqrt(row.a_sq);
        const thetaref::real n = row.n_rate;
        for (int k = 1; k <= 6; ++k) {
            worst_ode = std::max(worst_ode,
                                 thetaref::ode_residual(k, (double)a, (double)n));
            const auto c = thetaref::solve_coeffs(k, a, n);
            double s0 = 0.0, s1 = 0.0, s2 = 0.0;
            for (int i = 0; i <= 100; ++i) {
                const thetaref::real x = i / 100.0L;
                s0 = std::max(s0, std::abs((double)thetaref::theta(x, k, a, n, c)));
                s1 = std::max(s1, std::abs((double)thetaref::lap_theta(x, k, a, n, c)));
                s2 = std::max(s2, std::abs((double)thetaref::dlap_theta(x, k, a, n, c)));
            }
            for (thetaref::real x : {0.0L, 1.0L}) {
                worst_bc = std::max(
                    {worst_bc, std::abs((double)thetaref::theta(x, k, a, n, c)) / s0,
                     std::abs((double)thetaref::lap_theta(x, k, a, n, c)) / s1,
                     std::abs((double)thetaref::dlap_theta(x, k, a, n, c)) / s2});
            }
        }
    }
    report(6, "theta_k ODE residual <= 1e-6 and wall conditions <= 1e-9 for k<=6",
           worst_ode <= 1e-6 && worst_bc <= 1e-9,
           "worst residual " + fmt(worst_ode) + ", worst wall value " + fmt(worst_bc));
}

// 7. Closed-form coupling integrals match adaptive quadrature.
void criterion7() {
    const double pi = std::numbers::pi;
    double worst = 0.0;
    for (int k = 1; k <= 6; ++k)
        for (int l = 1; l <= 6; ++l) {
            const double qt = adaptive_simpson(
                [&](double x) { return x * std::sin(k * pi * x) * std::sin(l * pi * x); },
                0.0, 1.0);
            worst = std::max(worst, std::abs(coupling_T(k, l) - qt));
            const double qu = adaptive_simpson(
                [&](double x) { return std::cos(k * pi * x) * std::sin(l * pi * x); }, 0.0,
                1.0);
            worst = std::max(worst, std::abs(coupling_U(k, l) + qu));
        }
    for (double a : {1.0, 3.1163, 6.0})
        for (int l = 1; l <= 6; ++l)
            for (int i = 0; i <= 2; ++i) {
                const double q1 = adaptive_simpson(
                    [&](double x) {
                        return std::pow(x, i) * std::cosh(a * x) * std::sin(l * pi * x);
                    },
                    0.0, 1.0);
                const double q2 = adaptive_simpson(
                    [&](double x) {
                        return std::pow(x, i) * std::sinh(a * x) * std::sin(l * pi * x);
                    },
                    0.0, 1.0);
                worst = std::max(worst, std::abs(coupling_I(l, i, 1, a) - q1));
                worst = std::max(worst, std::abs(coupling_I(l, i, 2, a) - q2));
            }
    report(7, "coupling terms match adaptive quadrature within 1e-10", worst <= 1e-10,
           "worst absolute deviation " + fmt(worst));
}

// 8. Variational column check: soft, reported only.
void criterion8() {
    const auto basis = make_variational_basis(2);
    double worst = 0.0;
    bool within = true;
    for (const auto& row : table1_rows()) {
        const double est = variational_ra({row.n_rate, row.a_sq, 1.0}, basis);
        const double dev = std::abs(est - row.paper_var) / row.paper_var;
        worst = std::max(worst, dev);
        if (dev > 0.05) within = false;
    }
    report(8, "two-function variational estimate within 5% of the reference column (soft)",
           within, "worst relative deviation " + fmt(worst), /*gating=*/false);
}

// 9. The table command is deterministic byte for byte.
void criterion9() {
    const fs::path dir = fs::temp_directory_path() / "heatconv_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const fs::path o1 = dir / "r1.csv", o2 = dir / "r2.csv";
    auto run = [&](const fs::path& out) {
        const std::string cmd = std::string("\"") + HEATCONV_CLI_PATH +
                                "\" table1 --methods secular,variational --K 3 --out " +
                                out.string() + " > /dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        return status != -1 && WEXITSTATUS(status) == 0;
    };
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string{std::istreambuf_iterator<char>(in),
                           std::istreambuf_iterator<char>()};
    };
    bool pass = run(o1) && run(o2);
    if (pass) {
        const std::string a = slurp(o1), b = slurp(o2);
        pass = !a.empty() && a == b;
    }
    fs::remove_all(dir);
    report(9, "table command output is byte-identical across runs", pass, "");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures > 0) {
        std::printf("%d gating criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all gating criteria passed\n");
    return 0;
}
