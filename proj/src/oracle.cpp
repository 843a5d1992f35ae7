#include "heatconv/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "heatconv/numerics.hpp"

namespace heatconv {

namespace {

struct CollocationSolve {
    double rayleigh = 0.0;
    Eigen::VectorXd w;      // nodal values, length n+1
    Eigen::VectorXd phi;    // Gr * theta, length n+1
    Eigen::MatrixXd deriv;  // first-derivative matrix for BC diagnostics
    Eigen::VectorXd nodes;
};

CollocationSolve solve_at_resolution(const FlowParams& params, int n) {
    const ChebOperator cheb = chebyshev_operator(n);
    const int m = n + 1;
    const double a2 = params.a_sq;
    const double n1 = params.n1();
    const double nr = params.n_rate;

    const Eigen::MatrixXd d2 = cheb.d * cheb.d;
    const Eigen::MatrixXd lap = d2 - a2 * Eigen::MatrixXd::Identity(m, m);

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2 * m, 2 * m);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(2 * m, 2 * m);
    a.topLeftCorner(m, m) = lap * lap;
    a.topRightCorner(m, m) = -a2 * Eigen::MatrixXd::Identity(m, m);
    a.bottomRightCorner(m, m) = lap;
    for (int i = 0; i < m; ++i)
        b(m + i, i) = -(n1 - nr * cheb.x[i]);

    // Row replacement for the six boundary conditions. The Dw rows take the
    // slots adjacent to the walls, which the clustered nodes make harmless.
    auto clear_row = [&](int r) {
        a.row(r).setZero();
        b.row(r).setZero();
    };
    clear_row(0);
    a(0, 0) = 1.0;  // w(0) = 0
    clear_row(n);
    a(n, n) = 1.0;  // w(1) = 0
    clear_row(1);
    a.block(1, 0, 1, m) = cheb.d.row(0);  // Dw(0) = 0
    clear_row(n - 1);
    a.block(n - 1, 0, 1, m) = cheb.d.row(n);  // Dw(1) = 0
    clear_row(m);
    a(m, m) = 1.0;  // phi(0) = 0
    clear_row(m + n);
    a(m + n, m + n) = 1.0;  // phi(1) = 0

    const PencilEigen eig = smallest_positive_generalized(a, b);
    if (!eig.found)
        throw std::runtime_error("oracle_rayleigh: no positive real eigenvalue found");

    CollocationSolve out;
    out.rayleigh = eig.value;
    out.w = eig.vec.head(m);
    out.phi = eig.vec.tail(m);
    out.deriv = cheb.d;
    out.nodes = cheb.x;
    return out;
}

double bc_violation(const CollocationSolve& s) {
    const int n = static_cast<int>(s.w.size()) - 1;
    const double scale = std::max(s.w.cwiseAbs().maxCoeff(), s.phi.cwiseAbs().maxCoeff());
    const Eigen::VectorXd dw = s.deriv * s.w;
    double worst = std::max({std::abs(s.w[0]), std::abs(s.w[n]), std::abs(dw[0]),
                             std::abs(dw[n]), std::abs(s.phi[0]), std::abs(s.phi[n])});
    return worst / scale;
}

}  // namespace

OracleResult oracle_rayleigh(const FlowParams& params, int resolution) {
    params.validate();
    if (resolution < 32) throw std::domain_error("oracle_rayleigh: resolution must be >= 32");

    const int coarse = std::max(24, 3 * resolution / 4);
    const CollocationSolve fine = solve_at_resolution(params, resolution);
    const CollocationSolve rough = solve_at_resolution(params, coarse);

    OracleResult res;
    res.rayleigh = fine.rayleigh;
    res.grid_points = resolution + 1;
    res.richardson_estimate = fine.rayleigh + (fine.rayleigh - rough.rayleigh);
    res.max_bc_violation = bc_violation(fine);
    res.converged =
        std::abs(fine.rayleigh - rough.rayleigh) <= 1e-3 * std::abs(fine.rayleigh);
    return res;
}

OracleEigenfunction oracle_eigenfunction(const FlowParams& params, int resolution) {
    params.validate();
    if (resolution < 32)
        throw std::domain_error("oracle_eigenfunction: resolution must be >= 32");

    CollocationSolve s = solve_at_resolution(params, resolution);
    // Fix the overall sign so max|w| sits at +1.
    Eigen::Index imax;
    s.w.cwiseAbs().maxCoeff(&imax);
    const double scale = s.w[imax];
    s.w /= scale;
    s.phi /= scale;

    OracleEigenfunction out;
    const int m = static_cast<int>(s.nodes.size());
    out.x.assign(s.nodes.data(), s.nodes.data() + m);
    out.w.assign(s.w.data(), s.w.data() + m);
    out.theta.assign(s.phi.data(), s.phi.data() + m);
    return out;
}

}  // namespace heatconv
