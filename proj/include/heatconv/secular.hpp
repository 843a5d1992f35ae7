#pragma once

#include <Eigen/Dense>
#include <vector>

#include "heatconv/model.hpp"

namespace heatconv {

/// Overlap of x*sin(k*pi*x) with sin(l*pi*x) on [0,1].
/// 1/4 on the diagonal; zero when k+l is even.
double coupling_T(int k, int l);

/// The U_kl coupling of the secular matrix: 0 on the diagonal, else
/// l[(-1)^{k+l} - 1] / (pi (l-k)(l+k)). Equals minus the L2(0,1) overlap
/// of cos(k*pi*x) with sin(l*pi*x); the sign is the one the secular
/// assembly needs against the -cos term of theta_k.
double coupling_U(int k, int l);

/// Closed form of the integral int_0^1 x^i cosh(ax) sin(l*pi*x) dx (j=1)
/// or with sinh (j=2), for i in {0,1,2}. Exact up to rounding; quadrature
/// is kept as a test oracle only.
double coupling_I(int l, int i, int j, double a);

/// Coefficients of the particular solution theta_k:
/// (A0 + A1 x + A2 x^2) cosh(ax) + (B0 + B1 x + B2 x^2) sinh(ax) plus the
/// trigonometric part, determined by the six boundary conditions.
struct ParticularCoeffs {
    double a0, a1, a2;
    double b0, b1, b2;
    int mode_k;
};

ParticularCoeffs solve_particular_coeffs(int k, double a, double n_rate);

/// Particular solution theta_k(x) of (D^2-a^2)^3 theta = (N1 - N x) sin(k*pi*x).
double theta_k_eval(double x, int k, double a, double n_rate, const ParticularCoeffs& c);

/// Truncated Galerkin system in the sine coefficients Psi_k. The neutral
/// condition is det(I/2 - a^2 Ra M) = 0 with M = bracket_matrix.
struct SecularAssembly {
    int truncation = 0;
    Eigen::MatrixXd bracket_matrix;  ///< M(k,l), 0-based storage of M_{k+1,l+1}
    FlowParams params;
};

SecularAssembly assemble_secular_matrix(const FlowParams& params, int truncation);

/// Marginal eigenvalue with its Galerkin coefficient vector.
struct ModeSolution {
    double rayleigh = 0.0;
    Eigen::VectorXd psi;  ///< normalized so the largest-magnitude entry is +1
    double a_sq = 0.0;
    double n_rate = 0.0;
    int truncation = 0;
    int complex_eigenvalues = 0;  ///< diagnostic: discarded complex modes of M
};

/// Smallest positive Ra satisfying the secular condition, via the largest
/// positive real eigenvalue mu of M and Ra = 1/(2 a^2 mu).
ModeSolution smallest_rayleigh(const SecularAssembly& assembly);

/// K=1 closed form for Ra(a). The heating-rate parameter N drops out of
/// this first approximation entirely.
double first_approximation_ra(double a);

struct EigenfunctionSamples {
    std::vector<double> x;
    std::vector<double> theta;
    std::vector<double> w;  ///< normalized to max|w| = 1
};

/// theta(x) = sum_k Psi_k theta_k(x); w recovered by solving the clamped
/// fourth-order problem (D^2-a^2)^2 w = a^2 Ra theta on the sample grid.
EigenfunctionSamples reconstruct_eigenfunctions(const ModeSolution& sol, int samples);

}  // namespace heatconv
