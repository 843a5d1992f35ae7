#pragma once

#include <vector>

#include "heatconv/model.hpp"

namespace heatconv {

/// Collocation eigenvalue with grid-convergence metadata. The estimate is
/// built from two resolutions; converged is false when they disagree by
/// more than 1e-3 relative.
struct OracleResult {
    double rayleigh = 0.0;
    int grid_points = 0;
    double richardson_estimate = 0.0;
    double max_bc_violation = 0.0;
    bool converged = false;
};

/// Independent referee for the secular method: Chebyshev collocation of the
/// coupled system (D^2-a^2)^2 w = a^2 phi, (D^2-a^2) phi = -Ra (N1-Nx) w
/// with w = Dw = phi = 0 at both walls (phi = Gr theta, so Pr cancels).
OracleResult oracle_rayleigh(const FlowParams& params, int resolution = 64);

struct OracleEigenfunction {
    std::vector<double> x;
    std::vector<double> w;      ///< normalized to max|w| = 1
    std::vector<double> theta;  ///< same scale convention as w
};

OracleEigenfunction oracle_eigenfunction(const FlowParams& params, int resolution = 64);

}  // namespace heatconv
