#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace heatconv {

/// Chebyshev collocation operator on [0,1]: n+1 Gauss-Lobatto nodes in
/// ascending order (clustered at both walls) and the first-derivative matrix.
struct ChebOperator {
    Eigen::VectorXd x;  ///< nodes, x[0] = 0, x[n] = 1
    Eigen::MatrixXd d;  ///< d/dx
};
ChebOperator chebyshev_operator(int n);

/// Gauss-Legendre rule with n points mapped to [0,1].
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
QuadratureRule gauss_legendre_01(int n);

/// Adaptive Simpson quadrature on [a,b] to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13);

/// Smallest positive real eigenvalue of the pencil A v = lambda B v,
/// with its eigenvector. found == false when no such eigenvalue exists.
struct PencilEigen {
    bool found = false;
    double value = 0.0;
    Eigen::VectorXd vec;
};
PencilEigen smallest_positive_generalized(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace heatconv
