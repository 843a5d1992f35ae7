#include "heatconv/numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace heatconv {

ChebOperator chebyshev_operator(int n) {
    if (n < 2) throw std::domain_error("chebyshev_operator: need n >= 2");
    const double pi = std::numbers::pi;
    // Standard differentiation matrix on cos(j*pi/n), then mapped to [0,1]
    // ascending via x = (1 - xi)/2, which flips the sign and halves the span.
    Eigen::VectorXd xi(n + 1);
    for (int j = 0; j <= n; ++j) xi[j] = std::cos(pi * j / n);
    Eigen::VectorXd c = Eigen::VectorXd::Ones(n + 1);
    c[0] = 2.0;
    c[n] = 2.0;
    for (int j = 0; j <= n; ++j)
        if (j % 2 == 1) c[j] = -c[j];

    Eigen::MatrixXd d(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
        double rowsum = 0.0;
        for (int j = 0; j <= n; ++j) {
            if (i != j) {
                d(i, j) = (c[i] / c[j]) / (xi[i] - xi[j]);
                rowsum += d(i, j);
            }
        }
        d(i, i) = -rowsum;  // negative-sum trick for the diagonal
    }

    ChebOperator op;
    op.x.resize(n + 1);
    for (int j = 0; j <= n; ++j) op.x[j] = 0.5 * (1.0 - xi[j]);
    op.d = -2.0 * d;
    return op;
}

QuadratureRule gauss_legendre_01(int n) {
    if (n < 1) throw std::domain_error("gauss_legendre_01: need n >= 1");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double pi = std::numbers::pi;
    // Newton iteration on P_n with the Chebyshev-angle initial guess.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = 0.5 * (1.0 - x);
        rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
        rule.weights[i] = 0.5 * w;
        rule.weights[n - 1 - i] = 0.5 * w;
    }
    return rule;
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double b,
               double fb, double m, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

// force > 0 keeps subdividing regardless of the error estimate, so an
// oscillatory integrand that happens to vanish on the first few dyadic
// grids cannot fake convergence.
double adaptive_step(const std::function<double(double)>& f, double a, double fa, double b,
                     double fb, double m, double fm, double whole, double tol, int depth,
                     int force) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, fa, m, fm, lm, flm);
    const double right = simpson(f, m, fm, b, fb, rm, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || (force <= 0 && std::abs(delta) <= 15.0 * tol))
        return left + right + delta / 15.0;
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1, force - 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1, force - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = simpson(f, a, fa, b, fb, m, fm);
    return adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, 40, 6);
}

PencilEigen smallest_positive_generalized(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    // a is nonsingular for the pencils built here (the lambda = 0 problem has
    // only the trivial solution), so the singular pencil is folded into a
    // standard eigenvalue problem for mu = 1/lambda. The infinite eigenvalues
    // of (a, b) become harmless zeros of a^-1 b, and the QR iteration is far
    // sturdier than QZ on this structure.
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    const Eigen::MatrixXd c = lu.solve(b);
    Eigen::EigenSolver<Eigen::MatrixXd> es(c, true);
    if (es.info() != Eigen::Success) return {};

    const auto vals = es.eigenvalues();
    PencilEigen best;
    double best_mu = 0.0;
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        const std::complex<double> mu = vals[i];
        if (!std::isfinite(mu.real()) || !std::isfinite(mu.imag())) continue;
        if (std::abs(mu.imag()) > 1e-8 * std::abs(mu.real())) continue;
        if (mu.real() <= 0.0) continue;
        if (!best.found || mu.real() > best_mu) {
            best.found = true;
            best_mu = mu.real();
            best.value = 1.0 / mu.real();
            Eigen::VectorXcd col = es.eigenvectors().col(i);
            // Real eigenvalue of a real matrix: rotate the vector onto the real axis.
            Eigen::Index imax;
            col.cwiseAbs().maxCoeff(&imax);
            col /= col[imax];
            best.vec = col.real();
        }
    }
    return best;
}

}  // namespace heatconv
