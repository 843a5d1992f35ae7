#include "heatconv/variational.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "heatconv/numerics.hpp"

namespace heatconv {

namespace {

constexpr double kPi = std::numbers::pi;

/// delta = 1 - sigma for the beam function, in a form with no large-term
/// cancellation: (cos l - sin l - e^{-l}) / (sinh l - sin l).
double beam_delta(double lambda) {
    return (std::cos(lambda) - std::sin(lambda) - std::exp(-lambda)) /
           (std::sinh(lambda) - std::sin(lambda));
}

double beam_char(double lambda) {
    // cos(l) cosh(l) = 1, rewritten bounded.
    return std::cos(lambda) - 1.0 / std::cosh(lambda);
}

double beam_lambda(int mode) {
    const double center = (2 * mode + 1) * kPi / 2.0;
    double lo = center - 0.3, hi = center + 0.3;
    double flo = beam_char(lo);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = beam_char(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-15) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double beam_eval(double lambda, double x, int deriv) {
    const double delta = beam_delta(lambda);
    const double sigma = 1.0 - delta;
    const double ep = std::exp(lambda * x);
    const double em = std::exp(-lambda * x);
    const double c = std::cos(lambda * x);
    const double s = std::sin(lambda * x);
    double v;
    switch (deriv) {
        case 0: v = 0.5 * delta * ep + 0.5 * (1.0 + sigma) * em - c + sigma * s; break;
        case 1: v = lambda * (0.5 * delta * ep - 0.5 * (1.0 + sigma) * em + s + sigma * c); break;
        case 2:
            v = lambda * lambda * (0.5 * delta * ep + 0.5 * (1.0 + sigma) * em + c - sigma * s);
            break;
        default: throw std::domain_error("beam_eval: deriv must be 0, 1 or 2");
    }
    return v;
}

VariationalBasis make_variational_basis(int size) {
    if (size < 1) throw std::domain_error("make_variational_basis: size must be >= 1");
    VariationalBasis basis;
    basis.size = size;
    basis.lambdas.reserve(size);
    for (int m = 1; m <= size; ++m) basis.lambdas.push_back(beam_lambda(m));
    return basis;
}

double variational_ra(const FlowParams& params, const VariationalBasis& basis) {
    params.validate();
    const int k = basis.size;
    if (k < 2) throw std::domain_error("variational_ra: basis size must be >= 2");

    const QuadratureRule quad = gauss_legendre_01(128);
    const int nq = static_cast<int>(quad.nodes.size());
    const double a2 = params.a_sq;
    const double n1 = params.n1();
    const double nr = params.n_rate;

    Eigen::MatrixXd wv(k, nq), wd(k, nq), wdd(k, nq), sv(k, nq), sd(k, nq);
    for (int i = 0; i < k; ++i) {
        const double lam = basis.lambdas[i];
        for (int q = 0; q < nq; ++q) {
            const double x = quad.nodes[q];
            wv(i, q) = beam_eval(lam, x, 0);
            wd(i, q) = beam_eval(lam, x, 1);
            wdd(i, q) = beam_eval(lam, x, 2);
            sv(i, q) = std::sin((i + 1) * kPi * x);
            sd(i, q) = (i + 1) * kPi * std::cos((i + 1) * kPi * x);
        }
    }
    Eigen::VectorXd wts(nq), weighted(nq);
    for (int q = 0; q < nq; ++q) {
        wts[q] = quad.weights[q];
        weighted[q] = quad.weights[q] * (n1 - nr * quad.nodes[q]);
    }

    // Weak form: (W_i'', w'') + 2a^2 (W_i', w') + a^4 (W_i, w) = a^2 (W_i, phi)
    //            (S_j', phi') + a^2 (S_j, phi) = Ra (S_j, (N1-Nx) w)
    const Eigen::MatrixXd kw = wdd * wts.asDiagonal() * wdd.transpose()
                             + 2.0 * a2 * wd * wts.asDiagonal() * wd.transpose()
                             + a2 * a2 * wv * wts.asDiagonal() * wv.transpose();
    const Eigen::MatrixXd mws = wv * wts.asDiagonal() * sv.transpose();
    const Eigen::MatrixXd kt = sd * wts.asDiagonal() * sd.transpose()
                             + a2 * sv * wts.asDiagonal() * sv.transpose();
    const Eigen::MatrixXd cc = sv * weighted.asDiagonal() * wv.transpose();

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2 * k, 2 * k);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(2 * k, 2 * k);
    a.topLeftCorner(k, k) = kw;
    a.topRightCorner(k, k) = -a2 * mws;
    a.bottomRightCorner(k, k) = kt;
    b.bottomLeftCorner(k, k) = cc;

    const PencilEigen eig = smallest_positive_generalized(a, b);
    if (!eig.found)
        throw std::runtime_error("variational_ra: no positive real eigenvalue found");
    return eig.value;
}

double basis_gram_condition(const VariationalBasis& basis) {
    const QuadratureRule quad = gauss_legendre_01(128);
    const int k = basis.size;
    const int nq = static_cast<int>(quad.nodes.size());
    Eigen::MatrixXd wv(k, nq);
    for (int i = 0; i < k; ++i)
        for (int q = 0; q < nq; ++q) wv(i, q) = beam_eval(basis.lambdas[i], quad.nodes[q]);
    Eigen::VectorXd wts = Eigen::Map<const Eigen::VectorXd>(quad.weights.data(), nq);
    const Eigen::MatrixXd gram = wv * wts.asDiagonal() * wv.transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(gram);
    return svd.singularValues()(0) / svd.singularValues()(k - 1);
}

}  // namespace heatconv
