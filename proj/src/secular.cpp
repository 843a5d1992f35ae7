#include "heatconv/secular.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace heatconv {

namespace {

constexpr double kPi = std::numbers::pi;

void check_mode_indices(int k, int l) {
    if (k < 1 || l < 1) throw std::domain_error("coupling: mode indices must be >= 1");
}

int parity_sign(int k) { return (k % 2 == 0) ? 1 : -1; }  // (-1)^k

/// int_0^1 x^i e^{z x} dx for i in {0,1,2}.
std::complex<double> poly_exp_moment(int i, std::complex<double> z) {
    const std::complex<double> ez = std::exp(z);
    switch (i) {
        case 0: return (ez - 1.0) / z;
        case 1: return (ez * (z - 1.0) + 1.0) / (z * z);
        default: return (ez * (z * z - 2.0 * z + 2.0) - 2.0) / (z * z * z);
    }
}

/// int_0^1 x^i e^{s x} sin(l*pi*x) dx = Im int_0^1 x^i e^{(s + i l pi) x} dx.
double poly_exp_sine_moment(int i, double s, int l) {
    return poly_exp_moment(i, std::complex<double>(s, l * kPi)).imag();
}

}  // namespace

double coupling_T(int k, int l) {
    check_mode_indices(k, l);
    if (k == l) return 0.25;
    if ((k + l) % 2 == 0) return 0.0;
    const double dm = static_cast<double>(l - k);
    const double dp = static_cast<double>(l + k);
    return 2.0 * k * l * (-2.0) / (kPi * kPi * dm * dm * dp * dp);
}

double coupling_U(int k, int l) {
    check_mode_indices(k, l);
    if (k == l) return 0.0;
    if ((k + l) % 2 == 0) return 0.0;
    return l * (-2.0) / (kPi * (l - k) * (l + k));
}

double coupling_I(int l, int i, int j, double a) {
    if (l < 1) throw std::domain_error("coupling_I: l must be >= 1");
    if (i < 0 || i > 2) throw std::domain_error("coupling_I: i must be 0, 1 or 2");
    if (j != 1 && j != 2) throw std::domain_error("coupling_I: j must be 1 or 2");
    if (!(a > 0.0)) throw std::domain_error("coupling_I: a must be > 0");
    const double plus = poly_exp_sine_moment(i, a, l);
    const double minus = poly_exp_sine_moment(i, -a, l);
    return (j == 1) ? 0.5 * (plus + minus) : 0.5 * (plus - minus);
}

ParticularCoeffs solve_particular_coeffs(int k, double a, double n_rate) {
    if (k < 1) throw std::domain_error("solve_particular_coeffs: k must be >= 1");
    if (!(a > 0.0)) throw std::domain_error("solve_particular_coeffs: a must be > 0");

    const double n1 = 1.0 + 0.5 * n_rate;
    const double csq = k * k * kPi * kPi + a * a;
    const double ch = std::cosh(a);
    const double sh = std::sinh(a);
    const double sgn = parity_sign(k);

    // Unknowns ordered A0 A1 A2 B0 B1 B2. Rows are the six boundary
    // conditions on theta_k: value, (D^2-a^2), D(D^2-a^2) at x = 0 and 1.
    Eigen::Matrix<double, 6, 6> m = Eigen::Matrix<double, 6, 6>::Zero();
    Eigen::Matrix<double, 6, 1> r;

    m(0, 0) = 1.0;
    r(0) = 6.0 * k * kPi * n_rate / csq;

    m(1, 0) = ch; m(1, 1) = ch; m(1, 2) = ch;
    m(1, 3) = sh; m(1, 4) = sh; m(1, 5) = sh;
    r(1) = 6.0 * k * kPi * n_rate / csq * sgn;

    m(2, 2) = 1.0;
    m(2, 4) = a;
    r(2) = -2.0 * k * kPi * n_rate;

    m(3, 1) = a * sh;
    m(3, 2) = ch + 2.0 * a * sh;
    m(3, 4) = a * ch;
    m(3, 5) = sh + 2.0 * a * ch;
    r(3) = -2.0 * k * kPi * n_rate * sgn;

    m(4, 1) = a * a;
    m(4, 5) = 3.0 * a;
    r(4) = 0.5 * n1 * k * kPi * csq;

    m(5, 1) = a * a * ch;
    m(5, 2) = 2.0 * a * a * ch + 3.0 * a * sh;
    m(5, 4) = a * a * sh;
    m(5, 5) = 3.0 * a * ch + 2.0 * a * a * sh;
    r(5) = 0.5 * (n1 - n_rate) * k * kPi * sgn * csq;

    Eigen::Matrix<double, 6, 1> sol = m.partialPivLu().solve(r);
    const double rhs_norm = std::max(r.norm(), 1.0);
    if ((m * sol - r).norm() > 1e-10 * rhs_norm)
        throw std::runtime_error("solve_particular_coeffs: boundary system is singular");

    return ParticularCoeffs{sol(0), sol(1), sol(2), sol(3), sol(4), sol(5), k};
}

double theta_k_eval(double x, int k, double a, double n_rate, const ParticularCoeffs& c) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("theta_k_eval: x outside [0,1]");
    const double n1 = 1.0 + 0.5 * n_rate;
    const double csq = k * k * kPi * kPi + a * a;
    const double poly_c = c.a0 + c.a1 * x + c.a2 * x * x;
    const double poly_s = c.b0 + c.b1 * x + c.b2 * x * x;
    const double bracket = poly_c * std::cosh(a * x) + poly_s * std::sinh(a * x)
                         + (n1 - n_rate * x) * std::sin(k * kPi * x)
                         - 6.0 * k * kPi * n_rate / csq * std::cos(k * kPi * x);
    return -bracket / (csq * csq * csq);
}

SecularAssembly assemble_secular_matrix(const FlowParams& params, int truncation) {
    params.validate();
    if (truncation < 1) throw std::domain_error("assemble_secular_matrix: K must be >= 1");

    const double a = params.a();
    const double n = params.n_rate;
    const double n1 = params.n1();

    SecularAssembly out;
    out.truncation = truncation;
    out.params = params;
    out.bracket_matrix.resize(truncation, truncation);

    for (int k = 1; k <= truncation; ++k) {
        const ParticularCoeffs c = solve_particular_coeffs(k, a, n);
        const double csq = k * k * kPi * kPi + params.a_sq;
        const double cube = csq * csq * csq;
        for (int l = 1; l <= truncation; ++l) {
            double v = c.a0 * coupling_I(l, 0, 1, a) + c.a1 * coupling_I(l, 1, 1, a)
                     + c.a2 * coupling_I(l, 2, 1, a) + c.b0 * coupling_I(l, 0, 2, a)
                     + c.b1 * coupling_I(l, 1, 2, a) + c.b2 * coupling_I(l, 2, 2, a)
                     + (k == l ? 0.5 * n1 : 0.0) - n * coupling_T(k, l)
                     + 6.0 * k * kPi * n / csq * coupling_U(k, l);
            out.bracket_matrix(k - 1, l - 1) = v / cube;
        }
    }
    return out;
}

ModeSolution smallest_rayleigh(const SecularAssembly& assembly) {
    if (assembly.truncation < 1 || assembly.bracket_matrix.rows() != assembly.truncation)
        throw std::domain_error("smallest_rayleigh: assembly not filled");

    // Psi solves (1/2) Psi_l = a^2 Ra sum_k M_kl Psi_k, i.e. Psi is an
    // eigenvector of M^T with eigenvalue mu = 1/(2 a^2 Ra).
    Eigen::EigenSolver<Eigen::MatrixXd> es(assembly.bracket_matrix.transpose());

    int complex_count = 0;
    int best = -1;
    double mu_max = 0.0;
    for (int i = 0; i < assembly.truncation; ++i) {
        const std::complex<double> lam = es.eigenvalues()[i];
        if (std::abs(lam.imag()) > 1e-10 * std::max(1.0, std::abs(lam.real()))) {
            ++complex_count;
            continue;
        }
        if (lam.real() > mu_max) {
            mu_max = lam.real();
            best = i;
        }
    }
    if (best < 0)
        throw std::runtime_error("smallest_rayleigh: no neutral threshold at this (a, N): "
                                 "M has no positive real eigenvalue");

    ModeSolution sol;
    sol.a_sq = assembly.params.a_sq;
    sol.n_rate = assembly.params.n_rate;
    sol.truncation = assembly.truncation;
    sol.complex_eigenvalues = complex_count;
    sol.rayleigh = 1.0 / (2.0 * assembly.params.a_sq * mu_max);

    Eigen::VectorXcd vec = es.eigenvectors().col(best);
    Eigen::Index imax;
    vec.cwiseAbs().maxCoeff(&imax);
    vec /= vec[imax];
    sol.psi = vec.real();
    return sol;
}

double first_approximation_ra(double a) {
    if (!(a > 0.0)) throw std::domain_error("first_approximation_ra: a must be > 0");
    const double p2 = kPi * kPi;
    const double s = a * a + p2;
    const double sh = std::sinh(a);
    const double num = s * s * s * s * s * (a + sh);
    const double den = a * a * ((sh + a) * s * s - 8.0 * a * p2 * (1.0 + std::cosh(a)));
    if (!(den > 0.0))
        throw std::domain_error("first_approximation_ra: nonpositive denominator");
    return num / den;
}

EigenfunctionSamples reconstruct_eigenfunctions(const ModeSolution& sol, int samples) {
    if (samples < 8) throw std::domain_error("reconstruct_eigenfunctions: need >= 8 samples");
    const int n = samples;
    const double h = 1.0 / (n - 1);
    const double a = std::sqrt(sol.a_sq);

    EigenfunctionSamples out;
    out.x.resize(n);
    out.theta.assign(n, 0.0);
    for (int i = 0; i < n; ++i) out.x[i] = i * h;

    for (int k = 1; k <= sol.truncation; ++k) {
        const ParticularCoeffs c = solve_particular_coeffs(k, a, sol.n_rate);
        const double psi_k = sol.psi[k - 1];
        for (int i = 0; i < n; ++i)
            out.theta[i] += psi_k * theta_k_eval(out.x[i], k, a, sol.n_rate, c);
    }

    // (D^2 - a^2)^2 w = a^2 Ra theta with w = Dw = 0 at both walls, second-order
    // finite differences. The division-free route stays regular when the
    // coupling weight (N1 - N x) changes sign inside the layer.
    Eigen::MatrixXd op = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    const double h2 = h * h, h4 = h2 * h2;
    const double a2 = sol.a_sq, a4 = a2 * a2;
    for (int i = 2; i < n - 2; ++i) {
        op(i, i - 2) += 1.0 / h4;
        op(i, i - 1) += -4.0 / h4 - 2.0 * a2 / h2;
        op(i, i) += 6.0 / h4 + 4.0 * a2 / h2 + a4;
        op(i, i + 1) += -4.0 / h4 - 2.0 * a2 / h2;
        op(i, i + 2) += 1.0 / h4;
        rhs(i) = a2 * sol.rayleigh * out.theta[i];
    }
    op(0, 0) = 1.0;
    op(n - 1, n - 1) = 1.0;
    op(1, 0) = -3.0 / (2.0 * h);
    op(1, 1) = 4.0 / (2.0 * h);
    op(1, 2) = -1.0 / (2.0 * h);
    op(n - 2, n - 1) = 3.0 / (2.0 * h);
    op(n - 2, n - 2) = -4.0 / (2.0 * h);
    op(n - 2, n - 3) = 1.0 / (2.0 * h);

    Eigen::VectorXd w = op.partialPivLu().solve(rhs);
    const double wmax = w.cwiseAbs().maxCoeff();
    if (wmax > 0.0) w /= wmax;
    out.w.assign(w.data(), w.data() + n);
    return out;
}

}  // namespace heatconv
