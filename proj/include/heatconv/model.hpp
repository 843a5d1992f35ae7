#pragma once

#include <cmath>
#include <stdexcept>

namespace heatconv {

/// Conduction (basic) state of the layer: linear wall-to-wall profile plus
/// the parabolic correction from the uniform volumetric heat source.
struct BasicState {
    double theta_bottom;  ///< temperature at the lower wall, z = -h/2
    double delta_theta;   ///< wall temperature difference (bottom minus top)
    double h;             ///< layer depth
    double eta;           ///< heating rate
    double kappa;         ///< thermal conductivity

    void validate() const {
        if (!(h > 0.0)) throw std::domain_error("BasicState: layer depth h must be > 0");
        if (!(kappa > 0.0)) throw std::domain_error("BasicState: conductivity kappa must be > 0");
    }
};

/// Temperature of the conduction state at height z in [-h/2, h/2].
/// theta(-h/2) = theta_bottom, theta(+h/2) = theta_bottom - delta_theta,
/// and d2theta/dz2 = eta/kappa everywhere.
inline double basic_state_temperature(double z, const BasicState& bs) {
    bs.validate();
    const double half = 0.5 * bs.h;
    if (std::abs(z) > half)
        throw std::domain_error("basic_state_temperature: z outside [-h/2, h/2]");
    return bs.theta_bottom - (bs.delta_theta / bs.h) * (z + half)
         + (bs.eta / (2.0 * bs.kappa)) * (z * z - half * half);
}

/// Dimensionless control parameters of the marginal-stability problem.
struct FlowParams {
    double n_rate = 0.0;  ///< heating/cooling rate parameter N
    double a_sq = 0.0;    ///< squared horizontal wavenumber, a^2 = m^2 + n^2
    double pr = 1.0;      ///< Prandtl number (only Ra = Gr*Pr enters the threshold)

    double n1() const { return 1.0 + 0.5 * n_rate; }
    double a() const { return std::sqrt(a_sq); }

    void validate() const {
        if (!(a_sq > 0.0)) throw std::domain_error("FlowParams: a^2 must be > 0");
        if (!(pr > 0.0)) throw std::domain_error("FlowParams: Pr must be > 0");
        if (!std::isfinite(n_rate)) throw std::domain_error("FlowParams: N must be finite");
    }
};

/// Cell counts and aspect ratios of the rectangular box.
struct BoxSpec {
    int m_cells;      ///< number of cells in x, >= 1
    int n_cells;      ///< number of cells in y, >= 1
    double aspect_x;  ///< a1 = L/H
    double aspect_y;  ///< a2 = l/H
};

struct Wavenumbers {
    double m;
    double n;
    double a_sq;
};

Wavenumbers wavenumbers_from_box(const BoxSpec& box);

/// The solvers work in the translated coordinate x = z + 1/2 on [0,1];
/// the physical frame is z in [-1/2, 1/2].
inline double to_unit_frame(double z) { return z + 0.5; }
inline double to_centered_frame(double x) { return x - 0.5; }

}  // namespace heatconv
