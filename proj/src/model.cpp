#include "heatconv/model.hpp"

#include <numbers>

namespace heatconv {

Wavenumbers wavenumbers_from_box(const BoxSpec& box) {
    if (box.m_cells < 1 || box.n_cells < 1)
        throw std::domain_error("wavenumbers_from_box: cell counts must be >= 1");
    if (!(box.aspect_x > 0.0) || !(box.aspect_y > 0.0))
        throw std::domain_error("wavenumbers_from_box: aspect ratios must be > 0");
    const double two_pi = 2.0 * std::numbers::pi;
    Wavenumbers wn;
    wn.m = two_pi * box.m_cells / box.aspect_x;
    wn.n = two_pi * box.n_cells / box.aspect_y;
    wn.a_sq = wn.m * wn.m + wn.n * wn.n;
    return wn;
}

}  // namespace heatconv
