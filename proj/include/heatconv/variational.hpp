#pragma once

#include <vector>

#include "heatconv/model.hpp"

namespace heatconv {

/// Trial spaces for the Rayleigh-quotient estimate: clamped beam
/// eigenfunctions (roots of cos(lambda) cosh(lambda) = 1) for w, sines for
/// theta. Each function satisfies its own wall conditions.
struct VariationalBasis {
    std::vector<double> lambdas;  ///< beam wavenumbers, one per w trial
    int size = 0;
};

VariationalBasis make_variational_basis(int size);

/// Clamped beam eigenfunction for the given lambda, or its first/second
/// derivative. Evaluated in a cancellation-free form so the wall conditions
/// hold to near machine precision even for large lambda.
double beam_eval(double lambda, double x, int deriv = 0);

/// Smallest positive Ra of the weak-form Galerkin pencil built on the basis.
double variational_ra(const FlowParams& params, const VariationalBasis& basis);

/// Condition number of the Gram matrix of the w trial functions
/// (linear-independence diagnostic).
double basis_gram_condition(const VariationalBasis& basis);

}  // namespace heatconv
