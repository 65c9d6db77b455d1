#pragma once

#include <span>
#include <vector>

// Grid calculus on uniformly spaced samples: finite differences and
// quadrature. All routines take the sample spacing explicitly.
namespace impact::numerics {

/// First derivative, second-order central in the interior and second-order
/// one-sided at both ends. Needs at least 3 samples.
std::vector<double> gradient(std::span<const double> f, double h);

/// Derivative of order `deriv` (1 or 2) with sixth-order accuracy. Uses a
/// centred 7-point stencil where possible and shifted 8-point stencils near
/// the ends. Needs at least 9 samples.
std::vector<double> high_order_derivative(std::span<const double> f, double h, int deriv);

/// Finite-difference weights for the derivative of order `deriv` at `x0`
/// from samples at `nodes` (Fornberg's recursion).
std::vector<double> fd_weights(double x0, std::span<const double> nodes, int deriv);

/// Composite Simpson rule; the number of intervals must be even.
double simpson(std::span<const double> f, double h);

/// Running integral from the first sample. Values at even indices equal the
/// composite Simpson rule over [0, t_i]; odd indices add a one-interval
/// quadratic panel. The last entry equals simpson(f, h).
std::vector<double> cumulative_simpson(std::span<const double> f, double h);

double max_abs(std::span<const double> v);

/// Sup-norm distance between two equally sized arrays.
double sup_distance(std::span<const double> a, std::span<const double> b);

}  // namespace impact::numerics
