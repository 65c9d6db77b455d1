#pragma once

#include <vector>

#include "impact/core.hpp"

namespace impact {

/// Constant-coefficient linear two-point boundary-value problem
///
///   y'' = A1 y' + A0 y,   y(0) = left,  y(1) = right
///
/// for a vector y of dimension m (1 or 2). Matrices are row-major m x m.
struct LinearBvp {
  int dim = 1;
  std::vector<double> a1;
  std::vector<double> a0;
  std::vector<double> left;
  std::vector<double> right;
};

/// Solves the BVP on `grid` with second-order central differences (banded
/// LAPACK solve on interleaved unknowns), refined by two levels of Richardson
/// extrapolation over grids with n, 2n and 4n intervals. Returns one array
/// per component, aligned to `grid`.
std::vector<std::vector<double>> solve_linear_bvp(const LinearBvp& bvp, const TimeGrid& grid);

/// Plain second-order solve without extrapolation.
std::vector<std::vector<double>> solve_linear_bvp_fd2(const LinearBvp& bvp, const TimeGrid& grid);

}  // namespace impact
