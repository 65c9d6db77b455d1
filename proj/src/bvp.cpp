#include "impact/bvp.hpp"

#include <stdexcept>
#include <string>

extern "C" {
void dgbsv_(const int* n, const int* kl, const int* ku, const int* nrhs, double* ab,
            const int* ldab, int* ipiv, double* b, const int* ldb, int* info);
}

namespace impact {
namespace {

void check(const LinearBvp& bvp) {
  const auto m = static_cast<std::size_t>(bvp.dim);
  if (bvp.dim != 1 && bvp.dim != 2) throw std::invalid_argument("bvp dimension must be 1 or 2");
  if (bvp.a1.size() != m * m || bvp.a0.size() != m * m || bvp.left.size() != m ||
      bvp.right.size() != m) {
    throw std::invalid_argument("bvp coefficient sizes do not match dimension");
  }
}

}  // namespace

std::vector<std::vector<double>> solve_linear_bvp_fd2(const LinearBvp& bvp, const TimeGrid& grid) {
  check(bvp);
  const int m = bvp.dim;
  const int n = grid.intervals();
  const double h = grid.step();
  const int unknowns = (n - 1) * m;
  const int kl = 2 * m - 1;
  const int ku = kl;
  const int ldab = 2 * kl + ku + 1;
  std::vector<double> ab(static_cast<std::size_t>(ldab) * unknowns, 0.0);
  std::vector<double> rhs(unknowns, 0.0);

  // Column-major band storage: A(i, j) lives at ab[(kl + ku + i - j) + j * ldab].
  auto put = [&](int row, int col, double v) {
    ab[static_cast<std::size_t>(kl + ku + row - col) + static_cast<std::size_t>(col) * ldab] += v;
  };

  const double inv_h2 = 1.0 / (h * h);
  const double inv_2h = 1.0 / (2.0 * h);
  for (int i = 1; i < n; ++i) {
    for (int c = 0; c < m; ++c) {
      const int row = (i - 1) * m + c;
      for (int d = 0; d < m; ++d) {
        const double a1 = bvp.a1[c * m + d];
        const double a0 = bvp.a0[c * m + d];
        const double diag = c == d ? 1.0 : 0.0;
        const double w_prev = diag * inv_h2 + a1 * inv_2h;
        const double w_here = -2.0 * diag * inv_h2 - a0;
        const double w_next = diag * inv_h2 - a1 * inv_2h;
        put(row, (i - 1) * m + d, w_here);
        if (i > 1) {
          put(row, (i - 2) * m + d, w_prev);
        } else {
          rhs[row] -= w_prev * bvp.left[d];
        }
        if (i < n - 1) {
          put(row, i * m + d, w_next);
        } else {
          rhs[row] -= w_next * bvp.right[d];
        }
      }
    }
  }

  std::vector<int> ipiv(unknowns);
  const int nrhs = 1;
  int info = 0;
  dgbsv_(&unknowns, &kl, &ku, &nrhs, ab.data(), &ldab, ipiv.data(), rhs.data(), &unknowns, &info);
  if (info != 0) throw std::runtime_error("banded solve failed, info = " + std::to_string(info));

  std::vector<std::vector<double>> out(m, std::vector<double>(grid.size()));
  for (int c = 0; c < m; ++c) {
    out[c].front() = bvp.left[c];
    out[c].back() = bvp.right[c];
    for (int i = 1; i < n; ++i) out[c][i] = rhs[(i - 1) * m + c];
  }
  return out;
}

std::vector<std::vector<double>> solve_linear_bvp(const LinearBvp& bvp, const TimeGrid& grid) {
  const int n = grid.intervals();
  const auto u1 = solve_linear_bvp_fd2(bvp, grid);
  const auto u2 = solve_linear_bvp_fd2(bvp, TimeGrid(2 * n));
  const auto u4 = solve_linear_bvp_fd2(bvp, TimeGrid(4 * n));
  auto out = u1;
  for (int c = 0; c < bvp.dim; ++c) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double coarse = (4.0 * u2[c][2 * i] - u1[c][i]) / 3.0;
      const double fine = (4.0 * u4[c][4 * i] - u2[c][2 * i]) / 3.0;
      out[c][i] = (16.0 * fine - coarse) / 15.0;
    }
  }
  return out;
}

}  // namespace impact
