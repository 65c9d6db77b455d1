#include "impact/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace impact::numerics {

std::vector<double> gradient(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  if (n < 3) throw std::invalid_argument("gradient needs at least 3 samples");
  std::vector<double> d(n);
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
  return d;
}

std::vector<double> fd_weights(double x0, std::span<const double> nodes, int deriv) {
  const int n = static_cast<int>(nodes.size()) - 1;
  const int m = deriv;
  if (n < m) throw std::invalid_argument("fd_weights: not enough nodes for derivative order");
  // c[j][k]: weight of node j for derivative k.
  std::vector<std::vector<double>> c(n + 1, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n + 1);
  for (int j = 0; j <= n; ++j) w[j] = c[j][m];
  return w;
}

std::vector<double> high_order_derivative(std::span<const double> f, double h, int deriv) {
  if (deriv != 1 && deriv != 2) throw std::invalid_argument("derivative order must be 1 or 2");
  const int n = static_cast<int>(f.size());
  if (n < 9) throw std::invalid_argument("high_order_derivative needs at least 9 samples");

  constexpr int kHalf = 3;    // centred stencil -3..3
  constexpr int kEdge = 8;    // one-sided stencil width
  const double scale = deriv == 1 ? 1.0 / h : 1.0 / (h * h);

  std::vector<double> offsets(2 * kHalf + 1);
  for (int j = 0; j < 2 * kHalf + 1; ++j) offsets[j] = j - kHalf;
  const auto centred = fd_weights(0.0, offsets, deriv);

  std::vector<double> edge_nodes(kEdge);
  for (int j = 0; j < kEdge; ++j) edge_nodes[j] = j;

  std::vector<double> d(n);
  for (int i = kHalf; i < n - kHalf; ++i) {
    double s = 0.0;
    for (int j = 0; j < 2 * kHalf + 1; ++j) s += centred[j] * f[i - kHalf + j];
    d[i] = s * scale;
  }
  for (int i = 0; i < kHalf; ++i) {
    const auto w = fd_weights(static_cast<double>(i), edge_nodes, deriv);
    double lo = 0.0;
    double hi = 0.0;
    for (int j = 0; j < kEdge; ++j) {
      lo += w[j] * f[j];
      // Mirror: node j from the right end sits at distance j, evaluated at distance i.
      hi += w[j] * f[n - 1 - j];
    }
    d[i] = lo * scale;
    // Reflection flips the sign of odd derivatives.
    d[n - 1 - i] = (deriv == 1 ? -hi : hi) * scale;
  }
  return d;
}

double simpson(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  if (n < 3 || (n - 1) % 2 != 0) {
    throw std::invalid_argument("simpson needs an even number of intervals");
  }
  double odd = 0.0;
  double even = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) (i % 2 ? odd : even) += f[i];
  return h / 3.0 * (f[0] + f[n - 1] + 4.0 * odd + 2.0 * even);
}

std::vector<double> cumulative_simpson(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  if (n < 3) throw std::invalid_argument("cumulative_simpson needs at least 3 samples");
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    if (i % 2 == 0) {
      out[i] = out[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
    } else if (i + 1 < n) {
      out[i] = out[i - 1] + h / 12.0 * (5.0 * f[i - 1] + 8.0 * f[i] - f[i + 1]);
    } else {
      out[i] = out[i - 1] + h / 12.0 * (-f[i - 2] + 8.0 * f[i - 1] + 5.0 * f[i]);
    }
  }
  return out;
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double sup_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("sup_distance: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace impact::numerics
