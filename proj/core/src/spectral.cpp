#include "gfri/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "gfri/errors.hpp"

namespace gfri {

namespace {

std::complex<double> unit_root(long long num, int n) {
  const double t = -2.0 * std::numbers::pi * static_cast<double>(num % n) / n;
  return {std::cos(t), std::sin(t)};
}

}  // namespace

Eigen::MatrixXcd dft_rows(int n, int M) {
  if (n < 1 || M < 1 || M > n)
    throw PreconditionError("dft_rows needs 1 <= M <= n, got n=" + std::to_string(n) +
                            " M=" + std::to_string(M));
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::MatrixXcd u(M, n);
  for (int m = 0; m < M; ++m)
    for (int k = 0; k < n; ++k) u(m, k) = s * unit_root(static_cast<long long>(m) * k, n);
  return u;
}

Eigen::MatrixXcd dft_matrix(int n) { return dft_rows(n, n); }

std::vector<double> SpectrumInfo::sorted_eigenvalues() const {
  std::vector<double> out;
  out.reserve(sigma.size());
  for (int p : sigma) out.push_back(eigenvalues[p]);
  return out;
}

SpectrumInfo gft_permutation(const CirculantGraph& g, double tie_tol) {
  SpectrumInfo info;
  const int n = g.size();
  info.eigenvalues = laplacian_polynomial(g).eigenvalues(n);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return info.eigenvalues[a] < info.eigenvalues[b]; });

  // cluster values within tie_tol and order each cluster by DFT index
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() &&
           info.eigenvalues[order[j]] - info.eigenvalues[order[j - 1]] <= tie_tol)
      ++j;
    std::vector<int> cluster(order.begin() + static_cast<long>(i),
                             order.begin() + static_cast<long>(j));
    std::sort(cluster.begin(), cluster.end());
    const double key = info.eigenvalues[cluster.front()];
    for (std::size_t t = 0; t < cluster.size(); ++t) order[i + t] = cluster[t];
    info.multiplicity_map[key] = cluster;
    i = j;
  }
  info.sigma = std::move(order);
  return info;
}

UnitaryBasis dft_basis(int n) { return {BasisKind::dft, n, dft_matrix(n)}; }

double dct_scale(int m) { return m == 0 ? 1.0 / std::sqrt(2.0) : 1.0; }

Eigen::MatrixXd dct_matrix(int n) {
  if (n < 1) throw PreconditionError("dct_matrix needs n >= 1");
  Eigen::MatrixXd q(n, n);
  const double s = std::sqrt(2.0 / n);
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k)
      q(m, k) = dct_scale(m) * s * std::cos(std::numbers::pi * m * (k + 0.5) / n);
  return q;
}

UnitaryBasis dct_basis(int n) {
  return {BasisKind::dct3, n, dct_matrix(n).cast<std::complex<double>>()};
}

namespace {

void check_downsample(const CirculantGraph& g) {
  const int n = g.size();
  if (n % 2 != 0)
    throw PreconditionError("spectral downsampling needs even n, got " + std::to_string(n));
  if (2 * g.bandwidth() >= n / 2)
    throw PreconditionError("spectral downsampling needs 2B < n/2 (B=" +
                            std::to_string(g.bandwidth()) + ", n=" + std::to_string(n) + ")");
}

}  // namespace

Eigen::MatrixXd spectral_downsample_matrix(const CirculantGraph& g) {
  check_downsample(g);
  const int n = g.size();
  const int h = n / 2;
  const auto lambda = adjacency_polynomial(g).eigenvalues(n);
  Eigen::MatrixXcd ut(h, h);  // unnormalized DFT rows 0..h-1 at even columns
  for (int m = 0; m < h; ++m)
    for (int k = 0; k < h; ++k) ut(m, k) = unit_root(2LL * m * k, n);
  Eigen::VectorXcd lam(h);
  for (int m = 0; m < h; ++m) lam(m) = lambda[2 * m];
  const Eigen::MatrixXcd a = (2.0 / n) * ut.adjoint() * lam.asDiagonal() * ut;
  return a.real();
}

CirculantGraph spectral_downsample(const CirculantGraph& g, double tol) {
  check_downsample(g);
  const int n = g.size();
  const int h = n / 2;
  const auto lambda = adjacency_polynomial(g).eigenvalues(n);
  // first row only: a(0,c) = (2/n) sum_m lambda_{2m} exp(-i 2 pi m c / h)
  Eigen::VectorXd row(h);
  for (int c = 0; c < h; ++c) {
    std::complex<double> acc = 0.0;
    for (int m = 0; m < h; ++m) acc += lambda[2 * m] * unit_root(2LL * m * c, n);
    row(c) = (2.0 / n) * acc.real();
  }
  return graph_from_first_row(row, tol);
}

}  // namespace gfri
