#include <numbers>

#include "doctest.h"
#include "helpers.hpp"

#include "gfri/errors.hpp"
#include "gfri/spectral.hpp"

using namespace gfri;
using gfri::test::max_abs;

TEST_SUITE("spectral") {

TEST_CASE("DFT rows") {
  CHECK(max_abs(dft_rows(1, 1) - Eigen::MatrixXcd::Ones(1, 1)) == 0.0);
  Eigen::MatrixXcd h2(2, 2);
  h2 << 1, 1, 1, -1;
  CHECK(max_abs(dft_rows(2, 2) - h2 / std::sqrt(2.0)) < 1e-15);
  const Eigen::MatrixXcd u = dft_matrix(8);
  CHECK(max_abs(u.adjoint() * u - Eigen::MatrixXcd::Identity(8, 8)) < 1e-12);
  CHECK(std::abs(u(1, 1) - std::polar(1.0, -2 * std::numbers::pi / 8) / std::sqrt(8.0)) < 1e-15);
  CHECK_THROWS_AS(dft_rows(4, 5), PreconditionError);
  CHECK_THROWS_AS(dft_rows(4, 0), PreconditionError);
}

TEST_CASE("even-column downsampling of DFT rows halves the dimension") {
  const int n = 32;
  const Eigen::MatrixXcd u = dft_matrix(n);
  const Eigen::MatrixXcd v = dft_matrix(n / 2);
  for (int k = 0; k < n / 2; ++k)
    for (int c = 0; c < n / 2; ++c)
      CHECK(std::abs(std::sqrt(2.0) * u(k, 2 * c) - v(k, c)) < 1e-12);
}

TEST_CASE("graph-frequency permutation of the 4-cycle") {
  const auto info = gft_permutation(CirculantGraph::unweighted(4, {1}));
  const std::vector<double> dft_order{0, 2, 4, 2};
  for (int k = 0; k < 4; ++k) CHECK(info.eigenvalues[k] == doctest::Approx(dft_order[k]));
  CHECK(info.sigma == std::vector<int>{0, 1, 3, 2});
  const auto sorted = info.sorted_eigenvalues();
  CHECK(sorted[1] == doctest::Approx(2.0));
  CHECK(sorted[3] == doctest::Approx(4.0));
  CHECK(info.multiplicity_map.size() == 3u);
}

TEST_CASE("permutation properties on random circulants") {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(50));
    const auto g = test::random_circulant(rng, n);
    const auto info = gft_permutation(g);
    CHECK(info.sigma[0] == 0);
    CHECK(std::abs(info.eigenvalues[0]) < 1e-12);
    std::vector<int> seen(info.sigma);
    std::sort(seen.begin(), seen.end());
    for (int i = 0; i < n; ++i) CHECK(seen[i] == i);
    const auto sorted = info.sorted_eigenvalues();
    for (int i = 1; i < n; ++i) CHECK(sorted[i] >= sorted[i - 1] - 1e-9);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(laplacian(g));
    for (int i = 0; i < n; ++i) CHECK(std::abs(sorted[i] - es.eigenvalues()(i)) < 1e-9);
    // ties keep ascending DFT order
    for (int i = 1; i < n; ++i)
      if (std::abs(sorted[i] - sorted[i - 1]) < 1e-9) CHECK(info.sigma[i] > info.sigma[i - 1]);
  }
}

TEST_CASE("n=64 example: A/d eigenvalues at positions 47 and 49") {
  const auto g = CirculantGraph::unweighted(64, {1, 3, 5});
  const auto a = adjacency_polynomial(g).eigenvalues(64);
  CHECK(std::round(a[49] / g.degree() * 1000) / 1000 == doctest::Approx(0.093));
  CHECK(std::round(a[47] / g.degree() * 1000) / 1000 == doctest::Approx(-0.093));
}

TEST_CASE("DCT-III basis") {
  CHECK(dct_matrix(1)(0, 0) == doctest::Approx(1.0));
  const Eigen::MatrixXd q = dct_matrix(4);
  CHECK(max_abs(q * q.transpose() - Eigen::MatrixXd::Identity(4, 4)) < 1e-12);
  CHECK(q(0, 0) == doctest::Approx(std::sqrt(2.0 / 4) / std::sqrt(2.0)));
  CHECK(q(1, 2) == doctest::Approx(std::sqrt(2.0 / 4) * std::cos(std::numbers::pi * 2.5 / 4)));

  // rows diagonalize the path Laplacian
  for (int n : {5, 8, 16}) {
    const Eigen::MatrixXd qn = dct_matrix(n);
    const Eigen::MatrixXd d = qn * laplacian(PathGraph(n)) * qn.transpose();
    for (int m = 0; m < n; ++m)
      CHECK(d(m, m) == doctest::Approx(2 - 2 * std::cos(std::numbers::pi * m / n)));
    CHECK(max_abs(d - Eigen::MatrixXd(d.diagonal().asDiagonal())) < 1e-12);
  }
  const auto b = dct_basis(4);
  CHECK(b.kind == BasisKind::dct3);
  CHECK(max_abs(b.matrix * b.matrix.adjoint() - Eigen::MatrixXcd::Identity(4, 4)) < 1e-12);
}

TEST_CASE("spectral downsampling keeps the generating set") {
  CHECK(test::same_graph(spectral_downsample(CirculantGraph::unweighted(8, {1})),
                         CirculantGraph::unweighted(4, {1})));
  CHECK(test::same_graph(spectral_downsample(CirculantGraph::unweighted(64, {1, 3, 5})),
                         CirculantGraph::unweighted(32, {1, 3, 5})));
  CHECK_THROWS_AS(spectral_downsample(CirculantGraph::unweighted(9, {1})), PreconditionError);
  CHECK_THROWS_AS(spectral_downsample(CirculantGraph::unweighted(8, {1, 2})), PreconditionError);

  SplitMix64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 8 * (1 + static_cast<int>(rng.below(8)));
    const auto g = test::random_circulant(rng, n, (n / 2 - 1) / 2);
    const auto h = spectral_downsample(g);
    CHECK(h.size() == n / 2);
    CHECK(test::same_graph(h, CirculantGraph(n / 2, g.generators()), 1e-12));
    const auto lg = laplacian_polynomial(g).eigenvalues(n);
    const auto lh = laplacian_polynomial(h).eigenvalues(n / 2);
    for (int j = 0; j < n / 2; ++j) CHECK(std::abs(lh[j] - lg[2 * j]) < 1e-10);
    CHECK(spectral_downsample_matrix(g).isApprox(adjacency_matrix(h), 1e-12));
  }

  // applying twice with 2B < n/4
  const auto g = CirculantGraph::unweighted(64, {1, 3, 5});
  const auto twice = spectral_downsample(spectral_downsample(g));
  CHECK(test::same_graph(twice, CirculantGraph::unweighted(16, {1, 3, 5})));
}

}  // TEST_SUITE
