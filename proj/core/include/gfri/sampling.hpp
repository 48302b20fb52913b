#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "gfri/circulant.hpp"
#include "gfri/filterbank.hpp"
#include "gfri/spectral.hpp"

namespace gfri {

/// K-sparse signal on n vertices.
struct SparseSignal {
  int n = 0;
  std::vector<int> support;  ///< strictly increasing
  std::vector<std::complex<double>> amplitudes;

  int K() const { return static_cast<int>(support.size()); }
  Signal dense() const;
  /// Validates and sorts (support, amplitude) pairs.
  static SparseSignal make(int n, std::vector<int> support,
                           std::vector<std::complex<double>> amplitudes);
  static SparseSignal from_dense(const Signal& x, double threshold = 0.0);
};

/// Reduced spectral samples y = first M rows of a unitary basis applied to x.
struct SpectralSamples {
  Signal y;
  int n = 0;
  BasisKind basis = BasisKind::dft;

  int M() const { return static_cast<int>(y.size()); }
};

SpectralSamples sample_gft(const SparseSignal& x, int M);
SpectralSamples sample_gft(const Signal& x, int M);
SpectralSamples sample_dct(const SparseSignal& x, int M);

/// Rows [y_{K+r}, ..., y_r] for r = 0 .. M-K-1.
Eigen::MatrixXcd toeplitz_matrix(const Signal& y, int K);

/// Annihilating-filter recovery from DFT samples. Requires M >= 2K. A Toeplitz
/// rank below K reduces K. Throws ModelMismatchError for roots off the unit
/// circle or off the vertex grid.
SparseSignal prony_reconstruct(const SpectralSamples& y, int K);

/// DCT-III variant for path graphs. Requires M >= 4K.
SparseSignal prony_dct_reconstruct(const SpectralSamples& y, int K);

struct LevelBound {
  int J = 0;
  int M_tilde = 0;
};

/// Largest J with M-1 < n / 2^{J+1} (or n / 2^{J+2} when bipartite_special),
/// and the coarse dimension n / 2^J.
LevelBound max_levels(int n, int M, bool bipartite_special);

struct GftFactorization {
  int n = 0;
  int M = 0;
  int J = 0;
  /// M x n/2^J, equal to C_hat * U~_M^H.
  Eigen::MatrixXcd C;
  Eigen::VectorXcd C_hat;
  std::vector<CirculantGraph> graphs;
  /// Per-level low-pass filter E_j on the level-j graph.
  std::vector<Eigen::MatrixXd> filters;
  /// Product of Psi_j E_j, mapping the root graph to the coarse graph.
  Eigen::MatrixXd reduction;
  double residual = 0.0;
};

/// U_M^H = C Psi_{J-1} E_{J-1} ... Psi_0 E_0 with e-spline low-pass filters
/// parameterized by (0, 2 pi / n, ..., 2 pi (M-1) / n) dilated per level.
/// Bipartite graphs use the non-complementary low-pass, others the
/// complementary one. Levels use same-generating-set coarse graphs.
GftFactorization factorize_gft(const CirculantGraph& g, int M, int J, int k = 1);

struct PipelineSamples {
  Signal coarse;  ///< y~ on the level-J graph
  SpectralSamples samples;
};

PipelineSamples sample_via_pipeline(const Signal& x, const GftFactorization& f);

}  // namespace gfri
