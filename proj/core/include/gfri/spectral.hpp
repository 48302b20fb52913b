#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "gfri/circulant.hpp"

namespace gfri {

/// First M rows of the unitary DFT matrix, entry (m,k) = exp(-i 2 pi m k / n) / sqrt(n).
Eigen::MatrixXcd dft_rows(int n, int M);
Eigen::MatrixXcd dft_matrix(int n);

/// Laplacian spectrum of a circulant graph in DFT order together with the
/// permutation into ascending (graph-frequency) order.
struct SpectrumInfo {
  /// lambda_k for DFT position k.
  std::vector<double> eigenvalues;
  /// Distinct eigenvalue (clustered to tolerance) -> ascending DFT positions.
  std::map<double, std::vector<int>> multiplicity_map;
  /// sigma[i] is the DFT position of the i-th smallest eigenvalue.
  /// Equal eigenvalues keep ascending DFT order.
  std::vector<int> sigma;

  std::vector<double> sorted_eigenvalues() const;
};

SpectrumInfo gft_permutation(const CirculantGraph& g, double tie_tol = 1e-9);

enum class BasisKind { dft, dct3 };

struct UnitaryBasis {
  BasisKind kind = BasisKind::dft;
  int n = 0;
  /// Row m is the m-th basis vector (analysis row).
  Eigen::MatrixXcd matrix;

  Eigen::RowVectorXcd row(int m) const { return matrix.row(m); }
};

UnitaryBasis dft_basis(int n);

/// c(m) = 1/sqrt(2) for m = 0, else 1.
double dct_scale(int m);
/// DCT-III entries Q(m,k) = c(m) sqrt(2/n) cos(pi m (k + 1/2) / n).
Eigen::MatrixXd dct_matrix(int n);
UnitaryBasis dct_basis(int n);

/// Coarse circulant graph of dimension n/2 obtained by keeping the first n/2 DFT
/// rows at even columns and the even-indexed adjacency eigenvalues.
/// Requires n even and 2B < n/2.
CirculantGraph spectral_downsample(const CirculantGraph& g, double tol = 1e-9);

/// Dense (2/n) U~ Lambda~ U~^H with the same construction, for verification.
Eigen::MatrixXd spectral_downsample_matrix(const CirculantGraph& g);

}  // namespace gfri
