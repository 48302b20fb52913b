#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gfri/circulant.hpp"
#include "gfri/multires.hpp"
#include "gfri/sampling.hpp"

namespace gfri {

enum class ProductKind { kronecker, cartesian, strong, lexicographic };

const char* to_string(ProductKind kind);
ProductKind product_kind_from_string(const std::string& s);

struct ProductGraph {
  ProductKind kind = ProductKind::cartesian;
  int n1 = 0;
  int n2 = 0;
  Eigen::MatrixXd adjacency;
};

ProductGraph graph_product(const Eigen::MatrixXd& a1, const Eigen::MatrixXd& a2, ProductKind kind);

/// Rank-k tensor signal x = sum_s x1_s (x) x2_s in row-stacking order,
/// x[i * n2 + j] = x1[i] * x2[j].
struct TensorSignal {
  int n1 = 0;
  int n2 = 0;
  std::vector<std::pair<Signal, Signal>> terms;

  int rank() const { return static_cast<int>(terms.size()); }
  Signal reassemble() const;
  /// Rescales each term so the first factor has unit norm and its first
  /// non-zero entry is real positive.
  TensorSignal canonical() const;
};

Signal kron_vec(const Signal& x1, const Signal& x2);

/// SVD of the row-major n1 x n2 reshape, keeping singular values above
/// rel_tol * sigma_1.
TensorSignal tensor_decompose(const Signal& x, int n1, int n2, double rel_tol = 1e-9);

/// Orthogonal projection onto circulant matrices (diagonal averaging).
Eigen::MatrixXd nearest_circulant(const Eigen::MatrixXd& a);

struct KroneckerApproximation {
  Eigen::MatrixXd A1;
  Eigen::MatrixXd A2;
  double residual = 0.0;
  /// Frobenius residual after each iteration.
  std::vector<double> history;
  int iterations = 0;
};

/// min ||A - A1 (x) A2||_F over symmetric zero-diagonal circulant factors by
/// alternating exact block updates on the rearranged matrix, started from its
/// leading singular pair.
KroneckerApproximation nearest_kronecker_circulant(const Eigen::MatrixXd& a, int n1, int n2,
                                                   int max_iter = 500, double tol = 1e-10);

/// Factor graph for multidimensional sampling: circulant or path.
struct FactorGraph {
  int n = 0;
  bool path = false;
};

struct MultidimRecovery {
  TensorSignal signal;
  SparseSignal factor1;
  SparseSignal factor2;
  Signal samples;  ///< y1 (x) y2
};

/// Samples each factor with 2K_i DFT rows (4K_i DCT rows on path factors),
/// forms y = y1 (x) y2, splits it by a rank-1 SVD and recovers each factor.
MultidimRecovery multidim_sample_reconstruct(const TensorSignal& x, FactorGraph g1, FactorGraph g2,
                                             int K1, int K2);

/// Per-factor multilevel analysis, w = w1 (x) w2 over stacked coefficients.
TensorSignal separable_gwt(const TensorSignal& x, const MultilevelPlan& p1,
                           const MultilevelPlan& p2);
TensorSignal inverse_separable_gwt(const TensorSignal& w, const MultilevelPlan& p1,
                                   const MultilevelPlan& p2);

}  // namespace gfri
