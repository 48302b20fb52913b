#pragma once

#include <vector>

#include <Eigen/Dense>

#include "gfri/circulant.hpp"
#include "gfri/coarsening.hpp"
#include "gfri/filterbank.hpp"

namespace gfri {

/// One level of a multilevel transform.
struct LevelPlan {
  CirculantGraph graph;
  FilterBank filterbank;
  DownsamplePattern pattern;
  InvertibilityVerdict verdict;
  Eigen::MatrixXd analysis;   ///< W_j
  Eigen::MatrixXd synthesis;  ///< S_j with S_j W_j = I
};

struct MultilevelPlan {
  CirculantGraph root;
  FilterBankKind kind = FilterBankKind::hgswt;
  int k = 1;
  std::vector<double> alphas;
  int levels = 0;
  CoarseningScheme scheme = CoarseningScheme::spectral;
  std::vector<LevelPlan> per_level;

  int size() const { return root.size(); }
  /// Vertex of the root graph at which each stacked coefficient sits.
  /// Stacked order is [lowpass_J, highpass_{J-1}, ..., highpass_0].
  std::vector<int> permutation() const;
};

/// Builds a J-level plan. Level j runs on the graph of size n / 2^j with
/// parameters 2^j * alphas. Throws InfeasibleError naming the first level whose
/// filterbank is not invertible and PreconditionError for dimension or
/// parameter constraint violations.
MultilevelPlan plan_mrt(const CirculantGraph& g, const FilterBankSpec& spec, int levels,
                        CoarseningScheme scheme);

struct WaveletCoefficients {
  Signal lowpass;
  /// highpass[j] has length n / 2^{j+1}.
  std::vector<Signal> highpass;

  Signal stacked() const;
  static WaveletCoefficients from_stacked(const Signal& v, int n, int levels);
  /// Band label of each stacked entry: 0 for the final low-pass, j+1 for highpass[j].
  static std::vector<int> band_labels(int n, int levels);
  int count_nonzero(double threshold) const;
};

WaveletCoefficients analyze(const Signal& x, const MultilevelPlan& plan);
Signal synthesize(const WaveletCoefficients& c, const MultilevelPlan& plan);

/// Dense n x n matrix of the stacked multilevel analysis.
Eigen::MatrixXcd multilevel_matrix(const MultilevelPlan& plan);

enum class SparsityVariant { hgswt_i, hcgswt_ii, minimum_iii };

struct SparsityPrediction {
  int K = 0;
  /// Unrounded closed-form value.
  double closed_form = 0.0;
  /// Closed form is not exact: non-integer value or violated preconditions.
  bool approximate = false;
  /// Count from simulating the border support level by level.
  int simulated = 0;
};

/// Non-zero count of the multiresolution representation of a one-piece
/// polynomial. `B` is the high-pass filter bandwidth, `T_lp` the low-pass
/// bandwidth (variant ii only).
SparsityPrediction predicted_sparsity(int n, int B, int T_lp, int j, SparsityVariant variant);

/// Level-by-level simulation of the non-zero support (high-pass bandwidth B,
/// low-pass bandwidth T_lp) plus the final low-pass block.
int simulated_sparsity(int n, int B, int T_lp, int j);

}  // namespace gfri
