#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gfri/circulant.hpp"

namespace gfri {

enum class FilterBankKind { hgswt, hgeswt, hcgeswt, normalized_path };

const char* to_string(FilterBankKind kind);
FilterBankKind filterbank_kind_from_string(const std::string& s);

struct FilterBankSpec {
  FilterBankKind kind = FilterBankKind::hgswt;
  /// Half-order k.
  int k = 1;
  std::vector<double> alphas;
  /// beta_n = d_alpha_n / d.
  std::vector<double> betas;

  int T() const { return static_cast<int>(alphas.size()); }
};

/// Vertices that keep the low-pass output; all others keep the high-pass output.
struct DownsamplePattern {
  int n = 0;
  std::vector<int> keep_lowpass;

  /// Even vertices {0, 2, ..., n-2}.
  static DownsamplePattern standard(int n);
  /// Only vertex 0 keeps the low-pass output.
  static DownsamplePattern minimum(int n);
  static DownsamplePattern all_lowpass(int n);

  bool is_standard() const;
  /// Diagonal of K: +1 on low-pass vertices, -1 elsewhere.
  Eigen::VectorXd k_diagonal() const;
  std::vector<int> complement() const;
};

struct FilterBank {
  FilterBankSpec spec;
  int n = 0;
  /// Set for filterbanks built on circulant graphs.
  std::optional<CirculantGraph> graph;

  /// Representers (circulant filterbanks only).
  RepresenterPolynomial lp_poly;
  RepresenterPolynomial hp_poly;
  RepresenterPolynomial lp_syn_poly;
  RepresenterPolynomial hp_syn_poly;
  /// Free factor of the complementary low-pass filter, lp_poly = spline * r_poly.
  RepresenterPolynomial r_poly;

  Eigen::MatrixXd lp_analysis;
  Eigen::MatrixXd hp_analysis;
  /// Complementary filterbanks only; empty otherwise.
  Eigen::MatrixXd lp_synthesis;
  Eigen::MatrixXd hp_synthesis;
  double c1 = 1.0;
  double c2 = 1.0;

  DownsamplePattern sampling;

  bool has_synthesis() const { return lp_synthesis.size() > 0; }
};

FilterBank build_hgswt(const CirculantGraph& g, int k);
FilterBank build_hgeswt(const CirculantGraph& g, int k, const std::vector<double>& alphas);
/// Throws InfeasibleError when the high-pass representer has opposing or zero roots.
FilterBank build_hcgeswt(const CirculantGraph& g, int k, const std::vector<double>& alphas);
FilterBank build_path_hgswt(const PathGraph& g, int k);

/// Dispatch on spec.kind (alphas ignored for hgswt).
FilterBank build_filterbank(const CirculantGraph& g, FilterBankKind kind, int k,
                            const std::vector<double>& alphas);

/// W = 1/2 (I + K) H_LP + 1/2 (I - K) H_HP.
Eigen::MatrixXd transform_matrix(const FilterBank& fb, const DownsamplePattern& pattern);
Eigen::MatrixXd transform_matrix(const FilterBank& fb);

/// S with S W = I: the transposed synthesis transform for complementary
/// filterbanks, the inverse of W otherwise. Throws InfeasibleError if W is singular.
Eigen::MatrixXd synthesis_matrix(const FilterBank& fb, const DownsamplePattern& pattern);

struct InvertibilityVerdict {
  bool invertible = false;
  /// Short code naming the deciding test.
  std::string condition;
  std::string reason;
  /// DFT position pairs (p, p + n/2) whose eigenvectors coincide on the kept set.
  std::vector<std::pair<int, int>> conflicting_positions;
  /// True when the spectral tests were inconclusive and a dense check decided.
  bool resolved_densely = false;
};

InvertibilityVerdict check_invertibility(const FilterBank& fb, const DownsamplePattern& pattern);
InvertibilityVerdict check_invertibility(const FilterBank& fb);

/// sqrt(lambda_max / lambda_min) of W^T W from the spectrum of A/d.
/// Requires a bipartite graph and the standard pattern.
double condition_number_bipartite(const FilterBank& fb);

/// Representer roots of the high-pass filter that come in opposing pairs (r, -r),
/// or zero roots (reported as (0, 0)).
std::vector<std::pair<std::complex<double>, std::complex<double>>> opposing_roots(
    const CirculantGraph& g, const std::vector<double>& betas, double tol = 1e-9);

}  // namespace gfri
