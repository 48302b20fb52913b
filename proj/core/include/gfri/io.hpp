#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "gfri/circulant.hpp"
#include "gfri/filterbank.hpp"
#include "gfri/multires.hpp"
#include "gfri/sampling.hpp"

namespace gfri {

/// Parsed graph description: {"n": N, "generators": [[s, w], ...]} or
/// {"type": "path", "n": N}. Bare offsets [s, ...] mean unit weights.
struct GraphDescription {
  int n = 0;
  bool path = false;
  std::optional<CirculantGraph> circulant;
};

GraphDescription parse_graph_json(const std::string& text);
GraphDescription read_graph_json(const std::string& file);
std::string graph_to_json(const CirculantGraph& g);
std::string graph_to_json(const PathGraph& g);

/// Fixed 17-significant-digit scientific notation.
std::string format_double(double v);

void write_matrix_csv(std::ostream& os, const Eigen::MatrixXd& m);
Eigen::MatrixXd read_matrix_csv(std::istream& is);

/// One "re,im" row per vertex.
void write_signal_csv(std::ostream& os, const Signal& x);
Signal read_signal_csv(std::istream& is);

/// "m,re,im" rows.
void write_samples_csv(std::ostream& os, const SpectralSamples& y);
/// Rows must be in order m = 0, 1, ...
SpectralSamples read_samples_csv(std::istream& is, int n, BasisKind basis);
/// "c,re,im" rows.
void write_sparse_csv(std::ostream& os, const SparseSignal& x);
SparseSignal read_sparse_csv(std::istream& is, int n);

/// "band,index,re,im" rows in stacked order.
void write_coefficients_csv(std::ostream& os, const WaveletCoefficients& c);

std::string filterbank_to_json(const FilterBank& fb, const InvertibilityVerdict& verdict,
                               std::optional<double> condition_number);

/// Tolerance from the GFRI_TOL environment variable, or `fallback`.
double default_tolerance(double fallback = 1e-9);

}  // namespace gfri
