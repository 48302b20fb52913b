#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gfri/circulant.hpp"

namespace gfri {

enum class CoarseningScheme { same_generating_set, kron, spectral };

const char* to_string(CoarseningScheme scheme);
CoarseningScheme coarsening_scheme_from_string(const std::string& s);

struct CoarseningResult {
  CoarseningScheme scheme = CoarseningScheme::spectral;
  /// Set when the coarse operator is circulant.
  std::optional<CirculantGraph> graph;
  Eigen::MatrixXd laplacian;
  std::vector<int> kept;
};

/// Schur complement L(V,V) - L(V,V^c) L(V^c,V^c)^{-1} L(V^c,V).
Eigen::MatrixXd kron_reduce(const Eigen::MatrixXd& laplacian, const std::vector<int>& kept);

/// Iterates spectral_downsample j times.
CirculantGraph spectral_reduce(const CirculantGraph& g, int levels);

/// Half-size graph with the same generating set and weights. Requires 2B < n/2.
CirculantGraph same_generating_set_coarsen(const CirculantGraph& g);

/// Kron reduction onto the even vertices; the coarse graph is read back from the
/// first row of the reduced adjacency.
CoarseningResult kron_coarsen(const CirculantGraph& g);

CoarseningResult coarsen(const CirculantGraph& g, CoarseningScheme scheme);

}  // namespace gfri
