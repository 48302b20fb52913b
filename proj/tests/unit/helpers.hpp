#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "gfri/circulant.hpp"
#include "gfri/random.hpp"

namespace gfri::test {

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : static_cast<double>(m.cwiseAbs().maxCoeff());
}

/// Same size, offsets and weights up to tol.
inline bool same_graph(const CirculantGraph& a, const CirculantGraph& b, double tol = 1e-10) {
  if (a.size() != b.size() || a.offsets() != b.offsets()) return false;
  for (std::size_t i = 0; i < a.generators().size(); ++i)
    if (std::abs(a.generators()[i].weight - b.generators()[i].weight) > tol) return false;
  return true;
}

/// Random connected circulant graph on n vertices with offsets up to
/// max_offset (default: largest with 2B < n).
inline CirculantGraph random_circulant(SplitMix64& rng, int n, int max_offset = 0,
                                       bool weighted = true) {
  if (max_offset <= 0) max_offset = (n - 1) / 2;
  for (;;) {
    std::vector<Generator> gens;
    for (int s = 1; s <= max_offset; ++s)
      if (rng.uniform() < 0.35 || (s == 1 && rng.uniform() < 0.5))
        gens.push_back({s, weighted ? rng.uniform(0.5, 2.0) : 1.0});
    if (gens.empty()) continue;
    CirculantGraph g(n, gens);
    if (g.is_connected()) return g;
  }
}

inline Signal random_signal(SplitMix64& rng, int n) {
  Signal x(n);
  for (auto& v : x) v = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  return x;
}

inline Signal exponential_signal(int n, double alpha) {
  Signal x(n);
  for (int j = 0; j < n; ++j) x(j) = std::polar(1.0, alpha * j);
  return x;
}

}  // namespace gfri::test
