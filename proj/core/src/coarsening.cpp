#include "gfri/coarsening.hpp"

#include "gfri/errors.hpp"
#include "gfri/linalg.hpp"
#include "gfri/spectral.hpp"

namespace gfri {

const char* to_string(CoarseningScheme scheme) {
  switch (scheme) {
    case CoarseningScheme::same_generating_set: return "same-generating-set";
    case CoarseningScheme::kron: return "kron";
    case CoarseningScheme::spectral: return "spectral";
  }
  return "unknown";
}

CoarseningScheme coarsening_scheme_from_string(const std::string& s) {
  if (s == "same-generating-set" || s == "same") return CoarseningScheme::same_generating_set;
  if (s == "kron") return CoarseningScheme::kron;
  if (s == "spectral") return CoarseningScheme::spectral;
  throw InputError("unknown coarsening scheme '" + s + "'");
}

Eigen::MatrixXd kron_reduce(const Eigen::MatrixXd& laplacian, const std::vector<int>& kept) {
  const int n = static_cast<int>(laplacian.rows());
  if (laplacian.cols() != n) throw InputError("Kron reduction needs a square Laplacian");
  std::vector<bool> in(n, false);
  for (int i : kept) {
    if (i < 0 || i >= n) throw InputError("kept vertex out of range");
    if (in[i]) throw InputError("duplicate kept vertex");
    in[i] = true;
  }
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (!in[i]) rest.push_back(i);

  const Eigen::MatrixXd laa = laplacian(kept, kept);
  if (rest.empty()) return laa;
  const Eigen::MatrixXd lab = laplacian(kept, rest);
  const Eigen::MatrixXd lbb = laplacian(rest, rest);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(lbb);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible())
    throw PreconditionError("Kron reduction: eliminated block is singular");
  Eigen::MatrixXd out = laa - lab * lu.solve(lab.transpose());
  return 0.5 * (out + out.transpose());
}

CirculantGraph spectral_reduce(const CirculantGraph& g, int levels) {
  if (levels < 0) throw PreconditionError("number of levels must be non-negative");
  CirculantGraph cur = g;
  for (int j = 0; j < levels; ++j) {
    try {
      cur = spectral_downsample(cur);
    } catch (const PreconditionError& e) {
      throw PreconditionError("spectral reduction fails at level " + std::to_string(j + 1) + ": " +
                              e.what());
    }
  }
  return cur;
}

CirculantGraph same_generating_set_coarsen(const CirculantGraph& g) {
  const int n = g.size();
  if (n % 2 != 0) throw PreconditionError("coarsening needs an even vertex count");
  if (2 * g.bandwidth() >= n / 2)
    throw PreconditionError("same-generating-set coarsening needs 2B < n/2 (B=" +
                            std::to_string(g.bandwidth()) + ", n=" + std::to_string(n) + ")");
  return CirculantGraph(n / 2, g.generators());
}

CoarseningResult kron_coarsen(const CirculantGraph& g) {
  const int n = g.size();
  if (n % 2 != 0) throw PreconditionError("coarsening needs an even vertex count");
  CoarseningResult res;
  res.scheme = CoarseningScheme::kron;
  for (int i = 0; i < n; i += 2) res.kept.push_back(i);
  res.laplacian = kron_reduce(laplacian(g), res.kept);
  if (is_circulant(res.laplacian, 1e-9)) {
    Eigen::VectorXd row = -res.laplacian.row(0).transpose();
    row(0) = 0.0;
    res.graph = graph_from_first_row(row, 1e-12);
  }
  return res;
}

CoarseningResult coarsen(const CirculantGraph& g, CoarseningScheme scheme) {
  if (scheme == CoarseningScheme::kron) return kron_coarsen(g);
  CoarseningResult res;
  res.scheme = scheme;
  for (int i = 0; i < g.size(); i += 2) res.kept.push_back(i);
  res.graph = scheme == CoarseningScheme::spectral ? spectral_downsample(g)
                                                   : same_generating_set_coarsen(g);
  res.laplacian = laplacian(*res.graph);
  return res;
}

}  // namespace gfri
