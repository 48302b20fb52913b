#include "gfri/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <string>

#include "gfri/coarsening.hpp"
#include "gfri/errors.hpp"
#include "gfri/linalg.hpp"

namespace gfri {

namespace {

constexpr double kRankTol = 1e-10;
constexpr double kResidualTol = 1e-6;

// Numerical rank of a Toeplitz matrix from its singular values, capped at K.
int toeplitz_rank(const Eigen::VectorXd& s, int K) {
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) / s(0) > kRankTol) ++r;
  return std::min(r, K);
}

// |H(u)| where H(x) = h_0 x^K + h_1 x^{K-1} + ... + h_K.
double filter_magnitude(const Eigen::VectorXcd& h, std::complex<double> u) {
  std::complex<double> acc = 0.0;
  for (Eigen::Index i = 0; i < h.size(); ++i) acc = acc * u + h(i);
  return std::abs(acc);
}

// Indices of the `count` smallest scores, ascending by index.
std::vector<int> smallest(const std::vector<double>& score, int count) {
  std::vector<int> idx(score.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::partial_sort(idx.begin(), idx.begin() + count, idx.end(),
                    [&](int a, int b) { return score[a] < score[b]; });
  idx.resize(count);
  std::sort(idx.begin(), idx.end());
  return idx;
}

// Support of size `order` drawn from the best-scoring grid points. Tries the
// `order` best directly, then backward elimination from growing pools of up to
// `pool` candidates. Returns an empty vector if no candidate reproduces the samples.
template <typename Column>
std::vector<int> fit_support(const std::vector<double>& score, int order, int pool,
                             const Signal& y, Column column, Eigen::VectorXcd& amps) {
  const double scale = y.lpNorm<Eigen::Infinity>();
  auto fit = [&](const std::vector<int>& support) {
    Eigen::MatrixXcd v(y.size(), support.size());
    for (std::size_t c = 0; c < support.size(); ++c) v.col(c) = column(support[c]);
    amps = v.colPivHouseholderQr().solve(y);
    return (v * amps - y).lpNorm<Eigen::Infinity>() <= kResidualTol * scale;
  };
  std::vector<int> support = smallest(score, order);
  if (fit(support)) return support;
  pool = std::min<int>(pool, static_cast<int>(score.size()));
  // small pools keep the least-squares problem well conditioned
  for (int p = order + 1; p <= pool; ++p) {
    support = smallest(score, p);
    fit(support);
    while (static_cast<int>(support.size()) > order) {
      Eigen::Index drop = 0;
      amps.cwiseAbs().minCoeff(&drop);
      support.erase(support.begin() + drop);
      if (fit(support) && static_cast<int>(support.size()) == order) return support;
    }
  }
  return {};
}

// Annihilating filters to try, lowest order first: the numerical rank when it
// falls short of the model order, then the model order itself. Each filter is
// the unit-norm null vector of the Toeplitz matrix of its order.
std::vector<Eigen::VectorXcd> candidate_filters(const Signal& y, int K) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(toeplitz_matrix(y, K), Eigen::ComputeFullV);
  const int rank = toeplitz_rank(svd.singularValues(), K);
  std::vector<Eigen::VectorXcd> out;
  if (rank > 0 && rank < K) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> reduced(toeplitz_matrix(y, rank), Eigen::ComputeFullV);
    out.push_back(reduced.matrixV().col(rank));
  }
  out.push_back(svd.matrixV().col(K));
  return out;
}

}  // namespace

Signal SparseSignal::dense() const {
  Signal x = Signal::Zero(n);
  for (int i = 0; i < K(); ++i) x(support[i]) += amplitudes[i];
  return x;
}

SparseSignal SparseSignal::make(int n, std::vector<int> support,
                                std::vector<std::complex<double>> amplitudes) {
  if (n < 1) throw InputError("sparse signal needs n >= 1");
  if (support.size() != amplitudes.size())
    throw InputError("support and amplitude lists differ in length");
  std::vector<int> order(support.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return support[a] < support[b]; });
  SparseSignal s{n, {}, {}};
  for (int i : order) {
    if (support[i] < 0 || support[i] >= n) throw InputError("support index out of range");
    if (!s.support.empty() && s.support.back() == support[i])
      throw InputError("duplicate support index " + std::to_string(support[i]));
    s.support.push_back(support[i]);
    s.amplitudes.push_back(amplitudes[i]);
  }
  return s;
}

SparseSignal SparseSignal::from_dense(const Signal& x, double threshold) {
  SparseSignal s{static_cast<int>(x.size()), {}, {}};
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (std::abs(x(i)) > threshold) {
      s.support.push_back(static_cast<int>(i));
      s.amplitudes.push_back(x(i));
    }
  return s;
}

SpectralSamples sample_gft(const Signal& x, int M) {
  const int n = static_cast<int>(x.size());
  return {dft_rows(n, M) * x, n, BasisKind::dft};
}

SpectralSamples sample_gft(const SparseSignal& x, int M) {
  const Eigen::MatrixXcd u = dft_rows(x.n, M);
  Signal y = Signal::Zero(M);
  for (int i = 0; i < x.K(); ++i) y += x.amplitudes[i] * u.col(x.support[i]);
  return {y, x.n, BasisKind::dft};
}

SpectralSamples sample_dct(const SparseSignal& x, int M) {
  if (M < 1 || M > x.n) throw PreconditionError("DCT sampling needs 1 <= M <= n");
  const Eigen::MatrixXd q = dct_matrix(x.n);
  Signal y = Signal::Zero(M);
  for (int i = 0; i < x.K(); ++i)
    y += x.amplitudes[i] * q.col(x.support[i]).head(M).cast<std::complex<double>>();
  return {y, x.n, BasisKind::dct3};
}

Eigen::MatrixXcd toeplitz_matrix(const Signal& y, int K) {
  const int M = static_cast<int>(y.size());
  if (K < 0 || M - K < 1) throw PreconditionError("Toeplitz matrix needs M > K");
  Eigen::MatrixXcd t(M - K, K + 1);
  for (int r = 0; r < M - K; ++r)
    for (int c = 0; c <= K; ++c) t(r, c) = y(K + r - c);
  return t;
}

SparseSignal prony_reconstruct(const SpectralSamples& ys, int K) {
  if (ys.basis != BasisKind::dft) throw PreconditionError("DFT samples expected");
  const int n = ys.n;
  const int M = ys.M();
  if (K < 0) throw PreconditionError("sparsity K must be non-negative");
  if (M < 2 * K)
    throw PreconditionError("Prony recovery needs M >= 2K (M=" + std::to_string(M) +
                            ", K=" + std::to_string(K) + ")");
  if (K > n) throw PreconditionError("sparsity K exceeds the graph size");
  if (K == 0) return {n, {}, {}};

  const Eigen::MatrixXcd u = dft_rows(n, M);
  if (ys.y.lpNorm<Eigen::Infinity>() == 0.0) return {n, {}, {}};
  for (const Eigen::VectorXcd& h : candidate_filters(ys.y, K)) {
    const int order = static_cast<int>(h.size()) - 1;
    // roots of the filter are e^{-i 2 pi c / n} for c in the support
    std::vector<double> score(n);
    for (int c = 0; c < n; ++c)
      score[c] = filter_magnitude(h, std::polar(1.0, -2.0 * std::numbers::pi * c / n));
    Eigen::VectorXcd a;
    const auto support =
        fit_support(score, order, order == K ? M : order, ys.y, [&](int c) { return u.col(c); }, a);
    if (!support.empty())
      return {n, support, std::vector<std::complex<double>>(a.data(), a.data() + order)};
  }
  throw ModelMismatchError("no " + std::to_string(K) +
                           "-sparse signal on the vertex grid reproduces the samples");
}

SparseSignal prony_dct_reconstruct(const SpectralSamples& ys, int K) {
  if (ys.basis != BasisKind::dct3) throw PreconditionError("DCT samples expected");
  const int n = ys.n;
  const int M = ys.M();
  if (K < 0) throw PreconditionError("sparsity K must be non-negative");
  if (M < 4 * K)
    throw PreconditionError("DCT Prony recovery needs M >= 4K (M=" + std::to_string(M) +
                            ", K=" + std::to_string(K) + ")");
  if (K > n) throw PreconditionError("sparsity K exceeds the graph size");
  if (K == 0) return {n, {}, {}};

  // z_m = sum_k a_k cos(m theta_k), theta_k = pi (c_k + 1/2) / n
  Signal z(M);
  for (int m = 0; m < M; ++m) z(m) = ys.y(m) / (dct_scale(m) * std::sqrt(2.0 / n));
  if (z.lpNorm<Eigen::Infinity>() == 0.0) return {n, {}, {}};

  for (const Eigen::VectorXcd& h : candidate_filters(z, 2 * K)) {
    // each cosine contributes the conjugate root pair e^{+-i theta}
    const int order = static_cast<int>(h.size()) / 2;
    std::vector<double> score(n);
    for (int c = 0; c < n; ++c) {
      const double theta = std::numbers::pi * (c + 0.5) / n;
      score[c] = filter_magnitude(h, std::polar(1.0, theta)) +
                 filter_magnitude(h, std::polar(1.0, -theta));
    }
    Eigen::VectorXcd a;
    const auto support = fit_support(score, order, order == K ? 2 * order : order, z, [&](int c) {
      Eigen::VectorXcd col(M);
      for (int m = 0; m < M; ++m) col(m) = std::cos(std::numbers::pi * m * (c + 0.5) / n);
      return col;
    }, a);
    if (!support.empty())
      return {n, support, std::vector<std::complex<double>>(a.data(), a.data() + order)};
  }
  throw ModelMismatchError("no " + std::to_string(K) +
                           "-sparse path signal on the vertex grid reproduces the samples");
}

LevelBound max_levels(int n, int M, bool bipartite_special) {
  if (n < 1 || M < 1) throw PreconditionError("max_levels needs n, M >= 1");
  const long long k = M - 1;
  const int extra = bipartite_special ? 2 : 1;
  int J = 0;
  for (int j = 1; j < 31 && n % (1 << j) == 0; ++j) {
    if ((k << (j + extra)) < n) J = j;
    else break;
  }
  return {J, n >> J};
}

GftFactorization factorize_gft(const CirculantGraph& g, int M, int J, int k) {
  const int n = g.size();
  if (M < 1 || M > n) throw PreconditionError("factorization needs 1 <= M <= n");
  if (J < 0 || (J > 0 && n % (1 << J) != 0))
    throw PreconditionError("n must be divisible by 2^J");
  if (J > 0 && static_cast<long long>(M - 1) << (J + 1) >= n)
    throw PreconditionError("too many levels: need M-1 < n/2^(J+1) (n=" + std::to_string(n) +
                            ", M=" + std::to_string(M) + ", J=" + std::to_string(J) + ")");

  GftFactorization f;
  f.n = n;
  f.M = M;
  f.J = J;
  f.C_hat = Eigen::VectorXcd::Ones(M);
  f.reduction = Eigen::MatrixXd::Identity(n, n);

  std::vector<double> alphas(M);
  for (int m = 0; m < M; ++m) alphas[m] = 2.0 * std::numbers::pi * m / n;

  CirculantGraph cur = g;
  for (int j = 0; j < J; ++j) {
    if (j > 0) cur = same_generating_set_coarsen(cur);
    const int nj = cur.size();
    std::vector<double> aj;
    for (double a : alphas) aj.push_back(std::ldexp(a, j));
    const bool bip = is_bipartite(cur);
    FilterBank fb = [&] {
      try {
        return bip ? build_hgeswt(cur, k, aj) : build_hcgeswt(cur, k, aj);
      } catch (const InfeasibleError& e) {
        throw InfeasibleError("level " + std::to_string(j) + ": " + e.what());
      }
    }();
    const auto verdict = check_invertibility(fb, DownsamplePattern::standard(nj));
    if (!verdict.invertible)
      throw InfeasibleError("level " + std::to_string(j) + " low-pass filter not admissible (" +
                            verdict.condition + "): " + verdict.reason);
    for (int m = 0; m < M; ++m) {
      const double lam = fb.lp_poly.eigenvalue(m, nj);
      if (std::abs(lam) < 1e-12)
        throw InfeasibleError("level " + std::to_string(j) + ": low-pass filter vanishes at "
                              "frequency " + std::to_string(m));
      f.C_hat(m) *= std::sqrt(2.0) / lam;
    }
    Eigen::MatrixXd psi_e(nj / 2, nj);
    for (int i = 0; i < nj / 2; ++i) psi_e.row(i) = fb.lp_analysis.row(2 * i);
    f.reduction = psi_e * f.reduction;
    f.graphs.push_back(cur);
    f.filters.push_back(fb.lp_analysis);
  }

  const int nJ = n >> J;
  f.C = f.C_hat.asDiagonal() * dft_rows(nJ, M);
  const Eigen::MatrixXcd direct = dft_rows(n, M);
  f.residual = (direct - f.C * f.reduction.cast<std::complex<double>>()).cwiseAbs().maxCoeff();
  if (!(f.residual < 1e-8))
    throw InfeasibleError("factorization residual " + std::to_string(f.residual) +
                          " exceeds tolerance");
  return f;
}

PipelineSamples sample_via_pipeline(const Signal& x, const GftFactorization& f) {
  if (x.size() != f.n) throw InputError("signal length does not match the factorization");
  PipelineSamples out;
  out.coarse = f.reduction.cast<std::complex<double>>() * x;
  out.samples = {f.C * out.coarse, f.n, BasisKind::dft};
  return out;
}

}  // namespace gfri
