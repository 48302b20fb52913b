#include "gfri/filterbank.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <limits>
#include <set>
#include <sstream>

#include "gfri/errors.hpp"
#include "gfri/linalg.hpp"

namespace gfri {

namespace {

constexpr double kSpecTol = 1e-9;

// beta + s * a(z)/d for s = +1 (low-pass factor) or s = -1 (high-pass factor)
RepresenterPolynomial base_factor(const CirculantGraph& g, double beta, double s) {
  RepresenterPolynomial a = adjacency_polynomial(g);
  a *= s / g.degree();
  return RepresenterPolynomial::constant(beta) + a;
}

RepresenterPolynomial product_filter(const CirculantGraph& g, const std::vector<double>& betas,
                                     int k, double s) {
  RepresenterPolynomial out = RepresenterPolynomial::constant(1.0);
  for (double b : betas) out = out * (0.5 * base_factor(g, b, s)).pow(k);
  return out;
}

void require_connected(const CirculantGraph& g) {
  if (!g.is_connected())
    throw PreconditionError("filterbank construction needs a connected circulant graph");
}

FilterBankSpec make_spec(const CirculantGraph& g, FilterBankKind kind, int k,
                         const std::vector<double>& alphas) {
  if (k < 1) throw PreconditionError("filter half-order k must be >= 1");
  if (alphas.empty()) throw PreconditionError("at least one alpha parameter is required");
  FilterBankSpec spec{kind, k, alphas, {}};
  for (double a : alphas) spec.betas.push_back(exponential_degree(g, a) / g.degree());
  return spec;
}

std::vector<double> normalized_spectrum(const CirculantGraph& g) {
  auto gamma = adjacency_polynomial(g).eigenvalues(g.size());
  for (double& v : gamma) v /= g.degree();
  return gamma;
}

Eigen::MatrixXcd eigvecs_on(int n, const std::vector<int>& positions, const std::vector<int>& rows) {
  Eigen::MatrixXcd v(rows.size(), positions.size());
  for (std::size_t c = 0; c < positions.size(); ++c)
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const double t = 2.0 * std::numbers::pi *
                       static_cast<double>((static_cast<long long>(positions[c]) * rows[r]) % n) / n;
      v(r, c) = {std::cos(t), std::sin(t)};
    }
  return v;
}

bool full_column_rank(const Eigen::MatrixXcd& m) {
  if (m.cols() == 0) return true;
  if (m.rows() < m.cols()) return false;
  return numerical_rank(m, kSpecTol) == m.cols();
}

bool dense_invertible(const Eigen::MatrixXd& w) {
  return numerical_rank(w, kSpecTol) == w.rows();
}

std::string join_pairs(const std::vector<std::pair<int, int>>& pairs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    os << (i ? ", " : "") << "(" << pairs[i].first << "," << pairs[i].second << ")";
  return os.str();
}

// Spectrum eigenvalues of W^T W for bipartite graphs and the even pattern.
std::vector<double> frame_spectrum(const FilterBank& fb) {
  const auto gamma = normalized_spectrum(*fb.graph);
  const int k = fb.spec.k;
  std::vector<double> lam;
  lam.reserve(gamma.size());
  for (double g : gamma) {
    double plus = 1.0, minus = 1.0;
    for (double b : fb.spec.betas) {
      plus *= std::pow((b + g) / 2.0, 2 * k);
      minus *= std::pow((b - g) / 2.0, 2 * k);
    }
    lam.push_back(0.5 * (plus + minus));
  }
  return lam;
}

}  // namespace

const char* to_string(FilterBankKind kind) {
  switch (kind) {
    case FilterBankKind::hgswt: return "hgswt";
    case FilterBankKind::hgeswt: return "hgeswt";
    case FilterBankKind::hcgeswt: return "hcgeswt";
    case FilterBankKind::normalized_path: return "path";
  }
  return "unknown";
}

FilterBankKind filterbank_kind_from_string(const std::string& s) {
  if (s == "hgswt") return FilterBankKind::hgswt;
  if (s == "hgeswt") return FilterBankKind::hgeswt;
  if (s == "hcgeswt") return FilterBankKind::hcgeswt;
  if (s == "path") return FilterBankKind::normalized_path;
  throw InputError("unknown filterbank kind '" + s + "'");
}

// ---------------------------------------------------------------------------

DownsamplePattern DownsamplePattern::standard(int n) {
  DownsamplePattern p{n, {}};
  for (int i = 0; i < n; i += 2) p.keep_lowpass.push_back(i);
  return p;
}

DownsamplePattern DownsamplePattern::minimum(int n) { return {n, {0}}; }

DownsamplePattern DownsamplePattern::all_lowpass(int n) {
  DownsamplePattern p{n, {}};
  for (int i = 0; i < n; ++i) p.keep_lowpass.push_back(i);
  return p;
}

bool DownsamplePattern::is_standard() const {
  if (n % 2 != 0 || static_cast<int>(keep_lowpass.size()) != n / 2) return false;
  for (int i = 0; i < n / 2; ++i)
    if (keep_lowpass[i] != 2 * i) return false;
  return true;
}

Eigen::VectorXd DownsamplePattern::k_diagonal() const {
  Eigen::VectorXd k = -Eigen::VectorXd::Ones(n);
  for (int i : keep_lowpass) k(i) = 1.0;
  return k;
}

std::vector<int> DownsamplePattern::complement() const {
  std::vector<bool> keep(n, false);
  for (int i : keep_lowpass) keep[i] = true;
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (!keep[i]) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------

FilterBank build_hgeswt(const CirculantGraph& g, int k, const std::vector<double>& alphas) {
  require_connected(g);
  FilterBank fb;
  fb.spec = make_spec(g, FilterBankKind::hgeswt, k, alphas);
  fb.n = g.size();
  fb.graph = g;
  fb.lp_poly = product_filter(g, fb.spec.betas, k, +1.0);
  fb.hp_poly = product_filter(g, fb.spec.betas, k, -1.0);
  fb.lp_analysis = fb.lp_poly.circulant_matrix(fb.n);
  fb.hp_analysis = fb.hp_poly.circulant_matrix(fb.n);
  fb.sampling = DownsamplePattern::standard(fb.n);
  return fb;
}

FilterBank build_hgswt(const CirculantGraph& g, int k) {
  FilterBank fb = build_hgeswt(g, k, {0.0});
  fb.spec.kind = FilterBankKind::hgswt;
  fb.spec.betas = {1.0};
  return fb;
}

std::vector<std::pair<std::complex<double>, std::complex<double>>> opposing_roots(
    const CirculantGraph& g, const std::vector<double>& betas, double tol) {
  std::vector<std::pair<std::complex<double>, std::complex<double>>> out;
  std::vector<RepresenterPolynomial> factors;
  for (double b : betas) factors.push_back(base_factor(g, b, -1.0).trimmed());

  for (const auto& f : factors) {
    if (f.degree() >= 1 && f.coeffs().back() == 0.0) out.emplace_back(0.0, 0.0);
  }
  for (const auto& f : factors) {
    if (f.degree() < 1) continue;
    for (const auto& r : polynomial_roots(f.to_polynomial())) {
      if (std::abs(r) < tol) {
        out.emplace_back(0.0, 0.0);
        continue;
      }
      const double rad = std::max(std::abs(r), 1.0 / std::abs(r));
      for (const auto& h : factors) {
        if (h.degree() < 1) continue;
        double scale = 0.0;
        for (int j = 0; j <= h.degree(); ++j) scale += std::abs(h[j]) * std::pow(rad, j);
        if (std::abs(h.evaluate(-r)) <= tol * scale) {
          out.emplace_back(r, -r);
          break;
        }
      }
    }
  }
  return out;
}

FilterBank build_hcgeswt(const CirculantGraph& g, int k, const std::vector<double>& alphas) {
  require_connected(g);
  if (g.size() % 2 != 0)
    throw PreconditionError("complementary filterbank needs an even vertex count");
  FilterBank fb;
  fb.spec = make_spec(g, FilterBankKind::hcgeswt, k, alphas);
  fb.n = g.size();
  fb.graph = g;
  fb.sampling = DownsamplePattern::standard(fb.n);

  const auto opp = opposing_roots(g, fb.spec.betas);
  if (!opp.empty()) {
    std::ostringstream os;
    os << "high-pass representer violates the Bezout condition: ";
    const auto& [r1, r2] = opp.front();
    if (r1 == 0.0 && r2 == 0.0) {
      os << "zero root";
    } else {
      os << "opposing roots " << r1 << " and " << r2;
    }
    throw InfeasibleError(os.str());
  }

  fb.hp_poly = product_filter(g, fb.spec.betas, k, -1.0);
  const RepresenterPolynomial g0 = fb.hp_poly.modulated();

  RepresenterPolynomial spline = RepresenterPolynomial::constant(1.0);
  for (double a : alphas) spline = spline * RepresenterPolynomial({2.0 * std::cos(a), 1.0}).pow(k);

  // Solve for symmetric R with P = spline * g0 * R satisfying P(z) + P(-z) = 2,
  // i.e. p_0 = 1 and p_{2m} = 0, at the smallest degree that admits a solution.
  const RepresenterPolynomial q = spline * g0;
  const int f = q.degree();
  auto qc = [&](int t) { return q[std::abs(t)]; };
  bool solved = false;
  for (int D = 0; D <= f + 1 && !solved; ++D) {
    const int rows = 1 + (f + D) / 2;
    Eigen::MatrixXd m(rows, D + 1);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(rows);
    rhs(0) = 1.0;
    for (int e = 0; e < rows; ++e) {
      const int j = 2 * e;
      m(e, 0) = qc(j);
      for (int i = 1; i <= D; ++i) m(e, i) = qc(j - i) + qc(j + i);
    }
    const Eigen::VectorXd r = m.completeOrthogonalDecomposition().solve(rhs);
    const double res = (m * r - rhs).lpNorm<Eigen::Infinity>();
    if (res < 1e-10) {
      fb.r_poly = RepresenterPolynomial(std::vector<double>(r.data(), r.data() + r.size()));
      solved = true;
    }
  }
  if (!solved)
    throw InfeasibleError("no complementary low-pass filter satisfies the half-band condition");

  fb.lp_poly = spline * fb.r_poly;
  fb.lp_analysis = fb.lp_poly.circulant_matrix(fb.n);
  fb.hp_analysis = fb.hp_poly.circulant_matrix(fb.n);

  // synthesis pair before normalization: H~_LP(z) = H_HP(-z), H~_HP(z) = H_LP(-z)
  const Eigen::MatrixXd s0 = g0.circulant_matrix(fb.n);
  const Eigen::MatrixXd s1 = fb.lp_poly.modulated().circulant_matrix(fb.n);
  const Eigen::VectorXd kd = fb.sampling.k_diagonal();
  const Eigen::VectorXd plus = 0.5 * (Eigen::VectorXd::Ones(fb.n) + kd);
  const Eigen::VectorXd minus = 0.5 * (Eigen::VectorXd::Ones(fb.n) - kd);
  const Eigen::MatrixXd x1 = s0.transpose() * plus.asDiagonal() * fb.lp_analysis;
  const Eigen::MatrixXd x2 = s1.transpose() * minus.asDiagonal() * fb.hp_analysis;
  Eigen::MatrixXd sys(fb.n * fb.n, 2);
  sys.col(0) = x1.reshaped();
  sys.col(1) = x2.reshaped();
  const Eigen::VectorXd id = Eigen::MatrixXd::Identity(fb.n, fb.n).reshaped();
  const Eigen::Vector2d c = sys.colPivHouseholderQr().solve(id);
  fb.c1 = c(0);
  fb.c2 = c(1);
  fb.lp_syn_poly = g0 * fb.c1;
  fb.hp_syn_poly = fb.lp_poly.modulated() * fb.c2;
  fb.lp_synthesis = fb.c1 * s0;
  fb.hp_synthesis = fb.c2 * s1;
  return fb;
}

FilterBank build_path_hgswt(const PathGraph& g, int k) {
  if (k < 1) throw PreconditionError("filter half-order k must be >= 1");
  const int n = g.size();
  FilterBank fb;
  fb.spec = {FilterBankKind::normalized_path, k, {0.0}, {1.0}};
  fb.n = n;
  const Eigen::MatrixXd a = adjacency_matrix(g);
  Eigen::VectorXd dinv = a.rowwise().sum();
  for (int i = 0; i < n; ++i) dinv(i) = dinv(i) > 0 ? 1.0 / std::sqrt(dinv(i)) : 0.0;
  const Eigen::MatrixXd an = dinv.asDiagonal() * a * dinv.asDiagonal();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd lp1 = 0.5 * (id + an);
  const Eigen::MatrixXd hp1 = 0.5 * (id - an);
  fb.lp_analysis = id;
  fb.hp_analysis = id;
  for (int i = 0; i < k; ++i) {
    fb.lp_analysis = fb.lp_analysis * lp1;
    fb.hp_analysis = fb.hp_analysis * hp1;
  }
  fb.sampling = DownsamplePattern::standard(n);
  return fb;
}

FilterBank build_filterbank(const CirculantGraph& g, FilterBankKind kind, int k,
                            const std::vector<double>& alphas) {
  switch (kind) {
    case FilterBankKind::hgswt: return build_hgswt(g, k);
    case FilterBankKind::hgeswt: return build_hgeswt(g, k, alphas);
    case FilterBankKind::hcgeswt: return build_hcgeswt(g, k, alphas);
    case FilterBankKind::normalized_path: return build_path_hgswt(PathGraph(g.size()), k);
  }
  throw InputError("unknown filterbank kind");
}

// ---------------------------------------------------------------------------

Eigen::MatrixXd transform_matrix(const FilterBank& fb, const DownsamplePattern& pattern) {
  if (pattern.n != fb.n) throw InputError("downsampling pattern dimension mismatch");
  Eigen::MatrixXd w = fb.hp_analysis;
  for (int i : pattern.keep_lowpass) w.row(i) = fb.lp_analysis.row(i);
  return w;
}

Eigen::MatrixXd transform_matrix(const FilterBank& fb) { return transform_matrix(fb, fb.sampling); }

Eigen::MatrixXd synthesis_matrix(const FilterBank& fb, const DownsamplePattern& pattern) {
  if (fb.has_synthesis() && pattern.is_standard() && pattern.n == fb.n) {
    Eigen::MatrixXd wt = fb.hp_synthesis;
    for (int i : pattern.keep_lowpass) wt.row(i) = fb.lp_synthesis.row(i);
    return wt.transpose();
  }
  const Eigen::MatrixXd w = transform_matrix(fb, pattern);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(w);
  lu.setThreshold(kSpecTol);
  if (!lu.isInvertible()) throw InfeasibleError("transform matrix is singular");
  return lu.inverse();
}

InvertibilityVerdict check_invertibility(const FilterBank& fb) {
  return check_invertibility(fb, fb.sampling);
}

InvertibilityVerdict check_invertibility(const FilterBank& fb, const DownsamplePattern& pattern) {
  if (pattern.n != fb.n) throw InputError("downsampling pattern dimension mismatch");
  InvertibilityVerdict v;
  if (pattern.keep_lowpass.empty()) {
    v.condition = "empty_lowpass_set";
    v.reason = "no vertex retains the low-pass component";
    v.resolved_densely = true;
    v.invertible = dense_invertible(transform_matrix(fb, pattern));
    return v;
  }

  if (!fb.graph) {
    v.condition = "dense_rank";
    v.resolved_densely = true;
    v.invertible = dense_invertible(transform_matrix(fb, pattern));
    v.reason = v.invertible ? "transform matrix has full numerical rank"
                            : "transform matrix is rank deficient";
    return v;
  }

  if (fb.spec.kind == FilterBankKind::hcgeswt) {
    v.resolved_densely = true;
    if (pattern.is_standard()) {
      const Eigen::MatrixXd r = synthesis_matrix(fb, pattern) * transform_matrix(fb, pattern) -
                                Eigen::MatrixXd::Identity(fb.n, fb.n);
      v.condition = "perfect_reconstruction";
      v.invertible = r.lpNorm<Eigen::Infinity>() < 1e-8;
      v.reason = v.invertible ? "synthesis transform inverts the analysis transform"
                              : "perfect reconstruction residual exceeds tolerance";
    } else {
      v.condition = "dense_rank";
      v.invertible = dense_invertible(transform_matrix(fb, pattern));
      v.reason = v.invertible ? "transform matrix has full numerical rank"
                              : "transform matrix is rank deficient";
    }
    return v;
  }

  const CirculantGraph& g = *fb.graph;
  const int n = g.size();
  const auto gamma = normalized_spectrum(g);
  const auto& betas = fb.spec.betas;
  const int T = static_cast<int>(betas.size());
  const int k = fb.spec.k;

  // P: positions where gamma equals some beta; Q: where gamma equals -beta.
  std::vector<std::vector<int>> P(T), Q(T);
  for (int t = 0; t < T; ++t)
    for (int p = 0; p < n; ++p) {
      if (std::abs(gamma[p] - betas[t]) <= kSpecTol) P[t].push_back(p);
      if (std::abs(gamma[p] + betas[t]) <= kSpecTol) Q[t].push_back(p);
    }

  std::set<int> pos_p, pos_q;
  for (int t = 0; t < T; ++t) {
    pos_p.insert(P[t].begin(), P[t].end());
    pos_q.insert(Q[t].begin(), Q[t].end());
  }

  const std::vector<int> kept = pattern.keep_lowpass;
  const std::vector<int> rest = pattern.complement();

  if (pattern.is_standard()) {
    for (int p : pos_p) {
      const int o = (p + n / 2) % n;
      if (p < o && pos_p.count(o)) v.conflicting_positions.emplace_back(p, o);
    }
    for (int p : pos_q) {
      const int o = (p + n / 2) % n;
      if (p < o && pos_q.count(o)) v.conflicting_positions.emplace_back(p, o);
    }
    std::sort(v.conflicting_positions.begin(), v.conflicting_positions.end());
    v.conflicting_positions.erase(
        std::unique(v.conflicting_positions.begin(), v.conflicting_positions.end()),
        v.conflicting_positions.end());
  }

  // opposing e-degrees with a parameter in the spectrum
  for (int i = 0; i < T; ++i)
    for (int j = i; j < T; ++j)
      if (std::abs(betas[i] + betas[j]) <= kSpecTol && (!P[i].empty() || !P[j].empty())) {
        v.invertible = false;
        v.condition = "opposing_betas";
        std::ostringstream os;
        if (i == j) {
          os << "parameter " << i << " has zero e-degree and 0 lies in the spectrum of A/d";
        } else {
          os << "parameters " << i << " and " << j << " have opposing e-degrees "
             << betas[i] << " and " << betas[j] << " lying in the spectrum of A/d";
        }
        if (!v.conflicting_positions.empty())
          os << "; DFT positions " << join_pairs(v.conflicting_positions)
             << " coincide on the kept vertices";
        v.reason = os.str();
        return v;
      }

  auto sign_ok = [&]() {
    if (k % 2 == 0) return true;
    int sgn = 0;
    for (double gm : gamma) {
      double f = 1.0;
      for (double b : betas) f *= std::pow(b * b - gm * gm, k);
      if (std::abs(f) <= kSpecTol) continue;
      const int s = f > 0 ? 1 : -1;
      if (sgn == 0) sgn = s;
      else if (s != sgn) return false;
    }
    return true;
  };

  bool spectral_ok = false;
  if (pos_p.empty() && pos_q.empty()) {
    if (sign_ok()) {
      v.invertible = true;
      v.condition = k % 2 == 0 ? "spectral_sufficient" : "sign_condition";
      v.reason = "no parameter matches the spectrum of A/d in magnitude";
      return v;
    }
  } else {
    // per-eigenvalue independence: a dependency is a genuine null vector
    std::map<long long, std::vector<int>> groups_p, groups_q;
    auto key = [](double x) { return std::llround(x / kSpecTol / 10.0); };
    for (int p : pos_p) groups_p[key(gamma[p])].push_back(p);
    for (int p : pos_q) groups_q[key(gamma[p])].push_back(p);
    for (const auto& [_, ps] : groups_p)
      if (!full_column_rank(eigvecs_on(n, ps, kept))) {
        v.invertible = false;
        v.condition = v.conflicting_positions.empty() ? "dependent_eigenvectors" : "aliased_eigenpair";
        v.reason = "eigenvectors of a parameter-matched eigenvalue are dependent on the low-pass set";
        if (!v.conflicting_positions.empty())
          v.reason += "; DFT positions " + join_pairs(v.conflicting_positions) +
                      " coincide on the kept vertices";
        return v;
      }
    for (const auto& [_, ps] : groups_q)
      if (!full_column_rank(eigvecs_on(n, ps, rest))) {
        v.invertible = false;
        v.condition = v.conflicting_positions.empty() ? "dependent_eigenvectors" : "aliased_eigenpair";
        v.reason = "eigenvectors of a negated parameter-matched eigenvalue are dependent on the "
                   "high-pass set";
        if (!v.conflicting_positions.empty())
          v.reason += "; DFT positions " + join_pairs(v.conflicting_positions) +
                      " coincide on the retained vertices";
        return v;
      }
    const std::vector<int> up(pos_p.begin(), pos_p.end());
    const std::vector<int> uq(pos_q.begin(), pos_q.end());
    spectral_ok = full_column_rank(eigvecs_on(n, up, kept)) &&
                  full_column_rank(eigvecs_on(n, uq, rest)) && sign_ok();
    if (spectral_ok) {
      v.invertible = true;
      v.condition = "independent_eigenvectors";
      v.reason = "parameter-matched eigenvectors stay independent after downsampling";
      return v;
    }
  }

  // inconclusive: decide exactly
  v.resolved_densely = true;
  if (is_bipartite(g) && pattern.is_standard()) {
    const auto lam = frame_spectrum(fb);
    const double mx = *std::max_element(lam.begin(), lam.end());
    const double mn = *std::min_element(lam.begin(), lam.end());
    v.condition = "bipartite_frame_bound";
    v.invertible = mn > kSpecTol * kSpecTol * mx;
    v.reason = v.invertible ? "frame bound of the bipartite transform is positive"
                            : "frame bound of the bipartite transform vanishes";
    return v;
  }
  v.condition = "dense_rank";
  v.invertible = dense_invertible(transform_matrix(fb, pattern));
  v.reason = v.invertible ? "transform matrix has full numerical rank"
                          : "transform matrix is rank deficient";
  return v;
}

double condition_number_bipartite(const FilterBank& fb) {
  if (!fb.graph || !is_bipartite(*fb.graph))
    throw PreconditionError("condition number formula needs a bipartite circulant graph");
  if (fb.spec.kind == FilterBankKind::hcgeswt)
    throw PreconditionError("condition number formula applies to the non-complementary transforms");
  const auto lam = frame_spectrum(fb);
  const double mx = *std::max_element(lam.begin(), lam.end());
  const double mn = *std::min_element(lam.begin(), lam.end());
  if (mn <= 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(mx / mn);
}

}  // namespace gfri
