// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "helpers.hpp"

#include "gfri/coarsening.hpp"
#include "gfri/errors.hpp"
#include "gfri/filterbank.hpp"
#include "gfri/linalg.hpp"
#include "gfri/multires.hpp"
#include "gfri/products.hpp"
#include "gfri/sampling.hpp"
#include "gfri/spectral.hpp"

using namespace gfri;
using gfri::test::max_abs;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

template <typename... Args>
std::string str(const Args&... args) {
  std::ostringstream os;
  os.precision(6);
  (os << ... << args);
  return os.str();
}

// Fixed graph corpus: named families plus seeded random circulants.
std::vector<CirculantGraph> corpus() {
  std::vector<CirculantGraph> out;
  const std::vector<std::vector<int>> families{{1}, {1, 2}, {1, 3}, {1, 2, 4}, {1, 3, 5}, {2, 3}};
  for (int n : {8, 12, 16, 24, 32, 64, 128})
    for (const auto& f : families)
      if (2 * f.back() < n) out.push_back(CirculantGraph::unweighted(n, f));
  out.push_back(CirculantGraph(8, {{1, 1.0}, {4, 0.5}}));
  out.push_back(CirculantGraph(16, {{1, 0.5}, {3, 2.0}, {8, 1.0}}));
  SplitMix64 rng(20240601);
  for (int n : {8, 10, 16, 20, 32, 48, 64, 128})
    for (int t = 0; t < 4; ++t) out.push_back(test::random_circulant(rng, n, std::min(8, (n - 1) / 2)));
  return out;
}

SparseSignal random_sparse(SplitMix64& rng, int n, int K) {
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  for (int i = 0; i < K; ++i) std::swap(idx[i], idx[i + rng.below(n - i)]);
  std::vector<std::complex<double>> amps;
  for (int i = 0; i < K; ++i)
    amps.push_back(std::polar(rng.uniform(0.2, 2.0), rng.uniform(0.0, 2 * kPi)));
  return SparseSignal::make(n, std::vector<int>(idx.begin(), idx.begin() + K), amps);
}

double amplitude_error(const SparseSignal& a, const SparseSignal& b) {
  double e = 0;
  for (int i = 0; i < a.K(); ++i) e = std::max(e, std::abs(a.amplitudes[i] - b.amplitudes[i]));
  return e;
}

Signal filt(const Eigen::MatrixXd& m, const Signal& x) { return m.cast<std::complex<double>>() * x; }

double max_outside(const Signal& y, const std::vector<int>& border) {
  const std::set<int> b(border.begin(), border.end());
  double m = 0;
  for (Eigen::Index i = 0; i < y.size(); ++i)
    if (!b.count(static_cast<int>(i))) m = std::max(m, std::abs(y(i)));
  return m;
}

bool is_circulant(const Eigen::MatrixXd& m, double tol) {
  const auto n = m.rows();
  for (Eigen::Index i = 1; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (std::abs(m(i, j) - m(0, (j - i + n) % n)) > tol) return false;
  return true;
}

Signal polynomial(SplitMix64& rng, int n, int degree) {
  std::vector<double> c(degree + 1);
  for (auto& v : c) v = rng.uniform(-1.0, 1.0);
  c[degree] = rng.uniform() < 0.5 ? -1.0 : 1.0;
  Signal x(n);
  for (int t = 0; t < n; ++t) {
    double s = 0, p = 1;
    for (double ci : c) {
      s += ci * p;
      p *= static_cast<double>(t) / n;
    }
    x(t) = s;
  }
  return x;
}

FilterBankSpec hgswt_spec(int k) { return {FilterBankKind::hgswt, k, {0.0}, {1.0}}; }

// ---------------------------------------------------------------------------

Outcome c1_prony() {
  Outcome o;
  SplitMix64 rng(1);
  const auto t0 = std::chrono::steady_clock::now();
  int trials = 0;
  double worst = 0;
  for (int n : {8, 16, 32, 64, 128})
    for (int K = 1; K <= n / 4; ++K)
      for (int t = 0; t < 100; ++t) {
        const auto x = random_sparse(rng, n, K);
        ++trials;
        try {
          const auto r = prony_reconstruct(sample_gft(x, 2 * K), K);
          const bool same = r.support == x.support;
          o.require(same, str("support mismatch n=", n, " K=", K, " trial ", t));
          if (same) {
            const double e = amplitude_error(r, x);
            worst = std::max(worst, e);
            o.require(e < 1e-8, str("amplitude error ", e, " n=", n, " K=", K));
          }
        } catch (const Error& e) {
          o.require(false, str("n=", n, " K=", K, ": ", e.what()));
        }
      }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(secs < 60, str("runtime ", secs, " s"));
  o.detail = str(trials, " trials, max amplitude error ", worst, ", ", secs, " s");
  return o;
}

Outcome c2_pipeline_example() {
  Outcome o;
  const auto g = CirculantGraph::unweighted(128, {1, 3, 5});
  const int K = 3, M = 2 * K;
  const auto lb = max_levels(128, M, false);
  o.require(lb.J == 3, str("J=", lb.J));
  o.require(lb.M_tilde == 16, str("M_tilde=", lb.M_tilde));
  const auto f = factorize_gft(g, M, lb.J);
  o.require(f.residual < 1e-8, str("factorization residual ", f.residual));
  o.require(f.C.cols() == 16, "coarse dimension");
  SplitMix64 rng(2);
  double worst = 0;
  for (int t = 0; t < 50; ++t) {
    const auto x = random_sparse(rng, 128, K);
    const double d = max_abs(sample_via_pipeline(x.dense(), f).samples.y - sample_gft(x, M).y);
    worst = std::max(worst, d);
  }
  o.require(worst < 1e-8, str("pipeline deviation ", worst));
  o.detail = str("M=", M, " J=", lb.J, " M~=", lb.M_tilde, " residual ", f.residual,
                 " pipeline deviation ", worst);
  return o;
}

Outcome c3_noninvertible_example() {
  Outcome o;
  const auto g = CirculantGraph::unweighted(64, {1, 3, 5});
  const auto fb = build_hgeswt(g, 2, {2 * kPi * 15 / 64, 2 * kPi * 17 / 64});
  const double b0 = std::round(fb.spec.betas[0] * 1000) / 1000;
  const double b1 = std::round(fb.spec.betas[1] * 1000) / 1000;
  o.require(b0 == 0.093 && b1 == -0.093, str("betas ", fb.spec.betas[0], ", ", fb.spec.betas[1]));
  const auto v = check_invertibility(fb);
  o.require(!v.invertible && v.condition == "opposing_betas", "verdict " + v.condition);
  std::set<int> positions;
  for (const auto& [a, b] : v.conflicting_positions) {
    positions.insert(a);
    positions.insert(b);
  }
  o.require(positions.count(47) && positions.count(49), "positions 47/49 not flagged");
  const double smin = min_singular_value(transform_matrix(fb));
  o.require(smin < 1e-10, str("smallest singular value ", smin));
  o.detail = str("betas ", b0, "/", b1, ", condition ", v.condition, ", sigma_min(W) ", smin);
  return o;
}

Outcome c4_vanishing_moments() {
  Outcome o;
  SplitMix64 rng(4);
  double worst_border = 0, worst_exact = 0;
  for (int t = 0; t < 20; ++t) {
    const int n = 8 + static_cast<int>(rng.below(57));
    const auto g = test::random_circulant(rng, n);
    const auto border = border_indices(n, g.bandwidth());
    Signal lin(n);
    const double a0 = rng.uniform(-1, 1), a1 = rng.uniform(-1, 1);
    for (int i = 0; i < n; ++i) lin(i) = a0 + a1 * i;
    const double dl = max_outside(filt(laplacian(g), lin), border);
    worst_border = std::max(worst_border, dl);
    o.require(dl < 1e-10, str("L on linear, n=", n, ": ", dl));

    // off-grid parameter: zero outside the border
    const double al = rng.uniform(0.05, kPi - 0.05);
    const Eigen::MatrixXd le = e_graph_laplacian(g, al);
    for (double s : {al, -al}) {
      const double d = max_outside(filt(le, test::exponential_signal(n, s)), border);
      worst_border = std::max(worst_border, d);
      o.require(d < 1e-10, str("e-Laplacian border, n=", n, " alpha=", s, ": ", d));
    }
    // on-grid parameter: zero everywhere
    const double ag = 2 * kPi * static_cast<double>(rng.below(n)) / n;
    const Eigen::MatrixXd lg = e_graph_laplacian(g, ag);
    for (double s : {ag, -ag}) {
      const double d = max_abs(filt(lg, test::exponential_signal(n, s)));
      worst_exact = std::max(worst_exact, d);
      o.require(d < 1e-10, str("e-Laplacian exact, n=", n, " alpha=", s, ": ", d));
    }
  }
  o.detail = str("20 graphs, outside-border max ", worst_border, ", on-grid max ", worst_exact);
  return o;
}

Outcome c5_condition_formula() {
  Outcome o;
  const double c4 = condition_number_bipartite(build_hgswt(CirculantGraph::unweighted(4, {1}), 1));
  o.require(std::abs(c4 - std::sqrt(2.0)) < 1e-12, str("cycle n=4: ", c4));
  int compared = 0, singular = 0;
  double worst = 0;
  for (const auto& g : corpus()) {
    if (!is_bipartite(g) || g.size() > 64) continue;
    const int n = g.size();
    std::vector<FilterBank> fbs;
    for (int k = 1; k <= 2; ++k) {
      fbs.push_back(build_hgswt(g, k));
      for (int q : {1, 3}) fbs.push_back(build_hgeswt(g, k, {2 * kPi * q / n}));
      fbs.push_back(build_hgeswt(g, k, {0.0, 2 * kPi / n}));
    }
    for (const auto& fb : fbs) {
      const double formula = condition_number_bipartite(fb);
      const Eigen::MatrixXd w = transform_matrix(fb);
      if (!check_invertibility(fb).invertible) {
        ++singular;
        o.require(!std::isfinite(formula) || formula > 1e12,
                  str("formula finite on a singular W, n=", n, ": ", formula));
        continue;
      }
      const double dense = condition_number(w);
      const double rel = std::abs(formula - dense) / dense;
      worst = std::max(worst, rel);
      ++compared;
      o.require(rel < 1e-8, str("n=", n, " k=", fb.spec.k, " formula ", formula, " dense ", dense));
    }
  }
  o.detail = str("cycle4 ", c4, "; ", compared, " bipartite filterbanks, max relative gap ", worst,
                 "; ", singular, " singular cases consistent");
  return o;
}

Outcome c6_sparsity() {
  Outcome o;
  SplitMix64 rng(6);
  int checked = 0, skipped = 0;
  for (const auto& g : corpus()) {
    const int n = g.size();
    if (n != 32 && n != 64 && n != 128) continue;
    for (int k = 1; k <= 2; ++k)
      for (int j = 1; j <= 3; ++j) {
        const int B = k * g.bandwidth();
        const auto pred = predicted_sparsity(n, B, 0, j, SparsityVariant::hgswt_i);
        if (pred.approximate) {
          ++skipped;
          continue;
        }
        const auto plan = plan_mrt(g, hgswt_spec(k), j, CoarseningScheme::same_generating_set);
        for (int deg = 1; deg <= 2 * k - 1; ++deg) {
          const Signal x = polynomial(rng, n, deg);
          const int m = analyze(x, plan).count_nonzero(1e-9 * x.cwiseAbs().maxCoeff());
          ++checked;
          o.require(m == pred.K, str("n=", n, " S-bandwidth ", g.bandwidth(), " k=", k, " j=", j,
                                     " deg=", deg, ": measured ", m, " predicted ", pred.K));
        }
        // constants carry no border and sit at the periodic minimum
        const Signal c = Signal::Constant(n, 1.0);
        o.require(analyze(c, plan).count_nonzero(1e-9) == (n >> j), "constant signal count");
      }
  }
  o.require(checked > 0, "no configuration met the preconditions");

  // minimum pattern at j = 0
  int minimum = 0;
  for (const auto& g : corpus()) {
    const int n = g.size();
    for (int k = 1; k <= 2; ++k) {
      const int B = k * g.bandwidth();
      if (2 * B >= n) continue;
      const auto fb = build_hgswt(g, k);
      const Eigen::MatrixXd w = transform_matrix(fb, DownsamplePattern::minimum(n));
      for (int deg = 1; deg <= 2 * k - 1; ++deg) {
        const Signal x = polynomial(rng, n, deg);
        const Signal y = filt(w, x);
        const int m = static_cast<int>((y.array().abs() > 1e-9 * x.cwiseAbs().maxCoeff()).count());
        ++minimum;
        o.require(m == predicted_sparsity(n, B, 0, 0, SparsityVariant::minimum_iii).K,
                  str("minimum pattern n=", n, " B=", B, " deg=", deg, ": ", m, " != ", 2 * B));
      }
    }
  }
  o.detail = str(checked, " polynomial signals match the closed form (", skipped,
                 " configurations outside the preconditions), ", minimum,
                 " minimum-pattern signals with 2B non-zeros");
  return o;
}

Outcome c7_spectral_reduce() {
  Outcome o;
  int checked = 0;
  double worst = 0;
  for (const auto& g : corpus()) {
    const int n = g.size();
    for (int j = 1; j <= 3; ++j) {
      if (n % (1 << j) != 0 || 2 * g.bandwidth() >= (n >> j)) continue;
      const auto r = spectral_reduce(g, j);
      ++checked;
      o.require(test::same_graph(r, CirculantGraph(n >> j, g.generators()), 1e-10),
                str("generating set changed, n=", n, " j=", j));
      const auto lg = adjacency_polynomial(g).eigenvalues(n);
      const auto lr = adjacency_polynomial(r).eigenvalues(n >> j);
      for (int i = 0; i < (n >> j); ++i) worst = std::max(worst, std::abs(lr[i] - lg[i << j]));
    }
  }
  o.require(worst < 1e-10, str("eigenvalue gap ", worst));
  o.detail = str(checked, " reductions, max eigenvalue gap ", worst);
  return o;
}

Outcome c8_kron() {
  Outcome o;
  Eigen::Matrix2d half, cyc;
  half << 0.5, -0.5, -0.5, 0.5;
  cyc << 1, -1, -1, 1;
  const Eigen::MatrixXd p = kron_reduce(laplacian(PathGraph(4)), {0, 2});
  const Eigen::MatrixXd c = kron_reduce(laplacian(CirculantGraph::unweighted(4, {1})), {0, 2});
  o.require(p == Eigen::MatrixXd(half), str("path reduction max error ", max_abs(p - half)));
  o.require(c == Eigen::MatrixXd(cyc), str("cycle reduction max error ", max_abs(c - cyc)));
  int checked = 0;
  for (const auto& g : corpus()) {
    if (g.size() % 2 != 0 || g.size() > 64) continue;
    std::vector<int> evens;
    for (int i = 0; i < g.size(); i += 2) evens.push_back(i);
    const Eigen::MatrixXd r = kron_reduce(laplacian(g), evens);
    ++checked;
    o.require(is_circulant(r, 1e-10), str("non-circulant Kron output, n=", g.size()));
  }
  o.detail = str("path and cycle examples exact; ", checked, " circulant reductions pass the shift test");
  return o;
}

Outcome c9_dct() {
  Outcome o;
  SplitMix64 rng(9);
  int trials = 0;
  double worst = 0;
  for (int n : {8, 16, 32, 64})
    for (int K = 1; K <= 4 && 4 * K <= n; ++K)
      for (int t = 0; t < 100; ++t) {
        const auto x = random_sparse(rng, n, K);
        ++trials;
        try {
          const auto r = prony_dct_reconstruct(sample_dct(x, 4 * K), K);
          const bool same = r.support == x.support;
          o.require(same, str("support mismatch n=", n, " K=", K));
          if (same) {
            const double e = amplitude_error(r, x);
            worst = std::max(worst, e);
            o.require(e < 1e-8, str("amplitude error ", e, " n=", n, " K=", K));
          }
        } catch (const Error& e) {
          o.require(false, str("n=", n, " K=", K, ": ", e.what()));
        }
      }
  o.detail = str(trials, " trials, max amplitude error ", worst);
  return o;
}

Outcome c10_perfect_reconstruction() {
  Outcome o;
  SplitMix64 rng(10);
  int verdicts = 0, singular = 0, round_trips = 0, no_plan = 0;
  double worst = 0;
  for (const auto& g : corpus()) {
    const int n = g.size();
    if (n > 64 || n % 2 != 0) continue;
    std::vector<FilterBankSpec> specs;
    for (int k = 1; k <= 2; ++k) {
      specs.push_back(hgswt_spec(k));
      for (int q : {1, 2, 3, n / 4})
        specs.push_back({FilterBankKind::hgeswt, k, {2 * kPi * q / n}, {}});
      specs.push_back({FilterBankKind::hgeswt, k, {2 * kPi / n, 2 * kPi * (n / 2 - 1) / n}, {}});
      if (!is_bipartite(g)) specs.push_back({FilterBankKind::hcgeswt, k, {0.0}, {}});
    }
    for (const auto& spec : specs) {
      FilterBank fb;
      try {
        fb = build_filterbank(g, spec.kind, spec.k, spec.alphas);
      } catch (const InfeasibleError&) {
        continue;  // no complementary filter exists
      }
      const auto v = check_invertibility(fb);
      const bool full = numerical_rank(transform_matrix(fb)) == n;
      ++verdicts;
      if (!v.invertible) ++singular;
      o.require(v.invertible == full, str("verdict ", v.condition, " vs dense rank, n=", n,
                                          " kind ", to_string(spec.kind)));
      if (!v.invertible) continue;
      for (int levels = 1; levels <= 2; ++levels) {
        if (n % (1 << levels) != 0) continue;
        std::optional<MultilevelPlan> plan;
        try {
          plan = plan_mrt(g, spec, levels, CoarseningScheme::spectral);
        } catch (const PreconditionError&) {
          ++no_plan;  // dilated parameter or coarse bandwidth out of range
          continue;
        } catch (const InfeasibleError&) {
          ++no_plan;  // a coarser level is singular
          continue;
        }
        Signal x = test::random_signal(rng, n);
        x /= x.norm();
        const double e = max_abs(synthesize(analyze(x, *plan), *plan) - x);
        worst = std::max(worst, e);
        ++round_trips;
        o.require(e < 1e-8, str("round trip error ", e, " n=", n));
      }
    }
  }
  o.detail = str(verdicts, " verdicts match dense rank (", singular, " singular), ", round_trips,
                 " round trips, max error ", worst, "; ", no_plan,
                 " multilevel plans rejected by their preconditions");
  return o;
}

Outcome c11_kronecker_approx() {
  Outcome o;
  SplitMix64 rng(11);
  int checked = 0;
  double worst = 0;
  for (int t = 0; t < 40; ++t) {
    const int n1 = 3 + static_cast<int>(rng.below(6));
    const int n2 = 3 + static_cast<int>(rng.below(6));
    const auto g1 = test::random_circulant(rng, n1);
    const auto g2 = test::random_circulant(rng, n2);
    const Eigen::MatrixXd a1 = adjacency_matrix(g1), a2 = adjacency_matrix(g2);
    const Eigen::MatrixXd a = Eigen::kroneckerProduct(a1, a2);
    const auto r = nearest_kronecker_circulant(a, n1, n2);
    ++checked;
    worst = std::max(worst, r.residual);
    o.require(r.residual < 1e-8, str("residual ", r.residual, " n1=", n1, " n2=", n2));
    // canonical scale: unit-norm first factor
    const double s = a1.norm();
    o.require(max_abs(r.A1 - a1 / s) < 1e-8 && max_abs(r.A2 - a2 * s) < 1e-8,
              str("factors differ after canonicalization, n1=", n1, " n2=", n2));
    const Eigen::VectorXd row1 = r.A1.row(0).transpose() * s;
    const Eigen::VectorXd row2 = r.A2.row(0).transpose() / s;
    o.require(test::same_graph(graph_from_first_row(row1), g1, 1e-8) &&
                  test::same_graph(graph_from_first_row(row2), g2, 1e-8),
              str("generating sets differ, n1=", n1, " n2=", n2));
    for (std::size_t i = 1; i < r.history.size(); ++i)
      o.require(r.history[i] <= r.history[i - 1] * (1 + 1e-12) + 1e-14,
                str("residual increased at iteration ", i));
  }
  o.detail = str(checked, " exact products, max residual ", worst);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"prony_reconstruction", c1_prony},
      {"pipeline_example_n128", c2_pipeline_example},
      {"noninvertible_example_n64", c3_noninvertible_example},
      {"vanishing_moments", c4_vanishing_moments},
      {"bipartite_condition_number", c5_condition_formula},
      {"multiresolution_sparsity", c6_sparsity},
      {"spectral_reduction", c7_spectral_reduce},
      {"kron_reduction", c8_kron},
      {"path_dct_recovery", c9_dct},
      {"perfect_reconstruction", c10_perfect_reconstruction},
      {"kronecker_approximation", c11_kronecker_approx},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    for (const auto& f : o.failures) std::printf("       %s\n", f.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
