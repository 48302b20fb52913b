#include "gfri/multires.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "gfri/errors.hpp"

namespace gfri {

namespace {

// Principal value in (-pi, pi].
double reduce_angle(double a) {
  double r = std::remainder(a, 2.0 * std::numbers::pi);
  if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
  return r;
}

}  // namespace

std::vector<int> MultilevelPlan::permutation() const {
  const int n = size();
  std::vector<int> perm;
  perm.reserve(n);
  const int step = 1 << levels;
  for (int m = 0; m < n / step; ++m) perm.push_back(m * step);
  for (int j = levels - 1; j >= 0; --j) {
    const int s = 1 << j;
    for (int m = 0; m < n / (2 * s); ++m) perm.push_back((2 * m + 1) * s);
  }
  return perm;
}

MultilevelPlan plan_mrt(const CirculantGraph& g, const FilterBankSpec& spec, int levels,
                        CoarseningScheme scheme) {
  if (levels < 0) throw PreconditionError("number of levels must be non-negative");
  const int n = g.size();
  if (levels > 0 && (levels >= 31 || n % (1 << levels) != 0))
    throw PreconditionError("n=" + std::to_string(n) + " is not divisible by 2^" +
                            std::to_string(levels));
  std::vector<double> alphas = spec.alphas;
  if (spec.kind == FilterBankKind::hgswt) alphas = {0.0};
  if (spec.kind == FilterBankKind::normalized_path)
    throw PreconditionError("multilevel plans are defined on circulant graphs");
  if (alphas.empty()) throw PreconditionError("at least one alpha parameter is required");

  if (levels > 0 && spec.kind != FilterBankKind::hgswt) {
    const double dil = std::ldexp(1.0, levels - 1);
    for (double a : alphas)
      if (std::abs(reduce_angle(a)) * dil >= std::numbers::pi / 2 - 1e-12)
        throw PreconditionError("parameter alpha=" + std::to_string(a) + " dilated over " +
                                std::to_string(levels) + " levels reaches pi/2 or beyond");
  }

  MultilevelPlan plan{g, spec.kind, spec.k, alphas, levels, scheme, {}};
  CirculantGraph cur = g;
  for (int j = 0; j < levels; ++j) {
    if (j > 0) {
      const CoarseningResult cr = coarsen(cur, scheme);
      if (!cr.graph)
        throw PreconditionError("coarsened graph at level " + std::to_string(j) +
                                " is not circulant");
      cur = *cr.graph;
    }
    std::vector<double> aj;
    for (double a : alphas) aj.push_back(std::ldexp(a, j));
    FilterBank fb = [&] {
      try {
        return build_filterbank(cur, spec.kind, spec.k, aj);
      } catch (const InfeasibleError& e) {
        throw InfeasibleError("level " + std::to_string(j) + ": " + e.what());
      }
    }();
    const DownsamplePattern pattern = DownsamplePattern::standard(cur.size());
    InvertibilityVerdict verdict = check_invertibility(fb, pattern);
    if (!verdict.invertible)
      throw InfeasibleError("level " + std::to_string(j) + " filterbank is not invertible (" +
                            verdict.condition + "): " + verdict.reason);
    Eigen::MatrixXd w = transform_matrix(fb, pattern);
    Eigen::MatrixXd s = synthesis_matrix(fb, pattern);
    plan.per_level.push_back(
        LevelPlan{cur, std::move(fb), pattern, std::move(verdict), std::move(w), std::move(s)});
  }
  return plan;
}

// ---------------------------------------------------------------------------

Signal WaveletCoefficients::stacked() const {
  Eigen::Index total = lowpass.size();
  for (const auto& h : highpass) total += h.size();
  Signal out(total);
  Eigen::Index pos = 0;
  out.segment(pos, lowpass.size()) = lowpass;
  pos += lowpass.size();
  for (auto it = highpass.rbegin(); it != highpass.rend(); ++it) {
    out.segment(pos, it->size()) = *it;
    pos += it->size();
  }
  return out;
}

WaveletCoefficients WaveletCoefficients::from_stacked(const Signal& v, int n, int levels) {
  if (v.size() != n) throw InputError("stacked coefficient vector has the wrong length");
  WaveletCoefficients c;
  const int m = n >> levels;
  c.lowpass = v.head(m);
  c.highpass.resize(levels);
  Eigen::Index pos = m;
  for (int j = levels - 1; j >= 0; --j) {
    const int len = n >> (j + 1);
    c.highpass[j] = v.segment(pos, len);
    pos += len;
  }
  return c;
}

std::vector<int> WaveletCoefficients::band_labels(int n, int levels) {
  std::vector<int> out(n >> levels, 0);
  for (int j = levels - 1; j >= 0; --j) out.insert(out.end(), n >> (j + 1), j + 1);
  return out;
}

int WaveletCoefficients::count_nonzero(double threshold) const {
  const Signal s = stacked();
  int c = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (std::abs(s(i)) > threshold) ++c;
  return c;
}

WaveletCoefficients analyze(const Signal& x, const MultilevelPlan& plan) {
  if (x.size() != plan.size())
    throw InputError("signal length " + std::to_string(x.size()) + " does not match graph size " +
                     std::to_string(plan.size()));
  WaveletCoefficients c;
  Signal cur = x;
  for (const auto& lvl : plan.per_level) {
    const Signal y = lvl.analysis * cur;
    const Eigen::Index h = y.size() / 2;
    Signal lo(h), hi(h);
    for (Eigen::Index i = 0; i < h; ++i) {
      lo(i) = y(2 * i);
      hi(i) = y(2 * i + 1);
    }
    c.highpass.push_back(std::move(hi));
    cur = std::move(lo);
  }
  c.lowpass = std::move(cur);
  return c;
}

Signal synthesize(const WaveletCoefficients& c, const MultilevelPlan& plan) {
  if (static_cast<int>(c.highpass.size()) != plan.levels)
    throw InputError("coefficient level count does not match the plan");
  if (c.lowpass.size() != (plan.size() >> plan.levels))
    throw InputError("low-pass block has the wrong length");
  Signal cur = c.lowpass;
  for (int j = plan.levels - 1; j >= 0; --j) {
    const auto& hi = c.highpass[j];
    if (hi.size() != cur.size()) throw InputError("high-pass band has the wrong length");
    Signal y(2 * cur.size());
    for (Eigen::Index i = 0; i < cur.size(); ++i) {
      y(2 * i) = cur(i);
      y(2 * i + 1) = hi(i);
    }
    cur = plan.per_level[j].synthesis * y;
  }
  return cur;
}

Eigen::MatrixXcd multilevel_matrix(const MultilevelPlan& plan) {
  const int n = plan.size();
  Eigen::MatrixXcd m(n, n);
  for (int c = 0; c < n; ++c) {
    Signal e = Signal::Zero(n);
    e(c) = 1.0;
    m.col(c) = analyze(e, plan).stacked();
  }
  return m;
}

// ---------------------------------------------------------------------------

int simulated_sparsity(int n, int B, int T_lp, int j) {
  if (j < 0 || (j > 0 && n % (1 << j) != 0))
    throw PreconditionError("n must be divisible by 2^j");
  std::set<int> dirty;
  int count = 0;
  int m = n;
  // an index window [i-w, i+w] sees the wrap-around break or a dirty sample
  auto touched = [&](int i, int w) {
    if (i - w < 0 || i + w > m - 1) return true;
    auto it = dirty.lower_bound(i - w);
    return it != dirty.end() && *it <= i + w;
  };
  for (int l = 0; l < j; ++l) {
    std::set<int> next;
    for (int i = 0; i < m; ++i) {
      if (i % 2 == 1 && touched(i, B)) ++count;
      if (i % 2 == 0 && touched(i, T_lp)) next.insert(i / 2);
    }
    dirty = std::move(next);
    m /= 2;
  }
  return count + m;
}

SparsityPrediction predicted_sparsity(int n, int B, int T_lp, int j, SparsityVariant variant) {
  if (n < 1 || B < 0 || j < 0) throw PreconditionError("invalid sparsity prediction arguments");
  SparsityPrediction p;
  switch (variant) {
    case SparsityVariant::minimum_iii: {
      p.closed_form = 2.0 * B;
      p.approximate = j != 0 || 2 * B >= n;
      p.simulated = std::min(2 * B, n);
      break;
    }
    case SparsityVariant::hgswt_i: {
      p.closed_form = std::ldexp(static_cast<double>(n), -j) +
                      (j == 0 ? 0.0 : B * (2.0 * (j - 1) + std::ldexp(1.0, 1 - j)));
      bool ok = j == 0 || B % (1 << (j - 1)) == 0;
      for (int l = 0; l < j && ok; ++l) {
        double s = 0.0;
        for (int q = 0; q <= l; ++q) s += std::ldexp(static_cast<double>(B), -q);
        ok = s <= std::ldexp(static_cast<double>(n), -(l + 1));
      }
      p.approximate = !ok;
      p.simulated = simulated_sparsity(n, B, B, j);
      break;
    }
    case SparsityVariant::hcgswt_ii: {
      p.closed_form = std::ldexp(static_cast<double>(n), -j) +
                      (j == 0 ? 0.0
                              : static_cast<double>(B) * j +
                                    T_lp * (j + std::ldexp(1.0, 1 - j) - 2.0));
      bool ok = j == 0 || T_lp % (1 << (j - 1)) == 0;
      for (int l = 0; l < j && ok; ++l) {
        double s = B;
        for (int q = 1; q <= l; ++q) s += std::ldexp(static_cast<double>(T_lp), -q);
        ok = s <= std::ldexp(static_cast<double>(n), -(l + 1));
      }
      p.approximate = !ok;
      p.simulated = simulated_sparsity(n, B, T_lp, j);
      break;
    }
  }
  const double r = std::round(p.closed_form);
  if (std::abs(r - p.closed_form) > 1e-12) p.approximate = true;
  p.K = static_cast<int>(r);
  return p;
}

}  // namespace gfri
