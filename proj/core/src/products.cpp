#include "gfri/products.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "gfri/errors.hpp"

namespace gfri {

const char* to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::kronecker: return "kronecker";
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::strong: return "strong";
    case ProductKind::lexicographic: return "lexicographic";
  }
  return "unknown";
}

ProductKind product_kind_from_string(const std::string& s) {
  if (s == "kronecker" || s == "tensor") return ProductKind::kronecker;
  if (s == "cartesian") return ProductKind::cartesian;
  if (s == "strong") return ProductKind::strong;
  if (s == "lexicographic") return ProductKind::lexicographic;
  throw InputError("unknown product kind '" + s + "'");
}

ProductGraph graph_product(const Eigen::MatrixXd& a1, const Eigen::MatrixXd& a2,
                           ProductKind kind) {
  if (a1.rows() != a1.cols() || a2.rows() != a2.cols())
    throw InputError("graph product needs square adjacency matrices");
  const auto n1 = a1.rows();
  const auto n2 = a2.rows();
  const Eigen::MatrixXd i1 = Eigen::MatrixXd::Identity(n1, n1);
  const Eigen::MatrixXd i2 = Eigen::MatrixXd::Identity(n2, n2);
  ProductGraph p{kind, static_cast<int>(n1), static_cast<int>(n2), {}};
  const Eigen::MatrixXd kr = Eigen::kroneckerProduct(a1, a2);
  const Eigen::MatrixXd ca = Eigen::kroneckerProduct(a1, i2) + Eigen::kroneckerProduct(i1, a2);
  switch (kind) {
    case ProductKind::kronecker: p.adjacency = kr; break;
    case ProductKind::cartesian: p.adjacency = ca; break;
    case ProductKind::strong: p.adjacency = kr + ca; break;
    case ProductKind::lexicographic:
      p.adjacency = Eigen::kroneckerProduct(a1, Eigen::MatrixXd::Ones(n2, n2)) +
                    Eigen::kroneckerProduct(i1, a2);
      break;
  }
  return p;
}

// ---------------------------------------------------------------------------

Signal kron_vec(const Signal& x1, const Signal& x2) {
  Signal out(x1.size() * x2.size());
  for (Eigen::Index i = 0; i < x1.size(); ++i) out.segment(i * x2.size(), x2.size()) = x1(i) * x2;
  return out;
}

Signal TensorSignal::reassemble() const {
  Signal x = Signal::Zero(static_cast<Eigen::Index>(n1) * n2);
  for (const auto& [a, b] : terms) x += kron_vec(a, b);
  return x;
}

TensorSignal TensorSignal::canonical() const {
  TensorSignal out{n1, n2, {}};
  for (const auto& [a, b] : terms) {
    const double nrm = a.norm();
    if (nrm == 0.0) continue;
    std::complex<double> phase = 1.0;
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (std::abs(a(i)) > 1e-12 * nrm) {
        phase = a(i) / std::abs(a(i));
        break;
      }
    const std::complex<double> s = phase * nrm;
    out.terms.emplace_back(a / s, b * s);
  }
  return out;
}

TensorSignal tensor_decompose(const Signal& x, int n1, int n2, double rel_tol) {
  if (n1 < 1 || n2 < 1 || x.size() != static_cast<Eigen::Index>(n1) * n2)
    throw InputError("tensor decomposition needs a signal of length n1*n2");
  Eigen::MatrixXcd m(n1, n2);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) m(i, j) = x(static_cast<Eigen::Index>(i) * n2 + j);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  TensorSignal t{n1, n2, {}};
  if (s.size() == 0 || s(0) == 0.0) return t;
  for (Eigen::Index r = 0; r < s.size(); ++r) {
    if (s(r) <= rel_tol * s(0)) break;
    t.terms.emplace_back(s(r) * svd.matrixU().col(r), svd.matrixV().col(r).conjugate());
  }
  return t.canonical();
}

// ---------------------------------------------------------------------------

Eigen::MatrixXd nearest_circulant(const Eigen::MatrixXd& a) {
  const auto n = a.rows();
  if (a.cols() != n) throw InputError("nearest circulant needs a square matrix");
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double s = 0.0;
    for (Eigen::Index r = 0; r < n; ++r) s += a(r, (r + i) % n);
    c(i) = s / static_cast<double>(n);
  }
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index k = 0; k < n; ++k) out(r, k) = c((k - r + n) % n);
  return out;
}

namespace {

// Projection onto symmetric circulant matrices with zero diagonal.
Eigen::MatrixXd project_structured(const Eigen::MatrixXd& a) {
  const auto n = a.rows();
  Eigen::MatrixXd c = nearest_circulant(a);
  Eigen::VectorXd row = c.row(0).transpose();
  Eigen::VectorXd sym(n);
  for (Eigen::Index i = 0; i < n; ++i) sym(i) = 0.5 * (row(i) + row((n - i) % n));
  sym(0) = 0.0;
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index k = 0; k < n; ++k) c(r, k) = sym((k - r + n) % n);
  return c;
}

Eigen::MatrixXd unvec(const Eigen::VectorXd& v, Eigen::Index n) {
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = v(i * n + j);
  return m;
}

Eigen::VectorXd vec(const Eigen::MatrixXd& m) {
  const auto n = m.rows();
  Eigen::VectorXd v(n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) v(i * n + j) = m(i, j);
  return v;
}

}  // namespace

KroneckerApproximation nearest_kronecker_circulant(const Eigen::MatrixXd& a, int n1, int n2,
                                                   int max_iter, double tol) {
  if (n1 < 1 || n2 < 1 || a.rows() != static_cast<Eigen::Index>(n1) * n2 || a.cols() != a.rows())
    throw InputError("matrix dimension does not factor as n1*n2");
  // rearrangement: R((i1,j1),(i2,j2)) = A(i1 n2 + i2, j1 n2 + j2)
  Eigen::MatrixXd R(n1 * n1, n2 * n2);
  for (int i1 = 0; i1 < n1; ++i1)
    for (int j1 = 0; j1 < n1; ++j1)
      for (int i2 = 0; i2 < n2; ++i2)
        for (int j2 = 0; j2 < n2; ++j2)
          R(i1 * n1 + j1, i2 * n2 + j2) = a(i1 * n2 + i2, j1 * n2 + j2);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(R, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double s0 = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  Eigen::VectorXd va = vec(project_structured(unvec(s0 * svd.matrixU().col(0), n1)));
  Eigen::VectorXd vb = vec(project_structured(unvec(svd.matrixV().col(0), n2)));
  if (vb.norm() < 1e-14) {
    Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(n2, n2);
    if (n2 > 1)
      for (int r = 0; r < n2; ++r) {
        basis(r, (r + 1) % n2) += 1.0;
        basis(r, (r + n2 - 1) % n2) += 1.0;
      }
    vb = vec(basis);
  }

  auto residual = [&](const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    return (R - x * y.transpose()).norm();
  };

  KroneckerApproximation out;
  const double scale = std::max(R.norm(), 1e-300);
  double prev = std::numeric_limits<double>::infinity();
  for (int it = 0; it < max_iter; ++it) {
    const double nb = vb.squaredNorm();
    if (nb > 0) va = vec(project_structured(unvec(R * vb / nb, n1)));
    const double na = va.squaredNorm();
    if (na > 0) vb = vec(project_structured(unvec(R.transpose() * va / na, n2)));
    const double res = residual(va, vb);
    out.history.push_back(res);
    out.iterations = it + 1;
    if (res <= tol * scale || (it > 0 && prev - res <= tol * prev)) break;
    prev = res;
  }

  // canonical scale: unit-norm first factor, positive leading off-diagonal entry
  Eigen::MatrixXd A1 = unvec(va, n1);
  Eigen::MatrixXd A2 = unvec(vb, n2);
  const double nrm = A1.norm();
  if (nrm > 0) {
    double sign = 1.0;
    for (int i = 0; i < n1; ++i)
      if (std::abs(A1(0, i)) > 1e-12 * nrm) {
        sign = A1(0, i) > 0 ? 1.0 : -1.0;
        break;
      }
    A1 /= sign * nrm;
    A2 *= sign * nrm;
  }
  out.A1 = A1;
  out.A2 = A2;
  out.residual = (a - Eigen::kroneckerProduct(A1, A2).eval()).norm();
  return out;
}

// ---------------------------------------------------------------------------

namespace {

SpectralSamples sample_factor(const Signal& x, FactorGraph g, int K) {
  const SparseSignal s = SparseSignal::from_dense(x);
  return g.path ? sample_dct(s, std::min(4 * K, g.n)) : sample_gft(s, std::min(2 * K, g.n));
}

SparseSignal recover_factor(const Signal& y, FactorGraph g, int K) {
  SpectralSamples s{y, g.n, g.path ? BasisKind::dct3 : BasisKind::dft};
  return g.path ? prony_dct_reconstruct(s, K) : prony_reconstruct(s, K);
}

}  // namespace

MultidimRecovery multidim_sample_reconstruct(const TensorSignal& x, FactorGraph g1,
                                             FactorGraph g2, int K1, int K2) {
  if (x.rank() != 1) throw PreconditionError("multidimensional recovery needs a rank-1 signal");
  if (x.n1 != g1.n || x.n2 != g2.n) throw InputError("tensor factor sizes do not match the graphs");
  const auto& [x1, x2] = x.terms.front();
  const SpectralSamples y1 = sample_factor(x1, g1, K1);
  const SpectralSamples y2 = sample_factor(x2, g2, K2);
  MultidimRecovery out;
  out.samples = kron_vec(y1.y, y2.y);

  // split the product samples back into factors
  const int M1 = y1.M();
  const int M2 = y2.M();
  Eigen::MatrixXcd ym(M1, M2);
  for (int i = 0; i < M1; ++i)
    for (int j = 0; j < M2; ++j) ym(i, j) = out.samples(static_cast<Eigen::Index>(i) * M2 + j);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(ym, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Signal f1 = svd.singularValues()(0) * svd.matrixU().col(0);
  const Signal f2 = svd.matrixV().col(0).conjugate();

  out.factor1 = recover_factor(f1, g1, K1);
  out.factor2 = recover_factor(f2, g2, K2);
  TensorSignal t{g1.n, g2.n, {{out.factor1.dense(), out.factor2.dense()}}};
  out.signal = t.canonical();
  return out;
}

TensorSignal separable_gwt(const TensorSignal& x, const MultilevelPlan& p1,
                           const MultilevelPlan& p2) {
  if (x.n1 != p1.size() || x.n2 != p2.size())
    throw InputError("tensor factor sizes do not match the plans");
  TensorSignal w{x.n1, x.n2, {}};
  for (const auto& [a, b] : x.terms)
    w.terms.emplace_back(analyze(a, p1).stacked(), analyze(b, p2).stacked());
  return w;
}

TensorSignal inverse_separable_gwt(const TensorSignal& w, const MultilevelPlan& p1,
                                   const MultilevelPlan& p2) {
  if (w.n1 != p1.size() || w.n2 != p2.size())
    throw InputError("tensor factor sizes do not match the plans");
  TensorSignal x{w.n1, w.n2, {}};
  for (const auto& [a, b] : w.terms)
    x.terms.emplace_back(
        synthesize(WaveletCoefficients::from_stacked(a, p1.size(), p1.levels), p1),
        synthesize(WaveletCoefficients::from_stacked(b, p2.size(), p2.levels), p2));
  return x;
}

}  // namespace gfri
