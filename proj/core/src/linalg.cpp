#include "gfri/linalg.hpp"

#include <cmath>
#include <limits>

namespace gfri {

namespace {

template <typename Mat>
int rank_impl(const Mat& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++r;
  return r;
}

}  // namespace

int numerical_rank(const Eigen::MatrixXcd& m, double rel_tol) { return rank_impl(m, rel_tol); }
int numerical_rank(const Eigen::MatrixXd& m, double rel_tol) { return rank_impl(m, rel_tol); }

std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& p) {
  int deg = static_cast<int>(p.size()) - 1;
  while (deg >= 0 && p[deg] == 0.0) --deg;
  if (deg <= 0) return {};
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -p[i] / p[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<std::complex<double>> roots(deg);
  for (int i = 0; i < deg; ++i) roots[i] = es.eigenvalues()(i);
  return roots;
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& p) {
  return polynomial_roots(std::vector<std::complex<double>>(p.begin(), p.end()));
}

bool is_circulant(const Eigen::MatrixXd& m, double tol) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) return false;
  for (Eigen::Index r = 1; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      if (std::abs(m(r, c) - m(0, (c - r + n) % n)) > tol) return false;
  return true;
}

double condition_number(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

double min_singular_value(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

}  // namespace gfri
