#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace gfri {

/// Number of singular values above rel_tol * sigma_max.
int numerical_rank(const Eigen::MatrixXcd& m, double rel_tol = 1e-9);
int numerical_rank(const Eigen::MatrixXd& m, double rel_tol = 1e-9);

/// Roots of sum_i p[i] x^i (ascending powers) from companion-matrix eigenvalues.
/// Leading zeros are stripped; an all-zero polynomial has no roots.
std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& p);
std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& p);

/// Circulant test: every row equals the previous one shifted right by one.
bool is_circulant(const Eigen::MatrixXd& m, double tol = 1e-9);

/// 2-norm condition number from singular values (infinity when singular).
double condition_number(const Eigen::MatrixXd& m);

/// Smallest singular value.
double min_singular_value(const Eigen::MatrixXd& m);

}  // namespace gfri
