#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace gfri {

/// Complex graph signal, one entry per vertex.
using Signal = Eigen::VectorXcd;

/// One offset s of a circulant generating set with its edge weight d_s.
struct Generator {
  int offset = 1;
  double weight = 1.0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Undirected circulant graph: vertex i is joined to (i +/- s) mod n for each
/// generator s with 0 < s <= n/2. A generator s = n/2 is self-paired and adds
/// a single edge per vertex.
class CirculantGraph {
 public:
  CirculantGraph(int n, std::vector<Generator> generators);

  /// Unit-weight graph with the given offsets.
  static CirculantGraph unweighted(int n, std::span<const int> offsets);
  static CirculantGraph unweighted(int n, std::initializer_list<int> offsets);

  int size() const { return n_; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::vector<int> offsets() const;

  /// Largest offset B (0 for the edgeless graph).
  int bandwidth() const;
  /// Vertex degree d.
  double degree() const;
  /// gcd(n, s_1, ..., s_m) == 1.
  bool is_connected() const;

  friend bool operator==(const CirculantGraph&, const CirculantGraph&) = default;

 private:
  int n_;
  std::vector<Generator> generators_;
};

/// Unweighted path 0 - 1 - ... - (n-1).
class PathGraph {
 public:
  explicit PathGraph(int n);
  int size() const { return n_; }

  friend bool operator==(const PathGraph&, const PathGraph&) = default;

 private:
  int n_;
};

/// Symmetric Laurent polynomial l(z) = l_0 + sum_{i>=1} l_i (z^i + z^-i),
/// the representer of a symmetric circulant matrix. The matrix of dimension n
/// is l_0 I + sum_i l_i (P^i + P^-i) with P the cyclic shift, so a coefficient
/// at i = n/2 lands twice on the same diagonal.
class RepresenterPolynomial {
 public:
  RepresenterPolynomial() = default;
  explicit RepresenterPolynomial(std::vector<double> coeffs);

  static RepresenterPolynomial constant(double c);
  /// Reads the representer from the first row of a symmetric circulant matrix.
  static RepresenterPolynomial from_first_row(const Eigen::VectorXd& row);

  const std::vector<double>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool empty() const { return coeffs_.empty(); }
  double operator[](int i) const;

  std::complex<double> evaluate(std::complex<double> z) const;
  /// Value at z = exp(-i 2 pi k / n): the k-th DFT-ordered eigenvalue.
  double eigenvalue(int k, int n) const;
  std::vector<double> eigenvalues(int n) const;

  /// l(-z).
  RepresenterPolynomial modulated() const;
  /// Ordinary polynomial z^D l(z), coefficients by ascending power (length 2D+1).
  std::vector<double> to_polynomial() const;

  Eigen::MatrixXd circulant_matrix(int n) const;
  /// First row of the circulant matrix of dimension n.
  Eigen::VectorXd first_row(int n) const;

  /// Drops trailing coefficients with magnitude <= tol.
  RepresenterPolynomial trimmed(double tol = 0.0) const;

  RepresenterPolynomial& operator+=(const RepresenterPolynomial& rhs);
  RepresenterPolynomial& operator-=(const RepresenterPolynomial& rhs);
  RepresenterPolynomial& operator*=(double s);

  friend RepresenterPolynomial operator+(RepresenterPolynomial a, const RepresenterPolynomial& b) {
    return a += b;
  }
  friend RepresenterPolynomial operator-(RepresenterPolynomial a, const RepresenterPolynomial& b) {
    return a -= b;
  }
  friend RepresenterPolynomial operator*(RepresenterPolynomial a, double s) { return a *= s; }
  friend RepresenterPolynomial operator*(double s, RepresenterPolynomial a) { return a *= s; }
  friend RepresenterPolynomial operator*(const RepresenterPolynomial& a,
                                         const RepresenterPolynomial& b);

  RepresenterPolynomial pow(int k) const;

 private:
  std::vector<double> coeffs_;
};

RepresenterPolynomial adjacency_polynomial(const CirculantGraph& g);
RepresenterPolynomial laplacian_polynomial(const CirculantGraph& g);
RepresenterPolynomial e_graph_laplacian_polynomial(const CirculantGraph& g, double alpha);

Eigen::MatrixXd adjacency_matrix(const CirculantGraph& g);
Eigen::MatrixXd adjacency_matrix(const PathGraph& g);
Eigen::MatrixXd laplacian(const CirculantGraph& g);
Eigen::MatrixXd laplacian(const PathGraph& g);
/// L - the combinatorial Laplacian of an arbitrary weighted adjacency matrix.
Eigen::MatrixXd laplacian_of(const Eigen::MatrixXd& adjacency);

/// Exponential degree sum_j 2 d_j cos(alpha s_j).
double exponential_degree(const CirculantGraph& g, double alpha);

/// L_alpha = d_alpha I - A.
Eigen::MatrixXd e_graph_laplacian(const CirculantGraph& g, double alpha);

/// True iff n is even and every offset is odd.
bool is_bipartite(const CirculantGraph& g);

/// y = C x for the circulant C with representer `coeffs`, by cyclic convolution.
Signal apply_circulant_filter(const RepresenterPolynomial& coeffs, const Signal& x);

/// Vertices within `half_width` of a piece boundary, wrapping around the cycle.
/// A boundary at t sits between t-1 and t; the default single piece has its
/// only boundary at 0 (between n-1 and 0). Sorted, unique.
std::vector<int> border_indices(int n, int half_width, std::span<const int> piece_starts = {});

/// Rebuilds a circulant graph from the first row of its adjacency matrix,
/// treating entries with magnitude <= tol as absent edges.
CirculantGraph graph_from_first_row(const Eigen::VectorXd& row, double tol = 1e-9);

}  // namespace gfri
