#include "gfri/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <string>

#include "gfri/errors.hpp"

namespace gfri {

CirculantGraph::CirculantGraph(int n, std::vector<Generator> generators)
    : n_(n), generators_(std::move(generators)) {
  if (n_ < 1) throw InputError("circulant graph needs n >= 1, got " + std::to_string(n_));
  int prev = 0;
  for (const auto& g : generators_) {
    if (g.offset <= prev)
      throw InputError("generator offsets must be strictly increasing and positive");
    if (2 * g.offset > n_)
      throw InputError("generator offset " + std::to_string(g.offset) + " exceeds n/2 for n=" +
                       std::to_string(n_));
    if (!(g.weight > 0.0) || !std::isfinite(g.weight))
      throw InputError("generator weights must be positive and finite");
    prev = g.offset;
  }
}

CirculantGraph CirculantGraph::unweighted(int n, std::span<const int> offsets) {
  std::vector<Generator> gens;
  gens.reserve(offsets.size());
  for (int s : offsets) gens.push_back({s, 1.0});
  return CirculantGraph(n, std::move(gens));
}

CirculantGraph CirculantGraph::unweighted(int n, std::initializer_list<int> offsets) {
  return unweighted(n, std::span<const int>(offsets.begin(), offsets.size()));
}

std::vector<int> CirculantGraph::offsets() const {
  std::vector<int> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.offset);
  return out;
}

int CirculantGraph::bandwidth() const {
  return generators_.empty() ? 0 : generators_.back().offset;
}

double CirculantGraph::degree() const {
  double d = 0.0;
  for (const auto& g : generators_) d += (2 * g.offset == n_) ? g.weight : 2.0 * g.weight;
  return d;
}

bool CirculantGraph::is_connected() const {
  int g = n_;
  for (const auto& gen : generators_) g = std::gcd(g, gen.offset);
  return g == 1;
}

PathGraph::PathGraph(int n) : n_(n) {
  if (n_ < 1) throw InputError("path graph needs n >= 1, got " + std::to_string(n_));
}

// ---------------------------------------------------------------------------

RepresenterPolynomial::RepresenterPolynomial(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs)) {}

RepresenterPolynomial RepresenterPolynomial::constant(double c) {
  return RepresenterPolynomial({c});
}

RepresenterPolynomial RepresenterPolynomial::from_first_row(const Eigen::VectorXd& row) {
  const int n = static_cast<int>(row.size());
  if (n == 0) return {};
  std::vector<double> c(n / 2 + 1, 0.0);
  c[0] = row(0);
  for (int i = 1; i <= n / 2; ++i) {
    if (2 * i == n) {
      c[i] = row(i) / 2.0;
    } else {
      c[i] = 0.5 * (row(i) + row(n - i));
    }
  }
  return RepresenterPolynomial(std::move(c));
}

double RepresenterPolynomial::operator[](int i) const {
  return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : 0.0;
}

std::complex<double> RepresenterPolynomial::evaluate(std::complex<double> z) const {
  std::complex<double> v = coeffs_.empty() ? 0.0 : coeffs_[0];
  std::complex<double> zp = 1.0;
  const std::complex<double> zi = 1.0 / z;
  std::complex<double> zm = 1.0;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    zp *= z;
    zm *= zi;
    v += coeffs_[i] * (zp + zm);
  }
  return v;
}

double RepresenterPolynomial::eigenvalue(int k, int n) const {
  double v = coeffs_.empty() ? 0.0 : coeffs_[0];
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    // reduce the phase index to keep cos arguments small for large i*k
    const long long idx = (static_cast<long long>(i) * k) % n;
    v += 2.0 * coeffs_[i] * std::cos(2.0 * std::numbers::pi * static_cast<double>(idx) / n);
  }
  return v;
}

std::vector<double> RepresenterPolynomial::eigenvalues(int n) const {
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k) out[k] = eigenvalue(k, n);
  return out;
}

RepresenterPolynomial RepresenterPolynomial::modulated() const {
  auto c = coeffs_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return RepresenterPolynomial(std::move(c));
}

std::vector<double> RepresenterPolynomial::to_polynomial() const {
  if (coeffs_.empty()) return {};
  const int D = degree();
  std::vector<double> p(2 * D + 1, 0.0);
  p[D] = coeffs_[0];
  for (int i = 1; i <= D; ++i) {
    p[D + i] = coeffs_[i];
    p[D - i] = coeffs_[i];
  }
  return p;
}

Eigen::VectorXd RepresenterPolynomial::first_row(int n) const {
  Eigen::VectorXd row = Eigen::VectorXd::Zero(n);
  if (coeffs_.empty()) return row;
  row(0) += coeffs_[0];
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    const int a = static_cast<int>(i % n);
    const int b = static_cast<int>((n - a) % n);
    row(a) += coeffs_[i];
    row(b) += coeffs_[i];
  }
  return row;
}

Eigen::MatrixXd RepresenterPolynomial::circulant_matrix(int n) const {
  const Eigen::VectorXd row = first_row(n);
  Eigen::MatrixXd m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = row((c - r + n) % n);
  return m;
}

RepresenterPolynomial RepresenterPolynomial::trimmed(double tol) const {
  auto c = coeffs_;
  while (c.size() > 1 && std::abs(c.back()) <= tol) c.pop_back();
  return RepresenterPolynomial(std::move(c));
}

RepresenterPolynomial& RepresenterPolynomial::operator+=(const RepresenterPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

RepresenterPolynomial& RepresenterPolynomial::operator-=(const RepresenterPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

RepresenterPolynomial& RepresenterPolynomial::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

RepresenterPolynomial operator*(const RepresenterPolynomial& a, const RepresenterPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  const auto pa = a.to_polynomial();
  const auto pb = b.to_polynomial();
  std::vector<double> prod(pa.size() + pb.size() - 1, 0.0);
  for (std::size_t i = 0; i < pa.size(); ++i)
    for (std::size_t j = 0; j < pb.size(); ++j) prod[i + j] += pa[i] * pb[j];
  const int D = a.degree() + b.degree();
  std::vector<double> c(D + 1);
  for (int i = 0; i <= D; ++i) c[i] = prod[D + i];
  return RepresenterPolynomial(std::move(c));
}

RepresenterPolynomial RepresenterPolynomial::pow(int k) const {
  if (k < 0) throw PreconditionError("negative polynomial power");
  RepresenterPolynomial out = constant(1.0);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

// ---------------------------------------------------------------------------

RepresenterPolynomial adjacency_polynomial(const CirculantGraph& g) {
  std::vector<double> c(g.bandwidth() + 1, 0.0);
  for (const auto& gen : g.generators())
    c[gen.offset] = (2 * gen.offset == g.size()) ? gen.weight / 2.0 : gen.weight;
  return RepresenterPolynomial(std::move(c));
}

RepresenterPolynomial laplacian_polynomial(const CirculantGraph& g) {
  return RepresenterPolynomial::constant(g.degree()) - adjacency_polynomial(g);
}

RepresenterPolynomial e_graph_laplacian_polynomial(const CirculantGraph& g, double alpha) {
  return RepresenterPolynomial::constant(exponential_degree(g, alpha)) - adjacency_polynomial(g);
}

Eigen::MatrixXd adjacency_matrix(const CirculantGraph& g) {
  return adjacency_polynomial(g).circulant_matrix(g.size());
}

Eigen::MatrixXd adjacency_matrix(const PathGraph& g) {
  const int n = g.size();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = 1.0;
  return a;
}

Eigen::MatrixXd laplacian_of(const Eigen::MatrixXd& adjacency) {
  Eigen::MatrixXd l = -adjacency;
  l.diagonal() += adjacency.rowwise().sum();
  return l;
}

Eigen::MatrixXd laplacian(const CirculantGraph& g) {
  return laplacian_polynomial(g).circulant_matrix(g.size());
}

Eigen::MatrixXd laplacian(const PathGraph& g) { return laplacian_of(adjacency_matrix(g)); }

double exponential_degree(const CirculantGraph& g, double alpha) {
  double d = 0.0;
  for (const auto& gen : g.generators()) {
    const double c = std::cos(alpha * gen.offset);
    d += (2 * gen.offset == g.size()) ? gen.weight * c : 2.0 * gen.weight * c;
  }
  return d;
}

Eigen::MatrixXd e_graph_laplacian(const CirculantGraph& g, double alpha) {
  return e_graph_laplacian_polynomial(g, alpha).circulant_matrix(g.size());
}

bool is_bipartite(const CirculantGraph& g) {
  if (g.size() % 2 != 0) return false;
  return std::all_of(g.generators().begin(), g.generators().end(),
                     [](const Generator& gen) { return gen.offset % 2 == 1; });
}

Signal apply_circulant_filter(const RepresenterPolynomial& coeffs, const Signal& x) {
  const int n = static_cast<int>(x.size());
  if (coeffs.degree() >= n)
    throw InputError("filter support exceeds signal length");
  Signal y = Signal::Zero(n);
  if (coeffs.empty()) return y;
  const Eigen::VectorXd row = coeffs.first_row(n);
  for (int i = 0; i < n; ++i) {
    std::complex<double> acc = 0.0;
    for (int j = 0; j < n; ++j) {
      const double c = row((j - i + n) % n);
      if (c != 0.0) acc += c * x(j);
    }
    y(i) = acc;
  }
  return y;
}

std::vector<int> border_indices(int n, int half_width, std::span<const int> piece_starts) {
  std::set<int> idx;
  const int w = std::min(half_width, n);
  auto add = [&](int t) {
    for (int o = 0; o < w; ++o) {
      idx.insert(((t + o) % n + n) % n);
      idx.insert(((t - 1 - o) % n + n) % n);
    }
  };
  if (piece_starts.empty()) {
    add(0);
  } else {
    for (int t : piece_starts) add(t);
  }
  return {idx.begin(), idx.end()};
}

CirculantGraph graph_from_first_row(const Eigen::VectorXd& row, double tol) {
  const int n = static_cast<int>(row.size());
  if (n == 0) throw InputError("empty first row");
  if (std::abs(row(0)) > tol) throw InputError("first row has a nonzero diagonal entry");
  std::vector<Generator> gens;
  for (int s = 1; 2 * s <= n; ++s) {
    const double w = (2 * s == n) ? row(s) : 0.5 * (row(s) + row(n - s));
    if (std::abs(w) > tol) {
      if (w < 0) throw InputError("negative edge weight at offset " + std::to_string(s));
      gens.push_back({s, w});
    }
  }
  return CirculantGraph(n, std::move(gens));
}

}  // namespace gfri
