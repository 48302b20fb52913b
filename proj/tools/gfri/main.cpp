// gfri: command-line front end for the graph FRI library.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gfri/circulant.hpp"
#include "gfri/coarsening.hpp"
#include "gfri/errors.hpp"
#include "gfri/filterbank.hpp"
#include "gfri/io.hpp"
#include "gfri/linalg.hpp"
#include "gfri/multires.hpp"
#include "gfri/products.hpp"
#include "gfri/random.hpp"
#include "gfri/sampling.hpp"
#include "gfri/spectral.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace gfri;

namespace {

enum ExitCode { kOk = 0, kInternal = 1, kInput = 2, kInfeasible = 3, kPrecondition = 4 };

struct GraphOptions {
  std::string file;
  int n = 0;
  std::vector<int> generators;
  std::vector<double> weights;
  bool path = false;
};

struct RunConfig {
  GraphOptions graph;
  std::vector<std::string> extra_graphs;
  std::string out_dir = ".";
  std::string kind = "hgswt";
  std::string scheme = "spectral";
  std::string product = "cartesian";
  std::string basis;
  std::string signal_file;
  std::string samples_file;
  std::string matrix_file;
  std::vector<double> alphas;
  std::vector<int> alpha_grid;
  int k = 1;
  int levels = 1;
  int M = 0;
  int K = 0;
  int n1 = 0;
  int n2 = 0;
  int trials = 1;
  std::uint64_t seed = 1;
};

void add_graph_options(CLI::App* cmd, GraphOptions& g) {
  cmd->add_option("--graph", g.file, "Graph JSON file");
  cmd->add_option("--n", g.n, "Number of vertices");
  cmd->add_option("--generators", g.generators, "Circulant generating set")->delimiter(',');
  cmd->add_option("--weights", g.weights, "Generator weights")->delimiter(',');
  cmd->add_flag("--path", g.path, "Use the path graph on n vertices");
}

void add_alpha_options(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--alphas", c.alphas, "E-spline parameters in radians")->delimiter(',');
  cmd->add_option("--alpha-grid", c.alpha_grid, "E-spline parameters as 2 pi m / n")
      ->delimiter(',');
}

GraphDescription load_graph(const GraphOptions& o) {
  if (!o.file.empty()) return read_graph_json(o.file);
  if (o.n < 1) throw InputError("give --graph FILE or --n N");
  GraphDescription d;
  d.n = o.n;
  if (o.path) {
    d.path = true;
    return d;
  }
  if (o.generators.empty()) throw InputError("circulant graph needs --generators");
  if (!o.weights.empty() && o.weights.size() != o.generators.size())
    throw InputError("--weights must match --generators in length");
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < o.generators.size(); ++i)
    gens.push_back({o.generators[i], o.weights.empty() ? 1.0 : o.weights[i]});
  d.circulant = CirculantGraph(d.n, std::move(gens));
  return d;
}

const CirculantGraph& require_circulant(const GraphDescription& d, const char* what) {
  if (!d.circulant) throw InputError(std::string(what) + " needs a circulant graph");
  return *d.circulant;
}

std::vector<double> resolve_alphas(const RunConfig& c, int n) {
  if (!c.alphas.empty() && !c.alpha_grid.empty())
    throw InputError("give either --alphas or --alpha-grid, not both");
  std::vector<double> out = c.alphas;
  for (int m : c.alpha_grid) out.push_back(2.0 * std::numbers::pi * m / n);
  return out;
}

void write_file(const RunConfig& c, const std::string& name,
                const std::function<void(std::ostream&)>& body) {
  fs::create_directories(c.out_dir);
  const fs::path p = fs::path(c.out_dir) / name;
  std::ofstream os(p);
  if (!os) throw InputError("cannot write " + p.string());
  body(os);
}

void write_json(const RunConfig& c, const std::string& name, const json& j) {
  write_file(c, name, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

json graph_json(const GraphDescription& d) {
  return json::parse(d.path ? graph_to_json(PathGraph(d.n)) : graph_to_json(*d.circulant));
}

Signal read_signal(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open signal file '" + file + "'");
  return read_signal_csv(in);
}

SparseSignal random_sparse(int n, int K, SplitMix64& rng, bool real) {
  if (K < 0 || K > n) throw PreconditionError("need 0 <= K <= n");
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  std::vector<int> support;
  for (int i = 0; i < K; ++i) {
    const auto j = i + static_cast<int>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
    support.push_back(pool[i]);
  }
  std::vector<std::complex<double>> amps;
  for (int i = 0; i < K; ++i) {
    const double re = rng.uniform(-1.0, 1.0);
    amps.emplace_back(re, real ? 0.0 : rng.uniform(-1.0, 1.0));
  }
  return SparseSignal::make(n, std::move(support), std::move(amps));
}

BasisKind resolve_basis(const RunConfig& c, const GraphDescription& d) {
  if (c.basis.empty()) return d.path ? BasisKind::dct3 : BasisKind::dft;
  if (c.basis == "dft") return BasisKind::dft;
  if (c.basis == "dct" || c.basis == "dct3") return BasisKind::dct3;
  throw InputError("unknown basis '" + c.basis + "' (expected dft or dct)");
}

int samples_needed(BasisKind b, int K) { return b == BasisKind::dft ? 2 * K : 4 * K; }

SpectralSamples take_samples(const SparseSignal& x, BasisKind b, int M) {
  return b == BasisKind::dft ? sample_gft(x, M) : sample_dct(x, M);
}

SparseSignal recover(const SpectralSamples& y, int K) {
  return y.basis == BasisKind::dft ? prony_reconstruct(y, K) : prony_dct_reconstruct(y, K);
}

double sparse_error(const SparseSignal& a, const SparseSignal& b) {
  return (a.dense() - b.dense()).lpNorm<Eigen::Infinity>();
}

// ---------------------------------------------------------------- commands

int cmd_graph(const RunConfig& c) {
  const auto d = load_graph(c.graph);
  json info = graph_json(d);
  Eigen::MatrixXd a, l;
  std::vector<double> eig;
  std::vector<int> order;
  if (d.path) {
    const PathGraph g(d.n);
    a = adjacency_matrix(g);
    l = laplacian(g);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(l);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      eig.push_back(es.eigenvalues()(i));
      order.push_back(static_cast<int>(i));
    }
    info["bipartite"] = true;
    info["connected"] = true;
  } else {
    const auto& g = *d.circulant;
    a = adjacency_matrix(g);
    l = laplacian(g);
    const auto spec = gft_permutation(g, default_tolerance(1e-9));
    eig = spec.eigenvalues;
    order = spec.sigma;
    info["bipartite"] = is_bipartite(g);
    info["connected"] = g.is_connected();
    info["degree"] = g.degree();
    info["bandwidth"] = g.bandwidth();
  }
  write_file(c, "adjacency.csv", [&](std::ostream& os) { write_matrix_csv(os, a); });
  write_file(c, "laplacian.csv", [&](std::ostream& os) { write_matrix_csv(os, l); });
  write_file(c, "spectrum.csv", [&](std::ostream& os) {
    // rank i: i-th smallest eigenvalue, found at `position` (DFT index for circulants)
    os << "rank,position,eigenvalue\n";
    for (std::size_t i = 0; i < order.size(); ++i)
      os << i << ',' << order[i] << ',' << format_double(eig[order[i]]) << '\n';
  });
  write_json(c, "graph.json", info);
  std::cout << "n=" << d.n << " bipartite=" << info["bipartite"].dump() << '\n';
  return kOk;
}

int cmd_filterbank(const RunConfig& c) {
  const auto d = load_graph(c.graph);
  const auto kind = filterbank_kind_from_string(c.kind);
  if (d.path != (kind == FilterBankKind::normalized_path))
    throw InputError("kind 'path' goes with --path graphs only");
  FilterBank fb = d.path ? build_path_hgswt(PathGraph(d.n), c.k)
                         : build_filterbank(*d.circulant, kind, c.k, resolve_alphas(c, d.n));
  const Eigen::MatrixXd w = transform_matrix(fb);
  InvertibilityVerdict verdict;
  if (d.path) {
    verdict.invertible = numerical_rank(w) == w.rows();
    verdict.condition = "dense_rank";
    verdict.resolved_densely = true;
    if (!verdict.invertible) verdict.reason = "transform matrix is rank deficient";
  } else {
    verdict = check_invertibility(fb);
  }
  std::optional<double> cond;
  if (!verdict.invertible) {
    cond = std::numeric_limits<double>::infinity();
  } else if (d.circulant && is_bipartite(*d.circulant) && kind != FilterBankKind::hcgeswt) {
    cond = condition_number_bipartite(fb);
  } else {
    cond = condition_number(w);
  }
  write_json(c, "filterbank.json", json::parse(filterbank_to_json(fb, verdict, cond)));
  write_file(c, "analysis.csv", [&](std::ostream& os) { write_matrix_csv(os, w); });
  if (!verdict.invertible) {
    std::cerr << "gfri: filterbank not invertible (" << verdict.condition
              << "): " << verdict.reason << '\n';
    return kInfeasible;
  }
  write_file(c, "synthesis.csv", [&](std::ostream& os) {
    write_matrix_csv(os, synthesis_matrix(fb, DownsamplePattern::standard(fb.n)));
  });
  std::cout << "invertible condition_number=" << format_double(*cond) << '\n';
  return kOk;
}

int cmd_mrt(const RunConfig& c) {
  const auto d = load_graph(c.graph);
  const auto& g = require_circulant(d, "mrt");
  FilterBankSpec spec;
  spec.kind = filterbank_kind_from_string(c.kind);
  spec.k = c.k;
  spec.alphas = resolve_alphas(c, d.n);
  const auto plan = plan_mrt(g, spec, c.levels, coarsening_scheme_from_string(c.scheme));

  Signal x;
  if (!c.signal_file.empty()) {
    x = read_signal(c.signal_file);
    if (x.size() != d.n) throw InputError("signal length does not match the graph");
  } else {
    SplitMix64 rng(c.seed);
    x.resize(d.n);
    for (auto& v : x) v = rng.uniform(-1.0, 1.0);
  }
  const auto coeffs = analyze(x, plan);
  const Signal back = synthesize(coeffs, plan);
  const double err = (back - x).lpNorm<Eigen::Infinity>();

  json info;
  info["graph"] = graph_json(d);
  info["kind"] = to_string(plan.kind);
  info["k"] = plan.k;
  info["alphas"] = plan.alphas;
  info["levels"] = plan.levels;
  info["scheme"] = to_string(plan.scheme);
  info["permutation"] = plan.permutation();
  info["per_level"] = json::array();
  for (const auto& lv : plan.per_level)
    info["per_level"].push_back({{"graph", json::parse(graph_to_json(lv.graph))},
                                 {"condition", lv.verdict.condition},
                                 {"reason", lv.verdict.reason}});
  info["nonzero_coefficients"] = coeffs.count_nonzero(default_tolerance(1e-9));
  info["reconstruction_error"] = err;
  write_json(c, "mrt.json", info);
  write_file(c, "coefficients.csv", [&](std::ostream& os) { write_coefficients_csv(os, coeffs); });
  write_file(c, "reconstruction.csv", [&](std::ostream& os) { write_signal_csv(os, back); });
  std::cout << "levels=" << plan.levels << " reconstruction_error=" << format_double(err) << '\n';
  return kOk;
}

int cmd_sample(const RunConfig& c) {
  const auto d = load_graph(c.graph);
  const BasisKind basis = resolve_basis(c, d);
  SparseSignal x;
  if (!c.signal_file.empty()) {
    std::ifstream in(c.signal_file);
    if (!in) throw InputError("cannot open signal file '" + c.signal_file + "'");
    x = read_sparse_csv(in, d.n);
  } else {
    SplitMix64 rng(c.seed);
    x = random_sparse(d.n, c.K, rng, basis == BasisKind::dct3);
  }
  const int M = c.M > 0 ? c.M : samples_needed(basis, x.K());
  if (M < 1 || M > d.n) throw PreconditionError("need 1 <= M <= n");
  const auto y = take_samples(x, basis, M);
  write_file(c, "signal.csv", [&](std::ostream& os) { write_sparse_csv(os, x); });
  write_file(c, "samples.csv", [&](std::ostream& os) { write_samples_csv(os, y); });
  std::cout << "K=" << x.K() << " M=" << M << '\n';
  return kOk;
}

int cmd_reconstruct(const RunConfig& c) {
  const auto d = load_graph(c.graph);
  const BasisKind basis = resolve_basis(c, d);
  if (!c.samples_file.empty()) {
    std::ifstream in(c.samples_file);
    if (!in) throw InputError("cannot open samples file '" + c.samples_file + "'");
    const auto y = read_samples_csv(in, d.n, basis);
    const auto x = recover(y, c.K);
    const auto again = take_samples(x, basis, y.M());
    const double residual = (again.y - y.y).lpNorm<Eigen::Infinity>();
    write_file(c, "recovered.csv", [&](std::ostream& os) { write_sparse_csv(os, x); });
    write_json(c, "reconstruct.json", {{"K", x.K()}, {"M", y.M()}, {"residual", residual}});
    std::cout << "K=" << x.K() << " residual=" << format_double(residual) << '\n';
    return kOk;
  }

  // randomized batch; trial t is seeded with seed + t
  if (c.trials < 1) throw InputError("--trials must be positive");
  if (c.K < 1) throw InputError("randomized trials need --K >= 1");
  const int M = c.M > 0 ? c.M : samples_needed(basis, c.K);
  double worst = 0.0;
  int failures = 0;
  write_file(c, "trials.csv", [&](std::ostream& os) {
    os << "trial,K,M,support_ok,max_error\n";
    for (int t = 0; t < c.trials; ++t) {
      SplitMix64 rng(c.seed + static_cast<std::uint64_t>(t));
      const auto x = random_sparse(d.n, c.K, rng, basis == BasisKind::dct3);
      bool ok = false;
      double err = std::numeric_limits<double>::infinity();
      try {
        const auto r = recover(take_samples(x, basis, M), c.K);
        ok = r.support == x.support;
        err = sparse_error(r, x);
      } catch (const ModelMismatchError&) {
      }
      if (!ok) ++failures;
      worst = std::max(worst, err);
      os << t << ',' << c.K << ',' << M << ',' << (ok ? 1 : 0) << ',' << format_double(err)
         << '\n';
    }
  });
  std::cout << "trials=" << c.trials << " failures=" << failures
            << " max_error=" << format_double(worst) << '\n';
  return kOk;
}

int cmd_pipeline(const RunConfig& c) {
  const auto d = load_graph(c.graph);
  const auto& g = require_circulant(d, "pipeline");
  if (c.K < 1) throw InputError("pipeline needs --K >= 1");
  const int M = c.M > 0 ? c.M : 2 * c.K;
  const auto bound = max_levels(d.n, M, false);
  const int J = c.levels > 0 ? c.levels : bound.J;
  const auto f = factorize_gft(g, M, J, c.k);

  SplitMix64 rng(c.seed);
  const auto x = random_sparse(d.n, c.K, rng, false);
  const auto p = sample_via_pipeline(x.dense(), f);
  const auto direct = sample_gft(x, M);
  const double agreement = (p.samples.y - direct.y).lpNorm<Eigen::Infinity>();
  const auto r = prony_reconstruct(p.samples, c.K);
  const double err = sparse_error(r, x);

  const CirculantGraph coarse =
      f.graphs.empty() ? g : same_generating_set_coarsen(f.graphs.back());
  write_json(c, "coarse_graph.json", json::parse(graph_to_json(coarse)));
  write_file(c, "signal.csv", [&](std::ostream& os) { write_sparse_csv(os, x); });
  write_file(c, "coarse_signal.csv", [&](std::ostream& os) { write_signal_csv(os, p.coarse); });
  write_file(c, "samples.csv", [&](std::ostream& os) { write_samples_csv(os, p.samples); });
  write_file(c, "recovered.csv", [&](std::ostream& os) { write_sparse_csv(os, r); });
  write_json(c, "pipeline.json", {{"n", d.n},
                                  {"K", c.K},
                                  {"M", M},
                                  {"J", J},
                                  {"M_tilde", d.n >> J},
                                  {"max_levels", bound.J},
                                  {"factorization_residual", f.residual},
                                  {"pipeline_vs_direct", agreement},
                                  {"recovery_error", err}});
  std::cout << "J=" << J << " M_tilde=" << (d.n >> J)
            << " residual=" << format_double(f.residual)
            << " recovery_error=" << format_double(err) << '\n';
  return kOk;
}

int cmd_coarsen(const RunConfig& c) {
  const auto d = load_graph(c.graph);
  const auto& g = require_circulant(d, "coarsen");
  const auto scheme = coarsening_scheme_from_string(c.scheme);
  if (c.levels < 1) throw InputError("--levels must be positive");
  json info;
  info["scheme"] = to_string(scheme);
  info["levels"] = json::array();
  CirculantGraph cur = g;
  for (int j = 0; j < c.levels; ++j) {
    const auto r = coarsen(cur, scheme);
    json lv{{"level", j + 1}, {"n", r.laplacian.rows()}, {"circulant", r.graph.has_value()}};
    if (r.graph) lv["graph"] = json::parse(graph_to_json(*r.graph));
    info["levels"].push_back(lv);
    write_file(c, "laplacian_" + std::to_string(j + 1) + ".csv",
               [&](std::ostream& os) { write_matrix_csv(os, r.laplacian); });
    if (!r.graph) {
      if (j + 1 < c.levels)
        throw PreconditionError("level " + std::to_string(j + 1) +
                                " is not circulant; cannot coarsen further");
      break;
    }
    cur = *r.graph;
  }
  write_json(c, "coarsen.json", info);
  std::cout << "levels=" << info["levels"].size() << '\n';
  return kOk;
}

Eigen::MatrixXd adjacency_of(const GraphDescription& d) {
  return d.path ? adjacency_matrix(PathGraph(d.n)) : adjacency_matrix(*d.circulant);
}

int cmd_product(const RunConfig& c) {
  if (c.extra_graphs.size() != 1)
    throw InputError("product needs a second graph via --graph2");
  const auto d1 = load_graph(c.graph);
  const auto d2 = read_graph_json(c.extra_graphs.front());
  const auto kind = product_kind_from_string(c.product);
  const auto p = graph_product(adjacency_of(d1), adjacency_of(d2), kind);
  write_file(c, "adjacency.csv", [&](std::ostream& os) { write_matrix_csv(os, p.adjacency); });
  write_file(c, "laplacian.csv",
             [&](std::ostream& os) { write_matrix_csv(os, laplacian_of(p.adjacency)); });
  write_json(c, "product.json",
             {{"kind", to_string(kind)}, {"n1", p.n1}, {"n2", p.n2},
              {"n", p.adjacency.rows()}, {"edges", (p.adjacency.array() != 0.0).count() / 2}});
  std::cout << to_string(kind) << " n=" << p.adjacency.rows() << '\n';
  return kOk;
}

int cmd_approx(const RunConfig& c) {
  if (c.matrix_file.empty()) throw InputError("approx needs --matrix FILE");
  std::ifstream in(c.matrix_file);
  if (!in) throw InputError("cannot open matrix file '" + c.matrix_file + "'");
  const Eigen::MatrixXd a = read_matrix_csv(in);
  if (a.rows() != a.cols()) throw InputError("matrix must be square");
  if (c.n1 == 0 && c.n2 == 0) {
    const Eigen::MatrixXd p = nearest_circulant(a);
    const double res = (a - p).norm();
    write_file(c, "circulant.csv", [&](std::ostream& os) { write_matrix_csv(os, p); });
    write_json(c, "approx.json", {{"target", "circulant"}, {"residual", res}});
    std::cout << "residual=" << format_double(res) << '\n';
    return kOk;
  }
  if (c.n1 < 1 || c.n2 < 1 || static_cast<Eigen::Index>(c.n1) * c.n2 != a.rows())
    throw InputError("--n1 * --n2 must equal the matrix dimension " + std::to_string(a.rows()));
  const auto r = nearest_kronecker_circulant(a, c.n1, c.n2);
  write_file(c, "A1.csv", [&](std::ostream& os) { write_matrix_csv(os, r.A1); });
  write_file(c, "A2.csv", [&](std::ostream& os) { write_matrix_csv(os, r.A2); });
  write_file(c, "residuals.csv", [&](std::ostream& os) {
    os << "iteration,residual\n";
    for (std::size_t i = 0; i < r.history.size(); ++i)
      os << i << ',' << format_double(r.history[i]) << '\n';
  });
  write_json(c, "approx.json", {{"target", "kronecker-circulant"},
                                {"n1", c.n1},
                                {"n2", c.n2},
                                {"iterations", r.iterations},
                                {"residual", r.residual}});
  std::cout << "iterations=" << r.iterations << " residual=" << format_double(r.residual) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sampling and multiresolution analysis of sparse signals on circulant graphs"};
  app.require_subcommand(1);
  RunConfig c;

  auto out = [&](CLI::App* cmd) {
    cmd->add_option("--out-dir", c.out_dir, "Directory for output files");
  };
  std::function<int(const RunConfig&)> action;
  auto sub = [&](const char* name, const char* help, int (*fn)(const RunConfig&)) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->callback([&action, fn] { action = fn; });
    out(cmd);
    return cmd;
  };

  auto* graph = sub("graph", "Adjacency, Laplacian and spectrum of a graph", cmd_graph);
  add_graph_options(graph, c.graph);

  auto* fbank = sub("filterbank", "Build a filterbank and check invertibility", cmd_filterbank);
  add_graph_options(fbank, c.graph);
  fbank->add_option("--kind", c.kind, "hgswt, hgeswt, hcgeswt or path");
  fbank->add_option("--k", c.k, "Half-order of the filters");
  add_alpha_options(fbank, c);

  auto* mrt = sub("mrt", "Multilevel wavelet analysis and synthesis", cmd_mrt);
  add_graph_options(mrt, c.graph);
  mrt->add_option("--kind", c.kind, "hgswt, hgeswt or hcgeswt");
  mrt->add_option("--k", c.k, "Half-order of the filters");
  add_alpha_options(mrt, c);
  mrt->add_option("--levels", c.levels, "Number of levels J");
  mrt->add_option("--scheme", c.scheme, "spectral, same-generating-set or kron");
  mrt->add_option("--signal", c.signal_file, "Signal CSV (default: seeded random signal)");
  mrt->add_option("--seed", c.seed, "Random seed");

  auto* sample = sub("sample", "Spectral samples of a sparse graph signal", cmd_sample);
  add_graph_options(sample, c.graph);
  sample->add_option("--K", c.K, "Sparsity of the random signal");
  sample->add_option("--M", c.M, "Number of samples (default 2K, or 4K for DCT)");
  sample->add_option("--signal", c.signal_file, "Sparse signal CSV (c,re,im)");
  sample->add_option("--basis", c.basis, "dft or dct");
  sample->add_option("--seed", c.seed, "Random seed");

  auto* recon = sub("reconstruct", "Recover a sparse signal from spectral samples",
                    cmd_reconstruct);
  add_graph_options(recon, c.graph);
  recon->add_option("--K", c.K, "Sparsity")->required();
  recon->add_option("--M", c.M, "Number of samples for random trials");
  recon->add_option("--samples", c.samples_file, "Samples CSV (m,re,im)");
  recon->add_option("--basis", c.basis, "dft or dct");
  recon->add_option("--trials", c.trials, "Number of random trials without --samples");
  recon->add_option("--seed", c.seed, "Random seed");

  auto* pipe = sub("pipeline", "Sample through the multiresolution factorization", cmd_pipeline);
  add_graph_options(pipe, c.graph);
  pipe->add_option("--K", c.K, "Sparsity")->required();
  pipe->add_option("--M", c.M, "Number of samples (default 2K)");
  pipe->add_option("--levels", c.levels, "Number of levels J (default: largest admissible)");
  pipe->add_option("--k", c.k, "Half-order of the filters");
  pipe->add_option("--seed", c.seed, "Random seed");
  pipe->preparse_callback([&](std::size_t) { c.levels = 0; });

  auto* coarse = sub("coarsen", "Coarsen a circulant graph", cmd_coarsen);
  add_graph_options(coarse, c.graph);
  coarse->add_option("--scheme", c.scheme, "spectral, same-generating-set or kron");
  coarse->add_option("--levels", c.levels, "Number of levels");

  auto* product = sub("product", "Product of two graphs", cmd_product);
  add_graph_options(product, c.graph);
  product->add_option("--graph2", c.extra_graphs, "Second graph JSON file")->expected(1);
  product->add_option("--kind", c.product, "kronecker, cartesian, strong or lexicographic");

  auto* approx = sub("approx", "Nearest circulant or Kronecker-circulant approximation",
                     cmd_approx);
  approx->add_option("--matrix", c.matrix_file, "Square matrix CSV");
  approx->add_option("--n1", c.n1, "Size of the first factor");
  approx->add_option("--n2", c.n2, "Size of the second factor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    return action(c);
  } catch (const InputError& e) {
    std::cerr << "gfri: input error: " << e.what() << '\n';
    return kInput;
  } catch (const InfeasibleError& e) {
    std::cerr << "gfri: infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const PreconditionError& e) {
    std::cerr << "gfri: precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "gfri: " << e.what() << '\n';
    return kInternal;
  }
}
