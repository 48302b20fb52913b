#include "gfri/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gfri/errors.hpp"

namespace gfri {

using nlohmann::json;

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

double to_double(const std::string& s) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) throw InputError("trailing characters in number '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw InputError("cannot parse number '" + s + "'");
  }
}

bool is_header(const std::vector<std::string>& cells) {
  if (cells.empty()) return false;
  try {
    to_double(cells.front());
    return false;
  } catch (const InputError&) {
    return true;
  }
}

std::vector<std::vector<double>> read_rows(std::istream& is) {
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split_csv(line);
    if (first && is_header(cells)) {
      first = false;
      continue;
    }
    first = false;
    std::vector<double> row;
    for (const auto& c : cells) row.push_back(to_double(c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

GraphDescription parse_graph_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw InputError("graph JSON needs an integer field 'n'");
  GraphDescription d;
  d.n = j["n"].get<int>();
  if (d.n < 1) throw InputError("graph JSON: n must be positive");
  if (j.contains("type") && j["type"] == "path") {
    d.path = true;
    return d;
  }
  if (!j.contains("generators") || !j["generators"].is_array())
    throw InputError("graph JSON needs a 'generators' array");
  std::vector<Generator> gens;
  for (const auto& g : j["generators"]) {
    if (g.is_number_integer()) {
      gens.push_back({g.get<int>(), 1.0});
    } else if (g.is_array() && g.size() == 2 && g[0].is_number_integer() && g[1].is_number()) {
      gens.push_back({g[0].get<int>(), g[1].get<double>()});
    } else {
      throw InputError("graph JSON: each generator must be s or [s, weight]");
    }
  }
  std::sort(gens.begin(), gens.end(),
            [](const Generator& a, const Generator& b) { return a.offset < b.offset; });
  d.circulant = CirculantGraph(d.n, std::move(gens));
  return d;
}

GraphDescription read_graph_json(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open graph file '" + file + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph_json(ss.str());
}

std::string graph_to_json(const CirculantGraph& g) {
  json j;
  j["n"] = g.size();
  j["generators"] = json::array();
  for (const auto& gen : g.generators()) j["generators"].push_back({gen.offset, gen.weight});
  return j.dump();
}

std::string graph_to_json(const PathGraph& g) {
  json j;
  j["type"] = "path";
  j["n"] = g.size();
  return j.dump();
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void write_matrix_csv(std::ostream& os, const Eigen::MatrixXd& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) os << (c ? "," : "") << format_double(m(r, c));
    os << '\n';
  }
}

Eigen::MatrixXd read_matrix_csv(std::istream& is) {
  const auto rows = read_rows(is);
  if (rows.empty()) throw InputError("empty matrix CSV");
  Eigen::MatrixXd m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.front().size()) throw InputError("ragged matrix CSV");
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

void write_signal_csv(std::ostream& os, const Signal& x) {
  os << "re,im\n";
  for (Eigen::Index i = 0; i < x.size(); ++i)
    os << format_double(x(i).real()) << ',' << format_double(x(i).imag()) << '\n';
}

Signal read_signal_csv(std::istream& is) {
  const auto rows = read_rows(is);
  Signal x(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() == 1) {
      x(i) = rows[i][0];
    } else if (rows[i].size() == 2) {
      x(i) = {rows[i][0], rows[i][1]};
    } else {
      throw InputError("signal CSV rows must be 're' or 're,im'");
    }
  }
  return x;
}

void write_samples_csv(std::ostream& os, const SpectralSamples& y) {
  os << "m,re,im\n";
  for (int m = 0; m < y.M(); ++m)
    os << m << ',' << format_double(y.y(m).real()) << ',' << format_double(y.y(m).imag()) << '\n';
}

SpectralSamples read_samples_csv(std::istream& is, int n, BasisKind basis) {
  const auto rows = read_rows(is);
  Signal y(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != 3) throw InputError("samples CSV rows must be 'm,re,im'");
    if (rows[i][0] != static_cast<double>(i))
      throw InputError("samples CSV row " + std::to_string(i) + " has index " +
                       format_double(rows[i][0]));
    y(i) = {rows[i][1], rows[i][2]};
  }
  return {y, n, basis};
}

void write_sparse_csv(std::ostream& os, const SparseSignal& x) {
  os << "c,re,im\n";
  for (int i = 0; i < x.K(); ++i)
    os << x.support[i] << ',' << format_double(x.amplitudes[i].real()) << ','
       << format_double(x.amplitudes[i].imag()) << '\n';
}

SparseSignal read_sparse_csv(std::istream& is, int n) {
  const auto rows = read_rows(is);
  std::vector<int> support;
  std::vector<std::complex<double>> amps;
  for (const auto& r : rows) {
    if (r.size() != 3) throw InputError("sparse signal CSV rows must be 'c,re,im'");
    support.push_back(static_cast<int>(r[0]));
    amps.emplace_back(r[1], r[2]);
  }
  return SparseSignal::make(n, std::move(support), std::move(amps));
}

void write_coefficients_csv(std::ostream& os, const WaveletCoefficients& c) {
  const Signal s = c.stacked();
  const int levels = static_cast<int>(c.highpass.size());
  const auto bands = WaveletCoefficients::band_labels(static_cast<int>(s.size()), levels);
  os << "band,index,re,im\n";
  for (Eigen::Index i = 0; i < s.size(); ++i)
    os << bands[i] << ',' << i << ',' << format_double(s(i).real()) << ','
       << format_double(s(i).imag()) << '\n';
}

std::string filterbank_to_json(const FilterBank& fb, const InvertibilityVerdict& verdict,
                               std::optional<double> condition_number) {
  json j;
  j["kind"] = to_string(fb.spec.kind);
  j["n"] = fb.n;
  j["k"] = fb.spec.k;
  j["alphas"] = fb.spec.alphas;
  j["betas"] = fb.spec.betas;
  if (fb.graph) j["graph"] = json::parse(graph_to_json(*fb.graph));
  auto row = [](const Eigen::MatrixXd& m) {
    std::vector<double> r(m.cols());
    for (Eigen::Index c = 0; c < m.cols(); ++c) r[c] = m(0, c);
    return r;
  };
  j["lp_analysis_first_row"] = row(fb.lp_analysis);
  j["hp_analysis_first_row"] = row(fb.hp_analysis);
  if (fb.has_synthesis()) {
    j["lp_synthesis_first_row"] = row(fb.lp_synthesis);
    j["hp_synthesis_first_row"] = row(fb.hp_synthesis);
    j["c1"] = fb.c1;
    j["c2"] = fb.c2;
  }
  j["invertible"] = verdict.invertible;
  j["condition"] = verdict.condition;
  j["reason"] = verdict.reason;
  j["resolved_densely"] = verdict.resolved_densely;
  j["conflicting_positions"] = json::array();
  for (const auto& [a, b] : verdict.conflicting_positions)
    j["conflicting_positions"].push_back({a, b});
  if (condition_number) {
    if (std::isfinite(*condition_number)) j["condition_number"] = *condition_number;
    else j["condition_number"] = nullptr;
  }
  return j.dump(2);
}

double default_tolerance(double fallback) {
  const char* env = std::getenv("GFRI_TOL");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0))
    throw InputError(std::string("GFRI_TOL must be a positive number, got '") + env + "'");
  return v;
}

}  // namespace gfri
