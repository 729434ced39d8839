#include "spinent/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace spinent::io {

namespace {

std::string basis_name(BasisTag::Kind kind) {
  switch (kind) {
    case BasisTag::Kind::Product: return "product";
    case BasisTag::Kind::Irrep: return "irrep";
    case BasisTag::Kind::Single: return "single";
  }
  return {};
}

BasisTag tag_from_fields(const std::string& basis, int na, int nb) {
  if (basis == "product") return BasisTag::product(na, nb);
  if (basis == "irrep") {
    if (nb < 1 || na < nb) throw std::invalid_argument("irrep basis needs na >= nb >= 1");
    return BasisTag::irrep(CouplingScheme(half(na - 1), half(nb - 1)));
  }
  if (basis == "single") {
    if (nb != 1) throw std::invalid_argument("single basis requires nb = 1");
    return BasisTag::single(na);
  }
  throw std::invalid_argument("unknown basis '" + basis + "'");
}

IrrepLabel label_from_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("weight key '" + key + "' is not of the form \"2j,2mj\"");
  return {half(std::stoi(key.substr(0, comma))), half(std::stoi(key.substr(comma + 1)))};
}

}  // namespace

std::string format_sig9(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.9g", v);
  return buffer;
}

json state_to_json(const DensityMatrix& rho) {
  json entries = json::array();
  for (int r = 0; r < rho.dim(); ++r)
    for (int c = 0; c < rho.dim(); ++c) {
      const Complex v = rho.matrix()(r, c);
      entries.push_back({v.real(), v.imag()});
    }
  return {{"basis", basis_name(rho.tag().kind)},
          {"na", rho.tag().na},
          {"nb", rho.tag().nb},
          {"entries", entries}};
}

DensityMatrix state_from_json(const json& j) {
  const BasisTag tag =
      tag_from_fields(j.at("basis").get<std::string>(), j.at("na").get<int>(), j.at("nb").get<int>());
  const int n = tag.dim();
  const json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("state file needs na*nb squared entries");
  Matrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const json& e = entries[static_cast<std::size_t>(r) * n + c];
      m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  return DensityMatrix(std::move(m), tag);
}

json irrep_state_to_json(const IrrepDiagonalState& state) {
  json weights = json::object();
  for (const auto& [label, w] : state.weights)
    weights[std::to_string(label.j.twice) + "," + std::to_string(label.mj.twice)] = w;
  return {{"scheme", {state.scheme.l.twice, state.scheme.s.twice}}, {"weights", weights}};
}

IrrepDiagonalState irrep_state_from_json(const json& j) {
  const json& scheme = j.at("scheme");
  if (!scheme.is_array() || scheme.size() != 2)
    throw std::invalid_argument("scheme must be the pair [2l, 2s]");
  CouplingScheme cs(half(scheme.at(0).get<int>()), half(scheme.at(1).get<int>()));
  std::map<IrrepLabel, double> weights;
  for (const auto& [key, value] : j.at("weights").items())
    weights[label_from_key(key)] = value.get<double>();
  return IrrepDiagonalState(cs, std::move(weights));
}

bool is_irrep_state_json(const json& j) { return j.is_object() && j.contains("weights"); }

json series_to_json(const MeasurementSeries& series, const std::vector<std::string>& labels_a,
                    const std::vector<std::string>& labels_b) {
  const std::size_t na = labels_a.size();
  const std::size_t nb = labels_b.size();
  if (series.counts.size() != na * nb)
    throw std::invalid_argument("series counts do not form a labels_a x labels_b grid");
  json counts = json::array();
  for (std::size_t k = 0; k < na; ++k) {
    json row = json::array();
    for (std::size_t m = 0; m < nb; ++m) row.push_back(series.counts[k * nb + m]);
    counts.push_back(row);
  }
  return {{"labels_a", labels_a}, {"labels_b", labels_b}, {"counts", counts}, {"shots", series.shots}};
}

SeriesFile series_from_json(const json& j) {
  SeriesFile file;
  file.labels_a = j.at("labels_a").get<std::vector<std::string>>();
  file.labels_b = j.at("labels_b").get<std::vector<std::string>>();
  file.series.shots = j.at("shots").get<long long>();
  const json& counts = j.at("counts");
  if (!counts.is_array() || counts.size() != file.labels_a.size())
    throw std::invalid_argument("counts must have one row per labels_a entry");
  long long total = 0;
  for (std::size_t k = 0; k < file.labels_a.size(); ++k) {
    const json& row = counts[k];
    if (!row.is_array() || row.size() != file.labels_b.size())
      throw std::invalid_argument("counts row width must match labels_b");
    for (std::size_t m = 0; m < file.labels_b.size(); ++m) {
      const long long c = row[m].get<long long>();
      if (c < 0) throw std::invalid_argument("counts must be non-negative");
      file.series.counts.push_back(c);
      total += c;
      file.series.detector_labels.push_back(file.labels_a[k] + "&" + file.labels_b[m]);
    }
  }
  if (total != file.series.shots)
    throw InvalidStateError("series counts do not sum to the shot count");
  return file;
}

json report_to_json(const EntropyReport& report) {
  return {{"s_sys", report.s_sys},
          {"s_a", report.s_a},
          {"s_b", report.s_b},
          {"lower_bound_a", report.lower_bound_a},
          {"lower_bound_b", report.lower_bound_b},
          {"witness_fired", report.witness_fired}};
}

json covariance_to_json(const CovarianceMatrix& cov) {
  json rows = json::array();
  for (Eigen::Index k = 0; k < cov.entries.rows(); ++k) {
    json row = json::array();
    for (Eigen::Index m = 0; m < cov.entries.cols(); ++m) row.push_back(cov.entries(k, m));
    rows.push_back(row);
  }
  return {{"labels_a", cov.labels_a}, {"labels_b", cov.labels_b}, {"entries", rows}};
}

json pipeline_result_to_json(const PipelineResult& result) {
  return {{"reconstructed", state_to_json(result.reconstructed)},
          {"report", report_to_json(result.report)},
          {"covariance", covariance_to_json(result.covariance)},
          {"shots_used", result.shots_used},
          {"seed", result.seed},
          {"rank", result.rank},
          {"projection_distance", result.projection_distance}};
}

void write_covariance_csv(std::ostream& os, const CovarianceMatrix& cov) {
  os << "cov";
  for (const auto& label : cov.labels_b) os << ',' << label;
  os << '\n';
  for (Eigen::Index k = 0; k < cov.entries.rows(); ++k) {
    os << cov.labels_a[static_cast<std::size_t>(k)];
    for (Eigen::Index m = 0; m < cov.entries.cols(); ++m)
      os << ',' << format_sig9(cov.entries(k, m));
    os << '\n';
  }
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "lambda,s_sys,s_a,s_b\n";
  for (const SweepRow& row : rows)
    os << format_sig9(row.lambda) << ',' << format_sig9(row.s_sys) << ',' << format_sig9(row.s_a)
       << ',' << format_sig9(row.s_b) << '\n';
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  json j;
  in >> j;
  return j;
}

void save_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
}

}  // namespace spinent::io
