#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinent/simulate.hpp"

namespace spinent::io {

using nlohmann::json;

// Fixed-width significant-digit rendering used by every CSV column.
std::string format_sig9(double v);

// Density matrix file:
//   {"basis": "product"|"irrep"|"single", "na": int, "nb": int,
//    "entries": [[re, im], ...]}   (row-major, na*nb square)
json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const json& j);

// Irrep-diagonal state file:
//   {"scheme": [2l, 2s], "weights": {"2j,2mj": p, ...}}
json irrep_state_to_json(const IrrepDiagonalState& state);
IrrepDiagonalState irrep_state_from_json(const json& j);

// True when the JSON value uses the irrep-diagonal schema.
bool is_irrep_state_json(const json& j);

// Measurement series file:
//   {"labels_a": [...], "labels_b": [...], "counts": [[int, ...], ...],
//    "shots": int}
// counts rows follow labels_a, columns labels_b.
struct SeriesFile {
  MeasurementSeries series;
  std::vector<std::string> labels_a;
  std::vector<std::string> labels_b;
};
json series_to_json(const MeasurementSeries& series, const std::vector<std::string>& labels_a,
                    const std::vector<std::string>& labels_b);
SeriesFile series_from_json(const json& j);

json report_to_json(const EntropyReport& report);

json covariance_to_json(const CovarianceMatrix& cov);

json pipeline_result_to_json(const PipelineResult& result);

// CSV grid with row and column labels; 9 significant digits, LF endings.
void write_covariance_csv(std::ostream& os, const CovarianceMatrix& cov);

// Sweep CSV: header then one row per mixing weight.
struct SweepRow {
  double lambda = 0.0;
  double s_sys = 0.0;
  double s_a = 0.0;
  double s_b = 0.0;
};
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const json& j);

}  // namespace spinent::io
