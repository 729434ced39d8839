// Command-line surface: coupled-basis decompositions, entropy reports,
// mixing sweeps, measurement simulation, and state reconstruction.
//
// Exit codes: 0 success, 2 usage or input error, 3 invalid physical state,
// 4 numerical failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spinent/entropy.hpp"
#include "spinent/io.hpp"
#include "spinent/simulate.hpp"

namespace {

using namespace spinent;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidState = 3;
constexpr int kExitNumerical = 4;

CouplingScheme parse_scheme(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("--scheme expects \"2l,2s\", got '" + text + "'");
  return CouplingScheme(half(std::stoi(text.substr(0, comma))),
                        half(std::stoi(text.substr(comma + 1))));
}

IrrepLabel parse_label(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("irrep label expects \"2j,2mj\", got '" + text + "'");
  return {half(std::stoi(text.substr(0, comma))), half(std::stoi(text.substr(comma + 1)))};
}

std::pair<IrrepLabel, IrrepLabel> parse_pair(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("--pair expects \"2j1,2mj1:2j2,2mj2\", got '" + text + "'");
  return {parse_label(text.substr(0, colon)), parse_label(text.substr(colon + 1))};
}

void write_text(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
  out << content;
}

// Loads either state schema and delivers a product-basis density matrix.
DensityMatrix load_product_state(const std::string& path) {
  const io::json j = io::load_json(path);
  if (io::is_irrep_state_json(j)) return irrep_to_full(io::irrep_state_from_json(j));
  DensityMatrix rho = io::state_from_json(j);
  if (rho.tag().kind == BasisTag::Kind::Irrep) return to_product_basis(rho);
  if (rho.tag().kind != BasisTag::Kind::Product)
    throw std::invalid_argument("this command needs a bipartite state, got " + rho.tag().str());
  return rho;
}

int cmd_irreps(const std::string& scheme_text, const std::string& cg_path) {
  const CouplingScheme scheme = parse_scheme(scheme_text);
  const auto fibration = irrep_fibration(scheme);
  std::ostringstream dims;
  for (std::size_t i = 0; i < fibration.size(); ++i)
    dims << (i ? "+" : "") << fibration[i].dim;
  std::cout << "scheme: l=" << scheme.l.str() << " s=" << scheme.s.str() << " (" << scheme.na()
            << "x" << scheme.nb() << ", dim " << scheme.dim() << ")\n";
  std::cout << "fibration: " << dims.str() << "\n";
  for (const auto& m : fibration)
    std::cout << "  j=" << m.j.str() << " dim=" << m.dim << "\n";
  if (!cg_path.empty()) {
    std::ofstream out(cg_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open " + cg_path + " for writing");
    cg_table(scheme).write_table(out);
    std::cout << "cg table written to " << cg_path << "\n";
  }
  return kExitOk;
}

int cmd_entropy(const std::string& state_path, const std::string& out_path) {
  const io::json j = io::load_json(state_path);
  EntropyReport report;
  if (io::is_irrep_state_json(j)) {
    report = entropy_report(io::irrep_state_from_json(j));
  } else {
    DensityMatrix rho = io::state_from_json(j);
    if (rho.tag().kind == BasisTag::Kind::Irrep) rho = to_product_basis(rho);
    if (rho.tag().kind != BasisTag::Kind::Product)
      throw std::invalid_argument("entropy report needs a bipartite state, got " + rho.tag().str());
    report = entropy_report(rho);
  }
  write_text(out_path, io::report_to_json(report).dump(2) + "\n");
  return kExitOk;
}

int cmd_sweep(const std::string& scheme_text, const std::string& pair_text, int grid,
              const std::string& out_path) {
  const CouplingScheme scheme = parse_scheme(scheme_text);
  const auto [first, second] = parse_pair(pair_text);
  if (first == second) throw std::invalid_argument("--pair needs two distinct irrep labels");
  if (grid < 2) throw std::invalid_argument("--grid must be at least 2");
  std::vector<io::SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(grid));
  for (int g = 0; g < grid; ++g) {
    const double lambda = static_cast<double>(g) / (grid - 1);
    IrrepDiagonalState state(scheme, {{first, lambda}, {second, 1.0 - lambda}});
    const EntropyReport report = entropy_report(state);
    rows.push_back({lambda, report.s_sys, report.s_a, report.s_b});
  }
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  write_text(out_path, csv.str());
  return kExitOk;
}

int cmd_simulate(const std::string& state_path, long long shots, std::uint64_t seed,
                 const std::string& out_path) {
  const DensityMatrix rho = load_product_state(state_path);
  std::vector<std::string> labels_a, labels_b;
  for (int k = 1; k <= rho.tag().na; ++k) labels_a.push_back("a_" + std::to_string(k));
  for (int m = 1; m <= rho.tag().nb; ++m) labels_b.push_back("b_" + std::to_string(m));
  const DetectorSet da =
      detector_set_from_basis(Matrix::Identity(rho.tag().na, rho.tag().na), labels_a);
  const DetectorSet db =
      detector_set_from_basis(Matrix::Identity(rho.tag().nb, rho.tag().nb), labels_b);
  const MeasurementSeries series =
      sample_counts(rho, composite_detectors(da, db), shots, seed);
  const io::json out = io::series_to_json(series, da.labels(), db.labels());
  std::cout << "simulate: dim " << rho.dim() << ", " << shots << " shots, seed " << seed << "\n";
  if (out_path.empty())
    std::cout << out.dump(2) << "\n";
  else
    io::save_json(out_path, out);
  return kExitOk;
}

int cmd_reconstruct(const std::string& state_path, long long shots,
                    std::optional<std::uint64_t> seed, const std::string& out_path) {
  const DensityMatrix truth = load_product_state(state_path);
  const SpinSpace space_a(truth.tag().na);
  const SpinSpace space_b(truth.tag().nb);
  const ObservableFamily family = product_observable_family(space_a, space_b);

  std::vector<double> averages;
  averages.reserve(family.members.size());
  if (shots <= 0) {
    for (const auto& [label, obs] : family.members) averages.push_back(expectation(obs, truth));
  } else {
    if (!seed) throw std::invalid_argument("--shots needs --seed for a reproducible run");
    for (std::size_t i = 0; i < family.members.size(); ++i) {
      const ValuedDetectors vd = eigen_detectors(family.members[i].second);
      const MeasurementSeries series =
          sample_counts(truth, vd.detectors, shots, derive_seed(*seed, 1, i));
      double avg = 0.0;
      for (std::size_t k = 0; k < vd.values.size(); ++k)
        avg += vd.values[k] * static_cast<double>(series.counts[k]);
      averages.push_back(avg / static_cast<double>(series.shots));
    }
  }

  const ReconstructionResult rec = reconstruct_state(family, averages, truth.tag());
  const double error = trace_norm_hermitian(rec.state.matrix() - truth.matrix());
  std::cout << "reconstruct: dim " << truth.dim() << " rank " << rec.rank << " projection_distance "
            << io::format_sig9(rec.projection_distance) << " trace_norm_error "
            << io::format_sig9(error) << "\n";
  if (!out_path.empty()) io::save_json(out_path, io::state_to_json(rec.state));
  return kExitOk;
}

int cmd_pipeline(const std::string& state_path, long long shots, std::uint64_t seed,
                 const std::string& out_path, const std::string& cov_csv_path) {
  const DensityMatrix rho = load_product_state(state_path);
  PipelineConfig config;
  config.shots = shots;
  config.seed = seed;
  const PipelineResult result = run_pipeline(rho, config);
  std::cout << "pipeline: dim " << rho.dim() << " shots " << shots << " seed " << seed
            << " s_sys " << io::format_sig9(result.report.s_sys) << " s_a "
            << io::format_sig9(result.report.s_a) << " s_b " << io::format_sig9(result.report.s_b)
            << " witness=" << (result.report.witness_fired ? "true" : "false") << "\n";
  if (!out_path.empty()) io::save_json(out_path, io::pipeline_result_to_json(result));
  if (!cov_csv_path.empty()) {
    std::ostringstream csv;
    io::write_covariance_csv(csv, result.covariance);
    write_text(cov_csv_path, csv.str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bipartite spin entanglement toolkit"};
  app.require_subcommand(1);

  std::string scheme_text;
  std::string pair_text;
  std::string state_path;
  std::string out_path;
  std::string cg_path;
  long long shots = 0;
  std::optional<std::uint64_t> seed;
  int grid = 101;

  auto* irreps = app.add_subcommand("irreps", "multiplet decomposition of a coupling scheme");
  irreps->add_option("--scheme", scheme_text, "scheme as 2l,2s")->required();
  irreps->add_option("--cg", cg_path, "write the exact coefficient table to this file");

  auto* entropy = app.add_subcommand("entropy", "entropy report for a state file");
  entropy->add_option("--state", state_path, "state JSON file")->required();
  entropy->add_option("--out", out_path, "write the report here instead of stdout");

  auto* sweep = app.add_subcommand("sweep", "entropies along a two-state mixing path");
  sweep->add_option("--scheme", scheme_text, "scheme as 2l,2s")->required();
  sweep->add_option("--pair", pair_text, "labels as 2j1,2mj1:2j2,2mj2")->required();
  sweep->add_option("--grid", grid, "number of mixing weights, endpoints included");
  sweep->add_option("--out", out_path, "write the CSV here instead of stdout");

  auto* simulate = app.add_subcommand("simulate", "sample magnetic-basis detector counts");
  simulate->add_option("--state", state_path, "state JSON file")->required();
  simulate->add_option("--shots", shots, "shots in the series")->required();
  simulate->add_option("--seed", seed, "series seed")->required();
  simulate->add_option("--out", out_path, "write the series here instead of stdout");

  auto* reconstruct = app.add_subcommand("reconstruct", "recover a state from expectations");
  reconstruct->add_option("--state", state_path, "state JSON file supplying the data")->required();
  reconstruct->add_option("--shots", shots, "sample expectations with this many shots per series "
                                            "(omit for exact expectations)");
  reconstruct->add_option("--seed", seed, "master seed for sampled expectations");
  reconstruct->add_option("--out", out_path, "write the reconstructed state here");

  std::string cov_csv_path;
  auto* pipeline = app.add_subcommand("pipeline", "simulate, reconstruct, and report entropies");
  pipeline->add_option("--state", state_path, "state JSON file")->required();
  pipeline->add_option("--shots", shots, "shots per measurement series")->required();
  pipeline->add_option("--seed", seed, "master seed")->required();
  pipeline->add_option("--out", out_path, "write the full result here");
  pipeline->add_option("--cov-csv", cov_csv_path, "write the covariance grid as labeled CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (irreps->parsed()) return cmd_irreps(scheme_text, cg_path);
    if (entropy->parsed()) return cmd_entropy(state_path, out_path);
    if (sweep->parsed()) return cmd_sweep(scheme_text, pair_text, grid, out_path);
    if (simulate->parsed()) return cmd_simulate(state_path, shots, *seed, out_path);
    if (reconstruct->parsed()) return cmd_reconstruct(state_path, shots, seed, out_path);
    if (pipeline->parsed()) return cmd_pipeline(state_path, shots, *seed, out_path, cov_csv_path);
  } catch (const spinent::InvalidStateError& e) {
    std::cerr << "invalid state: " << e.what() << "\n";
    return kExitInvalidState;
  } catch (const spinent::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const spinent::io::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
