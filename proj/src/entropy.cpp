#include "spinent/entropy.hpp"

#include <cmath>

namespace spinent {

namespace {

double plogp_sum(std::span<const double> p) {
  double h = 0.0;
  for (double v : p)
    if (v > 1e-300) h -= v * std::log2(v);
  return h;
}

}  // namespace

double shannon_entropy(std::span<const double> p) {
  double total = 0.0;
  std::vector<double> clean(p.begin(), p.end());
  for (double& v : clean) {
    if (v < -1e-12) throw InvalidStateError("probability is negative");
    if (v < 0.0) v = 0.0;
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw InvalidStateError("probabilities do not sum to 1");
  return plogp_sum(clean);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::VectorXd ev = hermitian_eigenvalues(rho.matrix());
  std::vector<double> p(ev.data(), ev.data() + ev.size());
  for (double& v : p)
    if (v < 0.0 && v >= -1e-10) v = 0.0;
  return shannon_entropy(p);
}

double entanglement_entropy_pure(const CouplingScheme& scheme, HalfInt j, HalfInt mj) {
  const CGTable& table = cg_table(scheme);
  std::vector<double> p;
  for (int tm = -scheme.l.twice; tm <= scheme.l.twice; tm += 2)
    p.push_back(table.subsystem_weight(j, mj, Side::A, half(tm)).to_double());
  return shannon_entropy(p);
}

EntropyReport entropy_report(const IrrepDiagonalState& state, double witness_tol) {
  EntropyReport report;

  std::vector<double> weights;
  weights.reserve(state.weights.size());
  for (const auto& [label, w] : state.weights) weights.push_back(w);
  report.s_sys = shannon_entropy(weights);

  report.s_a = shannon_entropy(reduced_distribution(state, Side::A).probs);
  report.s_b = shannon_entropy(reduced_distribution(state, Side::B).probs);

  for (const auto& [label, w] : state.weights) {
    if (w == 0.0) continue;
    const double s_pure = entanglement_entropy_pure(state.scheme, label.j, label.mj);
    report.lower_bound_a += w * s_pure;
    report.lower_bound_b += w * s_pure;
  }

  report.witness_fired =
      report.s_a > report.s_sys + witness_tol || report.s_b > report.s_sys + witness_tol;
  return report;
}

EntropyReport entropy_report(const DensityMatrix& rho, double witness_tol) {
  if (rho.tag().kind != BasisTag::Kind::Product)
    throw std::invalid_argument("matrix entropy report requires a product-basis state, got " +
                                rho.tag().str());
  EntropyReport report;
  report.s_sys = von_neumann_entropy(rho);
  report.s_a = von_neumann_entropy(partial_trace(rho, Side::A));
  report.s_b = von_neumann_entropy(partial_trace(rho, Side::B));
  report.lower_bound_a = 0.0;
  report.lower_bound_b = 0.0;
  report.witness_fired =
      report.s_a > report.s_sys + witness_tol || report.s_b > report.s_sys + witness_tol;
  return report;
}

}  // namespace spinent
