#include "eur/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "eur/bound_report.hpp"
#include "eur/bounds.hpp"
#include "eur/generators.hpp"
#include "eur/nelder_mead.hpp"
#include "eur/quantum.hpp"

namespace eur {

namespace {

using Objective = std::function<double(const Eigen::VectorXd&)>;

const RenyiOrder& order_for(std::span<const RenyiOrder> orders, std::size_t m) {
  return orders.size() == 1 ? orders[0] : orders[m];
}

void check_orders(const MeasurementChaind& chain, std::span<const RenyiOrder> orders) {
  if (orders.size() != 1 && orders.size() != chain.size())
    throw InvalidInput("orders must have length 1 or N = " + std::to_string(chain.size()) +
                       " (got " + std::to_string(orders.size()) + ")");
}

// The MU-type bounds hold for Shannon sums, hence for every order alpha <= 1.
bool mu_bounds_apply(std::span<const RenyiOrder> orders) {
  return std::all_of(orders.begin(), orders.end(),
                     [](const RenyiOrder& o) { return !o.is_infinite() && o.alpha() <= 1.0; });
}

struct MultiStartResult {
  NelderMeadResult<double> best;
  int converged = 0;
};

MultiStartResult multi_start(const Objective& objective, Eigen::Index state_dim,
                             const MinimizationConfig& config, Rng& rng) {
  if (config.restarts < 1) throw InvalidInput("restarts must be >= 1");
  NelderMeadOptions<double> options;
  options.max_iterations = config.max_iterations;
  options.f_tolerance = config.tolerance;

  MultiStartResult out;
  out.best.value = std::numeric_limits<double>::infinity();
  for (int r = 0; r < config.restarts; ++r) {
    const auto start = PureStateParameterization::from_state(random_pure_state(state_dim, rng));
    auto result = nelder_mead<double>(objective, start, options);
    if (result.converged) ++out.converged;
    if (result.value < out.best.value) out.best = std::move(result);
  }
  return out;
}

double pure_conditional_entropy_sum(const MeasurementChaind& chain, Eigen::Index dim_b,
                                    const ComplexVector<double>& psi) {
  // H(M|B) = H(M) - S(rho_B) for a pure joint state.
  const Eigen::Index da = chain.dim();
  const Eigen::Map<const Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                                       Eigen::RowMajor>>
      amplitudes(psi.data(), da, dim_b);
  const ComplexMatrix<double> gram = amplitudes.adjoint() * amplitudes;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<double>> es(gram, Eigen::EigenvaluesOnly);
  const double s_b = shannon_entropy(es.eigenvalues().cwiseMax(0.0).eval());
  double total = 0;
  for (const auto& basis : chain) {
    const RealVector<double> p = (basis.vectors().adjoint() * amplitudes).rowwise().squaredNorm();
    total += shannon_entropy(p) - s_b;
  }
  return total;
}

}  // namespace

double VerificationResult::min_slack() const {
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& [name, slack] : slack_per_bound) worst = std::min(worst, slack);
  return worst;
}

double SpotCheckReport::min_slack() const {
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& [name, slack] : worst_slack) worst = std::min(worst, slack);
  return worst;
}

PureStated PureStateParameterization::to_state(const Eigen::VectorXd& params, Eigen::Index d) {
  if (params.size() != parameter_count(d))
    throw InvalidInput("expected " + std::to_string(parameter_count(d)) + " parameters");
  ComplexVector<double> psi(d);
  double sines = 1.0;
  for (Eigen::Index k = 0; k + 1 < d; ++k) {
    psi(k) = sines * std::cos(params(k));
    sines *= std::sin(params(k));
  }
  psi(d - 1) = sines;
  for (Eigen::Index k = 1; k < d; ++k) psi(k) *= std::polar(1.0, params(d - 2 + k));
  return PureStated::normalized(psi);
}

Eigen::VectorXd PureStateParameterization::from_state(const PureStated& psi) {
  const Eigen::Index d = psi.dim();
  Eigen::VectorXd params(parameter_count(d));
  ComplexVector<double> v = psi.amplitudes();
  if (std::abs(v(0)) > 0) v *= std::conj(v(0)) / std::abs(v(0));
  const Eigen::VectorXd r = v.cwiseAbs();
  for (Eigen::Index k = 0; k + 1 < d; ++k) {
    const double tail = r.tail(d - k - 1).norm();
    params(k) = std::atan2(tail, r(k));
  }
  for (Eigen::Index k = 1; k < d; ++k) params(d - 2 + k) = std::arg(v(k));
  return params;
}

double entropy_sum(const MeasurementChaind& chain, const DensityMatrixd& rho,
                   std::span<const RenyiOrder> orders) {
  check_orders(chain, orders);
  double total = 0;
  for (std::size_t m = 0; m < chain.size(); ++m)
    total += renyi_entropy(outcome_distribution(chain[m], rho), order_for(orders, m));
  return total;
}

double entropy_sum(const MeasurementChaind& chain, const PureStated& psi,
                   std::span<const RenyiOrder> orders) {
  check_orders(chain, orders);
  double total = 0;
  for (std::size_t m = 0; m < chain.size(); ++m)
    total += renyi_entropy(outcome_distribution(chain[m], psi), order_for(orders, m));
  return total;
}

double conditional_entropy_sum(const MeasurementChaind& chain, const BipartiteStated& rho) {
  double total = 0;
  for (const auto& basis : chain) total += measured_conditional_entropy(basis, rho);
  return total;
}

VerificationResult minimize_entropy_sum(const MeasurementChaind& chain,
                                        std::span<const RenyiOrder> orders,
                                        const MinimizationConfig& config) {
  check_orders(chain, orders);
  const Eigen::Index d = chain.dim();
  Rng rng(config.seed);

  const Objective objective = [&](const Eigen::VectorXd& x) {
    return entropy_sum(chain, PureStateParameterization::to_state(x, d), orders);
  };
  const auto found = multi_start(objective, d, config, rng);

  VerificationResult result(found.best.value, PureStateParameterization::to_state(found.best.x, d));
  result.minimizer_parameters = found.best.x;
  result.converged_restarts = found.converged;
  const auto& psi = std::get<PureStated>(result.minimizer);
  const double obj = result.objective_min;

  result.slack_per_bound[std::string(to_string(BoundName::DeutschMulti))] =
      obj - deutsch_multi_bound(chain);
  if (mu_bounds_apply(orders)) {
    const DensityMatrixd rho(psi);
    result.slack_per_bound[std::string(to_string(BoundName::MuMulti))] = obj - mu_multi_bound(chain);
    result.slack_per_bound[std::string(to_string(BoundName::ScbMax))] = obj - scb_max_bound(chain);
    result.slack_per_bound[std::string(to_string(BoundName::MuTwo))] =
        obj - best_pair_bound(chain).value;
    result.slack_per_bound[std::string(to_string(BoundName::StateDependent))] =
        obj - state_dependent_bound(chain, rho);

    if (chain.size() == 3) {
      // H(M1) + H(M2) + 2 H(M3)
      const Objective weighted = [&](const Eigen::VectorXd& x) {
        const auto state = PureStateParameterization::to_state(x, d);
        double total = 0;
        for (std::size_t m = 0; m < 3; ++m)
          total += (m == 2 ? 2.0 : 1.0) *
                   renyi_entropy(outcome_distribution(chain[m], state), order_for(orders, m));
        return total;
      };
      Rng weighted_rng(config.seed + 0x9e3779b97f4a7c15ULL);
      const auto w = multi_start(weighted, d, config, weighted_rng);
      result.weighted_objective_min = w.best.value;
      result.slack_per_bound[std::string(to_string(BoundName::Weighted))] =
          w.best.value - weighted_bound(chain[0], chain[1], chain[2]);
    }
  }
  result.certified = result.min_slack() >= -certification_tolerance;
  return result;
}

VerificationResult minimize_conditional_entropy_sum(const MeasurementChaind& chain,
                                                    Eigen::Index dim_b,
                                                    const MinimizationConfig& config) {
  if (dim_b < 1) throw InvalidInput("dimB must be >= 1");
  const Eigen::Index da = chain.dim();
  const Eigen::Index joint_dim = da * dim_b;
  Rng rng(config.seed);

  const Objective objective = [&](const Eigen::VectorXd& x) {
    return pure_conditional_entropy_sum(
        chain, dim_b, PureStateParameterization::to_state(x, joint_dim).amplitudes());
  };
  const auto found = multi_start(objective, joint_dim, config, rng);

  const BipartiteStated best(da, dim_b, PureStateParameterization::to_state(found.best.x, joint_dim));
  VerificationResult result(conditional_entropy_sum(chain, best), best);
  result.minimizer_parameters = found.best.x;
  result.converged_restarts = found.converged;
  const double obj = result.objective_min;

  auto best_berta = [&](const BipartiteStated& rho) {
    double value = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < chain.size(); ++i)
      for (std::size_t j = i + 1; j < chain.size(); ++j)
        value = std::max(value, berta_two_bound(chain[i], chain[j], rho));
    return value;
  };
  result.slack_per_bound[std::string(to_string(BoundName::MemoryMulti))] =
      obj - memory_multi_bound(chain, best);
  result.slack_per_bound[std::string(to_string(BoundName::MemoryPure))] =
      obj - memory_pure_bound(chain, best);
  result.slack_per_bound[std::string(to_string(BoundName::BertaTwo))] = obj - best_berta(best);

  double worst_multi = std::numeric_limits<double>::infinity();
  double worst_berta = std::numeric_limits<double>::infinity();
  std::uniform_int_distribution<Eigen::Index> rank_dist(1, joint_dim);
  for (int s = 0; s < config.mixed_samples; ++s) {
    const auto rho = random_bipartite_state(da, dim_b, rank_dist(rng), rng);
    const double lhs = conditional_entropy_sum(chain, rho);
    worst_multi = std::min(worst_multi, lhs - memory_multi_bound(chain, rho));
    worst_berta = std::min(worst_berta, lhs - best_berta(rho));
  }
  if (config.mixed_samples > 0) {
    result.slack_per_bound["MEMORY_MULTI[mixed]"] = worst_multi;
    result.slack_per_bound["BERTA_TWO[mixed]"] = worst_berta;
  }
  result.certified = result.min_slack() >= -certification_tolerance;
  return result;
}

SpotCheckReport spot_check_inequalities(const MeasurementChaind& chain, int samples,
                                        std::uint64_t seed) {
  if (samples < 1) throw InvalidInput("samples must be >= 1");
  const Eigen::Index d = chain.dim();
  const std::size_t n = chain.size();
  const RenyiOrder min_entropy[] = {RenyiOrder::infinity()};
  const double mu = mu_multi_bound(chain);
  const double deutsch = deutsch_multi_bound(chain);

  SpotCheckReport report;
  report.samples = samples;
  auto record = [&](BoundName name, double slack, const char* suffix = "") {
    const std::string key = std::string(to_string(name)) + suffix;
    auto [it, inserted] = report.worst_slack.try_emplace(key, slack);
    if (!inserted) it->second = std::min(it->second, slack);
  };

  auto check_single = [&](const DensityMatrixd& rho) {
    std::vector<double> h(n);
    for (std::size_t m = 0; m < n; ++m) h[m] = shannon_entropy(outcome_distribution(chain[m], rho));
    const double sum = std::accumulate(h.begin(), h.end(), 0.0);
    const double s = von_neumann_entropy(rho);
    const double sdb = state_dependent_bound(chain, rho);
    const double mu_state = mu + double(n - 1) * s;
    record(BoundName::DeutschMulti, entropy_sum(chain, rho, min_entropy) - deutsch);
    record(BoundName::MuMulti, sum - mu_state);
    record(BoundName::StateDependent, sum - sdb);
    record(BoundName::StateDependent, sdb - mu_state, "[>=MU_MULTI]");
    record(BoundName::ScbMax, sum - scb_max_bound(chain, s));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        record(BoundName::MuTwo, h[i] + h[j] - mu_two_bound(chain[i], chain[j], s));
    if (n == 3)
      record(BoundName::Weighted, h[0] + h[1] + 2 * h[2] - weighted_bound(chain[0], chain[1], chain[2], s));
  };

  auto check_joint = [&](const BipartiteStated& rho) {
    std::vector<double> h(n);
    for (std::size_t m = 0; m < n; ++m) h[m] = measured_conditional_entropy(chain[m], rho);
    const double sum = std::accumulate(h.begin(), h.end(), 0.0);
    record(BoundName::MemoryMulti, sum - memory_multi_bound(chain, rho));
    if (rho.is_pure()) record(BoundName::MemoryPure, sum - memory_pure_bound(chain, rho));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        record(BoundName::BertaTwo, h[i] + h[j] - berta_two_bound(chain[i], chain[j], rho));
  };

  Rng rng(seed);
  std::uniform_int_distribution<Eigen::Index> rank_dist(1, d);
  std::uniform_int_distribution<Eigen::Index> dim_b_dist(1, 3);
  for (int s = 0; s < samples; ++s) {
    check_single(DensityMatrixd(random_pure_state(d, rng)));
    check_single(random_density_matrix(d, rank_dist(rng), rng));
    const Eigen::Index db = dim_b_dist(rng);
    check_joint(BipartiteStated(d, db, random_pure_state(d * db, rng)));
    std::uniform_int_distribution<Eigen::Index> joint_rank(1, d * db);
    check_joint(random_bipartite_state(d, db, joint_rank(rng), rng));
  }
  return report;
}

}  // namespace eur
