#ifndef EUR_VERIFIER_HPP
#define EUR_VERIFIER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "eur/entropy.hpp"
#include "eur/types.hpp"

// Numerical certification of the bounds: entropy sums are minimized over
// states (multi-start downhill simplex) and compared against every bound.

namespace eur {

/// Slack below which a bound counts as violated.
inline constexpr double certification_tolerance = 1e-6;

struct MinimizationConfig {
  int restarts = 64;
  int max_iterations = 2000;
  double tolerance = 1e-10;  // objective spread at convergence
  std::uint64_t seed = 0;
  int mixed_samples = 200;  // random mixed joint states checked in memory mode
};

using Minimizer = std::variant<PureStated, BipartiteStated>;

struct VerificationResult {
  VerificationResult(double objective, Minimizer state)
      : objective_min(objective), minimizer(std::move(state)) {}

  double objective_min = 0;
  Minimizer minimizer;
  Eigen::VectorXd minimizer_parameters;
  std::map<std::string, double> slack_per_bound;
  std::optional<double> weighted_objective_min;
  int converged_restarts = 0;
  bool certified = false;

  double min_slack() const;
};

/// Pure states of C^d modulo norm and global phase, as 2d - 2 reals:
/// d - 1 hyperspherical angles for the magnitudes followed by the d - 1
/// relative phases of components 1..d-1.
struct PureStateParameterization {
  static Eigen::Index parameter_count(Eigen::Index d) { return 2 * d - 2; }
  static PureStated to_state(const Eigen::VectorXd& params, Eigen::Index d);
  static Eigen::VectorXd from_state(const PureStated& psi);
};

/// sum_m H_{alpha_m}(outcome distribution of M_m); a single order is
/// broadcast to every basis.
double entropy_sum(const MeasurementChaind& chain, const DensityMatrixd& rho,
                   std::span<const RenyiOrder> orders);
double entropy_sum(const MeasurementChaind& chain, const PureStated& psi,
                   std::span<const RenyiOrder> orders);

/// sum_m H(M_m|B).
double conditional_entropy_sum(const MeasurementChaind& chain, const BipartiteStated& rho);

VerificationResult minimize_entropy_sum(const MeasurementChaind& chain,
                                        std::span<const RenyiOrder> orders,
                                        const MinimizationConfig& config = {});

VerificationResult minimize_conditional_entropy_sum(const MeasurementChaind& chain,
                                                    Eigen::Index dim_b,
                                                    const MinimizationConfig& config = {});

struct SpotCheckReport {
  int samples = 0;
  std::map<std::string, double> worst_slack;

  double min_slack() const;
  bool all_ok() const { return min_slack() >= -certification_tolerance; }
};

/// Evaluates every inequality on `samples` random pure, mixed and bipartite
/// states; reports the worst slack per inequality.
SpotCheckReport spot_check_inequalities(const MeasurementChaind& chain, int samples,
                                        std::uint64_t seed);

}  // namespace eur

#endif  // EUR_VERIFIER_HPP
