#ifndef EUR_NELDER_MEAD_HPP
#define EUR_NELDER_MEAD_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>
#include <vector>

namespace eur {

template <typename Real> struct NelderMeadOptions {
  int max_iterations = 2000;
  Real f_tolerance = Real(1e-10);  // on f_worst - f_best over the simplex
  Real initial_step = Real(0.25);
  int max_rebuilds = 2;  // fresh simplices around a converged point
};

template <typename Real> struct NelderMeadResult {
  Eigen::Matrix<Real, Eigen::Dynamic, 1> x;
  Real value;
  int iterations = 0;
  bool converged = false;
};

/// Downhill simplex with dimension-adaptive coefficients (Gao & Han 2012).
///
/// On convergence the simplex is rebuilt around the best vertex with a smaller
/// step, up to `max_rebuilds` times; a rebuild that does not lower the best
/// value by more than the tolerance ends the search.
template <typename Real, typename Objective>
NelderMeadResult<Real> nelder_mead(Objective&& f, Eigen::Matrix<Real, Eigen::Dynamic, 1> x0,
                                   const NelderMeadOptions<Real>& options = {}) {
  using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
  const Eigen::Index n = x0.size();
  NelderMeadResult<Real> result{x0, f(x0)};
  if (n == 0) {
    result.converged = true;
    return result;
  }

  const Real alpha = 1;
  const Real beta = Real(1) + Real(2) / Real(n);
  const Real gamma = Real(0.75) - Real(1) / (Real(2) * Real(n));
  const Real delta = Real(1) - Real(1) / Real(n);

  std::vector<Vector> simplex(n + 1);
  std::vector<Real> values(n + 1);
  std::vector<std::size_t> idx(n + 1);

  auto build = [&](const Vector& centre, Real step) {
    simplex[0] = centre;
    values[0] = f(centre);
    for (Eigen::Index i = 0; i < n; ++i) {
      simplex[i + 1] = centre;
      simplex[i + 1](i) += step;
      values[i + 1] = f(simplex[i + 1]);
    }
  };

  Real step = options.initial_step;
  build(x0, step);
  int rebuilds = 0;
  Real last_best = values[0];

  while (result.iterations < options.max_iterations) {
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = idx.front();
    const std::size_t worst = idx.back();
    const std::size_t second_worst = idx[n - 1];

    if (values[worst] - values[best] <= options.f_tolerance) {
      const bool improved = last_best - values[best] > options.f_tolerance;
      if (rebuilds >= options.max_rebuilds || (rebuilds > 0 && !improved)) {
        result.converged = true;
        break;
      }
      last_best = values[best];
      ++rebuilds;
      step /= Real(10);
      const Vector centre = simplex[best];
      build(centre, step);
      continue;
    }
    ++result.iterations;

    Vector centroid = Vector::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) centroid += simplex[idx[i]];
    centroid /= Real(n);

    const Vector reflected = centroid + alpha * (centroid - simplex[worst]);
    const Real f_reflected = f(reflected);
    if (f_reflected < values[best]) {
      const Vector expanded = centroid + beta * (reflected - centroid);
      const Real f_expanded = f(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }
    const bool outside = f_reflected < values[worst];
    const Vector contracted = outside ? Vector(centroid + gamma * (reflected - centroid))
                                      : Vector(centroid - gamma * (centroid - simplex[worst]));
    const Real f_contracted = f(contracted);
    if (f_contracted < (outside ? f_reflected : values[worst])) {
      simplex[worst] = contracted;
      values[worst] = f_contracted;
      continue;
    }
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
      if (i == best) continue;
      simplex[i] = simplex[best] + delta * (simplex[i] - simplex[best]);
      values[i] = f(simplex[i]);
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  const auto best = static_cast<std::size_t>(std::distance(values.begin(), best_it));
  result.x = simplex[best];
  result.value = values[best];
  return result;
}

}  // namespace eur

#endif  // EUR_NELDER_MEAD_HPP
