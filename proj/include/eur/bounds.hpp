#ifndef EUR_BOUNDS_HPP
#define EUR_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <type_traits>
#include <vector>

#include "eur/entropy.hpp"
#include "eur/quantum.hpp"
#include "eur/types.hpp"

// Lower bounds on sums of measurement entropies, in bits.
//
// Notation: chain = (M_1, ..., M_N) with bases {u^m_i}; c_m is the overlap
// table between M_m and M_{m+1}.

namespace eur {

/// beta^N_j = sum_{i_1..i_{N-1}} p^1_{i_1} c(u^1_{i_1},u^2_{i_2}) ... c(u^{N-1}_{i_{N-1}},u^N_j),
/// indexed by the outcome j of the last basis.
template <typename Real> struct ChainCoefficients {
  RealVector<Real> beta;
};

/// A bound value together with the basis order that produced it.
template <typename Real> struct OrderedBound {
  Real value;
  std::vector<std::size_t> order;
};

namespace detail {

template <typename Real> Real neg_log2(Real x) { return -std::log2(x); }

inline std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

}  // namespace detail

/// h = max over (i_1..i_N) of prod_m (1 + sqrt(c(u^m_{i_m}, u^{m+1}_{i_{m+1}}))) / 2,
/// cyclic in m. The maximum over the index tuple is a max-times contraction
/// around the cycle, evaluated once per starting index.
template <typename Real> Real deutsch_h(const MeasurementChain<Real>& chain) {
  const std::size_t n = chain.size();
  const Eigen::Index d = chain.dim();
  std::vector<RealMatrix<Real>> factors;
  factors.reserve(n);
  for (std::size_t m = 0; m < n; ++m) {
    const auto c = overlap_table(chain[m], chain[(m + 1) % n]).entries();
    factors.push_back(((c.array().sqrt() + Real(1)) / Real(2)).matrix());
  }
  Real h = 0;
  RealVector<Real> next(d);
  for (Eigen::Index start = 0; start < d; ++start) {
    RealVector<Real> v = factors[0].row(start).transpose();
    for (std::size_t m = 1; m < n; ++m) {
      for (Eigen::Index k = 0; k < d; ++k)
        next(k) = (v.array() * factors[m].col(k).array()).maxCoeff();
      v = next;
    }
    h = std::max(h, v(start));
  }
  return h;
}

/// -log h: lower bound on sum_m H_inf(M_m), hence on any sum of Renyi
/// entropies by monotonicity in the order.
template <typename Real> Real deutsch_multi_bound(const MeasurementChain<Real>& chain) {
  return detail::neg_log2(deutsch_h(chain));
}

/// b = max_{i_N} sum_{i_2..i_{N-1}} max_{i_1}[c(u^1_{i_1},u^2_{i_2})] prod_{m=2}^{N-1} c_m.
/// For N = 2 this is c(M_1, M_2).
template <typename Real> Real mu_b(const MeasurementChain<Real>& chain) {
  RealVector<Real> v = overlap_table(chain[0], chain[1]).entries().colwise().maxCoeff().transpose();
  for (std::size_t m = 1; m + 1 < chain.size(); ++m)
    v = (v.transpose() * overlap_table(chain[m], chain[m + 1]).entries()).transpose();
  return v.maxCoeff();
}

template <typename Real> Real mu_multi_bound(const MeasurementChain<Real>& chain) {
  return detail::neg_log2(mu_b(chain));
}

/// -log b + (N - 1) S(rho).
template <typename Real>
Real mu_multi_bound_with_state(const MeasurementChain<Real>& chain,
                               const DensityMatrix<Real>& rho) {
  detail::require_same_dim(chain.dim(), rho.dim(), "mu_multi_bound_with_state");
  return mu_multi_bound(chain) + Real(chain.size() - 1) * von_neumann_entropy(rho);
}

template <typename Real>
ChainCoefficients<Real> chain_coefficients(const MeasurementChain<Real>& chain,
                                           const DensityMatrix<Real>& rho) {
  RealVector<Real> beta = outcome_distribution(chain[0], rho);
  for (std::size_t m = 0; m + 1 < chain.size(); ++m)
    beta = (beta.transpose() * overlap_table(chain[m], chain[m + 1]).entries()).transpose();
  return {beta};
}

/// N S(rho) + S(rho || sum_j beta^N_j |u^N_j><u^N_j|). Returns +inf if the
/// relative entropy is infinite.
template <typename Real>
Real state_dependent_bound(const MeasurementChain<Real>& chain, const DensityMatrix<Real>& rho) {
  detail::require_same_dim(chain.dim(), rho.dim(), "state_dependent_bound");
  const auto coeffs = chain_coefficients(chain, rho);
  const auto& last = chain[chain.size() - 1].vectors();
  const auto sigma = DensityMatrix<Real>::trusted(
      last * coeffs.beta.template cast<Complex<Real>>().asDiagonal() * last.adjoint());
  const auto rel = relative_entropy(rho, sigma);
  if (rel.infinite) return rel.value();
  return Real(chain.size()) * von_neumann_entropy(rho) + rel.bits;
}

/// Right-hand side for H(U) + H(V) + 2 H(W):
/// 2 S(rho) - log max_{i,j,k} c(u_i,w_k) c(w_k,v_j).
template <typename Real>
Real weighted_bound(const MeasurementBasis<Real>& u, const MeasurementBasis<Real>& v,
                    const MeasurementBasis<Real>& w, std::type_identity_t<Real> state_entropy = Real(0)) {
  detail::require_same_dim(u.dim(), v.dim(), "weighted_bound");
  const RealVector<Real> uw = overlap_table(u, w).entries().colwise().maxCoeff().transpose();
  const RealVector<Real> wv = overlap_table(w, v).entries().rowwise().maxCoeff();
  return Real(2) * state_entropy + detail::neg_log2(uw.cwiseProduct(wv).maxCoeff());
}

template <typename Real>
Real weighted_bound(const MeasurementBasis<Real>& u, const MeasurementBasis<Real>& v,
                    const MeasurementBasis<Real>& w, const DensityMatrix<Real>& rho) {
  detail::require_same_dim(u.dim(), rho.dim(), "weighted_bound");
  return weighted_bound(u, v, w, von_neumann_entropy(rho));
}

/// -log c(A, B) + S(rho).
template <typename Real>
Real mu_two_bound(const MeasurementBasis<Real>& a, const MeasurementBasis<Real>& b,
                  std::type_identity_t<Real> state_entropy = Real(0)) {
  return detail::neg_log2(max_overlap(a, b)) + state_entropy;
}

template <typename Real>
Real mu_two_bound(const MeasurementBasis<Real>& a, const MeasurementBasis<Real>& b,
                  const DensityMatrix<Real>& rho) {
  detail::require_same_dim(a.dim(), rho.dim(), "mu_two_bound");
  return mu_two_bound(a, b, von_neumann_entropy(rho));
}

/// Best pairwise MU bound over all unordered pairs of the chain.
template <typename Real>
OrderedBound<Real> best_pair_bound(const MeasurementChain<Real>& chain,
                                   std::type_identity_t<Real> state_entropy = Real(0)) {
  OrderedBound<Real> best{-std::numeric_limits<Real>::infinity(), {}};
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      const Real value = mu_two_bound(chain[i], chain[j], state_entropy);
      if (value > best.value) best = {value, {i, j}};
    }
  return best;
}

/// Largest simply constructed bound: the cyclic summation bound
/// (1/2) sum_m -log c(M_m, M_{m+1}) + (N/2) S(rho), or any pairwise
/// -log c(M_i, M_j) + S(rho), whichever is larger.
template <typename Real>
Real scb_max_bound(const MeasurementChain<Real>& chain, std::type_identity_t<Real> state_entropy = Real(0)) {
  const std::size_t n = chain.size();
  Real cycle = Real(n) / Real(2) * state_entropy;
  for (std::size_t m = 0; m < n; ++m)
    cycle += detail::neg_log2(max_overlap(chain[m], chain[(m + 1) % n])) / Real(2);
  return std::max(cycle, best_pair_bound(chain, state_entropy).value);
}

template <typename Real>
Real scb_max_bound(const MeasurementChain<Real>& chain, const DensityMatrix<Real>& rho) {
  detail::require_same_dim(chain.dim(), rho.dim(), "scb_max_bound");
  return scb_max_bound(chain, von_neumann_entropy(rho));
}

/// Lower bound on sum_m H(M_m|B): -log b + (N - 1) S(A|B).
template <typename Real>
Real memory_multi_bound(const MeasurementChain<Real>& chain, const BipartiteState<Real>& rho) {
  detail::require_same_dim(chain.dim(), rho.dim_a(), "memory_multi_bound");
  return mu_multi_bound(chain) + Real(chain.size() - 1) * conditional_entropy(rho);
}

/// -log b + S(A|B); valid for pure rho_AB only.
template <typename Real>
Real memory_pure_bound(const MeasurementChain<Real>& chain, const BipartiteState<Real>& rho) {
  detail::require_same_dim(chain.dim(), rho.dim_a(), "memory_pure_bound");
  if (!rho.is_pure())
    throw InvalidInput("memory_pure_bound requires a pure bipartite state (Tr rho^2 = " +
                       detail::str(rho.joint().purity()) + ")");
  return mu_multi_bound(chain) + conditional_entropy(rho);
}

/// Lower bound on H(U|B) + H(V|B): -log c(U,V) + S(A|B).
template <typename Real>
Real berta_two_bound(const MeasurementBasis<Real>& a, const MeasurementBasis<Real>& b,
                     const BipartiteState<Real>& rho) {
  detail::require_same_dim(a.dim(), rho.dim_a(), "berta_two_bound");
  return detail::neg_log2(max_overlap(a, b)) + conditional_entropy(rho);
}

/// mu_multi_bound maximized over all N! orderings of the chain.
template <typename Real>
OrderedBound<Real> best_order_mu_multi_bound(const MeasurementChain<Real>& chain) {
  auto order = detail::identity_order(chain.size());
  OrderedBound<Real> best{-std::numeric_limits<Real>::infinity(), order};
  do {
    const Real value = mu_multi_bound(chain.reordered(order));
    if (value > best.value) best = {value, order};
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

/// deutsch_multi_bound maximized over the (N-1)!/2 distinct cyclic orders
/// (basis 0 fixed first, reversals skipped).
template <typename Real>
OrderedBound<Real> best_order_deutsch_multi_bound(const MeasurementChain<Real>& chain) {
  auto order = detail::identity_order(chain.size());
  OrderedBound<Real> best{-std::numeric_limits<Real>::infinity(), order};
  do {
    if (order.size() > 2 && order[1] > order.back()) continue;
    const Real value = deutsch_multi_bound(chain.reordered(order));
    if (value > best.value) best = {value, order};
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return best;
}

}  // namespace eur

#endif  // EUR_BOUNDS_HPP
