#ifndef EUR_ENTROPY_HPP
#define EUR_ENTROPY_HPP

#include <cmath>
#include <limits>
#include <string>

#include "eur/quantum.hpp"
#include "eur/types.hpp"

// All entropies are in bits.

namespace eur {

/// Order alpha > 0 of a Renyi entropy, or the exact symbolic order infinity.
class RenyiOrder {
 public:
  explicit RenyiOrder(double alpha) : alpha_(alpha), infinite_(false) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
      throw InvalidInput("Renyi order must be a finite real > 0 or infinity");
  }

  static RenyiOrder shannon() { return RenyiOrder(1.0); }
  static RenyiOrder infinity() {
    RenyiOrder order(1.0);
    order.infinite_ = true;
    return order;
  }

  bool is_infinite() const { return infinite_; }
  bool is_shannon() const { return !infinite_ && alpha_ == 1.0; }
  double alpha() const { return infinite_ ? std::numeric_limits<double>::infinity() : alpha_; }

  friend bool operator==(const RenyiOrder& a, const RenyiOrder& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.alpha_ == b.alpha_);
  }

 private:
  double alpha_;
  bool infinite_;
};

namespace detail {

// 0 log 0 := 0 by skipping entries below this threshold.
inline constexpr double zero_probability = 1e-15;

template <typename Real> Real log2(Real x) { return std::log2(x); }

}  // namespace detail

template <typename Derived> auto shannon_entropy(const Eigen::MatrixBase<Derived>& p) {
  using Real = typename Derived::RealScalar;
  Real h = 0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const Real pi = p(i);
    if (pi > Real(detail::zero_probability)) h -= pi * detail::log2(pi);
  }
  return h;
}

/// H_alpha(p) = log(sum_i p_i^alpha) / (1 - alpha); alpha = 1 is Shannon,
/// alpha = infinity is the min-entropy -log max_i p_i.
template <typename Derived>
auto renyi_entropy(const Eigen::MatrixBase<Derived>& p, const RenyiOrder& order) {
  using Real = typename Derived::RealScalar;
  if (order.is_infinite()) return -detail::log2(Real(p.maxCoeff()));
  if (order.is_shannon()) return shannon_entropy(p);
  const Real alpha = Real(order.alpha());
  Real sum = 0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const Real pi = p(i);
    if (pi > Real(detail::zero_probability)) sum += std::pow(pi, alpha);
  }
  return detail::log2(sum) / (Real(1) - alpha);
}

/// Eigenvalues of rho, ascending, with slack in [-1e-10, 0) clamped to 0.
template <typename Real> RealVector<Real> spectrum(const DensityMatrix<Real>& rho) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Real>> es(rho.matrix(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
  RealVector<Real> ev = es.eigenvalues();
  if (ev.minCoeff() < -Real(Tolerance::negative_eigenvalue))
    throw NumericalError("negative eigenvalue " + detail::str(ev.minCoeff()) +
                         " beyond PSD slack");
  return ev.cwiseMax(Real(0));
}

/// S(rho) = -Tr(rho log rho).
template <typename Real> Real von_neumann_entropy(const DensityMatrix<Real>& rho) {
  return shannon_entropy(spectrum(rho));
}

/// Value of a relative entropy: finite bits, or +infinity when the support of
/// rho is not contained in the support of sigma.
template <typename Real> struct RelativeEntropy {
  bool infinite = false;
  Real bits = 0;

  static RelativeEntropy infinity() { return {true, std::numeric_limits<Real>::infinity()}; }

  /// +inf for the infinite case.
  Real value() const { return infinite ? std::numeric_limits<Real>::infinity() : bits; }
};

/// S(rho||sigma) = Tr(rho log rho) - Tr(rho log sigma), via the
/// eigendecomposition of sigma. Eigenvalues of sigma at or below 1e-12 count as
/// outside its support.
template <typename Real>
RelativeEntropy<Real> relative_entropy(const DensityMatrix<Real>& rho,
                                       const DensityMatrix<Real>& sigma) {
  detail::require_same_dim(rho.dim(), sigma.dim(), "relative_entropy");
  constexpr Real support_threshold = Real(1e-12);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Real>> es(sigma.matrix());
  if (es.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
  const auto& vecs = es.eigenvectors();
  Real cross = 0;  // -Tr(rho log sigma)
  for (Eigen::Index k = 0; k < vecs.cols(); ++k) {
    const Real weight = std::real(vecs.col(k).dot(rho.matrix() * vecs.col(k)));
    const Real lambda = es.eigenvalues()(k);
    if (lambda <= support_threshold) {
      if (weight > support_threshold) return RelativeEntropy<Real>::infinity();
      continue;
    }
    cross -= weight * detail::log2(lambda);
  }
  return {false, cross - von_neumann_entropy(rho)};
}

/// S(A|B) = S(rho_AB) - S(rho_B). Negative values witness entanglement.
template <typename Real> Real conditional_entropy(const BipartiteState<Real>& rho) {
  return von_neumann_entropy(rho.joint()) - von_neumann_entropy(partial_trace(rho, Subsystem::B));
}

/// H(U|B): conditional entropy of the post-measurement state after measuring
/// `basis` on A.
template <typename Real>
Real measured_conditional_entropy(const MeasurementBasis<Real>& basis,
                                  const BipartiteState<Real>& rho) {
  return conditional_entropy(bipartite_measurement_channel(basis, rho));
}

/// H(U|B) = H(U) - chi(U,B), with the Holevo quantity
/// chi = S(rho_B) - sum_j p_j S(rho_{B,j}) and
/// rho_{B,j} = Tr_A(|u_j><u_j| rho_AB) / p_j. Outcomes with p_j < 1e-14 are
/// skipped.
template <typename Real>
Real holevo_conditional_entropy(const MeasurementBasis<Real>& basis,
                                const BipartiteState<Real>& rho) {
  detail::require_same_dim(basis.dim(), rho.dim_a(), "holevo_conditional_entropy");
  const Eigen::Index da = rho.dim_a();
  const Eigen::Index db = rho.dim_b();
  const auto& m = rho.matrix();
  RealVector<Real> p(da);
  Real conditional_sum = 0;
  for (Eigen::Index j = 0; j < da; ++j) {
    const auto u = basis.vector(j);
    // (<u_j| (x) I) rho_AB (|u_j> (x) I)
    ComplexMatrix<Real> block = ComplexMatrix<Real>::Zero(db, db);
    for (Eigen::Index a = 0; a < da; ++a)
      for (Eigen::Index a2 = 0; a2 < da; ++a2)
        block += std::conj(u(a)) * u(a2) * m.block(a * db, a2 * db, db, db);
    p(j) = std::max(Real(0), std::real(block.trace()));
    if (p(j) < Real(1e-14)) continue;
    conditional_sum += p(j) * von_neumann_entropy(DensityMatrix<Real>::trusted(block / p(j)));
  }
  const Real holevo = von_neumann_entropy(partial_trace(rho, Subsystem::B)) - conditional_sum;
  return shannon_entropy(p) - holevo;
}

}  // namespace eur

#endif  // EUR_ENTROPY_HPP
