#ifndef EUR_QUANTUM_HPP
#define EUR_QUANTUM_HPP

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <string>

#include "eur/types.hpp"

namespace eur {

namespace detail {

inline void require_same_dim(Eigen::Index a, Eigen::Index b, const char* what) {
  if (a != b)
    throw InvalidInput(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                       " vs " + std::to_string(b) + ")");
}

}  // namespace detail

/// entries(i, j) = |<a_i|b_j>|^2.
template <typename Real>
OverlapTable<Real> overlap_table(const MeasurementBasis<Real>& a, const MeasurementBasis<Real>& b) {
  detail::require_same_dim(a.dim(), b.dim(), "overlap_table");
  return OverlapTable<Real>((a.vectors().adjoint() * b.vectors()).cwiseAbs2());
}

/// c(A, B) = max_{i,j} |<a_i|b_j>|^2, a value in [1/d, 1].
template <typename Real>
Real max_overlap(const MeasurementBasis<Real>& a, const MeasurementBasis<Real>& b) {
  return overlap_table(a, b).max();
}

/// p_i = <u_i|rho|u_i>, with round-off negatives clamped to zero.
template <typename Real>
RealVector<Real> outcome_distribution(const MeasurementBasis<Real>& basis,
                                      const DensityMatrix<Real>& rho) {
  detail::require_same_dim(basis.dim(), rho.dim(), "outcome_distribution");
  const auto& u = basis.vectors();
  RealVector<Real> p = (u.adjoint() * rho.matrix() * u).diagonal().real();
  return p.cwiseMax(Real(0));
}

template <typename Real>
RealVector<Real> outcome_distribution(const MeasurementBasis<Real>& basis,
                                      const PureState<Real>& psi) {
  detail::require_same_dim(basis.dim(), psi.dim(), "outcome_distribution");
  return (basis.vectors().adjoint() * psi.amplitudes()).cwiseAbs2();
}

/// Dephasing channel E(rho) = sum_i |u_i><u_i| rho |u_i><u_i|.
template <typename Real>
DensityMatrix<Real> measurement_channel(const MeasurementBasis<Real>& basis,
                                        const DensityMatrix<Real>& rho) {
  detail::require_same_dim(basis.dim(), rho.dim(), "measurement_channel");
  const auto& u = basis.vectors();
  const RealVector<Real> p = (u.adjoint() * rho.matrix() * u).diagonal().real();
  return DensityMatrix<Real>::trusted(u * p.template cast<Complex<Real>>().asDiagonal() *
                                      u.adjoint());
}

/// Dephasing on subsystem A only:
/// sum_i (|u_i><u_i| (x) I) rho_AB (|u_i><u_i| (x) I).
template <typename Real>
BipartiteState<Real> bipartite_measurement_channel(const MeasurementBasis<Real>& basis,
                                                   const BipartiteState<Real>& rho) {
  detail::require_same_dim(basis.dim(), rho.dim_a(), "bipartite_measurement_channel");
  const Eigen::Index da = rho.dim_a();
  const Eigen::Index db = rho.dim_b();
  const ComplexMatrix<Real> w =
      Eigen::kroneckerProduct(basis.vectors(), ComplexMatrix<Real>::Identity(db, db)).eval();
  ComplexMatrix<Real> rotated = w.adjoint() * rho.matrix() * w;
  for (Eigen::Index i = 0; i < da; ++i)
    for (Eigen::Index j = 0; j < da; ++j)
      if (i != j) rotated.block(i * db, j * db, db, db).setZero();
  return BipartiteState<Real>(da, db, DensityMatrix<Real>::trusted(w * rotated * w.adjoint()));
}

/// Reduced state of the kept subsystem.
template <typename Real>
DensityMatrix<Real> partial_trace(const BipartiteState<Real>& rho, Subsystem keep) {
  const Eigen::Index da = rho.dim_a();
  const Eigen::Index db = rho.dim_b();
  const auto& m = rho.matrix();
  if (keep == Subsystem::A) {
    ComplexMatrix<Real> out = ComplexMatrix<Real>::Zero(da, da);
    for (Eigen::Index a = 0; a < da; ++a)
      for (Eigen::Index a2 = 0; a2 < da; ++a2)
        out(a, a2) = m.block(a * db, a2 * db, db, db).trace();
    return DensityMatrix<Real>::trusted(out);
  }
  ComplexMatrix<Real> out = ComplexMatrix<Real>::Zero(db, db);
  for (Eigen::Index a = 0; a < da; ++a) out += m.block(a * db, a * db, db, db);
  return DensityMatrix<Real>::trusted(out);
}

/// Product state sigma_A (x) tau_B.
template <typename Real>
BipartiteState<Real> tensor_product(const DensityMatrix<Real>& a, const DensityMatrix<Real>& b) {
  return BipartiteState<Real>(
      a.dim(), b.dim(),
      DensityMatrix<Real>::trusted(Eigen::kroneckerProduct(a.matrix(), b.matrix()).eval()));
}

}  // namespace eur

#endif  // EUR_QUANTUM_HPP
