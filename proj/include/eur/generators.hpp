#ifndef EUR_GENERATORS_HPP
#define EUR_GENERATORS_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "eur/quantum.hpp"
#include "eur/types.hpp"

// Measurement sets and states for tests, scans and verification.
//
// Random generation draws from std::mt19937_64 seeded with the given 64-bit
// seed; Gaussian variates come from std::normal_distribution. Streams are
// deterministic per seed for a given standard library.

namespace eur {

using Rng = std::mt19937_64;

template <typename Real = double> MeasurementBasis<Real> computational_basis(Eigen::Index d) {
  if (d < 1) throw InvalidInput("computational_basis requires d >= 1");
  return MeasurementBasis<Real>(ComplexMatrix<Real>::Identity(d, d), "computational");
}

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

/// Up to d+1 mutually unbiased bases for prime d: the computational basis
/// followed by the quadratic-phase Fourier family
///   v_{k,j}(n) = omega^{k n^2 + j n} / sqrt(d),  k = 0..d-1,
/// with omega = exp(2 pi i / d) for odd d. For d = 2 the quadratic phase is
/// i^{k n^2}, giving the Z, X and Y eigenbases.
template <typename Real = double>
std::vector<MeasurementBasis<Real>> mub_set(Eigen::Index d, Eigen::Index count) {
  if (!is_prime(d)) throw InvalidInput("mub_set requires prime d (got " + std::to_string(d) + ")");
  if (count < 1 || count > d + 1)
    throw InvalidInput("mub_set requires 1 <= count <= d+1 (got " + std::to_string(count) + ")");
  const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
  const Real norm = Real(1) / std::sqrt(Real(d));
  std::vector<MeasurementBasis<Real>> out;
  out.push_back(computational_basis<Real>(d));
  for (Eigen::Index k = 0; k + 1 < count; ++k) {
    ComplexMatrix<Real> v(d, d);
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index n = 0; n < d; ++n) {
        // Phases reduced mod d (mod 4 for the qubit) before conversion.
        Real phase;
        if (d == 2)
          phase = two_pi * Real((k * n * n + 2 * j * n) % 4) / Real(4);
        else
          phase = two_pi * Real((k * n * n + j * n) % d) / Real(d);
        v(n, j) = std::polar(norm, phase);
      }
    out.emplace_back(std::move(v), "fourier-" + std::to_string(k));
  }
  return out;
}

struct PaperExampleParams {
  double a = 0.5;
  double phi = 0.0;
};

/// Three measurements in d = 3:
///   {(1,0,0), (0,1,0), (0,0,1)},
///   {(1,0,-1)/sqrt2, (0,1,0), (1,0,1)/sqrt2},
///   {(sqrt a, e^{i phi} sqrt(1-a), 0), (sqrt(1-a), -e^{i phi} sqrt a, 0), (0,0,1)}.
template <typename Real = double> MeasurementChain<Real> paper_d3_bases(PaperExampleParams params) {
  if (!(params.a >= 0.0 && params.a <= 1.0))
    throw InvalidInput("paper-d3 requires 0 <= a <= 1 (got " + detail::str(params.a) + ")");
  if (!std::isfinite(params.phi)) throw InvalidInput("paper-d3 requires a finite phi");
  using C = Complex<Real>;
  const Real s = Real(1) / std::sqrt(Real(2));
  const Real a = Real(params.a);
  const Real sa = std::sqrt(a);
  const Real sb = std::sqrt(Real(1) - a);
  const C e = std::polar(Real(1), Real(params.phi));

  ComplexMatrix<Real> second(3, 3);
  second << C(s), C(0), C(s),
            C(0), C(1), C(0),
            C(-s), C(0), C(s);
  ComplexMatrix<Real> third(3, 3);
  third << C(sa), C(sb), C(0),
           e * sb, -e * sa, C(0),
           C(0), C(0), C(1);
  return MeasurementChain<Real>({computational_basis<Real>(3),
                                 MeasurementBasis<Real>(std::move(second), "M2"),
                                 MeasurementBasis<Real>(std::move(third), "M3")});
}

namespace detail {

template <typename Real> ComplexMatrix<Real> ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<Real> normal(Real(0), Real(1));
  ComplexMatrix<Real> g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const Real re = normal(rng);
      const Real im = normal(rng);
      g(i, j) = Complex<Real>(re, im);
    }
  return g;
}

}  // namespace detail

template <typename Real = double> PureState<Real> random_pure_state(Eigen::Index d, Rng& rng) {
  if (d < 1) throw InvalidInput("random_pure_state requires d >= 1");
  return PureState<Real>::normalized(detail::ginibre<Real>(d, 1, rng).col(0));
}

/// Columns of a Haar-random unitary: QR of a complex Gaussian matrix with the
/// phases of diag(R) absorbed into Q.
template <typename Real = double> MeasurementBasis<Real> random_basis(Eigen::Index d, Rng& rng) {
  if (d < 1) throw InvalidInput("random_basis requires d >= 1");
  Eigen::HouseholderQR<ComplexMatrix<Real>> qr(detail::ginibre<Real>(d, d, rng));
  ComplexMatrix<Real> q = qr.householderQ() * ComplexMatrix<Real>::Identity(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const Complex<Real> r = qr.matrixQR()(j, j);
    const Real mag = std::abs(r);
    if (mag > Real(0)) q.col(j) *= r / mag;
  }
  return MeasurementBasis<Real>(std::move(q), "random");
}

template <typename Real = double>
MeasurementBasis<Real> random_basis(Eigen::Index d, std::uint64_t seed) {
  Rng rng(seed);
  return random_basis<Real>(d, rng);
}

/// G G^dag / Tr(G G^dag) with G a d x rank complex Gaussian matrix.
template <typename Real = double>
DensityMatrix<Real> random_density_matrix(Eigen::Index d, Eigen::Index rank, Rng& rng) {
  if (d < 1 || rank < 1 || rank > d)
    throw InvalidInput("random_density_matrix requires 1 <= rank <= d");
  const ComplexMatrix<Real> g = detail::ginibre<Real>(d, rank, rng);
  ComplexMatrix<Real> m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix<Real>::trusted(m);
}

template <typename Real = double>
DensityMatrix<Real> random_density_matrix(Eigen::Index d, Eigen::Index rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density_matrix<Real>(d, rank, rng);
}

template <typename Real = double>
BipartiteState<Real> random_bipartite_state(Eigen::Index dim_a, Eigen::Index dim_b,
                                            Eigen::Index rank, Rng& rng) {
  return BipartiteState<Real>(dim_a, dim_b, random_density_matrix<Real>(dim_a * dim_b, rank, rng));
}

/// (1/sqrt d) sum_i |ii> as a projector on C^d (x) C^d.
template <typename Real = double> BipartiteState<Real> maximally_entangled(Eigen::Index d) {
  if (d < 2) throw InvalidInput("maximally_entangled requires d >= 2");
  ComplexVector<Real> psi = ComplexVector<Real>::Zero(d * d);
  for (Eigen::Index i = 0; i < d; ++i) psi(i * d + i) = Real(1) / std::sqrt(Real(d));
  return BipartiteState<Real>(d, d, PureState<Real>(psi));
}

}  // namespace eur

#endif  // EUR_GENERATORS_HPP
