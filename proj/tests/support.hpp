#ifndef EUR_TESTS_SUPPORT_HPP
#define EUR_TESTS_SUPPORT_HPP

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eur/bounds.hpp"
#include "eur/generators.hpp"
#include "eur/quantum.hpp"
#include "eur/types.hpp"

namespace support {

using cd = std::complex<double>;
inline const double r2 = 1 / std::sqrt(2.0);

inline eur::MeasurementBasisd hadamard() {
  Eigen::MatrixXcd m(2, 2);
  m << r2, r2, r2, -r2;
  return eur::MeasurementBasisd(m, "hadamard");
}

inline eur::MeasurementChaind qubit_mubs(std::size_t count = 3) {
  return eur::MeasurementChaind(eur::mub_set<double>(2, static_cast<Eigen::Index>(count)));
}

inline eur::MeasurementChaind random_chain(Eigen::Index d, std::size_t n, eur::Rng& rng) {
  std::vector<eur::MeasurementBasisd> bases;
  for (std::size_t m = 0; m < n; ++m) bases.push_back(eur::random_basis<double>(d, rng));
  return eur::MeasurementChaind(bases);
}

inline eur::PureStated ket(Eigen::Index d, Eigen::Index k) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
  v(k) = 1;
  return eur::PureStated(v);
}

inline eur::DensityMatrixd diag(std::initializer_list<double> values) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return eur::DensityMatrixd(v.cast<cd>().asDiagonal().toDenseMatrix());
}

inline double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace support

#endif  // EUR_TESTS_SUPPORT_HPP
