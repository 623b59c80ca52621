#ifndef EUR_TYPES_HPP
#define EUR_TYPES_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eur/errors.hpp"

namespace eur {

template <typename Real> using Complex = std::complex<Real>;
template <typename Real> using ComplexVector = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using ComplexMatrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real> using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
template <typename Real> using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

/// Validation tolerances shared by every state and basis type.
struct Tolerance {
  static constexpr double normalization = 1e-10;
  static constexpr double hermiticity = 1e-10;
  static constexpr double trace = 1e-10;
  static constexpr double negative_eigenvalue = 1e-10;
  static constexpr double orthogonality = 1e-9;
  static constexpr double stochastic = 1e-9;
};

namespace detail {

template <typename Derived> bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const auto z = m(i, j);
      if (!std::isfinite(std::real(z)) || !std::isfinite(std::imag(z))) return false;
    }
  return true;
}

template <typename T> std::string str(const T& value) {
  std::ostringstream os;
  os.precision(3);
  os << value;
  return os.str();
}

}  // namespace detail

/// Normalized vector of a d-dimensional complex space.
template <typename Real> class PureState {
 public:
  using Vector = ComplexVector<Real>;

  explicit PureState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) throw InvalidInput("pure state must have dim >= 1");
    if (!detail::all_finite(amplitudes_)) throw InvalidInput("pure state has non-finite amplitudes");
    const Real deviation = std::abs(amplitudes_.squaredNorm() - Real(1));
    if (deviation > Real(Tolerance::normalization))
      throw InvalidInput("pure state is not normalized (|norm^2 - 1| = " +
                         detail::str(deviation) + ")");
  }

  /// Rescales a nonzero vector to unit norm.
  static PureState normalized(const Vector& v) {
    const Real n = v.norm();
    if (!(n > Real(0))) throw InvalidInput("cannot normalize the zero vector");
    return PureState(v / n);
  }

  Eigen::Index dim() const { return amplitudes_.size(); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex<Real> operator[](Eigen::Index i) const { return amplitudes_(i); }

  ComplexMatrix<Real> projector() const { return amplitudes_ * amplitudes_.adjoint(); }

 private:
  Vector amplitudes_;
};

/// Positive semidefinite unit-trace Hermitian matrix.
///
/// The constructor checks hermiticity, trace and the spectrum. Eigenvalues in
/// [-1e-10, 0) are tolerated and clamped by the entropy functions; anything
/// more negative is rejected.
template <typename Real> class DensityMatrix {
 public:
  using Matrix = ComplexMatrix<Real>;

  explicit DensityMatrix(Matrix m) : matrix_(std::move(m)) {
    if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols())
      throw InvalidInput("density matrix must be square with dim >= 1");
    if (!detail::all_finite(matrix_)) throw InvalidInput("density matrix has non-finite entries");
    const Real herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > Real(Tolerance::hermiticity))
      throw InvalidInput("density matrix is not Hermitian (max |M - M^dag| = " +
                         detail::str(herm) + ")");
    const Real trace_dev = std::abs(matrix_.trace() - Complex<Real>(1));
    if (trace_dev > Real(Tolerance::trace))
      throw InvalidInput("density matrix trace differs from 1 by " + detail::str(trace_dev));
    Eigen::SelfAdjointEigenSolver<Matrix> es(matrix_, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
    const Real min_eig = es.eigenvalues().minCoeff();
    if (min_eig < -Real(Tolerance::negative_eigenvalue))
      throw InvalidInput("density matrix is not positive semidefinite (min eigenvalue " +
                         detail::str(min_eig) + ")");
  }

  explicit DensityMatrix(const PureState<Real>& psi) : matrix_(psi.projector()) {}

  /// Wraps a matrix that is a density matrix by construction (the image of a
  /// valid state under a channel, partial trace, ...). Only symmetrizes.
  static DensityMatrix trusted(const Matrix& m) {
    DensityMatrix rho;
    rho.matrix_ = (m + m.adjoint()) / Real(2);
    return rho;
  }

  static DensityMatrix maximally_mixed(Eigen::Index d) {
    return trusted(Matrix::Identity(d, d) / Real(d));
  }

  Eigen::Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  Complex<Real> operator()(Eigen::Index i, Eigen::Index j) const { return matrix_(i, j); }

  Real purity() const { return std::real((matrix_ * matrix_).trace()); }

 private:
  DensityMatrix() = default;
  Matrix matrix_;
};

/// Orthonormal basis {|u_i>} of one projective measurement; vectors are the
/// columns of `vectors()`.
template <typename Real> class MeasurementBasis {
 public:
  using Matrix = ComplexMatrix<Real>;

  MeasurementBasis(Matrix columns, std::string label = {})
      : vectors_(std::move(columns)), label_(std::move(label)) {
    validate();
  }

  MeasurementBasis(const std::vector<PureState<Real>>& states, std::string label = {})
      : label_(std::move(label)) {
    if (states.empty()) throw InvalidInput(describe() + "has no vectors");
    const Eigen::Index d = states.front().dim();
    vectors_.resize(d, static_cast<Eigen::Index>(states.size()));
    for (std::size_t k = 0; k < states.size(); ++k) {
      if (states[k].dim() != d)
        throw InvalidInput(describe() + "vector " + std::to_string(k) + " has dimension " +
                           std::to_string(states[k].dim()) + ", expected " + std::to_string(d));
      vectors_.col(static_cast<Eigen::Index>(k)) = states[k].amplitudes();
    }
    validate();
  }

  Eigen::Index dim() const { return vectors_.rows(); }
  const Matrix& vectors() const { return vectors_; }
  auto vector(Eigen::Index i) const { return vectors_.col(i); }
  const std::string& label() const { return label_; }

 private:
  std::string describe() const {
    return label_.empty() ? std::string("basis: ") : "basis '" + label_ + "': ";
  }

  void validate() const {
    if (vectors_.rows() == 0) throw InvalidInput(describe() + "dimension must be >= 1");
    if (vectors_.cols() != vectors_.rows())
      throw InvalidInput(describe() + "has " + std::to_string(vectors_.cols()) +
                         " vectors, expected " + std::to_string(vectors_.rows()));
    if (!detail::all_finite(vectors_)) throw InvalidInput(describe() + "has non-finite entries");
    for (Eigen::Index i = 0; i < vectors_.cols(); ++i) {
      const Real dev = std::abs(vectors_.col(i).squaredNorm() - Real(1));
      if (dev > Real(Tolerance::normalization))
        throw InvalidInput(describe() + "vector " + std::to_string(i) +
                           " is not normalized (|norm^2 - 1| = " + detail::str(dev) + ")");
    }
    for (Eigen::Index i = 0; i < vectors_.cols(); ++i)
      for (Eigen::Index j = i + 1; j < vectors_.cols(); ++j) {
        const Real ov = std::abs(vectors_.col(i).dot(vectors_.col(j)));
        if (ov >= Real(Tolerance::orthogonality))
          throw InvalidInput(describe() + "vectors " + std::to_string(i) + " and " +
                             std::to_string(j) + " are not orthogonal (|<u_i|u_j>| = " +
                             detail::str(ov) + ")");
      }
  }

  Matrix vectors_;
  std::string label_;
};

/// Ordered list of N >= 2 bases of a common dimension. The order enters the
/// bound formulas.
template <typename Real> class MeasurementChain {
 public:
  explicit MeasurementChain(std::vector<MeasurementBasis<Real>> bases)
      : bases_(std::move(bases)) {
    if (bases_.size() < 2) throw InvalidInput("chain requires N ≥ 2");
    const Eigen::Index d = bases_.front().dim();
    for (std::size_t m = 1; m < bases_.size(); ++m)
      if (bases_[m].dim() != d)
        throw InvalidInput("chain bases must share one dimension (basis " + std::to_string(m) +
                           " has dim " + std::to_string(bases_[m].dim()) + ", expected " +
                           std::to_string(d) + ")");
  }

  Eigen::Index dim() const { return bases_.front().dim(); }
  std::size_t size() const { return bases_.size(); }
  const MeasurementBasis<Real>& operator[](std::size_t m) const { return bases_[m]; }
  const std::vector<MeasurementBasis<Real>>& bases() const { return bases_; }

  auto begin() const { return bases_.begin(); }
  auto end() const { return bases_.end(); }

  /// The same bases visited in `order` (a permutation of 0..N-1).
  MeasurementChain reordered(const std::vector<std::size_t>& order) const {
    std::vector<MeasurementBasis<Real>> out;
    out.reserve(order.size());
    for (std::size_t m : order) out.push_back(bases_.at(m));
    return MeasurementChain(std::move(out));
  }

 private:
  std::vector<MeasurementBasis<Real>> bases_;
};

/// c(a_i, b_j) = |<a_i|b_j>|^2 for one ordered basis pair. Doubly stochastic.
template <typename Real> class OverlapTable {
 public:
  using Matrix = RealMatrix<Real>;

  explicit OverlapTable(Matrix entries) : entries_(std::move(entries)) {}

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }
  Real operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }
  Real max() const { return entries_.maxCoeff(); }

 private:
  Matrix entries_;
};

enum class Subsystem { A, B };

/// Joint state on A (x) B with A the left (slow) factor:
/// index (i_A, i_B) -> i_A * dimB + i_B.
template <typename Real> class BipartiteState {
 public:
  BipartiteState(Eigen::Index dim_a, Eigen::Index dim_b, DensityMatrix<Real> joint)
      : dim_a_(dim_a), dim_b_(dim_b), joint_(std::move(joint)) {
    if (dim_a < 1 || dim_b < 1) throw InvalidInput("bipartite dimensions must be >= 1");
    if (joint_.dim() != dim_a * dim_b)
      throw InvalidInput("joint state has dim " + std::to_string(joint_.dim()) +
                         ", expected dimA*dimB = " + std::to_string(dim_a * dim_b));
  }

  BipartiteState(Eigen::Index dim_a, Eigen::Index dim_b, const PureState<Real>& psi)
      : BipartiteState(dim_a, dim_b, DensityMatrix<Real>(psi)) {}

  Eigen::Index dim_a() const { return dim_a_; }
  Eigen::Index dim_b() const { return dim_b_; }
  const DensityMatrix<Real>& joint() const { return joint_; }
  const ComplexMatrix<Real>& matrix() const { return joint_.matrix(); }

  bool is_pure(Real tol = Real(1e-9)) const { return joint_.purity() > Real(1) - tol; }

 private:
  Eigen::Index dim_a_;
  Eigen::Index dim_b_;
  DensityMatrix<Real> joint_;
};

using PureStated = PureState<double>;
using DensityMatrixd = DensityMatrix<double>;
using MeasurementBasisd = MeasurementBasis<double>;
using MeasurementChaind = MeasurementChain<double>;
using OverlapTabled = OverlapTable<double>;
using BipartiteStated = BipartiteState<double>;

}  // namespace eur

#endif  // EUR_TYPES_HPP
