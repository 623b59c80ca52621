#ifndef EUR_TESTS_ORACLES_HPP
#define EUR_TESTS_ORACLES_HPP

// Independent reference implementations: explicit loops and exhaustive
// enumeration, sharing no code paths with the library beyond the basic types.

#include <cmath>
#include <complex>
#include <vector>

#include "eur/types.hpp"

namespace oracle {

using cd = std::complex<double>;

inline double overlap(const eur::MeasurementBasisd& a, Eigen::Index i, const eur::MeasurementBasisd& b,
                      Eigen::Index j) {
  cd inner = 0;
  for (Eigen::Index k = 0; k < a.dim(); ++k) inner += std::conj(a.vectors()(k, i)) * b.vectors()(k, j);
  return std::norm(inner);
}

inline double max_overlap(const eur::MeasurementBasisd& a, const eur::MeasurementBasisd& b) {
  double best = 0;
  for (Eigen::Index i = 0; i < a.dim(); ++i)
    for (Eigen::Index j = 0; j < a.dim(); ++j) best = std::max(best, overlap(a, i, b, j));
  return best;
}

// Advances a mixed-radix counter; false once it wraps.
inline bool next_tuple(std::vector<Eigen::Index>& t, Eigen::Index d) {
  for (auto& digit : t) {
    if (++digit < d) return true;
    digit = 0;
  }
  return false;
}

/// max over all d^N index tuples of prod_m (1 + sqrt c(u^m_{i_m}, u^{m+1}_{i_{m+1}})) / 2, cyclic.
inline double deutsch_h(const eur::MeasurementChaind& chain) {
  const std::size_t n = chain.size();
  const Eigen::Index d = chain.dim();
  std::vector<Eigen::Index> t(n, 0);
  double best = 0;
  do {
    double prod = 1;
    for (std::size_t m = 0; m < n; ++m)
      prod *= (1 + std::sqrt(overlap(chain[m], t[m], chain[(m + 1) % n], t[(m + 1) % n]))) / 2;
    best = std::max(best, prod);
  } while (next_tuple(t, d));
  return best;
}

/// b = max_{i_N} sum_{i_2..i_{N-1}} max_{i_1}[c(u^1_{i_1}, u^2_{i_2})] prod_{m=2}^{N-1} c(u^m_{i_m}, u^{m+1}_{i_{m+1}}).
inline double mu_b(const eur::MeasurementChaind& chain) {
  const std::size_t n = chain.size();
  const Eigen::Index d = chain.dim();
  double best = 0;
  for (Eigen::Index last = 0; last < d; ++last) {
    // t[0] = i_2, ..., t[n-3] = i_{N-1}
    std::vector<Eigen::Index> t(n - 2, 0);
    double sum = 0;
    do {
      if (n == 2) {
        double m1 = 0;
        for (Eigen::Index i1 = 0; i1 < d; ++i1) m1 = std::max(m1, overlap(chain[0], i1, chain[1], last));
        sum = m1;
        break;
      }
      double m1 = 0;
      for (Eigen::Index i1 = 0; i1 < d; ++i1) m1 = std::max(m1, overlap(chain[0], i1, chain[1], t[0]));
      double prod = m1;
      for (std::size_t m = 1; m + 1 < n; ++m) {
        const Eigen::Index next = m + 1 < n - 1 ? t[m] : last;
        prod *= overlap(chain[m], t[m - 1], chain[m + 1], next);
      }
      sum += prod;
    } while (next_tuple(t, d));
    best = std::max(best, sum);
  }
  return best;
}

/// beta_j = sum_{i_1..i_{N-1}} p1_{i_1} prod_m c(u^m_{i_m}, u^{m+1}_{i_{m+1}}), i_N = j.
inline std::vector<double> beta(const eur::MeasurementChaind& chain, const std::vector<double>& p1) {
  const std::size_t n = chain.size();
  const Eigen::Index d = chain.dim();
  std::vector<double> out(static_cast<std::size_t>(d), 0.0);
  for (Eigen::Index j = 0; j < d; ++j) {
    std::vector<Eigen::Index> t(n - 1, 0);
    do {
      double prod = p1[static_cast<std::size_t>(t[0])];
      for (std::size_t m = 0; m + 1 < n; ++m) {
        const Eigen::Index next = m + 1 < n - 1 ? t[m + 1] : j;
        prod *= overlap(chain[m], t[m], chain[m + 1], next);
      }
      out[static_cast<std::size_t>(j)] += prod;
    } while (next_tuple(t, d));
  }
  return out;
}

inline double shannon(const std::vector<double>& p) {
  double h = 0;
  for (double x : p)
    if (x > 0) h -= x * std::log(x) / std::log(2.0);
  return h;
}

/// p_i = sum_{k,l} conj(u_i(k)) rho(k,l) u_i(l).
inline std::vector<double> probabilities(const eur::MeasurementBasisd& basis, const eur::DensityMatrixd& rho) {
  std::vector<double> p;
  for (Eigen::Index i = 0; i < basis.dim(); ++i) {
    cd s = 0;
    for (Eigen::Index k = 0; k < basis.dim(); ++k)
      for (Eigen::Index l = 0; l < basis.dim(); ++l)
        s += std::conj(basis.vectors()(k, i)) * rho.matrix()(k, l) * basis.vectors()(l, i);
    p.push_back(s.real());
  }
  return p;
}

/// Tr_B by explicit index sums, index (a, b) -> a * dim_b + b.
inline Eigen::MatrixXcd trace_out_b(const eur::BipartiteStated& rho) {
  const Eigen::Index da = rho.dim_a(), db = rho.dim_b();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(da, da);
  for (Eigen::Index a = 0; a < da; ++a)
    for (Eigen::Index a2 = 0; a2 < da; ++a2)
      for (Eigen::Index b = 0; b < db; ++b) out(a, a2) += rho.matrix()(a * db + b, a2 * db + b);
  return out;
}

}  // namespace oracle

#endif  // EUR_TESTS_ORACLES_HPP
