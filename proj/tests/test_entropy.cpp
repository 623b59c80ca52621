#include "oracles.hpp"
#include "support.hpp"

#include "eur/entropy.hpp"

using namespace eur;

namespace {

// Frozen from direct evaluation of the defining sums.
constexpr double h_quarter = 0.8112781244591328;      // H(0.25, 0.75)
constexpr double hmin_quarter = 0.4150374992788438;   // -log2 0.75
constexpr double h2_quarter = 0.6780719051126377;     // -log2(0.0625 + 0.5625)
constexpr double h_tenth = 0.4689955935892812;        // H(0.9, 0.1)

Eigen::VectorXd random_distribution(Eigen::Index d, Rng& rng) {
  std::exponential_distribution<double> exp(1.0);
  Eigen::VectorXd p(d);
  for (Eigen::Index i = 0; i < d; ++i) p(i) = exp(rng);
  return p / p.sum();
}

}  // namespace

TEST_CASE("RenyiOrder rejects non-positive and non-finite alpha") {
  CHECK_THROWS_AS(RenyiOrder(0.0), InvalidInput);
  CHECK_THROWS_AS(RenyiOrder(-1.0), InvalidInput);
  CHECK_THROWS_AS(RenyiOrder(std::numeric_limits<double>::infinity()), InvalidInput);
  CHECK(RenyiOrder::infinity().is_infinite());
  CHECK(RenyiOrder::shannon() == RenyiOrder(1.0));
}

TEST_CASE("shannon_entropy examples") {
  CHECK(shannon_entropy(Eigen::Vector2d(1, 0)) == 0.0);
  CHECK(shannon_entropy(Eigen::Vector2d(0.5, 0.5)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(shannon_entropy(Eigen::Vector2d(0.25, 0.75)) == doctest::Approx(h_quarter).epsilon(1e-14));
  CHECK(oracle::shannon({0.25, 0.75}) == doctest::Approx(h_quarter).epsilon(1e-14));
}

TEST_CASE("renyi_entropy examples") {
  for (double alpha : {0.5, 1.0, 2.0, 7.0})
    CHECK(renyi_entropy(Eigen::Vector2d(0.5, 0.5), RenyiOrder(alpha)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(renyi_entropy(Eigen::Vector2d(0.5, 0.5), RenyiOrder::infinity()) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(renyi_entropy(Eigen::Vector2d(0.25, 0.75), RenyiOrder::infinity()) ==
        doctest::Approx(hmin_quarter).epsilon(1e-14));
  CHECK(renyi_entropy(Eigen::Vector2d(0.25, 0.75), RenyiOrder(2.0)) == doctest::Approx(h2_quarter).epsilon(1e-14));
}

TEST_CASE("Renyi entropy is monotone in alpha and continuous at 1") {
  Rng rng(21);
  const std::vector<RenyiOrder> orders{RenyiOrder(0.3), RenyiOrder(0.9), RenyiOrder::shannon(),
                                       RenyiOrder(1.5), RenyiOrder(3.0), RenyiOrder::infinity()};
  for (int t = 0; t < 200; ++t) {
    const auto p = random_distribution(2 + t % 6, rng);
    for (std::size_t k = 0; k + 1 < orders.size(); ++k)
      CHECK(renyi_entropy(p, orders[k]) >= renyi_entropy(p, orders[k + 1]) - 1e-12);
    const double h = shannon_entropy(p);
    CHECK(std::abs(renyi_entropy(p, RenyiOrder(1 + 1e-8)) - h) < 1e-6);
    CHECK(std::abs(renyi_entropy(p, RenyiOrder(1 - 1e-8)) - h) < 1e-6);
  }
}

TEST_CASE("von_neumann_entropy examples") {
  CHECK(von_neumann_entropy(DensityMatrixd(support::ket(3, 1))) == doctest::Approx(0.0));
  for (Eigen::Index d = 2; d <= 5; ++d)
    CHECK(von_neumann_entropy(DensityMatrixd::maximally_mixed(d)) ==
          doctest::Approx(std::log2(static_cast<double>(d))).epsilon(1e-13));
  CHECK(von_neumann_entropy(support::diag({0.25, 0.75})) == doctest::Approx(h_quarter).epsilon(1e-13));
}

TEST_CASE("relative_entropy examples") {
  Rng rng(22);
  const auto rho = random_density_matrix<double>(3, 3, rng);
  CHECK(std::abs(relative_entropy(rho, rho).value()) < 1e-10);
  const DensityMatrixd zero(support::ket(2, 0));
  const DensityMatrixd one(support::ket(2, 1));
  const auto r = relative_entropy(zero, DensityMatrixd::maximally_mixed(2));
  CHECK_FALSE(r.infinite);
  CHECK(r.value() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(relative_entropy(zero, one).infinite);
}

TEST_CASE("relative entropy obeys data processing under measurement channels") {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const Eigen::Index d = 2 + t % 3;
    const auto rho = random_density_matrix<double>(d, 1 + t % d, rng);
    const auto sigma = random_density_matrix<double>(d, d, rng);
    const auto basis = random_basis<double>(d, rng);
    const auto before = relative_entropy(rho, sigma);
    const auto after = relative_entropy(measurement_channel(basis, rho), measurement_channel(basis, sigma));
    REQUIRE_FALSE(before.infinite);
    CHECK(before.value() >= after.value() - 1e-9);
  }
}

TEST_CASE("H(U) - S(rho) equals the relative entropy to the dephased state") {
  Rng rng(24);
  for (int t = 0; t < 100; ++t) {
    const Eigen::Index d = 2 + t % 4;
    const auto rho = random_density_matrix<double>(d, 1 + t % d, rng);
    const auto basis = random_basis<double>(d, rng);
    const double lhs = shannon_entropy(outcome_distribution(basis, rho)) - von_neumann_entropy(rho);
    const auto rhs = relative_entropy(rho, measurement_channel(basis, rho));
    REQUIRE_FALSE(rhs.infinite);
    CHECK(std::abs(lhs - rhs.value()) < 1e-9);
  }
}

TEST_CASE("conditional_entropy examples") {
  CHECK(conditional_entropy(maximally_entangled<double>(2)) == doctest::Approx(-1.0).epsilon(1e-12));
  Rng rng(25);
  const auto sigma = random_density_matrix<double>(2, 2, rng);
  const auto tau = random_density_matrix<double>(3, 2, rng);
  CHECK(conditional_entropy(tensor_product(sigma, tau)) == doctest::Approx(von_neumann_entropy(sigma)).epsilon(1e-10));

  Eigen::MatrixXcd classical = Eigen::MatrixXcd::Zero(4, 4);
  classical(0, 0) = classical(3, 3) = 0.5;
  CHECK(std::abs(conditional_entropy(BipartiteStated(2, 2, DensityMatrixd(classical)))) < 1e-12);
}

TEST_CASE("measured and Holevo conditional entropies") {
  const auto phi = maximally_entangled<double>(2);
  Rng rng(26);
  for (int t = 0; t < 10; ++t) {
    const auto basis = random_basis<double>(2, rng);
    CHECK(std::abs(measured_conditional_entropy(basis, phi)) < 1e-10);
  }
  CHECK(std::abs(holevo_conditional_entropy(computational_basis(2), phi)) < 1e-12);

  const auto sigma = random_density_matrix<double>(3, 2, rng);
  const auto tau = random_density_matrix<double>(2, 2, rng);
  const auto prod = tensor_product(sigma, tau);
  const auto basis = random_basis<double>(3, rng);
  const double h = shannon_entropy(outcome_distribution(basis, sigma));
  CHECK(measured_conditional_entropy(basis, prod) == doctest::Approx(h).epsilon(1e-10));
  CHECK(holevo_conditional_entropy(basis, prod) == doctest::Approx(h).epsilon(1e-10));

  for (auto [da, db] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    for (int t = 0; t < 10; ++t) {
      const auto rho = random_bipartite_state<double>(da, db, 1 + t % (da * db), rng);
      const auto u = random_basis<double>(da, rng);
      CHECK(std::abs(measured_conditional_entropy(u, rho) - holevo_conditional_entropy(u, rho)) < 1e-9);
    }
  }
}

TEST_CASE("pure joint state: H(U|B) = H(U) - S(rho_B)") {
  Rng rng(27);
  for (int t = 0; t < 30; ++t) {
    const auto rho = random_bipartite_state<double>(2 + t % 2, 2 + t % 3, 1, rng);
    const auto u = random_basis<double>(rho.dim_a(), rng);
    const double hu = shannon_entropy(outcome_distribution(u, partial_trace(rho, Subsystem::A)));
    const double sb = von_neumann_entropy(partial_trace(rho, Subsystem::B));
    CHECK(std::abs(measured_conditional_entropy(u, rho) - (hu - sb)) < 1e-9);
  }
}

TEST_CASE("Schmidt state (0.9, 0.1) has S(A|B) = -H(0.9, 0.1)") {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v(0) = std::sqrt(0.9);
  v(3) = std::sqrt(0.1);
  const BipartiteStated rho(2, 2, PureStated(v));
  CHECK(conditional_entropy(rho) == doctest::Approx(-h_tenth).epsilon(1e-12));
}
