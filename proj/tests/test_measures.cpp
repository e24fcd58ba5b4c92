#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "jcm/errors.hpp"
#include "jcm/measures.hpp"
#include "oracles.hpp"

using namespace jcm;
using testing::kron;
using testing::random_density;
using testing::random_pure;

namespace {

DensityMatrix two_qubit(const Matrix& m) { return DensityMatrix(m, SubsystemDims{2, 2}); }

DensityMatrix bell_psi_plus() {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(1) = psi(2) = 1.0 / std::sqrt(2.0);
  return two_qubit(psi * psi.adjoint());
}

}  // namespace

TEST_CASE("von Neumann entropy in bits") {
  const std::vector<double> pure{1.0, 0.0};
  const std::vector<double> mixed{0.5, 0.5};
  CHECK(von_neumann_entropy(pure) == 0.0);
  CHECK(von_neumann_entropy(mixed) == doctest::Approx(1.0).epsilon(1e-15));

  // thermal nbar = 1: (nbar+1) log2(nbar+1) - nbar log2 nbar = 2
  std::vector<double> thermal;
  for (int n = 0; n < 60; ++n) thermal.push_back(std::ldexp(1.0, -(n + 1)));
  CHECK(von_neumann_entropy(thermal) == doctest::Approx(2.0).epsilon(1e-12));

  const std::vector<double> roundoff{1.0, -5e-11};
  CHECK(von_neumann_entropy(roundoff) == 0.0);
  const std::vector<double> negative{1.0, -1e-8};
  CHECK_THROWS_AS(von_neumann_entropy(negative), DomainError);
  const std::vector<double> unnormalized{0.5, 0.4};
  CHECK_THROWS_AS(von_neumann_entropy(unnormalized), DomainError);
}

TEST_CASE("entropy is additive over tensor products") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 20; ++k) {
    const Matrix a = random_density(rng, 2, 2);
    const Matrix b = random_density(rng, 3, 3);
    const double sa = von_neumann_entropy(hermitian_eigenvalues(a));
    const double sb = von_neumann_entropy(hermitian_eigenvalues(b));
    const Matrix ab = kron(a, b);
    const double sab = von_neumann_entropy(hermitian_eigenvalues(0.5 * (ab + ab.adjoint())));
    CHECK(std::abs(sab - sa - sb) <= 1e-10);
  }
}

TEST_CASE("mutual information clamps round-off only") {
  CHECK(mutual_information(1.0, 1.0, 0.0) == 2.0);
  CHECK(mutual_information(0.0, 1.0, 1.0 + 1e-10) == 0.0);
  CHECK_THROWS_AS(mutual_information(0.0, 1.0, 1.1), NumericError);
}

TEST_CASE("partial transpose") {
  std::mt19937_64 rng(23);
  const Matrix a = random_density(rng, 2, 2);
  const Matrix b = random_density(rng, 3, 3);
  const DensityMatrix product(kron(a, b), SubsystemDims{2, 3});
  const Matrix pt = partial_transpose(product);
  // (A (x) B)^{T_B} = A (x) B^T
  CHECK((pt - kron(a, b.transpose())).cwiseAbs().maxCoeff() < 1e-16);
  CHECK(hermitian_eigenvalues(pt).front() >= -1e-12);
  CHECK(std::abs(pt.trace() - product.matrix().trace()) < 1e-15);

  // involution, exact
  const Matrix rho = random_density(rng, 6, 6);
  const DensityMatrix once(partial_transpose(DensityMatrix(rho, SubsystemDims{2, 3})), SubsystemDims{2, 3});
  CHECK(partial_transpose(once) == rho);

  CHECK_THROWS_AS(partial_transpose(DensityMatrix(rho)), DomainError);
}

TEST_CASE("Bell state partial transpose spectrum") {
  const auto spectrum = hermitian_eigenvalues(partial_transpose(bell_psi_plus()));
  CHECK(spectrum[0] == doctest::Approx(-0.5).epsilon(1e-14));
  for (int i = 1; i < 4; ++i) CHECK(spectrum[i] == doctest::Approx(0.5).epsilon(1e-14));
  const auto verdict = ppt_verdict(bell_psi_plus());
  CHECK_FALSE(verdict.is_ppt);
  CHECK(verdict.negativity == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(verdict.ppt_sufficient);
  REQUIRE(verdict.concurrence.has_value());
  CHECK(*verdict.concurrence == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(*verdict.eof == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("maximally mixed state is PPT") {
  const auto verdict = ppt_verdict(two_qubit(Matrix::Identity(4, 4) * 0.25));
  CHECK(verdict.is_ppt);
  CHECK(verdict.negativity == 0.0);
  CHECK(*verdict.concurrence == 0.0);
}

TEST_CASE("sufficiency flag only for 2x2 and 2x3") {
  std::mt19937_64 rng(29);
  CHECK(ppt_verdict(DensityMatrix(random_density(rng, 6, 6), SubsystemDims{2, 3})).ppt_sufficient);
  CHECK_FALSE(ppt_verdict(DensityMatrix(random_density(rng, 6, 6), SubsystemDims{3, 2})).ppt_sufficient);
  const auto big = ppt_verdict(DensityMatrix(random_density(rng, 8, 8), SubsystemDims{2, 4}));
  CHECK_FALSE(big.ppt_sufficient);
  CHECK_FALSE(big.concurrence.has_value());
  CHECK_THROWS_AS(ppt_verdict(DensityMatrix(random_density(rng, 4, 4))), DomainError);
}

TEST_CASE("separable mixtures have zero negativity") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 50; ++k) {
    Matrix mix = Matrix::Zero(6, 6);
    for (int j = 0; j < 3; ++j) mix += kron(random_density(rng, 2, 2), random_density(rng, 3, 2)) / 3.0;
    mix = 0.5 * (mix + mix.adjoint()).eval();
    const auto verdict = ppt_verdict(DensityMatrix(mix, SubsystemDims{2, 3}));
    CHECK(verdict.negativity <= 1e-10);
    CHECK(verdict.is_ppt);
  }
}

TEST_CASE("concurrence of pure states") {
  std::mt19937_64 rng(37);
  CHECK(concurrence_general(bell_psi_plus()) == doctest::Approx(1.0).epsilon(1e-12));
  for (int k = 0; k < 200; ++k) {
    // product pure state
    const auto a = random_pure(rng, 2);
    const auto b = random_pure(rng, 2);
    const Eigen::VectorXcd prod = kron(a, b);
    CHECK(concurrence_general(two_qubit(prod * prod.adjoint())) <= 1e-7);

    const auto psi = random_pure(rng, 4);
    const double c = concurrence_general(two_qubit(psi * psi.adjoint()));
    CHECK(std::abs(c - testing::pure_concurrence(psi)) <= 1e-7);
  }
}

TEST_CASE("EoF of pure states equals the reduced entropy") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 500; ++k) {
    const auto psi = random_pure(rng, 4);
    const double eof = eof_from_concurrence(testing::pure_concurrence(psi));
    CHECK(std::abs(eof - testing::pure_reduced_entropy(psi)) <= 1e-9);
  }
}

TEST_CASE("X-state closed form") {
  CHECK(concurrence_xstate({0.0, 0.5, 0.5, 0.0}, Complex{0.5, 0.0}) == 1.0);
  CHECK(concurrence_xstate({0.25, 0.25, 0.25, 0.25}, Complex{}) == 0.0);
  // the demo output: diag (1/2, 1/4, 1/4, 0), coherence 1/4
  CHECK(concurrence_xstate({0.5, 0.25, 0.25, 0.0}, Complex{0.25, 0.0}) == 0.5);

  Matrix demo = Matrix::Zero(4, 4);
  demo(0, 0) = 0.5;
  demo(1, 1) = demo(2, 2) = demo(1, 2) = demo(2, 1) = 0.25;
  CHECK(concurrence_general(two_qubit(demo)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("X-state and general concurrence agree on random X-states") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 2000; ++k) {
    std::array<double, 4> d{u(rng), u(rng), u(rng), u(rng)};
    const double total = d[0] + d[1] + d[2] + d[3];
    for (double& x : d) x /= total;
    const Complex coh = std::polar(u(rng) * std::sqrt(d[1] * d[2]), 2.0 * std::numbers::pi * u(rng));
    Matrix m = Matrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) m(i, i) = d[i];
    m(1, 2) = coh;
    m(2, 1) = std::conj(coh);
    worst = std::max(worst, std::abs(concurrence_general(two_qubit(m)) - concurrence_xstate(d, coh)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("PPT verdict matches concurrence on random two-qubit states") {
  std::mt19937_64 rng(47);
  int entangled = 0;
  for (int k = 0; k < 600; ++k) {
    const auto rank = static_cast<Eigen::Index>(1 + k % 4);
    const auto verdict = ppt_verdict(two_qubit(random_density(rng, 4, rank)));
    CHECK(verdict.is_ppt == !(*verdict.concurrence > 1e-9));
    if (!verdict.is_ppt) ++entangled;
  }
  CHECK(entangled > 50);
  CHECK(entangled < 550);
}

TEST_CASE("PSD violation is rejected by concurrence_general") {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1.2;
  m(3, 3) = -0.2;
  CHECK_THROWS_AS(concurrence_general(two_qubit(m)), DomainError);
  CHECK_THROWS_AS(concurrence_general(DensityMatrix(Matrix::Identity(6, 6) / 6.0)), DomainError);
}

TEST_CASE("entanglement of formation from concurrence") {
  CHECK(eof_from_concurrence(0.0) == 0.0);
  CHECK(eof_from_concurrence(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(eof_from_concurrence(0.5) == doctest::Approx(0.3545789026652698842).epsilon(1e-14));
  // tiny concurrence stays positive (no cancellation)
  CHECK(eof_from_concurrence(1e-6) > 0.0);
  double previous = -1.0;
  for (double c = 0.0; c <= 1.0; c += 0.01) {
    const double e = eof_from_concurrence(c);
    CHECK(e >= previous);
    previous = e;
  }
}

TEST_CASE("pure qubit entangles a maximally mixed qubit") {
  const DemoResult demo = qubit_qubit_demo();
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = 0.5;
  expected(1, 1) = expected(2, 2) = expected(1, 2) = expected(2, 1) = 0.25;
  CHECK((demo.state.matrix() - expected).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(*demo.verdict.concurrence == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(*demo.verdict.eof == doctest::Approx(0.3545789026652698842).epsilon(1e-11));
  CHECK_FALSE(demo.verdict.is_ppt);
  CHECK(demo.verdict.ppt_sufficient);
}
