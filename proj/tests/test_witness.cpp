#include <doctest.h>

#include <cmath>
#include <numbers>

#include "jcm/dynamics.hpp"
#include "jcm/errors.hpp"
#include "jcm/measures.hpp"
#include "jcm/witness.hpp"

using namespace jcm;

namespace {

constexpr double kPi = std::numbers::pi;

JcmState state_at(double nbar, double tau) {
  return evolve(thermal_distribution(nbar), JcmParams{1.0, tau});
}

}  // namespace

TEST_CASE("lambda witness values") {
  for (long n : {0L, 1L, 7L, 100L}) CHECK(lambda_witness(n, 0.0) == 0.0);
  CHECK(lambda_witness(0, kPi / 4) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(lambda_witness(1, kPi / 2) == doctest::Approx(-0.60078843859266174559).epsilon(1e-14));
  CHECK(witness_sin(-1, 3.0) == 0.0);
  CHECK(witness_cos(-1, 3.0) == 1.0);
}

TEST_CASE("lambda_0 closed form") {
  for (double tau = 0.0; tau <= 25.0; tau += 0.0137) {
    const double s = std::sin(2.0 * tau);
    CHECK(std::abs(lambda_witness(0, tau) - s * s / 4.0) <= 1e-15);
  }
}

TEST_CASE("inseparability condition is temperature independent") {
  for (double nbar : {0.1, 1.0, 10.0}) {
    const auto dist = thermal_distribution(nbar, 1e-12, 22);
    for (long n = 1; n <= 20; ++n) {
      for (double tau = 0.01; tau <= 25.0; tau += 0.173) {
        const double lambda = lambda_witness(n, tau);
        if (std::abs(lambda) < 1e-9) continue;
        CHECK(inseparability_condition(dist, n, tau) == (lambda > 0.0));
      }
    }
  }
  const auto dist = thermal_distribution(1.0);
  CHECK_FALSE(inseparability_condition(dist, 1, 0.0));
  CHECK_FALSE(inseparability_condition(dist, 1, kPi / 2));
  CHECK_THROWS_AS(inseparability_condition(dist, 0, 1.0), DomainError);
  CHECK_THROWS_AS(inseparability_condition(dist, static_cast<long>(dist.cutoff()), 1.0), DomainError);
}

TEST_CASE("project_pair frozen example") {
  const auto projected = project_pair(state_at(1.0, kPi / 4), 0);
  CHECK(projected.weight == doctest::Approx(0.5492875166151483214).epsilon(1e-14));
  CHECK(projected.concurrence() == doctest::Approx(0.91027009512455200049).epsilon(1e-13));
  CHECK(projected.diag[0] == 0.0);
  CHECK(std::abs(projected.coherence) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(std::abs(projected.rho.trace() - 1.0) <= 1e-15);
}

TEST_CASE("project_pair structure and PPT consistency") {
  const auto dist = thermal_distribution(1.0);
  for (double tau = 0.0; tau <= 25.0; tau += 0.311) {
    const auto state = evolve(dist, JcmParams{1.0, tau});
    for (long n = 0; n <= 30; ++n) {
      const auto p = project_pair(state, n);
      const Matrix& m = p.rho.matrix();
      double offsum = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          if (i != j && !((i == 1 && j == 2) || (i == 2 && j == 1))) offsum += std::abs(m(i, j));
      CHECK(offsum == 0.0);
      CHECK(std::abs(p.weight - (p.diag[0] + p.diag[1] + p.diag[2] + p.diag[3])) <= 1e-16);

      const auto verdict = ppt_verdict(p.rho);
      const double lambda = lambda_witness(n, tau);
      if (lambda > 1e-9) CHECK_FALSE(verdict.is_ppt);
      if (lambda < -1e-9) CHECK(verdict.is_ppt);
      CHECK(std::abs(p.concurrence() - *verdict.concurrence) <= 1e-11);
    }
  }
}

TEST_CASE("project_pair at t = 0 is diagonal") {
  const auto p = project_pair(state_at(2.0, 0.0), 3);
  CHECK(p.coherence == Complex{});
  CHECK(p.concurrence() == 0.0);
}

TEST_CASE("project_pair errors") {
  const auto state = state_at(1.0, 1.0);
  CHECK_THROWS_AS(project_pair(state, -1), DomainError);
  CHECK_THROWS_AS(project_pair(state, static_cast<long>(state.cutoff())), DomainError);
  // vacuum field at t = 0: nothing but |e,0>, so the {|1>,|2>} outcome is empty
  CHECK_THROWS_AS(project_pair(state_at(0.0, 0.0), 1), DegenerateOutcome);
}

TEST_CASE("pairing bound") {
  for (auto parity : {Parity::even, Parity::odd}) {
    CHECK(eof_lower_bound(state_at(10.0, 0.0), parity) == 0.0);
  }
  CHECK(eof_lower_bound(state_at(0.0, kPi / 4), Parity::even) == doctest::Approx(1.0).epsilon(1e-14));

  for (double nbar : {0.0, 0.3, 1.0, 10.0}) {
    for (double tau : {0.0, 0.4, 3.3, 17.0}) {
      const auto state = state_at(nbar, tau);
      double mass = 0.0;
      for (const auto& block : state.blocks) mass += block.weight;
      for (auto parity : {Parity::even, Parity::odd}) {
        const auto b = pairing_bound(state, parity);
        CHECK(std::abs(b.covered_weight + b.tail_weight - mass) <= 1e-10);
        CHECK(b.tail_weight <= 1e-10);
        CHECK(b.bound >= 0.0);
        CHECK(b.bound <= 1.0);
      }
    }
  }
}

TEST_CASE("correlation record frozen values") {
  const auto r = correlation_record(state_at(1.0, 0.9));
  CHECK(r.s_atom == doctest::Approx(0.79403951603647135).epsilon(1e-10));
  CHECK(r.s_field == doctest::Approx(2.4465331735601003).epsilon(1e-10));
  CHECK(r.s_joint == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(r.mutual_info == doctest::Approx(1.2405726895965716).epsilon(1e-10));
  CHECK(r.eof_bound_even == doctest::Approx(0.47217024536648726).epsilon(1e-10));
  CHECK(r.eof_bound_odd == doctest::Approx(0.062790793113098432).epsilon(1e-10));
  CHECK(r.eof_bound == r.eof_bound_even);
}

TEST_CASE("correlation record limits") {
  const auto vacuum = correlation_record(state_at(0.0, kPi / 4));
  CHECK(vacuum.mutual_info == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(vacuum.eof_bound == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(vacuum.s_joint) <= 1e-12);

  const auto start = correlation_record(state_at(10.0, 0.0));
  CHECK(start.mutual_info == 0.0);
  CHECK(start.eof_bound == 0.0);
  CHECK(start.s_atom == 0.0);
  CHECK(start.s_joint == doctest::Approx(4.8344668561366463395).epsilon(1e-10));

  for (double tau = 0.05; tau <= 25.0; tau += 1.37) {
    const auto r = correlation_record(state_at(10.0, tau));
    CHECK(r.mutual_info > 0.0);
    CHECK(r.eof_bound <= r.mutual_info);
  }
}

TEST_CASE("atom-thermal scenario") {
  for (double lambda : {0.0, 0.3, 1.0}) {
    for (long n : {0L, 1L, 4L}) {
      const auto v = atom_thermal_scenario(lambda, n, 0.0);
      CHECK(v.is_ppt);
      CHECK(v.ppt_sufficient);
    }
  }
  // lambda = 1, n = 0: pure (cos|e,0> - i sin|g,1>), negativity = |sin 2tau| / 2
  for (double tau : {0.3, 1.1, 2.0}) {
    const auto v = atom_thermal_scenario(1.0, 0, tau);
    CHECK_FALSE(v.is_ppt);
    CHECK(v.negativity == doctest::Approx(std::abs(std::sin(2.0 * tau)) / 2.0).epsilon(1e-12));
  }
  CHECK(atom_thermal_scenario(1.0, 0, kPi / 2).is_ppt);

  const auto rho = atom_thermal_state(0.5, 1, 0.7);
  REQUIRE(rho.dims().has_value());
  CHECK(rho.dims()->a == 2);
  CHECK(rho.dims()->b == 3);
  CHECK(std::abs(rho.trace() - 1.0) <= 1e-15);
  CHECK(atom_thermal_state(0.5, 0, 0.7).dims()->b == 2);

  bool found = false;
  for (double tau = 0.05; tau <= 25.0 && !found; tau += 0.05) found = !atom_thermal_scenario(0.3, 2, tau).is_ppt;
  CHECK(found);

  CHECK_THROWS_AS(atom_thermal_scenario(-0.1, 1, 1.0), DomainError);
  CHECK_THROWS_AS(atom_thermal_scenario(1.5, 1, 1.0), DomainError);
  CHECK_THROWS_AS(atom_thermal_scenario(0.5, -1, 1.0), DomainError);
}
