#include "mrspec/errors.hpp"
#include "mrspec/oracle.hpp"
#include "mrspec/wavefunction.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace mrspec;

namespace {

const UnitSystem kAtomic = UnitSystem::atomic();

PotentialParams table_params(double alpha, double inv_b) {
  const double b = 1.0 / inv_b;
  return {2.0 * b, alpha, b};
}

} // namespace

TEST_CASE("effective potential") {
  const auto p = table_params(0.75, 0.025);
  for (auto scheme : {CentrifugalScheme::exact(), CentrifugalScheme::greene_aldrich(),
                      CentrifugalScheme::shifted()}) {
    auto rp = default_problem(p, kAtomic, 0, scheme, 0);
    rp.grid_points = 2000;
    const auto U = build_effective_potential(rp);
    REQUIRE(U.r.size() == 1999);
    for (std::size_t i = 0; i < U.r.size(); i += 37)
      CHECK(U.U[i] == mr_value(p, kAtomic, U.r[i]));
  }

  // l = 2: compare the centrifugal parts at r = 0.1 b
  RadialProblem rp;
  rp.params = p;
  rp.l = 2;
  rp.r_min = 1e-6 * p.b;
  rp.grid_points = 1000;
  // last interior node lands on 0.1 b
  rp.r_max = rp.r_min + (0.1 * p.b - rp.r_min) * 1000.0 / 999.0;
  rp.scheme = CentrifugalScheme::exact();
  const auto ex = build_effective_potential(rp);
  rp.scheme = CentrifugalScheme::greene_aldrich();
  const auto ga = build_effective_potential(rp);
  const std::size_t last = ex.r.size() - 1;
  const double v = mr_value(p, kAtomic, ex.r[last]);
  CHECK(std::abs(ex.r[last] - 0.1 * p.b) < 1e-9 * p.b);
  CHECK(std::abs((ga.U[last] - v) - (ex.U[last] - v)) < 0.01 * (ex.U[last] - v));

  // tails: shifted tends to kin * l(l+1) * c0 / b^2, the others to 0
  rp.r_min = 200.0 * p.b;
  rp.r_max = 201.0 * p.b;
  rp.scheme = CentrifugalScheme::shifted();
  CHECK(build_effective_potential(rp).U.back() ==
        doctest::Approx(0.5 * 6.0 / (12.0 * p.b * p.b)).epsilon(1e-9));
  rp.scheme = CentrifugalScheme::greene_aldrich();
  CHECK(std::abs(build_effective_potential(rp).U.back()) < 1e-60);
  rp.scheme = CentrifugalScheme::exact();
  CHECK(build_effective_potential(rp).U.back() == doctest::Approx(3.0 / (201.0 * p.b * 201.0 * p.b)).epsilon(1e-6));
}

TEST_CASE("problem validation") {
  RadialProblem rp;
  rp.params = table_params(0.75, 0.025);
  rp.r_min = 0.0;
  rp.r_max = 100.0;
  CHECK_THROWS_AS(rp.validate(), DomainError);
  rp.r_min = 1e-3;
  rp.grid_points = 999;
  CHECK_THROWS_AS(rp.validate(), DomainError);
  rp.grid_points = 1000;
  rp.r_max = 1e-4;
  CHECK_THROWS_AS(rp.validate(), DomainError);
  rp.r_max = 10.0;
  CHECK_NOTHROW(rp.validate());
  CHECK_THROWS_AS(solve(rp, 0), DomainError);
}

TEST_CASE("hydrogen self-test") {
  // The wall at r_min lifts an s-level by about (1/2) r_min R'(0)^2 = 2 r_min
  // here, so it sits far closer to the origin than the 1e-6 b default.
  const auto spec = solve_potential([](double r) { return -1.0 / r; }, 0.5, {1e-9, 60.0, 20000}, 3, 1.0);
  REQUIRE(spec.eigenvalues.size() == 3);
  CHECK(std::abs(spec.eigenvalues[0] + 0.5) < 1e-6);
  CHECK(std::abs(spec.eigenvalues[1] + 0.125) < 1e-6);
  CHECK(std::abs(spec.eigenvalues[2] + 1.0 / 18.0) < 1e-6);
}

TEST_CASE("harmonic well") {
  // Not a bound-state count test: shift the oscillator down so that levels are negative.
  const auto spec = solve_potential([](double r) { return 0.5 * (r - 10.0) * (r - 10.0) - 10.0; }, 0.5,
                                    {1e-3, 20.0, 4000}, 4, 1.0);
  REQUIRE(spec.eigenvalues.size() == 4);
  for (int j = 0; j < 4; ++j)
    CHECK(spec.eigenvalues[static_cast<std::size_t>(j)] == doctest::Approx(j + 0.5 - 10.0).epsilon(1e-9));
}

TEST_CASE("greene_aldrich scheme reproduces the closed form") {
  const auto p = table_params(0.75, 0.025);
  for (int l = 1; l <= 3; ++l) {
    const auto rp = default_problem(p, kAtomic, l, CentrifugalScheme::greene_aldrich(), 2);
    const auto spec = solve(rp, 3);
    REQUIRE(spec.eigenvalues.size() == 3);
    CHECK_FALSE(spec.shortfall());
    for (int n = 0; n < 3; ++n) {
      CAPTURE(l);
      CAPTURE(n);
      const auto j = static_cast<std::size_t>(n);
      CHECK(std::abs(spec.eigenvalues[j] - energy(p, kAtomic, {n, l})) < 1e-6);
      CHECK(spec.converged[j]);
      CHECK(std::abs(spec.richardson_delta[j]) < 1e-7 * spec.energy_scale);
    }
    for (std::size_t j = 1; j < spec.eigenvalues.size(); ++j)
      CHECK(spec.eigenvalues[j - 1] < spec.eigenvalues[j]);
  }
}

TEST_CASE("exact scheme example") {
  const auto p = table_params(0.75, 0.025);
  const auto spec = solve(default_problem(p, kAtomic, 1, CentrifugalScheme::exact(), 0), 1);
  REQUIRE(spec.eigenvalues.size() == 1);
  CHECK(std::abs(spec.eigenvalues[0] + 0.1205271) < 5e-6);
  CHECK(spec.scheme == "exact");
  CHECK(spec.l == 1);
}

TEST_CASE("grid refinement and domain sufficiency") {
  const auto p = table_params(1.5, 0.05);
  const auto base = default_problem(p, kAtomic, 2, CentrifugalScheme::exact(), 1);
  const auto a = solve(base, 2);
  auto finer = base;
  finer.grid_points *= 2;
  const auto b = solve(finer, 2);
  auto wider = base;
  wider.r_max *= 2.0;
  wider.grid_points *= 2; // same step
  const auto c = solve(wider, 2);
  REQUIRE(a.eigenvalues.size() == 2);
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(std::abs(a.eigenvalues[j] - b.eigenvalues[j]) < 1e-7 * a.energy_scale);
    CHECK(std::abs(a.eigenvalues[j] - c.eigenvalues[j]) < 1e-9 * a.energy_scale);
  }
}

TEST_CASE("shortfall is reported, not thrown") {
  const auto p = table_params(0.75, 0.1);
  const auto rp = default_problem(p, kAtomic, 3, CentrifugalScheme::greene_aldrich(), 0);
  const auto spec = solve(rp, 10);
  CHECK(spec.requested == 10);
  CHECK(spec.shortfall());
  for (double e : spec.eigenvalues)
    CHECK(e < 0.0);
}

TEST_CASE("eigenvectors have n nodes") {
  const auto p = table_params(0.75, 0.025);
  for (auto scheme : {CentrifugalScheme::greene_aldrich(), CentrifugalScheme::exact()})
    for (int n = 0; n <= 3; ++n) {
      auto rp = default_problem(p, kAtomic, 1, scheme, 3);
      const auto v = eigenvector(rp, n);
      CHECK(count_nodes(v.psi) == n);
      CHECK(v.psi.size() == v.r.size());
    }
  CHECK_THROWS_AS(eigenvector(default_problem(p, kAtomic, 1, CentrifugalScheme::exact(), 0), 500),
                  NoBoundStateError);
}

TEST_CASE("eigenvector matches the closed-form wavefunction") {
  const auto p = table_params(0.75, 0.025);
  const auto rp = default_problem(p, kAtomic, 2, CentrifugalScheme::greene_aldrich(), 1);
  const auto v = eigenvector(rp, 1);
  const auto w = make_radial_wavefunction(p, {1, 2});
  // the closed form carries (-1)^n at the origin; align signs first
  double dot = 0.0;
  for (std::size_t i = 0; i < v.r.size(); i += 11)
    dot += radial_value(w, v.r[i]) * v.psi[i];
  const double sign = dot < 0.0 ? -1.0 : 1.0;
  double worst = 0.0, peak = 0.0;
  for (std::size_t i = 0; i < v.r.size(); i += 11) {
    const double R = radial_value(w, v.r[i]);
    peak = std::max(peak, std::abs(R));
    worst = std::max(worst, std::abs(R - sign * v.psi[i]));
  }
  CHECK(worst < 1e-3 * peak);
}

TEST_CASE("count_nodes ignores numerical dust") {
  const std::vector<double> psi = {0.0, 1.0, 2.0, 1e-12, -1e-12, 1.0, -0.5, 0.0};
  CHECK(count_nodes(psi) == 1);
  CHECK(count_nodes(psi, 0.0) == 3);
}

TEST_CASE("compare") {
  const auto p = table_params(0.75, 0.025);
  const auto spec = solve(default_problem(p, kAtomic, 1, CentrifugalScheme::greene_aldrich(), 1), 2);
  REQUIRE(spec.eigenvalues.size() == 2);

  std::vector<StateEnergy> same = {{{1, 1}, spec.eigenvalues[1]}, {{0, 1}, spec.eigenvalues[0]}};
  const auto zero = compare(same, spec);
  CHECK(zero.max_abs_dev == 0.0);
  REQUIRE(zero.entries.size() == 2);
  CHECK(zero.entries[0].state.n == 0);
  CHECK(zero.entries[1].state.n == 1);
  CHECK(zero.scheme == "greene_aldrich");

  std::vector<StateEnergy> analytic = {{{0, 1}, energy(p, kAtomic, {0, 1})},
                                       {{1, 1}, energy(p, kAtomic, {1, 1})}};
  CHECK(compare(analytic, spec).max_abs_dev < 1e-6);

  analytic.pop_back();
  CHECK_THROWS_AS(compare(analytic, spec), AlignmentError);
  std::vector<StateEnergy> wrong_l = {{{0, 2}, -0.1}, {{1, 2}, -0.05}};
  CHECK_THROWS_AS(compare(wrong_l, spec), AlignmentError);
  std::vector<StateEnergy> dup = {{{0, 1}, -0.1}, {{0, 1}, -0.05}};
  CHECK_THROWS_AS(compare(dup, spec), AlignmentError);
}

TEST_CASE("solves are deterministic") {
  const auto rp = default_problem(table_params(1.5, 0.075), kAtomic, 2, CentrifugalScheme::exact(), 1);
  const auto a = solve(rp, 2);
  const auto b = solve(rp, 2);
  CHECK(a.eigenvalues == b.eigenvalues);
}
