// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include "doctest.h"
#include "qbell/entanglement.hpp"
#include "qbell/gates.hpp"

using qbell::cplx;
using qbell::DensityMatrix2;
using qbell::PureState;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

} // namespace

TEST_CASE("density matrix validation") {
  CHECK_THROWS_AS(DensityMatrix2::from_entries(cplx(0.5, 0), cplx(0.2, 0),
                                               cplx(0.3, 0), cplx(0.5, 0)),
                  std::invalid_argument); // not Hermitian
  CHECK_THROWS_AS(DensityMatrix2::from_entries(cplx(0.7, 0), cplx(0, 0),
                                               cplx(0, 0), cplx(0.7, 0)),
                  std::invalid_argument); // trace 1.4
  CHECK_THROWS_AS(DensityMatrix2::from_entries(cplx(1.5, 0), cplx(0, 0),
                                               cplx(0, 0), cplx(-0.5, 0)),
                  std::invalid_argument); // negative eigenvalue
  const DensityMatrix2 ok = DensityMatrix2::from_entries(
      cplx(0.5, 0), cplx(0, 0.5), cplx(0, -0.5), cplx(0.5, 0));
  CHECK(qbell::purity(ok) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("purity of a diagonal mixture") {
  const DensityMatrix2 rho = DensityMatrix2::from_entries(
      cplx(0.75, 0), cplx(0, 0), cplx(0, 0), cplx(0.25, 0));
  CHECK(qbell::purity(rho) == doctest::Approx(0.625).epsilon(1e-15));
}

TEST_CASE("reduced density of a correlated two-qubit state") {
  const double a = std::sqrt(3.0) / 2.0;
  const PureState s = PureState::from_amplitudes(
      2, {cplx(a, 0), cplx(0, 0), cplx(0, 0), cplx(0.5, 0)});
  for (int j = 1; j <= 2; ++j) {
    const DensityMatrix2 rho = qbell::reduced_density_qubit(s, j);
    CHECK(rho.entry(0, 0).real() == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(rho.entry(1, 1).real() == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(std::abs(rho.entry(0, 1)) < 1e-14);
    CHECK(qbell::purity(rho) == doctest::Approx(0.625).epsilon(1e-14));
  }
  CHECK_THROWS_AS(qbell::reduced_density_qubit(s, 0), std::invalid_argument);
  CHECK_THROWS_AS(qbell::reduced_density_qubit(s, 3), std::invalid_argument);
}

TEST_CASE("reduced density keeps coherences of a plus state") {
  const PureState plus = PureState::from_amplitudes(
      1, {cplx(kInvSqrt2, 0), cplx(kInvSqrt2, 0)});
  const PureState s = qbell::tensor_states(plus, qbell::basis_state(1, 0));
  const DensityMatrix2 rho = qbell::reduced_density_qubit(s, 1);
  CHECK(rho.entry(0, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(qbell::purity(rho) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("witness value on the first bell column") {
  const cplx f = qbell::f_value(qbell::bell_state(2, 0));
  CHECK(std::abs(f - cplx(-1, 0)) < 1e-14);
}

TEST_CASE("witness value has unit modulus on every two-qubit bell column") {
  for (std::uint64_t k = 0; k < 4; ++k) {
    const cplx f = qbell::f_value(qbell::bell_state(2, k));
    CHECK(std::abs(std::abs(f) - 1.0) < 1e-14);
  }
}

TEST_CASE("witness value vanishes on computational basis products") {
  CHECK(std::abs(qbell::f_value(qbell::basis_state(2, 0))) == 0.0);
  CHECK(std::abs(qbell::f_value(qbell::basis_state(3, 6))) == 0.0);
  const PureState plus = PureState::from_amplitudes(
      1, {cplx(kInvSqrt2, 0), cplx(kInvSqrt2, 0)});
  const PureState prod = qbell::tensor_states(plus, plus);
  CHECK(std::abs(qbell::f_value(prod)) < 1e-15);
  CHECK_THROWS_AS(qbell::f_value(qbell::basis_state(1, 0)),
                  std::invalid_argument);
}

TEST_CASE("ghz states and their witness dichotomy") {
  const PureState g2 = qbell::ghz_state(2);
  CHECK(std::abs(g2[0] - cplx(kInvSqrt2, 0)) < 1e-15);
  CHECK(std::abs(g2[3] - cplx(kInvSqrt2, 0)) < 1e-15);
  CHECK(std::abs(std::abs(qbell::f_value(g2)) - 1.0) < 1e-14);

  const PureState g3 = qbell::ghz_state(3);
  CHECK(std::abs(qbell::f_value(g3)) < 1e-15);
  CHECK(qbell::mw_measure(g3) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(qbell::mw_measure(qbell::ghz_state(4)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(qbell::ghz_state(1), std::invalid_argument);
  CHECK_THROWS_AS(qbell::ghz_state(27), qbell::CapacityError);
}

TEST_CASE("mw measure frozen values") {
  CHECK(qbell::mw_measure(qbell::bell_state(2, 0)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(qbell::mw_measure(qbell::basis_state(3, 5)) ==
        doctest::Approx(0.0).epsilon(1e-12));
  // W state: every single-qubit reduction is diag(2/3, 1/3), so the
  // measure is 2(1 - 5/9) = 8/9.
  const double w = 1.0 / std::sqrt(3.0);
  const PureState w3 = PureState::from_amplitudes(
      3, {cplx(0, 0), cplx(w, 0), cplx(w, 0), cplx(0, 0), cplx(w, 0),
          cplx(0, 0), cplx(0, 0), cplx(0, 0)});
  CHECK(qbell::mw_measure(w3) == doctest::Approx(8.0 / 9.0).epsilon(1e-13));
  CHECK_THROWS_AS(qbell::mw_measure(qbell::basis_state(1, 0)),
                  std::invalid_argument);
}

// Beyond two qubits the Bell family is a pair between the first and last
// qubits times pure middles: two purities of 1/2 and n-2 of 1 give Q = 2/n,
// while the witness modulus stays 1.
TEST_CASE("mw measure of the bell family is 2/n") {
  for (int n = 3; n <= 7; ++n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t k = 0; k < dim; k += (dim / 8)) {
      const PureState b = qbell::bell_state(n, k);
      CHECK(qbell::mw_measure(b) ==
            doctest::Approx(2.0 / n).epsilon(1e-12));
      CHECK(std::abs(qbell::f_value(b)) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  // The middle qubits are pure, the edge ones maximally mixed.
  const PureState b30 = qbell::bell_state(3, 0);
  CHECK(qbell::purity(qbell::reduced_density_qubit(b30, 1)) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(qbell::purity(qbell::reduced_density_qubit(b30, 2)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(qbell::purity(qbell::reduced_density_qubit(b30, 3)) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("schmidt coefficients of known states") {
  const qbell::SchmidtData bell = qbell::schmidt(qbell::bell_state(2, 0), 1);
  REQUIRE(bell.coefficients.size() == 2);
  CHECK(bell.coefficients[0] == doctest::Approx(kInvSqrt2).epsilon(1e-13));
  CHECK(bell.coefficients[1] == doctest::Approx(kInvSqrt2).epsilon(1e-13));

  for (int cut = 1; cut <= 2; ++cut) {
    const qbell::SchmidtData g = qbell::schmidt(qbell::ghz_state(3), cut);
    CHECK(g.cut == cut);
    CHECK(g.coefficients[0] == doctest::Approx(kInvSqrt2).epsilon(1e-13));
    CHECK(g.coefficients[1] == doctest::Approx(kInvSqrt2).epsilon(1e-13));
  }

  const qbell::SchmidtData basis = qbell::schmidt(qbell::basis_state(3, 2), 1);
  CHECK(basis.coefficients[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(basis.coefficients[1] == 0.0); // clamped

  CHECK_THROWS_AS(qbell::schmidt(qbell::basis_state(2, 0), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(qbell::schmidt(qbell::basis_state(2, 0), 2),
                  std::invalid_argument);
}

TEST_CASE("schmidt squares sum to one and bridge to purity") {
  const double a = std::sqrt(3.0) / 2.0;
  const PureState s = PureState::from_amplitudes(
      2, {cplx(a, 0), cplx(0, 0), cplx(0, 0), cplx(0.5, 0)});
  const qbell::SchmidtData data = qbell::schmidt(s, 1);
  double sum_sq = 0.0;
  double sum_quad = 0.0;
  for (const double c : data.coefficients) {
    sum_sq += c * c;
    sum_quad += c * c * c * c;
  }
  CHECK(sum_sq == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(sum_quad == doctest::Approx(0.625).epsilon(1e-13));
  CHECK(data.coefficients[0] == doctest::Approx(a).epsilon(1e-13));
  CHECK(data.coefficients[1] == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("product verdicts by cut") {
  const qbell::ProductVerdict basis = qbell::is_product(qbell::basis_state(3, 5));
  CHECK(basis.is_product);
  CHECK(basis.cut == 1);

  const qbell::ProductVerdict ghz = qbell::is_product(qbell::ghz_state(3));
  CHECK_FALSE(ghz.is_product);
  CHECK(ghz.cut == -1);

  // Entangled across cut 1, separable across cut 2.
  const PureState mixed =
      qbell::tensor_states(qbell::bell_state(2, 0), qbell::basis_state(1, 0));
  const qbell::ProductVerdict v = qbell::is_product(mixed);
  CHECK(v.is_product);
  CHECK(v.cut == 2);

  CHECK_THROWS_AS(qbell::is_product(qbell::basis_state(1, 0)),
                  std::invalid_argument);
}
