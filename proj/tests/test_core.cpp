// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include "doctest.h"
#include "qbell/dense.hpp"
#include "qbell/state.hpp"

using qbell::cplx;
using qbell::PureState;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

double max_diff(const PureState &s, const std::vector<cplx> &want) {
  REQUIRE(s.dim() == want.size());
  double worst = 0.0;
  for (std::uint64_t k = 0; k < s.dim(); ++k) {
    worst = std::max(worst, std::abs(s[k] - want[k]));
  }
  return worst;
}

} // namespace

TEST_CASE("basis states are unit vectors with a single nonzero") {
  const PureState s = qbell::basis_state(3, 5);
  CHECK(s.qubits() == 3);
  CHECK(s.dim() == 8);
  for (std::uint64_t k = 0; k < 8; ++k) {
    CHECK(s[k] == (k == 5 ? cplx(1, 0) : cplx(0, 0)));
  }
  CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("basis state argument validation") {
  CHECK_THROWS_AS(qbell::basis_state(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(qbell::basis_state(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(qbell::basis_state(27, 0), qbell::CapacityError);
}

TEST_CASE("from_amplitudes validates length and norm") {
  std::vector<cplx> bad_len = {cplx(1, 0), cplx(0, 0), cplx(0, 0)};
  CHECK_THROWS_AS(PureState::from_amplitudes(2, bad_len),
                  std::invalid_argument);
  std::vector<cplx> bad_norm = {cplx(1, 0), cplx(1, 0)};
  CHECK_THROWS_AS(PureState::from_amplitudes(1, bad_norm),
                  std::invalid_argument);
  std::vector<cplx> good = {cplx(kInvSqrt2, 0), cplx(0, kInvSqrt2)};
  const PureState s = PureState::from_amplitudes(1, good);
  CHECK(s.qubits() == 1);
}

TEST_CASE("normalized rescales and rejects the zero vector") {
  std::vector<cplx> raw = {cplx(3, 0), cplx(0, 4)};
  const PureState s = PureState::normalized(1, raw);
  CHECK(std::abs(s[0] - cplx(0.6, 0)) < 1e-15);
  CHECK(std::abs(s[1] - cplx(0, 0.8)) < 1e-15);
  std::vector<cplx> zero = {cplx(0, 0), cplx(0, 0)};
  CHECK_THROWS_AS(PureState::normalized(1, zero), std::invalid_argument);
}

TEST_CASE("tensor product interleaves amplitudes with the left factor high") {
  const PureState plus = PureState::from_amplitudes(
      1, {cplx(kInvSqrt2, 0), cplx(kInvSqrt2, 0)});
  const PureState minus = PureState::from_amplitudes(
      1, {cplx(kInvSqrt2, 0), cplx(-kInvSqrt2, 0)});
  const PureState prod = qbell::tensor_states(plus, minus);
  CHECK(prod.qubits() == 2);
  CHECK(max_diff(prod, {cplx(0.5, 0), cplx(-0.5, 0), cplx(0.5, 0),
                        cplx(-0.5, 0)}) < 1e-15);
}

TEST_CASE("tensor product of basis states indexes by concatenated bits") {
  const PureState a = qbell::basis_state(2, 1);
  const PureState b = qbell::basis_state(1, 1);
  const PureState prod = qbell::tensor_states(a, b);
  // (01) then (1) reads as index 011 = 3.
  for (std::uint64_t k = 0; k < 8; ++k) {
    CHECK(prod[k] == (k == 3 ? cplx(1, 0) : cplx(0, 0)));
  }
}

TEST_CASE("tensor product refuses to cross the register ceiling") {
  const PureState a = qbell::basis_state(14, 0);
  const PureState b = qbell::basis_state(13, 0);
  CHECK_THROWS_AS(qbell::tensor_states(a, b), qbell::CapacityError);
}

TEST_CASE("conjugate_state flips imaginary parts") {
  const PureState s = PureState::from_amplitudes(
      1, {cplx(0.6, 0), cplx(0, -0.8)});
  const PureState c = qbell::conjugate_state(s);
  CHECK(c[0] == cplx(0.6, 0));
  CHECK(c[1] == cplx(0, 0.8));
}

TEST_CASE("inner product is conjugate-linear on the left") {
  const PureState a = PureState::from_amplitudes(
      1, {cplx(0, kInvSqrt2), cplx(kInvSqrt2, 0)});
  const PureState b = qbell::basis_state(1, 0);
  const cplx v = qbell::inner(a, b);
  CHECK(std::abs(v - cplx(0, -kInvSqrt2)) < 1e-15);
  CHECK(std::abs(qbell::inner(a, a) - cplx(1, 0)) < 1e-15);
}

TEST_CASE("inner product requires matching registers") {
  const PureState a = qbell::basis_state(1, 0);
  const PureState b = qbell::basis_state(2, 0);
  CHECK_THROWS_AS(qbell::inner(a, b), std::invalid_argument);
}

TEST_CASE("dense operators validate shape") {
  Eigen::MatrixXcd rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(qbell::DenseOperator{rect}, std::invalid_argument);
  Eigen::MatrixXcd odd(3, 3);
  odd.setZero();
  CHECK_THROWS_AS(qbell::DenseOperator{odd}, std::invalid_argument);
}

TEST_CASE("kron of small matrices places blocks by the left factor") {
  Eigen::MatrixXcd a(2, 2);
  a << cplx(1, 0), cplx(2, 0), cplx(3, 0), cplx(4, 0);
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Identity(2, 2);
  const qbell::DenseOperator k =
      qbell::kron(qbell::DenseOperator{a}, qbell::DenseOperator{b});
  CHECK(k.dim() == 4);
  CHECK(k.entry(0, 0) == cplx(1, 0));
  CHECK(k.entry(0, 2) == cplx(2, 0));
  CHECK(k.entry(1, 3) == cplx(2, 0));
  CHECK(k.entry(2, 0) == cplx(3, 0));
  CHECK(k.entry(3, 3) == cplx(4, 0));
  CHECK(k.entry(0, 1) == cplx(0, 0));
}

TEST_CASE("apply_dense multiplies and revalidates") {
  Eigen::MatrixXcd x(2, 2);
  x << cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(0, 0);
  const qbell::DenseOperator op{x};
  const PureState s = qbell::basis_state(1, 0);
  const PureState flipped = qbell::apply_dense(op, s);
  CHECK(flipped[0] == cplx(0, 0));
  CHECK(flipped[1] == cplx(1, 0));

  Eigen::MatrixXcd shrink = Eigen::MatrixXcd::Identity(2, 2) * 0.5;
  CHECK_THROWS_AS(qbell::apply_dense(qbell::DenseOperator{shrink}, s),
                  std::invalid_argument);

  const std::vector<cplx> raw =
      qbell::apply_dense_raw(qbell::DenseOperator{shrink}, s.amplitudes());
  CHECK(raw[0] == cplx(0.5, 0));
}

TEST_CASE("apply_dense requires matching dimensions") {
  Eigen::MatrixXcd id4 = Eigen::MatrixXcd::Identity(4, 4);
  CHECK_THROWS_AS(
      qbell::apply_dense(qbell::DenseOperator{id4}, qbell::basis_state(1, 0)),
      std::invalid_argument);
}
