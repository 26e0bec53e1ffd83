// SPDX-License-Identifier: Apache-2.0

#include "qbell/gates.hpp"

#include <bit>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace qbell {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Eigen::MatrixXcd pauli_x() {
  Eigen::MatrixXcd m(2, 2);
  m << cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(0, 0);
  return m;
}

Eigen::MatrixXcd pauli_y() {
  Eigen::MatrixXcd m(2, 2);
  m << cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0);
  return m;
}

Eigen::MatrixXcd pauli_z() {
  Eigen::MatrixXcd m(2, 2);
  m << cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(-1, 0);
  return m;
}

Eigen::MatrixXcd hadamard2() {
  Eigen::MatrixXcd m(2, 2);
  m << cplx(kInvSqrt2, 0), cplx(kInvSqrt2, 0), cplx(kInvSqrt2, 0),
      cplx(-kInvSqrt2, 0);
  return m;
}

Eigen::MatrixXcd proj_l() {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 0) = cplx(1, 0);
  return m;
}

Eigen::MatrixXcd proj_r() {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(1, 1) = cplx(1, 0);
  return m;
}

DenseOperator identity_op(int n_qubits) {
  const auto d = Eigen::Index{1} << n_qubits;
  return DenseOperator(Eigen::MatrixXcd::Identity(d, d));
}

DenseOperator kron_power(const Eigen::MatrixXcd &factor, int count) {
  DenseOperator acc{factor};
  for (int i = 1; i < count; ++i) {
    acc = kron(acc, DenseOperator{factor});
  }
  return acc;
}

void require_range(const GateTag &tag, int min_n) {
  if (tag.n < min_n) {
    throw std::invalid_argument(gate_name(tag) + " requires at least " +
                                std::to_string(min_n) + " qubits");
  }
  if (tag.n > kMaxDenseQubits) {
    throw CapacityError(gate_name(tag) + " exceeds the dense ceiling of " +
                        std::to_string(kMaxDenseQubits) + " qubits");
  }
}

void require_multiqubit(const PureState &s, const char *op) {
  if (s.qubits() < 2) {
    throw std::invalid_argument(std::string(op) +
                                " requires at least 2 qubits");
  }
}

} // namespace

std::string gate_name(const GateTag &tag) {
  switch (tag.kind) {
  case GateKind::PauliX:
    return "pauli_x";
  case GateKind::PauliY:
    return "pauli_y";
  case GateKind::PauliZ:
    return "pauli_z";
  case GateKind::Hadamard:
    return "hadamard";
  case GateKind::ProjL:
    return "proj_l";
  case GateKind::ProjR:
    return "proj_r";
  case GateKind::Walsh:
    return "walsh(" + std::to_string(tag.n) + ")";
  case GateKind::WitnessM:
    return "m(" + std::to_string(tag.n) + ")";
  case GateKind::CnotGen:
    return "cnot(" + std::to_string(tag.n) + ")";
  case GateKind::Bell:
    return "bell(" + std::to_string(tag.n) + ")";
  case GateKind::LMatrix:
    return "lmatrix(" + std::to_string(tag.n) + ")";
  }
  return "unknown";
}

DenseOperator dense(const GateTag &tag) {
  switch (tag.kind) {
  case GateKind::PauliX:
    return DenseOperator{pauli_x()};
  case GateKind::PauliY:
    return DenseOperator{pauli_y()};
  case GateKind::PauliZ:
    return DenseOperator{pauli_z()};
  case GateKind::Hadamard:
    return DenseOperator{hadamard2()};
  case GateKind::ProjL:
    return DenseOperator{proj_l()};
  case GateKind::ProjR:
    return DenseOperator{proj_r()};
  case GateKind::Walsh:
    require_range(tag, 1);
    return kron_power(hadamard2(), tag.n);
  case GateKind::WitnessM:
    require_range(tag, 2);
    return kron(DenseOperator{pauli_y()},
                kron(identity_op(tag.n - 2), DenseOperator{pauli_y()}));
  case GateKind::CnotGen: {
    require_range(tag, 2);
    const DenseOperator left = kron(DenseOperator{proj_l()},
                                    identity_op(tag.n - 1));
    const DenseOperator right =
        kron(DenseOperator{proj_r()}, kron_power(pauli_x(), tag.n - 1));
    return DenseOperator(left.mat() + right.mat());
  }
  case GateKind::Bell: {
    require_range(tag, 2);
    const DenseOperator head =
        kron(dense({GateKind::Walsh, tag.n - 1}), identity_op(1));
    const DenseOperator cnot = dense({GateKind::CnotGen, tag.n});
    return DenseOperator(cnot.mat() * head.mat());
  }
  case GateKind::LMatrix: {
    require_range(tag, 1);
    DenseOperator chain = kron_power(pauli_z(), tag.n);
    return DenseOperator(-chain.mat());
  }
  }
  throw std::invalid_argument("unknown gate kind");
}

PureState apply_cnot_gen(const PureState &s) {
  require_multiqubit(s, "apply_cnot_gen");
  const std::uint64_t dim = s.dim();
  const std::uint64_t msb = dim >> 1;
  const std::uint64_t low_mask = msb - 1; // the n-1 bits below the control
  std::vector<cplx> out(dim);
  for (std::uint64_t k = 0; k < msb; ++k) {
    out[k] = s[k];
  }
  for (std::uint64_t k = msb; k < dim; ++k) {
    out[k ^ low_mask] = s[k];
  }
  return PureState::unchecked(s.qubits(), std::move(out));
}

PureState apply_walsh_head(PureState s) {
  require_multiqubit(s, "apply_walsh_head");
  const int n = s.qubits();
  const std::uint64_t dim = s.dim();
  std::vector<cplx> out(s.amplitudes().begin(), s.amplitudes().end());
  // Qubit axes in order 1..n-1 so rounding is reproducible.
  for (int q = 1; q <= n - 1; ++q) {
    const std::uint64_t mask = std::uint64_t{1} << (n - q);
    for (std::uint64_t base = 0; base < dim; base += mask << 1) {
      for (std::uint64_t off = 0; off < mask; ++off) {
        const std::uint64_t i = base + off;
        const cplx a = out[i];
        const cplx b = out[i + mask];
        out[i] = (a + b) * kInvSqrt2;
        out[i + mask] = (a - b) * kInvSqrt2;
      }
    }
  }
  return PureState::unchecked(n, std::move(out));
}

PureState apply_m(const PureState &s) {
  require_multiqubit(s, "apply_m");
  const int n = s.qubits();
  const std::uint64_t dim = s.dim();
  const std::uint64_t first = dim >> 1;
  const std::uint64_t last = 1;
  const std::uint64_t flip = first | last;
  std::vector<cplx> out(dim);
  for (std::uint64_t k = 0; k < dim; ++k) {
    // sigma_y sends |0> to i|1> and |1> to -i|0>; track both factors as an
    // exponent of i mod 4. It is always even, so the result stays real.
    const int exp_first = (k & first) ? 3 : 1;
    const int exp_last = (k & last) ? 3 : 1;
    const int exponent = (exp_first + exp_last) % 4;
    assert(exponent % 2 == 0);
    const double sign = (exponent == 0) ? 1.0 : -1.0;
    out[k ^ flip] = sign * s[k];
  }
  return PureState::unchecked(n, std::move(out));
}

PureState bell_state(int n, std::uint64_t k) {
  if (n < 2) {
    throw std::invalid_argument("bell_state requires at least 2 qubits");
  }
  return apply_cnot_gen(apply_walsh_head(basis_state(n, k)));
}

std::vector<double> l_matrix_diag(int n) {
  if (n < 1) {
    throw std::invalid_argument("l_matrix_diag requires n >= 1");
  }
  if (n > kMaxQubits) {
    throw CapacityError("l_matrix_diag capped at " +
                        std::to_string(kMaxQubits) + " qubits");
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<double> diag(dim);
  for (std::uint64_t j = 0; j < dim; ++j) {
    diag[j] = (std::popcount(j) % 2 == 0) ? -1.0 : 1.0;
  }
  return diag;
}

} // namespace qbell
