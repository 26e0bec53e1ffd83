// SPDX-License-Identifier: Apache-2.0

#include "qbell/dense.hpp"

#include <bit>
#include <stdexcept>

namespace qbell {

DenseOperator::DenseOperator(Eigen::MatrixXcd m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols()) {
    throw std::invalid_argument("dense operator must be square");
  }
  const auto d = static_cast<std::uint64_t>(mat_.rows());
  if (d == 0 || !std::has_single_bit(d)) {
    throw std::invalid_argument("dense operator dimension must be a power "
                                "of two, got " +
                                std::to_string(d));
  }
}

DenseOperator kron(const DenseOperator &a, const DenseOperator &b) {
  const auto da = static_cast<Eigen::Index>(a.dim());
  const auto db = static_cast<Eigen::Index>(b.dim());
  Eigen::MatrixXcd out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a.mat()(i, j) * b.mat();
    }
  }
  return DenseOperator(std::move(out));
}

PureState apply_dense(const DenseOperator &op, const PureState &s) {
  if (op.dim() != s.dim()) {
    throw std::invalid_argument("operator dimension " +
                                std::to_string(op.dim()) +
                                " does not match state dimension " +
                                std::to_string(s.dim()));
  }
  std::vector<cplx> out = apply_dense_raw(op, s.amplitudes());
  // from_amplitudes re-checks the norm, catching non-unitary misuse.
  return PureState::from_amplitudes(s.qubits(), std::move(out));
}

std::vector<cplx> apply_dense_raw(const DenseOperator &op,
                                  std::span<const cplx> v) {
  if (op.dim() != v.size()) {
    throw std::invalid_argument("operator dimension " +
                                std::to_string(op.dim()) +
                                " does not match vector length " +
                                std::to_string(v.size()));
  }
  const auto d = static_cast<Eigen::Index>(op.dim());
  Eigen::Map<const Eigen::VectorXcd> in(v.data(), d);
  Eigen::VectorXcd out = op.mat() * in;
  return std::vector<cplx>(out.data(), out.data() + d);
}

} // namespace qbell
