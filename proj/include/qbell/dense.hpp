// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qbell/state.hpp"
#include "qbell/types.hpp"

namespace qbell {

/// Square complex matrix whose dimension is a power of two.
class DenseOperator {
public:
  explicit DenseOperator(Eigen::MatrixXcd m);

  std::uint64_t dim() const { return static_cast<std::uint64_t>(mat_.rows()); }
  const Eigen::MatrixXcd &mat() const { return mat_; }
  cplx entry(std::uint64_t r, std::uint64_t c) const {
    return mat_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }

private:
  Eigen::MatrixXcd mat_;
};

/// Kronecker product a (x) b.
DenseOperator kron(const DenseOperator &a, const DenseOperator &b);

/// op * s for a norm-preserving op; the result is re-validated as a PureState.
/// Use apply_dense_raw for non-unitary operators.
PureState apply_dense(const DenseOperator &op, const PureState &s);

/// Plain matrix-vector product; no normalization contract.
std::vector<cplx> apply_dense_raw(const DenseOperator &op,
                                  std::span<const cplx> v);

} // namespace qbell
