// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qbell/types.hpp"

namespace qbell {

/// Pure n-qubit state: a unit-norm complex vector of length 2^n.
///
/// Basis index k is read MSB-first: qubit 1 is the leftmost tensor factor
/// and the most significant bit of k. Instances are immutable.
class PureState {
public:
  /// Validates length 2^n and unit norm (within 1e-12).
  static PureState from_amplitudes(int n, std::vector<cplx> amps);

  /// Rescales to unit norm; rejects the zero vector.
  static PureState normalized(int n, std::vector<cplx> amps);

  /// No validation; caller guarantees the invariants. Used by kernels whose
  /// output is unit-norm by construction.
  static PureState unchecked(int n, std::vector<cplx> amps);

  int qubits() const { return n_; }
  std::uint64_t dim() const { return amps_.size(); }
  std::span<const cplx> amplitudes() const { return amps_; }
  const cplx &operator[](std::uint64_t k) const { return amps_[k]; }

  double norm() const;

private:
  PureState(int n, std::vector<cplx> amps) : n_(n), amps_(std::move(amps)) {}

  int n_;
  std::vector<cplx> amps_;
};

/// |k> in the standard basis of n qubits.
PureState basis_state(int n, std::uint64_t k);

/// a (x) b, with a's qubits in front: (a(x)b)[i*2^nb + j] = a[i]*b[j].
PureState tensor_states(const PureState &a, const PureState &b);

/// Entrywise complex conjugate in the standard basis.
PureState conjugate_state(const PureState &s);

/// <a|b>, conjugate-linear in the first slot.
cplx inner(const PureState &a, const PureState &b);

} // namespace qbell
