// SPDX-License-Identifier: Apache-2.0

#include "qbell/state.hpp"

#include <cmath>
#include <stdexcept>

namespace qbell {

namespace {

std::uint64_t checked_dim(int n) {
  if (n < 1) {
    throw std::invalid_argument("qubit count must be at least 1, got " +
                                std::to_string(n));
  }
  if (n > kMaxQubits) {
    throw CapacityError("qubit count " + std::to_string(n) +
                        " exceeds the " + std::to_string(kMaxQubits) +
                        "-qubit ceiling");
  }
  return std::uint64_t{1} << n;
}

double squared_norm(const std::vector<cplx> &amps) {
  double s = 0.0;
  for (const cplx &a : amps) {
    s += std::norm(a);
  }
  return s;
}

} // namespace

PureState PureState::from_amplitudes(int n, std::vector<cplx> amps) {
  const std::uint64_t dim = checked_dim(n);
  if (amps.size() != dim) {
    throw std::invalid_argument("amplitude vector has length " +
                                std::to_string(amps.size()) + ", expected " +
                                std::to_string(dim));
  }
  const double nrm = std::sqrt(squared_norm(amps));
  if (std::abs(nrm - 1.0) > kTolExact) {
    throw std::invalid_argument("state norm deviates from 1 by " +
                                std::to_string(std::abs(nrm - 1.0)));
  }
  return PureState(n, std::move(amps));
}

PureState PureState::normalized(int n, std::vector<cplx> amps) {
  const std::uint64_t dim = checked_dim(n);
  if (amps.size() != dim) {
    throw std::invalid_argument("amplitude vector has length " +
                                std::to_string(amps.size()) + ", expected " +
                                std::to_string(dim));
  }
  const double nrm = std::sqrt(squared_norm(amps));
  if (nrm == 0.0) {
    throw std::invalid_argument("cannot normalize the zero vector");
  }
  for (cplx &a : amps) {
    a /= nrm;
  }
  return PureState(n, std::move(amps));
}

PureState PureState::unchecked(int n, std::vector<cplx> amps) {
  return PureState(n, std::move(amps));
}

double PureState::norm() const { return std::sqrt(squared_norm(amps_)); }

PureState basis_state(int n, std::uint64_t k) {
  const std::uint64_t dim = checked_dim(n);
  if (k >= dim) {
    throw std::invalid_argument("basis index " + std::to_string(k) +
                                " out of range for " + std::to_string(n) +
                                " qubits");
  }
  std::vector<cplx> amps(dim, cplx{0.0, 0.0});
  amps[k] = cplx{1.0, 0.0};
  return PureState::unchecked(n, std::move(amps));
}

PureState tensor_states(const PureState &a, const PureState &b) {
  const int n = a.qubits() + b.qubits();
  checked_dim(n); // capacity guard on the combined register
  std::vector<cplx> amps(a.dim() * b.dim());
  const std::uint64_t db = b.dim();
  for (std::uint64_t i = 0; i < a.dim(); ++i) {
    const cplx ai = a[i];
    for (std::uint64_t j = 0; j < db; ++j) {
      amps[i * db + j] = ai * b[j];
    }
  }
  return PureState::unchecked(n, std::move(amps));
}

PureState conjugate_state(const PureState &s) {
  std::vector<cplx> amps(s.amplitudes().begin(), s.amplitudes().end());
  for (cplx &a : amps) {
    a = std::conj(a);
  }
  return PureState::unchecked(s.qubits(), std::move(amps));
}

cplx inner(const PureState &a, const PureState &b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("inner product dimension mismatch: " +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
  cplx acc{0.0, 0.0};
  for (std::uint64_t i = 0; i < a.dim(); ++i) {
    acc += std::conj(a[i]) * b[i];
  }
  return acc;
}

} // namespace qbell
