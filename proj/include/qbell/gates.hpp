// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qbell/dense.hpp"
#include "qbell/state.hpp"

namespace qbell {

enum class GateKind {
  PauliX,
  PauliY,
  PauliZ,
  Hadamard,
  ProjL, // |0><0|
  ProjR, // |1><1|
  Walsh, // H_2^(x)n
  WitnessM, // sigma_y (x) I (x) sigma_y
  CnotGen, // control on qubit 1, flips qubits 2..n
  Bell, // CnotGen * (Walsh(n-1) (x) I_2)
  LMatrix, // -sigma_z^(x)n
};

struct GateTag {
  GateKind kind;
  int n = 1; // qubit count; fixed at 1 for the single-qubit kinds
};

std::string gate_name(const GateTag &tag);

/// Exact dense matrix for the tag. Throws CapacityError past 14 qubits.
DenseOperator dense(const GateTag &tag);

/// Generalized CNOT as a basis permutation: indices with MSB 0 are fixed,
/// indices with MSB 1 have the remaining n-1 bits complemented. O(2^n).
PureState apply_cnot_gen(const PureState &s);

/// Hadamard on qubits 1..n-1 (identity on qubit n) by n-1 butterfly passes
/// over the output buffer. O(n 2^n) time.
PureState apply_walsh_head(PureState s);

/// sigma_y (x) I (x) sigma_y: complements the first and last bit with a
/// +/-1 sign (the two +/-i phases always multiply to a real value). O(2^n).
PureState apply_m(const PureState &s);

/// k-th generalized Bell state: apply_cnot_gen(apply_walsh_head(|k>)).
/// 2 <= n <= 26.
PureState bell_state(int n, std::uint64_t k);

/// Diagonal of -sigma_z^(x)n: entry j is -(-1)^popcount(j). Defined for
/// n >= 1; never materializes the matrix.
std::vector<double> l_matrix_diag(int n);

} // namespace qbell
