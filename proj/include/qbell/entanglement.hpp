// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <vector>

#include "qbell/state.hpp"

namespace qbell {

/// Single-qubit reduced state: 2x2 Hermitian, PSD, trace one.
class DensityMatrix2 {
public:
  /// Validates Hermiticity, unit trace and nonnegative spectrum (1e-12).
  static DensityMatrix2 from_entries(cplx e00, cplx e01, cplx e10, cplx e11);

  cplx entry(int r, int c) const { return e_[static_cast<size_t>(r * 2 + c)]; }

private:
  explicit DensityMatrix2(std::array<cplx, 4> e) : e_(e) {}
  std::array<cplx, 4> e_;
};

/// Tr[rho^2]; lies in [1/2, 1] for a qubit.
double purity(const DensityMatrix2 &rho);

/// Schmidt coefficients across the cut (first n_1 qubits | rest):
/// nonincreasing, nonnegative, sum of squares one.
struct SchmidtData {
  int cut;
  std::vector<double> coefficients;
};

/// Antilinear witness <psi|M K|psi> = <psi|M|conj(psi)>. Zero on every
/// product state; modulus 1 forces the Meyer-Wallach measure to 1.
cplx f_value(const PureState &s);

/// Reduced state of qubit j (1-based, MSB-first); all other qubits are
/// traced out.
DensityMatrix2 reduced_density_qubit(const PureState &s, int j);

/// Meyer-Wallach measure Q = 2(1 - mean_j Tr[rho_j^2]); 0 on products,
/// 1 at maximal global entanglement.
double mw_measure(const PureState &s);

/// Singular values of the 2^n1 x 2^(n-n1) reshape of the amplitudes,
/// sorted nonincreasing, values below 1e-13 clamped to zero.
SchmidtData schmidt(const PureState &s, int n1);

struct ProductVerdict {
  bool is_product;
  int cut; // first separable cut when is_product, -1 otherwise
};

/// True iff some contiguous cut has second Schmidt coefficient below tol.
ProductVerdict is_product(const PureState &s, double tol = kTolPipeline);

/// (|0...0> + |1...1>)/sqrt(2).
PureState ghz_state(int n);

} // namespace qbell
