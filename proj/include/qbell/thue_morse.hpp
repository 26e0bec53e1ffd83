// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qbell/types.hpp"

namespace qbell {

// Positions are 1-based throughout this module, matching the usual
// indexing of the Thue-Morse sequence tau_1, tau_2, ...; the conversion
// to 0-based basis indices happens inside l_diag_via_thue and
// real_support_criterion only.

/// tau_i for i >= 1 (tau_1 = 0, tau_2m = 1 - tau_m, tau_2m-1 = tau_m);
/// computed as the parity of popcount(i-1).
int tau(std::uint64_t i);

/// Checks tau_{2^n + i} == 1 - tau_i for every i in 1..2^n.
bool block_negation_check(int n);

/// Partition of positions 1..2^n by tau value.
struct EvilOdious {
  std::vector<std::uint64_t> evil;   // tau = 0
  std::vector<std::uint64_t> odious; // tau = 1
};
EvilOdious evil_odious_indices(int n);

/// (2 tau_1 - 1, ..., 2 tau_{2^n} - 1); equals l_matrix_diag(n) exactly.
std::vector<double> l_diag_via_thue(int n);

enum class SupportClass { EvilSupport, OdiousSupport, Mixed };

struct SupportResult {
  SupportClass cls;
  double value; // |x^T L x|
};

/// Classifies a real unit vector by |x^T L x| computed via the diagonal:
/// EvilSupport / OdiousSupport iff the value is 1 (within 1e-10), with the
/// sign of x^T L x deciding which class carries the mass; Mixed otherwise.
SupportResult real_support_criterion(std::span<const double> x);

} // namespace qbell
