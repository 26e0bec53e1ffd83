// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qbell/state.hpp"

namespace qbell::verify {

/// Deterministic random source. Gaussian draws use Box-Muller on top of
/// mt19937_64 so byte streams are reproducible across standard libraries
/// (the engine is specified bit-exactly; the stdlib distributions are not).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(); // [0, 1)
  double normal();
  std::uint64_t below(std::uint64_t bound); // [0, bound)
  cplx gaussian_cplx();

private:
  std::mt19937_64 engine_;
};

PureState random_state(Rng &rng, int n);
/// Product state phi1 (x) phi2 with n1 qubits on the left.
PureState random_product_state(Rng &rng, int n, int n1);
std::vector<double> random_real_unit_vector(Rng &rng, std::size_t len);

// --- Independent oracles. Implementation paths never call these; they
// --- exist to cross-check them.

/// tau by the defining recursion rather than popcount.
int tau_by_recursion(std::uint64_t i);

/// Dense reduced density matrix of the first n1 qubits (partial trace over
/// the rest), computed from the reshaped amplitude matrix.
Eigen::MatrixXcd dense_reduced_block(const PureState &s, int n1);

double purity_of(const Eigen::MatrixXcd &rho);

/// Permutation moving qubit j to the front, other qubits keeping order.
PureState move_qubit_front(const PureState &s, int j);

// --- Property suite (what `qbell verify` runs).

struct PropertyResult {
  std::string name;
  bool pass;
  std::uint64_t trials;
  double worst;       // worst residual seen
  std::string detail; // replay recipe on failure, empty otherwise
};

struct VerifyConfig {
  int max_n = 8; // 2..12; caps the qubit range of dense cross-checks
  std::uint64_t seed = 0;
  std::uint64_t trials = 500;
};

std::vector<PropertyResult> run_all_properties(const VerifyConfig &cfg);

} // namespace qbell::verify
