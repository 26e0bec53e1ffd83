// SPDX-License-Identifier: Apache-2.0

#include "qbell/entanglement.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "qbell/gates.hpp"

namespace qbell {

namespace {

void require_qubit_index(const PureState &s, int j) {
  if (j < 1 || j > s.qubits()) {
    throw std::invalid_argument("qubit index out of range: " +
                                std::to_string(j));
  }
}

} // namespace

DensityMatrix2 DensityMatrix2::from_entries(cplx e00, cplx e01, cplx e10,
                                            cplx e11) {
  if (std::abs(e00.imag()) > kTolExact || std::abs(e11.imag()) > kTolExact) {
    throw std::invalid_argument("density matrix diagonal must be real");
  }
  if (std::abs(e01 - std::conj(e10)) > kTolExact) {
    throw std::invalid_argument("density matrix must be Hermitian");
  }
  const double d0 = e00.real();
  const double d1 = e11.real();
  if (std::abs(d0 + d1 - 1.0) > kTolExact) {
    throw std::invalid_argument("density matrix must have unit trace");
  }
  const double half_gap = 0.5 * (d0 - d1);
  const double radius = std::sqrt(half_gap * half_gap + std::norm(e01));
  if (0.5 * (d0 + d1) - radius < -kTolExact) {
    throw std::invalid_argument("density matrix must be positive");
  }
  return DensityMatrix2({e00, e01, e10, e11});
}

double purity(const DensityMatrix2 &rho) {
  const double d0 = rho.entry(0, 0).real();
  const double d1 = rho.entry(1, 1).real();
  return d0 * d0 + d1 * d1 + 2.0 * std::norm(rho.entry(0, 1));
}

cplx f_value(const PureState &s) {
  if (s.qubits() < 2) {
    throw std::invalid_argument("f_value requires at least 2 qubits");
  }
  return inner(s, apply_m(conjugate_state(s)));
}

DensityMatrix2 reduced_density_qubit(const PureState &s, int j) {
  require_qubit_index(s, j);
  const int n = s.qubits();
  const std::uint64_t mask = std::uint64_t{1} << (n - j);
  const std::uint64_t dim = s.dim();
  double r00 = 0.0;
  double r11 = 0.0;
  cplx r01(0.0, 0.0);
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & mask) {
      continue;
    }
    const cplx a0 = s[i];
    const cplx a1 = s[i | mask];
    r00 += std::norm(a0);
    r11 += std::norm(a1);
    r01 += a0 * std::conj(a1);
  }
  return DensityMatrix2::from_entries(cplx(r00, 0.0), r01, std::conj(r01),
                                      cplx(r11, 0.0));
}

double mw_measure(const PureState &s) {
  const int n = s.qubits();
  if (n < 2) {
    throw std::invalid_argument("mw_measure requires at least 2 qubits");
  }
  double purity_sum = 0.0;
  for (int j = 1; j <= n; ++j) {
    purity_sum += purity(reduced_density_qubit(s, j));
  }
  return 2.0 * (1.0 - purity_sum / static_cast<double>(n));
}

SchmidtData schmidt(const PureState &s, int n1) {
  const int n = s.qubits();
  if (n1 < 1 || n1 > n - 1) {
    throw std::invalid_argument("schmidt cut must satisfy 1 <= n1 <= n-1");
  }
  if (n > kMaxDenseQubits) {
    throw CapacityError("schmidt capped at " +
                        std::to_string(kMaxDenseQubits) + " qubits");
  }
  const Eigen::Index rows = Eigen::Index{1} << n1;
  const Eigen::Index cols = Eigen::Index{1} << (n - n1);
  using RowMajorMat =
      Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMajorMat> reshaped(s.amplitudes().data(), rows, cols);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(reshaped);
  const Eigen::VectorXd &sigma = svd.singularValues();
  SchmidtData out;
  out.cut = n1;
  out.coefficients.resize(static_cast<size_t>(sigma.size()));
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    const double v = sigma(i);
    out.coefficients[static_cast<size_t>(i)] = (v < kSvdClamp) ? 0.0 : v;
  }
  return out;
}

ProductVerdict is_product(const PureState &s, double tol) {
  const int n = s.qubits();
  if (n < 2) {
    throw std::invalid_argument("is_product requires at least 2 qubits");
  }
  for (int cut = 1; cut <= n - 1; ++cut) {
    const SchmidtData data = schmidt(s, cut);
    if (data.coefficients.size() < 2 || data.coefficients[1] < tol) {
      return {true, cut};
    }
  }
  return {false, -1};
}

PureState ghz_state(int n) {
  if (n < 2) {
    throw std::invalid_argument("ghz_state requires at least 2 qubits");
  }
  if (n > kMaxQubits) {
    throw CapacityError("ghz_state capped at " + std::to_string(kMaxQubits) +
                        " qubits");
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<cplx> amps(dim, cplx(0.0, 0.0));
  const double w = 1.0 / std::sqrt(2.0);
  amps[0] = cplx(w, 0.0);
  amps[dim - 1] = cplx(w, 0.0);
  return PureState::unchecked(n, std::move(amps));
}

} // namespace qbell
