// SPDX-License-Identifier: Apache-2.0

#include "qbell/thue_morse.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qbell {

namespace {

constexpr int kMaxPartitionQubits = 24;

std::uint64_t checked_block(int n, int cap) {
  if (n < 1) {
    throw std::invalid_argument("block size exponent must be at least 1");
  }
  if (n > cap) {
    throw CapacityError("block size exponent capped at " +
                        std::to_string(cap));
  }
  return std::uint64_t{1} << n;
}

} // namespace

int tau(std::uint64_t i) {
  if (i == 0) {
    throw std::invalid_argument("tau is 1-based");
  }
  return std::popcount(i - 1) & 1;
}

bool block_negation_check(int n) {
  const std::uint64_t block = checked_block(n, kMaxPartitionQubits);
  for (std::uint64_t i = 1; i <= block; ++i) {
    if (tau(block + i) != 1 - tau(i)) {
      return false;
    }
  }
  return true;
}

EvilOdious evil_odious_indices(int n) {
  const std::uint64_t block = checked_block(n, kMaxPartitionQubits);
  EvilOdious out;
  out.evil.reserve(block / 2);
  out.odious.reserve(block / 2);
  for (std::uint64_t i = 1; i <= block; ++i) {
    (tau(i) == 0 ? out.evil : out.odious).push_back(i);
  }
  return out;
}

std::vector<double> l_diag_via_thue(int n) {
  const std::uint64_t block = checked_block(n, kMaxQubits);
  std::vector<double> diag(block);
  for (std::uint64_t i = 1; i <= block; ++i) {
    diag[i - 1] = 2.0 * tau(i) - 1.0;
  }
  return diag;
}

SupportResult real_support_criterion(std::span<const double> x) {
  const std::uint64_t len = x.size();
  if (len < 2 || !std::has_single_bit(len)) {
    throw std::invalid_argument(
        "real_support_criterion needs a power-of-two length of at least 2");
  }
  double norm_sq = 0.0;
  double quad = 0.0; // x^T L x
  for (std::uint64_t j = 0; j < len; ++j) {
    const double sq = x[j] * x[j];
    norm_sq += sq;
    quad += (2.0 * tau(j + 1) - 1.0) * sq;
  }
  if (std::abs(norm_sq - 1.0) > kTolPipeline) {
    throw std::invalid_argument("real_support_criterion needs a unit vector");
  }
  SupportResult result;
  result.value = std::abs(quad);
  if (result.value >= 1.0 - kTolPipeline) {
    result.cls = quad < 0.0 ? SupportClass::EvilSupport
                            : SupportClass::OdiousSupport;
  } else {
    result.cls = SupportClass::Mixed;
  }
  return result;
}

} // namespace qbell
