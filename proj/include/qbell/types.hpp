// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qbell {

using cplx = std::complex<double>;

// Dense matrices stop at 16384x16384; anything larger goes through the
// implicit kernels, which themselves stop at 26 qubits (~1 GiB per state).
inline constexpr int kMaxDenseQubits = 14;
inline constexpr int kMaxQubits = 26;

// Default tolerances: exact identities are short multiply-add chains,
// composed pipelines accumulate a little more.
inline constexpr double kTolExact = 1e-12;
inline constexpr double kTolPipeline = 1e-10;

// Singular values below this are treated as zero in rank decisions.
inline constexpr double kSvdClamp = 1e-13;

// State files are renormalized when the norm is off by less than this,
// rejected otherwise.
inline constexpr double kFileNormTol = 1e-6;

/// Request exceeds the dense or implicit size ceiling.
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string &what) : std::runtime_error(what) {}
};

/// Filesystem-level failure (unreadable input, unwritable output).
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string &what) : std::runtime_error(what) {}
};

/// Malformed state file; carries the 1-based offending line.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, int line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

} // namespace qbell
