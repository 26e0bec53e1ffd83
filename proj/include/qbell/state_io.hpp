// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "qbell/state.hpp"

namespace qbell {

// State file format: line 1 holds the qubit count n, the next 2^n lines
// hold "re im" pairs in index order 0..2^n-1. The reader renormalizes a
// norm off by less than 1e-6 and rejects anything worse.

PureState read_state(std::istream &in);
PureState read_state_file(const std::string &path);

void write_state(std::ostream &out, const PureState &s);
void write_state_file(const std::string &path, const PureState &s);

/// "%.17g", round-trip exact for doubles.
std::string g17(double v);

} // namespace qbell
