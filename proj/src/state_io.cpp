// SPDX-License-Identifier: Apache-2.0

#include "qbell/state_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qbell {

namespace {

bool blank(const std::string &text) {
  return text.find_first_not_of(" \t\r") == std::string::npos;
}

/// Next line that holds content; trailing blank lines read as end-of-file.
bool next_content_line(std::istream &in, std::string &line, int &line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!blank(line)) {
      return true;
    }
  }
  return false;
}

} // namespace

PureState read_state(std::istream &in) {
  int line_no = 0;
  std::string line;
  if (!next_content_line(in, line, line_no)) {
    throw ParseError("missing qubit count", 1);
  }
  int n = 0;
  {
    std::istringstream head(line);
    std::string rest;
    if (!(head >> n) || (head >> rest)) {
      throw ParseError("expected a single integer qubit count", line_no);
    }
  }
  if (n < 1) {
    throw ParseError("qubit count must be at least 1", line_no);
  }
  if (n > kMaxQubits) {
    throw CapacityError("state files are capped at " +
                        std::to_string(kMaxQubits) + " qubits");
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<cplx> amps;
  amps.reserve(dim);
  for (std::uint64_t k = 0; k < dim; ++k) {
    if (!next_content_line(in, line, line_no)) {
      throw ParseError("expected " + std::to_string(dim) +
                           " amplitude lines, file ended after " +
                           std::to_string(k),
                       line_no + 1);
    }
    std::istringstream record(line);
    double re = 0.0;
    double im = 0.0;
    std::string rest;
    if (!(record >> re >> im) || (record >> rest)) {
      throw ParseError("expected exactly two floats", line_no);
    }
    amps.emplace_back(re, im);
  }
  if (next_content_line(in, line, line_no)) {
    throw ParseError("unexpected content after the last amplitude", line_no);
  }
  double norm_sq = 0.0;
  for (const cplx &a : amps) {
    norm_sq += std::norm(a);
  }
  const double norm = std::sqrt(norm_sq);
  if (std::abs(norm - 1.0) > kFileNormTol) {
    throw ParseError("state norm " + g17(norm) + " is too far from 1", 2);
  }
  // Amplitudes already normalized to working precision pass through
  // untouched so a write/read cycle is bit-exact.
  if (std::abs(norm - 1.0) <= kTolExact) {
    return PureState::from_amplitudes(n, std::move(amps));
  }
  return PureState::normalized(n, std::move(amps));
}

PureState read_state_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path + " for reading");
  }
  return read_state(in);
}

void write_state(std::ostream &out, const PureState &s) {
  out << s.qubits() << '\n';
  for (const cplx &a : s.amplitudes()) {
    out << g17(a.real()) << ' ' << g17(a.imag()) << '\n';
  }
}

void write_state_file(const std::string &path, const PureState &s) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path + " for writing");
  }
  write_state(out, s);
  out.flush();
  if (!out) {
    throw IoError("failed while writing " + path);
  }
}

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

} // namespace qbell
