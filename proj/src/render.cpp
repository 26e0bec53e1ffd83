// SPDX-License-Identifier: Apache-2.0

#include "qbell/render.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

namespace qbell {

namespace {

// Entries are compared against {0, +1, -1} after the family scale is
// divided out; anything farther than this from all three is an error.
constexpr double kClassifyTol = 1e-9;
constexpr int kMaxPixelsPerSide = 4096;
constexpr int kMaxCellSize = 64;

int tag_qubits(const GateTag &tag) {
  switch (tag.kind) {
  case GateKind::Walsh:
  case GateKind::WitnessM:
  case GateKind::CnotGen:
  case GateKind::Bell:
  case GateKind::LMatrix:
    return tag.n;
  default:
    return 1;
  }
}

double family_scale(const GateTag &tag) {
  switch (tag.kind) {
  case GateKind::Bell:
    return std::pow(2.0, -0.5 * (tag.n - 1));
  case GateKind::Walsh:
    return std::pow(2.0, -0.5 * tag.n);
  case GateKind::Hadamard:
    return std::pow(2.0, -0.5);
  default:
    return 1.0;
  }
}

std::array<unsigned char, 3> classify(cplx entry, double scale,
                                      Eigen::Index r, Eigen::Index c) {
  const cplx v = entry / scale;
  if (std::abs(v.imag()) <= kClassifyTol) {
    const double re = v.real();
    if (std::abs(re) <= kClassifyTol) {
      return {128, 128, 128};
    }
    if (std::abs(re - 1.0) <= kClassifyTol) {
      return {0, 0, 0};
    }
    if (std::abs(re + 1.0) <= kClassifyTol) {
      return {255, 255, 255};
    }
  }
  throw std::invalid_argument("entry (" + std::to_string(r) + ", " +
                              std::to_string(c) +
                              ") does not classify to 0 or +/-1");
}

} // namespace

std::vector<unsigned char> render_pixmap(const RenderSpec &spec) {
  if (spec.cellsize < 1 || spec.cellsize > kMaxCellSize) {
    throw std::invalid_argument("cellsize must lie in 1.." +
                                std::to_string(kMaxCellSize));
  }
  if (tag_qubits(spec.target) > kMaxDenseQubits) {
    throw CapacityError(gate_name(spec.target) +
                        " exceeds the dense ceiling of " +
                        std::to_string(kMaxDenseQubits) + " qubits");
  }
  const std::uint64_t side = (std::uint64_t{1} << tag_qubits(spec.target)) *
                             static_cast<std::uint64_t>(spec.cellsize);
  if (side > kMaxPixelsPerSide) {
    throw CapacityError("pixmap side " + std::to_string(side) +
                        " exceeds " + std::to_string(kMaxPixelsPerSide) +
                        " pixels");
  }
  const DenseOperator op = dense(spec.target);
  const Eigen::Index dim = op.mat().rows();
  const double scale = family_scale(spec.target);

  char header[64];
  const int header_len = std::snprintf(header, sizeof(header), "P6\n%llu %llu\n255\n",
                                       static_cast<unsigned long long>(side),
                                       static_cast<unsigned long long>(side));
  std::vector<unsigned char> bytes;
  bytes.reserve(static_cast<size_t>(header_len) + 3 * side * side);
  bytes.insert(bytes.end(), header, header + header_len);

  // One row of cells at a time; each pixel row inside a cell repeats it.
  std::vector<unsigned char> row_rgb(3 * side);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const std::array<unsigned char, 3> rgb =
          classify(op.mat()(r, c), scale, r, c);
      for (int px = 0; px < spec.cellsize; ++px) {
        const size_t at = 3 * (static_cast<size_t>(c) * spec.cellsize + px);
        row_rgb[at] = rgb[0];
        row_rgb[at + 1] = rgb[1];
        row_rgb[at + 2] = rgb[2];
      }
    }
    for (int py = 0; py < spec.cellsize; ++py) {
      bytes.insert(bytes.end(), row_rgb.begin(), row_rgb.end());
    }
  }
  return bytes;
}

void write_pixmap_file(const std::string &path, const RenderSpec &spec) {
  const std::vector<unsigned char> bytes = render_pixmap(spec);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open " + path + " for writing");
  }
  out.write(reinterpret_cast<const char *>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) {
    throw IoError("failed while writing " + path);
  }
}

} // namespace qbell
