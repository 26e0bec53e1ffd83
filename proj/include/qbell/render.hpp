// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "qbell/gates.hpp"

namespace qbell {

/// Matrix bitmap: one cellsize x cellsize block per entry, grey for 0,
/// black for +1, white for -1 after dividing out the gate family's global
/// normalization (2^{-(n-1)/2} for Bell, 2^{-n/2} for Walsh).
struct RenderSpec {
  GateTag target;
  int cellsize = 4;
};

/// Binary portable pixmap (P6, 8-bit RGB), width = height = 2^n * cellsize,
/// rows top to bottom. Throws if some entry does not classify to {0, +1, -1}
/// within 1e-9.
std::vector<unsigned char> render_pixmap(const RenderSpec &spec);

void write_pixmap_file(const std::string &path, const RenderSpec &spec);

} // namespace qbell
