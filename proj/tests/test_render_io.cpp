// SPDX-License-Identifier: Apache-2.0

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "qbell/render.hpp"
#include "qbell/state_io.hpp"

using qbell::GateKind;
using qbell::PureState;
using qbell::RenderSpec;

namespace {

std::vector<unsigned char> slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::vector<unsigned char>((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
}

std::array<unsigned char, 3> pixel(const std::vector<unsigned char> &bytes,
                                   size_t header, std::uint64_t side,
                                   std::uint64_t r, std::uint64_t c) {
  const size_t at = header + 3 * (r * side + c);
  return {bytes[at], bytes[at + 1], bytes[at + 2]};
}

} // namespace

TEST_CASE("witness pixmap matches the golden bytes") {
  RenderSpec spec;
  spec.target = {GateKind::WitnessM, 2};
  spec.cellsize = 4;
  const std::vector<unsigned char> got = qbell::render_pixmap(spec);
  const std::vector<unsigned char> want =
      slurp(std::string(QBELL_GOLDEN_DIR) + "/m2_cell4.ppm");
  CHECK(got == want);
}

TEST_CASE("bell pixmap colors follow the sign pattern") {
  RenderSpec spec;
  spec.target = {GateKind::Bell, 2};
  spec.cellsize = 1;
  const std::vector<unsigned char> bytes = qbell::render_pixmap(spec);
  const std::string header = "P6\n4 4\n255\n";
  REQUIRE(bytes.size() == header.size() + 48);
  CHECK(std::string(bytes.begin(), bytes.begin() + header.size()) == header);
  const size_t h = header.size();
  const std::array<unsigned char, 3> black = {0, 0, 0};
  const std::array<unsigned char, 3> white = {255, 255, 255};
  const std::array<unsigned char, 3> grey = {128, 128, 128};
  CHECK(pixel(bytes, h, 4, 0, 0) == black);
  CHECK(pixel(bytes, h, 4, 0, 1) == grey);
  CHECK(pixel(bytes, h, 4, 0, 2) == black);
  CHECK(pixel(bytes, h, 4, 2, 3) == white);
  CHECK(pixel(bytes, h, 4, 3, 0) == black);
  CHECK(pixel(bytes, h, 4, 3, 2) == white);
}

TEST_CASE("diagonal sign matrix renders black and white on the diagonal") {
  RenderSpec spec;
  spec.target = {GateKind::LMatrix, 2};
  spec.cellsize = 1;
  const std::vector<unsigned char> bytes = qbell::render_pixmap(spec);
  const size_t h = std::string("P6\n4 4\n255\n").size();
  const std::array<unsigned char, 3> black = {0, 0, 0};
  const std::array<unsigned char, 3> white = {255, 255, 255};
  const std::array<unsigned char, 3> grey = {128, 128, 128};
  CHECK(pixel(bytes, h, 4, 0, 0) == white); // diagonal -1
  CHECK(pixel(bytes, h, 4, 1, 1) == black);
  CHECK(pixel(bytes, h, 4, 2, 2) == black);
  CHECK(pixel(bytes, h, 4, 3, 3) == white);
  CHECK(pixel(bytes, h, 4, 0, 1) == grey);
}

TEST_CASE("walsh of one qubit renders through the family scale") {
  RenderSpec spec;
  spec.target = {GateKind::Walsh, 1};
  spec.cellsize = 2;
  const std::vector<unsigned char> bytes = qbell::render_pixmap(spec);
  const size_t h = std::string("P6\n4 4\n255\n").size();
  const std::array<unsigned char, 3> black = {0, 0, 0};
  const std::array<unsigned char, 3> white = {255, 255, 255};
  CHECK(pixel(bytes, h, 4, 0, 0) == black);
  CHECK(pixel(bytes, h, 4, 3, 3) == white); // bottom-right cell is -1
}

TEST_CASE("render validation and capacity") {
  RenderSpec bad_cell;
  bad_cell.target = {GateKind::WitnessM, 2};
  bad_cell.cellsize = 0;
  CHECK_THROWS_AS(qbell::render_pixmap(bad_cell), std::invalid_argument);

  RenderSpec too_wide;
  too_wide.target = {GateKind::Walsh, 12};
  too_wide.cellsize = 4;
  CHECK_THROWS_AS(qbell::render_pixmap(too_wide), qbell::CapacityError);

  RenderSpec over_dense;
  over_dense.target = {GateKind::Bell, 15};
  over_dense.cellsize = 1;
  CHECK_THROWS_AS(qbell::render_pixmap(over_dense), qbell::CapacityError);

  // Unscaled complex entries cannot classify.
  RenderSpec pauli_y;
  pauli_y.target = {GateKind::PauliY};
  pauli_y.cellsize = 1;
  CHECK_THROWS_AS(qbell::render_pixmap(pauli_y), std::invalid_argument);
}

TEST_CASE("write_pixmap_file writes the same bytes") {
  RenderSpec spec;
  spec.target = {GateKind::WitnessM, 2};
  spec.cellsize = 4;
  const std::string path = "render_io_test.ppm";
  qbell::write_pixmap_file(path, spec);
  CHECK(slurp(path) == qbell::render_pixmap(spec));
  std::remove(path.c_str());
}

TEST_CASE("state files round trip exactly") {
  const PureState s = qbell::bell_state(3, 5);
  std::ostringstream out;
  qbell::write_state(out, s);
  std::istringstream in(out.str());
  const PureState back = qbell::read_state(in);
  REQUIRE(back.qubits() == 3);
  for (std::uint64_t k = 0; k < 8; ++k) {
    CHECK(back[k] == s[k]); // %.17g round-trips doubles bit-exactly
  }
}

TEST_CASE("reader reports the offending line") {
  {
    std::istringstream in("x\n");
    CHECK_THROWS_AS(qbell::read_state(in), qbell::ParseError);
  }
  {
    std::istringstream in("1\n0.5 0\nnope\n");
    try {
      qbell::read_state(in);
      FAIL("expected a parse error");
    } catch (const qbell::ParseError &e) {
      CHECK(e.line() == 3);
    }
  }
  {
    std::istringstream in("1\n1 0\n"); // missing second amplitude line
    try {
      qbell::read_state(in);
      FAIL("expected a parse error");
    } catch (const qbell::ParseError &e) {
      CHECK(e.line() == 3);
    }
  }
  {
    std::istringstream in("1\n1 0 7\n0 0\n"); // three tokens on a line
    try {
      qbell::read_state(in);
      FAIL("expected a parse error");
    } catch (const qbell::ParseError &e) {
      CHECK(e.line() == 2);
    }
  }
  {
    std::istringstream in("1\n1 0\n0 0\nextra\n");
    CHECK_THROWS_AS(qbell::read_state(in), qbell::ParseError);
  }
  {
    std::istringstream in("0\n");
    CHECK_THROWS_AS(qbell::read_state(in), qbell::ParseError);
  }
  {
    std::istringstream in("27\n");
    CHECK_THROWS_AS(qbell::read_state(in), qbell::CapacityError);
  }
}

TEST_CASE("reader renormalizes small deviations and rejects large ones") {
  {
    std::istringstream in("1\n1.0000001 0\n0 0\n");
    const PureState s = qbell::read_state(in);
    CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-14));
  }
  {
    std::istringstream in("1\n0.5 0\n0.5 0\n"); // norm ~0.707
    CHECK_THROWS_AS(qbell::read_state(in), qbell::ParseError);
  }
}

TEST_CASE("state file helpers hit the filesystem") {
  const std::string path = "state_io_test.txt";
  const PureState s = qbell::bell_state(2, 1);
  qbell::write_state_file(path, s);
  const PureState back = qbell::read_state_file(path);
  for (std::uint64_t k = 0; k < 4; ++k) {
    CHECK(back[k] == s[k]);
  }
  std::remove(path.c_str());
  CHECK_THROWS_AS(qbell::read_state_file("definitely_missing_file.txt"),
                  qbell::IoError);
}

TEST_CASE("seventeen digit formatting round trips") {
  CHECK(qbell::g17(0.5) == "0.5");
  CHECK(qbell::g17(0.0) == "0");
  const double third = 1.0 / 3.0;
  CHECK(std::stod(qbell::g17(third)) == third);
  const double tiny = 1.2345678901234567e-300;
  CHECK(std::stod(qbell::g17(tiny)) == tiny);
}
