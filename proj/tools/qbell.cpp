// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <limits>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qbell/entanglement.hpp"
#include "qbell/gates.hpp"
#include "qbell/render.hpp"
#include "qbell/state_io.hpp"
#include "qbell/thue_morse.hpp"
#include "qbell/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitCapacity = 4;

bool is_kv(const std::string &format) { return format == "kv"; }

std::uint64_t count_nonzero(const qbell::PureState &s) {
  std::uint64_t count = 0;
  for (const qbell::cplx &a : s.amplitudes()) {
    if (std::abs(a) > qbell::kTolExact) {
      ++count;
    }
  }
  return count;
}

/// kv values must stay single flat tokens; spaces become underscores.
std::string kv_token(std::string text) {
  std::replace(text.begin(), text.end(), ' ', '_');
  return text;
}

void print_state_summary(const std::string &record, int n, std::uint64_t k,
                         bool has_k, const qbell::PureState &s,
                         const std::string &out_path,
                         const std::string &format) {
  const std::uint64_t nonzero = count_nonzero(s);
  const std::string norm = qbell::g17(s.norm());
  if (is_kv(format)) {
    std::cout << "record=" << record << " n=" << n;
    if (has_k) {
      std::cout << " k=" << k;
    }
    std::cout << " nonzero=" << nonzero << " norm=" << norm
              << " out=" << kv_token(out_path) << "\n";
  } else {
    std::cout << record << " state: n=" << n;
    if (has_k) {
      std::cout << " k=" << k;
    }
    std::cout << " nonzero=" << nonzero << " norm=" << norm << " -> "
              << out_path << "\n";
  }
}

int cmd_bell(int n, std::uint64_t k, const std::string &out_path,
             const std::string &format) {
  const qbell::PureState s = qbell::bell_state(n, k);
  qbell::write_state_file(out_path, s);
  print_state_summary("bell", n, k, true, s, out_path, format);
  return kExitOk;
}

int cmd_ghz(int n, const std::string &out_path, const std::string &format) {
  const qbell::PureState s = qbell::ghz_state(n);
  qbell::write_state_file(out_path, s);
  print_state_summary("ghz", n, 0, false, s, out_path, format);
  return kExitOk;
}

// Schmidt spectra and the product verdict need SVDs over every cut; past
// this size the report omits them and the verdict reads "unknown".
constexpr int kMaxSpectrumQubits = 12;

int cmd_measure(const std::string &in_path, const std::string &format) {
  const qbell::PureState s = qbell::read_state_file(in_path);
  const int n = s.qubits();
  const qbell::cplx f = n >= 2 ? qbell::f_value(s) : qbell::cplx(0.0, 0.0);
  const double q = n >= 2 ? qbell::mw_measure(s) : 0.0;
  const bool full_report = n >= 2 && n <= kMaxSpectrumQubits;

  std::string verdict = "unknown";
  int verdict_cut = -1;
  std::vector<qbell::SchmidtData> spectra;
  if (full_report) {
    for (int cut = 1; cut <= n - 1; ++cut) {
      spectra.push_back(qbell::schmidt(s, cut));
    }
    const qbell::ProductVerdict pv = qbell::is_product(s);
    verdict = pv.is_product ? "true" : "false";
    verdict_cut = pv.cut;
  } else if (n == 1) {
    verdict = "true";
    verdict_cut = 0;
  }

  if (is_kv(format)) {
    std::cout << "record=measure source=" << kv_token(in_path) << " n=" << n
              << " q=" << qbell::g17(q) << " f_re=" << qbell::g17(f.real())
              << " f_im=" << qbell::g17(f.imag())
              << " f_mod=" << qbell::g17(std::abs(f))
              << " product=" << verdict;
    if (verdict == "true") {
      std::cout << " product_cut=" << verdict_cut;
    }
    std::cout << "\n";
    for (const qbell::SchmidtData &data : spectra) {
      std::cout << "record=schmidt cut=" << data.cut << " coeffs=";
      for (size_t i = 0; i < data.coefficients.size(); ++i) {
        std::cout << (i ? "," : "") << qbell::g17(data.coefficients[i]);
      }
      std::cout << "\n";
    }
  } else {
    std::cout << "source: " << in_path << "\n";
    std::cout << "n: " << n << "\n";
    std::cout << "q: " << qbell::g17(q) << "\n";
    std::cout << "f: " << qbell::g17(f.real()) << " " << qbell::g17(f.imag())
              << " (modulus " << qbell::g17(std::abs(f)) << ")\n";
    for (const qbell::SchmidtData &data : spectra) {
      std::cout << "schmidt cut " << data.cut << ":";
      for (const double c : data.coefficients) {
        std::cout << " " << qbell::g17(c);
      }
      std::cout << "\n";
    }
    std::cout << "product: " << verdict;
    if (verdict == "true") {
      std::cout << " (cut " << verdict_cut << ")";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_verify(int max_n, std::uint64_t seed, std::uint64_t trials,
               const std::string &format) {
  qbell::verify::VerifyConfig cfg;
  cfg.max_n = max_n;
  cfg.seed = seed;
  cfg.trials = trials;
  const std::vector<qbell::verify::PropertyResult> results =
      qbell::verify::run_all_properties(cfg);
  std::uint64_t passed = 0;
  for (const qbell::verify::PropertyResult &r : results) {
    if (r.pass) {
      ++passed;
    }
    if (is_kv(format)) {
      std::cout << "record=property name=" << r.name
                << " pass=" << (r.pass ? "true" : "false")
                << " trials=" << r.trials << " worst=" << qbell::g17(r.worst);
      if (!r.detail.empty()) {
        std::cout << " detail=" << kv_token(r.detail);
      }
      std::cout << "\n";
    } else {
      std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name
                << " trials=" << r.trials << " worst=" << qbell::g17(r.worst)
                << "\n";
      if (!r.detail.empty()) {
        std::cout << "     " << r.detail << "\n";
      }
    }
  }
  if (is_kv(format)) {
    std::cout << "record=summary passed=" << passed
              << " total=" << results.size() << " seed=" << seed
              << " trials=" << trials << " max_n=" << max_n << "\n";
  } else {
    std::cout << "passed " << passed << "/" << results.size()
              << " properties (seed=" << seed << " trials=" << trials
              << " max_n=" << max_n << ")\n";
  }
  return passed == results.size() ? kExitOk : kExitVerifyFailed;
}

qbell::GateTag parse_render_target(const std::string &family, int n) {
  if (family == "m") {
    return {qbell::GateKind::WitnessM, n};
  }
  if (family == "bell") {
    return {qbell::GateKind::Bell, n};
  }
  if (family == "walsh") {
    return {qbell::GateKind::Walsh, n};
  }
  if (family == "cnot") {
    return {qbell::GateKind::CnotGen, n};
  }
  if (family == "lmatrix") {
    return {qbell::GateKind::LMatrix, n};
  }
  throw std::invalid_argument("unknown render family: " + family);
}

int cmd_render(const std::string &family, int n, int cellsize,
               const std::string &out_path, const std::string &format) {
  qbell::RenderSpec spec;
  spec.target = parse_render_target(family, n);
  spec.cellsize = cellsize;
  qbell::write_pixmap_file(out_path, spec);
  const std::uint64_t side =
      (std::uint64_t{1} << n) * static_cast<std::uint64_t>(cellsize);
  if (is_kv(format)) {
    std::cout << "record=render target=" << qbell::gate_name(spec.target)
              << " side=" << side << " out=" << kv_token(out_path) << "\n";
  } else {
    std::cout << "rendered " << qbell::gate_name(spec.target) << " as " << side
              << "x" << side << " pixels -> " << out_path << "\n";
  }
  return kExitOk;
}

int cmd_thuemorse(int n, const std::string &mode, const std::string &format) {
  const std::uint64_t len = std::uint64_t{1} << n;
  if (mode == "bits") {
    if (is_kv(format)) {
      std::cout << "record=thuemorse n=" << n << " mode=bits bits=";
      for (std::uint64_t i = 1; i <= len; ++i) {
        std::cout << qbell::tau(i);
      }
      std::cout << "\n";
    } else {
      for (std::uint64_t i = 1; i <= len; ++i) {
        std::cout << (i > 1 ? " " : "") << qbell::tau(i);
      }
      std::cout << "\n";
    }
    return kExitOk;
  }
  const qbell::EvilOdious split = qbell::evil_odious_indices(n);
  if (is_kv(format)) {
    std::cout << "record=thuemorse n=" << n << " mode=partition evil=";
    for (size_t i = 0; i < split.evil.size(); ++i) {
      std::cout << (i ? "," : "") << split.evil[i];
    }
    std::cout << " odious=";
    for (size_t i = 0; i < split.odious.size(); ++i) {
      std::cout << (i ? "," : "") << split.odious[i];
    }
    std::cout << "\n";
  } else {
    std::cout << "evil:";
    for (const std::uint64_t pos : split.evil) {
      std::cout << " " << pos;
    }
    std::cout << "\nodious:";
    for (const std::uint64_t pos : split.odious) {
      std::cout << " " << pos;
    }
    std::cout << "\n";
  }
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Generalized Bell states, entanglement measures and "
               "Thue-Morse structure"};
  app.require_subcommand(1);

  std::string format = "text";
  const std::vector<std::string> formats = {"text", "kv"};

  // bell
  auto *bell = app.add_subcommand("bell", "Write a generalized Bell state");
  int bell_n = 2;
  std::uint64_t bell_k = 0;
  std::string bell_out;
  // Lower bounds are usage errors; upper bounds surface as capacity
  // errors from the library so the exit code distinguishes them.
  bell->add_option("--n", bell_n, "Qubit count")
      ->required()
      ->check(CLI::Range(2, std::numeric_limits<int>::max()));
  bell->add_option("--k", bell_k, "Basis column index");
  bell->add_option("--out", bell_out, "Output state file")->required();
  bell->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(formats));

  // ghz
  auto *ghz = app.add_subcommand("ghz", "Write a GHZ state");
  int ghz_n = 2;
  std::string ghz_out;
  ghz->add_option("--n", ghz_n, "Qubit count")
      ->required()
      ->check(CLI::Range(2, std::numeric_limits<int>::max()));
  ghz->add_option("--out", ghz_out, "Output state file")->required();
  ghz->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(formats));

  // measure
  auto *measure =
      app.add_subcommand("measure", "Report entanglement data for a state file");
  std::string measure_in;
  measure->add_option("input", measure_in, "State file to read")->required();
  measure->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(formats));

  // verify
  auto *verify = app.add_subcommand("verify", "Run the property suite");
  int verify_max_n = 8;
  std::uint64_t verify_seed = 0;
  std::uint64_t verify_trials = 500;
  verify->add_option("--max-n", verify_max_n, "Dense cross-check ceiling")
      ->check(CLI::Range(2, 12));
  verify->add_option("--seed", verify_seed, "Deterministic seed");
  verify->add_option("--trials", verify_trials, "Trials per property")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{10000000}));
  verify->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(formats));

  // render
  auto *render = app.add_subcommand("render", "Render a matrix pixmap");
  std::string render_family;
  int render_n = 2;
  int render_cellsize = 4;
  std::string render_out;
  render
      ->add_option("family", render_family,
                   "Matrix family: m, bell, walsh, cnot, lmatrix")
      ->required()
      ->check(CLI::IsMember({"m", "bell", "walsh", "cnot", "lmatrix"}));
  render->add_option("--n", render_n, "Qubit count")
      ->required()
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  render->add_option("--cellsize", render_cellsize, "Pixels per matrix entry")
      ->check(CLI::Range(1, 64));
  render->add_option("--out", render_out, "Output pixmap file")->required();
  render->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(formats));

  // thuemorse
  auto *thuemorse =
      app.add_subcommand("thuemorse", "Dump the sequence or the partition");
  int tm_n = 1;
  std::string tm_mode = "bits";
  thuemorse->add_option("--n", tm_n, "Block size exponent")
      ->required()
      ->check(CLI::Range(1, 24));
  thuemorse->add_option("--mode", tm_mode, "bits or partition")
      ->check(CLI::IsMember({"bits", "partition"}));
  thuemorse->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(bell)) {
      return cmd_bell(bell_n, bell_k, bell_out, format);
    }
    if (app.got_subcommand(ghz)) {
      return cmd_ghz(ghz_n, ghz_out, format);
    }
    if (app.got_subcommand(measure)) {
      return cmd_measure(measure_in, format);
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify(verify_max_n, verify_seed, verify_trials, format);
    }
    if (app.got_subcommand(render)) {
      return cmd_render(render_family, render_n, render_cellsize, render_out,
                        format);
    }
    if (app.got_subcommand(thuemorse)) {
      return cmd_thuemorse(tm_n, tm_mode, format);
    }
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const qbell::CapacityError &e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const qbell::ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitIo;
  } catch (const qbell::IoError &e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::bad_alloc &) {
    std::cerr << "capacity error: out of memory\n";
    return kExitCapacity;
  } catch (const std::invalid_argument &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
