// SPDX-License-Identifier: Apache-2.0

#include "qbell/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "qbell/entanglement.hpp"
#include "qbell/gates.hpp"
#include "qbell/thue_morse.hpp"

namespace qbell::verify {

namespace {

constexpr double kTwoPow53 = 9007199254740992.0; // 2^53

std::uint64_t fnv1a(const std::string &text) {
  std::uint64_t h = 14695981039346656037ull;
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

/// Residual accumulator for one property; keeps the first failing replay.
struct PropertyRun {
  std::string name;
  double tol;
  std::uint64_t seed;
  std::uint64_t trials = 0;
  double worst = 0.0;
  std::string detail;

  PropertyRun(std::string name_, double tol_, const VerifyConfig &cfg)
      : name(std::move(name_)), tol(tol_), seed(cfg.seed ^ fnv1a(name)) {}

  Rng rng() const { return Rng(seed); }

  void observe(double residual, const std::string &replay) {
    ++trials;
    if (residual > worst) {
      worst = residual;
    }
    if (residual > tol && detail.empty()) {
      char head[96];
      std::snprintf(head, sizeof(head), "residual %.6g (tol %.3g)", residual,
                    tol);
      detail = std::string(head) +
               "; replay: seed=" + std::to_string(seed) + " " + replay;
    }
  }

  void require(bool ok, const std::string &replay) {
    observe(ok ? 0.0 : 1.0, replay);
  }

  PropertyResult finish() const {
    return {name, detail.empty(), trials, worst, detail};
  }
};

double max_abs_diff(const PureState &a, const PureState &b) {
  double worst = 0.0;
  for (std::uint64_t k = 0; k < a.dim(); ++k) {
    worst = std::max(worst, std::abs(a[k] - b[k]));
  }
  return worst;
}

std::string at(std::uint64_t trial) { return "trial=" + std::to_string(trial); }

std::string at(std::uint64_t trial, int n) {
  return at(trial) + " n=" + std::to_string(n);
}

std::uint64_t per_n_trials(const VerifyConfig &cfg) {
  const std::uint64_t span = static_cast<std::uint64_t>(cfg.max_n) - 1;
  return std::max<std::uint64_t>(1, cfg.trials / span);
}

// Properties that materialize or multiply full matrices stay below this
// even when max_n is pushed to 12; matrix products grow with the cube of
// the dimension and would dominate the whole suite past it.
int dense_cap(const VerifyConfig &cfg) { return std::min(cfg.max_n, 10); }

/// Tr[rho^2] for the cut, evaluated on whichever side of the bipartition
/// is smaller; both sides share the nonzero spectrum.
double block_purity_small_side(const PureState &s, int cut) {
  const int n = s.qubits();
  const Eigen::Index rows = Eigen::Index{1} << cut;
  const Eigen::Index cols = Eigen::Index{1} << (n - cut);
  using RowMajorMat =
      Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMajorMat> a(s.amplitudes().data(), rows, cols);
  if (rows <= cols) {
    return purity_of(a * a.adjoint());
  }
  return purity_of(Eigen::MatrixXcd(a.adjoint() * a));
}

// --- core ---------------------------------------------------------------

PropertyResult prop_tensor_assoc(const VerifyConfig &cfg) {
  PropertyRun run("core.tensor_assoc", kTolExact, cfg);
  Rng rng = run.rng();
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const PureState a = random_state(rng, 1 + static_cast<int>(rng.below(3)));
    const PureState b = random_state(rng, 1 + static_cast<int>(rng.below(3)));
    const PureState c = random_state(rng, 1 + static_cast<int>(rng.below(3)));
    const PureState left = tensor_states(tensor_states(a, b), c);
    const PureState right = tensor_states(a, tensor_states(b, c));
    run.observe(max_abs_diff(left, right), at(t));
  }
  return run.finish();
}

PropertyResult prop_mixed_product(const VerifyConfig &cfg) {
  PropertyRun run("core.mixed_product", kTolExact, cfg);
  Rng rng = run.rng();
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const int na = 1 + static_cast<int>(rng.below(3));
    const int nb = 1 + static_cast<int>(rng.below(3));
    const PureState a = random_state(rng, na);
    const PureState b = random_state(rng, nb);
    const PureState c = random_state(rng, na);
    const PureState d = random_state(rng, nb);
    const cplx joint = inner(tensor_states(a, b), tensor_states(c, d));
    const cplx split = inner(a, c) * inner(b, d);
    run.observe(std::abs(joint - split), at(t));
  }
  return run.finish();
}

PropertyResult prop_conj_involution(const VerifyConfig &cfg) {
  PropertyRun run("core.conj_involution", kTolExact, cfg);
  Rng rng = run.rng();
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const PureState a = random_state(rng, n);
    const PureState b = random_state(rng, n);
    const double twice = max_abs_diff(conjugate_state(conjugate_state(a)), a);
    const double pairing = std::abs(
        inner(conjugate_state(a), conjugate_state(b)) - std::conj(inner(a, b)));
    run.observe(std::max(twice, pairing), at(t, n));
  }
  return run.finish();
}

PropertyResult prop_inner_norm(const VerifyConfig &cfg) {
  PropertyRun run("core.inner_norm", kTolExact, cfg);
  Rng rng = run.rng();
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const PureState s = random_state(rng, n);
    const cplx self = inner(s, s);
    const double residual =
        std::max(std::abs(self.real() - 1.0), std::abs(self.imag()));
    run.observe(std::max(residual, std::abs(s.norm() - 1.0)), at(t, n));
  }
  return run.finish();
}

// --- gates --------------------------------------------------------------

PropertyResult prop_dense_implicit_agree(const VerifyConfig &cfg) {
  PropertyRun run("gates.dense_implicit_agree", kTolExact, cfg);
  Rng rng = run.rng();
  const std::uint64_t trials = per_n_trials(cfg);
  for (int n = 2; n <= dense_cap(cfg); ++n) {
    const DenseOperator cnot = dense({GateKind::CnotGen, n});
    const DenseOperator head =
        kron(dense({GateKind::Walsh, n - 1}),
             DenseOperator(Eigen::MatrixXcd::Identity(2, 2)));
    const DenseOperator witness = dense({GateKind::WitnessM, n});
    for (std::uint64_t t = 0; t < trials; ++t) {
      const PureState s = random_state(rng, n);
      const double d_cnot =
          max_abs_diff(apply_dense(cnot, s), apply_cnot_gen(s));
      const double d_head =
          max_abs_diff(apply_dense(head, s), apply_walsh_head(s));
      const double d_m = max_abs_diff(apply_dense(witness, s), apply_m(s));
      run.observe(std::max({d_cnot, d_head, d_m}), at(t, n));
    }
  }
  return run.finish();
}

PropertyResult prop_unitarity(const VerifyConfig &cfg) {
  PropertyRun run("gates.unitarity", kTolExact, cfg);
  for (int n = 2; n <= dense_cap(cfg); ++n) {
    for (const GateKind kind :
         {GateKind::Walsh, GateKind::CnotGen, GateKind::Bell}) {
      const Eigen::MatrixXcd u = dense({kind, n}).mat();
      const Eigen::MatrixXcd gram = u.adjoint() * u;
      const double residual =
          (gram - Eigen::MatrixXcd::Identity(u.rows(), u.cols()))
              .cwiseAbs()
              .maxCoeff();
      run.observe(residual, gate_name({kind, n}));
    }
  }
  return run.finish();
}

PropertyResult prop_cnot_involution(const VerifyConfig &cfg) {
  PropertyRun run("gates.cnot_involution", kTolExact, cfg);
  Rng rng = run.rng();
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const int n = 2 + static_cast<int>(rng.below(cfg.max_n - 1));
    const PureState s = random_state(rng, n);
    run.observe(max_abs_diff(apply_cnot_gen(apply_cnot_gen(s)), s), at(t, n));
  }
  return run.finish();
}

PropertyResult prop_m_real_hermitian(const VerifyConfig &cfg) {
  PropertyRun run("gates.m_real_hermitian", kTolExact, cfg);
  for (int n = 2; n <= dense_cap(cfg); ++n) {
    const Eigen::MatrixXcd m = dense({GateKind::WitnessM, n}).mat();
    const double imag_part = m.imag().cwiseAbs().maxCoeff();
    const double hermitian = (m - m.adjoint()).cwiseAbs().maxCoeff();
    const double squares =
        (m * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols()))
            .cwiseAbs()
            .maxCoeff();
    run.observe(std::max({imag_part, hermitian, squares}),
                gate_name({GateKind::WitnessM, n}));
  }
  Rng rng = run.rng();
  for (std::uint64_t t = 0; t < per_n_trials(cfg); ++t) {
    const int n = 2 + static_cast<int>(rng.below(cfg.max_n - 1));
    const PureState s = random_state(rng, n);
    run.observe(max_abs_diff(apply_m(apply_m(s)), s), at(t, n));
  }
  return run.finish();
}

PropertyResult prop_bell_column_structure(const VerifyConfig &cfg) {
  PropertyRun run("gates.bell_column_structure", kTolExact, cfg);
  Rng rng = run.rng();
  const std::uint64_t trials = per_n_trials(cfg);
  for (int n = 2; n <= dense_cap(cfg); ++n) {
    const Eigen::MatrixXcd b = dense({GateKind::Bell, n}).mat();
    const double magnitude = std::pow(2.0, -0.5 * (n - 1));
    for (std::uint64_t t = 0; t < trials; ++t) {
      const std::uint64_t k = rng.below(std::uint64_t{1} << n);
      const PureState column = bell_state(n, k);
      double residual = 0.0;
      std::uint64_t nonzero = 0;
      for (std::uint64_t j = 0; j < column.dim(); ++j) {
        residual = std::max(
            residual, std::abs(column[j] - b(static_cast<Eigen::Index>(j),
                                             static_cast<Eigen::Index>(k))));
        const double mag = std::abs(column[j]);
        if (mag > 0.5 * magnitude) {
          ++nonzero;
          residual = std::max(residual, std::abs(mag - magnitude));
        } else {
          residual = std::max(residual, mag);
        }
      }
      if (nonzero != (std::uint64_t{1} << (n - 1))) {
        residual = std::max(residual, 1.0);
      }
      run.observe(residual, at(t, n) + " k=" + std::to_string(k));
    }
  }
  return run.finish();
}

PropertyResult prop_l_diag_bridge(const VerifyConfig &cfg) {
  PropertyRun run("gates.l_diag_bridge", 0.0, cfg);
  for (int n = 1; n <= dense_cap(cfg); ++n) {
    const Eigen::MatrixXcd l = dense({GateKind::LMatrix, n}).mat();
    const std::vector<double> diag = l_matrix_diag(n);
    double residual = 0.0;
    for (Eigen::Index r = 0; r < l.rows(); ++r) {
      for (Eigen::Index c = 0; c < l.cols(); ++c) {
        const double want =
            (r == c) ? diag[static_cast<std::uint64_t>(r)] : 0.0;
        residual = std::max(residual, std::abs(l(r, c) - cplx(want, 0.0)));
      }
    }
    run.observe(residual, "n=" + std::to_string(n));
  }
  return run.finish();
}

// --- entanglement -------------------------------------------------------

PropertyResult prop_product_f_zero(const VerifyConfig &cfg) {
  PropertyRun run("ent.product_f_zero", kTolPipeline, cfg);
  Rng rng = run.rng();
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const int n = 2 + static_cast<int>(rng.below(cfg.max_n - 1));
    const int cut = 1 + static_cast<int>(rng.below(n - 1));
    const PureState s = random_product_state(rng, n, cut);
    run.observe(std::abs(f_value(s)),
                at(t, n) + " cut=" + std::to_string(cut));
  }
  return run.finish();
}

PropertyResult prop_bell_f_modulus(const VerifyConfig &cfg) {
  PropertyRun run("ent.bell_f_modulus", kTolPipeline, cfg);
  Rng rng = run.rng();
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const int n = 2 + static_cast<int>(rng.below(cfg.max_n - 1));
    const std::uint64_t k = rng.below(std::uint64_t{1} << n);
    const PureState s = bell_state(n, k);
    const double f_gap = std::abs(std::abs(f_value(s)) - 1.0);
    run.observe(f_gap, at(t, n) + " k=" + std::to_string(k));
  }
  return run.finish();
}

// Target invariant: every Bell-family state has Q = 1. The construction
// leaves the middle qubits in pure eigenstates of the target flips, so the
// measured value is 2/n and this check fails for max_n >= 3. It is kept as
// stated so the failure, and its replay data, stay visible.
PropertyResult prop_bell_q_maximal(const VerifyConfig &cfg) {
  PropertyRun run("ent.bell_q_maximal", kTolPipeline, cfg);
  Rng rng = run.rng();
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const int n = 2 + static_cast<int>(rng.below(cfg.max_n - 1));
    const std::uint64_t k = rng.below(std::uint64_t{1} << n);
    const PureState s = bell_state(n, k);
    const double q_gap = std::abs(mw_measure(s) - 1.0);
    run.observe(q_gap, at(t, n) + " k=" + std::to_string(k));
  }
  return run.finish();
}

PropertyResult prop_f_bounded(const VerifyConfig &cfg) {
  PropertyRun run("ent.f_bounded", kTolExact, cfg);
  Rng rng = run.rng();
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const int n = 2 + static_cast<int>(rng.below(cfg.max_n - 1));
    const PureState s = random_state(rng, n);
    const double excess = std::max(0.0, std::abs(f_value(s)) - 1.0);
    run.observe(excess, at(t, n));
  }
  return run.finish();
}

PropertyResult prop_purity_identity(const VerifyConfig &cfg) {
  PropertyRun run("ent.purity_identity", kTolExact, cfg);
  Rng rng = run.rng();
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const int n = 2 + static_cast<int>(rng.below(cfg.max_n - 1));
    const int j = 1 + static_cast<int>(rng.below(n));
    const PureState s = random_state(rng, n);
    const DensityMatrix2 rho = reduced_density_qubit(s, j);
    const double p = purity(rho);
    const double trace_gap =
        std::abs(rho.entry(0, 0).real() + rho.entry(1, 1).real() - 1.0);
    const double below_half = std::max(0.0, 0.5 - p);
    const double above_one = std::max(0.0, p - 1.0);
    run.observe(std::max({trace_gap, below_half, above_one}),
                at(t, n) + " j=" + std::to_string(j));
  }
  return run.finish();
}

PropertyResult prop_single_qubit_purity_equiv(const VerifyConfig &cfg) {
  PropertyRun run("ent.single_qubit_purity_equiv", kTolExact, cfg);
  Rng rng = run.rng();
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const int n = 2 + static_cast<int>(rng.below(cfg.max_n - 1));
    const int j = 1 + static_cast<int>(rng.below(n));
    const PureState s = random_state(rng, n);
    const double via_kernel = purity(reduced_density_qubit(s, j));
    const Eigen::MatrixXcd rho = dense_reduced_block(move_qubit_front(s, j), 1);
    run.observe(std::abs(via_kernel - purity_of(rho)),
                at(t, n) + " j=" + std::to_string(j));
  }
  return run.finish();
}

PropertyResult prop_schmidt_cut_consistency(const VerifyConfig &cfg) {
  PropertyRun run("ent.schmidt_cut_consistency", kTolPipeline, cfg);
  Rng rng = run.rng();
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const int n = 2 + static_cast<int>(rng.below(cfg.max_n - 1));
    const int cut = 1 + static_cast<int>(rng.below(n - 1));
    const PureState s = random_state(rng, n);
    const SchmidtData data = schmidt(s, cut);
    double sum_sq = 0.0;
    double sum_quad = 0.0;
    double order = 0.0;
    for (size_t i = 0; i < data.coefficients.size(); ++i) {
      const double c = data.coefficients[i];
      sum_sq += c * c;
      sum_quad += c * c * c * c;
      if (i > 0 && c > data.coefficients[i - 1]) {
        order = 1.0;
      }
    }
    const double norm_gap = std::abs(sum_sq - 1.0);
    const double purity_gap =
        std::abs(sum_quad - block_purity_small_side(s, cut));
    run.observe(std::max({norm_gap, purity_gap, order}),
                at(t, n) + " cut=" + std::to_string(cut));
  }
  return run.finish();
}

PropertyResult prop_phase_invariance(const VerifyConfig &cfg) {
  PropertyRun run("ent.phase_invariance", kTolExact, cfg);
  Rng rng = run.rng();
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const int n = 2 + static_cast<int>(rng.below(cfg.max_n - 1));
    const PureState s = random_state(rng, n);
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    const cplx phase(std::cos(theta), std::sin(theta));
    std::vector<cplx> rotated(s.amplitudes().begin(), s.amplitudes().end());
    for (cplx &a : rotated) {
      a *= phase;
    }
    const PureState r = PureState::unchecked(n, std::move(rotated));
    const double f_gap = std::abs(std::abs(f_value(r)) - std::abs(f_value(s)));
    const double q_gap = std::abs(mw_measure(r) - mw_measure(s));
    run.observe(std::max(f_gap, q_gap), at(t, n));
  }
  return run.finish();
}

PropertyResult prop_ghz_dichotomy(const VerifyConfig &cfg) {
  PropertyRun run("ent.ghz_dichotomy", kTolPipeline, cfg);
  for (int n = 2; n <= std::max(cfg.max_n, 10); ++n) {
    const PureState g = ghz_state(n);
    const double f_mod = std::abs(f_value(g));
    const double f_gap = (n == 2) ? std::abs(f_mod - 1.0) : f_mod;
    const double q_gap = std::abs(mw_measure(g) - 1.0);
    run.observe(std::max(f_gap, q_gap), "n=" + std::to_string(n));
  }
  return run.finish();
}

// --- thue-morse ---------------------------------------------------------

PropertyResult prop_tau_recursion_popcount(const VerifyConfig &cfg) {
  PropertyRun run("tm.tau_recursion_popcount", 0.0, cfg);
  const std::uint64_t limit = std::uint64_t{1} << 20;
  std::uint64_t mismatches = 0;
  std::uint64_t first_bad = 0;
  for (std::uint64_t i = 1; i <= limit; ++i) {
    if (tau(i) != tau_by_recursion(i)) {
      if (mismatches == 0) {
        first_bad = i;
      }
      ++mismatches;
    }
  }
  run.observe(static_cast<double>(mismatches),
              "exhaustive i=1..2^20, first mismatch i=" +
                  std::to_string(first_bad));
  return run.finish();
}

PropertyResult prop_block_negation(const VerifyConfig &cfg) {
  PropertyRun run("tm.block_negation", 0.0, cfg);
  for (int n = 1; n <= 16; ++n) {
    run.require(block_negation_check(n), "n=" + std::to_string(n));
  }
  return run.finish();
}

PropertyResult prop_l_diag_equal(const VerifyConfig &cfg) {
  PropertyRun run("tm.l_diag_equal", 0.0, cfg);
  for (int n = 1; n <= 20; ++n) {
    const std::vector<double> via_popcount = l_matrix_diag(n);
    const std::vector<double> via_thue = l_diag_via_thue(n);
    std::uint64_t mismatches = 0;
    for (size_t j = 0; j < via_popcount.size(); ++j) {
      if (via_popcount[j] != via_thue[j]) {
        ++mismatches;
      }
    }
    run.observe(static_cast<double>(mismatches), "n=" + std::to_string(n));
  }
  return run.finish();
}

PropertyResult prop_evil_odious_support(const VerifyConfig &cfg) {
  PropertyRun run("tm.evil_odious_support", kTolPipeline, cfg);
  Rng rng = run.rng();
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const int n = 2 + static_cast<int>(rng.below(cfg.max_n - 1));
    const std::uint64_t dim = std::uint64_t{1} << n;
    const EvilOdious split = evil_odious_indices(n);
    const bool use_evil = rng.below(2) == 0;
    const std::vector<std::uint64_t> &support =
        use_evil ? split.evil : split.odious;
    std::vector<double> x(dim, 0.0);
    double norm_sq = 0.0;
    for (const std::uint64_t pos : support) {
      const double v = rng.normal();
      x[pos - 1] = v;
      norm_sq += v * v;
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (double &v : x) {
      v *= inv;
    }
    const SupportResult got = real_support_criterion(x);
    const SupportClass want =
        use_evil ? SupportClass::EvilSupport : SupportClass::OdiousSupport;
    double residual = std::abs(got.value - 1.0);
    if (got.cls != want) {
      residual = std::max(residual, 1.0);
    }
    run.observe(residual, at(t, n) + (use_evil ? " side=evil" : " side=odious"));
  }
  return run.finish();
}

PropertyResult prop_class_sizes(const VerifyConfig &cfg) {
  PropertyRun run("tm.class_sizes", 0.0, cfg);
  for (int n = 1; n <= 16; ++n) {
    const EvilOdious split = evil_odious_indices(n);
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    bool ok = split.evil.size() == half && split.odious.size() == half;
    if (ok) {
      // The two halves must interleave back into exactly 1..2^n.
      std::vector<bool> seen(2 * half + 1, false);
      for (const std::uint64_t pos : split.evil) {
        ok = ok && pos >= 1 && pos <= 2 * half && !seen[pos] && tau(pos) == 0;
        if (pos <= 2 * half) {
          seen[pos] = true;
        }
      }
      for (const std::uint64_t pos : split.odious) {
        ok = ok && pos >= 1 && pos <= 2 * half && !seen[pos] && tau(pos) == 1;
        if (pos <= 2 * half) {
          seen[pos] = true;
        }
      }
    }
    run.require(ok, "n=" + std::to_string(n));
  }
  return run.finish();
}

} // namespace

// --- Rng ----------------------------------------------------------------

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) / kTwoPow53;
}

double Rng::normal() {
  // Box-Muller; u1 is shifted into (0, 1] so the log is finite.
  const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) / kTwoPow53;
  const double u2 = static_cast<double>(engine_() >> 11) / kTwoPow53;
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("below(0) is empty");
  }
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t residue = (max % bound + 1) % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (residue == 0 || x <= max - residue) {
      return x % bound;
    }
  }
}

cplx Rng::gaussian_cplx() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

// --- random states ------------------------------------------------------

PureState random_state(Rng &rng, int n) {
  if (n < 1) {
    throw std::invalid_argument("random_state requires n >= 1");
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<cplx> amps(dim);
  for (cplx &a : amps) {
    a = rng.gaussian_cplx();
  }
  return PureState::normalized(n, std::move(amps));
}

PureState random_product_state(Rng &rng, int n, int n1) {
  if (n1 < 1 || n1 > n - 1) {
    throw std::invalid_argument("product cut must satisfy 1 <= n1 <= n-1");
  }
  const PureState left = random_state(rng, n1);
  const PureState right = random_state(rng, n - n1);
  return tensor_states(left, right);
}

std::vector<double> random_real_unit_vector(Rng &rng, std::size_t len) {
  if (len == 0) {
    throw std::invalid_argument("empty vector");
  }
  std::vector<double> x(len);
  double norm_sq = 0.0;
  do {
    norm_sq = 0.0;
    for (double &v : x) {
      v = rng.normal();
      norm_sq += v * v;
    }
  } while (norm_sq == 0.0);
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (double &v : x) {
    v *= inv;
  }
  return x;
}

// --- oracles ------------------------------------------------------------

int tau_by_recursion(std::uint64_t i) {
  if (i == 0) {
    throw std::invalid_argument("tau is 1-based");
  }
  if (i == 1) {
    return 0;
  }
  if (i % 2 == 0) {
    return 1 - tau_by_recursion(i / 2);
  }
  return tau_by_recursion((i + 1) / 2);
}

Eigen::MatrixXcd dense_reduced_block(const PureState &s, int n1) {
  const int n = s.qubits();
  if (n1 < 1 || n1 > n - 1) {
    throw std::invalid_argument("block cut must satisfy 1 <= n1 <= n-1");
  }
  const Eigen::Index rows = Eigen::Index{1} << n1;
  const Eigen::Index cols = Eigen::Index{1} << (n - n1);
  using RowMajorMat =
      Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMajorMat> a(s.amplitudes().data(), rows, cols);
  return a * a.adjoint();
}

double purity_of(const Eigen::MatrixXcd &rho) {
  return (rho * rho).trace().real();
}

PureState move_qubit_front(const PureState &s, int j) {
  const int n = s.qubits();
  if (j < 1 || j > n) {
    throw std::invalid_argument("qubit index out of range");
  }
  const std::uint64_t dim = s.dim();
  const int shift = n - j; // bit position of qubit j
  const std::uint64_t low_mask = (std::uint64_t{1} << shift) - 1;
  std::vector<cplx> out(dim);
  for (std::uint64_t k = 0; k < dim; ++k) {
    const std::uint64_t bit = (k >> shift) & 1;
    const std::uint64_t high = k >> (shift + 1); // qubits 1..j-1
    const std::uint64_t low = k & low_mask;      // qubits j+1..n
    const std::uint64_t moved =
        (bit << (n - 1)) | (high << shift) | low;
    out[moved] = s[k];
  }
  return PureState::unchecked(n, std::move(out));
}

// --- suite --------------------------------------------------------------

std::vector<PropertyResult> run_all_properties(const VerifyConfig &cfg) {
  if (cfg.max_n < 2 || cfg.max_n > 12) {
    throw std::invalid_argument("max_n must lie in 2..12");
  }
  if (cfg.trials < 1) {
    throw std::invalid_argument("trials must be at least 1");
  }
  std::vector<PropertyResult> results;
  results.push_back(prop_tensor_assoc(cfg));
  results.push_back(prop_mixed_product(cfg));
  results.push_back(prop_conj_involution(cfg));
  results.push_back(prop_inner_norm(cfg));
  results.push_back(prop_dense_implicit_agree(cfg));
  results.push_back(prop_unitarity(cfg));
  results.push_back(prop_cnot_involution(cfg));
  results.push_back(prop_m_real_hermitian(cfg));
  results.push_back(prop_bell_column_structure(cfg));
  results.push_back(prop_l_diag_bridge(cfg));
  results.push_back(prop_product_f_zero(cfg));
  results.push_back(prop_bell_f_modulus(cfg));
  results.push_back(prop_bell_q_maximal(cfg));
  results.push_back(prop_f_bounded(cfg));
  results.push_back(prop_purity_identity(cfg));
  results.push_back(prop_single_qubit_purity_equiv(cfg));
  results.push_back(prop_schmidt_cut_consistency(cfg));
  results.push_back(prop_phase_invariance(cfg));
  results.push_back(prop_ghz_dichotomy(cfg));
  results.push_back(prop_tau_recursion_popcount(cfg));
  results.push_back(prop_block_negation(cfg));
  results.push_back(prop_l_diag_equal(cfg));
  results.push_back(prop_evil_odious_support(cfg));
  results.push_back(prop_class_sizes(cfg));
  return results;
}

} // namespace qbell::verify
