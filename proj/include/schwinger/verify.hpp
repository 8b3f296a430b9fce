#pragma once

#include "schwinger/coupled_boson.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schwinger {

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double threshold = 0.0; ///< pass iff max_residual <= threshold
  bool pass = false;
};

struct BlockSummary {
  int two_j = 0;
  double casimir = 0.0;
  double mean_square = 0.0;
  std::vector<double> jz_spectrum; ///< descending
  bool sum_rule_pass = false;
};

/// Single-entry corruption applied after the operators are built.
struct InjectedFault {
  Component component = Component::x;
  std::size_t row = 0;
  std::size_t col = 0;
  Complex delta = 1e-6;
};

struct VerifyConfig {
  int n_max = 20;
  double hbar = 1.0;
  double tol = 1e-12;
  unsigned threads = 1;
  std::optional<InjectedFault> fault;
};

struct VerifyReport {
  int n_max = 0;
  double hbar = 1.0;
  double tol = 0.0;
  std::vector<CheckResult> checks;
  std::vector<BlockSummary> blocks; ///< ordered by two_j

  bool passed() const;
  std::vector<std::string> failed_checks() const;
};

/**
 * Full invariant battery over basis(n_max): hermiticity, block structure,
 * su(2) commutators, Casimir and total-J conservation, the J^2 = J(J + 1)
 * identity, per-block spectra, degeneracies, the sum rule and a comparison
 * against the standard spin-j matrices.
 *
 * Residuals are absolute; each threshold is tol times the magnitude of the
 * terms being compared (at least 1). Block analyses run on `threads` workers
 * and are assembled in two_j order.
 */
VerifyReport run_verification(const VerifyConfig &config);

/// Verification of an already built (possibly perturbed) set.
VerifyReport verify_set(const AngularMomentumSet &set, double tol,
                        unsigned threads = 1);

} // namespace schwinger
