#pragma once

#include "schwinger/coupled_boson.hpp"
#include "schwinger/dense.hpp"

#include <cstdint>
#include <vector>

namespace schwinger {

inline constexpr double kDefaultEigenTolerance = 1e-12;
inline constexpr int kMaxJacobiSweeps = 50;

struct EigenDecomposition {
  std::vector<double> values; ///< ascending
  DenseMatrix vectors;        ///< column k pairs with values[k]
  int sweeps = 0;
};

/**
 * Cyclic complex Jacobi eigensolver for Hermitian matrices.
 *
 * Each rotation first removes the phase of a_pq with a diagonal unitary and
 * then applies the real symmetric rotation that zeroes the modulus. Sweeps
 * stop once every off-diagonal magnitude is below tol * max(1, ||A||_F).
 *
 * Throws std::invalid_argument for an empty, non-finite or non-Hermitian
 * matrix (defect above 1e-12 * max(1, max |a_ij|)) and std::runtime_error
 * when `max_sweeps` sweeps do not converge. Ties are ordered by original
 * column index.
 */
EigenDecomposition jacobi_eigen(const DenseMatrix &matrix,
                                double tol = kDefaultEigenTolerance,
                                int max_sweeps = kMaxJacobiSweeps);

struct SpectrumReport {
  int two_j = 0;
  double hbar = 1.0;
  std::vector<double> jz_eigenvalues; ///< descending, physical units
  double casimir_value = 0.0;
  double casimir_spread = 0.0;
  double jz_grid_deviation = 0.0;
  double max_residual = 0.0; ///< spread + grid deviation
};

/// Same as analyze_block without the spread check.
SpectrumReport compute_spectrum(const Block &block,
                                double tol = kDefaultEigenTolerance);

/// Throws std::runtime_error if the Casimir eigenvalues on the block spread
/// by more than tol * max(1, |casimir|).
SpectrumReport analyze_block(const Block &block,
                             double tol = kDefaultEigenTolerance);

/// Both sides of sum_{m=-j}^{j} m^2 = j(j+1)(2j+1)/3, scaled by 4.
struct SumRuleQuarters {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds() const { return lhs == rhs; }
};

/// Exact integer arithmetic; throws std::out_of_range for two_j < 0 or
/// two_j > kMaxSumRuleTwoJ.
SumRuleQuarters sum_rule_check(int two_j);
inline constexpr int kMaxSumRuleTwoJ = 1 << 20;

/// 3 <J_z^2> averaged over the 2j+1 levels of the report's spectrum.
double mean_square_from_spectrum(const SpectrumReport &report);

struct AngleResult {
  int two_j = 0;
  int two_mj = 0;
  double epsilon = 0.0;
  double cos_theta = 0.0;
};

/**
 * cos(theta_m) = (m/j) / sqrt(1 + epsilon/j), independent of hbar.
 *
 * Throws std::domain_error for two_j < 1, |two_mj| > two_j, two_mj with the
 * wrong parity for two_j, or epsilon < 0.
 */
double cos_theta(int two_j, int two_mj, double epsilon);

/// Rows m = j, j-1, ..., -j.
std::vector<AngleResult> angle_table(int two_j, double epsilon);

/// Extremal cos(theta_j) for two_j = 1..two_j_max.
std::vector<AngleResult> limit_scan(int two_j_max, double epsilon);

} // namespace schwinger
