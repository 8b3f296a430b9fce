#include "schwinger/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace schwinger {

namespace {

double max_off_diagonal(const DenseMatrix &a) {
  double best = 0.0;
  for (std::size_t p = 0; p < a.dim(); ++p)
    for (std::size_t q = p + 1; q < a.dim(); ++q)
      best = std::max(best, std::abs(a(p, q)));
  return best;
}

// Zeroes a(p, q) with the unitary U = diag(1, conj(phase)) * R(c, s) acting on
// the (p, q) plane: a <- U^H a U, v <- v U.
void rotate(DenseMatrix &a, DenseMatrix &v, std::size_t p, std::size_t q) {
  const auto apq = a(p, q);
  const double mag = std::abs(apq);
  const auto phase = apq / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0)
    t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const auto u_qp = -s * std::conj(phase);
  const auto u_qq = c * std::conj(phase);
  const std::size_t n = a.dim();

  for (std::size_t k = 0; k < n; ++k) {
    const auto akp = a(k, p);
    const auto akq = a(k, q);
    a(k, p) = c * akp + u_qp * akq;
    a(k, q) = s * akp + u_qq * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const auto apk = a(p, k);
    const auto aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * apk + c * phase * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;

  for (std::size_t k = 0; k < n; ++k) {
    const auto vkp = v(k, p);
    const auto vkq = v(k, q);
    v(k, p) = c * vkp + u_qp * vkq;
    v(k, q) = s * vkp + u_qq * vkq;
  }
}

} // namespace

EigenDecomposition jacobi_eigen(const DenseMatrix &matrix, double tol,
                                int max_sweeps) {
  const std::size_t n = matrix.dim();
  if (n == 0)
    throw std::invalid_argument("jacobi_eigen: empty matrix");
  if (!(tol > 0.0))
    throw std::invalid_argument("jacobi_eigen: tolerance must be positive");
  for (const auto &v : matrix.data())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("jacobi_eigen: non-finite entry");
  const double entry_scale = std::max(1.0, max_abs_entry(matrix));
  const double defect = hermiticity_defect(matrix);
  if (defect > 1e-12 * entry_scale)
    throw std::invalid_argument("jacobi_eigen: matrix is not Hermitian (defect " +
                                std::to_string(defect) + ")");

  DenseMatrix a = matrix;
  for (std::size_t i = 0; i < n; ++i)
    a(i, i) = a(i, i).real();
  DenseMatrix v = DenseMatrix::identity(n);
  const double threshold = tol * std::max(1.0, frobenius_norm(matrix));

  int sweeps = 0;
  while (max_off_diagonal(a) >= threshold) {
    if (sweeps == max_sweeps)
      throw std::runtime_error("jacobi_eigen: no convergence after " +
                               std::to_string(max_sweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) >= threshold)
          rotate(a, v, p, q);
    ++sweeps;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  EigenDecomposition out{.values = std::vector<double>(n),
                         .vectors = DenseMatrix(n),
                         .sweeps = sweeps};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r)
      out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

SpectrumReport compute_spectrum(const Block &block, double tol) {
  SpectrumReport report;
  report.two_j = block.two_j;
  report.hbar = block.hbar;

  auto jz = jacobi_eigen(block.jz, tol).values;
  std::reverse(jz.begin(), jz.end());
  const double j = block.j();
  for (std::size_t k = 0; k < jz.size(); ++k) {
    const double expected = block.hbar * (j - double(k));
    report.jz_grid_deviation =
        std::max(report.jz_grid_deviation, std::abs(jz[k] - expected));
  }
  report.jz_eigenvalues = std::move(jz);

  const auto casimir_values = jacobi_eigen(block_casimir(block), tol).values;
  const double sum =
      std::accumulate(casimir_values.begin(), casimir_values.end(), 0.0);
  report.casimir_value = sum / double(casimir_values.size());
  report.casimir_spread = casimir_values.back() - casimir_values.front();
  report.max_residual = report.casimir_spread + report.jz_grid_deviation;
  return report;
}

SpectrumReport analyze_block(const Block &block, double tol) {
  auto report = compute_spectrum(block, tol);

  if (report.casimir_spread > tol * std::max(1.0, std::abs(report.casimir_value)))
    throw std::runtime_error("analyze_block: Casimir eigenvalues on block two_j = " +
                             std::to_string(block.two_j) + " spread by " +
                             std::to_string(report.casimir_spread));
  return report;
}

SumRuleQuarters sum_rule_check(int two_j) {
  if (two_j < 0 || two_j > kMaxSumRuleTwoJ)
    throw std::out_of_range("sum_rule_check: two_j = " + std::to_string(two_j) +
                            " outside [0, " + std::to_string(kMaxSumRuleTwoJ) + "]");
  SumRuleQuarters out;
  // (2m)^2 for m = -j..j, i.e. 2m = -two_j, -two_j + 2, ..., two_j.
  for (std::int64_t two_m = -two_j; two_m <= two_j; two_m += 2)
    out.lhs += two_m * two_m;
  // 4 * j(j+1)(2j+1)/3 = two_j (two_j + 1) (two_j + 2) / 3; three consecutive
  // integers, so the division is exact.
  const std::int64_t t = two_j;
  out.rhs = t * (t + 1) * (t + 2) / 3;
  return out;
}

double mean_square_from_spectrum(const SpectrumReport &report) {
  if (report.jz_eigenvalues.empty())
    return 0.0;
  double sum = 0.0;
  for (double m : report.jz_eigenvalues)
    sum += m * m;
  return 3.0 * sum / double(report.jz_eigenvalues.size());
}

double cos_theta(int two_j, int two_mj, double epsilon) {
  if (two_j < 1)
    throw std::domain_error("cos_theta: angle undefined for j = 0");
  if (std::abs(two_mj) > two_j)
    throw std::domain_error("cos_theta: |m_j| exceeds j (two_mj = " +
                            std::to_string(two_mj) + ", two_j = " +
                            std::to_string(two_j) + ")");
  if ((two_j - two_mj) % 2 != 0)
    throw std::domain_error("cos_theta: two_mj and two_j differ in parity");
  if (!(epsilon >= 0.0))
    throw std::domain_error("cos_theta: epsilon must be non-negative");
  const double m_over_j = double(two_mj) / double(two_j);
  return m_over_j / std::sqrt(1.0 + 2.0 * epsilon / double(two_j));
}

std::vector<AngleResult> angle_table(int two_j, double epsilon) {
  std::vector<AngleResult> rows;
  for (int two_mj = two_j; two_mj >= -two_j; two_mj -= 2)
    rows.push_back({two_j, two_mj, epsilon, cos_theta(two_j, two_mj, epsilon)});
  return rows;
}

std::vector<AngleResult> limit_scan(int two_j_max, double epsilon) {
  if (two_j_max < 1)
    throw std::domain_error("limit_scan: two_j_max must be >= 1");
  std::vector<AngleResult> rows;
  rows.reserve(static_cast<std::size_t>(two_j_max));
  for (int two_j = 1; two_j <= two_j_max; ++two_j)
    rows.push_back({two_j, two_j, epsilon, cos_theta(two_j, two_j, epsilon)});
  return rows;
}

} // namespace schwinger
