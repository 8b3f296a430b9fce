#pragma once

#include "schwinger/dense.hpp"
#include "schwinger/fock.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace schwinger {

using Complex = std::complex<double>;

/// Entries with |value| <= this are dropped after every algebraic operation.
inline constexpr double kPruneTolerance = 1e-15;

enum class Mode { one = 1, two = 2 };

struct Entry {
  std::size_t row = 0;
  std::size_t col = 0;
  Complex value;

  friend bool operator==(const Entry &, const Entry &) = default;
};

/**
 * Square complex matrix in canonical triplet form.
 *
 * Canonical means: entries sorted by (row, col), one entry per position and
 * nothing stored at or below the prune tolerance. Every constructor and every
 * free function below returns a canonical operator, so operator== compares
 * matrices exactly.
 */
class SparseOperator {
public:
  explicit SparseOperator(std::size_t dim = 0) : dim_(dim) {}
  /// Canonicalizes `entries` (duplicates are summed). Throws
  /// std::out_of_range if an index is >= dim.
  SparseOperator(std::size_t dim, std::vector<Entry> entries,
                 double prune_tol = kPruneTolerance);

  static SparseOperator identity(std::size_t dim);
  static SparseOperator diagonal(const std::vector<Complex> &values,
                                 double prune_tol = kPruneTolerance);

  std::size_t dim() const { return dim_; }
  const std::vector<Entry> &entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  /// Value at (row, col); zero when nothing is stored.
  Complex at(std::size_t row, std::size_t col) const;

  friend bool operator==(const SparseOperator &, const SparseOperator &) =
      default;

private:
  std::size_t dim_;
  std::vector<Entry> entries_;
};

/// a_k |n1, n2> = sqrt(n_k) |.., n_k - 1, ..>
SparseOperator annihilation(const FockBasis &basis, Mode mode);
/// Truncated raising operator, defined as adjoint(annihilation(basis, mode)).
SparseOperator creation(const FockBasis &basis, Mode mode);
SparseOperator number_operator(const FockBasis &basis, Mode mode);

SparseOperator adjoint(const SparseOperator &op);

// The binary operations throw std::invalid_argument on dimension mismatch.
SparseOperator multiply(const SparseOperator &a, const SparseOperator &b,
                        double prune_tol = kPruneTolerance);
SparseOperator add(const SparseOperator &a, const SparseOperator &b,
                   double prune_tol = kPruneTolerance);
SparseOperator subtract(const SparseOperator &a, const SparseOperator &b,
                        double prune_tol = kPruneTolerance);
SparseOperator scale(const SparseOperator &a, Complex c,
                     double prune_tol = kPruneTolerance);
/// ab - ba
SparseOperator commutator(const SparseOperator &a, const SparseOperator &b,
                          double prune_tol = kPruneTolerance);

double frobenius_norm(const SparseOperator &op);
double max_abs_entry(const SparseOperator &op);
/// max |a_ij - b_ij| over all positions, computed without pruning.
double max_abs_difference(const SparseOperator &a, const SparseOperator &b);
/// Largest |op - adjoint(op)| entry.
double hermiticity_defect(const SparseOperator &op);

/// Largest |entry| whose row and column lie in different constant-n sublets.
double off_block_magnitude(const FockBasis &basis, const SparseOperator &op);

/// Restriction of `op` to a contiguous range of basis positions.
DenseMatrix dense_restriction(const SparseOperator &op,
                                       PositionRange range);

} // namespace schwinger
