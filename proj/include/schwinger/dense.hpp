#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace schwinger {

/// Small dense square complex matrix, row-major. Used for single-sublet
/// blocks, whose dimension is at most n_max + 1.
class DenseMatrix {
public:
  using value_type = std::complex<double>;

  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t dim)
      : dim_(dim), data_(dim * dim, value_type{}) {}

  static DenseMatrix identity(std::size_t dim);
  static DenseMatrix diagonal(std::span<const double> values);

  std::size_t dim() const { return dim_; }

  value_type &operator()(std::size_t r, std::size_t c) {
    return data_[r * dim_ + c];
  }
  const value_type &operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }

  std::span<const value_type> data() const { return data_; }

  friend bool operator==(const DenseMatrix &, const DenseMatrix &) = default;

private:
  std::size_t dim_ = 0;
  std::vector<value_type> data_;
};

DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b);
DenseMatrix operator+(const DenseMatrix &a, const DenseMatrix &b);
DenseMatrix operator-(const DenseMatrix &a, const DenseMatrix &b);
DenseMatrix operator*(std::complex<double> c, const DenseMatrix &a);

DenseMatrix adjoint(const DenseMatrix &a);
double frobenius_norm(const DenseMatrix &a);
double max_abs_entry(const DenseMatrix &a);
double hermiticity_defect(const DenseMatrix &a);

} // namespace schwinger
