#include "schwinger/dense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schwinger {

namespace {

void require_same_dim(const DenseMatrix &a, const DenseMatrix &b,
                      const char *what) {
  if (a.dim() != b.dim())
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

} // namespace

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> values) {
  DenseMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    m(i, i) = values[i];
  return m;
}

DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b) {
  require_same_dim(a, b, "DenseMatrix multiply");
  const auto n = a.dim();
  DenseMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto aik = a(i, k);
      if (aik == DenseMatrix::value_type{})
        continue;
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += aik * b(k, j);
    }
  return out;
}

DenseMatrix operator+(const DenseMatrix &a, const DenseMatrix &b) {
  require_same_dim(a, b, "DenseMatrix add");
  DenseMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      out(i, j) = a(i, j) + b(i, j);
  return out;
}

DenseMatrix operator-(const DenseMatrix &a, const DenseMatrix &b) {
  require_same_dim(a, b, "DenseMatrix subtract");
  DenseMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      out(i, j) = a(i, j) - b(i, j);
  return out;
}

DenseMatrix operator*(std::complex<double> c, const DenseMatrix &a) {
  DenseMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      out(i, j) = c * a(i, j);
  return out;
}

DenseMatrix adjoint(const DenseMatrix &a) {
  DenseMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      out(j, i) = std::conj(a(i, j));
  return out;
}

double frobenius_norm(const DenseMatrix &a) {
  double sum = 0.0;
  for (const auto &v : a.data())
    sum += std::norm(v);
  return std::sqrt(sum);
}

double max_abs_entry(const DenseMatrix &a) {
  double best = 0.0;
  for (const auto &v : a.data())
    best = std::max(best, std::abs(v));
  return best;
}

double hermiticity_defect(const DenseMatrix &a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j)
      best = std::max(best, std::abs(a(i, j) - std::conj(a(j, i))));
  return best;
}

} // namespace schwinger
