#pragma once

// Brute-force dense reference built with Eigen, independent of the sparse
// code path: its own basis enumeration, its own ladder matrices, products
// via Eigen.

#include "schwinger/dense.hpp"
#include "schwinger/operators.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Mat = Eigen::MatrixXcd;

struct Basis {
  int n_max = 0;
  std::vector<std::pair<int, int>> states;

  explicit Basis(int cutoff) : n_max(cutoff) {
    for (int n = 0; n <= cutoff; ++n)
      for (int n1 = n; n1 >= 0; --n1)
        states.emplace_back(n1, n - n1);
  }
  long find(int n1, int n2) const {
    for (std::size_t k = 0; k < states.size(); ++k)
      if (states[k] == std::pair{n1, n2})
        return long(k);
    return -1;
  }
  long size() const { return long(states.size()); }
};

inline Mat annihilation(const Basis &b, int mode) {
  Mat a = Mat::Zero(b.size(), b.size());
  for (long col = 0; col < b.size(); ++col) {
    auto [n1, n2] = b.states[std::size_t(col)];
    const int nk = mode == 1 ? n1 : n2;
    if (nk == 0)
      continue;
    const long row = mode == 1 ? b.find(n1 - 1, n2) : b.find(n1, n2 - 1);
    a(row, col) = std::sqrt(double(nk));
  }
  return a;
}

inline Mat number(const Basis &b, int mode) {
  Mat m = Mat::Zero(b.size(), b.size());
  for (long k = 0; k < b.size(); ++k)
    m(k, k) = mode == 1 ? b.states[std::size_t(k)].first : b.states[std::size_t(k)].second;
  return m;
}

/// The four angular momentum operators computed on basis(n_max + 1) and
/// restricted to the first dim(n_max) states, so no product is truncated.
struct Angular {
  Mat jx, jy, jz, jtot;
};

inline Angular angular(int n_max, double hbar) {
  const Basis big(n_max + 1);
  const Basis small(n_max);
  const Mat a1 = annihilation(big, 1);
  const Mat a2 = annihilation(big, 2);
  const Mat up = a1.adjoint() * a2;
  const Mat down = a1 * a2.adjoint();
  const Mat n1 = a1.adjoint() * a1;
  const Mat n2 = a2.adjoint() * a2;
  const std::complex<double> half = 0.5 * hbar;
  const std::complex<double> half_over_i{0.0, -0.5 * hbar};
  const long d = small.size();
  return {(half * (up + down)).topLeftCorner(d, d),
          (half_over_i * (up - down)).topLeftCorner(d, d),
          (half * (n1 - n2)).topLeftCorner(d, d),
          (half * (n1 + n2)).topLeftCorner(d, d)};
}

inline Mat to_dense(const schwinger::SparseOperator &op) {
  Mat m = Mat::Zero(long(op.dim()), long(op.dim()));
  for (const auto &e : op.entries())
    m(long(e.row), long(e.col)) = e.value;
  return m;
}

inline Mat to_eigen(const schwinger::DenseMatrix &a) {
  Mat m(long(a.dim()), long(a.dim()));
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      m(long(r), long(c)) = a(r, c);
  return m;
}

inline double max_abs_diff(const schwinger::SparseOperator &op, const Mat &ref) {
  const Mat d = to_dense(op) - ref;
  return d.size() ? d.cwiseAbs().maxCoeff() : 0.0;
}

} // namespace oracle
