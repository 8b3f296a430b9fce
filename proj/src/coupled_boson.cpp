#include "schwinger/coupled_boson.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace schwinger {

const SparseOperator &component(const AngularMomentumSet &set, Component c) {
  switch (c) {
  case Component::x:
    return set.jx;
  case Component::y:
    return set.jy;
  case Component::z:
    return set.jz;
  case Component::total:
    return set.jtot;
  }
  throw std::invalid_argument("unknown angular momentum component");
}

const char *component_name(Component c) {
  switch (c) {
  case Component::x:
    return "jx";
  case Component::y:
    return "jy";
  case Component::z:
    return "jz";
  case Component::total:
    return "jtot";
  }
  return "?";
}

AngularMomentumSet build_set(const FockBasis &basis, double hbar) {
  if (!(hbar > 0.0) || !std::isfinite(hbar))
    throw std::invalid_argument("build_set: hbar must be positive and finite, got " +
                                std::to_string(hbar));
  const auto a1 = annihilation(basis, Mode::one);
  const auto a2 = annihilation(basis, Mode::two);
  // a1+ a2 passes through n - 1 and never leaves the cutoff. The product
  // a1 a2+ would pass through n + 1 and lose the top shell, so it is taken
  // as the adjoint (a1+ a2)+ = a2+ a1 instead.
  const auto raise12 = multiply(adjoint(a1), a2);
  const auto lower12 = adjoint(raise12);
  const auto n1 = number_operator(basis, Mode::one);
  const auto n2 = number_operator(basis, Mode::two);

  const double half = 0.5 * hbar;
  const Complex half_over_i{0.0, -half};
  return AngularMomentumSet{
      .basis = basis,
      .hbar = hbar,
      .jx = scale(add(raise12, lower12), half),
      .jy = scale(subtract(raise12, lower12), half_over_i),
      .jz = scale(subtract(n1, n2), half),
      .jtot = scale(add(n1, n2), half),
  };
}

Block extract_block(const AngularMomentumSet &set, int n) {
  const auto range = set.basis.block_range(n);
  return Block{
      .two_j = n,
      .hbar = set.hbar,
      .jx = dense_restriction(set.jx, range),
      .jy = dense_restriction(set.jy, range),
      .jz = dense_restriction(set.jz, range),
  };
}

SparseOperator casimir(const AngularMomentumSet &set) {
  return add(add(multiply(set.jx, set.jx), multiply(set.jy, set.jy)),
             multiply(set.jz, set.jz));
}

SparseOperator identity_residual(const AngularMomentumSet &set, double epsilon) {
  const auto shifted =
      add(set.jtot, scale(SparseOperator::identity(set.jtot.dim()),
                          epsilon * set.hbar));
  return subtract(casimir(set), multiply(set.jtot, shifted));
}

DenseMatrix block_casimir(const Block &block) {
  return block.jx * block.jx + block.jy * block.jy + block.jz * block.jz;
}

Block standard_spin_block(int two_j, double hbar) {
  if (two_j < 0)
    throw std::invalid_argument("standard_spin_block: two_j must be non-negative");
  const auto dim = static_cast<std::size_t>(two_j) + 1;
  Block b{.two_j = two_j,
          .hbar = hbar,
          .jx = DenseMatrix(dim),
          .jy = DenseMatrix(dim),
          .jz = DenseMatrix(dim)};
  const double j = 0.5 * two_j;
  for (std::size_t k = 0; k < dim; ++k) {
    const double m = j - double(k);
    b.jz(k, k) = hbar * m;
    if (k + 1 < dim) {
      // J+ connects position k+1 (m - 1) to position k (m).
      const double lower_m = m - 1.0;
      const double jplus = hbar * std::sqrt(j * (j + 1.0) - lower_m * (lower_m + 1.0));
      b.jx(k, k + 1) = 0.5 * jplus;
      b.jx(k + 1, k) = 0.5 * jplus;
      b.jy(k, k + 1) = Complex{0.0, -0.5 * jplus};
      b.jy(k + 1, k) = Complex{0.0, 0.5 * jplus};
    }
  }
  return b;
}

AngularMomentumSet with_perturbed_entry(const AngularMomentumSet &set,
                                        Component c, std::size_t row,
                                        std::size_t col, Complex delta) {
  auto out = set;
  const auto &op = component(set, c);
  auto entries = op.entries();
  entries.push_back({row, col, delta});
  SparseOperator perturbed(op.dim(), std::move(entries));
  switch (c) {
  case Component::x:
    out.jx = std::move(perturbed);
    break;
  case Component::y:
    out.jy = std::move(perturbed);
    break;
  case Component::z:
    out.jz = std::move(perturbed);
    break;
  case Component::total:
    out.jtot = std::move(perturbed);
    break;
  }
  return out;
}

} // namespace schwinger
