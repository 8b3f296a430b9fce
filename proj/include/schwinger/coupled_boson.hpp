#pragma once

#include "schwinger/dense.hpp"
#include "schwinger/fock.hpp"
#include "schwinger/operators.hpp"

namespace schwinger {

/**
 * Angular-momentum operators built from two boson modes:
 *
 *   J_x = (hbar/2)  (a1+ a2 + a1 a2+)      J_z = (hbar/2) (n1 - n2)
 *   J_y = (hbar/2i) (a1+ a2 - a1 a2+)      J   = (hbar/2) (n1 + n2)
 *
 * Each operator preserves n1 + n2, so it is block diagonal over the
 * constant-n sublets of the basis and exact on every sublet, including the
 * top shell n = n_max.
 */
struct AngularMomentumSet {
  FockBasis basis;
  double hbar = 1.0;
  SparseOperator jx;
  SparseOperator jy;
  SparseOperator jz;
  SparseOperator jtot;
};

enum class Component { x, y, z, total };

const SparseOperator &component(const AngularMomentumSet &set, Component c);
const char *component_name(Component c);

/// Restriction of an AngularMomentumSet to the sublet n = two_j.
struct Block {
  int two_j = 0;
  double hbar = 1.0;
  DenseMatrix jx;
  DenseMatrix jy;
  DenseMatrix jz;

  std::size_t dim() const { return jx.dim(); }
  double j() const { return 0.5 * two_j; }
};

/// Throws std::invalid_argument unless hbar is positive and finite.
AngularMomentumSet build_set(const FockBasis &basis, double hbar = 1.0);

/// Throws std::out_of_range for n outside [0, n_max].
Block extract_block(const AngularMomentumSet &set, int n);

/// J^2 = J_x^2 + J_y^2 + J_z^2
SparseOperator casimir(const AngularMomentumSet &set);

/// J^2 - J (J + epsilon hbar 1). Zero for epsilon = 1; equals hbar J for
/// epsilon = 0.
SparseOperator identity_residual(const AngularMomentumSet &set, double epsilon);

/// Dense J_x^2 + J_y^2 + J_z^2 on a block.
DenseMatrix block_casimir(const Block &block);

/**
 * Spin-j matrices from the ladder formula
 * <m+1|J+|m> = hbar sqrt(j(j+1) - m(m+1)), in the basis m = j, j-1, ..., -j.
 * Independent of the boson construction; used as a cross-check.
 */
Block standard_spin_block(int two_j, double hbar = 1.0);

/// Copy of `set` with `delta` added to one entry of one operator. Only used
/// to exercise failure paths of the verification battery.
AngularMomentumSet with_perturbed_entry(const AngularMomentumSet &set,
                                        Component c, std::size_t row,
                                        std::size_t col, Complex delta);

} // namespace schwinger
