#include "doctest.h"

#include "dense_oracle.hpp"
#include "schwinger/coupled_boson.hpp"

#include <cmath>
#include <map>

using namespace schwinger;

namespace {

const Complex I{0.0, 1.0};

double commutation_residual(const SparseOperator &a, const SparseOperator &b,
                            const SparseOperator &c, double hbar) {
  return frobenius_norm(subtract(commutator(a, b), scale(c, I * hbar)));
}

} // namespace

TEST_CASE("spin-1/2 block is (hbar/2) Pauli") {
  const auto set = build_set(build_basis(1), 1.0);
  const auto blk = extract_block(set, 1);
  REQUIRE(blk.dim() == 2);
  CHECK(blk.two_j == 1);
  CHECK(blk.jz(0, 0) == Complex(0.5));
  CHECK(blk.jz(1, 1) == Complex(-0.5));
  CHECK(blk.jx(0, 1) == Complex(0.5));
  CHECK(blk.jx(1, 0) == Complex(0.5));
  CHECK(blk.jx(0, 0) == Complex(0.0));
  CHECK(blk.jy(0, 1) == Complex(0.0, -0.5));
  CHECK(blk.jy(1, 0) == Complex(0.0, 0.5));
}

TEST_CASE("extract_block") {
  const auto set = build_set(build_basis(3), 1.0);
  SUBCASE("n = 0 is 1x1 zero") {
    const auto blk = extract_block(set, 0);
    REQUIRE(blk.dim() == 1);
    CHECK(blk.jx(0, 0) == Complex(0.0));
    CHECK(blk.jy(0, 0) == Complex(0.0));
    CHECK(blk.jz(0, 0) == Complex(0.0));
  }
  SUBCASE("n = 2 is spin 1") {
    const auto blk = extract_block(set, 2);
    REQUIRE(blk.dim() == 3);
    CHECK(blk.jz(0, 0) == Complex(1.0));
    CHECK(blk.jz(1, 1) == Complex(0.0));
    CHECK(blk.jz(2, 2) == Complex(-1.0));
    CHECK(std::abs(blk.jx(0, 1) - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(blk.jx(1, 2) - 1.0 / std::sqrt(2.0)) < 1e-15);
  }
  CHECK_THROWS_AS(extract_block(set, 4), std::out_of_range);
}

TEST_CASE("jtot is hbar n / 2") {
  const auto set = build_set(build_basis(2), 1.0);
  const std::vector<double> expected{0, 0.5, 0.5, 1, 1, 1};
  for (std::size_t k = 0; k < expected.size(); ++k)
    CHECK(set.jtot.at(k, k) == Complex(expected[k]));
  const auto set2 = build_set(build_basis(2), 2.0);
  for (std::size_t k = 0; k < expected.size(); ++k)
    CHECK(set2.jtot.at(k, k) == Complex(2.0 * expected[k]));
}

TEST_CASE("build_set rejects non-positive hbar") {
  const auto b = build_basis(1);
  CHECK_THROWS_AS(build_set(b, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_set(b, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_set(b, std::nan("")), std::invalid_argument);
}

TEST_CASE("operators match the untruncated dense construction") {
  for (int n_max = 0; n_max <= 6; ++n_max)
    for (double hbar : {1.0, 2.0}) {
      CAPTURE(n_max);
      const auto set = build_set(build_basis(n_max), hbar);
      const auto ref = oracle::angular(n_max, hbar);
      CHECK(oracle::max_abs_diff(set.jx, ref.jx) < 1e-13);
      CHECK(oracle::max_abs_diff(set.jy, ref.jy) < 1e-13);
      CHECK(oracle::max_abs_diff(set.jz, ref.jz) < 1e-13);
      CHECK(oracle::max_abs_diff(set.jtot, ref.jtot) < 1e-13);
    }
}

TEST_CASE("structure: hermitian and block diagonal") {
  const auto set = build_set(build_basis(15), 1.3);
  for (auto c : {Component::x, Component::y, Component::z, Component::total}) {
    CAPTURE(component_name(c));
    CHECK(hermiticity_defect(component(set, c)) < 1e-13);
    CHECK(off_block_magnitude(set.basis, component(set, c)) == 0.0);
  }
}

TEST_CASE("su(2) commutation relations, Casimir and conservation") {
  for (int n_max : {1, 4, 10, 20})
    for (double hbar : {1.0, 2.0}) {
      CAPTURE(n_max);
      CAPTURE(hbar);
      const auto s = build_set(build_basis(n_max), hbar);
      CHECK(commutation_residual(s.jx, s.jy, s.jz, hbar) < 1e-12);
      CHECK(commutation_residual(s.jy, s.jz, s.jx, hbar) < 1e-12);
      CHECK(commutation_residual(s.jz, s.jx, s.jy, hbar) < 1e-12);
      const auto j2 = casimir(s);
      CHECK(frobenius_norm(commutator(j2, s.jz)) < 1e-11);
      CHECK(frobenius_norm(commutator(j2, s.jx)) < 1e-11);
      for (const auto *op : {&s.jx, &s.jy, &s.jz})
        CHECK(frobenius_norm(commutator(*op, s.jtot)) < 1e-12);
    }
}

TEST_CASE("identities hold on the top shell with no degradation") {
  const int n_max = 12;
  const auto s = build_set(build_basis(n_max), 1.0);
  const auto residual = subtract(commutator(s.jx, s.jy), scale(s.jz, I));
  const auto top = dense_restriction(residual, s.basis.block_range(n_max));
  CHECK(max_abs_entry(top) < 1e-13);
  const auto casimir_top = dense_restriction(identity_residual(s, 1.0), s.basis.block_range(n_max));
  CHECK(max_abs_entry(casimir_top) < 1e-12);
}

TEST_CASE("casimir per block") {
  const auto s = build_set(build_basis(2), 1.0);
  const auto j2 = casimir(s);
  auto block_of = [&](int n) { return dense_restriction(j2, s.basis.block_range(n)); };
  CHECK(max_abs_entry(block_of(0)) == 0.0);
  CHECK(max_abs_entry(block_of(1) - 0.75 * DenseMatrix::identity(2)) < 1e-15);
  CHECK(max_abs_entry(block_of(2) - 2.0 * DenseMatrix::identity(3)) < 1e-14);
  CHECK(hermiticity_defect(j2) < 1e-14);
  CHECK(off_block_magnitude(s.basis, j2) == 0.0);
}

TEST_CASE("identity_residual") {
  SUBCASE("epsilon = 1 vanishes") {
    const auto s = build_set(build_basis(20), 1.0);
    CHECK(max_abs_entry(identity_residual(s, 1.0)) < 1e-12);
  }
  SUBCASE("epsilon = 0 equals hbar J") {
    for (double hbar : {1.0, 2.0}) {
      const auto s = build_set(build_basis(8), hbar);
      const auto r = identity_residual(s, 0.0);
      CHECK(max_abs_difference(r, scale(s.jtot, hbar)) < 1e-12);
      for (std::size_t k = 0; k < s.basis.size(); ++k)
        CHECK(std::abs(r.at(k, k) - hbar * hbar * 0.5 * s.basis[k].total()) < 1e-12);
    }
  }
  SUBCASE("vacuum") {
    const auto s = build_set(build_basis(0), 1.0);
    CHECK(identity_residual(s, 1.0).is_zero());
  }
  SUBCASE("intermediate epsilon interpolates linearly") {
    const auto s = build_set(build_basis(5), 1.0);
    const auto half = identity_residual(s, 0.5);
    CHECK(max_abs_difference(half, scale(s.jtot, 0.5)) < 1e-12);
  }
}

TEST_CASE("allowed j values and 2j+1 degeneracy") {
  const int n_max = 9;
  for (double hbar : {1.0, 2.0}) {
    const auto s = build_set(build_basis(n_max), hbar);
    std::map<int, int> count;
    for (std::size_t k = 0; k < s.basis.size(); ++k) {
      const double v = s.jtot.at(k, k).real();
      const int two_j = int(std::lround(2.0 * v / hbar));
      REQUIRE(std::abs(v - 0.5 * hbar * two_j) < 1e-15);
      ++count[two_j];
    }
    REQUIRE(count.size() == std::size_t(n_max + 1));
    for (const auto &[two_j, c] : count) {
      CHECK(two_j >= 0);
      CHECK(two_j <= n_max);
      CHECK(c == two_j + 1);
    }
  }
}

TEST_CASE("blocks equal the standard spin-j matrices") {
  const auto s = build_set(build_basis(14), 1.5);
  for (int n = 0; n <= 14; ++n) {
    const auto blk = extract_block(s, n);
    const auto ref = standard_spin_block(n, 1.5);
    CHECK(max_abs_entry(blk.jx - ref.jx) < 1e-13);
    CHECK(max_abs_entry(blk.jy - ref.jy) < 1e-13);
    CHECK(max_abs_entry(blk.jz - ref.jz) < 1e-13);
  }
}

TEST_CASE("with_perturbed_entry changes exactly one entry") {
  const auto s = build_set(build_basis(3), 1.0);
  const auto p = with_perturbed_entry(s, Component::y, 4, 5, 1e-6);
  CHECK(p.jx == s.jx);
  CHECK(p.jz == s.jz);
  CHECK(std::abs(max_abs_difference(p.jy, s.jy) - 1e-6) < 1e-18);
  CHECK(std::abs(p.jy.at(4, 5) - s.jy.at(4, 5) - 1e-6) < 1e-18);
}
