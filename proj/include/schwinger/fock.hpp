#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace schwinger {

/// Two-mode number state |n1, n2>.
struct OccupationPair {
  int n1 = 0;
  int n2 = 0;

  constexpr int total() const { return n1 + n2; }
  /// Twice the J_z quantum number, n1 - n2.
  constexpr int two_m() const { return n1 - n2; }

  friend constexpr auto operator<=>(const OccupationPair &,
                                    const OccupationPair &) = default;
};

/// Half-open range [begin, end) of basis positions.
struct PositionRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  constexpr std::size_t size() const { return end - begin; }
  constexpr bool contains(std::size_t pos) const {
    return pos >= begin && pos < end;
  }
  friend constexpr bool operator==(const PositionRange &,
                                   const PositionRange &) = default;
};

/**
 * Truncated two-mode Fock basis: every |n1, n2> with n1 + n2 <= n_max.
 *
 * States are ordered by ascending total occupation n and, inside each
 * constant-n sublet, by descending n1. Position k inside sublet n therefore
 * carries m_j = j - k with j = n/2. The position of a state has a closed form,
 * so the index map needs no lookup table.
 */
class FockBasis {
public:
  explicit FockBasis(int n_max);

  int n_max() const { return n_max_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<OccupationPair> &states() const { return states_; }
  const OccupationPair &operator[](std::size_t pos) const {
    return states_[pos];
  }

  /// Throws std::out_of_range for negative occupations or n1 + n2 > n_max.
  std::size_t index_of(const OccupationPair &pair) const;
  bool contains(const OccupationPair &pair) const;

  /// Positions of the sublet with total occupation n; length n + 1.
  PositionRange block_range(int n) const;

private:
  int n_max_;
  std::vector<OccupationPair> states_;
};

FockBasis build_basis(int n_max);

/// (n_max + 1)(n_max + 2) / 2
constexpr std::size_t basis_dimension(int n_max) {
  const auto m = static_cast<std::size_t>(n_max);
  return (m + 1) * (m + 2) / 2;
}

} // namespace schwinger
