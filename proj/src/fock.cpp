#include "schwinger/fock.hpp"

#include <stdexcept>
#include <string>

namespace schwinger {

namespace {

// Number of states with total occupation strictly below n.
constexpr std::size_t shell_offset(int n) {
  const auto m = static_cast<std::size_t>(n);
  return m * (m + 1) / 2;
}

} // namespace

FockBasis::FockBasis(int n_max) : n_max_(n_max) {
  if (n_max < 0)
    throw std::invalid_argument("FockBasis: n_max must be non-negative, got " +
                                std::to_string(n_max));
  states_.reserve(basis_dimension(n_max));
  for (int n = 0; n <= n_max; ++n)
    for (int n1 = n; n1 >= 0; --n1)
      states_.push_back({n1, n - n1});
}

bool FockBasis::contains(const OccupationPair &pair) const {
  return pair.n1 >= 0 && pair.n2 >= 0 && pair.total() <= n_max_;
}

std::size_t FockBasis::index_of(const OccupationPair &pair) const {
  if (!contains(pair))
    throw std::out_of_range("FockBasis::index_of: state (" +
                            std::to_string(pair.n1) + "," +
                            std::to_string(pair.n2) +
                            ") is outside the cutoff n_max = " +
                            std::to_string(n_max_));
  return shell_offset(pair.total()) + static_cast<std::size_t>(pair.n2);
}

PositionRange FockBasis::block_range(int n) const {
  if (n < 0 || n > n_max_)
    throw std::out_of_range("FockBasis::block_range: n = " + std::to_string(n) +
                            " outside [0, " + std::to_string(n_max_) + "]");
  return {shell_offset(n), shell_offset(n + 1)};
}

FockBasis build_basis(int n_max) { return FockBasis(n_max); }

} // namespace schwinger
