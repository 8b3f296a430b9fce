#include "schwinger/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace schwinger {

namespace {

void canonicalize(std::vector<Entry> &entries, double prune_tol) {
  std::sort(entries.begin(), entries.end(), [](const Entry &a, const Entry &b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::vector<Entry> merged;
  merged.reserve(entries.size());
  for (const auto &e : entries) {
    if (!merged.empty() && merged.back().row == e.row &&
        merged.back().col == e.col)
      merged.back().value += e.value;
    else
      merged.push_back(e);
  }
  std::erase_if(merged,
                [prune_tol](const Entry &e) { return std::abs(e.value) <= prune_tol; });
  entries = std::move(merged);
}

void require_same_dim(const SparseOperator &a, const SparseOperator &b,
                      const char *what) {
  if (a.dim() != b.dim())
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()) + ")");
}

// CSR-style row offsets into a canonical entry list.
std::vector<std::size_t> row_offsets(const SparseOperator &op) {
  std::vector<std::size_t> offsets(op.dim() + 1, 0);
  for (const auto &e : op.entries())
    ++offsets[e.row + 1];
  for (std::size_t r = 0; r < op.dim(); ++r)
    offsets[r + 1] += offsets[r];
  return offsets;
}

// Merge of two canonical lists with coefficient cb on the second.
SparseOperator linear_combination(const SparseOperator &a,
                                  const SparseOperator &b, Complex cb,
                                  double prune_tol) {
  const auto &ea = a.entries();
  const auto &eb = b.entries();
  std::vector<Entry> out;
  out.reserve(ea.size() + eb.size());
  std::size_t i = 0, j = 0;
  auto before = [](const Entry &x, const Entry &y) {
    return x.row != y.row ? x.row < y.row : x.col < y.col;
  };
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && before(ea[i], eb[j]))) {
      out.push_back(ea[i++]);
    } else if (i == ea.size() || before(eb[j], ea[i])) {
      out.push_back({eb[j].row, eb[j].col, cb * eb[j].value});
      ++j;
    } else {
      out.push_back({ea[i].row, ea[i].col, ea[i].value + cb * eb[j].value});
      ++i;
      ++j;
    }
  }
  return SparseOperator(a.dim(), std::move(out), prune_tol);
}

} // namespace

SparseOperator::SparseOperator(std::size_t dim, std::vector<Entry> entries,
                               double prune_tol)
    : dim_(dim), entries_(std::move(entries)) {
  for (const auto &e : entries_)
    if (e.row >= dim_ || e.col >= dim_)
      throw std::out_of_range("SparseOperator: entry (" + std::to_string(e.row) +
                              "," + std::to_string(e.col) +
                              ") outside dimension " + std::to_string(dim_));
  canonicalize(entries_, prune_tol);
}

SparseOperator SparseOperator::identity(std::size_t dim) {
  std::vector<Entry> entries;
  entries.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i)
    entries.push_back({i, i, 1.0});
  return SparseOperator(dim, std::move(entries));
}

SparseOperator SparseOperator::diagonal(const std::vector<Complex> &values,
                                        double prune_tol) {
  std::vector<Entry> entries;
  entries.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    entries.push_back({i, i, values[i]});
  return SparseOperator(values.size(), std::move(entries), prune_tol);
}

Complex SparseOperator::at(std::size_t row, std::size_t col) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), std::pair{row, col},
      [](const Entry &e, const std::pair<std::size_t, std::size_t> &key) {
        return e.row != key.first ? e.row < key.first : e.col < key.second;
      });
  if (it != entries_.end() && it->row == row && it->col == col)
    return it->value;
  return {};
}

SparseOperator annihilation(const FockBasis &basis, Mode mode) {
  std::vector<Entry> entries;
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto s = basis[col];
    const int nk = mode == Mode::one ? s.n1 : s.n2;
    if (nk == 0)
      continue;
    const OccupationPair lowered =
        mode == Mode::one ? OccupationPair{s.n1 - 1, s.n2}
                          : OccupationPair{s.n1, s.n2 - 1};
    entries.push_back({basis.index_of(lowered), col, std::sqrt(double(nk))});
  }
  return SparseOperator(basis.size(), std::move(entries));
}

SparseOperator creation(const FockBasis &basis, Mode mode) {
  return adjoint(annihilation(basis, mode));
}

SparseOperator number_operator(const FockBasis &basis, Mode mode) {
  std::vector<Complex> diag;
  diag.reserve(basis.size());
  for (const auto &s : basis.states())
    diag.emplace_back(mode == Mode::one ? s.n1 : s.n2);
  return SparseOperator::diagonal(diag);
}

SparseOperator adjoint(const SparseOperator &op) {
  std::vector<Entry> entries;
  entries.reserve(op.nonzeros());
  for (const auto &e : op.entries())
    entries.push_back({e.col, e.row, std::conj(e.value)});
  return SparseOperator(op.dim(), std::move(entries), 0.0);
}

SparseOperator multiply(const SparseOperator &a, const SparseOperator &b,
                        double prune_tol) {
  require_same_dim(a, b, "multiply");
  const auto offsets = row_offsets(b);
  const auto &eb = b.entries();

  // Sparse accumulator over one output row at a time.
  std::vector<Complex> acc(a.dim());
  std::vector<char> touched(a.dim(), 0);
  std::vector<std::size_t> cols;
  std::vector<Entry> out;

  const auto &ea = a.entries();
  std::size_t i = 0;
  while (i < ea.size()) {
    const auto row = ea[i].row;
    for (; i < ea.size() && ea[i].row == row; ++i) {
      const auto k = ea[i].col;
      for (auto p = offsets[k]; p < offsets[k + 1]; ++p) {
        const auto c = eb[p].col;
        if (!touched[c]) {
          touched[c] = 1;
          cols.push_back(c);
        }
        acc[c] += ea[i].value * eb[p].value;
      }
    }
    std::sort(cols.begin(), cols.end());
    for (auto c : cols) {
      out.push_back({row, c, acc[c]});
      acc[c] = {};
      touched[c] = 0;
    }
    cols.clear();
  }
  return SparseOperator(a.dim(), std::move(out), prune_tol);
}

SparseOperator add(const SparseOperator &a, const SparseOperator &b,
                   double prune_tol) {
  require_same_dim(a, b, "add");
  return linear_combination(a, b, 1.0, prune_tol);
}

SparseOperator subtract(const SparseOperator &a, const SparseOperator &b,
                        double prune_tol) {
  require_same_dim(a, b, "subtract");
  return linear_combination(a, b, -1.0, prune_tol);
}

SparseOperator scale(const SparseOperator &a, Complex c, double prune_tol) {
  std::vector<Entry> entries;
  entries.reserve(a.nonzeros());
  for (const auto &e : a.entries())
    entries.push_back({e.row, e.col, c * e.value});
  return SparseOperator(a.dim(), std::move(entries), prune_tol);
}

SparseOperator commutator(const SparseOperator &a, const SparseOperator &b,
                          double prune_tol) {
  require_same_dim(a, b, "commutator");
  return linear_combination(multiply(a, b, 0.0), multiply(b, a, 0.0), -1.0,
                            prune_tol);
}

double frobenius_norm(const SparseOperator &op) {
  double sum = 0.0;
  for (const auto &e : op.entries())
    sum += std::norm(e.value);
  return std::sqrt(sum);
}

double max_abs_entry(const SparseOperator &op) {
  double best = 0.0;
  for (const auto &e : op.entries())
    best = std::max(best, std::abs(e.value));
  return best;
}

double max_abs_difference(const SparseOperator &a, const SparseOperator &b) {
  require_same_dim(a, b, "max_abs_difference");
  return max_abs_entry(linear_combination(a, b, -1.0, 0.0));
}

double hermiticity_defect(const SparseOperator &op) {
  return max_abs_difference(op, adjoint(op));
}

double off_block_magnitude(const FockBasis &basis, const SparseOperator &op) {
  if (op.dim() != basis.size())
    throw std::invalid_argument("off_block_magnitude: operator dimension " +
                                std::to_string(op.dim()) +
                                " does not match basis size " +
                                std::to_string(basis.size()));
  double best = 0.0;
  for (const auto &e : op.entries())
    if (basis[e.row].total() != basis[e.col].total())
      best = std::max(best, std::abs(e.value));
  return best;
}

DenseMatrix dense_restriction(const SparseOperator &op, PositionRange range) {
  if (range.end > op.dim() || range.begin > range.end)
    throw std::out_of_range("dense_restriction: range outside operator");
  DenseMatrix out(range.size());
  auto it = std::lower_bound(
      op.entries().begin(), op.entries().end(), range.begin,
      [](const Entry &e, std::size_t row) { return e.row < row; });
  for (; it != op.entries().end() && it->row < range.end; ++it)
    if (range.contains(it->col))
      out(it->row - range.begin, it->col - range.begin) = it->value;
  return out;
}

} // namespace schwinger
