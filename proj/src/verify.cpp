#include "schwinger/verify.hpp"

#include "schwinger/spectra.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace schwinger {

namespace {

struct BlockOutcome {
  BlockSummary summary;
  double jz_deviation = 0.0;
  double casimir_error = 0.0;
  double level_count_error = 0.0;
  double mean_square_error = 0.0;
  double standard_element_error = 0.0;
  double sum_rule_error = 0.0;
  double scale = 1.0;
  bool eigensolver_failed = false;
};

BlockOutcome analyze_one(const AngularMomentumSet &set, int n, double tol) {
  BlockOutcome out;
  const auto block = extract_block(set, n);
  const double j = block.j();
  const double hbar = set.hbar;
  const double expected_casimir = j * (j + 1.0) * hbar * hbar;
  out.summary.two_j = n;
  out.scale = std::max(1.0, expected_casimir);

  const auto reference = standard_spin_block(n, hbar);
  out.standard_element_error =
      std::max({max_abs_entry(block.jx - reference.jx),
                max_abs_entry(block.jy - reference.jy),
                max_abs_entry(block.jz - reference.jz)});

  const auto rule = sum_rule_check(n);
  out.summary.sum_rule_pass = rule.holds();
  out.sum_rule_error = double(std::llabs(rule.lhs - rule.rhs));

  SpectrumReport report;
  try {
    report = compute_spectrum(block, tol);
  } catch (const std::exception &) {
    // Non-Hermitian or non-convergent block; reported as its own check.
    out.eigensolver_failed = true;
    return out;
  }
  out.summary.casimir = report.casimir_value;
  out.summary.mean_square = mean_square_from_spectrum(report);
  out.summary.jz_spectrum = report.jz_eigenvalues;

  out.jz_deviation = report.jz_grid_deviation;
  out.casimir_error =
      std::abs(report.casimir_value - expected_casimir) + report.casimir_spread;
  out.level_count_error =
      std::abs(double(report.jz_eigenvalues.size()) - double(n + 1));
  out.mean_square_error = std::abs(out.summary.mean_square - report.casimir_value);
  return out;
}

std::vector<BlockOutcome> analyze_blocks(const AngularMomentumSet &set,
                                         double tol, unsigned threads) {
  const int count = set.basis.n_max() + 1;
  std::vector<BlockOutcome> outcomes(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (int n = next++; n < count; n = next++) {
      try {
        outcomes[std::size_t(n)] = analyze_one(set, n, tol);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
      }
    }
  };

  const unsigned workers = std::clamp(threads, 1u, unsigned(count));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back(worker);
  }
  if (failure)
    std::rethrow_exception(failure);
  return outcomes;
}

CheckResult make_check(std::string name, double residual, double threshold) {
  return {std::move(name), residual, threshold, residual <= threshold};
}

template <class Field>
double max_over(const std::vector<BlockOutcome> &outcomes, Field field) {
  double best = 0.0;
  for (const auto &o : outcomes)
    best = std::max(best, field(o));
  return best;
}

} // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult &c) { return c.pass; });
}

std::vector<std::string> VerifyReport::failed_checks() const {
  std::vector<std::string> names;
  for (const auto &c : checks)
    if (!c.pass)
      names.push_back(c.name);
  return names;
}

VerifyReport verify_set(const AngularMomentumSet &set, double tol,
                        unsigned threads) {
  const auto &basis = set.basis;
  const double hbar = set.hbar;
  VerifyReport report;
  report.n_max = basis.n_max();
  report.hbar = hbar;
  report.tol = tol;
  auto &checks = report.checks;
  const std::vector<const SparseOperator *> ops{&set.jx, &set.jy, &set.jz,
                                                &set.jtot};

  double entry_scale = 1.0, herm = 0.0, off_block = 0.0;
  for (const auto *op : ops) {
    entry_scale = std::max(entry_scale, max_abs_entry(*op));
    herm = std::max(herm, hermiticity_defect(*op));
    off_block = std::max(off_block, off_block_magnitude(basis, *op));
  }
  checks.push_back(make_check("hermiticity", herm, tol * entry_scale));
  checks.push_back(make_check("block_diagonal", off_block, tol * entry_scale));

  // [J_a, J_b] = i hbar J_c for cyclic (a, b, c).
  const Complex i_hbar{0.0, hbar};
  struct Cyclic {
    const char *name;
    const SparseOperator &a, &b, &c;
  };
  for (const auto &[name, a, b, c] :
       {Cyclic{"commutator_xy_z", set.jx, set.jy, set.jz},
        Cyclic{"commutator_yz_x", set.jy, set.jz, set.jx},
        Cyclic{"commutator_zx_y", set.jz, set.jx, set.jy}}) {
    const auto residual =
        frobenius_norm(subtract(commutator(a, b), scale(c, i_hbar)));
    checks.push_back(make_check(
        name, residual, tol * std::max(1.0, frobenius_norm(multiply(a, b)))));
  }

  const auto j2 = casimir(set);
  for (const auto &[name, op] :
       {std::pair<const char *, const SparseOperator &>{"casimir_commutes_jz", set.jz},
        {"casimir_commutes_jx", set.jx},
        {"casimir_commutes_jy", set.jy}}) {
    checks.push_back(make_check(
        name, frobenius_norm(commutator(j2, op)),
        tol * std::max(1.0, frobenius_norm(multiply(j2, op)))));
  }

  double conservation = 0.0, conservation_scale = 1.0;
  for (const auto *op : {&set.jx, &set.jy, &set.jz}) {
    conservation = std::max(conservation, frobenius_norm(commutator(*op, set.jtot)));
    conservation_scale =
        std::max(conservation_scale, frobenius_norm(multiply(*op, set.jtot)));
  }
  checks.push_back(
      make_check("jtot_conserved", conservation, tol * conservation_scale));

  const double casimir_scale = std::max(1.0, max_abs_entry(j2));
  checks.push_back(make_check("casimir_identity",
                              max_abs_entry(identity_residual(set, 1.0)),
                              tol * casimir_scale));
  checks.push_back(make_check(
      "casimir_identity_eps0",
      max_abs_difference(identity_residual(set, 0.0), scale(set.jtot, hbar)),
      tol * casimir_scale));

  // J is diagonal with hbar n/2; its distinct values are the allowed j and
  // each value hbar n/2 occurs n + 1 times.
  double jtot_deviation = 0.0;
  std::map<long long, long long> occurrences;
  for (const auto &e : set.jtot.entries())
    if (e.row != e.col)
      jtot_deviation = std::max(jtot_deviation, std::abs(e.value));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto value = set.jtot.at(k, k);
    jtot_deviation = std::max(
        jtot_deviation, std::abs(value - Complex(0.5 * hbar * basis[k].total())));
    ++occurrences[std::llround(2.0 * value.real() / hbar)];
  }
  checks.push_back(make_check("jtot_spectrum", jtot_deviation,
                              tol * std::max(1.0, 0.5 * hbar * basis.n_max())));
  double allowed_mismatch = 0.0, degeneracy_mismatch = 0.0;
  for (int n = 0; n <= basis.n_max(); ++n) {
    const auto it = occurrences.find(n);
    const long long seen = it == occurrences.end() ? 0 : it->second;
    if (seen == 0)
      allowed_mismatch += 1.0;
    degeneracy_mismatch =
        std::max(degeneracy_mismatch, double(std::llabs(seen - (n + 1))));
  }
  for (const auto &[two_j, seen] : occurrences)
    if (two_j < 0 || two_j > basis.n_max())
      allowed_mismatch += 1.0;
  checks.push_back(make_check("allowed_j_values", allowed_mismatch, 0.0));
  checks.push_back(make_check("degeneracy_2j_plus_1", degeneracy_mismatch, 0.0));

  const auto outcomes = analyze_blocks(set, tol, threads);
  auto scaled = [&](auto field) {
    double best = 0.0;
    for (const auto &o : outcomes)
      best = std::max(best, field(o) / o.scale);
    return best;
  };
  checks.push_back(make_check(
      "block_eigensolver",
      max_over(outcomes,
               [](const BlockOutcome &o) { return o.eigensolver_failed ? 1.0 : 0.0; }),
      0.0));
  checks.push_back(make_check(
      "block_jz_spectrum",
      max_over(outcomes, [](const BlockOutcome &o) { return o.jz_deviation; }),
      tol * std::max(1.0, 0.5 * hbar * basis.n_max())));
  checks.push_back(make_check(
      "block_level_count",
      max_over(outcomes, [](const BlockOutcome &o) { return o.level_count_error; }),
      0.0));
  // Reported residual is relative to max(1, j(j+1) hbar^2).
  checks.push_back(make_check(
      "block_casimir_eigenvalue",
      scaled([](const BlockOutcome &o) { return o.casimir_error; }), tol));
  checks.push_back(make_check(
      "mean_square_casimir",
      scaled([](const BlockOutcome &o) { return o.mean_square_error; }), tol));
  checks.push_back(make_check(
      "sum_rule",
      max_over(outcomes, [](const BlockOutcome &o) { return o.sum_rule_error; }),
      0.0));
  checks.push_back(make_check(
      "standard_spin_matrices",
      max_over(outcomes,
               [](const BlockOutcome &o) { return o.standard_element_error; }),
      tol * entry_scale));

  report.blocks.reserve(outcomes.size());
  for (const auto &o : outcomes)
    report.blocks.push_back(o.summary);
  return report;
}

VerifyReport run_verification(const VerifyConfig &config) {
  auto set = build_set(build_basis(config.n_max), config.hbar);
  if (config.fault)
    set = with_perturbed_entry(set, config.fault->component, config.fault->row,
                               config.fault->col, config.fault->delta);
  return verify_set(set, config.tol, config.threads);
}

} // namespace schwinger
