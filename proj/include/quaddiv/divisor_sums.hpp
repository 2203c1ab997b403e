#pragma once

#include <optional>
#include <vector>

#include "quaddiv/arith.hpp"
#include "quaddiv/quadroots.hpp"

namespace quaddiv {

/// tau(u * v) from the factorizations of u and v, both covered by the table.
u64 tau_of_product(u64 u, u64 v, const SpfTable& table);

/// S(N) = sum_{c* <= n <= N} tau((n - b)(n - c)), each term factorized via the
/// table (which must cover N - b). Returns 0 when N < c*.
u64 tau_quad_sum_exact(i64 b, i64 c, i64 N, const SpfTable& table, unsigned threads = 1);
u64 tau_quad_sum_exact(i64 b, i64 c, i64 N, unsigned threads = 1);

/// S(N) by the hyperbola method: twice the number of pairs (d, n) with
/// d | f(n) and d^2 <= f(n), minus the number of square values f(n).
u64 tau_quad_sum_hyperbola(const DeltaDecomposition& dec, i64 N);

/// S(N) for every N in [c* - 1, n_max]; sums[i] = S(first + i).
struct TauPrefix {
  i64 first = 0;
  std::vector<u64> sums;

  u64 at(i64 N) const;
  i64 last() const { return first + static_cast<i64>(sums.size()) - 1; }
};

TauPrefix tau_quad_prefix_exact(i64 b, i64 c, i64 n_max, const SpfTable* table = nullptr);

/// Hyperbola sweep: walks every root progression of every d <= sqrt(f(n_max)).
TauPrefix tau_quad_prefix_hyperbola(const DeltaDecomposition& dec, i64 n_max);

struct ScanRow {
  i64 N = 0;
  u64 exact = 0;
  double ratio = 0.0;  // S(N) / (N ln^2 N)
};

/// Model S(N) = a N ln^2 N + b2 N ln N + c3 N.
struct LeadingFit {
  double a = 0.0;
  double b2 = 0.0;
  double c3 = 0.0;
};

struct ScanTable {
  i64 b = 0;
  i64 c = 0;
  std::vector<ScanRow> rows;
  std::optional<LeadingFit> fit;
};

ScanTable asymptotic_scan(i64 b, i64 c, const std::vector<i64>& grid, unsigned threads = 1);

/// Least-squares fit of the model to arbitrary (N, S) pairs.
LeadingFit fit_leading_terms(const std::vector<double>& ns, const std::vector<double>& values);

/// Least-squares fit over the table rows; stores and returns the fit.
LeadingFit fit_leading_coefficient(ScanTable& scan);

/// Least squares y ~ sum_j coef_j * columns[j]; rejects rank-deficient systems.
std::vector<double> least_squares(const std::vector<std::vector<double>>& columns,
                                  const std::vector<double>& y);

}  // namespace quaddiv
