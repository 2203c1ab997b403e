#include "quaddiv/divisor_sums.hpp"

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <memory>
#include <string>

#include "quaddiv/parallel.hpp"

namespace quaddiv {

namespace {

struct SmallFactors {
  std::array<std::uint32_t, 16> p{};
  std::array<std::uint8_t, 16> e{};
  unsigned n = 0;
};

void factor_into(u64 v, const SpfTable& t, SmallFactors& out) {
  out.n = 0;
  while (v > 1) {
    const std::uint32_t p = t.spf(v);
    std::uint8_t e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    out.p[out.n] = p;
    out.e[out.n] = e;
    ++out.n;
  }
}

void require_table(const SpfTable& table, i64 b, i64 N) {
  const i128 need = static_cast<i128>(N) - b;
  require(need <= static_cast<i128>(table.limit()),
          "spf table limit " + std::to_string(table.limit()) + " does not cover N - b");
}

u128 f_value(const DeltaDecomposition& dec, i64 n) {
  const i128 u = static_cast<i128>(n) - dec.b;
  const i128 v = static_cast<i128>(n) - dec.c;
  return static_cast<u128>(u) * static_cast<u128>(v);
}

u64 sum_range_exact(i64 b, i64 c, i64 lo, i64 hi, const SpfTable& t) {
  u64 s = 0;
  for (i64 n = lo; n <= hi; ++n)
    s = checked_add(s, tau_of_product(static_cast<u64>(n - b), static_cast<u64>(n - c), t),
                    "tau sum");
  return s;
}

}  // namespace

u64 tau_of_product(u64 u, u64 v, const SpfTable& table) {
  require(u >= 1 && v >= 1, "tau_of_product: factors must be positive");
  require(table.covers(u) && table.covers(v), "tau_of_product: value outside spf table");
  SmallFactors fu, fv;
  factor_into(u, table, fu);
  factor_into(v, table, fv);
  u64 t = 1;
  unsigned i = 0, j = 0;
  while (i < fu.n || j < fv.n) {
    if (j == fv.n || (i < fu.n && fu.p[i] < fv.p[j])) {
      t *= fu.e[i++] + 1u;
    } else if (i == fu.n || fv.p[j] < fu.p[i]) {
      t *= fv.e[j++] + 1u;
    } else {
      t *= fu.e[i++] + fv.e[j++] + 1u;
    }
  }
  return t;
}

u64 tau_quad_sum_exact(i64 b, i64 c, i64 N, const SpfTable& table, unsigned threads) {
  const auto dec = decompose_delta(b, c);
  if (N < dec.c_star) return 0;
  require_table(table, b, N);
  return parallel_sum(static_cast<u64>(dec.c_star), static_cast<u64>(N), threads,
                      [&](u64 lo, u64 hi) {
                        return sum_range_exact(b, c, static_cast<i64>(lo),
                                               static_cast<i64>(hi), table);
                      });
}

u64 tau_quad_sum_exact(i64 b, i64 c, i64 N, unsigned threads) {
  const auto dec = decompose_delta(b, c);
  if (N < dec.c_star) return 0;
  const SpfTable table(static_cast<u64>(checked_sub<i64>(N, b, "N - b")));
  return tau_quad_sum_exact(b, c, N, table, threads);
}

u64 tau_quad_sum_hyperbola(const DeltaDecomposition& dec, i64 N) {
  if (N < dec.c_star) return 0;
  const u64 X = static_cast<u64>(isqrt(f_value(dec, N)));
  RootSolver solver(dec);
  u64 pairs = 0;
  for (u64 d = 1; d <= X; ++d) {
    // f is increasing on n >= c*, and d^2 <= f(n) iff n - shift >= ceil(sqrt(d^2 + delta)).
    const u128 need = ceil_isqrt(static_cast<u128>(d) * d + dec.delta);
    const i64 from = std::max<i64>(dec.c_star, static_cast<i64>(dec.shift + static_cast<i128>(need)));
    if (from > N) continue;
    const RootSet roots = solver.roots_mod(d);
    pairs = checked_add(pairs,
                        count_roots_in_range(static_cast<u64>(N), roots) -
                            count_roots_in_range(static_cast<u64>(from - 1), roots),
                        "hyperbola sum");
  }
  u64 squares = 0;
  for (i64 n = dec.c_star; n <= N; ++n)
    if (is_perfect_square(f_value(dec, n))) ++squares;
  return checked_sub(checked_mul<u64>(2, pairs, "hyperbola sum"), squares, "hyperbola sum");
}

u64 TauPrefix::at(i64 N) const {
  if (N < first) return 0;
  require(N <= last(), "TauPrefix: N beyond computed range");
  return sums[static_cast<std::size_t>(N - first)];
}

TauPrefix tau_quad_prefix_exact(i64 b, i64 c, i64 n_max, const SpfTable* table) {
  const auto dec = decompose_delta(b, c);
  TauPrefix out;
  out.first = dec.c_star - 1;
  out.sums.push_back(0);
  if (n_max < dec.c_star) return out;
  std::unique_ptr<SpfTable> owned;
  if (table == nullptr || !table->covers(static_cast<u64>(n_max - b))) {
    owned = std::make_unique<SpfTable>(static_cast<u64>(checked_sub<i64>(n_max, b, "N - b")));
    table = owned.get();
  }
  out.sums.reserve(static_cast<std::size_t>(n_max - out.first + 1));
  u64 s = 0;
  for (i64 n = dec.c_star; n <= n_max; ++n) {
    s = checked_add(s, tau_of_product(static_cast<u64>(n - b), static_cast<u64>(n - c), *table),
                    "tau prefix");
    out.sums.push_back(s);
  }
  return out;
}

TauPrefix tau_quad_prefix_hyperbola(const DeltaDecomposition& dec, i64 n_max) {
  TauPrefix out;
  out.first = dec.c_star - 1;
  out.sums.push_back(0);
  if (n_max < dec.c_star) return out;
  const std::size_t span = static_cast<std::size_t>(n_max - dec.c_star + 1);
  // delta[i] accumulates the contribution of n = c* + i.
  std::vector<i64> delta(span, 0);
  const u64 X = static_cast<u64>(isqrt(f_value(dec, n_max)));
  RootSolver solver(dec);
  for (u64 d = 1; d <= X; ++d) {
    const u128 need = ceil_isqrt(static_cast<u128>(d) * d + dec.delta);
    const i64 from = std::max<i64>(dec.c_star, static_cast<i64>(dec.shift + static_cast<i128>(need)));
    if (from > n_max) continue;
    const RootSet roots = solver.roots_mod(d);
    const i64 dd = static_cast<i64>(d);
    for (u64 r : roots.roots) {
      // smallest n >= from with n = r (mod d)
      i64 n = from + ((static_cast<i64>(r) - from) % dd + dd) % dd;
      for (; n <= n_max; n += dd) delta[static_cast<std::size_t>(n - dec.c_star)] += 2;
    }
  }
  for (i64 n = dec.c_star; n <= n_max; ++n)
    if (is_perfect_square(f_value(dec, n))) delta[static_cast<std::size_t>(n - dec.c_star)] -= 1;
  out.sums.reserve(span + 1);
  u64 s = 0;
  for (i64 v : delta) {
    s = checked_add(s, static_cast<u64>(v), "hyperbola prefix");
    out.sums.push_back(s);
  }
  return out;
}

ScanTable asymptotic_scan(i64 b, i64 c, const std::vector<i64>& grid, unsigned threads) {
  require(!grid.empty(), "asymptotic_scan: grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    require(grid[i] >= 2, "asymptotic_scan: grid values must be >= 2");
    if (i > 0) require(grid[i - 1] < grid[i], "asymptotic_scan: grid must be strictly increasing");
  }
  const auto dec = decompose_delta(b, c);
  ScanTable table;
  table.b = b;
  table.c = c;
  const i64 n_max = grid.back();
  std::unique_ptr<SpfTable> spf;
  if (n_max >= dec.c_star)
    spf = std::make_unique<SpfTable>(static_cast<u64>(checked_sub<i64>(n_max, b, "N - b")));

  u64 running = 0;
  i64 done = dec.c_star - 1;  // sum covers n in [c*, done]
  for (i64 N : grid) {
    if (N > done && N >= dec.c_star) {
      const i64 lo = std::max(done + 1, dec.c_star);
      running = checked_add(running,
                            parallel_sum(static_cast<u64>(lo), static_cast<u64>(N), threads,
                                         [&](u64 l, u64 h) {
                                           return sum_range_exact(b, c, static_cast<i64>(l),
                                                                  static_cast<i64>(h), *spf);
                                         }),
                            "scan");
      done = N;
    }
    const double ln = std::log(static_cast<double>(N));
    table.rows.push_back({N, running, static_cast<double>(running) / (static_cast<double>(N) * ln * ln)});
  }
  return table;
}

std::vector<double> least_squares(const std::vector<std::vector<double>>& columns,
                                  const std::vector<double>& y) {
  const std::size_t k = columns.size();
  require(k >= 1, "least_squares: no columns");
  const std::size_t m = y.size();
  require(m >= k, "least_squares: fewer rows than unknowns");
  Eigen::MatrixXd A(m, k);
  Eigen::VectorXd rhs(m);
  std::vector<double> scale(k, 1.0);
  for (std::size_t j = 0; j < k; ++j) {
    require(columns[j].size() == m, "least_squares: ragged columns");
    double mx = 0.0;
    for (double v : columns[j]) mx = std::max(mx, std::fabs(v));
    scale[j] = mx > 0.0 ? mx : 1.0;
    for (std::size_t i = 0; i < m; ++i) A(i, j) = columns[j][i] / scale[j];
  }
  for (std::size_t i = 0; i < m; ++i) rhs(i) = y[i];
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  qr.setThreshold(1e-10);
  require(static_cast<std::size_t>(qr.rank()) == k,
          "least_squares: singular normal equations (rank-deficient rows)");
  Eigen::VectorXd sol = qr.solve(rhs);
  std::vector<double> out(k);
  for (std::size_t j = 0; j < k; ++j) out[j] = sol(j) / scale[j];
  return out;
}

LeadingFit fit_leading_terms(const std::vector<double>& ns, const std::vector<double>& values) {
  require(ns.size() == values.size(), "fit: N and S lengths differ");
  require(ns.size() >= 3, "fit: need at least 3 rows");
  std::vector<std::vector<double>> cols(3);
  for (double n : ns) {
    require(n > 1.0, "fit: N must exceed 1");
    const double ln = std::log(n);
    cols[0].push_back(n * ln * ln);
    cols[1].push_back(n * ln);
    cols[2].push_back(n);
  }
  const auto coef = least_squares(cols, values);
  return LeadingFit{coef[0], coef[1], coef[2]};
}

LeadingFit fit_leading_coefficient(ScanTable& scan) {
  std::vector<double> ns, values;
  for (const auto& row : scan.rows) {
    ns.push_back(static_cast<double>(row.N));
    values.push_back(static_cast<double>(row.exact));
  }
  scan.fit = fit_leading_terms(ns, values);
  return *scan.fit;
}

}  // namespace quaddiv
