#include "quaddiv/dirichlet.hpp"

#include <string>

namespace quaddiv {

namespace {

void require_even_t(unsigned t) { require(t % 2 == 0, "t must be even"); }

void require_divisor(u64 omega, u64 d) {
  require(omega >= 1 && omega % 2 == 1, "omega must be odd and positive");
  require(d >= 1 && omega % d == 0, "d must divide omega");
}

std::vector<u64> distinct_primes(u64 n) {
  std::vector<u64> out;
  for (const auto& pp : factorize(n).factors()) out.push_back(pp.p);
  return out;
}

// #{1 <= m <= z : gcd(m, q) = 1} by inclusion-exclusion over the primes of q.
u64 coprime_count(u64 z, const std::vector<u64>& primes) {
  i64 total = 0;
  const std::size_t k = primes.size();
  for (u64 mask = 0; mask < (u64{1} << k); ++mask) {
    u64 prod = 1;
    int sign = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (u64{1} << i)) {
        prod *= primes[i];
        sign = -sign;
      }
    }
    total += sign * static_cast<i64>(z / prod);
  }
  return static_cast<u64>(total);
}

std::vector<std::uint8_t> squarefree_flags(u64 n) {
  std::vector<std::uint8_t> sf(n + 1, 1);
  for (u64 k = 2; k * k <= n; ++k)
    for (u64 j = k * k; j <= n; j += k * k) sf[j] = 0;
  return sf;
}

void check_length(std::size_t n) {
  if (n > CoefficientSeries::kMaxLength)
    fail(ErrorKind::Resource, "coefficient series longer than " +
                                  std::to_string(CoefficientSeries::kMaxLength));
}

}  // namespace

u64 a_alpha(unsigned alpha, unsigned t) {
  require_even_t(t);
  if (alpha >= t + 2) return ipow(2, t / 2 + 1);
  if (alpha % 2 == 1) return 0;
  return ipow(2, alpha / 2);
}

int chi_d(u64 l, u64 omega, u64 d) {
  require_divisor(omega, d);
  require(l >= 1, "chi_d: l must be >= 1");
  return gcd(l, 2 * (omega / d)) == 1 ? 1 : 0;
}

u64 xi_d(u64 n, u64 omega, u64 d) {
  require_divisor(omega, d);
  require(n >= 1, "xi_d: n must be >= 1");
  u64 total = 0;
  for (u64 l : divisors(n))
    if (mu_squared(l) == 1) total += static_cast<u64>(chi_d(n / l, omega, d));
  return total;
}

u64 xi_partial_sum(u64 Y, u64 omega, u64 d) {
  require_divisor(omega, d);
  if (Y == 0) return 0;
  const auto primes = distinct_primes(2 * (omega / d));
  const auto sf = squarefree_flags(Y);
  u64 total = 0;
  for (u64 l = 1; l <= Y; ++l)
    if (sf[l]) total = checked_add(total, coprime_count(Y / l, primes), "xi partial sum");
  return total;
}

// ---------------------------------------------------------------------------
// Series

CoefficientSeries::CoefficientSeries(std::vector<i64> coeffs) : coeffs_(std::move(coeffs)) {
  require(!coeffs_.empty(), "coefficient series must have length >= 1");
  check_length(coeffs_.size());
}

CoefficientSeries CoefficientSeries::identity(std::size_t length) {
  require(length >= 1, "coefficient series must have length >= 1");
  check_length(length);
  std::vector<i64> c(length, 0);
  c[0] = 1;
  return CoefficientSeries(std::move(c));
}

CoefficientSeries CoefficientSeries::ones(std::size_t length) {
  require(length >= 1, "coefficient series must have length >= 1");
  check_length(length);
  return CoefficientSeries(std::vector<i64>(length, 1));
}

CoefficientSeries CoefficientSeries::mu_squared(std::size_t length) {
  require(length >= 1, "coefficient series must have length >= 1");
  check_length(length);
  auto sf = squarefree_flags(length);
  std::vector<i64> c(length);
  for (std::size_t n = 1; n <= length; ++n) c[n - 1] = sf[n];
  return CoefficientSeries(std::move(c));
}

CoefficientSeries CoefficientSeries::principal_character(std::size_t length, u64 modulus) {
  require(length >= 1, "coefficient series must have length >= 1");
  require(modulus >= 1, "character modulus must be >= 1");
  check_length(length);
  std::vector<i64> c(length, 1);
  for (u64 p : distinct_primes(modulus))
    for (u64 j = p; j <= length; j += p) c[j - 1] = 0;
  return CoefficientSeries(std::move(c));
}

CoefficientSeries convolve(const CoefficientSeries& a, const CoefficientSeries& b) {
  require(a.length() == b.length(), "convolve: series lengths differ");
  const std::size_t n = a.length();
  std::vector<i64> out(n, 0);
  for (std::size_t l = 1; l <= n; ++l) {
    const i64 al = a(l);
    if (al == 0) continue;
    for (std::size_t m = 1; l * m <= n; ++m) {
      const i64 bm = b(m);
      if (bm == 0) continue;
      out[l * m - 1] = checked_add(out[l * m - 1], checked_mul(al, bm, "convolve"), "convolve");
    }
  }
  return CoefficientSeries(std::move(out));
}

// ---------------------------------------------------------------------------
// Identity

IdentityReport verify_identity(u64 X, const DeltaDecomposition& dec, const SpfTable* table) {
  require(X >= 1, "verify_identity: X must be >= 1");
  IdentityReport rep;
  rep.X = X;
  rep.lhs = rho_partial_sum(X, dec, table);
  u64 rhs = 0;
  // d outermost, then alpha, then h.
  for (u64 d : divisors(dec.omega_factors)) {
    const u64 dd = d * d;
    if (dd > X) break;
    for (unsigned alpha = 0; (u128{dd} << alpha) <= X; ++alpha) {
      const u64 a = a_alpha(alpha, dec.t);
      if (a == 0) continue;
      const u64 y = X / (dd << alpha);
      const u64 term = checked_mul(checked_mul(a, d), xi_partial_sum(y, dec.omega, d));
      rhs = checked_add(rhs, term, "identity rhs");
    }
  }
  rep.rhs = rhs;
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

IdentitySweep verify_identity_upto(u64 max_x, const DeltaDecomposition& dec,
                                   const SpfTable* table) {
  require(max_x >= 1, "verify_identity_upto: X must be >= 1");
  check_length(max_x);
  const auto rho_vals = rho_values(max_x, dec, table);

  struct DivisorPart {
    u64 d;
    std::vector<u64> xi_prefix;  // xi_prefix[y] = sum_{h <= y} xi_d(h)
  };
  std::vector<DivisorPart> parts;
  for (u64 d : divisors(dec.omega_factors)) {
    if (d * d > max_x) break;
    const std::size_t len = max_x / (d * d);
    auto xi = convolve(CoefficientSeries::mu_squared(len),
                       CoefficientSeries::principal_character(len, 2 * (dec.omega / d)));
    DivisorPart part{d, std::vector<u64>(len + 1, 0)};
    for (std::size_t h = 1; h <= len; ++h)
      part.xi_prefix[h] = part.xi_prefix[h - 1] + static_cast<u64>(xi(h));
    parts.push_back(std::move(part));
  }

  IdentitySweep sweep;
  u64 lhs = 0;
  for (u64 X = 1; X <= max_x; ++X) {
    lhs += rho_vals[X - 1];
    u64 rhs = 0;
    for (const auto& part : parts) {
      const u64 dd = part.d * part.d;
      for (unsigned alpha = 0; (u128{dd} << alpha) <= X; ++alpha) {
        const u64 a = a_alpha(alpha, dec.t);
        if (a != 0) rhs += a * part.d * part.xi_prefix[X / (dd << alpha)];
      }
    }
    ++sweep.checked;
    if (lhs != rhs) {
      if (sweep.mismatches == 0) sweep.first_mismatch = X;
      ++sweep.mismatches;
    }
  }
  return sweep;
}

// ---------------------------------------------------------------------------
// Euler factors at s = 1

Rational euler_factor_at_one(u64 p, const DeltaDecomposition& dec) {
  require(is_prime(p), "euler_factor_at_one: p must be prime");
  // rho(p^alpha) is constant for alpha >= stable.
  unsigned stable = 1;
  if (p == 2) {
    stable = dec.t + 3;
  } else if (unsigned half = dec.half_exponent(p); half > 0) {
    stable = 2 * half + 1;
  }
  Rational sum(0);
  i128 pk = 1;
  for (unsigned alpha = 0; alpha < stable; ++alpha) {
    sum += Rational(static_cast<i128>(rho_prime_power(p, alpha, dec)), pk);
    pk = checked_mul<i128>(pk, p, "euler factor");
  }
  // sum_{alpha >= stable} K p^{-alpha} = K p^{-stable} / (1 - 1/p)
  const i128 K = static_cast<i128>(rho_prime_power(p, stable, dec));
  sum += Rational(K, pk) * Rational(static_cast<i128>(p), static_cast<i128>(p) - 1);
  return sum;
}

Rational g_at_one(const DeltaDecomposition& dec) {
  auto local = [&](u64 p) {
    const i128 q = static_cast<i128>(p);
    return euler_factor_at_one(p, dec) * Rational(q - 1, q + 1);
  };
  Rational g = local(2);
  for (const auto& pp : dec.omega_factors.factors()) g *= local(pp.p);
  return g;
}

Rational k_at_one(unsigned t) {
  require_even_t(t);
  if (t > 120) fail(ErrorKind::Overflow, "k_at_one: t too large for exact 128-bit evaluation");
  Rational sum(0);
  for (unsigned alpha = 0; alpha < t + 2; ++alpha)
    sum += Rational(static_cast<i128>(a_alpha(alpha, t)), i128{1} << alpha);
  // a_alpha = 2^{t'+1} for alpha >= t+2; geometric tail sums to 2^{t'+1} / 2^{t+1}.
  sum += Rational(static_cast<i128>(a_alpha(t + 2, t)), i128{1} << (t + 1));
  return sum;
}

Rational k_partial_at_one(unsigned t, u64 X) {
  require_even_t(t);
  Rational sum(0);
  for (unsigned alpha = 0; alpha < 64 && (u64{1} << alpha) <= X; ++alpha)
    sum += Rational(static_cast<i128>(a_alpha(alpha, t)), i128{1} << alpha);
  return sum;
}

}  // namespace quaddiv
