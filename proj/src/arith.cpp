#include "quaddiv/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <new>
#include <random>
#include <string>

namespace quaddiv {

// ---------------------------------------------------------------------------
// Factorization

Factorization::Factorization(std::vector<PrimePower> factors)
    : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    require(factors_[i].p >= 2, "factorization: prime below 2");
    require(factors_[i].e >= 1, "factorization: zero exponent");
    if (i > 0) require(factors_[i - 1].p < factors_[i].p, "factorization: primes not increasing");
  }
}

unsigned Factorization::exponent_of(u64 p) const {
  for (const auto& pp : factors_) {
    if (pp.p == p) return pp.e;
    if (pp.p > p) break;
  }
  return 0;
}

u64 Factorization::value() const {
  u64 v = 1;
  for (const auto& pp : factors_) v = checked_mul(v, ipow(pp.p, pp.e), "factorization value");
  return v;
}

Factorization Factorization::product(const Factorization& a, const Factorization& b) {
  std::vector<PrimePower> out;
  out.reserve(a.size() + b.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->p < ib->p)) {
      out.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->p < ia->p) {
      out.push_back(*ib++);
    } else {
      out.push_back({ia->p, ia->e + ib->e});
      ++ia;
      ++ib;
    }
  }
  Factorization f;
  f.factors_ = std::move(out);
  return f;
}

// ---------------------------------------------------------------------------
// SPF table

SpfTable::SpfTable(u64 limit) : limit_(limit) {
  require(limit >= 2, "spf table limit must be >= 2");
  if (limit > kMaxLimit) fail(ErrorKind::Resource, "spf table limit exceeds 32-bit entry range");
  try {
    spf_.assign(limit + 1, 0);
  } catch (const std::bad_alloc&) {
    fail(ErrorKind::Resource, "cannot allocate spf table of limit " + std::to_string(limit));
  }
  for (u64 i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    if (i > limit / i) continue;
    for (u64 j = i * i; j <= limit; j += i)
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
  }
}

SpfTable::SpfTable(u64 limit, std::vector<std::uint32_t> entries)
    : limit_(limit), spf_(std::move(entries)) {
  require(limit >= 2, "spf table limit must be >= 2");
  require(spf_.size() == limit + 1, "spf table entry count does not match limit");
  // Each entry: a self-marked divisor of n, at most sqrt(n) unless n is marked prime.
  for (u64 n = 2; n <= limit; ++n) {
    const u64 p = spf_[n];
    require(p >= 2 && p <= n && n % p == 0 && spf_[p] == p && (p == n || p * p <= n),
            "spf table corrupt at n=" + std::to_string(n));
  }
}

SpfTable build_spf_table(u64 limit) { return SpfTable(limit); }

// ---------------------------------------------------------------------------
// Primality and splitting

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

u64 pollard_brent(u64 n, std::mt19937_64& rng) {
  if (n % 2 == 0) return 2;
  std::uniform_int_distribution<u64> dist(1, n - 1);
  while (true) {
    u64 y = dist(rng), c = dist(rng), m = 128;
    u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
    auto f = [&](u64 v) { return static_cast<u64>((static_cast<u128>(mulmod(v, v, n)) + c) % n); };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(u64 n, std::mt19937_64& rng, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_brent(n, rng);
  split_into(d, rng, out);
  split_into(n / d, rng, out);
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set for all n < 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(u64 n, const SpfTable* table) {
  require(n >= 1, "factorize: n must be >= 1");
  std::vector<PrimePower> out;
  if (table != nullptr && table->covers(n)) {
    while (n > 1) {
      u64 p = table->spf(n);
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.push_back({p, e});
    }
    return Factorization(std::move(out));
  }

  constexpr u64 kTrialBound = 1000;
  for (u64 p = 2; p <= kTrialBound && p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::map<u64, unsigned> rest;
    split_into(n, rng, rest);
    for (auto [p, e] : rest) out.push_back({p, e});
  }
  return Factorization(std::move(out));
}

// ---------------------------------------------------------------------------
// Divisor functions

u64 tau_of(const Factorization& f) {
  u64 t = 1;
  for (const auto& pp : f.factors()) t = checked_mul<u64>(t, pp.e + 1, "tau");
  return t;
}

u64 tau(u64 n, const SpfTable* table) { return tau_of(factorize(n, table)); }

Rational sigma(int a, const Factorization& f) {
  require(a >= -1 && a <= 1, "sigma: exponent must be -1, 0 or 1");
  if (a == 0) return Rational(static_cast<i128>(tau_of(f)));
  // sigma_1 as a product of geometric sums; sigma_{-1}(n) = sigma_1(n) / n.
  u128 s1 = 1;
  u128 n = 1;
  for (const auto& pp : f.factors()) {
    u128 term = 1, pk = 1;
    for (unsigned k = 0; k < pp.e; ++k) {
      pk = checked_mul<u128>(pk, pp.p, "sigma");
      term = checked_add<u128>(term, pk, "sigma");
    }
    s1 = checked_mul<u128>(s1, term, "sigma");
    n = checked_mul<u128>(n, pk, "sigma");
  }
  auto s = checked_cast<i128>(s1, "sigma");
  if (a == 1) return Rational(s);
  return Rational(s, checked_cast<i128>(n, "sigma"));
}

Rational sigma(int a, u64 n) {
  require(n >= 1, "sigma: n must be >= 1");
  return sigma(a, factorize(n));
}

Rational theta(int a, u64 q) {
  require(a == -1 || a == 0, "theta: exponent must be -1 or 0");
  return sigma(a, q) - Rational(1);
}

int jacobi(i64 a, u64 n) {
  require(n >= 1 && (n & 1) == 1, "jacobi: modulus must be odd and positive");
  u64 x = a >= 0 ? static_cast<u64>(a) % n
                 : (n - (static_cast<u64>(-(a + 1)) + 1) % n) % n;
  int result = 1;
  while (x != 0) {
    while ((x & 1) == 0) {
      x >>= 1;
      u64 r = n & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, n);
    if ((x & 3) == 3 && (n & 3) == 3) result = -result;
    x %= n;
  }
  return n == 1 ? result : 0;
}

int mu_squared(u64 n, const SpfTable* table) {
  require(n >= 1, "mu_squared: n must be >= 1");
  for (const auto& pp : factorize(n, table).factors())
    if (pp.e > 1) return 0;
  return 1;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& pp : f.factors()) {
    std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= pp.e; ++k) {
      pk *= pp.p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> divisors(u64 n) { return divisors(factorize(n)); }

u64 ipow(u64 p, unsigned e) {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) r = checked_mul(r, p, "power");
  return r;
}

void CompensatedSum::add(double x) {
  double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x))
    comp_ += (sum_ - t) + x;
  else
    comp_ += (x - t) + sum_;
  sum_ = t;
}

}  // namespace quaddiv
