#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qtheta {

/// Kronecker symbol (a|n), defined for all integer pairs. Agrees with the
/// Jacobi symbol for odd positive n and vanishes when gcd(a,n) > 1, so sums
/// like sum_n (-4|n) n q^{n^2} pick up exactly the coprime terms.
int kronecker(std::int64_t a, std::int64_t n);

/// floor(a/b) and ceil(a/b) for b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

/// Exact floor(sqrt(n)); -1 for negative n.
std::int64_t isqrt(std::int64_t n);

/// True when n = r^2 for some r >= 0; stores r.
bool is_square(std::int64_t n, std::int64_t& root);

/// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime(std::int64_t n);

struct Factorization {
  std::int64_t n = 1;
  std::vector<std::pair<std::int64_t, int>> factors;  // (prime, exponent), primes increasing

  int exponent_of(std::int64_t p) const;
};

/// Complete factorization by trial division on a mod-30 wheel. n >= 1;
/// n = 1 yields an empty factor list. Intended for inputs up to ~1e12.
Factorization factorize(std::int64_t n);

}  // namespace qtheta
