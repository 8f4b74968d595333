#include "qtheta/arith.hpp"

#include <stdexcept>
#include <utility>

namespace qtheta {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((unsigned __int128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(__builtin_sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(std::int64_t n, std::int64_t& root) {
  if (n < 0) return false;
  root = isqrt(n);
  return root * root == n;
}

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a & 1) == 0 && (n & 1) == 0) return 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int twos = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++twos;
  }
  if (twos & 1) {
    std::int64_t a8 = ((a % 8) + 8) % 8;
    if (a8 == 3 || a8 == 5) result = -result;
  }
  a %= n;
  if (a < 0) a += n;
  // Jacobi symbol via binary reciprocity; here n is odd and positive.
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      std::int64_t n8 = n % 8;
      if (n8 == 3 || n8 == 5) result = -result;
    }
    std::swap(a, n);
    if ((a % 4) == 3 && (n % 4) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 un = static_cast<u64>(n);
  u64 d = un - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is known to be exact for all 64-bit inputs.
  for (u64 w : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(w, d, un);
    if (x == 1 || x == un - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, un);
      if (x == un - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int Factorization::exponent_of(std::int64_t p) const {
  for (const auto& [q, v] : factors) {
    if (q == p) return v;
  }
  return 0;
}

Factorization factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  Factorization out;
  out.n = n;
  auto strip = [&](std::int64_t p) {
    if (n % p != 0) return;
    int v = 0;
    while (n % p == 0) {
      n /= p;
      ++v;
    }
    out.factors.emplace_back(p, v);
  };
  strip(2);
  strip(3);
  strip(5);
  static constexpr int steps[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  std::int64_t p = 7;
  int i = 0;
  while (p <= n / p) {
    strip(p);
    p += steps[i];
    i = (i + 1) & 7;
  }
  if (n > 1) out.factors.emplace_back(n, 1);
  return out;
}

}  // namespace qtheta
