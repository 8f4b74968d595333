#include "qtheta/theta.hpp"

#include <stdexcept>
#include <vector>

#include "qtheta/arith.hpp"

namespace qtheta {

namespace {

void require_positive(std::int64_t k, const char* what) {
  if (k < 1) throw std::invalid_argument(std::string(what) + ": k must be >= 1");
}

// Generalized pentagonal exponents j(3j-1)/2 with sign (-1)^j, j != 0.
struct PentTerm {
  std::int64_t degree;
  coeff_t sign;
};

std::vector<PentTerm> pentagonal_terms(std::int64_t scale, std::int64_t N) {
  std::vector<PentTerm> out;
  for (std::int64_t j = 1;; ++j) {
    const coeff_t sign = (j & 1) ? -1 : 1;
    const std::int64_t g1 = scale * (j * (3 * j - 1) / 2);
    if (g1 > N) break;
    out.push_back({g1, sign});
    const std::int64_t g2 = scale * (j * (3 * j + 1) / 2);
    if (g2 <= N) out.push_back({g2, sign});
  }
  return out;
}

}  // namespace

QSeries euler_E(std::int64_t k, std::int64_t N) {
  require_positive(k, "euler_E");
  QSeries out = QSeries::one(N);
  for (const PentTerm& t : pentagonal_terms(k, N)) out.at(t.degree) = t.sign;
  return out;
}

QSeries inverse_euler_E(std::int64_t k, std::int64_t N) {
  require_positive(k, "inverse_euler_E");
  if (k > 1) return dilate(inverse_euler_E(1, N / k), k, N);
  const std::vector<PentTerm> pent = pentagonal_terms(1, N);
  QSeries out = QSeries::one(N);
  for (std::int64_t n = 1; n <= N; ++n) {
    coeff_t acc = 0;
    for (const PentTerm& t : pent) {
      if (t.degree > n) break;
      acc = checked_sub(acc, checked_mul(t.sign, out.at(n - t.degree)));
    }
    out.at(n) = acc;
  }
  return out;
}

QSeries euler_neg(std::int64_t k, std::int64_t N) {
  require_positive(k, "euler_neg");
  return dilate(alternate(euler_E(1, N / k)), k, N);
}

QSeries theta_f(int sign_a, std::int64_t r, int sign_b, std::int64_t s, std::int64_t N) {
  if (sign_a != 1 && sign_a != -1) throw std::invalid_argument("theta_f: sign_a must be +-1");
  if (sign_b != 1 && sign_b != -1) throw std::invalid_argument("theta_f: sign_b must be +-1");
  if (r < 1 || s < 0 || r + s < 1) {
    throw std::invalid_argument("theta_f: need r >= 1 and s >= 0");
  }
  QSeries out(N);
  // exponent(n) = r n(n+1)/2 + s n(n-1)/2, monotone in both directions.
  auto emit = [&](std::int64_t n) -> bool {
    const std::int64_t tri_up = n * (n + 1) / 2;
    const std::int64_t tri_down = n * (n - 1) / 2;
    const std::int64_t e = r * tri_up + s * tri_down;
    if (e > N) return false;
    coeff_t sign = 1;
    if (sign_a == -1 && (tri_up & 1)) sign = -sign;
    if (sign_b == -1 && (tri_down & 1)) sign = -sign;
    out.at(e) = checked_add(out.at(e), sign);
    return true;
  };
  for (std::int64_t n = 0; emit(n); ++n) {
  }
  for (std::int64_t n = -1; emit(n); --n) {
  }
  return out;
}

QSeries eta_quotient(std::initializer_list<std::pair<std::int64_t, int>> factors,
                     std::int64_t N) {
  QSeries out = QSeries::one(N);
  for (const auto& [k, e] : factors) {
    if (e == 0) continue;
    const QSeries base = (e > 0) ? euler_E(k, N) : inverse_euler_E(k, N);
    out = mul(out, pow(base, e > 0 ? e : -e));
  }
  return out;
}

QSeries classical(ThetaKind kind, std::int64_t k, std::int64_t N) {
  require_positive(k, "classical");
  if (k > 1) return dilate(classical(kind, 1, N / k), k, N);
  switch (kind) {
    case ThetaKind::Euler:
      return pochhammer(1, +1, 1, N);
    case ThetaKind::Phi:
      return eta_quotient({{2, 5}, {4, -2}, {1, -2}}, N);
    case ThetaKind::PhiNeg:
      return eta_quotient({{1, 2}, {2, -1}}, N);
    case ThetaKind::Psi:
      return eta_quotient({{2, 2}, {1, -1}}, N);
    case ThetaKind::PsiNeg:
      return eta_quotient({{4, 1}, {1, 1}, {2, -1}}, N);
    case ThetaKind::F12:
      return eta_quotient({{3, 2}, {2, 1}, {6, -1}, {1, -1}}, N);
    case ThetaKind::F15:
      return eta_quotient({{12, 1}, {3, 1}, {2, 2}, {6, -1}, {4, -1}, {1, -1}}, N);
    case ThetaKind::BorweinA: {
      // a(q) = phi(q) phi(q^3) + 4 q psi(q^2) psi(q^6)
      QSeries out = mul(classical(ThetaKind::Phi, 1, N), classical(ThetaKind::Phi, 3, N));
      if (N >= 1) {
        QSeries cross = mul(psi(2, N - 1), psi(6, N - 1));
        out = add(out, shift(scale(4, cross), 1));
      }
      return out;
    }
    case ThetaKind::BorweinC:
      return scale(3, eta_quotient({{3, 3}, {1, -1}}, N));
  }
  throw std::logic_error("classical: unknown kind");
}

QSeries theta_sum(ThetaKind kind, std::int64_t k, std::int64_t N) {
  require_positive(k, "theta_sum");
  switch (kind) {
    case ThetaKind::Euler:
      return euler_E(k, N);
    case ThetaKind::Phi:
      return theta_f(+1, k, +1, k, N);
    case ThetaKind::PhiNeg:
      return theta_f(-1, k, -1, k, N);
    case ThetaKind::Psi:
      return theta_f(+1, k, +1, 3 * k, N);
    case ThetaKind::PsiNeg:
      return theta_f(-1, k, -1, 3 * k, N);
    case ThetaKind::F12:
      return theta_f(+1, k, +1, 2 * k, N);
    case ThetaKind::F15:
      return theta_f(+1, k, +1, 5 * k, N);
    case ThetaKind::BorweinA:
      return borwein_a(k, N);
    case ThetaKind::BorweinC:
      return borwein_c(k, N);
  }
  throw std::logic_error("theta_sum: unknown kind");
}

namespace {

QSeries hexagonal_sum(std::int64_t N, bool affine) {
  // x^2 + xy + y^2 (+ x + y when affine), enumerated exactly: for fixed y,
  // 4*value = (2x + lin)^2 + rest, so the x-window comes from the integer
  // square root of 4N - rest.
  QSeries out(N);
  const std::int64_t ybound = isqrt((4 * N + 2) / 3) + 2;
  for (std::int64_t y = -ybound; y <= ybound; ++y) {
    const std::int64_t lin = affine ? y + 1 : y;
    const std::int64_t rest = affine ? 3 * y * y + 2 * y - 1 : 3 * y * y;
    const std::int64_t disc = 4 * N - rest;
    if (disc < 0) continue;
    const std::int64_t s = isqrt(disc);
    for (std::int64_t x = ceil_div(-lin - s, 2); x <= floor_div(-lin + s, 2); ++x) {
      const std::int64_t v = x * x + x * y + y * y + (affine ? x + y : 0);
      out.at(v) = checked_add(out.at(v), 1);
    }
  }
  return out;
}

}  // namespace

QSeries borwein_a(std::int64_t k, std::int64_t N) {
  require_positive(k, "borwein_a");
  if (k > 1) return dilate(borwein_a(1, N / k), k, N);
  return hexagonal_sum(N, false);
}

QSeries borwein_c(std::int64_t k, std::int64_t N) {
  require_positive(k, "borwein_c");
  if (k > 1) return dilate(borwein_c(1, N / k), k, N);
  return hexagonal_sum(N, true);
}

QSeries char_square_series(SquareChar id, std::int64_t N) {
  QSeries out(N);
  for (std::int64_t n = 1; n * n <= N; ++n) {
    int w = 0;
    switch (id) {
      case SquareChar::DMinus4:
        w = kronecker(-4, n);
        break;
      case SquareChar::DMinus2:
        w = kronecker(-2, n);
        break;
      case SquareChar::DMinus12:
        w = kronecker(-12, n);
        break;
      case SquareChar::DMinus3Alt:
        w = ((n & 1) ? 1 : -1) * kronecker(-3, n);
        break;
    }
    if (w != 0) out.at(n * n) = checked_mul(w, n);
  }
  return out;
}

QSeries phi(std::int64_t k, std::int64_t N) { return classical(ThetaKind::Phi, k, N); }
QSeries phi_neg(std::int64_t k, std::int64_t N) { return classical(ThetaKind::PhiNeg, k, N); }
QSeries psi(std::int64_t k, std::int64_t N) { return classical(ThetaKind::Psi, k, N); }
QSeries psi_neg(std::int64_t k, std::int64_t N) { return classical(ThetaKind::PsiNeg, k, N); }

}  // namespace qtheta
