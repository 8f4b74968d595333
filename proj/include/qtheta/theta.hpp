#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>

#include "qtheta/qseries.hpp"

namespace qtheta {

/// The named series of the catalog. Every kind has two independent
/// constructions: a series/lattice sum (theta_sum) and an eta-quotient or
/// product form (classical). The registry cross-checks the two.
enum class ThetaKind { Euler, Phi, PhiNeg, Psi, PsiNeg, F12, F15, BorweinA, BorweinC };

/// E(q^k) to q^N by the pentagonal bilateral sum (O(sqrt(N/k)) terms).
QSeries euler_E(std::int64_t k, std::int64_t N);

/// 1/E(q^k) by the sparse pentagonal recurrence, O(N sqrt(N/k)).
QSeries inverse_euler_E(std::int64_t k, std::int64_t N);

/// E(-q^k) to q^N.
QSeries euler_neg(std::int64_t k, std::int64_t N);

/// Ramanujan theta sum_n a^{n(n+1)/2} b^{n(n-1)/2} with a = sign_a q^r and
/// b = sign_b q^s, truncated at q^N. Requires r >= 1, s >= 0 (so |ab| < 1
/// has a formal analogue: the exponent grows quadratically).
QSeries theta_f(int sign_a, std::int64_t r, int sign_b, std::int64_t s, std::int64_t N);

/// prod E(q^{k_i})^{e_i} for (k_i, e_i) pairs; negative exponents use the
/// reciprocal series (constant term 1, so this stays over the integers).
QSeries eta_quotient(std::initializer_list<std::pair<std::int64_t, int>> factors,
                     std::int64_t N);

/// The named series in the variable q^k, built from the product side.
QSeries classical(ThetaKind kind, std::int64_t k, std::int64_t N);

/// The named series in the variable q^k, built from the sum side.
QSeries theta_sum(ThetaKind kind, std::int64_t k, std::int64_t N);

/// sum_{x,y} q^{k(x^2+xy+y^2)} over the integer pairs with exponent <= N.
QSeries borwein_a(std::int64_t k, std::int64_t N);

/// sum_{x,y} q^{k(x^2+xy+y^2+x+y)} over the integer pairs with exponent <= N.
QSeries borwein_c(std::int64_t k, std::int64_t N);

/// Weights for the lacunary square series sum_{n>0} w(n) n q^{n^2}.
enum class SquareChar {
  DMinus4,    // w(n) = (-4|n)
  DMinus2,    // w(n) = (-2|n)
  DMinus12,   // w(n) = (-12|n)
  DMinus3Alt  // w(n) = (-1)^{n+1} (-3|n)
};

QSeries char_square_series(SquareChar id, std::int64_t N);

// Shorthand for the classical (product-side) constructions.
QSeries phi(std::int64_t k, std::int64_t N);
QSeries phi_neg(std::int64_t k, std::int64_t N);
QSeries psi(std::int64_t k, std::int64_t N);
QSeries psi_neg(std::int64_t k, std::int64_t N);

}  // namespace qtheta
