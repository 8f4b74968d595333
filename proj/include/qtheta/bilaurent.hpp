#pragma once

#include <cstdint>
#include <map>

#include "qtheta/qseries.hpp"
#include "qtheta/report.hpp"

namespace qtheta {

/// Laurent polynomial in z whose coefficients are QSeries sharing one
/// q-truncation. The z-support stays finite: only factors that can still
/// contribute below the q-truncation are ever multiplied in, and rows that
/// cancel to zero are pruned.
class BiLaurent {
 public:
  explicit BiLaurent(std::int64_t trunc);

  std::int64_t trunc() const { return trunc_; }
  const std::map<std::int64_t, QSeries>& terms() const { return terms_; }

  void add_term(std::int64_t z_exp, std::int64_t q_exp, coeff_t c);

  /// Multiply by the binomial 1 + c z^{dz} q^{dq}.
  void mul_binomial(coeff_t c, std::int64_t dz, std::int64_t dq);

  friend bool operator==(const BiLaurent& a, const BiLaurent& b);

 private:
  void prune();

  std::int64_t trunc_;
  std::map<std::int64_t, QSeries> terms_;
};

/// Builds both sides of the quintuple product
///   sum_n q^{3n^2+n} (z^{3n} q^{-3n} - q^{3n+1} z^{-3n-1})
///     = (q^2;q^2) (qz;q^2) (q/z;q^2) (z^2;q^4) (q^4/z^2;q^4)
/// as bivariate truncations at q^N and compares every (z,q) cell. On a
/// mismatch, the reported degree is the q-degree of the first bad cell in
/// (z, q) order.
Report bivariate_product_check(std::int64_t N);

}  // namespace qtheta
