#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qtheta {

using coeff_t = std::int64_t;

/// Thrown whenever a coefficient computation would leave the signed 64-bit
/// range. All series arithmetic is checked; wraparound never happens.
class overflow_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

coeff_t checked_add(coeff_t a, coeff_t b);
coeff_t checked_sub(coeff_t a, coeff_t b);
coeff_t checked_mul(coeff_t a, coeff_t b);

/// Formal power series in q over the integers, truncated at an inclusive
/// degree: the coefficients of q^0 .. q^trunc are stored densely and are
/// exact. Values are immutable in all library operations, which return
/// fresh series; sharing across threads needs no coordination.
class QSeries {
 public:
  /// The zero series with truncation order `trunc` (inclusive).
  explicit QSeries(std::int64_t trunc);

  static QSeries one(std::int64_t trunc);
  static QSeries monomial(coeff_t coeff, std::int64_t degree, std::int64_t trunc);

  std::int64_t trunc() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

  /// Coefficient of q^n. Negative n reads as 0; n beyond the truncation is
  /// unknown and therefore an error.
  coeff_t operator[](std::int64_t n) const;

  coeff_t& at(std::int64_t n);

  const std::vector<coeff_t>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<coeff_t> coeffs_;
};

// Binary operations truncate to the shorter operand.
QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries neg(const QSeries& s);
QSeries scale(coeff_t k, const QSeries& s);

/// Truncated Cauchy product; runs the output degrees in parallel when the
/// series are long enough for that to pay.
QSeries mul(const QSeries& a, const QSeries& b);

/// Serial schoolbook convolution, kept as the reference for `mul`.
QSeries mul_ref(const QSeries& a, const QSeries& b);

QSeries pow(const QSeries& s, int exponent);

/// q -> q^k. The result is exact out to s.trunc()*k; `cap` may extend that
/// by up to k-1 positions (no multiple of k lives there, so they are zero).
QSeries dilate(const QSeries& s, std::int64_t k);
QSeries dilate(const QSeries& s, std::int64_t k, std::int64_t cap);

/// Multiply by q^k; the truncation order grows by k.
QSeries shift(const QSeries& s, std::int64_t k);

/// Copy cut down to a smaller truncation order.
QSeries truncated(const QSeries& s, std::int64_t n);

/// q -> -q: negates the odd-degree coefficients.
QSeries alternate(const QSeries& s);

/// Keeps the coefficients of degree = r (mod t), zeroes the rest. Degrees
/// are not relabelled.
QSeries project(const QSeries& s, std::int64_t t, std::int64_t r);

/// Multiplicative inverse; requires constant term +1 or -1.
QSeries reciprocal(const QSeries& s);

/// prod_{j>=0} (1 - sign q^{r+j*step}) truncated at N. Factors beyond q^N
/// are 1 + O(q^{N+1}) and are dropped. sign=+1 with r=0 would make the
/// first factor vanish identically and is rejected.
QSeries pochhammer(std::int64_t r, int sign, std::int64_t step, std::int64_t N);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator-(const QSeries& s) { return neg(s); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeries operator*(coeff_t k, const QSeries& s) { return scale(k, s); }

}  // namespace qtheta
