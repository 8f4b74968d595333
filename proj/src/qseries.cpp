#include "qtheta/qseries.hpp"

#include <algorithm>
#include <string>

namespace qtheta {

coeff_t checked_add(coeff_t a, coeff_t b) {
  coeff_t r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer addition overflowed");
  return r;
}

coeff_t checked_sub(coeff_t a, coeff_t b) {
  coeff_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer subtraction overflowed");
  return r;
}

coeff_t checked_mul(coeff_t a, coeff_t b) {
  coeff_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer multiplication overflowed");
  return r;
}

QSeries::QSeries(std::int64_t trunc) {
  if (trunc < 0) throw std::invalid_argument("QSeries: truncation order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(trunc) + 1, 0);
}

QSeries QSeries::one(std::int64_t trunc) {
  QSeries s(trunc);
  s.coeffs_[0] = 1;
  return s;
}

QSeries QSeries::monomial(coeff_t coeff, std::int64_t degree, std::int64_t trunc) {
  QSeries s(trunc);
  if (degree < 0) throw std::invalid_argument("QSeries::monomial: negative degree");
  if (degree <= trunc) s.coeffs_[static_cast<std::size_t>(degree)] = coeff;
  return s;
}

coeff_t QSeries::operator[](std::int64_t n) const {
  if (n < 0) return 0;
  if (n > trunc()) throw std::out_of_range("QSeries: coefficient beyond truncation order");
  return coeffs_[static_cast<std::size_t>(n)];
}

coeff_t& QSeries::at(std::int64_t n) {
  if (n < 0 || n > trunc()) throw std::out_of_range("QSeries: coefficient index out of range");
  return coeffs_[static_cast<std::size_t>(n)];
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](coeff_t c) { return c == 0; });
}

QSeries add(const QSeries& a, const QSeries& b) {
  QSeries out(std::min(a.trunc(), b.trunc()));
  for (std::int64_t n = 0; n <= out.trunc(); ++n) out.at(n) = checked_add(a[n], b[n]);
  return out;
}

QSeries sub(const QSeries& a, const QSeries& b) {
  QSeries out(std::min(a.trunc(), b.trunc()));
  for (std::int64_t n = 0; n <= out.trunc(); ++n) out.at(n) = checked_sub(a[n], b[n]);
  return out;
}

QSeries neg(const QSeries& s) {
  QSeries out(s.trunc());
  for (std::int64_t n = 0; n <= s.trunc(); ++n) out.at(n) = checked_sub(0, s[n]);
  return out;
}

QSeries scale(coeff_t k, const QSeries& s) {
  QSeries out(s.trunc());
  for (std::int64_t n = 0; n <= s.trunc(); ++n) out.at(n) = checked_mul(k, s[n]);
  return out;
}

QSeries mul(const QSeries& a, const QSeries& b) {
  const std::int64_t n = std::min(a.trunc(), b.trunc());
  const std::int64_t ta = a.trunc();
  const std::int64_t tb = b.trunc();
  QSeries out(n);
  const coeff_t* A = a.coeffs().data();
  const coeff_t* B = b.coeffs().data();
  int bad = 0;
#pragma omp parallel for schedule(static) reduction(| : bad) if (n >= 2048)
  for (std::int64_t k = 0; k <= n; ++k) {
    coeff_t acc = 0;
    bool o = false;
    const std::int64_t lo = std::max<std::int64_t>(0, k - tb);
    const std::int64_t hi = std::min(k, ta);
    for (std::int64_t i = lo; i <= hi; ++i) {
      coeff_t t;
      o |= __builtin_mul_overflow(A[i], B[k - i], &t);
      o |= __builtin_add_overflow(acc, t, &acc);
    }
    if (o) bad = 1;
    out.at(k) = acc;
  }
  if (bad) throw overflow_error("QSeries multiplication overflowed");
  return out;
}

QSeries mul_ref(const QSeries& a, const QSeries& b) {
  QSeries out(std::min(a.trunc(), b.trunc()));
  for (std::int64_t i = 0; i <= std::min(a.trunc(), out.trunc()); ++i) {
    if (a[i] == 0) continue;
    for (std::int64_t j = 0; i + j <= out.trunc() && j <= b.trunc(); ++j) {
      out.at(i + j) = checked_add(out.at(i + j), checked_mul(a[i], b[j]));
    }
  }
  return out;
}

QSeries pow(const QSeries& s, int exponent) {
  if (exponent < 0) throw std::invalid_argument("pow: negative exponent (use reciprocal)");
  QSeries acc = QSeries::one(s.trunc());
  QSeries base = s;
  int e = exponent;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return acc;
}

QSeries dilate(const QSeries& s, std::int64_t k) {
  return dilate(s, k, checked_mul(s.trunc(), k));
}

QSeries dilate(const QSeries& s, std::int64_t k, std::int64_t cap) {
  if (k < 1) throw std::invalid_argument("dilate: k must be >= 1");
  const std::int64_t exact = checked_mul(s.trunc(), k);
  if (cap < 0 || cap > exact + (k - 1)) {
    throw std::invalid_argument("dilate: cap outside the exactly-known range");
  }
  QSeries out(cap);
  for (std::int64_t n = 0; n <= s.trunc() && n * k <= cap; ++n) out.at(n * k) = s[n];
  return out;
}

QSeries shift(const QSeries& s, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("shift: negative shift");
  QSeries out(checked_add(s.trunc(), k));
  for (std::int64_t n = 0; n <= s.trunc(); ++n) out.at(n + k) = s[n];
  return out;
}

QSeries truncated(const QSeries& s, std::int64_t n) {
  if (n > s.trunc()) throw std::invalid_argument("truncated: cannot extend a series");
  QSeries out(n);
  for (std::int64_t i = 0; i <= n; ++i) out.at(i) = s[i];
  return out;
}

QSeries alternate(const QSeries& s) {
  QSeries out(s.trunc());
  for (std::int64_t n = 0; n <= s.trunc(); ++n) {
    out.at(n) = (n & 1) ? checked_sub(0, s[n]) : s[n];
  }
  return out;
}

QSeries project(const QSeries& s, std::int64_t t, std::int64_t r) {
  if (t < 1) throw std::invalid_argument("project: modulus must be >= 1");
  if (r < 0 || r >= t) throw std::invalid_argument("project: residue out of range");
  QSeries out(s.trunc());
  for (std::int64_t n = r; n <= s.trunc(); n += t) out.at(n) = s[n];
  return out;
}

QSeries reciprocal(const QSeries& s) {
  const coeff_t c0 = s[0];
  if (c0 != 1 && c0 != -1) {
    throw std::invalid_argument("reciprocal: constant term must be +1 or -1");
  }
  QSeries out(s.trunc());
  out.at(0) = c0;
  for (std::int64_t n = 1; n <= s.trunc(); ++n) {
    coeff_t acc = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
      acc = checked_add(acc, checked_mul(s[k], out.at(n - k)));
    }
    out.at(n) = checked_mul(-c0, acc);
  }
  return out;
}

QSeries pochhammer(std::int64_t r, int sign, std::int64_t step, std::int64_t N) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("pochhammer: sign must be +1 or -1");
  if (r < 0) throw std::invalid_argument("pochhammer: r must be >= 0");
  if (step < 1) throw std::invalid_argument("pochhammer: step must be >= 1");
  if (sign == 1 && r == 0) {
    throw std::invalid_argument("pochhammer: sign=+1 with r=0 makes a factor vanish");
  }
  QSeries out = QSeries::one(N);
  for (std::int64_t e = r; e <= N; e += step) {
    if (e == 0) {
      // Constant factor (1 - sign q^0) = 2 here, since sign = -1.
      out = scale(2, out);
      continue;
    }
    // In-place multiply by (1 - sign q^e), descending so old values are read.
    for (std::int64_t j = N; j >= e; --j) {
      coeff_t t = checked_mul(static_cast<coeff_t>(sign), out[j - e]);
      out.at(j) = checked_sub(out.at(j), t);
    }
  }
  return out;
}

}  // namespace qtheta
