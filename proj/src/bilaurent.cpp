#include "qtheta/bilaurent.hpp"

#include <chrono>
#include <stdexcept>

namespace qtheta {

BiLaurent::BiLaurent(std::int64_t trunc) : trunc_(trunc) {
  if (trunc < 0) throw std::invalid_argument("BiLaurent: truncation order must be >= 0");
}

void BiLaurent::add_term(std::int64_t z_exp, std::int64_t q_exp, coeff_t c) {
  if (q_exp < 0 || q_exp > trunc_) throw std::out_of_range("BiLaurent: q-degree out of range");
  auto it = terms_.find(z_exp);
  if (it == terms_.end()) it = terms_.emplace(z_exp, QSeries(trunc_)).first;
  it->second.at(q_exp) = checked_add(it->second.at(q_exp), c);
}

void BiLaurent::mul_binomial(coeff_t c, std::int64_t dz, std::int64_t dq) {
  if (dq < 0) throw std::invalid_argument("BiLaurent: factor with negative q-degree");
  if (dq > trunc_) return;  // 1 + O(q^{trunc+1})
  std::map<std::int64_t, QSeries> delta;
  for (const auto& [z, s] : terms_) {
    QSeries moved(trunc_);
    bool any = false;
    for (std::int64_t n = 0; n + dq <= trunc_; ++n) {
      if (s[n] == 0) continue;
      moved.at(n + dq) = checked_mul(c, s[n]);
      any = true;
    }
    if (any) delta.emplace(z + dz, std::move(moved));
  }
  for (auto& [z, s] : delta) {
    auto it = terms_.find(z);
    if (it == terms_.end()) {
      terms_.emplace(z, std::move(s));
    } else {
      it->second = add(it->second, s);
    }
  }
  prune();
}

void BiLaurent::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero()) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

bool operator==(const BiLaurent& a, const BiLaurent& b) {
  return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
}

Report bivariate_product_check(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("bivariate_product_check: N must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  BiLaurent sum(N);
  for (std::int64_t n = -N; n <= N; ++n) {
    const std::int64_t e1 = 3 * n * n - 2 * n;
    if (e1 >= 0 && e1 <= N) sum.add_term(3 * n, e1, 1);
    const std::int64_t e2 = 3 * n * n + 4 * n + 1;
    if (e2 >= 0 && e2 <= N) sum.add_term(-3 * n - 1, e2, -1);
  }

  BiLaurent prod(N);
  prod.add_term(0, 0, 1);
  for (std::int64_t e = 2; e <= N; e += 2) prod.mul_binomial(-1, 0, e);   // (q^2;q^2)
  for (std::int64_t e = 1; e <= N; e += 2) prod.mul_binomial(-1, 1, e);   // (qz;q^2)
  for (std::int64_t e = 1; e <= N; e += 2) prod.mul_binomial(-1, -1, e);  // (q/z;q^2)
  for (std::int64_t e = 0; e <= N; e += 4) prod.mul_binomial(-1, 2, e);   // (z^2;q^4)
  for (std::int64_t e = 4; e <= N; e += 4) prod.mul_binomial(-1, -2, e);  // (q^4/z^2;q^4)

  Report report;
  report.name = "qpi";
  report.trunc = N;
  report.pass = true;

  auto scan = [&](const BiLaurent& a, const BiLaurent& b) {
    for (const auto& [z, s] : a.terms()) {
      auto it = b.terms().find(z);
      for (std::int64_t n = 0; n <= N && report.pass; ++n) {
        const coeff_t lv = s[n];
        const coeff_t rv = (it == b.terms().end()) ? 0 : it->second[n];
        if (lv != rv) {
          report.pass = false;
          report.first_mismatch = Mismatch{n, lv, rv};
        }
      }
      if (!report.pass) break;
    }
  };
  scan(sum, prod);
  if (report.pass) scan(prod, sum);

  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace qtheta
