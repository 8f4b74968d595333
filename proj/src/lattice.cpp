#include "qtheta/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "qtheta/arith.hpp"

namespace qtheta {

std::int64_t TernaryForm::discriminant() const {
  // 4abc + def - ad^2 - be^2 - cf^2, evaluated with checked arithmetic.
  coeff_t t = checked_mul(4, checked_mul(a, checked_mul(b, c)));
  t = checked_add(t, checked_mul(d, checked_mul(e, f)));
  t = checked_sub(t, checked_mul(a, checked_mul(d, d)));
  t = checked_sub(t, checked_mul(b, checked_mul(e, e)));
  t = checked_sub(t, checked_mul(c, checked_mul(f, f)));
  return t;
}

bool TernaryForm::is_positive_definite() const {
  if (a <= 0) return false;
  if (checked_sub(checked_mul(4, checked_mul(a, b)), checked_mul(f, f)) <= 0) return false;
  return discriminant() > 0;
}

std::string TernaryForm::to_string() const {
  std::string out;
  for (std::int64_t v : {a, b, c, d, e, f}) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

TernaryForm TernaryForm::parse(std::string_view text) {
  const std::string buf(text);
  const char* p = buf.c_str();
  std::array<std::int64_t, 6> vals{};
  for (int i = 0; i < 6; ++i) {
    char* end = nullptr;
    errno = 0;
    vals[i] = std::strtoll(p, &end, 10);
    if (end == p || errno == ERANGE) {
      throw std::invalid_argument("TernaryForm: expected \"a,b,c,d,e,f\"");
    }
    p = end;
    while (*p == ' ') ++p;
    if (i < 5) {
      if (*p != ',') throw std::invalid_argument("TernaryForm: expected \"a,b,c,d,e,f\"");
      ++p;
    }
  }
  while (*p == ' ') ++p;
  if (*p != '\0') throw std::invalid_argument("TernaryForm: trailing characters");
  return {vals[0], vals[1], vals[2], vals[3], vals[4], vals[5]};
}

Congruence::Congruence(std::int64_t u_, std::int64_t v_, std::int64_t w_, std::int64_t m_,
                       std::int64_t r_)
    : u(u_), v(v_), w(w_), m(m_), r(r_) {
  if (m < 1) throw std::invalid_argument("Congruence: modulus must be >= 1");
  if (r < 0 || r >= m) throw std::invalid_argument("Congruence: residue out of range");
}

namespace {

// Largest t >= 0 with mult*t^2 <= bound; 0 when bound < 0 never occurs here.
std::int64_t quad_bound(std::int64_t mult, std::int64_t bound) {
  if (bound < 0) return -1;
  std::int64_t t = isqrt(bound / mult);
  while (checked_mul(mult, checked_mul(t + 1, t + 1)) <= bound) ++t;
  while (t > 0 && checked_mul(mult, checked_mul(t, t)) > bound) --t;
  return t;
}

struct SteppedRange {
  std::int64_t start = 0;
  std::int64_t step = 1;
  std::int64_t count = 0;
};

SteppedRange stepped(std::int64_t lo, std::int64_t hi, std::int64_t m, std::int64_t r) {
  SteppedRange out;
  if (lo > hi) return out;
  const std::int64_t start = lo + ((((r - lo) % m) + m) % m);
  if (start > hi) return out;
  out.start = start;
  out.step = m;
  out.count = (hi - start) / m + 1;
  return out;
}

// A congruence touching only `var` with unit coefficient gives a stride for
// that loop; everything else is filtered per triple.
struct UnaryStep {
  std::int64_t m = 1;
  std::int64_t r = 0;
};

UnaryStep unary_step(const CongruenceSystem* cs, int var) {
  if (!cs) return {};
  for (const Congruence& c : cs->constraints) {
    const std::int64_t coef[3] = {c.u, c.v, c.w};
    bool pure = (coef[var] == 1 || coef[var] == -1);
    for (int i = 0; i < 3 && pure; ++i) {
      if (i != var && coef[i] != 0) pure = false;
    }
    if (!pure) continue;
    return {c.m, coef[var] == 1 ? c.r : (c.m - c.r) % c.m};
  }
  return {};
}

QSeries theta_enum(const TernaryForm& F, std::int64_t N, const CongruenceSystem* filter) {
  if (!F.is_positive_definite()) {
    throw not_positive_definite("theta_series: form is not positive definite");
  }
  if (N < 0) throw std::invalid_argument("theta_series: negative truncation");

  // 4a Q = (2ax + fy + ez)^2 + A1 y^2 + B1 yz + C1 z^2, and completing the
  // square once more, 4 A1 (A1 y^2 + B1 yz + C1 z^2) = (2 A1 y + B1 z)^2
  // + 16 a D z^2 with D the discriminant. All bounds below follow exactly.
  const std::int64_t A1 = checked_sub(checked_mul(4, checked_mul(F.a, F.b)), checked_mul(F.f, F.f));
  const std::int64_t B1 =
      checked_sub(checked_mul(4, checked_mul(F.a, F.d)), checked_mul(2, checked_mul(F.e, F.f)));
  const std::int64_t C1 = checked_sub(checked_mul(4, checked_mul(F.a, F.c)), checked_mul(F.e, F.e));
  const std::int64_t D = F.discriminant();
  const std::int64_t zmax = quad_bound(D, checked_mul(A1, N));
  const std::int64_t four_aN = checked_mul(4, checked_mul(F.a, N));
  checked_mul(checked_mul(16, F.a), checked_mul(A1, N));  // magnitude precheck for S below

  const UnaryStep xs = unary_step(filter, 0);
  const UnaryStep ys = unary_step(filter, 1);
  const UnaryStep zs = unary_step(filter, 2);
  const SteppedRange zr = stepped(-zmax, zmax, zs.m, zs.r);

  std::vector<coeff_t> total(static_cast<std::size_t>(N) + 1, 0);
  int bad = 0;

#pragma omp parallel reduction(| : bad)
  {
    std::vector<coeff_t> local(static_cast<std::size_t>(N) + 1, 0);
    bool o = false;
    auto mulf = [&o](std::int64_t x, std::int64_t y) {
      std::int64_t r;
      o |= __builtin_mul_overflow(x, y, &r);
      return r;
    };
    auto addf = [&o](std::int64_t x, std::int64_t y) {
      std::int64_t r;
      o |= __builtin_add_overflow(x, y, &r);
      return r;
    };

#pragma omp for schedule(dynamic, 4) nowait
    for (std::int64_t zi = 0; zi < zr.count; ++zi) {
      const std::int64_t z = zr.start + zi * zr.step;
      o = false;
      const std::int64_t S = mulf(mulf(16, F.a), addf(mulf(A1, N), -mulf(D, mulf(z, z))));
      if (o || S < 0) {
        bad |= o;
        continue;
      }
      const std::int64_t s = isqrt(S);
      const std::int64_t yb = mulf(-B1, z);
      if (o) {
        bad = 1;
        continue;
      }
      const SteppedRange yr =
          stepped(ceil_div(addf(yb, -s), 2 * A1), floor_div(addf(yb, s), 2 * A1), ys.m, ys.r);
      for (std::int64_t yi = 0; yi < yr.count; ++yi) {
        const std::int64_t y = yr.start + yi * yr.step;
        const std::int64_t R =
            addf(addf(mulf(A1, mulf(y, y)), mulf(B1, mulf(y, z))), mulf(C1, mulf(z, z)));
        const std::int64_t T = addf(four_aN, -R);
        if (o) {
          bad = 1;
          o = false;
          continue;
        }
        if (T < 0) continue;
        const std::int64_t t = isqrt(T);
        const std::int64_t L0 = -addf(mulf(F.f, y), mulf(F.e, z));
        const SteppedRange xr =
            stepped(ceil_div(addf(L0, -t), 2 * F.a), floor_div(addf(L0, t), 2 * F.a), xs.m, xs.r);
        for (std::int64_t xi = 0; xi < xr.count; ++xi) {
          const std::int64_t x = xr.start + xi * xr.step;
          if (filter && !filter->satisfied(x, y, z)) continue;
          const std::int64_t v =
              addf(addf(addf(mulf(F.a, mulf(x, x)), mulf(F.b, mulf(y, y))),
                        addf(mulf(F.c, mulf(z, z)), mulf(F.d, mulf(y, z)))),
                   addf(mulf(F.e, mulf(x, z)), mulf(F.f, mulf(x, y))));
          if (o || v < 0 || v > N) {
            bad = 1;
            o = false;
            continue;
          }
          ++local[static_cast<std::size_t>(v)];
        }
        if (o) {
          bad = 1;
          o = false;
        }
      }
      bad |= o;
    }

#pragma omp critical(qtheta_theta_merge)
    {
      // Order-independent merge: plain addition of per-thread counts.
      for (std::int64_t n = 0; n <= N; ++n) total[n] += local[static_cast<std::size_t>(n)];
    }
  }
  if (bad) throw overflow_error("theta_series: enumeration bound overflowed");
  return out;
}

}  // namespace

EnumerationBox bounding_box(const TernaryForm& form, std::int64_t N) {
  if (!form.is_positive_definite()) {
    throw not_positive_definite("bounding_box: form is not positive definite");
  }
  if (N < 0) throw std::invalid_argument("bounding_box: negative bound");
  const std::int64_t D = form.discriminant();
  auto cof = [&](std::int64_t p, std::int64_t q, std::int64_t r) {
    return checked_sub(checked_mul(4, checked_mul(p, q)), checked_mul(r, r));
  };
  // Over the reals, min_{y,z} Q(x,y,z) = x^2 D / (4bc - d^2), and cyclically.
  EnumerationBox box;
  box.x = quad_bound(D, checked_mul(N, cof(form.b, form.c, form.d)));
  box.y = quad_bound(D, checked_mul(N, cof(form.a, form.c, form.e)));
  box.z = quad_bound(D, checked_mul(N, cof(form.a, form.b, form.f)));
  return box;
}

QSeries theta_series(const TernaryForm& form, std::int64_t N) {
  return theta_enum(form, N, nullptr);
}

QSeries theta_series_ref(const TernaryForm& form, std::int64_t N) {
  if (!form.is_positive_definite()) {
    throw not_positive_definite("theta_series_ref: form is not positive definite");
  }
  if (N < 0) throw std::invalid_argument("theta_series_ref: negative truncation");
  const EnumerationBox box = bounding_box(form, N);
  QSeries out(N);
  for (std::int64_t x = -box.x; x <= box.x; ++x) {
    for (std::int64_t y = -box.y; y <= box.y; ++y) {
      for (std::int64_t z = -box.z; z <= box.z; ++z) {
        const std::int64_t v = form.eval(x, y, z);
        if (v <= N) out.at(v) = checked_add(out.at(v), 1);
      }
    }
  }
  return out;
}

std::int64_t rep_count(const TernaryForm& form, std::int64_t n) {
  if (n < 0) return 0;
  return theta_series(form, n)[n];
}

QSeries restricted_theta(const TernaryForm& form, std::array<std::int64_t, 3> scales,
                         const CongruenceSystem& constraints, std::int64_t N) {
  for (std::int64_t s : scales) {
    if (s < 1) throw std::invalid_argument("restricted_theta: scales must be >= 1");
  }
  const auto [s1, s2, s3] = scales;
  const TernaryForm scaled{
      checked_mul(form.a, checked_mul(s1, s1)), checked_mul(form.b, checked_mul(s2, s2)),
      checked_mul(form.c, checked_mul(s3, s3)), checked_mul(form.d, checked_mul(s2, s3)),
      checked_mul(form.e, checked_mul(s1, s3)), checked_mul(form.f, checked_mul(s1, s2))};
  return theta_enum(scaled, N, &constraints);
}

const char* preset_name(RestrictedPreset preset) {
  switch (preset) {
    case RestrictedPreset::B10:
      return "B10";
    case RestrictedPreset::B20:
      return "B20";
    case RestrictedPreset::B30:
      return "B30";
  }
  return "?";
}

bool parse_preset(std::string_view text, RestrictedPreset& out) {
  if (text == "B10") out = RestrictedPreset::B10;
  else if (text == "B20") out = RestrictedPreset::B20;
  else if (text == "B30") out = RestrictedPreset::B30;
  else return false;
  return true;
}

QSeries restricted_preset(RestrictedPreset preset, std::int64_t N) {
  switch (preset) {
    case RestrictedPreset::B10:
      return restricted_theta({1, 1, 1, 0, 0, 0}, {1, 1, 1},
                              {{{1, 0, 0, 4, 1}, {0, 1, 0, 8, 2}, {0, 0, 1, 8, 2}}}, N);
    case RestrictedPreset::B20:
      return restricted_theta({1, 1, 2, 0, 0, 0}, {1, 1, 1},
                              {{{1, 0, 0, 4, 1}, {0, 1, 0, 16, 4}, {0, 0, 1, 2, 0}}}, N);
    case RestrictedPreset::B30:
      return restricted_theta({1, 4, 12, 0, 0, 0}, {1, 1, 1},
                              {{{1, 0, 0, 12, 3}, {0, 1, -1, 6, 0}, {0, 1, 1, 6, 2}}}, N);
  }
  throw std::logic_error("restricted_preset: unknown preset");
}

QSeries binary_theta(const BinaryForm& form, std::int64_t N) {
  if (!form.is_positive_definite()) {
    throw not_positive_definite("binary_theta: form is not positive definite");
  }
  if (N < 0) throw std::invalid_argument("binary_theta: negative truncation");
  // 4a Q = (2ax + by)^2 + (4ac - b^2) y^2
  const std::int64_t disc = form.discriminant();
  const std::int64_t four_aN = checked_mul(4, checked_mul(form.a, N));
  const std::int64_t ymax = quad_bound(disc, four_aN);
  QSeries out(N);
  for (std::int64_t y = -ymax; y <= ymax; ++y) {
    const std::int64_t T = checked_sub(four_aN, checked_mul(disc, checked_mul(y, y)));
    const std::int64_t t = isqrt(T);
    const std::int64_t L0 = checked_mul(-form.b, y);
    for (std::int64_t x = ceil_div(L0 - t, 2 * form.a); x <= floor_div(L0 + t, 2 * form.a); ++x) {
      out.at(form.eval(x, y)) = checked_add(out[form.eval(x, y)], 1);
    }
  }
  return out;
}

BinaryForm apply_unimodular(const BinaryForm& form, const Mat2& m) {
  const std::int64_t det =
      checked_sub(checked_mul(m[0][0], m[1][1]), checked_mul(m[0][1], m[1][0]));
  if (det != 1 && det != -1) {
    throw std::invalid_argument("apply_unimodular: determinant must be +-1");
  }
  BinaryForm out;
  out.a = form.eval(m[0][0], m[1][0]);
  out.c = form.eval(m[0][1], m[1][1]);
  out.b = checked_add(
      checked_add(checked_mul(2, checked_mul(form.a, checked_mul(m[0][0], m[0][1]))),
                  checked_mul(form.b, checked_add(checked_mul(m[0][0], m[1][1]),
                                                  checked_mul(m[0][1], m[1][0])))),
      checked_mul(2, checked_mul(form.c, checked_mul(m[1][0], m[1][1]))));
  return out;
}

}  // namespace qtheta
