#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qtheta/qseries.hpp"

namespace qtheta {

/// Thrown when an operation needs a positive definite form and the given
/// one is not.
class not_positive_definite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer ternary quadratic form a x^2 + b y^2 + c z^2 + d yz + e xz + f xy.
struct TernaryForm {
  std::int64_t a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

  std::int64_t eval(std::int64_t x, std::int64_t y, std::int64_t z) const {
    return a * x * x + b * y * y + c * z * z + d * y * z + e * x * z + f * x * y;
  }

  /// 4abc + def - ad^2 - be^2 - cf^2 (half the determinant of the doubled
  /// Gram matrix); positive for positive definite forms.
  std::int64_t discriminant() const;

  /// Leading principal minors of the doubled Gram matrix, all positive.
  bool is_positive_definite() const;

  std::string to_string() const;

  /// Parses "a,b,c,d,e,f"; spaces around the entries are allowed.
  static TernaryForm parse(std::string_view text);

  friend bool operator==(const TernaryForm&, const TernaryForm&) = default;
};

/// Integer binary quadratic form a x^2 + b xy + c y^2.
struct BinaryForm {
  std::int64_t a = 0, b = 0, c = 0;

  std::int64_t eval(std::int64_t x, std::int64_t y) const {
    return a * x * x + b * x * y + c * y * y;
  }
  std::int64_t discriminant() const { return 4 * a * c - b * b; }
  bool is_positive_definite() const { return a > 0 && discriminant() > 0; }

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

/// Linear congruence u x + v y + w z = r (mod m) on lattice variables.
struct Congruence {
  std::int64_t u = 0, v = 0, w = 0;
  std::int64_t m = 1;
  std::int64_t r = 0;

  Congruence(std::int64_t u, std::int64_t v, std::int64_t w, std::int64_t m, std::int64_t r);

  bool satisfied(std::int64_t x, std::int64_t y, std::int64_t z) const {
    return (((u * x + v * y + w * z - r) % m) + m) % m == 0;
  }
};

struct CongruenceSystem {
  std::vector<Congruence> constraints;

  bool satisfied(std::int64_t x, std::int64_t y, std::int64_t z) const {
    for (const Congruence& c : constraints) {
      if (!c.satisfied(x, y, z)) return false;
    }
    return true;
  }
};

/// Exact per-variable bounds: every integer triple with form value <= N has
/// |x| <= x, |y| <= y, |z| <= z. Derived over the rationals, no floating
/// point, so no lattice point is ever missed.
struct EnumerationBox {
  std::int64_t x = 0, y = 0, z = 0;
};

EnumerationBox bounding_box(const TernaryForm& form, std::int64_t N);

/// Theta series: the coefficient of q^n counts the integer triples with
/// form value n. Partitions the outer enumeration variable across threads;
/// the per-thread counts merge by addition, so the result is deterministic.
QSeries theta_series(const TernaryForm& form, std::int64_t N);

/// Naive triple loop over the bounding box; the reference for theta_series.
QSeries theta_series_ref(const TernaryForm& form, std::int64_t N);

/// Number of representations of n; 0 for n < 0.
std::int64_t rep_count(const TernaryForm& form, std::int64_t n);

/// sum q^{form(s1 x, s2 y, s3 z)} over the triples satisfying every
/// congruence (constraints apply to the summation variables x,y,z).
QSeries restricted_theta(const TernaryForm& form, std::array<std::int64_t, 3> scales,
                         const CongruenceSystem& constraints, std::int64_t N);

/// The three congruence-restricted sums shipped as named presets:
///   B10: x^2 +  y^2 +   z^2,  x=1(4), y=2(8),  z=2(8)
///   B20: x^2 +  y^2 + 2 z^2,  x=1(4), y=4(16), z=0(2)
///   B30: x^2 + 4y^2 + 12z^2,  x=3(12), y=z(6), y+z=2(6)
enum class RestrictedPreset { B10, B20, B30 };

const char* preset_name(RestrictedPreset preset);
bool parse_preset(std::string_view text, RestrictedPreset& out);
QSeries restricted_preset(RestrictedPreset preset, std::int64_t N);

QSeries binary_theta(const BinaryForm& form, std::int64_t N);

/// Column-convention substitution matrix: (x,y) -> (m00 x + m01 y, m10 x + m11 y).
using Mat2 = std::array<std::array<std::int64_t, 2>, 2>;

/// Composes the form with a determinant +-1 substitution. binary_theta is
/// invariant under this operation.
BinaryForm apply_unimodular(const BinaryForm& form, const Mat2& m);

}  // namespace qtheta
