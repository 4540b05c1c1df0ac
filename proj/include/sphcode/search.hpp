#pragma once

// Parameter enumeration: for each (d, m) take the level l = g_{2,d}(1/sqrt m),
// solve the optimality equation for the code size, filter by integrality,
// positivity and the Fisher bound, and back-solve the admissible inner
// products.

#include "sphcode/harmonics.hpp"
#include "sphcode/scalars.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sphcode {

struct SearchRow {
  int d = 0;                    // source sphere dimension
  long long D = 0;              // d(d+3)/2
  int m = 0;                    // 1/sqrt(m) in IP
  QuadScalar level;             // l = (d+1-m)/(dm), signed
  unsigned long long code_size = 0;  // 2N
  std::vector<QuadScalar> inner_products;  // x >= 0 with g_{2,d}(x) = +-l
  bool fisher_ok = false;       // code_size >= 2D (antipodal 3-design bound)
};

// Closed form of g_{2,d}(1/sqrt m) = (d+1-m)/(dm).
inline QuadScalar level_from_m(int d, int m) {
  if (d < 2 || m < 1) throw std::invalid_argument("level_from_m: need d >= 2, m >= 1");
  return QuadScalar(Rational(d + 1 - m, std::int64_t(d) * m));
}

// The positive solution 2N = 2D(1-l^2)/(1-D l^2) of the optimality
// equation, if it is an even positive integer; verified by exact
// back-substitution.
inline std::optional<unsigned long long> solve_code_size(int d, const QuadScalar& level) {
  if (level.is_zero()) throw std::invalid_argument("solve_code_size: level must be nonzero");
  const QuadScalar l2 = level * level;
  if (!l2.is_rational()) return std::nullopt;
  const Rational ll = l2.rational_part();
  const Rational D = Rational(d) * (d + 3) / 2;
  if (D * ll >= 1) return std::nullopt;
  const Rational M = 2 * D * (1 - ll) / (1 - D * ll);
  if (M <= 0 || boost::multiprecision::denominator(M) != 1) return std::nullopt;
  const BigInt Mi = boost::multiprecision::numerator(M);
  if (Mi % 2 != 0) return std::nullopt;
  // back-substitute: M^2/D - 2M == l^2 (M^2 - 2M)
  if (M * M / D - 2 * M != ll * (M * M - 2 * M))
    throw std::logic_error("solve_code_size: back-substitution failed");
  return Mi.convert_to<unsigned long long>();
}

// All x >= 0 with g_{2,d}(x) = +-l, i.e. x = sqrt((1 +- d l)/(d+1)) for
// each sign keeping the radicand non-negative.
inline std::vector<QuadScalar> admissible_inner_products(int d, const QuadScalar& level) {
  if (level.is_zero())
    throw std::invalid_argument("admissible_inner_products: level must be nonzero");
  if (!level.is_rational())
    throw std::invalid_argument("admissible_inner_products: level must be rational");
  const Rational l = level.rational_part();
  std::vector<QuadScalar> out;
  for (int s : {1, -1}) {
    const Rational rad = (1 + s * Rational(d) * l) / (d + 1);
    if (rad < 0) continue;
    QuadScalar x = QuadScalar::sqrt_rational(rad);
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  }
  // the roots may live in different quadratic extensions; they are all
  // non-negative, so order by the (rational) squares
  std::sort(out.begin(), out.end(), [](const QuadScalar& x, const QuadScalar& y) {
    return (x * x).rational_part() < (y * y).rational_part();
  });
  return out;
}

struct EnumerateOptions {
  int d_plus_1_max = 100;
  int m_max = 200;
  bool include_fisher_failures = false;
};

// Scan 3 <= d+1 <= d_plus_1_max, 1 <= m <= m_max; emit rows sorted by (d, m).
inline std::vector<SearchRow> enumerate_parameters(const EnumerateOptions& opt = {}) {
  if (opt.d_plus_1_max < 3 || opt.m_max < 1)
    throw std::invalid_argument("enumerate: need d+1 range >= 3 and m range >= 1");
  std::vector<SearchRow> rows;
  for (int d = 2; d + 1 <= opt.d_plus_1_max; ++d)
    for (int m = 1; m <= opt.m_max; ++m) {
      const QuadScalar level = level_from_m(d, m);
      if (level.is_zero()) continue;
      const auto size = solve_code_size(d, level);
      if (!size) continue;
      SearchRow row;
      row.d = d;
      row.D = std::int64_t(d) * (d + 3) / 2;
      row.m = m;
      row.level = level;
      row.code_size = *size;
      row.inner_products = admissible_inner_products(d, level);
      row.fisher_ok = row.code_size >= 2 * (unsigned long long)(row.D);
      if (row.fisher_ok || opt.include_fisher_failures) rows.push_back(std::move(row));
    }
  return rows;  // scan order is already (d, m)-sorted
}

}  // namespace sphcode
