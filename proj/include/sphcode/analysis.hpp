#pragma once

// Verification engine: antipodal code parameters, the Venkov 3-design
// criterion, design strength via exact Gegenbauer moment sums, and the
// optimality condition of the embedding theorem.  Every verdict on exact
// input is an exact equality test.

#include "sphcode/configurations.hpp"
#include "sphcode/harmonics.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sphcode {

struct CodeParams {
  int dim = 0;                       // ambient dimension (points on S^{dim-1})
  std::size_t size = 0;
  bool antipodal = false;
  std::optional<QuadScalar> a;       // max |ip| over non-antipodal distinct pairs
  std::vector<QuadScalar> ip_set;    // distinct off-diagonal values, ascending
};

inline CodeParams code_params(const GramMatrix& G) {
  CodeParams out;
  out.dim = G.d + 1;
  out.size = std::size_t(G.n);
  const std::size_t n = out.size;
  const QuadScalar one(1), minus_one(-1);
  // classify palette ids once, then scan bytes
  int id_one = -1, id_neg = -1;
  for (std::size_t v = 0; v < G.palette.size(); ++v) {
    if (G.palette[v] == one) id_one = int(v);
    if (G.palette[v] == minus_one) id_neg = int(v);
  }
  out.antipodal = true;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t* row = G.idx.data() + i * n;
    if (id_one < 0 || row[i] != id_one)
      throw invariant_error("code_params: diagonal not 1");
    std::size_t ones = 0, negs = 0;
    for (std::size_t j = 0; j < n; ++j) {
      ones += (row[j] == std::uint8_t(id_one));
      negs += (id_neg >= 0 && row[j] == std::uint8_t(id_neg));
    }
    if (ones != 1)
      throw invariant_error("code_params: off-diagonal +1 (repeated point)");
    if (negs != 1) out.antipodal = false;
  }
  out.ip_set = G.offdiag_values();
  for (const auto& v : out.ip_set) {
    if (v == minus_one) continue;  // antipodal pairs are excluded from a
    QuadScalar av = v.abs();
    if (!out.a || av > *out.a) out.a = std::move(av);
  }
  return out;
}

struct DesignReport {
  int strength = 0;                       // largest verified t (<= t_max)
  std::vector<QuadScalar> moment_sums;    // k = 1 .. t_max
  QuadScalar venkov_defect;
  bool design3 = false;                   // antipodal and defect exactly zero
};

// Exact Venkov defect sum_{i,j} (x_i,x_j)^2 - N^2/(d+1); independently
// coded k=2 path, used to cross-check the Gegenbauer moment machinery.
inline QuadScalar venkov_defect(const GramMatrix& G, int d) {
  const auto counts = G.value_counts();
  QuadScalar sum;
  for (std::size_t v = 0; v < counts.size(); ++v) {
    if (!counts[v]) continue;
    sum += G.palette[v] * G.palette[v] * QuadScalar(Rational(counts[v]));
  }
  const Rational n2 = Rational(G.n) * G.n;
  return sum - QuadScalar(n2 / (d + 1));
}

inline DesignReport venkov_check(const GramMatrix& G, int d) {
  DesignReport rep;
  rep.venkov_defect = venkov_defect(G, d);
  const bool antip = code_params(G).antipodal;
  rep.design3 = antip && rep.venkov_defect.is_zero();
  rep.strength = rep.design3 ? 3 : 0;
  return rep;
}

// Largest t <= t_max with sum_{i,j} g_{k,d}((x_i,x_j)) exactly zero for all
// 1 <= k <= t.  t_max is bounded to keep the exact recurrences shallow.
inline DesignReport design_strength(const GramMatrix& G, int d, int t_max = 12) {
  if (t_max < 1 || t_max > 12)
    throw std::invalid_argument("design_strength: t_max must be in [1, 12]");
  DesignReport rep;
  const auto counts = G.value_counts();
  bool prefix_zero = true;
  for (int k = 1; k <= t_max; ++k) {
    QuadScalar sum;
    for (std::size_t v = 0; v < counts.size(); ++v) {
      if (!counts[v]) continue;
      sum += gegenbauer(k, d, G.palette[v]) * QuadScalar(Rational(counts[v]));
    }
    if (prefix_zero && sum.is_zero()) rep.strength = k;
    else prefix_zero = false;
    rep.moment_sums.push_back(std::move(sum));
  }
  rep.venkov_defect = venkov_defect(G, d);
  rep.design3 = rep.strength >= 3;
  return rep;
}

// Float-path Venkov defect for approximate configurations: direct double
// summation over unit-normalized rows.
inline double venkov_defect_numeric(const std::vector<std::vector<double>>& pts,
                                    int d) {
  const std::size_t n = pts.size();
  std::vector<std::vector<double>> u = pts;
  for (auto& p : u) {
    double nn = 0;
    for (double x : p) nn += x * x;
    const double s = 1.0 / std::sqrt(nn);
    for (double& x : p) x *= s;
  }
  double sum = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double t = 0;
      for (std::size_t k = 0; k < u[i].size(); ++k) t += u[i][k] * u[j][k];
      sum += t * t;
    }
  return sum - double(n) * n / (d + 1);
}

struct OptimalityVerdict {
  bool level_constant = false;   // |g_{2,d}| takes one nonzero value on ip_set
  bool equation_holds = false;   // (2N)^2/D - 4N == l^2 ((2N)^2 - 4N)
  bool optimal = false;
  QuadScalar level;              // |l|
  std::vector<QuadScalar> levels;  // signed g_{2,d} values, one per ip
};

// The optimality condition of the embedding theorem, checked exactly.
/// The hypothesis is implemented as "|g_{2,d}(a)| constant": the equation
// only uses l^2, and the flagship instances carry both signs.
inline OptimalityVerdict optimality_check(int d, unsigned long long half_n,
                                          const std::vector<QuadScalar>& ip_set) {
  if (ip_set.empty())
    throw std::invalid_argument("optimality_check: empty inner-product set");
  OptimalityVerdict out;
  for (const auto& x : ip_set) out.levels.push_back(gegenbauer2(d, x));
  out.level = out.levels.front().abs();
  out.level_constant = !out.level.is_zero();
  for (const auto& l : out.levels)
    if (l.abs() != out.level) {
      out.level_constant = false;
      break;
    }
  const Rational big_n(half_n);
  const Rational two_n = 2 * big_n;
  const Rational cap_d = Rational(d) * (d + 3) / 2;
  const QuadScalar lhs{two_n * two_n / cap_d - 4 * big_n};
  const QuadScalar rhs =
      out.level * out.level * QuadScalar(two_n * two_n - 4 * big_n);
  out.equation_holds = (lhs == rhs);
  out.optimal = out.level_constant && out.equation_holds;
  return out;
}

}  // namespace sphcode
