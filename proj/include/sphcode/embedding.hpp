#pragma once

// The degree-2 harmonic embedding: X on S^d maps to an antipodal code
// G_X u -G_X on the unit sphere of the space of degree-2 spherical
// harmonics.  The Gram-level representation is exact and canonical; the
// coordinate-level representation is floating point, for export.

#include "sphcode/configurations.hpp"
#include "sphcode/harmonics.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace sphcode {

// Entrywise image t -> g_{2,d}(t); exact, unit diagonal preserved.
inline GramMatrix embed_gram(const GramMatrix& G, int d) {
  GramMatrix H;
  H.n = G.n;
  H.d = int(harm_dim(2, d).convert_to<long long>()) - 1;
  H.idx.resize(G.idx.size());
  std::vector<QuadScalar> palette;
  std::map<QuadScalar, std::uint8_t> lut;
  std::vector<std::uint8_t> remap(G.palette.size());
  for (std::size_t v = 0; v < G.palette.size(); ++v)
    remap[v] = detail::palette_index(palette, lut, gegenbauer2(d, G.palette[v]));
  for (std::size_t e = 0; e < G.idx.size(); ++e) H.idx[e] = remap[G.idx[e]];
  H.palette = std::move(palette);
  return H;
}

// One representative per antipodal pair: the lexicographically larger of
// {x, -x}.  Errors out if X is not antipodal.
inline PointConfiguration antipodal_halve(const PointConfiguration& X) {
  if (!X.is_antipodal())
    throw invariant_error(X.name + ": antipodal_halve needs an antipodal set");
  PointConfiguration out;
  out.name = X.name + "-half";
  out.provenance = X.provenance + "; antipodal half (lex-larger representatives)";
  out.d = X.d;
  out.ambient = X.ambient;
  out.norm_sq = X.norm_sq;
  const std::size_t n = X.size();
  if (X.integral) {
    out.integral = true;
    for (std::size_t i = 0; i < n; ++i) {
      const std::int32_t* p = X.icoords.data() + i * X.ambient;
      bool larger = false;
      for (int j = 0; j < X.ambient; ++j) {
        if (p[j] != -p[j]) {  // first nonzero decides
          larger = p[j] > -p[j];
          break;
        }
      }
      if (larger) out.icoords.insert(out.icoords.end(), p, p + X.ambient);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& p = X.qpoints[i];
      bool larger = false;
      for (int j = 0; j < X.ambient; ++j) {
        const int s = p[j].sign();
        if (s != 0) {
          larger = s > 0;
          break;
        }
      }
      if (larger) out.qpoints.push_back(p);
    }
  }
  if (out.size() * 2 != n)
    throw invariant_error(X.name + ": halving did not split the set evenly");
  out.sort_points();
  out.validate();
  return out;
}

// The embedded antipodal code: size-2N exact Gram with block structure
// [[H, -H], [-H, H]], indices i and i+N forming an antipodal pair.
struct EmbeddedCode {
  int source_d = 0;
  int D = 0;             // dim Harm_2(S^d) = d(d+3)/2
  std::size_t half_n = 0;
  GramMatrix gram;       // 2N x 2N
  PointConfiguration half;  // the embedded representatives, for the float path
};

inline EmbeddedCode embed_code(const PointConfiguration& X) {
  EmbeddedCode out;
  out.source_d = X.d;
  out.D = X.d * (X.d + 3) / 2;
  out.half = X.is_antipodal() ? antipodal_halve(X) : X;
  const GramMatrix H = embed_gram(normalized_gram(out.half), X.d);
  const std::size_t n = out.half.size();
  out.half_n = n;

  GramMatrix& G = out.gram;
  G.n = int(2 * n);
  G.d = out.D - 1;
  std::vector<QuadScalar> palette;
  std::map<QuadScalar, std::uint8_t> lut;
  std::vector<std::uint8_t> pos(H.palette.size()), neg(H.palette.size());
  for (std::size_t v = 0; v < H.palette.size(); ++v) {
    pos[v] = detail::palette_index(palette, lut, H.palette[v]);
    neg[v] = detail::palette_index(palette, lut, -H.palette[v]);
  }
  G.idx.assign(4 * n * n, 0);
  const std::size_t N2 = 2 * n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint8_t v = H.idx[i * n + j];
      G.idx[i * N2 + j] = pos[v];
      G.idx[(i + n) * N2 + (j + n)] = pos[v];
      G.idx[i * N2 + (j + n)] = neg[v];
      G.idx[(i + n) * N2 + j] = neg[v];
    }
  G.palette = std::move(palette);
  return out;
}

// ---------------------------------------------------------------------------
// Coordinate realization (floating point)

namespace detail {

// Unit-normalized float coordinates; when the ambient dimension exceeds
// d+1 the points are re-expressed in an orthonormal basis of their span.
inline std::vector<std::vector<double>> unit_points(const PointConfiguration& X) {
  const std::size_t n = X.size();
  const double inv = 1.0 / std::sqrt(X.norm_sq.to_double());
  std::vector<std::vector<double>> P(n, std::vector<double>(X.ambient));
  for (std::size_t i = 0; i < n; ++i)
    for (int j = 0; j < X.ambient; ++j) P[i][j] = X.coord(i, j).to_double() * inv;
  if (X.ambient == X.d + 1) return P;
  // modified Gram-Schmidt over the points to get a span basis
  std::vector<std::vector<double>> basis;
  for (std::size_t i = 0; i < n && int(basis.size()) < X.d + 1; ++i) {
    std::vector<double> v = P[i];
    for (const auto& b : basis) {
      double proj = 0;
      for (int k = 0; k < X.ambient; ++k) proj += v[k] * b[k];
      for (int k = 0; k < X.ambient; ++k) v[k] -= proj * b[k];
    }
    double nn = 0;
    for (double x : v) nn += x * x;
    if (nn < 1e-18) continue;
    const double s = 1.0 / std::sqrt(nn);
    for (double& x : v) x *= s;
    basis.push_back(std::move(v));
  }
  if (int(basis.size()) != X.d + 1)
    throw std::runtime_error(X.name + ": point span does not match dimension d+1");
  std::vector<std::vector<double>> Q(n, std::vector<double>(X.d + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (int b = 0; b <= X.d; ++b) {
      double s = 0;
      for (int k = 0; k < X.ambient; ++k) s += P[i][k] * basis[b][k];
      Q[i][b] = s;
    }
  return Q;
}

}  // namespace detail

// Explicit unit vectors in R^D realizing the embedding:
//   x -> sqrt((d+1)/d) * vec(x x^T - I/(d+1))
// in an orthonormal basis of traceless symmetric matrices (sqrt-2 scaled
// off-diagonal units plus Helmert-style diagonal vectors).  Rows i and
// i+N are the antipodal pair -row_i = row_{i+N}.
inline std::vector<std::vector<double>> embed_coords(const PointConfiguration& X) {
  PointConfiguration half = X.is_antipodal() ? antipodal_halve(X) : X;
  const auto P = detail::unit_points(half);
  const int nd = X.d + 1;
  const int D = X.d * (X.d + 3) / 2;
  const double scale = std::sqrt(double(nd) / X.d);
  const double sqrt2 = std::sqrt(2.0);
  const std::size_t n = P.size();
  std::vector<std::vector<double>> out(2 * n, std::vector<double>(D));
  for (std::size_t i = 0; i < n; ++i) {
    auto& row = out[i];
    int c = 0;
    for (int a = 0; a < nd; ++a)
      for (int b = a + 1; b < nd; ++b) row[c++] = scale * sqrt2 * P[i][a] * P[i][b];
    // Helmert components of the traceless diagonal (M_aa = x_a^2 - 1/nd)
    for (int m = 1; m < nd; ++m) {
      double s = 0;
      for (int a = 0; a < m; ++a) s += P[i][a] * P[i][a] - 1.0 / nd;
      s -= double(m) * (P[i][m] * P[i][m] - 1.0 / nd);
      row[c++] = scale * s / std::sqrt(double(m) * (m + 1));
    }
    for (int k = 0; k < D; ++k) out[i + n][k] = -row[k];
  }
  return out;
}

}  // namespace sphcode
