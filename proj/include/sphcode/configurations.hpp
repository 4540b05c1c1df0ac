#pragma once

// Exact constructions of the sharp point configurations (icosahedron,
// 600-cell, E8 roots, Leech minimal vectors) plus a generic cross-section
// operator, exact Gram assembly, and file persistence.

#include "sphcode/scalars.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sphcode {

class invariant_error : public std::runtime_error {
 public:
  explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

class empty_section : public std::runtime_error {
 public:
  explicit empty_section(const std::string& what) : std::runtime_error(what) {}
};

// N points with a shared exact squared norm. `d` is the intrinsic sphere
// dimension; after a cross-section the points stay in the original ambient
// coordinates, so ambient may exceed d+1.
struct PointConfiguration {
  std::string name;
  std::string provenance;
  int d = 0;
  int ambient = 0;
  QuadScalar norm_sq;
  bool integral = false;
  std::vector<std::int32_t> icoords;                // N*ambient, row-major
  std::vector<std::vector<QuadScalar>> qpoints;

  std::size_t size() const {
    return integral ? icoords.size() / std::size_t(ambient) : qpoints.size();
  }

  QuadScalar coord(std::size_t i, int j) const {
    if (integral) return QuadScalar(icoords[i * ambient + j]);
    return qpoints[i][j];
  }

  std::vector<QuadScalar> point(std::size_t i) const {
    if (!integral) return qpoints[i];
    std::vector<QuadScalar> p(ambient);
    for (int j = 0; j < ambient; ++j) p[j] = QuadScalar(icoords[i * ambient + j]);
    return p;
  }

  QuadScalar dot(std::size_t i, std::size_t j) const {
    if (integral) {
      std::int64_t s = 0;
      const std::int32_t* a = icoords.data() + i * ambient;
      const std::int32_t* b = icoords.data() + j * ambient;
      for (int k = 0; k < ambient; ++k) s += std::int64_t(a[k]) * b[k];
      return QuadScalar(s);
    }
    QuadScalar s;
    for (int k = 0; k < ambient; ++k) s += qpoints[i][k] * qpoints[j][k];
    return s;
  }

  // Canonical order: ascending lexicographic on exact coordinates.
  void sort_points() {
    const std::size_t n = size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    if (integral) {
      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const std::int32_t* a = icoords.data() + x * ambient;
        const std::int32_t* b = icoords.data() + y * ambient;
        return std::lexicographical_compare(a, a + ambient, b, b + ambient);
      });
      std::vector<std::int32_t> out(icoords.size());
      for (std::size_t i = 0; i < n; ++i)
        std::copy_n(icoords.data() + order[i] * ambient, ambient,
                    out.data() + i * ambient);
      icoords = std::move(out);
    } else {
      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return std::lexicographical_compare(qpoints[x].begin(), qpoints[x].end(),
                                            qpoints[y].begin(), qpoints[y].end());
      });
      std::vector<std::vector<QuadScalar>> out(n);
      for (std::size_t i = 0; i < n; ++i) out[i] = std::move(qpoints[order[i]]);
      qpoints = std::move(out);
    }
  }

  bool is_antipodal() const;
  void validate() const;
};

// Symmetric exact Gram matrix of normalized inner products, stored as a
// small palette of distinct values plus one byte index per entry.
struct GramMatrix {
  int n = 0;
  int d = 0;
  std::vector<QuadScalar> palette;
  std::vector<std::uint8_t> idx;

  const QuadScalar& operator()(std::size_t i, std::size_t j) const {
    return palette[idx[i * n + j]];
  }
  std::uint8_t index_at(std::size_t i, std::size_t j) const { return idx[i * n + j]; }

  // Number of ordered pairs (diagonal included) taking each palette value.
  std::vector<unsigned long long> value_counts() const {
    std::vector<unsigned long long> c(palette.size(), 0);
    for (std::uint8_t v : idx) ++c[v];
    return c;
  }

  // Distinct off-diagonal values in ascending order.
  std::vector<QuadScalar> offdiag_values() const {
    std::vector<unsigned long long> c = value_counts();
    for (int i = 0; i < n; ++i) --c[idx[i * std::size_t(n) + i]];
    std::vector<QuadScalar> vals;
    for (std::size_t v = 0; v < c.size(); ++v)
      if (c[v]) vals.push_back(palette[v]);
    std::sort(vals.begin(), vals.end());
    return vals;
  }
};

inline bool PointConfiguration::is_antipodal() const {
  const std::size_t n = size();
  if (integral) {
    std::set<std::vector<std::int32_t>> rows;
    for (std::size_t i = 0; i < n; ++i)
      rows.emplace(icoords.begin() + i * ambient, icoords.begin() + (i + 1) * ambient);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::int32_t> neg(ambient);
      for (int j = 0; j < ambient; ++j) neg[j] = -icoords[i * ambient + j];
      if (!rows.count(neg)) return false;
    }
    return true;
  }
  std::set<std::vector<QuadScalar>> rows(qpoints.begin(), qpoints.end());
  for (const auto& p : qpoints) {
    std::vector<QuadScalar> neg(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) neg[j] = -p[j];
    if (!rows.count(neg)) return false;
  }
  return true;
}

inline void PointConfiguration::validate() const {
  const std::size_t n = size();
  if (n == 0) throw invariant_error(name + ": empty configuration");
  if (ambient < d + 1)
    throw invariant_error(name + ": ambient dimension below d+1");
  if (norm_sq.sign() <= 0) throw invariant_error(name + ": norm_sq must be positive");
  for (std::size_t i = 0; i < n; ++i) {
    if (dot(i, i) != norm_sq)
      throw invariant_error(name + ": point " + std::to_string(i) +
                            " has non-uniform squared norm");
  }
  // duplicates: sort a copy of the index set
  if (integral) {
    std::set<std::vector<std::int32_t>> rows;
    for (std::size_t i = 0; i < n; ++i)
      if (!rows.emplace(icoords.begin() + i * ambient,
                        icoords.begin() + (i + 1) * ambient).second)
        throw invariant_error(name + ": repeated point");
  } else {
    std::set<std::vector<QuadScalar>> rows;
    for (const auto& p : qpoints)
      if (!rows.insert(p).second) throw invariant_error(name + ": repeated point");
  }
}

// ---------------------------------------------------------------------------
// Constructions

// 12 points (0, ±1, ±phi) cyclic on S^2, phi = (1+sqrt 5)/2, |x|^2 = (5+sqrt 5)/2.
inline PointConfiguration icosahedron() {
  const QuadScalar phi(Rational(1, 2), Rational(1, 2), 5);
  PointConfiguration X;
  X.name = "icosahedron";
  X.provenance = "cyclic (0, +-1, +-phi) over Q(sqrt 5)";
  X.d = 2;
  X.ambient = 3;
  X.norm_sq = QuadScalar(1) + phi * phi;
  for (int c = 0; c < 3; ++c)
    for (int s1 : {1, -1})
      for (int s2 : {1, -1}) {
        std::vector<QuadScalar> p(3);
        p[c] = QuadScalar(0);
        p[(c + 1) % 3] = QuadScalar(s1);
        p[(c + 2) % 3] = QuadScalar(s2) * phi;
        X.qpoints.push_back(std::move(p));
      }
  X.sort_points();
  X.validate();
  return X;
}

// 120 unit quaternions of the binary icosahedral group, scaled by 2 so all
// coordinates live in Z[phi]; |x|^2 = 4.
inline PointConfiguration cell600() {
  const QuadScalar phi(Rational(1, 2), Rational(1, 2), 5);
  const QuadScalar phi_inv = phi - QuadScalar(1);  // 1/phi
  PointConfiguration X;
  X.name = "600-cell";
  X.provenance = "binary icosahedral group 2I, doubled, over Q(sqrt 5)";
  X.d = 3;
  X.ambient = 4;
  X.norm_sq = QuadScalar(4);
  for (int c = 0; c < 4; ++c)
    for (int s : {2, -2}) {
      std::vector<QuadScalar> p(4);
      p[c] = QuadScalar(s);
      X.qpoints.push_back(std::move(p));
    }
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<QuadScalar> p(4);
    for (int c = 0; c < 4; ++c) p[c] = QuadScalar((mask >> c) & 1 ? -1 : 1);
    X.qpoints.push_back(std::move(p));
  }
  static constexpr int kEvenPerms[12][4] = {
      {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {1, 0, 3, 2},
      {1, 2, 0, 3}, {1, 3, 2, 0}, {2, 0, 1, 3}, {2, 1, 3, 0},
      {2, 3, 0, 1}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 2, 1, 0}};
  for (const auto& perm : kEvenPerms)
    for (int mask = 0; mask < 8; ++mask) {
      const QuadScalar vals[4] = {
          QuadScalar(mask & 1 ? -1 : 1) * phi, QuadScalar(mask & 2 ? -1 : 1),
          QuadScalar(mask & 4 ? -1 : 1) * phi_inv, QuadScalar(0)};
      std::vector<QuadScalar> p(4);
      for (int c = 0; c < 4; ++c) p[perm[c]] = vals[c];
      X.qpoints.push_back(std::move(p));
    }
  X.sort_points();
  X.validate();
  return X;
}

// 240 roots of E8, doubled to integer coordinates of squared norm 8:
// 112 of shape (+-2^2, 0^6) and 128 of shape (+-1^8) with evenly many minus signs.
inline PointConfiguration e8_roots() {
  PointConfiguration X;
  X.name = "e8-roots";
  X.provenance = "E8 root system, doubled integer coordinates";
  X.d = 7;
  X.ambient = 8;
  X.norm_sq = QuadScalar(8);
  X.integral = true;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {2, -2})
        for (int sj : {2, -2}) {
          std::array<std::int32_t, 8> p{};
          p[i] = si;
          p[j] = sj;
          X.icoords.insert(X.icoords.end(), p.begin(), p.end());
        }
  for (int mask = 0; mask < 256; ++mask) {
    if (std::popcount(unsigned(mask)) % 2 != 0) continue;
    for (int c = 0; c < 8; ++c)
      X.icoords.push_back((mask >> c) & 1 ? -1 : 1);
  }
  X.sort_points();
  X.validate();
  return X;
}

// ---------------------------------------------------------------------------
// Binary Golay code

// Extended [24,12,8] Golay code from the bordered quadratic-residue
// generator [I | B], B[i][j] = 1 iff (i-j) mod 11 is a QR or i == j.
class GolayCode {
 public:
  GolayCode() {
    const auto gen = generator();
    words_.resize(4096);
    for (std::uint32_t m = 0; m < 4096; ++m) {
      std::uint32_t w = 0;
      for (int i = 0; i < 12; ++i)
        if ((m >> i) & 1) w ^= gen[i];
      words_[m] = w;
    }
  }

  static std::array<std::uint32_t, 12> generator() {
    static constexpr bool kQR[11] = {false, true, false, true, true, true,
                                     false, false, false, true, false};
    std::array<std::uint32_t, 12> gen{};
    for (int i = 0; i < 12; ++i) {
      std::uint32_t b = 0;
      if (i < 11) {
        for (int j = 0; j < 11; ++j)
          if (i == j || kQR[((i - j) % 11 + 11) % 11]) b |= 1u << j;
        b |= 1u << 11;
      } else {
        for (int j = 0; j < 11; ++j) b |= 1u << j;
      }
      gen[i] = (1u << i) | (b << 12);
    }
    return gen;
  }

  const std::vector<std::uint32_t>& words() const { return words_; }

  std::array<unsigned, 25> weight_distribution() const {
    std::array<unsigned, 25> dist{};
    for (auto w : words_) ++dist[std::popcount(w)];
    return dist;
  }

 private:
  std::vector<std::uint32_t> words_;
};

inline GolayCode golay_code() { return GolayCode(); }

// 196560 minimal vectors of the Leech lattice at squared norm 32, in the
// standard Golay-based integer coordinates.
inline PointConfiguration leech_min_vectors() {
  const GolayCode golay;
  PointConfiguration X;
  X.name = "leech-minimal";
  X.provenance = "Golay construction, squared norm 32";
  X.d = 23;
  X.ambient = 24;
  X.norm_sq = QuadScalar(32);
  X.integral = true;
  X.icoords.reserve(std::size_t(196560) * 24);
  // shape (-+3, +-1^23): minus signs on a codeword, one coordinate pushed to +-3
  for (std::uint32_t c : golay.words())
    for (int k = 0; k < 24; ++k) {
      for (int j = 0; j < 24; ++j) {
        std::int32_t v = (c >> j) & 1 ? -1 : 1;
        if (j == k) v = (c >> j) & 1 ? 3 : -3;
        X.icoords.push_back(v);
      }
    }
  // shape (+-2^8, 0^16) on octads with an even number of minus signs
  for (std::uint32_t c : golay.words()) {
    if (std::popcount(c) != 8) continue;
    std::array<int, 8> pos;
    int np = 0;
    for (int j = 0; j < 24; ++j)
      if ((c >> j) & 1) pos[np++] = j;
    for (int mask = 0; mask < 256; ++mask) {
      if (std::popcount(unsigned(mask)) % 2 != 0) continue;
      std::array<std::int32_t, 24> p{};
      for (int t = 0; t < 8; ++t) p[pos[t]] = (mask >> t) & 1 ? -2 : 2;
      X.icoords.insert(X.icoords.end(), p.begin(), p.end());
    }
  }
  // shape (+-4^2, 0^22)
  for (int i = 0; i < 24; ++i)
    for (int j = i + 1; j < 24; ++j)
      for (int si : {4, -4})
        for (int sj : {4, -4}) {
          std::array<std::int32_t, 24> p{};
          p[i] = si;
          p[j] = sj;
          X.icoords.insert(X.icoords.end(), p.begin(), p.end());
        }
  X.sort_points();
  X.validate();
  return X;
}

// ---------------------------------------------------------------------------
// Gram assembly and inner-product statistics

namespace detail {

inline std::uint8_t palette_index(std::vector<QuadScalar>& palette,
                                  std::map<QuadScalar, std::uint8_t>& lut,
                                  const QuadScalar& v) {
  auto it = lut.find(v);
  if (it != lut.end()) return it->second;
  if (palette.size() >= 255)
    throw std::length_error("GramMatrix: more than 255 distinct values");
  palette.push_back(v);
  const std::uint8_t id = std::uint8_t(palette.size() - 1);
  lut.emplace(v, id);
  return id;
}

}  // namespace detail

inline GramMatrix normalized_gram(const PointConfiguration& X) {
  const std::size_t n = X.size();
  if (n > 20000)
    throw std::length_error("normalized_gram: configuration too large to materialize");
  GramMatrix G;
  G.n = int(n);
  G.d = X.d;
  G.idx.assign(n * n, 0);
  std::vector<QuadScalar> palette;
  std::map<QuadScalar, std::uint8_t> lut;
  if (X.integral) {
    const std::int64_t norm = X.dot(0, 0).rational_part().convert_to<std::int64_t>();
    std::map<std::int64_t, std::uint8_t> ilut;
    for (std::size_t i = 0; i < n; ++i) {
      const std::int32_t* a = X.icoords.data() + i * X.ambient;
      for (std::size_t j = i; j < n; ++j) {
        const std::int32_t* b = X.icoords.data() + j * X.ambient;
        std::int64_t s = 0;
        for (int k = 0; k < X.ambient; ++k) s += std::int64_t(a[k]) * b[k];
        auto it = ilut.find(s);
        std::uint8_t id;
        if (it != ilut.end()) {
          id = it->second;
        } else {
          if (std::llabs(s) > norm)
            throw invariant_error(X.name + ": inner product outside [-1,1]");
          id = detail::palette_index(palette, lut,
                                     QuadScalar(Rational(s, norm)));
          ilut.emplace(s, id);
        }
        G.idx[i * n + j] = id;
        G.idx[j * n + i] = id;
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        QuadScalar v = X.dot(i, j) / X.norm_sq;
        if (i != j && (v > QuadScalar(1) || v < QuadScalar(-1)))
          throw invariant_error(X.name + ": inner product outside [-1,1]");
        const std::uint8_t id = detail::palette_index(palette, lut, v);
        G.idx[i * n + j] = id;
        G.idx[j * n + i] = id;
      }
  }
  G.palette = std::move(palette);
  return G;
}

// Off-diagonal normalized inner-product counts without materializing the
// Gram matrix; handles the 196560-point Leech set.  Integral path runs
// coordinate-major accumulation so the inner loops vectorize.
inline std::map<QuadScalar, unsigned long long> ip_histogram(
    const PointConfiguration& X) {
  const std::size_t n = X.size();
  std::map<QuadScalar, unsigned long long> out;
  if (!X.integral) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        out[X.dot(i, j) / X.norm_sq] += 2;
    return out;
  }
  const std::int64_t norm = X.dot(0, 0).rational_part().convert_to<std::int64_t>();
  if (norm > 4096) throw std::length_error("ip_histogram: norm too large");
  const int amb = X.ambient;
  // coordinate-major copy
  std::vector<std::vector<std::int32_t>> cols(amb, std::vector<std::int32_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (int k = 0; k < amb; ++k) cols[k][i] = X.icoords[i * amb + k];
  std::vector<std::int32_t> acc(n);
  std::vector<unsigned long long> hist(2 * norm + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(acc.begin() + i + 1, acc.end(), 0);
    for (int k = 0; k < amb; ++k) {
      const std::int32_t x = X.icoords[i * amb + k];
      if (x == 0) continue;
      const std::int32_t* col = cols[k].data();
      std::int32_t* a = acc.data();
      for (std::size_t j = i + 1; j < n; ++j) a[j] += x * col[j];
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::int32_t v = acc[j];
      if (v < -norm || v > norm)
        throw invariant_error(X.name + ": inner product outside [-1,1]");
      ++hist[v + norm];
    }
  }
  for (std::int64_t v = -norm; v <= norm; ++v)
    if (hist[v + norm]) out[QuadScalar(Rational(v, norm))] = 2 * hist[v + norm];
  return out;
}

// ---------------------------------------------------------------------------
// Cross-sections

// Points of X with prescribed normalized inner products against the anchor
// points, projected onto the orthogonal complement of the anchor span and
// rescaled to clear denominators.  The intrinsic dimension drops by the
// anchor rank; ambient coordinates are kept.
inline PointConfiguration cross_section(const PointConfiguration& X,
                                        const std::vector<std::size_t>& anchors,
                                        const std::vector<QuadScalar>& ips) {
  if (anchors.empty() || anchors.size() != ips.size())
    throw std::invalid_argument("cross_section: need matching anchors and ips");
  {
    std::set<std::size_t> uniq(anchors.begin(), anchors.end());
    if (uniq.size() != anchors.size())
      throw std::invalid_argument("cross_section: anchors must be distinct");
  }
  const std::size_t m = anchors.size();
  const std::size_t n = X.size();
  const int amb = X.ambient;

  std::vector<std::vector<QuadScalar>> A(m);
  for (std::size_t a = 0; a < m; ++a) A[a] = X.point(anchors[a]);

  // anchor Gram and target dots
  std::vector<std::vector<QuadScalar>> S(m, std::vector<QuadScalar>(m));
  std::vector<QuadScalar> target(m);
  for (std::size_t a = 0; a < m; ++a) {
    target[a] = ips[a] * X.norm_sq;
    for (std::size_t b = 0; b < m; ++b) S[a][b] = X.dot(anchors[a], anchors[b]);
  }

  // solve S c = target by exact Gaussian elimination; rank deficiency leaves
  // free coefficients at zero and is reported in the provenance
  std::vector<std::vector<QuadScalar>> M = S;
  std::vector<QuadScalar> rhs = target;
  std::vector<QuadScalar> c(m, QuadScalar(0));
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < m; ++col) {
    std::size_t p = row;
    while (p < m && M[p][col].is_zero()) ++p;
    if (p == m) continue;
    std::swap(M[p], M[row]);
    std::swap(rhs[p], rhs[row]);
    for (std::size_t q = 0; q < m; ++q) {
      if (q == row || M[q][col].is_zero()) continue;
      QuadScalar f = M[q][col] / M[row][col];
      for (std::size_t t = col; t < m; ++t) M[q][t] -= f * M[row][t];
      rhs[q] -= f * rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  const std::size_t rank = pivot_col.size();
  for (std::size_t t = 0; t < rank; ++t) c[pivot_col[t]] = rhs[t] / M[t][pivot_col[t]];
  for (std::size_t q = rank; q < m; ++q)
    if (!rhs[q].is_zero())
      throw empty_section("cross_section: inconsistent anchor constraints");
  // verify the solve
  for (std::size_t a = 0; a < m; ++a) {
    QuadScalar lhs;
    for (std::size_t b = 0; b < m; ++b) lhs += S[a][b] * c[b];
    if (lhs != target[a])
      throw empty_section("cross_section: target dots unreachable in anchor span");
  }

  // shared correction w = sum c_a * anchor_a and section norm
  std::vector<QuadScalar> w(amb);
  for (std::size_t a = 0; a < m; ++a)
    for (int k = 0; k < amb; ++k) w[k] += c[a] * A[a][k];
  QuadScalar ct;
  for (std::size_t a = 0; a < m; ++a) ct += c[a] * target[a];
  QuadScalar new_norm = X.norm_sq - ct;
  if (new_norm.sign() <= 0)
    throw empty_section("cross_section: section norm not positive");

  PointConfiguration out;
  out.d = X.d - int(rank);
  out.ambient = amb;
  out.name = X.name + "-section";
  out.provenance = X.name + " section, rank " + std::to_string(rank) +
                   (rank < m ? " (anchor set rank deficient)" : "");
  std::vector<std::vector<QuadScalar>> pts;
  for (std::size_t i = 0; i < n; ++i) {
    bool keep = true;
    for (std::size_t a = 0; a < m && keep; ++a)
      keep = (X.dot(i, anchors[a]) == target[a]);
    if (!keep) continue;
    std::vector<QuadScalar> v(amb);
    for (int k = 0; k < amb; ++k) v[k] = X.coord(i, k) - w[k];
    pts.push_back(std::move(v));
  }
  if (pts.empty()) throw empty_section("cross_section: no point meets the constraints");

  // clear denominators (both rational and radical components)
  BigInt lcm = 1;
  auto fold = [&lcm](const Rational& q) {
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(q));
  };
  for (const auto& p : pts)
    for (const auto& v : p) {
      fold(v.rational_part());
      fold(v.radical_coeff());
    }
  if (lcm != 1) {
    const QuadScalar scale{Rational(lcm)};
    for (auto& p : pts)
      for (auto& v : p) v *= scale;
    new_norm *= scale * scale;
  }

  bool all_int = new_norm.is_rational();
  for (const auto& p : pts)
    for (const auto& v : p)
      all_int = all_int && v.is_rational();
  if (all_int) {
    out.integral = true;
    out.icoords.reserve(pts.size() * amb);
    for (const auto& p : pts)
      for (const auto& v : p)
        out.icoords.push_back(v.rational_part().convert_to<std::int32_t>());
  } else {
    out.qpoints = std::move(pts);
  }
  out.norm_sq = std::move(new_norm);
  out.sort_points();
  out.validate();
  return out;
}

// ---------------------------------------------------------------------------
// Persistence: versioned text format, exact scalars, LF line endings.

inline void save(const PointConfiguration& X, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("save: cannot open " + path);
  f << "sphcode-config v1\n";
  f << "name " << X.name << "\n";
  if (!X.provenance.empty()) f << "provenance " << X.provenance << "\n";
  f << "d " << X.d << "\n";
  f << "ambient " << X.ambient << "\n";
  f << "normsq " << X.norm_sq.str() << "\n";
  f << "count " << X.size() << "\n";
  const std::size_t n = X.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (int j = 0; j < X.ambient; ++j) {
      if (j) f << ' ';
      f << X.coord(i, j).str();
    }
    f << '\n';
  }
  if (!f) throw std::runtime_error("save: write failed for " + path);
}

inline PointConfiguration load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("load: cannot open " + path);
  std::string line;
  if (!std::getline(f, line) || line != "sphcode-config v1")
    throw parse_error(path + ": bad or missing header");
  PointConfiguration X;
  long long count = -1;
  int have = 0;
  while (count < 0 && std::getline(f, line)) {
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "name") {
      std::getline(ls >> std::ws, X.name);
    } else if (key == "provenance") {
      std::getline(ls >> std::ws, X.provenance);
    } else if (key == "d") {
      if (!(ls >> X.d)) throw parse_error(path + ": bad d line");
      have |= 1;
    } else if (key == "ambient") {
      if (!(ls >> X.ambient)) throw parse_error(path + ": bad ambient line");
      have |= 2;
    } else if (key == "normsq") {
      std::string s;
      if (!(ls >> s)) throw parse_error(path + ": bad normsq line");
      X.norm_sq = QuadScalar::parse(s);
      have |= 4;
    } else if (key == "count") {
      if (!(ls >> count) || count <= 0) throw parse_error(path + ": bad count line");
    } else {
      throw parse_error(path + ": unknown key '" + key + "'");
    }
  }
  if (count < 0 || have != 7) throw parse_error(path + ": incomplete header");
  if (X.ambient <= 0 || X.ambient > 1024) throw parse_error(path + ": bad ambient");
  bool all_int = true;
  for (long long i = 0; i < count; ++i) {
    if (!std::getline(f, line))
      throw parse_error(path + ": truncated at point " + std::to_string(i));
    std::istringstream ls(line);
    std::vector<QuadScalar> p(X.ambient);
    for (int j = 0; j < X.ambient; ++j) {
      std::string tok;
      if (!(ls >> tok))
        throw parse_error(path + ": short point line " + std::to_string(i));
      p[j] = QuadScalar::parse(tok);
      all_int = all_int && p[j].is_rational() &&
                boost::multiprecision::denominator(p[j].rational_part()) == 1;
    }
    X.qpoints.push_back(std::move(p));
  }
  if (all_int && X.norm_sq.is_rational()) {
    X.integral = true;
    X.icoords.reserve(std::size_t(count) * X.ambient);
    for (const auto& p : X.qpoints)
      for (const auto& v : p)
        X.icoords.push_back(v.rational_part().convert_to<std::int32_t>());
    X.qpoints.clear();
  }
  X.validate();
  return X;
}

// Exact Gram dump: versioned header, then n rows of n exact scalars.
inline void save_gram(const GramMatrix& G, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("save_gram: cannot open " + path);
  f << "sphcode-gram v1\n";
  f << "n " << G.n << "\n";
  f << "d " << G.d << "\n";
  for (int i = 0; i < G.n; ++i) {
    for (int j = 0; j < G.n; ++j) {
      if (j) f << ' ';
      f << G(i, j).str();
    }
    f << '\n';
  }
  if (!f) throw std::runtime_error("save_gram: write failed for " + path);
}

inline GramMatrix load_gram(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("load_gram: cannot open " + path);
  std::string line;
  if (!std::getline(f, line) || line != "sphcode-gram v1")
    throw parse_error(path + ": bad or missing gram header");
  GramMatrix G;
  std::string key;
  if (!(f >> key >> G.n) || key != "n" || G.n <= 0 || G.n > 20000)
    throw parse_error(path + ": bad n line");
  if (!(f >> key >> G.d) || key != "d" || G.d < 1)
    throw parse_error(path + ": bad d line");
  G.idx.assign(std::size_t(G.n) * G.n, 0);
  std::map<QuadScalar, std::uint8_t> lut;
  for (std::size_t e = 0; e < G.idx.size(); ++e) {
    std::string tok;
    if (!(f >> tok)) throw parse_error(path + ": truncated gram data");
    G.idx[e] = detail::palette_index(G.palette, lut, QuadScalar::parse(tok));
  }
  for (int i = 0; i < G.n; ++i) {
    if (G(i, i) != QuadScalar(1)) throw invariant_error(path + ": diagonal not 1");
    for (int j = 0; j < i; ++j)
      if (G.index_at(i, j) != G.index_at(j, i))
        throw invariant_error(path + ": gram not symmetric");
  }
  return G;
}

}  // namespace sphcode
