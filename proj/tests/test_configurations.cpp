#include "sphcode/configurations.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

using namespace sphcode;

namespace {

std::vector<std::string> ip_strings(const PointConfiguration& X) {
  std::vector<std::string> out;
  for (const auto& v : normalized_gram(X).offdiag_values()) out.push_back(v.str());
  return out;
}

const std::string kTmp = "cfg_test_tmp.cfg";

}  // namespace

TEST_CASE("icosahedron") {
  const auto X = icosahedron();
  CHECK(X.size() == 12);
  CHECK(X.d == 2);
  CHECK(X.is_antipodal());
  CHECK(ip_strings(X) ==
        std::vector<std::string>{"-1", "0-1/5*sqrt(5)", "0+1/5*sqrt(5)"});
}

TEST_CASE("600-cell") {
  const auto X = cell600();
  CHECK(X.size() == 120);
  CHECK(X.d == 3);
  CHECK(X.is_antipodal());
  CHECK(ip_strings(X) ==
        std::vector<std::string>{"-1", "-1/4-1/4*sqrt(5)", "-1/2",
                                 "1/4-1/4*sqrt(5)", "0", "-1/4+1/4*sqrt(5)",
                                 "1/2", "1/4+1/4*sqrt(5)"});
}

TEST_CASE("E8 roots") {
  const auto X = e8_roots();
  CHECK(X.size() == 240);
  CHECK(X.d == 7);
  CHECK(X.is_antipodal());
  CHECK(ip_strings(X) == std::vector<std::string>{"-1", "-1/2", "0", "1/2"});
  // antipodal pairs: 120 unordered pairs at inner product -1
  const auto G = normalized_gram(X);
  unsigned long long neg = 0;
  const auto counts = G.value_counts();
  for (std::size_t v = 0; v < G.palette.size(); ++v)
    if (G.palette[v] == QuadScalar(-1)) neg = counts[v];
  CHECK(neg == 240);  // ordered pairs
}

TEST_CASE("Golay code") {
  const auto C = golay_code();
  CHECK(C.words().size() == 4096);
  const auto dist = C.weight_distribution();
  CHECK(dist[0] == 1);
  CHECK(dist[8] == 759);
  CHECK(dist[12] == 2576);
  CHECK(dist[16] == 759);
  CHECK(dist[24] == 1);
  for (int w = 1; w < 8; ++w) CHECK(dist[w] == 0);
}

TEST_CASE("cross-sections of E8: kissing 56 and Schlafli 27") {
  const auto e8 = e8_roots();
  const auto k56 = cross_section(e8, {0}, {QuadScalar(Rational(1, 2))});
  CHECK(k56.size() == 56);
  CHECK(k56.d == 6);
  CHECK(ip_strings(k56) == std::vector<std::string>{"-1", "-1/3", "1/3"});
  CHECK(k56.is_antipodal());

  const auto s27 = cross_section(k56, {0}, {QuadScalar(Rational(1, 3))});
  CHECK(s27.size() == 27);
  CHECK(s27.d == 5);
  CHECK(ip_strings(s27) == std::vector<std::string>{"-1/2", "1/4"});
  CHECK_FALSE(s27.is_antipodal());
}

TEST_CASE("cross-section count is anchor-independent") {
  const auto e8 = e8_roots();
  for (std::size_t anchor : {std::size_t(3), std::size_t(57), std::size_t(139)}) {
    const auto sec = cross_section(e8, {anchor}, {QuadScalar(Rational(1, 2))});
    CHECK(sec.size() == 56);
    CHECK(ip_strings(sec) == std::vector<std::string>{"-1", "-1/3", "1/3"});
  }
}

TEST_CASE("cross-section exactness: uniform norm and same scalar field") {
  const auto ico = icosahedron();
  // section of the icosahedron at one vertex: the 5 neighbours at 1/sqrt5
  const QuadScalar ip(Rational(0), Rational(1, 5), 5);
  const auto sec = cross_section(ico, {11}, {ip});
  CHECK(sec.size() == 5);
  CHECK(sec.d == 1);
  for (std::size_t i = 0; i < sec.size(); ++i) CHECK(sec.dot(i, i) == sec.norm_sq);
}

TEST_CASE("cross-section error paths") {
  const auto e8 = e8_roots();
  CHECK_THROWS_AS(cross_section(e8, {0}, {QuadScalar(Rational(7, 16))}),
                  empty_section);
  CHECK_THROWS_AS(cross_section(e8, {0, 0}, {QuadScalar(0), QuadScalar(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(cross_section(e8, {0}, {}), std::invalid_argument);
}

TEST_CASE("normalized gram basics") {
  PointConfiguration single;
  single.name = "single";
  single.d = 0;
  single.ambient = 1;
  single.norm_sq = QuadScalar(4);
  single.integral = true;
  single.icoords = {2};
  const auto G = normalized_gram(single);
  CHECK(G.n == 1);
  CHECK(G(0, 0) == QuadScalar(1));
}

TEST_CASE("save/load round trip is exact") {
  const auto X = e8_roots();
  save(X, kTmp);
  const auto Y = load(kTmp);
  CHECK(Y.size() == X.size());
  CHECK(Y.d == X.d);
  CHECK(Y.norm_sq == X.norm_sq);
  for (std::size_t i = 0; i < X.size(); ++i)
    for (int j = 0; j < X.ambient; ++j) CHECK(X.coord(i, j) == Y.coord(i, j));

  const auto I = icosahedron();
  save(I, kTmp);
  const auto J = load(kTmp);
  CHECK(J.norm_sq == I.norm_sq);
  CHECK(J.qpoints == I.qpoints);
  std::remove(kTmp.c_str());
}

TEST_CASE("load rejects corrupt files") {
  {
    std::ofstream f(kTmp);
    f << "sphcode-config v1\nname x\nd 1\nambient 2\nnormsq 2\ncount 2\n1 1\n";
  }
  CHECK_THROWS_AS(load(kTmp), parse_error);  // truncated
  {
    std::ofstream f(kTmp);
    f << "sphcode-config v1\nname x\nd 1\nambient 2\nnormsq 2\ncount 2\n1 1\n2 1\n";
  }
  CHECK_THROWS_AS(load(kTmp), invariant_error);  // non-uniform norms
  {
    std::ofstream f(kTmp);
    f << "not a config\n";
  }
  CHECK_THROWS_AS(load(kTmp), parse_error);
  std::remove(kTmp.c_str());
}

TEST_CASE("gram file round trip") {
  const auto G = normalized_gram(icosahedron());
  save_gram(G, kTmp);
  const auto H = load_gram(kTmp);
  CHECK(H.n == G.n);
  for (int i = 0; i < G.n; ++i)
    for (int j = 0; j < G.n; ++j) CHECK(G(i, j) == H(i, j));
  std::remove(kTmp.c_str());
}
