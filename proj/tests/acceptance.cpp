// End-to-end acceptance checks. Runs criteria 1-7 by default; the Leech
// family (criterion 8) is expensive and only runs with --heavy-only.
#include "sphcode/sphcode.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

using namespace sphcode;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Mandatory {
  const char* name;
  PointConfiguration X;
  int D;
  std::size_t size;
  std::string a;
  std::vector<std::string> ip_set;
  int strength;
  bool optimal;
};

std::vector<Mandatory> mandatory_set() {
  const auto e8 = e8_roots();
  const auto k56 = cross_section(e8, {0}, {QuadScalar(Rational(1, 2))});
  const auto s27 = cross_section(k56, {0}, {QuadScalar(Rational(1, 3))});
  std::vector<Mandatory> rows;
  rows.push_back({"icosahedron", icosahedron(), 5, 12, "1/5",
                  {"-1", "-1/5", "1/5"}, 5, true});
  rows.push_back({"600-cell", cell600(), 9, 120, "1/6+1/6*sqrt(5)",
                  {"-1", "-1/6-1/6*sqrt(5)", "-1/3", "1/6-1/6*sqrt(5)", "0",
                   "-1/6+1/6*sqrt(5)", "1/3", "1/6+1/6*sqrt(5)"},
                  11, false});
  rows.push_back({"e8", e8, 35, 240, "1/7", {"-1", "-1/7", "1/7"}, 7, true});
  rows.push_back({"kissing56", k56, 27, 56, "1/27", {"-1", "-1/27", "1/27"}, 5,
                  true});
  rows.push_back({"schlafli27", s27, 20, 54, "1/8",
                  {"-1", "-1/8", "-1/10", "1/10", "1/8"}, 4, false});
  return rows;
}

bool check(bool ok, const char* what) {
  if (!ok) std::printf("    mismatch: %s\n", what);
  return ok;
}

std::vector<std::string> strs(const std::vector<QuadScalar>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

bool criterion1(const std::vector<Mandatory>& rows) {
  const auto t0 = Clock::now();
  bool ok = true;
  for (const auto& row : rows) {
    const auto emb = embed_code(row.X);
    const auto cp = code_params(emb.gram);
    ok &= check(emb.D == row.D, row.name);
    ok &= check(cp.size == row.size, row.name);
    ok &= check(cp.a.has_value() && cp.a->str() == row.a, row.name);
    ok &= check(strs(cp.ip_set) == row.ip_set, row.name);
    ok &= check(venkov_check(emb.gram, emb.D - 1).design3, row.name);
  }
  const double dt = seconds_since(t0);
  ok &= check(dt <= 10.0, "criterion 1 runtime over 10 s");
  std::printf("    embedded parameter rows verified in %.2f s\n", dt);
  return ok;
}

bool criterion2(const std::vector<Mandatory>& rows) {
  const auto t0 = Clock::now();
  bool ok = true;
  for (const auto& row : rows) {
    const auto emb = embed_code(row.X);
    const auto src = code_params(normalized_gram(emb.half));
    const auto v = optimality_check(row.X.d, emb.half_n, src.ip_set);
    ok &= check(v.optimal == row.optimal, row.name);
    if (!row.optimal) ok &= check(!v.level_constant, row.name);
  }
  ok &= check(seconds_since(t0) <= 1.0, "criterion 2 runtime over 1 s");
  return ok;
}

bool criterion3(const std::vector<Mandatory>& rows) {
  const auto t0 = Clock::now();
  bool ok = true;
  for (const auto& row : rows) {
    const int s = design_strength(normalized_gram(row.X), row.X.d).strength;
    if (s != row.strength) {
      std::printf("    %s: strength %d, expected %d\n", row.name, s,
                  row.strength);
      ok = false;
    }
  }
  const double dt = seconds_since(t0);
  ok &= check(dt <= 60.0, "criterion 3 runtime over 60 s");
  std::printf("    strengths computed in %.2f s\n", dt);
  return ok;
}

bool criterion4() {
  const auto t0 = Clock::now();
  bool ok = true;
  const auto all = enumerate_parameters();
  const std::tuple<int, int, unsigned long long> expect[] = {
      {2, 5, 12}, {6, 9, 56}, {7, 4, 240}, {22, 25, 552}};
  for (const auto& [d, m, size] : expect) {
    bool found = false;
    for (const auto& r : all) {
      if (r.d != d || r.m != m) continue;
      found = r.code_size == size;
      const Rational l = r.level.rational_part();
      const Rational M(r.code_size);
      found = found &&
              M * M / Rational(r.D) - 2 * M == l * l * (M * M - 2 * M);
    }
    ok &= check(found, "enumeration row missing or wrong");
  }
  const auto ips = admissible_inner_products(7, QuadScalar(Rational(1, 7)));
  ok &= check(strs(ips) == std::vector<std::string>{"0", "1/2"},
              "admissible inner products for (7, 1/7)");
  const double dt = seconds_since(t0);
  ok &= check(dt <= 5.0, "criterion 4 runtime over 5 s");
  std::printf("    %zu rows enumerated in %.2f s\n", all.size(), dt);
  return ok;
}

bool criterion5() {
  bool ok = true;
  std::mt19937 rng(90210);
  std::normal_distribution<double> gauss;
  double worst = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    const int d = 1 + int(rng() % 10);
    const std::size_t half = 2 + rng() % 99;  // N = 2*half <= 200
    std::vector<std::vector<double>> pts;
    for (std::size_t i = 0; i < half; ++i) {
      std::vector<double> p(d + 1);
      for (auto& x : p) x = gauss(rng);
      pts.push_back(p);
      for (auto& x : p) x = -x;
      pts.push_back(p);
    }
    const double defect = venkov_defect_numeric(pts, d);
    worst = std::min(worst, defect);
    if (defect < -1e-9) ok = false;
  }
  ok &= check(ok, "random antipodal defect below -1e-9");
  std::printf("    worst random defect %.3e\n", worst);

  // perturb one vertex of the icosahedron tangentially by > 1e-3
  const auto ico = icosahedron();
  std::vector<std::vector<double>> pts;
  const double scale = 1.0 / std::sqrt(ico.norm_sq.to_double());
  for (std::size_t i = 0; i < ico.size(); ++i) {
    std::vector<double> p(3);
    for (int j = 0; j < 3; ++j) p[j] = ico.coord(i, j).to_double() * scale;
    pts.push_back(p);
  }
  std::vector<double> tan = {1, 0, 0};
  double dp = 0;
  for (int j = 0; j < 3; ++j) dp += tan[j] * pts[0][j];
  double tn = 0;
  for (int j = 0; j < 3; ++j) {
    tan[j] -= dp * pts[0][j];
    tn += tan[j] * tan[j];
  }
  for (int j = 0; j < 3; ++j) pts[0][j] += 1.5e-3 * tan[j] / std::sqrt(tn);
  const double perturbed = venkov_defect_numeric(pts, 2);
  ok &= check(perturbed > 1e-8, "perturbed design defect not positive");
  std::printf("    perturbed icosahedron defect %.3e\n", perturbed);
  return ok;
}

bool criterion6(const std::vector<Mandatory>& rows) {
  bool ok = true;
  for (const auto& row : rows) {
    const auto emb = embed_code(row.X);
    const auto C = embed_coords(row.X);
    double max_dev = 0;
    for (std::size_t i = 0; i < C.size(); ++i)
      for (std::size_t j = i; j < C.size(); ++j) {
        double dot = 0;
        for (std::size_t k = 0; k < C[i].size(); ++k) dot += C[i][k] * C[j][k];
        max_dev =
            std::max(max_dev, std::abs(dot - emb.gram(i, j).to_double()));
      }
    std::printf("    %s: coordinate/gram deviation %.3e\n", row.name, max_dev);
    ok &= check(max_dev <= 1e-10, row.name);
  }
  return ok;
}

bool criterion7(const std::vector<Mandatory>& rows) {
  bool ok = true;
  std::mt19937 rng(271828);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 40);
  std::uniform_int_distribution<int> dd(2, 99);
  for (int iter = 0; iter < 10000; ++iter) {
    const int d = dd(rng);
    const QuadScalar t(Rational(num(rng), den(rng)));
    if (gegenbauer(2, d, t) != gegenbauer2(d, t)) {
      ok = check(false, "recurrence vs closed form");
      break;
    }
  }
  for (const auto& row : rows) {
    const auto G = normalized_gram(row.X);
    const auto counts = G.value_counts();
    QuadScalar moment;  // sum over ordered pairs of g_{2,d}
    for (std::size_t v = 0; v < counts.size(); ++v)
      if (counts[v])
        moment += gegenbauer(2, row.X.d, G.palette[v]) *
                  QuadScalar(Rational(counts[v]));
    const Rational n2(std::int64_t(G.n) * G.n);
    const QuadScalar s2 =
        venkov_defect(G, row.X.d) + QuadScalar(n2 / (row.X.d + 1));
    const QuadScalar via_venkov =
        (QuadScalar(row.X.d + 1) * s2 - QuadScalar(n2)) / QuadScalar(row.X.d);
    ok &= check(moment == via_venkov, row.name);
  }
  return ok;
}

bool criterion8() {
  const auto t0 = Clock::now();
  bool ok = true;
  const auto leech = leech_min_vectors();
  ok &= check(leech.size() == 196560, "leech vector count");
  const auto hist = ip_histogram(leech);
  std::vector<std::string> keys;
  for (const auto& [v, c] : hist) keys.push_back(v.str());
  ok &= check(keys == std::vector<std::string>{"-1", "-1/2", "-1/4", "0",
                                               "1/4", "1/2"},
              "leech inner-product set");
  ok &= check(hist.at(QuadScalar(-1)) == 196560, "leech antipode count");
  std::printf("    leech inner products scanned in %.1f s\n",
              seconds_since(t0));

  const auto sec = cross_section(leech, {0}, {QuadScalar(Rational(1, 2))});
  ok &= check(sec.size() == 4600, "section size");
  const auto G = normalized_gram(sec);
  ok &= check(strs(G.offdiag_values()) ==
                  std::vector<std::string>{"-1", "-1/3", "0", "1/3"},
              "section inner-product set");
  const double gen_and_section = seconds_since(t0);
  ok &= check(gen_and_section <= 300.0, "generation + section over 5 min");

  const auto emb = embed_code(sec);
  ok &= check(emb.D == 275, "embedded dimension");
  const auto cp = code_params(emb.gram);
  ok &= check(cp.size == 4600, "embedded code size");
  ok &= check(cp.a.has_value() && cp.a->str() == "7/99", "embedded max level");
  ok &= check(strs(cp.ip_set) == std::vector<std::string>{"-1", "-7/99",
                                                          "-1/22", "1/22",
                                                          "7/99"},
              "embedded level set");
  std::printf("    leech family done in %.1f s\n", seconds_since(t0));
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  const bool heavy_only = argc > 1 && std::strcmp(argv[1], "--heavy-only") == 0;
  int failures = 0;
  auto run = [&](int id, const char* title, bool ok) {
    std::printf("criterion %d (%s): %s\n", id, title, ok ? "PASS" : "FAIL");
    if (!ok) ++failures;
  };
  if (heavy_only) {
    run(8, "leech family", criterion8());
  } else {
    const auto rows = mandatory_set();
    run(1, "embedded code parameters", criterion1(rows));
    run(2, "optimality verdicts", criterion2(rows));
    run(3, "design strengths", criterion3(rows));
    run(4, "parameter search", criterion4());
    run(5, "venkov inequality properties", criterion5());
    run(6, "coordinate/gram consistency", criterion6(rows));
    run(7, "gegenbauer cross-validation", criterion7(rows));
  }
  return failures == 0 ? 0 : 1;
}
