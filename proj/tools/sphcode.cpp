// Command-line front end: construct configurations, run exact checks,
// embed into the degree-2 harmonic space, and enumerate parameters.
//
// Exit codes: 0 success, 1 verification failed, 2 usage, 3 I/O or parse.

#include "sphcode/reports.hpp"
#include "sphcode/sphcode.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr const char* kToolVersion = "1.0.0";

using Clock = std::chrono::steady_clock;

struct Manifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::vector<std::string> outputs;
  std::map<std::string, double> timing;

  void write(const std::string& path) const {
    nlohmann::json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["outputs"] = outputs;
    j["versions"] = {{"tool", kToolVersion},
                     {"config_format", "sphcode-config v1"},
                     {"gram_format", "sphcode-gram v1"},
                     {"report_schema", sphcode::kReportSchemaVersion}};
    j["timing_seconds"] = timing;
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write manifest " + path);
    f << j.dump(2) << "\n";
  }
};

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

sphcode::PointConfiguration construct_by_name(const std::string& name, bool heavy) {
  using namespace sphcode;
  if (name == "icosahedron") return icosahedron();
  if (name == "600cell") return cell600();
  if (name == "e8") return e8_roots();
  if (name == "kissing56")
    return cross_section(e8_roots(), {0}, {QuadScalar(Rational(1, 2))});
  if (name == "schlafli27") {
    auto k56 = cross_section(e8_roots(), {0}, {QuadScalar(Rational(1, 2))});
    return cross_section(k56, {0}, {QuadScalar(Rational(1, 3))});
  }
  if (name == "leech" || name == "kissing4600") {
    if (!heavy)
      throw CLI::ValidationError(name + " is gated behind --heavy");
    std::cerr << "[heavy] generating 196560 Leech minimal vectors"
                 " (~20 MB, a few seconds)\n";
    auto L = leech_min_vectors();
    if (name == "leech") return L;
    return cross_section(L, {0}, {QuadScalar(Rational(1, 2))});
  }
  if (name.rfind("section:", 0) == 0) {
    // section:<source>:<anchor,...>:<ip,...>
    auto parts = split(name, ':');
    if (parts.size() != 4)
      throw CLI::ValidationError("section spec must be section:<src>:<anchors>:<ips>");
    auto base = construct_by_name(parts[1], heavy);
    std::vector<std::size_t> anchors;
    for (const auto& a : split(parts[2], ',')) anchors.push_back(std::stoull(a));
    std::vector<QuadScalar> ips;
    for (const auto& s : split(parts[3], ',')) ips.push_back(QuadScalar::parse(s));
    return cross_section(base, anchors, ips);
  }
  throw CLI::ValidationError("unknown configuration '" + name + "'");
}

void print_config_summary(const sphcode::PointConfiguration& X) {
  std::cout << "n=" << X.d + 1 << " N=" << X.size();
  if (X.size() <= 20000) {
    auto G = sphcode::normalized_gram(X);
    std::cout << " ips={";
    auto vals = G.offdiag_values();
    for (std::size_t i = 0; i < vals.size(); ++i)
      std::cout << (i ? "," : "") << vals[i].str();
    std::cout << "}";
  } else {
    std::cout << " (inner-product scan skipped at this size; run check)";
  }
  std::cout << "\n";
}

int run_construct(const std::string& name, const std::string& out, bool heavy,
                  const std::string& manifest_path) {
  const auto t0 = Clock::now();
  Manifest man;
  man.command = "construct";
  man.parameters = {{"name", name}, {"out", out}};
  auto X = construct_by_name(name, heavy);
  man.timing["construct"] = elapsed(t0);
  const auto t1 = Clock::now();
  sphcode::save(X, out);
  man.timing["write"] = elapsed(t1);
  man.outputs.push_back(out);
  print_config_summary(X);
  if (!manifest_path.empty()) man.write(manifest_path);
  return 0;
}

int run_check(const std::string& in, std::optional<int> strength_t, bool venkov,
              bool params_flag, std::optional<int> expect_strength,
              std::optional<bool> expect_design3, const std::string& expect_a,
              const std::string& manifest_path) {
  const auto t0 = Clock::now();
  Manifest man;
  man.command = "check";
  man.parameters["in"] = in;
  sphcode::GramMatrix G;
  int d = 0;
  {
    std::ifstream f(in);
    std::string header;
    std::getline(f, header);
    if (!f) throw sphcode::parse_error(in + ": unreadable");
    if (header == "sphcode-gram v1") {
      G = sphcode::load_gram(in);
      d = G.d;
    } else {
      auto X = sphcode::load(in);
      G = sphcode::normalized_gram(X);
      d = X.d;
    }
  }
  man.timing["load"] = elapsed(t0);

  nlohmann::json report;
  report["input"] = in;
  report["d"] = d;
  bool expectations_met = true;
  const auto t1 = Clock::now();
  if (params_flag || !expect_a.empty()) {
    auto cp = sphcode::code_params(G);
    report["code_params"] = sphcode::to_json(cp);
    if (!expect_a.empty()) {
      const auto want = sphcode::QuadScalar::parse(expect_a);
      expectations_met = expectations_met && cp.a && *cp.a == want;
    }
  }
  if (venkov) {
    auto rep = sphcode::venkov_check(G, d);
    report["venkov"] = {{"defect", rep.venkov_defect.str()},
                        {"design3", rep.design3}};
    if (expect_design3)
      expectations_met = expectations_met && rep.design3 == *expect_design3;
  }
  if (strength_t) {
    auto rep = sphcode::design_strength(G, d, *strength_t);
    report["design"] = sphcode::to_json(rep);
    if (expect_strength)
      expectations_met = expectations_met && rep.strength == *expect_strength;
  }
  man.timing["analyze"] = elapsed(t1);
  report["expectations_met"] = expectations_met;
  std::cout << report.dump(2) << "\n";
  if (!manifest_path.empty()) man.write(manifest_path);
  const bool had_expectations =
      expect_strength || expect_design3 || !expect_a.empty();
  return had_expectations && !expectations_met ? 1 : 0;
}

int run_embed(const std::string& in, const std::string& out,
              const std::string& coords_path, const std::string& manifest_path) {
  const auto t0 = Clock::now();
  Manifest man;
  man.command = "embed";
  man.parameters = {{"in", in}, {"out", out}};
  auto X = sphcode::load(in);
  auto emb = sphcode::embed_code(X);
  auto cp = sphcode::code_params(emb.gram);
  auto venkov = sphcode::venkov_check(emb.gram, emb.D - 1);
  auto src_params = sphcode::code_params(sphcode::normalized_gram(emb.half));
  auto verdict = sphcode::optimality_check(X.d, emb.half_n, src_params.ip_set);
  man.timing["embed"] = elapsed(t0);

  const auto t1 = Clock::now();
  if (!out.empty()) {
    sphcode::save_gram(emb.gram, out);
    man.outputs.push_back(out);
  }
  if (!coords_path.empty()) {
    auto C = sphcode::embed_coords(X);
    std::ofstream f(coords_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + coords_path);
    f << "sphcode-coords v1\n";
    f << "n " << C.size() << "\n";
    f << "dim " << emb.D << "\n";
    f.precision(17);
    for (const auto& row : C) {
      for (std::size_t j = 0; j < row.size(); ++j) f << (j ? " " : "") << row[j];
      f << "\n";
    }
    man.outputs.push_back(coords_path);
  }
  man.timing["write"] = elapsed(t1);
  std::cout << "(" << emb.D << "," << cp.size << ","
            << (cp.a ? cp.a->str() : "-") << ")"
            << " optimal=" << (verdict.optimal ? "true" : "false")
            << " design3=" << (venkov.design3 ? "true" : "false") << "\n";
  if (!manifest_path.empty()) man.write(manifest_path);
  return 0;
}

int run_search(int dmax, int mmax, const std::string& format,
               const std::string& out, bool all, const std::string& manifest_path) {
  const auto t0 = Clock::now();
  Manifest man;
  man.command = "search";
  man.parameters = {{"dmax", std::to_string(dmax)},
                    {"mmax", std::to_string(mmax)},
                    {"format", format}};
  sphcode::EnumerateOptions opt;
  opt.d_plus_1_max = dmax;
  opt.m_max = mmax;
  opt.include_fisher_failures = all;
  auto rows = sphcode::enumerate_parameters(opt);
  man.timing["enumerate"] = elapsed(t0);

  std::string text;
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) j.push_back(sphcode::to_json(r));
    text = j.dump(2) + "\n";
  } else {
    text = sphcode::search_rows_csv(rows);
  }
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
    man.outputs.push_back(out);
    std::cout << "wrote " << rows.size() << " rows to " << out << "\n";
  }
  if (!manifest_path.empty()) man.write(manifest_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sharp spherical configurations, exact verification, and the "
               "degree-2 harmonic embedding"};
  app.require_subcommand(1);
  std::string manifest_path;
  app.add_option("--manifest", manifest_path, "write a run manifest (JSON)");

  auto* c_construct = app.add_subcommand("construct", "build a configuration file");
  std::string name, out = "";
  bool heavy = false;
  c_construct->add_option("name", name,
                          "icosahedron|600cell|e8|kissing56|schlafli27|leech|"
                          "kissing4600|section:<src>:<anchors>:<ips>")
      ->required();
  c_construct->add_option("-o,--out", out, "output path (default <name>.cfg)");
  c_construct->add_flag("--heavy", heavy, "allow Leech-family constructions");

  auto* c_check = app.add_subcommand("check", "run exact checks on a file");
  std::string in;
  int strength_t = -1, expect_strength = -1;
  bool venkov = false, params_flag = false;
  std::string expect_design3_s, expect_a;
  c_check->add_option("input", in, "configuration or gram file")->required();
  c_check->add_option("--design-strength", strength_t, "max t for the design check");
  c_check->add_flag("--venkov", venkov, "run the 3-design criterion");
  c_check->add_flag("--code-params", params_flag, "report code parameters");
  c_check->add_option("--expect-strength", expect_strength, "expected strength");
  c_check->add_option("--expect-design3", expect_design3_s, "true|false");
  c_check->add_option("--expect-a", expect_a, "expected max |ip| (exact scalar)");

  auto* c_embed = app.add_subcommand("embed", "embed into degree-2 harmonics");
  std::string embed_in, embed_out, coords_path;
  c_embed->add_option("input", embed_in, "configuration file")->required();
  c_embed->add_option("-o,--out", embed_out, "exact gram output path");
  c_embed->add_option("--coords", coords_path, "also write float coordinates");

  auto* c_search = app.add_subcommand("search", "enumerate admissible parameters");
  int dmax = 100, mmax = 200;
  std::string format = "csv", search_out;
  bool all = false;
  c_search->add_option("--dmax", dmax, "max d+1 (default 100)");
  c_search->add_option("--mmax", mmax, "max m (default 200)");
  c_search->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  c_search->add_option("-o,--out", search_out, "output file (default stdout)");
  c_search->add_flag("--all", all, "include rows failing the Fisher bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*c_construct) {
      if (out.empty()) out = name + ".cfg";
      return run_construct(name, out, heavy, manifest_path);
    }
    if (*c_check)
      return run_check(in, strength_t > 0 ? std::optional<int>(strength_t) : std::nullopt,
                       venkov, params_flag,
                       expect_strength > 0 ? std::optional<int>(expect_strength)
                                           : std::nullopt,
                       expect_design3_s.empty()
                           ? std::nullopt
                           : std::optional<bool>(expect_design3_s == "true"),
                       expect_a, manifest_path);
    if (*c_embed) return run_embed(embed_in, embed_out, coords_path, manifest_path);
    if (*c_search) {
      if (dmax < 3 || mmax < 1) {
        std::cerr << "search: --dmax must be >= 3 and --mmax >= 1\n";
        return 2;
      }
      return run_search(dmax, mmax, format, search_out, all, manifest_path);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sphcode::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
