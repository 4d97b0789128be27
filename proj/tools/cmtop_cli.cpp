// Command-line surface: parse ideals, run analyses, emit human-readable
// and JSON reports.
//
// Exit codes: 0 success, 1 input error, 2 internal-consistency failure,
// 3 resource cap exceeded.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cmtop/core.hpp"
#include "cmtop/families.hpp"
#include "cmtop/homological.hpp"
#include "cmtop/io.hpp"
#include "cmtop/oracles.hpp"
#include "cmtop/parallel.hpp"
#include "cmtop/selfcheck.hpp"
#include "cmtop/transforms.hpp"

namespace {

struct GlobalOpts {
  std::uint64_t field = 0;
  std::string input;
  bool json = false;
  unsigned threads = cmtop::default_thread_count();
  std::uint64_t seed = 2024;
};

std::string read_input(const std::string& path) {
  if (path.empty()) throw cmtop::InputError("missing --input");
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw cmtop::InputError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

cmtop::MonomialIdeal load_ideal(const GlobalOpts& g) {
  const cmtop::MonomialIdeal ideal = cmtop::ideal_from_string(read_input(g.input));
  if (ideal.var_count() > 16)
    throw cmtop::ResourceError("main path capped at 16 variables");
  if (ideal.generators().size() > 64)
    throw cmtop::ResourceError("main path capped at 64 generators");
  return ideal;
}

void emit(const cmtop::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

cmtop::ExponentVector parse_int_degree(const std::string& csv, int n) {
  cmtop::ExponentVector out;
  std::istringstream s(csv);
  std::string tok;
  while (std::getline(s, tok, ',')) out.push_back(std::stoll(tok));
  if (static_cast<int>(out.size()) != n)
    throw cmtop::InputError("--degree needs " + std::to_string(n) + " entries");
  return out;
}

cmtop::DegreePoint parse_rational_degree(const std::string& csv, int n) {
  cmtop::DegreePoint out;
  std::istringstream s(csv);
  std::string tok;
  while (std::getline(s, tok, ',')) {
    const auto slash = tok.find('/');
    if (slash == std::string::npos)
      out.emplace_back(std::stoll(tok));
    else
      out.emplace_back(std::stoll(tok.substr(0, slash)),
                       std::stoll(tok.substr(slash + 1)));
  }
  if (static_cast<int>(out.size()) != n)
    throw cmtop::InputError("--degree needs " + std::to_string(n) + " entries");
  return out;
}

int run_cm(const GlobalOpts& g) {
  const auto ideal = load_ideal(g);
  const auto k = cmtop::FieldSpec::of(g.field);
  const auto verdict = cmtop::is_cohen_macaulay(ideal, k, g.threads);
  const auto lc = cmtop::local_cohomology_table(ideal, k, g.threads);
  const auto betti = cmtop::betti_table(ideal, k, g.threads);
  cmtop::GradedTable ext;
  if (!ideal.is_zero()) ext = cmtop::ext_table(ideal, k, g.threads);
  ext.kind = cmtop::TableKind::ext;
  const auto pairs = cmtop::standard_pairs(ideal);
  const auto noncm = cmtop::quasidegree_arrangement(ideal, k, g.threads);
  if (g.json) {
    emit(cmtop::report_to_json(ideal, k, verdict, lc, betti, ext, pairs, noncm));
    return 0;
  }
  std::cout << "S/I " << (verdict.is_cm ? "is" : "is NOT") << " Cohen-Macaulay over "
            << (k.characteristic == 0 ? "Q" : "F_" + std::to_string(k.characteristic))
            << "\n";
  std::cout << "dim = " << verdict.dimension << ", depth = " << verdict.depth
            << ", pd = " << verdict.projective_dimension << "\n";
  const std::size_t shown = std::min<std::size_t>(verdict.witnesses.size(), 12);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& w = verdict.witnesses[i];
    std::cout << "witness: route " << w.route << " degree "
              << cmtop::format_degree(w.degree) << " index " << w.index << "\n";
  }
  if (verdict.witnesses.size() > shown)
    std::cout << "... and " << (verdict.witnesses.size() - shown)
              << " more witnesses (use --json for the full list)\n";
  return 0;
}

int run_table(const GlobalOpts& g, cmtop::TableKind kind) {
  const auto ideal = load_ideal(g);
  const auto k = cmtop::FieldSpec::of(g.field);
  cmtop::GradedTable table;
  switch (kind) {
    case cmtop::TableKind::local_cohomology:
      table = cmtop::local_cohomology_table(ideal, k, g.threads);
      break;
    case cmtop::TableKind::betti:
      table = cmtop::betti_table(ideal, k, g.threads);
      break;
    case cmtop::TableKind::ext:
      table = cmtop::ext_table(ideal, k, g.threads);
      break;
  }
  if (g.json) {
    emit(cmtop::table_to_json(table));
    return 0;
  }
  const char* label = kind == cmtop::TableKind::local_cohomology ? "H^"
                      : kind == cmtop::TableKind::betti          ? "beta_"
                                                                 : "Ext^";
  for (const auto& [degree, dims] : table.entries)
    for (const auto& [i, d] : dims)
      std::cout << label << i << " at " << cmtop::format_degree(degree)
                << " has dim " << d << "\n";
  return 0;
}

int run_pairs(const GlobalOpts& g) {
  const auto ideal = load_ideal(g);
  const auto pairs = cmtop::standard_pairs(ideal);
  const auto pieces = cmtop::stanley_decomposition(ideal);
  const auto info = cmtop::degree_and_multiplicities(ideal);
  if (g.json) {
    cmtop::ordered_json j;
    j["standard_pairs"] = cmtop::pairs_to_json(pairs);
    j["stanley_decomposition"] = cmtop::pairs_to_json(pieces);
    j["degree"] = info.degree;
    cmtop::ordered_json mult = cmtop::ordered_json::array();
    for (const auto& [f, m] : info.multiplicities) {
      cmtop::ordered_json e;
      e["dirs"] = cmtop::face_to_json(f);
      e["multiplicity"] = m;
      mult.push_back(std::move(e));
    }
    j["multiplicities"] = std::move(mult);
    emit(j);
    return 0;
  }
  std::cout << "standard pairs (" << pairs.size() << "):\n";
  for (const auto& p : pairs) {
    std::cout << "  " << cmtop::format_degree(p.base) << " + N^{";
    bool first = true;
    for (int v : p.dirs.elements()) {
      if (!first) std::cout << ",";
      std::cout << "x" << (v + 1);
      first = false;
    }
    std::cout << "}\n";
  }
  std::cout << "stanley pieces: " << pieces.size() << "\n";
  std::cout << "degree = " << info.degree << "\n";
  return 0;
}

int run_complex(const GlobalOpts& g, const std::string& family,
                const std::string& degree_csv) {
  const auto ideal = load_ideal(g);
  cmtop::SimplicialComplex delta;
  const int n = ideal.var_count();
  if (family == "cech")
    delta = cmtop::cech(ideal, parse_int_degree(degree_csv, n));
  else if (family == "koszul")
    delta = cmtop::koszul(ideal, parse_int_degree(degree_csv, n));
  else if (family == "dual-cech")
    delta = cmtop::dual_cech(ideal, parse_int_degree(degree_csv, n));
  else if (family == "exponent")
    delta = cmtop::exponent_complex(ideal, parse_rational_degree(degree_csv, n));
  else
    throw cmtop::InputError("unknown family: " + family);
  emit(cmtop::complex_to_json(delta));
  return 0;
}

int run_distract(const GlobalOpts& g) {
  const auto ideal = load_ideal(g);
  const auto names = cmtop::default_var_names(ideal.var_count());
  cmtop::ordered_json polys = cmtop::ordered_json::array();
  for (std::size_t idx = 0; idx < ideal.generators().size(); ++idx) {
    const auto& gen = ideal.generators()[idx];
    cmtop::ordered_json j = cmtop::polynomial_to_json(cmtop::distraction_monomial(gen));
    j["factored"] = cmtop::distraction_factored_string(gen, names, "*");
    polys.push_back(std::move(j));
  }
  cmtop::ordered_json out;
  out["polynomials"] = std::move(polys);
  emit(out);
  return 0;
}

int run_polarize(const GlobalOpts& g) {
  const auto ideal = load_ideal(g);
  emit(cmtop::polarized_to_json(cmtop::polarize(ideal)));
  return 0;
}

int run_qdeg(const GlobalOpts& g, const std::string& project_path) {
  const auto ideal = load_ideal(g);
  const auto k = cmtop::FieldSpec::of(g.field);
  const auto arrangement = cmtop::quasidegree_arrangement(ideal, k, g.threads);
  if (project_path.empty()) {
    emit(cmtop::arrangement_to_json(arrangement));
    return 0;
  }
  cmtop::ordered_json pj;
  try {
    pj = cmtop::ordered_json::parse(read_input(project_path));
  } catch (const nlohmann::json::exception& e) {
    throw cmtop::InputError(std::string("bad projection JSON: ") + e.what());
  }
  std::vector<std::vector<std::int64_t>> a_matrix;
  for (const auto& row : pj) a_matrix.push_back(row.get<std::vector<std::int64_t>>());
  std::vector<cmtop::TranslatedSubspace> flat;
  for (const auto& [i, spaces] : arrangement)
    flat.insert(flat.end(), spaces.begin(), spaces.end());
  cmtop::ordered_json out = cmtop::ordered_json::array();
  for (const auto& p : cmtop::project_quasidegrees(flat, a_matrix)) {
    cmtop::ordered_json e;
    e["base"] = p.base;
    e["generators"] = p.generators;
    out.push_back(std::move(e));
  }
  emit(out);
  return 0;
}

int run_check(const GlobalOpts& g) {
  const auto ideal = load_ideal(g);
  const auto k = cmtop::FieldSpec::of(g.field);
  const auto results = cmtop::selfcheck::run_identity_checks(ideal, k, g.seed, g.threads);
  bool all_pass = true;
  if (g.json) {
    cmtop::ordered_json arr = cmtop::ordered_json::array();
    for (const auto& r : results) {
      cmtop::ordered_json e;
      e["name"] = r.name;
      e["pass"] = r.pass;
      e["skipped"] = r.skipped;
      e["detail"] = r.detail;
      arr.push_back(std::move(e));
      if (!r.pass) all_pass = false;
    }
    emit(arr);
  } else {
    for (const auto& r : results) {
      const char* tag = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
      std::cout << "[" << tag << "] " << r.name;
      if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
      std::cout << "\n";
      if (!r.pass) all_pass = false;
    }
  }
  if (!all_pass) throw cmtop::InternalError("identity check failed");
  return 0;
}

int run_oracle(const GlobalOpts& g, const std::string& which,
               const std::string& degree_csv) {
  const auto ideal = load_ideal(g);
  const auto k = cmtop::FieldSpec::of(g.field);
  const int n = ideal.var_count();
  const auto degree = parse_int_degree(degree_csv, n);
  cmtop::ordered_json out;
  if (which == "tor" || which == "ext") {
    const auto dims = which == "tor" ? cmtop::taylor_tor(ideal, k, degree)
                                     : cmtop::taylor_ext(ideal, k, degree);
    cmtop::ordered_json dd = cmtop::ordered_json::array();
    for (const auto& [i, d] : dims) dd.push_back(cmtop::ordered_json::array({i, d}));
    out["degree"] = degree;
    out["dims"] = std::move(dd);
  } else if (which == "dual-cech") {
    out = cmtop::complex_to_json(cmtop::dual_cech_brute(ideal, degree));
  } else {
    throw cmtop::InputError("unknown oracle: " + which);
  }
  emit(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohen-Macaulay analysis of monomial quotients via families "
               "of simplicial complexes"};
  app.footer(
      "Resource caps: at most 16 variables and 64 generators on the main\n"
      "path (degree boxes grow multiplicatively with the lcm exponent);\n"
      "brute-force oracles are capped at 12 generators. Inputs beyond the\n"
      "caps exit with code 3.");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--field", g.field, "coefficient field characteristic: 0 or a prime");
  app.add_option("--input", g.input, "ideal file (text or JSON, autodetected; '-' = stdin)");
  app.add_flag("--json", g.json, "machine-readable JSON output");
  app.add_option("--threads", g.threads, "worker threads for degree-parallel scans");
  app.add_option("--seed", g.seed, "seed for randomized self-checks");

  auto* cm = app.add_subcommand("cm", "full Cohen-Macaulay verdict and report");
  auto* lc = app.add_subcommand("lc", "graded local cohomology table");
  auto* betti = app.add_subcommand("betti", "graded Betti table");
  auto* ext = app.add_subcommand("ext", "graded Ext table");
  auto* pairs = app.add_subcommand("pairs",
      "standard pairs, Stanley decomposition, degree and multiplicities");

  auto* complex_cmd = app.add_subcommand("complex", "one simplicial complex of a family");
  std::string family, degree_csv;
  complex_cmd->add_option("--family", family, "cech|koszul|dual-cech|exponent")->required();
  complex_cmd->add_option("--degree", degree_csv,
      "comma-separated degree, e.g. -1,0,2 (rationals p/q allowed for exponent)")->required();

  auto* distract = app.add_subcommand("distract", "distraction of the generators");
  auto* polarize_cmd = app.add_subcommand("polarize", "polarization of the ideal");

  auto* qdeg = app.add_subcommand("qdeg", "quasidegree arrangement of the non-CM locus");
  std::string project_path;
  qdeg->add_option("--project", project_path, "JSON integer matrix (rows) to project by");

  auto* check = app.add_subcommand("check", "run every cross-identity and report per identity");

  auto* oracle = app.add_subcommand("oracle", "brute-force oracles for debugging");
  oracle->require_subcommand(1);
  std::string oracle_degree;
  auto* oracle_tor = oracle->add_subcommand("tor", "Taylor-strand Tor dims at --degree");
  auto* oracle_ext = oracle->add_subcommand("ext", "Taylor-strand Ext dims at --degree");
  auto* oracle_dc = oracle->add_subcommand("dual-cech", "exhaustive dual Cech complex at --degree");
  for (auto* sub : {oracle_tor, oracle_ext, oracle_dc})
    sub->add_option("--degree", oracle_degree, "comma-separated integer degree")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cm->parsed()) return run_cm(g);
    if (lc->parsed()) return run_table(g, cmtop::TableKind::local_cohomology);
    if (betti->parsed()) return run_table(g, cmtop::TableKind::betti);
    if (ext->parsed()) return run_table(g, cmtop::TableKind::ext);
    if (pairs->parsed()) return run_pairs(g);
    if (complex_cmd->parsed()) return run_complex(g, family, degree_csv);
    if (distract->parsed()) return run_distract(g);
    if (polarize_cmd->parsed()) return run_polarize(g);
    if (qdeg->parsed()) return run_qdeg(g, project_path);
    if (check->parsed()) return run_check(g);
    if (oracle->parsed()) {
      if (oracle_tor->parsed()) return run_oracle(g, "tor", oracle_degree);
      if (oracle_ext->parsed()) return run_oracle(g, "ext", oracle_degree);
      return run_oracle(g, "dual-cech", oracle_degree);
    }
  } catch (const cmtop::InputError& e) {
    if (g.json)
      std::cerr << cmtop::ordered_json{{"error", e.what()}, {"code", 1}}.dump() << "\n";
    else
      std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const cmtop::InternalError& e) {
    if (g.json)
      std::cerr << cmtop::ordered_json{{"error", e.what()}, {"code", 2}}.dump() << "\n";
    else
      std::cerr << "internal consistency error: " << e.what() << "\n";
    return 2;
  } catch (const cmtop::ResourceError& e) {
    if (g.json)
      std::cerr << cmtop::ordered_json{{"error", e.what()}, {"code", 3}}.dump() << "\n";
    else
      std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
