// Serialization: the ideal text/JSON input formats, JSON forms of
// complexes, tables, pairs, verdicts, and the full report schema.
// All output goes through nlohmann ordered_json so key order is fixed
// and byte-identical across runs and thread counts.
#pragma once

#include <cctype>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmtop/core.hpp"
#include "cmtop/homological.hpp"
#include "cmtop/monomial_ideal.hpp"
#include "cmtop/simplicial.hpp"
#include "cmtop/transforms.hpp"

namespace cmtop {

using ordered_json = nlohmann::ordered_json;

inline std::vector<std::string> default_var_names(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

inline ordered_json face_to_json(FaceSet f) {
  ordered_json arr = ordered_json::array();
  for (int v : f.elements()) arr.push_back(v + 1);  // 1-based in JSON
  return arr;
}

inline FaceSet face_from_json(const ordered_json& arr, int n) {
  FaceSet f;
  for (const auto& v : arr) {
    const int x = v.get<int>();
    if (x < 1 || x > n) throw InputError("vertex out of range");
    f = f.with(x - 1);
  }
  return f;
}

inline ordered_json ideal_to_json(const MonomialIdeal& ideal) {
  ordered_json j;
  j["n"] = ideal.var_count();
  ordered_json gens = ordered_json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g);
  j["generators"] = std::move(gens);
  return j;
}

inline MonomialIdeal ideal_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("generators"))
    throw InputError("ideal JSON needs fields \"n\" and \"generators\"");
  const int n = j["n"].get<int>();
  std::vector<ExponentVector> gens;
  for (const auto& g : j["generators"])
    gens.push_back(g.get<ExponentVector>());
  return MonomialIdeal::minimalize(std::move(gens), n);
}

// Text form: one monomial per line, whitespace-separated factors
// "x1^3 x2 x3^2" (caret optional); "1" denotes the unit monomial.
// The variable count is the largest index mentioned.
inline MonomialIdeal ideal_from_text(const std::string& text) {
  std::vector<std::vector<std::pair<int, std::int64_t>>> lines;
  int n = 0;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    std::istringstream ls(line);
    std::string token;
    std::vector<std::pair<int, std::int64_t>> factors;
    bool any = false;
    while (ls >> token) {
      any = true;
      if (token == "1") continue;
      if (token.size() < 2 || (token[0] != 'x' && token[0] != 'X'))
        throw InputError("cannot parse monomial factor '" + token + "'");
      std::size_t pos = 1;
      while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos])))
        ++pos;
      if (pos == 1) throw InputError("cannot parse variable in '" + token + "'");
      const int var = std::stoi(token.substr(1, pos - 1));
      std::int64_t exp = 1;
      if (pos < token.size()) {
        if (token[pos] == '^') ++pos;
        if (pos == token.size())
          throw InputError("missing exponent in '" + token + "'");
        exp = std::stoll(token.substr(pos));
      }
      if (var < 1 || exp < 0) throw InputError("bad factor '" + token + "'");
      n = std::max(n, var);
      factors.emplace_back(var - 1, exp);
    }
    if (any) lines.push_back(std::move(factors));
  }
  std::vector<ExponentVector> gens;
  for (const auto& factors : lines) {
    ExponentVector g(static_cast<std::size_t>(n), 0);
    for (const auto& [var, exp] : factors) g[static_cast<std::size_t>(var)] += exp;
    gens.push_back(std::move(g));
  }
  return MonomialIdeal::minimalize(std::move(gens), n);
}

// JSON if the first non-space byte is '{', text otherwise.
inline MonomialIdeal ideal_from_string(const std::string& content) {
  for (char c : content) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') {
      ordered_json j;
      try {
        j = ordered_json::parse(content);
      } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad ideal JSON: ") + e.what());
      }
      return ideal_from_json(j);
    }
    break;
  }
  return ideal_from_text(content);
}

inline ordered_json complex_to_json(const SimplicialComplex& delta) {
  ordered_json j;
  j["ground"] = face_to_json(delta.ground());
  ordered_json facets = ordered_json::array();
  for (FaceSet f : delta.facets()) facets.push_back(face_to_json(f));
  j["facets"] = std::move(facets);
  j["void"] = delta.is_void();
  return j;
}

inline ordered_json table_to_json(const GradedTable& table) {
  ordered_json j;
  switch (table.kind) {
    case TableKind::local_cohomology: j["kind"] = "local_cohomology"; break;
    case TableKind::betti: j["kind"] = "betti"; break;
    case TableKind::ext: j["kind"] = "ext"; break;
  }
  j["box_lo"] = table.box_lo;
  j["box_hi"] = table.box_hi;
  ordered_json entries = ordered_json::array();
  for (const auto& [degree, dims] : table.entries) {
    ordered_json e;
    e["degree"] = degree;
    ordered_json dd = ordered_json::array();
    for (const auto& [i, d] : dims) dd.push_back(ordered_json::array({i, d}));
    e["dims"] = std::move(dd);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

inline ordered_json pairs_to_json(const std::vector<StandardPair>& pairs) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : pairs) {
    ordered_json e;
    e["base"] = p.base;
    e["dirs"] = face_to_json(p.dirs);
    arr.push_back(std::move(e));
  }
  return arr;
}

inline ordered_json arrangement_to_json(
    const std::map<int, std::vector<TranslatedSubspace>>& arr) {
  ordered_json out = ordered_json::array();
  for (const auto& [i, spaces] : arr) {
    ordered_json e;
    e["i"] = i;
    ordered_json ss = ordered_json::array();
    for (const auto& s : spaces) {
      ordered_json sj;
      sj["base"] = s.base;
      sj["dirs"] = face_to_json(s.dirs);
      ss.push_back(std::move(sj));
    }
    e["subspaces"] = std::move(ss);
    out.push_back(std::move(e));
  }
  return out;
}

inline ordered_json witnesses_to_json(const std::vector<CMWitness>& ws) {
  ordered_json arr = ordered_json::array();
  for (const auto& w : ws) {
    ordered_json e;
    e["route"] = w.route;
    e["degree"] = w.degree;
    e["index"] = w.index;
    arr.push_back(std::move(e));
  }
  return arr;
}

inline ordered_json polynomial_to_json(const IntegerPolynomial& poly) {
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : poly.terms) {
    ordered_json t;
    // numeric when it fits, decimal string beyond int64
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max())
      t["coeff"] = static_cast<std::int64_t>(c);
    else
      t["coeff"] = c.str();
    t["exp"] = e;
    terms.push_back(std::move(t));
  }
  ordered_json j;
  j["terms"] = std::move(terms);
  return j;
}

inline ordered_json polarized_to_json(const PolarizedIdeal& pol) {
  ordered_json j = ideal_to_json(pol.ideal);
  ordered_json vm = ordered_json::array();
  for (std::size_t idx = 0; idx < pol.var_map.size(); ++idx) {
    ordered_json e;
    e["var"] = pol.var_map[idx].first + 1;  // original variable, 1-based
    e["copy"] = pol.var_map[idx].second;
    e["index"] = static_cast<int>(idx) + 1;
    vm.push_back(std::move(e));
  }
  j["var_map"] = std::move(vm);
  return j;
}

// The full analysis report; key order is part of the format.
inline ordered_json report_to_json(
    const MonomialIdeal& ideal, FieldSpec k, const CMVerdict& verdict,
    const GradedTable& lc, const GradedTable& betti, const GradedTable& ext,
    const std::vector<StandardPair>& pairs,
    const std::map<int, std::vector<TranslatedSubspace>>& noncm) {
  ordered_json j;
  j["ideal"] = ideal_to_json(ideal);
  j["field"] = k.characteristic;
  j["dim"] = verdict.dimension;
  j["depth"] = verdict.depth;
  j["pd"] = verdict.projective_dimension;
  j["cm"] = verdict.is_cm;
  j["witnesses"] = witnesses_to_json(verdict.witnesses);
  j["lc_table"] = table_to_json(lc)["entries"];
  j["betti_table"] = table_to_json(betti)["entries"];
  j["ext_table"] = table_to_json(ext)["entries"];
  j["standard_pairs"] = pairs_to_json(pairs);
  j["noncm_locus"] = arrangement_to_json(noncm);
  return j;
}

// "x1^3*x2*x3^2" (or "1") for human-readable listings.
inline std::string format_monomial(const ExponentVector& e,
                                   const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace cmtop
