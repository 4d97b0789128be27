// Cross-identity battery: every identity the tables and complex families
// must satisfy, runnable against any single (ideal, field) input. The CLI
// `check` subcommand prints one line per identity; the acceptance suite
// loops these over its corpora.
#pragma once

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cmtop/cohomology.hpp"
#include "cmtop/core.hpp"
#include "cmtop/families.hpp"
#include "cmtop/homological.hpp"
#include "cmtop/monomial_ideal.hpp"
#include "cmtop/oracles.hpp"
#include "cmtop/transforms.hpp"

namespace cmtop::selfcheck {

struct CheckResult {
  std::string name;
  bool pass = true;
  bool skipped = false;
  std::string detail;
};

namespace detail {

inline CheckResult pass(const std::string& name) { return {name, true, false, ""}; }
inline CheckResult fail(const std::string& name, const std::string& detail) {
  return {name, false, false, detail};
}
inline CheckResult skip(const std::string& name, const std::string& why) {
  return {name, true, true, why};
}

inline std::vector<ExponentVector> exponent_box(const MonomialIdeal& ideal) {
  ExponentVector lo(static_cast<std::size_t>(ideal.var_count()), -1);
  return cmtop::detail::box_degrees(lo, ideal.lcm_exponent());
}

inline bool same_faces(const SimplicialComplex& a, const SimplicialComplex& b) {
  return a.is_void() == b.is_void() && a.facets() == b.facets();
}

}  // namespace detail

// Foundation invariants: standard monomials closed under division,
// saturated localization against a direct ray scan, minimalize stable
// under permutation and repetition.
inline CheckResult core_invariants(const MonomialIdeal& ideal, std::mt19937_64& rng) {
  const std::string name = "monomial-core";
  const int n = ideal.var_count();
  ExponentVector bound = ideal.lcm_exponent();
  for (auto& e : bound) e += 1;
  for (const ExponentVector& b : ideal.standard_monomials_in_box(bound)) {
    ExponentVector smaller(b);
    for (auto& e : smaller)
      if (e > 0 && rng() % 2) --e;
    if (ideal.contains(smaller))
      return detail::fail(name, "divisor of a standard monomial lies in I at " +
                                    format_degree(smaller));
  }

  std::int64_t max_exp = 1;
  for (const auto& g : ideal.generators())
    for (auto e : g) max_exp = std::max(max_exp, e);
  for (int rep = 0; rep < 24; ++rep) {
    ExponentVector a(static_cast<std::size_t>(n));
    for (auto& e : a) e = static_cast<std::int64_t>(rng() % 7) - 3;
    const FaceSet f(static_cast<std::uint32_t>(rng()) & FaceSet::full(n).bits());
    bool ray_standard = negative_support(a).subset_of(f);
    if (ray_standard) {
      std::int64_t down = 0;
      for (auto e : a) down = std::max(down, -e);
      for (std::int64_t r = 0; r <= max_exp + down + 1 && ray_standard; ++r) {
        ExponentVector b(a);
        for (int i : f.elements()) b[i] += r;
        if (is_nonnegative(b) && ideal.contains(b)) ray_standard = false;
      }
    }
    if (ideal.localization_is_field_at(a, f) != ray_standard)
      return detail::fail(name, "localization saturation wrong at " + format_degree(a));
  }

  std::vector<ExponentVector> shuffled = ideal.generators();
  shuffled.insert(shuffled.end(), ideal.generators().begin(), ideal.generators().end());
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  if (!(MonomialIdeal::minimalize(shuffled, n) == ideal))
    return detail::fail(name, "minimalize is order-dependent");
  return detail::pass(name);
}

// Theorem-level identity: cech_a is the link of supp(a_-) in the exponent
// complex, and the exponent complex is a cone with that apex.
inline CheckResult link_and_cone(const MonomialIdeal& ideal) {
  const std::string name = "exponent-link-cone";
  for (const ExponentVector& a : detail::exponent_box(ideal)) {
    const FaceSet apex = negative_support(a);
    const SimplicialComplex e = exponent_complex(ideal, a);
    const SimplicialComplex c = cech(ideal, a);
    if (e.is_void()) {
      if (!c.is_void())
        return detail::fail(name, "cech nonvoid at void exponent complex " +
                                      format_degree(a));
      continue;
    }
    if (!(e.star(apex) == e))
      return detail::fail(name, "not a cone with apex at " + format_degree(a));
    if (!(e.link(apex) == c))
      return detail::fail(name, "link mismatch at " + format_degree(a));
  }
  return detail::pass(name);
}

// cech(I,a) is unchanged by normalizing a and by pushing coordinates
// that are already <= -1 further down.
inline CheckResult degree_collapse(const MonomialIdeal& ideal, std::mt19937_64& rng) {
  const std::string name = "cech-degree-collapse";
  for (const ExponentVector& a : detail::exponent_box(ideal)) {
    ExponentVector normalized(a);
    for (auto& e : normalized)
      if (e < 0) e = -1;
    if (!(cech(ideal, a) == cech(ideal, normalized)))
      return detail::fail(name, "normalize changed cech at " + format_degree(a));
    ExponentVector lowered(a);
    bool changed = false;
    for (auto& e : lowered) {
      if (e <= -1) {
        e -= static_cast<std::int64_t>(rng() % 5);
        changed = true;
      }
    }
    if (changed && !(cech(ideal, a) == cech(ideal, lowered)))
      return detail::fail(name, "lowering changed cech at " + format_degree(a));
  }
  return detail::pass(name);
}

// Cone acyclicity and the Euler characteristic identity, exercised on the
// exponent complexes over the lattice box.
inline CheckResult cohomology_structure(const MonomialIdeal& ideal, FieldSpec k) {
  const std::string name = "cohomology-structure";
  for (const ExponentVector& a : detail::exponent_box(ideal)) {
    const SimplicialComplex e = exponent_complex(ideal, a);
    if (e.is_void()) continue;
    const CohomologyVector coh = reduced_cohomology(e, k);
    std::int64_t alternating = 0;
    for (const auto& [i, d] : coh.dims) alternating += (i % 2 == 0 ? d : -d);
    if (alternating != e.reduced_euler_characteristic())
      return detail::fail(name, "euler characteristic off at " + format_degree(a));
    // a cone over a genuine vertex has no reduced cohomology
    if (!negative_support(a).empty() && !coh.trivial())
      return detail::fail(name, "cone with apex " +
                                    format_degree(a) + " has cohomology");
  }
  return detail::pass(name);
}

// Lemma-level star identity: setting nonnegative coordinates to -1 turns
// the exponent complex into the star of the changed index set.
inline CheckResult star_identity(const MonomialIdeal& ideal, std::mt19937_64& rng) {
  const std::string name = "exponent-star";
  for (const ExponentVector& a : detail::exponent_box(ideal)) {
    FaceSet candidates = positive_support(a);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] == 0) candidates = candidates.with(static_cast<int>(i));
    FaceSet changed;
    for (int v : candidates.elements())
      if (rng() % 2) changed = changed.with(v);
    if (changed.empty()) continue;
    ExponentVector beta(a);
    for (int v : changed.elements()) beta[v] = -1;
    const SimplicialComplex star_side = exponent_complex(ideal, a).star(changed);
    const SimplicialComplex direct = exponent_complex(ideal, beta);
    if (!(star_side == direct))
      return detail::fail(name, "star identity failed at " + format_degree(a));
  }
  return detail::pass(name);
}

// cech(I, b-1) is a subcomplex of koszul(I, b) on the same ground set.
inline CheckResult cech_in_koszul(const MonomialIdeal& ideal) {
  const std::string name = "cech-subcomplex-of-koszul";
  const ExponentVector lo(static_cast<std::size_t>(ideal.var_count()), 0);
  for (const ExponentVector& b :
       cmtop::detail::box_degrees(lo, ideal.lcm_exponent())) {
    ExponentVector a(b);
    for (auto& e : a) e -= 1;
    const SimplicialComplex ca = cech(ideal, a);
    const SimplicialComplex kb = koszul(ideal, b);
    if (!(ca.ground() == kb.ground()))
      return detail::fail(name, "ground mismatch at " + format_degree(b));
    if (ca.is_void()) continue;
    for (FaceSet f : ca.facets())
      if (!kb.has_face(f))
        return detail::fail(name, "containment failed at " + format_degree(b));
  }
  return detail::pass(name);
}

// Theorem-level Alexander duality: dual_cech(I, -a-1) restricted to the
// cech ground set is the Alexander dual of cech(I, a).
inline CheckResult cech_alexander_duality(const MonomialIdeal& ideal,
                                          std::mt19937_64& rng) {
  const std::string name = "cech-dual-cech-alexander";
  const int n = ideal.var_count();
  std::vector<ExponentVector> degrees = detail::exponent_box(ideal);
  for (int extra = 0; extra < 8; ++extra) {
    ExponentVector a(static_cast<std::size_t>(n));
    for (auto& e : a) e = static_cast<std::int64_t>(rng() % 9) - 4;
    degrees.push_back(std::move(a));
  }
  for (const ExponentVector& a : degrees) {
    const FaceSet ground = FaceSet::full(n).minus(negative_support(a));
    ExponentVector neg(a);
    for (auto& e : neg) e = -e - 1;
    const SimplicialComplex lhs = dual_cech(ideal, neg).restrict_to(ground);
    const SimplicialComplex rhs = cech(ideal, a).alexander_dual();
    if (!(lhs == rhs))
      return detail::fail(name, "duality failed at " + format_degree(a));
  }
  return detail::pass(name);
}

// Local duality: dim Ext^{n-i} at -a-1 equals dim H^i at a on the box.
inline CheckResult local_duality(const MonomialIdeal& ideal, FieldSpec k,
                                 unsigned threads = 1) {
  const std::string name = "local-duality";
  if (ideal.is_zero()) return detail::skip(name, "zero ideal has no Ext table");
  const int n = ideal.var_count();
  const GradedTable lc = local_cohomology_table(ideal, k, threads);
  const GradedTable ext = ext_table(ideal, k, threads);
  for (const ExponentVector& a : cmtop::detail::box_degrees(lc.box_lo, lc.box_hi)) {
    ExponentVector neg(a);
    for (auto& e : neg) e = -e - 1;
    for (int i = 0; i <= n; ++i)
      if (lc.dim_at(a, i) != ext.dim_at(neg, n - i))
        return detail::fail(name, "mismatch at " + format_degree(a) +
                                      " i=" + std::to_string(i));
  }
  return detail::pass(name);
}

// Takayama bound: the enlarged box has no nonzero entry outside the
// standard box.
inline CheckResult takayama_bound(const MonomialIdeal& ideal, FieldSpec k) {
  const std::string name = "takayama-bound";
  const int n = ideal.var_count();
  const ExponentVector lcm = ideal.lcm_exponent();
  ExponentVector lo(static_cast<std::size_t>(n), -1), hi(lcm);
  for (auto& e : hi) e += 1;
  for (const ExponentVector& a : cmtop::detail::box_degrees(lo, hi)) {
    bool inside = true;
    for (int i = 0; i < n; ++i)
      if (a[i] > lcm[i] - 1) { inside = false; break; }
    if (inside) continue;
    const CohomologyVector coh = reduced_cohomology(cech(ideal, a), k);
    if (!coh.trivial())
      return detail::fail(name, "nonzero local cohomology at " + format_degree(a));
  }
  return detail::pass(name);
}

inline CheckResult oracle_betti(const MonomialIdeal& ideal, FieldSpec k,
                                unsigned threads = 1) {
  const std::string name = "betti-vs-taylor";
  if (ideal.generators().size() > kOracleGeneratorCap)
    return detail::skip(name, "generator count above oracle cap");
  const GradedTable betti = betti_table(ideal, k, threads);
  const int top = ideal.var_count() + static_cast<int>(ideal.generators().size()) + 1;
  int beta_one = 0;
  for (const ExponentVector& b :
       cmtop::detail::box_degrees(betti.box_lo, betti.box_hi)) {
    const std::map<int, int> oracle = taylor_tor(ideal, k, b);
    for (int i = 0; i <= top; ++i) {
      const auto it = oracle.find(i);
      const int want = it == oracle.end() ? 0 : it->second;
      if (betti.dim_at(b, i) != want)
        return detail::fail(name, "Tor mismatch at " + format_degree(b) +
                                      " i=" + std::to_string(i));
    }
    auto it = oracle.find(1);
    if (it != oracle.end()) beta_one += it->second;
  }
  if (beta_one != static_cast<int>(ideal.generators().size()))
    return detail::fail(name, "first syzygy count != minimal generator count");
  return detail::pass(name);
}

inline CheckResult dual_cech_agreement(const MonomialIdeal& ideal,
                                       std::mt19937_64& rng) {
  const std::string name = "dual-cech-vs-brute";
  const int n = ideal.var_count();
  std::vector<ExponentVector> degrees;
  for (int rep = 0; rep < 10; ++rep) {
    ExponentVector a(static_cast<std::size_t>(n));
    for (auto& e : a) e = static_cast<std::int64_t>(rng() % 9) - 4;
    degrees.push_back(std::move(a));
  }
  ExponentVector lo = ideal.lcm_exponent();
  for (auto& e : lo) e = -e;
  degrees.push_back(lo);
  degrees.push_back(ExponentVector(static_cast<std::size_t>(n), 0));
  for (const ExponentVector& a : degrees)
    if (!(dual_cech(ideal, a) == dual_cech_brute(ideal, a)))
      return detail::fail(name, "complexes differ at " + format_degree(a));
  return detail::pass(name);
}

inline CheckResult oracle_ext(const MonomialIdeal& ideal, FieldSpec k,
                              unsigned threads = 1) {
  const std::string name = "ext-vs-taylor";
  if (ideal.is_zero()) return detail::skip(name, "zero ideal has no Ext table");
  if (ideal.generators().size() > kOracleGeneratorCap)
    return detail::skip(name, "generator count above oracle cap");
  const GradedTable ext = ext_table(ideal, k, threads);
  const int top = ideal.var_count() + static_cast<int>(ideal.generators().size()) + 1;
  for (const ExponentVector& a :
       cmtop::detail::box_degrees(ext.box_lo, ext.box_hi)) {
    const std::map<int, int> oracle = taylor_ext(ideal, k, a);
    for (int i = 0; i <= top; ++i) {
      const auto it = oracle.find(i);
      const int want = it == oracle.end() ? 0 : it->second;
      if (ext.dim_at(a, i) != want)
        return detail::fail(name, "Ext mismatch at " + format_degree(a) +
                                      " i=" + std::to_string(i));
    }
  }
  return detail::pass(name);
}

// is_cohen_macaulay itself hard-errors on route disagreement.
inline CheckResult route_agreement(const MonomialIdeal& ideal, FieldSpec k,
                                   unsigned threads = 1) {
  const std::string name = "cm-route-agreement";
  try {
    is_cohen_macaulay(ideal, k, threads);
  } catch (const InternalError& e) {
    return detail::fail(name, e.what());
  }
  return detail::pass(name);
}

// Squarefree reduction: the tables match Hochster's two formulas termwise
// and Betti degrees are squarefree.
inline CheckResult squarefree_hochster(const MonomialIdeal& ideal, FieldSpec k,
                                       unsigned threads = 1) {
  const std::string name = "squarefree-hochster";
  if (!ideal.is_squarefree() || ideal.is_unit())
    return detail::skip(name, "not a squarefree proper ideal");
  const int n = ideal.var_count();
  // Stanley-Reisner complex of I on the full vertex set
  std::vector<FaceSet> faces;
  for (FaceSet f : subsets_of(FaceSet::full(n))) {
    ExponentVector e(static_cast<std::size_t>(n), 0);
    for (int v : f.elements()) e[v] = 1;
    if (!ideal.contains(e)) faces.push_back(f);
  }
  const SimplicialComplex delta = SimplicialComplex::from_faces(FaceSet::full(n), faces);

  const GradedTable lc = local_cohomology_table(ideal, k, threads);
  for (const ExponentVector& a : cmtop::detail::box_degrees(lc.box_lo, lc.box_hi)) {
    for (int i = 0; i <= n; ++i)
      if (lc.dim_at(a, i) != hochster_lc_dim(delta, i, a, k))
        return detail::fail(name, "local cohomology mismatch at " +
                                      format_degree(a) + " i=" + std::to_string(i));
  }

  const GradedTable betti = betti_table(ideal, k, threads);
  for (const auto& [b, dims] : betti.entries) {
    for (auto e : b)
      if (e > 1)
        return detail::fail(name, "nonsquarefree Betti degree " + format_degree(b));
    FaceSet f = positive_support(b);
    const CohomologyVector coh = reduced_cohomology(delta.restrict_to(f), k);
    for (const auto& [i, d] : dims)
      if (coh.dim(f.size() - i - 1) != d)
        return detail::fail(name, "Tor formula mismatch at " + format_degree(b));
  }
  for (const ExponentVector& b :
       cmtop::detail::box_degrees(betti.box_lo, betti.box_hi)) {
    FaceSet f = positive_support(b);
    bool squarefree = true;
    for (auto e : b)
      if (e > 1) squarefree = false;
    if (!squarefree) continue;
    // at squarefree degrees the Koszul complex is the vertex-induced
    // restriction of the Stanley-Reisner complex, as a face set
    if (!(koszul(ideal, b) == delta.restrict_to(f)))
      return detail::fail(name, "koszul/restriction mismatch at " + format_degree(b));
    const CohomologyVector coh = reduced_cohomology(delta.restrict_to(f), k);
    for (int i = 0; i <= n; ++i)
      if (betti.dim_at(b, i) != coh.dim(f.size() - i - 1))
        return detail::fail(name, "Tor formula mismatch at " + format_degree(b));
  }
  return detail::pass(name);
}

// Standard pairs: union over any finite box equals the standard monomials;
// every Stanley piece is dominated by some standard pair; Stanley pieces
// tile the standard monomials disjointly.
inline CheckResult pair_cover(const MonomialIdeal& ideal) {
  const std::string name = "standard-pair-cover";
  const int n = ideal.var_count();
  const std::vector<StandardPair> pairs = standard_pairs(ideal);
  const std::vector<StandardPair> pieces = stanley_decomposition(ideal);

  ExponentVector bound = ideal.lcm_exponent();
  for (auto& e : bound) e += 2;
  auto in_translate = [n](const StandardPair& p, const ExponentVector& x) {
    for (int i = 0; i < n; ++i) {
      if (p.dirs.contains(i)) {
        if (x[i] < p.base[i]) return false;
      } else if (x[i] != p.base[i]) {
        return false;
      }
    }
    return true;
  };

  ExponentVector x(static_cast<std::size_t>(n), 0);
  while (true) {
    const bool standard = !ideal.contains(x);
    bool covered = false;
    for (const auto& p : pairs)
      if (in_translate(p, x)) { covered = true; break; }
    if (standard != covered)
      return detail::fail(name, "pair cover wrong at " + format_degree(x));
    int tiles = 0;
    for (const auto& p : pieces)
      if (in_translate(p, x)) ++tiles;
    if (tiles != (standard ? 1 : 0))
      return detail::fail(name, "stanley tiling wrong at " + format_degree(x));
    int i = n - 1;
    while (i >= 0 && x[i] == bound[i]) x[i--] = 0;
    if (i < 0) break;
    ++x[i];
  }

  for (const auto& piece : pieces) {
    bool dominated = false;
    for (const auto& p : pairs) {
      if (!piece.dirs.subset_of(p.dirs)) continue;
      bool inside = true;
      for (int i = 0; i < n && inside; ++i) {
        if (p.dirs.contains(i)) {
          if (piece.base[i] < p.base[i]) inside = false;
        } else if (piece.base[i] != p.base[i]) {
          inside = false;
        }
      }
      if (inside) { dominated = true; break; }
    }
    if (!dominated)
      return detail::fail(name, "stanley piece not dominated: " +
                                    format_degree(piece.base));
  }

  if (ideal.krull_dimension() !=
      (pairs.empty() ? 0 : std::max_element(pairs.begin(), pairs.end(),
                                            [](const auto& a, const auto& b) {
                                              return a.dirs.size() < b.dirs.size();
                                            })
                               ->dirs.size()))
    return detail::fail(name, "krull dimension disagrees with max pair size");
  return detail::pass(name);
}

// Distraction vanishing matches standard-pair geometry on a lattice box
// around the positive orthant; the expansion has total degree |a| with
// leading form x^a.
inline CheckResult distraction_geometry(const MonomialIdeal& ideal) {
  const std::string name = "distraction-zero-set";
  const int n = ideal.var_count();
  for (const auto& g : ideal.generators()) {
    const IntegerPolynomial poly = distraction_monomial(g);
    std::int64_t total = 0;
    for (auto e : g) total += e;
    for (const auto& [e, c] : poly.terms) {
      std::int64_t deg = 0;
      for (auto x : e) deg += x;
      if (deg > total || (deg == total && !(e == g && c == 1)))
        return detail::fail(name, "distraction leading form wrong for " +
                                      format_degree(g));
    }
    if (poly.terms.find(g) == poly.terms.end())
      return detail::fail(name, "distraction misses its leading term");
  }
  const std::vector<StandardPair> pairs = standard_pairs(ideal);
  ExponentVector lo(static_cast<std::size_t>(n), -2), hi = ideal.lcm_exponent();
  for (auto& e : hi) e += 2;
  for (const ExponentVector& p : cmtop::detail::box_degrees(lo, hi)) {
    const bool vanishes = distraction_vanishes_at(ideal, p);
    bool on_arrangement = false;
    for (const auto& pair : pairs) {
      bool match = true;
      for (int i = 0; i < n && match; ++i)
        if (!pair.dirs.contains(i) && p[i] != pair.base[i]) match = false;
      if (match) { on_arrangement = true; break; }
    }
    if (is_nonnegative(p)) {
      if (vanishes == ideal.contains(p))
        return detail::fail(name, "vanishing != standard at " + format_degree(p));
    }
    if (vanishes != on_arrangement)
      return detail::fail(name, "vanishing != arrangement at " + format_degree(p));
  }
  return detail::pass(name);
}

// Pointwise geometric criterion: a box lattice point has a Reisner defect
// in its exponent complex iff it lies in the quasidegree arrangement.
inline CheckResult quasidegree_pointwise(const MonomialIdeal& ideal, FieldSpec k,
                                         unsigned threads = 1) {
  const std::string name = "quasidegree-pointwise";
  const int n = ideal.var_count();
  const int d = ideal.krull_dimension();
  const auto arrangement = quasidegree_arrangement(ideal, k, threads);
  auto in_arrangement = [&](const ExponentVector& alpha) {
    for (const auto& [i, spaces] : arrangement) {
      for (const auto& s : spaces) {
        bool match = true;
        for (int j = 0; j < n && match; ++j)
          if (!s.dirs.contains(j) && alpha[j] != s.base[j]) match = false;
        if (match) return true;
      }
    }
    return false;
  };
  for (const ExponentVector& alpha : detail::exponent_box(ideal)) {
    const SimplicialComplex e = exponent_complex(ideal, alpha);
    bool defect;
    if (e.is_void()) {
      defect = false;
      if (in_arrangement(alpha))
        return detail::fail(name, "arrangement point off V_I at " +
                                      format_degree(alpha));
    } else {
      defect = !reisner_defect(e, k, d, negative_support(alpha)).empty();
    }
    if (defect != in_arrangement(alpha))
      return detail::fail(name, "witness mismatch at " + format_degree(alpha));
  }
  return detail::pass(name);
}

// Socle rows: both complexes carry the top Betti number at every top
// Betti degree. The comparison map is injective, so tor <= lc always;
// equality can fail when the degree is dominated by another top Betti
// degree (the dual resolution leaks classes downward). A failure of any
// other shape would be an implementation bug and is flagged as such.
inline CheckResult socle_rows(const MonomialIdeal& ideal, FieldSpec k,
                              unsigned threads = 1) {
  const std::string name = "top-betti-socle";
  const auto rows = top_betti_socle_check(ideal, k, threads);
  for (const auto& row : rows) {
    if (row.equal) continue;
    if (row.tor_dim > row.lc_dim)
      return detail::fail(name, "BUG: injectivity violated at " +
                                    format_degree(row.degree));
    bool dominated = false;
    for (const auto& other : rows)
      if (!(other.degree == row.degree) && divides(row.degree, other.degree))
        dominated = true;
    if (!dominated)
      return detail::fail(name, "BUG: mismatch at undominated degree " +
                                    format_degree(row.degree));
    return detail::fail(name, "socle dimensions differ at dominated top Betti degree " +
                                  format_degree(row.degree) + " (tor=" +
                                  std::to_string(row.tor_dim) + " < lc=" +
                                  std::to_string(row.lc_dim) + ")");
  }
  return detail::pass(name);
}

// Polarization carries the CM property and the total Betti numbers; only
// run when the squarefree copy stays small enough to scan.
inline CheckResult polarization_transfer(const MonomialIdeal& ideal, FieldSpec k,
                                         unsigned threads = 1) {
  const std::string name = "polarization-transfer";
  if (ideal.is_unit()) return detail::skip(name, "unit ideal");
  std::int64_t total = 0;
  for (auto e : ideal.lcm_exponent()) total += e;
  if (total > 8)
    return detail::skip(name, "polarized variable count above the scan guard");
  const PolarizedIdeal pol = polarize(ideal);
  if (is_cohen_macaulay(ideal, k, threads).is_cm !=
      is_cohen_macaulay(pol.ideal, k, threads).is_cm)
    return detail::fail(name, "CM property not preserved");
  std::map<int, int> before, after;
  for (const auto& [deg, dims] : betti_table(ideal, k, threads).entries)
    for (const auto& [i, d] : dims) before[i] += d;
  for (const auto& [deg, dims] : betti_table(pol.ideal, k, threads).entries)
    for (const auto& [i, d] : dims) after[i] += d;
  if (before != after)
    return detail::fail(name, "total Betti numbers changed under polarization");
  return detail::pass(name);
}

// Optional finite-length grading check (trivially implied by the box
// representation, retained as a stated property).
inline CheckResult finite_length_grading(const MonomialIdeal& ideal, FieldSpec k,
                                         unsigned threads = 1) {
  const std::string name = "finite-length-grading";
  const GradedTable lc = local_cohomology_table(ideal, k, threads);
  const int n = ideal.var_count();
  for (int i = 0; i <= n; ++i) {
    bool finite = true;
    for (const auto& [a, dims] : lc.entries) {
      if (!dims.count(i)) continue;
      for (auto e : a)
        if (e == -1) finite = false;
    }
    if (!finite) continue;
    for (const auto& [a, dims] : lc.entries) {
      if (!dims.count(i)) continue;
      for (auto e : a)
        if (e < -1)
          return detail::fail(name, "degree below -1 in finite-length module");
    }
  }
  return detail::pass(name);
}

inline std::vector<CheckResult> run_identity_checks(const MonomialIdeal& ideal,
                                                    FieldSpec k,
                                                    std::uint64_t seed,
                                                    unsigned threads = 1) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;
  out.push_back(core_invariants(ideal, rng));
  out.push_back(link_and_cone(ideal));
  out.push_back(cohomology_structure(ideal, k));
  out.push_back(degree_collapse(ideal, rng));
  out.push_back(star_identity(ideal, rng));
  out.push_back(cech_in_koszul(ideal));
  out.push_back(cech_alexander_duality(ideal, rng));
  out.push_back(dual_cech_agreement(ideal, rng));
  out.push_back(local_duality(ideal, k, threads));
  out.push_back(takayama_bound(ideal, k));
  out.push_back(oracle_betti(ideal, k, threads));
  out.push_back(oracle_ext(ideal, k, threads));
  out.push_back(route_agreement(ideal, k, threads));
  out.push_back(squarefree_hochster(ideal, k, threads));
  out.push_back(pair_cover(ideal));
  out.push_back(distraction_geometry(ideal));
  out.push_back(quasidegree_pointwise(ideal, k, threads));
  out.push_back(socle_rows(ideal, k, threads));
  out.push_back(polarization_transfer(ideal, k, threads));
  out.push_back(finite_length_grading(ideal, k, threads));
  return out;
}

}  // namespace cmtop::selfcheck
