// The four families of simplicial complexes attached to a monomial ideal
// and a multidegree: Cech, lower Koszul, dual Cech, and exponent complexes.
//
// Ground set conventions: cech lives on {1..n} \ supp(a_-); koszul on
// supp(b); dual_cech and exponent on {1..n}.
#pragma once

#include <algorithm>
#include <vector>

#include "cmtop/core.hpp"
#include "cmtop/monomial_ideal.hpp"
#include "cmtop/simplicial.hpp"

namespace cmtop {

// Coordinates that are nonnegative integers stay; everything else maps
// to -1. Idempotent.
inline ExponentVector normalize_degree(const DegreePoint& alpha) {
  ExponentVector a(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i)
    a[i] = alpha[i].is_nonnegative_integer() ? alpha[i].num : -1;
  return a;
}

// Cech complex in degree a: faces F \ supp(a_-) for the F >= supp(a_-)
// whose localization is k in degree a.
inline SimplicialComplex cech(const MonomialIdeal& ideal, const ExponentVector& a) {
  ideal.require_proper();
  const int n = ideal.var_count();
  const FaceSet apex = negative_support(a);
  const FaceSet ground = FaceSet::full(n).minus(apex);
  std::vector<FaceSet> faces;
  for (FaceSet g : subsets_of(ground)) {
    if (ideal.localization_is_field_at(a, g.unite(apex)))
      faces.push_back(g);
  }
  return SimplicialComplex::from_faces(ground, faces);
}

// Lower Koszul complex in degree b >= 0: faces F <= supp(b) with
// b' + F standard, where b' = b - supp(b).
inline SimplicialComplex koszul(const MonomialIdeal& ideal, const ExponentVector& b) {
  if (!is_nonnegative(b)) throw InputError("koszul degree must be >= 0");
  const FaceSet supp = positive_support(b);
  ExponentVector base(b);
  for (int i : supp.elements()) base[i] -= 1;
  std::vector<FaceSet> faces;
  for (FaceSet f : subsets_of(supp)) {
    ExponentVector probe(base);
    for (int i : f.elements()) probe[i] += 1;
    if (!ideal.contains(probe)) faces.push_back(f);
  }
  return SimplicialComplex::from_faces(supp, faces);
}

// Dual Cech complex in degree a: F is a face iff some minimal generator g
// has g_i + a_i <= -1 for every i in F, so the complex is generated by the
// witness sets of the generators. Void exactly for the zero ideal.
inline SimplicialComplex dual_cech(const MonomialIdeal& ideal, const ExponentVector& a) {
  const int n = ideal.var_count();
  if (static_cast<int>(a.size()) != n) throw InputError("degree length mismatch");
  std::vector<FaceSet> witness;
  witness.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) {
    FaceSet w;
    for (int i = 0; i < n; ++i)
      if (g[i] + a[i] <= -1) w = w.with(i);
    witness.push_back(w);
  }
  return SimplicialComplex::from_faces(FaceSet::full(n), witness);
}

// Exponent complex at a normalized integer degree. Facets are the maximal
// F >= supp(a_-) whose lattice slice through a stays standard; the slice
// test caps F-coordinates at the lcm exponent. Void iff the point is off
// the distracting arrangement.
inline SimplicialComplex exponent_complex(const MonomialIdeal& ideal,
                                          const ExponentVector& a) {
  ideal.require_proper();
  const int n = ideal.var_count();
  if (static_cast<int>(a.size()) != n) throw InputError("degree length mismatch");
  const FaceSet apex = negative_support(a);
  const ExponentVector lcm = ideal.lcm_exponent();
  const FaceSet ground = FaceSet::full(n);

  std::vector<FaceSet> candidates = subsets_of(ground.minus(apex));
  // top-down by size so only maximal qualifying sets are kept
  std::sort(candidates.begin(), candidates.end(), [](FaceSet x, FaceSet y) {
    return x.size() != y.size() ? x.size() > y.size() : x < y;
  });
  std::vector<FaceSet> facets;
  for (FaceSet c : candidates) {
    const FaceSet f = c.unite(apex);
    bool under_kept = false;
    for (FaceSet kept : facets)
      if (f.subset_of(kept)) { under_kept = true; break; }
    if (under_kept) continue;
    ExponentVector probe(a);
    for (int i : f.elements()) probe[i] = lcm[i];
    if (!ideal.contains(probe)) facets.push_back(f);
  }
  return SimplicialComplex::from_faces(ground, facets);
}

inline SimplicialComplex exponent_complex(const MonomialIdeal& ideal,
                                          const DegreePoint& alpha) {
  return exponent_complex(ideal, normalize_degree(alpha));
}

}  // namespace cmtop
