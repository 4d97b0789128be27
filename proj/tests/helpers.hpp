// Test-side utilities: ideal constructors, random corpus generators, and
// independent brute-force oracles kept deliberately separate from the
// library's own code paths.
#pragma once

#include <algorithm>
#include <bit>
#include <iterator>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cmtop/core.hpp"
#include "cmtop/monomial_ideal.hpp"
#include "cmtop/simplicial.hpp"

namespace testutil {

inline cmtop::MonomialIdeal make_ideal(int n,
                                       std::vector<cmtop::ExponentVector> gens) {
  return cmtop::MonomialIdeal::minimalize(std::move(gens), n);
}

inline cmtop::MonomialIdeal random_ideal(std::mt19937_64& rng, int max_n,
                                         std::int64_t max_exp, int max_gens) {
  std::uniform_int_distribution<int> nd(1, max_n);
  const int n = nd(rng);
  std::uniform_int_distribution<int> gd(0, max_gens);
  const int count = gd(rng);
  std::uniform_int_distribution<std::int64_t> ed(0, max_exp);
  std::vector<cmtop::ExponentVector> gens;
  for (int g = 0; g < count; ++g) {
    cmtop::ExponentVector e(static_cast<std::size_t>(n));
    bool positive = false;
    for (auto& x : e) {
      x = ed(rng);
      if (x > 0) positive = true;
    }
    if (positive) gens.push_back(std::move(e));  // keep the ideal proper
  }
  return make_ideal(n, std::move(gens));
}

inline cmtop::MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, int max_n,
                                                    int max_gens) {
  std::uniform_int_distribution<int> nd(1, max_n);
  const int n = nd(rng);
  std::uniform_int_distribution<int> gd(0, max_gens);
  const int count = gd(rng);
  std::vector<cmtop::ExponentVector> gens;
  for (int g = 0; g < count; ++g) {
    cmtop::ExponentVector e(static_cast<std::size_t>(n));
    bool positive = false;
    for (auto& x : e) {
      x = static_cast<std::int64_t>(rng() % 2);
      if (x > 0) positive = true;
    }
    if (positive) gens.push_back(std::move(e));
  }
  return make_ideal(n, std::move(gens));
}

// Independent dimension oracle: enumerate subsets directly on generator
// exponent data, no FaceSet machinery.
inline int brute_krull_dimension(const cmtop::MonomialIdeal& ideal) {
  const int n = ideal.var_count();
  int best = 0;
  for (unsigned f = 0; f < (1u << n); ++f) {
    bool ok = true;
    for (const auto& g : ideal.generators()) {
      bool support_inside = true;
      for (int i = 0; i < n; ++i)
        if (g[static_cast<std::size_t>(i)] > 0 && !((f >> i) & 1u))
          support_inside = false;
      if (support_inside) { ok = false; break; }
    }
    if (ok) best = std::max(best, std::popcount(f));
  }
  return best;
}

// Independent localization oracle: scan the ray a + r*F for r up to the
// largest generator exponent.
inline bool brute_localization_is_field(const cmtop::MonomialIdeal& ideal,
                                        const cmtop::ExponentVector& a,
                                        cmtop::FaceSet f) {
  if (!cmtop::negative_support(a).subset_of(f)) return false;
  // scan far enough that every F-coordinate has passed its lcm bound
  std::int64_t max_exp = 1, most_negative = 0;
  for (const auto& g : ideal.generators())
    for (auto e : g) max_exp = std::max(max_exp, e);
  for (auto e : a) most_negative = std::max(most_negative, -e);
  const std::int64_t rmax = max_exp + most_negative;
  for (std::int64_t r = 0; r <= rmax + 1; ++r) {
    cmtop::ExponentVector b(a);
    for (int i : f.elements()) b[i] += r;
    if (!cmtop::is_nonnegative(b)) continue;  // not a monomial of S yet
    if (ideal.contains(b)) return false;
  }
  return true;
}

// Independent dense rank over Q via plain row reduction on exact rationals.
inline int dense_rational_rank(std::vector<std::vector<boost::multiprecision::cpp_rational>> m) {
  using boost::multiprecision::cpp_rational;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const cpp_rational factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

// Independent reduced cohomology: enumerate all faces from the facet list
// with std::set, build coboundaries directly, reduce with rationals or a
// pedestrian mod-p elimination.
inline std::map<int, int> dense_reduced_cohomology(
    const std::vector<std::set<int>>& facets, std::uint64_t characteristic) {
  std::set<std::set<int>> faces;
  for (const auto& f : facets) {
    // all subsets of f
    std::vector<int> verts(f.begin(), f.end());
    for (unsigned mask = 0; mask < (1u << verts.size()); ++mask) {
      std::set<int> sub;
      for (std::size_t i = 0; i < verts.size(); ++i)
        if ((mask >> i) & 1u) sub.insert(verts[i]);
      faces.insert(sub);
    }
  }
  int top = -1;
  for (const auto& f : faces) top = std::max(top, static_cast<int>(f.size()) - 1);

  std::vector<std::vector<std::set<int>>> level(static_cast<std::size_t>(top) + 3);
  for (const auto& f : faces)
    level[f.size()].push_back(f);

  auto rank_of = [&](int t) -> int {
    const auto& src = level[static_cast<std::size_t>(t)];
    const auto& dst = level[static_cast<std::size_t>(t) + 1];
    if (src.empty() || dst.empty()) return 0;
    std::vector<std::vector<boost::multiprecision::cpp_rational>> m(
        dst.size(), std::vector<boost::multiprecision::cpp_rational>(src.size(), 0));
    std::vector<std::vector<std::int64_t>> mi(
        dst.size(), std::vector<std::int64_t>(src.size(), 0));
    for (std::size_t c = 0; c < src.size(); ++c)
      for (std::size_t r = 0; r < dst.size(); ++r) {
        const auto& h = src[c];
        const auto& g = dst[r];
        if (!std::includes(g.begin(), g.end(), h.begin(), h.end())) continue;
        std::vector<int> diff;
        std::set_difference(g.begin(), g.end(), h.begin(), h.end(),
                            std::back_inserter(diff));
        if (diff.size() != 1) continue;
        int below = 0;
        for (int u : h)
          if (u < diff[0]) ++below;
        const int sign = below % 2 == 0 ? 1 : -1;
        m[r][c] = sign;
        mi[r][c] = sign;
      }
    if (characteristic == 0) return dense_rational_rank(std::move(m));
    // pedestrian mod-p elimination; inverse found by scanning the field
    const std::int64_t p = static_cast<std::int64_t>(characteristic);
    auto norm = [p](std::int64_t v) { return ((v % p) + p) % p; };
    for (auto& row : mi)
      for (auto& v : row) v = norm(v);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < src.size() && rank < dst.size(); ++c) {
      std::size_t pivot = rank;
      while (pivot < dst.size() && mi[pivot][c] == 0) ++pivot;
      if (pivot == dst.size()) continue;
      std::swap(mi[pivot], mi[rank]);
      std::int64_t inv = 0;
      for (std::int64_t x = 1; x < p; ++x)
        if (mi[rank][c] * x % p == 1) inv = x;
      for (std::size_t i = rank + 1; i < dst.size(); ++i) {
        if (mi[i][c] == 0) continue;
        const std::int64_t factor = mi[i][c] * inv % p;
        for (std::size_t j = 0; j < src.size(); ++j)
          mi[i][j] = norm(mi[i][j] - factor * mi[rank][j]);
      }
      ++rank;
    }
    return static_cast<int>(rank);
  };

  std::map<int, int> out;
  if (faces.empty()) return out;
  std::vector<int> ranks(static_cast<std::size_t>(top) + 2, 0);
  for (int t = 0; t <= top; ++t) ranks[static_cast<std::size_t>(t)] = rank_of(t);
  for (int i = -1; i <= top; ++i) {
    const int t = i + 1;
    const int space = static_cast<int>(level[static_cast<std::size_t>(t)].size());
    const int out_rank = t <= top ? ranks[static_cast<std::size_t>(t)] : 0;
    const int in_rank = t >= 1 ? ranks[static_cast<std::size_t>(t) - 1] : 0;
    if (space - out_rank - in_rank > 0) out[i] = space - out_rank - in_rank;
  }
  return out;
}

// Minimal 6-vertex triangulation of the real projective plane (1-based).
inline std::vector<std::set<int>> rp2_facets() {
  return {{1, 2, 3}, {1, 3, 5}, {1, 2, 6}, {1, 4, 5}, {1, 4, 6},
          {2, 3, 4}, {2, 4, 5}, {2, 5, 6}, {3, 4, 6}, {3, 5, 6}};
}

inline cmtop::SimplicialComplex rp2_complex() {
  std::vector<cmtop::FaceSet> facets;
  for (const auto& f : rp2_facets()) {
    cmtop::FaceSet fs;
    for (int v : f) fs = fs.with(v - 1);
    facets.push_back(fs);
  }
  return cmtop::SimplicialComplex::from_faces(cmtop::FaceSet::full(6), facets);
}

// Its Stanley-Reisner ideal: the ten missing triangles.
inline cmtop::MonomialIdeal rp2_ideal() {
  const auto present = rp2_facets();
  std::vector<cmtop::ExponentVector> gens;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      for (int c = b + 1; c <= 6; ++c) {
        const std::set<int> t{a, b, c};
        bool found = false;
        for (const auto& f : present)
          if (f == t) found = true;
        if (!found) {
          cmtop::ExponentVector e(6, 0);
          e[static_cast<std::size_t>(a - 1)] = 1;
          e[static_cast<std::size_t>(b - 1)] = 1;
          e[static_cast<std::size_t>(c - 1)] = 1;
          gens.push_back(std::move(e));
        }
      }
  return make_ideal(6, std::move(gens));
}

}  // namespace testutil
