// Reduced simplicial cohomology over a field, plus the Reisner-type
// Cohen-Macaulay tests built on it.
//
// Conventions: VOID has zero cohomology everywhere; IRRELEVANT has
// H~^{-1} = k and nothing else. Cochain bases are faces in ascending
// bitmask order, so every matrix is reproducible bit for bit.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cmtop/core.hpp"
#include "cmtop/linalg.hpp"
#include "cmtop/simplicial.hpp"

namespace cmtop {

struct CohomologyVector {
  std::map<int, int> dims;  // i -> dim_k H~^i, only nonzero entries stored

  int dim(int i) const {
    auto it = dims.find(i);
    return it == dims.end() ? 0 : it->second;
  }
  bool trivial() const { return dims.empty(); }
  // True when every nonzero entry sits in cohomological degree t.
  bool concentrated_in(int t) const {
    for (const auto& [i, d] : dims)
      if (i != t && d > 0) return false;
    return true;
  }
};

namespace detail {

// Coboundary from faces of size s to faces of size s+1; the sign of
// inserting vertex v into G is (-1)^(number of vertices of G below v).
inline Matrix coboundary_matrix(const std::vector<FaceSet>& source,
                                const std::vector<FaceSet>& target) {
  Matrix m(target.size(), std::vector<std::int64_t>(source.size(), 0));
  std::map<FaceSet, std::size_t> row_of;
  for (std::size_t r = 0; r < target.size(); ++r) row_of[target[r]] = r;
  for (std::size_t c = 0; c < source.size(); ++c) {
    const FaceSet h = source[c];
    for (FaceSet g : target) {
      if (!h.subset_of(g)) continue;
      const FaceSet diff = g.minus(h);
      if (diff.size() != 1) continue;
      const int v = diff.elements()[0];
      int below = 0;
      for (int u : h.elements())
        if (u < v) ++below;
      m[row_of[g]][c] = (below % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

}  // namespace detail

inline CohomologyVector reduced_cohomology(const SimplicialComplex& delta,
                                           FieldSpec k) {
  CohomologyVector out;
  if (delta.is_void()) return out;
  const int top = delta.dim();  // >= -1

  // level t holds the faces of size t (cochain degree t-1)
  std::vector<std::vector<FaceSet>> level(static_cast<std::size_t>(top) + 3);
  for (int t = 0; t <= top + 1; ++t)
    level[static_cast<std::size_t>(t)] = delta.faces_of_size(t);

  std::vector<int> rank_out(static_cast<std::size_t>(top) + 2, 0);
  for (int t = 0; t <= top; ++t) {
    const auto& src = level[static_cast<std::size_t>(t)];
    const auto& dst = level[static_cast<std::size_t>(t) + 1];
    if (src.empty() || dst.empty()) continue;
    rank_out[static_cast<std::size_t>(t)] =
        matrix_rank(detail::coboundary_matrix(src, dst), k);
  }

  for (int i = -1; i <= top; ++i) {
    const int t = i + 1;
    const int space = static_cast<int>(level[static_cast<std::size_t>(t)].size());
    const int out_rank = (t <= top) ? rank_out[static_cast<std::size_t>(t)] : 0;
    const int in_rank = (t >= 1) ? rank_out[static_cast<std::size_t>(t) - 1] : 0;
    const int d = space - out_rank - in_rank;
    if (d > 0) out.dims[i] = d;
  }
  return out;
}

// Reisner: dim equals t and every link's reduced cohomology vanishes away
// from degree t - |F|.
inline bool is_cm_of_dim(const SimplicialComplex& delta, FieldSpec k, int t) {
  if (delta.is_void())
    throw InputError("Cohen-Macaulay test undefined for the void complex");
  if (delta.dim() != t) return false;
  for (FaceSet f : delta.all_faces()) {
    if (!reduced_cohomology(delta.link(f), k).concentrated_in(t - f.size()))
      return false;
  }
  return true;
}

// All witnesses (F, i) with apex <= F, i < d, and H~^{i-|F|-1}(link_F) != 0.
// Empty result means no witness to the failure condition.
inline std::vector<std::pair<FaceSet, int>> reisner_defect(
    const SimplicialComplex& delta, FieldSpec k, int d, FaceSet apex) {
  if (delta.is_void())
    throw InputError("reisner_defect undefined for the void complex");
  if (!delta.has_face(apex)) throw InputError("not a face");
  std::vector<std::pair<FaceSet, int>> out;
  for (FaceSet f : delta.all_faces()) {
    if (!apex.subset_of(f)) continue;
    const CohomologyVector coh = reduced_cohomology(delta.link(f), k);
    for (const auto& [j, dimval] : coh.dims) {
      const int i = j + f.size() + 1;
      if (i < d && dimval > 0) out.emplace_back(f, i);
    }
  }
  return out;
}

}  // namespace cmtop
