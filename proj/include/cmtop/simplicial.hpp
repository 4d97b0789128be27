// Simplicial complexes on subsets of {1..n}: facet-based representation,
// links, stars, restriction, and Alexander duals.
//
// The VOID complex (no faces at all) and the IRRELEVANT complex (single
// face {}) are distinct values; dim(VOID) is a dedicated sentinel, never -1.
#pragma once

#include <algorithm>
#include <limits>
#include <set>
#include <vector>

#include "cmtop/core.hpp"

namespace cmtop {

class SimplicialComplex {
 public:
  static constexpr int kVoidDim = std::numeric_limits<int>::min();

  static SimplicialComplex void_complex(FaceSet ground) {
    SimplicialComplex c;
    c.ground_ = ground;
    c.void_ = true;
    return c;
  }

  static SimplicialComplex irrelevant(FaceSet ground) {
    SimplicialComplex c;
    c.ground_ = ground;
    c.facets_ = {FaceSet()};
    return c;
  }

  static SimplicialComplex full_simplex(FaceSet ground) {
    SimplicialComplex c;
    c.ground_ = ground;
    c.facets_ = {ground};
    return c;
  }

  // Complex generated by the given faces (maximal ones become facets).
  // An empty list generates the void complex.
  static SimplicialComplex from_faces(FaceSet ground,
                                      const std::vector<FaceSet>& faces) {
    for (FaceSet f : faces)
      if (!f.subset_of(ground)) throw InputError("face outside ground set");
    std::vector<FaceSet> maximal;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      bool covered = false;
      for (std::size_t j = 0; j < faces.size() && !covered; ++j)
        if (j != i && faces[i].subset_of(faces[j]) && !(faces[i] == faces[j] && j > i))
          covered = true;
      if (!covered) maximal.push_back(faces[i]);
    }
    std::sort(maximal.begin(), maximal.end());
    maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
    SimplicialComplex c;
    c.ground_ = ground;
    if (maximal.empty())
      c.void_ = true;
    else
      c.facets_ = std::move(maximal);
    return c;
  }

  FaceSet ground() const { return ground_; }
  const std::vector<FaceSet>& facets() const { return facets_; }
  bool is_void() const { return void_; }
  bool is_irrelevant() const {
    return !void_ && facets_.size() == 1 && facets_[0].empty();
  }

  int dim() const {
    if (void_) return kVoidDim;
    int d = -1;
    for (FaceSet f : facets_) d = std::max(d, f.size() - 1);
    return d;
  }

  bool has_face(FaceSet f) const {
    if (void_) return false;
    for (FaceSet h : facets_)
      if (f.subset_of(h)) return true;
    return false;
  }

  // Faces with exactly k vertices, ascending by bitmask.
  std::vector<FaceSet> faces_of_size(int k) const {
    if (void_ || k < 0) return {};
    if (k == 0) return {FaceSet()};
    std::set<FaceSet> seen;
    for (FaceSet facet : facets_) {
      if (facet.size() < k) continue;
      const std::vector<int> verts = facet.elements();
      // enumerate k-combinations of the facet's vertices
      std::vector<int> idx(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) idx[i] = i;
      while (true) {
        FaceSet f;
        for (int i : idx) f = f.with(verts[static_cast<std::size_t>(i)]);
        seen.insert(f);
        int i = k - 1;
        while (i >= 0 && idx[i] == static_cast<int>(verts.size()) - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    return {seen.begin(), seen.end()};
  }

  std::vector<FaceSet> all_faces() const {
    std::vector<FaceSet> out;
    for (int k = 0; k <= dim() + 1; ++k) {
      auto level = faces_of_size(k);
      out.insert(out.end(), level.begin(), level.end());
    }
    return out;
  }

  std::int64_t face_count() const {
    std::int64_t total = 0;
    for (int k = 0; k <= dim() + 1; ++k)
      total += static_cast<std::int64_t>(faces_of_size(k).size());
    return total;
  }

  // Reduced Euler characteristic: sum over faces (including {}) of
  // (-1)^dim. Zero for the void complex.
  std::int64_t reduced_euler_characteristic() const {
    std::int64_t chi = 0;
    for (int k = 0; k <= dim() + 1; ++k) {
      const std::int64_t cnt = static_cast<std::int64_t>(faces_of_size(k).size());
      chi += (k % 2 == 0) ? -cnt : cnt;  // faces of size k have dim k-1
    }
    return chi;
  }

  // link_F = {G : G u F a face, G n F empty} on ground \ F.
  SimplicialComplex link(FaceSet f) const {
    if (!has_face(f)) throw InputError("not a face");
    SimplicialComplex c;
    c.ground_ = ground_.minus(f);
    for (FaceSet h : facets_)
      if (f.subset_of(h)) c.facets_.push_back(h.minus(f));
    std::sort(c.facets_.begin(), c.facets_.end());
    return c;
  }

  // star_F = {G a face : F u G a face}; void when F is not a face.
  SimplicialComplex star(FaceSet f) const {
    std::vector<FaceSet> kept;
    for (FaceSet h : facets_)
      if (f.subset_of(h)) kept.push_back(h);
    if (kept.empty()) return void_complex(ground_);
    SimplicialComplex c;
    c.ground_ = ground_;
    c.facets_ = std::move(kept);
    std::sort(c.facets_.begin(), c.facets_.end());
    return c;
  }

  // Faces contained in sub, on ground set sub.
  SimplicialComplex restrict_to(FaceSet sub) const {
    if (!sub.subset_of(ground_)) throw InputError("restriction outside ground set");
    if (void_) return void_complex(sub);
    std::vector<FaceSet> gen;
    gen.reserve(facets_.size());
    for (FaceSet h : facets_) gen.push_back(h.intersect(sub));
    return from_faces(sub, gen);
  }

  // F a face of the dual iff (ground \ F) is not a face here; involutive.
  SimplicialComplex alexander_dual() const {
    if (ground_.size() > 24) throw ResourceError("alexander_dual: ground set too large");
    std::vector<FaceSet> faces;
    for (FaceSet f : subsets_of(ground_))
      if (!has_face(ground_.minus(f))) faces.push_back(f);
    return from_faces(ground_, faces);
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.void_ == b.void_ && a.ground_ == b.ground_ && a.facets_ == b.facets_;
  }

 private:
  FaceSet ground_;
  std::vector<FaceSet> facets_;  // antichain, ascending by bitmask
  bool void_ = false;
};

}  // namespace cmtop
