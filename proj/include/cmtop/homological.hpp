// Graded local cohomology, Betti, and Ext tables assembled from the
// complex families; Cohen-Macaulayness by three independent routes with
// forced agreement; standard pairs, Stanley decompositions, degree,
// quasidegree arrangements and their projections.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cmtop/cohomology.hpp"
#include "cmtop/core.hpp"
#include "cmtop/families.hpp"
#include "cmtop/monomial_ideal.hpp"
#include "cmtop/parallel.hpp"

namespace cmtop {

enum class TableKind { local_cohomology, betti, ext };

struct GradedTable {
  TableKind kind = TableKind::local_cohomology;
  // degree -> (homological index -> positive dimension)
  std::map<ExponentVector, std::map<int, int>> entries;
  ExponentVector box_lo, box_hi;  // the scanned degree range

  int dim_at(const ExponentVector& a, int i) const {
    auto it = entries.find(a);
    if (it == entries.end()) return 0;
    auto jt = it->second.find(i);
    return jt == it->second.end() ? 0 : jt->second;
  }
  int max_index() const {
    int p = -1;
    for (const auto& [deg, dims] : entries)
      for (const auto& [i, d] : dims) p = std::max(p, i);
    return p;
  }
};

struct StandardPair {
  ExponentVector base;
  FaceSet dirs;

  friend bool operator==(const StandardPair& a, const StandardPair& b) {
    return a.base == b.base && a.dirs == b.dirs;
  }
  friend bool operator<(const StandardPair& a, const StandardPair& b) {
    return a.base != b.base ? a.base < b.base : a.dirs < b.dirs;
  }
};

// base + K^dirs; quasidegree bases keep their -1 representatives, and
// dirs-coordinates are zeroed only when deduplicating.
struct TranslatedSubspace {
  ExponentVector base;
  FaceSet dirs;

  friend bool operator==(const TranslatedSubspace& a, const TranslatedSubspace& b) {
    return a.base == b.base && a.dirs == b.dirs;
  }
  friend bool operator<(const TranslatedSubspace& a, const TranslatedSubspace& b) {
    return a.base != b.base ? a.base < b.base : a.dirs < b.dirs;
  }
};

struct CMWitness {
  std::string route;  // "local_cohomology" | "betti" | "exponent"
  ExponentVector degree;
  int index = 0;
};

struct CMVerdict {
  bool is_cm = false;
  int dimension = 0;
  int depth = 0;
  int projective_dimension = 0;
  std::vector<CMWitness> witnesses;
};

namespace detail {

// Degrees of the box [lo, hi], lexicographic. Guarded against blowup.
inline std::vector<ExponentVector> box_degrees(const ExponentVector& lo,
                                               const ExponentVector& hi) {
  std::uint64_t cells = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] < lo[i]) return {};
    cells *= static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
    if (cells > (std::uint64_t{1} << 24)) throw ResourceError("degree box too large");
  }
  std::vector<ExponentVector> out;
  out.reserve(cells);
  ExponentVector a(lo);
  while (true) {
    out.push_back(a);
    int i = static_cast<int>(a.size()) - 1;
    while (i >= 0 && a[i] == hi[i]) a[i] = lo[i], --i;
    if (i < 0) break;
    ++a[i];
  }
  return out;
}

template <typename PerDegree>
GradedTable build_table(TableKind kind, const ExponentVector& lo,
                        const ExponentVector& hi, unsigned threads,
                        PerDegree&& per_degree) {
  GradedTable table;
  table.kind = kind;
  table.box_lo = lo;
  table.box_hi = hi;
  const std::vector<ExponentVector> degrees = box_degrees(lo, hi);
  std::vector<std::map<int, int>> slots(degrees.size());
  parallel_for(degrees.size(), threads,
               [&](std::size_t i) { slots[i] = per_degree(degrees[i]); });
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (!slots[i].empty()) table.entries.emplace(degrees[i], std::move(slots[i]));
  return table;
}

}  // namespace detail

// H^i_m(S/I)_a = H~^{i-|supp(a_-)|-1}(cech_a) over the Takayama box
// prod {-1..(a_I)_i - 1}; degrees outside follow from the collapse rule
// (coordinates <= -1 are interchangeable) and vanish above the bound.
inline GradedTable local_cohomology_table(const MonomialIdeal& ideal, FieldSpec k,
                                          unsigned threads = 1) {
  ideal.require_proper();
  const int n = ideal.var_count();
  const ExponentVector lcm = ideal.lcm_exponent();
  ExponentVector lo(static_cast<std::size_t>(n), -1), hi(lcm);
  for (auto& h : hi) h -= 1;
  return detail::build_table(
      TableKind::local_cohomology, lo, hi, threads, [&](const ExponentVector& a) {
        const int shift = negative_support(a).size() + 1;
        const CohomologyVector coh = reduced_cohomology(cech(ideal, a), k);
        std::map<int, int> dims;
        for (const auto& [j, d] : coh.dims) {
          const int i = j + shift;
          if (i >= 0 && i <= n) dims[i] = d;
        }
        return dims;
      });
}

// Hochster's formula, read off the Hilbert series: x^a appears exactly in
// the F = supp(a) summand, contributing dim H~^{i-|F|-1}(link_F Delta).
inline int hochster_lc_dim(const SimplicialComplex& delta, int i,
                           const ExponentVector& a, FieldSpec k) {
  for (auto e : a)
    if (e > 0) throw InputError("hochster_lc_dim needs a <= 0");
  const FaceSet f = negative_support(a);
  if (!delta.has_face(f)) return 0;
  return reduced_cohomology(delta.link(f), k).dim(i - f.size() - 1);
}

// beta_{i,b} = dim H~^{|supp(b)|-i-1}(koszul_b) over 0 <= b <= a_I.
inline GradedTable betti_table(const MonomialIdeal& ideal, FieldSpec k,
                               unsigned threads = 1) {
  ideal.require_proper();
  const int n = ideal.var_count();
  const ExponentVector lo(static_cast<std::size_t>(n), 0);
  const ExponentVector hi = ideal.lcm_exponent();
  return detail::build_table(
      TableKind::betti, lo, hi, threads, [&](const ExponentVector& b) {
        const int shift = positive_support(b).size() - 1;
        const CohomologyVector coh = reduced_cohomology(koszul(ideal, b), k);
        std::map<int, int> dims;
        for (const auto& [j, d] : coh.dims) {
          const int i = shift - j;
          if (i >= 0 && i <= n) dims[i] = d;
        }
        return dims;
      });
}

// Ext^i(S/I,S)_a = H~^{i-2}(dual cech complex in degree a) over
// -a_I <= a <= 0. At a >= 0 the Alexander-duality index correspondence
// degenerates (the cech side is void on an empty ground set) and Ext
// vanishes outright for nonzero I, as local duality and the Taylor
// oracle force; the dual cech complex there is irrelevant, not void, so
// the raw formula would report a spurious Ext^1.
inline GradedTable ext_table(const MonomialIdeal& ideal, FieldSpec k,
                             unsigned threads = 1) {
  ideal.require_proper();
  if (ideal.is_zero()) throw InputError("ext_table needs a nonzero ideal");
  const int n = ideal.var_count();
  ExponentVector lo = ideal.lcm_exponent();
  for (auto& e : lo) e = -e;
  const ExponentVector hi(static_cast<std::size_t>(n), 0);
  return detail::build_table(
      TableKind::ext, lo, hi, threads, [&](const ExponentVector& a) {
        std::map<int, int> dims;
        if (is_nonnegative(a)) return dims;
        const CohomologyVector coh = reduced_cohomology(dual_cech(ideal, a), k);
        for (const auto& [j, d] : coh.dims) {
          const int i = j + 2;
          if (i >= 0 && i <= n) dims[i] = d;
        }
        return dims;
      });
}

// Projective dimension from the Betti table; depth via
// Auslander-Buchsbaum (depth + pd = n).
inline std::pair<int, int> depth_pd(const MonomialIdeal& ideal, FieldSpec k,
                                    unsigned threads = 1) {
  const GradedTable betti = betti_table(ideal, k, threads);
  const int pd = betti.max_index();
  const int n = ideal.var_count();
  return {n - pd, pd};
}

// Unique dominating cover of the standard monomials by translates
// base + N^dirs.
inline std::vector<StandardPair> standard_pairs(const MonomialIdeal& ideal) {
  ideal.require_proper();
  const int n = ideal.var_count();
  const ExponentVector lcm = ideal.lcm_exponent();
  std::vector<StandardPair> kept;
  for (FaceSet f : subsets_of(FaceSet::full(n))) {
    // bases range over prod_{i not in F} {0..(a_I)_i - 1}, zero on F
    std::vector<int> free_vars;
    bool empty_range = false;
    for (int i = 0; i < n; ++i) {
      if (f.contains(i)) continue;
      if (lcm[i] == 0) { empty_range = true; break; }
      free_vars.push_back(i);
    }
    if (empty_range) continue;
    ExponentVector base(static_cast<std::size_t>(n), 0);
    while (true) {
      ExponentVector probe(base);
      for (int i : f.elements()) probe[i] = lcm[i];
      if (!ideal.contains(probe)) kept.push_back({base, f});
      int j = static_cast<int>(free_vars.size()) - 1;
      while (j >= 0 && base[free_vars[j]] == lcm[free_vars[j]] - 1)
        base[free_vars[j--]] = 0;
      if (j < 0) break;
      ++base[free_vars[j]];
    }
  }
  // discard pairs dominated by another kept pair
  std::vector<StandardPair> maximal;
  for (const auto& p : kept) {
    bool dominated = false;
    for (const auto& q : kept) {
      if (p == q || !p.dirs.subset_of(q.dirs)) continue;
      bool agree = true;
      for (int i = 0; i < n && agree; ++i)
        if (!q.dirs.contains(i) && p.base[i] != q.base[i]) agree = false;
      if (agree) { dominated = true; break; }
    }
    if (!dominated) maximal.push_back(p);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

// Canonical cap decomposition: each standard b in the closed lcm box is a
// piece b + N^{F(b)} with F(b) = {i : b_i = (a_I)_i}; pieces keep their
// cap coordinates, are pairwise disjoint, and cover the standard monomials.
inline std::vector<StandardPair> stanley_decomposition(const MonomialIdeal& ideal) {
  ideal.require_proper();
  const int n = ideal.var_count();
  const ExponentVector lcm = ideal.lcm_exponent();
  std::vector<StandardPair> pieces;
  for (const ExponentVector& b : ideal.standard_monomials_in_box(lcm)) {
    FaceSet dirs;
    for (int i = 0; i < n; ++i)
      if (b[i] == lcm[i]) dirs = dirs.with(i);
    pieces.push_back({b, dirs});
  }
  std::sort(pieces.begin(), pieces.end());
  return pieces;
}

struct DegreeInfo {
  std::int64_t degree = 0;
  std::map<FaceSet, std::int64_t> multiplicities;  // top-dimensional dirs only
};

inline DegreeInfo degree_and_multiplicities(const MonomialIdeal& ideal) {
  const int d = ideal.krull_dimension();
  DegreeInfo info;
  for (const auto& p : standard_pairs(ideal)) {
    if (p.dirs.size() != d) continue;
    ++info.multiplicities[p.dirs];
    ++info.degree;
  }
  return info;
}

// Non-CM locus: for each i < dim, the closures of the nonvanishing local
// cohomology degrees. A box entry a spans a + C^{N(a)} with
// N(a) = {j : a_j = -1}; subspaces contained in others are pruned.
inline std::map<int, std::vector<TranslatedSubspace>> quasidegree_arrangement(
    const MonomialIdeal& ideal, FieldSpec k, unsigned threads = 1) {
  const int d = ideal.krull_dimension();
  const GradedTable lc = local_cohomology_table(ideal, k, threads);
  const int n = ideal.var_count();
  std::map<int, std::vector<TranslatedSubspace>> arrangement;
  for (int i = 0; i < d; ++i) {
    std::vector<TranslatedSubspace> spaces;
    for (const auto& [a, dims] : lc.entries) {
      if (dims.find(i) == dims.end()) continue;
      FaceSet dirs;
      for (int j = 0; j < n; ++j)
        if (a[j] == -1) dirs = dirs.with(j);
      spaces.push_back({a, dirs});
    }
    std::vector<TranslatedSubspace> pruned;
    for (const auto& s : spaces) {
      bool inside = false;
      for (const auto& t : spaces) {
        if (s == t || !s.dirs.subset_of(t.dirs)) continue;
        bool agree = true;
        for (int j = 0; j < n && agree; ++j)
          if (!t.dirs.contains(j) && s.base[j] != t.base[j]) agree = false;
        if (agree) { inside = true; break; }
      }
      if (!inside) pruned.push_back(s);
    }
    std::sort(pruned.begin(), pruned.end());
    pruned.erase(std::unique(pruned.begin(), pruned.end()), pruned.end());
    if (!pruned.empty()) arrangement.emplace(i, std::move(pruned));
  }
  return arrangement;
}

struct ProjectedSubspace {
  std::vector<std::int64_t> base;
  std::vector<std::vector<std::int64_t>> generators;  // columns of A, dirs order

  friend bool operator==(const ProjectedSubspace& a, const ProjectedSubspace& b) {
    return a.base == b.base && a.generators == b.generators;
  }
  friend bool operator<(const ProjectedSubspace& a, const ProjectedSubspace& b) {
    return a.base != b.base ? a.base < b.base : a.generators < b.generators;
  }
};

// Image of the arrangement under an integer matrix A (d x n):
// base -> A base, dirs -> the columns of A they index.
inline std::vector<ProjectedSubspace> project_quasidegrees(
    const std::vector<TranslatedSubspace>& arrangement,
    const std::vector<std::vector<std::int64_t>>& a_matrix) {
  const std::size_t d = a_matrix.size();
  if (d == 0) throw InputError("projection matrix must have at least one row");
  const std::size_t n = a_matrix[0].size();
  for (const auto& row : a_matrix)
    if (row.size() != n) throw InputError("ragged projection matrix");
  std::vector<ProjectedSubspace> out;
  for (const auto& s : arrangement) {
    if (s.base.size() != n) throw InputError("projection matrix shape mismatch");
    ProjectedSubspace p;
    p.base.assign(d, 0);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < n; ++c) p.base[r] += a_matrix[r][c] * s.base[c];
    for (int c : s.dirs.elements()) {
      std::vector<std::int64_t> col(d);
      for (std::size_t r = 0; r < d; ++r) col[r] = a_matrix[r][static_cast<std::size_t>(c)];
      p.generators.push_back(std::move(col));
    }
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

inline void append_route_witnesses(std::vector<CMWitness>& all,
                                   const std::string& route,
                                   const GradedTable& table, int limit_index) {
  for (const auto& [deg, dims] : table.entries)
    for (const auto& [i, dimval] : dims)
      if (i < limit_index) all.push_back({route, deg, i});
}

}  // namespace detail

// Three independent Cohen-Macaulay routes: local cohomology vanishing
// below the dimension, pd = n - d, and a Reisner scan of the exponent
// complexes over the lattice box (coordinates at the lcm cap stand for
// everything above, since membership saturates). Disagreement between
// routes is an internal error, never a silent answer.
inline CMVerdict is_cohen_macaulay(const MonomialIdeal& ideal, FieldSpec k,
                                   unsigned threads = 1) {
  const int n = ideal.var_count();
  const int d = ideal.krull_dimension();

  const GradedTable lc = local_cohomology_table(ideal, k, threads);
  std::vector<CMWitness> witnesses;
  detail::append_route_witnesses(witnesses, "local_cohomology", lc, d);
  const bool route_lc = witnesses.empty();

  const GradedTable betti = betti_table(ideal, k, threads);
  const int pd = betti.max_index();
  const bool route_pd = (pd == n - d);
  if (!route_pd)
    for (const auto& [deg, dims] : betti.entries)
      if (dims.count(pd)) witnesses.push_back({"betti", deg, pd});

  ExponentVector lo(static_cast<std::size_t>(n), -1);
  const ExponentVector hi = ideal.lcm_exponent();
  const std::vector<ExponentVector> degrees = detail::box_degrees(lo, hi);
  std::vector<std::vector<CMWitness>> slots(degrees.size());
  parallel_for(degrees.size(), threads, [&](std::size_t idx) {
    const ExponentVector& alpha = degrees[idx];
    const SimplicialComplex e = exponent_complex(ideal, alpha);
    if (e.is_void()) return;  // off the arrangement, witnesses nothing
    if (e.dim() != d - 1)
      slots[idx].push_back({"exponent", alpha, e.dim()});
    for (const auto& [f, i] : reisner_defect(e, k, d, negative_support(alpha)))
      slots[idx].push_back({"exponent", alpha, i});
  });
  bool route_exp = true;
  for (std::size_t idx = 0; idx < degrees.size(); ++idx) {
    if (!slots[idx].empty()) route_exp = false;
    for (auto& w : slots[idx]) witnesses.push_back(std::move(w));
  }

  if (route_lc != route_pd || route_lc != route_exp) {
    std::ostringstream msg;
    msg << "Cohen-Macaulay routes disagree: local_cohomology=" << route_lc
        << " betti(pd=" << pd << ", n-d=" << (n - d) << ")=" << route_pd
        << " exponent=" << route_exp << "; witnesses:";
    for (const auto& w : witnesses)
      msg << " [" << w.route << " " << format_degree(w.degree) << " i=" << w.index << "]";
    throw InternalError(msg.str());
  }

  CMVerdict verdict;
  verdict.is_cm = route_lc;
  verdict.dimension = d;
  verdict.depth = n - pd;
  verdict.projective_dimension = pd;
  std::set<std::tuple<std::string, ExponentVector, int>> seen;
  for (auto& w : witnesses)
    if (seen.emplace(w.route, w.degree, w.index).second)
      verdict.witnesses.push_back(std::move(w));
  if (verdict.depth + verdict.projective_dimension != n)
    throw InternalError("Auslander-Buchsbaum bookkeeping violated");
  if (verdict.is_cm != (verdict.depth == verdict.dimension))
    throw InternalError("depth/dimension verdict mismatch");
  return verdict;
}

struct SocleCheckRow {
  ExponentVector degree;   // b with beta_{p,b} != 0
  int tor_dim = 0;         // dim H~^{|F|-p-1}(koszul_b) = beta_{p,b}
  int lc_dim = 0;          // dim H~^{|F|-p-1}(cech_{b-1}) = dim H^{n-p}_m at b-1
  bool equal = false;
  bool same_complex = false;  // face-set equality, reported as data only
};

// At the top of the resolution the socle of local cohomology matches the
// Betti numbers: both complexes have the same cohomology in the window.
inline std::vector<SocleCheckRow> top_betti_socle_check(const MonomialIdeal& ideal,
                                                        FieldSpec k,
                                                        unsigned threads = 1) {
  const GradedTable betti = betti_table(ideal, k, threads);
  const int p = betti.max_index();
  std::vector<SocleCheckRow> rows;
  for (const auto& [b, dims] : betti.entries) {
    auto it = dims.find(p);
    if (it == dims.end()) continue;
    const int j = positive_support(b).size() - p - 1;
    ExponentVector a(b);
    for (auto& e : a) e -= 1;
    const SimplicialComplex kb = koszul(ideal, b);
    const SimplicialComplex ca = cech(ideal, a);
    SocleCheckRow row;
    row.degree = b;
    row.tor_dim = reduced_cohomology(kb, k).dim(j);
    row.lc_dim = reduced_cohomology(ca, k).dim(j);
    row.equal = (row.tor_dim == row.lc_dim) && (row.tor_dim == it->second);
    row.same_complex = (kb == ca);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cmtop
