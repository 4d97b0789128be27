// Independent brute-force computations used to validate the main path:
// Taylor-complex Tor/Ext strands and exhaustive dual-Cech enumeration.
// Intentionally naive (exponential in the generator count) and capped.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "cmtop/core.hpp"
#include "cmtop/linalg.hpp"
#include "cmtop/monomial_ideal.hpp"
#include "cmtop/simplicial.hpp"

namespace cmtop {

inline constexpr int kOracleGeneratorCap = 12;

namespace detail {

inline void require_oracle_scale(const MonomialIdeal& ideal) {
  if (ideal.generators().size() > kOracleGeneratorCap)
    throw ResourceError("oracle capped at " + std::to_string(kOracleGeneratorCap) +
                        " generators");
}

inline ExponentVector subset_lcm(const MonomialIdeal& ideal, std::uint32_t sigma) {
  ExponentVector m(static_cast<std::size_t>(ideal.var_count()), 0);
  for (std::uint32_t b = sigma; b != 0; b &= b - 1) {
    const auto& g = ideal.generators()[static_cast<std::size_t>(std::countr_zero(b))];
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::max(m[i], g[i]);
  }
  return m;
}

// Sign of generator g inside sigma: (-1)^(number of members below g).
inline int taylor_sign(std::uint32_t sigma, int g) {
  const int below = std::popcount(sigma & ((std::uint32_t{1} << g) - 1));
  return below % 2 == 0 ? 1 : -1;
}

inline std::map<int, int> strand_homology(
    const std::vector<std::vector<std::uint32_t>>& strand,
    const std::vector<Matrix>& maps_out, FieldSpec k) {
  // maps_out[i] : level i -> level i+1 (or i -> i-1; rank-nullity is
  // direction-agnostic)
  std::vector<int> ranks(maps_out.size(), 0);
  for (std::size_t i = 0; i < maps_out.size(); ++i)
    if (!maps_out[i].empty() && !maps_out[i][0].empty())
      ranks[i] = matrix_rank(maps_out[i], k);
  std::map<int, int> out;
  for (std::size_t i = 0; i < strand.size(); ++i) {
    const int space = static_cast<int>(strand[i].size());
    const int out_rank = i < maps_out.size() ? ranks[i] : 0;
    const int in_rank = i >= 1 ? ranks[i - 1] : 0;
    const int d = space - out_rank - in_rank;
    if (d > 0) out[static_cast<int>(i)] = d;
  }
  return out;
}

}  // namespace detail

// Degree-b strand of the Taylor resolution tensored with k: generator
// subsets sigma with lcm(sigma) = b sit in homological degree |sigma|, and
// the differential survives only between same-lcm pairs.
inline std::map<int, int> taylor_tor(const MonomialIdeal& ideal, FieldSpec k,
                                     const ExponentVector& b) {
  ideal.require_proper();
  detail::require_oracle_scale(ideal);
  if (!is_nonnegative(b)) throw InputError("taylor_tor needs b >= 0");
  const int m = static_cast<int>(ideal.generators().size());
  const std::uint32_t all = (m == 0) ? 0u : ((std::uint32_t{1} << m) - 1u);

  std::vector<std::vector<std::uint32_t>> strand(static_cast<std::size_t>(m) + 1);
  std::map<std::uint32_t, std::size_t> position;
  std::uint32_t sigma = 0;
  while (true) {
    if (detail::subset_lcm(ideal, sigma) == b) {
      auto& lvl = strand[static_cast<std::size_t>(std::popcount(sigma))];
      position[sigma] = lvl.size();
      lvl.push_back(sigma);
    }
    if (sigma == all) break;
    ++sigma;
  }

  // boundary: level i -> level i-1, stored as maps_down[i-1]
  std::vector<Matrix> maps_down(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    const auto& src = strand[static_cast<std::size_t>(i)];
    const auto& dst = strand[static_cast<std::size_t>(i) - 1];
    Matrix mat(dst.size(), std::vector<std::int64_t>(src.size(), 0));
    for (std::size_t c = 0; c < src.size(); ++c) {
      for (std::uint32_t bits = src[c]; bits != 0; bits &= bits - 1) {
        const int g = std::countr_zero(bits);
        const std::uint32_t tau = src[c] & ~(std::uint32_t{1} << g);
        auto it = position.find(tau);
        if (it == position.end() || std::popcount(tau) != i - 1) continue;
        if (!(detail::subset_lcm(ideal, tau) == b)) continue;
        mat[it->second][c] = detail::taylor_sign(src[c], g);
      }
    }
    maps_down[static_cast<std::size_t>(i) - 1] = std::move(mat);
  }

  // homology at level i uses boundaries in (from i+1) and out (to i-1)
  std::map<int, int> out;
  std::vector<int> ranks(maps_down.size(), 0);
  for (std::size_t i = 0; i < maps_down.size(); ++i)
    if (!maps_down[i].empty() && !maps_down[i][0].empty())
      ranks[i] = matrix_rank(maps_down[i], k);
  for (int i = 0; i <= m; ++i) {
    const int space = static_cast<int>(strand[static_cast<std::size_t>(i)].size());
    const int rank_out = i >= 1 ? ranks[static_cast<std::size_t>(i) - 1] : 0;
    const int rank_in = i < m ? ranks[static_cast<std::size_t>(i)] : 0;
    const int d = space - rank_out - rank_in;
    if (d > 0) out[i] = d;
  }
  return out;
}

// Degree-a strand of Hom(Taylor, S): one k in position |sigma| whenever
// a + lcm(sigma) >= 0, with transposed differentials; cohomology is
// Ext^i(S/I, S)_a.
inline std::map<int, int> taylor_ext(const MonomialIdeal& ideal, FieldSpec k,
                                     const ExponentVector& a) {
  ideal.require_proper();
  if (ideal.is_zero()) throw InputError("taylor_ext needs a nonzero ideal");
  detail::require_oracle_scale(ideal);
  const int m = static_cast<int>(ideal.generators().size());
  const std::uint32_t all = (std::uint32_t{1} << m) - 1u;

  auto present = [&](std::uint32_t sigma) {
    const ExponentVector l = detail::subset_lcm(ideal, sigma);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] + l[i] < 0) return false;
    return true;
  };

  std::vector<std::vector<std::uint32_t>> strand(static_cast<std::size_t>(m) + 1);
  std::map<std::uint32_t, std::size_t> position;
  std::uint32_t sigma = 0;
  while (true) {
    if (present(sigma)) {
      auto& lvl = strand[static_cast<std::size_t>(std::popcount(sigma))];
      position[sigma] = lvl.size();
      lvl.push_back(sigma);
    }
    if (sigma == all) break;
    ++sigma;
  }

  std::vector<Matrix> maps_up(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto& src = strand[static_cast<std::size_t>(i)];
    const auto& dst = strand[static_cast<std::size_t>(i) + 1];
    Matrix mat(dst.size(), std::vector<std::int64_t>(src.size(), 0));
    for (std::size_t c = 0; c < src.size(); ++c) {
      for (int g = 0; g < m; ++g) {
        if (src[c] & (std::uint32_t{1} << g)) continue;
        const std::uint32_t tau = src[c] | (std::uint32_t{1} << g);
        auto it = position.find(tau);
        if (it == position.end()) continue;
        mat[it->second][c] = detail::taylor_sign(tau, g);
      }
    }
    maps_up[static_cast<std::size_t>(i)] = std::move(mat);
  }
  return detail::strand_homology(strand, maps_up, k);
}

// Exhaustive Definition-level dual Cech complex: supports of (a+c)_- over
// all monomials x^c in I inside a provably sufficient box (every witness
// set is realized by c_i <= lcm_i + |a_i| + 1). Must equal dual_cech on
// every input; `margin` lets the test suite enlarge the scan.
inline SimplicialComplex dual_cech_brute(const MonomialIdeal& ideal,
                                         const ExponentVector& a,
                                         std::int64_t margin = 0) {
  const int n = ideal.var_count();
  if (static_cast<int>(a.size()) != n) throw InputError("degree length mismatch");
  const ExponentVector lcm = ideal.lcm_exponent();
  ExponentVector hi(static_cast<std::size_t>(n));
  std::uint64_t cells = 1;
  for (int i = 0; i < n; ++i) {
    hi[static_cast<std::size_t>(i)] = lcm[i] + (a[i] < 0 ? -a[i] : a[i]) + 1 + margin;
    cells *= static_cast<std::uint64_t>(hi[static_cast<std::size_t>(i)]) + 1;
    if (cells > (std::uint64_t{1} << 26))
      throw ResourceError("dual_cech_brute box too large");
  }
  std::vector<FaceSet> faces;
  ExponentVector c(static_cast<std::size_t>(n), 0);
  while (true) {
    if (ideal.contains(c)) {
      FaceSet f;
      for (int i = 0; i < n; ++i)
        if (a[i] + c[i] < 0) f = f.with(i);
      faces.push_back(f);
    }
    int i = n - 1;
    while (i >= 0 && c[i] == hi[static_cast<std::size_t>(i)]) c[i--] = 0;
    if (i < 0) break;
    ++c[i];
  }
  return SimplicialComplex::from_faces(FaceSet::full(n), faces);
}

}  // namespace cmtop
