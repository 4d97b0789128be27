// Monomial ideals by their minimal generating exponents, with membership,
// localization, dimension, and standard-monomial enumeration.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cmtop/core.hpp"

namespace cmtop {

class MonomialIdeal {
 public:
  // Canonicalizes raw generators to the inclusion-minimal antichain under
  // componentwise <=. Duplicates collapse; the empty list is the zero ideal.
  static MonomialIdeal minimalize(std::vector<ExponentVector> raw, int n) {
    if (n < 0 || n > kMaxVariables)
      throw InputError("variable count out of range [0, " +
                       std::to_string(kMaxVariables) + "]");
    for (const auto& g : raw) {
      if (static_cast<int>(g.size()) != n)
        throw InputError("generator length does not match variable count");
      for (auto e : g) {
        if (e < 0) throw InputError("negative exponent in generator");
        if (e > kMaxExponent) throw InputError("exponent exceeds 2^20 cap");
      }
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<ExponentVector> minimal;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < raw.size() && !redundant; ++j)
        if (j != i && divides(raw[j], raw[i])) redundant = true;
      if (!redundant) minimal.push_back(raw[i]);
    }
    MonomialIdeal ideal;
    ideal.n_ = n;
    ideal.gens_ = std::move(minimal);
    return ideal;
  }

  int var_count() const { return n_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  // The unit ideal is generated by 1, i.e. by the zero exponent vector.
  bool is_unit() const {
    return gens_.size() == 1 && positive_support(gens_[0]).empty();
  }
  bool is_proper() const { return !is_unit(); }

  bool is_squarefree() const {
    for (const auto& g : gens_)
      for (auto e : g)
        if (e > 1) return false;
    return true;
  }

  // x^b in I, i.e. some minimal generator divides x^b.
  bool contains(const ExponentVector& b) const {
    require_degree(b);
    if (!is_nonnegative(b)) throw InputError("membership test needs b >= 0");
    for (const auto& g : gens_)
      if (divides(g, b)) return true;
    return false;
  }

  // Componentwise max of the generators; zero vector for the zero ideal.
  ExponentVector lcm_exponent() const {
    ExponentVector m(static_cast<std::size_t>(n_), 0);
    for (const auto& g : gens_)
      for (int i = 0; i < n_; ++i) m[i] = std::max(m[i], g[i]);
    return m;
  }

  // dim S/I = max |F| such that no generator has support inside F.
  int krull_dimension() const {
    if (is_unit()) throw InputError("dimension of zero ring undefined");
    if (n_ > 24) throw ResourceError("krull_dimension: too many variables");
    std::vector<FaceSet> supports;
    supports.reserve(gens_.size());
    for (const auto& g : gens_) supports.push_back(positive_support(g));
    int best = 0;
    for (FaceSet f : subsets_of(FaceSet::full(n_))) {
      bool admissible = true;
      for (FaceSet s : supports)
        if (s.subset_of(f)) { admissible = false; break; }
      if (admissible) best = std::max(best, f.size());
    }
    return best;
  }

  // (S_F / I S_F)_a = k. Membership stabilizes once an exponent reaches the
  // lcm bound, so one saturated test covers the whole ray a + N*F.
  bool localization_is_field_at(const ExponentVector& a, FaceSet f) const {
    require_degree(a);
    if (!negative_support(a).subset_of(f)) return false;
    const ExponentVector lcm = lcm_exponent();
    ExponentVector b(a);
    for (int i : f.elements()) b[i] = std::max(b[i], lcm[i]);
    return !contains(b);
  }

  // All standard exponents b with 0 <= b <= box_bound.
  std::vector<ExponentVector> standard_monomials_in_box(
      const ExponentVector& box_bound) const {
    require_degree(box_bound);
    if (!is_nonnegative(box_bound)) throw InputError("box bound must be >= 0");
    std::vector<ExponentVector> out;
    ExponentVector b(static_cast<std::size_t>(n_), 0);
    std::uint64_t cells = 1;
    for (auto e : box_bound) {
      cells *= static_cast<std::uint64_t>(e) + 1;
      if (cells > (std::uint64_t{1} << 26))
        throw ResourceError("standard monomial box too large");
    }
    while (true) {
      if (!contains(b)) out.push_back(b);
      int i = n_ - 1;
      while (i >= 0 && b[i] == box_bound[i]) b[i--] = 0;
      if (i < 0) break;
      ++b[i];
    }
    return out;
  }

  void require_proper() const {
    if (is_unit()) throw InputError("unit ideal: the quotient ring is zero");
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }

 private:
  void require_degree(const ExponentVector& v) const {
    if (static_cast<int>(v.size()) != n_)
      throw InputError("degree length does not match variable count");
  }

  int n_ = 0;
  std::vector<ExponentVector> gens_;
};

}  // namespace cmtop
