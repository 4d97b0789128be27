// Distraction and polarization of monomial ideals. Distractions are exact
// integer polynomials (falling factorials expanded over cpp_int); the
// factored display form is kept alongside for human-readable output.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cmtop/core.hpp"
#include "cmtop/monomial_ideal.hpp"

namespace cmtop {

using BigInt = boost::multiprecision::cpp_int;

struct IntegerPolynomial {
  int n = 0;
  std::map<ExponentVector, BigInt> terms;  // lexicographic term order, no zeros

  void add_term(const ExponentVector& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  BigInt evaluate(const ExponentVector& p) const {
    BigInt total = 0;
    for (const auto& [e, c] : terms) {
      BigInt v = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (std::int64_t t = 0; t < e[i]; ++t) v *= p[i];
      total += v;
    }
    return total;
  }

  friend bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    return a.n == b.n && a.terms == b.terms;
  }
};

// Expansion of prod_i x_i (x_i - 1) ... (x_i - a_i + 1); exponent 0 on a
// variable contributes the constant factor 1.
inline IntegerPolynomial distraction_monomial(const ExponentVector& a) {
  if (!is_nonnegative(a)) throw InputError("distraction needs a >= 0");
  const int n = static_cast<int>(a.size());
  IntegerPolynomial poly;
  poly.n = n;
  poly.terms.emplace(ExponentVector(static_cast<std::size_t>(n), 0), BigInt(1));
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    // falling factorial coefficients: f(x) = x, then f *= (x - t)
    std::vector<BigInt> coeff{0, 1};
    for (std::int64_t t = 1; t < a[i]; ++t) {
      std::vector<BigInt> next(coeff.size() + 1, BigInt(0));
      for (std::size_t j = 0; j < coeff.size(); ++j) {
        next[j + 1] += coeff[j];
        next[j] -= t * coeff[j];
      }
      coeff = std::move(next);
    }
    IntegerPolynomial expanded;
    expanded.n = n;
    for (const auto& [e, c] : poly.terms) {
      for (std::size_t j = 0; j < coeff.size(); ++j) {
        if (coeff[j] == 0) continue;
        ExponentVector e2(e);
        e2[i] += static_cast<std::int64_t>(j);
        expanded.add_term(e2, c * coeff[j]);
      }
    }
    poly = std::move(expanded);
  }
  return poly;
}

// Display form "x(x-1)(x-2)yz(z-1)"; groups joined by `separator`.
inline std::string distraction_factored_string(const ExponentVector& a,
                                               const std::vector<std::string>& names,
                                               const std::string& separator = "") {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!first) out += separator;
    first = false;
    out += names[i];
    for (std::int64_t t = 1; t < a[i]; ++t)
      out += "(" + names[i] + "-" + std::to_string(t) + ")";
  }
  return first ? "1" : out;
}

// One polynomial per minimal generator, in generator order.
inline std::vector<IntegerPolynomial> distraction_ideal(const MonomialIdeal& ideal) {
  std::vector<IntegerPolynomial> out;
  out.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) out.push_back(distraction_monomial(g));
  return out;
}

// p lies on the distracting arrangement V_I iff every generator's
// distraction vanishes there. The distraction of x^g is a product of
// falling-factorial factors (p_i - t), t < g_i, so it vanishes exactly
// when some coordinate satisfies 0 <= p_i < g_i; the expanded polynomial
// evaluates to the same integer (asserted in the test suite).
inline bool distraction_vanishes_at(const MonomialIdeal& ideal,
                                    const ExponentVector& p) {
  if (static_cast<int>(p.size()) != ideal.var_count())
    throw InputError("point length mismatch");
  for (const auto& g : ideal.generators()) {
    bool zero_factor = false;
    for (std::size_t i = 0; i < p.size() && !zero_factor; ++i)
      if (p[i] >= 0 && p[i] < g[i]) zero_factor = true;
    if (!zero_factor) return false;
  }
  return true;
}

struct PolarizedIdeal {
  MonomialIdeal ideal;  // squarefree, in sum(a_I) variables
  // flat variable index -> (original variable, copy); blocks ordered by
  // original variable, copies by j
  std::vector<std::pair<int, int>> var_map;
};

// x_i^{a_i} becomes x_{i,0} ... x_{i,a_i-1}; the polarized generators are
// squarefree and again minimal.
inline PolarizedIdeal polarize(const MonomialIdeal& ideal) {
  ideal.require_proper();
  const int n = ideal.var_count();
  const ExponentVector lcm = ideal.lcm_exponent();
  std::vector<std::size_t> offset(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i)
    offset[static_cast<std::size_t>(i) + 1] =
        offset[static_cast<std::size_t>(i)] + static_cast<std::size_t>(lcm[i]);
  const std::size_t total = offset[static_cast<std::size_t>(n)];
  if (total > static_cast<std::size_t>(kMaxVariables))
    throw ResourceError("polarization needs more than " +
                        std::to_string(kMaxVariables) + " variables");

  PolarizedIdeal out;
  for (int i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < lcm[i]; ++j)
      out.var_map.emplace_back(i, static_cast<int>(j));

  std::vector<ExponentVector> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) {
    ExponentVector e(total, 0);
    for (int i = 0; i < n; ++i)
      for (std::int64_t j = 0; j < g[i]; ++j)
        e[offset[static_cast<std::size_t>(i)] + static_cast<std::size_t>(j)] = 1;
    gens.push_back(std::move(e));
  }
  out.ideal = MonomialIdeal::minimalize(std::move(gens), static_cast<int>(total));
  return out;
}

}  // namespace cmtop
