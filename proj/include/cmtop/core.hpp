// Shared value types: exponent vectors, index sets, coefficient fields,
// rationals, and the error hierarchy used across the library.
#pragma once

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmtop {

// Exit-code-bearing error categories (CLI maps these to 1/2/3).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when two routes that must agree do not; never caught internally.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ExponentVector = std::vector<std::int64_t>;

// Exponents beyond this are rejected on input; keeps lcm-bound arithmetic
// far away from int64 overflow.
inline constexpr std::int64_t kMaxExponent = std::int64_t{1} << 20;
inline constexpr int kMaxVariables = 30;

// Subset of {0,...,n-1} stored as a bitmask. Vertices are 0-based inside the
// library; JSON/text I/O renders them 1-based as x1..xn.
class FaceSet {
 public:
  constexpr FaceSet() = default;
  constexpr explicit FaceSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr FaceSet full(int n) {
    return FaceSet(n == 0 ? 0u : (std::uint32_t{1} << n) - 1u);
  }
  static constexpr FaceSet single(int v) { return FaceSet(std::uint32_t{1} << v); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  constexpr FaceSet with(int v) const { return FaceSet(bits_ | (std::uint32_t{1} << v)); }
  constexpr FaceSet without(int v) const { return FaceSet(bits_ & ~(std::uint32_t{1} << v)); }
  constexpr FaceSet unite(FaceSet o) const { return FaceSet(bits_ | o.bits_); }
  constexpr FaceSet intersect(FaceSet o) const { return FaceSet(bits_ & o.bits_); }
  constexpr FaceSet minus(FaceSet o) const { return FaceSet(bits_ & ~o.bits_); }
  constexpr bool subset_of(FaceSet o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr bool operator==(FaceSet a, FaceSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator<(FaceSet a, FaceSet b) { return a.bits_ < b.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

// All subsets of mask, ascending by bitmask value.
inline std::vector<FaceSet> subsets_of(FaceSet mask) {
  std::vector<FaceSet> out;
  out.reserve(std::size_t{1} << mask.size());
  std::uint32_t m = mask.bits();
  std::uint32_t s = 0;
  while (true) {
    out.push_back(FaceSet(s));
    if (s == m) break;
    s = (s - m) & m;  // next submask in ascending order
  }
  return out;
}

inline FaceSet positive_support(const ExponentVector& v) {
  FaceSet f;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] > 0) f = f.with(static_cast<int>(i));
  return f;
}

inline FaceSet negative_support(const ExponentVector& v) {
  FaceSet f;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] < 0) f = f.with(static_cast<int>(i));
  return f;
}

inline bool is_nonnegative(const ExponentVector& v) {
  for (auto e : v)
    if (e < 0) return false;
  return true;
}

// Componentwise a <= b, i.e. x^a divides x^b.
inline bool divides(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline std::string format_degree(const ExponentVector& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

inline bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

// Coefficient field, determined by its characteristic alone.
struct FieldSpec {
  std::uint64_t characteristic = 0;

  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec prime(std::uint64_t p) {
    if (!is_prime_u64(p) || p >= (std::uint64_t{1} << 31))
      throw InputError("field characteristic must be 0 or a prime < 2^31");
    return FieldSpec{p};
  }
  static FieldSpec of(std::uint64_t c) { return c == 0 ? rationals() : prime(c); }
};

// Exact rational scalar for degree points; only needs construction,
// reduction, and the "nonnegative integer" test.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw InputError("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  bool is_integer() const { return den == 1; }
  bool is_nonnegative_integer() const { return den == 1 && num >= 0; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
};

using DegreePoint = std::vector<Rational>;

}  // namespace cmtop
