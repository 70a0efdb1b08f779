#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace covertab {

using Residue = std::uint32_t;
using Tuple = std::vector<Residue>;  // tuple over Z/N, entries in [0,N)

// All residue conventions route through here: representatives live in [0,N)
// and [-a]_N means the representative of -a. Sign slips in these conversions
// are the classic failure mode of eigenspace-dimension code, so nothing else
// in the codebase reduces mod N by hand.

inline Residue reduce_mod(std::int64_t v, std::uint32_t n) {
  std::int64_t r = v % static_cast<std::int64_t>(n);
  if (r < 0) r += static_cast<std::int64_t>(n);
  return static_cast<Residue>(r);
}

inline Residue add_mod(Residue a, Residue b, std::uint32_t n) {
  Residue s = a + b;
  return s >= n ? s - n : s;
}

// [-a]_N
inline Residue neg_mod(Residue a, std::uint32_t n) { return a == 0 ? 0 : n - a; }

inline Residue mul_mod(std::uint64_t a, std::uint64_t b, std::uint32_t n) {
  return static_cast<Residue>((a * b) % n);
}

inline Tuple add_tuple(const Tuple& a, const Tuple& b, std::uint32_t n) {
  Tuple out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = add_mod(a[i], b[i], n);
  return out;
}

inline Tuple neg_tuple(const Tuple& a, std::uint32_t n) {
  Tuple out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = neg_mod(a[i], n);
  return out;
}

inline Tuple scale_tuple(const Tuple& a, std::uint64_t k, std::uint32_t n) {
  Tuple out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul_mod(a[i], k, n);
  return out;
}

inline bool is_zero_tuple(const Tuple& a) {
  for (Residue v : a)
    if (v != 0) return false;
  return true;
}

// true iff 2a = 0 and a != 0
inline bool has_order_two(const Tuple& a, std::uint32_t n) {
  bool nonzero = false;
  for (Residue v : a) {
    if (v != 0) nonzero = true;
    if (add_mod(v, v, n) != 0) return false;
  }
  return nonzero;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// gcd(n, entries of a); equals n when a = 0
inline std::uint64_t gcd_with_modulus(const Tuple& a, std::uint32_t n) {
  std::uint64_t g = n;
  for (Residue v : a) g = std::gcd(g, static_cast<std::uint64_t>(v));
  return g;
}

}  // namespace covertab
