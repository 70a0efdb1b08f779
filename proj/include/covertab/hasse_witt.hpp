#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "covertab/datum.hpp"
#include "covertab/spectrum.hpp"

namespace covertab {

// Characteristic-p context: a prime p = 1 (mod N) with factorial tables of
// size p. Every binomial coefficient appearing in the Hasse-Witt entries has
// arguments below p, so table evaluation is exact.
struct PrimeContext {
  std::uint64_t p = 0;
  std::uint32_t modulus = 0;  // N
  std::uint64_t q = 0;        // (p-1)/N
  std::vector<std::uint64_t> fact, inv_fact;

  std::uint64_t binomial(std::uint64_t a, std::uint64_t b) const;  // requires a < p
  std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp) const;
  std::uint64_t inverse(std::uint64_t a) const;
};

// Validates p (prime, p = 1 mod N) and builds tables.
PrimeContext make_prime_context(std::uint32_t modulus, std::uint64_t p);

// Smallest prime p >= min with p = 1 (mod N).
PrimeContext choose_prime(std::uint32_t modulus, std::uint64_t min);

// Sparse monomial c * z_1^{e_1} ... z_s^{e_s} over F_p.
struct Monomial {
  std::vector<std::uint32_t> exp;
  std::uint64_t coef = 0;

  bool operator==(const Monomial& o) const { return exp == o.exp && coef == o.coef; }
};

using SparsePoly = std::vector<Monomial>;  // sorted lex-ascending on exp

std::uint64_t eval_poly(const SparsePoly& poly, const std::vector<std::uint64_t>& z,
                        std::uint64_t p);

// One Hasse-Witt block: the d_n x d_n matrix of Frobenius on the character
// eigenspace, with residue entries (numeric, at a chosen branch-point tuple)
// or sparse-polynomial entries in z_1..z_s (symbolic). Entry (i,j), 1-based,
// is homogeneous of degree (d_n-i+1)(p-1)+(i-j).
struct HWBlock {
  Tuple n;      // character representative
  Tuple alpha;  // associated tuple
  std::size_t size = 0;
  bool symbolic_mode = false;
  std::vector<std::uint64_t> numeric;   // row-major, size*size
  std::vector<SparsePoly> symbolic;     // row-major, size*size

  std::uint64_t at(std::size_t i, std::size_t j) const { return numeric[i * size + j]; }
  const SparsePoly& poly_at(std::size_t i, std::size_t j) const {
    return symbolic[i * size + j];
  }
};

constexpr std::uint64_t kDefaultTermLimit = 500'000;

// Block evaluated at s pairwise distinct points of F_p. Errors:
// CharacterMismatch (context modulus differs), RepeatedPoint.
HWBlock hw_block_numeric(const CoverDatum& d, const Tuple& n, const PrimeContext& ctx,
                         const std::vector<std::uint64_t>& z);

// Block with z_1..z_s left as indeterminates; evaluation matches the numeric
// block bit-exactly. Errors: TermLimitExceeded with the computed term bound.
HWBlock hw_block_symbolic(const CoverDatum& d, const Tuple& n, const PrimeContext& ctx,
                          std::uint64_t term_limit = kDefaultTermLimit);

// True iff every block over the characters with d_n >= 1 is invertible mod p,
// i.e. the fiber at z is an ordinary curve.
bool is_ordinary_at(const CoverDatum& d, const PrimeContext& ctx,
                    const std::vector<std::uint64_t>& z);

// Frobenius trace a_p of the genus-1 curve w^2 = prod (x - z_j) over F_p,
// counted by brute force (monic quartic model: two points at infinity).
// Independent of the Hasse-Witt path; used as the ordinarity oracle.
std::int64_t elliptic_trace_oracle(const PrimeContext& ctx,
                                   const std::array<std::uint64_t, 4>& z);

// Largest r with z_j^r dividing entry|_{z_i = 0}; nullopt when the
// restriction vanishes identically. Indices are 0-based.
std::optional<std::int64_t> divisibility_order(const SparsePoly& entry, std::size_t i,
                                               std::size_t j);

std::uint64_t det_mod_p(std::vector<std::uint64_t> mat, std::size_t n, const PrimeContext& ctx);

struct OrdinarityScan {
  std::uint64_t tested = 0;
  std::uint64_t ordinary = 0;
  bool exhaustive = false;
  std::optional<std::vector<std::uint64_t>> first_ordinary;
  std::uint64_t oracle_checked = 0;  // filled for the N=2, s=4 elliptic case
  std::uint64_t oracle_agreed = 0;
};

// Existence/density scan over tuples of s distinct points: exhaustive over
// all ordered tuples when p <= 11 and s <= 5, otherwise `samples` seeded
// draws. For N=2, s=4 every tuple is cross-checked against the elliptic
// trace oracle (ordinary iff a_p != 0 mod p).
OrdinarityScan scan_ordinarity(const CoverDatum& d, const PrimeContext& ctx,
                               std::uint64_t samples, std::uint64_t seed);

}  // namespace covertab
