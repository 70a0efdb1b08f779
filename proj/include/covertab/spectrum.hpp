#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "covertab/datum.hpp"
#include "covertab/span.hpp"

namespace covertab {

// A character of the deck group, identified with a group element n; alpha is
// the associated tuple n.A recording the local eigenvalue exponents.
struct Character {
  Tuple n;
  Tuple alpha;

  bool operator==(const Character& o) const { return n == o.n && alpha == o.alpha; }
};

// Dimension data of one character eigenspace: d = dim of the (1,0)-part,
// d_dual the same for the inverse character.
struct EigenspaceRecord {
  Character chi;
  std::int64_t d = 0;
  std::int64_t d_dual = 0;
  bool order2 = false;      // 2n = 0 and n != 0
  std::int64_t nonzero_count = 0;  // #{j : alpha_j != 0}

  bool operator==(const EigenspaceRecord& o) const {
    return chi == o.chi && d == o.d && d_dual == o.d_dual && order2 == o.order2 &&
           nonzero_count == o.nonzero_count;
  }
};

// One record per distinct nonzero alpha-tuple of the row span, sorted by
// alpha (the canonical character order). Sum of d over records = genus.
struct SpectrumTable {
  std::uint32_t modulus = 0;
  std::size_t branch_points = 0;
  std::vector<EigenspaceRecord> records;
  std::int64_t genus = 0;

  bool operator==(const SpectrumTable& o) const {
    return modulus == o.modulus && branch_points == o.branch_points &&
           records == o.records && genus == o.genus;
  }
};

// n.A with entries in [0,N); n must have m entries in [0,N).
Tuple alpha_tuple(const CoverDatum& d, const Tuple& n);

// d_n = -1 + sum_j <-alpha_j/N> for n.A != 0; 0 for the trivial character.
std::int64_t eigenspace_dim(const CoverDatum& d, const Tuple& n);

// d for a bare alpha-tuple (already known to lie in the row span).
std::int64_t eigenspace_dim_of_alpha(const Tuple& alpha, std::uint32_t modulus);

SpectrumTable spectrum_table(const CoverDatum& d);

// dim S(G): products d_n d_{-n} over unordered pairs {n,-n} with 2n != 0,
// plus d_n(d_n+1)/2 over order-2 characters.
std::int64_t dim_special_group(const SpectrumTable& t);
std::int64_t dim_special_group(const CoverDatum& d);

// First record (canonical order) with {d, d_dual} != {0, s-2} and
// d + d_dual >= s-2, if any.
std::optional<EigenspaceRecord> condition_star(const SpectrumTable& t);
std::optional<EigenspaceRecord> condition_star(const CoverDatum& d);

// The cyclic family attached to a character whose alpha-tuple has no zero
// entry: (N/f, alpha/f) with f = gcd(N, alpha_1, ..., alpha_s). Absent when
// some alpha_j = 0.
std::optional<CoverDatum> cyclic_datum_of_character(const CoverDatum& d, const Tuple& n);
std::optional<CoverDatum> cyclic_datum_of_alpha(const Tuple& alpha, std::uint32_t modulus);

}  // namespace covertab
