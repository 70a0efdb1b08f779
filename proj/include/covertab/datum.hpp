#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covertab/residue.hpp"

namespace covertab {

// Defining datum of a family of abelian covers of the line: an m x s matrix
// over Z/N whose column span is the deck group. Rows sum to zero mod N (no
// branching over infinity) and no column vanishes (each z_j really is a
// branch point). Instances are immutable once built by validate_datum.
struct CoverDatum {
  std::uint32_t modulus = 0;  // N
  std::vector<Tuple> rows;    // m rows of length s, entries in [0,N)
  std::uint64_t order = 0;    // |column span| = |row span| = covering degree
  bool rows_independent = false;  // order == N^m
  bool reducible_modulus = false;  // gcd(N, all entries) > 1

  std::size_t m() const { return rows.size(); }
  std::size_t s() const { return rows.empty() ? 0 : rows[0].size(); }

  bool operator==(const CoverDatum& o) const {
    return modulus == o.modulus && rows == o.rows;
  }
};

// Column span of the datum matrix as an abstract abelian group.
struct AbelianGroupStructure {
  std::vector<std::uint64_t> invariant_factors;  // each > 1, each divides the next
  std::uint64_t order = 1;

  bool operator==(const AbelianGroupStructure& o) const {
    return invariant_factors == o.invariant_factors && order == o.order;
  }
};

// Validates and normalizes raw input. Entries are reduced into [0,N).
// Errors: BadShape (ragged rows, s < 3, m < 1, N < 2 or out-of-range sizes),
// ZeroColumn(j), RowSumNonzero(i) with 1-based indices in the message.
CoverDatum validate_datum(std::uint32_t modulus,
                          const std::vector<std::vector<std::int64_t>>& raw_rows);

// Genus of the covering curve, computed exactly from the ramification data.
std::int64_t genus(const CoverDatum& d);

AbelianGroupStructure group_structure(const CoverDatum& d);

// (N/f, A/f) for f = gcd(N, all entries), when f > 1.
std::optional<CoverDatum> reduced_form(const CoverDatum& d);

// Applies reduced_form until the datum is primitive.
CoverDatum fully_reduced(const CoverDatum& d);

// Compact text form "N:row1/row2/...": rows are digit strings when N <= 10
// and comma-separated integers otherwise, e.g. "3:21210/00111", "12:4,6,7,7".
std::string to_compact(const CoverDatum& d);
CoverDatum parse_compact(const std::string& text);

std::string group_to_string(const AbelianGroupStructure& g);  // e.g. "Z/2 x Z/4"

}  // namespace covertab
