#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covertab/datum.hpp"
#include "covertab/residue.hpp"

namespace covertab {

// One element of the row span together with a character representative n
// with n.A = alpha. Representatives are the smallest such n in lex order of
// discovery, deterministic per datum.
struct SpanElement {
  Tuple alpha;  // s-tuple in the row span
  Tuple rep_n;  // m-tuple with rep_n . A = alpha
};

// The full row span {n.A : n in (Z/N)^m}, sorted by alpha (lex ascending).
// Its size equals the covering degree.
struct SpanTable {
  std::uint32_t modulus = 0;
  std::vector<SpanElement> elements;

  std::size_t size() const { return elements.size(); }
  // index of alpha, or npos if absent
  std::size_t find(const Tuple& alpha) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

SpanTable row_span_table(const CoverDatum& d);

// The set {n.A} as sorted alpha-tuples.
std::vector<Tuple> row_span(const CoverDatum& d);

struct KeyOptions {
  bool column_permutation = true;  // quotient by relabeling of branch points
  bool reduce_modulus = true;      // identify (N, A) with (N/f, A/f)
};

// Isomorphism-class identifier: equal keys iff the row spans coincide as
// sets after the optimal column permutation (and modulus reduction), per the
// options baked into the key.
struct CanonicalKey {
  std::string bytes;

  bool operator==(const CanonicalKey& o) const { return bytes == o.bytes; }
  bool operator!=(const CanonicalKey& o) const { return bytes != o.bytes; }
  bool operator<(const CanonicalKey& o) const { return bytes < o.bytes; }

  std::string hex_digest() const;  // short stable digest for display
};

CanonicalKey canonical_key(const CoverDatum& d, const KeyOptions& opts = {});

bool is_isomorphic(const CoverDatum& a, const CoverDatum& b, const KeyOptions& opts = {});

}  // namespace covertab
