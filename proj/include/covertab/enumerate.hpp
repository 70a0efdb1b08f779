#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "covertab/classify.hpp"
#include "covertab/datum.hpp"
#include "covertab/shapes.hpp"
#include "covertab/span.hpp"

namespace covertab {

// Search box for systematic generation of cover data. When a shape is set
// the box is the 2x5 pattern family; m/s ranges must then be {2} and {5}.
struct SearchSpec {
  std::vector<std::uint32_t> moduli;
  std::size_t m_min = 1, m_max = 1;
  std::size_t s_min = 3, s_max = 3;
  std::optional<Shape> shape;
  std::optional<std::int64_t> genus_min, genus_max;
  std::optional<bool> rows_independent;
  std::optional<Verdict> verdict;
  std::uint64_t max_box = 20'000'000;  // raw box cardinality guard
  KeyOptions key_options;
};

struct EnumerationRecord {
  CoverDatum datum;
  CanonicalKey key;
  std::int64_t genus = 0;
  AbelianGroupStructure group;
  ClassificationReport report;
};

// Visits every valid datum in the box and emits exactly one representative
// per canonical key (the first in raw enumeration order), sorted by key.
// Raises SpecTooLarge before doing any work when the raw box exceeds the
// guard. Deterministic for any worker count.
std::vector<EnumerationRecord> enumerate_data(const SearchSpec& spec, std::size_t workers = 0);

// All 2x5 data over Z/N with zeros exactly at the shape's positions, every
// displayed entry nonzero and both rows summing to zero.
std::vector<CoverDatum> shape_patterns(Shape shape, std::uint32_t modulus);

// Stable removal of canonical-key duplicates; idempotent.
std::vector<EnumerationRecord> dedup_stream(std::vector<EnumerationRecord> records);

}  // namespace covertab
