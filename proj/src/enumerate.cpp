#include "covertab/enumerate.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "covertab/errors.hpp"
#include "covertab/parallel.hpp"

namespace covertab {

namespace {

constexpr std::uint64_t kSaturated = ~0ull;

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (out > kSaturated / base) return kSaturated;
    out *= base;
  }
  return out;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

struct Combo {
  std::uint32_t modulus;
  std::size_t m, s;
  std::uint64_t count;  // raw box size for this combo
};

std::vector<Combo> combos_of(const SearchSpec& spec) {
  std::vector<Combo> out;
  std::vector<std::uint32_t> moduli = spec.moduli;
  std::sort(moduli.begin(), moduli.end());
  moduli.erase(std::unique(moduli.begin(), moduli.end()), moduli.end());
  for (std::uint32_t n : moduli) {
    if (n < 2) raise("BadShape", "modulus must be >= 2");
    if (spec.shape) {
      const ShapeMask mask = shape_mask(*spec.shape);
      std::size_t free_count = 0;
      for (const auto& row : mask)
        for (bool z : row)
          if (!z) ++free_count;
      out.push_back({n, 2, 5, sat_pow(n - 1, free_count)});
    } else {
      for (std::size_t m = spec.m_min; m <= spec.m_max; ++m)
        for (std::size_t s = spec.s_min; s <= spec.s_max; ++s)
          out.push_back({n, m, s, sat_pow(n, m * s)});
    }
  }
  return out;
}

// decode raw index -> matrix; returns false when the quick validity checks
// (nonzero columns, zero row sums) fail
bool decode_candidate(const SearchSpec& spec, const Combo& c, std::uint64_t index,
                      std::vector<std::vector<std::int64_t>>& rows) {
  std::uint32_t n = c.modulus;
  rows.assign(c.m, std::vector<std::int64_t>(c.s, 0));
  if (spec.shape) {
    const ShapeMask mask = shape_mask(*spec.shape);
    for (std::size_t i = c.m; i-- > 0;)
      for (std::size_t j = c.s; j-- > 0;) {
        if (mask[i][j]) continue;
        rows[i][j] = static_cast<std::int64_t>(1 + index % (n - 1));
        index /= (n - 1);
      }
  } else {
    for (std::size_t i = c.m; i-- > 0;)
      for (std::size_t j = c.s; j-- > 0;) {
        rows[i][j] = static_cast<std::int64_t>(index % n);
        index /= n;
      }
  }
  for (std::size_t j = 0; j < c.s; ++j) {
    bool nonzero = false;
    for (std::size_t i = 0; i < c.m; ++i) nonzero = nonzero || rows[i][j] != 0;
    if (!nonzero) return false;
  }
  for (std::size_t i = 0; i < c.m; ++i) {
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < c.s; ++j) sum += rows[i][j];
    if (sum % n != 0) return false;
  }
  return true;
}

bool passes_filters(const SearchSpec& spec, const EnumerationRecord& rec) {
  if (spec.genus_min && rec.genus < *spec.genus_min) return false;
  if (spec.genus_max && rec.genus > *spec.genus_max) return false;
  if (spec.rows_independent && rec.datum.rows_independent != *spec.rows_independent)
    return false;
  if (spec.verdict && rec.report.verdict != *spec.verdict) return false;
  return true;
}

EnumerationRecord make_record(const SearchSpec& spec, CoverDatum datum) {
  EnumerationRecord rec;
  rec.genus = genus(datum);
  rec.group = group_structure(datum);
  rec.key = canonical_key(datum, spec.key_options);
  rec.report = classify(datum);
  rec.datum = std::move(datum);
  return rec;
}

}  // namespace

std::vector<EnumerationRecord> enumerate_data(const SearchSpec& spec, std::size_t workers) {
  if (spec.moduli.empty()) raise("BadShape", "no moduli given");
  if (spec.m_min < 1 || spec.m_min > spec.m_max || spec.s_min < 3 || spec.s_min > spec.s_max)
    raise("BadShape", "bad m/s ranges");
  if (spec.shape && (spec.m_min != 2 || spec.m_max != 2 || spec.s_min != 5 || spec.s_max != 5))
    raise("BadShape", "shape patterns require m = 2 and s = 5");

  auto combos = combos_of(spec);
  std::uint64_t total = 0;
  for (const auto& c : combos) total = sat_add(total, c.count);
  if (total > spec.max_box)
    raise("SpecTooLarge", "raw box has " +
                              (total == kSaturated ? std::string(">= 2^64")
                                                   : std::to_string(total)) +
                              " cells, guard is " + std::to_string(spec.max_box));

  std::vector<EnumerationRecord> merged;
  for (const auto& combo : combos) {
    std::size_t w = std::min<std::uint64_t>(worker_count(workers), std::max<std::uint64_t>(combo.count, 1));
    std::uint64_t chunk = (combo.count + w - 1) / w;
    std::vector<std::vector<EnumerationRecord>> slabs(w);
    parallel_for(
        w,
        [&](std::size_t slab) {
          std::uint64_t lo = slab * chunk;
          std::uint64_t hi = std::min<std::uint64_t>(combo.count, lo + chunk);
          std::unordered_set<std::string> local_keys;
          std::vector<std::vector<std::int64_t>> rows;
          for (std::uint64_t idx = lo; idx < hi; ++idx) {
            if (!decode_candidate(spec, combo, idx, rows)) continue;
            EnumerationRecord rec = make_record(spec, validate_datum(combo.modulus, rows));
            if (!passes_filters(spec, rec)) continue;
            if (local_keys.insert(rec.key.bytes).second) slabs[slab].push_back(std::move(rec));
          }
        },
        workers);
    for (auto& slab : slabs)
      for (auto& rec : slab) merged.push_back(std::move(rec));
  }

  merged = dedup_stream(std::move(merged));
  std::sort(merged.begin(), merged.end(),
            [](const EnumerationRecord& a, const EnumerationRecord& b) { return a.key < b.key; });
  return merged;
}

std::vector<CoverDatum> shape_patterns(Shape shape, std::uint32_t modulus) {
  if (modulus < 2) raise("BadShape", "modulus must be >= 2");
  SearchSpec spec;
  spec.moduli = {modulus};
  spec.shape = shape;
  spec.m_min = spec.m_max = 2;
  spec.s_min = spec.s_max = 5;
  auto combos = combos_of(spec);
  std::vector<CoverDatum> out;
  std::vector<std::vector<std::int64_t>> rows;
  for (std::uint64_t idx = 0; idx < combos[0].count; ++idx) {
    if (!decode_candidate(spec, combos[0], idx, rows)) continue;
    out.push_back(validate_datum(modulus, rows));
  }
  return out;
}

std::vector<EnumerationRecord> dedup_stream(std::vector<EnumerationRecord> records) {
  std::unordered_set<std::string> seen;
  std::vector<EnumerationRecord> out;
  out.reserve(records.size());
  for (auto& rec : records)
    if (seen.insert(rec.key.bytes).second) out.push_back(std::move(rec));
  return out;
}

}  // namespace covertab
