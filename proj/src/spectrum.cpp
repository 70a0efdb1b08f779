#include "covertab/spectrum.hpp"

#include <algorithm>

#include "covertab/errors.hpp"
#include "covertab/parallel.hpp"

namespace covertab {

Tuple alpha_tuple(const CoverDatum& d, const Tuple& n) {
  if (n.size() != d.m()) raise("ShapeMismatch", "character has wrong length");
  for (Residue v : n)
    if (v >= d.modulus) raise("ShapeMismatch", "character entry out of range");
  Tuple alpha(d.s(), 0);
  for (std::size_t j = 0; j < d.s(); ++j) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < d.m(); ++i)
      acc += static_cast<std::uint64_t>(n[i]) * d.rows[i][j];
    alpha[j] = static_cast<Residue>(acc % d.modulus);
  }
  return alpha;
}

std::int64_t eigenspace_dim_of_alpha(const Tuple& alpha, std::uint32_t modulus) {
  if (is_zero_tuple(alpha)) return 0;  // trivial character: P^1 upstairs
  // -1 + sum <-alpha_j/N> = -1 + (sum [-alpha_j]_N) / N, exactly
  std::uint64_t sum = 0;
  for (Residue a : alpha) sum += neg_mod(a, modulus);
  if (sum % modulus != 0)
    raise("InternalError", "fractional eigenspace dimension (datum not validated?)");
  return static_cast<std::int64_t>(sum / modulus) - 1;
}

std::int64_t eigenspace_dim(const CoverDatum& d, const Tuple& n) {
  return eigenspace_dim_of_alpha(alpha_tuple(d, n), d.modulus);
}

SpectrumTable spectrum_table(const CoverDatum& d) {
  SpanTable span = row_span_table(d);
  SpectrumTable t;
  t.modulus = d.modulus;
  t.branch_points = d.s();
  t.genus = genus(d);
  // elements are sorted, so the zero tuple sits at index 0
  t.records.resize(span.size() - 1);
  auto fill = [&](std::size_t i) {
    const SpanElement& e = span.elements[i + 1];
    EigenspaceRecord& rec = t.records[i];
    rec.chi.n = e.rep_n;
    rec.chi.alpha = e.alpha;
    rec.d = eigenspace_dim_of_alpha(e.alpha, d.modulus);
    rec.d_dual = eigenspace_dim_of_alpha(neg_tuple(e.alpha, d.modulus), d.modulus);
    rec.order2 = has_order_two(e.alpha, d.modulus);
    rec.nonzero_count = 0;
    for (Residue a : e.alpha)
      if (a != 0) ++rec.nonzero_count;
  };
  if (t.records.size() >= 4096) {
    parallel_for(t.records.size(), fill);
  } else {
    for (std::size_t i = 0; i < t.records.size(); ++i) fill(i);
  }
  return t;
}

std::int64_t dim_special_group(const SpectrumTable& t) {
  std::int64_t dim = 0;
  for (const auto& rec : t.records) {
    if (rec.order2) {
      dim += rec.d * (rec.d + 1) / 2;
    } else {
      // count each unordered pair {alpha, -alpha} once
      Tuple neg = neg_tuple(rec.chi.alpha, t.modulus);
      if (rec.chi.alpha < neg) dim += rec.d * rec.d_dual;
    }
  }
  return dim;
}

std::int64_t dim_special_group(const CoverDatum& d) {
  return dim_special_group(spectrum_table(d));
}

std::optional<EigenspaceRecord> condition_star(const SpectrumTable& t) {
  std::int64_t target = static_cast<std::int64_t>(t.branch_points) - 2;
  for (const auto& rec : t.records) {
    std::int64_t lo = std::min(rec.d, rec.d_dual), hi = std::max(rec.d, rec.d_dual);
    bool excluded_pair = (lo == 0 && hi == target);
    if (!excluded_pair && rec.d + rec.d_dual >= target) return rec;
  }
  return std::nullopt;
}

std::optional<EigenspaceRecord> condition_star(const CoverDatum& d) {
  return condition_star(spectrum_table(d));
}

std::optional<CoverDatum> cyclic_datum_of_alpha(const Tuple& alpha, std::uint32_t modulus) {
  for (Residue a : alpha)
    if (a == 0) return std::nullopt;
  std::uint64_t f = gcd_with_modulus(alpha, modulus);
  std::vector<std::int64_t> row;
  row.reserve(alpha.size());
  for (Residue a : alpha) row.push_back(static_cast<std::int64_t>(a / f));
  return validate_datum(static_cast<std::uint32_t>(modulus / f), {row});
}

std::optional<CoverDatum> cyclic_datum_of_character(const CoverDatum& d, const Tuple& n) {
  return cyclic_datum_of_alpha(alpha_tuple(d, n), d.modulus);
}

}  // namespace covertab
