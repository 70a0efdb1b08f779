#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "covertab/classify.hpp"
#include "covertab/enumerate.hpp"
#include "covertab/errors.hpp"
#include "covertab/parallel.hpp"

namespace covertab {

namespace {

// dim S(G) for a primitive single-row family, O(N*s); the generic span-based
// computation re-verifies every survivor
std::int64_t cyclic_dim_sg(const Tuple& row, std::uint32_t n) {
  std::vector<std::int64_t> d(n, 0);
  for (std::uint32_t a = 1; a < n; ++a) {
    std::uint64_t sum = 0;
    for (Residue r : row) sum += neg_mod(static_cast<Residue>((static_cast<std::uint64_t>(a) * r) % n), n);
    d[a] = static_cast<std::int64_t>(sum / n) - 1;
  }
  std::int64_t dim = 0;
  for (std::uint32_t a = 1; a < n; ++a) {
    std::uint32_t b = n - a;
    if (a == b) dim += d[a] * (d[a] + 1) / 2;
    else if (a < b) dim += d[a] * d[b];
  }
  return dim;
}

// canonical form of a primitive row under column permutation and row-span
// equality: the lex-least sorted tuple among the unit multiples
Tuple cyclic_canonical_row(const Tuple& row, std::uint32_t n) {
  Tuple best;
  for (std::uint32_t a = 1; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    Tuple t = scale_tuple(row, a, n);
    std::sort(t.begin(), t.end());
    if (best.empty() || t < best) best = t;
  }
  return best;
}

std::string pack_tuple(const Tuple& t) {
  std::string out;
  out.reserve(t.size() * 2);
  for (Residue v : t) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
  }
  return out;
}

// nondecreasing tuples in [1,n)^s with entry sum = 0 mod n
template <class Fn>
void for_each_nondecreasing_row(std::uint32_t n, std::size_t s, Fn&& fn) {
  Tuple row(s, 1);
  for (;;) {
    std::uint64_t sum = std::accumulate(row.begin(), row.end(), std::uint64_t{0});
    if (sum % n == 0) fn(row);
    // odometer over nondecreasing tuples
    std::size_t pos = s;
    while (pos-- > 0) {
      if (row[pos] + 1 < n) {
        ++row[pos];
        for (std::size_t k = pos + 1; k < s; ++k) row[k] = row[pos];
        break;
      }
      if (pos == 0) return;
    }
  }
}

}  // namespace

std::vector<CoverDatum> cyclic_special_table(std::uint32_t n_max, std::size_t s_max,
                                             std::size_t workers) {
  if (n_max < 2 || s_max < 4) raise("BadShape", "need n_max >= 2 and s_max >= 4");
  std::vector<std::uint32_t> moduli;
  for (std::uint32_t n = 2; n <= n_max; ++n) moduli.push_back(n);

  std::vector<std::vector<CoverDatum>> found(moduli.size());
  parallel_for(
      moduli.size(),
      [&](std::size_t mi) {
        std::uint32_t n = moduli[mi];
        std::unordered_set<std::string> seen;
        for (std::size_t s = 4; s <= s_max; ++s) {
          for_each_nondecreasing_row(n, s, [&](const Tuple& row) {
            if (gcd_with_modulus(row, n) != 1) return;
            Tuple canon = cyclic_canonical_row(row, n);
            if (!seen.insert(pack_tuple(canon) + static_cast<char>(s)).second) return;
            if (cyclic_dim_sg(canon, n) != static_cast<std::int64_t>(s) - 3) return;
            std::vector<std::int64_t> raw(canon.begin(), canon.end());
            CoverDatum datum = validate_datum(n, {raw});
            if (dim_special_group(datum) != static_cast<std::int64_t>(s) - 3)
              raise("InternalError", "fast cyclic dim S(G) disagrees for " + to_compact(datum));
            found[mi].push_back(std::move(datum));
          });
        }
      },
      workers);

  std::vector<CoverDatum> out;
  for (auto& part : found)
    for (auto& d : part) out.push_back(std::move(d));
  std::sort(out.begin(), out.end(), [](const CoverDatum& a, const CoverDatum& b) {
    if (a.modulus != b.modulus) return a.modulus < b.modulus;
    if (a.s() != b.s()) return a.s() < b.s();
    return canonical_key(a) < canonical_key(b);
  });
  return out;
}

std::map<Shape, std::vector<ShapeSurvivor>> theorem2_scan(
    const std::vector<std::uint32_t>& moduli, std::size_t workers) {
  std::vector<std::uint32_t> ns = moduli;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  for (std::uint32_t n : ns)
    if (n < 3) raise("BadShape", "theorem-2 scan needs moduli >= 3");

  struct Job {
    Shape shape;
    std::uint32_t modulus;
  };
  std::vector<Job> jobs;
  for (Shape shape : kAllShapes)
    for (std::uint32_t n : ns) jobs.push_back({shape, n});

  std::vector<std::vector<ShapeSurvivor>> results(jobs.size());
  parallel_for(
      jobs.size(),
      [&](std::size_t ji) {
        for (CoverDatum& datum : shape_patterns(jobs[ji].shape, jobs[ji].modulus)) {
          // each row must define an order-N cyclic cover; a non-primitive row
          // means the instance presents a family outside the scanned shape
          // (a scaled copy from a smaller modulus, or one with a deck group
          // not generated by two order-N elements)
          bool primitive_rows = true;
          for (const auto& row : datum.rows)
            primitive_rows = primitive_rows && gcd_with_modulus(row, datum.modulus) == 1;
          if (!primitive_rows) continue;
          ClassificationReport rep = classify(datum);
          if (rep.verdict == Verdict::NotSpecial) continue;
          CanonicalKey key = canonical_key(datum);
          results[ji].push_back({std::move(datum), std::move(key), std::move(rep)});
        }
      },
      workers);

  std::map<Shape, std::vector<ShapeSurvivor>> out;
  for (Shape shape : kAllShapes) out[shape] = {};
  for (std::size_t ji = 0; ji < jobs.size(); ++ji) {
    auto& bucket = out[jobs[ji].shape];
    for (auto& sv : results[ji]) bucket.push_back(std::move(sv));
  }
  for (auto& [shape, bucket] : out) {
    std::unordered_set<std::string> seen;
    std::vector<ShapeSurvivor> dedup;
    for (auto& sv : bucket)
      if (seen.insert(sv.key.bytes).second) dedup.push_back(std::move(sv));
    std::sort(dedup.begin(), dedup.end(),
              [](const ShapeSurvivor& a, const ShapeSurvivor& b) { return a.key < b.key; });
    bucket = std::move(dedup);
  }
  return out;
}

}  // namespace covertab
