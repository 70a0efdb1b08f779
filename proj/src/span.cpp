#include "covertab/span.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_map>

#include "covertab/errors.hpp"

namespace covertab {

namespace {

constexpr std::uint64_t kMaxSpanSize = 1ull << 22;

// closure of {0} under adding the rows, keeping one representative n per
// element; packed u64 fast path when the tuples fit
template <class Key, class Pack>
std::vector<SpanElement> closure(const CoverDatum& d, Pack pack) {
  std::uint32_t n = d.modulus;
  std::size_t s = d.s(), m = d.m();
  std::vector<SpanElement> elems;
  std::unordered_map<Key, std::size_t> seen;
  elems.push_back({Tuple(s, 0), Tuple(m, 0)});
  seen.emplace(pack(elems[0].alpha), 0);
  for (std::size_t i = 0; i < m; ++i) {
    // extend current set by multiples of row i
    std::size_t base_count = elems.size();
    for (std::size_t b = 0; b < base_count; ++b) {
      Tuple alpha = elems[b].alpha;
      Tuple rep = elems[b].rep_n;
      for (std::uint32_t k = 1; k < n; ++k) {
        alpha = add_tuple(alpha, d.rows[i], n);
        rep[i] = add_mod(rep[i], 1, n);
        if (seen.emplace(pack(alpha), elems.size()).second) {
          if (elems.size() >= kMaxSpanSize) raise("SpanTooLarge", "row span exceeds guard");
          elems.push_back({alpha, rep});
        }
      }
    }
  }
  return elems;
}

}  // namespace

std::size_t SpanTable::find(const Tuple& alpha) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), alpha,
                             [](const SpanElement& e, const Tuple& a) { return e.alpha < a; });
  if (it == elements.end() || it->alpha != alpha) return npos;
  return static_cast<std::size_t>(it - elements.begin());
}

SpanTable row_span_table(const CoverDatum& d) {
  unsigned bits = std::bit_width(d.modulus - 1u);
  std::vector<SpanElement> elems;
  if (bits * d.s() <= 64) {
    auto pack = [bits](const Tuple& t) {
      std::uint64_t key = 0;
      for (Residue v : t) key = (key << bits) | v;
      return key;
    };
    elems = closure<std::uint64_t>(d, pack);
  } else {
    elems = closure<std::string>(d, [](const Tuple& t) {
      return std::string(reinterpret_cast<const char*>(t.data()), t.size() * sizeof(Residue));
    });
  }
  std::sort(elems.begin(), elems.end(),
            [](const SpanElement& a, const SpanElement& b) { return a.alpha < b.alpha; });
  SpanTable table;
  table.modulus = d.modulus;
  table.elements = std::move(elems);
  return table;
}

std::vector<Tuple> row_span(const CoverDatum& d) {
  auto table = row_span_table(d);
  std::vector<Tuple> out;
  out.reserve(table.size());
  for (auto& e : table.elements) out.push_back(e.alpha);
  return out;
}

std::string CanonicalKey::hex_digest() const {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 15];
    h >>= 4;
  }
  return out;
}

CanonicalKey canonical_key(const CoverDatum& d, const KeyOptions& opts) {
  CoverDatum base = opts.reduce_modulus ? fully_reduced(d) : d;
  std::vector<Tuple> span = row_span(base);
  std::size_t s = base.s();

  std::vector<Tuple> best = span;  // identity permutation candidate
  if (opts.column_permutation) {
    std::vector<std::size_t> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Tuple> cand(span.size(), Tuple(s, 0));
    while (std::next_permutation(perm.begin(), perm.end())) {
      for (std::size_t r = 0; r < span.size(); ++r)
        for (std::size_t j = 0; j < s; ++j) cand[r][j] = span[r][perm[j]];
      std::sort(cand.begin(), cand.end());
      if (cand < best) best = cand;
    }
  }

  CanonicalKey key;
  auto put_u32 = [&key](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) key.bytes.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  };
  key.bytes = "CTK1";
  key.bytes.push_back(opts.column_permutation ? 'P' : 'p');
  key.bytes.push_back(opts.reduce_modulus ? 'R' : 'r');
  put_u32(base.modulus);
  put_u32(static_cast<std::uint32_t>(s));
  put_u32(static_cast<std::uint32_t>(best.size()));
  for (const auto& t : best)
    for (Residue v : t) {
      key.bytes.push_back(static_cast<char>(v & 0xff));
      key.bytes.push_back(static_cast<char>((v >> 8) & 0xff));
      key.bytes.push_back(static_cast<char>((v >> 16) & 0xff));
    }
  return key;
}

bool is_isomorphic(const CoverDatum& a, const CoverDatum& b, const KeyOptions& opts) {
  return canonical_key(a, opts) == canonical_key(b, opts);
}

}  // namespace covertab
