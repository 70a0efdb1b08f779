#include "covertab/hasse_witt.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "covertab/errors.hpp"

namespace covertab {

namespace {

constexpr std::uint64_t kMaxPrime = 1ull << 22;  // factorial tables live in memory

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::uint64_t PrimeContext::pow_mod(std::uint64_t base, std::uint64_t exp) const {
  std::uint64_t out = 1;
  base %= p;
  while (exp) {
    if (exp & 1) out = out * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return out;
}

std::uint64_t PrimeContext::inverse(std::uint64_t a) const { return pow_mod(a, p - 2); }

std::uint64_t PrimeContext::binomial(std::uint64_t a, std::uint64_t b) const {
  if (b > a) return 0;
  return fact[a] * inv_fact[b] % p * inv_fact[a - b] % p;
}

PrimeContext make_prime_context(std::uint32_t modulus, std::uint64_t p) {
  if (modulus < 2) raise("BadShape", "modulus must be >= 2");
  if (p > kMaxPrime) raise("BadShape", "prime too large for factorial tables");
  if (!is_prime_u64(p)) raise("CharacterMismatch", std::to_string(p) + " is not prime");
  if ((p - 1) % modulus != 0)
    raise("CharacterMismatch",
          std::to_string(p) + " is not 1 mod " + std::to_string(modulus));
  PrimeContext ctx;
  ctx.p = p;
  ctx.modulus = modulus;
  ctx.q = (p - 1) / modulus;
  ctx.fact.resize(p);
  ctx.inv_fact.resize(p);
  ctx.fact[0] = 1;
  for (std::uint64_t k = 1; k < p; ++k) ctx.fact[k] = ctx.fact[k - 1] * k % p;
  ctx.inv_fact[p - 1] = ctx.inverse(ctx.fact[p - 1]);
  for (std::uint64_t k = p - 1; k > 0; --k) ctx.inv_fact[k - 1] = ctx.inv_fact[k] * k % p;
  return ctx;
}

PrimeContext choose_prime(std::uint32_t modulus, std::uint64_t min) {
  if (modulus < 2) raise("BadShape", "modulus must be >= 2");
  std::uint64_t p = std::max<std::uint64_t>(min, 2);
  // jump to the first candidate = 1 mod N
  if (p % modulus != 1) p += (1 + modulus - p % modulus) % modulus;
  if (p < min) p += modulus;
  while (!is_prime_u64(p)) p += modulus;
  return make_prime_context(modulus, p);
}

std::uint64_t eval_poly(const SparsePoly& poly, const std::vector<std::uint64_t>& z,
                        std::uint64_t p) {
  std::uint64_t acc = 0;
  for (const auto& mono : poly) {
    std::uint64_t term = mono.coef % p;
    for (std::size_t k = 0; k < mono.exp.size(); ++k) {
      std::uint64_t base = z[k] % p, e = mono.exp[k];
      while (e) {  // tiny exponents; square-and-multiply not worth it
        if (e & 1) term = term * base % p;
        base = base * base % p;
        e >>= 1;
      }
    }
    acc = (acc + term) % p;
  }
  return acc;
}

namespace {

struct BlockShape {
  Tuple alpha;
  std::int64_t d = 0;
  std::vector<std::uint64_t> caps;  // c_k = q * [-alpha_k]_N, all < p
};

BlockShape block_shape(const CoverDatum& d, const Tuple& n, const PrimeContext& ctx) {
  if (ctx.modulus != d.modulus)
    raise("CharacterMismatch", "prime context is for N = " + std::to_string(ctx.modulus) +
                                   ", datum has N = " + std::to_string(d.modulus));
  BlockShape shape;
  shape.alpha = alpha_tuple(d, n);
  shape.d = eigenspace_dim_of_alpha(shape.alpha, d.modulus);
  shape.caps.reserve(d.s());
  for (Residue a : shape.alpha) {
    std::uint64_t cap = ctx.q * neg_mod(a, d.modulus);
    if (cap >= ctx.p) raise("InternalError", "binomial cap reaches p");
    shape.caps.push_back(cap);
  }
  return shape;
}

std::int64_t upsilon(std::int64_t dn, std::int64_t i, std::int64_t j, std::uint64_t p) {
  return (dn - i + 1) * static_cast<std::int64_t>(p - 1) + (i - j);
}

void check_points(const std::vector<std::uint64_t>& z, std::size_t s, std::uint64_t p) {
  if (z.size() != s) raise("RepeatedPoint", "expected " + std::to_string(s) + " points");
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t v : z) {
    if (v >= p) raise("RepeatedPoint", "point " + std::to_string(v) + " not in [0,p)");
    if (!seen.insert(v).second)
      raise("RepeatedPoint", "point " + std::to_string(v) + " repeated");
  }
}

// composition counts with caps, saturating; ways[r] = #{l : sum l = r}
std::vector<std::uint64_t> composition_counts(const std::vector<std::uint64_t>& caps,
                                              std::uint64_t max_degree) {
  std::vector<std::uint64_t> ways(max_degree + 1, 0);
  ways[0] = 1;
  constexpr std::uint64_t kSat = ~0ull;
  for (std::uint64_t cap : caps) {
    std::vector<std::uint64_t> next(max_degree + 1, 0);
    for (std::uint64_t r = 0; r <= max_degree; ++r) {
      if (ways[r] == 0) continue;
      std::uint64_t top = std::min(cap, max_degree - r);
      for (std::uint64_t l = 0; l <= top; ++l) {
        std::uint64_t& slot = next[r + l];
        slot = (slot > kSat - ways[r]) ? kSat : slot + ways[r];
      }
    }
    ways = std::move(next);
  }
  return ways;
}

}  // namespace

HWBlock hw_block_numeric(const CoverDatum& d, const Tuple& n, const PrimeContext& ctx,
                         const std::vector<std::uint64_t>& z) {
  BlockShape shape = block_shape(d, n, ctx);
  check_points(z, d.s(), ctx.p);
  HWBlock block;
  block.n = n;
  block.alpha = shape.alpha;
  block.size = static_cast<std::size_t>(std::max<std::int64_t>(shape.d, 0));
  if (block.size == 0) return block;

  // every entry is a coefficient of the one generating function
  // prod_k (1 + t z_k)^{c_k}, truncated at the top degree d_n (p-1)
  std::uint64_t p = ctx.p;
  std::size_t top = static_cast<std::size_t>(shape.d) * static_cast<std::size_t>(p - 1);
  std::vector<std::uint64_t> poly(top + 1, 0), factor, next;
  poly[0] = 1;
  std::size_t degree = 0;
  for (std::size_t k = 0; k < d.s(); ++k) {
    std::uint64_t cap = shape.caps[k];
    std::size_t fdeg = static_cast<std::size_t>(std::min<std::uint64_t>(cap, top));
    factor.assign(fdeg + 1, 0);
    std::uint64_t zpow = 1;
    for (std::size_t l = 0; l <= fdeg; ++l) {
      factor[l] = ctx.binomial(cap, l) * zpow % p;
      zpow = zpow * (z[k] % p) % p;
    }
    std::size_t ndeg = std::min(top, degree + fdeg);
    next.assign(ndeg + 1, 0);
    for (std::size_t a = 0; a <= degree; ++a) {
      if (poly[a] == 0) continue;
      std::size_t lim = std::min(fdeg, ndeg - a);
      for (std::size_t b = 0; b <= lim; ++b)
        next[a + b] = (next[a + b] + poly[a] * factor[b]) % p;
    }
    poly.swap(next);
    degree = ndeg;
  }
  poly.resize(top + 1, 0);

  block.numeric.assign(block.size * block.size, 0);
  for (std::size_t i = 1; i <= block.size; ++i)
    for (std::size_t j = 1; j <= block.size; ++j) {
      std::int64_t u = upsilon(shape.d, static_cast<std::int64_t>(i),
                               static_cast<std::int64_t>(j), p);
      block.numeric[(i - 1) * block.size + (j - 1)] =
          (u >= 0 && u <= static_cast<std::int64_t>(top)) ? poly[u] : 0;
    }
  return block;
}

HWBlock hw_block_symbolic(const CoverDatum& d, const Tuple& n, const PrimeContext& ctx,
                          std::uint64_t term_limit) {
  BlockShape shape = block_shape(d, n, ctx);
  HWBlock block;
  block.n = n;
  block.alpha = shape.alpha;
  block.size = static_cast<std::size_t>(std::max<std::int64_t>(shape.d, 0));
  block.symbolic_mode = true;
  if (block.size == 0) return block;

  std::size_t s = d.s();
  std::uint64_t top = static_cast<std::uint64_t>(shape.d) * (ctx.p - 1);
  std::vector<std::uint64_t> counts = composition_counts(shape.caps, top);
  std::uint64_t total_terms = 0;
  for (std::size_t i = 1; i <= block.size; ++i)
    for (std::size_t j = 1; j <= block.size; ++j) {
      std::int64_t u = upsilon(shape.d, static_cast<std::int64_t>(i),
                               static_cast<std::int64_t>(j), ctx.p);
      std::uint64_t c = (u >= 0 && u <= static_cast<std::int64_t>(top)) ? counts[u] : 0;
      total_terms = (total_terms > ~0ull - c) ? ~0ull : total_terms + c;
    }
  if (total_terms > term_limit)
    raise("TermLimitExceeded", "symbolic block needs " + std::to_string(total_terms) +
                                   " terms, limit is " + std::to_string(term_limit));

  // suffix cap sums bound how much degree the remaining variables can absorb
  std::vector<std::uint64_t> suffix(s + 1, 0);
  for (std::size_t k = s; k-- > 0;) suffix[k] = suffix[k + 1] + shape.caps[k];

  block.symbolic.assign(block.size * block.size, {});
  std::vector<std::uint32_t> exp(s, 0);
  for (std::size_t i = 1; i <= block.size; ++i)
    for (std::size_t j = 1; j <= block.size; ++j) {
      std::int64_t u = upsilon(shape.d, static_cast<std::int64_t>(i),
                               static_cast<std::int64_t>(j), ctx.p);
      SparsePoly& entry = block.symbolic[(i - 1) * block.size + (j - 1)];
      if (u < 0 || u > static_cast<std::int64_t>(top)) continue;
      // DFS over compositions of u with the caps, lex-ascending exponents
      auto emit = [&](auto&& self, std::size_t k, std::uint64_t rem,
                      std::uint64_t coef) -> void {
        if (k == s) {
          entry.push_back({Tuple(exp.begin(), exp.end()), coef});
          return;
        }
        std::uint64_t lo = rem > suffix[k + 1] ? rem - suffix[k + 1] : 0;
        std::uint64_t hi = std::min(shape.caps[k], rem);
        for (std::uint64_t l = lo; l <= hi; ++l) {
          exp[k] = static_cast<std::uint32_t>(l);
          self(self, k + 1, rem - l, coef * ctx.binomial(shape.caps[k], l) % ctx.p);
        }
        exp[k] = 0;
      };
      emit(emit, 0, static_cast<std::uint64_t>(u), 1);
    }
  return block;
}

std::uint64_t det_mod_p(std::vector<std::uint64_t> mat, std::size_t n,
                        const PrimeContext& ctx) {
  std::uint64_t p = ctx.p, det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && mat[pivot * n + col] % p == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(mat[pivot * n + j], mat[col * n + j]);
      det = p - det;
    }
    std::uint64_t inv = ctx.inverse(mat[col * n + col] % p);
    det = det % p * (mat[col * n + col] % p) % p;
    for (std::size_t r = col + 1; r < n; ++r) {
      std::uint64_t f = mat[r * n + col] % p * inv % p;
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j)
        mat[r * n + j] = (mat[r * n + j] + (p - f) * mat[col * n + j]) % p;
    }
  }
  return det % p;
}

bool is_ordinary_at(const CoverDatum& d, const PrimeContext& ctx,
                    const std::vector<std::uint64_t>& z) {
  check_points(z, d.s(), ctx.p);
  SpectrumTable table = spectrum_table(d);
  for (const auto& rec : table.records) {
    if (rec.d == 0) continue;
    HWBlock block = hw_block_numeric(d, rec.chi.n, ctx, z);
    if (det_mod_p(block.numeric, block.size, ctx) == 0) return false;
  }
  return true;
}

std::int64_t elliptic_trace_oracle(const PrimeContext& ctx,
                                   const std::array<std::uint64_t, 4>& z) {
  std::uint64_t p = ctx.p;
  if (p < 5) raise("RepeatedPoint", "need 4 distinct points, p too small");
  check_points({z.begin(), z.end()}, 4, p);
  std::vector<bool> is_square(p, false);
  for (std::uint64_t y = 0; y < p; ++y) is_square[y * y % p] = true;
  // monic quartic: two rational points at infinity on the smooth model
  std::uint64_t count = 2;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t f = 1;
    for (std::uint64_t zj : z) f = f * ((x + p - zj) % p) % p;
    if (f == 0)
      count += 1;
    else if (is_square[f])
      count += 2;
  }
  return static_cast<std::int64_t>(p) + 1 - static_cast<std::int64_t>(count);
}

std::optional<std::int64_t> divisibility_order(const SparsePoly& entry, std::size_t i,
                                               std::size_t j) {
  if (i == j) raise("BadShape", "branch indices must differ");
  std::optional<std::int64_t> order;
  for (const auto& mono : entry) {
    if (mono.coef == 0 || mono.exp[i] != 0) continue;
    std::int64_t e = mono.exp[j];
    if (!order || e < *order) order = e;
  }
  return order;
}

OrdinarityScan scan_ordinarity(const CoverDatum& d, const PrimeContext& ctx,
                               std::uint64_t samples, std::uint64_t seed) {
  std::size_t s = d.s();
  std::uint64_t p = ctx.p;
  OrdinarityScan out;
  bool use_oracle = (d.modulus == 2 && s == 4);

  auto visit = [&](const std::vector<std::uint64_t>& z) {
    bool ordinary = is_ordinary_at(d, ctx, z);
    ++out.tested;
    if (ordinary) {
      ++out.ordinary;
      if (!out.first_ordinary) out.first_ordinary = z;
    }
    if (use_oracle) {
      std::array<std::uint64_t, 4> zz{z[0], z[1], z[2], z[3]};
      std::int64_t ap = elliptic_trace_oracle(ctx, zz);
      ++out.oracle_checked;
      if ((reduce_mod(ap, static_cast<std::uint32_t>(p)) != 0) == ordinary) ++out.oracle_agreed;
    }
  };

  if (p <= 11 && s <= 5 && p >= s) {
    out.exhaustive = true;
    std::vector<std::uint64_t> z(s, 0);
    std::vector<bool> used(p, false);
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == s) {
        visit(z);
        return;
      }
      for (std::uint64_t v = 0; v < p; ++v) {
        if (used[v]) continue;
        used[v] = true;
        z[k] = v;
        self(self, k + 1);
        used[v] = false;
      }
    };
    rec(rec, 0);
    return out;
  }

  if (p < s) raise("RepeatedPoint", "fewer residues than branch points");
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> pool(p);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::uint64_t t = 0; t < samples; ++t) {
    // partial Fisher-Yates; rng()%k is fine here, we only need determinism
    for (std::size_t k = 0; k < s; ++k) {
      std::size_t pick = k + static_cast<std::size_t>(rng() % (p - k));
      std::swap(pool[k], pool[pick]);
    }
    visit(std::vector<std::uint64_t>(pool.begin(), pool.begin() + s));
  }
  return out;
}

}  // namespace covertab
