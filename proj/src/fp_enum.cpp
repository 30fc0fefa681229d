#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "arr/errors.hpp"
#include "arr/resonance.hpp"

namespace arr {

namespace {

// dense generator product tables reduced mod p: tab[j] has dim(d+1) x dim(d)
struct DenseTables {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::int64_t>> tab;  // per generator, row-major
};

DenseTables dense_tables(const OSAlgebra& os, int degree, std::int64_t p) {
  DenseTables t;
  t.cols = os.dim(degree);
  t.rows = degree + 1 > os.rank() ? 0 : os.dim(degree + 1);
  t.tab.assign(os.n(), std::vector<std::int64_t>(std::size_t(t.rows) * t.cols, 0));
  if (t.rows == 0) return t;
  for (int j = 0; j < os.n(); ++j)
    for (int s = 0; s < t.cols; ++s)
      for (const auto& [tgt, coeff] : os.generator_product(degree, j, s)) {
        Integer r = coeff % p;
        if (r < 0) r += p;
        t.tab[j][std::size_t(tgt) * t.cols + s] = static_cast<std::int64_t>(r);
      }
  return t;
}

// rank of an r x c matrix mod p, stopping once `cap` is exceeded
int rank_mod_p(std::vector<std::int64_t>& a, int rows, int cols, std::int64_t p, int cap) {
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[std::size_t(r) * cols + c] % p) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = c; j < cols; ++j)
        std::swap(a[std::size_t(piv) * cols + j], a[std::size_t(rank) * cols + j]);
    // normalize pivot row
    std::int64_t ip = 1, v = a[std::size_t(rank) * cols + c] % p;
    {  // inverse by Fermat
      std::int64_t b = v, e = p - 2;
      ip = 1;
      while (e) {
        if (e & 1) ip = ip * b % p;
        b = b * b % p;
        e >>= 1;
      }
    }
    for (int j = c; j < cols; ++j)
      a[std::size_t(rank) * cols + j] = a[std::size_t(rank) * cols + j] % p * ip % p;
    for (int r = rank + 1; r < rows; ++r) {
      std::int64_t f = a[std::size_t(r) * cols + c] % p;
      if (!f) continue;
      for (int j = c; j < cols; ++j) {
        a[std::size_t(r) * cols + j] =
            (a[std::size_t(r) * cols + j] - f * a[std::size_t(rank) * cols + j]) % p;
        if (a[std::size_t(r) * cols + j] < 0) a[std::size_t(r) * cols + j] += p;
      }
    }
    ++rank;
    if (rank > cap) return rank;
  }
  return rank;
}

struct EnumContext {
  const OSAlgebra* os;
  std::int64_t p;
  int i, depth, n;
  DenseTables below;  // degree i-1 -> i (empty when i == 0)
  DenseTables here;   // degree i -> i+1
};

// h^i(a) = dim A^i - rank(d_i) - rank(d_{i-1})
bool resonant(const EnumContext& ctx, const std::vector<std::int64_t>& a) {
  int dim_i = ctx.os->dim(ctx.i);
  int budget = dim_i - ctx.depth;  // rank_i + rank_{i-1} must be <= budget
  if (budget < 0) return false;
  int rank_below = 0;
  if (ctx.i > 0 && ctx.below.rows > 0) {
    std::vector<std::int64_t> m(std::size_t(ctx.below.rows) * ctx.below.cols, 0);
    for (int j = 0; j < ctx.n; ++j) {
      if (!a[j]) continue;
      const auto& t = ctx.below.tab[j];
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = (m[k] + a[j] * t[k]) % ctx.p;
    }
    rank_below = rank_mod_p(m, ctx.below.rows, ctx.below.cols, ctx.p, budget);
    if (rank_below > budget) return false;
  }
  int rank_here = 0;
  if (ctx.here.rows > 0) {
    std::vector<std::int64_t> m(std::size_t(ctx.here.rows) * ctx.here.cols, 0);
    for (int j = 0; j < ctx.n; ++j) {
      if (!a[j]) continue;
      const auto& t = ctx.here.tab[j];
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = (m[k] + a[j] * t[k]) % ctx.p;
    }
    rank_here = rank_mod_p(m, ctx.here.rows, ctx.here.cols, ctx.p, budget - rank_below);
  }
  return rank_below + rank_here <= budget;
}

}  // namespace

std::vector<std::vector<std::int64_t>> enumerate_fp(const OSAlgebra& os, std::int64_t prime,
                                                    int i, int depth, FpEnumOptions opt) {
  if (!is_prime(prime)) throw DomainError("enumerate_fp: modulus must be prime");
  if (i < 0 || i > os.rank()) throw DomainError("enumerate_fp: cohomological degree out of range");
  int n = os.n();

  Integer total = 1;
  for (int k = 0; k < n; ++k) total *= prime;
  Integer classes = (total - 1) / (prime - 1);
  if (!opt.projective && total > opt.budget)
    throw ResourceError("enumerate_fp: p^n = " + total.str() + " exceeds budget " +
                        std::to_string(opt.budget) +
                        "; use the projective option (one representative per scalar class)");
  if (opt.projective && classes > opt.budget)
    throw ResourceError("enumerate_fp: projective class count " + classes.str() +
                        " exceeds budget " + std::to_string(opt.budget));

  EnumContext ctx;
  ctx.os = &os;
  ctx.p = prime;
  ctx.i = i;
  ctx.depth = depth;
  ctx.n = n;
  if (i > 0) ctx.below = dense_tables(os, i - 1, prime);
  ctx.here = dense_tables(os, i, prime);

  // representatives: first nonzero coordinate equals 1; position pos means
  // a = (0,...,0,1,tail) with tail in F_p^(n-1-pos)
  auto scan_position = [&](int pos, std::vector<std::vector<std::int64_t>>& hits) {
    std::vector<std::int64_t> a(n, 0);
    a[pos] = 1;
    int tail = n - 1 - pos;
    while (true) {
      if (resonant(ctx, a)) hits.push_back(a);
      int k = tail - 1;
      for (; k >= 0; --k) {
        if (++a[pos + 1 + k] < prime) break;
        a[pos + 1 + k] = 0;
      }
      if (k < 0) break;
    }
  };

  std::vector<std::vector<std::int64_t>> reps;
  int threads = std::max(1, opt.threads);
  if (threads == 1) {
    for (int pos = 0; pos < n; ++pos) scan_position(pos, reps);
  } else {
    // positions are independent chunks; deterministic merge in position order
    std::vector<std::vector<std::vector<std::int64_t>>> results(n);
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        int pos;
        while ((pos = next.fetch_add(1)) < n) scan_position(pos, results[pos]);
      });
    for (auto& th : pool) th.join();
    for (int pos = 0; pos < n; ++pos)
      reps.insert(reps.end(), results[pos].begin(), results[pos].end());
  }

  if (opt.projective) return reps;

  // expand scalar classes and include zero (resonant iff depth <= dim A^i)
  std::vector<std::vector<std::int64_t>> out;
  if (depth <= os.dim(i)) out.push_back(std::vector<std::int64_t>(n, 0));
  for (const auto& r : reps)
    for (std::int64_t s = 1; s < prime; ++s) {
      std::vector<std::int64_t> v(n);
      for (int k = 0; k < n; ++k) v[k] = r[k] * s % prime;
      out.push_back(std::move(v));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<NonlinearityWitness> nonlinearity_witness(
    const std::vector<std::vector<std::int64_t>>& points,
    const std::vector<std::vector<std::vector<std::int64_t>>>& component_bases, std::int64_t prime,
    bool projective) {
  if (points.empty()) return std::nullopt;
  std::size_t n = points[0].size();
  PrimeField fp(prime);

  std::set<std::vector<std::int64_t>> in_set;
  std::vector<std::vector<std::int64_t>> all;
  for (const auto& pt : points) {
    if (projective) {
      for (std::int64_t s = 1; s < prime; ++s) {
        std::vector<std::int64_t> v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = pt[k] * s % prime;
        if (in_set.insert(v).second) all.push_back(v);
      }
    } else {
      if (in_set.insert(pt).second) all.push_back(pt);
    }
  }
  in_set.insert(std::vector<std::int64_t>(n, 0));  // 0 always resonant at depth 1
  std::sort(all.begin(), all.end());

  // membership bitmask per point over the given components
  std::vector<std::uint64_t> mask(all.size(), 0);
  for (std::size_t c = 0; c < component_bases.size() && c < 64; ++c)
    for (std::size_t k = 0; k < all.size(); ++k)
      if (in_row_span(fp, component_bases[c], all[k])) mask[k] |= std::uint64_t{1} << c;

  // points outside every component give the strongest witnesses; try them first
  std::vector<std::size_t> order(all.size());
  for (std::size_t k = 0; k < all.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return (mask[a] == 0) > (mask[b] == 0); });

  for (std::size_t ui : order)
    for (std::size_t vi = 0; vi < all.size(); ++vi) {
      if (mask[ui] & mask[vi]) continue;  // u, v share a component
      const auto& u = all[ui];
      const auto& v = all[vi];
      std::vector<std::int64_t> sum(n);
      for (std::size_t k = 0; k < n; ++k) sum[k] = (u[k] + v[k]) % prime;
      if (in_set.count(sum)) continue;
      return NonlinearityWitness{u, v};
    }
  return std::nullopt;
}

}  // namespace arr
