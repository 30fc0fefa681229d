#include "arr/resonance.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "arr/errors.hpp"

namespace arr {

namespace {

// random nonzero small-integer combination of the basis vectors
std::vector<Rational> random_point(const std::vector<std::vector<Rational>>& basis,
                                   std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  while (true) {
    std::vector<Rational> a(n, Rational(0));
    bool nonzero = false;
    for (const auto& b : basis) {
      int c = coeff(rng);
      if (c == 0) continue;
      for (int i = 0; i < n; ++i) a[i] += c * b[i];
    }
    for (const Rational& x : a) nonzero = nonzero || x != 0;
    if (nonzero) return a;
  }
}

}  // namespace

CertificationReport certify_subspace(const OSAlgebra& os,
                                     const std::vector<std::vector<Rational>>& basis,
                                     int samples, std::uint64_t seed, bool symbolic) {
  CertificationReport rep;
  if (basis.empty()) return rep;
  int n = os.n();
  QField q;
  OSView<QField> view(os, q);
  std::mt19937_64 rng(seed);
  rep.samples = samples;
  for (int s = 0; s < samples; ++s)
    if (view.in_resonance(random_point(basis, rng, n), 1, 1)) ++rep.samples_passed;

  if (symbolic) {
    rep.symbolic_checked = true;
    // generic point a(t) = sum_k t_k basis_k over Q(t_1..t_k); containment in
    // R^1_1 amounts to rank(mu_a: A^1 -> A^2) <= n - 2 over the function field
    int k = static_cast<int>(basis.size());
    std::vector<MultiPoly> a;
    for (int i = 0; i < n; ++i) {
      MultiPoly ai(k);
      for (int t = 0; t < k; ++t) {
        if (basis[t][i] == 0) continue;
        MultiPoly::Expo e(k, 0);
        e[t] = 1;
        ai.set_term(e, basis[t][i]);
      }
      a.push_back(std::move(ai));
    }
    int dim2 = os.dim(2);
    std::vector<std::vector<MultiPoly>> m(dim2, std::vector<MultiPoly>(n, MultiPoly(k)));
    for (int s = 0; s < n; ++s)
      for (int j = 0; j < n; ++j) {
        if (a[j].is_zero()) continue;
        for (const auto& [tgt, coeff] : os.generator_product(1, j, os.basis_index(1, FlatSet{1} << s)))
          m[tgt][s] = m[tgt][s] + a[j].scaled(Rational(coeff));
      }
    rep.symbolic_passed = poly_matrix_rank(std::move(m)) <= static_cast<std::size_t>(n - 2);
  }
  return rep;
}

std::vector<ResonanceComponent> local_components(const OSAlgebra& os, std::uint64_t seed) {
  std::vector<ResonanceComponent> out;
  const IntersectionPoset& p = os.poset();
  if (p.rank < 2) return out;
  for (int id : p.by_rank[2]) {
    FlatSet set = p.flats[id].set;
    int m = std::popcount(set);
    if (m < 3) continue;
    std::vector<int> elems;
    for (int i = 0; i < p.n; ++i)
      if (set >> i & 1) elems.push_back(i);
    ResonanceComponent comp;
    comp.kind = ResonanceComponent::Kind::local;
    comp.support = set;
    for (int k = 1; k < m; ++k) {
      std::vector<Rational> v(p.n, Rational(0));
      v[elems[0]] = 1;
      v[elems[k]] = -1;
      comp.basis.push_back(std::move(v));
    }
    comp.cert = certify_subspace(os, comp.basis, 50, seed, false);
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<ResonanceComponent> partition_component(const OSAlgebra& os, const Partition& part,
                                                      const std::vector<int>& mult,
                                                      std::uint64_t seed) {
  int n = os.n();
  FlatSet support = part.support();
  for (int h = 0; h < n; ++h)
    if ((support >> h & 1) && part.class_of(h) < 0)
      throw DomainError("partition does not cover its support");
  std::size_t q = part.classes.size();
  // class vectors u_c weighted by multiplicities; candidate = {sum t_c u_c,
  // sum t_c = 0}, spanned by u_c - u_q
  std::vector<std::vector<Rational>> u(q, std::vector<Rational>(n, Rational(0)));
  for (std::size_t c = 0; c < q; ++c)
    for (int h : part.classes[c]) u[c][h] = mult.empty() ? 1 : mult[h];
  ResonanceComponent comp;
  comp.kind = ResonanceComponent::Kind::essential;
  comp.support = support;
  comp.classes = part.classes;
  comp.multiplicities = mult;
  for (std::size_t c = 0; c + 1 < q; ++c) {
    std::vector<Rational> v(n);
    for (int i = 0; i < n; ++i) v[i] = u[c][i] - u[q - 1][i];
    comp.basis.push_back(std::move(v));
  }
  comp.cert = certify_subspace(os, comp.basis, 50, seed, true);
  if (!comp.cert.passed()) return std::nullopt;
  return comp;
}

namespace {

// spans are compared inside Q^n; a <= b iff every basis vector of a lies in
// the span of b
bool span_contained(const std::vector<std::vector<Rational>>& a,
                    const std::vector<std::vector<Rational>>& b) {
  QField q;
  for (const auto& v : a)
    if (!in_row_span(q, b, v)) return false;
  return true;
}

}  // namespace

CensusResult resonance_census_q(const OSAlgebra& os, CensusOptions opt) {
  const IntersectionPoset& p = os.poset();
  if (p.rank > 3)
    throw DomainError("resonance_census_q supports rank <= 3 only (membership tests remain "
                      "available in higher rank)");
  CensusResult out;
  std::vector<ResonanceComponent> comps = local_components(os, opt.seed);
  for (auto& c : comps) {
    // locals are certified symbolically as well for census purposes
    c.cert = certify_subspace(os, c.basis, 50, opt.seed, true);
  }

  if (p.rank == 3) {
    std::vector<Partition> parts = enumerate_neighborly(p, opt.neighborly);
    for (const Partition& part : parts) {
      auto mult = search_multiplicities(p, part);
      if (!mult) continue;  // no bounded multinet structure; nothing to certify
      auto comp = partition_component(os, part, *mult, opt.seed);
      if (comp) comps.push_back(std::move(*comp));
    }
  }

  // keep only components maximal under span containment (duplicates merge)
  std::vector<bool> drop(comps.size(), false);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = 0; j < comps.size() && !drop[i]; ++j) {
      if (i == j || drop[j]) continue;
      if (!span_contained(comps[i].basis, comps[j].basis)) continue;
      bool equal = span_contained(comps[j].basis, comps[i].basis);
      if (!equal || j < i) drop[i] = true;
    }
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (!drop[i]) out.components.push_back(std::move(comps[i]));

  // F_p audit: every enumerated resonant point must lie in the reduction of
  // some component
  out.audit_prime = opt.audit_prime;
  Integer classes = 1;
  for (int i = 0; i < os.n(); ++i) classes *= opt.audit_prime;
  classes = (classes - 1) / (opt.audit_prime - 1);
  if (classes <= opt.audit_budget) {
    out.audit_ran = true;
    FpEnumOptions fpo;
    fpo.budget = opt.audit_budget;
    fpo.projective = true;
    fpo.threads = opt.threads;
    auto points = enumerate_fp(os, opt.audit_prime, 1, 1, fpo);
    PrimeField fp(opt.audit_prime);
    std::vector<std::vector<std::vector<std::int64_t>>> reduced;
    for (const auto& comp : out.components) {
      std::vector<std::vector<std::int64_t>> basis;
      for (const auto& v : comp.basis) {
        std::vector<std::int64_t> w;
        for (const Rational& x : v) w.push_back(fp.from_rational(x));
        basis.push_back(std::move(w));
      }
      reduced.push_back(std::move(basis));
    }
    for (const auto& pt : points) {
      bool covered = false;
      for (const auto& basis : reduced) {
        if (covered) break;
        covered = in_row_span(fp, basis, pt);
      }
      if (!covered) out.audit_exceptions.push_back(pt);
    }
  }
  return out;
}

}  // namespace arr
