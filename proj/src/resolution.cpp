#include "arr/resolution.hpp"

#include <algorithm>
#include <bit>

#include "arr/errors.hpp"
#include "arr/matrix.hpp"

namespace arr {

namespace {

using SparseVec = std::vector<std::pair<int, Rational>>;  // over a ring-degree basis

// Multiplication tables of a finite-dimensional graded algebra with a
// monomial basis in each degree.
struct Ring {
  int top = 0;
  std::vector<int> dim;                                   // 0..top
  std::vector<std::vector<std::vector<SparseVec>>> mult;  // [d1][d2][i1*dim2+i2]
};

Ring ring_from_os(const OSAlgebra& os) {
  Ring r;
  r.top = os.rank();
  for (int d = 0; d <= r.top; ++d) r.dim.push_back(os.dim(d));
  r.mult.assign(r.top + 1, {});
  for (int d1 = 0; d1 <= r.top; ++d1) {
    r.mult[d1].assign(r.top + 1 - d1, {});
    for (int d2 = 0; d2 + d1 <= r.top; ++d2) {
      auto& tab = r.mult[d1][d2];
      tab.assign(static_cast<std::size_t>(r.dim[d1]) * r.dim[d2], {});
      for (int i1 = 0; i1 < r.dim[d1]; ++i1)
        for (int i2 = 0; i2 < r.dim[d2]; ++i2) {
          FlatSet a = os.basis(d1)[i1], b = os.basis(d2)[i2];
          if (a & b) continue;
          int sign = OSAlgebra::shuffle_sign(a, b);
          SparseVec v;
          for (const auto& [mono, coeff] : os.normal_form(a | b))
            v.emplace_back(os.basis_index(d1 + d2, mono), Rational(coeff) * sign);
          std::sort(v.begin(), v.end());
          tab[static_cast<std::size_t>(i1) * r.dim[d2] + i2] = std::move(v);
        }
    }
  }
  return r;
}

// exterior algebra on n generators; basis of degree d = all d-subsets
Ring exterior_ring(int n) {
  Ring r;
  r.top = n;
  std::vector<std::vector<FlatSet>> basis(n + 1);
  std::vector<std::unordered_map<FlatSet, int>> index(n + 1);
  for (FlatSet s = 0; s < (FlatSet{1} << n); ++s) basis[std::popcount(s)].push_back(s);
  for (int d = 0; d <= n; ++d) {
    std::sort(basis[d].begin(), basis[d].end());
    r.dim.push_back(static_cast<int>(basis[d].size()));
    for (int i = 0; i < r.dim[d]; ++i) index[d][basis[d][i]] = i;
  }
  r.mult.assign(n + 1, {});
  for (int d1 = 0; d1 <= n; ++d1) {
    r.mult[d1].assign(n + 1 - d1, {});
    for (int d2 = 0; d1 + d2 <= n; ++d2) {
      auto& tab = r.mult[d1][d2];
      tab.assign(static_cast<std::size_t>(r.dim[d1]) * r.dim[d2], {});
      for (int i1 = 0; i1 < r.dim[d1]; ++i1)
        for (int i2 = 0; i2 < r.dim[d2]; ++i2) {
          FlatSet a = basis[d1][i1], b = basis[d2][i2];
          if (a & b) continue;
          int sign = OSAlgebra::shuffle_sign(a, b);
          tab[static_cast<std::size_t>(i1) * r.dim[d2] + i2] = {
              {index[d1 + d2][a | b], Rational(sign)}};
        }
    }
  }
  return r;
}

// ring element: degree + coefficients over that degree's basis
struct RingElem {
  int degree = 0;
  SparseVec coords;
};

// free graded module with a map to the previous one; entries act by right
// multiplication so the maps are left R-linear
struct FreeModule {
  std::vector<int> gen_degree;
  // map entries: entry[a][b] nonzero components, a = our generator,
  // b = generator of the previous module
  std::vector<std::vector<RingElem>> entry;
};

// component index bookkeeping: basis of module component at internal degree d
struct Component {
  std::vector<std::pair<int, int>> items;  // (generator a, basis index m)
  std::vector<int> offset;                 // per generator
};

Component component(const Ring& r, const std::vector<int>& gens, int d) {
  Component c;
  c.offset.assign(gens.size(), -1);
  for (std::size_t a = 0; a < gens.size(); ++a) {
    int e = d - gens[a];
    if (e < 0 || e > r.top || r.dim[e] == 0) continue;
    c.offset[a] = static_cast<int>(c.items.size());
    for (int m = 0; m < r.dim[e]; ++m) c.items.emplace_back(static_cast<int>(a), m);
  }
  return c;
}

// image of ring basis element (deg, m) under right multiplication by e
void accumulate_product(const Ring& r, int deg, int m, const RingElem& e, const Rational& scale,
                        int out_offset, std::vector<Rational>& out) {
  if (e.coords.empty() || deg + e.degree > r.top) return;
  for (const auto& [j, cj] : e.coords)
    for (const auto& [k, ck] :
         r.mult[deg][e.degree][static_cast<std::size_t>(m) * r.dim[e.degree] + j])
      out[out_offset + k] += scale * cj * ck;
}

// dense incremental echelon over Q for minimal-generator selection
struct DenseEchelon {
  std::vector<std::vector<Rational>> rows;  // reduced, each with leading 1
  std::vector<int> lead;
  // returns true when v was independent (and absorbs it)
  bool insert(std::vector<Rational> v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (v[lead[r]] == 0) continue;
      Rational f = v[lead[r]];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
    }
    int l = -1;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        l = static_cast<int>(j);
        break;
      }
    if (l < 0) return false;
    Rational inv = Rational(1) / v[l];
    for (auto& x : v) x *= inv;
    rows.push_back(std::move(v));
    lead.push_back(l);
    return true;
  }
};

// One minimalization-and-syzygy step: given module F with its map (or the
// designated initial kernel), produce the next module whose generators
// minimally generate the kernel in internal degrees <= N.
struct Resolver {
  const Ring* ring;
  int N;
  std::vector<FreeModule> modules;  // modules[0] = F_0 (no map)
  BettiTable betti;

  // kernel of the map F_i -> F_(i-1) in internal degree d, as vectors over
  // component(F_i, d); for i = 0 the caller supplies the kernel directly
  std::vector<std::vector<Rational>> kernel(int i, int d,
                                            const Component& cf) {
    const FreeModule& F = modules[i];
    const FreeModule& G = modules[i - 1];
    Component cg = component(*ring, G.gen_degree, d);
    QField q;
    Matrix<QField> m(q, cg.items.size(), cf.items.size());
    std::vector<Rational> col(cg.items.size());
    for (std::size_t c = 0; c < cf.items.size(); ++c) {
      auto [a, mono] = cf.items[c];
      std::fill(col.begin(), col.end(), Rational(0));
      int mdeg = d - F.gen_degree[a];
      for (std::size_t b = 0; b < G.gen_degree.size(); ++b) {
        if (cg.offset[b] < 0) continue;
        accumulate_product(*ring, mdeg, mono, F.entry[a][b], Rational(1), cg.offset[b], col);
      }
      for (std::size_t rr = 0; rr < col.size(); ++rr) m(rr, c) = col[rr];
    }
    return m.nullspace();
  }

  // run one step: from module index i (>= 0), find minimal generators of the
  // kernel (or of the supplied initial kernel when i == 0) and append F_(i+1)
  void step(int i, const std::vector<std::vector<std::vector<Rational>>>* initial_kernel) {
    const FreeModule& F = modules[i];
    FreeModule next;
    std::vector<std::vector<Rational>> genvec;  // flattened by degree discovery
    std::vector<int> gendeg;

    for (int d = 0; d <= N; ++d) {
      Component cf = component(*ring, F.gen_degree, d);
      if (cf.items.empty()) continue;
      std::vector<std::vector<Rational>> ker;
      if (initial_kernel) {
        ker = (*initial_kernel)[d];
      } else {
        ker = kernel(i, d, cf);
      }
      if (ker.empty()) continue;
      // span of R_+ times the generators already chosen
      DenseEchelon ech;
      for (std::size_t g = 0; g < genvec.size(); ++g) {
        int e = d - gendeg[g];
        if (e <= 0 || e > ring->top || ring->dim[e] == 0) continue;
        Component cg = component(*ring, F.gen_degree, gendeg[g]);
        for (int rb = 0; rb < ring->dim[e]; ++rb) {
          // r_b * g, expanded in the degree-d component
          std::vector<Rational> v(cf.items.size(), Rational(0));
          for (std::size_t idx = 0; idx < cg.items.size(); ++idx) {
            auto [a, mono] = cg.items[idx];
            if (genvec[g][idx] == 0) continue;
            // (basis rb of degree e) * (basis mono of degree gendeg[g]-s_a)
            int mdeg = gendeg[g] - F.gen_degree[a];
            if (e + mdeg > ring->top || cf.offset[a] < 0) continue;
            for (const auto& [k, ck] :
                 ring->mult[e][mdeg][static_cast<std::size_t>(rb) * ring->dim[mdeg] + mono])
              v[cf.offset[a] + k] += genvec[g][idx] * ck;
          }
          ech.insert(std::move(v));
        }
      }
      for (auto& kv : ker) {
        if (ech.insert(kv)) {
          genvec.push_back(kv);
          gendeg.push_back(d);
        }
      }
    }

    // assemble F_(i+1)
    next.gen_degree = gendeg;
    next.entry.assign(gendeg.size(), std::vector<RingElem>(F.gen_degree.size()));
    for (std::size_t g = 0; g < genvec.size(); ++g) {
      Component cf = component(*ring, F.gen_degree, gendeg[g]);
      for (std::size_t a = 0; a < F.gen_degree.size(); ++a) {
        RingElem e;
        e.degree = gendeg[g] - F.gen_degree[a];
        if (cf.offset[a] < 0 || e.degree < 0) {
          e.degree = std::max(e.degree, 0);
          next.entry[g][a] = e;
          continue;
        }
        for (int m = 0; m < ring->dim[e.degree]; ++m) {
          const Rational& c = genvec[g][cf.offset[a] + m];
          if (c != 0) e.coords.emplace_back(m, c);
        }
        next.entry[g][a] = std::move(e);
      }
    }
    std::map<int, long long> b;
    for (int dgr : gendeg) b[dgr]++;
    betti.push_back(std::move(b));
    modules.push_back(std::move(next));
  }
};

}  // namespace

std::vector<Integer> diagonal_tor_series(const OSAlgebra& os, int N) {
  if (N < 0) throw DomainError("diagonal_tor_series: N >= 0 required");
  if (N > 6) throw ResourceError("diagonal_tor_series: truncation above degree 6 exceeds budget");
  Ring ring = ring_from_os(os);

  Resolver res;
  res.ring = &ring;
  res.N = N;
  FreeModule f0;
  f0.gen_degree = {0};
  res.modules.push_back(std::move(f0));
  res.betti.push_back({{0, 1}});

  // initial kernel: the augmentation ideal, i.e. everything in degrees >= 1
  std::vector<std::vector<std::vector<Rational>>> aug(N + 1);
  for (int d = 1; d <= N && d <= ring.top; ++d) {
    int dim = ring.dim[d];
    for (int m = 0; m < dim; ++m) {
      std::vector<Rational> v(dim, Rational(0));
      v[m] = 1;
      aug[d].push_back(std::move(v));
    }
  }
  res.step(0, &aug);
  for (int i = 1; i < N; ++i) res.step(i, nullptr);

  std::vector<Integer> out;
  for (int i = 0; i <= N; ++i) {
    long long v = 0;
    if (i < static_cast<int>(res.betti.size())) {
      auto it = res.betti[i].find(i);
      if (it != res.betti[i].end()) v = it->second;
    }
    out.push_back(v);
  }
  return out;
}

std::vector<long long> linear_strand_over_e(const OSAlgebra& os, int N) {
  if (os.n() > 8)
    throw ResourceError("linear_strand_over_e: exterior algebra limited to n <= 8 generators");
  if (N > 5) throw ResourceError("linear_strand_over_e: truncation above degree 5 exceeds budget");
  Ring ring = exterior_ring(os.n());

  Resolver res;
  res.ring = &ring;
  res.N = N;
  FreeModule f0;
  f0.gen_degree = {0};
  res.modules.push_back(std::move(f0));
  res.betti.push_back({{0, 1}});

  // initial kernel: the OS ideal I = ker(E -> A), degree by degree
  std::vector<std::vector<std::vector<Rational>>> ideal(N + 1);
  QField q;
  for (int d = 1; d <= N && d <= ring.top; ++d) {
    int rows = d <= os.rank() ? os.dim(d) : 0;
    Matrix<QField> proj(q, rows, ring.dim[d]);
    // basis of E_d are the d-subsets in mask order, matching exterior_ring
    std::vector<FlatSet> ebasis;
    for (FlatSet s = 0; s < (FlatSet{1} << os.n()); ++s)
      if (std::popcount(s) == d) ebasis.push_back(s);
    std::sort(ebasis.begin(), ebasis.end());
    for (int c = 0; c < static_cast<int>(ebasis.size()); ++c)
      for (const auto& [mono, coeff] : os.normal_form(ebasis[c]))
        proj(os.basis_index(d, mono), c) = Rational(coeff);
    ideal[d] = proj.nullspace();
  }
  res.step(0, &ideal);
  for (int i = 1; i + 1 < N; ++i) res.step(i, nullptr);

  std::vector<long long> out;  // Tor^E_(k-1)(A, Q)_k for k = 2..N
  for (int k = 2; k <= N; ++k) {
    long long v = 0;
    if (k - 1 < static_cast<int>(res.betti.size())) {
      auto it = res.betti[k - 1].find(k);
      if (it != res.betti[k - 1].end()) v = it->second;
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace arr
