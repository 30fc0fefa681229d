#include "arr/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "arr/errors.hpp"
#include "arr/matrix.hpp"

namespace arr {

namespace {

// Basis of the intersection subspace of the hyperplanes in `set`.
std::vector<std::vector<Rational>> subspace_of(const Arrangement& a, FlatSet set) {
  QField q;
  std::vector<int> idx;
  for (int i = 0; i < a.n(); ++i)
    if (set >> i & 1) idx.push_back(i);
  Matrix<QField> m(q, idx.size(), a.ambient_dim());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (int c = 0; c < a.ambient_dim(); ++c) m(r, c) = a.normals()[idx[r]][c];
  return m.nullspace();
}

bool orthogonal_to_all(const std::vector<Rational>& normal,
                       const std::vector<std::vector<Rational>>& basis) {
  for (const auto& b : basis) {
    Rational dot = 0;
    for (std::size_t i = 0; i < normal.size(); ++i) dot += normal[i] * b[i];
    if (dot != 0) return false;
  }
  return true;
}

void compute_mobius(IntersectionPoset& p) {
  // mu(bottom) = 1; sum over lower intervals vanishes elsewhere.
  for (auto& rk : p.by_rank)
    for (int id : rk) {
      Flat& f = p.flats[id];
      if (f.rank == 0) {
        f.mobius = 1;
        continue;
      }
      long long s = 0;
      for (const Flat& g : p.flats)
        if (g.rank < f.rank && (g.set & ~f.set) == 0) s += g.mobius;
      f.mobius = -s;
    }
}

void finish(IntersectionPoset& p) {
  std::sort(p.flats.begin(), p.flats.end(), [](const Flat& a, const Flat& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.set < b.set;
  });
  p.rank = p.flats.back().rank;
  p.by_rank.assign(p.rank + 1, {});
  for (int i = 0; i < static_cast<int>(p.flats.size()); ++i)
    p.by_rank[p.flats[i].rank].push_back(i);
  compute_mobius(p);
}

IntersectionPoset build_realized(const Arrangement& a) {
  IntersectionPoset p;
  p.n = a.n();
  p.ambient_dim = a.ambient_dim();

  std::map<FlatSet, Flat> found;
  Flat bottom;
  bottom.set = 0;
  bottom.rank = 0;
  bottom.subspace_basis = subspace_of(a, 0);
  found.emplace(0, bottom);

  std::vector<FlatSet> frontier = {0};
  int rank = 0;
  while (!frontier.empty()) {
    ++rank;
    std::map<FlatSet, Flat> next;
    for (FlatSet fs : frontier) {
      for (int h = 0; h < a.n(); ++h) {
        if (fs >> h & 1) continue;
        FlatSet cand = fs | (FlatSet{1} << h);
        auto basis = subspace_of(a, cand);
        if (static_cast<int>(a.ambient_dim() - basis.size()) != rank) continue;
        FlatSet closed = 0;
        for (int g = 0; g < a.n(); ++g)
          if (orthogonal_to_all(a.normals()[g], basis)) closed |= FlatSet{1} << g;
        if (next.count(closed) || found.count(closed)) continue;
        Flat f;
        f.set = closed;
        f.rank = rank;
        f.subspace_basis = std::move(basis);
        next.emplace(closed, std::move(f));
      }
    }
    frontier.clear();
    for (auto& [s, f] : next) {
      frontier.push_back(s);
      found.emplace(s, std::move(f));
    }
  }

  for (auto& [s, f] : found) p.flats.push_back(std::move(f));
  finish(p);
  return p;
}

IntersectionPoset build_matroid(const Arrangement& a) {
  // rank-3 simple matroid given by its long rank-2 flats; remaining pairs
  // are independent and close to themselves.
  IntersectionPoset p;
  p.n = a.n();
  p.ambient_dim = 3;

  p.flats.push_back(Flat{0, 0, 0, {}});
  FlatSet all = a.n() == 31 ? 0x7fffffffu : (FlatSet{1} << a.n()) - 1;
  for (int i = 0; i < a.n(); ++i) p.flats.push_back(Flat{FlatSet{1} << i, 1, 0, {}});

  FlatSet covered = 0;
  std::vector<FlatSet> linemasks;
  for (const auto& L : a.matroid_lines()) {
    FlatSet m = 0;
    for (int e : L) m |= FlatSet{1} << e;
    linemasks.push_back(m);
    p.flats.push_back(Flat{m, 2, 0, {}});
  }
  for (int i = 0; i < a.n(); ++i)
    for (int j = i + 1; j < a.n(); ++j) {
      FlatSet pair = (FlatSet{1} << i) | (FlatSet{1} << j);
      bool inside = false;
      for (FlatSet m : linemasks)
        if ((pair & ~m) == 0) inside = true;
      if (!inside) p.flats.push_back(Flat{pair, 2, 0, {}});
    }
  p.flats.push_back(Flat{all, 3, 0, {}});
  finish(p);
  return p;
}

}  // namespace

int IntersectionPoset::flat_id(FlatSet set) const {
  for (int i = 0; i < static_cast<int>(flats.size()); ++i)
    if (flats[i].set == set) return i;
  return -1;
}

int IntersectionPoset::closure_id(FlatSet subset) const {
  for (int i = 0; i < static_cast<int>(flats.size()); ++i)
    if ((subset & ~flats[i].set) == 0) return i;  // flats sorted by rank
  throw DomainError("closure_id: no containing flat (corrupt poset)");
}

bool IntersectionPoset::leq(int x, int y) const {
  return (flats[x].set & ~flats[y].set) == 0;
}

int IntersectionPoset::join(int x, int y) const {
  return closure_id(flats[x].set | flats[y].set);
}

int IntersectionPoset::meet(int x, int y) const {
  int id = flat_id(flats[x].set & flats[y].set);
  if (id < 0) throw DomainError("meet: intersection of closed sets is not a flat");
  return id;
}

std::vector<FlatSet> IntersectionPoset::induced_rank2_flats(FlatSet support) const {
  std::vector<FlatSet> out;
  if (by_rank.size() <= 2) return out;
  for (int id : by_rank[2]) {
    FlatSet s = flats[id].set & support;
    if (std::popcount(s) >= 2) out.push_back(s);
  }
  return out;
}

std::vector<long long> IntersectionPoset::flat_census() const {
  std::vector<long long> c;
  for (const auto& rk : by_rank) c.push_back(static_cast<long long>(rk.size()));
  return c;
}

std::vector<Integer> IntersectionPoset::whitney_abs() const {
  std::vector<Integer> w(rank + 1, Integer(0));
  for (const Flat& f : flats) w[f.rank] += f.mobius < 0 ? -f.mobius : f.mobius;
  return w;
}

IntersectionPoset build_poset(const Arrangement& a) {
  if (a.n() == 0) {
    IntersectionPoset p;
    p.n = 0;
    p.ambient_dim = a.ambient_dim();
    p.flats.push_back(Flat{0, 0, 1, {}});
    p.rank = 0;
    p.by_rank = {{0}};
    return p;
  }
  return a.is_realized() ? build_realized(a) : build_matroid(a);
}

std::vector<Integer> characteristic_polynomial(const IntersectionPoset& p) {
  std::vector<Integer> chi(p.ambient_dim + 1, Integer(0));
  for (const Flat& f : p.flats) chi[p.ambient_dim - f.rank] += f.mobius;
  return chi;
}

Integer eval_poly(const std::vector<Integer>& coeffs, const Integer& t) {
  Integer v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * t + *it;
  return v;
}

RegionCount count_regions(const Arrangement& a) {
  if (!a.is_realized()) throw DomainError("count_regions requires rational normals");
  IntersectionPoset p = build_poset(a);
  std::vector<Integer> chi = characteristic_polynomial(p);
  Integer r = eval_poly(chi, Integer(-1));
  if (a.ambient_dim() % 2) r = -r;
  // essentialize: divide by t^(l - rank), then evaluate at 1
  std::vector<Integer> ess(chi.begin() + (p.ambient_dim - p.rank), chi.end());
  Integer b = eval_poly(ess, Integer(1));
  if (b < 0) b = -b;
  return RegionCount{r, b};
}

std::optional<std::vector<int>> supersolvable_exponents(const IntersectionPoset& p) {
  int nf = static_cast<int>(p.flats.size());
  std::vector<bool> modular(nf, false);
  for (int x = 0; x < nf; ++x) {
    bool ok = true;
    for (int y = 0; y < nf && ok; ++y)
      ok = p.flats[x].rank + p.flats[y].rank ==
           p.flats[p.join(x, y)].rank + p.flats[p.meet(x, y)].rank;
    modular[x] = ok;
  }
  // depth-first search for a maximal chain of modular flats
  std::vector<int> chain = {0};  // bottom flat (rank 0, empty set)
  auto dfs = [&](auto&& self, int cur) -> bool {
    if (p.flats[cur].rank == p.rank) return true;
    for (int id : p.by_rank[p.flats[cur].rank + 1]) {
      if (!modular[id] || !p.leq(cur, id)) continue;
      chain.push_back(id);
      if (self(self, id)) return true;
      chain.pop_back();
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  std::vector<int> exps;
  for (std::size_t i = 1; i < chain.size(); ++i)
    exps.push_back(std::popcount(p.flats[chain[i]].set) - std::popcount(p.flats[chain[i - 1]].set));
  std::sort(exps.begin(), exps.end());
  return exps;
}

std::string poly_to_string(const std::vector<Integer>& coeffs, const std::string& var) {
  std::string out;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    const Integer& c = coeffs[d];
    if (c == 0) continue;
    Integer ab = c < 0 ? Integer(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (d == 0)
      out += ab.str();
    else {
      if (ab != 1) out += ab.str() + "*";
      out += var;
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace arr
