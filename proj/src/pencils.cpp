#include "arr/pencils.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "arr/errors.hpp"
#include "arr/matrix.hpp"

namespace arr {

Partition Partition::make(std::vector<std::vector<int>> classes, int n) {
  if (classes.size() < 3) throw DomainError("a partition needs at least three classes");
  FlatSet seen = 0;
  for (auto& K : classes) {
    if (K.empty()) throw DomainError("empty partition class");
    std::sort(K.begin(), K.end());
    for (int h : K) {
      if (h < 0 || h >= n) throw DomainError("partition index out of range");
      if (seen >> h & 1) throw DomainError("partition classes are not disjoint");
      seen |= FlatSet{1} << h;
    }
  }
  Partition p;
  p.classes = std::move(classes);
  return p;
}

FlatSet Partition::support() const {
  FlatSet s = 0;
  for (const auto& K : classes)
    for (int h : K) s |= FlatSet{1} << h;
  return s;
}

int Partition::class_of(int h) const {
  for (int c = 0; c < static_cast<int>(classes.size()); ++c)
    for (int x : classes[c])
      if (x == h) return c;
  return -1;
}

bool is_neighborly(const IntersectionPoset& p, const Partition& part) {
  FlatSet support = part.support();
  if ((support & ~((p.n == 31 ? 0x7fffffffu : (FlatSet{1} << p.n) - 1))) != 0)
    throw DomainError("partition support not inside the arrangement");
  std::vector<FlatSet> classmask(part.classes.size(), 0);
  for (std::size_t c = 0; c < part.classes.size(); ++c)
    for (int h : part.classes[c]) classmask[c] |= FlatSet{1} << h;
  for (FlatSet flat : p.induced_rank2_flats(support)) {
    for (FlatSet cm : classmask) {
      FlatSet inside = flat & cm;
      if (std::popcount(inside) != 1) continue;
      FlatSet rest = flat & ~cm;
      if (std::popcount(rest) < 2) continue;
      for (FlatSet other : classmask)
        if (other != cm && (rest & ~other) == 0) return false;
    }
  }
  return true;
}

bool eligible_support(const IntersectionPoset& p, FlatSet support) {
  std::vector<int> elems;
  for (int i = 0; i < p.n; ++i)
    if (support >> i & 1) elems.push_back(i);
  std::vector<FlatSet> points;
  for (FlatSet f : p.induced_rank2_flats(support))
    if (std::popcount(f) >= 3) points.push_back(f);
  QField q;
  Matrix<QField> m(q, points.size(), elems.size());
  for (std::size_t r = 0; r < points.size(); ++r)
    for (std::size_t c = 0; c < elems.size(); ++c)
      if (points[r] >> elems[c] & 1) m(r, c) = 1;
  auto basis = m.nullspace();
  if (basis.size() < 2) return false;
  for (std::size_t c = 0; c < elems.size(); ++c) {
    bool covered = false;
    for (const auto& v : basis)
      if (v[c] != 0) covered = true;
    if (!covered) return false;
  }
  return true;
}

std::vector<Partition> enumerate_neighborly(const IntersectionPoset& p, NeighborlyOptions opt) {
  if (p.rank != 3) throw DomainError("enumerate_neighborly requires a rank-3 arrangement");
  int n = p.n;
  int max_support = opt.max_support > 0 ? opt.max_support : n;
  int max_classes = opt.max_classes > 0 ? opt.max_classes : n;
  long long nodes = 0;
  std::vector<Partition> out;

  FlatSet full = n == 31 ? 0x7fffffffu : (FlatSet{1} << n) - 1;
  for (FlatSet support = 1; support <= full; ++support) {
    int size = std::popcount(support);
    if (size < 3 || size > max_support) continue;
    if (!eligible_support(p, support)) continue;

    std::vector<int> elems;
    for (int i = 0; i < n; ++i)
      if (support >> i & 1) elems.push_back(i);

    // induced points, checked as soon as their last element is placed
    std::vector<FlatSet> flats = p.induced_rank2_flats(support);
    std::vector<std::vector<int>> flats_by_last(elems.size());
    for (std::size_t fi = 0; fi < flats.size(); ++fi) {
      int last = 0;
      for (std::size_t e = 0; e < elems.size(); ++e)
        if (flats[fi] >> elems[e] & 1) last = static_cast<int>(e);
      flats_by_last[last].push_back(static_cast<int>(fi));
    }

    std::vector<int> assign(elems.size(), -1);
    std::vector<int> count;  // scratch: lines per class at a flat

    // neighborly violation: one class meets the point in exactly one line
    // while the remaining >= 2 lines all lie in a single second class
    auto violates_neighborly = [&](int classes_at, int total, int used) {
      if (classes_at != 2 || total < 3) return false;
      for (int c = 0; c < used; ++c)
        if (count[c] == 1) return true;
      return false;
    };
    auto dfs = [&](auto&& self, int pos, int used, bool saw_interclass) -> void {
      if (++nodes > opt.node_budget)
        throw ResourceError("enumerate_neighborly: search exceeded the node ceiling (" +
                            std::to_string(opt.node_budget) + ")");
      if (pos == static_cast<int>(elems.size())) {
        if (used < 3) return;
        if (static_cast<long long>(out.size()) >= opt.result_budget)
          throw ResourceError("enumerate_neighborly: candidate partitions exceed the ceiling (" +
                              std::to_string(opt.result_budget) + " found)");
        std::vector<std::vector<int>> classes(used);
        for (std::size_t e = 0; e < elems.size(); ++e) classes[assign[e]].push_back(elems[e]);
        out.push_back(Partition::make(std::move(classes), n));
        return;
      }
      int limit = std::min(used + 1, max_classes);
      for (int c = 0; c < limit; ++c) {
        // a multinet has its full class set at every inter-class point, so no
        // class may be born after an inter-class point has completed
        if (opt.require_multinet_balance && saw_interclass && c == used) break;
        assign[pos] = c;
        int next_used = std::max(used, c + 1);
        bool ok = true;
        bool inter = saw_interclass;
        for (int fi : flats_by_last[pos]) {
          count.assign(next_used, 0);
          int total = 0;
          for (int e = 0; e <= pos; ++e)
            if (flats[fi] >> elems[e] & 1) {
              ++count[assign[e]];
              ++total;
            }
          int classes_at = 0;
          for (int k = 0; k < next_used; ++k) classes_at += count[k] > 0;
          if (classes_at >= 2) {
            inter = true;
            if (violates_neighborly(classes_at, total, next_used)) {
              ok = false;
              break;
            }
            if (opt.require_multinet_balance && classes_at < next_used) {
              ok = false;  // some existing class misses this inter-class point
              break;
            }
          }
        }
        if (ok) self(self, pos + 1, next_used, inter);
      }
      assign[pos] = -1;
    };
    dfs(dfs, 0, 0, false);
  }
  return out;
}

MultinetReport check_multinet(const IntersectionPoset& p, const Multinet& m) {
  MultinetReport rep;
  const Partition& part = m.partition;
  FlatSet support = part.support();
  if (static_cast<int>(m.mult.size()) != p.n)
    throw DomainError("multinet multiplicity vector must have length n");
  for (int i = 0; i < p.n; ++i)
    if ((support >> i & 1) && m.mult[i] < 1)
      throw DomainError("multiplicities must be >= 1 on the support");

  std::vector<long long> degree(part.classes.size(), 0);
  for (std::size_t c = 0; c < part.classes.size(); ++c)
    for (int h : part.classes[c]) degree[c] += m.mult[h];
  for (std::size_t c = 1; c < part.classes.size(); ++c)
    if (degree[c] != degree[0])
      rep.violations.push_back("class " + std::to_string(c + 1) + " has degree " +
                               std::to_string(degree[c]) + " != " + std::to_string(degree[0]));

  for (FlatSet flat : p.induced_rank2_flats(support)) {
    std::vector<long long> count(part.classes.size(), 0);
    int classes_at = 0;
    for (int h = 0; h < p.n; ++h)
      if (flat >> h & 1) count[part.class_of(h)] += m.mult[h];
    for (long long c : count) classes_at += c > 0;
    if (classes_at < 2) continue;  // intra-class point
    for (std::size_t c = 1; c < count.size(); ++c)
      if (count[c] != count[0]) {
        std::string desc = "inter-class point {";
        bool first = true;
        for (int h = 0; h < p.n; ++h)
          if (flat >> h & 1) {
            desc += (first ? "" : ",") + std::to_string(h + 1);
            first = false;
          }
        desc += "} has unequal class counts";
        rep.violations.push_back(desc);
        break;
      }
  }
  rep.ok = rep.violations.empty();
  if (rep.ok) rep.class_degree = static_cast<int>(degree[0]);
  return rep;
}

std::optional<std::vector<int>> search_multiplicities(const IntersectionPoset& p,
                                                      const Partition& part, int cap) {
  std::vector<int> elems;
  FlatSet support = part.support();
  for (int i = 0; i < p.n; ++i)
    if (support >> i & 1) elems.push_back(i);
  if (elems.size() > 12) return std::nullopt;  // bounded search only

  std::vector<int> mult(p.n, 1);
  Multinet m{part, mult, 0};
  auto rep = check_multinet(p, m);
  if (rep.ok) return mult;

  // exhaustive over support assignments with class-degree pruning
  std::vector<int> order;  // support elements grouped by class
  for (const auto& K : part.classes)
    for (int h : K) order.push_back(h);
  std::vector<int> class_end;  // prefix length at which each class completes
  {
    std::size_t acc = 0;
    for (const auto& K : part.classes) {
      acc += K.size();
      class_end.push_back(static_cast<int>(acc));
    }
  }
  std::vector<int> cur(order.size(), 1);
  long long target = -1;
  auto dfs = [&](auto&& self, int pos, long long acc_degree, int cls) -> bool {
    if (pos == static_cast<int>(order.size())) {
      std::vector<int> full(p.n, 1);
      for (std::size_t i = 0; i < order.size(); ++i) full[order[i]] = cur[i];
      Multinet cand{part, full, 0};
      if (check_multinet(p, cand).ok) {
        mult = full;
        return true;
      }
      return false;
    }
    for (int v = 1; v <= cap; ++v) {
      cur[pos] = v;
      long long d = acc_degree + v;
      bool complete = pos + 1 == class_end[cls];
      if (target >= 0) {
        if (d > target) break;
        if (complete && d != target) continue;
      }
      long long save = target;
      if (complete && cls == 0) target = d;
      if (self(self, pos + 1, complete ? 0 : d, complete ? cls + 1 : cls)) return true;
      target = save;
    }
    return false;
  };
  if (dfs(dfs, 0, 0, 0)) return mult;
  return std::nullopt;
}

EssentialForms essential_forms(const Arrangement& a) {
  if (!a.is_realized()) throw DomainError("essential forms require a rational realization");
  QField q;
  Matrix<QField> m(q, a.n(), a.ambient_dim());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.ambient_dim(); ++j) m(i, j) = a.normals()[i][j];
  Matrix<QField> red = m;
  auto pivots = red.rref();
  int r = static_cast<int>(pivots.size());

  EssentialForms out;
  if (r == 3)
    out.var_names = {"x", "y", "z"};
  else
    for (int k = 0; k < r; ++k) out.var_names.push_back("x" + std::to_string(k + 1));

  if (r == a.ambient_dim()) {
    for (int i = 0; i < a.n(); ++i) out.forms.push_back(MultiPoly::linear_form(a.normals()[i]));
    return out;
  }
  // express each normal over the rref basis rows: coefficients are read off
  // at the pivot columns since the basis rows have unit pivots
  for (int i = 0; i < a.n(); ++i) {
    std::vector<Rational> coeffs(r);
    std::vector<Rational> residual = a.normals()[i];
    for (int k = 0; k < r; ++k) {
      coeffs[k] = residual[pivots[k]];
      if (coeffs[k] == 0) continue;
      for (int j = 0; j < a.ambient_dim(); ++j) residual[j] -= coeffs[k] * red(k, j);
    }
    for (const Rational& x : residual)
      if (x != 0) throw DomainError("essential_forms: normal outside row space (corrupt input)");
    out.forms.push_back(MultiPoly::linear_form(coeffs));
  }
  return out;
}

PencilOutcome pencil_certificate(const Arrangement& a, const IntersectionPoset& p,
                                 const Multinet& m) {
  PencilOutcome out;
  if (!a.is_realized()) {
    out.error = "pencil certificates require a rational realization (abstract matroid given)";
    return out;
  }
  auto rep = check_multinet(p, m);
  if (!rep.ok) {
    out.error = "not a multinet: " + rep.violations.front();
    return out;
  }
  EssentialForms ef = essential_forms(a);
  std::vector<MultiPoly> q_polys;
  for (const auto& K : m.partition.classes) {
    MultiPoly q = MultiPoly::constant(static_cast<int>(ef.var_names.size()), 1);
    for (int h : K) q = q * ef.forms[h].pow(m.mult[h]);
    q_polys.push_back(std::move(q));
  }
  for (std::size_t i = 0; i < q_polys.size(); ++i)
    for (std::size_t j = i + 1; j < q_polys.size(); ++j)
      if (MultiPoly::proportional(q_polys[i], q_polys[j])) {
        out.error = "degenerate: class curves " + std::to_string(i + 1) + " and " +
                    std::to_string(j + 1) + " are proportional (span dimension 1)";
        return out;
      }
  std::size_t span = poly_span_dimension(q_polys);
  if (span != 2) {
    out.error = span < 2 ? "degenerate: class curves span dimension 1"
                         : "no pencil: class curves span dimension " + std::to_string(span);
    return out;
  }
  auto dep = poly_linear_dependence(q_polys);
  if (!dep) {
    out.error = "no pencil: class curves are linearly independent";
    return out;
  }
  if (q_polys.size() == 3)
    for (const Rational& c : *dep)
      if (c == 0) {
        out.error = "degenerate dependency with a zero coefficient";
        return out;
      }
  PencilCertificate cert;
  cert.class_polys = std::move(q_polys);
  cert.var_names = ef.var_names;
  cert.dependency = *dep;
  cert.degree = rep.class_degree;
  out.certificate = std::move(cert);
  return out;
}

std::vector<std::pair<Rational, Rational>> singular_fibers(const PencilCertificate& cert) {
  // coordinates of each Q_j in the basis (Q_1, Q_2) of the pencil
  std::vector<std::pair<Rational, Rational>> out;
  for (std::size_t j = 0; j < cert.class_polys.size(); ++j) {
    if (j == 0) {
      out.emplace_back(1, 0);
      continue;
    }
    if (j == 1) {
      out.emplace_back(0, 1);
      continue;
    }
    auto dep = poly_linear_dependence({cert.class_polys[0], cert.class_polys[1],
                                       cert.class_polys[j]});
    if (!dep || (*dep)[2] == 0)
      throw DomainError("singular_fibers: class curve outside the pencil");
    out.emplace_back(-(*dep)[0] / (*dep)[2], -(*dep)[1] / (*dep)[2]);
  }
  return out;
}

bool critical_locus_check(const Arrangement& a, const std::vector<MultiPoly>& weights,
                          const std::vector<MultiPoly>& candidate) {
  if (!a.is_realized()) throw DomainError("critical_locus_check requires a realization");
  if (static_cast<int>(weights.size()) != a.n())
    throw DomainError("critical_locus_check: one weight per hyperplane required");
  EssentialForms ef = essential_forms(a);
  int r = static_cast<int>(ef.var_names.size());
  if (static_cast<int>(candidate.size()) != r)
    throw DomainError("critical_locus_check: candidate must map into the essential coordinates");
  int params = candidate[0].nvars();

  // resonance condition: weighted multiplicities sum to zero
  MultiPoly total(params);
  for (int h = 0; h < a.n(); ++h)
    total = total + weights[h].scaled(a.multiplicities()[h]);
  if (!total.is_zero())
    throw DomainError("critical_locus_check: weighted multiplicities must sum to zero");

  // f_h = alpha_h(candidate); prefix/suffix products avoid n^2 expansions
  std::vector<MultiPoly> f;
  for (int h = 0; h < a.n(); ++h) f.push_back(ef.forms[h].substitute(candidate));
  std::vector<MultiPoly> prefix(a.n() + 1, MultiPoly::constant(params, 1));
  std::vector<MultiPoly> suffix(a.n() + 1, MultiPoly::constant(params, 1));
  for (int h = 0; h < a.n(); ++h) prefix[h + 1] = prefix[h] * f[h];
  for (int h = a.n(); h-- > 0;) suffix[h] = suffix[h + 1] * f[h];

  for (int v = 0; v < r; ++v) {
    MultiPoly nv(params);
    for (int h = 0; h < a.n(); ++h) {
      // d(alpha_h)/dv is the constant coefficient of variable v
      MultiPoly dv = ef.forms[h].derivative(v);
      Rational c = dv.is_zero() ? Rational(0) : dv.terms().begin()->second;
      if (c == 0) continue;
      MultiPoly term = weights[h].scaled(c * a.multiplicities()[h]) * prefix[h] * suffix[h + 1];
      nv = nv + term;
    }
    if (!nv.is_zero()) return false;
  }
  return true;
}

CriticalFamily braid_conic_critical_family() {
  CriticalFamily fam{catalog("braid4_essential", {}), {}, {}, {"alpha", "beta", "s", "t"}};
  // ring Q[alpha, beta, s, t]
  const int nv = 4;
  MultiPoly al = MultiPoly::variable(nv, 0), be = MultiPoly::variable(nv, 1);
  MultiPoly s = MultiPoly::variable(nv, 2), t = MultiPoly::variable(nv, 3);
  MultiPoly ga = -(al + be);
  fam.weights = {al, al, be, be, ga, ga};
  // rational parametrization of the conic beta(x^2-y^2) - alpha(y^2-z^2) = 0
  // through (1,1,1) with direction (s,t,0)
  MultiPoly qd = be * s * s - (al + be) * t * t;         // Q(d)
  MultiPoly bd = be * s - (al + be) * t;                 // polar form B(v0, d)
  MultiPoly two = MultiPoly::constant(nv, 2);
  fam.candidate = {qd - two * bd * s, qd - two * bd * t, qd};
  return fam;
}

}  // namespace arr
