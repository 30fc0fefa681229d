#include "arr/lie.hpp"

#include <algorithm>
#include <unordered_map>

#include "arr/errors.hpp"

namespace arr {

namespace {

// Words over the generator alphabet packed 5 bits per letter, first letter
// in the highest bits, so numeric order on equal-length words is
// lexicographic.  n <= 31, degree <= 12.
using Word = std::uint64_t;

inline Word mask_len(int len) { return (Word(1) << (5 * len)) - 1; }
inline Word concat(Word a, Word b, int blen) { return (a << (5 * blen)) | b; }
inline Word suffix(Word w, int len) { return w & mask_len(len); }
inline Word prefix(Word w, int len, int plen) { return w >> (5 * (len - plen)); }

bool is_lyndon(Word w, int len) {
  for (int r = 1; r < len; ++r) {
    Word rot = concat(suffix(w, len - r), prefix(w, len, r), r);
    if (w >= rot) return false;
  }
  return true;
}

// sparse vectors over the Lyndon basis of one degree, sorted by index
using SparseVec = std::vector<std::pair<int, Rational>>;

void sparse_axpy(SparseVec& into, const SparseVec& v, const Rational& c) {
  SparseVec out;
  out.reserve(into.size() + v.size());
  std::size_t i = 0, j = 0;
  while (i < into.size() || j < v.size()) {
    if (j == v.size() || (i < into.size() && into[i].first < v[j].first)) {
      out.push_back(std::move(into[i++]));
    } else if (i == into.size() || v[j].first < into[i].first) {
      Rational x = v[j].second * c;
      if (x != 0) out.emplace_back(v[j].first, std::move(x));
      ++j;
    } else {
      Rational x = into[i].second + v[j].second * c;
      if (x != 0) out.emplace_back(into[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  into = std::move(out);
}

// incremental row echelon over Q keyed by leading coordinate
struct Echelon {
  std::map<int, SparseVec> rows;  // pivot -> row normalized to leading 1
  void insert(SparseVec v) {
    while (!v.empty()) {
      int lead = v.front().first;
      auto it = rows.find(lead);
      if (it == rows.end()) {
        Rational inv = Rational(1) / v.front().second;
        for (auto& [idx, c] : v) c *= inv;
        rows.emplace(lead, std::move(v));
        return;
      }
      sparse_axpy(v, it->second, -v.front().second);
    }
  }
  std::size_t rank() const { return rows.size(); }
};

struct FreeLie {
  int n, N;
  std::vector<std::vector<Word>> lyndon;             // per degree 1..N, sorted
  std::vector<std::unordered_map<Word, int>> index;  // per degree
  std::vector<std::unordered_map<Word, std::map<Word, long long>>> expansion;

  FreeLie(int n, int N) : n(n), N(N) {
    lyndon.resize(N + 1);
    index.resize(N + 1);
    expansion.resize(N + 1);
    std::vector<int> w = {-1};  // Duval
    while (!w.empty()) {
      ++w.back();
      int m = static_cast<int>(w.size());
      if (m <= N) {
        Word pw = 0;
        for (int i = 0; i < m; ++i) pw = (pw << 5) | Word(w[i]);
        lyndon[m].push_back(pw);
      }
      while (static_cast<int>(w.size()) < N) w.push_back(w[w.size() % m]);
      while (!w.empty() && w.back() == n - 1) w.pop_back();
    }
    for (int d = 1; d <= N; ++d) {
      std::sort(lyndon[d].begin(), lyndon[d].end());
      for (int i = 0; i < static_cast<int>(lyndon[d].size()); ++i) index[d][lyndon[d][i]] = i;
    }
  }

  long long dim(int d) const { return static_cast<long long>(lyndon[d].size()); }

  // tensor expansion of the standard (right) bracketing of a Lyndon word;
  // the lex-least term is the word itself with coefficient 1
  const std::map<Word, long long>& expand(Word w, int len) {
    auto it = expansion[len].find(w);
    if (it != expansion[len].end()) return it->second;
    std::map<Word, long long> r;
    if (len == 1) {
      r[w] = 1;
    } else {
      int cut = 1;  // shortest proper prefix whose complement suffix is Lyndon
      while (cut < len && !is_lyndon(suffix(w, len - cut), len - cut)) ++cut;
      std::map<Word, long long> eu = expand(prefix(w, len, cut), cut);
      std::map<Word, long long> ev = expand(suffix(w, len - cut), len - cut);
      for (const auto& [a, ca] : eu)
        for (const auto& [b, cb] : ev) {
          r[concat(a, b, len - cut)] += ca * cb;
          r[concat(b, a, cut)] -= ca * cb;
        }
      std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    }
    return expansion[len][w] = std::move(r);
  }

  // Lyndon coordinates of a Lie element in the tensor algebra, by peeling
  // the lex-least word (numeric order equals lex order on packed words)
  SparseVec to_lyndon(std::map<Word, Rational> elem, int len) {
    SparseVec out;
    while (!elem.empty()) {
      Word least = elem.begin()->first;
      auto li = index[len].find(least);
      if (li == index[len].end())
        throw DomainError("to_lyndon: lex-least word is not Lyndon (not a Lie element)");
      Rational c = elem.begin()->second;
      out.emplace_back(li->second, c);
      for (const auto& [ww, cc] : expand(least, len)) {
        auto it = elem.find(ww);
        Rational nv = (it == elem.end() ? Rational(0) : it->second) - c * cc;
        if (nv == 0) {
          if (it != elem.end()) elem.erase(it);
        } else if (it == elem.end()) {
          elem.emplace(ww, std::move(nv));
        } else {
          it->second = std::move(nv);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // [x_j, v] for v in Lyndon coordinates of degree len
  SparseVec bracket_generator(int j, const SparseVec& v, int len) {
    std::map<Word, Rational> tensor;
    for (const auto& [idx, c] : v)
      for (const auto& [w, cw] : expand(lyndon[len][idx], len)) {
        tensor[concat(Word(j), w, len)] += c * cw;
        tensor[concat(w, Word(j), 1)] -= c * cw;
      }
    std::erase_if(tensor, [](const auto& kv) { return kv.second == 0; });
    return to_lyndon(std::move(tensor), len + 1);
  }

  SparseVec bracket_basis(Word w1, int l1, Word w2, int l2) {
    std::map<Word, Rational> tensor;
    const std::map<Word, long long> e1 = expand(w1, l1);
    const std::map<Word, long long> e2 = expand(w2, l2);
    for (const auto& [a, ca] : e1)
      for (const auto& [b, cb] : e2) {
        tensor[concat(a, b, l2)] += Rational(ca) * cb;
        tensor[concat(b, a, l1)] -= Rational(ca) * cb;
      }
    std::erase_if(tensor, [](const auto& kv) { return kv.second == 0; });
    return to_lyndon(std::move(tensor), l1 + l2);
  }
};

void check_budget(int n, int N) {
  double words = 1;
  for (int k = 0; k < N; ++k) {
    words *= n;
    if (words > 4e6)
      throw ResourceError("free Lie algebra truncation too large: " + std::to_string(n) +
                          " generators at degree " + std::to_string(N) +
                          " exceeds the memory budget; lower the degree");
  }
}

}  // namespace

HolonomyLie::HolonomyLie(const IntersectionPoset& poset, int max_degree) {
  n_ = poset.n;
  n_degree_ = max_degree;
  if (max_degree < 1) throw DomainError("max_degree must be >= 1");
  check_budget(n_, max_degree);
  FreeLie fl(n_, max_degree);

  phi_.assign(1, n_);
  if (max_degree == 1) return;

  // degree-2 relations: [x_i, sum_{j in X} x_j] per rank-2 flat X and i in X
  std::vector<SparseVec> rels;
  if (poset.rank >= 2)
    for (int id : poset.by_rank[2]) {
      FlatSet set = poset.flats[id].set;
      for (int i = 0; i < n_; ++i) {
        if (!(set >> i & 1)) continue;
        std::map<Word, Rational> tensor;
        for (int j = 0; j < n_; ++j) {
          if (j == i || !(set >> j & 1)) continue;
          tensor[concat(Word(i), Word(j), 1)] += 1;
          tensor[concat(Word(j), Word(i), 1)] -= 1;
        }
        std::erase_if(tensor, [](const auto& kv) { return kv.second == 0; });
        if (!tensor.empty()) rels.push_back(fl.to_lyndon(std::move(tensor), 2));
      }
    }

  std::vector<std::vector<int>> complement(max_degree + 1);
  std::vector<SparseVec> basis;  // echelon basis of the current ideal piece
  for (int k = 2; k <= max_degree; ++k) {
    Echelon ideal;
    if (k == 2) {
      for (const auto& r : rels) ideal.insert(r);
    } else {
      for (const auto& b : basis)
        for (int j = 0; j < n_; ++j) ideal.insert(fl.bracket_generator(j, b, k - 1));
    }
    phi_.push_back(fl.dim(k) - static_cast<long long>(ideal.rank()));

    std::vector<bool> pivot(fl.dim(k), false);
    for (const auto& [lead, row] : ideal.rows) pivot[lead] = true;
    for (int i = 0; i < fl.dim(k); ++i)
      if (!pivot[i]) complement[k].push_back(i);

    // theta_k: quotient additionally by [h_a, h_b] for a + b = k, a, b >= 2,
    // using complement lifts of the lower graded pieces
    Echelon chen;
    for (const auto& [lead, row] : ideal.rows) chen.rows.emplace(lead, row);
    for (int a = 2; a <= k - 2; ++a) {
      int b = k - a;
      if (b < a) break;
      for (int ui : complement[a])
        for (int vi : complement[b]) {
          if (a == b && vi <= ui) continue;
          chen.insert(fl.bracket_basis(fl.lyndon[a][ui], a, fl.lyndon[b][vi], b));
        }
    }
    theta_.push_back(fl.dim(k) - static_cast<long long>(chen.rank()));

    basis.clear();
    for (auto& [lead, row] : ideal.rows) basis.push_back(std::move(row));
  }
}

long long HolonomyLie::chen_rank(int k) const {
  if (k < 2 || k > n_degree_) throw DomainError("chen_rank: degree out of range");
  return theta_.at(k - 2);
}

std::vector<long long> holonomy_ranks(const IntersectionPoset& p, int max_degree) {
  return HolonomyLie(p, max_degree).lcs_ranks();
}

std::vector<long long> chen_ranks_holonomy(const IntersectionPoset& p, int max_degree) {
  HolonomyLie h(p, max_degree);
  std::vector<long long> out;
  for (int k = 2; k <= max_degree; ++k) out.push_back(h.chen_rank(k));
  return out;
}

Series series_one(int N) {
  Series s(N + 1, Rational(0));
  s[0] = 1;
  return s;
}

Series series_mul(const Series& a, const Series& b) {
  int N = static_cast<int>(a.size()) - 1;
  Series r(N + 1, Rational(0));
  for (int i = 0; i <= N; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= N && j < static_cast<int>(b.size()); ++j)
      r[i + j] += a[i] * b[j];
  }
  return r;
}

Series series_one_minus_tk_pow(int k, long long e, int N) {
  Series r = series_one(N);
  if (e >= 0) {
    for (long long rep = 0; rep < e; ++rep) {
      Series f = series_one(N);
      if (k <= N) f[k] = -1;
      r = series_mul(r, f);
    }
    return r;
  }
  Series inv(N + 1, Rational(0));  // geometric series for (1 - t^k)^(-1)
  for (int j = 0; j * k <= N; ++j) inv[j * k] = 1;
  for (long long rep = 0; rep < -e; ++rep) r = series_mul(r, inv);
  return r;
}

Series lcs_product(const std::vector<long long>& phi, int from, int N) {
  Series r = series_one(N);
  for (int k = from; k <= static_cast<int>(phi.size()); ++k)
    r = series_mul(r, series_one_minus_tk_pow(k, phi[k - 1], N));
  return r;
}

bool series_equal(const Series& a, const Series& b) { return a == b; }

std::string series_to_string(const Series& s, const std::string& var) {
  std::string out;
  for (std::size_t d = 0; d < s.size(); ++d) {
    if (s[d] == 0) continue;
    Rational ab = s[d] < 0 ? Rational(-s[d]) : s[d];
    if (out.empty())
      out += s[d] < 0 ? "-" : "";
    else
      out += s[d] < 0 ? " - " : " + ";
    if (d == 0)
      out += to_string(ab);
    else {
      if (ab != 1) out += to_string(ab) + "*";
      out += var;
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  if (out.empty()) out = "0";
  return out + " + O(" + var + "^" + std::to_string(s.size()) + ")";
}

FormulaComparison lcs_formula_supersolvable(const IntersectionPoset& p, const OSAlgebra& os,
                                            int N) {
  auto exps = supersolvable_exponents(p);
  if (!exps) throw DomainError("lcs_formula_supersolvable: the lattice is not supersolvable");
  FormulaComparison out;
  out.lhs = lcs_product(holonomy_ranks(p, N), 1, N);
  out.rhs = series_one(N);
  auto dims = os.hilbert_series();
  for (int i = 0; i < static_cast<int>(dims.size()) && i <= N; ++i)
    out.rhs[i] = Rational(dims[i]) * (i % 2 ? -1 : 1);
  out.equal = series_equal(out.lhs, out.rhs);
  return out;
}

FormulaComparison resonance_lcs_formula(const IntersectionPoset& p,
                                        const std::vector<int>& component_dims, int N) {
  FormulaComparison out;
  int deg = std::max(N, 4);
  HolonomyLie h(p, deg);
  std::vector<long long> phi = h.lcs_ranks();
  phi.resize(N);
  out.lhs = lcs_product(phi, 2, N);
  out.rhs = series_one(N);
  for (int d : component_dims) {
    Series f = series_one(N);
    if (N >= 1) f[1] = -d;
    out.rhs = series_mul(out.rhs, f);
    out.rhs = series_mul(out.rhs, series_one_minus_tk_pow(1, -d, N));
  }
  out.hypothesis_checked = true;
  out.hypothesis_holds = h.lcs_rank(4) == h.chen_rank(4);
  out.equal = series_equal(out.lhs, out.rhs);
  return out;
}

Integer chen_formula(const std::vector<int>& component_dims, int k) {
  if (k < 2) throw DomainError("chen_formula: k >= 2 required");
  Integer sum = 0;
  for (int d : component_dims) sum += binomial(k + d - 2, k);
  return Integer(k - 1) * sum;
}

ChenBoundCheck chen_lower_bound_check(const IntersectionPoset& p,
                                      const std::vector<int>& component_dims, int k) {
  HolonomyLie h(p, k);
  ChenBoundCheck out{h.chen_rank(k), chen_formula(component_dims, k), false};
  out.holds = Integer(out.theta_holonomy) >= out.formula_value;
  return out;
}

}  // namespace arr
