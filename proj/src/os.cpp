#include "arr/os.hpp"

#include <algorithm>
#include <bit>

#include "arr/errors.hpp"

namespace arr {

namespace {

std::vector<int> bits_of(FlatSet s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1)
    if (s & 1) out.push_back(i);
  return out;
}

}  // namespace

int OSAlgebra::shuffle_sign(FlatSet s, FlatSet t) {
  int inv = 0;
  for (int i = 0; t >> i; ++i)
    if (t >> i & 1) inv += std::popcount(s & ~((FlatSet{1} << (i + 1)) - 1));
  // inversions = #{(p, q) in S x T : p > q}
  return inv % 2 ? -1 : 1;
}

OSAlgebra::OSAlgebra(const IntersectionPoset& poset) : poset_(&poset) {
  build_nbc();
  build_tables();
}

int OSAlgebra::dim(int degree) const {
  if (degree < 0 || degree > rank()) return 0;
  return static_cast<int>(nbc_[degree].size());
}

std::vector<Integer> OSAlgebra::hilbert_series() const {
  std::vector<Integer> h;
  for (int d = 0; d <= rank(); ++d) h.push_back(dim(d));
  return h;
}

int OSAlgebra::basis_index(int degree, FlatSet monomial) const {
  auto it = index_[degree].find(monomial);
  if (it == index_[degree].end()) throw DomainError("basis_index: not an NBC monomial");
  return it->second;
}

void OSAlgebra::build_nbc() {
  int r = rank();
  nbc_.assign(r + 1, {});
  index_.assign(r + 1, {});
  nbc_[0] = {0};

  // S (independent, sorted) is NBC iff no e outside S lies in the closure of
  // S_{>e}; such an e is the minimum of a circuit broken inside S.
  auto is_nbc_extension = [&](FlatSet s, int size) {
    if (poset_->rank_of(s) < size) return false;
    auto bs = bits_of(s);
    int maxel = bs.back();
    for (int e = 0; e < maxel; ++e) {
      if (s >> e & 1) continue;
      FlatSet above = s & ~((FlatSet{2} << e) - 1);
      if (above == 0) continue;
      if (poset_->rank_of(above | (FlatSet{1} << e)) == poset_->rank_of(above)) return false;
    }
    return true;
  };

  std::vector<FlatSet> frontier = {0};
  for (int d = 1; d <= r; ++d) {
    std::vector<FlatSet> next;
    for (FlatSet s : frontier) {
      int start = s ? bits_of(s).back() + 1 : 0;
      for (int j = start; j < n(); ++j) {
        FlatSet cand = s | (FlatSet{1} << j);
        if (is_nbc_extension(cand, d)) next.push_back(cand);
      }
    }
    std::sort(next.begin(), next.end());
    nbc_[d] = std::move(next);
    frontier = nbc_[d];
  }
  for (int d = 0; d <= r; ++d)
    for (int i = 0; i < static_cast<int>(nbc_[d].size()); ++i) index_[d][nbc_[d][i]] = i;
}

// The unique circuit inside {e} | b whose minimum is e, found by greedily
// shrinking b while e stays in its closure.
static FlatSet circuit_through(const IntersectionPoset& p, int e, FlatSet b) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; b >> x; ++x) {
      if (!(b >> x & 1)) continue;
      FlatSet b2 = b & ~(FlatSet{1} << x);
      if (b2 && p.rank_of(b2 | (FlatSet{1} << e)) == p.rank_of(b2)) {
        b = b2;
        changed = true;
        break;
      }
    }
  }
  return b | (FlatSet{1} << e);
}

OSAlgebra::NormalForm OSAlgebra::compute_normal_form(
    FlatSet s, std::unordered_map<FlatSet, NormalForm>& memo) const {
  auto it = memo.find(s);
  if (it != memo.end()) return it->second;

  auto bs = bits_of(s);
  if (poset_->rank_of(s) < static_cast<int>(bs.size())) {
    memo[s] = {};
    return {};
  }
  int viol = -1;
  for (int e = 0; e < (bs.empty() ? 0 : bs.back()); ++e) {
    if (s >> e & 1) continue;
    FlatSet above = s & ~((FlatSet{2} << e) - 1);
    if (above && poset_->rank_of(above | (FlatSet{1} << e)) == poset_->rank_of(above)) {
      viol = e;
      break;
    }
  }
  if (viol < 0) {
    NormalForm nf = {{s, Integer(1)}};
    memo[s] = nf;
    return nf;
  }

  FlatSet above = s & ~((FlatSet{2} << viol) - 1);
  FlatSet circuit = circuit_through(*poset_, viol, above);
  FlatSet broken = circuit & ~(FlatSet{1} << viol);
  FlatSet rest = s & ~broken;

  // e_S = eps(B, rest) e_B ^ e_rest with B the broken circuit; rewrite e_B
  // through the circuit boundary: e_{C \ min} = sum_j (-1)^{j+1} e_{C \ c_j}.
  int base = shuffle_sign(broken, rest);
  std::unordered_map<FlatSet, Integer> acc;
  auto cbits = bits_of(circuit);
  for (std::size_t j = 1; j < cbits.size(); ++j) {
    FlatSet cc = circuit & ~(FlatSet{1} << cbits[j]);
    int sgn = base * (j % 2 ? 1 : -1) * shuffle_sign(cc, rest);
    for (const auto& [mono, coeff] : compute_normal_form(cc | rest, memo)) {
      acc[mono] += sgn * coeff;
    }
  }
  NormalForm nf;
  for (auto& [mono, coeff] : acc)
    if (coeff != 0) nf.emplace_back(mono, coeff);
  std::sort(nf.begin(), nf.end());
  memo[s] = nf;
  return nf;
}

void OSAlgebra::build_tables() {
  // normal forms of every independent set (sizes <= rank)
  std::vector<FlatSet> frontier = {0};
  nf_[0] = {{0, Integer(1)}};
  for (int d = 1; d <= rank(); ++d) {
    std::vector<FlatSet> next;
    for (FlatSet s : frontier) {
      int start = s ? bits_of(s).back() + 1 : 0;
      for (int j = start; j < n(); ++j) {
        FlatSet cand = s | (FlatSet{1} << j);
        if (poset_->rank_of(cand) == d) next.push_back(cand);
      }
    }
    for (FlatSet s : next) compute_normal_form(s, nf_);
    frontier = std::move(next);
  }

  gen_mult_.assign(rank() + 1, {});
  for (int d = 0; d < rank(); ++d) {
    gen_mult_[d].assign(n(), std::vector<SparseColumn>(nbc_[d].size()));
    for (int j = 0; j < n(); ++j)
      for (std::size_t si = 0; si < nbc_[d].size(); ++si) {
        FlatSet s = nbc_[d][si];
        if (s >> j & 1) continue;
        int sign = shuffle_sign(FlatSet{1} << j, s);
        FlatSet u = s | (FlatSet{1} << j);
        auto itnf = nf_.find(u);
        if (itnf == nf_.end()) continue;  // dependent: product is zero
        SparseColumn col;
        for (const auto& [mono, coeff] : itnf->second)
          col.emplace_back(index_[d + 1].at(mono), sign * coeff);
        gen_mult_[d][j][si] = std::move(col);
      }
  }
  gen_mult_[rank()].assign(n(), std::vector<SparseColumn>(nbc_[rank()].size()));
}

const OSAlgebra::NormalForm& OSAlgebra::normal_form(FlatSet s) const {
  static const NormalForm kZero;
  auto it = nf_.find(s);
  return it == nf_.end() ? kZero : it->second;
}

}  // namespace arr
