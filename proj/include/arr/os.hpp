#pragma once

#include <unordered_map>
#include <vector>

#include "arr/matrix.hpp"
#include "arr/poset.hpp"

namespace arr {

// The Orlik-Solomon algebra E/I of an arrangement, presented by its
// no-broken-circuit bases.  The hyperplane order is the input order and is
// part of the algebra's identity; dimensions do not depend on it.
//
// The combinatorial core is field-independent: normal forms of all monomials
// e_S (S independent) are precomputed with integer coefficients via circuit
// rewriting, so any field view is a cheap coefficient map.  Immutable after
// build and safe to share across threads.
class OSAlgebra {
 public:
  explicit OSAlgebra(const IntersectionPoset& poset);

  const IntersectionPoset& poset() const { return *poset_; }
  int n() const { return poset_->n; }
  int rank() const { return poset_->rank; }

  int dim(int degree) const;
  std::vector<Integer> hilbert_series() const;  // graded dimensions

  const std::vector<FlatSet>& basis(int degree) const { return nbc_[degree]; }
  int basis_index(int degree, FlatSet monomial) const;

  // Normal form of e_S as an integer combination of NBC monomials of the
  // same degree; empty when S is dependent.
  using NormalForm = std::vector<std::pair<FlatSet, Integer>>;
  const NormalForm& normal_form(FlatSet s) const;

  // e_j ^ (basis monomial of given degree): list of (target index, coeff).
  using SparseColumn = std::vector<std::pair<int, Integer>>;
  const SparseColumn& generator_product(int degree, int j, int source_index) const {
    return gen_mult_[degree][j][source_index];
  }

  // Sign of e_S ^ e_T as (-1)^inversions; caller guarantees S, T disjoint.
  static int shuffle_sign(FlatSet s, FlatSet t);

 private:
  void build_nbc();
  void build_tables();
  NormalForm compute_normal_form(FlatSet s, std::unordered_map<FlatSet, NormalForm>& memo) const;

  const IntersectionPoset* poset_;
  std::vector<std::vector<FlatSet>> nbc_;                 // per degree
  std::vector<std::unordered_map<FlatSet, int>> index_;   // per degree
  std::unordered_map<FlatSet, NormalForm> nf_;            // all independent sets
  std::vector<std::vector<std::vector<SparseColumn>>> gen_mult_;  // [degree][j][src]
};

// A homogeneous element in the NBC basis of its degree.
template <Field F>
struct OSElement {
  int degree = 0;
  std::vector<typename F::Elem> coords;
};

// Field-specific view of an OS algebra.
template <Field F>
class OSView {
 public:
  using Elem = typename F::Elem;

  OSView(const OSAlgebra& core, F field) : core_(&core), field_(field) {}

  const OSAlgebra& core() const { return *core_; }
  const F& field() const { return field_; }

  OSElement<F> zero(int degree) const {
    return {degree, std::vector<Elem>(core_->dim(degree), field_.zero())};
  }

  OSElement<F> from_weights(const std::vector<Elem>& a) const {
    OSElement<F> x = zero(1);
    for (int j = 0; j < core_->n(); ++j)
      x.coords[core_->basis_index(1, FlatSet{1} << j)] = a[j];
    return x;
  }

  // Exterior product reduced to NBC normal form.
  OSElement<F> multiply(const OSElement<F>& x, const OSElement<F>& y) const {
    int d = x.degree + y.degree;
    OSElement<F> r = zero(d);
    if (d > core_->rank()) return r;
    const auto& bx = core_->basis(x.degree);
    const auto& by = core_->basis(y.degree);
    for (std::size_t i = 0; i < bx.size(); ++i) {
      if (field_.is_zero(x.coords[i])) continue;
      for (std::size_t j = 0; j < by.size(); ++j) {
        if (field_.is_zero(y.coords[j])) continue;
        if (bx[i] & by[j]) continue;
        int sign = OSAlgebra::shuffle_sign(bx[i], by[j]);
        Elem c = field_.mul(x.coords[i], y.coords[j]);
        if (sign < 0) c = field_.neg(c);
        for (const auto& [mono, coeff] : core_->normal_form(bx[i] | by[j])) {
          Elem t = field_.mul(c, field_.from_rational(Rational(coeff)));
          int idx = core_->basis_index(d, mono);
          r.coords[idx] = field_.add(r.coords[idx], t);
        }
      }
    }
    return r;
  }

  // Matrix of left multiplication by the degree-one element with coefficient
  // vector a, as a map A^degree -> A^(degree+1).
  Matrix<F> aomoto_matrix(const std::vector<Elem>& a, int degree) const {
    int rows = degree + 1 > core_->rank() ? 0 : core_->dim(degree + 1);
    Matrix<F> m(field_, rows, core_->dim(degree));
    if (rows == 0) return m;
    for (int s = 0; s < core_->dim(degree); ++s)
      for (int j = 0; j < core_->n(); ++j) {
        if (field_.is_zero(a[j])) continue;
        for (const auto& [tgt, coeff] : core_->generator_product(degree, j, s)) {
          Elem t = field_.mul(a[j], field_.from_rational(Rational(coeff)));
          m(tgt, s) = field_.add(m(tgt, s), t);
        }
      }
    return m;
  }

  // Cohomology dimensions (h^0, ..., h^rank) of the complex (A, a).
  std::vector<int> aomoto_cohomology(const std::vector<Elem>& a) const {
    std::vector<int> h(core_->rank() + 1);
    std::vector<std::size_t> rk(core_->rank() + 1, 0);
    for (int i = 0; i <= core_->rank(); ++i) rk[i] = aomoto_matrix(a, i).rank();
    for (int i = 0; i <= core_->rank(); ++i) {
      std::size_t prev = i == 0 ? 0 : rk[i - 1];
      h[i] = static_cast<int>(core_->dim(i) - rk[i] - prev);
    }
    return h;
  }

  bool in_resonance(const std::vector<Elem>& a, int i, int depth) const {
    if (i < 0 || i > core_->rank()) return depth <= 0;
    // rank-based shortcut: h^i >= depth
    std::size_t ri = aomoto_matrix(a, i).rank();
    std::size_t rprev = i == 0 ? 0 : aomoto_matrix(a, i - 1).rank();
    return static_cast<int>(core_->dim(i) - ri - rprev) >= depth;
  }

 private:
  const OSAlgebra* core_;
  F field_;
};

}  // namespace arr
