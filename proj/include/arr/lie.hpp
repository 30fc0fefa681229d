#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "arr/numbers.hpp"
#include "arr/os.hpp"
#include "arr/poset.hpp"

namespace arr {

// Degreewise presentation of the holonomy Lie algebra: the free Lie algebra
// on one generator per hyperplane (Lyndon-word basis), modulo the ideal
// generated by the degree-two relations [x_i, sum_{j in X} x_j] over all
// rank-2 flats X and i in X.  All linear algebra is exact over Q.
class HolonomyLie {
 public:
  // Throws ResourceError when the degree-N free Lie algebra would exceed the
  // configured memory budget.
  HolonomyLie(const IntersectionPoset& poset, int max_degree);

  int max_degree() const { return n_degree_; }
  // phi_k = dim of the degree-k graded piece, k = 1..N.
  const std::vector<long long>& lcs_ranks() const { return phi_; }
  // theta_k = dim of degree k of h/h'', k = 2..N (theta(k) accessor).
  long long chen_rank(int k) const;
  long long lcs_rank(int k) const { return phi_.at(k - 1); }

 private:
  int n_ = 0, n_degree_ = 0;
  std::vector<long long> phi_;
  std::vector<long long> theta_;  // index 0 <-> k = 2
};

std::vector<long long> holonomy_ranks(const IntersectionPoset& p, int max_degree);
std::vector<long long> chen_ranks_holonomy(const IntersectionPoset& p, int max_degree);

// Truncated integer power series, ascending coefficients, length N+1.
using Series = std::vector<Rational>;
Series series_one(int N);
Series series_mul(const Series& a, const Series& b);
// (1 - t^k)^e for e of either sign.
Series series_one_minus_tk_pow(int k, long long e, int N);
// Product over k of (1 - t^k)^(phi_k), with phi indexed from degree `from`.
Series lcs_product(const std::vector<long long>& phi, int from, int N);
bool series_equal(const Series& a, const Series& b);
std::string series_to_string(const Series& s, const std::string& var);

struct FormulaComparison {
  Series lhs, rhs;
  bool equal = false;
  bool hypothesis_checked = false;  // resonance LCS formula: phi_4 == theta_4
  bool hypothesis_holds = false;
};

// Kohno / Falk-Randell: prod (1-t^k)^phi_k = Hilb(A, -t) for supersolvable
// arrangements; throws DomainError when the lattice is not supersolvable.
FormulaComparison lcs_formula_supersolvable(const IntersectionPoset& p, const OSAlgebra& os,
                                            int N);

// Resonance LCS formula: prod_{k>=2}(1-t^k)^phi_k vs prod_i (1-d_i t)/(1-t)^d_i
// over the component dimensions d_i, valid under the hypothesis
// phi_4 == theta_4 (reported, not assumed).
FormulaComparison resonance_lcs_formula(const IntersectionPoset& p,
                                        const std::vector<int>& component_dims, int N);

// Closed-form Chen ranks from component dimensions:
// theta_k = (k-1) sum_i binom(k + d_i - 2, k), meaningful for large k.
Integer chen_formula(const std::vector<int>& component_dims, int k);

// theta_k(holonomy) >= chen_formula(dims, k); the proven inequality.
struct ChenBoundCheck {
  long long theta_holonomy;
  Integer formula_value;
  bool holds;
};
ChenBoundCheck chen_lower_bound_check(const IntersectionPoset& p,
                                      const std::vector<int>& component_dims, int k);

}  // namespace arr
