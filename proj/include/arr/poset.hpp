#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arr/arrangement.hpp"
#include "arr/numbers.hpp"

namespace arr {

using FlatSet = std::uint32_t;  // hyperplane subsets as bitmasks; n <= 31

// A flat: the closed set of hyperplanes containing a common intersection
// subspace.  For realized arrangements the subspace basis is kept; abstract
// matroids carry only the combinatorics.
struct Flat {
  FlatSet set = 0;
  int rank = 0;
  long long mobius = 0;
  std::vector<std::vector<Rational>> subspace_basis;
};

// Intersection poset, ordered by reverse inclusion of subspaces (equivalently
// inclusion of closed hyperplane sets).  Flats are grouped by rank with the
// ambient space as bottom.
class IntersectionPoset {
 public:
  int n = 0;
  int ambient_dim = 0;
  int rank = 0;  // rank of the top flat
  std::vector<Flat> flats;
  std::vector<std::vector<int>> by_rank;

  int flat_id(FlatSet set) const;            // exact lookup, -1 if absent
  int closure_id(FlatSet subset) const;      // minimal flat containing subset
  int rank_of(FlatSet subset) const { return flats[closure_id(subset)].rank; }
  bool leq(int x, int y) const;              // bottom-to-top order
  int join(int x, int y) const;
  int meet(int x, int y) const;

  // Flats of the subarrangement induced on `support`, of given rank, as
  // subsets of `support` (rank-2 case is what the pencil machinery needs).
  std::vector<FlatSet> induced_rank2_flats(FlatSet support) const;

  std::vector<long long> flat_census() const;  // flats per rank
  std::vector<Integer> whitney_abs() const;    // sum of |mu| per rank
};

IntersectionPoset build_poset(const Arrangement& a);

// chi(t) = sum_X mu(X) t^{dim X}, ascending coefficients, degree = ambient_dim.
std::vector<Integer> characteristic_polynomial(const IntersectionPoset& p);

Integer eval_poly(const std::vector<Integer>& coeffs, const Integer& t);

// Zaslavsky evaluations: regions = (-1)^l chi(-1); bounded regions of the
// essentialized arrangement = |chi_ess(1)|.  Requires rational normals.
struct RegionCount {
  Integer regions;
  Integer bounded;
};
RegionCount count_regions(const Arrangement& a);

// Exponents along a maximal modular chain, ascending, if one exists.
std::optional<std::vector<int>> supersolvable_exponents(const IntersectionPoset& p);

std::string poly_to_string(const std::vector<Integer>& coeffs, const std::string& var);

}  // namespace arr
