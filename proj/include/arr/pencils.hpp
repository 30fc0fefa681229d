#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arr/multipoly.hpp"
#include "arr/poset.hpp"

namespace arr {

// A partition of a subarrangement into at least three disjoint nonempty
// classes, by hyperplane index.
struct Partition {
  std::vector<std::vector<int>> classes;

  static Partition make(std::vector<std::vector<int>> classes, int n);
  FlatSet support() const;
  int class_of(int h) const;  // -1 when h is outside the support
};

// A partition with line multiplicities; class_degree is filled in by
// check_multinet.
struct Multinet {
  Partition partition;
  std::vector<int> mult;  // length n, entries >= 1; only support entries matter
  int class_degree = 0;
};

// No induced point of the support may see exactly one line of one class
// while all its remaining lines (two or more) lie in a single second class.
bool is_neighborly(const IntersectionPoset& p, const Partition& part);

// The incidence matrix of the support's multiple points (>= 3 lines) against
// its lines must have nullspace of dimension at least two containing a
// full-support vector.
bool eligible_support(const IntersectionPoset& p, FlatSet support);

struct NeighborlyOptions {
  int max_support = 0;   // 0 = no bound
  int max_classes = 0;   // 0 = no bound
  long long node_budget = 50'000'000;
  long long result_budget = 500'000;
  // Keep only partitions that could carry a multinet: every inter-class
  // point of the support must meet every class.  Partitions failing this can
  // never certify a resonance component or a pencil; switching it off gives
  // the literal enumeration, which explodes on supports without multiple
  // points (the result budget then guards the run).
  bool require_multinet_balance = true;
};

// All neighborly partitions (up to class relabeling) of all eligible
// subarrangements within the bounds.  Requires rank 3.
std::vector<Partition> enumerate_neighborly(const IntersectionPoset& p, NeighborlyOptions opt = {});

struct MultinetReport {
  bool ok = false;
  int class_degree = 0;
  std::vector<std::string> violations;
};

// Verifies equal multiplicity-weighted class degrees and equal class counts
// at every inter-class point.  Works for abstract matroids too (only flats
// are consulted).
MultinetReport check_multinet(const IntersectionPoset& p, const Multinet& m);

// Bounded search for multiplicities (<= cap) making the partition a
// multinet; unit multiplicities are tried first.
std::optional<std::vector<int>> search_multiplicities(const IntersectionPoset& p,
                                                      const Partition& part, int cap = 4);

// Defining forms in essential coordinates (a basis of the normals' row
// space); var_names are x, y, z for rank 3.
struct EssentialForms {
  std::vector<MultiPoly> forms;  // one per hyperplane, linear, rank variables
  std::vector<std::string> var_names;
};
EssentialForms essential_forms(const Arrangement& a);

struct PencilCertificate {
  std::vector<MultiPoly> class_polys;          // Q_j = prod of class forms^mult
  std::vector<std::string> var_names;
  std::vector<Rational> dependency;            // q coefficients, all nonzero
  int degree = 0;                               // common degree d
};

struct PencilOutcome {
  std::optional<PencilCertificate> certificate;
  std::string error;  // set when no certificate: degenerate span, abstract input, ...
};

// Expands the class curves exactly and certifies that they span a pencil
// (a 2-dimensional space of degree-d forms).  Requires a rational
// realization and a verified multinet.
PencilOutcome pencil_certificate(const Arrangement& a, const IntersectionPoset& p,
                                 const Multinet& m);

// Pencil parameters (lambda : mu) with Q_j proportional to lambda*Q_1 + mu*Q_2.
std::vector<std::pair<Rational, Rational>> singular_fibers(const PencilCertificate& cert);

// Checks that a polynomial family of points lies in the critical locus of
// the master function with the given hyperplane weights: the cleared-
// denominator critical equations N_v must vanish identically after
// substitution.  Weights and the candidate live in a common parameter ring.
bool critical_locus_check(const Arrangement& a, const std::vector<MultiPoly>& weights,
                          const std::vector<MultiPoly>& candidate);

// The symmetric conic family: weights (alpha, alpha, beta, beta, gamma,
// gamma) with gamma = -alpha-beta on the essential braid model, and the
// rational parametrization of the corresponding member of the conic pencil.
// Parameter ring variables: alpha, beta, s, t.
struct CriticalFamily {
  Arrangement arrangement;
  std::vector<MultiPoly> weights;
  std::vector<MultiPoly> candidate;
  std::vector<std::string> param_names;
};
CriticalFamily braid_conic_critical_family();

}  // namespace arr
