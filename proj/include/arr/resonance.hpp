#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arr/os.hpp"
#include "arr/pencils.hpp"

namespace arr {

struct CertificationReport {
  int samples = 0;
  int samples_passed = 0;
  bool symbolic_checked = false;
  bool symbolic_passed = false;
  bool passed() const {
    return samples == samples_passed && (!symbolic_checked || symbolic_passed);
  }
};

// A certified piece of R^1_1: either the local subspace attached to a
// multiple point or an essential component attached to a partition.
// point_set marks raw enumeration output over F_p.
struct ResonanceComponent {
  enum class Kind { local, essential, point_set };
  Kind kind = Kind::local;
  FlatSet support = 0;
  std::vector<std::vector<Rational>> basis;  // subspace basis in Q^n
  std::vector<std::vector<int>> classes;     // essential only
  std::vector<int> multiplicities;           // essential only (weights per class vector)
  CertificationReport cert;
  int dim() const { return static_cast<int>(basis.size()); }
};

// Certifies span(basis) inside R^1_1: `samples` random nonzero points by
// direct rank computation, plus the generic parametrized point via a
// fraction-free rank over Q[t_1..t_dim].
CertificationReport certify_subspace(const OSAlgebra& os,
                                     const std::vector<std::vector<Rational>>& basis,
                                     int samples, std::uint64_t seed, bool symbolic);

// For every rank-2 flat with m >= 3 hyperplanes: the (m-1)-dimensional
// subspace of weights supported on the flat summing to zero.
std::vector<ResonanceComponent> local_components(const OSAlgebra& os, std::uint64_t seed = 1);

// Candidate subspace of a partition: weights constant on classes (scaled by
// the given multiplicities) with class weights summing to zero; returned only
// when certification succeeds.
std::optional<ResonanceComponent> partition_component(const OSAlgebra& os, const Partition& part,
                                                      const std::vector<int>& mult,
                                                      std::uint64_t seed = 1);

struct CensusOptions {
  std::uint64_t seed = 1;
  std::int64_t audit_prime = 5;
  std::int64_t audit_budget = 2'000'000;
  int threads = 1;
  NeighborlyOptions neighborly;
};

struct CensusResult {
  std::vector<ResonanceComponent> components;
  bool audit_ran = false;
  std::int64_t audit_prime = 0;
  // enumerated F_p points not covered by any component reduction
  std::vector<std::vector<std::int64_t>> audit_exceptions;
};

// Union of local components and certified partition components over all
// neighborly partitions, deduplicated by span containment.  Rank <= 3 only.
CensusResult resonance_census_q(const OSAlgebra& os, CensusOptions opt = {});

struct FpEnumOptions {
  std::int64_t budget = 2'000'000;
  bool projective = false;
  int threads = 1;
};

// All a in F_p^n with h^i(a) >= depth (projective mode: one representative
// per scalar class, zero excluded).  Exact; guarded by the budget.
std::vector<std::vector<std::int64_t>> enumerate_fp(const OSAlgebra& os, std::int64_t prime,
                                                    int i, int depth, FpEnumOptions opt = {});

// A pair u, v from the point set with u + v outside it such that no single
// component contains both; nullopt when no such pair exists.  Components are
// given by their bases reduced mod p.  `projective` marks point lists that
// carry one representative per scalar class.
struct NonlinearityWitness {
  std::vector<std::int64_t> u, v;
};
std::optional<NonlinearityWitness> nonlinearity_witness(
    const std::vector<std::vector<std::int64_t>>& points,
    const std::vector<std::vector<std::vector<std::int64_t>>>& component_bases, std::int64_t prime,
    bool projective);

}  // namespace arr
