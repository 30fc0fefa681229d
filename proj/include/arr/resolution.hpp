#pragma once

#include <map>
#include <vector>

#include "arr/os.hpp"

namespace arr {

// Graded Betti numbers b[i][d] of a truncated minimal free resolution:
// b[i][d] = number of generators of the i-th syzygy module in internal
// degree d (computed for d <= the truncation bound).
using BettiTable = std::vector<std::map<int, long long>>;

// Minimal free resolution of the trivial module Q over the OS algebra A,
// truncated at internal degree N; returns the diagonal Betti numbers
// dim Tor^A_i(Q,Q)_i for i = 0..N.
std::vector<Integer> diagonal_tor_series(const OSAlgebra& os, int N);

// Minimal free resolution of A as a module over the exterior algebra E on
// the same generators, truncated at internal degree N; returns the linear
// strand dim Tor^E_{k-1}(A,Q)_k for k = 2..N.  Requires n <= 8.
std::vector<long long> linear_strand_over_e(const OSAlgebra& os, int N);

}  // namespace arr
