#pragma once

// Brute-force enumeration of (Z/r)^n for one lattice block.
//
// Both kernels produce the same histogram of (w.c mod r, w.w mod 2r):
// tally_serial decodes every vector and evaluates the quadratic form directly
// and is kept as the reference; tally_parallel splits the enumeration over
// OpenMP threads and updates the form incrementally along the last coordinate.

#include <cstdint>
#include <span>
#include <vector>

#include "vw/k3lattice.hpp"

namespace vw::kernels {

/// counts[m * 2r + k] over all w in {0..r-1}^n, n = gram.size(), where
/// m = sum_a c[a] w[a] mod r (c is a covector, e.g. G c1) and k = w.G.w mod 2r.
std::vector<std::uint64_t> tally_serial(const Gram& gram, std::span<const long> c, long r);
std::vector<std::uint64_t> tally_parallel(const Gram& gram, std::span<const long> c, long r);

/// r^n, or throws BudgetExceeded when above budget.
std::uint64_t checked_block_size(int rank, long r, std::uint64_t budget);

} // namespace vw::kernels
