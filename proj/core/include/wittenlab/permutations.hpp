#pragma once

#include "wittenlab/partition.hpp"

#include <cstdint>
#include <vector>

namespace wittenlab {

// Permutation of {0..d-1} as an image table.
using Perm = std::vector<uint8_t>;

Perm perm_identity(int d);
// b applied first, then a.
Perm perm_compose(const Perm& a, const Perm& b);
Partition cycle_type(const Perm& p);
// Canonical permutation with the given cycle type: consecutive cycles.
Perm perm_of_type(const Partition& type, int d);
// All transpositions of S_d in a fixed order.
std::vector<std::pair<uint8_t, uint8_t>> transpositions(int d);

// True if the cycles of sigma0 together with the swapped pairs connect
// {0..d-1}.
bool acts_transitively(const Perm& sigma0,
                       const std::vector<std::pair<uint8_t, uint8_t>>& pairs, int d);

}  // namespace wittenlab
