#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "unavoidable/subset.hpp"

namespace unav {

/// Visits every partition of [m] into nonempty blocks, generated as
/// restricted growth strings (vertex 1 opens block 0; vertex i joins an
/// existing block or opens the next one). Blocks are reported in order of
/// their smallest element. Returning false from `visit` stops the scan.
void for_each_set_partition(int m, const std::function<bool(std::span<const Subset>)>& visit);

/// Same, restricted to partitions with exactly `blocks` blocks.
void for_each_set_partition(int m, int blocks,
                            const std::function<bool(std::span<const Subset>)>& visit);

/// Stirling number of the second kind S(n, k).
std::uint64_t stirling2(int n, int k);

}  // namespace unav
