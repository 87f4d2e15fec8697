#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace rabbithunt {

// Explicit bijections between 1-based indices and Z^d lattice points.
//
// d = 2 is the counterclockwise square spiral with index 1 at the origin and
// index 2 at (1, 0); it closes the box [-m, m]^2 exactly at index (2m+1)^2.
// d = 3 and d = 4 are built from the d = 2 map (and a zigzag N <-> Z map)
// glued with the Cantor pairing, so round trips stay exact and every finite
// box is covered by a computable index bound.

using Index = std::int64_t;

std::array<std::int64_t, 2> snake_forward(Index k);
Index snake_inverse(std::int64_t x, std::int64_t y);

// Zigzag map 1 -> 0, 2 -> 1, 3 -> -1, 4 -> 2, ...
std::int64_t line_forward(Index k);
Index line_inverse(std::int64_t z);

// Cantor pairing on 1-based indices.
Index pair_index(Index i, Index j);
std::array<Index, 2> unpair_index(Index k);

std::array<std::int64_t, 3> z3_forward(Index k);
Index z3_inverse(std::int64_t x, std::int64_t y, std::int64_t z);

std::array<std::int64_t, 4> z4_forward(Index k);
Index z4_inverse(std::int64_t a1, std::int64_t a2, std::int64_t b1, std::int64_t b2);

// Generic front for the CLI and bindings; d must be 2, 3 or 4.
std::vector<std::int64_t> zd_forward(int d, Index k);
Index zd_inverse(int d, const std::vector<std::int64_t>& point);

// Smallest index bound N such that every point of [-M, M]^d appears among
// indices 1..N under the maps above.
Index covering_bound(int d, std::int64_t M);

} // namespace rabbithunt
