#include "rabbithunt/enumeration.hpp"

#include "rabbithunt/checked_math.hpp"

#include <cmath>
#include <stdexcept>

namespace rabbithunt {

namespace {

void require_positive_index(Index k, const char* where) {
    if (k < 1)
        throw std::invalid_argument(std::string(where) + ": index must be >= 1");
}

// floor(sqrt(v)) for v >= 0, exact (the float estimate is corrected with
// 128-bit products so no boundary value can round the wrong way).
std::int64_t isqrt(std::int64_t v) {
    if (v < 0)
        throw std::invalid_argument("isqrt: negative input");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > static_cast<unsigned __int128>(v))
        --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= static_cast<unsigned __int128>(v))
        ++r;
    return r;
}

} // namespace

std::array<std::int64_t, 2> snake_forward(Index k) {
    require_positive_index(k, "snake_forward");
    if (k == 1)
        return {0, 0};
    // Ring m holds indices (2m-1)^2 + 1 .. (2m+1)^2.
    const std::int64_t m = (isqrt(k - 1) + 1) / 2;
    const std::int64_t t = k - (2 * m - 1) * (2 * m - 1) - 1; // 0-based offset in ring
    if (t <= 2 * m - 1)
        return {m, -m + 1 + t}; // east side, heading north
    if (t <= 4 * m - 1)
        return {3 * m - 1 - t, m}; // north side, heading west
    if (t <= 6 * m - 1)
        return {-m, 5 * m - 1 - t}; // west side, heading south
    return {t - 7 * m + 1, -m}; // south side, heading east
}

Index snake_inverse(std::int64_t x, std::int64_t y) {
    const std::int64_t m = std::max(checked_abs(x), checked_abs(y));
    if (m == 0)
        return 1;
    const std::int64_t ring = checked_sub(checked_mul(2, m), 1);
    const Index base = checked_mul(ring, ring);
    std::int64_t t;
    if (x == m && y > -m)
        t = y + m - 1;
    else if (y == m)
        t = 3 * m - 1 - x;
    else if (x == -m)
        t = 5 * m - 1 - y;
    else
        t = x + 7 * m - 1;
    return checked_add(base, t + 1);
}

std::int64_t line_forward(Index k) {
    require_positive_index(k, "line_forward");
    return (k % 2 == 0) ? k / 2 : -((k - 1) / 2);
}

Index line_inverse(std::int64_t z) {
    if (z > 0)
        return checked_mul(2, z);
    return checked_add(checked_mul(-2, z), 1);
}

Index pair_index(Index i, Index j) {
    require_positive_index(i, "pair_index");
    require_positive_index(j, "pair_index");
    const Index i0 = i - 1, j0 = j - 1;
    const Index s = checked_add(i0, j0);
    // s*(s+1)/2 without intermediate overflow: one factor is even.
    const Index tri = (s % 2 == 0) ? checked_mul(s / 2, s + 1) : checked_mul(s, (s + 1) / 2);
    return checked_add(checked_add(tri, j0), 1);
}

std::array<Index, 2> unpair_index(Index k) {
    require_positive_index(k, "unpair_index");
    const Index z = k - 1;
    auto w = static_cast<std::int64_t>((std::sqrt(8.0 * static_cast<double>(z) + 1.0) - 1.0) / 2.0);
    if (w < 0)
        w = 0;
    const auto tri = [](std::int64_t n) {
        return (static_cast<unsigned __int128>(n) * (n + 1)) / 2;
    };
    while (tri(w) > static_cast<unsigned __int128>(z))
        --w;
    while (tri(w + 1) <= static_cast<unsigned __int128>(z))
        ++w;
    const Index j0 = z - static_cast<Index>(tri(w));
    const Index i0 = w - j0;
    return {i0 + 1, j0 + 1};
}

std::array<std::int64_t, 3> z3_forward(Index k) {
    const auto [i, j] = unpair_index(k);
    const auto [x, y] = snake_forward(i);
    return {x, y, line_forward(j)};
}

Index z3_inverse(std::int64_t x, std::int64_t y, std::int64_t z) {
    return pair_index(snake_inverse(x, y), line_inverse(z));
}

std::array<std::int64_t, 4> z4_forward(Index k) {
    const auto [i, j] = unpair_index(k);
    const auto [a1, a2] = snake_forward(i);
    const auto [b1, b2] = snake_forward(j);
    return {a1, a2, b1, b2};
}

Index z4_inverse(std::int64_t a1, std::int64_t a2, std::int64_t b1, std::int64_t b2) {
    return pair_index(snake_inverse(a1, a2), snake_inverse(b1, b2));
}

std::vector<std::int64_t> zd_forward(int d, Index k) {
    switch (d) {
    case 2: {
        const auto p = snake_forward(k);
        return {p[0], p[1]};
    }
    case 3: {
        const auto p = z3_forward(k);
        return {p[0], p[1], p[2]};
    }
    case 4: {
        const auto p = z4_forward(k);
        return {p[0], p[1], p[2], p[3]};
    }
    default:
        throw std::invalid_argument("zd_forward: dimension must be 2, 3 or 4");
    }
}

Index zd_inverse(int d, const std::vector<std::int64_t>& point) {
    if (static_cast<int>(point.size()) != d)
        throw std::invalid_argument("zd_inverse: point size does not match dimension");
    switch (d) {
    case 2:
        return snake_inverse(point[0], point[1]);
    case 3:
        return z3_inverse(point[0], point[1], point[2]);
    case 4:
        return z4_inverse(point[0], point[1], point[2], point[3]);
    default:
        throw std::invalid_argument("zd_inverse: dimension must be 2, 3 or 4");
    }
}

Index covering_bound(int d, std::int64_t M) {
    if (M < 0)
        throw std::invalid_argument("covering_bound: box radius must be >= 0");
    const Index side = checked_add(checked_mul(2, M), 1);
    const Index square = checked_mul(side, side); // covers [-M,M]^2 exactly
    switch (d) {
    case 2:
        return square;
    case 3:
        return pair_index(square, side); // pairing is monotone in both slots
    case 4:
        return pair_index(square, square);
    default:
        throw std::invalid_argument("covering_bound: dimension must be 2, 3 or 4");
    }
}

} // namespace rabbithunt
