#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rabbithunt {

// Integer positions and parameters are exact by contract: any operation that
// would wrap int64_t must surface as an error instead.
class OverflowError : public std::overflow_error {
  public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
    return checked_sub(0, a);
}

inline std::int64_t checked_abs(std::int64_t a) {
    return a < 0 ? checked_neg(a) : a;
}

} // namespace rabbithunt
