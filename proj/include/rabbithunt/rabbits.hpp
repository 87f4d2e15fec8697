#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace rabbithunt {

// Time steps are 1-based: the first hammer is thrown at n = 1 and the
// pre-hop start value alone is never a target.
using Step = std::int64_t;

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    bool operator==(const LatticePoint&) const = default;
};

// Trajectory value at a step: scalar integer, real, or lattice point.
using Position = std::variant<std::int64_t, double, LatticePoint>;

// Hammer throws land on integer targets only.
using Guess = std::variant<std::int64_t, LatticePoint>;

// R_n = a + b*n, exact.
struct LinearRabbit {
    std::int64_t a = 0;
    std::int64_t b = 0;
};

// R_n = sum_i coeffs[i] * n^i, exact; coeffs in ascending degree.
struct PolynomialRabbit {
    std::vector<std::int64_t> coeffs;
};

// R_n = a + b*n in double precision; a throw g hits when |R_n - g| <= 1/2
// (the boundary case counts as a hit).
struct RealLinearRabbit {
    double a = 0.0;
    double b = 0.0;
};

// R_n = (a1 + n*b1, a2 + n*b2), componentwise exact.
struct LatticeRabbit2D {
    std::int64_t a1 = 0;
    std::int64_t a2 = 0;
    std::int64_t b1 = 0;
    std::int64_t b2 = 0;
};

using RabbitModel = std::variant<LinearRabbit, PolynomialRabbit, RealLinearRabbit, LatticeRabbit2D>;

std::int64_t position(const LinearRabbit& r, Step n);
std::int64_t position(const PolynomialRabbit& r, Step n);
double position(const RealLinearRabbit& r, Step n);
LatticePoint position(const LatticeRabbit2D& r, Step n);
Position position(const RabbitModel& rabbit, Step n);

bool is_hit(const RabbitModel& rabbit, const Guess& guess, Step n);

// True when the rabbit's trajectory is a scalar integer sequence (the only
// models the scalar probabilistic hunter can chase).
bool is_scalar_integer(const RabbitModel& rabbit);

// Mini-language used by the CLI and config files, e.g. "linear:5,-3",
// "polynomial:0,0,1", "real-linear:0.3,1.0", "lattice:1,2,3,4".
RabbitModel parse_rabbit(const std::string& spec);
std::string rabbit_to_string(const RabbitModel& rabbit);

} // namespace rabbithunt
