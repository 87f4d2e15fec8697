#include "rabbithunt/rabbits.hpp"

#include "rabbithunt/checked_math.hpp"
#include "rabbithunt/format.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rabbithunt {

namespace {

void require_step(Step n) {
    if (n < 1)
        throw std::invalid_argument("time step must be >= 1");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        out.push_back(cur);
    if (!s.empty() && s.back() == sep)
        out.emplace_back();
    return out;
}

std::int64_t parse_int(const std::string& s) {
    std::int64_t v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("invalid integer parameter: '" + s + "'");
    return v;
}

double parse_real(const std::string& s) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid real parameter: '" + s + "'");
    }
}

} // namespace

std::int64_t position(const LinearRabbit& r, Step n) {
    require_step(n);
    return checked_add(r.a, checked_mul(r.b, n));
}

std::int64_t position(const PolynomialRabbit& r, Step n) {
    require_step(n);
    if (r.coeffs.empty())
        throw std::invalid_argument("polynomial rabbit needs at least one coefficient");
    // Horner, exact.
    std::int64_t acc = r.coeffs.back();
    for (auto it = r.coeffs.rbegin() + 1; it != r.coeffs.rend(); ++it)
        acc = checked_add(*it, checked_mul(acc, n));
    return acc;
}

double position(const RealLinearRabbit& r, Step n) {
    require_step(n);
    return r.a + r.b * static_cast<double>(n);
}

LatticePoint position(const LatticeRabbit2D& r, Step n) {
    require_step(n);
    return {checked_add(r.a1, checked_mul(r.b1, n)), checked_add(r.a2, checked_mul(r.b2, n))};
}

Position position(const RabbitModel& rabbit, Step n) {
    return std::visit([n](const auto& r) -> Position { return position(r, n); }, rabbit);
}

bool is_hit(const RabbitModel& rabbit, const Guess& guess, Step n) {
    return std::visit(
        [&](const auto& r) -> bool {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, LatticeRabbit2D>) {
                if (!std::holds_alternative<LatticePoint>(guess))
                    throw std::invalid_argument("lattice rabbit requires a lattice-point guess");
                return position(r, n) == std::get<LatticePoint>(guess);
            } else {
                if (!std::holds_alternative<std::int64_t>(guess))
                    throw std::invalid_argument("scalar rabbit requires an integer guess");
                const std::int64_t g = std::get<std::int64_t>(guess);
                if constexpr (std::is_same_v<R, RealLinearRabbit>)
                    return std::fabs(position(r, n) - static_cast<double>(g)) <= 0.5;
                else
                    return position(r, n) == g;
            }
        },
        rabbit);
}

bool is_scalar_integer(const RabbitModel& rabbit) {
    return std::holds_alternative<LinearRabbit>(rabbit) ||
           std::holds_alternative<PolynomialRabbit>(rabbit);
}

RabbitModel parse_rabbit(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("rabbit spec must look like kind:p1,p2,... (got '" + spec + "')");
    const std::string kind = spec.substr(0, colon);
    const auto params = split(spec.substr(colon + 1), ',');

    if (kind == "linear") {
        if (params.size() != 2)
            throw std::invalid_argument("linear rabbit takes exactly 2 parameters");
        return LinearRabbit{parse_int(params[0]), parse_int(params[1])};
    }
    if (kind == "polynomial") {
        if (params.empty())
            throw std::invalid_argument("polynomial rabbit takes at least 1 coefficient");
        PolynomialRabbit r;
        for (const auto& p : params)
            r.coeffs.push_back(parse_int(p));
        return r;
    }
    if (kind == "real-linear") {
        if (params.size() != 2)
            throw std::invalid_argument("real-linear rabbit takes exactly 2 parameters");
        return RealLinearRabbit{parse_real(params[0]), parse_real(params[1])};
    }
    if (kind == "lattice" || kind == "lattice-2d") {
        if (params.size() != 4)
            throw std::invalid_argument("lattice rabbit takes exactly 4 parameters");
        return LatticeRabbit2D{parse_int(params[0]), parse_int(params[1]), parse_int(params[2]),
                               parse_int(params[3])};
    }
    throw std::invalid_argument("unknown rabbit kind '" + kind + "'");
}

std::string rabbit_to_string(const RabbitModel& rabbit) {
    std::ostringstream out;
    std::visit(
        [&](const auto& r) {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, LinearRabbit>) {
                out << "linear:" << r.a << ',' << r.b;
            } else if constexpr (std::is_same_v<R, PolynomialRabbit>) {
                out << "polynomial:";
                for (std::size_t i = 0; i < r.coeffs.size(); ++i)
                    out << (i ? "," : "") << r.coeffs[i];
            } else if constexpr (std::is_same_v<R, RealLinearRabbit>) {
                out << "real-linear:" << format_double(r.a) << ',' << format_double(r.b);
            } else {
                out << "lattice:" << r.a1 << ',' << r.a2 << ',' << r.b1 << ',' << r.b2;
            }
        },
        rabbit);
    return out.str();
}

} // namespace rabbithunt
