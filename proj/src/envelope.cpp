#include "rabbithunt/envelope.hpp"

#include <cmath>
#include <limits>
#include <mpfr.h>
#include <stdexcept>

namespace rabbithunt {

namespace {

// floor of a transcendental expression, interval-guarded: evaluate in long
// double first and accept only when the value is comfortably far from an
// integer boundary relative to the evaluation error; otherwise re-evaluate
// with 256-bit MPFR. Kind 0 is n*ln(n), kind 1 is n*ln(ln(n+1)).
std::int64_t floor_guarded(Step n, int kind) {
    const auto x = static_cast<long double>(n);
    const long double value = (kind == 0) ? x * std::log(x) : x * std::log(std::log(x + 1.0L));
    const long double fl = std::floor(value);
    const long double frac = value - fl;
    const long double band =
        64.0L * std::numeric_limits<long double>::epsilon() * std::max(std::fabs(value), 1.0L);
    if (frac > band && (1.0L - frac) > band)
        return static_cast<std::int64_t>(fl);

    mpfr_t t;
    mpfr_init2(t, 256);
    mpfr_set_si(t, static_cast<long>(n) + (kind == 1 ? 1 : 0), MPFR_RNDN);
    mpfr_log(t, t, MPFR_RNDN);
    if (kind == 1)
        mpfr_log(t, t, MPFR_RNDN);
    mpfr_mul_si(t, t, static_cast<long>(n), MPFR_RNDN);
    const std::int64_t r = mpfr_get_si(t, MPFR_RNDD);
    mpfr_clear(t);
    return r;
}

void require_step(Step n) {
    if (n < 1)
        throw std::invalid_argument("envelope argument must be >= 1");
}

} // namespace

const char* to_string(SeriesClass c) {
    switch (c) {
    case SeriesClass::diverges:
        return "diverges";
    case SeriesClass::converges:
        return "converges";
    default:
        return "unknown";
    }
}

std::int64_t envelope_klogk(Step n) {
    require_step(n);
    if (n == 1)
        return 0;
    return floor_guarded(n, 0);
}

std::int64_t envelope_xloglog(Step n) {
    require_step(n);
    if (n == 1)
        return 0; // ln(ln 2) < 0
    return std::max<std::int64_t>(0, floor_guarded(n, 1));
}

std::int64_t envelope_k15(Step n) {
    require_step(n);
    // n^(3/2) = n * sqrt(n); exact floor via integer square root of n^3.
    const auto cube = static_cast<unsigned __int128>(n) * n * n;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)) * static_cast<double>(n));
    while (static_cast<unsigned __int128>(r) * r > cube)
        --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= cube)
        ++r;
    return static_cast<std::int64_t>(r);
}

const std::vector<Envelope>& builtin_envelopes() {
    static const std::vector<Envelope> registry = {
        {"klogk", SeriesClass::diverges, true, envelope_klogk,
         [](Step n) { return static_cast<double>(n) * std::log(static_cast<double>(n)); }},
        {"xloglog", SeriesClass::diverges, true, envelope_xloglog,
         [](Step n) {
             return std::max(0.0, static_cast<double>(n) * std::log(std::log(static_cast<double>(n) + 1.0)));
         }},
        {"k15", SeriesClass::converges, true, envelope_k15,
         [](Step n) { return std::pow(static_cast<double>(n), 1.5); }},
    };
    return registry;
}

const Envelope& find_envelope(const std::string& name) {
    for (const auto& env : builtin_envelopes())
        if (env.name == name)
            return env;
    throw std::invalid_argument("unknown envelope '" + name + "'");
}

EnvelopeValidation validate_envelope(const Envelope& h, Step horizon) {
    if (horizon < 10)
        throw std::invalid_argument("validation horizon must be >= 10");

    EnvelopeValidation report;
    report.envelope = h.name;
    report.horizon = horizon;
    report.declared_class = h.reciprocal_series;

    // (1) monotonicity sweep, with the reciprocal partial sums accumulated
    // in the same pass.
    report.monotone = true;
    double recip_sum = 0.0;
    Step next_checkpoint = 10;
    std::int64_t prev = h.eval(1);
    for (Step n = 1; n <= horizon; ++n) {
        const std::int64_t value = n == 1 ? prev : h.eval(n);
        if (value < prev) {
            report.monotone = false;
            if (report.first_monotone_violation == 0)
                report.first_monotone_violation = n;
        }
        prev = value;
        if (n >= 2)
            recip_sum += 1.0 / static_cast<double>(std::max<std::int64_t>(value, 1));
        if (n == next_checkpoint) {
            report.reciprocal_partial_sums.emplace_back(n, recip_sum);
            next_checkpoint *= 10;
        }
    }
    if (report.reciprocal_partial_sums.empty() ||
        report.reciprocal_partial_sums.back().first != horizon)
        report.reciprocal_partial_sums.emplace_back(horizon, recip_sum);

    // (2) superlinearity: h must eventually outgrow every affine A + B*n.
    // No finite check can certify that, so built-ins are certified by
    // construction and everything else gets the h(2^j)/2^j trend heuristic:
    // the tail of the sampled ratio sequence must be strictly increasing.
    Step pow2 = 2;
    while (pow2 * 2 <= horizon && pow2 <= (std::int64_t{1} << 40))
        pow2 *= 2;
    for (Step p = 2; p <= pow2; p *= 2)
        report.growth_ratios.push_back(static_cast<double>(h.eval(p)) / static_cast<double>(p));
    if (h.superlinear_certified) {
        report.superlinearity = SuperlinearityCheck::certified;
    } else {
        const auto& g = report.growth_ratios;
        bool tail_increasing = g.size() >= 3;
        for (std::size_t i = g.size() >= 3 ? g.size() - 3 : 0; i + 1 < g.size(); ++i)
            tail_increasing = tail_increasing && g[i] < g[i + 1];
        report.superlinearity =
            tail_increasing ? SuperlinearityCheck::heuristic_pass : SuperlinearityCheck::heuristic_fail;
    }

    report.valid = report.monotone;
    return report;
}

} // namespace rabbithunt
