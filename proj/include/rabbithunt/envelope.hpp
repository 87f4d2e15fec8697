#pragma once

#include "rabbithunt/rabbits.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rabbithunt {

// Whether the reciprocal series sum(1/h(k)) diverges. Finite computation
// cannot decide this, so the registry carries the known class for built-in
// envelopes and "unknown" for anything user-registered.
enum class SeriesClass { diverges, converges, unknown };

const char* to_string(SeriesClass c);

// Search envelope h: at step n the probabilistic hunter throws uniformly on
// the integers of [-h(n), h(n)]. A workable envelope must be non-decreasing,
// eventually dominate every affine function of n, and keep sum(1/h(k))
// divergent.
struct Envelope {
    std::string name;
    SeriesClass reciprocal_series = SeriesClass::unknown;
    // Set when the superlinearity requirement holds by construction, not
    // just by a finite-sample check.
    bool superlinear_certified = false;
    std::function<std::int64_t(Step)> eval;
    // Unfloored companion value (e.g. n*ln(n)); used by the series
    // diagnostics that need the smooth form. May be null.
    std::function<double(Step)> eval_real;
};

// floor(n * ln(n)); h(1) = 0.
std::int64_t envelope_klogk(Step n);
// floor(n * ln(ln(n + 1))), clamped below at 0.
std::int64_t envelope_xloglog(Step n);
// floor(n^1.5): monotone and superlinear, but its reciprocal series
// converges, so it is rejected as a hunting envelope.
std::int64_t envelope_k15(Step n);

// Registry of built-in envelopes: "klogk", "xloglog", "k15".
const std::vector<Envelope>& builtin_envelopes();
const Envelope& find_envelope(const std::string& name);

enum class SuperlinearityCheck { certified, heuristic_pass, heuristic_fail };

struct EnvelopeValidation {
    std::string envelope;
    Step horizon = 0;

    bool monotone = false;
    Step first_monotone_violation = 0; // 0 when none

    SuperlinearityCheck superlinearity = SuperlinearityCheck::heuristic_fail;
    // Sampled h(2^j)/2^j ratios backing the heuristic.
    std::vector<double> growth_ratios;

    // Partial sums of 1/max(h(k),1) at power-of-ten checkpoints <= horizon.
    std::vector<std::pair<Step, double>> reciprocal_partial_sums;
    SeriesClass declared_class = SeriesClass::unknown;

    // Failing monotonicity disqualifies the function outright; the report
    // carries the rest as evidence.
    bool valid = false;
};

EnvelopeValidation validate_envelope(const Envelope& h, Step horizon);

} // namespace rabbithunt
