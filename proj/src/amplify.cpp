#include "qwalk/amplify.hpp"

#include <cmath>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        fail(ErrorCode::OutOfRange, "probability must lie in [0, 1]");
    }
}

void check_rounds(std::int64_t f) {
    if (f < 0) fail(ErrorCode::OutOfRange, "repetition count must be nonnegative");
}

} // namespace

double amplified_probability(double p, std::int64_t f) {
    check_probability(p);
    check_rounds(f);
    const double q = (1.0 - 2.0 * p) * (1.0 - 2.0 * p);
    return 1.0 - (1.0 - p) * std::pow(q, static_cast<double>(f));
}

TwoLevelState TwoLevelState::initial(double p) {
    check_probability(p);
    TwoLevelState state;
    state.p = p;
    state.a_acc = std::sqrt(p);
    state.a_perp = std::sqrt(1.0 - p);
    return state;
}

void TwoLevelState::advance_round() {
    const double perp = a_perp;
    a_acc = 2.0 * std::sqrt(p * (1.0 - p)) * perp;
    a_perp = (1.0 - 2.0 * p) * perp;
}

AmplifierRun simulate_amplifier(double p, std::int64_t f) {
    check_probability(p);
    check_rounds(f);
    AmplifierRun run;
    run.round_acceptance.reserve(static_cast<std::size_t>(f) + 1);

    TwoLevelState state = TwoLevelState::initial(p);
    run.round_acceptance.push_back(state.acceptance_probability());
    for (std::int64_t round = 1; round <= f; ++round) {
        state.collapse_after_measurement();
        state.advance_round();
        run.round_acceptance.push_back(state.acceptance_probability());
    }
    for (const double r : run.round_acceptance) run.total += r;
    return run;
}

AmplificationPlan plan_repetitions(double p, double target) {
    if (p == 0.0) {
        fail(ErrorCode::Unreachable, "base probability 0 is amplified to 0 for every f");
    }
    if (!(p > 0.0 && p <= 1.0)) {
        fail(ErrorCode::OutOfRange, "base probability must lie in (0, 1]");
    }
    if (!(target > 0.0 && target < 1.0)) {
        fail(ErrorCode::OutOfRange, "target must lie strictly between 0 and 1");
    }

    constexpr std::int64_t kSearchCap = 1000000000;
    const double q = (1.0 - 2.0 * p) * (1.0 - 2.0 * p);
    double decay = 1.0; // q^f
    std::int64_t f = 0;
    while (1.0 - (1.0 - p) * decay < target) {
        if (f >= kSearchCap) {
            fail(ErrorCode::Unreachable,
                 "no repetition count below " + std::to_string(kSearchCap) + " reaches the target");
        }
        decay *= q;
        ++f;
    }
    return {p, f, amplified_probability(p, f), target};
}

} // namespace qwalk
