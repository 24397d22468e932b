#pragma once

#include <cstdint>
#include <vector>

namespace qwalk {

// Closed form for the acceptance probability after f extra repetition
// rounds of a base machine accepting with probability p:
// 1 - (1 - p)(1 - 2p)^(2f). Exactly 0 whenever p = 0.
double amplified_probability(double p, std::int64_t f);

// Two-level model of the repeated computation: amplitude on the accepting
// subspace and on its orthogonal complement. Mass leaves the pair only
// through recorded acceptance events.
struct TwoLevelState {
    double a_acc = 0.0;
    double a_perp = 0.0;
    double p = 0.0;

    // State after the first simulation round: a_acc^2 = p.
    static TwoLevelState initial(double p);

    double acceptance_probability() const { return a_acc * a_acc; }
    double mass() const { return a_acc * a_acc + a_perp * a_perp; }

    // Removes the accepting branch after a measurement.
    void collapse_after_measurement() { a_acc = 0.0; }

    // Un-simulate, phase-flip everything but the initial configuration,
    // re-simulate: maps a unit perpendicular amplitude to
    // 2 sqrt(p(1-p)) on accept and (1-2p) on perpendicular.
    void advance_round();
};

struct AmplifierRun {
    double total = 0.0;
    std::vector<double> round_acceptance; // f+1 unconditional probabilities
};

// Step-by-step simulation over f+1 rounds; total matches the closed form.
AmplifierRun simulate_amplifier(double p, std::int64_t f);

struct AmplificationPlan {
    double p = 0.0;
    std::int64_t f = 0;
    double amplified = 0.0;
    double target = 0.0;
};

// Smallest f >= 0 with amplified_probability(p, f) >= target, by increasing
// search (capped at 10^9 to bound the scan when p is vanishingly small).
AmplificationPlan plan_repetitions(double p, double target);

} // namespace qwalk
