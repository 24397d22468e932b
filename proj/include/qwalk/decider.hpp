#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qwalk/graph.hpp"

namespace qwalk {

struct DeciderReport {
    int n = 0;
    int s = 0;
    int t = 0;
    std::int64_t k = 0;
    double acceptance_probability = 0.0; // <t,t| Q^k |s,s> squared
    double threshold = 0.0;              // 1/(4 n^2)
    bool accept = false;
    bool oracle_connected = false;
    double distance_to_uniform = 0.0;
};

// Amplitudes smaller than this in absolute value count as structural zero.
inline constexpr double kZeroProbabilityTolerance = 1e-10;

// Runs the walk for k steps (default: required_steps(d, n, 1/(2n))) and
// accepts iff the probability of landing on |t,t> is nonzero beyond rounding.
// Connected pairs reach at least 1/(4n^2); disconnected pairs are exactly
// zero up to rounding.
DeciderReport decide(const ProblemInstance& instance,
                     std::optional<std::int64_t> k = std::nullopt);

// || Q^l |u,u> - uniform over the component of u ||.
double convergence_distance(const RegularGraph& graph, int u, std::int64_t l);

struct ClassicalDistribution {
    int n = 0;
    std::vector<double> probabilities;

    double sum() const;
};

// l steps of the classical chain with transition probability 1/d per edge.
ClassicalDistribution classical_distribution(const RegularGraph& graph, int u, std::int64_t l);

// Total variation distance to the uniform distribution over the listed
// vertices (the support component of the walk).
double total_variation_to_uniform(const ClassicalDistribution& dist,
                                  const std::vector<int>& component_vertices);

// Demonstration-only sampling of the accept verdict; deterministic in seed.
bool sample_acceptance(double probability, std::uint64_t seed);

} // namespace qwalk
