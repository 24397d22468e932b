#include "qwalk/decider.hpp"

#include <cmath>
#include <random>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

namespace {

void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n) {
        fail(ErrorCode::VertexOutOfRange,
             std::string(what) + " " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
    }
}

// || state - (1/n_u) sum over component |v,v> ||
double distance_to_component_uniform(const DiagonalState& state,
                                     const ComponentMap& map, int component) {
    const double uniform = 1.0 / map.sizes[component];
    double sum = 0.0;
    for (int v = 0; v < state.n; ++v) {
        const double target = map.component_id[v] == component ? uniform : 0.0;
        const double diff = state.amplitudes[v] - target;
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

} // namespace

DeciderReport decide(const ProblemInstance& instance, std::optional<std::int64_t> k) {
    const RegularGraph& graph = instance.graph;
    validate(graph);
    check_vertex(instance.s, graph.n, "s");
    check_vertex(instance.t, graph.n, "t");

    DeciderReport report;
    report.n = graph.n;
    report.s = instance.s;
    report.t = instance.t;
    report.k = k.has_value() ? *k : required_steps(graph.d, graph.n, 1.0 / (2.0 * graph.n));
    if (report.k < 0) fail(ErrorCode::OutOfRange, "step count must be nonnegative");

    const ComponentMap map = components(graph);
    report.oracle_connected = map.connected(instance.s, instance.t);

    const DiagonalState state = walk_power(graph, instance.s, report.k);
    const double amplitude = state.amplitudes[instance.t];
    report.acceptance_probability = amplitude * amplitude;
    report.threshold = 1.0 / (4.0 * static_cast<double>(graph.n) * graph.n);
    report.accept = report.acceptance_probability > kZeroProbabilityTolerance;
    report.distance_to_uniform =
        distance_to_component_uniform(state, map, map.component_id[instance.s]);
    return report;
}

double convergence_distance(const RegularGraph& graph, int u, std::int64_t l) {
    const DiagonalState state = walk_power(graph, u, l);
    const ComponentMap map = components(graph);
    return distance_to_component_uniform(state, map, map.component_id[u]);
}

double ClassicalDistribution::sum() const {
    double total = 0.0;
    for (const double p : probabilities) total += p;
    return total;
}

ClassicalDistribution classical_distribution(const RegularGraph& graph, int u, std::int64_t l) {
    validate(graph);
    check_vertex(u, graph.n, "start vertex");
    if (l < 0) fail(ErrorCode::OutOfRange, "step count must be nonnegative");

    ClassicalDistribution dist{graph.n, std::vector<double>(graph.n, 0.0)};
    dist.probabilities[u] = 1.0;
    std::vector<double> next(graph.n, 0.0);
    const double hop = 1.0 / graph.d;
    for (std::int64_t step = 0; step < l; ++step) {
        std::fill(next.begin(), next.end(), 0.0);
        for (int v = 0; v < graph.n; ++v) {
            const double share = dist.probabilities[v] * hop;
            if (share == 0.0) continue;
            for (const int w : graph.adjacency[v]) next[w] += share;
        }
        dist.probabilities.swap(next);
    }
    return dist;
}

double total_variation_to_uniform(const ClassicalDistribution& dist,
                                  const std::vector<int>& component_vertices) {
    std::vector<char> inside(dist.n, 0);
    for (const int v : component_vertices) inside[v] = 1;
    const double uniform = 1.0 / static_cast<double>(component_vertices.size());
    double sum = 0.0;
    for (int v = 0; v < dist.n; ++v) {
        sum += std::abs(dist.probabilities[v] - (inside[v] ? uniform : 0.0));
    }
    return 0.5 * sum;
}

bool sample_acceptance(double probability, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    // 53-bit draw in [0, 1), independent of distribution implementations
    const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return r < probability;
}

} // namespace qwalk
