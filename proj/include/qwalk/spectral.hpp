#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qwalk/graph.hpp"

namespace qwalk {

// Per-component eigenvalue analysis. lambdas are the adjacency eigenvalues
// in descending order, mus their images under the walk map; gap = lambda_1 -
// lambda_2. overlaps, when present, are the squared coefficients of a start
// basis vector in the walk eigenbasis of the component.
struct SpectralReport {
    int component = 0;
    int n_u = 0;
    std::vector<double> lambdas;
    std::vector<double> mus;
    double gap = 0.0;
    std::optional<int> start;
    std::optional<std::vector<double>> overlaps;
};

// All eigenvalues of the component's adjacency matrix, descending.
std::vector<double> adjacency_spectrum(const RegularGraph& graph, const ComponentMap& map,
                                       int component);

// mu_j = (4 lambda_j + (d-1)^2) / (d+1)^2, elementwise; preserves descending
// order since the map is increasing in lambda.
std::vector<double> walk_spectrum(const std::vector<double>& lambdas, int d);

struct GapCheck {
    bool ok = false;
    double margin = 0.0; // min over j >= 2 of bound - lambda_j
};

// Checks lambda_j <= d - 2/(d n_u^2) for j >= 2 on a connected component.
GapCheck check_gap_bound(const SpectralReport& report, int d);

// (1 - 8/(d (d+1)^2 n_u^2))^l, the bound on the distance of the l-step walk
// from uniform over the component.
double distance_bound(int d, int n_u, std::int64_t l);

// ceil(d (d+1)^2 n^2 ln(1/epsilon) / 8), clamped to at least 1.
std::int64_t required_steps(int d, int n, double epsilon);

SpectralReport analyze_component(const RegularGraph& graph, const ComponentMap& map,
                                 int component, std::optional<int> start = std::nullopt);

// One report per component; overlaps filled in for the start's component.
std::vector<SpectralReport> analyze(const RegularGraph& graph,
                                    std::optional<int> start = std::nullopt);

} // namespace qwalk
