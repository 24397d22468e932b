#pragma once

#include <cstdint>
#include <vector>

#include "qwalk/graph.hpp"

namespace qwalk {

// Real amplitude vector over ordered vertex pairs, (u,v) stored at u*n + v.
// Exists for cross-validation of the reduced walk; capped at n <= 256.
struct PairState {
    int n = 0;
    std::vector<double> amplitudes;

    static PairState zero(int n);
    static PairState basis(int n, int u, int v);

    double at(int u, int v) const { return amplitudes[static_cast<std::size_t>(u) * n + v]; }
    double& at(int u, int v) { return amplitudes[static_cast<std::size_t>(u) * n + v]; }
    double norm() const;
};

// Amplitudes on the diagonal pairs |v,v> only.
struct DiagonalState {
    int n = 0;
    std::vector<double> amplitudes;

    static DiagonalState zero(int n);
    static DiagonalState basis(int n, int v);
    // 1/sqrt(|verts|) on each listed vertex, zero elsewhere.
    static DiagonalState unit_uniform(int n, const std::vector<int>& verts);

    PairState embed() const;
    double norm() const;
};

DiagonalState diagonal_of(const PairState& state);

// The walk restricted to the diagonal subspace:
// M = ((d-1)/(d+1))^2 I + (4/(d+1)^2) A. Symmetric, nonnegative, rows sum to 1.
struct WalkMatrix {
    int n = 0;
    std::vector<double> entries; // row-major

    double at(int u, int v) const { return entries[static_cast<std::size_t>(u) * n + v]; }
    double& at(int u, int v) { return entries[static_cast<std::size_t>(u) * n + v]; }

    DiagonalState apply(const DiagonalState& state) const;
};

// Reflection about the span of the d+1 pairs (u, v) with v in B(u) = S(u) u {u}:
// F|u,v> = |u,v> - 2/(d+1) sum_{v' in B(u)} |u,v'> when v in B(u), identity
// otherwise. Applied blockwise per u; F^2 = I.
PairState apply_F(const RegularGraph& graph, const PairState& state);

// Exchanges the pair order: amplitude at (u,v) moves to (v,u).
PairState apply_X(const PairState& state);

// Projects onto the diagonal: zeroes every off-diagonal amplitude.
PairState apply_P(const PairState& state);

// Diffusion reflection on a (d+1)-entry vector: y = x - 2/(d+1) (sum x) * ones.
std::vector<double> apply_D(const std::vector<double>& vec);

// Q = P F X F P, applied right to left.
PairState apply_Q(const RegularGraph& graph, const PairState& state);

WalkMatrix reduced_walk_matrix(const RegularGraph& graph);

// M^k applied to the unit vector at `start`, via k matrix-vector products.
DiagonalState walk_power(const RegularGraph& graph, int start, std::int64_t k);

} // namespace qwalk
