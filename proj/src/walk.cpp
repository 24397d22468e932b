#include "qwalk/walk.hpp"

#include <cmath>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr int kPairStateMaxVertices = 256;

void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n) {
        fail(ErrorCode::VertexOutOfRange,
             std::string(what) + " " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
    }
}

void check_same_n(int graph_n, int state_n) {
    if (graph_n != state_n) {
        fail(ErrorCode::DimensionMismatch, "graph has " + std::to_string(graph_n) +
                                               " vertices, state has " + std::to_string(state_n));
    }
}

double vector_norm(const std::vector<double>& values) {
    double sum = 0.0;
    for (const double x : values) sum += x * x;
    return std::sqrt(sum);
}

} // namespace

PairState PairState::zero(int n) {
    if (n < 1 || n > kPairStateMaxVertices) {
        fail(ErrorCode::OutOfRange, "pair states support 1 <= n <= " +
                                        std::to_string(kPairStateMaxVertices) + ", got " +
                                        std::to_string(n));
    }
    return {n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
}

PairState PairState::basis(int n, int u, int v) {
    PairState state = zero(n);
    check_vertex(u, n, "vertex");
    check_vertex(v, n, "vertex");
    state.at(u, v) = 1.0;
    return state;
}

double PairState::norm() const { return vector_norm(amplitudes); }

DiagonalState DiagonalState::zero(int n) {
    if (n < 1) fail(ErrorCode::OutOfRange, "need at least one vertex");
    return {n, std::vector<double>(n, 0.0)};
}

DiagonalState DiagonalState::basis(int n, int v) {
    DiagonalState state = zero(n);
    check_vertex(v, n, "vertex");
    state.amplitudes[v] = 1.0;
    return state;
}

DiagonalState DiagonalState::unit_uniform(int n, const std::vector<int>& verts) {
    DiagonalState state = zero(n);
    const double value = 1.0 / std::sqrt(static_cast<double>(verts.size()));
    for (const int v : verts) {
        check_vertex(v, n, "vertex");
        state.amplitudes[v] = value;
    }
    return state;
}

PairState DiagonalState::embed() const {
    PairState state = PairState::zero(n);
    for (int v = 0; v < n; ++v) state.at(v, v) = amplitudes[v];
    return state;
}

double DiagonalState::norm() const { return vector_norm(amplitudes); }

DiagonalState diagonal_of(const PairState& state) {
    DiagonalState diag = DiagonalState::zero(state.n);
    for (int v = 0; v < state.n; ++v) diag.amplitudes[v] = state.at(v, v);
    return diag;
}

DiagonalState WalkMatrix::apply(const DiagonalState& state) const {
    check_same_n(n, state.n);
    DiagonalState out = DiagonalState::zero(n);
    const double* row = entries.data();
    for (int u = 0; u < n; ++u, row += n) {
        double sum = 0.0;
        for (int v = 0; v < n; ++v) sum += row[v] * state.amplitudes[v];
        out.amplitudes[u] = sum;
    }
    return out;
}

PairState apply_F(const RegularGraph& graph, const PairState& state) {
    check_same_n(graph.n, state.n);
    PairState out = state;
    const double factor = 2.0 / (graph.d + 1);
    for (int u = 0; u < graph.n; ++u) {
        double sum = state.at(u, u);
        for (const int v : graph.adjacency[u]) sum += state.at(u, v);
        const double shift = factor * sum;
        out.at(u, u) -= shift;
        for (const int v : graph.adjacency[u]) out.at(u, v) -= shift;
    }
    return out;
}

PairState apply_X(const PairState& state) {
    PairState out = PairState::zero(state.n);
    for (int u = 0; u < state.n; ++u) {
        for (int v = 0; v < state.n; ++v) out.at(v, u) = state.at(u, v);
    }
    return out;
}

PairState apply_P(const PairState& state) {
    PairState out = PairState::zero(state.n);
    for (int v = 0; v < state.n; ++v) out.at(v, v) = state.at(v, v);
    return out;
}

std::vector<double> apply_D(const std::vector<double>& vec) {
    if (vec.size() < 2) {
        fail(ErrorCode::BadLength, "diffusion needs at least 2 entries, got " +
                                       std::to_string(vec.size()));
    }
    double sum = 0.0;
    for (const double x : vec) sum += x;
    const double shift = 2.0 / static_cast<double>(vec.size()) * sum;
    std::vector<double> out(vec);
    for (double& x : out) x -= shift;
    return out;
}

PairState apply_Q(const RegularGraph& graph, const PairState& state) {
    return apply_P(apply_F(graph, apply_X(apply_F(graph, apply_P(state)))));
}

WalkMatrix reduced_walk_matrix(const RegularGraph& graph) {
    const double dd = graph.d;
    const double stay = (dd - 1.0) * (dd - 1.0) / ((dd + 1.0) * (dd + 1.0));
    const double hop = 4.0 / ((dd + 1.0) * (dd + 1.0));
    WalkMatrix matrix{graph.n,
                      std::vector<double>(static_cast<std::size_t>(graph.n) * graph.n, 0.0)};
    for (int u = 0; u < graph.n; ++u) {
        matrix.at(u, u) = stay;
        for (const int v : graph.adjacency[u]) matrix.at(u, v) = hop;
    }
    return matrix;
}

DiagonalState walk_power(const RegularGraph& graph, int start, std::int64_t k) {
    check_vertex(start, graph.n, "start vertex");
    if (k < 0) fail(ErrorCode::OutOfRange, "step count must be nonnegative");
    const int n = graph.n;
    const double dd = graph.d;
    const double stay = (dd - 1.0) * (dd - 1.0) / ((dd + 1.0) * (dd + 1.0));
    const double hop = 4.0 / ((dd + 1.0) * (dd + 1.0));
    std::vector<double> current(n, 0.0);
    std::vector<double> scratch(n, 0.0);
    current[start] = 1.0;
    // The matrix has d + 1 nonzero entries per row, so step via the adjacency
    // lists instead of a dense matvec.
    for (std::int64_t step = 0; step < k; ++step) {
        for (int u = 0; u < n; ++u) {
            double sum = 0.0;
            for (const int v : graph.adjacency[u]) sum += current[v];
            scratch[u] = stay * current[u] + hop * sum;
        }
        current.swap(scratch);
    }
    return {n, std::move(current)};
}

} // namespace qwalk
