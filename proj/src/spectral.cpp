#include "qwalk/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

// Dense-method size cap; components stay well below it in practice.
constexpr int kMaxDenseSize = 256;

Eigen::MatrixXd component_adjacency(const RegularGraph& graph, const std::vector<int>& verts) {
    const int n_u = static_cast<int>(verts.size());
    if (n_u > kMaxDenseSize) {
        fail(ErrorCode::OutOfRange, "component of size " + std::to_string(n_u) +
                                        " exceeds the dense eigensolver cap of " +
                                        std::to_string(kMaxDenseSize));
    }
    std::vector<int> local(graph.n, -1);
    for (int i = 0; i < n_u; ++i) local[verts[i]] = i;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_u, n_u);
    for (int i = 0; i < n_u; ++i) {
        for (const int v : graph.adjacency[verts[i]]) {
            a(i, local[v]) = 1.0;
        }
    }
    return a;
}

void check_component_index(const ComponentMap& map, int component) {
    if (component < 0 || component >= map.count()) {
        fail(ErrorCode::OutOfRange, "component " + std::to_string(component) + " of " +
                                        std::to_string(map.count()));
    }
}

} // namespace

std::vector<double> adjacency_spectrum(const RegularGraph& graph, const ComponentMap& map,
                                       int component) {
    check_component_index(map, component);
    const auto verts = map.vertices_of(component);
    const Eigen::MatrixXd a = component_adjacency(graph, verts);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    std::vector<double> lambdas(solver.eigenvalues().data(),
                                solver.eigenvalues().data() + verts.size());
    std::reverse(lambdas.begin(), lambdas.end());
    return lambdas;
}

std::vector<double> walk_spectrum(const std::vector<double>& lambdas, int d) {
    if (d < 2) fail(ErrorCode::OutOfRange, "degree must be at least 2");
    const double denom = static_cast<double>(d + 1) * (d + 1);
    const double offset = static_cast<double>(d - 1) * (d - 1);
    std::vector<double> mus;
    mus.reserve(lambdas.size());
    for (const double lambda : lambdas) {
        mus.push_back((4.0 * lambda + offset) / denom);
    }
    return mus;
}

GapCheck check_gap_bound(const SpectralReport& report, int d) {
    if (report.n_u < 2) {
        fail(ErrorCode::NotConnectedComponent,
             "gap bound needs a connected component with at least 2 vertices");
    }
    const double bound =
        d - 2.0 / (static_cast<double>(d) * report.n_u * report.n_u);
    GapCheck check;
    check.margin = std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j < report.lambdas.size(); ++j) {
        check.margin = std::min(check.margin, bound - report.lambdas[j]);
    }
    check.ok = check.margin >= -1e-9;
    return check;
}

double distance_bound(int d, int n_u, std::int64_t l) {
    const double base =
        1.0 - 8.0 / (static_cast<double>(d) * (d + 1) * (d + 1) * n_u * n_u);
    return std::pow(base, static_cast<double>(l));
}

std::int64_t required_steps(int d, int n, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        fail(ErrorCode::BadEpsilon, "epsilon must lie strictly between 0 and 1");
    }
    const double raw = static_cast<double>(d) * (d + 1) * (d + 1) * n * n *
                       std::log(1.0 / epsilon) / 8.0;
    const auto k = static_cast<std::int64_t>(std::ceil(raw));
    return std::max<std::int64_t>(k, 1);
}

SpectralReport analyze_component(const RegularGraph& graph, const ComponentMap& map,
                                 int component, std::optional<int> start) {
    check_component_index(map, component);
    if (start.has_value() && (*start < 0 || *start >= graph.n)) {
        fail(ErrorCode::VertexOutOfRange,
             "start vertex " + std::to_string(*start) + " outside [0, " +
                 std::to_string(graph.n) + ")");
    }
    const auto verts = map.vertices_of(component);
    const Eigen::MatrixXd a = component_adjacency(graph, verts);

    const bool want_overlaps =
        start.has_value() && map.component_id[*start] == component;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        a, want_overlaps ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);

    SpectralReport report;
    report.component = component;
    report.n_u = static_cast<int>(verts.size());
    report.lambdas.assign(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + report.n_u);
    std::reverse(report.lambdas.begin(), report.lambdas.end());
    report.mus = walk_spectrum(report.lambdas, graph.d);
    report.gap = report.n_u >= 2 ? report.lambdas[0] - report.lambdas[1] : 0.0;

    if (want_overlaps) {
        // The walk submatrix is affine in the adjacency matrix, so both share
        // eigenvectors; the overlaps of |u,u> with the walk eigenbasis are
        // the squared start-row entries, reported in descending-lambda order.
        int local_start = 0;
        while (verts[local_start] != *start) ++local_start;
        std::vector<double> overlaps(report.n_u);
        for (int j = 0; j < report.n_u; ++j) {
            const double c = solver.eigenvectors()(local_start, report.n_u - 1 - j);
            overlaps[j] = c * c;
        }
        report.start = *start;
        report.overlaps = std::move(overlaps);
    }
    return report;
}

std::vector<SpectralReport> analyze(const RegularGraph& graph, std::optional<int> start) {
    const ComponentMap map = components(graph);
    std::vector<SpectralReport> reports;
    reports.reserve(map.count());
    for (int c = 0; c < map.count(); ++c) {
        reports.push_back(analyze_component(graph, map, c, start));
    }
    return reports;
}

} // namespace qwalk
