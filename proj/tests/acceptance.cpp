// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/amplify.hpp"
#include "qwalk/decider.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"
#include "test_support.hpp"

using namespace qwalk;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail) {
    std::string line = ok ? "PASS" : "FAIL";
    line += " criterion " + std::to_string(index) + ": " + name;
    if (!detail.empty()) line += " (" + detail + ")";
    std::puts(line.c_str());
    if (!ok) ++failures;
}

std::string fmt(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.3g", value);
    return buffer;
}

// 1. connected 3-regular graphs reach the 1/(4n^2) floor at the default k
void criterion_threshold() {
    std::mt19937_64 rng(10001);
    const int sizes[] = {4, 8, 16, 32};
    bool ok = true;
    double worst = 1e300;
    int graphs = 0;
    int pairs = 0;
    for (int i = 0; i < 50; ++i) {
        const int n = sizes[i % 4];
        const RegularGraph graph = testsup::connected_random_regular(n, 3, 20000 + i);
        ++graphs;
        const double floor = 1.0 / (4.0 * n * n) - 1e-9;
        for (int j = 0; j < 20; ++j) {
            const int s = testsup::uniform_int(rng, 0, n - 1);
            int t = testsup::uniform_int(rng, 0, n - 2);
            if (t >= s) ++t;
            const DeciderReport result = decide({graph, s, t});
            ++pairs;
            worst = std::min(worst, result.acceptance_probability - floor);
            if (result.acceptance_probability < floor) ok = false;
        }
    }
    report(1, "acceptance probability reaches 1/(4n^2) on connected pairs", ok,
           std::to_string(graphs) + " graphs, " + std::to_string(pairs) +
               " pairs, min margin " + fmt(worst));
}

// 2. cross-component pairs give zero probability at k in {1, 10, default}
void criterion_one_sided() {
    bool ok = true;
    double worst = 0.0;
    int pairs = 0;
    for (int i = 0; i < 50; ++i) {
        RegularGraph left;
        RegularGraph right;
        if (i < 25) {
            left = make_cycle(3 + (i % 6));
            right = make_cycle(3 + ((i / 5) % 6));
        } else {
            const int j = i - 25;
            left = (j % 2 == 0) ? make_complete(4)
                                : testsup::random_regular_lenient(4 + 2 * (j % 3), 3, 30000 + j);
            right = testsup::random_regular_lenient(4 + 2 * ((j / 3) % 3), 3, 31000 + j);
        }
        const RegularGraph graph = testsup::disjoint_union(left, right);
        for (int s = 0; s < left.n; ++s) {
            for (int t = left.n; t < graph.n; ++t) {
                ++pairs;
                for (int variant = 0; variant < 3; ++variant) {
                    const DeciderReport result =
                        variant == 0   ? decide({graph, s, t}, 1)
                        : variant == 1 ? decide({graph, s, t}, 10)
                                       : decide({graph, s, t});
                    worst = std::max(worst, result.acceptance_probability);
                    if (result.acceptance_probability > 1e-10 || result.accept) ok = false;
                }
            }
        }
    }
    report(2, "split pairs keep probability below 1e-10 at every step count", ok,
           std::to_string(pairs) + " cross pairs, max probability " + fmt(worst));
}

// 3. per-component walk-matrix eigenvalues match the mapped adjacency spectrum
void criterion_spectral_map() {
    bool ok = true;
    double worst = 0.0;
    int components_checked = 0;
    for (const auto& entry : testsup::acceptance_corpus()) {
        const ComponentMap map = components(entry.graph);
        const WalkMatrix m = reduced_walk_matrix(entry.graph);
        for (int c = 0; c < map.count(); ++c) {
            const auto verts = map.vertices_of(c);
            const auto mapped =
                walk_spectrum(adjacency_spectrum(entry.graph, map, c), entry.graph.d);

            // independent check: eigensolve the walk-matrix block directly
            const int n_u = static_cast<int>(verts.size());
            Eigen::MatrixXd sub(n_u, n_u);
            for (int a = 0; a < n_u; ++a) {
                for (int b = 0; b < n_u; ++b) sub(a, b) = m.at(verts[a], verts[b]);
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sub, Eigen::EigenvaluesOnly);
            ++components_checked;
            for (int j = 0; j < n_u; ++j) {
                const double direct = solver.eigenvalues()(n_u - 1 - j);
                worst = std::max(worst, std::abs(direct - mapped[j]));
                if (std::abs(direct - mapped[j]) > 1e-8) ok = false;
            }
        }
    }
    report(3, "walk spectrum equals (4*lambda+(d-1)^2)/(d+1)^2 per component", ok,
           std::to_string(components_checked) + " components, max deviation " + fmt(worst));
}

// 4. measured convergence obeys the bound and the required step counts
void criterion_convergence() {
    bool ok = true;
    double worst = -1e300;
    int curves = 0;
    for (const auto& entry : testsup::acceptance_corpus()) {
        const ComponentMap map = components(entry.graph);
        const int n = entry.graph.n;
        for (int u = 0; u < n; ++u) {
            const int n_u = map.sizes[map.component_id[u]];
            ++curves;
            for (std::int64_t l = 1; l <= 50; ++l) {
                const double measured = convergence_distance(entry.graph, u, l);
                const double bound = distance_bound(entry.graph.d, n_u, l);
                worst = std::max(worst, measured - bound);
                if (measured > bound + 1e-9) ok = false;
            }
            for (const double epsilon : {0.5, 0.1, 1.0 / (2.0 * n)}) {
                const std::int64_t k = required_steps(entry.graph.d, n, epsilon);
                if (!(convergence_distance(entry.graph, u, k) < epsilon)) ok = false;
            }
        }
    }
    report(4, "convergence stays within the (1-8/(d(d+1)^2 n_u^2))^l bound", ok,
           std::to_string(curves) + " start vertices, max overshoot " + fmt(worst));
}

// 5. reflection identities and full-space/reduced agreement
void criterion_reflections() {
    std::mt19937_64 rng(10005);
    bool ok = true;
    std::vector<testsup::CorpusEntry> corpus;
    for (const auto& entry : testsup::unit_corpus()) {
        if (entry.graph.n <= 16) corpus.push_back(entry);
    }
    const std::int64_t ks[] = {1, 2, 5, 20};
    for (int trial = 0; trial < 200; ++trial) {
        const auto& entry = corpus[trial % corpus.size()];
        const RegularGraph& graph = entry.graph;
        const PairState x = testsup::random_pair_state(graph.n, rng);

        const PairState ffx = apply_F(graph, apply_F(graph, x));
        const PairState xxx = apply_X(apply_X(x));
        const PairState px = apply_P(x);
        const PairState ppx = apply_P(px);
        double f_err = 0.0;
        double x_err = 0.0;
        double p_err = 0.0;
        for (std::size_t i = 0; i < x.amplitudes.size(); ++i) {
            f_err += std::abs(ffx.amplitudes[i] - x.amplitudes[i]);
            x_err += std::abs(xxx.amplitudes[i] - x.amplitudes[i]);
            p_err += std::abs(ppx.amplitudes[i] - px.amplitudes[i]);
        }
        if (f_err > 1e-12 || x_err != 0.0 || p_err != 0.0) ok = false;

        std::vector<double> vec(static_cast<std::size_t>(graph.d) + 1);
        for (double& e : vec) e = 2.0 * testsup::uniform_unit(rng) - 1.0;
        const std::vector<double> ddv = apply_D(apply_D(vec));
        double d_err = 0.0;
        for (std::size_t i = 0; i < vec.size(); ++i) d_err += std::abs(ddv[i] - vec[i]);
        if (d_err > 1e-12) ok = false;

        // Q^k against the reduced walk
        const std::int64_t k = ks[trial % 4];
        const int start = testsup::uniform_int(rng, 0, graph.n - 1);
        PairState full = PairState::basis(graph.n, start, start);
        for (std::int64_t step = 0; step < k; ++step) full = apply_Q(graph, full);
        const DiagonalState reduced = walk_power(graph, start, k);
        for (int v = 0; v < graph.n; ++v) {
            if (std::abs(full.at(v, v) - reduced.amplitudes[v]) > 1e-10) ok = false;
        }
    }
    report(5, "F, X, P, D are reflections and Q^k matches the reduced walk", ok,
           "200 randomized trials");
}

// 6. amplification closed form, simulation, and the frozen plan point
void criterion_amplification() {
    bool ok = true;
    double worst = 0.0;
    for (int pi = 0; pi <= 100; ++pi) {
        const double p = pi / 100.0;
        for (std::int64_t f = 0; f <= 64; ++f) {
            const double closed = amplified_probability(p, f);
            const double simulated = simulate_amplifier(p, f).total;
            worst = std::max(worst, std::abs(closed - simulated));
            if (std::abs(closed - simulated) > 1e-12) ok = false;
            if (closed < 0.0 || closed > 1.0) ok = false;
            if (p == 0.0 && closed != 0.0) ok = false;
        }
    }
    if (plan_repetitions(1.0 / 64.0, 0.5).f != 11) ok = false;
    report(6, "amplifier simulation equals the closed form and plans f = 11", ok,
           "grid 101x65, max gap " + fmt(worst));
}

// 7. adjacency eigenvalues below the top respect d - 2/(d n_u^2)
void criterion_gap_bound() {
    bool ok = true;
    double worst = 1e300;
    int components_checked = 0;
    for (const auto& entry : testsup::acceptance_corpus()) {
        for (const auto& rep : analyze(entry.graph)) {
            const GapCheck check = check_gap_bound(rep, entry.graph.d);
            ++components_checked;
            worst = std::min(worst, check.margin);
            if (!check.ok) ok = false;
        }
    }
    report(7, "lambda_j <= d - 2/(d n_u^2) for j >= 2 on every component", ok,
           std::to_string(components_checked) + " components, min margin " + fmt(worst));
}

// 8. regularize preserves s-t connectivity and emits valid 3-regular graphs
void criterion_regularize() {
    std::mt19937_64 rng(10008);
    bool ok = true;
    int preserved = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = testsup::uniform_int(rng, 2, 20);
        const double prob = 0.05 + 0.45 * testsup::uniform_unit(rng);
        const EdgeList graph = testsup::random_edge_list(n, prob, rng);
        const int s = testsup::uniform_int(rng, 0, n - 1);
        const int t = testsup::uniform_int(rng, 0, n - 1);
        const RegularizeResult result = regularize(graph, s, t);
        try {
            validate(result.graph);
        } catch (...) {
            ok = false;
        }
        if (result.graph.d != 3) ok = false;
        const bool before = testsup::reachable(graph, s, t);
        const bool after = components(result.graph).connected(result.s, result.t);
        if (before == after) {
            ++preserved;
        } else {
            ok = false;
        }
    }
    report(8, "regularize keeps the s-t connectivity bit on 200 random graphs", ok,
           std::to_string(preserved) + "/200 preserved");
}

} // namespace

int main() {
    criterion_threshold();
    criterion_one_sided();
    criterion_spectral_map();
    criterion_convergence();
    criterion_reflections();
    criterion_amplification();
    criterion_gap_bound();
    criterion_regularize();
    if (failures != 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::puts("all acceptance criteria passed");
    return 0;
}
