#include "qwalk/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <random>
#include <set>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

// Unbiased draw in [0, bound), implemented directly so that generated graphs
// are identical across standard library implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

void shuffle_ints(std::vector<int>& values, std::mt19937_64& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        std::swap(values[i - 1], values[uniform_below(rng, i)]);
    }
}

bool is_comment_or_blank(std::string_view line) {
    const auto pos = line.find_first_not_of(' ');
    return pos == std::string_view::npos || line[pos] == '#';
}

std::vector<std::string_view> content_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        const std::string_view line =
            text.substr(start, (end == std::string_view::npos ? text.size() : end) - start);
        if (!is_comment_or_blank(line)) lines.push_back(line);
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return lines;
}

long long parse_int_token(std::string_view token, std::string_view line) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        fail(ErrorCode::MalformedInput, "bad integer '" + std::string(token) + "' in line '" +
                                            std::string(line) + "'");
    }
    return value;
}

// Exactly `count` integers separated by one or more spaces.
std::vector<long long> parse_ints(std::string_view line, std::size_t count) {
    std::vector<long long> values;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && line[pos] == ' ') ++pos;
        if (pos == line.size()) break;
        const std::size_t end = std::min(line.find(' ', pos), line.size());
        values.push_back(parse_int_token(line.substr(pos, end - pos), line));
        pos = end;
    }
    if (values.size() != count) {
        fail(ErrorCode::MalformedInput, "expected " + std::to_string(count) + " fields in line '" +
                                            std::string(line) + "'");
    }
    return values;
}

int parse_vertex(long long value, int n, std::string_view what) {
    if (value < 0 || value >= n) {
        fail(ErrorCode::VertexOutOfRange, std::string(what) + " " + std::to_string(value) +
                                              " outside [0, " + std::to_string(n) + ")");
    }
    return static_cast<int>(value);
}

struct Header {
    int n = 0;
    long long second = 0;
};

Header parse_header(const std::vector<std::string_view>& lines) {
    if (lines.size() < 2) {
        fail(ErrorCode::MalformedInput, "input needs a header line and an s-t line");
    }
    const auto fields = parse_ints(lines.front(), 2);
    if (fields[0] <= 0 || fields[0] > std::numeric_limits<int>::max()) {
        fail(ErrorCode::MalformedInput, "vertex count must be a positive 32-bit integer");
    }
    return {static_cast<int>(fields[0]), fields[1]};
}

std::vector<std::pair<int, int>> parse_edges(const std::vector<std::string_view>& lines,
                                             std::size_t first, std::size_t count, int n) {
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto fields = parse_ints(lines[first + i], 2);
        const int u = parse_vertex(fields[0], n, "edge endpoint");
        const int v = parse_vertex(fields[1], n, "edge endpoint");
        if (u == v) {
            fail(ErrorCode::SelfLoop, "edge " + std::to_string(u) + "-" + std::to_string(v));
        }
        const auto key = std::minmax(u, v);
        if (!seen.insert(key).second) {
            fail(ErrorCode::DuplicateEdge, "edge " + std::to_string(key.first) + "-" +
                                               std::to_string(key.second) + " listed twice");
        }
        edges.emplace_back(u, v);
    }
    return edges;
}

RegularGraph graph_from_edges(int n, int d, const std::vector<std::pair<int, int>>& edges) {
    RegularGraph graph{n, d, std::vector<std::vector<int>>(n)};
    for (auto& list : graph.adjacency) list.reserve(d);
    for (const auto& [u, v] : edges) {
        graph.adjacency[u].push_back(v);
        graph.adjacency[v].push_back(u);
    }
    for (auto& list : graph.adjacency) std::sort(list.begin(), list.end());
    return graph;
}

} // namespace

void validate(const RegularGraph& graph) {
    if (graph.n <= 0) fail(ErrorCode::MalformedInput, "vertex count must be positive");
    if (graph.d < 2) {
        fail(ErrorCode::NotRegular, "degree " + std::to_string(graph.d) + ", need at least 2");
    }
    if (static_cast<std::int64_t>(graph.n) * graph.d % 2 != 0) {
        fail(ErrorCode::NotRegular, "n*d must be even");
    }
    if (graph.adjacency.size() != static_cast<std::size_t>(graph.n)) {
        fail(ErrorCode::MalformedInput, "adjacency table has wrong size");
    }
    for (int u = 0; u < graph.n; ++u) {
        const auto& list = graph.adjacency[u];
        if (list.size() != static_cast<std::size_t>(graph.d)) {
            fail(ErrorCode::NotRegular, "vertex " + std::to_string(u) + " has degree " +
                                            std::to_string(list.size()) + ", expected " +
                                            std::to_string(graph.d));
        }
        int prev = -1;
        for (const int v : list) {
            if (v < 0 || v >= graph.n) {
                fail(ErrorCode::VertexOutOfRange,
                     "neighbor " + std::to_string(v) + " of vertex " + std::to_string(u));
            }
            if (v == u) fail(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
            if (v == prev) {
                fail(ErrorCode::DuplicateEdge,
                     "edge " + std::to_string(u) + "-" + std::to_string(v) + " repeated");
            }
            if (v < prev) {
                fail(ErrorCode::MalformedInput,
                     "adjacency list of vertex " + std::to_string(u) + " is not sorted");
            }
            prev = v;
        }
        for (const int v : list) {
            const auto& back = graph.adjacency[v];
            if (!std::binary_search(back.begin(), back.end(), u)) {
                fail(ErrorCode::AsymmetricEdge,
                     std::to_string(u) + "-" + std::to_string(v) + " has no reverse entry");
            }
        }
    }
}

std::vector<int> ComponentMap::vertices_of(int component) const {
    std::vector<int> verts;
    for (int v = 0; v < static_cast<int>(component_id.size()); ++v) {
        if (component_id[v] == component) verts.push_back(v);
    }
    return verts;
}

ProblemInstance parse_instance(std::string_view text) {
    const auto lines = content_lines(text);
    const Header header = parse_header(lines);
    const int n = header.n;
    if (header.second < 2) {
        fail(ErrorCode::NotRegular, "degree " + std::to_string(header.second) + ", need at least 2");
    }
    if (header.second >= n) {
        fail(ErrorCode::NotRegular, "degree " + std::to_string(header.second) +
                                        " impossible with " + std::to_string(n) + " vertices");
    }
    const int d = static_cast<int>(header.second);
    if (static_cast<std::int64_t>(n) * d % 2 != 0) {
        fail(ErrorCode::NotRegular, "n*d must be even");
    }
    const std::size_t expected = static_cast<std::size_t>(static_cast<std::int64_t>(n) * d / 2);
    if (lines.size() - 2 != expected) {
        fail(ErrorCode::NotRegular, "listed " + std::to_string(lines.size() - 2) +
                                        " edges, a " + std::to_string(d) + "-regular graph on " +
                                        std::to_string(n) + " vertices has " +
                                        std::to_string(expected));
    }
    const auto edges = parse_edges(lines, 1, expected, n);
    const auto st = parse_ints(lines.back(), 2);
    ProblemInstance instance;
    instance.graph = graph_from_edges(n, d, edges);
    instance.s = parse_vertex(st[0], n, "s");
    instance.t = parse_vertex(st[1], n, "t");
    validate(instance.graph);
    return instance;
}

std::string serialize_instance(const ProblemInstance& instance) {
    const auto& graph = instance.graph;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(graph.edge_count()));
    for (int u = 0; u < graph.n; ++u) {
        for (const int v : graph.adjacency[u]) {
            if (u < v) edges.emplace_back(u, v);
        }
    }
    std::sort(edges.begin(), edges.end());
    std::string out = std::to_string(graph.n) + " " + std::to_string(graph.d) + "\n";
    for (const auto& [u, v] : edges) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    out += std::to_string(instance.s) + " " + std::to_string(instance.t) + "\n";
    return out;
}

EdgeListInstance parse_edge_list_instance(std::string_view text) {
    const auto lines = content_lines(text);
    const Header header = parse_header(lines);
    const int n = header.n;
    if (header.second < 0) fail(ErrorCode::MalformedInput, "edge count must be nonnegative");
    const auto m = static_cast<std::size_t>(header.second);
    if (lines.size() - 2 != m) {
        fail(ErrorCode::MalformedInput, "header announces " + std::to_string(m) + " edges, found " +
                                            std::to_string(lines.size() - 2));
    }
    EdgeListInstance instance;
    instance.graph.n = n;
    instance.graph.edges = parse_edges(lines, 1, m, n);
    const auto st = parse_ints(lines.back(), 2);
    instance.s = parse_vertex(st[0], n, "s");
    instance.t = parse_vertex(st[1], n, "t");
    return instance;
}

RegularGraph make_cycle(int n) {
    if (n < 3) fail(ErrorCode::InfeasibleParameters, "cycle needs n >= 3");
    RegularGraph graph{n, 2, std::vector<std::vector<int>>(n)};
    for (int u = 0; u < n; ++u) {
        graph.adjacency[u] = {(u + n - 1) % n, (u + 1) % n};
        std::sort(graph.adjacency[u].begin(), graph.adjacency[u].end());
    }
    return graph;
}

RegularGraph make_complete(int n) {
    if (n < 3) fail(ErrorCode::InfeasibleParameters, "complete graph needs n >= 3");
    RegularGraph graph{n, n - 1, std::vector<std::vector<int>>(n)};
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (v != u) graph.adjacency[u].push_back(v);
        }
    }
    return graph;
}

RegularGraph make_random_regular(int n, int d, std::uint64_t seed) {
    if (d < 2) fail(ErrorCode::InfeasibleParameters, "degree must be at least 2");
    if (d >= n) fail(ErrorCode::InfeasibleParameters, "degree must be below the vertex count");
    if (static_cast<std::int64_t>(n) * d % 2 != 0) {
        fail(ErrorCode::InfeasibleParameters, "n*d must be even");
    }

    std::mt19937_64 rng(seed);
    std::vector<int> stubs(static_cast<std::size_t>(n) * d);
    constexpr int kMaxRestarts = 1000;

    for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
        for (int u = 0; u < n; ++u) {
            std::fill_n(stubs.begin() + static_cast<std::size_t>(u) * d, d, u);
        }
        shuffle_ints(stubs, rng);

        std::set<std::pair<int, int>> seen;
        std::vector<std::pair<int, int>> edges;
        edges.reserve(stubs.size() / 2);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            const int u = stubs[i];
            const int v = stubs[i + 1];
            if (u == v || !seen.insert(std::minmax(u, v)).second) {
                ok = false;
                break;
            }
            edges.emplace_back(u, v);
        }
        if (!ok) continue;
        RegularGraph graph = graph_from_edges(n, d, edges);
        validate(graph);
        return graph;
    }
    fail(ErrorCode::GenerationFailed, "pairing model produced no simple graph in " +
                                          std::to_string(kMaxRestarts) + " restarts");
}

RegularGraph generate(GraphKind kind, int n, int d, std::uint64_t seed) {
    switch (kind) {
        case GraphKind::Cycle:
            if (d != 2) fail(ErrorCode::InfeasibleParameters, "cycle forces d = 2");
            return make_cycle(n);
        case GraphKind::Complete:
            if (d != n - 1) fail(ErrorCode::InfeasibleParameters, "complete graph forces d = n-1");
            return make_complete(n);
        case GraphKind::RandomRegular:
            return make_random_regular(n, d, seed);
    }
    fail(ErrorCode::InfeasibleParameters, "unknown graph kind");
}

ComponentMap components(const RegularGraph& graph) {
    ComponentMap map;
    map.component_id.assign(graph.n, -1);
    std::deque<int> queue;
    for (int root = 0; root < graph.n; ++root) {
        if (map.component_id[root] != -1) continue;
        const int label = map.count();
        map.sizes.push_back(0);
        map.component_id[root] = label;
        queue.push_back(root);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            ++map.sizes[label];
            for (const int v : graph.adjacency[u]) {
                if (map.component_id[v] == -1) {
                    map.component_id[v] = label;
                    queue.push_back(v);
                }
            }
        }
    }
    return map;
}

RegularizeResult regularize(const EdgeList& input, int s, int t) {
    const int n = input.n;
    if (n <= 0) fail(ErrorCode::MalformedInput, "vertex count must be positive");
    parse_vertex(s, n, "s");
    parse_vertex(t, n, "t");

    // (neighbor, input edge index) per vertex, ordered by neighbor
    std::vector<std::vector<std::pair<int, int>>> incident(n);
    std::set<std::pair<int, int>> seen;
    for (int idx = 0; idx < static_cast<int>(input.edges.size()); ++idx) {
        const auto [u, v] = input.edges[idx];
        parse_vertex(u, n, "edge endpoint");
        parse_vertex(v, n, "edge endpoint");
        if (u == v) fail(ErrorCode::SelfLoop, "edge " + std::to_string(u) + "-" + std::to_string(v));
        if (!seen.insert(std::minmax(u, v)).second) {
            fail(ErrorCode::DuplicateEdge,
                 "edge " + std::to_string(u) + "-" + std::to_string(v) + " listed twice");
        }
        incident[u].emplace_back(v, idx);
        incident[v].emplace_back(u, idx);
    }
    for (auto& list : incident) std::sort(list.begin(), list.end());

    // High-degree vertices expand into a cycle of one gadget vertex per
    // incident edge; everyone else keeps a single copy.
    std::vector<int> first_id(n);
    int next_id = 0;
    for (int u = 0; u < n; ++u) {
        first_id[u] = next_id;
        const auto degree = static_cast<int>(incident[u].size());
        next_id += degree >= 4 ? degree : 1;
    }

    // attachment[idx] = {id at u side, id at v side} filled per endpoint
    std::vector<std::pair<int, int>> attachment(input.edges.size(), {-1, -1});
    for (int u = 0; u < n; ++u) {
        const auto degree = static_cast<int>(incident[u].size());
        for (int i = 0; i < degree; ++i) {
            const int idx = incident[u][i].second;
            const int id = degree >= 4 ? first_id[u] + i : first_id[u];
            if (input.edges[idx].first == u) {
                attachment[idx].first = id;
            } else {
                attachment[idx].second = id;
            }
        }
    }

    std::vector<std::pair<int, int>> edges(attachment);
    for (int u = 0; u < n; ++u) {
        const auto degree = static_cast<int>(incident[u].size());
        if (degree >= 4) {
            for (int i = 0; i < degree; ++i) {
                edges.emplace_back(first_id[u] + i, first_id[u] + (i + 1) % degree);
            }
        } else if (degree < 3) {
            // One pendant gadget per missing degree unit: K4 with one edge
            // subdivided, attached through the subdivision vertex w.
            for (int missing = degree; missing < 3; ++missing) {
                const int g0 = next_id;
                const int g1 = next_id + 1;
                const int g2 = next_id + 2;
                const int g3 = next_id + 3;
                const int w = next_id + 4;
                next_id += 5;
                edges.emplace_back(g0, g2);
                edges.emplace_back(g0, g3);
                edges.emplace_back(g1, g2);
                edges.emplace_back(g1, g3);
                edges.emplace_back(g2, g3);
                edges.emplace_back(g0, w);
                edges.emplace_back(g1, w);
                edges.emplace_back(first_id[u], w);
            }
        }
    }

    RegularizeResult result;
    result.graph = graph_from_edges(next_id, 3, edges);
    result.s = first_id[s];
    result.t = first_id[t];
    validate(result.graph);
    return result;
}

} // namespace qwalk
