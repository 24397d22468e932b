#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qwalk {

// Simple undirected d-regular graph stored as sorted adjacency lists.
struct RegularGraph {
    int n = 0;
    int d = 0;
    std::vector<std::vector<int>> adjacency;

    const std::vector<int>& neighbors(int u) const { return adjacency[u]; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(n) * d / 2; }
};

// Checks all RegularGraph invariants: index ranges, list lengths, distinct
// sorted entries, no self-loops, symmetry, nd even. Throws on violation.
void validate(const RegularGraph& graph);

struct ProblemInstance {
    RegularGraph graph;
    int s = 0;
    int t = 0;
};

struct ComponentMap {
    std::vector<int> component_id; // per vertex, labels 0..count-1
    std::vector<int> sizes;        // per label

    int count() const { return static_cast<int>(sizes.size()); }
    bool connected(int a, int b) const { return component_id[a] == component_id[b]; }
    std::vector<int> vertices_of(int component) const;
};

// Arbitrary simple undirected graph as an edge list; input to regularize().
struct EdgeList {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

struct EdgeListInstance {
    EdgeList graph;
    int s = 0;
    int t = 0;
};

// Instance file format: '#' comment lines, "n d" header, nd/2 edge lines
// "u v" (each undirected edge once), final line "s t". Tokens separated by
// one or more spaces.
ProblemInstance parse_instance(std::string_view text);

// Emits edges normalized to u < v in lexicographic order, LF line endings.
std::string serialize_instance(const ProblemInstance& instance);

// Same layout with an "n m" header and m edge lines; accepts any simple graph.
EdgeListInstance parse_edge_list_instance(std::string_view text);

enum class GraphKind { Cycle, Complete, RandomRegular };

RegularGraph make_cycle(int n);
RegularGraph make_complete(int n);

// Pairing-model generator: deterministic in the seed, restarts from scratch
// on self-loops or parallel edges, gives up after 1000 restarts.
RegularGraph make_random_regular(int n, int d, std::uint64_t seed);

// Dispatch wrapper. Cycle requires d == 2, complete requires d == n - 1.
RegularGraph generate(GraphKind kind, int n, int d, std::uint64_t seed);

// Connected-component labels in order of first discovery (BFS from 0..n-1).
ComponentMap components(const RegularGraph& graph);

struct RegularizeResult {
    RegularGraph graph;
    int s = 0;
    int t = 0;
};

// Reduces an arbitrary simple graph to a 3-regular one preserving the s-t
// connectivity bit. Vertices of degree >= 4 become cycles of degree-3
// gadget vertices; vertices of degree < 3 are padded with pendant gadgets
// (K4 with one edge subdivided, attached at the subdivision vertex), which
// cannot create new paths between original vertices.
RegularizeResult regularize(const EdgeList& input, int s, int t);

} // namespace qwalk
