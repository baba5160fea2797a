#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cechcube/simplex.hpp"

namespace cechcube {

enum class GraphFamily { Hypercube, Prefix, Cycle, Custom };

// Exact shortest-path hop distances. Graphs whose vertex ids are binary
// strings with single-bit-flip adjacency (hypercube and prefix families) use
// the Hamming rule d(u,w) = popcount(u XOR w), which coincides with the hop
// metric there; every other graph carries a dense all-pairs table filled by
// BFS at construction.
class DistanceMatrix {
public:
    static DistanceMatrix hamming(std::uint32_t n_vertices);
    static DistanceMatrix table(std::uint32_t n_vertices, std::vector<std::uint16_t> data);

    std::uint32_t operator()(VertexId u, VertexId w) const;
    std::uint32_t size() const { return n_; }
    bool is_hamming() const { return hamming_; }

private:
    friend class Graph;

    DistanceMatrix() = default;

    bool hamming_ = false;
    std::uint32_t n_ = 0;
    std::vector<std::uint16_t> d_;
};

// Finite connected undirected graph. Construction validates connectivity and
// precomputes the metric backend.
class Graph {
public:
    // Vertices 0..2^n-1, adjacency = ids differing in exactly one bit.
    // Coordinate j of a vertex is bit j-1 (coordinate 1 = least significant).
    static Graph hypercube(int n);

    // Vertices 0..m-1 with single-bit-flip adjacency; prefix_graph(2^n)
    // equals hypercube(n).
    static Graph prefix_graph(std::uint64_t m);

    // Cycle on m >= 3 vertices, i adjacent to (i+1) mod m.
    static Graph cycle(std::uint32_t m);

    static Graph from_edges(std::uint32_t n_vertices,
                            std::vector<std::pair<VertexId, VertexId>> edges);

    // Text format: '#' comments, "p <n_vertices>" once, then "e <u> <w>"
    // lines with 0-based endpoints.
    static Graph load(std::istream& in);
    static Graph load_file(const std::string& path);

    std::uint32_t vertex_count() const { return n_vertices_; }
    std::uint64_t edge_count() const { return edge_count_; }
    GraphFamily family() const { return family_; }

    // Number of coordinates for binary-string families, 0 otherwise.
    unsigned hamming_bits() const { return bits_; }
    bool uses_hamming_metric() const { return dist_.is_hamming(); }

    // Sorted, by value: hypercube-family adjacency is generated on demand.
    std::vector<VertexId> neighbors(VertexId v) const;
    std::uint32_t degree(VertexId v) const;

    // All edges as (u, w) with u < w, sorted.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    std::uint32_t distance(VertexId u, VertexId w) const { return dist_(u, w); }
    const DistanceMatrix& distances() const { return dist_; }

    // {w : d(v, w) <= k}, sorted.
    std::vector<VertexId> closed_neighborhood(VertexId v, std::uint32_t k) const;

    std::uint32_t eccentricity(VertexId v) const;
    std::uint32_t radius() const;
    std::uint32_t diameter() const;

    // For graphs produced by induced_subgraph: original id of each vertex.
    const std::optional<std::vector<VertexId>>& original_labels() const {
        return original_labels_;
    }

    // Binary string x1..xn (x_j = bit j-1) for binary-string families,
    // decimal otherwise.
    std::string vertex_name(VertexId v) const;

private:
    Graph() = default;

    GraphFamily family_ = GraphFamily::Custom;
    std::uint32_t n_vertices_ = 0;
    std::uint64_t edge_count_ = 0;
    unsigned bits_ = 0;
    std::vector<std::vector<VertexId>> adjacency_;  // empty for hamming families
    DistanceMatrix dist_;
    std::optional<std::vector<VertexId>> original_labels_;

    friend Graph induced_subgraph(const Graph&, const std::vector<VertexId>&);
};

// Subgraph induced by the vertex set `keep` (original ids, no duplicates),
// relabeled 0..|keep|-1 in sorted order; the original ids are retained as
// labels. The result must be connected.
Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& keep);

// XOR the coordinates at the given 1-based positions (each in 1..n).
VertexId flip(VertexId v, const std::vector<unsigned>& coordinates, unsigned n);

}  // namespace cechcube
