#include "cechcube/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <fstream>
#include <istream>
#include <limits>
#include <set>
#include <sstream>

#include "cechcube/errors.hpp"

namespace cechcube {

namespace {

constexpr std::uint32_t kMaxTableVertices = 4096;
constexpr int kMaxHypercubeDim = 20;

unsigned bit_width_of(std::uint64_t x) {
    unsigned w = 0;
    while (x) {
        ++w;
        x >>= 1;
    }
    return w;
}

// All-pairs hop distances by BFS from every vertex; also the connectivity
// check (throws if any vertex is unreachable from 0).
std::vector<std::uint16_t> bfs_all_pairs(const std::vector<std::vector<VertexId>>& adj) {
    const std::uint32_t n = static_cast<std::uint32_t>(adj.size());
    std::vector<std::uint16_t> d(static_cast<std::size_t>(n) * n,
                                 std::numeric_limits<std::uint16_t>::max());
    std::deque<VertexId> queue;
    for (std::uint32_t s = 0; s < n; ++s) {
        auto* row = d.data() + static_cast<std::size_t>(s) * n;
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        std::uint32_t seen = 1;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (VertexId w : adj[v]) {
                if (row[w] == std::numeric_limits<std::uint16_t>::max()) {
                    row[w] = static_cast<std::uint16_t>(row[v] + 1);
                    queue.push_back(w);
                    ++seen;
                }
            }
        }
        if (seen != n) {
            throw DomainError("graph is not connected: vertex unreachable from vertex " +
                              std::to_string(s));
        }
    }
    return d;
}

}  // namespace

DistanceMatrix DistanceMatrix::hamming(std::uint32_t n_vertices) {
    DistanceMatrix m;
    m.hamming_ = true;
    m.n_ = n_vertices;
    return m;
}

DistanceMatrix DistanceMatrix::table(std::uint32_t n_vertices,
                                     std::vector<std::uint16_t> data) {
    if (data.size() != static_cast<std::size_t>(n_vertices) * n_vertices) {
        throw DomainError("distance table has wrong size");
    }
    DistanceMatrix m;
    m.hamming_ = false;
    m.n_ = n_vertices;
    m.d_ = std::move(data);
    return m;
}

std::uint32_t DistanceMatrix::operator()(VertexId u, VertexId w) const {
    if (u >= n_ || w >= n_) {
        throw DomainError("vertex id out of range in distance query");
    }
    if (hamming_) {
        return static_cast<std::uint32_t>(std::popcount(u ^ w));
    }
    return d_[static_cast<std::size_t>(u) * n_ + w];
}

Graph Graph::hypercube(int n) {
    if (n < 1 || n > kMaxHypercubeDim) {
        throw SizeError("hypercube dimension must be between 1 and " +
                        std::to_string(kMaxHypercubeDim) + ", got " + std::to_string(n));
    }
    Graph g;
    g.family_ = GraphFamily::Hypercube;
    g.bits_ = static_cast<unsigned>(n);
    g.n_vertices_ = 1u << n;
    g.edge_count_ = static_cast<std::uint64_t>(n) << (n - 1);
    g.dist_ = DistanceMatrix::hamming(g.n_vertices_);
    return g;
}

Graph Graph::prefix_graph(std::uint64_t m) {
    if (m == 0) {
        throw DomainError("prefix graph must have at least one vertex");
    }
    if (m > (1ull << kMaxHypercubeDim)) {
        throw SizeError("prefix graph supports at most 2^" +
                        std::to_string(kMaxHypercubeDim) + " vertices");
    }
    Graph g;
    g.family_ = GraphFamily::Prefix;
    g.n_vertices_ = static_cast<std::uint32_t>(m);
    g.bits_ = m == 1 ? 1 : bit_width_of(m - 1);
    std::uint64_t twice_edges = 0;
    for (std::uint64_t v = 0; v < m; ++v) {
        for (unsigned b = 0; b < g.bits_; ++b) {
            if ((v ^ (1ull << b)) < m) ++twice_edges;
        }
    }
    g.edge_count_ = twice_edges / 2;
    g.dist_ = DistanceMatrix::hamming(g.n_vertices_);
    return g;
}

Graph Graph::cycle(std::uint32_t m) {
    if (m < 3) {
        throw SizeError("cycle graph needs at least 3 vertices, got " + std::to_string(m));
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        VertexId u = i;
        VertexId w = (i + 1) % m;
        edges.emplace_back(std::min(u, w), std::max(u, w));
    }
    Graph g = from_edges(m, std::move(edges));
    g.family_ = GraphFamily::Cycle;
    return g;
}

Graph Graph::from_edges(std::uint32_t n_vertices,
                        std::vector<std::pair<VertexId, VertexId>> edges) {
    if (n_vertices == 0) {
        throw DomainError("graph must have at least one vertex");
    }
    if (n_vertices > kMaxTableVertices) {
        throw SizeError("explicit graphs support at most " +
                        std::to_string(kMaxTableVertices) + " vertices, got " +
                        std::to_string(n_vertices));
    }
    std::set<std::pair<VertexId, VertexId>> dedup;
    for (auto [u, w] : edges) {
        if (u >= n_vertices || w >= n_vertices) {
            throw DomainError("edge endpoint out of range");
        }
        if (u == w) {
            throw DomainError("self-loops are not allowed");
        }
        dedup.emplace(std::min(u, w), std::max(u, w));
    }
    Graph g;
    g.family_ = GraphFamily::Custom;
    g.n_vertices_ = n_vertices;
    g.edge_count_ = dedup.size();
    g.adjacency_.assign(n_vertices, {});
    for (auto [u, w] : dedup) {
        g.adjacency_[u].push_back(w);
        g.adjacency_[w].push_back(u);
    }
    for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    g.dist_ = DistanceMatrix::table(n_vertices, bfs_all_pairs(g.adjacency_));
    return g;
}

Graph Graph::load(std::istream& in) {
    std::optional<std::uint32_t> declared;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "p") {
            std::uint32_t n;
            if (!(ls >> n) || declared.has_value()) {
                throw DomainError("malformed vertex-count line " + std::to_string(lineno));
            }
            declared = n;
        } else if (tag == "e") {
            std::uint64_t u, w;
            if (!(ls >> u >> w)) {
                throw DomainError("malformed edge line " + std::to_string(lineno));
            }
            if (!declared) {
                throw DomainError("edge line " + std::to_string(lineno) +
                                  " before vertex-count line");
            }
            edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(w));
        } else {
            throw DomainError("unrecognized line " + std::to_string(lineno) + ": " + line);
        }
    }
    if (!declared) {
        throw DomainError("graph file has no \"p <n_vertices>\" line");
    }
    return from_edges(*declared, std::move(edges));
}

Graph Graph::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open graph file: " + path);
    }
    return load(in);
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
    if (v >= n_vertices_) {
        throw DomainError("vertex id out of range: " + std::to_string(v));
    }
    if (!adjacency_.empty()) return adjacency_[v];
    std::vector<VertexId> out;
    out.reserve(bits_);
    for (unsigned b = 0; b < bits_; ++b) {
        VertexId w = v ^ (1u << b);
        if (w < n_vertices_) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint32_t Graph::degree(VertexId v) const {
    return static_cast<std::uint32_t>(neighbors(v).size());
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (VertexId v = 0; v < n_vertices_; ++v) {
        for (VertexId w : neighbors(v)) {
            if (v < w) out.emplace_back(v, w);
        }
    }
    return out;
}

std::vector<VertexId> Graph::closed_neighborhood(VertexId v, std::uint32_t k) const {
    if (v >= n_vertices_) {
        throw DomainError("vertex id out of range: " + std::to_string(v));
    }
    std::vector<VertexId> out;
    if (dist_.is_hamming()) {
        // Enumerate XOR masks of popcount <= k instead of scanning all ids.
        std::uint32_t kk = std::min(k, static_cast<std::uint32_t>(bits_));
        std::vector<unsigned> idx;
        auto rec = [&](auto&& self, unsigned start, std::uint32_t left, VertexId mask) -> void {
            VertexId w = v ^ mask;
            if (w < n_vertices_) out.push_back(w);
            if (left == 0) return;
            for (unsigned b = start; b < bits_; ++b) {
                self(self, b + 1, left - 1, mask | (1u << b));
            }
        };
        rec(rec, 0, kk, 0);
    } else {
        for (VertexId w = 0; w < n_vertices_; ++w) {
            if (dist_(v, w) <= k) out.push_back(w);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint32_t Graph::eccentricity(VertexId v) const {
    if (v >= n_vertices_) {
        throw DomainError("vertex id out of range: " + std::to_string(v));
    }
    switch (family_) {
        case GraphFamily::Hypercube:
            return bits_;
        case GraphFamily::Cycle:
            return n_vertices_ / 2;
        default: {
            std::uint32_t ecc = 0;
            for (VertexId w = 0; w < n_vertices_; ++w) ecc = std::max(ecc, dist_(v, w));
            return ecc;
        }
    }
}

std::uint32_t Graph::radius() const {
    if (family_ == GraphFamily::Hypercube || family_ == GraphFamily::Cycle) {
        return eccentricity(0);
    }
    if (dist_.is_hamming() && n_vertices_ > (1u << 14)) {
        throw SizeError("radius scan too large for this graph");
    }
    std::uint32_t r = std::numeric_limits<std::uint32_t>::max();
    for (VertexId v = 0; v < n_vertices_; ++v) r = std::min(r, eccentricity(v));
    return r;
}

std::uint32_t Graph::diameter() const {
    if (family_ == GraphFamily::Hypercube || family_ == GraphFamily::Cycle) {
        return eccentricity(0);
    }
    if (dist_.is_hamming() && n_vertices_ > (1u << 14)) {
        throw SizeError("diameter scan too large for this graph");
    }
    std::uint32_t r = 0;
    for (VertexId v = 0; v < n_vertices_; ++v) r = std::max(r, eccentricity(v));
    return r;
}

std::string Graph::vertex_name(VertexId v) const {
    if (v >= n_vertices_) {
        throw DomainError("vertex id out of range: " + std::to_string(v));
    }
    if (family_ == GraphFamily::Hypercube || family_ == GraphFamily::Prefix) {
        std::string s(bits_, '0');
        for (unsigned j = 0; j < bits_; ++j) {
            if (v & (1u << j)) s[j] = '1';
        }
        return s;
    }
    return std::to_string(v);
}

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& keep) {
    if (keep.empty()) {
        throw DomainError("induced subgraph needs a nonempty vertex set");
    }
    std::vector<VertexId> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw DomainError("induced subgraph vertex set has duplicates");
    }
    if (sorted.back() >= g.vertex_count()) {
        throw DomainError("induced subgraph vertex id out of range");
    }
    std::vector<std::int64_t> new_id(g.vertex_count(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) new_id[sorted[i]] = static_cast<std::int64_t>(i);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v : sorted) {
        for (VertexId w : g.neighbors(v)) {
            if (v < w && new_id[w] >= 0) {
                edges.emplace_back(static_cast<VertexId>(new_id[v]),
                                   static_cast<VertexId>(new_id[w]));
            }
        }
    }
    Graph sub = Graph::from_edges(static_cast<std::uint32_t>(sorted.size()), std::move(edges));
    sub.original_labels_ = std::move(sorted);
    return sub;
}

VertexId flip(VertexId v, const std::vector<unsigned>& coordinates, unsigned n) {
    VertexId mask = 0;
    for (unsigned c : coordinates) {
        if (c < 1 || c > n) {
            throw DomainError("flip coordinate " + std::to_string(c) +
                              " outside 1.." + std::to_string(n));
        }
        mask |= 1u << (c - 1);
    }
    return v ^ mask;
}

}  // namespace cechcube
