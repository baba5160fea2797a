#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "cechcube/graph.hpp"
#include "cechcube/simplex.hpp"

namespace cechcube {

// Counters reported by antichain reduction: exact duplicates removed and
// generators dropped because they were contained in another generator.
struct AntichainStats {
    std::size_t input = 0;
    std::size_t duplicates = 0;
    std::size_t nested = 0;

    std::size_t pruned() const { return duplicates + nested; }
};

// Abstract simplicial complex stored by its maximal faces (an antichain,
// sorted lexicographically). Lower-dimensional faces are enumerated lazily
// per dimension and cached; the cache is internally synchronized so complexes
// can be shared across threads.
class SimplicialComplex {
public:
    // Void complex (no faces at all) on an ambient id range.
    SimplicialComplex() = default;
    explicit SimplicialComplex(std::uint32_t vertex_count) : vertex_count_(vertex_count) {}

    // Canonicalizes the faces, removes duplicates and nested faces.
    static SimplicialComplex from_maximal(std::uint32_t vertex_count,
                                          std::vector<Simplex> faces,
                                          AntichainStats* stats = nullptr);

    SimplicialComplex(const SimplicialComplex& other);
    SimplicialComplex& operator=(const SimplicialComplex& other);
    SimplicialComplex(SimplicialComplex&& other) noexcept;
    SimplicialComplex& operator=(SimplicialComplex&& other) noexcept;

    // Ambient vertex id bound; vertices absent from every face are not part
    // of the complex.
    std::uint32_t vertex_count() const { return vertex_count_; }

    const std::vector<Simplex>& maximal_faces() const { return maximal_; }
    bool is_void() const { return maximal_.empty(); }

    // -1 for the void complex.
    int dimension() const;

    // Union of the maximal faces, sorted.
    std::vector<VertexId> vertices() const;
    bool contains_vertex(VertexId v) const;

    // Face membership: subset of some maximal face. `face` need not be
    // canonical.
    bool contains(const Simplex& face) const;

    // All faces of the given dimension, sorted lexicographically. Cached.
    const std::vector<Simplex>& faces(int dim) const;

    // Face counts per dimension 0..dimension().
    std::vector<std::size_t> f_vector() const;

    // Total number of faces across all dimensions. Throws SizeError if the
    // count exceeds `budget` (0 = unlimited).
    std::size_t total_face_count(std::size_t budget = 0) const;

    long long euler_characteristic() const;

    bool operator==(const SimplicialComplex& other) const {
        return vertex_count_ == other.vertex_count_ && maximal_ == other.maximal_;
    }

    // Line format: '#' comment lines (a "# vertices <n>" and "# dim <d>"
    // header is written), then one maximal face per line as space-separated
    // ids. Output is sorted, so serialization is byte-stable.
    void write(std::ostream& out) const;
    static SimplicialComplex read(std::istream& in);

private:
    std::uint32_t vertex_count_ = 0;
    std::vector<Simplex> maximal_;
    mutable std::mutex mu_;
    mutable std::map<int, std::vector<Simplex>> face_cache_;
};

struct CechStats {
    AntichainStats antichain;
    std::size_t generators = 0;
};

// Nerve complex of the closed-ball cover of G at integer scale r:
//   r = 0      one singleton face per vertex;
//   r even > 0 generated by the balls N_{r/2}[v];
//   r odd      generated by N_{(r-1)/2}[v] ∪ N_{(r-1)/2}[w] per edge (v,w).
SimplicialComplex cech_complex(const Graph& g, std::uint32_t r, CechStats* stats = nullptr);

// Faces sigma with sigma ∪ {v} in K. v must be a vertex of K.
SimplicialComplex star(const SimplicialComplex& k, VertexId v);

// Faces of star(K, v) that avoid v.
SimplicialComplex link(const SimplicialComplex& k, VertexId v);

// Faces of K that avoid v.
SimplicialComplex deletion(const SimplicialComplex& k, VertexId v);

// Faces of dimension <= d.
SimplicialComplex skeleton(const SimplicialComplex& k, int d);

// Join on disjoint vertex sets: b's ids are shifted by a.vertex_count().
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

// Union of subcomplexes of a common ambient vertex set.
SimplicialComplex union_of(std::uint32_t vertex_count,
                           const std::vector<SimplicialComplex>& parts);

struct Cover {
    std::uint32_t vertex_count = 0;
    std::vector<SimplicialComplex> parts;
};

// Nerve of a cover by subcomplexes: one vertex per part, a subset of parts
// spans a face exactly when the parts share a common simplex (equivalently,
// by downward closure, a common vertex). Every part must be nonempty.
SimplicialComplex nerve_of_cover(const Cover& cover);

// For the hypercube on 2^n vertices (2 <= n <= 5): the union of the scale-3
// complexes of the 2n half-cube subgraphs {v : coordinate i = eps}, together
// with that 2n-part cover (parts ordered (i=1,eps=0), (1,1), (2,0), ...).
std::pair<SimplicialComplex, Cover> boundary_subcomplex(int n);

}  // namespace cechcube
