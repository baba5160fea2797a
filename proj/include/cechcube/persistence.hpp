#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cechcube/complex.hpp"
#include "cechcube/graph.hpp"

namespace cechcube {

// Least integer scale at which the simplex enters the tower of complexes of
// the graph: the minimum over the even rule (a ball covering sigma) and the
// odd rule (a pair of balls around an edge covering sigma).
std::uint32_t birth_scale(const Graph& g, const Simplex& sigma);

struct FiltrationEntry {
    Simplex face;
    std::uint32_t birth = 0;
};

// All faces present at max_scale with their birth scales, sorted by
// (birth, dimension, lexicographic face).
struct Filtration {
    std::uint32_t vertex_count = 0;
    std::uint32_t max_scale = 0;
    std::vector<FiltrationEntry> entries;
};

Filtration build_filtration(const Graph& g, std::uint32_t max_scale,
                            std::size_t face_budget = 2'000'000, int jobs = 1);

// Smallest scale at which the complex becomes a full simplex; the tower is
// constant from there on. For the hypercube on 2^n vertices this is 2n-1.
std::uint32_t full_simplex_scale(const Graph& g);

struct BarcodeInterval {
    int dim = 0;
    std::uint32_t birth = 0;
    std::optional<std::uint32_t> death;  // half-open [birth, death), absent = infinite

    bool operator==(const BarcodeInterval&) const = default;
};

struct Barcode {
    std::uint32_t max_scale = 0;
    std::vector<BarcodeInterval> intervals;  // sorted (dim, birth, death)

    // Number of intervals with birth <= scale < death in the dimension.
    std::size_t alive_at(int dim, std::uint32_t scale) const;
};

// Reduced persistent homology over GF(2) of the integer-scale tower.
// Zero-length intervals are dropped.
Barcode compute_barcode(const Filtration& f);

// Total vertex map between ambient vertex sets.
struct VertexMap {
    std::uint32_t domain_size = 0;
    std::uint32_t codomain_size = 0;
    std::vector<VertexId> table;

    VertexId operator()(VertexId v) const;
    Simplex image(const Simplex& sigma) const;  // canonical image
};

// Every maximal face of K maps to a face of L.
bool is_simplicial(const VertexMap& f, const SimplicialComplex& k,
                   const SimplicialComplex& l);

struct ContiguityResult {
    bool contiguous = false;
    // A maximal face sigma of K with f(sigma) ∪ g(sigma) not a face of L.
    std::optional<Simplex> witness;
};

// Both maps must be simplicial K -> L.
ContiguityResult is_contiguous(const VertexMap& f, const VertexMap& g,
                               const SimplicialComplex& k, const SimplicialComplex& l);

// p_i on the 2^n hypercube vertices clears coordinates 1..i (the i lowest
// bits); p_0 is the identity, p_n is constant 0.
VertexMap coordinate_projection(int n, int i);

// Sets coordinate i (1-based) to eps on every vertex. Idempotent, and the
// identity on the subcube {v : coordinate i = eps}.
VertexMap subcube_retraction(int n, int i, int eps);

struct ChainVerdict {
    bool success = false;
    // On failure: the first step i in 1..n whose pair (p_{i-1}, p_i) is not
    // contiguous into the codomain, and the witnessing face.
    int failing_step = 0;
    std::optional<Simplex> witness;
};

// Checks that identity = p_0, p_1, ..., p_n form a contiguity chain from the
// scale-r complex into the scale-(r + codomain_delta) complex of the same
// hypercube, ending at a constant map.
ChainVerdict contiguity_chain(int n, std::uint32_t r, int codomain_delta = 2);

}  // namespace cechcube
