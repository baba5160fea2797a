#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cechcube {

using VertexId = std::uint32_t;

// A simplex is a strictly increasing list of vertex ids. The empty list is
// not a valid simplex; the augmentation map treats the empty face internally
// where reduced homology needs it.
using Simplex = std::vector<VertexId>;

// Sorts and removes duplicate ids.
Simplex canonical(Simplex s);

bool is_canonical(const Simplex& s);

// Subset test; both arguments must be canonical.
bool is_subset(const Simplex& a, const Simplex& b);

Simplex simplex_union(const Simplex& a, const Simplex& b);

// Elements of a that are not in b.
Simplex simplex_difference(const Simplex& a, const Simplex& b);

std::uint64_t simplex_hash(const Simplex& s);

// "{0,3,5}"
std::string format_simplex(const Simplex& s);

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        return static_cast<std::size_t>(simplex_hash(s));
    }
};

}  // namespace cechcube
