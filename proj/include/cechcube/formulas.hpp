#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cechcube {

// (popcount(m_minus_1) - 1)^2: the number of 2-spheres the scale-2 complex
// gains when the prefix graph grows from m-1 to m vertices.
long long alpha(std::uint64_t m_minus_1);

// n * 2^(n-1) - 2^n + 1: the cycle rank of the n-cube graph, which is the
// first reduced Betti number of its scale-1 complex. Requires n >= 2.
long long betti1_hypercube(int n);

// 2^(n-2) * (n^2 - 3n + 4) - 1: the second reduced Betti number of the
// n-cube's scale-2 complex. Requires n >= 2. Equals the telescoped sum of
// alpha(m-1) over 2 <= m <= 2^n.
long long betti2_hypercube(int n);

enum class TableEntryKind {
    Contractible,  // all reduced homology vanishes
    Wedge,         // wedge of wedge_count spheres of dimension sphere_dim
    BettiList,     // explicit nonzero reduced Betti numbers
};

// One cell (n, r) of the known-results grid for hypercube complexes.
struct TableEntry {
    int n = 0;
    int r = 0;
    TableEntryKind kind = TableEntryKind::Contractible;
    long long wedge_count = 0;
    int sphere_dim = 0;
    std::map<int, long long> betti;

    // The nonzero reduced Betti numbers this cell predicts (empty map for a
    // contractible cell).
    std::map<int, long long> expected_betti() const;

    // "*", "S^2", "v7 S^2", or "b3=1; b4=24".
    std::string descriptor() const;
};

// Every known cell (n <= 8, r <= 8), in row-major (r, n) order.
const std::vector<TableEntry>& table_registry();

std::optional<TableEntry> table_lookup(int n, int r);

}  // namespace cechcube
