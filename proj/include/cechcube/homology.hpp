#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cechcube/complex.hpp"

namespace cechcube {

using BigInt = boost::multiprecision::cpp_int;

enum class Coefficients { Integers, Mod2 };

inline constexpr std::size_t kDefaultFaceBudget = 2'000'000;

// Signed integer boundary matrix of the d-faces (columns) against the
// (d-1)-faces (rows), both in lexicographic order. The column of a d-face
// sigma = {v_0 < ... < v_d} is sum_i (-1)^i (sigma minus v_i).
struct BoundaryMatrix {
    int dim = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    // Per column, (row, sign) sorted by row.
    std::vector<std::vector<std::pair<std::uint32_t, std::int8_t>>> columns;
};

// Requires d >= 1; d above dimension(K) yields an empty matrix.
BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int d);

// Checks that consecutive boundary maps compose to zero over the integers.
bool boundary_composition_is_zero(const SimplicialComplex& k);

// rank + the invariant factors greater than 1, in divisibility order.
struct SmithForm {
    std::size_t rank = 0;
    std::vector<BigInt> invariant_factors;
};

// Exact Smith normal form: sparse elimination on unit pivots with a dense
// big-integer tail. Entries are tracked in 64-bit arithmetic with overflow
// detection; on overflow the computation restarts in arbitrary precision.
SmithForm smith_normal_form(const BoundaryMatrix& m);

// Rank over GF(2).
std::size_t rank_mod2(const BoundaryMatrix& m);

struct DimensionHomology {
    int dim = 0;
    // Absent when only mod-2 coefficients were requested.
    std::optional<long long> betti_z;
    std::vector<BigInt> torsion;  // orders > 1, divisibility order
    long long betti_z2 = 0;
};

struct HomologySummary {
    bool reduced = true;
    Coefficients coefficients = Coefficients::Integers;
    std::vector<DimensionHomology> dims;  // dimensions 0..dim(K)

    long long betti(int d) const;
    long long betti2(int d) const;
    const std::vector<BigInt>& torsion(int d) const;
    bool is_acyclic() const;
    int top_nonzero_dim() const;  // -1 if acyclic (counts torsion), Integers only
};

// Reduced homology of a nonempty complex. With Coefficients::Integers the
// summary carries Betti numbers over Z, torsion orders, and independently
// computed mod-2 Betti numbers; with Coefficients::Mod2 only the mod-2
// numbers are computed (betti_z/torsion absent).
HomologySummary reduced_homology(const SimplicialComplex& k,
                                 Coefficients coefficients = Coefficients::Integers,
                                 std::size_t face_budget = kDefaultFaceBudget);

// Single reduced Betti number; touches only the two adjacent boundary
// matrices instead of the whole chain complex.
long long betti(const SimplicialComplex& k, int d,
                Coefficients coefficients = Coefficients::Integers,
                std::size_t face_budget = kDefaultFaceBudget);

// Reduced mod-2 Betti numbers for dimensions 0..dim(K), computed by column
// reduction with clearing across dimensions.
std::vector<long long> betti_mod2_all(const SimplicialComplex& k,
                                      std::size_t face_budget = kDefaultFaceBudget);

}  // namespace cechcube
