#include "cechcube/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include "cechcube/detail/progress.hpp"
#include "cechcube/detail/z2.hpp"
#include "cechcube/errors.hpp"

namespace cechcube {

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int d) {
    if (d < 1) {
        throw DomainError("boundary matrix needs dimension >= 1");
    }
    BoundaryMatrix m;
    m.dim = d;
    if (d > k.dimension()) return m;
    const auto& rows = k.faces(d - 1);
    const auto& cols = k.faces(d);
    m.rows = rows.size();
    m.cols = cols.size();
    m.columns.resize(m.cols);
    Simplex facet;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Simplex& face = cols[j];
        auto& column = m.columns[j];
        column.reserve(face.size());
        for (std::size_t i = 0; i < face.size(); ++i) {
            facet.clear();
            facet.insert(facet.end(), face.begin(), face.begin() + i);
            facet.insert(facet.end(), face.begin() + i + 1, face.end());
            auto it = std::lower_bound(rows.begin(), rows.end(), facet);
            // faces() enumerates downward closures, so the facet is present
            std::uint32_t row = static_cast<std::uint32_t>(it - rows.begin());
            column.emplace_back(row, static_cast<std::int8_t>(i % 2 == 0 ? 1 : -1));
        }
        std::sort(column.begin(), column.end());
    }
    return m;
}

bool boundary_composition_is_zero(const SimplicialComplex& k) {
    int dim = k.dimension();
    if (dim < 2) return true;
    BoundaryMatrix lower = boundary_matrix(k, 1);
    for (int d = 2; d <= dim; ++d) {
        BoundaryMatrix upper = boundary_matrix(k, d);
        std::unordered_map<std::uint32_t, long long> acc;
        for (const auto& col : upper.columns) {
            acc.clear();
            for (auto [r1, s1] : col) {
                for (auto [r2, s2] : lower.columns[r1]) {
                    acc[r2] += static_cast<long long>(s1) * s2;
                }
            }
            for (const auto& [row, value] : acc) {
                if (value != 0) return false;
            }
        }
        lower = std::move(upper);
    }
    return true;
}

std::size_t rank_mod2(const BoundaryMatrix& m) {
    std::vector<std::vector<std::uint32_t>> cols(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) {
        cols[j].reserve(m.columns[j].size());
        for (auto [r, s] : m.columns[j]) cols[j].push_back(r);
    }
    return detail::reduce_mod2(cols, m.rows).rank;
}

std::vector<long long> betti_mod2_all(const SimplicialComplex& k, std::size_t face_budget) {
    if (k.is_void()) {
        throw DomainError("homology of the void complex");
    }
    k.total_face_count(face_budget);
    const int dim = k.dimension();
    std::vector<std::size_t> rank(static_cast<std::size_t>(dim) + 2, 0);
    // Top dimension first so each stage's pivot rows mark columns of the next
    // stage as already-reducible-to-zero (clearing).
    std::vector<char> cleared;
    for (int d = dim; d >= 1; --d) {
        BoundaryMatrix m = boundary_matrix(k, d);
        detail::progress("mod-2 homology: dimension " + std::to_string(d) + " (" +
                         std::to_string(m.cols) + " columns)");
        std::vector<std::vector<std::uint32_t>> cols(m.cols);
        for (std::size_t j = 0; j < m.cols; ++j) {
            cols[j].reserve(m.columns[j].size());
            for (auto [r, s] : m.columns[j]) cols[j].push_back(r);
        }
        std::vector<char> skip = cleared;
        skip.resize(m.cols, 0);
        auto res = detail::reduce_mod2(cols, m.rows, &skip);
        rank[d] = res.rank;
        cleared.assign(m.rows, 0);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (res.pivot_col_of_row[r] != detail::kNoPivot) cleared[r] = 1;
        }
    }
    std::vector<long long> betti(static_cast<std::size_t>(dim) + 1, 0);
    for (int d = 0; d <= dim; ++d) {
        long long fd = static_cast<long long>(k.faces(d).size());
        long long below = d == 0 ? 1 : static_cast<long long>(rank[d]);
        betti[d] = fd - below - static_cast<long long>(rank[d + 1]);
    }
    return betti;
}

long long HomologySummary::betti(int d) const {
    if (d < 0 || d >= static_cast<int>(dims.size())) return 0;
    if (!dims[d].betti_z.has_value()) {
        throw DomainError("integer Betti numbers were not computed");
    }
    return *dims[d].betti_z;
}

long long HomologySummary::betti2(int d) const {
    if (d < 0 || d >= static_cast<int>(dims.size())) return 0;
    return dims[d].betti_z2;
}

const std::vector<BigInt>& HomologySummary::torsion(int d) const {
    static const std::vector<BigInt> kEmpty;
    if (d < 0 || d >= static_cast<int>(dims.size())) return kEmpty;
    return dims[d].torsion;
}

bool HomologySummary::is_acyclic() const {
    for (const auto& h : dims) {
        if (h.betti_z.has_value()) {
            if (*h.betti_z != 0 || !h.torsion.empty()) return false;
        } else if (h.betti_z2 != 0) {
            return false;
        }
    }
    return true;
}

int HomologySummary::top_nonzero_dim() const {
    if (coefficients != Coefficients::Integers) {
        throw DomainError("top_nonzero_dim needs integer coefficients");
    }
    int top = -1;
    for (const auto& h : dims) {
        if (*h.betti_z != 0 || !h.torsion.empty()) top = std::max(top, h.dim);
    }
    return top;
}

HomologySummary reduced_homology(const SimplicialComplex& k, Coefficients coefficients,
                                 std::size_t face_budget) {
    if (k.is_void()) {
        throw DomainError("homology of the void complex");
    }
    k.total_face_count(face_budget);
    const int dim = k.dimension();

    HomologySummary summary;
    summary.coefficients = coefficients;
    summary.dims.resize(static_cast<std::size_t>(dim) + 1);

    std::vector<long long> z2 = betti_mod2_all(k, face_budget);
    for (int d = 0; d <= dim; ++d) {
        summary.dims[d].dim = d;
        summary.dims[d].betti_z2 = z2[d];
    }
    if (coefficients == Coefficients::Mod2) return summary;

    std::vector<SmithForm> smith(static_cast<std::size_t>(dim) + 2);
    for (int d = 1; d <= dim; ++d) {
        BoundaryMatrix m = boundary_matrix(k, d);
        detail::progress("integer homology: dimension " + std::to_string(d) + " (" +
                         std::to_string(m.rows) + "x" + std::to_string(m.cols) + ")");
        smith[d] = smith_normal_form(m);
    }
    for (int d = 0; d <= dim; ++d) {
        long long fd = static_cast<long long>(k.faces(d).size());
        long long below = d == 0 ? 1 : static_cast<long long>(smith[d].rank);
        summary.dims[d].betti_z = fd - below - static_cast<long long>(smith[d + 1].rank);
        summary.dims[d].torsion = smith[d + 1].invariant_factors;
    }
    return summary;
}

long long betti(const SimplicialComplex& k, int d, Coefficients coefficients,
                std::size_t face_budget) {
    if (k.is_void()) {
        throw DomainError("homology of the void complex");
    }
    if (d < 0) {
        throw DomainError("negative homology dimension");
    }
    if (d > k.dimension()) return 0;
    std::size_t touched = k.faces(d).size();
    if (d > 0) touched += k.faces(d - 1).size();
    if (d < k.dimension()) touched += k.faces(d + 1).size();
    if (face_budget && touched > face_budget) {
        throw SizeError("face budget exceeded: " + std::to_string(touched) +
                        " faces touched, budget " + std::to_string(face_budget));
    }
    auto rank_of = [&](int dd) -> std::size_t {
        if (dd < 1 || dd > k.dimension()) return 0;
        BoundaryMatrix m = boundary_matrix(k, dd);
        return coefficients == Coefficients::Mod2 ? rank_mod2(m) : smith_normal_form(m).rank;
    };
    long long fd = static_cast<long long>(k.faces(d).size());
    long long below = d == 0 ? 1 : static_cast<long long>(rank_of(d));
    return fd - below - static_cast<long long>(rank_of(d + 1));
}

}  // namespace cechcube
