#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cechcube/detail/progress.hpp"

namespace cechcube::detail {

inline constexpr std::uint32_t kNoPivot = 0xffffffffu;

struct Z2Reduction {
    std::vector<std::uint32_t> pivot_col_of_row;  // kNoPivot when the row owns none
    std::vector<std::uint32_t> pivot_row_of_col;  // kNoPivot when the column is zero
    std::size_t rank = 0;
};

// Symmetric difference of strictly increasing row-id vectors.
inline void xor_into(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                     std::vector<std::uint32_t>& scratch) {
    scratch.clear();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            scratch.push_back(a[i++]);
        } else if (a[i] > b[j]) {
            scratch.push_back(b[j++]);
        } else {
            ++i;
            ++j;
        }
    }
    scratch.insert(scratch.end(), a.begin() + i, a.end());
    scratch.insert(scratch.end(), b.begin() + j, b.end());
    a.swap(scratch);
}

// Left-to-right column reduction over GF(2) with the largest remaining row id
// as the pivot. Columns are reduced in place; columns flagged in `skip` are
// treated as zero without work (clearing).
inline Z2Reduction reduce_mod2(std::vector<std::vector<std::uint32_t>>& cols,
                               std::size_t rows, const std::vector<char>* skip = nullptr) {
    Z2Reduction out;
    out.pivot_col_of_row.assign(rows, kNoPivot);
    out.pivot_row_of_col.assign(cols.size(), kNoPivot);
    std::vector<std::uint32_t> scratch;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (j > 0 && j % 65536 == 0) {
            progress("mod-2 reduction: " + std::to_string(j) + "/" +
                     std::to_string(cols.size()) + " columns");
        }
        if (skip && (*skip)[j]) {
            cols[j].clear();
            continue;
        }
        auto& col = cols[j];
        while (!col.empty()) {
            std::uint32_t low = col.back();
            std::uint32_t owner = out.pivot_col_of_row[low];
            if (owner == kNoPivot) {
                out.pivot_col_of_row[low] = static_cast<std::uint32_t>(j);
                out.pivot_row_of_col[j] = low;
                ++out.rank;
                break;
            }
            xor_into(col, cols[owner], scratch);
        }
    }
    return out;
}

}  // namespace cechcube::detail
