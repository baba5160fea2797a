#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cechcube/detail/progress.hpp"
#include "cechcube/errors.hpp"
#include "cechcube/homology.hpp"

// Exact Smith normal form of sparse integer matrices. Phase one eliminates
// with pivots of absolute value 1 chosen by Markowitz fill cost, which keeps
// all operations integral without gcd steps; whatever survives (rare for
// boundary matrices) is handed to a dense big-integer routine. The 64-bit
// instantiation aborts to arbitrary precision the moment any arithmetic
// would overflow.

namespace cechcube {

namespace {

struct Escalate {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Escalate{};
    return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Escalate{};
    return r;
}

template <class T>
struct Ops {
    static T mul(const T& a, const T& b) { return a * b; }
    static T add(const T& a, const T& b) { return a + b; }
    static bool is_unit(const T& v) { return v == 1 || v == -1; }
};

template <>
struct Ops<std::int64_t> {
    static std::int64_t mul(std::int64_t a, std::int64_t b) { return checked_mul(a, b); }
    static std::int64_t add(std::int64_t a, std::int64_t b) { return checked_add(a, b); }
    static bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
};

struct DenseSnf {
    std::size_t rank = 0;
    std::vector<BigInt> factors;  // > 1, divisibility chain
};

BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Textbook Smith reduction on a dense matrix; entries are arbitrary
// precision so no growth monitoring is needed. The pivot's absolute value
// strictly decreases whenever a division leaves a remainder, so the inner
// loops terminate.
DenseSnf dense_snf(std::vector<std::vector<BigInt>> m) {
    DenseSnf out;
    if (m.empty() || m[0].empty()) return out;
    const std::size_t nr = m.size();
    const std::size_t nc = m[0].size();
    std::size_t t = 0;
    while (t < nr && t < nc) {
        if (t > 0 && t % 256 == 0) {
            detail::progress("dense diagonalization: " + std::to_string(t) + "/" +
                             std::to_string(std::min(nr, nc)) + " pivots");
        }
        // Smallest nonzero entry of the trailing block becomes the pivot.
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t; i < nr; ++i) {
            for (std::size_t j = t; j < nc; ++j) {
                if (m[i][j] == 0) continue;
                if (!best || big_abs(m[i][j]) < big_abs(m[best->first][best->second])) {
                    best = {i, j};
                }
            }
        }
        if (!best) break;
        std::swap(m[t], m[best->first]);
        for (std::size_t i = 0; i < nr; ++i) std::swap(m[i][t], m[i][best->second]);

        bool settled = false;
        while (!settled) {
            settled = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (m[i][t] == 0) continue;
                BigInt q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < nc; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]);  // strictly smaller pivot
                    settled = false;
                }
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (m[t][j] == 0) continue;
                BigInt q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < nr; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = 0; i < nr; ++i) std::swap(m[i][t], m[i][j]);
                    settled = false;
                }
            }
            if (!settled) continue;
            // The pivot must divide the rest of the block for the factors to
            // chain; fold a violating row into the pivot row and retry.
            for (std::size_t i = t + 1; i < nr && settled; ++i) {
                for (std::size_t j = t + 1; j < nc && settled; ++j) {
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t jj = t; jj < nc; ++jj) m[t][jj] += m[i][jj];
                        settled = false;
                    }
                }
            }
        }
        out.factors.push_back(big_abs(m[t][t]));
        ++t;
    }
    out.rank = t;
    std::erase_if(out.factors, [](const BigInt& f) { return f == 1; });
    return out;
}

template <class T>
class SparseEliminator {
public:
    SparseEliminator(const BoundaryMatrix& m) : nrows_(m.rows) {
        cols_.resize(m.cols);
        row_nnz_.assign(nrows_, 0);
        row_cols_.assign(nrows_, {});
        for (std::size_t j = 0; j < m.cols; ++j) {
            auto& col = cols_[j];
            col.reserve(m.columns[j].size());
            for (auto [r, s] : m.columns[j]) {
                col.emplace_back(r, static_cast<T>(s));
                ++row_nnz_[r];
                row_cols_[r].push_back(static_cast<std::uint32_t>(j));
            }
        }
    }

    std::size_t unit_pivot_phase() {
        std::size_t rank = 0;
        while (true) {
            auto pivot = find_unit_pivot();
            if (!pivot) break;
            eliminate(pivot->first, pivot->second);
            ++rank;
            if (rank % 4096 == 0) {
                detail::progress("integer elimination: " + std::to_string(rank) + " pivots");
            }
        }
        return rank;
    }

    std::vector<std::vector<BigInt>> residual() const {
        std::vector<std::uint32_t> live_rows;
        for (std::uint32_t r = 0; r < nrows_; ++r) {
            if (row_nnz_[r] > 0) live_rows.push_back(r);
        }
        std::vector<std::uint32_t> row_index(nrows_, 0);
        for (std::size_t i = 0; i < live_rows.size(); ++i) row_index[live_rows[i]] = i;
        std::vector<std::size_t> live_cols;
        for (std::size_t j = 0; j < cols_.size(); ++j) {
            if (!cols_[j].empty()) live_cols.push_back(j);
        }
        std::vector<std::vector<BigInt>> dense(live_rows.size(),
                                               std::vector<BigInt>(live_cols.size(), 0));
        for (std::size_t jj = 0; jj < live_cols.size(); ++jj) {
            for (const auto& [r, v] : cols_[live_cols[jj]]) {
                dense[row_index[r]][jj] = BigInt(v);
            }
        }
        return dense;
    }

private:
    using Entry = std::pair<std::uint32_t, T>;

    std::optional<std::pair<std::uint32_t, std::size_t>> find_unit_pivot() const {
        std::optional<std::pair<std::uint32_t, std::size_t>> best;
        std::uint64_t best_cost = std::numeric_limits<std::uint64_t>::max();
        for (std::size_t j = 0; j < cols_.size(); ++j) {
            const auto& col = cols_[j];
            if (col.empty()) continue;
            for (const auto& [r, v] : col) {
                if (!Ops<T>::is_unit(v)) continue;
                std::uint64_t cost = static_cast<std::uint64_t>(row_nnz_[r] - 1) *
                                     static_cast<std::uint64_t>(col.size() - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    best = {r, j};
                    if (cost == 0) return best;
                }
            }
        }
        return best;
    }

    // Entry (r, j) has value +-1: zero out row r in every other column with
    // column operations, then drop row r and column j. Dropping the column
    // stands in for the row operations that would clear it, which touch
    // nothing else once row r is zero elsewhere.
    void eliminate(std::uint32_t r, std::size_t j) {
        T a = value_at(j, r);
        std::vector<std::uint32_t> touchers = row_cols_[r];
        for (std::uint32_t jp : touchers) {
            if (jp == j) continue;
            auto& col = cols_[jp];
            auto it = std::lower_bound(col.begin(), col.end(), r,
                                       [](const Entry& e, std::uint32_t row) { return e.first < row; });
            if (it == col.end() || it->first != r) continue;  // stale index entry
            T factor = Ops<T>::mul(T(-1), Ops<T>::mul(it->second, a));
            merge_column(jp, j, factor);
        }
        for (const auto& [row, v] : cols_[j]) --row_nnz_[row];
        cols_[j].clear();
        row_cols_[r].clear();
    }

    T value_at(std::size_t j, std::uint32_t r) const {
        const auto& col = cols_[j];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const Entry& e, std::uint32_t row) { return e.first < row; });
        return it->second;
    }

    // cols_[dst] += factor * cols_[src]
    void merge_column(std::size_t dst, std::size_t src, const T& factor) {
        const auto& a = cols_[dst];
        const auto& b = cols_[src];
        std::vector<Entry> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, k = 0;
        while (i < a.size() || k < b.size()) {
            if (k == b.size() || (i < a.size() && a[i].first < b[k].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[k].first < a[i].first) {
                T v = Ops<T>::mul(factor, b[k].second);
                out.emplace_back(b[k].first, v);
                ++row_nnz_[b[k].first];
                row_cols_[b[k].first].push_back(static_cast<std::uint32_t>(dst));
                ++k;
            } else {
                T v = Ops<T>::add(a[i].second, Ops<T>::mul(factor, b[k].second));
                if (v == 0) {
                    --row_nnz_[a[i].first];
                } else {
                    out.emplace_back(a[i].first, v);
                }
                ++i;
                ++k;
            }
        }
        cols_[dst] = std::move(out);
    }

    std::size_t nrows_;
    std::vector<std::vector<Entry>> cols_;
    std::vector<std::uint32_t> row_nnz_;
    std::vector<std::vector<std::uint32_t>> row_cols_;
};

template <class T>
SmithForm snf_impl(const BoundaryMatrix& m) {
    SparseEliminator<T> elim(m);
    std::size_t unit_rank = elim.unit_pivot_phase();
    DenseSnf tail = dense_snf(elim.residual());
    SmithForm out;
    out.rank = unit_rank + tail.rank;
    out.invariant_factors = std::move(tail.factors);
    return out;
}

}  // namespace

SmithForm smith_normal_form(const BoundaryMatrix& m) {
    try {
        return snf_impl<std::int64_t>(m);
    } catch (const Escalate&) {
        return snf_impl<BigInt>(m);
    }
}

}  // namespace cechcube
