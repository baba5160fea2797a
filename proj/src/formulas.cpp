#include "cechcube/formulas.hpp"

#include <bit>

#include "cechcube/errors.hpp"

namespace cechcube {

namespace {

long long checked_shift(int n) {
    if (n < 0 || n > 61) {
        throw SizeError("2^" + std::to_string(n) + " exceeds the supported range");
    }
    return 1LL << n;
}

TableEntry star(int n, int r) {
    TableEntry e;
    e.n = n;
    e.r = r;
    e.kind = TableEntryKind::Contractible;
    return e;
}

TableEntry wedge(int n, int r, long long count, int dim) {
    TableEntry e;
    e.n = n;
    e.r = r;
    e.kind = TableEntryKind::Wedge;
    e.wedge_count = count;
    e.sphere_dim = dim;
    return e;
}

TableEntry betti_list(int n, int r, std::map<int, long long> betti) {
    TableEntry e;
    e.n = n;
    e.r = r;
    e.kind = TableEntryKind::BettiList;
    e.betti = std::move(betti);
    return e;
}

}  // namespace

long long alpha(std::uint64_t m_minus_1) {
    if (m_minus_1 == 0) {
        throw DomainError("alpha requires a positive argument");
    }
    long long k = std::popcount(m_minus_1);
    return (k - 1) * (k - 1);
}

long long betti1_hypercube(int n) {
    if (n < 2) {
        throw DomainError("betti1_hypercube requires n >= 2");
    }
    long long half = checked_shift(n - 1);
    long long edges;
    long long vertices = checked_shift(n);
    if (__builtin_mul_overflow(static_cast<long long>(n), half, &edges)) {
        throw SizeError("betti1_hypercube overflows for n = " + std::to_string(n));
    }
    return edges - vertices + 1;
}

long long betti2_hypercube(int n) {
    if (n < 2) {
        throw DomainError("betti2_hypercube requires n >= 2");
    }
    long long quarter = checked_shift(n - 2);
    long long poly = static_cast<long long>(n) * n - 3LL * n + 4;
    long long product;
    if (__builtin_mul_overflow(quarter, poly, &product)) {
        throw SizeError("betti2_hypercube overflows for n = " + std::to_string(n));
    }
    return product - 1;
}

std::map<int, long long> TableEntry::expected_betti() const {
    switch (kind) {
        case TableEntryKind::Contractible:
            return {};
        case TableEntryKind::Wedge:
            return {{sphere_dim, wedge_count}};
        case TableEntryKind::BettiList:
            return betti;
    }
    return {};
}

std::string TableEntry::descriptor() const {
    switch (kind) {
        case TableEntryKind::Contractible:
            return "*";
        case TableEntryKind::Wedge: {
            std::string sphere = "S^" + std::to_string(sphere_dim);
            if (wedge_count == 1) return sphere;
            return "v" + std::to_string(wedge_count) + " " + sphere;
        }
        case TableEntryKind::BettiList: {
            std::string out;
            for (const auto& [dim, rank] : betti) {
                if (!out.empty()) out += "; ";
                out += "b" + std::to_string(dim) + "=" + std::to_string(rank);
            }
            return out;
        }
    }
    return {};
}

const std::vector<TableEntry>& table_registry() {
    static const std::vector<TableEntry> registry = [] {
        std::vector<TableEntry> t;
        // Scale 0: 2^n isolated vertices, a wedge of 2^n - 1 zero-spheres.
        for (int n = 1; n <= 8; ++n) {
            t.push_back(wedge(n, 0, checked_shift(n) - 1, 0));
        }
        // Scale 1: the cube graph itself; (1,1) is a segment.
        t.push_back(star(1, 1));
        for (int n = 2; n <= 8; ++n) {
            t.push_back(wedge(n, 1, betti1_hypercube(n), 1));
        }
        // Scale 2: wedges of 2-spheres; (1,2) is a full segment.
        t.push_back(star(1, 2));
        for (int n = 2; n <= 8; ++n) {
            t.push_back(wedge(n, 2, betti2_hypercube(n), 2));
        }
        // Scale 3.
        t.push_back(star(1, 3));
        t.push_back(star(2, 3));
        t.push_back(wedge(3, 3, 3, 4));                    // (3,3): v3 S^4
        t.push_back(betti_list(4, 3, {{3, 1}, {4, 24}}));  // (4,3)
        t.push_back(betti_list(5, 3, {{3, 9}, {4, 120}}));  // (5,3)
        // Scale 4.
        t.push_back(star(1, 4));
        t.push_back(star(2, 4));
        t.push_back(wedge(3, 4, 1, 6));                    // (3,4): S^6
        t.push_back(betti_list(4, 4, {{4, 1}, {6, 10}}));  // (4,4)
        t.push_back(betti_list(5, 4, {{4, 11}, {6, 60}}));  // (5,4)
        // Scale 5.
        t.push_back(star(1, 5));
        t.push_back(star(2, 5));
        t.push_back(star(3, 5));
        t.push_back(betti_list(4, 5, {{10, 7}}));  // (4,5): b10 = 7
        // Scale 6: (4,6) is the boundary of the full simplex on 16 vertices.
        t.push_back(star(1, 6));
        t.push_back(star(2, 6));
        t.push_back(star(3, 6));
        t.push_back(wedge(4, 6, 1, 14));  // (4,6): S^14
        // Scale 7.
        for (int n = 1; n <= 4; ++n) t.push_back(star(n, 7));
        // Scale 8: (5,8) is the boundary of the full simplex on 32 vertices.
        for (int n = 1; n <= 4; ++n) t.push_back(star(n, 8));
        t.push_back(wedge(5, 8, 1, 30));  // (5,8): S^30
        return t;
    }();
    return registry;
}

std::optional<TableEntry> table_lookup(int n, int r) {
    for (const auto& e : table_registry()) {
        if (e.n == n && e.r == r) return e;
    }
    return std::nullopt;
}

}  // namespace cechcube
