#include "cechcube/simplex.hpp"

#include <algorithm>

namespace cechcube {

Simplex canonical(Simplex s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool is_canonical(const Simplex& s) {
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i - 1] >= s[i]) return false;
    }
    return true;
}

bool is_subset(const Simplex& a, const Simplex& b) {
    if (a.size() > b.size()) return false;
    std::size_t j = 0;
    for (VertexId v : a) {
        while (j < b.size() && b[j] < v) ++j;
        if (j == b.size() || b[j] != v) return false;
        ++j;
    }
    return true;
}

Simplex simplex_union(const Simplex& a, const Simplex& b) {
    Simplex out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Simplex simplex_difference(const Simplex& a, const Simplex& b) {
    Simplex out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::uint64_t simplex_hash(const Simplex& s) {
    // FNV-1a over the id bytes.
    std::uint64_t h = 1469598103934665603ull;
    for (VertexId v : s) {
        for (int shift = 0; shift < 32; shift += 8) {
            h ^= (v >> shift) & 0xffu;
            h *= 1099511628211ull;
        }
    }
    return h;
}

std::string format_simplex(const Simplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    out += "}";
    return out;
}

}  // namespace cechcube
