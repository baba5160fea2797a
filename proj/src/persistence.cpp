#include "cechcube/persistence.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "cechcube/detail/parallel.hpp"
#include "cechcube/detail/z2.hpp"
#include "cechcube/errors.hpp"

namespace cechcube {

namespace {

std::uint32_t birth_scale_impl(const Graph& g, const Simplex& sigma,
                               const std::vector<std::pair<VertexId, VertexId>>& edges) {
    // Even candidate: 2 * min_v max_{x in sigma} d(v, x).
    std::uint32_t best_even = std::numeric_limits<std::uint32_t>::max();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::uint32_t worst = 0;
        for (VertexId x : sigma) {
            worst = std::max(worst, g.distance(v, x));
            if (worst >= best_even) break;
        }
        best_even = std::min(best_even, worst);
        if (best_even == 0) break;
    }
    std::uint32_t even_scale = 2 * best_even;
    if (even_scale == 0) return 0;

    // Odd candidate: 1 + 2 * min_{(v,w) edge} max_{x in sigma} min(d(v,x), d(w,x)).
    std::uint32_t best_odd = std::numeric_limits<std::uint32_t>::max();
    for (auto [v, w] : edges) {
        std::uint32_t worst = 0;
        for (VertexId x : sigma) {
            worst = std::max(worst, std::min(g.distance(v, x), g.distance(w, x)));
            if (worst >= best_odd) break;
        }
        best_odd = std::min(best_odd, worst);
        if (best_odd == 0) break;
    }
    std::uint32_t odd_scale = 1 + 2 * best_odd;
    return std::min(even_scale, odd_scale);
}

int entry_dim(const FiltrationEntry& e) { return static_cast<int>(e.face.size()) - 1; }

// Witnesses are reported against the lexicographically first failing maximal
// face, independent of the antichain's internal storage order.
std::vector<Simplex> lex_sorted_maximal(const SimplicialComplex& k) {
    std::vector<Simplex> faces = k.maximal_faces();
    std::sort(faces.begin(), faces.end());
    return faces;
}

}  // namespace

std::uint32_t birth_scale(const Graph& g, const Simplex& sigma) {
    Simplex c = canonical(sigma);
    if (c.empty()) return 0;  // the empty face is present from scale 0 on
    if (c.back() >= g.vertex_count()) {
        throw DomainError("simplex vertex outside the graph");
    }
    return birth_scale_impl(g, c, g.edges());
}

std::uint32_t full_simplex_scale(const Graph& g) {
    std::uint32_t even_scale = 2 * g.radius();
    std::uint32_t best_odd = std::numeric_limits<std::uint32_t>::max();
    for (auto [v, w] : g.edges()) {
        std::uint32_t worst = 0;
        for (VertexId x = 0; x < g.vertex_count(); ++x) {
            worst = std::max(worst, std::min(g.distance(v, x), g.distance(w, x)));
        }
        best_odd = std::min(best_odd, worst);
    }
    std::uint32_t odd_scale = best_odd == std::numeric_limits<std::uint32_t>::max()
                                  ? std::numeric_limits<std::uint32_t>::max()
                                  : 1 + 2 * best_odd;
    return std::min(even_scale, odd_scale);
}

Filtration build_filtration(const Graph& g, std::uint32_t max_scale,
                            std::size_t face_budget, int jobs) {
    SimplicialComplex k = cech_complex(g, max_scale);
    k.total_face_count(face_budget);

    Filtration f;
    f.vertex_count = g.vertex_count();
    f.max_scale = max_scale;
    for (int d = 0; d <= k.dimension(); ++d) {
        for (const auto& face : k.faces(d)) f.entries.push_back({face, 0});
    }
    auto edges = g.edges();
    detail::parallel_for(f.entries.size(), jobs, [&](std::size_t i) {
        f.entries[i].birth = birth_scale_impl(g, f.entries[i].face, edges);
    });

    // Births are monotone under inclusion and bounded by the build scale;
    // both are consequences of the ball construction, checked defensively.
    std::unordered_map<Simplex, std::uint32_t, SimplexHash> birth_of;
    birth_of.reserve(f.entries.size());
    for (const auto& e : f.entries) {
        if (e.birth > max_scale) {
            throw Error("birth scale " + std::to_string(e.birth) + " of face " +
                        format_simplex(e.face) + " exceeds the build scale " +
                        std::to_string(max_scale));
        }
        birth_of.emplace(e.face, e.birth);
    }
    Simplex facet;
    for (const auto& e : f.entries) {
        if (e.face.size() < 2) continue;
        for (std::size_t i = 0; i < e.face.size(); ++i) {
            facet.clear();
            facet.insert(facet.end(), e.face.begin(), e.face.begin() + i);
            facet.insert(facet.end(), e.face.begin() + i + 1, e.face.end());
            if (birth_of.at(facet) > e.birth) {
                throw Error("filtration monotonicity violated: face " +
                            format_simplex(e.face) + " born at " + std::to_string(e.birth) +
                            " has facet " + format_simplex(facet) + " born at " +
                            std::to_string(birth_of.at(facet)));
            }
        }
    }

    std::sort(f.entries.begin(), f.entries.end(),
              [](const FiltrationEntry& a, const FiltrationEntry& b) {
                  if (a.birth != b.birth) return a.birth < b.birth;
                  if (a.face.size() != b.face.size()) return a.face.size() < b.face.size();
                  return a.face < b.face;
              });
    return f;
}

std::size_t Barcode::alive_at(int dim, std::uint32_t scale) const {
    std::size_t count = 0;
    for (const auto& iv : intervals) {
        if (iv.dim == dim && iv.birth <= scale && (!iv.death || *iv.death > scale)) ++count;
    }
    return count;
}

Barcode compute_barcode(const Filtration& f) {
    Barcode out;
    out.max_scale = f.max_scale;
    if (f.entries.empty()) return out;

    int top = 0;
    for (const auto& e : f.entries) top = std::max(top, entry_dim(e));

    // Per-dimension face order = the filtration order restricted to that
    // dimension; positions index the reduction's rows and columns.
    std::vector<std::vector<std::uint32_t>> by_dim(top + 1);  // entry index per dim
    std::vector<std::uint32_t> pos_in_dim(f.entries.size());
    std::unordered_map<Simplex, std::uint32_t, SimplexHash> position;
    position.reserve(f.entries.size());
    for (std::uint32_t i = 0; i < f.entries.size(); ++i) {
        int d = entry_dim(f.entries[i]);
        pos_in_dim[i] = static_cast<std::uint32_t>(by_dim[d].size());
        by_dim[d].push_back(i);
        position.emplace(f.entries[i].face, pos_in_dim[i]);
    }
    // position maps a face to its slot within its own dimension; the facet
    // lookups below always stay one dimension down, so slots are unambiguous
    // only because every face of the complex appears exactly once.

    std::vector<char> death_paired(f.entries.size(), 0);
    std::vector<char> zero_column(f.entries.size(), 0);
    std::vector<char> cleared;  // per position in dimension d-1

    for (int d = top; d >= 1; --d) {
        const auto& rows = by_dim[d - 1];
        const auto& cols = by_dim[d];
        std::vector<std::vector<std::uint32_t>> columns(cols.size());
        Simplex facet;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const Simplex& face = f.entries[cols[j]].face;
            auto& col = columns[j];
            col.reserve(face.size());
            for (std::size_t i = 0; i < face.size(); ++i) {
                facet.clear();
                facet.insert(facet.end(), face.begin(), face.begin() + i);
                facet.insert(facet.end(), face.begin() + i + 1, face.end());
                col.push_back(position.at(facet));
            }
            std::sort(col.begin(), col.end());
        }
        std::vector<char> skip = cleared;
        skip.resize(cols.size(), 0);
        auto res = detail::reduce_mod2(columns, rows.size(), &skip);

        cleared.assign(rows.size(), 0);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            std::uint32_t pivot = res.pivot_row_of_col[j];
            if (pivot == detail::kNoPivot) {
                if (!skip[j]) zero_column[cols[j]] = 1;
                continue;
            }
            cleared[pivot] = 1;
            std::uint32_t dying = rows[pivot];
            death_paired[dying] = 1;
            std::uint32_t b = f.entries[dying].birth;
            std::uint32_t dth = f.entries[cols[j]].birth;
            if (dth > b) {
                out.intervals.push_back({d - 1, b, dth});
            }
        }
    }

    // Dimension-0 stage against the augmentation: every vertex column is the
    // single virtual empty face, so the first vertex pairs with it (the
    // zero-length (-1)-dimensional bar is dropped) and every later vertex
    // opens a component. Vertices cleared by the edge stage died there.
    bool augmentation_used = false;
    for (std::uint32_t i : by_dim[0]) {
        if (!cleared.empty() && cleared[pos_in_dim[i]]) continue;
        if (!augmentation_used) {
            augmentation_used = true;
            continue;
        }
        zero_column[i] = 1;
    }

    for (std::uint32_t i = 0; i < f.entries.size(); ++i) {
        if (zero_column[i] && !death_paired[i]) {
            out.intervals.push_back({entry_dim(f.entries[i]), f.entries[i].birth, std::nullopt});
        }
    }
    std::sort(out.intervals.begin(), out.intervals.end(),
              [](const BarcodeInterval& a, const BarcodeInterval& b) {
                  if (a.dim != b.dim) return a.dim < b.dim;
                  if (a.birth != b.birth) return a.birth < b.birth;
                  std::uint32_t da = a.death.value_or(std::numeric_limits<std::uint32_t>::max());
                  std::uint32_t db = b.death.value_or(std::numeric_limits<std::uint32_t>::max());
                  return da < db;
              });
    return out;
}

VertexId VertexMap::operator()(VertexId v) const {
    if (v >= domain_size || v >= table.size()) {
        throw DomainError("vertex outside the map domain");
    }
    return table[v];
}

Simplex VertexMap::image(const Simplex& sigma) const {
    Simplex img;
    img.reserve(sigma.size());
    for (VertexId v : sigma) img.push_back((*this)(v));
    return canonical(std::move(img));
}

bool is_simplicial(const VertexMap& f, const SimplicialComplex& k,
                   const SimplicialComplex& l) {
    if (f.domain_size != k.vertex_count() || f.codomain_size != l.vertex_count()) {
        throw DomainError("vertex map does not match the complexes");
    }
    for (VertexId v : f.table) {
        if (v >= f.codomain_size) {
            throw DomainError("vertex map image outside the codomain");
        }
    }
    for (const auto& face : k.maximal_faces()) {
        if (!l.contains(f.image(face))) return false;
    }
    return true;
}

ContiguityResult is_contiguous(const VertexMap& f, const VertexMap& g,
                               const SimplicialComplex& k, const SimplicialComplex& l) {
    if (!is_simplicial(f, k, l) || !is_simplicial(g, k, l)) {
        throw DomainError("is_contiguous requires simplicial maps");
    }
    for (const auto& face : lex_sorted_maximal(k)) {
        Simplex combined = simplex_union(f.image(face), g.image(face));
        if (!l.contains(combined)) {
            return {false, face};
        }
    }
    return {true, std::nullopt};
}

VertexMap coordinate_projection(int n, int i) {
    if (n < 1 || n > 20) {
        throw DomainError("coordinate projection needs 1 <= n <= 20");
    }
    if (i < 0 || i > n) {
        throw DomainError("projection index must lie in 0..n");
    }
    VertexMap f;
    f.domain_size = f.codomain_size = 1u << n;
    f.table.resize(f.domain_size);
    VertexId keep = ~((1u << i) - 1);
    for (VertexId v = 0; v < f.domain_size; ++v) f.table[v] = v & keep;
    return f;
}

VertexMap subcube_retraction(int n, int i, int eps) {
    if (n < 1 || n > 20) {
        throw DomainError("subcube retraction needs 1 <= n <= 20");
    }
    if (i < 1 || i > n) {
        throw DomainError("retraction coordinate must lie in 1..n");
    }
    if (eps != 0 && eps != 1) {
        throw DomainError("retraction value must be 0 or 1");
    }
    VertexMap f;
    f.domain_size = f.codomain_size = 1u << n;
    f.table.resize(f.domain_size);
    VertexId bit = 1u << (i - 1);
    for (VertexId v = 0; v < f.domain_size; ++v) {
        f.table[v] = eps ? (v | bit) : (v & ~bit);
    }
    return f;
}

ChainVerdict contiguity_chain(int n, std::uint32_t r, int codomain_delta) {
    if (n < 1 || n > 5) {
        throw DomainError("contiguity chain needs 1 <= n <= 5");
    }
    if (r > 2u * static_cast<std::uint32_t>(n) - 2) {
        throw DomainError("contiguity chain needs r <= 2n-2");
    }
    if (codomain_delta != 1 && codomain_delta != 2) {
        throw DomainError("codomain delta must be 1 or 2");
    }
    Graph g = Graph::hypercube(n);
    SimplicialComplex k = cech_complex(g, r);
    SimplicialComplex l = cech_complex(g, r + static_cast<std::uint32_t>(codomain_delta));
    // The chain ends at the projection clearing every coordinate, which must
    // be the constant map at vertex 0.
    for (VertexId v : coordinate_projection(n, n).table) {
        if (v != 0) {
            throw Error("projection clearing all coordinates is not constant");
        }
    }
    std::vector<Simplex> maximal = lex_sorted_maximal(k);
    for (int i = 1; i <= n; ++i) {
        VertexMap f = coordinate_projection(n, i - 1);
        VertexMap h = coordinate_projection(n, i);
        // A projection failing to be simplicial counts as a chain failure at
        // this step, with the offending domain face as the witness.
        for (const auto& face : maximal) {
            if (!l.contains(f.image(face)) || !l.contains(h.image(face))) {
                return {false, i, face};
            }
        }
        for (const auto& face : maximal) {
            Simplex combined = simplex_union(f.image(face), h.image(face));
            if (!l.contains(combined)) {
                return {false, i, face};
            }
        }
    }
    return {true, 0, std::nullopt};
}

}  // namespace cechcube
