#include "cechcube/complex.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "cechcube/errors.hpp"

namespace cechcube {

namespace {

// Keep only inclusion-maximal faces. Input must be canonical simplices.
std::vector<Simplex> antichain(std::vector<Simplex> faces, AntichainStats* stats) {
    AntichainStats local;
    local.input = faces.size();

    std::sort(faces.begin(), faces.end());
    auto last = std::unique(faces.begin(), faces.end());
    local.duplicates = static_cast<std::size_t>(faces.end() - last);
    faces.erase(last, faces.end());

    // Larger faces first; a face can only nest inside a strictly larger one.
    std::stable_sort(faces.begin(), faces.end(),
                     [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });

    std::vector<Simplex> kept;
    kept.reserve(faces.size());
    // Candidate supersets of f are the kept faces containing f's least-used
    // vertex; bucket kept faces by vertex to avoid the quadratic scan.
    std::unordered_map<VertexId, std::vector<std::size_t>> by_vertex;
    for (auto& f : faces) {
        bool nested = false;
        if (!f.empty()) {
            const std::vector<std::size_t>* best = nullptr;
            for (VertexId v : f) {
                auto it = by_vertex.find(v);
                if (it == by_vertex.end()) {
                    best = nullptr;
                    break;
                }
                if (!best || it->second.size() < best->size()) best = &it->second;
            }
            if (best) {
                for (std::size_t idx : *best) {
                    if (kept[idx].size() > f.size() && is_subset(f, kept[idx])) {
                        nested = true;
                        break;
                    }
                }
            }
        }
        if (nested) {
            ++local.nested;
            continue;
        }
        std::size_t idx = kept.size();
        kept.push_back(std::move(f));
        for (VertexId v : kept.back()) by_vertex[v].push_back(idx);
    }
    std::sort(kept.begin(), kept.end());
    if (stats) *stats = local;
    return kept;
}

void append_subsets(const Simplex& face, std::size_t size, std::vector<Simplex>& out) {
    // All `size`-subsets of a canonical face, in lexicographic order.
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    Simplex buf(size);
    while (true) {
        for (std::size_t i = 0; i < size; ++i) buf[i] = face[idx[i]];
        out.push_back(buf);
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == face.size() - size + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal(std::uint32_t vertex_count,
                                                  std::vector<Simplex> faces,
                                                  AntichainStats* stats) {
    for (auto& f : faces) {
        f = canonical(std::move(f));
        if (f.empty()) {
            throw DomainError("the empty set is not a valid maximal face");
        }
        if (f.back() >= vertex_count) {
            throw DomainError("face vertex " + std::to_string(f.back()) +
                              " outside ambient range of " + std::to_string(vertex_count));
        }
    }
    SimplicialComplex k(vertex_count);
    k.maximal_ = antichain(std::move(faces), stats);
    return k;
}

SimplicialComplex::SimplicialComplex(const SimplicialComplex& other) {
    std::lock_guard<std::mutex> lock(other.mu_);
    vertex_count_ = other.vertex_count_;
    maximal_ = other.maximal_;
    face_cache_ = other.face_cache_;
}

SimplicialComplex& SimplicialComplex::operator=(const SimplicialComplex& other) {
    if (this != &other) {
        SimplicialComplex tmp(other);
        vertex_count_ = tmp.vertex_count_;
        maximal_ = std::move(tmp.maximal_);
        face_cache_ = std::move(tmp.face_cache_);
    }
    return *this;
}

SimplicialComplex::SimplicialComplex(SimplicialComplex&& other) noexcept {
    std::lock_guard<std::mutex> lock(other.mu_);
    vertex_count_ = other.vertex_count_;
    maximal_ = std::move(other.maximal_);
    face_cache_ = std::move(other.face_cache_);
}

SimplicialComplex& SimplicialComplex::operator=(SimplicialComplex&& other) noexcept {
    if (this != &other) {
        std::lock_guard<std::mutex> lock(other.mu_);
        vertex_count_ = other.vertex_count_;
        maximal_ = std::move(other.maximal_);
        face_cache_ = std::move(other.face_cache_);
    }
    return *this;
}

int SimplicialComplex::dimension() const {
    int dim = -1;
    for (const auto& f : maximal_) dim = std::max(dim, static_cast<int>(f.size()) - 1);
    return dim;
}

std::vector<VertexId> SimplicialComplex::vertices() const {
    std::vector<VertexId> out;
    for (const auto& f : maximal_) out.insert(out.end(), f.begin(), f.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool SimplicialComplex::contains_vertex(VertexId v) const {
    for (const auto& f : maximal_) {
        if (std::binary_search(f.begin(), f.end(), v)) return true;
    }
    return false;
}

bool SimplicialComplex::contains(const Simplex& face) const {
    Simplex c = canonical(face);
    if (c.empty()) return !maximal_.empty();
    for (const auto& f : maximal_) {
        if (is_subset(c, f)) return true;
    }
    return false;
}

const std::vector<Simplex>& SimplicialComplex::faces(int dim) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = face_cache_.find(dim);
    if (it != face_cache_.end()) return it->second;

    std::vector<Simplex> result;
    if (dim >= 0) {
        std::size_t size = static_cast<std::size_t>(dim) + 1;
        std::unordered_set<Simplex, SimplexHash> seen;
        std::vector<Simplex> buf;
        for (const auto& f : maximal_) {
            if (f.size() < size) continue;
            buf.clear();
            append_subsets(f, size, buf);
            for (auto& s : buf) seen.insert(std::move(s));
        }
        result.assign(seen.begin(), seen.end());
        std::sort(result.begin(), result.end());
    }
    return face_cache_.emplace(dim, std::move(result)).first->second;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> out;
    int dim = dimension();
    for (int d = 0; d <= dim; ++d) out.push_back(faces(d).size());
    return out;
}

std::size_t SimplicialComplex::total_face_count(std::size_t budget) const {
    if (budget) {
        // A maximal face with k vertices alone contributes 2^k - 1 nonempty
        // faces, so reject hopeless inputs before enumerating anything.
        for (const auto& f : maximal_) {
            if (f.size() >= 63 ||
                ((std::size_t{1} << f.size()) - 1) > budget) {
                throw SizeError("face budget exceeded: a generating face has " +
                                std::to_string(f.size()) + " vertices (at least " +
                                (f.size() >= 63 ? std::string("2^63")
                                                : std::to_string((std::size_t{1} << f.size()) - 1)) +
                                " faces), budget " + std::to_string(budget));
            }
        }
    }
    std::size_t total = 0;
    int dim = dimension();
    for (int d = 0; d <= dim; ++d) {
        total += faces(d).size();
        if (budget && total > budget) {
            throw SizeError("face budget exceeded: " + std::to_string(total) +
                            " faces so far (dimension " + std::to_string(d) + " of " +
                            std::to_string(dim) + "), budget " + std::to_string(budget));
        }
    }
    return total;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    int dim = dimension();
    for (int d = 0; d <= dim; ++d) {
        long long count = static_cast<long long>(faces(d).size());
        chi += (d % 2 == 0) ? count : -count;
    }
    return chi;
}

void SimplicialComplex::write(std::ostream& out) const {
    out << "# vertices " << vertex_count_ << "\n";
    out << "# dim " << dimension() << "\n";
    for (const auto& f : maximal_) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) out << ' ';
            out << f[i];
        }
        out << "\n";
    }
}

SimplicialComplex SimplicialComplex::read(std::istream& in) {
    std::optional<std::uint32_t> declared;
    std::vector<Simplex> faces;
    VertexId max_id = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first[0] == '#') {
            std::istringstream hs(line);
            std::string hash, key;
            std::uint32_t value;
            if (hs >> hash >> key >> value && hash == "#" && key == "vertices") {
                declared = value;
            }
            continue;
        }
        Simplex f;
        std::istringstream fs(line);
        std::uint64_t id;
        while (fs >> id) {
            f.push_back(static_cast<VertexId>(id));
            max_id = std::max(max_id, f.back());
        }
        if (fs.fail() && !fs.eof()) {
            throw DomainError("malformed face line " + std::to_string(lineno));
        }
        if (!f.empty()) faces.push_back(std::move(f));
    }
    std::uint32_t vc = declared.value_or(faces.empty() ? 0 : max_id + 1);
    return from_maximal(vc, std::move(faces));
}

SimplicialComplex cech_complex(const Graph& g, std::uint32_t r, CechStats* stats) {
    std::vector<Simplex> generators;
    if (r == 0) {
        generators.reserve(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v) generators.push_back({v});
    } else if (r % 2 == 0) {
        std::uint32_t k = r / 2;
        generators.reserve(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            generators.push_back(g.closed_neighborhood(v, k));
        }
    } else {
        std::uint32_t k = (r - 1) / 2;
        for (auto [v, w] : g.edges()) {
            Simplex ball_v = k == 0 ? Simplex{v} : g.closed_neighborhood(v, k);
            Simplex ball_w = k == 0 ? Simplex{w} : g.closed_neighborhood(w, k);
            generators.push_back(simplex_union(ball_v, ball_w));
        }
    }
    CechStats local;
    local.generators = generators.size();
    SimplicialComplex k =
        SimplicialComplex::from_maximal(g.vertex_count(), std::move(generators),
                                        &local.antichain);
    if (stats) *stats = local;
    return k;
}

namespace {

void require_vertex(const SimplicialComplex& k, VertexId v, const char* op) {
    if (!k.contains_vertex(v)) {
        throw DomainError(std::string(op) + ": vertex " + std::to_string(v) +
                          " is not in the complex");
    }
}

}  // namespace

SimplicialComplex star(const SimplicialComplex& k, VertexId v) {
    require_vertex(k, v, "star");
    std::vector<Simplex> faces;
    for (const auto& f : k.maximal_faces()) {
        if (std::binary_search(f.begin(), f.end(), v)) faces.push_back(f);
    }
    return SimplicialComplex::from_maximal(k.vertex_count(), std::move(faces));
}

SimplicialComplex link(const SimplicialComplex& k, VertexId v) {
    require_vertex(k, v, "link");
    std::vector<Simplex> faces;
    for (const auto& f : k.maximal_faces()) {
        if (!std::binary_search(f.begin(), f.end(), v)) continue;
        Simplex reduced = simplex_difference(f, {v});
        if (!reduced.empty()) faces.push_back(std::move(reduced));
    }
    return SimplicialComplex::from_maximal(k.vertex_count(), std::move(faces));
}

SimplicialComplex deletion(const SimplicialComplex& k, VertexId v) {
    require_vertex(k, v, "deletion");
    std::vector<Simplex> faces;
    for (const auto& f : k.maximal_faces()) {
        if (!std::binary_search(f.begin(), f.end(), v)) {
            faces.push_back(f);
        } else {
            Simplex reduced = simplex_difference(f, {v});
            if (!reduced.empty()) faces.push_back(std::move(reduced));
        }
    }
    return SimplicialComplex::from_maximal(k.vertex_count(), std::move(faces));
}

SimplicialComplex skeleton(const SimplicialComplex& k, int d) {
    if (d < 0) {
        throw DomainError("skeleton dimension must be nonnegative");
    }
    if (d >= k.dimension()) return k;
    std::vector<Simplex> faces = k.faces(d);
    for (const auto& f : k.maximal_faces()) {
        if (static_cast<int>(f.size()) - 1 < d) faces.push_back(f);
    }
    return SimplicialComplex::from_maximal(k.vertex_count(), std::move(faces));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::uint32_t offset = a.vertex_count();
    std::vector<Simplex> faces;
    faces.reserve(a.maximal_faces().size() * std::max<std::size_t>(1, b.maximal_faces().size()));
    if (a.is_void() || b.is_void()) {
        // Join with the void complex is the other complex.
        for (const auto& f : a.maximal_faces()) faces.push_back(f);
        for (const auto& g : b.maximal_faces()) {
            Simplex shifted = g;
            for (auto& v : shifted) v += offset;
            faces.push_back(std::move(shifted));
        }
    } else {
        for (const auto& f : a.maximal_faces()) {
            for (const auto& g : b.maximal_faces()) {
                Simplex joined = f;
                joined.reserve(f.size() + g.size());
                for (VertexId v : g) joined.push_back(v + offset);
                faces.push_back(std::move(joined));
            }
        }
    }
    return SimplicialComplex::from_maximal(offset + b.vertex_count(), std::move(faces));
}

SimplicialComplex union_of(std::uint32_t vertex_count,
                           const std::vector<SimplicialComplex>& parts) {
    std::vector<Simplex> faces;
    for (const auto& part : parts) {
        if (part.vertex_count() > vertex_count) {
            throw DomainError("union part exceeds the ambient vertex range");
        }
        faces.insert(faces.end(), part.maximal_faces().begin(), part.maximal_faces().end());
    }
    return SimplicialComplex::from_maximal(vertex_count, std::move(faces));
}

SimplicialComplex nerve_of_cover(const Cover& cover) {
    const std::size_t p = cover.parts.size();
    if (p == 0) {
        throw DomainError("nerve of an empty cover");
    }
    if (p > 26) {
        throw SizeError("nerve supports at most 26 parts, got " + std::to_string(p));
    }
    std::vector<std::vector<VertexId>> part_vertices;
    part_vertices.reserve(p);
    for (const auto& part : cover.parts) {
        if (part.is_void()) {
            throw DomainError("nerve cover contains a void part");
        }
        part_vertices.push_back(part.vertices());
    }
    // Parts are downward closed, so a set of parts shares a simplex exactly
    // when their vertex sets intersect. Grow index sets while the running
    // intersection stays nonempty; the dead ends are the nerve's faces.
    std::vector<Simplex> faces;
    Simplex current;
    auto rec = [&](auto&& self, std::size_t start, std::vector<VertexId> inter) -> void {
        bool extended = false;
        for (std::size_t j = start; j < p; ++j) {
            std::vector<VertexId> next;
            std::set_intersection(inter.begin(), inter.end(), part_vertices[j].begin(),
                                  part_vertices[j].end(), std::back_inserter(next));
            if (next.empty()) continue;
            extended = true;
            current.push_back(static_cast<VertexId>(j));
            self(self, j + 1, std::move(next));
            current.pop_back();
        }
        if (!extended && !current.empty()) faces.push_back(current);
    };
    for (std::size_t j = 0; j < p; ++j) {
        current.push_back(static_cast<VertexId>(j));
        rec(rec, j + 1, part_vertices[j]);
        current.pop_back();
    }
    return SimplicialComplex::from_maximal(static_cast<std::uint32_t>(p), std::move(faces));
}

std::pair<SimplicialComplex, Cover> boundary_subcomplex(int n) {
    if (n < 2 || n > 5) {
        throw SizeError("boundary subcomplex supports 2 <= n <= 5, got " + std::to_string(n));
    }
    Graph g = Graph::hypercube(n);
    Cover cover;
    cover.vertex_count = g.vertex_count();
    for (int i = 1; i <= n; ++i) {
        for (int eps = 0; eps <= 1; ++eps) {
            std::vector<VertexId> half;
            half.reserve(g.vertex_count() / 2);
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (((v >> (i - 1)) & 1u) == static_cast<VertexId>(eps)) half.push_back(v);
            }
            Graph sub = induced_subgraph(g, half);
            SimplicialComplex local = cech_complex(sub, 3);
            const auto& labels = *sub.original_labels();
            std::vector<Simplex> faces;
            faces.reserve(local.maximal_faces().size());
            for (const auto& f : local.maximal_faces()) {
                Simplex mapped;
                mapped.reserve(f.size());
                for (VertexId v : f) mapped.push_back(labels[v]);
                faces.push_back(canonical(std::move(mapped)));
            }
            cover.parts.push_back(
                SimplicialComplex::from_maximal(g.vertex_count(), std::move(faces)));
        }
    }
    SimplicialComplex total = union_of(g.vertex_count(), cover.parts);
    return {std::move(total), std::move(cover)};
}

}  // namespace cechcube
