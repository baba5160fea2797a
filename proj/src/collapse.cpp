#include "cechcube/collapse.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <random>
#include <string>
#include <unordered_set>

#include "cechcube/detail/parallel.hpp"
#include "cechcube/errors.hpp"

namespace cechcube {

namespace {

std::vector<Simplex> maximal_cofaces(const SimplicialComplex& k, const Simplex& sigma) {
    std::vector<Simplex> out;
    for (const auto& face : k.maximal_faces()) {
        if (is_subset(sigma, face)) out.push_back(face);
    }
    return out;
}

// The collapse of [sigma, gamma]: faces of gamma surviving the removal are
// exactly the subsets avoiding some vertex of sigma, so gamma is replaced by
// the facets gamma \ {x}, x in sigma.
SimplicialComplex apply_collapse(const SimplicialComplex& k, const Simplex& sigma,
                                 const Simplex& gamma) {
    std::vector<Simplex> next;
    next.reserve(k.maximal_faces().size() + sigma.size());
    for (const auto& face : k.maximal_faces()) {
        if (face != gamma) next.push_back(face);
    }
    for (VertexId x : sigma) {
        Simplex facet = simplex_difference(gamma, Simplex{x});
        if (!facet.empty()) next.push_back(std::move(facet));
    }
    return SimplicialComplex::from_maximal(k.vertex_count(), std::move(next));
}

std::string fingerprint(const SimplicialComplex& k) {
    std::string key;
    for (const auto& face : k.maximal_faces()) {
        for (VertexId v : face) {
            key.append(reinterpret_cast<const char*>(&v), sizeof(v));
        }
        key.push_back('\xff');
    }
    return key;
}

struct Move {
    Simplex free_face;
    Simplex maximal_face;
};

// All valid collapse moves, smallest free faces first, then lexicographic.
std::vector<Move> enumerate_moves(const SimplicialComplex& k, int d) {
    std::vector<Move> moves;
    const auto& maximal = k.maximal_faces();
    std::vector<std::size_t> idx;
    for (const auto& gamma : maximal) {
        std::size_t limit = std::min<std::size_t>(static_cast<std::size_t>(d), gamma.size());
        for (std::size_t s = 1; s <= limit; ++s) {
            idx.assign(s, 0);
            for (std::size_t i = 0; i < s; ++i) idx[i] = i;
            while (true) {
                Simplex sigma(s);
                for (std::size_t i = 0; i < s; ++i) sigma[i] = gamma[idx[i]];
                bool unique = true;
                for (const auto& other : maximal) {
                    if (other != gamma && is_subset(sigma, other)) {
                        unique = false;
                        break;
                    }
                }
                if (unique) moves.push_back({std::move(sigma), gamma});
                std::size_t i = s;
                while (i > 0 && idx[i - 1] == gamma.size() - s + i - 1) --i;
                if (i == 0) break;
                ++idx[i - 1];
                for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    }
    std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
        if (a.free_face.size() != b.free_face.size()) {
            return a.free_face.size() < b.free_face.size();
        }
        return a.free_face < b.free_face;
    });
    return moves;
}

enum class SearchOutcome { Yes, No, Undecided };

struct Searcher {
    int d = 0;
    std::size_t budget = 0;
    std::size_t states = 0;
    bool budget_hit = false;
    std::unordered_set<std::string> impossible;
    std::vector<CollapseStep> path;

    SearchOutcome dfs(const SimplicialComplex& k) {
        if (k.is_void()) return SearchOutcome::Yes;
        std::string key = fingerprint(k);
        if (impossible.count(key)) return SearchOutcome::No;
        if (states >= budget) {
            budget_hit = true;
            return SearchOutcome::Undecided;
        }
        ++states;

        bool any_undecided = false;
        for (const auto& move : enumerate_moves(k, d)) {
            SimplicialComplex child = apply_collapse(k, move.free_face, move.maximal_face);
            path.push_back({move.free_face, move.maximal_face});
            SearchOutcome r = dfs(child);
            if (r == SearchOutcome::Yes) return SearchOutcome::Yes;
            path.pop_back();
            if (r == SearchOutcome::Undecided) {
                any_undecided = true;
                if (budget_hit) break;  // every further probe is cut off too
            }
        }
        if (any_undecided) return SearchOutcome::Undecided;
        impossible.insert(std::move(key));  // proven dead: all moves exhausted
        return SearchOutcome::No;
    }
};

// Minimal exclusion sequence on vertex bitmasks (complexes with ids < 64).
int mes_size_masked(std::uint64_t face, const std::vector<std::uint64_t>& order_masks) {
    std::size_t j = 0;
    while ((face & ~order_masks[j]) != 0) ++j;  // gamma is a face, so j exists
    std::uint64_t acc = 0;
    for (std::size_t t = 0; t < j; ++t) {
        std::uint64_t diff = face & ~order_masks[t];
        std::uint64_t inter = acc & diff;
        std::uint64_t pick = inter ? inter : diff;
        acc |= pick & (~pick + 1);  // lowest set bit = minimal vertex
    }
    return std::popcount(acc);
}

void require_order_matches(const SimplicialComplex& k, const MaximalOrder& order) {
    std::vector<Simplex> sorted = order;
    for (auto& f : sorted) f = canonical(std::move(f));
    std::sort(sorted.begin(), sorted.end());
    if (sorted != k.maximal_faces()) {
        throw DomainError("order is not a permutation of the maximal faces");
    }
}

// The exclusion recurrence on an already validated order and canonical face.
ExclusionSequence mes_core(const MaximalOrder& order, const Simplex& face) {
    std::size_t j = 0;
    while (j < order.size() && !is_subset(face, order[j])) ++j;
    // j < order.size() since face lies in some maximal face.

    ExclusionSequence out;
    for (std::size_t t = 0; t < j; ++t) {
        Simplex diff = simplex_difference(face, order[t]);
        VertexId a = 0;
        bool found = false;
        // min of {a_1,...,a_t} ∩ diff; both sides sorted.
        for (VertexId v : diff) {
            if (std::binary_search(out.distinct.begin(), out.distinct.end(), v)) {
                a = v;
                found = true;
                break;
            }
        }
        if (!found) a = diff.front();
        out.sequence.push_back(a);
        auto pos = std::lower_bound(out.distinct.begin(), out.distinct.end(), a);
        if (pos == out.distinct.end() || *pos != a) out.distinct.insert(pos, a);
    }
    return out;
}

}  // namespace

SimplicialComplex elementary_collapse(const SimplicialComplex& k, const Simplex& sigma,
                                      int d) {
    Simplex s = canonical(sigma);
    if (s.empty()) {
        throw DomainError("the free face must be nonempty");
    }
    if (d < 1 || s.size() > static_cast<std::size_t>(d)) {
        throw DomainError("free face " + format_simplex(s) + " has more than " +
                          std::to_string(d) + " vertices");
    }
    std::vector<Simplex> cofaces = maximal_cofaces(k, s);
    if (cofaces.size() != 1) {
        throw FreeFaceError("face " + format_simplex(s) + " has " +
                                std::to_string(cofaces.size()) +
                                " maximal cofaces, need exactly one",
                            cofaces);
    }
    return apply_collapse(k, s, cofaces.front());
}

ReplayReport verify_sequence(const SimplicialComplex& k, const CollapseSequence& seq) {
    ReplayReport report;
    SimplicialComplex current = k;
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        Simplex sigma = canonical(seq.steps[i].free_face);
        Simplex gamma = canonical(seq.steps[i].maximal_face);
        auto fail = [&](const std::string& why) {
            report.first_invalid_step = static_cast<int>(i);
            report.reason = "step " + std::to_string(i) + ": " + why;
            return report;
        };
        if (sigma.empty()) return fail("empty free face");
        if (seq.d < 1 || sigma.size() > static_cast<std::size_t>(seq.d)) {
            return fail("free face " + format_simplex(sigma) + " exceeds d = " +
                        std::to_string(seq.d));
        }
        std::vector<Simplex> cofaces = maximal_cofaces(current, sigma);
        if (cofaces.size() != 1) {
            return fail("free face " + format_simplex(sigma) + " has " +
                        std::to_string(cofaces.size()) + " maximal cofaces");
        }
        if (cofaces.front() != gamma) {
            return fail("unique maximal coface is " + format_simplex(cofaces.front()) +
                        ", not " + format_simplex(gamma));
        }
        current = apply_collapse(current, sigma, gamma);
    }
    if (!current.is_void()) {
        report.reason = "final complex is not void";
        return report;
    }
    report.success = true;
    return report;
}

CollapseSearchResult is_d_collapsible(const SimplicialComplex& k, int d,
                                      std::size_t state_budget) {
    if (d < 0) {
        throw DomainError("collapse parameter d must be nonnegative");
    }
    k.total_face_count(10000);

    Searcher searcher;
    searcher.d = d;
    searcher.budget = state_budget;
    SearchOutcome outcome = searcher.dfs(k);

    CollapseSearchResult result;
    result.states_explored = searcher.states;
    switch (outcome) {
        case SearchOutcome::Yes:
            result.verdict = CollapseVerdict::Collapsible;
            result.sequence = CollapseSequence{d, std::move(searcher.path)};
            break;
        case SearchOutcome::No:
            result.verdict = CollapseVerdict::Impossible;
            break;
        case SearchOutcome::Undecided:
            result.verdict = CollapseVerdict::Undecided;
            break;
    }
    return result;
}

ExclusionSequence minimal_exclusion_sequence(const SimplicialComplex& k,
                                             const MaximalOrder& order,
                                             const Simplex& gamma) {
    require_order_matches(k, order);
    Simplex face = canonical(gamma);
    if (!k.contains(face)) {
        throw DomainError("face " + format_simplex(face) + " is not in the complex");
    }
    return mes_core(order, face);
}

int d_prec(const SimplicialComplex& k, const MaximalOrder& order,
           std::size_t face_budget, int jobs) {
    require_order_matches(k, order);
    if (k.is_void()) return 0;
    k.total_face_count(face_budget);

    int best = 0;
    if (k.vertex_count() <= 64) {
        std::vector<std::uint64_t> order_masks(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            std::uint64_t m = 0;
            for (VertexId v : order[i]) m |= std::uint64_t{1} << v;
            order_masks[i] = m;
        }
        for (int d = 0; d <= k.dimension(); ++d) {
            const auto& faces = k.faces(d);
            std::vector<int> vals(faces.size(), 0);
            detail::parallel_for(faces.size(), jobs, [&](std::size_t i) {
                std::uint64_t m = 0;
                for (VertexId v : faces[i]) m |= std::uint64_t{1} << v;
                vals[i] = mes_size_masked(m, order_masks);
            });
            for (int v : vals) best = std::max(best, v);
        }
        return best;
    }

    for (int d = 0; d <= k.dimension(); ++d) {
        const auto& faces = k.faces(d);
        std::vector<int> vals(faces.size(), 0);
        detail::parallel_for(faces.size(), jobs, [&](std::size_t i) {
            vals[i] = static_cast<int>(mes_core(order, faces[i]).distinct.size());
        });
        for (int v : vals) best = std::max(best, v);
    }
    return best;
}

CollapsibilityBounds collapsibility_bounds(const SimplicialComplex& k, int orders,
                                           std::uint64_t seed, Coefficients coefficients,
                                           std::size_t face_budget, int jobs) {
    if (orders < 1) {
        throw DomainError("collapsibility_bounds needs at least one sampled order");
    }
    CollapsibilityBounds out;
    out.seed = seed;
    if (k.is_void()) return out;

    HomologySummary h = reduced_homology(k, coefficients, face_budget);
    if (coefficients == Coefficients::Integers) {
        out.lower = h.top_nonzero_dim() + 1;
    } else {
        int top = -1;
        for (const auto& dh : h.dims) {
            if (dh.betti_z2 != 0) top = std::max(top, dh.dim);
        }
        // A mod-2 class in dimension top >= 2 may come from integral torsion
        // one dimension down, so only top itself is a safe obstruction there.
        if (top < 0) {
            out.lower = 0;
        } else if (top <= 1) {
            out.lower = top + 1;
        } else {
            out.lower = top;
        }
    }

    MaximalOrder order = k.maximal_faces();
    std::mt19937_64 rng(seed);
    int best = -1;
    for (int t = 0; t < orders; ++t) {
        // Fisher-Yates with plain modulo draws keeps the sampled orders
        // reproducible across standard library implementations.
        for (std::size_t i = order.size(); i > 1; --i) {
            std::size_t pick = static_cast<std::size_t>(rng() % i);
            std::swap(order[i - 1], order[pick]);
        }
        int value = d_prec(k, order, face_budget, jobs);
        out.sampled_d_prec.push_back(value);
        best = best < 0 ? value : std::min(best, value);
    }
    out.upper = std::max(1, best);
    return out;
}

}  // namespace cechcube
