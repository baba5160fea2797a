#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cechcube/complex.hpp"
#include "cechcube/homology.hpp"
#include "cechcube/simplex.hpp"

namespace cechcube {

// One elementary collapse: remove every face delta with free_face ⊆ delta ⊆
// maximal_face, where maximal_face is the unique maximal face containing
// free_face at the time of the step (free_face == maximal_face is allowed and
// simply deletes a maximal face).
struct CollapseStep {
    Simplex free_face;
    Simplex maximal_face;

    bool operator==(const CollapseStep&) const = default;
};

// A replayable sequence of elementary collapses with |free_face| <= d at
// every step, intended to end at the void complex.
struct CollapseSequence {
    int d = 0;
    std::vector<CollapseStep> steps;
};

// A linear order gamma_1 < ... < gamma_q on the maximal faces of a complex.
using MaximalOrder = std::vector<Simplex>;

// Applies one elementary collapse at sigma. sigma must have exactly one
// maximal coface; otherwise a FreeFaceError carries the full coface list.
// |sigma| must be <= d.
SimplicialComplex elementary_collapse(const SimplicialComplex& k, const Simplex& sigma,
                                      int d);

struct ReplayReport {
    bool success = false;         // every step valid and the final complex is void
    int first_invalid_step = -1;  // 0-based index of the first invalid step, or -1
    std::string reason;           // empty on success
};

// Replays the sequence from k, validating each step's preconditions.
ReplayReport verify_sequence(const SimplicialComplex& k, const CollapseSequence& seq);

enum class CollapseVerdict {
    Collapsible,  // witness sequence found
    Impossible,   // exhaustive search proved no sequence exists
    Undecided,    // state budget exhausted before a proof either way
};

struct CollapseSearchResult {
    CollapseVerdict verdict = CollapseVerdict::Undecided;
    std::optional<CollapseSequence> sequence;  // present iff Collapsible
    std::size_t states_explored = 0;
};

// Exhaustive backtracking search for a d-collapse of k down to the void
// complex, memoized on the maximal-face antichain. Requires total face count
// <= 10^4 (SizeError otherwise). Exceeding state_budget yields Undecided,
// never a false Impossible.
CollapseSearchResult is_d_collapsible(const SimplicialComplex& k, int d,
                                      std::size_t state_budget = 200000);

struct ExclusionSequence {
    std::vector<VertexId> sequence;  // empty when gamma ⊆ gamma_1
    Simplex distinct;                // the distinct vertices of the sequence, sorted
};

// Minimal exclusion sequence of the face gamma with respect to an order on
// the maximal faces: with j the least index such that gamma ⊆ gamma_j, the
// sequence is empty if j = 1 and otherwise (a_1, ..., a_{j-1}) where
//   a_1 = min(gamma \ gamma_1),
//   a_k = min({a_1,...,a_{k-1}} ∩ (gamma \ gamma_k)) when that set is
//         nonempty, else min(gamma \ gamma_k).
// Vertices may repeat in the sequence; `distinct` deduplicates them. The min
// is taken in the ambient integer vertex order.
ExclusionSequence minimal_exclusion_sequence(const SimplicialComplex& k,
                                             const MaximalOrder& order,
                                             const Simplex& gamma);

// max over all faces gamma of k of |distinct(mes(gamma))|; an upper bound for
// the collapsibility number of k. Throws SizeError when the face count
// exceeds face_budget.
int d_prec(const SimplicialComplex& k, const MaximalOrder& order,
           std::size_t face_budget = kDefaultFaceBudget, int jobs = 1);

struct CollapsibilityBounds {
    int lower = 0;  // homology obstruction: not (lower-1)-collapsible
    int upper = 0;  // best d_prec over the sampled orders (at least 1)
    std::uint64_t seed = 0;
    std::vector<int> sampled_d_prec;  // one value per sampled order
};

// Sandwiches the collapsibility number: lower = 1 + the top dimension with
// nonzero reduced homology (0 for an acyclic complex), upper = the minimum
// d_prec over `orders` seeded random orders of the maximal faces, clamped to
// at least 1 for nonvoid complexes. Over Z/2 coefficients the lower bound
// weakens to the top dimension with nonzero mod-2 Betti number, which is
// still valid.
CollapsibilityBounds collapsibility_bounds(const SimplicialComplex& k, int orders = 50,
                                           std::uint64_t seed = 0,
                                           Coefficients coefficients = Coefficients::Integers,
                                           std::size_t face_budget = kDefaultFaceBudget,
                                           int jobs = 1);

}  // namespace cechcube
