// Acceptance suite: one PASS/FAIL line per criterion on standard output,
// progress and timings on standard error, nonzero exit if any criterion fails.
// Criterion 2 lives in the long-running binary (acceptance_long) and is
// reported here as SKIP.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cechcube/collapse.hpp"
#include "cechcube/complex.hpp"
#include "cechcube/errors.hpp"
#include "cechcube/formulas.hpp"
#include "cechcube/graph.hpp"
#include "cechcube/homology.hpp"
#include "cechcube/persistence.hpp"
#include "cechcube/simplex.hpp"
#include "support/oracle.hpp"
#include "support/random_complex.hpp"

using namespace cechcube;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Everything a criterion computes homology for is recorded here so the
// final invariant sweep can revisit it.
struct Touched {
    std::string label;
    SimplicialComplex k;
    std::optional<HomologySummary> h;
};

std::vector<Touched> g_touched;

void touch(std::string label, const SimplicialComplex& k, std::optional<HomologySummary> h) {
    g_touched.push_back(Touched{std::move(label), k, std::move(h)});
}

// Integer-scale towers built along the way, kept for the barcode cross-checks
// and the monotonicity sweep.
struct Tower {
    std::string label;
    Filtration filtration;
    Barcode barcode;
};

std::vector<Tower> g_towers;

double face_estimate(const SimplicialComplex& k) {
    double total = 0;
    for (const auto& f : k.maximal_faces()) {
        total += std::ldexp(1.0, static_cast<int>(f.size()));
    }
    return total;
}

std::map<int, long long> nonzero_betti(const HomologySummary& h) {
    std::map<int, long long> out;
    for (const auto& d : h.dims) {
        long long b = h.coefficients == Coefficients::Integers ? *d.betti_z : d.betti_z2;
        if (b != 0) out[d.dim] = b;
    }
    return out;
}

bool torsion_free(const HomologySummary& h) {
    if (h.coefficients != Coefficients::Integers) return true;
    for (const auto& d : h.dims) {
        if (!d.torsion.empty()) return false;
    }
    return true;
}

std::string betti_map_str(const std::map<int, long long>& m) {
    if (m.empty()) return "all zero";
    std::string out;
    for (const auto& [d, b] : m) {
        if (!out.empty()) out += " ";
        out += "b" + std::to_string(d) + "=" + std::to_string(b);
    }
    return out;
}

// Homology of the scale-r complex of the n-cube, memoized across criteria.
// Coefficients follow the table-verification rule: integer homology when the
// per-generator face estimate stays small, mod-2 otherwise.
std::map<std::pair<int, int>, HomologySummary> g_cells;

const HomologySummary& cell_homology(int n, int r) {
    auto key = std::make_pair(n, r);
    auto it = g_cells.find(key);
    if (it != g_cells.end()) return it->second;
    Graph g = Graph::hypercube(n);
    SimplicialComplex k = cech_complex(g, static_cast<std::uint32_t>(r));
    Coefficients coeff =
        face_estimate(k) <= 10'000.0 ? Coefficients::Integers : Coefficients::Mod2;
    std::cerr << "[acceptance] homology of cech(hypercube(" << n << "), " << r << ") over "
              << (coeff == Coefficients::Integers ? "Z" : "Z/2") << "\n";
    HomologySummary h = reduced_homology(k, coeff);
    touch("cech(hypercube(" + std::to_string(n) + "), " + std::to_string(r) + ")", k, h);
    return g_cells.emplace(key, std::move(h)).first->second;
}

// Accumulates failure details, keeping the line readable.
struct Failures {
    int count = 0;
    std::string detail;

    void add(const std::string& what) {
        ++count;
        if (count <= 4) {
            if (!detail.empty()) detail += "; ";
            detail += what;
        } else if (count == 5) {
            detail += "; ...";
        }
    }

    std::string render() const {
        if (count == 0) return "";
        return detail + (count > 4 ? " [" + std::to_string(count) + " failures]" : "");
    }
};

bool run_criterion(int id, const std::string& what, const std::function<std::string()>& body) {
    auto t0 = Clock::now();
    std::string detail;
    try {
        detail = body();
    } catch (const std::exception& e) {
        detail = std::string("unexpected exception: ") + e.what();
    }
    if (detail.empty()) {
        std::cout << "PASS criterion " << id << ": " << what << "\n";
    } else {
        std::cout << "FAIL criterion " << id << ": " << what << " (" << detail << ")\n";
    }
    std::cout.flush();
    std::cerr << "[acceptance] criterion " << id << " took " << seconds_since(t0) << "s\n";
    return detail.empty();
}

// 1. Every populated table cell with n <= 4 matches the computed reduced
// homology exactly (contractible cells must come out all-zero).
std::string criterion_table() {
    Failures f;
    int cells = 0;
    for (const auto& entry : table_registry()) {
        if (entry.n > 4) continue;
        ++cells;
        const HomologySummary& h = cell_homology(entry.n, entry.r);
        std::map<int, long long> got = nonzero_betti(h);
        std::map<int, long long> want = entry.expected_betti();
        if (got != want) {
            f.add("(" + std::to_string(entry.n) + "," + std::to_string(entry.r) +
                  "): got " + betti_map_str(got) + ", want " + betti_map_str(want));
        } else if (!torsion_free(h)) {
            f.add("(" + std::to_string(entry.n) + "," + std::to_string(entry.r) +
                  "): unexpected torsion");
        }
    }
    if (cells != 36) f.add("expected 36 cells with n <= 4, saw " + std::to_string(cells));
    return f.render();
}

// 3. Closed form for the second Betti number of the scale-2 complexes,
// n = 2..5.
std::string criterion_betti2_closed_form() {
    Failures f;
    for (int n = 2; n <= 5; ++n) {
        long long want = betti2_hypercube(n);
        const HomologySummary& h = cell_homology(n, 2);
        long long got = h.coefficients == Coefficients::Integers ? h.betti(2) : h.betti2(2);
        if (got != want) {
            f.add("n=" + std::to_string(n) + ": got " + std::to_string(got) + ", want " +
                  std::to_string(want));
        }
    }
    return f.render();
}

// 4. Growing the prefix graph from m-1 to m vertices raises the second Betti
// number of the scale-2 complex by alpha(m-1) and leaves every other reduced
// group zero, for all 2 <= m <= 64.
std::string criterion_prefix_increments() {
    Failures f;
    std::vector<long long> b2(65, 0);
    for (std::uint64_t m = 1; m <= 64; ++m) {
        Graph g = Graph::prefix_graph(m);
        SimplicialComplex k = cech_complex(g, 2);
        HomologySummary h = reduced_homology(k);
        touch("cech(prefix(" + std::to_string(m) + "), 2)", k, h);
        std::map<int, long long> nz = nonzero_betti(h);
        b2[m] = nz.count(2) ? nz[2] : 0;
        nz.erase(2);
        if (!nz.empty() || !torsion_free(h)) {
            f.add("m=" + std::to_string(m) + ": homology outside dimension 2 (" +
                  betti_map_str(nz) + ")");
        }
    }
    for (std::uint64_t m = 2; m <= 64; ++m) {
        long long inc = b2[m] - b2[m - 1];
        if (inc != alpha(m - 1)) {
            f.add("m=" + std::to_string(m) + ": increment " + std::to_string(inc) +
                  ", want alpha(" + std::to_string(m - 1) + ") = " +
                  std::to_string(alpha(m - 1)));
        }
    }
    return f.render();
}

// 5. For m-1 in {7, 11, 13, 14} (three set bits), the link of the last vertex
// in the scale-2 prefix complex is covered by the full simplex on its open
// neighborhood together with one full simplex per cleared-bit neighbor's
// closed ball in the previous prefix graph. The union must equal the link,
// the link must have first Betti number 3, and the nerve of the cover must
// have the same homology.
std::string criterion_link_cover() {
    Failures f;
    for (std::uint32_t m1 : {7u, 11u, 13u, 14u}) {
        std::uint64_t m = m1 + 1;
        Graph gm = Graph::prefix_graph(m);
        Graph gprev = Graph::prefix_graph(m - 1);
        SimplicialComplex k = cech_complex(gm, 2);
        SimplicialComplex lk = link(k, m1);

        std::vector<VertexId> open_nbhd = gm.neighbors(m1);
        std::vector<VertexId> lambdas;
        for (unsigned b = 0; b < 32; ++b) {
            if (m1 & (1u << b)) lambdas.push_back(m1 ^ (1u << b));
        }
        std::sort(lambdas.begin(), lambdas.end());
        if (open_nbhd != lambdas) {
            f.add("m=" + std::to_string(m) + ": open neighborhood of " + std::to_string(m1) +
                  " is not the cleared-bit set");
            continue;
        }

        Cover cover;
        cover.vertex_count = static_cast<std::uint32_t>(m);
        cover.parts.push_back(SimplicialComplex::from_maximal(
            static_cast<std::uint32_t>(m), {Simplex(open_nbhd.begin(), open_nbhd.end())}));
        for (VertexId lambda : lambdas) {
            std::vector<VertexId> ball = gprev.closed_neighborhood(lambda, 1);
            cover.parts.push_back(SimplicialComplex::from_maximal(
                static_cast<std::uint32_t>(m), {Simplex(ball.begin(), ball.end())}));
        }

        if (union_of(static_cast<std::uint32_t>(m), cover.parts) != lk) {
            f.add("m=" + std::to_string(m) + ": cover union differs from the link");
            continue;
        }

        HomologySummary h_link = reduced_homology(lk);
        touch("link(" + std::to_string(m1) + ") in cech(prefix(" + std::to_string(m) + "), 2)",
              lk, h_link);
        SimplicialComplex nerve = nerve_of_cover(cover);
        HomologySummary h_nerve = reduced_homology(nerve);
        touch("nerve of the link cover, m=" + std::to_string(m), nerve, h_nerve);

        std::map<int, long long> want{{1, 3}};
        if (nonzero_betti(h_link) != want || !torsion_free(h_link)) {
            f.add("m=" + std::to_string(m) + ": link homology " +
                  betti_map_str(nonzero_betti(h_link)) + ", want b1=3");
        }
        if (nonzero_betti(h_nerve) != nonzero_betti(h_link) || !torsion_free(h_nerve)) {
            f.add("m=" + std::to_string(m) + ": nerve homology " +
                  betti_map_str(nonzero_betti(h_nerve)) + " differs from link");
        }
    }
    return f.render();
}

// 6. Cycle complexes below half the girth are circles: exactly b1 = 1 for
// m = 5..9 and 1 <= r < m/2.
std::string criterion_cycles() {
    Failures f;
    std::map<int, long long> want{{1, 1}};
    for (std::uint32_t m = 5; m <= 9; ++m) {
        for (std::uint32_t r = 1; 2 * r < m; ++r) {
            SimplicialComplex k = cech_complex(Graph::cycle(m), r);
            HomologySummary h = reduced_homology(k);
            touch("cech(cycle(" + std::to_string(m) + "), " + std::to_string(r) + ")", k, h);
            if (nonzero_betti(h) != want || !torsion_free(h)) {
                f.add("(m=" + std::to_string(m) + ", r=" + std::to_string(r) + "): " +
                      betti_map_str(nonzero_betti(h)));
            }
        }
    }
    return f.render();
}

// 7. Coordinate-projection chains are contiguity chains into the complex two
// scales up for every n <= 4, r <= 2n-2; no finite bar in the integer-scale
// towers (max scale 2n-1) is longer than 2; and the (n, r, delta) = (2, 1, 1)
// chain fails with witness {1, 3}.
std::string criterion_contiguity_and_bars() {
    Failures f;
    for (int n = 1; n <= 4; ++n) {
        for (std::uint32_t r = 0; r + 2 <= 2 * static_cast<std::uint32_t>(n); ++r) {
            ChainVerdict v = contiguity_chain(n, r, 2);
            if (!v.success) {
                f.add("chain (n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                      ") failed at step " + std::to_string(v.failing_step));
            }
        }
    }
    for (int n = 1; n <= 4; ++n) {
        std::uint32_t max_scale = 2 * static_cast<std::uint32_t>(n) - 1;
        Graph g = Graph::hypercube(n);
        Filtration filt = build_filtration(g, max_scale);
        Barcode bc = compute_barcode(filt);
        for (const auto& bar : bc.intervals) {
            if (bar.death && *bar.death - bar.birth > 2) {
                f.add("n=" + std::to_string(n) + ": bar of length " +
                      std::to_string(*bar.death - bar.birth) + " in dimension " +
                      std::to_string(bar.dim));
            }
        }
        g_towers.push_back(Tower{"hypercube(" + std::to_string(n) + ") tower",
                                 std::move(filt), std::move(bc)});
    }
    ChainVerdict bad = contiguity_chain(2, 1, 1);
    if (bad.success || !bad.witness || *bad.witness != Simplex{1, 3}) {
        f.add("(2,1,1) chain: expected failure with witness {1,3}, got " +
              std::string(bad.success ? "success" : "failure") +
              (bad.witness ? " with witness " + format_simplex(*bad.witness) : ""));
    }
    return f.render();
}

// 8. Collapsibility. The filled-triangle-with-path example admits a
// replayable 2-collapse but provably no 1-collapse. For the scale-3 complex
// of the 4-cube the criterion requires bounds exactly (5, 5) driven by its
// nonzero fourth homology (rank 24), with every one of the 50 sampled orders
// giving d_prec <= 5 and at least one giving exactly 5; the sampling clause
// is known not to hold (random orders give 6 almost surely even though a
// tuned order attains 5), so this criterion reports the discrepancy. The
// scale-2 complexes have bounds (3, 3) for n = 2..5.
std::string criterion_collapsibility() {
    Failures f;

    SimplicialComplex example = SimplicialComplex::from_maximal(4, {{0, 1, 3}, {1, 2}, {2, 3}});
    CollapseSearchResult two = is_d_collapsible(example, 2);
    if (two.verdict != CollapseVerdict::Collapsible || !two.sequence) {
        f.add("example: no 2-collapse found");
    } else {
        ReplayReport replay = verify_sequence(example, *two.sequence);
        if (!replay.success) f.add("example: witness replay failed (" + replay.reason + ")");
    }
    CollapseSearchResult one = is_d_collapsible(example, 1);
    if (one.verdict != CollapseVerdict::Impossible) f.add("example: d=1 not proved impossible");

    Graph g4 = Graph::hypercube(4);
    SimplicialComplex x4 = cech_complex(g4, 3);
    const HomologySummary& h4 = cell_homology(4, 3);
    if (h4.coefficients != Coefficients::Integers || h4.betti(4) != 24 ||
        h4.top_nonzero_dim() != 4) {
        f.add("cech(hypercube(4), 3): expected top homology Z^24 in dimension 4");
    }
    CollapsibilityBounds b4 = collapsibility_bounds(x4, 50, 0);
    if (b4.lower != 5 || b4.upper != 5) {
        f.add("cech(hypercube(4), 3): bounds (" + std::to_string(b4.lower) + "," +
              std::to_string(b4.upper) + "), want (5,5)");
    }
    bool any_five = false;
    int over_five = 0;
    for (int d : b4.sampled_d_prec) {
        if (d > 5) ++over_five;
        if (d == 5) any_five = true;
    }
    if (over_five > 0) {
        f.add(std::to_string(over_five) + " of " + std::to_string(b4.sampled_d_prec.size()) +
              " sampled orders gave d_prec > 5");
    }
    if (b4.sampled_d_prec.size() != 50) f.add("expected 50 sampled orders");
    if (!any_five) f.add("no sampled order reached d_prec = 5");
    if (over_five > 0 || !any_five) {
        f.add("note: uniform random orders give d_prec = 6 on this complex almost surely; "
              "a tuned order attaining 5 exists (unit test 'tight order for the scale-3 "
              "cube complex'), so the collapsibility number is exactly 5 but seeded random "
              "sampling cannot certify it; see README, Known deviations");
    }

    for (int n = 2; n <= 5; ++n) {
        SimplicialComplex k = cech_complex(Graph::hypercube(n), 2);
        CollapsibilityBounds b = collapsibility_bounds(k, 50, 0);
        if (b.lower != 3 || b.upper != 3) {
            f.add("cech(hypercube(" + std::to_string(n) + "), 2): bounds (" +
                  std::to_string(b.lower) + "," + std::to_string(b.upper) + "), want (3,3)");
        }
    }
    return f.render();
}

// 9. On the scale-3 complexes of the 3- and 4-cube: any vertex with at least
// three graph neighbors inside a maximal face has its whole neighborhood
// inside that face. Exhaustive over (maximal face, vertex) pairs.
std::string criterion_neighbor_absorption() {
    Failures f;
    std::size_t pairs = 0;
    for (int n = 3; n <= 4; ++n) {
        Graph g = Graph::hypercube(n);
        SimplicialComplex k = cech_complex(g, 3);
        for (const auto& sigma : k.maximal_faces()) {
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                ++pairs;
                std::vector<VertexId> nbrs = g.neighbors(v);
                Simplex nb(nbrs.begin(), nbrs.end());
                Simplex inside;
                std::set_intersection(nb.begin(), nb.end(), sigma.begin(), sigma.end(),
                                      std::back_inserter(inside));
                if (inside.size() >= 3 && !is_subset(nb, sigma)) {
                    f.add("n=" + std::to_string(n) + ", face " + format_simplex(sigma) +
                          ", vertex " + std::to_string(v));
                }
            }
        }
    }
    std::cerr << "[acceptance] neighbor absorption checked " << pairs << " pairs\n";
    return f.render();
}

// 10. The scale-3 complexes of the 3- and 4-cube and the boundary subcomplex
// of the latter all have trivial first and second reduced homology; the
// 4-cube scale-3 complex has nonzero homology exactly in dimensions 3 and 4.
std::string criterion_low_dim_vanishing() {
    Failures f;
    auto check_low = [&f](const std::string& label, const HomologySummary& h) {
        for (int d : {1, 2}) {
            long long b = h.betti(d);
            bool tors = !h.torsion(d).empty();
            if (b != 0 || tors) {
                f.add(label + ": H" + std::to_string(d) + " nonzero");
            }
        }
    };
    check_low("cech(hypercube(3), 3)", cell_homology(3, 3));
    check_low("cech(hypercube(4), 3)", cell_homology(4, 3));

    SimplicialComplex boundary = boundary_subcomplex(4).first;
    HomologySummary hb = reduced_homology(boundary);
    touch("boundary subcomplex of cech(hypercube(4), 3)", boundary, hb);
    check_low("boundary subcomplex", hb);

    const HomologySummary& h4 = cell_homology(4, 3);
    std::set<int> nonzero;
    for (const auto& d : h4.dims) {
        if ((d.betti_z && *d.betti_z != 0) || !d.torsion.empty()) nonzero.insert(d.dim);
    }
    if (nonzero != std::set<int>{3, 4}) {
        std::string dims;
        for (int d : nonzero) dims += (dims.empty() ? "" : ",") + std::to_string(d);
        f.add("cech(hypercube(4), 3): nonzero dims {" + dims + "}, want {3,4}");
    }
    return f.render();
}

// 11. Dual-route agreement. Integer SNF Betti numbers equal the dense
// rational-rank oracle on 100 seeded random complexes, and barcode interval
// counts equal the per-scale mod-2 Betti numbers on every tower the suite
// builds (hypercubes n <= 4 and cycles m = 5..9).
std::string criterion_oracle_agreement() {
    Failures f;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        SimplicialComplex k = oracle::random_complex(seed);
        HomologySummary h = reduced_homology(k);
        touch("random complex seed " + std::to_string(seed), k, h);
        std::vector<long long> want = oracle::rational_betti(k);
        std::vector<long long> got;
        for (const auto& d : h.dims) got.push_back(*d.betti_z);
        got.resize(std::max(got.size(), want.size()), 0);
        want.resize(got.size(), 0);
        if (got != want) f.add("seed " + std::to_string(seed) + ": SNF vs rational mismatch");
    }

    for (const auto& tower : g_towers) {
        // Hypercube towers reuse the memoized cell homology; cycles recompute.
        bool is_cube = tower.label.rfind("hypercube", 0) == 0;
        int n = is_cube ? tower.label[10] - '0' : 0;
        for (std::uint32_t s = 0; s <= tower.filtration.max_scale; ++s) {
            std::vector<long long> scale_betti;
            if (is_cube) {
                const HomologySummary& h = cell_homology(n, static_cast<int>(s));
                for (const auto& d : h.dims) scale_betti.push_back(d.betti_z2);
            } else {
                continue;
            }
            int dmax = static_cast<int>(scale_betti.size()) - 1;
            for (const auto& bar : tower.barcode.intervals) dmax = std::max(dmax, bar.dim);
            for (int d = 0; d <= dmax; ++d) {
                long long want =
                    d < static_cast<int>(scale_betti.size()) ? scale_betti[d] : 0;
                long long got = static_cast<long long>(tower.barcode.alive_at(d, s));
                if (got != want) {
                    f.add(tower.label + " scale " + std::to_string(s) + " dim " +
                          std::to_string(d) + ": alive " + std::to_string(got) + ", betti " +
                          std::to_string(want));
                }
            }
        }
    }

    for (std::uint32_t m = 5; m <= 9; ++m) {
        Graph g = Graph::cycle(m);
        std::uint32_t max_scale = full_simplex_scale(g);
        Filtration filt = build_filtration(g, max_scale);
        Barcode bc = compute_barcode(filt);
        for (std::uint32_t s = 0; s <= max_scale; ++s) {
            SimplicialComplex k = cech_complex(g, s);
            std::vector<long long> scale_betti = betti_mod2_all(k);
            int dmax = static_cast<int>(scale_betti.size()) - 1;
            for (const auto& bar : bc.intervals) dmax = std::max(dmax, bar.dim);
            for (int d = 0; d <= dmax; ++d) {
                long long want =
                    d < static_cast<int>(scale_betti.size()) ? scale_betti[d] : 0;
                long long got = static_cast<long long>(bc.alive_at(d, s));
                if (got != want) {
                    f.add("cycle(" + std::to_string(m) + ") scale " + std::to_string(s) +
                          " dim " + std::to_string(d) + ": alive " + std::to_string(got) +
                          ", betti " + std::to_string(want));
                }
            }
        }
        g_towers.push_back(Tower{"cycle(" + std::to_string(m) + ") tower", std::move(filt),
                                 std::move(bc)});
    }
    return f.render();
}

// 12. Invariant sweep over everything the suite touched: boundary maps
// compose to zero, the Euler characteristic matches the alternating Betti
// sum, integer and mod-2 Betti numbers agree wherever torsion is absent, and
// birth scales are monotone along faces in every tower.
std::string criterion_invariants() {
    Failures f;
    for (const auto& t : g_touched) {
        if (t.k.is_void()) continue;
        if (!boundary_composition_is_zero(t.k)) {
            f.add(t.label + ": boundary composition nonzero");
            continue;
        }
        if (!t.h) continue;
        long long alt = 0;
        bool clean = true;
        for (const auto& d : t.h->dims) {
            long long b;
            if (t.h->coefficients == Coefficients::Integers) {
                b = *d.betti_z;
            } else {
                b = d.betti_z2;
            }
            alt += (d.dim % 2 == 0) ? b : -b;
            if (t.h->coefficients == Coefficients::Integers && !d.torsion.empty()) clean = false;
        }
        if (t.k.euler_characteristic() != 1 + alt) {
            f.add(t.label + ": Euler characteristic mismatch");
        }
        if (t.h->coefficients == Coefficients::Integers && clean) {
            for (const auto& d : t.h->dims) {
                if (*d.betti_z != d.betti_z2) {
                    f.add(t.label + ": Z vs Z/2 disagree in dimension " +
                          std::to_string(d.dim));
                }
            }
        }
    }

    for (const auto& tower : g_towers) {
        std::unordered_map<Simplex, std::uint32_t, SimplexHash> birth;
        birth.reserve(tower.filtration.entries.size());
        for (const auto& e : tower.filtration.entries) birth[e.face] = e.birth;
        for (const auto& e : tower.filtration.entries) {
            if (e.face.size() < 2) continue;
            for (std::size_t i = 0; i < e.face.size(); ++i) {
                Simplex facet;
                facet.reserve(e.face.size() - 1);
                for (std::size_t j = 0; j < e.face.size(); ++j) {
                    if (j != i) facet.push_back(e.face[j]);
                }
                auto it = birth.find(facet);
                if (it == birth.end() || it->second > e.birth) {
                    f.add(tower.label + ": birth not monotone at " + format_simplex(e.face));
                }
            }
        }
    }
    std::cerr << "[acceptance] invariant sweep covered " << g_touched.size()
              << " complexes and " << g_towers.size() << " towers\n";
    return f.render();
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    int failures = 0;
    auto run = [&failures](int id, const std::string& what,
                           const std::function<std::string()>& body) {
        if (!run_criterion(id, what, body)) ++failures;
    };

    run(1, "reduced homology of every table cell with n <= 4 matches the registry",
        criterion_table);
    std::cout << "SKIP criterion 2: n=5 spot checks are long-running; run acceptance_long\n";
    run(3, "second Betti number of scale-2 cube complexes follows the closed form, n=2..5",
        criterion_betti2_closed_form);
    run(4, "prefix-graph scale-2 Betti increments equal alpha(m-1) for m=2..64",
        criterion_prefix_increments);
    run(5, "link-of-last-vertex covers for m-1 in {7,11,13,14}: union, b1=3, matching nerve",
        criterion_link_cover);
    run(6, "cycle complexes are circles for m=5..9, r < m/2", criterion_cycles);
    run(7, "contiguity chains succeed (n<=4, r<=2n-2), bars never exceed length 2, "
           "(2,1,1) witness is {1,3}",
        criterion_contiguity_and_bars);
    run(8, "collapse example replays, scale-3 bounds (5,5) on the 4-cube, scale-2 bounds "
           "(3,3) for n=2..5",
        criterion_collapsibility);
    run(9, "three neighbors inside a maximal face force the whole neighborhood inside",
        criterion_neighbor_absorption);
    run(10, "low-dimensional homology vanishes for scale-3 cube complexes; nonzero dims "
            "of the 4-cube complex are {3,4}",
        criterion_low_dim_vanishing);
    run(11, "SNF agrees with the rational oracle on 100 random complexes; barcodes match "
            "per-scale homology",
        criterion_oracle_agreement);
    run(12, "boundary composition, Euler, Z vs Z/2, and birth monotonicity hold on every "
            "touched instance",
        criterion_invariants);

    std::cerr << "[acceptance] total " << seconds_since(t0) << "s, " << failures
              << " failing criteria\n";
    return failures == 0 ? 0 : 1;
}
