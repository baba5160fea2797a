#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cechcube/collapse.hpp"
#include "cechcube/complex.hpp"
#include "cechcube/detail/progress.hpp"
#include "cechcube/errors.hpp"
#include "cechcube/formulas.hpp"
#include "cechcube/graph.hpp"
#include "cechcube/homology.hpp"
#include "cechcube/persistence.hpp"
#include "cechcube/serialize.hpp"

namespace {

using namespace cechcube;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

Graph parse_graph(const std::string& selector) {
    auto colon = selector.find(':');
    if (colon == std::string::npos) {
        throw DomainError("graph selector must be family:argument, got '" + selector + "'");
    }
    std::string family = selector.substr(0, colon);
    std::string arg = selector.substr(colon + 1);
    if (family == "file") {
        return Graph::load_file(arg);
    }
    std::uint64_t value = 0;
    try {
        std::size_t used = 0;
        value = std::stoull(arg, &used);
        if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
        throw DomainError("graph argument '" + arg + "' is not a nonnegative integer");
    }
    if (family == "hypercube") return Graph::hypercube(static_cast<int>(value));
    if (family == "prefix") return Graph::prefix_graph(value);
    if (family == "cycle") return Graph::cycle(static_cast<std::uint32_t>(value));
    throw DomainError("unknown graph family '" + family +
                      "' (expected hypercube, prefix, cycle, or file)");
}

// Scales are effectively integral: the complex at scale r equals the complex
// at floor(r).
std::uint32_t floor_scale(double r) {
    if (!(r >= 0.0) || r > 4.0e9) {
        throw DomainError("scale must be a nonnegative number");
    }
    return static_cast<std::uint32_t>(std::floor(r));
}

Coefficients parse_coeff(const std::string& name) {
    if (name == "z") return Coefficients::Integers;
    if (name == "z2") return Coefficients::Mod2;
    throw DomainError("coefficient choice must be z or z2");
}

// Upper bound on the face count of a complex: each maximal face of size s
// contributes at most 2^s - 1 faces. Cheap (no enumeration) and safe to
// overestimate; used to pick default coefficients and to skip oversized
// verification cells before any face enumeration starts.
double estimate_faces(const SimplicialComplex& k) {
    double total = 0;
    for (const auto& f : k.maximal_faces()) {
        total += std::ldexp(1.0, static_cast<int>(f.size()));
    }
    return total;
}

void stderr_sink(const std::string& message) { std::cerr << "[cech] " << message << "\n"; }

struct CommonOptions {
    std::string graph;
    double r = 0.0;
    std::string coeff;  // empty = automatic
    std::string format;
    std::uint64_t seed = 0;
    std::size_t budget_faces = kDefaultFaceBudget;
    int jobs = 1;
};

int run_complex(const CommonOptions& opt) {
    Graph g = parse_graph(opt.graph);
    CechStats stats;
    SimplicialComplex k = cech_complex(g, floor_scale(opt.r), &stats);
    k.total_face_count(opt.budget_faces);
    std::cerr << "[cech] " << stats.generators << " generators, "
              << stats.antichain.pruned() << " pruned, " << k.maximal_faces().size()
              << " maximal faces\n";
    if (opt.format == "json") {
        std::ostringstream body;
        k.write(body);
        auto fv = k.f_vector();
        std::cout << "{\n  \"vertex_count\": " << k.vertex_count() << ",\n  \"dim\": "
                  << k.dimension() << ",\n  \"f_vector\": [";
        for (std::size_t i = 0; i < fv.size(); ++i) {
            std::cout << (i ? ", " : "") << fv[i];
        }
        std::cout << "],\n  \"maximal\": [";
        const auto& maximal = k.maximal_faces();
        for (std::size_t i = 0; i < maximal.size(); ++i) {
            std::cout << (i ? ", [" : "[");
            for (std::size_t j = 0; j < maximal[i].size(); ++j) {
                std::cout << (j ? ", " : "") << maximal[i][j];
            }
            std::cout << "]";
        }
        std::cout << "]\n}\n";
        return kExitOk;
    }
    k.write(std::cout);
    auto fv = k.f_vector();
    std::cout << "# f_vector";
    for (std::size_t c : fv) std::cout << ' ' << c;
    std::cout << '\n';
    return kExitOk;
}

int run_homology(const CommonOptions& opt) {
    Graph g = parse_graph(opt.graph);
    SimplicialComplex k = cech_complex(g, floor_scale(opt.r));
    std::size_t faces = k.total_face_count(opt.budget_faces);
    Coefficients coeff;
    if (!opt.coeff.empty()) {
        coeff = parse_coeff(opt.coeff);
    } else {
        coeff = faces <= 100000 ? Coefficients::Integers : Coefficients::Mod2;
        std::cerr << "[cech] " << faces << " faces, defaulting to "
                  << (coeff == Coefficients::Integers ? "integer" : "mod-2")
                  << " coefficients\n";
    }
    HomologySummary h = reduced_homology(k, coeff, opt.budget_faces);
    if (opt.format == "text") {
        for (const auto& d : h.dims) {
            std::cout << "dim " << d.dim << ": ";
            if (d.betti_z) {
                std::cout << "betti_z=" << *d.betti_z;
                if (!d.torsion.empty()) {
                    std::cout << " torsion=";
                    for (std::size_t i = 0; i < d.torsion.size(); ++i) {
                        std::cout << (i ? "," : "") << d.torsion[i];
                    }
                }
                std::cout << ' ';
            }
            std::cout << "betti_z2=" << d.betti_z2 << '\n';
        }
        return kExitOk;
    }
    std::cout << homology_to_json(h);
    return kExitOk;
}

int run_barcode(const CommonOptions& opt, double r_max, bool r_max_given) {
    Graph g = parse_graph(opt.graph);
    std::uint32_t max_scale =
        r_max_given ? floor_scale(r_max) : full_simplex_scale(g);
    std::cerr << "[cech] building filtration to scale " << max_scale << "\n";
    Filtration f = build_filtration(g, max_scale, opt.budget_faces, opt.jobs);
    std::cerr << "[cech] " << f.entries.size() << " faces in filtration\n";
    Barcode b = compute_barcode(f);
    if (opt.format == "csv") {
        std::cout << barcode_to_csv(b);
    } else {
        std::cout << barcode_to_json(b);
    }
    return kExitOk;
}

int run_collapse(const CommonOptions& opt, int d, bool d_given, int orders) {
    Graph g = parse_graph(opt.graph);
    SimplicialComplex k = cech_complex(g, floor_scale(opt.r));
    if (d_given) {
        CollapseSearchResult res = is_d_collapsible(k, d);
        const char* verdict = res.verdict == CollapseVerdict::Collapsible ? "collapsible"
                              : res.verdict == CollapseVerdict::Impossible ? "impossible"
                                                                           : "undecided";
        std::cout << "{\n  \"d\": " << d << ",\n  \"verdict\": \"" << verdict
                  << "\",\n  \"states_explored\": " << res.states_explored
                  << ",\n  \"sequence\": ";
        if (res.sequence) {
            std::string seq = collapse_sequence_to_json(*res.sequence);
            while (!seq.empty() && seq.back() == '\n') seq.pop_back();
            std::cout << seq;
        } else {
            std::cout << "null";
        }
        std::cout << "\n}\n";
        return kExitOk;
    }
    Coefficients coeff;
    if (!opt.coeff.empty()) {
        coeff = parse_coeff(opt.coeff);
    } else {
        std::size_t faces = k.total_face_count(opt.budget_faces);
        coeff = faces <= 100000 ? Coefficients::Integers : Coefficients::Mod2;
    }
    CollapsibilityBounds b =
        collapsibility_bounds(k, orders, opt.seed, coeff, opt.budget_faces, opt.jobs);
    std::cout << bounds_to_json(b);
    return kExitOk;
}

int run_contiguity(int n, double r, int codomain_delta) {
    std::uint32_t scale = floor_scale(r);
    ChainVerdict v = contiguity_chain(n, scale, codomain_delta);
    std::cout << chain_verdict_to_json(v, n, scale, codomain_delta);
    if (!v.success) {
        std::cerr << "[cech] contiguity chain failed at step " << v.failing_step << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int run_verify_table(const CommonOptions& opt, int max_n) {
    if (max_n < 1 || max_n > 8) {
        throw DomainError("--max-n must lie in 1..8");
    }
    bool all_ok = true;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    for (const auto& entry : table_registry()) {
        if (entry.n > max_n) continue;
        Graph g = Graph::hypercube(entry.n);
        SimplicialComplex k = cech_complex(g, static_cast<std::uint32_t>(entry.r));
        double estimate = estimate_faces(k);
        if (estimate > static_cast<double>(opt.budget_faces)) {
            std::cout << "SKIP (" << entry.n << "," << entry.r << "): estimated "
                      << static_cast<long long>(estimate) << " faces exceeds budget "
                      << opt.budget_faces << "\n";
            ++skipped;
            continue;
        }
        Coefficients coeff;
        if (!opt.coeff.empty()) {
            coeff = parse_coeff(opt.coeff);
        } else {
            // Large cells default to the mod-2 route; the integral route runs
            // where Smith normal forms stay affordable.
            coeff = estimate <= 10000 ? Coefficients::Integers : Coefficients::Mod2;
        }
        std::cerr << "[cech] checking (" << entry.n << "," << entry.r << ") over "
                  << (coeff == Coefficients::Integers ? "Z" : "Z/2") << "\n";
        HomologySummary h = reduced_homology(k, coeff, opt.budget_faces);
        std::map<int, long long> expected = entry.expected_betti();
        std::map<int, long long> got;
        for (const auto& dh : h.dims) {
            long long value =
                coeff == Coefficients::Integers ? *dh.betti_z : dh.betti_z2;
            if (value != 0) got[dh.dim] = value;
            if (coeff == Coefficients::Integers && !dh.torsion.empty()) {
                got[dh.dim] = -1;  // torsion where the table promises none
            }
        }
        bool ok = got == expected;
        all_ok = all_ok && ok;
        std::cout << (ok ? "PASS" : "FAIL") << " (" << entry.n << "," << entry.r
                  << "): expected {";
        bool first = true;
        for (const auto& [dim, rank] : expected) {
            std::cout << (first ? "" : ", ") << "b" << dim << "=" << rank;
            first = false;
        }
        std::cout << "} got {";
        first = true;
        for (const auto& [dim, rank] : got) {
            std::cout << (first ? "" : ", ") << "b" << dim << "=" << rank;
            first = false;
        }
        std::cout << "}\n";
        ++checked;
    }
    std::cout << checked << " cells checked, " << skipped << " skipped"
              << (all_ok ? "" : ", MISMATCHES FOUND") << "\n";
    return all_ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    cechcube::detail::set_progress_sink(&stderr_sink);

    CLI::App app{"Nerve complexes of graph neighborhoods: construction, homology, "
                 "barcodes, collapsibility, and table verification"};
    app.require_subcommand(1);

    CommonOptions opt;
    double r_max = 0.0;
    int d = 0;
    int orders = 50;
    int n = 0;
    int codomain_delta = 2;
    int max_n = 4;

    auto add_common = [&](CLI::App* sub, bool with_graph, bool with_r) {
        if (with_graph) {
            sub->add_option("--graph", opt.graph,
                            "Graph selector: hypercube:n | prefix:m | cycle:m | file:path")
                ->required();
        }
        if (with_r) {
            sub->add_option("--r", opt.r, "Scale (non-integers are floored)")->required();
        }
        sub->add_option("--budget-faces", opt.budget_faces, "Face-count budget");
        sub->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1, 256));
    };

    CLI::App* c_complex = app.add_subcommand("complex", "Emit maximal faces and f-vector");
    add_common(c_complex, true, true);
    c_complex->add_option("--format", opt.format, "text (default) or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* c_homology = app.add_subcommand("homology", "Reduced homology of the complex");
    add_common(c_homology, true, true);
    c_homology->add_option("--coeff", opt.coeff, "z or z2 (default by face count)")
        ->check(CLI::IsMember({"z", "z2"}));
    c_homology->add_option("--format", opt.format, "json (default) or text")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* c_barcode = app.add_subcommand("barcode", "Persistence barcode of the filtration");
    add_common(c_barcode, true, false);
    CLI::Option* r_max_opt = c_barcode->add_option(
        "--r-max", r_max, "Top filtration scale (default: full-simplex scale)");
    c_barcode->add_option("--format", opt.format, "json (default) or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* c_collapse = app.add_subcommand(
        "collapse", "Collapsibility bounds, or an exhaustive search with --d");
    add_common(c_collapse, true, true);
    CLI::Option* d_opt =
        c_collapse->add_option("--d", d, "Exhaustive d-collapsibility search");
    c_collapse->add_option("--orders", orders, "Sampled random orders for the upper bound")
        ->check(CLI::Range(1, 100000));
    c_collapse->add_option("--seed", opt.seed, "Random-order seed");
    c_collapse->add_option("--coeff", opt.coeff, "z or z2 for the homology lower bound")
        ->check(CLI::IsMember({"z", "z2"}));

    CLI::App* c_contiguity =
        app.add_subcommand("contiguity", "Projection-chain contiguity verdict");
    c_contiguity->add_option("--n", n, "Hypercube dimension")->required()
        ->check(CLI::Range(1, 5));
    c_contiguity->add_option("--r", opt.r, "Domain scale")->required();
    c_contiguity->add_option("--codomain-delta", codomain_delta, "Codomain scale offset")
        ->check(CLI::IsMember({1, 2}));

    CLI::App* c_verify =
        app.add_subcommand("verify-table", "Check computed homology against known cells");
    c_verify->add_option("--max-n", max_n, "Largest hypercube dimension to check")
        ->check(CLI::Range(1, 8));
    c_verify->add_option("--coeff", opt.coeff, "Force z or z2 for every cell")
        ->check(CLI::IsMember({"z", "z2"}));
    c_verify->add_option("--budget-faces", opt.budget_faces, "Face-count budget per cell");
    c_verify->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1, 256));

    try {
        app.parse(argc, argv);
        if (c_complex->parsed()) return run_complex(opt);
        if (c_homology->parsed()) return run_homology(opt);
        if (c_barcode->parsed()) return run_barcode(opt, r_max, r_max_opt->count() > 0);
        if (c_collapse->parsed()) return run_collapse(opt, d, d_opt->count() > 0, orders);
        if (c_contiguity->parsed()) return run_contiguity(n, opt.r, codomain_delta);
        if (c_verify->parsed()) return run_verify_table(opt, max_n);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n"
                  << "run 'cech --help' for the command synopsis\n";
        return kExitUsage;
    } catch (const cechcube::SizeError& e) {
        std::cerr << "size/budget error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const cechcube::DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
