#include "cechcube/serialize.hpp"

#include <limits>
#include <sstream>

#include <json.hpp>

#include "cechcube/errors.hpp"

namespace cechcube {

namespace {

using nlohmann::json;

json torsion_to_json(const std::vector<BigInt>& torsion) {
    json out = json::array();
    for (const auto& t : torsion) {
        if (t <= std::numeric_limits<long long>::max()) {
            out.push_back(static_cast<long long>(t));
        } else {
            out.push_back(t.str());
        }
    }
    return out;
}

json simplex_to_json(const Simplex& s) {
    json out = json::array();
    for (VertexId v : s) out.push_back(v);
    return out;
}

std::string finish(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string homology_to_json(const HomologySummary& h) {
    json j;
    j["reduced"] = h.reduced;
    j["coefficients"] = h.coefficients == Coefficients::Integers ? "z" : "z2";
    json dims = json::array();
    for (const auto& d : h.dims) {
        json entry;
        entry["dim"] = d.dim;
        if (d.betti_z) {
            entry["betti_z"] = *d.betti_z;
            entry["torsion"] = torsion_to_json(d.torsion);
        } else {
            entry["betti_z"] = nullptr;
            entry["torsion"] = nullptr;
        }
        entry["betti_z2"] = d.betti_z2;
        dims.push_back(std::move(entry));
    }
    j["dimensions"] = std::move(dims);
    return finish(j);
}

std::string barcode_to_json(const Barcode& b) {
    json j;
    j["max_scale"] = b.max_scale;
    json intervals = json::array();
    for (const auto& iv : b.intervals) {
        json entry;
        entry["dim"] = iv.dim;
        entry["birth"] = iv.birth;
        if (iv.death) {
            entry["death"] = *iv.death;
        } else {
            entry["death"] = nullptr;
        }
        intervals.push_back(std::move(entry));
    }
    j["intervals"] = std::move(intervals);
    return finish(j);
}

std::string barcode_to_csv(const Barcode& b) {
    std::ostringstream out;
    out << "dim,birth,death\n";
    for (const auto& iv : b.intervals) {
        out << iv.dim << ',' << iv.birth << ',';
        if (iv.death) {
            out << *iv.death;
        } else {
            out << "inf";
        }
        out << '\n';
    }
    return out.str();
}

std::string vertex_map_to_json(const VertexMap& f) {
    json j = json::array();
    for (VertexId v : f.table) j.push_back(v);
    return finish(j);
}

std::string collapse_sequence_to_json(const CollapseSequence& seq) {
    json j = json::array();
    for (const auto& step : seq.steps) {
        json entry;
        entry["free"] = simplex_to_json(step.free_face);
        entry["maximal"] = simplex_to_json(step.maximal_face);
        j.push_back(std::move(entry));
    }
    return finish(j);
}

CollapseSequence collapse_sequence_from_json(const std::string& text, int d) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("collapse sequence is not valid JSON: ") + e.what());
    }
    if (!j.is_array()) {
        throw DomainError("collapse sequence JSON must be an array of steps");
    }
    CollapseSequence seq;
    seq.d = d;
    for (const auto& entry : j) {
        if (!entry.is_object() || !entry.contains("free") || !entry.contains("maximal")) {
            throw DomainError("each collapse step needs \"free\" and \"maximal\" arrays");
        }
        CollapseStep step;
        for (const auto& v : entry.at("free")) step.free_face.push_back(v.get<VertexId>());
        for (const auto& v : entry.at("maximal")) {
            step.maximal_face.push_back(v.get<VertexId>());
        }
        step.free_face = canonical(std::move(step.free_face));
        step.maximal_face = canonical(std::move(step.maximal_face));
        seq.steps.push_back(std::move(step));
    }
    return seq;
}

std::string bounds_to_json(const CollapsibilityBounds& b) {
    json j;
    j["lower"] = b.lower;
    j["upper"] = b.upper;
    j["seed"] = b.seed;
    j["sampled_d_prec"] = b.sampled_d_prec;
    return finish(j);
}

std::string chain_verdict_to_json(const ChainVerdict& v, int n, std::uint32_t r,
                                  int codomain_delta) {
    json j;
    j["n"] = n;
    j["r"] = r;
    j["codomain_delta"] = codomain_delta;
    j["success"] = v.success;
    if (v.success) {
        j["failing_step"] = nullptr;
        j["witness"] = nullptr;
    } else {
        j["failing_step"] = v.failing_step;
        j["witness"] = v.witness ? simplex_to_json(*v.witness) : json(nullptr);
    }
    return finish(j);
}

std::string registry_to_json() {
    json j = json::array();
    for (const auto& e : table_registry()) {
        json entry;
        entry["n"] = e.n;
        entry["r"] = e.r;
        entry["descriptor"] = e.descriptor();
        json betti = json::object();
        for (const auto& [dim, rank] : e.expected_betti()) {
            betti[std::to_string(dim)] = rank;
        }
        entry["betti"] = std::move(betti);
        j.push_back(std::move(entry));
    }
    return finish(j);
}

}  // namespace cechcube
