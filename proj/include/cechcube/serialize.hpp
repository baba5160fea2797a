#pragma once

#include <string>

#include "cechcube/collapse.hpp"
#include "cechcube/formulas.hpp"
#include "cechcube/homology.hpp"
#include "cechcube/persistence.hpp"

namespace cechcube {

// JSON emitters (2-space indent, trailing newline) and a CSV alternative for
// barcodes. Parsers accept exactly what the emitters produce.

std::string homology_to_json(const HomologySummary& h);

std::string barcode_to_json(const Barcode& b);
std::string barcode_to_csv(const Barcode& b);  // header dim,birth,death; death "inf" when open

std::string vertex_map_to_json(const VertexMap& f);

std::string collapse_sequence_to_json(const CollapseSequence& seq);
CollapseSequence collapse_sequence_from_json(const std::string& text, int d);

std::string bounds_to_json(const CollapsibilityBounds& b);

std::string chain_verdict_to_json(const ChainVerdict& v, int n, std::uint32_t r,
                                  int codomain_delta);

std::string registry_to_json();

}  // namespace cechcube
