#pragma once

#include <string>

#include <json.hpp>

#include "logcurves/betti.hpp"
#include "logcurves/bv.hpp"
#include "logcurves/flc.hpp"
#include "logcurves/logspace.hpp"
#include "logcurves/trees.hpp"
#include "logcurves/weights.hpp"

namespace logcurves {

// All documents are nlohmann ordered_json so that field order, and therefore
// the serialized bytes, are deterministic. Every top-level document starts
// with {"format": "logcurves/1", "kind": ...}.
using ojson = nlohmann::ordered_json;

inline constexpr const char* kFormatTag = "logcurves/1";

// Wrap a payload into a top-level document.
ojson envelope(const std::string& kind, ojson payload);

ojson tree_json(const StableTree& t);
ojson descriptor_json(const NCLogDescriptor& d);
ojson matrix_json(const IntMatrix& m);
ojson map_json(const LogStructureMap& m);
ojson classify_json(const ClassifyResult& r);
ojson poly_json(const Poly& p);
ojson tables_json(const PoincareTables& t);
ojson e1_json(const E1Page& p);
ojson purity_json(const PurityReport& r);
ojson acyclicity_json(const AcyclicityCertificate& c);
ojson formal_model_json(const FormalModel& m);
ojson pushout_json(const PushoutReport& r);
ojson axiom_report_json(const AxiomReport& r);
ojson bv_element_json(const BVElement& e);

// Parse an expression document: {"op": "gen", "i": 1},
// {"op": "prod"|"bracket"|"sum", "args": [...]}, {"op": "delta", "arg": ...},
// {"op": "scale", "num": p, "den": q, "arg": ...}.
BVExprPtr parse_bv_expr(const ojson& j);

} // namespace logcurves
