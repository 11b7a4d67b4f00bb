#pragma once

#include <nlohmann/json.hpp>

#include "trideg/classify.hpp"

namespace trideg {

using Json = nlohmann::ordered_json;

// On-disk tensor document:
//   { "shape": [p,q,r],
//     "entries": p x q x r nested arrays of integers or "num/den" strings,
//     "name": ..., "provenance": ...,              (optional)
//     "hints": [ {"axis": "z", "point": [...]} ] } (optional)
struct TensorDocument {
    Tensor3 tensor;
    std::string name;
    std::string provenance;
    std::vector<Hint> hints;
};

TensorDocument parse_tensor_document(const Json& doc);
TensorDocument load_tensor_document(const std::string& path);
Json serialize_tensor_document(const TensorDocument& doc);

Json point_to_json(const ProjPoint& p);
Json report_to_json(const AnalysisReport& rep);
Json diagnosis_to_json(const DetScheme& s, const ProjPoint& p, Axis axis, const PointDiagnosis& d);

} // namespace trideg
