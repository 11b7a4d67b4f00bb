#include "trideg/json_io.hpp"
#include <limits>

#include <fstream>

#include "trideg/errors.hpp"

namespace trideg {

namespace {

Rational value_from_json(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(Integer(v.get<long long>()));
    if (v.is_string()) return rational_from_string(v.get<std::string>());
    throw ParseError("at " + where + ": tensor values must be integers or \"num/den\" strings");
}

} // namespace

TensorDocument parse_tensor_document(const Json& doc) {
    if (!doc.is_object()) throw ParseError("tensor document must be a JSON object");
    if (!doc.contains("shape") || !doc.contains("entries"))
        throw ParseError("tensor document needs 'shape' and 'entries'");
    const Json& shape = doc["shape"];
    if (!shape.is_array() || shape.size() != 3)
        throw ParseError("'shape' must be an array [p,q,r]");
    int dims[3];
    for (int m = 0; m < 3; ++m) {
        if (!shape[m].is_number_integer() || shape[m].get<long long>() < 1)
            throw ParseError("'shape' entries must be positive integers");
        dims[m] = shape[m].get<int>();
    }
    const Json& entries = doc["entries"];
    if (!entries.is_array() || static_cast<int>(entries.size()) != dims[0])
        throw ParseError("'entries' must nest p lists of q lists of r values matching 'shape'");
    Tensor3 t(dims[0], dims[1], dims[2]);
    for (int i = 0; i < dims[0]; ++i) {
        const Json& rows = entries[i];
        if (!rows.is_array() || static_cast<int>(rows.size()) != dims[1])
            throw ParseError("'entries' shape mismatch at slice " + std::to_string(i + 1));
        for (int j = 0; j < dims[1]; ++j) {
            const Json& row = rows[j];
            if (!row.is_array() || static_cast<int>(row.size()) != dims[2])
                throw ParseError("'entries' shape mismatch at row (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ")");
            for (int k = 0; k < dims[2]; ++k) {
                const std::string where = "entry (" + std::to_string(i + 1) + "," +
                                          std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
                t.set(i, j, k, value_from_json(row[k], where));
            }
        }
    }
    TensorDocument out{std::move(t), "", "", {}};
    if (doc.contains("name")) out.name = doc["name"].get<std::string>();
    if (doc.contains("provenance")) out.provenance = doc["provenance"].get<std::string>();
    if (doc.contains("hints")) {
        if (!doc["hints"].is_array()) throw ParseError("'hints' must be an array");
        for (const Json& h : doc["hints"]) {
            if (!h.is_object() || !h.contains("axis") || !h.contains("point"))
                throw ParseError("each hint needs 'axis' and 'point'");
            const Axis axis = axis_from_name(h["axis"].get<std::string>());
            QVector coords;
            for (const Json& c : h["point"]) coords.push_back(value_from_json(c, "hint point"));
            out.hints.emplace_back(axis, ProjPoint(std::move(coords)));
        }
    }
    return out;
}

TensorDocument load_tensor_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return parse_tensor_document(doc);
}

namespace {

Json rational_json(const Rational& r) {
    if (denom(r) == 1 && numer(r) >= std::numeric_limits<long long>::min() &&
        numer(r) <= std::numeric_limits<long long>::max())
        return Json(numer(r).convert_to<long long>());
    return Json(to_string(r));
}

} // namespace

Json serialize_tensor_document(const TensorDocument& doc) {
    Json out;
    const Tensor3& t = doc.tensor;
    out["shape"] = {t.p(), t.q(), t.r()};
    Json entries = Json::array();
    for (int i = 0; i < t.p(); ++i) {
        Json rows = Json::array();
        for (int j = 0; j < t.q(); ++j) {
            Json row = Json::array();
            for (int k = 0; k < t.r(); ++k) row.push_back(rational_json(t.at(i, j, k)));
            rows.push_back(std::move(row));
        }
        entries.push_back(std::move(rows));
    }
    out["entries"] = std::move(entries);
    if (!doc.name.empty()) out["name"] = doc.name;
    if (!doc.provenance.empty()) out["provenance"] = doc.provenance;
    if (!doc.hints.empty()) {
        Json hints = Json::array();
        for (const auto& [axis, pt] : doc.hints) {
            Json h;
            h["axis"] = axis_name(axis);
            h["point"] = point_to_json(pt);
            hints.push_back(std::move(h));
        }
        out["hints"] = std::move(hints);
    }
    return out;
}

Json point_to_json(const ProjPoint& p) {
    Json out = Json::array();
    for (const Rational& c : p.coords()) out.push_back(to_string(c));
    return out;
}

Json report_to_json(const AnalysisReport& rep) {
    Json out;
    out["format"] = {rep.p, rep.q, rep.r};
    Json order = Json::array();
    for (Axis a : rep.axis_order) order.push_back(axis_name(a));
    out["axis_order"] = std::move(order);
    if (rep.det_zero) out["det_zero"] = *rep.det_zero;
    Json deg;
    deg["status"] = to_string(rep.degenerate.status);
    deg["reason"] = rep.degenerate.reason;
    if (rep.degenerate.certificate) {
        Json cert;
        cert["x"] = point_to_json(rep.degenerate.certificate->p);
        cert["y"] = point_to_json(rep.degenerate.certificate->q);
        cert["z"] = point_to_json(rep.degenerate.certificate->t);
        deg["certificate"] = std::move(cert);
    }
    out["degenerate"] = std::move(deg);
    out["concise"] = rep.concise;
    out["essential_format"] = {rep.fess.p, rep.fess.q, rep.fess.r};
    if (rep.tensor_rank) out["trk"] = *rep.tensor_rank;
    if (rep.canonical_type) out["canonical_type"] = *rep.canonical_type;
    out["branch_trace"] = rep.branch_trace;
    return out;
}

Json diagnosis_to_json(const DetScheme& s, const ProjPoint& p, Axis axis, const PointDiagnosis& d) {
    Json out;
    out["axis"] = axis_name(axis);
    out["point"] = point_to_json(p);
    out["matrix_shape"] = {s.u(), s.v()};
    out["ambient_vars"] = s.ambient_vars();
    out["expected_codim"] = expected_codim(s);
    out["on_scheme"] = d.on_scheme;
    out["rank_at"] = d.rank_at;
    out["jacobian_rank"] = d.jacobian_rank;
    out["degenerate"] = d.degenerate;
    out["bidegenerate"] = d.bidegenerate;
    return out;
}

} // namespace trideg
