#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "curvette/atlas.hpp"
#include "curvette/chart.hpp"
#include "curvette/errors.hpp"
#include "curvette/hahn.hpp"
#include "curvette/lexvec.hpp"
#include "curvette/point.hpp"
#include "curvette/scalars.hpp"

namespace curvette {

using Json = nlohmann::json;

// All scalars travel as exact strings; keys of JSON objects are emitted
// sorted, so serialization is canonical and byte-stable.

inline Json to_json(const QuadExt& x) { return to_string(x); }

inline QuadExt scalar_from_json(const Json& j) {
    if (!j.is_string()) throw ValidationError("scalar must be a string");
    return parse_scalar(j.get<std::string>());
}

inline Json to_json(const LexVector& v) {
    Json arr = Json::array();
    for (int i = 0; i < v.rank(); ++i) arr.push_back(to_json(v[i]));
    return arr;
}

inline LexVector lexvec_from_json(const Json& j) {
    if (!j.is_array()) throw ValidationError("exponent must be an array of scalar strings");
    std::vector<QuadExt> coords;
    coords.reserve(j.size());
    for (const auto& x : j) coords.push_back(scalar_from_json(x));
    return LexVector(std::move(coords));
}

inline Json to_json(const ValueOrInf& v) { return v ? to_json(*v) : Json("inf"); }

inline Json to_json(const HahnPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back(Json::array({to_string(c), to_json(e)}));
    return arr;
}

inline HahnPoly poly_from_json(const Json& j, int rank) {
    if (!j.is_array()) throw ValidationError("series must be an array of [coefficient, exponent]");
    HahnPoly p(rank);
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2)
            throw ValidationError("series term must be [coefficient, exponent]");
        if (!term[0].is_string()) throw ValidationError("coefficient must be a string");
        LexVector e = lexvec_from_json(term[1]);
        if (e.rank() != rank) throw ValidationError("series exponent rank does not match m");
        p.add_term(std::move(e), parse_rat(term[0].get<std::string>()));
    }
    return p;
}

inline Json to_json(const HahnFraction& f) {
    return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

inline HahnFraction fraction_from_json(const Json& j, int rank) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ValidationError("fraction must be an object with num and den");
    return HahnFraction(poly_from_json(j["num"], rank), poly_from_json(j["den"], rank));
}

inline Json to_json(const Point& p) {
    Json images = Json::array();
    for (const auto& f : p.images) images.push_back(to_json(f));
    return Json{{"n", p.n},
                {"m", p.m},
                {"exponent_field", to_string(p.field)},
                {"signs", p.signs.axes},
                {"images", images}};
}

inline Point point_from_json(const Json& j) {
    if (!j.is_object()) throw ValidationError("point must be a JSON object");
    for (const char* key : {"n", "m", "exponent_field", "signs", "images"})
        if (!j.contains(key)) throw ValidationError(std::string("point is missing '") + key + "'");
    int n = j["n"].get<int>();
    int m = j["m"].get<int>();
    if (n < 0 || n > 16 || m < 0 || m > 16) throw ValidationError("n and m must lie in 0..16");
    std::string field_str = j["exponent_field"].get<std::string>();
    ScalarField field;
    if (field_str == "Q")
        field = ScalarField::Q;
    else if (field_str == "Qsqrt2")
        field = ScalarField::QSqrt2;
    else
        throw ValidationError("exponent_field must be \"Q\" or \"Qsqrt2\"");
    SignData signs;
    for (const auto& s : j["signs"]) {
        int v = s.get<int>();
        if (v != 1 && v != -1) throw ValidationError("signs must be +1 or -1");
        signs.axes.push_back(v);
    }
    std::vector<HahnFraction> images;
    for (const auto& im : j["images"]) images.push_back(fraction_from_json(im, m));
    return make_point(n, m, field, std::move(signs), std::move(images));
}

inline Json to_json(const IndexSet& s) {
    Json arr = Json::array();
    for (int j : s.to_vector()) arr.push_back(j);
    return arr;
}

inline IndexSet indexset_from_json(const Json& j) {
    if (!j.is_array()) throw ValidationError("index set must be an array of 1-based indices");
    IndexSet out;
    for (const auto& x : j) {
        int v = x.get<int>();
        if (v < 1 || v > 32) throw ValidationError("coordinate index out of range");
        out.insert(v);
    }
    return out;
}

inline Json to_json(const Classification& c) {
    return Json{{"I", to_json(c.I)},          {"F", to_json(c.F)}, {"G", to_json(c.G)},
                {"P", to_json(c.P)},          {"p", c.p()},        {"kernel_cut_level", c.delta_kernel.cut_level}};
}

// Tuple documents: {"vectors": [[...], ...]} with an optional "m" used
// when the list is empty.
inline std::vector<LexVector> tuple_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vectors"))
        throw ValidationError("tuple must be an object with a 'vectors' array");
    std::vector<LexVector> out;
    for (const auto& v : j["vectors"]) out.push_back(lexvec_from_json(v));
    for (const auto& v : out)
        if (v.rank() != out.front().rank())
            throw ValidationError("all tuple vectors must have the same rank");
    return out;
}

inline Json to_json(std::span<const LexVector> tuple) {
    Json vectors = Json::array();
    for (const auto& v : tuple) vectors.push_back(to_json(v));
    return Json{{"vectors", vectors}};
}

inline MonomialMap matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("matrix"))
        throw ValidationError("matrix document must contain 'matrix'");
    std::vector<std::vector<long>> rows;
    for (const auto& r : j["matrix"]) {
        std::vector<long> row;
        for (const auto& x : r) row.push_back(x.get<long>());
        rows.push_back(std::move(row));
    }
    return MonomialMap(std::move(rows));
}

inline Json to_json(const MonomialMap& m) {
    Json rows = Json::array();
    for (const auto& r : m.rows()) rows.push_back(r);
    return Json{{"matrix", rows}};
}

inline USetDescriptor descriptor_from_json(const Json& j, int n) {
    if (!j.is_object() || !j.contains("kind"))
        throw ValidationError("descriptor must be an object with a 'kind'");
    USetDescriptor d;
    std::string kind = j["kind"].get<std::string>();
    if (kind == "IFG")
        d.kind = UKind::IFG;
    else if (kind == "IFG*")
        d.kind = UKind::IFGStar;
    else if (kind == "aIFG")
        d.kind = UKind::AnchoredIFG;
    else if (kind == "aIFG*")
        d.kind = UKind::AnchoredIFGStar;
    else if (kind == "HT")
        d.kind = UKind::HT;
    else if (kind == "HT*")
        d.kind = UKind::HTStar;
    else
        throw ValidationError("unknown descriptor kind '" + kind + "'");
    if (j.contains("I")) d.I = indexset_from_json(j["I"]);
    if (j.contains("F")) d.F = indexset_from_json(j["F"]);
    if (j.contains("G")) d.G = indexset_from_json(j["G"]);
    if (j.contains("H")) d.H = indexset_from_json(j["H"]);
    if (j.contains("T")) d.T = indexset_from_json(j["T"]);
    if (j.contains("anchor")) {
        std::vector<LexVector> anchor;
        for (const auto& v : j["anchor"]) anchor.push_back(lexvec_from_json(v));
        d.anchor = std::move(anchor);
    }
    validate_descriptor(d, n);
    return d;
}

inline Json to_json(const USetDescriptor& d) {
    Json out{{"kind", to_string(d.kind)}};
    if (d.kind == UKind::HT || d.kind == UKind::HTStar) {
        out["H"] = to_json(d.H);
        out["T"] = to_json(d.T);
    } else {
        out["I"] = to_json(d.I);
        out["F"] = to_json(d.F);
        out["G"] = to_json(d.G);
    }
    if (d.anchor) {
        Json anchor = Json::array();
        for (const auto& v : *d.anchor) anchor.push_back(to_json(v));
        out["anchor"] = anchor;
    }
    return out;
}

inline Json to_json(const ChartReport& r) {
    Json clauses = Json::array();
    for (const auto& c : r.clauses)
        clauses.push_back(Json{{"clause", std::to_string(c.clause)},
                               {"status", to_string(c.status)},
                               {"witness", c.witness}});
    return Json{{"clauses", clauses}, {"all_passed", r.all_passed()}};
}

inline Json to_json(const std::vector<PhiRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows)
        out.push_back(Json{{"j", r.j},
                           {"value_in_chart", to_json(r.nu_star)},
                           {"coarse_value", to_json(r.nu_delta)},
                           {"consistent", r.consistent}});
    return out;
}

inline Json to_json(const TransferReport& r) {
    Json checks = Json::array();
    for (const auto& e : r.entries)
        checks.push_back(
            Json{{"name", e.name}, {"status", to_string(e.status)}, {"witness", e.witness}});
    return Json{{"checks", checks}, {"ok", r.ok()}};
}

inline Json to_json(const PartitionReport& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations)
        violations.push_back(Json{{"point_id", v.point_index}, {"what", v.what}});
    return Json{{"checked", r.checked}, {"violations", violations}, {"ok", r.ok()}};
}

}  // namespace curvette
