#include "hstar/io.hpp"

#include <fstream>

namespace hstar::io {

namespace {

OrderedJson intvec_to_json(const IntVec& v) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& x : v) {
        if (x >= std::numeric_limits<std::int64_t>::min() &&
            x <= std::numeric_limits<std::int64_t>::max())
            arr.push_back(x.convert_to<std::int64_t>());
        else
            arr.push_back(x.str()); // out-of-range integers as decimal strings
    }
    return arr;
}

} // namespace

IntVec intvec_from_json(const nlohmann::json& arr) {
    if (!arr.is_array())
        throw Error(ErrorKind::Format, "expected an array of integers");
    IntVec out;
    for (const auto& e : arr) {
        if (e.is_number_integer() || e.is_number_unsigned()) {
            out.emplace_back(e.get<std::int64_t>());
        } else if (e.is_string()) {
            try {
                out.emplace_back(Int(e.get<std::string>()));
            } catch (const std::exception&) {
                throw Error(ErrorKind::Format, "malformed integer literal");
            }
        } else {
            throw Error(ErrorKind::Format,
                        "coordinates must be exact integers (no fractional "
                        "literals)");
        }
    }
    return out;
}

OrderedJson polytope_to_json(const poly::LatticePolytope& p) {
    OrderedJson doc;
    doc["ambient_dim"] = p.ambient_dim();
    OrderedJson verts = OrderedJson::array();
    for (const auto& v : p.vertices()) verts.push_back(intvec_to_json(v));
    doc["vertices"] = std::move(verts);
    if (p.name()) doc["name"] = *p.name();
    return doc;
}

poly::LatticePolytope polytope_from_json(const nlohmann::json& doc) {
    if (!doc.is_object())
        throw Error(ErrorKind::Format, "vertex file must be a JSON object");
    if (!doc.contains("ambient_dim") || !doc.contains("vertices"))
        throw Error(ErrorKind::Format,
                    "vertex file needs ambient_dim and vertices");
    const auto& ad = doc["ambient_dim"];
    if (!ad.is_number_integer() && !ad.is_number_unsigned())
        throw Error(ErrorKind::Format, "ambient_dim must be an integer");
    long dim = ad.get<long>();
    if (dim < 1)
        throw Error(ErrorKind::Format, "ambient_dim must be positive");
    if (!doc["vertices"].is_array() || doc["vertices"].empty())
        throw Error(ErrorKind::Format, "vertices must be a nonempty array");

    std::vector<IntVec> verts;
    for (const auto& row : doc["vertices"])
        verts.push_back(intvec_from_json(row));

    std::optional<std::string> name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            throw Error(ErrorKind::Format, "name must be a string");
        name = doc["name"].get<std::string>();
    }
    try {
        return poly::LatticePolytope(static_cast<std::size_t>(dim),
                                     std::move(verts), std::move(name));
    } catch (const Error& e) {
        throw Error(ErrorKind::Format, e.what());
    }
}

poly::LatticePolytope read_polytope_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Format, "cannot open input file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw Error(ErrorKind::Format, std::string("JSON parse error: ") + e.what());
    }
    return polytope_from_json(doc);
}

OrderedJson delta_to_json(const ehrhart::DeltaVector& d) {
    return intvec_to_json(d.entries());
}

OrderedJson family_to_json(const fam::FamilyInstance& inst) {
    OrderedJson doc = polytope_to_json(inst.polytope);
    OrderedJson spec;
    spec["family"] = fam::family_id_name(inst.spec.id);
    OrderedJson params;
    for (const auto& [key, value] : inst.spec.params) params[key] = value;
    spec["params"] = std::move(params);
    if (inst.spec.predicted_delta)
        spec["delta"] = delta_to_json(*inst.spec.predicted_delta);
    if (inst.spec.predicted_h)
        spec["h_vector"] = intvec_to_json(inst.spec.predicted_h->entries);
    spec["note"] = inst.spec.note;
    doc["predicted"] = std::move(spec);
    return doc;
}

OrderedJson realization_to_json(const classify::RealizationResult& r) {
    OrderedJson doc;
    doc["delta"] = intvec_to_json(r.candidate.delta);
    doc["dimension"] = r.candidate.dim;
    doc["volume"] = r.candidate.volume;
    doc["profile"] = r.candidate.gaps;
    doc["status"] = classify::realization_status_name(r.status);
    if (r.family) {
        doc["family"] = r.family->display_name();
    }
    if (r.witness) doc["witness_vertices"] = polytope_to_json(*r.witness)["vertices"];
    if (r.searched) {
        OrderedJson search;
        search["examined"] = r.examined;
        if (r.status == classify::RealizationStatus::Unrealized)
            search["exhaustive"] = true;
        else if (r.status == classify::RealizationStatus::UnrealizedWithinBudget)
            search["exhaustive"] = false;
        doc["search"] = std::move(search);
    }
    return doc;
}

OrderedJson classification_to_json(const classify::ClassificationReport& rep) {
    OrderedJson doc;
    doc["d_max"] = rep.d_max;
    doc["volume"] = rep.volume;
    OrderedJson entries = OrderedJson::array();
    for (const auto& e : rep.entries) entries.push_back(realization_to_json(e));
    doc["classification"] = std::move(entries);
    OrderedJson summary;
    summary["total"] = rep.entries.size();
    summary["unrealized"] = OrderedJson::array();
    for (auto i : rep.unrealized)
        summary["unrealized"].push_back(realization_to_json(rep.entries[i]));
    doc["summary"] = std::move(summary);
    return doc;
}

} // namespace hstar::io
