#include "cutstack/gadget_json.hpp"

#include <json.hpp>

#include "cutstack/errors.hpp"

namespace cutstack {

using nlohmann::json;

namespace {

json rat_to_json(const Rat& r) { return json{{"num", r.num_str()}, {"den", r.den_str()}}; }

Rat rat_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw invalid_parameter_error("rational JSON must be {num, den}");
    return Rat::from_string(j.at("num").get<std::string>() + "/" + j.at("den").get<std::string>());
}

} // namespace

std::string gadget_to_json(const Gadget& g, int indent) {
    json cols = json::array();
    for (const auto& c : g.columns) {
        json levels = json::array();
        for (const auto& iv : c.levels)
            levels.push_back(json{{"lo", rat_to_json(iv.lo)}, {"hi", rat_to_json(iv.hi)}});
        json col{{"levels", std::move(levels)}};
        if (c.has_provenance()) {
            json prov = json::array();
            for (const auto& [src, h] : c.provenance) prov.push_back(json::array({src, h}));
            col["provenance"] = std::move(prov);
        }
        cols.push_back(std::move(col));
    }
    json doc{{"format", "cutstack-gadget"}, {"version", 1}, {"columns", std::move(cols)}};
    return indent >= 0 ? doc.dump(indent) : doc.dump();
}

Gadget gadget_from_json(const std::string& text) {
    json doc = json::parse(text);
    if (doc.value("format", "") != "cutstack-gadget" || doc.value("version", 0) != 1)
        throw invalid_parameter_error("not a cutstack-gadget v1 document");
    Gadget g;
    for (const auto& col : doc.at("columns")) {
        Column c;
        for (const auto& lv : col.at("levels"))
            c.levels.emplace_back(rat_from_json(lv.at("lo")), rat_from_json(lv.at("hi")));
        if (col.contains("provenance"))
            for (const auto& pr : col.at("provenance"))
                c.provenance.emplace_back(pr.at(0).get<int>(), pr.at(1).get<long>());
        g.columns.push_back(std::move(c));
    }
    g.check_invariants();
    return g;
}

} // namespace cutstack
