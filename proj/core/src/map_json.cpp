#include "srblab/map_json.hpp"

#include <set>
#include <string>

namespace srblab {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
    if (!obj.is_object()) {
        throw ParamError(where + ": expected a JSON object");
    }
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key())) {
            throw ParamError(where + ": unknown field \"" + it.key() + "\"");
        }
    }
}

double number_field(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) {
        throw ParamError(where + ": missing field \"" + key + "\"");
    }
    const json& v = obj.at(key);
    if (!v.is_number()) {
        throw ParamError(where + ": field \"" + key + "\" must be a number");
    }
    return v.get<double>();
}

GeometricLorenzParams lorenz_params_from_json(const json& p, const std::string& where) {
    require_keys(p, {"A", "B", "nu0", "nu"}, where);
    GeometricLorenzParams out;
    out.A = number_field(p, "A", where);
    out.B = number_field(p, "B", where);
    out.nu0 = number_field(p, "nu0", where);
    out.nu = number_field(p, "nu", where);
    return out;
}

} // namespace

SingularMap map_from_json(const json& j) {
    require_keys(j, {"family", "params"}, "map");
    if (!j.contains("family") || !j.at("family").is_string()) {
        throw ParamError("map: missing or non-string \"family\"");
    }
    const std::string family = j.at("family").get<std::string>();
    const json params = j.contains("params") ? j.at("params") : json::object();

    if (family == "geometric-lorenz") {
        return SingularMap::geometric_lorenz(lorenz_params_from_json(params, "params"));
    }
    if (family == "belykh") {
        require_keys(params, {"k", "lambda1", "lambda2", "mu1", "mu2"}, "params");
        BelykhParams p;
        p.k = number_field(params, "k", "params");
        p.lambda1 = number_field(params, "lambda1", "params");
        p.lambda2 = number_field(params, "lambda2", "params");
        p.mu1 = number_field(params, "mu1", "params");
        p.mu2 = number_field(params, "mu2", "params");
        return SingularMap::belykh(p);
    }
    if (family == "stacked-lorenz") {
        require_keys(params, {"base", "levels"}, "params");
        StackedParams p;
        if (!params.contains("base")) {
            throw ParamError("params: missing field \"base\"");
        }
        p.base = lorenz_params_from_json(params.at("base"), "params.base");
        if (!params.contains("levels") || !params.at("levels").is_number_integer()) {
            throw ParamError("params: field \"levels\" must be an integer");
        }
        p.levels = params.at("levels").get<int>();
        return SingularMap::stacked_lorenz(p);
    }
    if (family == "lorenz-type-generic") {
        throw UnsupportedError(
            "lorenz-type-generic maps carry branch callables and cannot be built from JSON");
    }
    throw ParamError("map: unknown family \"" + family + "\"");
}

nlohmann::json map_to_json(const SingularMap& map) {
    json out;
    out["family"] = family_name(map.family());
    json p;
    switch (map.family()) {
        case Family::GeometricLorenz: {
            const auto* g = map.lorenz_params();
            p = {{"A", g->A}, {"B", g->B}, {"nu0", g->nu0}, {"nu", g->nu}};
            break;
        }
        case Family::Belykh: {
            const auto* b = map.belykh_params();
            p = {{"k", b->k},
                 {"lambda1", b->lambda1},
                 {"lambda2", b->lambda2},
                 {"mu1", b->mu1},
                 {"mu2", b->mu2}};
            break;
        }
        case Family::StackedLorenz: {
            const auto* s = map.stacked_params();
            p = {{"base",
                  {{"A", s->base.A}, {"B", s->base.B}, {"nu0", s->base.nu0}, {"nu", s->base.nu}}},
                 {"levels", s->levels}};
            break;
        }
        case Family::LorenzTypeGeneric:
            throw UnsupportedError("lorenz-type-generic maps have no JSON form");
    }
    out["params"] = p;
    return out;
}

} // namespace srblab
