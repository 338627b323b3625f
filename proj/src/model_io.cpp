#include "picalb/model_io.hpp"

#include "picalb/errors.hpp"

#include <string>

namespace picalb {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::Schema, what); }

const Json& require(const Json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) schema_error(where + ": missing field '" + key + "'");
    return obj.at(key);
}

std::uint64_t as_count(const Json& v, const std::string& where) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        schema_error(where + ": expected a nonnegative integer");
    }
    return v.get<std::uint64_t>();
}

std::string as_string(const Json& v, const std::string& where) {
    if (!v.is_string()) schema_error(where + ": expected a string");
    return v.get<std::string>();
}

Rational as_rational(const Json& v, const std::string& where) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
    schema_error(where + ": expected a rational string \"p/q\"");
}

std::vector<SingularPointData::Branch> parse_branches(const Json& doc, const std::string& where) {
    if (!doc.is_array() || doc.empty()) schema_error(where + ": 'branches' must be a nonempty array");
    std::vector<SingularPointData::Branch> out;
    for (const auto& b : doc) {
        if (!b.is_array() || b.empty()) schema_error(where + ": a branch must be a nonempty array of coordinates");
        SingularPointData::Branch branch;
        for (const auto& c : b) {
            if (!c.is_array()) schema_error(where + ": a coordinate must be an array of coefficients");
            SingularPointData::Coordinate coord;
            for (const auto& x : c) coord.push_back(as_rational(x, where));
            branch.push_back(std::move(coord));
        }
        out.push_back(std::move(branch));
    }
    return out;
}

SingularPointData make_point(std::string label, std::vector<SingularPointData::Branch> branches) {
    try {
        return SingularPointData(std::move(label), std::move(branches));
    } catch (const Error& e) {
        throw Error(ErrorCode::Schema, e.what());
    }
}

Json branches_to_json(const SingularPointData& p) {
    Json branches = Json::array();
    for (const auto& b : p.branches()) {
        Json coords = Json::array();
        for (const auto& c : b) {
            Json coeffs = Json::array();
            for (const auto& x : c) coeffs.push_back(format_rational(x));
            coords.push_back(std::move(coeffs));
        }
        branches.push_back(std::move(coords));
    }
    return branches;
}

}  // namespace

SingularPointData parse_point(const Json& doc) {
    if (!doc.is_object()) schema_error("point must be an object");
    const std::string label = doc.contains("label") ? as_string(doc.at("label"), "point") : std::string("p");
    return make_point(label, parse_branches(require(doc, "branches", "point '" + label + "'"), "point '" + label + "'"));
}

Json to_json(const SingularPointData& point) {
    Json j;
    j["label"] = point.label();
    j["branches"] = branches_to_json(point);
    return j;
}

CurveModel parse_curve_model(const Json& doc) {
    if (!doc.is_object()) schema_error("curve model must be a JSON object");
    CurveModel model;
    const auto& comps = require(doc, "components", "model");
    if (!comps.is_array()) schema_error("model: 'components' must be an array");
    for (const auto& c : comps) {
        const std::string id = as_string(require(c, "id", "component"), "component id");
        const auto genus = as_count(require(c, "genus", "component '" + id + "'"), "component '" + id + "' genus");
        model.components.push_back({id, static_cast<unsigned>(genus)});
    }

    if (doc.contains("points")) {
        const auto& pts = doc.at("points");
        if (!pts.is_array()) schema_error("model: 'points' must be an array");
        for (const auto& p : pts) {
            const std::string label = as_string(require(p, "label", "point"), "point label");
            const std::string where = "point '" + label + "'";
            std::vector<std::string> incidence;
            const auto& inc = require(p, "incidence", where);
            if (!inc.is_array()) schema_error(where + ": 'incidence' must be an array");
            for (const auto& id : inc) incidence.push_back(as_string(id, where + " incidence"));

            std::string cls = p.contains("class") ? as_string(p.at("class"), where + " class")
                              : p.contains("branches") ? "param"
                                                       : "";
            std::optional<std::size_t> truncation;
            if (p.contains("truncation")) truncation = as_count(p.at("truncation"), where + " truncation");

            if (cls == "param") {
                auto data = make_point(label, parse_branches(require(p, "branches", where), where));
                model.points.push_back({label, std::move(data), std::move(incidence), truncation});
            } else if (cls.rfind("ordinary-", 0) == 0) {
                std::size_t m = 0;
                try {
                    std::size_t used = 0;
                    m = std::stoul(cls.substr(9), &used);
                    if (used != cls.size() - 9) throw std::invalid_argument(cls);
                } catch (const std::logic_error&) {
                    schema_error(where + ": malformed class '" + cls + "'");
                }
                model.points.push_back({label, OrdinaryShortcut{m}, std::move(incidence), std::nullopt});
            } else if (cls == "general") {
                GeneralShortcut g;
                g.branches = as_count(require(p, "branch_count", where), where + " branch_count");
                g.unipotent_dim = as_count(require(p, "unipotent", where), where + " unipotent");
                model.points.push_back({label, g, std::move(incidence), std::nullopt});
            } else {
                schema_error(where + ": unknown or missing class '" + cls + "'");
            }
        }
    }

    if (doc.contains("connected")) {
        if (!doc.at("connected").is_boolean()) schema_error("model: 'connected' must be a boolean");
        model.connected = doc.at("connected").get<bool>();
    }
    model.validate();
    return model;
}

Json to_json(const CurveModel& model) {
    Json j;
    j["components"] = Json::array();
    for (const auto& c : model.components) j["components"].push_back({{"id", c.id}, {"genus", c.genus}});
    j["points"] = Json::array();
    for (const auto& p : model.points) {
        Json jp;
        jp["label"] = p.label;
        if (const auto* d = std::get_if<SingularPointData>(&p.spec)) {
            jp["class"] = "param";
            jp["branches"] = branches_to_json(*d);
        } else if (const auto* o = std::get_if<OrdinaryShortcut>(&p.spec)) {
            jp["class"] = "ordinary-" + std::to_string(o->branches);
        } else {
            const auto& g = std::get<GeneralShortcut>(p.spec);
            jp["class"] = "general";
            jp["branch_count"] = g.branches;
            jp["unipotent"] = g.unipotent_dim;
        }
        jp["incidence"] = p.incidence;
        if (p.truncation) jp["truncation"] = *p.truncation;
        j["points"].push_back(std::move(jp));
    }
    j["connected"] = model.connected;
    return j;
}

Json to_json(const ValuationProfile& profile) {
    Json orders = Json::array(), dims = Json::array();
    for (const auto& [nu, d] : profile.dims) {
        orders.push_back(nu);
        dims.push_back(d);
    }
    Json j;
    j["pole_orders"] = std::move(orders);
    j["dims"] = std::move(dims);
    j["total"] = profile.total();
    j["extrapolated"] = profile.extrapolated;
    return j;
}

Json to_json(const PicardDecomposition& d) {
    Json j;
    j["abelian"] = d.abelian_dim;
    j["torus"] = d.torus_rank;
    j["unipotent"] = d.unipotent_dim;
    j["total"] = d.total();
    return j;
}

}  // namespace picalb
