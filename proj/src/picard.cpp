#include "picalb/picard.hpp"

#include "picalb/errors.hpp"

#include <map>
#include <numeric>
#include <set>

namespace picalb {

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

bool incidence_connected(const CurveModel& model) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < model.components.size(); ++i) index[model.components[i].id] = i;
    DisjointSets sets(model.components.size());
    for (const auto& p : model.points) {
        for (const auto& id : p.incidence) sets.unite(index.at(id), index.at(p.incidence.front()));
    }
    for (std::size_t i = 1; i < model.components.size(); ++i) {
        if (sets.find(i) != sets.find(0)) return false;
    }
    return true;
}

PointContribution contribution(const CurvePoint& point, DimensionMethod method) {
    PointContribution out;
    out.label = point.label;
    out.torus = point.branch_count() - 1;
    if (const auto* ord = std::get_if<OrdinaryShortcut>(&point.spec)) {
        out.point_class = {PointKind::Ordinary, ord->branches};
        return out;
    }
    if (const auto* gen = std::get_if<GeneralShortcut>(&point.spec)) {
        out.point_class = {PointKind::General, gen->branches};
        out.unipotent = gen->unipotent_dim;
        return out;
    }
    const auto& data = std::get<SingularPointData>(point.spec);
    try {
        out.analysis = analyze_point(data, method, point.truncation);
    } catch (const Error& e) {
        throw Error(e.code(), "at point '" + point.label + "': " + e.what());
    }
    out.point_class = out.analysis->point_class;
    out.unipotent = out.analysis->unipotent_dim;
    return out;
}

}  // namespace

std::size_t CurvePoint::branch_count() const {
    if (const auto* d = std::get_if<SingularPointData>(&spec)) return d->branch_count();
    if (const auto* o = std::get_if<OrdinaryShortcut>(&spec)) return o->branches;
    return std::get<GeneralShortcut>(spec).branches;
}

void CurveModel::validate() const {
    if (components.empty()) throw Error(ErrorCode::Schema, "curve model has no components");
    std::set<std::string> ids;
    for (const auto& c : components) {
        if (!ids.insert(c.id).second) throw Error(ErrorCode::Schema, "duplicate component id '" + c.id + "'");
    }
    std::set<std::string> labels;
    for (const auto& p : points) {
        if (!labels.insert(p.label).second) throw Error(ErrorCode::Schema, "duplicate point label '" + p.label + "'");
        if (p.incidence.size() != p.branch_count()) {
            throw Error(ErrorCode::Schema, "point '" + p.label + "' has " + std::to_string(p.branch_count()) +
                                               " branches but " + std::to_string(p.incidence.size()) +
                                               " incidence entries");
        }
        for (const auto& id : p.incidence) {
            if (!ids.contains(id)) {
                throw Error(ErrorCode::Schema, "point '" + p.label + "' refers to unknown component '" + id + "'");
            }
        }
        if (const auto* o = std::get_if<OrdinaryShortcut>(&p.spec); o && o->branches < 2) {
            throw Error(ErrorCode::Schema, "ordinary point '" + p.label + "' needs at least 2 branches");
        }
        if (const auto* g = std::get_if<GeneralShortcut>(&p.spec); g && g->branches < 1) {
            throw Error(ErrorCode::Schema, "point '" + p.label + "' needs at least 1 branch");
        }
    }
}

std::size_t torus_rank(const CurveModel& model) {
    model.validate();
    if (!model.connected) throw Error(ErrorCode::Disconnected, "curve model is flagged as disconnected");
    if (!incidence_connected(model)) {
        throw Error(ErrorCode::Disconnected, "components are not connected through the singular points");
    }
    std::size_t branch_excess = 0;
    for (const auto& p : model.points) branch_excess += p.branch_count() - 1;
    // Connectivity of the incidence graph gives branch_excess >= #components - 1.
    if (branch_excess + 1 < model.components.size()) throw std::logic_error("negative torus rank");
    return branch_excess + 1 - model.components.size();
}

std::size_t unipotent_dim_total(const CurveModel& model, DimensionMethod method) {
    model.validate();
    std::size_t total = 0;
    for (const auto& p : model.points) total += contribution(p, method).unipotent;
    return total;
}

DetailedDecomposition picard_decompose_detailed(const CurveModel& model, DimensionMethod method) {
    DetailedDecomposition out;
    out.decomposition.torus_rank = torus_rank(model);
    for (const auto& c : model.components) out.decomposition.abelian_dim += c.genus;
    for (const auto& p : model.points) {
        out.points.push_back(contribution(p, method));
        out.decomposition.unipotent_dim += out.points.back().unipotent;
    }
    return out;
}

PicardDecomposition picard_decompose(const CurveModel& model, DimensionMethod method) {
    return picard_decompose_detailed(model, method).decomposition;
}

SingularPointData gamma_cusp_at_zero(unsigned alpha, std::string label) {
    return SingularPointData::monomial(std::move(label), {2, 2ULL * alpha + 1});
}

SingularPointData gamma_cusp_at_infinity(unsigned alpha, std::string label) {
    return SingularPointData::monomial(std::move(label), {2ULL * alpha - 1, 2ULL * alpha + 1});
}

CurveModel build_gamma_alpha(unsigned alpha, std::optional<std::size_t> truncation) {
    if (alpha == 0) throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
    CurveModel model;
    model.components.push_back({"Gamma", 0});
    model.points.push_back({"0", gamma_cusp_at_zero(alpha), {"Gamma"}, truncation});
    model.points.push_back({"inf", gamma_cusp_at_infinity(alpha), {"Gamma"}, truncation});
    return model;
}

CurveModel build_dkl(unsigned alpha, unsigned beta, unsigned k, unsigned l, std::optional<std::size_t> truncation) {
    if (alpha == 0 || beta == 0 || k == 0 || l == 0) {
        throw Error(ErrorCode::InvalidArgument, "alpha, beta, k and l must be positive");
    }
    CurveModel model;
    auto add_copy = [&](const std::string& id, unsigned param) {
        model.components.push_back({id, 0});
        model.points.push_back({id + ":0", gamma_cusp_at_zero(param, id + ":0"), {id}, truncation});
        model.points.push_back({id + ":inf", gamma_cusp_at_infinity(param, id + ":inf"), {id}, truncation});
    };
    // {p_i} x Gamma_beta
    for (unsigned i = 1; i <= k; ++i) add_copy("P" + std::to_string(i), beta);
    // Gamma_alpha x {q_j}
    for (unsigned j = 1; j <= l; ++j) add_copy("Q" + std::to_string(j), alpha);
    for (unsigned i = 1; i <= k; ++i) {
        for (unsigned j = 1; j <= l; ++j) {
            const std::string pi = "P" + std::to_string(i), qj = "Q" + std::to_string(j);
            model.points.push_back({pi + "x" + qj, OrdinaryShortcut{2}, {pi, qj}, std::nullopt});
        }
    }
    return model;
}

}  // namespace picalb
