#pragma once

#include "picalb/local_singularity.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace picalb {

struct Component {
    std::string id;
    unsigned genus = 0;  // genus of the normalization of this component
};

/// An ordinary m-fold point declared without parametrization data.
struct OrdinaryShortcut {
    std::size_t branches = 2;
};

/// A point of known local type declared without parametrization data.
struct GeneralShortcut {
    std::size_t branches = 1;
    std::size_t unipotent_dim = 0;
};

using PointSpec = std::variant<SingularPointData, OrdinaryShortcut, GeneralShortcut>;

struct CurvePoint {
    std::string label;
    PointSpec spec;
    /// Component ids touched by the branches, one entry per branch.
    std::vector<std::string> incidence;
    /// Jets truncation override for this point.
    std::optional<std::size_t> truncation;

    std::size_t branch_count() const;
};

struct CurveModel {
    std::vector<Component> components;
    std::vector<CurvePoint> points;
    bool connected = true;

    /// Checks ids, labels and incidence sizes; throws Error(Schema).
    void validate() const;
};

struct PicardDecomposition {
    std::size_t abelian_dim = 0;
    std::size_t torus_rank = 0;
    std::size_t unipotent_dim = 0;

    std::size_t total() const noexcept { return abelian_dim + torus_rank + unipotent_dim; }
    friend bool operator==(const PicardDecomposition&, const PicardDecomposition&) = default;
};

/// Per-point contribution, as reported by picard_decompose_detailed.
struct PointContribution {
    std::string label;
    PointClass point_class;
    std::size_t torus = 0;      // branch count - 1
    std::size_t unipotent = 0;
    std::optional<LocalAnalysis> analysis;  // absent for declared shortcuts
};

struct DetailedDecomposition {
    PicardDecomposition decomposition;
    std::vector<PointContribution> points;
};

/// sum over points of (branches - 1) - #components + 1.
/// Throws Error(Disconnected) if the model is flagged disconnected or its
/// incidence graph is disconnected.
std::size_t torus_rank(const CurveModel& model);

/// Sum of local unipotent dimensions. Local errors are rethrown with the
/// point label in the message.
std::size_t unipotent_dim_total(const CurveModel& model, DimensionMethod method = DimensionMethod::Auto);

PicardDecomposition picard_decompose(const CurveModel& model, DimensionMethod method = DimensionMethod::Auto);
DetailedDecomposition picard_decompose_detailed(const CurveModel& model,
                                                DimensionMethod method = DimensionMethod::Auto);

/// Cusp parametrizations of X^{2a+1} = Y^2 Z^{2a-1} at 0 and infinity.
SingularPointData gamma_cusp_at_zero(unsigned alpha, std::string label = "0");
SingularPointData gamma_cusp_at_infinity(unsigned alpha, std::string label = "inf");

/// Rational curve with the two cusps of Gamma_alpha. Throws Error(InvalidArgument) for alpha = 0.
CurveModel build_gamma_alpha(unsigned alpha, std::optional<std::size_t> truncation = std::nullopt);

/// k copies of Gamma_beta (ids P1..Pk) and l copies of Gamma_alpha (ids Q1..Ql)
/// meeting pairwise in k*l ordinary double points.
CurveModel build_dkl(unsigned alpha, unsigned beta, unsigned k, unsigned l,
                     std::optional<std::size_t> truncation = std::nullopt);

}  // namespace picalb
