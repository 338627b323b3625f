#include "picalb/local_singularity.hpp"

#include "picalb/errors.hpp"
#include "picalb/semigroups.hpp"

#include <algorithm>
#include <functional>

namespace picalb {

namespace {

constexpr std::size_t kMaxScanTruncation = 400;

}  // namespace

SingularPointData::SingularPointData(std::string label, std::vector<Branch> branches)
    : label_(std::move(label)), branches_(std::move(branches)) {
    if (branches_.empty()) throw Error(ErrorCode::InvalidArgument, "point '" + label_ + "' has no branches");
    const std::size_t r = branches_.front().size();
    if (r == 0) throw Error(ErrorCode::InvalidArgument, "point '" + label_ + "' has no coordinates");
    for (const auto& b : branches_) {
        if (b.size() != r) {
            throw Error(ErrorCode::InvalidArgument, "branches of point '" + label_ + "' differ in coordinate count");
        }
        for (const auto& c : b) {
            if (!c.empty() && sgn(c.front()) != 0) {
                throw Error(ErrorCode::InvalidArgument,
                            "coordinate with nonzero constant term at point '" + label_ + "'");
            }
        }
    }
}

SingularPointData SingularPointData::monomial(std::string label, const std::vector<std::uint64_t>& exponents) {
    Branch branch;
    for (auto e : exponents) {
        if (e == 0) throw Error(ErrorCode::InvalidArgument, "monomial exponent must be positive");
        Coordinate c(e + 1);
        c[e] = 1;
        branch.push_back(std::move(c));
    }
    return SingularPointData(std::move(label), {std::move(branch)});
}

Jet SingularPointData::coordinate_jet(std::size_t branch, std::size_t coordinate, std::size_t order) const {
    return Jet::from_polynomial(branches_.at(branch).at(coordinate), order);
}

std::vector<BranchJetTuple> SingularPointData::coordinate_tuples(std::size_t order) const {
    std::vector<BranchJetTuple> out;
    for (std::size_t i = 0; i < coordinate_count(); ++i) {
        std::vector<Jet> jets;
        for (std::size_t b = 0; b < branch_count(); ++b) jets.push_back(coordinate_jet(b, i, order));
        out.emplace_back(std::move(jets));
    }
    return out;
}

std::optional<std::vector<std::uint64_t>> SingularPointData::monomial_exponents() const {
    if (branch_count() != 1) return std::nullopt;
    std::vector<std::uint64_t> exps;
    for (const auto& c : branches_.front()) {
        std::optional<std::uint64_t> e;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (sgn(c[i]) == 0) continue;
            if (e) return std::nullopt;
            e = i;
        }
        if (e) exps.push_back(*e);
    }
    if (exps.empty()) return std::nullopt;
    return exps;
}

std::string to_string(const PointClass& c) {
    switch (c.kind) {
        case PointKind::Smooth: return "smooth";
        case PointKind::Ordinary: return "ordinary-" + std::to_string(c.branches);
        case PointKind::General: return "general-" + std::to_string(c.branches);
    }
    return "unknown";
}

std::string to_string(DimensionMethod m) {
    switch (m) {
        case DimensionMethod::Auto: return "auto";
        case DimensionMethod::Semigroup: return "semigroup";
        case DimensionMethod::Jets: return "jets";
    }
    return "unknown";
}

PointClass classify_point(const SingularPointData& p, std::size_t truncation) {
    if (truncation < 2) {
        throw Error(ErrorCode::InsufficientTruncation,
                    "tangent data of point '" + p.label() + "' needs truncation order >= 2");
    }
    const std::size_t m = p.branch_count();
    std::vector<RationalRow> tangents;
    bool all_smooth = true;
    for (std::size_t b = 0; b < m; ++b) {
        RationalRow tangent;
        for (std::size_t i = 0; i < p.coordinate_count(); ++i) tangent.push_back(p.coordinate_jet(b, i, 2)[1]);
        all_smooth = all_smooth && std::any_of(tangent.begin(), tangent.end(),
                                               [](const Rational& x) { return sgn(x) != 0; });
        tangents.push_back(std::move(tangent));
    }
    if (m == 1) return {all_smooth ? PointKind::Smooth : PointKind::General, 1};
    if (all_smooth && rational_rank(std::move(tangents)) == m) return {PointKind::Ordinary, m};
    return {PointKind::General, m};
}

PointClass classify_point(const SingularPointData& p) { return classify_point(p, 2); }

std::vector<BranchJetTuple> maximal_ideal_image(const SingularPointData& p, std::size_t truncation) {
    std::vector<BranchJetTuple> coords;
    for (auto& c : p.coordinate_tuples(truncation)) {
        if (!c.is_zero()) coords.push_back(std::move(c));
    }
    // Every coordinate has positive valuation, so products of more than
    // truncation-1 factors vanish and the recursion terminates.
    std::vector<BranchJetTuple> out;
    std::function<void(const BranchJetTuple&, std::size_t)> extend = [&](const BranchJetTuple& prefix,
                                                                         std::size_t first) {
        for (std::size_t i = first; i < coords.size(); ++i) {
            BranchJetTuple next = prefix * coords[i];
            if (next.is_zero()) continue;
            out.push_back(next);
            extend(next, i);
        }
    };
    for (std::size_t i = 0; i < coords.size(); ++i) {
        out.push_back(coords[i]);
        extend(coords[i], i);
    }
    return out;
}

GradedQuotient graded_quotient(const SingularPointData& p, std::size_t truncation) {
    if (truncation < 2) {
        throw Error(ErrorCode::InsufficientTruncation, "truncation order must be at least 2");
    }
    const std::size_t nb = p.branch_count();
    const auto image = maximal_ideal_image(p, truncation);
    const auto reduction = span_reduction(image);

    std::vector<std::size_t> pivots_per_degree(truncation, 0);
    for (auto col : reduction.pivot_columns) ++pivots_per_degree[col / nb];
    if (pivots_per_degree[0] != 0) throw std::logic_error("maximal ideal image has a constant term");

    GradedQuotient out;
    out.truncation = truncation;
    for (std::size_t d = 1; d < truncation; ++d) {
        const std::size_t dim = nb - pivots_per_degree[d];
        if (dim > 0) out.dims[d] = dim;
        out.total += dim;
    }
    if (out.total != nb * (truncation - 1) - reduction.rank) throw std::logic_error("graded quotient miscounted");
    return out;
}

JetDimension unipotent_dim_jets(const SingularPointData& p, std::size_t truncation) {
    const auto d0 = graded_quotient(p, truncation).total;
    const auto d1 = graded_quotient(p, truncation + 1).total;
    const auto d2 = graded_quotient(p, truncation + 2).total;
    if (d0 != d1 || d1 != d2) {
        throw Error(ErrorCode::UnstableTruncation,
                    "point '" + p.label() + "': quotient dimensions " + std::to_string(d0) + ", " +
                        std::to_string(d1) + ", " + std::to_string(d2) + " at truncation " +
                        std::to_string(truncation) + ".." + std::to_string(truncation + 2) + " disagree");
    }
    return {d0, truncation, true};
}

std::size_t unipotent_dim_semigroup(const SingularPointData& p) {
    const auto exps = p.monomial_exponents();
    if (!exps) {
        throw Error(ErrorCode::NotMonomialUnibranch,
                    "point '" + p.label() + "' is not a unibranch monomial parametrization");
    }
    return NumericalSemigroup(*exps).gaps().size();
}

std::size_t select_truncation(const SingularPointData& p, bool use_semigroup) {
    if (const auto exps = use_semigroup ? p.monomial_exponents() : std::nullopt) {
        NumericalSemigroup s(*exps);
        if (s.cofinite()) return 2 * static_cast<std::size_t>(s.conductor()) + 2;
    }
    // Certificate: if degrees [c, M) of the image are full on every branch and
    // M - c is at least the smallest coordinate order on each branch, the image
    // contains every jet of order >= c.
    std::size_t k = 1;
    for (const auto& branch : p.branches()) {
        std::optional<std::size_t> v;
        for (const auto& coord : branch) {
            for (std::size_t d = 0; d < coord.size(); ++d) {
                if (coord[d] != 0) {
                    if (!v || d < *v) v = d;
                    break;
                }
            }
        }
        if (!v) {
            throw Error(ErrorCode::NonCofinite, "point '" + p.label() + "' has a branch with all coordinates zero");
        }
        k = std::max(k, *v);
    }
    for (std::size_t m = 2; m <= kMaxScanTruncation; m *= 2) {
        const auto q = graded_quotient(p, m);
        const std::size_t c = q.dims.empty() ? 1 : static_cast<std::size_t>(q.dims.rbegin()->first) + 1;
        if (m >= c + k) return 2 * c + k + 2;
    }
    throw Error(ErrorCode::UnstableTruncation,
                "point '" + p.label() + "': no stable truncation up to " + std::to_string(kMaxScanTruncation));
}

std::uint64_t ValuationProfile::total() const {
    std::uint64_t t = 0;
    for (const auto& [nu, d] : dims) t += d;
    return t;
}

std::vector<std::uint64_t> ValuationProfile::pole_orders() const {
    std::vector<std::uint64_t> out;
    for (const auto& [nu, d] : dims) out.push_back(nu);
    return out;
}

LocalAnalysis analyze_point(const SingularPointData& p, DimensionMethod method,
                            std::optional<std::size_t> truncation) {
    LocalAnalysis out;
    out.point_class = classify_point(p, truncation.value_or(2));

    const bool fast = p.monomial_exponents().has_value();
    if (method == DimensionMethod::Semigroup || (method == DimensionMethod::Auto && fast && !truncation)) {
        out.method_used = DimensionMethod::Semigroup;
        const auto exps = p.monomial_exponents();
        if (!exps) {
            throw Error(ErrorCode::NotMonomialUnibranch,
                        "point '" + p.label() + "' is not a unibranch monomial parametrization");
        }
        for (auto g : NumericalSemigroup(*exps).gaps()) out.profile.dims[g] = 1;
        out.unipotent_dim = out.profile.total();
        return out;
    }

    out.method_used = DimensionMethod::Jets;
    const std::size_t m = truncation ? *truncation : select_truncation(p);
    out.jets = unipotent_dim_jets(p, m);
    out.unipotent_dim = out.jets->dimension;
    out.profile.dims = graded_quotient(p, m).dims;
    out.profile.extrapolated = p.branch_count() > 1;
    return out;
}

}  // namespace picalb
