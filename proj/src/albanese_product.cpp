#include "picalb/albanese_product.hpp"

#include "picalb/errors.hpp"
#include "picalb/semigroups.hpp"

#include <algorithm>
#include <set>

namespace picalb {

namespace {

template <typename T>
void require_distinct(const std::vector<T>& items, const char* what) {
    std::set<T> seen(items.begin(), items.end());
    if (seen.size() != items.size()) throw Error(ErrorCode::InvalidArgument, std::string("duplicate ") + what);
}

std::map<std::uint64_t, std::uint64_t> gap_profile(const SingularPointData& p, std::uint64_t dim) {
    std::map<std::uint64_t, std::uint64_t> out;
    for (auto nu : analyze_point(p).profile.pole_orders()) out[nu] = dim;
    return out;
}

}  // namespace

CurveTheta::CurveTheta(std::vector<PoleSymbol> symbols) : symbols_(std::move(symbols)) {
    require_distinct(symbols_, "theta symbol");
}

ProductTheta::ProductTheta(std::vector<ProductSymbol> symbols) : symbols_(std::move(symbols)) {
    for (const auto& s : symbols_) {
        if (!s.first && !s.second) throw Error(ErrorCode::InvalidArgument, "(1, 1) is not a basis element");
    }
    require_distinct(symbols_, "product theta symbol");
}

CurveTheta theta_from_profiles(const std::vector<std::pair<std::string, ValuationProfile>>& profiles) {
    std::vector<PoleSymbol> symbols;
    for (const auto& [label, profile] : profiles) {
        for (const auto& [nu, dim] : profile.dims) {
            for (std::uint64_t i = 0; i < dim; ++i) symbols.push_back({label, nu, i});
        }
    }
    return CurveTheta(std::move(symbols));
}

CurveTheta theta_basis(const CurveModel& model, DimensionMethod method) {
    std::vector<std::pair<std::string, ValuationProfile>> profiles;
    for (const auto& p : model.points) {
        if (std::holds_alternative<OrdinaryShortcut>(p.spec)) continue;
        const auto* data = std::get_if<SingularPointData>(&p.spec);
        if (!data) {
            throw Error(ErrorCode::InvalidArgument, "point '" + p.label + "' has no parametrization for a theta basis");
        }
        profiles.emplace_back(p.label, analyze_point(*data, method, p.truncation).profile);
    }
    return theta_from_profiles(profiles);
}

ProductTheta product_theta(const CurveTheta& a, const CurveTheta& b) {
    std::vector<std::optional<PoleSymbol>> left{std::nullopt}, right{std::nullopt};
    for (const auto& s : a.symbols()) left.emplace_back(s);
    for (const auto& s : b.symbols()) right.emplace_back(s);
    std::vector<ProductSymbol> out;
    out.reserve(left.size() * right.size() - 1);
    for (const auto& x : left) {
        for (const auto& y : right) {
            if (x || y) out.push_back({x, y});
        }
    }
    return ProductTheta(std::move(out));
}

std::uint64_t product_albanese_dim(std::uint64_t a, std::uint64_t b) { return (a + 1) * (b + 1) - 1; }

std::uint64_t gamma_albanese_dim(std::uint64_t alpha) { return alpha * (2 * alpha - 1); }

std::map<std::uint64_t, std::uint64_t> ruling_graded_dims(std::uint64_t a, const ValuationProfile& profile_b) {
    std::map<std::uint64_t, std::uint64_t> out;
    for (const auto& [nu, dim] : profile_b.dims) out[nu] = a + 1;
    return out;
}

RulingProfiles theta_ruling_tally(const ProductTheta& theta) {
    RulingProfiles out;
    for (const auto& s : theta.symbols()) {
        if (s.second) {
            ++out["q=" + s.second->point][s.second->pole_order];
        } else {
            ++out["p=" + s.first->point][s.first->pole_order];
        }
    }
    return out;
}

RulingProfiles surface_ruling_profiles(unsigned alpha, unsigned beta) {
    if (alpha == 0 || beta == 0) throw Error(ErrorCode::InvalidArgument, "alpha and beta must be positive");
    const std::uint64_t a = gamma_albanese_dim(alpha), b = gamma_albanese_dim(beta);
    RulingProfiles out;
    out["p=0"] = gap_profile(gamma_cusp_at_zero(alpha), b + 1);
    out["p=inf"] = gap_profile(gamma_cusp_at_infinity(alpha), b + 1);
    out["q=0"] = gap_profile(gamma_cusp_at_zero(beta), a + 1);
    out["q=inf"] = gap_profile(gamma_cusp_at_infinity(beta), a + 1);
    return out;
}

CriterionResult check_injectivity_criterion(const RulingProfiles& profiles, const RulingCounts& counts) {
    for (const auto& [ruling, dims] : profiles) {
        if (!counts.contains(ruling)) {
            throw Error(ErrorCode::MissingCount, "no intersection count for ruling '" + ruling + "'");
        }
    }
    for (const auto& [ruling, dims] : profiles) {
        const auto count = counts.at(ruling);
        for (const auto& [nu, dim] : dims) {
            if (count < dim) return {false, CriterionWitness{ruling, nu, dim, count}};
        }
    }
    return {};
}

std::uint64_t ruling_intersection_count(std::uint64_t alpha, std::uint64_t beta, std::uint64_t n) {
    return n * 2 * (alpha + beta + 1);
}

std::uint64_t curve_vectorial_dim(std::uint64_t alpha, std::uint64_t beta, std::uint64_t n) {
    return n * (gamma_albanese_dim(alpha) * (2 * beta + 1) + gamma_albanese_dim(beta) * (2 * alpha + 1));
}

GysinReport gysin_thresholds(unsigned alpha, unsigned beta) {
    if (alpha == 0 || beta == 0) throw Error(ErrorCode::InvalidArgument, "alpha and beta must be positive");
    const Integer al = alpha, be = beta;
    const Integer a = al * (2 * al - 1), b = be * (2 * be - 1);

    GysinReport r;
    r.alpha = alpha;
    r.beta = beta;
    r.n_low = Rational((a + 1) * (b + 1) - 1, a * (2 * be + 1) + b * (2 * al + 1));
    r.n_low.canonicalize();
    const Integer denom = 2 * (al + be + 1);
    Rational first(a + 1, denom), second(b + 1, denom);
    first.canonicalize();
    second.canonicalize();
    r.n_suff = std::max(first, second);
    // Exclusion is strict (N < n_low) and sufficiency is non-strict (N >= n_suff),
    // so both integer thresholds are plain ceilings.
    r.n0 = ceil_rational(r.n_low);
    r.n1 = ceil_rational(r.n_suff);
    r.exact = alpha == beta;
    if (alpha == beta) {
        Rational esv(2 * (3 * a - 1), 2 * al + 1);
        esv.canonicalize();
        r.esv_bound = esv + 1;
    }
    return r;
}

bool verify_alpha_beta_coincidence(unsigned alpha) {
    const auto r = gysin_thresholds(alpha, alpha);
    const Integer al = alpha;
    const Integer a = al * (2 * al - 1);
    const Integer modulus = 2 * (2 * al + 1);
    const bool not_divisible = (a + 1) % modulus != 0;
    Rational expected_gap(1, modulus);
    expected_gap.canonicalize();
    const Rational gap = r.n_low - r.n_suff;
    return r.n0 == r.n1 && not_divisible && gap == expected_gap && gap < 1;
}

}  // namespace picalb
