#pragma once

#include "picalb/local_singularity.hpp"
#include "picalb/picard.hpp"
#include "picalb/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace picalb {

/// Representative t_q^{-nu} of a Lie algebra basis element supported at point q.
/// `index` separates several representatives sharing (q, nu).
struct PoleSymbol {
    std::string point;
    std::uint64_t pole_order = 0;
    std::uint64_t index = 0;

    auto operator<=>(const PoleSymbol&) const = default;
};

/// Basis representatives for a curve. Throws Error(InvalidArgument) on duplicates.
class CurveTheta {
public:
    CurveTheta() = default;
    explicit CurveTheta(std::vector<PoleSymbol> symbols);

    const std::vector<PoleSymbol>& symbols() const noexcept { return symbols_; }
    std::size_t size() const noexcept { return symbols_.size(); }

private:
    std::vector<PoleSymbol> symbols_;
};

/// theta_A (x) theta_B where nullopt stands for the unit 1.
struct ProductSymbol {
    std::optional<PoleSymbol> first;
    std::optional<PoleSymbol> second;

    auto operator<=>(const ProductSymbol&) const = default;
};

/// Basis representatives for a product of two curves; never contains (1, 1).
class ProductTheta {
public:
    /// Throws Error(InvalidArgument) on duplicates or a (1, 1) entry.
    explicit ProductTheta(std::vector<ProductSymbol> symbols);

    const std::vector<ProductSymbol>& symbols() const noexcept { return symbols_; }
    std::size_t size() const noexcept { return symbols_.size(); }

private:
    std::vector<ProductSymbol> symbols_;
};

/// One symbol per (point, pole order, copy) of the given local profiles.
CurveTheta theta_from_profiles(const std::vector<std::pair<std::string, ValuationProfile>>& profiles);

/// Theta basis of a curve model; every point must carry parametrization data
/// or be ordinary. Throws Error(InvalidArgument) for GENERAL shortcut points.
CurveTheta theta_basis(const CurveModel& model, DimensionMethod method = DimensionMethod::Auto);

/// ((A u {1}) x (B u {1})) \ {(1, 1)}.
ProductTheta product_theta(const CurveTheta& a, const CurveTheta& b);

/// (a + 1)(b + 1) - 1.
std::uint64_t product_albanese_dim(std::uint64_t a, std::uint64_t b);

/// alpha (2 alpha - 1), the Albanese dimension of Gamma_alpha.
std::uint64_t gamma_albanese_dim(std::uint64_t alpha);

/// Graded dimensions along the ruling C_A x {q}: a + 1 at each pole order of `profile_b`.
std::map<std::uint64_t, std::uint64_t> ruling_graded_dims(std::uint64_t a, const ValuationProfile& profile_b);

using RulingProfiles = std::map<std::string, std::map<std::uint64_t, std::uint64_t>>;
using RulingCounts = std::map<std::string, std::uint64_t>;

/// Attribution of product symbols to rulings: a symbol with a non-unit second
/// factor at q is counted on "q=<q>" at that pole order; a pure first-factor
/// symbol (theta_a, 1) at p is counted on "p=<p>".
RulingProfiles theta_ruling_tally(const ProductTheta& theta);

/// Graded dimensions on the four rulings of Gamma_alpha x Gamma_beta:
/// "p=0", "p=inf" ({p} x Gamma_beta, dim b+1 at the gaps of Gamma_alpha at p) and
/// "q=0", "q=inf" (Gamma_alpha x {q}, dim a+1 at the gaps of Gamma_beta at q).
RulingProfiles surface_ruling_profiles(unsigned alpha, unsigned beta);

struct CriterionWitness {
    std::string ruling;
    std::uint64_t pole_order = 0;
    std::uint64_t dim = 0;
    std::uint64_t count = 0;

    friend bool operator==(const CriterionWitness&, const CriterionWitness&) = default;
};

struct CriterionResult {
    bool holds = true;
    std::optional<CriterionWitness> witness;  // first violation in (ruling, pole order) order
};

/// Numeric side of the restriction-injectivity criterion: count[ruling] >= dim
/// for every graded piece. A true result certifies only the sufficient
/// condition; general position of the curve is the caller's obligation.
/// Throws Error(MissingCount) if a profiled ruling has no count.
CriterionResult check_injectivity_criterion(const RulingProfiles& profiles, const RulingCounts& counts);

/// N * 2(alpha + beta + 1): intersections of C_N with each ruling.
std::uint64_t ruling_intersection_count(std::uint64_t alpha, std::uint64_t beta, std::uint64_t n);

/// N (a (2 beta + 1) + b (2 alpha + 1)): dimension of the vectorial part of Pic^0 C_N.
std::uint64_t curve_vectorial_dim(std::uint64_t alpha, std::uint64_t beta, std::uint64_t n);

struct GysinReport {
    unsigned alpha = 0;
    unsigned beta = 0;
    Rational n_low;   // not surjective for N < n_low
    Rational n_suff;  // surjective for N >= n_suff
    Integer n0;       // smallest integer >= n_low
    Integer n1;       // smallest integer >= n_suff
    bool exact = false;
    std::optional<Rational> esv_bound;  // alpha == beta only; surjective for N > esv_bound
};

/// Throws Error(InvalidArgument) unless alpha, beta >= 1.
GysinReport gysin_thresholds(unsigned alpha, unsigned beta);

/// N0 == N1 for alpha == beta, checked together with the non-divisibility
/// 2(2a+1) does not divide a(2a-1)+1 and N_low - N_suff == 1/(2(2a+1)) < 1.
bool verify_alpha_beta_coincidence(unsigned alpha);

}  // namespace picalb
