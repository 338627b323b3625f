#pragma once

#include "picalb/jets.hpp"
#include "picalb/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace picalb {

/// Formal branches of a curve through one point, each given by a polynomial
/// parametrization t -> (x_1(t), ..., x_r(t)) with x_i(0) = 0.
///
/// Coordinates are exact polynomials (coefficient i is the t^i coefficient),
/// so jets of any truncation order can be produced from them.
class SingularPointData {
public:
    using Coordinate = std::vector<Rational>;
    using Branch = std::vector<Coordinate>;

    /// Throws Error(InvalidArgument) when there are no branches, branches have
    /// different coordinate counts, or a coordinate has a nonzero constant term.
    SingularPointData(std::string label, std::vector<Branch> branches);

    /// Unibranch point t -> (t^e_1, ..., t^e_r).
    static SingularPointData monomial(std::string label, const std::vector<std::uint64_t>& exponents);

    const std::string& label() const noexcept { return label_; }
    std::size_t branch_count() const noexcept { return branches_.size(); }
    std::size_t coordinate_count() const noexcept { return branches_.front().size(); }
    const std::vector<Branch>& branches() const noexcept { return branches_; }

    Jet coordinate_jet(std::size_t branch, std::size_t coordinate, std::size_t order) const;
    /// Coordinate i as an element of the product of the branch rings.
    std::vector<BranchJetTuple> coordinate_tuples(std::size_t order) const;

    /// Exponents of the nonzero coordinates when the point is unibranch and
    /// every nonzero coordinate is a single monomial; nullopt otherwise.
    std::optional<std::vector<std::uint64_t>> monomial_exponents() const;

private:
    std::string label_;
    std::vector<Branch> branches_;
};

enum class PointKind { Smooth, Ordinary, General };

struct PointClass {
    PointKind kind = PointKind::Smooth;
    std::size_t branches = 1;

    friend bool operator==(const PointClass&, const PointClass&) = default;
};

/// "smooth", "ordinary-<m>" or "general-<m>".
std::string to_string(const PointClass& c);

/// Smooth: one branch with a coordinate of valuation 1. Ordinary(m): m >= 2
/// smooth branches whose tangent vectors are linearly independent. General otherwise.
PointClass classify_point(const SingularPointData& p);
/// Same, reading only the jets of order `truncation`; throws
/// Error(InsufficientTruncation) when truncation < 2.
PointClass classify_point(const SingularPointData& p, std::size_t truncation);

/// Graded pieces of prod_q m_q / m_{C,p}, filtered by t-order (minimum over branches).
struct GradedQuotient {
    std::size_t truncation = 0;
    std::size_t total = 0;
    std::map<std::uint64_t, std::uint64_t> dims;  // pole order -> dimension, zero entries omitted
};

/// Single evaluation at truncation M >= 2, with no stability check.
GradedQuotient graded_quotient(const SingularPointData& p, std::size_t truncation);

/// Generators of the image of m_{C,p} in the jet space of order M: all
/// nonzero products of coordinate tuples.
std::vector<BranchJetTuple> maximal_ideal_image(const SingularPointData& p, std::size_t truncation);

struct JetDimension {
    std::size_t dimension = 0;
    std::size_t truncation = 0;
    bool stable = false;
};

/// dim prod_q m_q / m_{C,p} at truncation M, certified by agreement at M, M+1 and M+2.
/// Throws Error(UnstableTruncation) if the three disagree.
JetDimension unipotent_dim_jets(const SingularPointData& p, std::size_t truncation);

/// Gap count of the semigroup generated by the coordinate exponents.
/// Throws Error(NotMonomialUnibranch) or Error(NonCofinite).
std::size_t unipotent_dim_semigroup(const SingularPointData& p);

/// Default truncation. On the monomial path (when `use_semigroup`) this is
/// 2*c + 2 with c the semigroup conductor. Otherwise c is read off the jet
/// image once degrees [c, M) are full for some M >= c + k, where k is the
/// largest minimal coordinate order over the branches; the result is 2*c + k + 2.
std::size_t select_truncation(const SingularPointData& p, bool use_semigroup = true);

enum class DimensionMethod { Auto, Semigroup, Jets };

struct ValuationProfile {
    std::map<std::uint64_t, std::uint64_t> dims;  // pole order nu -> dimension >= 1
    /// Set when the per-order split comes from the valuation filtration of a
    /// multibranch jets computation rather than from a gap set.
    bool extrapolated = false;

    std::uint64_t total() const;
    std::vector<std::uint64_t> pole_orders() const;
};

/// Everything computed for one point.
struct LocalAnalysis {
    PointClass point_class;
    std::size_t unipotent_dim = 0;
    DimensionMethod method_used = DimensionMethod::Semigroup;
    std::optional<JetDimension> jets;  // present when the jets path ran
    ValuationProfile profile;
};

/// Auto uses the semigroup path for monomial unibranch data and the jets path
/// otherwise. `truncation` overrides the automatic choice on the jets path.
LocalAnalysis analyze_point(const SingularPointData& p, DimensionMethod method = DimensionMethod::Auto,
                            std::optional<std::size_t> truncation = std::nullopt);

inline ValuationProfile valuation_profile(const SingularPointData& p,
                                          DimensionMethod method = DimensionMethod::Auto) {
    return analyze_point(p, method).profile;
}

std::string to_string(DimensionMethod m);

}  // namespace picalb
