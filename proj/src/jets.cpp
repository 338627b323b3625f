#include "picalb/jets.hpp"

#include "picalb/errors.hpp"

#include <algorithm>
#include <sstream>

namespace picalb {

Jet::Jet(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "jet truncation order must be positive");
}

Jet Jet::zero(std::size_t order) { return Jet(std::vector<Rational>(order)); }

Jet Jet::monomial(std::size_t exponent, std::size_t order, const Rational& coeff) {
    std::vector<Rational> c(order);
    if (exponent < order) c[exponent] = coeff;
    return Jet(std::move(c));
}

Jet Jet::from_polynomial(std::span<const Rational> coeffs, std::size_t order) {
    std::vector<Rational> c(order);
    std::copy_n(coeffs.begin(), std::min(order, coeffs.size()), c.begin());
    return Jet(std::move(c));
}

bool Jet::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

std::optional<std::size_t> Jet::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) return i;
    }
    return std::nullopt;
}

Jet Jet::truncated(std::size_t order) const {
    if (order == 0 || order > coeffs_.size()) {
        throw Error(ErrorCode::InsufficientTruncation, "cannot truncate a jet of order " +
                    std::to_string(coeffs_.size()) + " to order " + std::to_string(order));
    }
    return Jet(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order)));
}

Jet operator+(const Jet& a, const Jet& b) {
    const std::size_t m = std::min(a.order(), b.order());
    std::vector<Rational> c(m);
    for (std::size_t i = 0; i < m; ++i) c[i] = a[i] + b[i];
    return Jet(std::move(c));
}

Jet operator-(const Jet& a, const Jet& b) {
    const std::size_t m = std::min(a.order(), b.order());
    std::vector<Rational> c(m);
    for (std::size_t i = 0; i < m; ++i) c[i] = a[i] - b[i];
    return Jet(std::move(c));
}

Jet operator*(const Jet& a, const Jet& b) {
    const std::size_t m = std::min(a.order(), b.order());
    std::vector<Rational> c(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; i + j < m; ++j) {
            if (sgn(b[j]) != 0) c[i + j] += a[i] * b[j];
        }
    }
    return Jet(std::move(c));
}

Jet operator*(const Rational& s, const Jet& a) {
    std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : c) x *= s;
    return Jet(std::move(c));
}

bool operator==(const Jet& a, const Jet& b) {
    return a.order() == b.order() && std::equal(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin());
}

std::string Jet::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i].get_str();
        if (i > 0) os << "*t^" << i;
        first = false;
    }
    if (first) os << "0";
    os << " + O(t^" << coeffs_.size() << ")";
    return os.str();
}

BranchJetTuple::BranchJetTuple(std::vector<Jet> branches) : branches_(std::move(branches)) {
    if (branches_.empty()) throw Error(ErrorCode::ShapeMismatch, "branch tuple needs at least one branch");
    for (const auto& j : branches_) {
        if (j.order() != branches_.front().order()) {
            throw Error(ErrorCode::ShapeMismatch, "branch jets have differing truncation orders");
        }
    }
}

bool BranchJetTuple::is_zero() const {
    return std::all_of(branches_.begin(), branches_.end(), [](const Jet& j) { return j.is_zero(); });
}

std::optional<std::size_t> BranchJetTuple::valuation() const {
    std::optional<std::size_t> best;
    for (const auto& j : branches_) {
        const auto v = j.valuation();
        if (v && (!best || *v < *best)) best = v;
    }
    return best;
}

RationalRow BranchJetTuple::flatten() const {
    const std::size_t nb = branches_.size();
    RationalRow row(nb * order());
    for (std::size_t b = 0; b < nb; ++b) {
        for (std::size_t d = 0; d < order(); ++d) row[d * nb + b] = branches_[b][d];
    }
    return row;
}

BranchJetTuple operator*(const BranchJetTuple& a, const BranchJetTuple& b) {
    if (a.branch_count() != b.branch_count()) {
        throw Error(ErrorCode::ShapeMismatch, "branch counts differ in tuple product");
    }
    std::vector<Jet> out;
    out.reserve(a.branch_count());
    for (std::size_t i = 0; i < a.branch_count(); ++i) out.push_back(a.branch(i) * b.branch(i));
    return BranchJetTuple(std::move(out));
}

RowReduction span_reduction(std::span<const BranchJetTuple> vectors) {
    if (vectors.empty()) return {};
    const std::size_t nb = vectors.front().branch_count();
    const std::size_t order = vectors.front().order();
    std::vector<RationalRow> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.branch_count() != nb || v.order() != order) {
            throw Error(ErrorCode::ShapeMismatch, "span_dimension: tuples of mixed shape");
        }
        rows.push_back(v.flatten());
    }
    return reduce_rows(std::move(rows));
}

std::size_t span_dimension(std::span<const BranchJetTuple> vectors) {
    return span_reduction(vectors).rank;
}

}  // namespace picalb
