#pragma once

#include "picalb/linalg.hpp"
#include "picalb/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace picalb {

/// Truncated power series c_0 + c_1 t + ... + c_{M-1} t^{M-1} mod t^M over Q.
class Jet {
public:
    /// Coefficients indexed by exponent; the truncation order is coeffs.size() (must be > 0).
    explicit Jet(std::vector<Rational> coeffs);

    static Jet zero(std::size_t order);
    static Jet monomial(std::size_t exponent, std::size_t order, const Rational& coeff = 1);
    /// Polynomial given by `coeffs`, truncated or zero-padded to `order`.
    static Jet from_polynomial(std::span<const Rational> coeffs, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size(); }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    /// Index of the first nonzero coefficient, or nullopt if all stored
    /// coefficients vanish (the true valuation is then only known to be >= order()).
    std::optional<std::size_t> valuation() const;

    /// Same series at a lower truncation order.
    Jet truncated(std::size_t order) const;

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator*(const Rational& s, const Jet& a);
    friend bool operator==(const Jet& a, const Jet& b);

    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
};

inline Jet jet_mul(const Jet& a, const Jet& b) { return a * b; }
inline std::optional<std::size_t> jet_valuation(const Jet& a) { return a.valuation(); }

/// One jet per formal branch, all at the same truncation order.
class BranchJetTuple {
public:
    /// Throws Error(ShapeMismatch) if `branches` is empty or orders differ.
    explicit BranchJetTuple(std::vector<Jet> branches);

    std::size_t branch_count() const noexcept { return branches_.size(); }
    std::size_t order() const noexcept { return branches_.front().order(); }
    const Jet& branch(std::size_t i) const { return branches_[i]; }
    std::span<const Jet> branches() const noexcept { return branches_; }

    bool is_zero() const;
    /// Minimum valuation over the branches; nullopt if every branch is the zero jet.
    std::optional<std::size_t> valuation() const;

    /// Coefficient vector of length branch_count()*order(), degree-major:
    /// entry d*branch_count()+b is the t^d coefficient on branch b.
    RationalRow flatten() const;

    friend BranchJetTuple operator*(const BranchJetTuple& a, const BranchJetTuple& b);
    friend bool operator==(const BranchJetTuple& a, const BranchJetTuple& b) = default;

private:
    std::vector<Jet> branches_;
};

/// Exact rank over Q of the flattened tuples. Throws Error(ShapeMismatch) when
/// branch counts or truncation orders differ.
std::size_t span_dimension(std::span<const BranchJetTuple> vectors);

/// Reduced row echelon data of the flattened tuples; pivot columns use the
/// degree-major layout of BranchJetTuple::flatten.
RowReduction span_reduction(std::span<const BranchJetTuple> vectors);

}  // namespace picalb
