#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace picalb {

/// Submonoid of (N, +) generated by finitely many positive integers.
///
/// Duplicate generators are dropped; redundant ones (already in the monoid
/// generated by the rest) are kept.
class NumericalSemigroup {
public:
    /// Throws Error(InvalidArgument) for an empty list or a zero generator.
    explicit NumericalSemigroup(std::vector<std::uint64_t> generators);

    std::span<const std::uint64_t> generators() const noexcept { return generators_; }
    std::uint64_t multiplicity() const noexcept { return generators_.front(); }
    std::uint64_t gcd() const noexcept { return gcd_; }
    /// True iff the complement in N is finite, i.e. gcd of the generators is 1.
    bool cofinite() const noexcept { return gcd_ == 1; }

    bool is_member(std::uint64_t n) const;

    /// Sorted gap set. Throws Error(NonCofinite) when gcd > 1.
    std::vector<std::uint64_t> gaps() const;
    /// Largest gap + 1, or 0 when there are no gaps. Throws Error(NonCofinite).
    std::uint64_t conductor() const;

private:
    std::vector<std::uint64_t> generators_;  // sorted, distinct
    std::uint64_t gcd_ = 0;
};

}  // namespace picalb
