#include "picalb/semigroups.hpp"

#include "picalb/errors.hpp"

#include <algorithm>
#include <numeric>

namespace picalb {

NumericalSemigroup::NumericalSemigroup(std::vector<std::uint64_t> generators) : generators_(std::move(generators)) {
    if (generators_.empty()) throw Error(ErrorCode::InvalidArgument, "semigroup needs at least one generator");
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
    if (generators_.front() == 0) throw Error(ErrorCode::InvalidArgument, "semigroup generators must be positive");
    for (auto g : generators_) gcd_ = std::gcd(gcd_, g);
}

bool NumericalSemigroup::is_member(std::uint64_t n) const {
    if (n == 0) return true;
    if (n % gcd_ != 0) return false;
    std::vector<bool> member(n + 1, false);
    member[0] = true;
    for (std::uint64_t k = 1; k <= n; ++k) {
        for (auto g : generators_) {
            if (g > k) break;
            if (member[k - g]) {
                member[k] = true;
                break;
            }
        }
    }
    return member[n];
}

std::vector<std::uint64_t> NumericalSemigroup::gaps() const {
    if (!cofinite()) {
        throw Error(ErrorCode::NonCofinite, "generators have gcd " + std::to_string(gcd_) + " > 1");
    }
    // Once multiplicity() consecutive integers are members, every larger
    // integer is reached by adding the smallest generator.
    const std::uint64_t run_needed = multiplicity();
    std::vector<bool> member{true};
    std::vector<std::uint64_t> out;
    std::uint64_t run = 1;
    for (std::uint64_t k = 1; run < run_needed; ++k) {
        bool in = false;
        for (auto g : generators_) {
            if (g > k) break;
            if (member[k - g]) {
                in = true;
                break;
            }
        }
        member.push_back(in);
        if (in) {
            ++run;
        } else {
            run = 0;
            out.push_back(k);
        }
    }
    return out;
}

std::uint64_t NumericalSemigroup::conductor() const {
    const auto g = gaps();
    return g.empty() ? 0 : g.back() + 1;
}

}  // namespace picalb
