#pragma once

#include "picalb/model_io.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace picalb::cli {

/// Runs one command line (without the program name). Results go to `out` as
/// JSON (or a table with --format table), diagnostics to `err` as
/// {"error": ..., "detail": ...}. Returns 0 on success, 2 on validation
/// errors, 1 on internal failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct OracleCase {
    std::vector<std::uint64_t> exponents;
    std::size_t semigroup_dim = 0;
    std::size_t jets_dim = 0;
    std::size_t truncation = 0;
};

/// Seeded random monomial unibranch points with coprime exponents in
/// [1, max_exponent], 2 or 3 coordinates. Deterministic for a given seed.
std::vector<std::vector<std::uint64_t>> random_exponent_sets(std::size_t trials, std::uint64_t seed,
                                                             std::uint64_t max_exponent);

/// Compares the semigroup and jets paths on random_exponent_sets(...).
std::vector<OracleCase> run_oracle(std::size_t trials, std::uint64_t seed, std::uint64_t max_exponent);

Json gamma_row(unsigned alpha, DimensionMethod method, bool detail);
Json gysin_row(unsigned alpha, unsigned beta);

}  // namespace picalb::cli
