#pragma once

#include "picalb/rational.hpp"

#include <cstddef>
#include <vector>

namespace picalb {

using RationalRow = std::vector<Rational>;

/// Outcome of an exact Gauss-Jordan reduction.
struct RowReduction {
    std::size_t rank = 0;
    /// Pivot column of each basis row of the reduced row echelon form, ascending.
    std::vector<std::size_t> pivot_columns;
};

/// Exact Gauss-Jordan elimination over Q.
///
/// Columns are swept left to right; among candidate rows the pivot with the
/// smallest denominator (then smallest numerator) is chosen, which keeps
/// intermediate entries small. The pivot columns are those of the reduced
/// row echelon form and so do not depend on the pivot rule.
///
/// All rows must have the same length; throws Error(ShapeMismatch) otherwise.
RowReduction reduce_rows(std::vector<RationalRow> rows);

inline std::size_t rational_rank(std::vector<RationalRow> rows) {
    return reduce_rows(std::move(rows)).rank;
}

}  // namespace picalb
