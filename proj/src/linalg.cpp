#include "picalb/linalg.hpp"

#include "picalb/errors.hpp"

#include <utility>

namespace picalb {

namespace {

// Ordering for the pivot heuristic: smaller denominators first, then smaller
// numerators in absolute value.
bool better_pivot(const Rational& a, const Rational& b) {
    const int den = cmp(a.get_den(), b.get_den());
    if (den != 0) return den < 0;
    return mpz_cmpabs(a.get_num_mpz_t(), b.get_num_mpz_t()) < 0;
}

}  // namespace

RowReduction reduce_rows(std::vector<RationalRow> rows) {
    RowReduction out;
    if (rows.empty()) return out;
    const std::size_t cols = rows.front().size();
    for (const auto& row : rows) {
        if (row.size() != cols) {
            throw Error(ErrorCode::ShapeMismatch, "rows of differing length in row reduction");
        }
    }

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t best = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (sgn(rows[r][col]) == 0) continue;
            if (best == rows.size() || better_pivot(rows[r][col], rows[best][col])) best = r;
        }
        if (best == rows.size()) continue;
        std::swap(rows[rank], rows[best]);

        RationalRow& pivot = rows[rank];
        const Rational inv = 1 / pivot[col];
        for (std::size_t c = col; c < cols; ++c) {
            if (sgn(pivot[c]) != 0) pivot[c] *= inv;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || sgn(rows[r][col]) == 0) continue;
            const Rational factor = rows[r][col];
            RationalRow& target = rows[r];
            for (std::size_t c = col; c < cols; ++c) {
                if (sgn(pivot[c]) != 0) target[c] -= factor * pivot[c];
            }
        }
        out.pivot_columns.push_back(col);
        ++rank;
    }
    out.rank = rank;
    return out;
}

}  // namespace picalb
