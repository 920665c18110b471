#pragma once

#include <vector>

#include "curveh1/rational.hpp"

namespace curveh1 {

/// Pivot columns of an echelon basis of the row space, by fraction-free
/// (Bareiss) Gaussian elimination over the integers after clearing
/// denominators. Columns are processed left to right, so with columns sorted
/// by descending degree the pivot set localizes the row space degree by
/// degree.
inline std::vector<std::size_t> echelon_pivot_columns(
    const std::vector<std::vector<Rational>>& rows_q) {
    std::vector<std::vector<Integer>> rows;
    rows.reserve(rows_q.size());
    std::size_t ncols = 0;
    for (const auto& r : rows_q) {
        ncols = std::max(ncols, r.size());
        Integer lcm = 1;
        for (const auto& c : r) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        std::vector<Integer> z(r.size());
        bool nonzero = false;
        for (std::size_t i = 0; i < r.size(); ++i) {
            Rational s = r[i] * lcm;
            z[i] = s.get_num();
            nonzero = nonzero || z[i] != 0;
        }
        if (nonzero) rows.push_back(std::move(z));
    }
    for (auto& r : rows) r.resize(ncols, Integer(0));

    std::vector<std::size_t> pivots;
    std::vector<bool> done(rows.size(), false);
    Integer prev = 1;
    for (std::size_t col = 0; col < ncols; ++col) {
        std::size_t piv = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!done[i] && rows[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv == rows.size()) continue;
        pivots.push_back(col);
        done[piv] = true;
        const Integer p = rows[piv][col];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (done[i]) continue;
            const Integer f = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j) {
                Integer t = p * rows[i][j] - f * rows[piv][j];
                mpz_divexact(rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = p;
    }
    return pivots;
}

}  // namespace curveh1
