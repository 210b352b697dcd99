#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gomcol/rational.hpp"

namespace gomcol {

/// Integer program data in dual form:
///
///   maximize y'b  subject to  y'A <= c',  y integer, y free.
///
/// A is stored column major as integer vectors of length m; the same data
/// read column-wise is the standard form primal min c'x, Ax = b, x >= 0
/// that the simplex code actually solves. Columns appended by cut
/// generation keep A and c integral, so entries are Integer throughout.
struct DualFormInstance {
    std::size_t m = 0;               ///< rows of A (= dual dimension)
    std::vector<ZVec> columns;       ///< n columns, each of length m
    ZVec b;                          ///< length m
    ZVec c;                          ///< length n, c[j] is the cost of column j
    std::size_t n_original = 0;      ///< columns present before any append
    std::string name;

    std::size_t n() const { return columns.size(); }
};

/// Validates shapes and requires rank(A) = m over the rationals.
/// Throws DimensionError on shape mismatch, RankError on rank deficiency.
DualFormInstance make_instance(std::size_t m,
                               std::vector<ZVec> columns,
                               ZVec b,
                               ZVec c,
                               std::string name = "");

/// Appends one column with its cost. Length checked against m.
void append_column(DualFormInstance& inst, const ZVec& column, const Integer& cost);

}  // namespace gomcol
