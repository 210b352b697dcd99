#pragma once

#include <cstddef>
#include <string>

#include "gomcol/rational.hpp"
#include "gomcol/simplex.hpp"

namespace gomcol {

/// A cut derived from a fractional dual coordinate, stored as a primal
/// column. With y the dual vector at derivation time and H the basis
/// inverse, the construction picks an integer shift vector r, sets
/// column := e_{source_row} + A_basis * r and cost := floor(y' column).
/// The inequality y' column <= cost then holds for every integer-feasible
/// y, while the derivation-time y violates it by exactly frac(y' column),
/// so the column prices out with reduced cost in (-1, 0).
struct CutColumn {
    ZVec column;                  ///< integer entries, length m
    Integer cost;                 ///< floor(y' column)
    std::size_t source_row = 0;   ///< fractional dual coordinate (0-based)
    ZVec shift;                   ///< r, indexed by basis position
    QVec witness;                 ///< H column source_row + shift, >= 0
    QVec dual_at_derivation;      ///< y snapshot
};

/// Componentwise -floor of the inverse column: the smallest valid shift.
/// The residual witness h + shift then lies in [0,1) componentwise, which
/// makes the resulting cut dominate the cut of any larger shift.
ZVec minimal_shift(const QVec& inv_col);

/// Derives the minimal-shift cut for the given fractional dual coordinate.
/// Throws NotFractionalError when y[source_row] is integer.
CutColumn derive_cut(const SimplexState& state, std::size_t source_row);

/// Same with an explicit shift; each component must be at least the minimal
/// one (else InvalidShiftError).
CutColumn derive_cut(const SimplexState& state, std::size_t source_row,
                     const ZVec& shift);

/// The cut as a linear inequality coeffs' y <= rhs over the dual variables.
struct CutInequality {
    ZVec coeffs;
    Integer rhs;
};

CutInequality as_inequality(const CutColumn& cut);

/// Left-hand side value coeffs' y.
Rational evaluate(const CutInequality& ineq, const QVec& y);

/// "4 y1 + 3 y2 <= 70". Variable numbering starts at first_var_number.
std::string format_inequality(const CutInequality& ineq,
                              std::size_t first_var_number = 1);

/// Whether the integer point y satisfies the cut (y' column <= cost).
bool cut_satisfied(const CutColumn& cut, const ZVec& y);

}  // namespace gomcol
