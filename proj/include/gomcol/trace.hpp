#pragma once

#include <cstddef>
#include <string>

#include "gomcol/rational.hpp"

namespace gomcol {

/// One executed simplex pivot. Column and row indices are 0-based here;
/// sinks that face the user add 1.
struct PivotEvent {
    std::size_t number = 0;       ///< 1, 2, ... within the current solve
    std::size_t enter_col = 0;
    std::size_t leave_col = 0;
    std::size_t leave_pos = 0;
    bool in_phase_one = false;
    Rational objective;           ///< y'b after the pivot
    QVec dual;                    ///< y after the pivot
};

/// One appended cut column.
struct CutEvent {
    std::size_t number = 0;       ///< 1, 2, ... within the current solve
    std::string source_name;      ///< display name of the fractional coordinate
    std::size_t appended_col = 0; ///< column index the cut received
    ZVec column;
    Integer cost;
    std::string inequality;       ///< display form "4 y1 + 3 y2 <= 70"
};

/// Reaching a primal-optimal basis (before cut separation).
struct OptEvent {
    Rational objective;           ///< y'b at the optimum
    QVec dual;
    std::size_t pivots_so_far = 0;
    std::size_t cuts_so_far = 0;
};

/// Receiver for solver progress events. Default implementations ignore
/// everything, so sinks override only what they need.
class TraceSink {
public:
    virtual ~TraceSink() = default;
    virtual void on_pivot(const PivotEvent&) {}
    virtual void on_cut(const CutEvent&) {}
    virtual void on_optimum(const OptEvent&) {}
};

}  // namespace gomcol
