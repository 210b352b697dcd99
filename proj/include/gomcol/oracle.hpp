#pragma once

#include <cstddef>
#include <vector>

#include "gomcol/instance.hpp"
#include "gomcol/rational.hpp"

namespace gomcol {

/// Coordinate range certain to contain every integer-feasible point.
/// lower[i] > upper[i] is legitimate and means no integer value of
/// coordinate i fits (e.g. a coordinate pinned to 1/2), hence no integer
/// point at all.
struct IntegerBox {
    ZVec lower;
    ZVec upper;

    bool empty_range() const {
        for (std::size_t i = 0; i < lower.size(); ++i)
            if (lower[i] > upper[i]) return true;
        return lower.empty();
    }

    Integer volume() const {
        if (empty_range()) return 0;
        Integer v = 1;
        for (std::size_t i = 0; i < lower.size(); ++i)
            v *= upper[i] - lower[i] + 1;
        return v;
    }
};

struct BoxResult {
    enum class Status { ok, unbounded, empty };
    Status status = Status::empty;
    IntegerBox box;              ///< set when ok
    std::size_t coordinate = 0;  ///< witness when unbounded
    int direction = 0;
};

/// Ceil/floor of the exact coordinate bounds of the relaxation, via 2m
/// continuous solves. Distinguishes an unbounded and an empty relaxation.
BoxResult bounding_box(const DualFormInstance& inst);

struct BruteForceResult {
    bool feasible = false;
    Integer z_star;             ///< set when feasible
    std::vector<ZVec> argmax;   ///< all optimal points, ascending lex order
};

/// Ground truth by enumeration: walks every integer point of the box in
/// ascending lexicographic order, keeps those satisfying y'A <= c', and
/// returns the maximum of y'b with the full set of maximizers. The lex
/// maximum optimizer is argmax.back(). Throws TooLargeError when the box
/// volume exceeds max_points.
BruteForceResult brute_force_optimum(const DualFormInstance& inst,
                                     const IntegerBox& box,
                                     const Integer& max_points = Integer(10000000));

}  // namespace gomcol
