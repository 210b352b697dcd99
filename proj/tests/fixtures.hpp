#pragma once

#include "gomcol/instance.hpp"

namespace gomcol {

// Worked example used throughout the suite: max 26 y1 + 19 y2 subject to
// five integer constraints. LP optimum (51/2, -21/2), integer optimum
// (25, -10) with value 460.
inline DualFormInstance example3() {
    return make_instance(2,
                         {{7, 5}, {8, 6}, {-1, -1}, {1, 2}, {3, 1}},
                         {26, 19}, {126, 141, -10, 5, 67}, "example3");
}

}  // namespace gomcol
