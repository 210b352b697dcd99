#include "gomcol/oracle.hpp"

#include "gomcol/driver.hpp"
#include "gomcol/errors.hpp"

namespace gomcol {

BoxResult bounding_box(const DualFormInstance& inst) {
    BoxResult out;
    const BoundednessReport br = check_boundedness(inst);
    if (br.outcome == BoundednessReport::Outcome::relaxation_empty) {
        out.status = BoxResult::Status::empty;
        return out;
    }
    if (br.outcome == BoundednessReport::Outcome::unbounded) {
        out.status = BoxResult::Status::unbounded;
        out.coordinate = br.coordinate;
        out.direction = br.direction;
        return out;
    }
    out.status = BoxResult::Status::ok;
    out.box.lower.resize(inst.m);
    out.box.upper.resize(inst.m);
    for (std::size_t i = 0; i < inst.m; ++i) {
        out.box.lower[i] = br.lower[i].ceil();
        out.box.upper[i] = br.upper[i].floor();
    }
    return out;
}

BruteForceResult brute_force_optimum(const DualFormInstance& inst,
                                     const IntegerBox& box,
                                     const Integer& max_points) {
    if (box.lower.size() != inst.m || box.upper.size() != inst.m)
        throw UsageError("brute_force_optimum: box dimension mismatch");
    BruteForceResult out;
    if (box.empty_range()) return out;
    if (box.volume() > max_points)
        throw TooLargeError("enumeration box holds " + box.volume().get_str() +
                            " points, above the cap of " + max_points.get_str());

    // Odometer over the box, most significant coordinate first, so points
    // arrive in ascending lexicographic order.
    ZVec y = box.lower;
    const std::size_t m = inst.m;
    for (;;) {
        bool ok = true;
        for (std::size_t j = 0; j < inst.n() && ok; ++j)
            if (idot(y, inst.columns[j]) > inst.c[j]) ok = false;
        if (ok) {
            const Integer z = idot(y, inst.b);
            if (!out.feasible || z > out.z_star) {
                out.feasible = true;
                out.z_star = z;
                out.argmax.clear();
                out.argmax.push_back(y);
            } else if (z == out.z_star) {
                out.argmax.push_back(y);
            }
        }
        std::size_t pos = m;
        while (pos > 0) {
            --pos;
            if (y[pos] < box.upper[pos]) {
                ++y[pos];
                for (std::size_t k = pos + 1; k < m; ++k) y[k] = box.lower[k];
                break;
            }
            if (pos == 0) return out;
        }
    }
}

}  // namespace gomcol
