#include "gomcol/instance.hpp"

#include <utility>

#include "gomcol/errors.hpp"
#include "gomcol/matrix.hpp"

namespace gomcol {

DualFormInstance make_instance(std::size_t m, std::vector<ZVec> columns,
                               ZVec b, ZVec c, std::string name) {
    if (m == 0) throw DimensionError("instance: m must be positive");
    if (columns.empty()) throw DimensionError("instance: no columns");
    for (std::size_t j = 0; j < columns.size(); ++j)
        if (columns[j].size() != m)
            throw DimensionError("instance: column " + std::to_string(j + 1) +
                                 " has length " +
                                 std::to_string(columns[j].size()) +
                                 ", expected m = " + std::to_string(m));
    if (b.size() != m)
        throw DimensionError("instance: b has length " +
                             std::to_string(b.size()) + ", expected m = " +
                             std::to_string(m));
    if (c.size() != columns.size())
        throw DimensionError("instance: c has length " +
                             std::to_string(c.size()) + ", expected n = " +
                             std::to_string(columns.size()));

    QMatrix a(m, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t k = 0; k < m; ++k) a.at(k, j) = Rational(columns[j][k]);
    if (a.rank() != m) throw RankError("instance: A does not have full row rank");

    DualFormInstance inst;
    inst.m = m;
    inst.columns = std::move(columns);
    inst.b = std::move(b);
    inst.c = std::move(c);
    inst.n_original = inst.columns.size();
    inst.name = std::move(name);
    return inst;
}

void append_column(DualFormInstance& inst, const ZVec& column,
                   const Integer& cost) {
    if (column.size() != inst.m)
        throw DimensionError("append_column: column has length " +
                             std::to_string(column.size()) + ", expected m = " +
                             std::to_string(inst.m));
    inst.columns.push_back(column);
    inst.c.push_back(cost);
}

}  // namespace gomcol
