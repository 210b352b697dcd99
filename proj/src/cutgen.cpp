#include "gomcol/cutgen.hpp"

#include "gomcol/errors.hpp"

namespace gomcol {

ZVec minimal_shift(const QVec& inv_col) {
    ZVec r(inv_col.size());
    for (std::size_t k = 0; k < inv_col.size(); ++k) r[k] = -inv_col[k].floor();
    return r;
}

namespace {

CutColumn build_cut(const SimplexState& state, std::size_t source_row,
                    ZVec shift, bool minimal) {
    const DualFormInstance& inst = state.instance();
    const std::size_t m = inst.m;
    if (source_row >= m) throw UsageError("derive_cut: row index out of range");
    const QVec& y = state.dual();
    if (y[source_row].is_integer())
        throw NotFractionalError("derive_cut: dual coordinate " +
                                 std::to_string(source_row) + " is integer");
    const QVec h = state.inverse().col(source_row);
    if (shift.size() != m) throw UsageError("derive_cut: shift length mismatch");
    for (std::size_t k = 0; k < m; ++k) {
        const Integer slack = shift[k] + h[k].floor();
        if (sgn(slack) < 0)
            throw InvalidShiftError("derive_cut: shift component " +
                                    std::to_string(k) +
                                    " is below the validity bound");
    }

    QVec w(m);
    for (std::size_t k = 0; k < m; ++k) {
        w[k] = h[k] + Rational(shift[k]);
        if (w[k].sign() < 0) throw InvariantError("cut witness went negative");
        if (minimal && !(w[k] < Rational(1)))
            throw InvariantError("minimal-shift witness reached one");
    }

    ZVec column(m, Integer(0));
    column[source_row] = 1;
    for (std::size_t pos = 0; pos < m; ++pos) {
        if (sgn(shift[pos]) == 0) continue;
        const ZVec& basic = inst.columns[state.basis()[pos]];
        for (std::size_t k = 0; k < m; ++k) column[k] += basic[k] * shift[pos];
    }

    CutColumn cut;
    cut.source_row = source_row;
    cut.shift = std::move(shift);
    cut.witness = std::move(w);
    cut.dual_at_derivation = y;
    cut.column = std::move(column);

    const Rational value = dot(y, cut.column);
    if (value.is_integer())
        throw InvariantError("cut value y'column came out integer");
    cut.cost = value.floor();
    const Rational rc = Rational(cut.cost) - value;
    if (!(Rational(-1) < rc && rc < Rational(0)))
        throw InvariantError("cut reduced cost escaped (-1,0)");
    return cut;
}

}  // namespace

CutColumn derive_cut(const SimplexState& state, std::size_t source_row) {
    if (source_row >= state.m())
        throw UsageError("derive_cut: row index out of range");
    return build_cut(state, source_row,
                     minimal_shift(state.inverse().col(source_row)), true);
}

CutColumn derive_cut(const SimplexState& state, std::size_t source_row,
                     const ZVec& shift) {
    return build_cut(state, source_row, shift, false);
}

CutInequality as_inequality(const CutColumn& cut) {
    return {cut.column, cut.cost};
}

Rational evaluate(const CutInequality& ineq, const QVec& y) {
    return dot(y, ineq.coeffs);
}

std::string format_inequality(const CutInequality& ineq,
                              std::size_t first_var_number) {
    std::string s;
    for (std::size_t i = 0; i < ineq.coeffs.size(); ++i) {
        const Integer& a = ineq.coeffs[i];
        if (sgn(a) == 0) continue;
        if (s.empty()) {
            if (sgn(a) < 0) s += '-';
        } else {
            s += sgn(a) < 0 ? " - " : " + ";
        }
        const Integer mag = abs(a);
        if (mag != 1) {
            s += mag.get_str();
            s += ' ';
        }
        s += 'y';
        s += std::to_string(first_var_number + i);
    }
    if (s.empty()) s = "0";
    s += " <= ";
    s += ineq.rhs.get_str();
    return s;
}

bool cut_satisfied(const CutColumn& cut, const ZVec& y) {
    return idot(y, cut.column) <= cut.cost;
}

}  // namespace gomcol
