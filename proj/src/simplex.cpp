#include "gomcol/simplex.hpp"

#include <utility>

namespace gomcol {

SimplexState::SimplexState(const DualFormInstance& inst, RhsMode mode,
                           std::vector<std::size_t> basis)
    : inst_(&inst), mode_(mode), basis_(std::move(basis)) {
    if (basis_.size() != inst.m)
        throw UsageError("basis must hold exactly m column indices");
    std::vector<char> seen(inst.n(), 0);
    for (std::size_t j : basis_) {
        if (j >= inst.n()) throw UsageError("basis column index out of range");
        if (seen[j]) throw UsageError("duplicate column in basis");
        seen[j] = 1;
    }
    refresh();
}

void SimplexState::refresh() {
    const std::size_t m = inst_->m;
    QMatrix a_b(m, m);
    for (std::size_t pos = 0; pos < m; ++pos)
        for (std::size_t k = 0; k < m; ++k)
            a_b.at(k, pos) = Rational(inst_->columns[basis_[pos]][k]);
    inv_ = a_b.inverse();
    recache();
}

void SimplexState::recache() {
    const std::size_t m = inst_->m;
    QVec cb(m);
    for (std::size_t pos = 0; pos < m; ++pos)
        cb[pos] = Rational(inst_->c[basis_[pos]]);
    y_ = inv_.tmul(cb);
    x_plain_ = mode_ == RhsMode::plain ? inv_.mul(inst_->b) : QVec();
}

const QVec& SimplexState::basic_values() const {
    if (mode_ != RhsMode::plain)
        throw UsageError("basic_values: plain mode only");
    return x_plain_;
}

LexValue SimplexState::basic_lex(std::size_t pos) const {
    if (mode_ != RhsMode::lex) throw UsageError("basic_lex: lex mode only");
    if (pos >= inst_->m) throw UsageError("basic_lex: position out of range");
    return LexValue(inv_.row(pos));
}

bool SimplexState::is_basic(std::size_t col) const {
    for (std::size_t j : basis_)
        if (j == col) return true;
    return false;
}

std::optional<std::size_t> SimplexState::basis_position(std::size_t col) const {
    for (std::size_t pos = 0; pos < basis_.size(); ++pos)
        if (basis_[pos] == col) return pos;
    return std::nullopt;
}

Rational SimplexState::reduced_cost(std::size_t col) const {
    if (col >= inst_->n()) throw UsageError("reduced_cost: column out of range");
    return Rational(inst_->c[col]) - dot(y_, inst_->columns[col]);
}

QVec SimplexState::direction(std::size_t col) const {
    if (col >= inst_->n()) throw UsageError("direction: column out of range");
    return inv_.mul(inst_->columns[col]);
}

Rational SimplexState::objective() const { return dot(y_, inst_->b); }

bool SimplexState::feasible() const {
    const std::size_t m = inst_->m;
    if (mode_ == RhsMode::plain) {
        for (const Rational& v : x_plain_)
            if (v.sign() < 0) return false;
        return true;
    }
    for (std::size_t pos = 0; pos < m; ++pos) {
        int s = 0;
        for (std::size_t c = 0; c < m; ++c) {
            s = inv_.at(pos, c).sign();
            if (s != 0) break;
        }
        if (s <= 0) return false;
    }
    return true;
}

void SimplexState::apply_pivot(std::size_t enter_col, std::size_t leave_pos) {
    if (enter_col >= inst_->n())
        throw UsageError("apply_pivot: column out of range");
    if (leave_pos >= basis_.size())
        throw UsageError("apply_pivot: position out of range");
    if (is_basic(enter_col))
        throw UsageError("apply_pivot: column is already basic");
    const QVec d = direction(enter_col);
    const Rational piv = d[leave_pos];
    if (piv.is_zero()) throw PivotError("apply_pivot: zero pivot element");
    const std::size_t m = inst_->m;
    for (std::size_t c = 0; c < m; ++c) inv_.at(leave_pos, c) /= piv;
    for (std::size_t r = 0; r < m; ++r) {
        if (r == leave_pos || d[r].is_zero()) continue;
        for (std::size_t c = 0; c < m; ++c)
            inv_.at(r, c) -= d[r] * inv_.at(leave_pos, c);
    }
    basis_[leave_pos] = enter_col;
    ++counters_.pivots;
    recache();
}

void SimplexState::verify_inverse() {
    const std::size_t m = inst_->m;
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < m; ++j) {
            Rational s;
            for (std::size_t k = 0; k < m; ++k)
                s += inv_.at(r, k) * Rational(inst_->columns[basis_[j]][k]);
            if (s != Rational(r == j ? 1 : 0))
                throw InvariantError("basis inverse check failed");
        }
    }
    ++counters_.inverse_checks;
}

SimplexState factor_basis(const DualFormInstance& inst,
                          std::vector<std::size_t> basis, RhsMode mode) {
    return SimplexState(inst, mode, std::move(basis));
}

std::optional<std::size_t> choose_entering(const SimplexState& state,
                                           EnteringRule rule) {
    const std::size_t n = state.instance().n();
    std::optional<std::size_t> best;
    Rational best_rc;
    for (std::size_t j = 0; j < n; ++j) {
        if (state.is_basic(j)) continue;
        const Rational rc = state.reduced_cost(j);
        if (rc.sign() >= 0) continue;
        if (rule == EnteringRule::bland) return j;
        if (!best || rc < best_rc) {
            best = j;
            best_rc = rc;
        }
    }
    return best;
}

namespace {

// sign of row_a/d_a - row_b/d_b in lex order, for d_a, d_b > 0, computed by
// cross-multiplication.
int lex_quotient_compare(const QMatrix& inv, std::size_t row_a,
                         const Rational& d_a, std::size_t row_b,
                         const Rational& d_b) {
    for (std::size_t c = 0; c < inv.cols(); ++c) {
        const Rational lhs = inv.at(row_a, c) * d_b;
        const Rational rhs = inv.at(row_b, c) * d_a;
        if (lhs < rhs) return -1;
        if (rhs < lhs) return 1;
    }
    return 0;
}

}  // namespace

RatioOutcome ratio_test(SimplexState& state, const QVec& direction,
                        EnteringRule rule) {
    const std::size_t m = state.m();
    if (direction.size() != m)
        throw UsageError("ratio_test: direction length mismatch");

    if (state.mode() == RhsMode::plain) {
        const QVec& x = state.basic_values();
        std::optional<std::size_t> best;
        Rational best_ratio;
        for (std::size_t k = 0; k < m; ++k) {
            if (direction[k].sign() <= 0) continue;
            const Rational ratio = x[k] / direction[k];
            if (!best || ratio < best_ratio) {
                best = k;
                best_ratio = ratio;
            } else if (ratio == best_ratio && rule == EnteringRule::bland &&
                       state.basis()[k] < state.basis()[*best]) {
                best = k;
            }
        }
        if (!best) return {};
        return {true, *best};
    }

    std::optional<std::size_t> best;
    std::size_t tied = 1;
    for (std::size_t k = 0; k < m; ++k) {
        if (direction[k].sign() <= 0) continue;
        if (!best) {
            best = k;
            tied = 1;
            continue;
        }
        const int cmp = lex_quotient_compare(state.inverse(), k, direction[k],
                                             *best, direction[*best]);
        if (cmp < 0) {
            best = k;
            tied = 1;
        } else if (cmp == 0) {
            ++tied;
        }
    }
    if (!best) return {};
    ++state.counters().ratio_uniqueness_checks;
    if (tied > 1)
        throw InvariantError(
            "lex ratio test tie: inverse rows cannot be proportional");
    return {true, *best};
}

SimplexStatus primal_simplex(SimplexState& state, const SimplexOptions& opts,
                             PivotBudget& budget, const PivotCallback& cb,
                             bool in_phase_one) {
    if (!state.feasible())
        throw ContractViolation("primal simplex started from an infeasible basis");
    std::size_t since_factor = 0;
    for (;;) {
        const auto enter = choose_entering(state, opts.entering);
        if (!enter) {
            if (!state.feasible())
                throw InvariantError("terminal basis lost feasibility");
            return SimplexStatus::optimal;
        }
        const QVec d = state.direction(*enter);
        const RatioOutcome ro = ratio_test(state, d, opts.entering);
        if (!ro.bounded) return SimplexStatus::unbounded;
        if (budget.used >= budget.cap) return SimplexStatus::limit;

        PivotInfo info;
        info.enter_col = *enter;
        info.leave_pos = ro.leave_pos;
        info.leave_col = state.basis()[ro.leave_pos];
        info.pivot_element = d[ro.leave_pos];
        info.dual_before = state.dual();
        info.inv_row_before = state.inverse().row(ro.leave_pos);
        info.in_phase_one = in_phase_one;

        state.apply_pivot(*enter, ro.leave_pos);
        ++budget.used;
        ++since_factor;

        if (opts.verify_every != 0 &&
            state.counters().pivots % opts.verify_every == 0)
            state.verify_inverse();
        if (opts.refactor_every != 0 && since_factor >= opts.refactor_every) {
            state.refresh();
            since_factor = 0;
        }
        if (state.mode() == RhsMode::lex) {
            if (lex_compare(state.dual(), info.dual_before) !=
                std::strong_ordering::less)
                throw InvariantError(
                    "pivot did not decrease the dual vector lexicographically");
            ++state.counters().lex_decrease_checks;
        }
        if (cb) cb(state, info);
    }
}

namespace {

// Column index usable as the basis column of row k, if the column is a
// signed unit vector compatible with the mode and the sign of b_k.
bool usable_unit(const DualFormInstance& inst, RhsMode mode, std::size_t col,
                 std::size_t& row_out) {
    std::size_t nonzero = 0, where = 0;
    for (std::size_t k = 0; k < inst.m; ++k) {
        if (sgn(inst.columns[col][k]) == 0) continue;
        ++nonzero;
        where = k;
    }
    if (nonzero != 1) return false;
    const Integer& v = inst.columns[col][where];
    if (v == 1) {
        if (mode == RhsMode::plain && sgn(inst.b[where]) < 0) return false;
        row_out = where;
        return true;
    }
    if (v == -1 && mode == RhsMode::plain && sgn(inst.b[where]) <= 0) {
        row_out = where;
        return true;
    }
    return false;
}

}  // namespace

PhaseOneResult phase_one(const DualFormInstance& inst, RhsMode mode,
                         const SimplexOptions& opts, PivotBudget& budget,
                         const PivotCallback& cb) {
    const std::size_t m = inst.m;
    const std::size_t n = inst.n();
    PhaseOneResult out;

    // A full set of unit columns is a ready feasible basis: no pivots.
    {
        std::vector<std::optional<std::size_t>> unit(m);
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t row;
            if (usable_unit(inst, mode, j, row) && !unit[row]) unit[row] = j;
        }
        bool complete = true;
        for (std::size_t k = 0; k < m; ++k)
            if (!unit[k]) complete = false;
        if (complete) {
            std::vector<std::size_t> basis(m);
            for (std::size_t k = 0; k < m; ++k) basis[k] = *unit[k];
            out.state.emplace(inst, mode, std::move(basis));
            if (!out.state->feasible())
                throw InvariantError("unit basis is not feasible");
            out.feasible = true;
            return out;
        }
    }

    // Auxiliary problem: real columns at cost 0 plus one artificial unit
    // column per row at cost 1; minimizing drives the artificial total to
    // zero exactly when the instance is feasible.
    DualFormInstance aug;
    aug.m = m;
    aug.columns = inst.columns;
    aug.b = inst.b;
    aug.n_original = n;
    aug.name = inst.name;
    aug.c.assign(n, Integer(0));
    std::vector<std::size_t> start(m);
    for (std::size_t k = 0; k < m; ++k) {
        ZVec col(m, Integer(0));
        col[k] = (mode == RhsMode::plain && sgn(inst.b[k]) < 0) ? -1 : 1;
        aug.columns.push_back(col);
        aug.c.push_back(1);
        start[k] = n + k;
    }

    SimplexState aux(aug, mode, std::move(start));
    const SimplexStatus st = primal_simplex(aux, opts, budget, cb, true);
    out.counters = aux.counters();
    if (st == SimplexStatus::limit) {
        out.limit = true;
        return out;
    }
    if (st == SimplexStatus::unbounded)
        throw InvariantError("auxiliary objective is unbounded below");

    if (mode == RhsMode::lex) {
        // No basic variable sits at level zero under the eps RHS, so a
        // basic artificial carries real mass: infeasible.
        for (std::size_t pos = 0; pos < m; ++pos)
            if (aux.basis()[pos] >= n) return out;
    } else {
        if (aux.objective().sign() > 0) return out;
        // Feasible, but artificials may remain basic at level zero; swap
        // each for a real column (full row rank guarantees a nonzero entry).
        for (std::size_t pos = 0; pos < m; ++pos) {
            if (aux.basis()[pos] < n) continue;
            bool swapped = false;
            for (std::size_t j = 0; j < n && !swapped; ++j) {
                if (aux.is_basic(j)) continue;
                const QVec d = aux.direction(j);
                if (d[pos].is_zero()) continue;
                if (budget.used >= budget.cap) {
                    out.limit = true;
                    out.counters = aux.counters();
                    return out;
                }
                PivotInfo info;
                info.enter_col = j;
                info.leave_pos = pos;
                info.leave_col = aux.basis()[pos];
                info.pivot_element = d[pos];
                info.dual_before = aux.dual();
                info.inv_row_before = aux.inverse().row(pos);
                info.in_phase_one = true;
                aux.apply_pivot(j, pos);
                ++budget.used;
                if (opts.verify_every != 0) aux.verify_inverse();
                if (cb) cb(aux, info);
                swapped = true;
            }
            if (!swapped)
                throw InvariantError("artificial cannot leave a full-rank basis");
        }
        out.counters = aux.counters();
    }

    out.state.emplace(inst, mode, aux.basis());
    if (!out.state->feasible())
        throw InvariantError("phase one produced an infeasible basis");
    out.feasible = true;
    return out;
}

}  // namespace gomcol
