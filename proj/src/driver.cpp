#include "gomcol/driver.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "gomcol/errors.hpp"
#include "gomcol/lexvalue.hpp"

namespace gomcol {

LexifiedInstance lexify(const DualFormInstance& inst) {
    const std::size_t m = inst.m;
    std::vector<ZVec> cols;
    cols.reserve(inst.n() + 1);
    ZVec transfer(m + 1, Integer(0));
    transfer[0] = 1;
    for (std::size_t k = 0; k < m; ++k) transfer[k + 1] = -inst.b[k];
    cols.push_back(std::move(transfer));
    for (const ZVec& col : inst.columns) {
        ZVec lifted(m + 1, Integer(0));
        for (std::size_t k = 0; k < m; ++k) lifted[k + 1] = col[k];
        cols.push_back(std::move(lifted));
    }
    ZVec b(m + 1, Integer(0));
    b[0] = 1;
    ZVec c(inst.n() + 1, Integer(0));
    for (std::size_t j = 0; j < inst.n(); ++j) c[j + 1] = inst.c[j];
    return {inst,
            make_instance(m + 1, std::move(cols), std::move(b), std::move(c),
                          inst.name)};
}

std::vector<std::size_t> fractional_indices(const QVec& y) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!y[i].is_integer()) out.push_back(i);
    return out;
}

namespace {

std::size_t dynamic_cap(const SolveOptions& options,
                        const DualFormInstance& inst) {
    if (options.max_pivots) return *options.max_pivots;
    const std::size_t dim = inst.m + inst.n();
    return 10 * dim * dim;
}

void merge_counters(SolveStats& stats, const SimplexCounters& c) {
    stats.inverse_checks += c.inverse_checks;
    stats.ratio_uniqueness_checks += c.ratio_uniqueness_checks;
    stats.lex_decrease_checks += c.lex_decrease_checks;
}

// Cut-and-reoptimize loop shared by both modes. `work` is the caller's
// private copy and accumulates the appended cut columns. `var_base` is the
// display number of coordinate 0 (0 for the lifted problem, 1 otherwise).
SolveReport run_loop(DualFormInstance& work, RhsMode mode,
                     const SolveOptions& options, bool bounded_verified,
                     std::size_t var_base) {
    SolveReport rep;
    rep.mode = mode;
    rep.instance_name = work.name;
    SolveStats& stats = rep.stats;

    SimplexOptions sopts;
    sopts.entering = options.entering;
    sopts.verify_every = options.verify_every;
    sopts.refactor_every = options.refactor_every;

    PivotBudget budget;
    budget.cap = dynamic_cap(options, work);

    bool recording = false;
    bool first_after_append = false;
    std::vector<CutColumn> pending;
    std::vector<std::size_t> pending_cols;
    std::size_t events = 0;

    PivotCallback cb = [&](const SimplexState& after, const PivotInfo& info) {
        if (after.basis().size() != after.instance().m)
            throw InvariantError("basis size drifted from the row count");
        ++stats.basis_size_checks;
        if (info.in_phase_one) ++stats.phase_one_pivots;

        if (!info.in_phase_one) {
            if (first_after_append) {
                const auto it = std::find(pending_cols.begin(),
                                          pending_cols.end(), info.enter_col);
                if (it == pending_cols.end())
                    throw InvariantError(
                        "first pivot after a cut entered a pre-existing column");
                const CutColumn& cut =
                    pending[static_cast<std::size_t>(it - pending_cols.begin())];
                // The basis is still the derivation basis, so the entering
                // direction is the stored witness.
                if (info.pivot_element != cut.witness[info.leave_pos])
                    throw InvariantError(
                        "pivot element differs from the cut witness entry");
                const Rational rc =
                    Rational(cut.cost) - dot(info.dual_before, cut.column);
                const Rational step = rc / info.pivot_element;
                QVec predicted = info.dual_before;
                for (std::size_t k = 0; k < predicted.size(); ++k)
                    predicted[k] += step * info.inv_row_before[k];
                if (!(predicted == after.dual()))
                    throw InvariantError("closed-form dual update mismatch");
                ++stats.dual_update_checks;
                if (mode == RhsMode::lex) {
                    const std::size_t i = cut.source_row;
                    const QVec pre_before(info.dual_before.begin(),
                                          info.dual_before.begin() + i);
                    const QVec pre_after(after.dual().begin(),
                                         after.dual().begin() + i);
                    const bool prefix_drops =
                        lex_compare(pre_after, pre_before) ==
                        std::strong_ordering::less;
                    const bool floor_drop =
                        after.dual()[i] <= Rational(info.dual_before[i].floor());
                    if (!prefix_drops && !floor_drop)
                        throw InvariantError(
                            "post-cut pivot violated the prefix/floor dichotomy");
                    ++stats.prefix_decrease_checks;
                }
                first_after_append = false;
            }
            if (recording) rep.objective_trace.push_back(after.objective());
        }

        if (options.sink) {
            PivotEvent ev;
            ev.number = ++events;
            ev.enter_col = info.enter_col;
            ev.leave_col = info.leave_col;
            ev.leave_pos = info.leave_pos;
            ev.in_phase_one = info.in_phase_one;
            ev.objective = after.objective();
            ev.dual = after.dual();
            options.sink->on_pivot(ev);
        } else {
            ++events;
        }
    };

    PhaseOneResult p1 = phase_one(work, mode, sopts, budget, cb);
    merge_counters(stats, p1.counters);
    if (p1.limit) {
        rep.status = SolveStatus::limit_reached;
        rep.limit = LimitKind::pivots;
        rep.pivot_count = budget.used;
        return rep;
    }
    if (!p1.feasible)
        throw ContractViolation(
            "phase one found the primal infeasible; the relaxation is empty "
            "or unbounded in the objective direction");
    SimplexState state = std::move(*p1.state);

    const auto finish = [&](SolveStatus status, LimitKind limit) {
        rep.status = status;
        rep.limit = limit;
        rep.pivot_count = budget.used;
        rep.cut_count = rep.cut_trace.size();
        merge_counters(stats, state.counters());
        return rep;
    };

    SimplexStatus st = primal_simplex(state, sopts, budget, cb);
    for (;;) {
        if (st == SimplexStatus::limit)
            return finish(SolveStatus::limit_reached, LimitKind::pivots);
        if (st == SimplexStatus::unbounded) {
            // The cut-augmented dual region is empty. Integer points survive
            // every cut, so none existed in the first place.
            if (bounded_verified && rep.cut_trace.empty())
                throw InvariantError(
                    "primal unbounded although the relaxation was verified "
                    "nonempty and bounded");
            if (mode == RhsMode::plain || !bounded_verified) {
                rep.caveat =
                    "integer infeasibility inferred from an unbounded "
                    "cut-augmented primal";
                if (!bounded_verified)
                    rep.caveat +=
                        "; the relaxation was not verified nonempty and bounded";
            }
            return finish(SolveStatus::integer_infeasible, LimitKind::none);
        }

        if (!recording) {
            rep.objective_trace.push_back(state.objective());
            recording = true;
        }
        if (options.sink) {
            OptEvent ev;
            ev.objective = state.objective();
            ev.dual = state.dual();
            ev.pivots_so_far = budget.used;
            ev.cuts_so_far = rep.cut_trace.size();
            options.sink->on_optimum(ev);
        }

        const std::vector<std::size_t> frac = fractional_indices(state.dual());
        if (frac.empty()) {
            ZVec y(work.m);
            for (std::size_t i = 0; i < work.m; ++i) y[i] = state.dual()[i].floor();
            for (std::size_t j = 0; j < work.n(); ++j) {
                if (idot(y, work.columns[j]) > work.c[j])
                    throw InvariantError(
                        "integral dual vector violates a column constraint");
                ++stats.certificate_checks;
            }
            rep.z_star = idot(y, work.b);
            if (Rational(rep.z_star) != state.objective())
                throw InvariantError("certified objective disagrees with y'b");
            rep.y_star = std::move(y);
            return finish(SolveStatus::optimal, LimitKind::none);
        }

        if (rep.cut_trace.size() >= options.max_cuts)
            return finish(SolveStatus::limit_reached, LimitKind::cuts);

        std::vector<std::size_t> sources;
        if (mode == RhsMode::lex || options.source == SourcePolicy::min_fractional)
            sources.push_back(frac.front());
        else
            sources = frac;

        pending.clear();
        pending_cols.clear();
        for (std::size_t i : sources) {
            CutColumn cut = derive_cut(state, i);
            ++stats.fractionality_checks;
            bool duplicate = false;
            for (std::size_t j = 0; j < work.n() && !duplicate; ++j)
                if (work.c[j] == cut.cost && work.columns[j] == cut.column)
                    duplicate = true;
            if (duplicate) continue;

            const std::size_t col_idx = work.n();
            append_column(work, cut.column, cut.cost);
            for (std::size_t k = 0; k < work.m; ++k) {
                Rational s;
                for (std::size_t pos = 0; pos < work.m; ++pos)
                    s += Rational(work.columns[state.basis()[pos]][k]) *
                         cut.witness[pos];
                if (s != Rational(cut.column[k]))
                    throw InvariantError(
                        "cut column disagrees with basis times witness");
            }
            ++stats.integrality_checks;
            const Rational rc = state.reduced_cost(col_idx);
            if (!(Rational(-1) < rc && rc.sign() < 0))
                throw InvariantError("appended column reduced cost left (-1,0)");
            ++stats.reduced_cost_window_checks;

            CutSummary summary;
            summary.column = cut.column;
            summary.cost = cut.cost;
            summary.source_row = i;
            summary.appended_col = col_idx;
            summary.shift = cut.shift;
            summary.inequality = format_inequality(as_inequality(cut), var_base);
            rep.cut_trace.push_back(summary);
            if (options.sink) {
                CutEvent ev;
                ev.number = rep.cut_trace.size();
                ev.source_name = "y" + std::to_string(var_base + i);
                ev.appended_col = col_idx;
                ev.column = cut.column;
                ev.cost = cut.cost;
                ev.inequality = summary.inequality;
                options.sink->on_cut(ev);
            }
            pending.push_back(std::move(cut));
            pending_cols.push_back(col_idx);
        }
        if (pending.empty())
            throw InvariantError("every fresh cut duplicated an existing column");

        if (pending.size() == 1) {
            // With a single appended cut, it must be the one improving column.
            std::size_t negatives = 0;
            for (std::size_t j = 0; j < work.n(); ++j)
                if (!state.is_basic(j) && state.reduced_cost(j).sign() < 0)
                    ++negatives;
            if (negatives != 1)
                throw InvariantError(
                    "appended cut is not the unique improving column");
            ++stats.entering_uniqueness_checks;
        }

        budget.cap = dynamic_cap(options, work);
        first_after_append = true;
        st = primal_simplex(state, sopts, budget, cb);
    }
}

enum class AuxKind { optimal, unbounded, infeasible };

struct AuxOutcome {
    AuxKind kind = AuxKind::optimal;
    Rational value;
};

// Solves min c'x, Ax = rhs, x >= 0 exactly, under Bland's rule so that
// termination needs no cap.
AuxOutcome solve_aux(const DualFormInstance& inst, const ZVec& rhs) {
    DualFormInstance aux = inst;
    aux.b = rhs;
    SimplexOptions sopts;
    sopts.entering = EnteringRule::bland;
    PivotBudget budget;
    budget.cap = std::numeric_limits<std::size_t>::max();
    PhaseOneResult p1 = phase_one(aux, RhsMode::plain, sopts, budget);
    if (!p1.feasible) return {AuxKind::infeasible, Rational()};
    SimplexState state = std::move(*p1.state);
    const SimplexStatus st = primal_simplex(state, sopts, budget);
    if (st == SimplexStatus::unbounded) return {AuxKind::unbounded, Rational()};
    if (st != SimplexStatus::optimal)
        throw InvariantError("uncapped auxiliary solve hit a pivot limit");
    return {AuxKind::optimal, state.objective()};
}

}  // namespace

BoundednessReport check_boundedness(const DualFormInstance& inst) {
    BoundednessReport rep;
    const std::size_t m = inst.m;

    // Zero RHS: x = 0 is feasible and the feasible set is a cone, so the
    // optimum is 0 unless some ray has negative cost, which by duality
    // happens exactly when { y : y'A <= c' } is empty.
    const AuxOutcome zero = solve_aux(inst, ZVec(m, Integer(0)));
    if (zero.kind == AuxKind::infeasible)
        throw InvariantError("zero-RHS primal reported infeasible");
    if (zero.kind == AuxKind::unbounded) {
        rep.outcome = BoundednessReport::Outcome::relaxation_empty;
        return rep;
    }
    if (!zero.value.is_zero())
        throw InvariantError("zero-RHS optimum is not zero");

    rep.lower.assign(m, Rational());
    rep.upper.assign(m, Rational());
    for (std::size_t i = 0; i < m; ++i) {
        for (const int dir : {1, -1}) {
            ZVec rhs(m, Integer(0));
            rhs[i] = dir;
            const AuxOutcome probe = solve_aux(inst, rhs);
            if (probe.kind == AuxKind::unbounded)
                throw InvariantError(
                    "coordinate probe unbounded over a nonempty dual region");
            if (probe.kind == AuxKind::infeasible) {
                // min over Ax = dir*e_i infeasible means sup dir*y_i is
                // infinite over the (nonempty) region.
                rep.outcome = BoundednessReport::Outcome::unbounded;
                rep.coordinate = i;
                rep.direction = dir;
                return rep;
            }
            if (dir > 0)
                rep.upper[i] = probe.value;
            else
                rep.lower[i] = -probe.value;
        }
    }
    rep.outcome = BoundednessReport::Outcome::bounded;
    return rep;
}

SolveReport solve_lex(const DualFormInstance& inst,
                      const SolveOptions& options) {
    const bool check = options.check_boundedness.value_or(true);
    bool verified = false;
    if (check) {
        const BoundednessReport br = check_boundedness(inst);
        if (br.outcome == BoundednessReport::Outcome::unbounded)
            throw BoundednessError(
                "lex mode requires a bounded relaxation; coordinate y" +
                std::to_string(br.coordinate + 1) + " is unbounded " +
                (br.direction > 0 ? "above" : "below"));
        if (br.outcome == BoundednessReport::Outcome::relaxation_empty) {
            SolveReport rep;
            rep.mode = RhsMode::lex;
            rep.instance_name = inst.name;
            rep.status = SolveStatus::integer_infeasible;
            rep.caveat =
                "the continuous relaxation is empty; the cut loop never ran";
            return rep;
        }
        verified = true;
    }

    LexifiedInstance lifted = lexify(inst);
    DualFormInstance work = lifted.lifted;
    SolveReport rep =
        run_loop(work, RhsMode::lex, options, verified, 0);
    if (rep.status == SolveStatus::optimal) {
        if (rep.y_star.size() != inst.m + 1)
            throw InvariantError("lifted solution has the wrong dimension");
        const Integer y0 = rep.y_star.front();
        ZVec base(rep.y_star.begin() + 1, rep.y_star.end());
        if (idot(base, inst.b) != y0)
            throw InvariantError(
                "lifted objective coordinate disagrees with y'b");
        ++rep.stats.certificate_checks;
        if (rep.z_star != y0)
            throw InvariantError("lifted optimum disagrees with z_star");
        rep.y_star = std::move(base);
    }
    return rep;
}

SolveReport solve_plain(const DualFormInstance& inst,
                        const SolveOptions& options) {
    const bool check = options.check_boundedness.value_or(false);
    bool verified = false;
    if (check) {
        const BoundednessReport br = check_boundedness(inst);
        if (br.outcome == BoundednessReport::Outcome::unbounded)
            throw BoundednessError(
                "boundedness check requested and failed; coordinate y" +
                std::to_string(br.coordinate + 1) + " is unbounded " +
                (br.direction > 0 ? "above" : "below"));
        if (br.outcome == BoundednessReport::Outcome::relaxation_empty) {
            SolveReport rep;
            rep.mode = RhsMode::plain;
            rep.instance_name = inst.name;
            rep.status = SolveStatus::integer_infeasible;
            rep.caveat =
                "the continuous relaxation is empty; the cut loop never ran";
            return rep;
        }
        verified = true;
    }
    DualFormInstance work = inst;
    return run_loop(work, RhsMode::plain, options, verified, 1);
}

}  // namespace gomcol
