#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "gomcol/errors.hpp"
#include "gomcol/instance.hpp"
#include "gomcol/lexvalue.hpp"
#include "gomcol/matrix.hpp"
#include "gomcol/rational.hpp"

namespace gomcol {

/// RHS interpretation. plain: the instance vector b. lex: the symbolic
/// vector (eps^0, ..., eps^{m-1}), under which every basic solution is
/// non-degenerate and every pivot strictly decreases the dual vector in
/// lexicographic order.
enum class RhsMode { plain, lex };

enum class EnteringRule { dantzig, bland };

struct SimplexOptions {
    EnteringRule entering = EnteringRule::dantzig;
    /// Check inv * A_basis == I after every k-th pivot (0 disables).
    std::size_t verify_every = 1;
    /// Rebuild the inverse from scratch every k pivots to keep accumulated
    /// row-operation bloat bounded (0 disables). Exact arithmetic has no
    /// drift; this is representation hygiene only.
    std::size_t refactor_every = 50;
};

/// Tallies of internal consistency checks, surfaced so callers can confirm
/// the checks actually ran.
struct SimplexCounters {
    std::size_t pivots = 0;
    std::size_t inverse_checks = 0;
    std::size_t ratio_uniqueness_checks = 0;
    std::size_t lex_decrease_checks = 0;
};

/// A simplex basis over an instance with an explicit exact inverse.
/// The basis always holds exactly m column indices, also after columns are
/// appended to the instance. The instance is referenced, not owned; it may
/// grow (columns appended) but must otherwise stay unchanged while the
/// state is alive.
class SimplexState {
public:
    /// Computes the inverse from scratch. Throws SingularBasisError if the
    /// selected columns are not invertible, UsageError on bad indices.
    SimplexState(const DualFormInstance& inst, RhsMode mode,
                 std::vector<std::size_t> basis);

    const DualFormInstance& instance() const { return *inst_; }
    RhsMode mode() const { return mode_; }
    std::size_t m() const { return inst_->m; }
    const std::vector<std::size_t>& basis() const { return basis_; }
    const QMatrix& inverse() const { return inv_; }

    /// Dual vector y' = c_basis' * inverse.
    const QVec& dual() const { return y_; }

    /// Basic values inverse * b. Plain mode only.
    const QVec& basic_values() const;

    /// Basic value at position pos in lex mode: row pos of the inverse read
    /// as coefficients of eps^0..eps^{m-1}.
    LexValue basic_lex(std::size_t pos) const;

    bool is_basic(std::size_t col) const;
    std::optional<std::size_t> basis_position(std::size_t col) const;

    /// c_col - y' * A_col. Zero for basic columns.
    Rational reduced_cost(std::size_t col) const;

    /// inverse * A_col.
    QVec direction(std::size_t col) const;

    /// y' * b: the unperturbed objective value in either mode.
    Rational objective() const;

    /// Plain: basic values >= 0. Lex: every inverse row lex-positive.
    bool feasible() const;

    /// Replaces basis position leave_pos by enter_col, updating the inverse
    /// by exact row operations and refreshing cached solutions. Throws
    /// PivotError if the direction entry at leave_pos is zero.
    void apply_pivot(std::size_t enter_col, std::size_t leave_pos);

    /// Rebuilds the inverse from scratch (representation hygiene).
    void refresh();

    /// Asserts inv * A_basis == I exactly; throws InvariantError.
    void verify_inverse();

    SimplexCounters& counters() { return counters_; }
    const SimplexCounters& counters() const { return counters_; }

private:
    void recache();

    const DualFormInstance* inst_;
    RhsMode mode_;
    std::vector<std::size_t> basis_;
    QMatrix inv_;
    QVec y_;
    QVec x_plain_;
    SimplexCounters counters_;
};

/// Alias for the constructor, matching the verb used elsewhere.
SimplexState factor_basis(const DualFormInstance& inst,
                          std::vector<std::size_t> basis, RhsMode mode);

/// Entering column under the given rule, or nullopt when all reduced costs
/// are nonnegative (optimal). Dantzig: most negative reduced cost, ties by
/// lowest column index. Bland: lowest column index with negative reduced
/// cost.
std::optional<std::size_t> choose_entering(const SimplexState& state,
                                           EnteringRule rule);

struct RatioOutcome {
    bool bounded = false;
    std::size_t leave_pos = 0;
};

/// Leaving position for the given entering direction. Plain: minimizes
/// basic_value/d over d > 0, ties by smallest basis position (dantzig) or
/// smallest basic column index (bland). Lex: minimizes the LexValue
/// quotient row/d over d > 0; the minimizer is unique because inverse rows
/// are linearly independent, and a tie throws InvariantError. bounded is
/// false iff the direction has no positive entry.
RatioOutcome ratio_test(SimplexState& state, const QVec& direction,
                        EnteringRule rule);

enum class SimplexStatus { optimal, unbounded, limit };

/// Total pivot allowance for a solve; `used` accumulates across phases.
struct PivotBudget {
    std::size_t used = 0;
    std::size_t cap = 0;
};

/// Snapshot taken immediately before a pivot, passed to callbacks together
/// with the post-pivot state.
struct PivotInfo {
    std::size_t enter_col = 0;
    std::size_t leave_col = 0;
    std::size_t leave_pos = 0;
    Rational pivot_element;
    QVec dual_before;
    QVec inv_row_before;  ///< row leave_pos of the inverse before the pivot
    bool in_phase_one = false;
};

using PivotCallback =
    std::function<void(const SimplexState& after, const PivotInfo& info)>;

/// Runs to optimality or unboundedness from a feasible state, or stops with
/// `limit` when the budget is exhausted while an improving pivot remains.
/// In lex mode, asserts after every pivot that the dual vector strictly
/// decreased lexicographically. Throws ContractViolation if the starting
/// state is infeasible.
SimplexStatus primal_simplex(SimplexState& state, const SimplexOptions& opts,
                             PivotBudget& budget, const PivotCallback& cb = {},
                             bool in_phase_one = false);

struct PhaseOneResult {
    bool feasible = false;
    bool limit = false;                 ///< budget ran out mid-search
    std::optional<SimplexState> state;  ///< set iff feasible
    SimplexCounters counters;           ///< checks done on the auxiliary run
};

/// Finds a primal-feasible basis. First tries a basis of unit columns
/// (+e_k, and in plain mode -e_k when b_k <= 0); if no complete unit basis
/// exists, appends one artificial unit column per row to a working copy,
/// minimizes the artificial total, and (plain mode) drives any artificial
/// that remains basic at level zero out of the basis. In lex mode an
/// artificial still basic at the auxiliary optimum certifies infeasibility
/// outright, since no basic variable can sit at level zero there.
PhaseOneResult phase_one(const DualFormInstance& inst, RhsMode mode,
                         const SimplexOptions& opts, PivotBudget& budget,
                         const PivotCallback& cb = {});

}  // namespace gomcol
