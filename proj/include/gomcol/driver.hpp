#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gomcol/cutgen.hpp"
#include "gomcol/instance.hpp"
#include "gomcol/rational.hpp"
#include "gomcol/simplex.hpp"
#include "gomcol/trace.hpp"

namespace gomcol {

enum class SolveStatus { optimal, integer_infeasible, limit_reached };

/// Which fractional dual coordinates spawn cuts per round. Lex mode always
/// uses the minimum fractional coordinate; the policy applies to plain mode.
enum class SourcePolicy { min_fractional, all_fractional };

enum class LimitKind { none, pivots, cuts };

struct SolveOptions {
    EnteringRule entering = EnteringRule::dantzig;
    SourcePolicy source = SourcePolicy::min_fractional;
    /// Verify that the relaxation is nonempty and bounded before solving.
    /// Defaults: on in lex mode (the finiteness guarantee assumes it), off
    /// in plain mode. Lex mode refuses an unbounded relaxation with
    /// BoundednessError; an empty relaxation yields integer_infeasible.
    std::optional<bool> check_boundedness;
    /// Fixed total pivot cap. When unset, the cap is 10*(rows+cols)^2 and
    /// grows as cut columns are appended.
    std::optional<std::size_t> max_pivots;
    std::size_t max_cuts = 10000;
    std::size_t verify_every = 1;
    std::size_t refactor_every = 50;
    TraceSink* sink = nullptr;  ///< optional, not owned
};

struct CutSummary {
    ZVec column;
    Integer cost;
    std::size_t source_row = 0;    ///< 0-based coordinate in the solved space
    std::size_t appended_col = 0;  ///< 0-based column index it received
    ZVec shift;
    std::string inequality;        ///< display form
};

/// How many times each internal consistency check ran during a solve.
/// Zero for a category that had no occasion to run (e.g. no cuts).
struct SolveStats {
    std::size_t phase_one_pivots = 0;
    std::size_t inverse_checks = 0;
    std::size_t ratio_uniqueness_checks = 0;
    std::size_t lex_decrease_checks = 0;
    std::size_t fractionality_checks = 0;        ///< y'column fractional per cut
    std::size_t reduced_cost_window_checks = 0;  ///< appended rc in (-1,0)
    std::size_t entering_uniqueness_checks = 0;  ///< lone cut is the lone candidate
    std::size_t dual_update_checks = 0;          ///< closed-form dual == recomputed
    std::size_t prefix_decrease_checks = 0;      ///< post-cut prefix/floor dichotomy
    std::size_t basis_size_checks = 0;
    std::size_t integrality_checks = 0;          ///< appended data stays integer
    std::size_t certificate_checks = 0;          ///< final y* feasibility
};

struct SolveReport {
    SolveStatus status = SolveStatus::limit_reached;
    RhsMode mode = RhsMode::plain;
    std::string instance_name;
    ZVec y_star;             ///< base coordinates, set when optimal
    Integer z_star;          ///< y_star' b, set when optimal
    std::size_t pivot_count = 0;
    std::size_t cut_count = 0;
    /// y'b at the first optimum and after every pivot of the cut loop.
    QVec objective_trace;
    std::vector<CutSummary> cut_trace;
    LimitKind limit = LimitKind::none;
    /// Nonempty when the conclusion rests on an unverified assumption
    /// (plain-mode unboundedness, empty relaxation shortcut).
    std::string caveat;
    SolveStats stats;
};

/// The lifted problem whose lex solve yields the lexicographically maximum
/// optimizer of the base problem. Variables are (y0, y); constraints are
/// y0 - y'b <= 0 (column 0, cost 0) and the base constraints. The lifted
/// b is the first unit vector, so y0 is the lifted objective, and the
/// objective-transfer column keeps y0 = y'b at every feasible basis.
struct LexifiedInstance {
    DualFormInstance base;
    DualFormInstance lifted;
    /// base coordinate i <-> lifted coordinate i+1, columns likewise.
    static constexpr std::size_t offset = 1;
};

LexifiedInstance lexify(const DualFormInstance& inst);

/// 0-based indices of non-integer entries, ascending.
std::vector<std::size_t> fractional_indices(const QVec& y);

struct BoundednessReport {
    enum class Outcome { bounded, unbounded, relaxation_empty };
    Outcome outcome = Outcome::bounded;
    std::size_t coordinate = 0;  ///< witness when unbounded (0-based)
    int direction = 0;           ///< +1 above, -1 below
    QVec lower, upper;           ///< exact coordinate bounds when bounded
};

/// Decides whether the relaxation { y : y'A <= c' } is nonempty and
/// bounded, via one auxiliary solve with zero RHS (unbounded iff the
/// relaxation is empty) and then 2m solves bounding each coordinate from
/// above and below. All auxiliary solves use Bland's rule.
BoundednessReport check_boundedness(const DualFormInstance& inst);

/// Lexicographic cut-and-reoptimize solve: phase one and primal simplex on
/// the lifted problem under the eps-RHS, then repeatedly derive the
/// minimal-shift cut at the minimum fractional dual coordinate, append it,
/// and re-optimize warm-started until the dual vector is integral
/// (optimal) or the primal becomes unbounded (integer infeasible).
/// Guaranteed finite; generous pivot/cut caps distinguish bugs from slow
/// convergence. The source policy option is ignored here.
SolveReport solve_lex(const DualFormInstance& inst,
                      const SolveOptions& options = {});

/// Same loop on the unlifted problem with plain RHS b, honoring the source
/// policy. No termination guarantee exists for this mode; hitting a cap
/// reports limit_reached, and unboundedness is reported as
/// integer_infeasible with a caveat.
SolveReport solve_plain(const DualFormInstance& inst,
                        const SolveOptions& options = {});

}  // namespace gomcol
