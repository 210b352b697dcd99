#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gomcol/driver.hpp"
#include "gomcol/instance.hpp"
#include "gomcol/trace.hpp"

namespace gomcol {

/// Parses the canonical instance document: fields `name` (optional), `m`,
/// `n`, then `A` (m*n integers, row major), `b` (m integers), `c`
/// (n integers), in any order with `m` and `n` before the arrays; `#`
/// starts a comment. Throws ParseError naming line and field,
/// DimensionError on entry-count or shape mismatches, RankError when the
/// rows of A are dependent.
DualFormInstance parse_instance(const std::string& text);

/// Reads the file and parses it; unreadable file throws ParseError.
DualFormInstance parse_instance_file(const std::string& path);

/// Canonical document for the instance; parse_instance round-trips it.
std::string render_instance(const DualFormInstance& inst);

/// Human-readable report. Rationals print as mixed numbers ("463 1/2"),
/// cuts as inequalities, indices 1-based.
std::string format_report_text(const SolveReport& report);

/// Result of an optional oracle comparison, attached to reports.
struct OracleCheck {
    bool ran = false;
    bool agrees = false;
    bool oracle_feasible = false;
    Integer oracle_z;
    std::string note;  ///< set when the oracle could not run
};

/// Machine-readable report. Rationals are {"num": "...", "den": "..."}
/// string pairs, never floating point; integers that fit 64 bits are JSON
/// numbers, wider ones decimal strings.
std::string format_report_json(const SolveReport& report,
                               const OracleCheck* oracle = nullptr);

/// Writes PIVOT / CUT / OPT lines, one per event, 1-based indices.
class StreamTraceSink : public TraceSink {
public:
    explicit StreamTraceSink(std::ostream& os) : os_(os) {}
    void on_pivot(const PivotEvent& ev) override;
    void on_cut(const CutEvent& ev) override;
    void on_optimum(const OptEvent& ev) override;

private:
    std::ostream& os_;
};

/// Entry point behind main(): parses arguments, solves, prints the report.
/// Exit codes: 0 optimal, 2 integer infeasible, 3 limit reached, 64 usage
/// error, 65 parse/validation error, 70 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gomcol
