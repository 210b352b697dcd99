// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gomcol/driver.hpp"
#include "gomcol/errors.hpp"
#include "gomcol/oracle.hpp"

using namespace gomcol;
using Clock = std::chrono::steady_clock;

namespace {

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 t0)
        .count();
}

Rational q(long num, long den = 1) { return Rational(num, den); }

// Every integer point of the box satisfying y'A <= c' over the original
// columns, in ascending lex order.
std::vector<ZVec> enumerate_feasible(const DualFormInstance& inst,
                                     const IntegerBox& box) {
    std::vector<ZVec> out;
    if (box.empty_range()) return out;
    ZVec y = box.lower;
    for (;;) {
        bool ok = true;
        for (std::size_t j = 0; j < inst.n() && ok; ++j)
            if (idot(y, inst.columns[j]) > inst.c[j]) ok = false;
        if (ok) out.push_back(y);
        std::size_t pos = inst.m;
        bool done = true;
        while (pos > 0) {
            --pos;
            if (y[pos] < box.upper[pos]) {
                ++y[pos];
                for (std::size_t k = pos + 1; k < inst.m; ++k)
                    y[k] = box.lower[k];
                done = false;
                break;
            }
            if (pos == 0) break;
        }
        if (done) return out;
    }
}

// One solved instance kept around for the cross-cutting invariant audit.
struct RunRecord {
    DualFormInstance instance;  ///< original, without appended cuts
    SolveReport report;
    std::string label;
};

// Counter coherence: the per-pivot and per-cut consistency checks must
// have run as often as the events they guard.
void audit_counters(const RunRecord& rec, std::vector<std::string>& fails) {
    const SolveReport& r = rec.report;
    const SolveStats& s = r.stats;
    const auto flag = [&](const std::string& what) {
        fails.push_back(rec.label + ": " + what);
    };
    if (s.basis_size_checks != r.pivot_count)
        flag("basis size was not checked at every pivot");
    if (s.inverse_checks != r.pivot_count)
        flag("the basis inverse was not verified at every pivot");
    if (r.mode == RhsMode::lex) {
        if (s.lex_decrease_checks != r.pivot_count)
            flag("strict lex decrease was not checked at every pivot");
        if (s.ratio_uniqueness_checks != r.pivot_count)
            flag("lex ratio uniqueness was not checked at every pivot");
        if (s.prefix_decrease_checks != s.dual_update_checks)
            flag("the prefix/floor dichotomy missed a post-cut pivot");
    } else if (s.prefix_decrease_checks != 0) {
        flag("prefix/floor dichotomy checked outside lex mode");
    }
    if (s.fractionality_checks < r.cut_count)
        flag("a cut skipped the fractional-value check");
    if (s.reduced_cost_window_checks != r.cut_count)
        flag("an appended column skipped the reduced-cost window check");
    if (s.integrality_checks != r.cut_count)
        flag("an appended column skipped the integrality check");
    if (r.cut_count > 0 &&
        (s.dual_update_checks == 0 || s.dual_update_checks > r.cut_count))
        flag("closed-form dual updates were not checked once per cut round");
    if (r.status == SolveStatus::optimal && s.certificate_checks == 0)
        flag("the optimal answer was not certified against the columns");
}

// Every recorded cut must hold at every enumerated feasible integer point.
// Lex-mode cuts live in the lifted space (y0, y) with y0 = y'b.
std::size_t validate_cuts(const RunRecord& rec,
                          const std::vector<ZVec>& feasible,
                          std::vector<std::string>& fails) {
    std::size_t done = 0;
    for (const ZVec& y : feasible) {
        ZVec point;
        if (rec.report.mode == RhsMode::lex) {
            point.reserve(y.size() + 1);
            point.push_back(idot(y, rec.instance.b));
            point.insert(point.end(), y.begin(), y.end());
        } else {
            point = y;
        }
        for (const CutSummary& cs : rec.report.cut_trace) {
            if (idot(point, cs.column) > cs.cost)
                fails.push_back(rec.label + ": cut " + cs.inequality +
                                " excludes a feasible integer point");
            ++done;
        }
    }
    return done;
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

void report(int number, const Outcome& o) {
    std::cout << "criterion " << number << ": " << (o.pass ? "PASS" : "FAIL")
              << " (" << o.detail << ")\n";
}

std::mt19937_64 seeded(std::size_t idx) { return std::mt19937_64(9000 + idx); }

DualFormInstance random_boxed_instance(std::size_t idx) {
    std::mt19937_64 rng = seeded(idx);
    std::uniform_int_distribution<int> m_dist(2, 3);
    std::uniform_int_distribution<int> nfree_dist(1, 6);
    std::uniform_int_distribution<int> a_dist(-5, 5);
    std::uniform_int_distribution<int> c_dist(-50, 50);
    std::uniform_int_distribution<int> slack_dist(0, 10);
    std::uniform_int_distribution<int> bound_dist(-8, 8);
    std::uniform_int_distribution<int> b_dist(-9, 9);

    const std::size_t m = static_cast<std::size_t>(m_dist(rng));
    const std::size_t n_free = static_cast<std::size_t>(nfree_dist(rng));
    std::vector<ZVec> cols;
    for (std::size_t j = 0; j < n_free; ++j) {
        ZVec col(m);
        for (std::size_t k = 0; k < m; ++k) col[k] = a_dist(rng);
        cols.push_back(col);
    }
    std::vector<int> lo(m), hi(m);
    for (std::size_t i = 0; i < m; ++i) {
        lo[i] = bound_dist(rng);
        hi[i] = bound_dist(rng);
        if (lo[i] > hi[i]) std::swap(lo[i], hi[i]);
    }
    // Two in three instances anchor the free costs at an integer point of
    // the box so the cut loop has real work; the rest draw costs freely,
    // which often empties the region and covers the infeasible paths.
    ZVec c;
    if (idx % 3 != 2) {
        ZVec anchor(m);
        for (std::size_t i = 0; i < m; ++i)
            anchor[i] =
                std::uniform_int_distribution<int>(lo[i], hi[i])(rng);
        for (std::size_t j = 0; j < n_free; ++j) {
            Integer cj = idot(anchor, cols[j]) + slack_dist(rng);
            if (cj > 50) cj = 50;
            if (cj < -50) cj = -50;
            c.push_back(cj);
        }
    } else {
        for (std::size_t j = 0; j < n_free; ++j) c.push_back(c_dist(rng));
    }
    // Box rows +-e_i guarantee a bounded relaxation.
    for (std::size_t i = 0; i < m; ++i) {
        ZVec up(m, Integer(0)), down(m, Integer(0));
        up[i] = 1;
        down[i] = -1;
        cols.push_back(up);
        c.push_back(hi[i]);
        cols.push_back(down);
        c.push_back(-lo[i]);
    }
    ZVec b(m);
    for (std::size_t k = 0; k < m; ++k) b[k] = b_dist(rng);
    return make_instance(m, std::move(cols), std::move(b), std::move(c),
                         "random" + std::to_string(idx));
}

// Bounded and nonempty relaxation pinning 2 y_i = odd constant: no integer
// point can exist, so the lex solve must end in integer infeasibility.
DualFormInstance half_integer_instance(std::size_t idx) {
    const std::size_t m = 1 + idx % 3;
    std::vector<ZVec> cols;
    ZVec c;
    for (std::size_t i = 0; i < m; ++i) {
        const long k = 2 * static_cast<long>(idx + 3 * i) + 1;  // odd
        ZVec up(m, Integer(0)), down(m, Integer(0));
        up[i] = 2;
        down[i] = -2;
        cols.push_back(up);
        c.push_back(k);
        cols.push_back(down);
        c.push_back(-k);
    }
    ZVec b(m);
    for (std::size_t i = 0; i < m; ++i) b[i] = 1 + static_cast<long>(i);
    return make_instance(m, std::move(cols), std::move(b), std::move(c),
                         "half" + std::to_string(idx));
}

}  // namespace

int main() {
    int failures = 0;
    std::vector<RunRecord> records;

    // 1. Worked-example reproduction in plain mode: exact cut columns,
    //    costs, objective trace and final answer.
    {
        Outcome o;
        const auto t0 = Clock::now();
        try {
            SolveOptions opts;
            opts.source = SourcePolicy::all_fractional;
            opts.entering = EnteringRule::dantzig;
            SolveReport rep = solve_plain(example3(), opts);
            std::vector<std::string> bad;
            if (rep.status != SolveStatus::optimal) bad.push_back("not optimal");
            if (rep.cut_trace.size() != 3 ||
                rep.cut_trace[0].column != ZVec{4, 3} ||
                rep.cut_trace[0].cost != 70 ||
                rep.cut_trace[1].column != ZVec{5, 3} ||
                rep.cut_trace[1].cost != 96 ||
                rep.cut_trace[2].column != ZVec{3, 2} ||
                rep.cut_trace[2].cost != 55)
                bad.push_back("cut sequence differs");
            if (rep.objective_trace !=
                QVec{q(927, 2), q(462), q(2304, 5), q(460)})
                bad.push_back("objective trace differs");
            if (rep.y_star != ZVec{25, -10}) bad.push_back("y* differs");
            if (rep.z_star != 460) bad.push_back("z* differs");
            const long ms = ms_since(t0);
            if (ms >= 1000) bad.push_back("took " + std::to_string(ms) + " ms");
            if (bad.empty()) {
                o.detail = "plain-mode worked example reproduced exactly in " +
                           std::to_string(ms) + " ms";
                records.push_back({example3(), rep, "worked example (plain)"});
            } else {
                o.pass = false;
                o.detail = bad.front();
            }
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        report(1, o);
        failures += o.pass ? 0 : 1;
    }

    // 2. Lex mode on the worked example: optimal value 460 and the
    //    lex-maximum optimizer per brute-force enumeration.
    {
        Outcome o;
        const auto t0 = Clock::now();
        try {
            DualFormInstance inst = example3();
            SolveReport rep = solve_lex(inst);
            BoxResult box = bounding_box(inst);
            BruteForceResult bf = brute_force_optimum(inst, box.box);
            std::vector<std::string> bad;
            if (rep.status != SolveStatus::optimal) bad.push_back("not optimal");
            if (rep.z_star != 460) bad.push_back("z* differs");
            if (!bf.feasible || bf.z_star != rep.z_star)
                bad.push_back("enumeration value differs");
            if (bf.argmax.empty() || rep.y_star != bf.argmax.back())
                bad.push_back("y* is not the lex-max enumerated optimizer");
            const long ms = ms_since(t0);
            if (ms >= 1000) bad.push_back("took " + std::to_string(ms) + " ms");
            if (bad.empty()) {
                o.detail =
                    "lex solve optimal at 460 and equal to the lex-max "
                    "enumerated optimizer in " +
                    std::to_string(ms) + " ms";
                records.push_back({inst, rep, "worked example (lex)"});
            } else {
                o.pass = false;
                o.detail = bad.front();
            }
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        report(2, o);
        failures += o.pass ? 0 : 1;
    }

    // 3. Random sweep: lex solve versus brute-force enumeration on boxed
    //    instances. 5. No run may hit a pivot or cut cap.
    const std::size_t kRandomRuns = 120;
    std::size_t caps_hit = 0;
    {
        Outcome o;
        const auto t0 = Clock::now();
        std::size_t agreed = 0;
        std::string first_bad;
        for (std::size_t idx = 0; idx < kRandomRuns; ++idx) {
            DualFormInstance inst = random_boxed_instance(idx);
            try {
                SolveReport rep = solve_lex(inst);
                if (rep.status == SolveStatus::limit_reached) {
                    ++caps_hit;
                    if (first_bad.empty())
                        first_bad = inst.name + ": hit a cap";
                    continue;
                }
                BoxResult box = bounding_box(inst);
                bool agree = false;
                if (box.status == BoxResult::Status::empty) {
                    agree = rep.status == SolveStatus::integer_infeasible;
                } else {
                    BruteForceResult bf = brute_force_optimum(inst, box.box);
                    if (rep.status == SolveStatus::integer_infeasible)
                        agree = !bf.feasible;
                    else
                        agree = bf.feasible && bf.z_star == rep.z_star &&
                                rep.y_star == bf.argmax.back();
                }
                if (agree) {
                    ++agreed;
                    records.push_back({inst, rep, inst.name});
                } else if (first_bad.empty()) {
                    first_bad = inst.name + ": solver and enumeration disagree";
                }
            } catch (const std::exception& e) {
                if (first_bad.empty())
                    first_bad = inst.name + ": exception: " + e.what();
            }
        }
        const long ms = ms_since(t0);
        if (agreed == kRandomRuns && ms < 60000) {
            o.detail = std::to_string(agreed) + "/" +
                       std::to_string(kRandomRuns) +
                       " random bounded instances agree with enumeration in " +
                       std::to_string(ms) + " ms";
        } else {
            o.pass = false;
            o.detail = std::to_string(agreed) + "/" +
                       std::to_string(kRandomRuns) + " agreed in " +
                       std::to_string(ms) + " ms" +
                       (first_bad.empty() ? "" : "; first: " + first_bad);
        }
        report(3, o);
        failures += o.pass ? 0 : 1;
    }

    // 4. Invariant audit across every recorded run: check counters match
    //    the event counts, and every cut admits every enumerated feasible
    //    integer point.
    {
        Outcome o;
        std::vector<std::string> fails;
        std::size_t validations = 0;
        for (const RunRecord& rec : records) {
            audit_counters(rec, fails);
            BoxResult box = bounding_box(rec.instance);
            if (box.status != BoxResult::Status::ok) continue;
            validations +=
                validate_cuts(rec, enumerate_feasible(rec.instance, box.box),
                              fails);
        }
        if (fails.empty()) {
            o.detail = "counter coherence on " +
                       std::to_string(records.size()) + " runs; " +
                       std::to_string(validations) +
                       " cut-point validations, zero violations";
        } else {
            o.pass = false;
            o.detail = std::to_string(fails.size()) +
                       " violations; first: " + fails.front();
        }
        report(4, o);
        failures += o.pass ? 0 : 1;
    }

    // 5. Termination guard over the random sweep.
    {
        Outcome o;
        if (caps_hit == 0) {
            o.detail = "no random lex run reached the pivot or cut cap";
        } else {
            o.pass = false;
            o.detail = std::to_string(caps_hit) + " runs hit a cap";
        }
        report(5, o);
        failures += o.pass ? 0 : 1;
    }

    // 6. Integer infeasibility detection on bounded nonempty relaxations
    //    whose coordinates are pinned to half-integers.
    {
        Outcome o;
        const std::size_t kCases = 12;
        std::size_t detected = 0;
        std::string first_bad;
        for (std::size_t idx = 0; idx < kCases; ++idx) {
            DualFormInstance inst = half_integer_instance(idx);
            try {
                SolveReport rep = solve_lex(inst);
                if (rep.status == SolveStatus::integer_infeasible &&
                    rep.caveat.empty() && rep.cut_count >= 1) {
                    ++detected;
                } else if (first_bad.empty()) {
                    first_bad = inst.name + ": not detected via the cut loop";
                }
            } catch (const std::exception& e) {
                if (first_bad.empty())
                    first_bad = inst.name + ": exception: " + e.what();
            }
        }
        if (detected == kCases) {
            o.detail = std::to_string(detected) + "/" + std::to_string(kCases) +
                       " point-relaxation instances detected integer "
                       "infeasible";
        } else {
            o.pass = false;
            o.detail = std::to_string(detected) + "/" + std::to_string(kCases) +
                       " detected" +
                       (first_bad.empty() ? "" : "; first: " + first_bad);
        }
        report(6, o);
        failures += o.pass ? 0 : 1;
    }

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
