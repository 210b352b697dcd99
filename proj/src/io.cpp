#include "gomcol/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gomcol/errors.hpp"
#include "gomcol/oracle.hpp"
#include "json.hpp"

namespace gomcol {

namespace {

struct Token {
    std::string text;
    std::size_t line = 0;
};

// Whitespace, commas, brackets and '=' all separate tokens, so both the
// bare canonical layout and a bracketed one parse. '#' comments to EOL.
std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t start_line = 1;
    std::string cur;
    bool in_comment = false;
    const auto flush = [&] {
        if (!cur.empty()) {
            out.push_back({cur, start_line});
            cur.clear();
        }
    };
    for (const char ch : text) {
        if (ch == '\n') {
            flush();
            in_comment = false;
            ++line;
            continue;
        }
        if (in_comment) continue;
        if (ch == '#') {
            flush();
            in_comment = true;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' ||
            ch == '[' || ch == ']' || ch == '=') {
            flush();
            continue;
        }
        if (cur.empty()) start_line = line;
        cur += ch;
    }
    flush();
    return out;
}

bool is_field(const std::string& s) {
    return s == "name" || s == "m" || s == "n" || s == "A" || s == "b" ||
           s == "c";
}

bool looks_like_integer(const std::string& s) {
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string at_line(std::size_t line) {
    return "line " + std::to_string(line) + ": ";
}

Integer parse_int(const Token& tok, const std::string& field) {
    const std::string& s = tok.text;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    bool ok = i < s.size();
    for (; ok && i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) ok = false;
    if (!ok)
        throw ParseError(at_line(tok.line) + "field " + field +
                         ": expected an integer, got '" + s + "'");
    return Integer(s);
}

// Reads exactly `count` integers; a field keyword cutting the list short is
// a count mismatch, anything else unparsable is a ParseError.
ZVec read_array(const std::vector<Token>& toks, std::size_t& p,
                const std::string& field, std::size_t count,
                std::size_t key_line) {
    ZVec out;
    out.reserve(count);
    while (out.size() < count && p < toks.size() && !is_field(toks[p].text)) {
        out.push_back(parse_int(toks[p], field));
        ++p;
    }
    if (out.size() < count)
        throw DimensionError(at_line(key_line) + "field " + field +
                             ": expected " + std::to_string(count) +
                             " entries, found " + std::to_string(out.size()));
    // A trailing integer is a count mismatch, not a syntax problem.
    if (p < toks.size() && looks_like_integer(toks[p].text))
        throw DimensionError(at_line(key_line) + "field " + field +
                             ": more than " + std::to_string(count) +
                             " entries");
    return out;
}

std::size_t read_positive_size(const std::vector<Token>& toks, std::size_t& p,
                               const std::string& field, std::size_t key_line) {
    if (p >= toks.size())
        throw ParseError(at_line(key_line) + "field " + field +
                         ": missing value");
    const Integer v = parse_int(toks[p], field);
    ++p;
    if (sgn(v) <= 0)
        throw ParseError(at_line(toks[p - 1].line) + "field " + field +
                         ": must be positive");
    if (!v.fits_ulong_p())
        throw ParseError(at_line(toks[p - 1].line) + "field " + field +
                         ": value too large");
    return static_cast<std::size_t>(v.get_ui());
}

}  // namespace

DualFormInstance parse_instance(const std::string& text) {
    const std::vector<Token> toks = tokenize(text);
    std::size_t p = 0;
    std::optional<std::string> name;
    std::optional<std::size_t> m, n;
    std::optional<ZVec> a_entries, b, c;

    while (p < toks.size()) {
        const Token key = toks[p++];
        if (!is_field(key.text))
            throw ParseError(at_line(key.line) + "expected a field name, got '" +
                             key.text + "'");
        if (key.text == "name") {
            if (name)
                throw ParseError(at_line(key.line) + "duplicate field name");
            if (p >= toks.size())
                throw ParseError(at_line(key.line) + "field name: missing value");
            name = toks[p++].text;
        } else if (key.text == "m") {
            if (m) throw ParseError(at_line(key.line) + "duplicate field m");
            m = read_positive_size(toks, p, "m", key.line);
        } else if (key.text == "n") {
            if (n) throw ParseError(at_line(key.line) + "duplicate field n");
            n = read_positive_size(toks, p, "n", key.line);
        } else if (key.text == "A") {
            if (a_entries)
                throw ParseError(at_line(key.line) + "duplicate field A");
            if (!m || !n)
                throw ParseError(at_line(key.line) +
                                 "field A requires m and n to be set first");
            if (*m > 10000000 / *n)
                throw ParseError(at_line(key.line) + "field A: too many entries");
            a_entries = read_array(toks, p, "A", *m * *n, key.line);
        } else if (key.text == "b") {
            if (b) throw ParseError(at_line(key.line) + "duplicate field b");
            if (!m)
                throw ParseError(at_line(key.line) +
                                 "field b requires m to be set first");
            b = read_array(toks, p, "b", *m, key.line);
        } else {
            if (c) throw ParseError(at_line(key.line) + "duplicate field c");
            if (!n)
                throw ParseError(at_line(key.line) +
                                 "field c requires n to be set first");
            c = read_array(toks, p, "c", *n, key.line);
        }
    }
    if (!m) throw ParseError("field m is missing");
    if (!n) throw ParseError("field n is missing");
    if (!a_entries) throw ParseError("field A is missing");
    if (!b) throw ParseError("field b is missing");
    if (!c) throw ParseError("field c is missing");

    std::vector<ZVec> columns(*n, ZVec(*m));
    for (std::size_t k = 0; k < *m; ++k)
        for (std::size_t j = 0; j < *n; ++j)
            columns[j][k] = (*a_entries)[k * *n + j];
    return make_instance(*m, std::move(columns), std::move(*b), std::move(*c),
                         name.value_or(""));
}

DualFormInstance parse_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str());
}

std::string render_instance(const DualFormInstance& inst) {
    std::ostringstream os;
    if (!inst.name.empty()) os << "name " << inst.name << "\n";
    os << "m " << inst.m << "\n";
    os << "n " << inst.n() << "\n";
    os << "A\n";
    for (std::size_t k = 0; k < inst.m; ++k) {
        for (std::size_t j = 0; j < inst.n(); ++j)
            os << (j ? " " : "") << inst.columns[j][k].get_str();
        os << "\n";
    }
    os << "b";
    for (const Integer& v : inst.b) os << " " << v.get_str();
    os << "\nc";
    for (const Integer& v : inst.c) os << " " << v.get_str();
    os << "\n";
    return os.str();
}

namespace {

std::string zvec_str(const ZVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].get_str();
    }
    return s + ")";
}

std::string qvec_str(const QVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

std::string status_str(const SolveReport& r) {
    switch (r.status) {
        case SolveStatus::optimal:
            return "optimal";
        case SolveStatus::integer_infeasible:
            return "integer infeasible";
        case SolveStatus::limit_reached:
            return r.limit == LimitKind::cuts ? "limit reached (cut cap)"
                                              : "limit reached (pivot cap)";
    }
    return "unknown";
}

// Display number of solved-space coordinate i: the lifted problem names its
// extra objective variable y0, plain instances start at y1.
std::size_t var_number(const SolveReport& r, std::size_t i) {
    return r.mode == RhsMode::lex ? i : i + 1;
}

}  // namespace

std::string format_report_text(const SolveReport& r) {
    std::ostringstream os;
    os << "instance: " << (r.instance_name.empty() ? "(unnamed)" : r.instance_name)
       << "\n";
    os << "mode: " << (r.mode == RhsMode::lex ? "lex" : "plain") << "\n";
    os << "status: " << status_str(r) << "\n";
    if (r.status == SolveStatus::optimal) {
        os << "y* = " << zvec_str(r.y_star) << "\n";
        os << "z* = " << r.z_star.get_str() << "\n";
    }
    if (!r.objective_trace.empty()) {
        os << "objective trace: ";
        for (std::size_t i = 0; i < r.objective_trace.size(); ++i)
            os << (i ? ", " : "") << r.objective_trace[i].mixed_str();
        os << "\n";
    }
    for (std::size_t i = 0; i < r.cut_trace.size(); ++i) {
        const CutSummary& cs = r.cut_trace[i];
        os << "cut " << i + 1 << " from y" << var_number(r, cs.source_row)
           << " as column " << cs.appended_col + 1 << ": " << cs.inequality
           << "\n";
    }
    os << "pivots: " << r.pivot_count << " (phase one "
       << r.stats.phase_one_pivots << ")\n";
    os << "cuts: " << r.cut_count << "\n";
    if (!r.caveat.empty()) os << "caveat: " << r.caveat << "\n";
    return os.str();
}

namespace {

nlohmann::json json_int(const Integer& v) {
    if (v.fits_slong_p())
        return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

nlohmann::json json_rational(const Rational& q) {
    return {{"num", q.numerator().get_str()}, {"den", q.denominator().get_str()}};
}

nlohmann::json json_zvec(const ZVec& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const Integer& x : v) a.push_back(json_int(x));
    return a;
}

}  // namespace

std::string format_report_json(const SolveReport& r, const OracleCheck* oracle) {
    nlohmann::json j;
    j["instance"] = r.instance_name;
    j["mode"] = r.mode == RhsMode::lex ? "lex" : "plain";
    j["status"] = r.status == SolveStatus::optimal ? "optimal"
                  : r.status == SolveStatus::integer_infeasible
                      ? "integer_infeasible"
                      : "limit_reached";
    j["limit"] = r.limit == LimitKind::none     ? "none"
                 : r.limit == LimitKind::pivots ? "pivots"
                                                : "cuts";
    if (r.status == SolveStatus::optimal) {
        j["y_star"] = json_zvec(r.y_star);
        j["z_star"] = json_int(r.z_star);
    }
    j["pivots"] = r.pivot_count;
    j["cuts"] = r.cut_count;
    nlohmann::json trace = nlohmann::json::array();
    for (const Rational& q : r.objective_trace) trace.push_back(json_rational(q));
    j["objective_trace"] = trace;
    nlohmann::json cuts = nlohmann::json::array();
    for (const CutSummary& cs : r.cut_trace) {
        nlohmann::json c;
        c["column"] = json_zvec(cs.column);
        c["cost"] = json_int(cs.cost);
        c["source"] = "y" + std::to_string(var_number(r, cs.source_row));
        c["appended_col"] = cs.appended_col + 1;
        c["inequality"] = cs.inequality;
        cuts.push_back(c);
    }
    j["cut_trace"] = cuts;
    if (!r.caveat.empty()) j["caveat"] = r.caveat;
    j["checks"] = {
        {"phase_one_pivots", r.stats.phase_one_pivots},
        {"inverse", r.stats.inverse_checks},
        {"ratio_uniqueness", r.stats.ratio_uniqueness_checks},
        {"lex_decrease", r.stats.lex_decrease_checks},
        {"fractionality", r.stats.fractionality_checks},
        {"reduced_cost_window", r.stats.reduced_cost_window_checks},
        {"entering_uniqueness", r.stats.entering_uniqueness_checks},
        {"dual_update", r.stats.dual_update_checks},
        {"prefix_decrease", r.stats.prefix_decrease_checks},
        {"basis_size", r.stats.basis_size_checks},
        {"integrality", r.stats.integrality_checks},
        {"certificate", r.stats.certificate_checks},
    };
    if (oracle) {
        nlohmann::json o;
        o["ran"] = oracle->ran;
        if (oracle->ran) {
            o["agrees"] = oracle->agrees;
            o["feasible"] = oracle->oracle_feasible;
            if (oracle->oracle_feasible) o["z"] = json_int(oracle->oracle_z);
        }
        if (!oracle->note.empty()) o["note"] = oracle->note;
        j["oracle"] = o;
    }
    return j.dump(2);
}

void StreamTraceSink::on_pivot(const PivotEvent& ev) {
    os_ << "PIVOT " << ev.number << (ev.in_phase_one ? " phase-one" : "")
        << " enter " << ev.enter_col + 1 << " leave " << ev.leave_col + 1
        << " pos " << ev.leave_pos + 1 << " z " << ev.objective.mixed_str()
        << " y " << qvec_str(ev.dual) << "\n";
}

void StreamTraceSink::on_cut(const CutEvent& ev) {
    os_ << "CUT " << ev.number << " from " << ev.source_name << " column "
        << ev.appended_col + 1 << ": " << ev.inequality << "\n";
}

void StreamTraceSink::on_optimum(const OptEvent& ev) {
    os_ << "OPT z " << ev.objective.mixed_str() << " y " << qvec_str(ev.dual)
        << " pivots " << ev.pivots_so_far << " cuts " << ev.cuts_so_far << "\n";
}

namespace {

OracleCheck run_oracle_check(const DualFormInstance& inst,
                             const SolveReport& rep) {
    OracleCheck oc;
    if (rep.status == SolveStatus::limit_reached) {
        oc.note = "solver hit a cap; there is no claim to compare";
        return oc;
    }
    const BoxResult br = bounding_box(inst);
    if (br.status == BoxResult::Status::unbounded) {
        oc.note = "oracle skipped: relaxation unbounded in coordinate y" +
                  std::to_string(br.coordinate + 1);
        return oc;
    }
    BruteForceResult bf;
    if (br.status == BoxResult::Status::ok) {
        try {
            bf = brute_force_optimum(inst, br.box);
        } catch (const TooLargeError& e) {
            oc.note = std::string("oracle skipped: ") + e.what();
            return oc;
        }
    }
    oc.ran = true;
    oc.oracle_feasible = bf.feasible;
    if (bf.feasible) oc.oracle_z = bf.z_star;
    if (rep.status == SolveStatus::integer_infeasible) {
        oc.agrees = !bf.feasible;
        return oc;
    }
    if (!bf.feasible) {
        oc.agrees = false;
        return oc;
    }
    const bool member = std::find(bf.argmax.begin(), bf.argmax.end(),
                                  rep.y_star) != bf.argmax.end();
    oc.agrees = bf.z_star == rep.z_star &&
                (rep.mode == RhsMode::lex ? rep.y_star == bf.argmax.back()
                                          : member);
    return oc;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Exact cutting-plane solver for integer programs in dual form"};
    app.name("gomcol");
    CLI::App* solve =
        app.add_subcommand("solve", "Solve an instance document");
    app.require_subcommand(1);

    std::string file;
    solve->add_option("file", file, "instance document path")->required();
    std::string mode = "lex";
    solve->add_option("--mode", mode,
                      "lex (guaranteed finite) or plain (raw right-hand side)")
        ->check(CLI::IsMember({"lex", "plain"}));
    std::string source = "min";
    solve
        ->add_option("--source", source,
                     "fractional coordinates cut per round (plain mode)")
        ->check(CLI::IsMember({"min", "all"}));
    std::string entering = "dantzig";
    solve->add_option("--entering", entering, "entering rule")
        ->check(CLI::IsMember({"dantzig", "bland"}));
    bool trace = false;
    solve->add_flag("--trace", trace, "log PIVOT/CUT/OPT events");
    bool oracle = false;
    solve->add_flag("--oracle-check", oracle,
                    "verify the result by brute-force enumeration");
    std::size_t max_pivots = 0;
    solve->add_option("--max-pivots", max_pivots, "fixed total pivot cap");
    std::size_t max_cuts = 10000;
    solve->add_option("--max-cuts", max_cuts, "cut cap");
    bool json = false;
    solve->add_flag("--json", json, "machine-readable report");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(std::move(rev));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 64;
    }

    if (mode == "lex" && source == "all") {
        err << "error: --source all applies to plain mode only\n";
        return 64;
    }

    try {
        const DualFormInstance inst = parse_instance_file(file);
        SolveOptions opts;
        opts.entering =
            entering == "bland" ? EnteringRule::bland : EnteringRule::dantzig;
        opts.source = source == "all" ? SourcePolicy::all_fractional
                                      : SourcePolicy::min_fractional;
        if (solve->count("--max-pivots") > 0) opts.max_pivots = max_pivots;
        opts.max_cuts = max_cuts;
        StreamTraceSink sink(out);
        if (trace) opts.sink = &sink;

        const SolveReport rep =
            mode == "lex" ? solve_lex(inst, opts) : solve_plain(inst, opts);

        OracleCheck check;
        if (oracle) check = run_oracle_check(inst, rep);

        if (json) {
            out << format_report_json(rep, oracle ? &check : nullptr) << "\n";
        } else {
            out << format_report_text(rep);
            if (oracle) {
                if (!check.ran)
                    out << "oracle: skipped (" << check.note << ")\n";
                else if (check.agrees)
                    out << "oracle: agrees\n";
                else
                    out << "oracle: DISAGREES\n";
            }
        }
        if (oracle && check.ran && !check.agrees) {
            err << "error: oracle disagrees with the solver result\n";
            return 70;
        }
        switch (rep.status) {
            case SolveStatus::optimal:
                return 0;
            case SolveStatus::integer_infeasible:
                return 2;
            case SolveStatus::limit_reached:
                return 3;
        }
        return 70;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 65;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << "\n";
        return 65;
    } catch (const RankError& e) {
        err << "error: " << e.what() << "\n";
        return 65;
    } catch (const BoundednessError& e) {
        err << "error: " << e.what() << "\n";
        return 65;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return 70;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 70;
    }
}

}  // namespace gomcol
