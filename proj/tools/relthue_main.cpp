#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "relthue/json_io.hpp"
#include "relthue/oracle.hpp"
#include "relthue/reduction.hpp"

using namespace relthue;

namespace {

int exit_code_for(errc code) {
    switch (code) {
        case errc::reducible: return 3;
        case errc::not_all_real_distinct: return 4;
        case errc::box_too_large: return 5;
        default: return 2;
    }
}

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw solver_error(errc::input_error, "empty number");
    auto slash = s.find('/');
    if (slash != std::string::npos)
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(Int(s));
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    bool neg = !head.empty() && head[0] == '-';
    if (neg) head.erase(0, 1);
    if (head.empty()) head = "0";
    Int scale = pow_int(10, static_cast<unsigned>(tail.size()));
    Rat v = Rat(Int(head)) + Rat(Int(tail.empty() ? "0" : tail), scale);
    return neg ? Rat(-v) : v;
}

std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw solver_error(errc::input_error, "empty list entry");
        out.emplace_back(item);
    }
    return out;
}

std::vector<std::pair<Rat, Rat>> parse_grid(const std::string& spec) {
    std::vector<std::pair<Rat, Rat>> grid;
    if (spec.empty() || spec == "default") {
        for (const char* e : {"0.05", "0.1", "0.2", "0.3", "0.5"})
            for (const char* h : {"0.05", "0.1", "0.2", "0.3", "0.5"})
                grid.emplace_back(parse_rational(e), parse_rational(h));
        return grid;
    }
    std::stringstream ss(spec);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
        auto comma = pair.find(',');
        if (comma == std::string::npos)
            throw solver_error(errc::input_error, "grid entries must look like eps,eta");
        grid.emplace_back(parse_rational(pair.substr(0, comma)),
                          parse_rational(pair.substr(comma + 1)));
    }
    return grid;
}

struct Timings {
    double roots_ms = 0, constants_ms = 0, solve_ms = 0, oracle_ms = 0;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void print_report(std::ostream& os, const BinaryForm& form, const QuadField& field,
                  const RootSystem& roots, const Rat& a_lower, const Rat& b_lower,
                  const ReductionConstants& c, const std::optional<Rat>& auto_cost,
                  const ReductionPlan& plan, const ExecutionTrace& trace,
                  const SolutionSet& result, const std::optional<Box>& oracle_box,
                  const std::optional<SolutionSet>& oracle_result, const Timings& times) {
    os << "Relative Thue inequality |F(x,y)| <= " << decimal_string(plan.K, 4)
       << " over the integers of Q(i*sqrt(" << field.m.str() << "))  (case "
       << (field.field_case == FieldCase::I ? "I" : "II") << ")\n";
    os << "F coefficients (descending x powers):";
    for (const Int& cf : form.coeffs()) os << ' ' << cf.str();
    os << "\n\nCertified roots of F(x,1):\n";
    for (const RootInterval& iv : roots.intervals())
        os << "  " << decimal_string((iv.lo + iv.hi) / 2, 5) << "  (width <= "
           << decimal_string(iv.hi - iv.lo, 14) << ")\n";
    os << "Root gap bounds: A >= " << decimal_string(a_lower, 4) << ", B >= "
       << decimal_string(b_lower, 4) << "\n";
    os << "Parameters: eps = " << decimal_string(c.eps, 4) << ", eta = "
       << decimal_string(c.eta, 4);
    if (auto_cost) os << "  (grid search, cost " << decimal_string(*auto_cost, 1) << ")";
    os << "\n\nConstants:\n";
    auto line = [&](const char* name, const Rat& v) {
        os << "  " << name << " = " << decimal_string(v, 4) << "  (exact "
           << rational_string(v) << ")\n";
    };
    line("C ", c.C);
    line("C1", c.C1);
    line("C2", c.C2);
    line("D ", c.D);
    line("E ", c.E);
    line("t_y1", c.t_y1);
    line("t_y2", c.t_y2);
    os << "Absolute bounds: A1 -> " << c.k_A1().str() << ", B1 -> " << c.k_B1.str()
       << ", A2 -> " << c.k_A2().str() << ", B2 -> " << c.k_B2().str() << "\n";

    os << "\nPlan:\n";
    for (const Subproblem& t : plan.tasks) {
        if (const auto* box = std::get_if<EnumerationBox>(&t)) {
            os << "  box '" << box->label << "': x1 in [" << box->x1.lo.str() << ", "
               << box->x1.hi.str() << "], x2 in [" << box->x2.lo.str() << ", "
               << box->x2.hi.str() << "], y1 in [" << box->y1.lo.str() << ", "
               << box->y1.hi.str() << "], y2 in [" << box->y2.lo.str() << ", "
               << box->y2.hi.str() << "]\n";
        } else {
            const auto& task = std::get<AbsoluteTask>(t);
            os << "  absolute " << task.label << ": |F| <= " << task.k.str()
               << (task.residual_bound > 0
                       ? ", residual coordinate up to " + task.residual_bound.str()
                       : std::string())
               << "\n";
        }
    }

    os << "\nAbsolute task results:\n";
    for (const auto& [label, r] : trace.abs_results) {
        os << "  " << label << ": " << r.solutions.size() << " solutions up to sign {";
        size_t shown = 0;
        for (const auto& [x, y] : r.solutions) {
            if (shown++) os << ", ";
            if (shown > 12) {
                os << "...";
                break;
            }
            os << "(" << x.str() << "," << y.str() << ")";
        }
        os << "}\n";
    }

    size_t accepted = 0, rejected = 0;
    for (const LiftRecord& rec : trace.lifts) (rec.accepted ? accepted : rejected)++;
    os << "\nLifted candidates: " << accepted << " accepted, " << rejected << " rejected";
    if (trace.lifts_truncated) os << " (trace truncated)";
    os << "\n";
    size_t shown = 0;
    for (const LiftRecord& rec : trace.lifts) {
        if (shown++ >= 20) {
            os << "  ...\n";
            break;
        }
        os << "  [" << rec.task << "] (" << rec.candidate[0].str() << ","
           << rec.candidate[1].str() << "," << rec.candidate[2].str() << ","
           << rec.candidate[3].str() << ") " << (rec.accepted ? "accepted" : "rejected")
           << ": " << rec.reason << "\n";
    }

    os << "\nSolutions up to sign, as (x1,x2,y1,y2)";
    if (!result.include_trivial) os << " excluding (0,0,0,0)";
    os << ":\n";
    for (const SolutionQuad& q : result.solutions)
        os << "  (" << q[0].str() << ", " << q[1].str() << ", " << q[2].str() << ", "
           << q[3].str() << ")\n";
    os << "Total: " << result.solutions.size() << "\n";

    os << "\nCompleteness certificate: all solutions with |y| <= "
       << decimal_string(result.cert.complete_y_radius, 1) << " are present.\n";
    for (const std::string& w : result.cert.warnings) os << "  note: " << w << "\n";

    if (oracle_box && oracle_result) {
        os << "\nOracle box scan: x1 +-" << oracle_box->x1.hi.str() << ", x2 +-"
           << oracle_box->x2.hi.str() << ", y1 +-" << oracle_box->y1.hi.str() << ", y2 +-"
           << oracle_box->y2.hi.str() << " -> " << oracle_result->solutions.size()
           << " solutions\n";
        std::set<SolutionQuad> clipped;
        for (const SolutionQuad& q : result.solutions)
            if (oracle_box->x1.contains(q[0]) && oracle_box->x2.contains(q[1]) &&
                oracle_box->y1.contains(q[2]) && oracle_box->y2.contains(q[3]))
                clipped.insert(q);
        os << "Oracle agreement: "
           << (clipped == oracle_result->solutions ? "EXACT MATCH" : "MISMATCH") << "\n";
    }

    os << "\nTiming: roots " << times.roots_ms << " ms, constants " << times.constants_ms
       << " ms, solve " << times.solve_ms << " ms";
    if (oracle_result) os << ", oracle " << times.oracle_ms << " ms";
    os << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "relthue: solve relative Thue inequalities |F(x,y)| <= K over imaginary "
        "quadratic integer rings by reduction to absolute Thue inequalities"};
    std::string form_str, k_str, eps_str = "0.1", eta_str = "0.1", width_str = "1e-12";
    std::string auto_grid, oracle_box_str, abs_import_path, out_path, weight_str = "1";
    long long m_in = 0, y_max = 100000, window_pad = 1;
    int convergent_depth = 0;
    std::string budget_str = "100000000";
    bool want_json = false, want_report = false, include_trivial = true;

    app.add_option("--form", form_str,
                   "comma-separated integer coefficients, highest power of x first")
        ->required();
    app.add_option("--m", m_in, "squarefree m > 1 of Q(i*sqrt(m))")->required();
    app.add_option("--K", k_str, "bound K >= 1 (integer or decimal)")->required();
    app.add_option("--eps", eps_str, "epsilon in (0,1), default 0.1");
    app.add_option("--eta", eta_str, "eta in (0,1), default 0.1");
    auto* auto_opt = app.add_option("--auto-params", auto_grid,
                                    "grid-search eps,eta (empty value = default grid; "
                                    "or 'e1,h1;e2,h2;...')");
    auto_opt->expected(0, 1);
    app.add_option("--cost-weight", weight_str, "weight of the equation count in the grid cost");
    app.add_option("--y-max", y_max, "certified-complete |y| range of the absolute solver");
    app.add_option("--window-pad", window_pad, "extra window slack (default 1)");
    app.add_option("--convergent-depth", convergent_depth,
                   "heuristic continued-fraction extension depth (default 0 = off)");
    app.add_option("--width", width_str, "root isolation width (default 1e-12)");
    app.add_option("--box-budget", budget_str, "enumeration box point budget");
    app.add_option("--oracle-box", oracle_box_str,
                   "run the brute-force oracle on radii x1,x2,y1,y2 and compare");
    app.add_option("--abs-import", abs_import_path,
                   "JSON file with externally solved absolute lists (trusted-external)");
    app.add_flag("--json", want_json, "emit the JSON document");
    app.add_flag("--report", want_report, "emit the human report (default)");
    app.add_flag("--include-trivial,!--no-include-trivial", include_trivial,
                 "report the trivial solution (0,0) (default on)");
    app.add_option("--out", out_path, "write the JSON document to a file");

    CLI11_PARSE(app, argc, argv);
    if (!want_json && !want_report) want_report = true;

    try {
        std::vector<Int> coeffs = parse_int_list(form_str);
        Rat K = parse_rational(k_str);
        Rat width;
        if (width_str == "1e-12")
            width = Rat(1, pow_int(10, 12));
        else
            width = parse_rational(width_str);
        if (width <= 0) throw solver_error(errc::input_error, "--width must be positive");

        BinaryForm form = parse_form(coeffs);
        QuadField field = make_field(Int(m_in));

        Timings times;
        Stopwatch sw_roots;
        RootSystem roots = isolate_roots(form, width);
        auto [a_lower, b_lower] = gap_constants(roots);
        times.roots_ms = sw_roots.ms();

        Stopwatch sw_constants;
        ReductionConstants constants;
        std::optional<Rat> auto_cost;
        if (auto_opt->count() > 0) {
            auto grid = parse_grid(auto_grid);
            auto [best, cost] =
                choose_parameters(a_lower, b_lower, K, form.degree(), field.m,
                                  max_root_upper(roots), grid, parse_rational(weight_str));
            constants = best;
            auto_cost = cost;
        } else {
            constants = compute_constants(a_lower, b_lower, K, form.degree(), field.m,
                                          parse_rational(eps_str), parse_rational(eta_str));
        }
        times.constants_ms = sw_constants.ms();

        ReductionPlan plan = build_plan(form, field, K, constants, roots);

        ExecConfig cfg;
        cfg.abs.y_max = y_max;
        cfg.abs.window_pad = window_pad;
        cfg.abs.convergent_depth = convergent_depth;
        cfg.box_budget = Int(budget_str);
        cfg.include_trivial = include_trivial;
        ExecutionTrace trace;
        cfg.trace = &trace;

        AbsSolver solver = AbsSolver(&solve_abs);
        bool imported = false;
        AbsImport imports;
        if (!abs_import_path.empty()) {
            std::ifstream in(abs_import_path);
            if (!in) throw solver_error(errc::input_error, "cannot read " + abs_import_path);
            imports = parse_abs_import(json::parse(in));
            imported = true;
            solver = [&imports](const BinaryForm& f, const Int& k, const RootSystem& rs,
                                const SearchConfig& sc) {
                auto it = imports.by_bound.find(k);
                if (it != imports.by_bound.end()) return it->second;
                return solve_abs(f, k, rs, sc);
            };
        }

        Stopwatch sw_solve;
        SolutionSet result = execute_plan(plan, solver, cfg);
        times.solve_ms = sw_solve.ms();
        if (imported)
            result.cert.warnings.push_back("some absolute lists were imported from " +
                                           abs_import_path + " and are trusted-external");

        std::optional<Box> oracle_box;
        std::optional<SolutionSet> oracle_result;
        if (!oracle_box_str.empty()) {
            std::vector<Int> radii = parse_int_list(oracle_box_str);
            if (radii.size() != 4)
                throw solver_error(errc::input_error, "--oracle-box needs 4 radii");
            oracle_box = Box::symmetric(radii[0], radii[1], radii[2], radii[3]);
            Stopwatch sw_oracle;
            SolutionSet ob = brute_force_box(form, field, K, *oracle_box, cfg.box_budget);
            if (!include_trivial) ob.solutions.erase(SolutionQuad{0, 0, 0, 0});
            ob.include_trivial = include_trivial;
            oracle_result = std::move(ob);
            times.oracle_ms = sw_oracle.ms();
        }

        if (want_report)
            print_report(std::cout, form, field, roots, a_lower, b_lower, constants,
                         auto_cost, plan, trace, result, oracle_box, oracle_result, times);

        if (want_json || !out_path.empty()) {
            json doc;
            doc["schema"] = 1;
            doc["inputs"] = json{{"form", form_str},
                                 {"m", m_in},
                                 {"K", k_str},
                                 {"eps", decimal_string(constants.eps, 4)},
                                 {"eta", decimal_string(constants.eta, 4)},
                                 {"y_max", y_max},
                                 {"include_trivial", include_trivial}};
            doc["form"] = form_json(form);
            doc["field"] = field_json(field);
            doc["roots"] = roots_json(roots);
            doc["gap_constants"] =
                json{{"A_lower", rat_json(a_lower)}, {"B_lower", rat_json(b_lower)}};
            doc["constants"] = constants_json(constants);
            if (auto_cost) doc["auto_params_cost"] = decimal_string(*auto_cost, 2);
            doc["plan"] = plan_json(plan);
            doc["execution"] = trace_json(trace);
            doc["solutions"] = solution_set_json(result, field);
            if (oracle_result) {
                doc["oracle"] = json{{"box", box_json(*oracle_box)},
                                     {"result", solution_set_json(*oracle_result, field)}};
            }
            doc["timing_ms"] = json{{"roots", times.roots_ms},
                                    {"constants", times.constants_ms},
                                    {"solve", times.solve_ms},
                                    {"oracle", times.oracle_ms}};
            std::string rendered = doc.dump(2);
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                if (!out) throw solver_error(errc::input_error, "cannot write " + out_path);
                out << rendered << "\n";
            }
            if (want_json) std::cout << rendered << "\n";
        }
        return 0;
    } catch (const solver_error& e) {
        std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
