#include "relthue/json_io.hpp"

#include <limits>

#include "relthue/errors.hpp"

namespace relthue {

json int_json(const Int& v) { return v.str(); }

json rat_json(const Rat& q, int digits) {
    return json{{"decimal", decimal_string(q, digits)}, {"exact", rational_string(q)}};
}

Int parse_int_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw solver_error(errc::input_error, "expected integer or decimal string");
}

json field_json(const QuadField& field) {
    return json{{"m", int_json(field.m)},
                {"case", field.field_case == FieldCase::I ? "I" : "II"}};
}

json ring_element_json(const RingElement& e) {
    return json{{"x1", int_json(e.x1)}, {"x2", int_json(e.x2)}};
}

RingElement parse_ring_element(const json& j) {
    return {parse_int_json(j.at("x1")), parse_int_json(j.at("x2"))};
}

json form_json(const BinaryForm& form) {
    json coeffs = json::array();
    for (const Int& c : form.coeffs()) coeffs.push_back(int_json(c));
    return json{{"degree", form.degree()}, {"coeffs", coeffs}};
}

json roots_json(const RootSystem& roots) {
    json out = json::array();
    for (const RootInterval& iv : roots.intervals()) {
        Rat mid = (iv.lo + iv.hi) / 2;
        out.push_back(json{{"lo", rational_string(iv.lo)},
                           {"hi", rational_string(iv.hi)},
                           {"approx", decimal_string(mid, 5)}});
    }
    return out;
}

json constants_json(const ReductionConstants& c) {
    json out;
    out["eps"] = rat_json(c.eps);
    out["eta"] = rat_json(c.eta);
    out["K"] = rat_json(c.K);
    out["n"] = c.n;
    out["m"] = int_json(c.m);
    out["A_lower"] = rat_json(c.A_lower);
    out["B_lower"] = rat_json(c.B_lower);
    out["C"] = rat_json(c.C);
    out["C1"] = rat_json(c.C1);
    out["C2"] = rat_json(c.C2);
    out["D"] = rat_json(c.D);
    out["E"] = rat_json(c.E);
    out["t_y1"] = rat_json(c.t_y1);
    out["t_y2"] = rat_json(c.t_y2);
    json k;
    k["IA1"] = int_json(c.k_IA1);
    k["IA2"] = int_json(c.k_IA2);
    k["IB2"] = int_json(c.k_IB2);
    k["IIA1"] = int_json(c.k_IIA1);
    k["IIA2"] = int_json(c.k_IIA2);
    k["IIB2"] = int_json(c.k_IIB2);
    k["B1"] = int_json(c.k_B1);
    out["k"] = k;
    return out;
}

namespace {
json range_json(const CoordRange& r) {
    return json{{"lo", int_json(r.lo)}, {"hi", int_json(r.hi)}};
}
const char* target_name(TargetPair t) {
    switch (t) {
        case TargetPair::XY1: return "XY1";
        case TargetPair::XY2: return "XY2";
        case TargetPair::XYI: return "XYI";
    }
    return "?";
}
}  // namespace

json task_json(const Subproblem& task) {
    if (const auto* box = std::get_if<EnumerationBox>(&task)) {
        return json{{"kind", "enum_box"},
                    {"label", box->label},
                    {"x1", range_json(box->x1)},
                    {"x2", range_json(box->x2)},
                    {"y1", range_json(box->y1)},
                    {"y2", range_json(box->y2)},
                    {"x_norm_max", rational_string(box->x_norm_max)},
                    {"y_norm_max", rational_string(box->y_norm_max)}};
    }
    const auto& t = std::get<AbsoluteTask>(task);
    return json{{"kind", "absolute"},
                {"label", t.label},
                {"target", target_name(t.target)},
                {"k", int_json(t.k)},
                {"residual_bound", int_json(t.residual_bound)}};
}

json plan_json(const ReductionPlan& plan) {
    json tasks = json::array();
    for (const Subproblem& t : plan.tasks) tasks.push_back(task_json(t));
    return json{{"field", field_json(plan.field)},
                {"K", rat_json(plan.K)},
                {"tasks", tasks}};
}

json abs_result_json(const AbsResult& r) {
    json sols = json::array();
    for (const auto& [x, y] : r.solutions) sols.push_back(json::array({int_json(x), int_json(y)}));
    return json{{"solutions", sols},
                {"complete_up_to", r.complete_up_to},
                {"heuristic_extra", r.heuristic_extra}};
}

json solution_set_json(const SolutionSet& s, const QuadField& field) {
    json sols = json::array();
    for (const SolutionQuad& q : s.solutions)
        sols.push_back(json::array(
            {int_json(q[0]), int_json(q[1]), int_json(q[2]), int_json(q[3])}));
    json cert{{"complete_y_radius", decimal_string(s.cert.complete_y_radius, 1)},
              {"heuristic_extra", s.cert.heuristic_extra},
              {"warnings", s.cert.warnings}};
    return json{{"m", int_json(field.m)},
                {"case", field.field_case == FieldCase::I ? "I" : "II"},
                {"count", s.solutions.size()},
                {"include_trivial", s.include_trivial},
                {"solutions", sols},
                {"certificate", cert}};
}

json box_json(const Box& box) {
    return json{{"x1", range_json(box.x1)},
                {"x2", range_json(box.x2)},
                {"y1", range_json(box.y1)},
                {"y2", range_json(box.y2)}};
}

json trace_json(const ExecutionTrace& trace) {
    json abs = json::array();
    for (const auto& [label, r] : trace.abs_results)
        abs.push_back(json{{"task", label}, {"result", abs_result_json(r)}});
    json lifts = json::array();
    for (const LiftRecord& rec : trace.lifts)
        lifts.push_back(json{{"task", rec.task},
                             {"candidate", json::array({int_json(rec.candidate[0]),
                                                        int_json(rec.candidate[1]),
                                                        int_json(rec.candidate[2]),
                                                        int_json(rec.candidate[3])})},
                             {"accepted", rec.accepted},
                             {"reason", rec.reason}});
    return json{{"abs_tasks", abs}, {"lifts", lifts}, {"lifts_truncated", trace.lifts_truncated}};
}

std::set<SolutionQuad> parse_solution_quads(const json& j) {
    std::set<SolutionQuad> out;
    for (const json& entry : j) {
        if (!entry.is_array() || entry.size() != 4)
            throw solver_error(errc::input_error, "solution entries must be 4-element arrays");
        out.insert({parse_int_json(entry[0]), parse_int_json(entry[1]),
                    parse_int_json(entry[2]), parse_int_json(entry[3])});
    }
    return out;
}

AbsImport parse_abs_import(const json& j) {
    AbsImport imp;
    for (const json& entry : j) {
        Int k = parse_int_json(entry.at("k"));
        AbsResult r;
        r.complete_up_to = entry.value("complete_up_to", std::numeric_limits<long long>::max());
        r.heuristic_extra = false;
        for (const json& s : entry.at("solutions")) {
            if (!s.is_array() || s.size() != 2)
                throw solver_error(errc::input_error, "absolute solutions must be [x, y] pairs");
            Int x = parse_int_json(s[0]), y = parse_int_json(s[1]);
            if (y < 0 || (y == 0 && x < 0)) {
                x = -x;
                y = -y;
            }
            r.solutions.emplace(x, y);
        }
        imp.by_bound[k] = std::move(r);
    }
    return imp;
}

}  // namespace relthue
