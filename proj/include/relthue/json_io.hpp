#pragma once

#include <json.hpp>
#include <map>

#include "relthue/abs_thue.hpp"
#include "relthue/constants.hpp"
#include "relthue/oracle.hpp"
#include "relthue/reduction.hpp"

namespace relthue {

using json = nlohmann::json;

// Integers are serialized as decimal strings (coefficients and coordinates
// can exceed every native JSON number range); rationals carry both the
// 4-decimal rounded rendering and the exact value.
json int_json(const Int& v);
json rat_json(const Rat& q, int digits = 4);

Int parse_int_json(const json& j);

json field_json(const QuadField& field);
json ring_element_json(const RingElement& e);
RingElement parse_ring_element(const json& j);
json form_json(const BinaryForm& form);
json roots_json(const RootSystem& roots);
json constants_json(const ReductionConstants& c);
json task_json(const Subproblem& task);
json plan_json(const ReductionPlan& plan);
json abs_result_json(const AbsResult& r);
json solution_set_json(const SolutionSet& s, const QuadField& field);
json box_json(const Box& box);
json trace_json(const ExecutionTrace& trace);

std::set<SolutionQuad> parse_solution_quads(const json& j);

/// External absolute-solution lists, keyed by the bound k. The solution
/// set of |F(u,v)| <= k depends only on k, so one list serves any task
/// with that bound.
struct AbsImport {
    std::map<Int, AbsResult> by_bound;
};
AbsImport parse_abs_import(const json& j);

}  // namespace relthue
