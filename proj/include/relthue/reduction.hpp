#pragma once

#include <array>
#include <functional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "relthue/abs_thue.hpp"
#include "relthue/binary_form.hpp"
#include "relthue/constants.hpp"
#include "relthue/quad_field.hpp"

namespace relthue {

/// A solution as integral coordinates (x1, x2, y1, y2).
using SolutionQuad = std::array<Int, 4>;

struct CoordRange {
    Int lo, hi;
    bool contains(const Int& v) const { return lo <= v && v <= hi; }
    Int count() const { return hi < lo ? Int(0) : Int(hi - lo + 1); }
};

/// Exhaustive scan region: coordinate rectangle intersected with the exact
/// discs |x|^2 <= x_norm_max and |y|^2 <= y_norm_max.
struct EnumerationBox {
    std::string label;
    CoordRange x1, x2, y1, y2;
    Rat x_norm_max, y_norm_max;
};

enum class TaskKind { A1, B1, A2, B2 };
enum class TargetPair { XY1, XY2, XYI };

/// One derived absolute Thue inequality |F(u,v)| <= k with the lifting
/// data needed to reassemble full ring solutions:
///  A1: v-axis vanishes (2y1+y2 = 0 in CaseI, y1 = 0 in CaseII)
///  B1: y2 = 0
///  A2: large first y-coordinate, residual range for y2
///  B2: large y2, residual range for y1 (CaseII) or 2y1+y2 (CaseI)
struct AbsoluteTask {
    std::string label;
    TaskKind kind;
    TargetPair target;
    Int k;
    Int residual_bound;  // inclusive |.| bound on the complementary coordinate
};

using Subproblem = std::variant<EnumerationBox, AbsoluteTask>;

struct ReductionPlan {
    QuadField field;
    BinaryForm form;
    Rat K;
    ReductionConstants constants;
    RootSystem roots;
    std::vector<Subproblem> tasks;
};

struct Certificate {
    Rat complete_y_radius;  // solutions with |y| <= this are provably all found
    bool heuristic_extra = false;
    std::vector<std::string> warnings;
};

struct SolutionSet {
    std::set<SolutionQuad> solutions;
    bool include_trivial = true;
    Certificate cert;
};

struct LiftRecord {
    std::string task;
    SolutionQuad candidate;
    bool accepted;
    std::string reason;
};

struct ExecutionTrace {
    std::vector<std::pair<std::string, AbsResult>> abs_results;
    std::vector<LiftRecord> lifts;
    size_t lift_cap = 4000;
    bool lifts_truncated = false;
};

struct ExecConfig {
    SearchConfig abs;
    Int box_budget = pow_int(10, 8);
    bool include_trivial = true;
    ExecutionTrace* trace = nullptr;  // optional
};

using AbsSolver = std::function<AbsResult(const BinaryForm&, const Int&, const RootSystem&,
                                          const SearchConfig&)>;

/// Assemble the case tree: small-|y| enumeration box, the four absolute
/// tasks of the active case, and (when nonempty) the residual box where
/// both y-coordinates are small but y itself is large.
ReductionPlan build_plan(const BinaryForm& form, const QuadField& field, const Rat& K,
                         const ReductionConstants& constants, const RootSystem& roots);

/// Run every subproblem, lift the absolute solutions through the cross
/// condition x2*y1 = x1*y2, verify each candidate exactly against
/// |F(x,y)|^2 <= K^2, and return the sign-canonicalized set.
SolutionSet execute_plan(const ReductionPlan& plan, const AbsSolver& solver,
                         const ExecConfig& config);

inline SolutionSet execute_plan(const ReductionPlan& plan, const ExecConfig& config) {
    return execute_plan(plan, AbsSolver(&solve_abs), config);
}

/// Canonical representative of a sign orbit: the first nonzero coordinate
/// in the order (y1, y2, x1, x2) is made positive.
SolutionQuad canonical_quad(const SolutionQuad& q);

SolutionSet canonicalize_sign(const std::set<SolutionQuad>& raw, bool include_trivial = true);

/// Whether a point lies in the region some task is responsible for (used
/// by the coverage tests: every solution must be in some task's region).
bool task_covers(const ReductionPlan& plan, const Subproblem& task, const SolutionQuad& q);
/// Region of the implicit A2/B2 combination step.
bool combine_covers(const ReductionPlan& plan, const SolutionQuad& q);

}  // namespace relthue
