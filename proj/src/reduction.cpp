#include "relthue/reduction.hpp"

#include <algorithm>
#include <cassert>

#include "relthue/errors.hpp"

namespace relthue {

namespace {

// Inclusive residual bounds realizing the strict inequalities "|y1| < D"
// (CaseII) resp. "|2y1+y2| < 2D" (CaseI) and the matching y2 conditions on
// integers, from the upper-rounded thresholds.
std::pair<Int, Int> residual_bounds(const ReductionConstants& c) {
    Int s1 = strict_int_below(c.t_y1);
    Int s2 = strict_int_below(c.t_y2);
    if (s1 < 0) s1 = 0;
    if (s2 < 0) s2 = 0;
    return {s1, s2};
}

EnumerationBox make_box(const std::string& label, const QuadField& field, const Rat& K_root,
                        const Rat& maxroot, const Rat& sqrt_m_lo, const Rat& y_radius,
                        const Rat& y_norm_max) {
    EnumerationBox b;
    b.label = label;
    Rat X = K_root + maxroot * y_radius;
    b.x_norm_max = X * X;
    b.y_norm_max = y_norm_max;
    if (field.field_case == FieldCase::II) {
        Int bx1 = floor_rat(X), bx2 = floor_rat(X / sqrt_m_lo);
        Int by1 = floor_rat(y_radius), by2 = floor_rat(y_radius / sqrt_m_lo);
        b.x1 = {-bx1, bx1};
        b.x2 = {-bx2, bx2};
        b.y1 = {-by1, by1};
        b.y2 = {-by2, by2};
    } else {
        Int bx1 = floor_rat(X * (1 + 1 / sqrt_m_lo)), bx2 = floor_rat(2 * X / sqrt_m_lo);
        Int by1 = floor_rat(y_radius * (1 + 1 / sqrt_m_lo)),
            by2 = floor_rat(2 * y_radius / sqrt_m_lo);
        b.x1 = {-bx1, bx1};
        b.x2 = {-bx2, bx2};
        b.y1 = {-by1, by1};
        b.y2 = {-by2, by2};
    }
    return b;
}

struct ScaledNorms {
    // integral norm scale: 4 in CaseI, 1 in CaseII
    Int scale;
    Int x_cap, y_cap, k_cap;  // floor(scale * bound); negative means "no cap"
};

Int scaled_floor(const Rat& bound, const Int& scale) { return floor_rat(Rat(scale) * bound); }

class Verifier {
public:
    Verifier(const ReductionPlan& plan)
        : plan_(plan), ksq_(plan.K * plan.K),
          scale_(plan.field.field_case == FieldCase::I ? 4 : 1),
          k_cap_(scaled_floor(ksq_, scale_)) {}

    bool accepted(const SolutionQuad& q) const {
        RingElement x{q[0], q[1]}, y{q[2], q[3]};
        RingElement v = evaluate_ring(plan_.form, x, y, plan_.field);
        return abs_squared(v, plan_.field) <= ksq_;
    }

    const Rat& ksq() const { return ksq_; }
    const Int& scale() const { return scale_; }
    const Int& k_cap() const { return k_cap_; }

private:
    const ReductionPlan& plan_;
    Rat ksq_;
    Int scale_;
    Int k_cap_;
};

class Executor {
public:
    Executor(const ReductionPlan& plan, const AbsSolver& solver, const ExecConfig& config)
        : plan_(plan), solver_(solver), config_(config), verifier_(plan) {}

    SolutionSet run() {
        const AbsoluteTask* a2 = nullptr;
        const AbsoluteTask* b2 = nullptr;
        for (const Subproblem& sub : plan_.tasks) {
            if (const auto* box = std::get_if<EnumerationBox>(&sub)) {
                scan_box(*box);
            } else {
                const auto& task = std::get<AbsoluteTask>(sub);
                AbsResult r = solver_(plan_.form, task.k, plan_.roots, config_.abs);
                heuristic_ |= r.heuristic_extra;
                if (config_.trace) config_.trace->abs_results.emplace_back(task.label, r);
                lift(task, r);
                if (task.kind == TaskKind::A2) {
                    a2 = &task;
                    a2_list_ = std::move(r.solutions);
                } else if (task.kind == TaskKind::B2) {
                    b2 = &task;
                    b2_list_ = std::move(r.solutions);
                }
            }
        }
        if (a2 && b2) combine();

        SolutionSet out;
        out.solutions = std::move(sols_);
        out.include_trivial = config_.include_trivial;
        if (!config_.include_trivial) out.solutions.erase(SolutionQuad{0, 0, 0, 0});
        out.cert.heuristic_extra = heuristic_;
        Rat ymax(config_.abs.y_max);
        out.cert.complete_y_radius =
            plan_.field.field_case == FieldCase::I ? ymax / 2 : ymax;
        out.cert.warnings.push_back(
            "absolute tasks use a window scan certified complete for coordinate sizes up to " +
            Int(config_.abs.y_max).str() + "; solutions with |y| <= " +
            decimal_string(out.cert.complete_y_radius, 1) + " are provably all present");
        if (heuristic_)
            out.cert.warnings.push_back(
                "convergent extension was active: entries beyond the certified range are "
                "heuristic");
        return out;
    }

private:
    void record(const std::string& task, const SolutionQuad& q, bool ok,
                const std::string& reason) {
        if (!config_.trace) return;
        auto& tr = *config_.trace;
        if (tr.lifts.size() >= tr.lift_cap) {
            tr.lifts_truncated = true;
            return;
        }
        tr.lifts.push_back({task, q, ok, reason});
    }

    void try_candidate(const std::string& task, const SolutionQuad& q) {
        if (verifier_.accepted(q)) {
            sols_.insert(canonical_quad(q));
            record(task, q, true, "verified");
        } else {
            record(task, q, false, "norm exceeds bound");
        }
    }

    // expand an up-to-sign entry into both signed versions
    template <typename Fn>
    static void each_sign(const std::pair<Int, Int>& uv, Fn&& fn) {
        fn(uv.first, uv.second);
        if (uv.first != 0 || uv.second != 0) fn(Int(-uv.first), Int(-uv.second));
    }

    void lift(const AbsoluteTask& task, const AbsResult& r) {
        const bool case1 = plan_.field.field_case == FieldCase::I;
        for (const auto& uv : r.solutions) {
            each_sign(uv, [&](const Int& u, const Int& v) {
                switch (task.kind) {
                    case TaskKind::A1:
                        if (case1) {
                            // (x2, y2) with 2x1+x2 = 2y1+y2 = 0
                            if ((u % 2) != 0 || (v % 2) != 0) {
                                record(task.label, {0, u, 0, v}, false,
                                       "odd coordinate cannot halve");
                                return;
                            }
                            try_candidate(task.label, {-u / 2, u, -v / 2, v});
                        } else {
                            try_candidate(task.label, {0, u, 0, v});
                        }
                        break;
                    case TaskKind::B1:
                        try_candidate(task.label, {u, 0, v, 0});
                        break;
                    case TaskKind::A2:
                        if (v == 0) return;
                        for (Int t = -task.residual_bound; t <= task.residual_bound; ++t) {
                            if (t == 0) continue;
                            if (case1) {
                                // u = 2x1+x2, v = 2y1+y2, t = y2
                                if (((v - t) % 2) != 0) continue;
                                Int y1 = (v - t) / 2;
                                if ((u * y1) % v != 0) {
                                    record(task.label, {u, 0, y1, t}, false,
                                           "cross condition has no integer solution");
                                    continue;
                                }
                                Int x1 = u * y1 / v;
                                try_candidate(task.label, {x1, u - 2 * x1, y1, t});
                            } else {
                                // u = x1, v = y1, t = y2
                                if ((u * t) % v != 0) {
                                    record(task.label, {u, 0, v, t}, false,
                                           "cross condition has no integer solution");
                                    continue;
                                }
                                try_candidate(task.label, {u, u * t / v, v, t});
                            }
                        }
                        break;
                    case TaskKind::B2:
                        if (v == 0) return;
                        for (Int t = -task.residual_bound; t <= task.residual_bound; ++t) {
                            if (t == 0) continue;
                            if (case1) {
                                // u = x2, v = y2, t = 2y1+y2
                                if (((t - v) % 2) != 0) continue;
                                Int y1 = (t - v) / 2;
                                if ((u * y1) % v != 0) {
                                    record(task.label, {0, u, y1, v}, false,
                                           "cross condition has no integer solution");
                                    continue;
                                }
                                try_candidate(task.label, {u * y1 / v, u, y1, v});
                            } else {
                                // u = x2, v = y2, t = y1
                                if ((u * t) % v != 0) {
                                    record(task.label, {0, u, t, v}, false,
                                           "cross condition has no integer solution");
                                    continue;
                                }
                                try_candidate(task.label, {u * t / v, u, t, v});
                            }
                        }
                        break;
                }
            });
        }
    }

    void combine() {
        const bool case1 = plan_.field.field_case == FieldCase::I;
        const std::string label = case1 ? "IA2*IB2" : "IIA2*IIB2";
        for (const auto& p1 : a2_list_) {
            if (p1.second == 0) continue;
            for (const auto& p2 : b2_list_) {
                if (p2.second == 0) continue;
                each_sign(p1, [&](const Int& u1, const Int& v1) {
                    each_sign(p2, [&](const Int& u2, const Int& v2) {
                        if (case1) {
                            // (u1, v1) = (2x1+x2, 2y1+y2), (u2, v2) = (x2, y2)
                            if (((u1 - u2) % 2) != 0 || ((v1 - v2) % 2) != 0) return;
                            SolutionQuad q{(u1 - u2) / 2, u2, (v1 - v2) / 2, v2};
                            if (q[1] * q[2] != q[0] * q[3]) {
                                record(label, q, false, "cross condition fails");
                                return;
                            }
                            try_candidate(label, q);
                        } else {
                            SolutionQuad q{u1, u2, v1, v2};
                            if (q[1] * q[2] != q[0] * q[3]) {
                                record(label, q, false, "cross condition fails");
                                return;
                            }
                            try_candidate(label, q);
                        }
                    });
                });
            }
        }
    }

    void scan_box(const EnumerationBox& box) {
        Int points = box.x1.count() * box.x2.count() * box.y1.count() * box.y2.count();
        if (points > config_.box_budget)
            throw solver_error(errc::box_too_large,
                               "enumeration box exceeds the point budget (" + points.str() +
                                   " > " + config_.box_budget.str() + ")");
        const QuadField& field = plan_.field;
        const Int& scale = verifier_.scale();
        Int x_cap = scaled_floor(box.x_norm_max, scale);
        Int y_cap = scaled_floor(box.y_norm_max, scale);

        Int coord_max = 0;
        for (const CoordRange* r : {&box.x1, &box.x2, &box.y1, &box.y2})
            coord_max = std::max(coord_max, std::max(Int(boost::multiprecision::abs(r->lo)),
                                                     Int(boost::multiprecision::abs(r->hi))));
        bool fast = ring_eval_fits_int128(plan_.form, field, coord_max, coord_max) &&
                    fits_int128(x_cap) && fits_int128(y_cap) && fits_int128(verifier_.k_cap());
        if (fast)
            scan_box_i128(box, x_cap, y_cap);
        else
            scan_box_exact(box, x_cap, y_cap);
    }

    // scaled |e|^2: (2a+b)^2 + m b^2 in CaseI (4x the norm), a^2 + m b^2 in CaseII
    static int128 norm_scaled_i128(int128 a, int128 b, long long m, FieldCase fc) {
        if (fc == FieldCase::II) return a * a + static_cast<int128>(m) * b * b;
        int128 u = 2 * a + b;
        return u * u + static_cast<int128>(m) * b * b;
    }

    void scan_box_i128(const EnumerationBox& box, const Int& x_cap, const Int& y_cap) {
        const QuadField& field = plan_.field;
        long long m = to_ll(field.m);
        FieldCase fc = field.field_case;
        int128 xcap = to_int128(x_cap), ycap = to_int128(y_cap),
               kcap = to_int128(verifier_.k_cap());
        long long x1lo = to_ll(box.x1.lo), x1hi = to_ll(box.x1.hi);
        long long x2lo = to_ll(box.x2.lo), x2hi = to_ll(box.x2.hi);
        long long y1lo = to_ll(box.y1.lo), y1hi = to_ll(box.y1.hi);
        long long y2lo = to_ll(box.y2.lo), y2hi = to_ll(box.y2.hi);
        for (long long y1 = y1lo; y1 <= y1hi; ++y1)
            for (long long y2 = y2lo; y2 <= y2hi; ++y2) {
                if (norm_scaled_i128(y1, y2, m, fc) > ycap) continue;
                RingElement128 y{y1, y2};
                for (long long x1 = x1lo; x1 <= x1hi; ++x1)
                    for (long long x2 = x2lo; x2 <= x2hi; ++x2) {
                        if (norm_scaled_i128(x1, x2, m, fc) > xcap) continue;
                        RingElement128 v =
                            evaluate_ring_i128(plan_.form, {x1, x2}, y, m, fc);
                        if (norm_scaled_i128(v.x1, v.x2, m, fc) <= kcap)
                            sols_.insert(canonical_quad(
                                {Int(x1), Int(x2), Int(y1), Int(y2)}));
                    }
            }
    }

    void scan_box_exact(const EnumerationBox& box, const Int& x_cap, const Int& y_cap) {
        const QuadField& field = plan_.field;
        auto norm_scaled = [&](const Int& a, const Int& b) {
            if (field.field_case == FieldCase::II) return Int(a * a + field.m * b * b);
            Int u = 2 * a + b;
            return Int(u * u + field.m * b * b);
        };
        for (Int y1 = box.y1.lo; y1 <= box.y1.hi; ++y1)
            for (Int y2 = box.y2.lo; y2 <= box.y2.hi; ++y2) {
                if (norm_scaled(y1, y2) > y_cap) continue;
                RingElement y{y1, y2};
                for (Int x1 = box.x1.lo; x1 <= box.x1.hi; ++x1)
                    for (Int x2 = box.x2.lo; x2 <= box.x2.hi; ++x2) {
                        if (norm_scaled(x1, x2) > x_cap) continue;
                        RingElement v = evaluate_ring(plan_.form, {x1, x2}, y, field);
                        if (norm_scaled(v.x1, v.x2) <= verifier_.k_cap())
                            sols_.insert(canonical_quad({x1, x2, y1, y2}));
                    }
            }
    }

    const ReductionPlan& plan_;
    const AbsSolver& solver_;
    const ExecConfig& config_;
    Verifier verifier_;
    std::set<SolutionQuad> sols_;
    std::set<std::pair<Int, Int>> a2_list_, b2_list_;
    bool heuristic_ = false;
};

}  // namespace

ReductionPlan build_plan(const BinaryForm& form, const QuadField& field, const Rat& K,
                         const ReductionConstants& constants, const RootSystem& roots) {
    ReductionPlan plan{field, form, K, constants, roots, {}};
    const bool case1 = field.field_case == FieldCase::I;
    Rat maxroot = max_root_upper(roots);
    const Rat& sqlo = constants.sqrt_m_lo;

    Rat r_small = constants.small_y_radius();
    plan.tasks.push_back(make_box("small", field, constants.K_root, maxroot, sqlo, r_small,
                                  r_small * r_small));

    auto [s1, s2] = residual_bounds(constants);
    if (s1 >= 1 && s2 >= 1) {
        // both y-coordinates small but |y| possibly above the small radius
        Rat y_norm;
        Rat y_radius;
        if (case1) {
            Int y1b = floor_rat(Rat(s1 + s2) / 2);
            Rat top = Rat((2 * y1b + s2) * (2 * y1b + s2) + field.m * s2 * s2) / 4;
            y_norm = top;
            y_radius = sqrt_bounds(top).second;
        } else {
            y_norm = Rat(s1 * s1 + field.m * s2 * s2);
            y_radius = sqrt_bounds(y_norm).second;
        }
        EnumerationBox b = make_box("residual", field, constants.K_root, maxroot, sqlo,
                                    y_radius, y_norm);
        // tighten the y-ranges to the residual rectangle
        if (case1) {
            Int y1b = floor_rat(Rat(s1 + s2) / 2);
            b.y1 = {-y1b, y1b};
            b.y2 = {-s2, s2};
        } else {
            b.y1 = {-s1, s1};
            b.y2 = {-s2, s2};
        }
        plan.tasks.push_back(b);
    }

    const char* pfx = case1 ? "I" : "II";
    plan.tasks.push_back(AbsoluteTask{std::string(pfx) + "A1", TaskKind::A1, TargetPair::XY2,
                                      constants.k_A1(), 0});
    plan.tasks.push_back(AbsoluteTask{std::string(pfx) + "B1", TaskKind::B1, TargetPair::XY1,
                                      constants.k_B1, 0});
    plan.tasks.push_back(AbsoluteTask{std::string(pfx) + "A2", TaskKind::A2,
                                      case1 ? TargetPair::XYI : TargetPair::XY1,
                                      constants.k_A2(), s2});
    plan.tasks.push_back(AbsoluteTask{std::string(pfx) + "B2", TaskKind::B2, TargetPair::XY2,
                                      constants.k_B2(), s1});
    return plan;
}

SolutionSet execute_plan(const ReductionPlan& plan, const AbsSolver& solver,
                         const ExecConfig& config) {
    Executor ex(plan, solver, config);
    return ex.run();
}

SolutionQuad canonical_quad(const SolutionQuad& q) {
    for (int idx : {2, 3, 0, 1}) {
        const Int& v = q[static_cast<size_t>(idx)];
        if (v == 0) continue;
        if (v > 0) return q;
        return {-q[0], -q[1], -q[2], -q[3]};
    }
    return q;
}

SolutionSet canonicalize_sign(const std::set<SolutionQuad>& raw, bool include_trivial) {
    SolutionSet out;
    out.include_trivial = include_trivial;
    for (const SolutionQuad& q : raw) {
        if (!include_trivial && q == SolutionQuad{0, 0, 0, 0}) continue;
        out.solutions.insert(canonical_quad(q));
    }
    return out;
}

bool task_covers(const ReductionPlan& plan, const Subproblem& task, const SolutionQuad& q) {
    const QuadField& field = plan.field;
    const bool case1 = field.field_case == FieldCase::I;
    RingElement x{q[0], q[1]}, y{q[2], q[3]};
    if (const auto* box = std::get_if<EnumerationBox>(&task)) {
        return box->x1.contains(q[0]) && box->x2.contains(q[1]) && box->y1.contains(q[2]) &&
               box->y2.contains(q[3]) && abs_squared(x, field) <= box->x_norm_max &&
               abs_squared(y, field) <= box->y_norm_max;
    }
    const auto& t = std::get<AbsoluteTask>(task);
    Rat r = plan.constants.small_y_radius();
    if (!(abs_squared(y, field) > r * r)) return false;  // small region is the box's
    auto [s1, s2] = residual_bounds(plan.constants);
    Int first = case1 ? Int(2 * q[2] + q[3]) : q[2];
    Int second = q[3];
    Int af = boost::multiprecision::abs(first), as = boost::multiprecision::abs(second);
    switch (t.kind) {
        case TaskKind::A1: return first == 0;
        case TaskKind::B1: return second == 0;
        case TaskKind::A2: return af > s1 && as >= 1 && as <= s2;
        case TaskKind::B2: return as > s2 && af >= 1 && af <= s1;
    }
    return false;
}

bool combine_covers(const ReductionPlan& plan, const SolutionQuad& q) {
    const QuadField& field = plan.field;
    RingElement y{q[2], q[3]};
    Rat r = plan.constants.small_y_radius();
    if (!(abs_squared(y, field) > r * r)) return false;
    auto [s1, s2] = residual_bounds(plan.constants);
    Int first = field.field_case == FieldCase::I ? Int(2 * q[2] + q[3]) : q[2];
    return boost::multiprecision::abs(first) > s1 && boost::multiprecision::abs(q[3]) > s2;
}

}  // namespace relthue
