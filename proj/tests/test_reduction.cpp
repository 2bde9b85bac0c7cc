#include <doctest.h>

#include <random>

#include "relthue/oracle.hpp"
#include "relthue/reduction.hpp"
#include "support/testgen.hpp"

using namespace relthue;

namespace {

struct Pipeline {
    BinaryForm form;
    QuadField field;
    Rat K;
    RootSystem roots;
    ReductionConstants constants;
    ReductionPlan plan;
};

Pipeline make_pipeline(const std::vector<Int>& coeffs, const Int& m, const Rat& K,
                       const Rat& eps = Rat(1, 10), const Rat& eta = Rat(1, 10)) {
    BinaryForm form = parse_form(coeffs);
    QuadField field = make_field(m);
    RootSystem roots = isolate_roots(form, Rat(1, pow_int(10, 12)));
    auto [a, b] = gap_constants(roots);
    ReductionConstants constants =
        compute_constants(a, b, K, form.degree(), m, eps, eta);
    ReductionPlan plan = build_plan(form, field, K, constants, roots);
    return {form, field, K, roots, constants, std::move(plan)};
}

const std::set<SolutionQuad> kSampleSolutions{{0, 0, 0, 0},
                                              {1, 0, 0, 0},
                                              {2, 0, 0, 0},
                                              {-1, 0, 2, 0},
                                              {-2, 0, 4, 0}};

std::set<SolutionQuad> restrict_to_box(const std::set<SolutionQuad>& s, const Box& box) {
    std::set<SolutionQuad> out;
    for (const SolutionQuad& q : s)
        if (box.x1.contains(q[0]) && box.x2.contains(q[1]) && box.y1.contains(q[2]) &&
            box.y2.contains(q[3]))
            out.insert(q);
    return out;
}

// coverage of a point by the plan restricted to a subset of tasks
bool covered(const ReductionPlan& plan, const std::vector<size_t>& kept, const SolutionQuad& q) {
    bool has_a2 = false, has_b2 = false;
    for (size_t i : kept) {
        if (task_covers(plan, plan.tasks[i], q)) return true;
        if (const auto* t = std::get_if<AbsoluteTask>(&plan.tasks[i])) {
            has_a2 |= t->kind == TaskKind::A2;
            has_b2 |= t->kind == TaskKind::B2;
        }
    }
    return has_a2 && has_b2 && combine_covers(plan, q);
}

}  // namespace

TEST_CASE("canonicalize_sign") {
    SolutionSet s = canonicalize_sign({{1, 0, -2, 0}, {-1, 0, 2, 0}});
    CHECK(s.solutions == std::set<SolutionQuad>{{-1, 0, 2, 0}});
    SolutionSet z = canonicalize_sign({{0, 0, 0, 0}});
    CHECK(z.solutions == std::set<SolutionQuad>{{0, 0, 0, 0}});

    // the signed sample solution list collapses to the five canonical ones
    std::set<SolutionQuad> signedset;
    for (const SolutionQuad& q : kSampleSolutions) {
        signedset.insert(q);
        signedset.insert({-q[0], -q[1], -q[2], -q[3]});
    }
    CHECK(signedset.size() == 9);
    CHECK(canonicalize_sign(signedset).solutions == kSampleSolutions);
}

TEST_CASE("sample quartic plan structure") {
    Pipeline p = make_pipeline({1, -9, -21, 88, 48}, 5, Rat(20));
    REQUIRE(p.plan.tasks.size() == 5);  // small box + 4 absolute tasks, no residual box

    const auto* small = std::get_if<EnumerationBox>(&p.plan.tasks[0]);
    REQUIRE(small != nullptr);
    CHECK(small->label == "small");
    // |x| <= 20^(1/4) + maxroot * 7.2230 = 75.56...
    CHECK(small->x1.hi == 75);
    CHECK(small->x2.hi == 33);
    CHECK(small->y1.hi == 7);
    CHECK(small->y2.hi == 3);

    std::map<std::string, Int> k_by_label, resid_by_label;
    for (size_t i = 1; i < 5; ++i) {
        const auto& t = std::get<AbsoluteTask>(p.plan.tasks[i]);
        k_by_label[t.label] = t.k;
        resid_by_label[t.label] = t.residual_bound;
    }
    CHECK(k_by_label["IIA1"] == 0);
    CHECK(k_by_label["IIB1"] == 20);
    CHECK(k_by_label["IIA2"] == 36);
    CHECK(k_by_label["IIB2"] == 1);
    CHECK(resid_by_label["IIA2"] == 0);  // strict(0.4381) = 0
    CHECK(resid_by_label["IIB2"] == 0);  // strict(0.9796) = 0
}

TEST_CASE("sample quartic end to end") {
    Pipeline p = make_pipeline({1, -9, -21, 88, 48}, 5, Rat(20));
    ExecConfig cfg;
    cfg.abs.y_max = 500;
    ExecutionTrace trace;
    cfg.trace = &trace;
    SolutionSet got = execute_plan(p.plan, cfg);

    CHECK(got.solutions == kSampleSolutions);
    CHECK(got.cert.complete_y_radius == 500);
    CHECK(!got.cert.heuristic_extra);

    // soundness: re-verify every member independently of the pipeline path
    for (const SolutionQuad& q : got.solutions) {
        Rat norm = abs_squared(evaluate_ring(p.form, {q[0], q[1]}, {q[2], q[3]}, p.field),
                               p.field);
        CHECK(norm <= p.K * p.K);
    }

    // the zero-bound task IIA1 contributes only the origin
    bool saw_a1 = false;
    for (const auto& [label, r] : trace.abs_results) {
        if (label == "IIA1") {
            saw_a1 = true;
            CHECK(r.solutions == std::set<std::pair<Int, Int>>{{0, 0}});
        }
    }
    CHECK(saw_a1);

    // lift rejection: both large-coordinate lists contain (1,-2); the cross
    // condition holds but |F(1+i sqrt5, -2-2i sqrt5)|^2 = 36^2 > 400
    bool saw_rejection = false;
    for (const LiftRecord& rec : trace.lifts) {
        if (rec.task == "IIA2*IIB2" && !rec.accepted &&
            canonical_quad(rec.candidate) == SolutionQuad{-1, -1, 2, 2}) {
            CHECK(rec.reason == "norm exceeds bound");
            saw_rejection = true;
        }
    }
    CHECK(saw_rejection);
}

TEST_CASE("include_trivial flag") {
    Pipeline p = make_pipeline({1, -9, -21, 88, 48}, 5, Rat(20));
    ExecConfig cfg;
    cfg.abs.y_max = 100;
    cfg.include_trivial = false;
    SolutionSet got = execute_plan(p.plan, cfg);
    std::set<SolutionQuad> expect = kSampleSolutions;
    expect.erase({0, 0, 0, 0});
    CHECK(got.solutions == expect);
}

TEST_CASE("plan coverage on the sample instance, with single-task mutations") {
    Pipeline p = make_pipeline({1, -9, -21, 88, 48}, 5, Rat(20));
    std::vector<size_t> all{0, 1, 2, 3, 4};

    // every point of a sample of the test box is either covered or not a solution
    std::mt19937_64 rng(60601);
    std::uniform_int_distribution<int> cx(-76, 76), cx2(-34, 34), cy(-8, 8), cy2(-4, 4);
    std::vector<SolutionQuad> points;
    for (int x1 = -2; x1 <= 2; ++x1)
        for (int x2 = -2; x2 <= 2; ++x2)
            for (int y1 = -2; y1 <= 2; ++y1)
                for (int y2 = -2; y2 <= 2; ++y2) points.push_back({x1, x2, y1, y2});
    for (int i = 0; i < 4000; ++i) points.push_back({cx(rng), cx2(rng), cy(rng), cy2(rng)});
    for (const SolutionQuad& q : points) {
        if (covered(p.plan, all, q)) continue;
        Rat norm =
            abs_squared(evaluate_ring(p.form, {q[0], q[1]}, {q[2], q[3]}, p.field), p.field);
        CHECK(norm > p.K * p.K);
    }

    // dropping any one task loses a specific region of the box
    auto drop = [&](size_t idx) {
        std::vector<size_t> kept;
        for (size_t i : all)
            if (i != idx) kept.push_back(i);
        return kept;
    };
    // task order: small box, IIA1, IIB1, IIA2, IIB2
    CHECK(!covered(p.plan, drop(0), {0, 0, 1, 1}));   // small |y| region
    CHECK(!covered(p.plan, drop(1), {0, 0, 0, 4}));   // y1 = 0, |y| large
    CHECK(!covered(p.plan, drop(2), {5, 0, 8, 0}));   // y2 = 0, |y| large
    CHECK(!covered(p.plan, drop(3), {1, 1, 8, 1}));   // both coordinates large
    CHECK(!covered(p.plan, drop(4), {1, 1, 8, 1}));
    for (size_t i : all) {
        CHECK(covered(p.plan, all, SolutionQuad{0, 0, 1, 1}));
        CHECK(covered(p.plan, all, SolutionQuad{1, 1, 8, 1}));
        (void)i;
    }
}

TEST_CASE("CaseI instance agrees with the oracle and known members") {
    Pipeline p = make_pipeline({1, -9, -21, 88, 48}, 3, Rat(20));
    CHECK(p.field.field_case == FieldCase::I);

    // residual box exists here: 2D = 1.959..., 2D/sqrt(3) = 1.131...
    bool has_residual = false;
    for (const Subproblem& t : p.plan.tasks)
        if (const auto* box = std::get_if<EnumerationBox>(&t))
            if (box->label == "residual") has_residual = true;
    CHECK(has_residual);

    std::map<std::string, Int> k_by_label;
    for (const Subproblem& t : p.plan.tasks)
        if (const auto* task = std::get_if<AbsoluteTask>(&t)) k_by_label[task->label] = task->k;
    CHECK(k_by_label["IA1"] == 35);   // floor(2^4 * 20 / 9)
    CHECK(k_by_label["IB1"] == 20);
    CHECK(k_by_label["IA2"] == 584);  // floor(2^4 * E)
    CHECK(k_by_label["IB2"] == 64);   // floor(2^4 * E / 9)

    ExecConfig cfg;
    cfg.abs.y_max = 100;
    SolutionSet got = execute_plan(p.plan, cfg);

    // spot members computed independently (x = w and x = 1-2w are units/small)
    for (const SolutionQuad& q : {SolutionQuad{0, 1, 0, 0}, SolutionQuad{1, -2, 0, 0},
                                  SolutionQuad{-2, 2, 4, -4}, SolutionQuad{-1, -1, 2, 2},
                                  SolutionQuad{0, -2, 0, 4}})
        CHECK(got.solutions.count(q) == 1);

    Box box = Box::symmetric(30, 20, 6, 6);
    SolutionSet oracle = brute_force_box(p.form, p.field, p.K, box);
    CHECK(restrict_to_box(got.solutions, box) == oracle.solutions);

    // CaseI certificate covers |y| <= y_max / 2
    CHECK(got.cert.complete_y_radius == 50);
}

TEST_CASE("pipeline equals oracle on random instances") {
    std::mt19937_64 rng(140913);
    std::uniform_int_distribution<int> deg(3, 5), kd(1, 50);
    const Int ms[] = {Int(2), Int(3), Int(5), Int(6), Int(7), Int(10), Int(11)};
    int done = 0;
    while (done < 6) {
        BinaryForm form = testgen::random_form(rng, deg(rng));
        Int m = ms[rng() % 7];
        Rat K(kd(rng));
        Pipeline p = make_pipeline(form.coeffs(), m, K);
        if (p.constants.C1 > 15) continue;  // keep the cross-check box affordable
        long long radius =
            std::max<long long>(12, 2 * to_ll(ceil_rat(p.constants.C1)));
        ExecConfig cfg;
        cfg.abs.y_max = 4 * radius + 16;
        SolutionSet got = execute_plan(p.plan, cfg);
        Box box = Box::symmetric(radius, radius, radius, radius);
        SolutionSet oracle = brute_force_box(p.form, p.field, p.K, box, pow_int(10, 9));
        CHECK(restrict_to_box(got.solutions, box) == oracle.solutions);
        ++done;
    }
}

TEST_CASE("execute_plan accepts an external absolute solver") {
    Pipeline p = make_pipeline({1, -9, -21, 88, 48}, 5, Rat(20));
    int calls = 0;
    AbsSolver external = [&](const BinaryForm& f, const Int& k, const RootSystem& roots,
                             const SearchConfig& cfg) {
        ++calls;
        return solve_abs(f, k, roots, cfg);
    };
    ExecConfig cfg;
    cfg.abs.y_max = 200;
    SolutionSet got = execute_plan(p.plan, external, cfg);
    CHECK(calls == 4);
    CHECK(got.solutions == kSampleSolutions);
}
