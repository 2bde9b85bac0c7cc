#include <doctest.h>

#include "relthue/constants.hpp"

using namespace relthue;

namespace {

struct SampleData {
    Rat A, B;
};

SampleData sample_gap_data() {
    BinaryForm f = parse_form({1, -9, -21, 88, 48});
    RootSystem rs = isolate_roots(f, Rat(1, pow_int(10, 12)));
    auto [a, b] = gap_constants(rs);
    return {a, b};
}

bool close_to(const Rat& v, const Rat& target, const Rat& tol) {
    Rat d = v - target;
    if (d < 0) d = -d;
    return d <= tol;
}

const Rat kTol(5, 10000);

}  // namespace

TEST_CASE("sample quartic constants reproduce the known values") {
    auto [A, B] = sample_gap_data();
    ReductionConstants c =
        compute_constants(A, B, Rat(20), 4, Int(5), Rat(1, 10), Rat(1, 10));

    CHECK(c.field_case == FieldCase::II);
    CHECK(c.C == 1);          // K/((0.9)^3 B) < 1
    CHECK(c.C1 == c.C2);      // shared first argument wins for C = 1
    CHECK(close_to(c.C2, Rat(72229, 10000), kTol));
    CHECK(close_to(c.D, Rat(9796, 10000), kTol));
    CHECK(close_to(c.E, Rat(365157, 10000), kTol));
    CHECK(close_to(c.t_y2, Rat(4381, 10000), kTol));
    CHECK(close_to(c.E / Rat(25), Rat(14606, 10000), kTol));
    CHECK(c.K / Rat(25) == Rat(8, 10));

    CHECK(c.k_IIA1 == 0);
    CHECK(c.k_IIA2 == 36);
    CHECK(c.k_IIB2 == 1);
    CHECK(c.k_B1 == 20);
    // exact rational E = (1.1)^3 * 20 / (0.9)^3
    CHECK(c.E == Rat(26620, 729));
}

TEST_CASE("eta monotonicity") {
    auto [A, B] = sample_gap_data();
    ReductionConstants c1 = compute_constants(A, B, Rat(20), 4, Int(5), Rat(1, 10), Rat(1, 10));
    ReductionConstants c2 = compute_constants(A, B, Rat(20), 4, Int(5), Rat(1, 10), Rat(2, 10));
    CHECK(c2.E > c1.E);
    CHECK(c2.D < c1.D);
}

TEST_CASE("directed rounding: tighter gap bounds never increase thresholds") {
    BinaryForm f = parse_form({1, -9, -21, 88, 48});
    auto coarse = gap_constants(isolate_roots(f, Rat(1, pow_int(10, 5))));
    auto fine = gap_constants(isolate_roots(f, Rat(1, pow_int(10, 12))));
    ReductionConstants cc =
        compute_constants(coarse.first, coarse.second, Rat(20), 4, Int(5), Rat(1, 10), Rat(1, 10));
    ReductionConstants cf =
        compute_constants(fine.first, fine.second, Rat(20), 4, Int(5), Rat(1, 10), Rat(1, 10));
    CHECK(cf.C <= cc.C);
    CHECK(cf.C1 <= cc.C1);
    CHECK(cf.C2 <= cc.C2);
    CHECK(cf.D <= cc.D);
    CHECK(cf.E <= cc.E);
}

TEST_CASE("case bound orderings") {
    auto [A, B] = sample_gap_data();
    for (Int m : {Int(5), Int(3), Int(7), Int(2)}) {
        for (int n : {3, 4, 5}) {
            ReductionConstants c =
                compute_constants(A, B, Rat(35), n, m, Rat(1, 10), Rat(3, 10));
            CHECK(c.C1 >= c.C2);
            CHECK(c.k_IIB2 <= c.k_IIA2);
            CHECK(c.k_IB2 <= c.k_IA2);
            CHECK(c.E >= c.K);
            CHECK(c.D > 0);
        }
    }
}

TEST_CASE("parameter validation") {
    auto [A, B] = sample_gap_data();
    CHECK_THROWS_AS(compute_constants(A, B, Rat(20), 4, Int(5), Rat(0), Rat(1, 10)),
                    solver_error);
    CHECK_THROWS_AS(compute_constants(A, B, Rat(20), 4, Int(5), Rat(1, 10), Rat(1)),
                    solver_error);
    CHECK_THROWS_AS(compute_constants(A, B, Rat(1, 2), 4, Int(5), Rat(1, 10), Rat(1, 10)),
                    solver_error);
    CHECK_THROWS_AS(compute_constants(A, B, Rat(20), 2, Int(5), Rat(1, 10), Rat(1, 10)),
                    solver_error);
    CHECK_THROWS_AS(compute_constants(A, B, Rat(20), 4, Int(12), Rat(1, 10), Rat(1, 10)),
                    solver_error);
}

TEST_CASE("choose_parameters") {
    auto [A, B] = sample_gap_data();
    Rat maxroot(102, 10);  // ~10.2, upper bound on the largest root

    SUBCASE("singleton grid") {
        auto [c, cost] = choose_parameters(A, B, Rat(20), 4, Int(5), maxroot,
                                           {{Rat(1, 10), Rat(1, 10)}});
        CHECK(c.eps == Rat(1, 10));
        CHECK(cost > 0);
    }
    SUBCASE("small eps wins against the E blowup") {
        std::vector<std::pair<Rat, Rat>> grid{{Rat(1, 10), Rat(1, 10)},
                                              {Rat(1, 2), Rat(1, 2)}};
        auto [c, cost] = choose_parameters(A, B, Rat(20), 4, Int(5), maxroot, grid);
        CHECK(c.eps == Rat(1, 10));
        CHECK(c.eta == Rat(1, 10));
        // order independence
        std::reverse(grid.begin(), grid.end());
        auto [c2, cost2] = choose_parameters(A, B, Rat(20), 4, Int(5), maxroot, grid);
        CHECK(c2.eps == c.eps);
        CHECK(cost2 == cost);
    }
    SUBCASE("extreme eps is dominated") {
        auto [c, cost] = choose_parameters(
            A, B, Rat(20), 4, Int(5), maxroot,
            {{Rat(1, 10), Rat(1, 10)}, {Rat(99, 100), Rat(1, 10)}});
        CHECK(c.eps == Rat(1, 10));
    }
    SUBCASE("empty grid") {
        CHECK_THROWS_AS(choose_parameters(A, B, Rat(20), 4, Int(5), maxroot, {}), solver_error);
    }
}
