#include <doctest.h>

#include <random>

#include "relthue/abs_thue.hpp"
#include "support/testgen.hpp"

using namespace relthue;

namespace {

std::set<std::pair<Int, Int>> quartic_list(const Int& k, long long y_max = 300) {
    BinaryForm f = parse_form({1, -9, -21, 88, 48});
    RootSystem rs = isolate_roots(f, Rat(1, pow_int(10, 12)));
    SearchConfig cfg;
    cfg.y_max = y_max;
    return solve_abs(f, k, rs, cfg).solutions;
}

}  // namespace

TEST_CASE("sample quartic absolute lists") {
    std::set<std::pair<Int, Int>> big{{0, 0}, {1, 0}, {2, 0}, {-1, 2}, {-2, 4}};
    std::set<std::pair<Int, Int>> small{{0, 0}, {1, 0}, {-1, 2}};
    CHECK(quartic_list(36) == big);
    CHECK(quartic_list(20) == big);
    CHECK(quartic_list(1) == small);
    CHECK(quartic_list(0) == std::set<std::pair<Int, Int>>{{0, 0}});
}

TEST_CASE("window scan agrees with the naive double loop") {
    std::mt19937_64 rng(311077);
    std::uniform_int_distribution<int> deg(3, 5), kd(0, 50);
    for (int iter = 0; iter < 12; ++iter) {
        BinaryForm f = testgen::random_form(rng, deg(rng));
        RootSystem rs = isolate_roots(f, Rat(1, pow_int(10, 12)));
        Int k(kd(rng));
        SearchConfig cfg;
        cfg.y_max = 50;
        AbsResult r = solve_abs(f, k, rs, cfg);
        auto naive = testgen::naive_abs(f, k, 200, 50);
        std::set<std::pair<Int, Int>> clipped;
        for (const auto& s : r.solutions)
            if (boost::multiprecision::abs(s.first) <= 200) clipped.insert(s);
        CHECK(clipped == naive);
    }
}

TEST_CASE("window correctness: every hit is near a root") {
    BinaryForm f = parse_form({1, -9, -21, 88, 48});
    RootSystem rs = isolate_roots(f, Rat(1, pow_int(10, 12)));
    Int k(36);
    SearchConfig cfg;
    cfg.y_max = 200;
    AbsResult r = solve_abs(f, k, rs, cfg);
    Rat k_root = nth_root_bounds(Rat(k), 4).second;
    for (const auto& [x, y] : r.solutions) {
        if (y == 0) continue;
        Rat best = -1;
        for (const RootInterval& iv : rs.intervals()) {
            Rat lo = iv.lo * y, hi = iv.hi * y;
            if (lo > hi) std::swap(lo, hi);
            Rat d = 0;
            if (Rat(x) < lo) d = lo - x;
            else if (Rat(x) > hi) d = Rat(x) - hi;
            if (best < 0 || d < best) best = d;
        }
        CHECK(best <= k_root);
    }
}

TEST_CASE("window scan stays complete with zero pad") {
    std::mt19937_64 rng(997);
    for (int iter = 0; iter < 4; ++iter) {
        BinaryForm f = testgen::random_form(rng, 3 + static_cast<int>(rng() % 3));
        RootSystem rs = isolate_roots(f, Rat(1, pow_int(10, 12)));
        SearchConfig cfg;
        cfg.y_max = 30;
        cfg.window_pad = 0;
        AbsResult r = solve_abs(f, Int(40), rs, cfg);
        auto naive = testgen::naive_abs(f, Int(40), 150, 30);
        std::set<std::pair<Int, Int>> clipped;
        for (const auto& s : r.solutions)
            if (boost::multiprecision::abs(s.first) <= 150) clipped.insert(s);
        CHECK(clipped == naive);
    }
}

TEST_CASE("monotone in k") {
    std::mt19937_64 rng(424242);
    BinaryForm f = testgen::random_form(rng, 4);
    RootSystem rs = isolate_roots(f, Rat(1, pow_int(10, 12)));
    SearchConfig cfg;
    cfg.y_max = 40;
    std::set<std::pair<Int, Int>> prev;
    for (int k = 0; k <= 50; k += 5) {
        AbsResult r = solve_abs(f, Int(k), rs, cfg);
        CHECK(std::includes(r.solutions.begin(), r.solutions.end(), prev.begin(), prev.end()));
        prev = std::move(r.solutions);
    }
}

TEST_CASE("certificate fields and config validation") {
    BinaryForm f = parse_form({1, -9, -21, 88, 48});
    RootSystem rs = isolate_roots(f, Rat(1, pow_int(10, 12)));
    SearchConfig cfg;
    cfg.y_max = 25;
    AbsResult r = solve_abs(f, Int(36), rs, cfg);
    CHECK(r.complete_up_to == 25);
    CHECK(!r.heuristic_extra);
    for (const auto& [x, y] : r.solutions) {
        CHECK(y >= 0);
        if (y == 0) CHECK(x >= 0);
    }

    cfg.convergent_depth = 8;
    AbsResult h = solve_abs(f, Int(36), rs, cfg);
    CHECK(h.heuristic_extra);
    CHECK(std::includes(h.solutions.begin(), h.solutions.end(), r.solutions.begin(),
                        r.solutions.end()));

    cfg.y_max = 0;
    CHECK_THROWS_AS(solve_abs(f, Int(36), rs, cfg), solver_error);
}
