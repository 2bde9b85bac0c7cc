#include "support/testgen.hpp"

#include <algorithm>

namespace relthue::testgen {

std::vector<Int> random_form_coeffs(std::mt19937_64& rng, int degree) {
    int min_gap = degree == 3 ? 5 : (degree == 4 ? 3 : 2);
    std::uniform_int_distribution<int> gap_extra(0, 2), start(-9, 1), sign(0, 1);
    std::vector<long long> roots;
    long long r = start(rng);
    roots.push_back(r);
    for (int i = 1; i < degree; ++i) {
        r += min_gap + gap_extra(rng);
        roots.push_back(r);
    }
    // expand prod (x - r_i), then nudge the constant term off the lattice
    std::vector<Int> asc{1};
    for (long long root : roots) {
        std::vector<Int> next(asc.size() + 1, Int(0));
        for (size_t i = 0; i < asc.size(); ++i) {
            next[i + 1] += asc[i];
            next[i] -= Int(root) * asc[i];
        }
        asc = std::move(next);
    }
    asc[0] += sign(rng) ? 1 : -1;
    return {asc.rbegin(), asc.rend()};
}

BinaryForm random_form(std::mt19937_64& rng, int degree) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Int> coeffs = random_form_coeffs(rng, degree);
        try {
            return parse_form(coeffs);
        } catch (const solver_error&) {
            continue;
        }
    }
    throw std::runtime_error("random_form: generator failed to produce a valid form");
}

std::set<std::pair<Int, Int>> naive_abs(const BinaryForm& f, const Int& k, long long xb,
                                        long long yb) {
    std::set<std::pair<Int, Int>> out;
    for (long long y = 0; y <= yb; ++y)
        for (long long x = -xb; x <= xb; ++x) {
            if (y == 0 && x < 0) continue;
            Int v = evaluate_int(f, Int(x), Int(y));
            if (boost::multiprecision::abs(v) <= k) out.emplace(Int(x), Int(y));
        }
    return out;
}

}  // namespace relthue::testgen
