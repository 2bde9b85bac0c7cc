#pragma once

#include <set>
#include <utility>

#include "relthue/binary_form.hpp"
#include "relthue/numeric.hpp"

namespace relthue {

struct SearchConfig {
    long long y_max = 100000;     // certified-complete |y| range
    long long window_pad = 1;     // extra slack around each root window
    int convergent_depth = 0;     // heuristic continued-fraction extension
};

/// Solutions of |F(x,y)| <= k over Z, up to sign: entries have y > 0, or
/// y = 0 with x >= 0. Complete for |y| <= complete_up_to; entries beyond
/// that can only come from the convergent extension (heuristic_extra).
struct AbsResult {
    std::set<std::pair<Int, Int>> solutions;
    long long complete_up_to = 0;
    bool heuristic_extra = false;
};

/// Window scan: whenever |F(x,y)| <= k and y != 0, some root has
/// |x - alpha_i y| <= k^(1/n), so scanning the integer windows
/// [l_i y - r, u_i y + r] with r = ceil(k^(1/n)) + pad misses nothing for
/// 1 <= y <= y_max. The y = 0 line is |x|^n <= k.
AbsResult solve_abs(const BinaryForm& f, const Int& k, const RootSystem& roots,
                    const SearchConfig& config);

}  // namespace relthue
