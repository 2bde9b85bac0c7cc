#include "relthue/abs_thue.hpp"

#include <algorithm>
#include <vector>

#include "relthue/errors.hpp"

namespace relthue {

namespace {

int128 eval_i128(const BinaryForm& f, int128 x, int128 y) {
    int128 acc = to_int128(f.coeff(0)), yp = 1;
    for (int i = 1; i <= f.degree(); ++i) {
        yp *= y;
        acc = acc * x + to_int128(f.coeff(i)) * yp;
    }
    return acc;
}

// All Horner intermediates for |x| <= xb, |y| <= yb stay below the
// absolute-value evaluation, whose partial sums only grow.
bool eval_fits_int128(const BinaryForm& f, const Int& xb, const Int& yb) {
    static const Int lim = Int(1) << 126;
    Int acc = boost::multiprecision::abs(f.coeff(0)), yp = 1;
    for (int i = 1; i <= f.degree(); ++i) {
        yp *= yb;
        if (yp >= lim) return false;
        acc = acc * xb + boost::multiprecision::abs(f.coeff(i)) * yp;
        if (acc >= lim) return false;
    }
    return true;
}

struct Window {
    Int lo, hi;
};

void merge_windows(std::vector<Window>& w) {
    std::sort(w.begin(), w.end(), [](const Window& a, const Window& b) { return a.lo < b.lo; });
    size_t out = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        if (out > 0 && w[i].lo <= w[out - 1].hi + 1)
            w[out - 1].hi = std::max(w[out - 1].hi, w[i].hi);
        else
            w[out++] = w[i];
    }
    w.resize(out);
}

}  // namespace

AbsResult solve_abs(const BinaryForm& f, const Int& k, const RootSystem& roots,
                    const SearchConfig& config) {
    if (config.y_max < 1)
        throw solver_error(errc::parameter_out_of_range, "y_max must be at least 1");
    AbsResult res;
    res.complete_up_to = config.y_max;
    res.heuristic_extra = config.convergent_depth > 0;
    if (k < 0) return res;

    const int n = f.degree();
    const unsigned un = static_cast<unsigned>(n);

    // y = 0: |x|^n <= k, reported with x >= 0
    Int x0_max = int_nth_root(k, un);
    for (Int x = 0; x <= x0_max; ++x) res.solutions.emplace(x, Int(0));

    // window radius: ceil(k^(1/n)) + pad
    Int r = x0_max;
    if (pow_int(r, un) < k) ++r;
    r += config.window_pad;

    // certify the int128 fast path for the whole scan range
    Rat maxroot = max_root_upper(roots);
    Int xb = ceil_rat(maxroot) * config.y_max + r + 1;
    bool fast = eval_fits_int128(f, xb, Int(config.y_max));
    int128 k128 = fast && fits_int128(k) ? to_int128(k) : 0;

    const auto& ivs = roots.intervals();
    struct Endp {
        Int ln, ld, un, ud;  // lo = ln/ld, hi = un/ud with positive denominators
    };
    std::vector<Endp> endp;
    for (const RootInterval& iv : ivs)
        endp.push_back({rat_num(iv.lo), rat_den(iv.lo), rat_num(iv.hi), rat_den(iv.hi)});
    auto div_floor = [](const Int& a, const Int& b) {  // b > 0
        return a >= 0 ? Int(a / b) : Int(-((-a + b - 1) / b));
    };
    auto div_ceil = [](const Int& a, const Int& b) {  // b > 0
        return a >= 0 ? Int((a + b - 1) / b) : Int(-((-a) / b));
    };

    // [floor(l*y) - r, ceil(u*y) + r] covers [alpha*y - k^(1/n), alpha*y + k^(1/n)]
    // for every alpha in [l, u], independent of the pad
    std::vector<Window> windows;
    for (long long y = 1; y <= config.y_max; ++y) {
        windows.clear();
        for (const Endp& e : endp) {
            Int lo = div_floor(e.ln * y, e.ld) - r;
            Int hi = div_ceil(e.un * y, e.ud) + r;
            windows.push_back({lo, hi});
        }
        merge_windows(windows);
        Int yi(y);
        for (const Window& w : windows) {
            if (fast) {
                int128 y128 = y;
                for (Int x = w.lo; x <= w.hi; ++x) {
                    int128 v = eval_i128(f, to_int128(x), y128);
                    if (v < 0) v = -v;
                    if (v <= k128) res.solutions.emplace(x, yi);
                }
            } else {
                for (Int x = w.lo; x <= w.hi; ++x) {
                    Int v = boost::multiprecision::abs(evaluate_int(f, x, yi));
                    if (v <= k) res.solutions.emplace(x, yi);
                }
            }
        }
    }

    // heuristic extension: probe windows at continued-fraction convergent
    // denominators of each root beyond y_max
    if (config.convergent_depth > 0) {
        static const Int q_cap = pow_int(10, 18);
        for (const RootInterval& iv : ivs) {
            Rat alpha = (iv.lo + iv.hi) / 2;
            Int p_prev = 1, q_prev = 0, p = floor_rat(alpha), q = 1;
            Rat rem = alpha - Rat(p);
            for (int depth = 0; depth < config.convergent_depth; ++depth) {
                if (q > Int(config.y_max) && q <= q_cap) {
                    Int lo = floor_rat(iv.lo * Rat(q)) - r;
                    Int hi = ceil_rat(iv.hi * Rat(q)) + r;
                    for (Int x = lo; x <= hi; ++x)
                        if (boost::multiprecision::abs(evaluate_int(f, x, q)) <= k)
                            res.solutions.emplace(x, q);
                }
                if (rem == 0 || q > q_cap) break;
                Rat inv = Rat(1) / rem;
                Int a = floor_rat(inv);
                rem = inv - Rat(a);
                Int p_next = a * p + p_prev, q_next = a * q + q_prev;
                p_prev = p;
                q_prev = q;
                p = p_next;
                q = q_next;
            }
        }
    }
    return res;
}

}  // namespace relthue
