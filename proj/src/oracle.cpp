#include "relthue/oracle.hpp"

#include <algorithm>

#include "relthue/errors.hpp"

namespace relthue {

SolutionSet brute_force_box(const BinaryForm& form, const QuadField& field, const Rat& K,
                            const Box& box, const Int& budget) {
    Int points = box.point_count();
    if (points > budget)
        throw solver_error(errc::box_too_large, "box holds " + points.str() +
                                                    " points, budget is " + budget.str());
    SolutionSet out;
    out.cert.complete_y_radius = 0;
    out.cert.warnings.push_back("exhaustive scan; complete exactly on the given box");

    const Int scale = field.field_case == FieldCase::I ? 4 : 1;
    const Int k_cap = floor_rat(Rat(scale) * K * K);

    Int coord_max = 0;
    for (const CoordRange* r : {&box.x1, &box.x2, &box.y1, &box.y2})
        coord_max = std::max(coord_max, std::max(Int(boost::multiprecision::abs(r->lo)),
                                                 Int(boost::multiprecision::abs(r->hi))));
    const bool fast =
        ring_eval_fits_int128(form, field, coord_max, coord_max) && fits_int128(k_cap);

    if (fast) {
        long long m = to_ll(field.m);
        FieldCase fc = field.field_case;
        int128 cap = to_int128(k_cap);
        long long x1lo = to_ll(box.x1.lo), x1hi = to_ll(box.x1.hi);
        long long x2lo = to_ll(box.x2.lo), x2hi = to_ll(box.x2.hi);
        long long y1lo = to_ll(box.y1.lo), y1hi = to_ll(box.y1.hi);
        long long y2lo = to_ll(box.y2.lo), y2hi = to_ll(box.y2.hi);
        for (long long y1 = y1lo; y1 <= y1hi; ++y1)
            for (long long y2 = y2lo; y2 <= y2hi; ++y2) {
                RingElement128 y{y1, y2};
                for (long long x1 = x1lo; x1 <= x1hi; ++x1)
                    for (long long x2 = x2lo; x2 <= x2hi; ++x2) {
                        RingElement128 v = evaluate_ring_i128(form, {x1, x2}, y, m, fc);
                        if (abs_squared_scaled_i128(v, m, fc) <= cap)
                            out.solutions.insert(
                                canonical_quad({Int(x1), Int(x2), Int(y1), Int(y2)}));
                    }
            }
    } else {
        Rat ksq = K * K;
        for (Int y1 = box.y1.lo; y1 <= box.y1.hi; ++y1)
            for (Int y2 = box.y2.lo; y2 <= box.y2.hi; ++y2) {
                RingElement y{y1, y2};
                for (Int x1 = box.x1.lo; x1 <= box.x1.hi; ++x1)
                    for (Int x2 = box.x2.lo; x2 <= box.x2.hi; ++x2) {
                        RingElement v = evaluate_ring(form, {x1, x2}, y, field);
                        if (abs_squared(v, field) <= ksq)
                            out.solutions.insert(canonical_quad({x1, x2, y1, y2}));
                    }
            }
    }
    return out;
}

}  // namespace relthue
