#pragma once

#include "relthue/quad_field.hpp"
#include "relthue/reduction.hpp"

namespace relthue {

struct Box {
    CoordRange x1, x2, y1, y2;
    Int point_count() const {
        return x1.count() * x2.count() * y1.count() * y2.count();
    }
    static Box symmetric(const Int& r1, const Int& r2, const Int& r3, const Int& r4) {
        return {{-r1, r1}, {-r2, r2}, {-r3, r3}, {-r4, r4}};
    }
};

/// Exhaustively test every coordinate tuple in the box against
/// |F(x,y)|^2 <= K^2, exactly. No pruning by design; the only guard is the
/// point budget (box_too_large). Independent of the reduction pipeline
/// except for the shared exact primitives evaluate_ring / abs_squared.
SolutionSet brute_force_box(const BinaryForm& form, const QuadField& field, const Rat& K,
                            const Box& box, const Int& budget = pow_int(10, 8));

}  // namespace relthue
