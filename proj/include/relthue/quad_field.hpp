#pragma once

#include "relthue/binary_form.hpp"
#include "relthue/errors.hpp"
#include "relthue/numeric.hpp"

namespace relthue {

/// Which integral basis Q(i*sqrt(m)) uses:
///   CaseI  (m = 3 mod 4): Z_M = Z + Z*(1+i*sqrt(m))/2
///   CaseII (m = 1,2 mod 4): Z_M = Z + Z*i*sqrt(m)
enum class FieldCase { I, II };

struct QuadField {
    Int m;
    FieldCase field_case;
};

/// Element of Z_M in integral coordinates (x1, x2):
///   CaseI:  x1 + x2*(1+i*sqrt(m))/2
///   CaseII: x1 + x2*i*sqrt(m)
struct RingElement {
    Int x1, x2;

    bool operator==(const RingElement& o) const { return x1 == o.x1 && x2 == o.x2; }
    bool operator<(const RingElement& o) const {
        return x1 != o.x1 ? x1 < o.x1 : x2 < o.x2;
    }
};

/// Validate m (squarefree, > 1) and tag the basis case.
QuadField make_field(const Int& m);

/// Exact |e|^2 as a rational (CaseI values have denominator 4).
Rat abs_squared(const RingElement& e, const QuadField& field);

/// x2*y1 - x1*y2. Im(x * conj(y)) equals this times sqrt(m) in CaseII and
/// times sqrt(m)/2 in CaseI; it vanishes iff x/y is real.
Int im_cross(const RingElement& x, const RingElement& y);

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingElement& a);
RingElement ring_mul(const RingElement& a, const RingElement& b, const QuadField& field);

/// CaseI numerator view (2*x1 + x2, x2): e = (u + v*i*sqrt(m))/2.
std::pair<Int, Int> numerator_coords(const RingElement& e);

/// Exact F(x, y) evaluated in Z_M.
RingElement evaluate_ring(const BinaryForm& f, const RingElement& x, const RingElement& y,
                          const QuadField& field);

/// Fast exact kernel for bulk scans. Callers must first certify, via
/// ring_eval_fits_int128, that no intermediate can leave int128 range for
/// the coordinate magnitudes they will feed in.
struct RingElement128 {
    int128 x1, x2;
};
RingElement128 evaluate_ring_i128(const BinaryForm& f, const RingElement128& x,
                                  const RingElement128& y, long long m, FieldCase fc);
/// 4*|e|^2 in CaseI, |e|^2 in CaseII (stays integral either way).
int128 abs_squared_scaled_i128(const RingElement128& e, long long m, FieldCase fc);

/// Certifies the int128 kernels for all |x1|,|x2| <= xb and |y1|,|y2| <= yb
/// by running the evaluation recurrence on magnitude bounds in exact
/// arithmetic.
bool ring_eval_fits_int128(const BinaryForm& f, const QuadField& field, const Int& xb,
                           const Int& yb);

}  // namespace relthue
