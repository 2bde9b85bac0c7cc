#pragma once

#include <vector>

#include "relthue/errors.hpp"
#include "relthue/numeric.hpp"
#include "relthue/quad_field.hpp"

namespace relthue {

/// All case-split constants for one inequality instance, with directed
/// rounding: quantities used as "large |.|" thresholds (C1, C2, D, t_y1,
/// t_y2) are certified upper bounds, and right-hand sides of the derived
/// absolute inequalities are upper bounds before flooring. C and E are
/// exact rationals; only n-th roots and sqrt(m) need enclosures.
struct ReductionConstants {
    Rat eps, eta, K;
    int n = 0;
    Int m;
    FieldCase field_case = FieldCase::II;
    Rat A_lower, B_lower;

    Rat C;           // max(K / ((1-eps)^(n-1) B), 1), exact given B_lower
    Rat C1, C2;      // upper bounds
    Rat D;           // upper bound
    Rat E;           // exact rational
    Rat K_root;      // upper bound for K^(1/n)
    Rat sqrt_m_lo, sqrt_m_hi;
    Rat sqrt_m_pow_lo;  // lower bound for (sqrt m)^n

    // floors of the absolute right-hand sides
    Int k_IA1, k_IA2, k_IB2;     // CaseI: 2^n K/(sqrt m)^n, 2^n E, 2^n E/(sqrt m)^n
    Int k_IIA1, k_IIA2, k_IIB2;  // CaseII: K/(sqrt m)^n, E, E/(sqrt m)^n
    Int k_B1;                    // floor(K), shared by IB1/IIB1

    // case-resolved "large coordinate" thresholds (upper bounds):
    // CaseII: t_y1 = D, t_y2 = D/sqrt(m); CaseI: 2D and 2D/sqrt(m)
    Rat t_y1, t_y2;

    // case-resolved accessors
    const Int& k_A1() const { return field_case == FieldCase::I ? k_IA1 : k_IIA1; }
    const Int& k_A2() const { return field_case == FieldCase::I ? k_IA2 : k_IIA2; }
    const Int& k_B2() const { return field_case == FieldCase::I ? k_IB2 : k_IIB2; }
    const Rat& small_y_radius() const { return field_case == FieldCase::I ? C1 : C2; }
};

/// Evaluate the constants block from certified root-gap lower bounds.
/// Throws parameter_out_of_range when inputs leave the admissible ranges
/// (0 < eps < 1, 0 < eta < 1, K >= 1, n >= 3, m squarefree > 1).
ReductionConstants compute_constants(const Rat& A_lower, const Rat& B_lower, const Rat& K,
                                     int n, const Int& m, const Rat& eps, const Rat& eta);

/// Grid search over (eps, eta) minimizing
///   cost = (# integer y-coordinate pairs in the small-|y| region)
///        + w * (sum over case branches of (2k+1) absolute equations).
/// Deterministic tie-break: smaller eps, then smaller eta.
std::pair<ReductionConstants, Rat> choose_parameters(
    const Rat& A_lower, const Rat& B_lower, const Rat& K, int n, const Int& m,
    const Rat& max_root_upper, const std::vector<std::pair<Rat, Rat>>& grid,
    const Rat& weight = Rat(1));

}  // namespace relthue
