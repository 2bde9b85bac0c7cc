#include "relthue/constants.hpp"

#include <algorithm>
#include <cassert>

namespace relthue {

ReductionConstants compute_constants(const Rat& A_lower, const Rat& B_lower, const Rat& K,
                                     int n, const Int& m, const Rat& eps, const Rat& eta) {
    if (!(eps > 0 && eps < 1)) throw solver_error(errc::parameter_out_of_range, "eps not in (0,1)");
    if (!(eta > 0 && eta < 1)) throw solver_error(errc::parameter_out_of_range, "eta not in (0,1)");
    if (K < 1) throw solver_error(errc::parameter_out_of_range, "K must be >= 1");
    if (n < 3) throw solver_error(errc::parameter_out_of_range, "degree must be >= 3");
    if (!(A_lower > 0) || !(B_lower > 0))
        throw solver_error(errc::parameter_out_of_range, "A and B lower bounds must be positive");
    QuadField field;
    try {
        field = make_field(m);
    } catch (const solver_error& e) {
        throw solver_error(errc::parameter_out_of_range, e.what());
    }

    ReductionConstants c;
    c.eps = eps;
    c.eta = eta;
    c.K = K;
    c.n = n;
    c.m = m;
    c.field_case = field.field_case;
    c.A_lower = A_lower;
    c.B_lower = B_lower;

    unsigned un = static_cast<unsigned>(n);
    Rat one_eps_pow = pow_rat(1 - eps, un - 1);
    c.C = std::max(Rat(K / (one_eps_pow * B_lower)), Rat(1));
    c.E = pow_rat(1 + eta, un - 1) * K / one_eps_pow;

    c.K_root = nth_root_bounds(K, un).second;
    Rat shared = c.K_root / (eps * A_lower);
    c.C1 = std::max(shared, nth_root_bounds(2 * c.C, un - 2).second);
    c.C2 = std::max(shared, nth_root_bounds(c.C, un - 2).second);
    c.D = nth_root_bounds(K / (eta * one_eps_pow * A_lower * B_lower), un).second;

    auto sm = sqrt_bounds(Rat(m));
    c.sqrt_m_lo = sm.first;
    c.sqrt_m_hi = sm.second;
    if (n % 2 == 0) {
        c.sqrt_m_pow_lo = Rat(pow_int(m, un / 2));
    } else {
        c.sqrt_m_pow_lo = Rat(pow_int(m, (un - 1) / 2)) * sm.first;
    }

    Rat two_n(pow_int(2, un));
    c.k_IA1 = floor_rat(two_n * K / c.sqrt_m_pow_lo);
    c.k_IA2 = floor_rat(two_n * c.E);
    c.k_IB2 = floor_rat(two_n * c.E / c.sqrt_m_pow_lo);
    c.k_IIA1 = floor_rat(K / c.sqrt_m_pow_lo);
    c.k_IIA2 = floor_rat(c.E);
    c.k_IIB2 = floor_rat(c.E / c.sqrt_m_pow_lo);
    c.k_B1 = floor_rat(K);

    if (field.field_case == FieldCase::I) {
        c.t_y1 = 2 * c.D;
        c.t_y2 = 2 * c.D / c.sqrt_m_lo;
    } else {
        c.t_y1 = c.D;
        c.t_y2 = c.D / c.sqrt_m_lo;
    }

    assert(c.C1 >= c.C2);
    assert(c.k_IB2 <= c.k_IA2 && c.k_IIB2 <= c.k_IIA2);
    return c;
}

std::pair<ReductionConstants, Rat> choose_parameters(
    const Rat& A_lower, const Rat& B_lower, const Rat& K, int n, const Int& m,
    const Rat& max_root_upper, const std::vector<std::pair<Rat, Rat>>& grid, const Rat& weight) {
    if (grid.empty()) throw solver_error(errc::empty_grid, "parameter grid is empty");
    (void)max_root_upper;
    bool have = false;
    ReductionConstants best;
    Rat best_cost;
    std::pair<Rat, Rat> best_pt;
    for (const auto& [eps, eta] : grid) {
        ReductionConstants c = compute_constants(A_lower, B_lower, K, n, m, eps, eta);
        Rat r = c.small_y_radius();
        Int ny1, ny2;
        if (c.field_case == FieldCase::II) {
            ny1 = 2 * floor_rat(r) + 1;
            ny2 = 2 * floor_rat(r / c.sqrt_m_lo) + 1;
        } else {
            // CaseI counts the (2y1+y2, y2) numerator lattice
            ny1 = 2 * floor_rat(2 * r) + 1;
            ny2 = 2 * floor_rat(2 * r / c.sqrt_m_lo) + 1;
        }
        Int equations = (2 * c.k_A1() + 1) + (2 * c.k_B1 + 1) + (2 * c.k_A2() + 1) +
                        (2 * c.k_B2() + 1);
        Rat cost = Rat(ny1 * ny2) + weight * Rat(equations);
        bool better = !have || cost < best_cost ||
                      (cost == best_cost &&
                       (eps < best_pt.first ||
                        (eps == best_pt.first && eta < best_pt.second)));
        if (better) {
            best = c;
            best_cost = cost;
            best_pt = {eps, eta};
            have = true;
        }
    }
    return {best, best_cost};
}

}  // namespace relthue
