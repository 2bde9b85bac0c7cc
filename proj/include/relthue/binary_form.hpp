#pragma once

#include <utility>
#include <vector>

#include "relthue/errors.hpp"
#include "relthue/numeric.hpp"

namespace relthue {

/// Homogeneous integer binary form F(x,y) = sum c_i x^(n-i) y^i, monic in x,
/// of degree n >= 3, with f(x) = F(x,1) irreducible over Q and having n
/// distinct real roots. Instances are only produced by parse_form, which
/// verifies all of that, so a BinaryForm in hand is always valid.
class BinaryForm {
public:
    int degree() const { return n_; }
    /// Coefficient of x^(n-i) y^i (descending powers of x, c0 first).
    const Int& coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

private:
    BinaryForm(int n, std::vector<Int> coeffs) : n_(n), coeffs_(std::move(coeffs)) {}
    friend BinaryForm parse_form(const std::vector<Int>& coeffs);

    int n_;
    std::vector<Int> coeffs_;
};

struct RootInterval {
    Rat lo, hi;
};

/// Disjoint certified enclosures of the n real roots of f, sorted ascending.
/// Each interval has f(lo)*f(hi) < 0 in exact rational arithmetic.
class RootSystem {
public:
    RootSystem(std::vector<RootInterval> intervals, Rat max_width)
        : intervals_(std::move(intervals)), max_width_(std::move(max_width)) {}

    const std::vector<RootInterval>& intervals() const { return intervals_; }
    const Rat& max_width() const { return max_width_; }
    size_t size() const { return intervals_.size(); }

private:
    std::vector<RootInterval> intervals_;
    Rat max_width_;
};

/// Validate a coefficient list (c0 first) into a BinaryForm.
/// Throws solver_error with code degree_too_small, not_monic,
/// not_all_real_distinct or reducible.
BinaryForm parse_form(const std::vector<Int>& coeffs);

/// Exact F(x,y) over the integers.
Int evaluate_int(const BinaryForm& f, const Int& x, const Int& y);

/// Exact f(x) = F(x,1) at a rational point, as a rational.
Rat evaluate_poly_rat(const BinaryForm& f, const Rat& x);

/// Isolate the n real roots of f into disjoint rational intervals of width
/// at most max_width. Pure rational arithmetic throughout.
RootSystem isolate_roots(const BinaryForm& f, const Rat& max_width);

/// Certified lower bounds (A_lower, B_lower) for
///   A = min_{i != j} |alpha_i - alpha_j|
///   B = min_i prod_{j != i} |alpha_j - alpha_i|
/// computed from the interval gaps (outward rounding). Throws
/// intervals_too_wide when a pairwise gap lower bound is not positive.
std::pair<Rat, Rat> gap_constants(const RootSystem& roots);

/// Certified upper bound on max_j |alpha_j|.
Rat max_root_upper(const RootSystem& roots);

/// True iff f(x) = F(x,1) is irreducible over the rationals.
/// Deterministic for degree <= 12; throws degree_unsupported above that.
/// The coefficient overload accepts unvalidated (monic) input, so reducible
/// candidates can be probed directly.
bool check_irreducible(const BinaryForm& f);
bool check_irreducible(const std::vector<Int>& coeffs);

/// Number of distinct real roots of f (Sturm count over all of R).
int count_real_roots(const std::vector<Int>& poly_desc);

}  // namespace relthue
