#pragma once

#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "relthue/abs_thue.hpp"
#include "relthue/binary_form.hpp"
#include "relthue/quad_field.hpp"

namespace relthue::testgen {

/// Deterministic generator of valid forms: distinct integer roots with
/// generous gaps, expanded and shifted by +-1, then filtered through
/// parse_form (all real distinct + irreducible). The gap floors keep the
/// reduction constants small enough for box-sized cross checks.
std::vector<Int> random_form_coeffs(std::mt19937_64& rng, int degree);
BinaryForm random_form(std::mt19937_64& rng, int degree);

/// Independent reference for solve_abs: plain double loop over
/// |x| <= xb, 0 <= y <= yb, normalized up to sign (y > 0, or y = 0, x >= 0).
std::set<std::pair<Int, Int>> naive_abs(const BinaryForm& f, const Int& k, long long xb,
                                        long long yb);

}  // namespace relthue::testgen
