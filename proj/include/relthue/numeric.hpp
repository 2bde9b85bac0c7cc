#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>

namespace relthue {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

#ifdef __SIZEOF_INT128__
using int128 = __int128;
#else
#error "relthue requires a compiler with __int128 support"
#endif

inline Int rat_num(const Rat& q) { return Int(boost::multiprecision::numerator(q)); }
inline Int rat_den(const Rat& q) { return Int(boost::multiprecision::denominator(q)); }
inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

/// Largest integer <= q.
Int floor_rat(const Rat& q);
/// Smallest integer >= q.
Int ceil_rat(const Rat& q);
/// Largest integer strictly below q (floor(q) for non-integers, q-1 otherwise).
Int strict_int_below(const Rat& q);

Int pow_int(Int base, unsigned exp);
Rat pow_rat(Rat base, unsigned exp);

/// Largest r >= 0 with r^n <= v. Requires v >= 0.
Int int_nth_root(const Int& v, unsigned n);

/// Certified rational enclosure [lo, hi] of q^(1/n) for q >= 0, with
/// lo^n <= q <= hi^n and relative width below 2^-66 (well under 1e-19).
std::pair<Rat, Rat> nth_root_bounds(const Rat& q, unsigned n);

inline std::pair<Rat, Rat> sqrt_bounds(const Rat& q) { return nth_root_bounds(q, 2); }

/// Decimal rendering with round-half-even at `digits` fractional places.
std::string decimal_string(const Rat& q, int digits);
/// Exact rendering as "p/q" (or "p" when the denominator is 1).
std::string rational_string(const Rat& q);

bool fits_int128(const Int& v);
int128 to_int128(const Int& v);
Int from_int128(int128 v);
long long to_ll(const Int& v);

}  // namespace relthue
