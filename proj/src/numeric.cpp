#include "relthue/numeric.hpp"

#include <limits>
#include <stdexcept>

namespace relthue {

Int floor_rat(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    if (n >= 0) return n / d;
    return -((-n + d - 1) / d);
}

Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

Int strict_int_below(const Rat& q) {
    if (is_integer(q)) return rat_num(q) - 1;
    return floor_rat(q);
}

Int pow_int(Int base, unsigned exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

Rat pow_rat(Rat base, unsigned exp) {
    Rat r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

Int int_nth_root(const Int& v, unsigned n) {
    if (v < 0) throw std::invalid_argument("int_nth_root: negative input");
    if (n == 0) throw std::invalid_argument("int_nth_root: zero index");
    if (v == 0 || v == 1 || n == 1) return n == 1 ? v : v;
    // binary search on [1, 2^(ceil(bits/n)+1))
    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(v)) + 1;
    Int hi = Int(1) << (bits / n + 2);
    Int lo = 1;
    while (lo < hi - 1) {
        Int mid = (lo + hi) >> 1;
        if (pow_int(mid, n) <= v)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::pair<Rat, Rat> nth_root_bounds(const Rat& q, unsigned n) {
    if (q < 0) throw std::invalid_argument("nth_root_bounds: negative input");
    if (n == 0) throw std::invalid_argument("nth_root_bounds: zero index");
    if (q == 0) return {Rat(0), Rat(0)};
    unsigned shift = 70;
    for (;;) {
        // r <= (q * 2^(shift*n))^(1/n) < r+1  =>  r/2^shift <= q^(1/n) < (r+1)/2^shift
        Int scaled = floor_rat(q * Rat(Int(1) << (shift * n)));
        Int r = int_nth_root(scaled, n);
        if (r < (Int(1) << 67)) {
            // widen precision until the relative width 1/r drops below 2^-66
            unsigned rbits = r > 0 ? static_cast<unsigned>(boost::multiprecision::msb(r)) + 1 : 0;
            shift += 68 - rbits;
            continue;
        }
        Rat denom(Int(1) << shift);
        return {Rat(r) / denom, Rat(r + 1) / denom};
    }
}

std::string decimal_string(const Rat& q, int digits) {
    Int scale = pow_int(10, static_cast<unsigned>(digits));
    Rat scaled = q * Rat(scale);
    Int fl = floor_rat(scaled);
    Rat frac = scaled - Rat(fl);
    Int rounded = fl;
    Rat half(1, 2);
    if (frac > half || (frac == half && (fl % 2) != 0)) rounded = fl + 1;
    bool neg = rounded < 0;
    Int mag = neg ? Int(-rounded) : rounded;
    Int ip = mag / scale, fp = mag % scale;
    std::string frac_str = fp.str();
    if (static_cast<int>(frac_str.size()) < digits)
        frac_str = std::string(digits - frac_str.size(), '0') + frac_str;
    std::string out = (neg ? "-" : "") + ip.str();
    if (digits > 0) out += "." + frac_str;
    return out;
}

std::string rational_string(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

bool fits_int128(const Int& v) {
    static const Int lim = (Int(1) << 126);
    return v < lim && v > -lim;
}

int128 to_int128(const Int& v) {
    bool neg = v < 0;
    Int mag = neg ? Int(-v) : v;
    int128 r = 0;
    // export 32-bit chunks, most significant first
    unsigned bits = mag == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::msb(mag)) + 1;
    for (int off = static_cast<int>((bits + 31) / 32) - 1; off >= 0; --off) {
        Int chunk = (mag >> (32 * off)) & 0xffffffff;
        r = (r << 32) | static_cast<int128>(chunk.convert_to<std::uint32_t>());
    }
    return neg ? -r : r;
}

Int from_int128(int128 v) {
    bool neg = v < 0;
    unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                                : static_cast<unsigned __int128>(v);
    Int r = Int(static_cast<std::uint64_t>(mag >> 64));
    r <<= 64;
    r |= Int(static_cast<std::uint64_t>(mag));
    return neg ? Int(-r) : r;
}

long long to_ll(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("to_ll: value out of range");
    return v.convert_to<long long>();
}

}  // namespace relthue
