#include "relthue/binary_form.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>

namespace relthue {

namespace {

// Polynomials below are dense coefficient vectors in ascending powers.
using Poly = std::vector<Int>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Poly& p) {
    Poly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(Int(i) * p[i]);
    return d;
}

Int content(const Poly& p) {
    Int g = 0;
    for (const Int& c : p) g = boost::multiprecision::gcd(g, c);
    return g == 0 ? Int(1) : g;
}

Poly primitive_part(Poly p) {
    Int g = content(p);
    if (g > 1)
        for (Int& c : p) c /= g;
    return p;
}

// Pseudo-remainder of a by b scaled by a positive multiplier, so the sign
// structure of the Sturm sequence is preserved. Each elimination step
// multiplies by lc once; an odd number of steps with lc < 0 is undone.
Poly pseudo_rem_pos(Poly a, const Poly& b) {
    const Int& lc = b.back();
    int steps = 0;
    while (deg(a) >= deg(b) && !a.empty()) {
        Int q = a.back();
        int shift = deg(a) - deg(b);
        for (size_t i = 0; i < a.size(); ++i) a[i] *= lc;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
        trim(a);
        ++steps;
    }
    if (lc < 0 && (steps % 2 != 0))
        for (Int& c : a) c = -c;
    return a;
}

std::vector<Poly> sturm_chain(const Poly& f) {
    std::vector<Poly> chain;
    chain.push_back(primitive_part(f));
    Poly d = derivative(f);
    trim(d);
    if (d.empty()) return chain;
    chain.push_back(primitive_part(d));
    for (;;) {
        Poly r = pseudo_rem_pos(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (Int& c : r) c = -c;
        chain.push_back(primitive_part(r));
        if (deg(chain.back()) == 0) break;
    }
    return chain;
}

int sign_of(const Int& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sign of p at rational x = num/den (den > 0), via homogeneous evaluation.
int sign_at(const Poly& p, const Int& num, const Int& den) {
    Int acc = 0, dpow = 1;
    // sum_{i} p[i] num^i den^(d-i), Horner from the top.
    for (size_t i = p.size(); i-- > 0;) {
        acc = acc * num + p[i] * dpow;
        dpow *= den;
    }
    (void)dpow;
    return sign_of(acc);
}

int sign_at(const Poly& p, const Rat& x) { return sign_at(p, rat_num(x), rat_den(x)); }

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int variations_at(const std::vector<Poly>& chain, const Rat& x) {
    std::vector<int> signs;
    for (const Poly& p : chain) signs.push_back(sign_at(p, x));
    return variations(signs);
}

int variations_at_inf(const std::vector<Poly>& chain, bool positive) {
    std::vector<int> signs;
    for (const Poly& p : chain) {
        int s = sign_of(p.back());
        if (!positive && deg(p) % 2 != 0) s = -s;
        signs.push_back(s);
    }
    return variations(signs);
}

Poly ascending_from_desc(const std::vector<Int>& desc) {
    Poly p(desc.rbegin(), desc.rend());
    trim(p);
    return p;
}

Rat eval_rat(const Poly& p, const Rat& x) {
    Rat acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + Rat(p[i]);
    return acc;
}

// Cauchy bound: all roots have |alpha| < 1 + max |c_i| / |lc|.
Int cauchy_bound(const Poly& p) {
    Int m = 0;
    for (size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, Int(boost::multiprecision::abs(p[i])));
    Int lc = boost::multiprecision::abs(p.back());
    return 1 + m / lc + 1;
}

// Midpoint of (a,b), nudged off any root of p.
Rat safe_midpoint(const Poly& p, const Rat& a, const Rat& b) {
    Rat mid = (a + b) / 2;
    Rat step = (b - a) / 4;
    while (sign_at(p, mid) == 0) {
        mid += step;
        step /= 2;
    }
    return mid;
}

struct Isolation {
    std::vector<RootInterval> intervals;
};

Isolation isolate_all(const Poly& f) {
    std::vector<Poly> chain = sturm_chain(f);
    Int bound = cauchy_bound(f);
    Rat lo(-bound), hi(bound);
    struct Seg {
        Rat a, b;
        int va, vb;
    };
    std::vector<Seg> work{{lo, hi, variations_at(chain, lo), variations_at(chain, hi)}};
    std::vector<RootInterval> out;
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        int count = s.va - s.vb;
        if (count <= 0) continue;
        if (count == 1) {
            out.push_back({s.a, s.b});
            continue;
        }
        Rat mid = safe_midpoint(f, s.a, s.b);
        int vm = variations_at(chain, mid);
        work.push_back({s.a, mid, s.va, vm});
        work.push_back({mid, s.b, vm, s.vb});
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return {out};
}

void refine_to(const Poly& f, RootInterval& iv, const Rat& width) {
    int slo = sign_at(f, iv.lo);
    assert(slo != 0 && slo * sign_at(f, iv.hi) < 0);
    while (iv.hi - iv.lo > width) {
        Rat mid = safe_midpoint(f, iv.lo, iv.hi);
        if (sign_at(f, mid) == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
}

std::optional<Int> integer_in(const Rat& lo, const Rat& hi) {
    Int c = ceil_rat(lo);
    if (Rat(c) <= hi) return c;
    return std::nullopt;
}

// Interval coefficient arithmetic for prod_{j in S} (x - [lo_j, hi_j]).
struct IvPoly {
    std::vector<std::pair<Rat, Rat>> c;  // ascending, [lo, hi] per coefficient
};

IvPoly multiply_root(const IvPoly& g, const Rat& rlo, const Rat& rhi) {
    IvPoly out;
    out.c.assign(g.c.size() + 1, {Rat(0), Rat(0)});
    for (size_t i = 0; i < g.c.size(); ++i) {
        // x * g contributes to degree i+1
        out.c[i + 1].first += g.c[i].first;
        out.c[i + 1].second += g.c[i].second;
        // -root * g contributes to degree i (root interval [rlo, rhi])
        Rat a = -rhi * g.c[i].first, b = -rhi * g.c[i].second;
        Rat cta = -rlo * g.c[i].first, ctb = -rlo * g.c[i].second;
        Rat lo = std::min(std::min(a, b), std::min(cta, ctb));
        Rat hi = std::max(std::max(a, b), std::max(cta, ctb));
        out.c[i].first += lo;
        out.c[i].second += hi;
    }
    return out;
}

bool divide_exact(const Poly& f, const Poly& g, Poly* quotient_out) {
    // g monic
    Poly r = f, q(f.size(), Int(0));
    while (deg(r) >= deg(g) && !r.empty()) {
        int shift = deg(r) - deg(g);
        Int c = r.back();
        q[static_cast<size_t>(shift)] = c;
        for (size_t i = 0; i < g.size(); ++i) r[i + shift] -= c * g[i];
        trim(r);
    }
    if (!r.empty()) return false;
    trim(q);
    if (quotient_out) *quotient_out = q;
    return true;
}

// Factor search over subsets of the (all-real) isolated roots: a monic
// integer factor of a squarefree all-real f is a product of a subset of the
// linear factors, so its coefficients must show up as integers inside the
// interval products. Certified either way: an interval excluding all
// integers rules the subset out, and candidates are confirmed by exact
// division.
enum class SubsetScan { reducible, irreducible, needs_refinement };

SubsetScan scan_subsets(const Poly& f, const std::vector<RootInterval>& roots) {
    int n = deg(f);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int pc = __builtin_popcount(mask);
        if (pc < 2 || pc > n / 2) continue;  // degree-1 factors handled separately
        IvPoly g;
        g.c = {{Rat(1), Rat(1)}};
        for (int j = 0; j < n; ++j)
            if (mask & (1u << j)) g = multiply_root(g, roots[static_cast<size_t>(j)].lo,
                                                    roots[static_cast<size_t>(j)].hi);
        Poly cand(g.c.size());
        bool possible = true;
        for (size_t i = 0; i + 1 < g.c.size() && possible; ++i) {
            Int lo = ceil_rat(g.c[i].first), hi = floor_rat(g.c[i].second);
            if (lo > hi) {
                possible = false;
            } else if (lo < hi) {
                return SubsetScan::needs_refinement;
            } else {
                cand[i] = lo;
            }
        }
        if (!possible) continue;
        cand.back() = 1;
        if (divide_exact(f, cand, nullptr)) return SubsetScan::reducible;
    }
    return SubsetScan::irreducible;
}

bool irreducible_all_real(const Poly& f, std::vector<RootInterval> roots) {
    // degree-1 factors: a rational root of a monic integer poly is an integer
    // and lies inside one of the isolated intervals
    for (const RootInterval& iv : roots) {
        if (auto t = integer_in(iv.lo, iv.hi)) {
            Int val = 0;
            for (size_t i = f.size(); i-- > 0;) val = val * *t + f[i];
            if (val == 0) return false;
        }
    }
    int n = deg(f);
    if (n < 4) return true;  // no room for factors of degree >= 2 on both sides
    for (int round = 0; round < 8; ++round) {
        switch (scan_subsets(f, roots)) {
            case SubsetScan::reducible: return false;
            case SubsetScan::irreducible: return true;
            case SubsetScan::needs_refinement: break;
        }
        for (RootInterval& iv : roots) refine_to(f, iv, (iv.hi - iv.lo) / 1000000);
    }
    throw solver_error(errc::degree_unsupported, "root refinement failed to separate factors");
}

std::vector<Int> divisors_of(Int v) {
    v = boost::multiprecision::abs(v);
    std::map<Int, int> fac;
    for (Int p = 2; p * p <= v; ++p)
        while (v % p == 0) {
            ++fac[p];
            v /= p;
        }
    if (v > 1) ++fac[v];
    std::vector<Int> divs{1};
    for (auto& [p, e] : fac) {
        size_t sz = divs.size();
        Int pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

// Kronecker-style factor search for polynomials that are not all-real:
// interpolate candidate degree-d factors through divisor tuples of f at
// small integer points, pruning with integrality of divided differences.
bool kronecker_reducible(const Poly& f) {
    int n = deg(f);
    std::vector<Int> points;
    std::vector<Int> values;
    for (Int t = 0; static_cast<int>(points.size()) < n / 2 + 1; t = t > 0 ? Int(-t) : Int(1 - t)) {
        Int val = 0;
        for (size_t i = f.size(); i-- > 0;) val = val * t + f[i];
        if (val == 0) return true;  // integer root
        points.push_back(t);
        values.push_back(val);
    }
    for (int d = 2; d <= n / 2; ++d) {
        std::vector<std::vector<Int>> choices;
        for (int i = 0; i <= d; ++i) {
            std::vector<Int> c;
            for (const Int& dv : divisors_of(values[static_cast<size_t>(i)])) {
                c.push_back(dv);
                c.push_back(-dv);
            }
            choices.push_back(std::move(c));
        }
        // DFS over value tuples, maintaining Newton divided differences.
        std::vector<std::vector<Rat>> dd(static_cast<size_t>(d) + 1);
        std::vector<size_t> idx(static_cast<size_t>(d) + 1, 0);
        int level = 0;
        while (level >= 0) {
            size_t li = static_cast<size_t>(level);
            if (idx[li] >= choices[li].size()) {
                idx[li] = 0;
                --level;
                if (level >= 0) ++idx[static_cast<size_t>(level)];
                continue;
            }
            Rat v(choices[li][idx[li]]);
            dd[li].assign(li + 1, Rat(0));
            dd[li][0] = v;
            bool ok = true;
            for (size_t j = 1; j <= li && ok; ++j) {
                Rat num = dd[li][j - 1] - dd[li - 1][j - 1];
                dd[li][j] = num / Rat(points[li] - points[li - j]);
                if (!is_integer(dd[li][j])) ok = false;
            }
            if (!ok) {
                ++idx[li];
                continue;
            }
            if (level < d) {
                ++level;
                continue;
            }
            // full tuple; leading divided difference must be 1 for a monic factor
            if (dd[li][li] == 1) {
                // expand the Newton form into plain coefficients
                std::vector<Rat> g{Rat(0)};
                for (size_t j = li + 1; j-- > 0;) {
                    // g = g * (x - points[j]) + dd[j][j]
                    std::vector<Rat> ng(g.size() + 1, Rat(0));
                    for (size_t i = 0; i < g.size(); ++i) {
                        ng[i + 1] += g[i];
                        ng[i] -= Rat(points[j]) * g[i];
                    }
                    while (ng.size() > 1 && ng.back() == 0) ng.pop_back();
                    ng[0] += dd[j][j];
                    g = std::move(ng);
                }
                bool integral = true;
                Poly gi;
                for (const Rat& c : g) {
                    if (!is_integer(c)) {
                        integral = false;
                        break;
                    }
                    gi.push_back(rat_num(c));
                }
                trim(gi);
                if (integral && deg(gi) == d && gi.back() == 1 && divide_exact(f, gi, nullptr))
                    return true;
            }
            ++idx[li];
        }
    }
    return false;
}

}  // namespace

int count_real_roots(const std::vector<Int>& poly_desc) {
    Poly f = ascending_from_desc(poly_desc);
    if (deg(f) < 1) return 0;
    std::vector<Poly> chain = sturm_chain(f);
    return variations_at_inf(chain, false) - variations_at_inf(chain, true);
}

BinaryForm parse_form(const std::vector<Int>& coeffs) {
    if (coeffs.size() < 4)
        throw solver_error(errc::degree_too_small, "need degree >= 3 (at least 4 coefficients)");
    if (coeffs.front() != 1)
        throw solver_error(errc::not_monic, "leading coefficient must be 1");
    int n = static_cast<int>(coeffs.size()) - 1;
    Poly f = ascending_from_desc(coeffs);
    if (count_real_roots(coeffs) != n)
        throw solver_error(errc::not_all_real_distinct,
                           "f(x,1) must have n distinct real roots");
    BinaryForm form(n, coeffs);
    RootSystem rs = isolate_roots(form, Rat(cauchy_bound(f)) / pow_int(10, 12));
    for (const RootInterval& iv : rs.intervals()) {
        if (auto t = integer_in(iv.lo, iv.hi)) {
            if (evaluate_int(form, *t, 1) == 0)
                throw solver_error(errc::reducible, "rational root " + t->str());
        }
    }
    std::vector<RootInterval> ivs(rs.intervals().begin(), rs.intervals().end());
    if (!irreducible_all_real(f, ivs))
        throw solver_error(errc::reducible, "form factors over the rationals");
    return form;
}

Int evaluate_int(const BinaryForm& f, const Int& x, const Int& y) {
    Int acc = f.coeff(0), yp = 1;
    for (int i = 1; i <= f.degree(); ++i) {
        yp *= y;
        acc = acc * x + f.coeff(i) * yp;
    }
    return acc;
}

Rat evaluate_poly_rat(const BinaryForm& f, const Rat& x) {
    Rat acc(f.coeff(0));
    for (int i = 1; i <= f.degree(); ++i) acc = acc * x + Rat(f.coeff(i));
    return acc;
}

RootSystem isolate_roots(const BinaryForm& form, const Rat& max_width) {
    if (max_width <= 0) throw solver_error(errc::out_of_range, "max_width must be positive");
    Poly f = ascending_from_desc(form.coeffs());
    Isolation iso = isolate_all(f);
    for (RootInterval& iv : iso.intervals) refine_to(f, iv, max_width);
    return RootSystem(std::move(iso.intervals), max_width);
}

std::pair<Rat, Rat> gap_constants(const RootSystem& roots) {
    const auto& iv = roots.intervals();
    size_t n = iv.size();
    auto gap_lower = [&](size_t i, size_t j) {  // i < j
        return iv[j].lo - iv[i].hi;
    };
    Rat a_lower;
    bool first = true;
    for (size_t i = 0; i + 1 < n; ++i) {
        Rat g = gap_lower(i, i + 1);
        if (g <= 0)
            throw solver_error(errc::intervals_too_wide,
                               "certified pairwise root distance is not positive");
        if (first || g < a_lower) {
            a_lower = g;
            first = false;
        }
    }
    Rat b_lower;
    first = true;
    for (size_t i = 0; i < n; ++i) {
        Rat prod = 1;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            prod *= j < i ? gap_lower(j, i) : gap_lower(i, j);
        }
        if (first || prod < b_lower) {
            b_lower = prod;
            first = false;
        }
    }
    return {a_lower, b_lower};
}

Rat max_root_upper(const RootSystem& roots) {
    const auto& iv = roots.intervals();
    Rat lo_mag(boost::multiprecision::abs(iv.front().lo));
    Rat hi_mag(boost::multiprecision::abs(iv.back().hi));
    return std::max(lo_mag, hi_mag);
}

bool check_irreducible(const std::vector<Int>& coeffs) {
    if (coeffs.size() < 4)
        throw solver_error(errc::degree_too_small, "need degree >= 3 (at least 4 coefficients)");
    if (coeffs.front() != 1)
        throw solver_error(errc::not_monic, "leading coefficient must be 1");
    int n = static_cast<int>(coeffs.size()) - 1;
    if (n > 12) throw solver_error(errc::degree_unsupported, "degree above supported limit 12");
    Poly f = ascending_from_desc(coeffs);
    // a repeated factor already implies reducibility
    std::vector<Poly> chain = sturm_chain(f);
    if (deg(chain.back()) >= 1) return false;
    int real_roots = variations_at_inf(chain, false) - variations_at_inf(chain, true);
    Isolation iso = isolate_all(f);
    Rat w = Rat(cauchy_bound(f)) / pow_int(10, 12);
    for (RootInterval& iv : iso.intervals) refine_to(f, iv, w);
    auto eval_at = [&](const Int& t) {
        Int val = 0;
        for (size_t i = f.size(); i-- > 0;) val = val * t + f[i];
        return val;
    };
    if (real_roots == n) return irreducible_all_real(f, iso.intervals);
    // complex roots present: integer roots first, then Kronecker interpolation
    for (const RootInterval& iv : iso.intervals) {
        if (auto t = integer_in(iv.lo, iv.hi))
            if (eval_at(*t) == 0) return false;
    }
    return !kronecker_reducible(f);
}

bool check_irreducible(const BinaryForm& form) { return check_irreducible(form.coeffs()); }

}  // namespace relthue
