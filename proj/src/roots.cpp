#include "sumsetlab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "sumsetlab/errors.hpp"

namespace sumsetlab {

namespace {

/// N = core * outside^d with core d-th-power-free. Exact for N up to ~10^18:
/// trial division to max(10^4, cbrt(N)) leaves a remainder that is 1, prime,
/// a semiprime or a prime square, all of which are resolved below.
struct CoreSplit {
    Int core;
    Int outside;
};

CoreSplit factor_core(Int n, unsigned d) {
    CoreSplit out{1, 1};
    if (n == 0) return {0, 1};
    Int trial_limit = floor_nth_root(n, 3) + 1;
    if (trial_limit < 10000) trial_limit = 10000;
    if (trial_limit > 2000000)
        throw CapacityError("radical comparison: radicand too large for exact core extraction");
    for (Int p = 2; p <= trial_limit && p * p <= n; p == 2 ? p = 3 : p += 2) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (unsigned i = 0; i < e % d; ++i) out.core *= p;
        for (unsigned i = 0; i < e / d; ++i) out.outside *= p;
    }
    if (n > 1) {
        // Remainder has no factor <= cbrt(original): it is prime, a product of
        // two distinct primes, or a prime square.
        Int s = floor_nth_root(n, 2);
        if (s * s == n) {
            unsigned e = 2;
            for (unsigned i = 0; i < e % d; ++i) out.core *= s;
            for (unsigned i = 0; i < e / d; ++i) out.outside *= s;
        } else {
            out.core *= n;  // exponent 1 on every remaining prime
        }
    }
    return out;
}

/// Normalized irrational part: coeff * core^(1/d), core > 1 and d-free.
struct CoreTerm {
    Rational coeff;
    Int core;
};

struct NormalizedSum {
    Rational rational_part{0};
    std::vector<CoreTerm> irrational;  // distinct cores, nonzero coefficients
    unsigned index = 1;
};

/// Rewrites the sum over a common root index and groups radicands by their
/// power-free cores. Distinct cores are linearly independent over Q, so the
/// sum is zero iff everything cancels structurally.
NormalizedSum normalize(const std::vector<RadicalTerm>& terms) {
    unsigned common = 1;
    for (const auto& t : terms) {
        if (t.index == 0) throw ArgumentError("radical sum: zero root index");
        common = static_cast<unsigned>(std::lcm(common, t.index));
    }
    if (common > 24) throw ArgumentError("radical sum: common root index too large");

    NormalizedSum out;
    out.index = common;
    std::map<Int, Rational> groups;
    for (const auto& t : terms) {
        if (t.coeff == 0) continue;
        if (t.radicand < 0) throw ArgumentError("radical sum: negative radicand");
        if (t.radicand == 0) continue;
        // x^(1/d) = x^(common/d * 1/common)
        Rational powed = rational_pow(t.radicand, common / t.index);
        if (common == 1) {
            out.rational_part += t.coeff * powed;
            continue;
        }
        if (auto root = exact_nth_root(powed, common)) {
            out.rational_part += t.coeff * *root;
            continue;
        }
        // (p/q)^(1/D) = (p q^(D-1))^(1/D) / q
        Int p = rational_num(powed), q = rational_den(powed);
        Int radicand = p;
        for (unsigned i = 0; i + 1 < common; ++i) radicand *= q;
        Rational coeff = t.coeff / Rational(q);

        CoreSplit split = factor_core(radicand, common);
        coeff *= Rational(split.outside);
        if (split.core == 1) {
            out.rational_part += coeff;
        } else {
            groups[split.core] += coeff;
        }
    }
    for (auto& [core, coeff] : groups)
        if (coeff != 0) out.irrational.push_back({coeff, core});
    return out;
}

RationalInterval bracket_core_root(const Int& core, unsigned d, int refinements) {
    // Seed from double, then verify and bisect. The seed is only a hint; the
    // verified interval is exact.
    double est = std::pow(static_cast<double>(core), 1.0 / d);
    Rational lo, hi;
    if (std::isfinite(est) && est > 0) {
        lo = Rational(Int(static_cast<long long>(est))) - 1;
        hi = Rational(Int(static_cast<long long>(est))) + 2;
    } else {
        lo = 0;
        hi = Rational(core) + 1;
    }
    if (lo < 0) lo = 0;
    Rational target(core);
    while (rational_pow(lo, d) > target) lo -= 1;
    while (rational_pow(hi, d) < target) hi += hi > 0 ? hi : Rational(1);
    for (int i = 0; i < refinements; ++i) {
        Rational mid = (lo + hi) / 2;
        if (rational_pow(mid, d) <= target)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

RationalInterval scale_interval(const RationalInterval& iv, const Rational& c) {
    if (c >= 0) return {iv.lo * c, iv.hi * c};
    return {iv.hi * c, iv.lo * c};
}

}  // namespace

Int floor_nth_root(const Int& n, unsigned d) {
    if (n < 0) throw ArgumentError("floor_nth_root: negative input");
    if (d == 0) throw ArgumentError("floor_nth_root: zero index");
    if (n == 0 || n == 1 || d == 1) return n;
    // Newton iteration on integers, then clamp.
    Int x = Int(1) << (static_cast<unsigned>(boost::multiprecision::msb(n)) / d + 1);
    for (;;) {
        Int xp = x;
        for (unsigned i = 1; i < d - 1; ++i) xp *= x;  // x^(d-1)
        if (xp == 0) {
            x = 1;
            break;
        }
        Int next = ((d - 1) * x + n / xp) / d;
        if (next >= x) break;
        x = next;
    }
    while (true) {
        Int p = 1;
        for (unsigned i = 0; i < d; ++i) p *= x;
        if (p <= n) break;
        --x;
    }
    while (true) {
        Int p = 1;
        for (unsigned i = 0; i < d; ++i) p *= (x + 1);
        if (p > n) break;
        ++x;
    }
    return x;
}

std::optional<Rational> exact_nth_root(const Rational& x, unsigned d) {
    if (x < 0) return std::nullopt;
    Int p = rational_num(x), q = rational_den(x);
    Int rp = floor_nth_root(p, d);
    Int rq = floor_nth_root(q, d);
    Int pp = 1, qq = 1;
    for (unsigned i = 0; i < d; ++i) {
        pp *= rp;
        qq *= rq;
    }
    if (pp == p && qq == q) return Rational(rp, rq);
    return std::nullopt;
}

RationalInterval bracket_nth_root(const Rational& x, unsigned d, const Rational& max_width) {
    if (x < 0) throw ArgumentError("bracket_nth_root: negative radicand");
    if (auto exact = exact_nth_root(x, d)) return {*exact, *exact};
    std::vector<RadicalTerm> terms{{1, x, d}};
    return bracket_radical_sum(terms, max_width);
}

int sign_of_radical_sum(const std::vector<RadicalTerm>& terms) {
    NormalizedSum s = normalize(terms);
    if (s.irrational.empty()) {
        if (s.rational_part > 0) return 1;
        if (s.rational_part < 0) return -1;
        return 0;
    }
    // Nonzero by linear independence of distinct power-free roots; bisect
    // until the enclosure excludes zero.
    for (int refinements = 8;; refinements += 16) {
        Rational lo = s.rational_part, hi = s.rational_part;
        for (const auto& term : s.irrational) {
            RationalInterval iv = scale_interval(bracket_core_root(term.core, s.index, refinements), term.coeff);
            lo += iv.lo;
            hi += iv.hi;
        }
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        if (refinements > 4096)
            throw CapacityError("radical sum sign: enclosure did not separate (unexpected)");
    }
}

RationalInterval bracket_radical_sum(const std::vector<RadicalTerm>& terms, const Rational& max_width) {
    if (max_width <= 0) throw ArgumentError("bracket_radical_sum: non-positive width");
    NormalizedSum s = normalize(terms);
    if (s.irrational.empty()) return {s.rational_part, s.rational_part};
    for (int refinements = 16;; refinements += 16) {
        Rational lo = s.rational_part, hi = s.rational_part;
        for (const auto& term : s.irrational) {
            RationalInterval iv = scale_interval(bracket_core_root(term.core, s.index, refinements), term.coeff);
            lo += iv.lo;
            hi += iv.hi;
        }
        if (hi - lo <= max_width) return {lo, hi};
        if (refinements > 8192) throw CapacityError("bracket_radical_sum: cannot reach requested width");
    }
}

int compare_root_vs_root_sum(const Rational& u, const Rational& v, const Rational& q, const Rational& w,
                             unsigned d) {
    std::vector<RadicalTerm> terms{{1, u, d}, {-1, v, d}, {-q, w, d}};
    return sign_of_radical_sum(terms);
}

}  // namespace sumsetlab
